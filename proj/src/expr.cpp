#include "spincurv/expr.hpp"

#include <cctype>
#include <charconv>
#include <cmath>
#include <utility>
#include <vector>

#include "spincurv/errors.hpp"

namespace spincurv {

struct Expression::Node {
    enum class Kind {
        Number,
        Coordinate,
        Add,
        Sub,
        Mul,
        Div,
        Neg,
        Pow,      // right child must be coordinate-free (constant exponent)
        Exp,
        Log,
        Sin,
        Cos,
        Tan,
        Sqrt,
    };
    Kind kind;
    double number = 0;  // Number: value; Coordinate: axis index
    int axis = 0;
    std::shared_ptr<const Node> a, b;
};

namespace {

using Node = Expression::Node;
using NodePtr = std::shared_ptr<const Node>;

NodePtr make_node(Node n) { return std::make_shared<const Node>(std::move(n)); }

class Parser {
  public:
    Parser(const std::string& text, const std::array<std::string, kDim>& coords)
        : text_(text), coords_(coords) {}

    NodePtr parse() {
        NodePtr e = expr();
        skip_ws();
        if (pos_ != text_.size())
            fail("unexpected trailing input");
        return e;
    }

  private:
    [[noreturn]] void fail(const std::string& what) const {
        throw ConfigError("expression parse error at position " +
                          std::to_string(pos_) + ": " + what + " in \"" +
                          text_ + "\"");
    }

    void skip_ws() {
        while (pos_ < text_.size() &&
               std::isspace(static_cast<unsigned char>(text_[pos_])))
            ++pos_;
    }

    bool consume(char c) {
        skip_ws();
        if (pos_ < text_.size() && text_[pos_] == c) {
            ++pos_;
            return true;
        }
        return false;
    }

    char peek() {
        skip_ws();
        return pos_ < text_.size() ? text_[pos_] : '\0';
    }

    NodePtr expr() {
        NodePtr left = term();
        for (;;) {
            if (consume('+'))
                left = make_node({Node::Kind::Add, 0, 0, left, term()});
            else if (consume('-'))
                left = make_node({Node::Kind::Sub, 0, 0, left, term()});
            else
                return left;
        }
    }

    NodePtr term() {
        NodePtr left = factor();
        for (;;) {
            if (consume('*'))
                left = make_node({Node::Kind::Mul, 0, 0, left, factor()});
            else if (consume('/'))
                left = make_node({Node::Kind::Div, 0, 0, left, factor()});
            else
                return left;
        }
    }

    NodePtr factor() {
        if (consume('-'))
            return make_node({Node::Kind::Neg, 0, 0, factor(), nullptr});
        if (consume('+')) return factor();
        return power();
    }

    NodePtr power() {
        NodePtr base = primary();
        if (consume('^')) {
            NodePtr e = factor();  // right-associative
            return make_node({Node::Kind::Pow, 0, 0, base, e});
        }
        return base;
    }

    NodePtr primary() {
        skip_ws();
        if (pos_ >= text_.size()) fail("unexpected end of input");
        char c = text_[pos_];
        if (std::isdigit(static_cast<unsigned char>(c)) || c == '.')
            return number();
        if (std::isalpha(static_cast<unsigned char>(c)) || c == '_')
            return identifier();
        if (consume('(')) {
            NodePtr e = expr();
            if (!consume(')')) fail("expected ')'");
            return e;
        }
        fail(std::string("unexpected character '") + c + "'");
    }

    NodePtr number() {
        double v = 0;
        const char* begin = text_.data() + pos_;
        const char* end = text_.data() + text_.size();
        auto [ptr, ec] = std::from_chars(begin, end, v);
        if (ec != std::errc{}) fail("malformed number");
        pos_ = static_cast<std::size_t>(ptr - text_.data());
        return make_node({Node::Kind::Number, v, 0, nullptr, nullptr});
    }

    NodePtr identifier() {
        std::size_t start = pos_;
        while (pos_ < text_.size() &&
               (std::isalnum(static_cast<unsigned char>(text_[pos_])) ||
                text_[pos_] == '_'))
            ++pos_;
        std::string name = text_.substr(start, pos_ - start);
        if (name == "pi")
            return make_node({Node::Kind::Number, M_PI, 0, nullptr, nullptr});
        if (name == "e")
            return make_node({Node::Kind::Number, M_E, 0, nullptr, nullptr});
        for (int i = 0; i < kDim; ++i)
            if (coords_[i] == name)
                return make_node({Node::Kind::Coordinate, 0, i, nullptr, nullptr});

        Node::Kind kind;
        if (name == "exp") kind = Node::Kind::Exp;
        else if (name == "log") kind = Node::Kind::Log;
        else if (name == "sin") kind = Node::Kind::Sin;
        else if (name == "cos") kind = Node::Kind::Cos;
        else if (name == "tan") kind = Node::Kind::Tan;
        else if (name == "sqrt") kind = Node::Kind::Sqrt;
        else if (name == "pow") {
            if (!consume('(')) fail("expected '(' after pow");
            NodePtr a = expr();
            if (!consume(',')) fail("pow requires two arguments");
            NodePtr b = expr();
            if (!consume(')')) fail("expected ')'");
            return make_node({Node::Kind::Pow, 0, 0, a, b});
        } else {
            pos_ = start;
            fail("unknown identifier \"" + name + "\"");
        }
        if (!consume('(')) fail("expected '(' after function name");
        NodePtr a = expr();
        if (!consume(')')) fail("expected ')'");
        return make_node({kind, 0, 0, a, nullptr});
    }

    const std::string& text_;
    const std::array<std::string, kDim>& coords_;
    std::size_t pos_ = 0;
};

bool coordinate_free(const NodePtr& n) {
    if (!n) return true;
    if (n->kind == Node::Kind::Coordinate) return false;
    return coordinate_free(n->a) && coordinate_free(n->b);
}

Jet eval_node(const Node& n, const std::array<Jet, kDim>& x) {
    using K = Node::Kind;
    switch (n.kind) {
        case K::Number: return Jet(x[0].order(), n.number);
        case K::Coordinate: return x[n.axis];
        case K::Add: return eval_node(*n.a, x) + eval_node(*n.b, x);
        case K::Sub: return eval_node(*n.a, x) - eval_node(*n.b, x);
        case K::Mul: return eval_node(*n.a, x) * eval_node(*n.b, x);
        case K::Div: return eval_node(*n.a, x) / eval_node(*n.b, x);
        case K::Neg: return -eval_node(*n.a, x);
        case K::Pow: {
            Jet base = eval_node(*n.a, x);
            if (coordinate_free(n.b)) {
                cplx p = eval_node(*n.b, x).value();
                return pow(base, p.real());
            }
            return exp(eval_node(*n.b, x) * log(base));
        }
        case K::Exp: return exp(eval_node(*n.a, x));
        case K::Log: return log(eval_node(*n.a, x));
        case K::Sin: return sin(eval_node(*n.a, x));
        case K::Cos: return cos(eval_node(*n.a, x));
        case K::Tan: return tan(eval_node(*n.a, x));
        case K::Sqrt: return sqrt(eval_node(*n.a, x));
    }
    throw UsageError("unreachable expression node kind");
}

}  // namespace

Expression Expression::parse(const std::string& text,
                             const std::array<std::string, kDim>& coords) {
    Expression e;
    e.root_ = Parser(text, coords).parse();
    return e;
}

Jet Expression::evaluate(const std::array<Jet, kDim>& x) const {
    return eval_node(*root_, x);
}

ScalarFn Expression::function() const {
    auto root = root_;
    return [root](const std::array<Jet, kDim>& x) {
        return eval_node(*root, x);
    };
}

ScalarFn compile_expression(const std::string& text,
                            const std::array<std::string, kDim>& coords) {
    return Expression::parse(text, coords).function();
}

}  // namespace spincurv
