// spincurv — a small arithmetic expression grammar for scenario files.
// Expressions are parsed once into an AST and evaluated in jet arithmetic,
// so scenario-file metrics get exact derivatives like catalog ones.

#pragma once

#include <array>
#include <memory>
#include <string>

#include "spincurv/chart.hpp"

namespace spincurv {

// Grammar (locale-independent, '.' decimal point):
//   expr    := term (('+' | '-') term)*
//   term    := factor (('*' | '/') factor)*
//   factor  := ('+' | '-') factor | power
//   power   := primary ('^' factor)?
//   primary := number | constant | coordinate | func '(' expr (',' expr)? ')'
//            | '(' expr ')'
//   func    := exp | log | sin | cos | tan | sqrt | pow
//   constant:= pi | e
// Coordinates are the chart's four axis names. Throws ConfigError with
// position information on malformed input or unknown identifiers.
class Expression {
  public:
    static Expression parse(const std::string& text,
                            const std::array<std::string, kDim>& coords);

    Jet evaluate(const std::array<Jet, kDim>& x) const;

    // Adapter to the engine-wide scalar-function type.
    ScalarFn function() const;

    struct Node;  // public so the parser/evaluator in expr.cpp can see it

  private:
    std::shared_ptr<const Node> root_;
};

// Convenience: parse and wrap in one step.
ScalarFn compile_expression(const std::string& text,
                            const std::array<std::string, kDim>& coords);

}  // namespace spincurv
