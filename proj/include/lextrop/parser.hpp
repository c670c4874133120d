#pragma once

#include <stdexcept>
#include <string>
#include <vector>

#include "lextrop/kpolynomial.hpp"

namespace lextrop {

class ParseError : public std::runtime_error {
public:
    ParseError(std::string message, std::size_t line, std::size_t column)
        : std::runtime_error("parse error at " + std::to_string(line) + ":" +
                             std::to_string(column) + ": " + message),
          line_(line), column_(column) {}

    std::size_t line() const { return line_; }
    std::size_t column() const { return column_; }

private:
    std::size_t line_;
    std::size_t column_;
};

// "QQ((t1))((t2))" or "GF(7)((t))".
FieldTower parse_tower(const std::string& text);

// Torus variables of a polynomial text that are not uniformizers, restricted
// to the recognized default names (x, y, z, x1..x9) in canonical order.
// Unknown identifiers are parse errors.
std::vector<std::string> infer_variables(const std::string& text, const FieldTower& tower);

// Signed sums of '*'-separated factors with '^' powers; coefficients are
// rationals, uniformizer exponents may be rational (ramifying the tower),
// torus exponents must be integers.
KPolynomial parse_polynomial(const std::string& text, const FieldTower& tower,
                             const std::vector<std::string>& vars);

// "1,0;1/2,0": per-variable vectors separated by ';', coordinates separated
// by ',' with coordinate 1 first.
WeightMatrix parse_weight(const std::string& text, int m, int n);

}  // namespace lextrop
