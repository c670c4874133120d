#pragma once

#include <compare>
#include <cstddef>
#include <string>
#include <vector>

#include "lextrop/rational.hpp"

namespace lextrop {

// An element of the value group Q^n with the lexicographic order, augmented
// by a formal infinity (the valuation of zero).
//
// Ordering convention used by the whole library: the LAST coordinate is the
// most significant one. Coordinate s (1-based) is the order in the
// uniformizer t_s, and t_n is the outermost uniformizer of the field tower
// K0((t1))...((tn)), so comparison scans coordinate n down to coordinate 1.
// Infinity is the unique maximum and absorbs addition.
class LexValue {
public:
    explicit LexValue(std::vector<Rational> coords);
    static LexValue infinity(int dim);
    static LexValue zero(int dim);

    int dim() const { return dim_; }
    bool is_infinity() const { return infinite_; }

    // Coordinate s, 1-based (s = 1 is the innermost uniformizer). Finite only.
    const Rational& coord(int s) const;
    const std::vector<Rational>& coords() const;

    LexValue operator+(const LexValue& other) const;
    LexValue operator-() const;
    LexValue operator-(const LexValue& other) const;

    bool operator==(const LexValue& other) const;
    bool operator!=(const LexValue& other) const { return !(*this == other); }
    bool operator<(const LexValue& other) const;
    bool operator<=(const LexValue& other) const;
    bool operator>(const LexValue& other) const { return other < *this; }
    bool operator>=(const LexValue& other) const { return other <= *this; }

    // "(q1, ..., qn)" with exact rationals, or "inf". Used verbatim in CLI
    // and JSON output.
    std::string str() const;

private:
    LexValue(int dim, bool infinite) : dim_(dim), infinite_(infinite) {}
    void check_same_dim(const LexValue& other) const;

    int dim_;
    bool infinite_;
    std::vector<Rational> coords_;  // empty when infinite
};

// Three-way lexicographic comparison, coordinate n most significant.
std::strong_ordering lex_compare(const LexValue& a, const LexValue& b);

// Componentwise scaling; order-preserving for c > 0, order-reversing for c < 0.
LexValue scalar_mul(const Rational& c, const LexValue& a);

struct MinLexResult {
    LexValue value;
    std::vector<std::size_t> achievers;  // all indices attaining the minimum
};

// Lexicographic minimum of a nonempty list together with the full set of
// indices achieving it. Infinite entries achieve the minimum only when all
// entries are infinite.
MinLexResult min_lex(const std::vector<LexValue>& values);

}  // namespace lextrop
