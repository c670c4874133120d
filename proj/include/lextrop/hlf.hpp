#pragma once

#include <map>
#include <string>
#include <utility>
#include <vector>

#include "lextrop/rational.hpp"
#include "lextrop/valuegroup.hpp"

namespace lextrop {

// Coefficient field at the bottom of a tower: exact rationals or a prime
// field GF(p). GF(p) values are kept as integers in [0, p).
class BaseField {
public:
    enum class Kind { rationals, prime };

    BaseField() : kind_(Kind::rationals), p_(0) {}
    static BaseField rationals() { return BaseField(); }
    static BaseField prime(long p);

    Kind kind() const { return kind_; }
    long characteristic() const { return kind_ == Kind::prime ? p_ : 0; }
    bool operator==(const BaseField& other) const = default;

    // Canonical representative of a rational in this field; throws when a
    // denominator vanishes mod p.
    Rational normalize(const Rational& value) const;
    Rational add(const Rational& a, const Rational& b) const { return normalize(a + b); }
    Rational mul(const Rational& a, const Rational& b) const { return normalize(a * b); }
    Rational div(const Rational& a, const Rational& b) const;
    Rational neg(const Rational& a) const { return normalize(-a); }

    std::string str() const;  // "QQ" or "GF(p)"

private:
    Kind kind_;
    long p_;
};

// An n-dimensional local field tower K0((t1))...((tn)) together with the
// ramified cover it is currently presented in: exponents of t_s are tracked
// in units of 1/ramification[s-1], so fractional uniformizer powers stay
// exact. Heights are 1-based: stage s refers to t_s, and t_n is outermost.
class FieldTower {
public:
    FieldTower(BaseField base, std::vector<std::string> uniformizer_names);

    int height() const { return static_cast<int>(names_.size()); }
    const BaseField& base() const { return base_; }
    const std::vector<std::string>& uniformizer_names() const { return names_; }
    const std::string& uniformizer_name(int stage) const;
    const std::vector<long>& ramification() const { return ram_; }

    // Same underlying field (base and uniformizers), possibly presented in
    // different ramified covers.
    bool same_field(const FieldTower& other) const;
    bool operator==(const FieldTower& other) const;

    FieldTower with_ramification(std::vector<long> ram) const;
    // Residue tower: drop stage s entirely.
    FieldTower residue(int stage) const;

    std::string str() const;  // "QQ((t1))((t2))"

private:
    BaseField base_;
    std::vector<std::string> names_;
    std::vector<long> ram_;
};

// An element of the tower: a finitely supported Laurent polynomial in the
// uniformizers. Immutable after construction; all operations are pure.
class FieldElement {
public:
    explicit FieldElement(FieldTower tower);  // zero
    static FieldElement zero(const FieldTower& tower) { return FieldElement(tower); }
    static FieldElement constant(const FieldTower& tower, const Rational& c);
    static FieldElement one(const FieldTower& tower) { return constant(tower, 1); }
    // c * t1^{e1} * ... * tn^{en}; fractional exponents ramify the tower.
    static FieldElement monomial(const FieldTower& tower, const Rational& coeff,
                                 const std::vector<Rational>& exponents);

    const FieldTower& tower() const { return tower_; }
    bool is_zero() const { return terms_.empty(); }
    std::size_t term_count() const { return terms_.size(); }
    bool is_monomial_term() const { return terms_.size() == 1; }

    // Support in original normalization: (exponent vector in Q^n, coefficient).
    std::vector<std::pair<std::vector<Rational>, Rational>> terms() const;

    FieldElement operator+(const FieldElement& other) const;
    FieldElement operator-() const;
    FieldElement operator-(const FieldElement& other) const;
    FieldElement operator*(const FieldElement& other) const;
    FieldElement pow(long k) const;  // k < 0 allowed for single-term elements
    bool operator==(const FieldElement& other) const;
    bool operator!=(const FieldElement& other) const { return !(*this == other); }

    // Lex-minimal exponent vector of the support (in original normalization);
    // infinity for zero. Valid because distinct uniformizer monomials cannot
    // cancel.
    LexValue valuation() const;

    // Minimal t_stage-exponent over the support. Throws on zero.
    Rational t_order(int stage) const;

    // Keep the t_stage-order-zero part and delete that coordinate; requires
    // every term to have nonnegative t_stage-exponent.
    FieldElement reduce_once(int stage) const;

    // Multiply by prod t_s^{e_s}; fractional e_s replaces the tower by a
    // ramified cover. Valuations stay reported in original normalization.
    FieldElement uniformizer_shift(const std::vector<Rational>& e) const;

    std::string str() const;

private:
    friend std::pair<FieldElement, FieldElement> align(const FieldElement& a,
                                                       const FieldElement& b);
    void insert_term(std::vector<long> key, const Rational& coeff);
    FieldElement rescaled(const std::vector<long>& new_ram) const;

    FieldTower tower_;
    // exponent vectors in ramified units -> nonzero coefficient
    std::map<std::vector<long>, Rational> terms_;
};

// Valuation plus one reduction step: the residue-tower unit part of
// f / t^{valuation(f)}. The unit part has valuation zero in its own tower.
struct ResidueData {
    LexValue value;
    FieldElement unit_part;
};

ResidueData residue_data(const FieldElement& f);

}  // namespace lextrop
