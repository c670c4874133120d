#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "lextrop/hlf.hpp"
#include "lextrop/valuegroup.hpp"

namespace lextrop {

// A weight omega in Hom(M, Q^n): one finite LexValue-style vector per torus
// variable.
class WeightMatrix {
public:
    WeightMatrix(std::vector<LexValue> entries);
    static WeightMatrix zero(int m, int n);

    int m() const { return static_cast<int>(entries_.size()); }
    int n() const { return entries_.empty() ? 0 : entries_[0].dim(); }
    const LexValue& entry(std::size_t var) const { return entries_.at(var); }
    const std::vector<LexValue>& entries() const { return entries_; }
    WeightMatrix negated() const;
    std::string str() const;  // "1,0;1/2,0" coordinate 1 first

private:
    std::vector<LexValue> entries_;
};

// A finitely supported Laurent polynomial in torus variables x1..xm with
// FieldElement coefficients. Immutable; operations are pure.
class KPolynomial {
public:
    KPolynomial(FieldTower tower, std::vector<std::string> vars);  // zero
    static KPolynomial zero(const FieldTower& tower, const std::vector<std::string>& vars) {
        return KPolynomial(tower, vars);
    }
    static KPolynomial constant(const FieldTower& tower, const std::vector<std::string>& vars,
                                const FieldElement& c);
    static KPolynomial monomial(const FieldTower& tower, const std::vector<std::string>& vars,
                                const FieldElement& coeff, const std::vector<long>& exps);

    const FieldTower& tower() const { return tower_; }
    const std::vector<std::string>& vars() const { return vars_; }
    int var_count() const { return static_cast<int>(vars_.size()); }
    bool is_zero() const { return terms_.empty(); }
    std::size_t term_count() const { return terms_.size(); }

    std::vector<std::vector<long>> support() const;
    const FieldElement& coefficient(const std::vector<long>& d) const;
    const std::map<std::vector<long>, FieldElement>& terms() const { return terms_; }

    KPolynomial operator+(const KPolynomial& other) const;
    KPolynomial operator-() const;
    KPolynomial operator-(const KPolynomial& other) const;
    KPolynomial operator*(const KPolynomial& other) const;
    KPolynomial pow(long k) const;  // k < 0 only for monomials
    bool operator==(const KPolynomial& other) const;
    bool operator!=(const KPolynomial& other) const { return !(*this == other); }

    std::string str() const;

private:
    void insert_term(const std::vector<long>& d, const FieldElement& coeff);

    FieldTower tower_;
    std::vector<std::string> vars_;
    std::map<std::vector<long>, FieldElement> terms_;
};

// nu(a_d) + <omega, d>. The plus convention is used throughout: membership in
// the tropical hypersurface at omega is the tie condition of the piecewise
// linear minimum, and the degeneration tables come out in the same
// coordinates as the substitution x_i -> t^{omega_i} x_i.
LexValue weight_of_term(const KPolynomial& f, const std::vector<long>& d, const WeightMatrix& w);

// True iff f has exactly one support point (and is nonzero).
bool is_monomial(const KPolynomial& f);

// One degeneration stage: substitute x_i -> t_s^{w_i} x_i, divide by the
// minimal t_s-order, and reduce to the residue tower at stage s. Requires the
// tower height to equal s.
KPolynomial stage_initial(const KPolynomial& f, int stage, const std::vector<Rational>& w);

struct DegenerationChain {
    // stages[0] = f, stages[k] = result after degenerating stage n-k+1; the
    // last entry lives over the base field.
    std::vector<KPolynomial> stages;
    // t_s-power divided out at each stage (the recorded monomial normalization)
    std::vector<Rational> normalizations;
    const KPolynomial& final() const { return stages.back(); }
};

// Full initial form: the n-fold composition of stage_initial, stage n down
// to 1, with intermediate results retained.
DegenerationChain initial_form_chain(const KPolynomial& f, const WeightMatrix& w);
KPolynomial initial_form(const KPolynomial& f, const WeightMatrix& w);

// f_b(z): substitute x_i -> z^{b_i}. Requires d -> b.d injective on the
// support.
KPolynomial univariate_reduce(const KPolynomial& f, const std::vector<long>& b,
                              const std::string& var_name = "z");

// Deterministic generic direction: the first b (shells of increasing
// max-norm over nonnegative vectors, lexicographic within a shell) making
// d -> b.d injective on the support.
std::vector<long> generic_b(const KPolynomial& f);

// f == c * t^e * x^d * g for some monomial; the comparison degeneration
// tables need (initial forms are only defined up to such factors).
bool equal_up_to_monomial(const KPolynomial& f, const KPolynomial& g);

}  // namespace lextrop
