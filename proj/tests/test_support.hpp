#pragma once

#include <cstdint>
#include <random>
#include <string>
#include <vector>

#include "lextrop/hlf.hpp"
#include "lextrop/kpolynomial.hpp"

namespace lextrop::testsupport {

// engine-modulo draws keep the sequences platform-independent
inline long draw(std::mt19937_64& rng, long lo, long hi) {
    return lo + static_cast<long>(rng() % static_cast<unsigned long long>(hi - lo + 1));
}

inline Rational draw_rational(std::mt19937_64& rng, long lo, long hi, long max_den = 1) {
    Rational q(draw(rng, lo, hi), draw(rng, 1, max_den));
    q.canonicalize();
    return q;
}

inline FieldTower make_tower(int n, bool prime_base = false) {
    std::vector<std::string> names;
    for (int s = 1; s <= n; ++s)
        names.push_back("t" + std::to_string(s));
    return FieldTower(prime_base ? BaseField::prime(7) : BaseField::rationals(), names);
}

inline FieldElement random_element(std::mt19937_64& rng, const FieldTower& tower,
                                   long max_terms = 4, long exp_range = 3) {
    FieldElement f = FieldElement::zero(tower);
    long terms = draw(rng, 0, max_terms);
    for (long k = 0; k < terms; ++k) {
        std::vector<Rational> exps;
        for (int s = 0; s < tower.height(); ++s)
            exps.push_back(Rational(draw(rng, -exp_range, exp_range)));
        Rational c(draw(rng, -5, 5));
        if (c == 0)
            c = 1;
        f = f + FieldElement::monomial(tower, c, exps);
    }
    return f;
}

inline FieldElement random_nonzero_element(std::mt19937_64& rng, const FieldTower& tower,
                                           long max_terms = 4, long exp_range = 3) {
    while (true) {
        FieldElement f = random_element(rng, tower, max_terms, exp_range);
        if (!f.is_zero())
            return f;
    }
}

inline std::vector<std::string> make_vars(int m) {
    static const std::vector<std::string> pool = {"x", "y", "z"};
    return std::vector<std::string>(pool.begin(), pool.begin() + m);
}

inline KPolynomial random_kpoly(std::mt19937_64& rng, const FieldTower& tower, int m,
                                long max_support = 4, long exp_range = 2,
                                long coeff_terms = 2) {
    auto vars = make_vars(m);
    KPolynomial f(tower, vars);
    long support = draw(rng, 1, max_support);
    for (long k = 0; k < support; ++k) {
        std::vector<long> d;
        for (int i = 0; i < m; ++i)
            d.push_back(draw(rng, -exp_range, exp_range));
        FieldElement c = random_nonzero_element(rng, tower, coeff_terms, 2);
        f = f + KPolynomial::monomial(tower, vars, c, d);
    }
    return f;
}

inline KPolynomial random_nonmonomial(std::mt19937_64& rng, const FieldTower& tower, int m,
                                      long max_support = 4, long exp_range = 2,
                                      long coeff_terms = 2) {
    while (true) {
        KPolynomial f = random_kpoly(rng, tower, m, max_support, exp_range, coeff_terms);
        if (f.term_count() >= 2)
            return f;
    }
}

}  // namespace lextrop::testsupport
