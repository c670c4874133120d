#pragma once

#include <gmpxx.h>
#include <stdexcept>
#include <string>
#include <vector>

namespace lextrop {

// All core arithmetic is exact; Rational is the only scalar type in the
// library. No floating point is used anywhere.
using Rational = mpq_class;

inline Rational rational_from_string(const std::string& text) {
    mpq_class q;
    if (mpq_set_str(q.get_mpq_t(), text.c_str(), 10) != 0)
        throw std::invalid_argument("malformed rational: '" + text + "'");
    if (q.get_den() == 0)
        throw std::invalid_argument("zero denominator in rational: '" + text + "'");
    q.canonicalize();
    return q;
}

inline std::string rational_to_string(const Rational& q) {
    return q.get_str();
}

inline bool is_integer(const Rational& q) {
    return q.get_den() == 1;
}

inline long to_long(const Rational& q) {
    if (!is_integer(q) || !q.get_num().fits_slong_p())
        throw std::invalid_argument("rational is not a representable integer: " + q.get_str());
    return q.get_num().get_si();
}

// Least common multiple of the denominators of a list of rationals.
inline mpz_class common_denominator(const std::vector<Rational>& values) {
    mpz_class l = 1;
    for (const auto& v : values) {
        mpz_class g;
        mpz_gcd(g.get_mpz_t(), l.get_mpz_t(), v.get_den().get_mpz_t());
        l = l / g * v.get_den();
    }
    return l;
}

}  // namespace lextrop
