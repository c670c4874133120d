#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "lextrop/hlf.hpp"
#include "test_support.hpp"

using namespace lextrop;
using namespace lextrop::testsupport;

namespace {

FieldElement mono(const FieldTower& t, long c, std::vector<long> e) {
    std::vector<Rational> exps(e.begin(), e.end());
    return FieldElement::monomial(t, Rational(c), exps);
}

LexValue lv(std::vector<long> v) {
    return LexValue(std::vector<Rational>(v.begin(), v.end()));
}

}  // namespace

TEST_CASE("valuation is the lex-min exponent of the support") {
    FieldTower t = make_tower(2);
    CHECK((mono(t, 1, {1, 0}) + mono(t, 1, {2, 0})).valuation() == lv({1, 0}));
    // coordinate 2 dominates: t2 has value (0,1), t1^5 has (5,0), and (5,0) is smaller
    CHECK((mono(t, 1, {0, 1}) + mono(t, 1, {5, 0})).valuation() == lv({5, 0}));
    CHECK(FieldElement::zero(t).valuation().is_infinity());
}

TEST_CASE("ring arithmetic is exact and normalized") {
    FieldTower t = make_tower(2);
    CHECK(mono(t, 1, {1, 0}) * mono(t, 1, {2, 0}) == mono(t, 1, {3, 0}));

    // cancellation produces a valuation jump (0,0) -> (0,1)
    FieldElement f = FieldElement::one(t) + mono(t, 1, {0, 1});
    FieldElement g = f + FieldElement::constant(t, -1);
    CHECK(g == mono(t, 1, {0, 1}));
    CHECK(g.valuation() == lv({0, 1}));

    FieldElement t1 = mono(t, 1, {1, 0}), t2 = mono(t, 1, {0, 1});
    CHECK((t1 + t2) * (t1 - t2) == mono(t, 1, {2, 0}) - mono(t, 1, {0, 2}));

    FieldTower other = make_tower(3);
    CHECK_THROWS_AS(t1 + FieldElement::one(other), std::invalid_argument);
}

TEST_CASE("reduce_once keeps the order-zero slice and drops a tower level") {
    FieldTower t = make_tower(2);
    FieldElement one = FieldElement::one(t);

    FieldElement a = one + mono(t, 1, {3, 1});  // 1 + t2*t1^3
    FieldElement ra = a.reduce_once(2);
    CHECK(ra.tower().height() == 1);
    CHECK(ra == FieldElement::one(make_tower(1)));

    CHECK((mono(t, 1, {1, 0}) + mono(t, 1, {0, 1})).reduce_once(2) ==
          mono(make_tower(1), 1, {1}));

    CHECK(mono(t, 1, {0, 1}).reduce_once(2).is_zero());

    // precondition: negative t2-exponent is reported with the offending term
    CHECK_THROWS_WITH_AS(mono(t, 3, {0, -1}).reduce_once(2),
                         doctest::Contains("t2"), std::invalid_argument);
}

TEST_CASE("uniformizer_shift multiplies by uniformizer powers, ramifying if needed") {
    FieldTower t = make_tower(2);
    FieldElement one = FieldElement::one(t);

    CHECK(one.uniformizer_shift({Rational(1), Rational(0)}) == mono(t, 1, {1, 0}));
    CHECK(mono(t, 1, {1, 0}).uniformizer_shift({Rational(-1), Rational(0)}) == one);

    // fractional shift: degree-2 ramified cover with valuation (1/2, 0)
    FieldElement half = one.uniformizer_shift({Rational(1, 2), Rational(0)});
    CHECK(half.tower().ramification() == std::vector<long>{2, 1});
    CHECK(half.valuation() == LexValue({Rational(1, 2), Rational(0)}));
    CHECK(half.str() == "t1^(1/2)");

    // round trip through a ramified cover is the identity
    FieldElement back = half.uniformizer_shift({Rational(-1, 2), Rational(0)});
    CHECK(back == one);
}

TEST_CASE("residue_data splits valuation and unit part") {
    FieldTower t = make_tower(2);
    FieldElement f = mono(t, 2, {1, 1}) + mono(t, 3, {2, 1});  // t1*t2*(2 + 3*t1)
    ResidueData r = residue_data(f);
    CHECK(r.value == lv({1, 1}));
    CHECK(r.unit_part.tower().height() == 1);
    CHECK(r.unit_part.valuation() == LexValue(std::vector<Rational>{Rational(0)}));
    CHECK(r.unit_part == mono(make_tower(1), 2, {0}) + mono(make_tower(1), 3, {1}));
}

TEST_CASE("GF(p) coefficients reduce mod p") {
    FieldTower t(BaseField::prime(7), {"t1"});
    FieldElement a = FieldElement::constant(t, 10);  // 3 mod 7
    FieldElement b = FieldElement::constant(t, 4);
    CHECK(a + b == FieldElement::zero(t));
    CHECK(FieldElement::constant(t, Rational(1, 2)) == FieldElement::constant(t, 4));
    CHECK_THROWS_AS(FieldElement::constant(t, Rational(1, 7)), std::invalid_argument);
    CHECK_THROWS_AS(BaseField::prime(6), std::invalid_argument);
}

TEST_CASE("valuation axioms hold on random elements") {
    std::mt19937_64 rng(23);
    for (int iter = 0; iter < 400; ++iter) {
        bool prime = iter % 3 == 0;
        FieldTower t = make_tower(1 + static_cast<int>(draw(rng, 0, 2)), prime);
        FieldElement f = random_element(rng, t);
        FieldElement g = random_element(rng, t);

        // nu(fg) = nu(f) + nu(g)
        CHECK((f * g).valuation() == f.valuation() + g.valuation());

        // nu(f+g) >= min, with equality for distinct valuations
        LexValue sum = (f + g).valuation();
        LexValue mn = min_lex({f.valuation(), g.valuation()}).value;
        CHECK(sum >= mn);
        if (!(f.valuation() == g.valuation()))
            CHECK(sum == mn);
    }
}

TEST_CASE("reduce_once is multiplicative when defined") {
    std::mt19937_64 rng(29);
    for (int iter = 0; iter < 200; ++iter) {
        FieldTower t = make_tower(2);
        // nonnegative t2-exponents so the precondition holds
        auto sample = [&] {
            FieldElement f = FieldElement::zero(t);
            long terms = draw(rng, 0, 3);
            for (long k = 0; k < terms; ++k)
                f = f + mono(t, draw(rng, -4, 4), {draw(rng, -3, 3), draw(rng, 0, 2)});
            return f;
        };
        FieldElement f = sample(), g = sample();
        CHECK((f * g).reduce_once(2) == f.reduce_once(2) * g.reduce_once(2));
    }
}

TEST_CASE("shift laws on random elements") {
    std::mt19937_64 rng(31);
    for (int iter = 0; iter < 200; ++iter) {
        FieldTower t = make_tower(1 + static_cast<int>(draw(rng, 0, 2)));
        FieldElement f = random_nonzero_element(rng, t);
        std::vector<Rational> e, neg;
        for (int s = 0; s < t.height(); ++s) {
            e.push_back(draw_rational(rng, -4, 4, 3));
            neg.push_back(-e.back());
        }
        FieldElement shifted = f.uniformizer_shift(e);
        // valuation adds the shift, in original normalization
        LexValue expected = f.valuation() + LexValue(e);
        CHECK(shifted.valuation() == expected);
        CHECK(shifted.uniformizer_shift(neg) == f);
    }
}

TEST_CASE("rendering") {
    FieldTower t = make_tower(2);
    FieldElement f = mono(t, -3, {1, 0}) + FieldElement::one(t) + mono(t, 1, {0, -2});
    CHECK(f.str() == "t2^-2 + 1 - 3*t1");
    CHECK(FieldElement::zero(t).str() == "0");
}
