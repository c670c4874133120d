#pragma once

#include <string>
#include <vector>

#include "lextrop/kpolynomial.hpp"

namespace lextrop {

// A generator (d, nu(a_d)) of the n-extended Newton polytope: the support
// point lifted by its coefficient valuation. The recession cone, upward in
// every valuation coordinate, is implicit.
struct NewtonGenerator {
    std::vector<long> d;  // support point in Z^m
    LexValue v;           // finite coefficient valuation in Q^n
};

struct ExtendedNewtonPolytope {
    int m = 0;
    int n = 0;
    std::vector<NewtonGenerator> generators;
};

ExtendedNewtonPolytope build_polytope(const KPolynomial& f);

// A bounded lower-hull edge between lifted support points of a univariate
// polynomial. The generalized slope lives in Q^n; the multiplicity is the
// horizontal length.
struct SlopeEdge {
    long from_x;
    LexValue from_v;
    long to_x;
    LexValue to_v;
    LexValue slope;  // (to_v - from_v) / (to_x - from_x)
    long multiplicity = 0;
};

// Lower boundary of the hull of a univariate (m = 1) polytope with respect
// to the lex order on the Q^n fibers: a monotone-chain sweep with exact lex
// slope comparisons. Collinear points merge; edges come back in increasing
// abscissa with strictly lex-increasing slopes.
std::vector<SlopeEdge> lower_hull_univariate(const ExtendedNewtonPolytope& p);

struct RootValuationReport {
    long roots_at_zero = 0;  // power of the variable stripped during normalization
    std::vector<std::pair<LexValue, long>> valuations;  // (valuation, multiplicity)
    std::vector<SlopeEdge> edges;                       // the bounded hull edges
};

// Valuations of the roots of a univariate polynomial, with multiplicities:
// the negated generalized slopes of the bounded lower-hull edges after
// normalizing the constant term to a unit.
RootValuationReport root_valuations(const KPolynomial& f);

}  // namespace lextrop
