#include "lextrop/newton.hpp"

#include <algorithm>
#include <stdexcept>

namespace lextrop {

ExtendedNewtonPolytope build_polytope(const KPolynomial& f) {
    if (f.is_zero())
        throw std::invalid_argument("Newton polytope of zero polynomial");
    ExtendedNewtonPolytope p;
    p.m = f.var_count();
    p.n = f.tower().height();
    for (const auto& [d, a] : f.terms())
        p.generators.push_back(NewtonGenerator{d, a.valuation()});
    return p;
}

namespace {

LexValue slope_between(long x0, const LexValue& v0, long x1, const LexValue& v1) {
    Rational dx(x1 - x0);
    return scalar_mul(Rational(1) / dx, v1 - v0);
}

}  // namespace

std::vector<SlopeEdge> lower_hull_univariate(const ExtendedNewtonPolytope& p) {
    if (p.m != 1)
        throw std::invalid_argument("lower_hull_univariate needs a univariate polytope");
    if (p.generators.size() < 2)
        throw std::invalid_argument("lower hull needs at least two generators");

    std::vector<std::pair<long, LexValue>> pts;
    pts.reserve(p.generators.size());
    for (const auto& g : p.generators)
        pts.emplace_back(g.d[0], g.v);
    std::sort(pts.begin(), pts.end(),
              [](const auto& a, const auto& b) { return a.first < b.first; });
    for (std::size_t i = 1; i < pts.size(); ++i)
        if (pts[i].first == pts[i - 1].first)
            throw std::invalid_argument("duplicate abscissa in Newton polytope generators");

    // Monotone chain: keep slopes strictly lex-increasing; a new point pops
    // every chain point that would break that, which also merges collinear
    // points into a single edge.
    std::vector<std::pair<long, LexValue>> chain;
    for (const auto& pt : pts) {
        while (chain.size() >= 2) {
            const auto& a = chain[chain.size() - 2];
            const auto& b = chain[chain.size() - 1];
            LexValue s_ab = slope_between(a.first, a.second, b.first, b.second);
            LexValue s_bp = slope_between(b.first, b.second, pt.first, pt.second);
            if (s_ab >= s_bp)
                chain.pop_back();
            else
                break;
        }
        chain.push_back(pt);
    }

    std::vector<SlopeEdge> edges;
    for (std::size_t i = 0; i + 1 < chain.size(); ++i) {
        const auto& [x0, v0] = chain[i];
        const auto& [x1, v1] = chain[i + 1];
        edges.push_back(SlopeEdge{x0, v0, x1, v1, slope_between(x0, v0, x1, v1), x1 - x0});
    }
    return edges;
}

RootValuationReport root_valuations(const KPolynomial& f) {
    if (f.is_zero())
        throw std::invalid_argument("root_valuations of zero polynomial");
    if (f.var_count() != 1)
        throw std::invalid_argument("root_valuations needs a univariate polynomial");

    // Normalize to the form of a unit constant term: dividing by the
    // lowest-order term only translates the lifted points, so it is enough
    // to shift abscissae and valuations.
    long ord = f.support().front()[0];
    for (const auto& d : f.support())
        ord = std::min(ord, d[0]);
    if (f.term_count() < 2)
        throw std::invalid_argument("root_valuations of a constant (or single-term) polynomial");

    LexValue base = f.coefficient({ord}).valuation();

    ExtendedNewtonPolytope p;
    p.m = 1;
    p.n = f.tower().height();
    for (const auto& [d, a] : f.terms())
        p.generators.push_back(NewtonGenerator{{d[0] - ord}, a.valuation() - base});

    RootValuationReport report;
    report.roots_at_zero = ord;
    report.edges = lower_hull_univariate(p);
    for (const auto& e : report.edges)
        report.valuations.emplace_back(-e.slope, e.multiplicity);
    return report;
}

}  // namespace lextrop
