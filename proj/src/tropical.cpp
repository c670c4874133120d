#include "lextrop/tropical.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <sstream>

namespace lextrop {

TropicalEvaluation trop_eval(const KPolynomial& f, const WeightMatrix& u) {
    if (f.is_zero())
        throw std::invalid_argument("trop_eval of zero polynomial");
    auto supp = f.support();
    std::vector<LexValue> weights;
    weights.reserve(supp.size());
    for (const auto& d : supp)
        weights.push_back(weight_of_term(f, d, u));
    MinLexResult mn = min_lex(weights);
    TropicalEvaluation out{mn.value, {}};
    for (std::size_t idx : mn.achievers)
        out.achievers.push_back(supp[idx]);
    return out;
}

bool is_in_trop(const KPolynomial& f, const WeightMatrix& w) {
    if (f.is_zero())
        throw std::invalid_argument("is_in_trop of zero polynomial");
    bool tie_route = trop_eval(f, w).achievers.size() >= 2;
    bool form_route = !is_monomial(initial_form(f, w));
    if (tie_route != form_route) {
        throw InternalInconsistencyError(
            "tie condition and initial form disagree for " + f.str() + " at " + w.str());
    }
    return tie_route;
}

namespace {

struct TieContext {
    std::vector<std::vector<long>> supp;  // sorted support
    std::vector<Rational> vals;           // stage valuation per support point
    int m = 0;
};

// Closed cell where all points of S tie and weakly minimize:
//   ell_d(w) = vals[d] + <d, w>
RationalPolyhedron tie_cell(const TieContext& ctx, const std::vector<std::size_t>& s_idx,
                            bool strict_rest) {
    RationalPolyhedron p(ctx.m);
    std::size_t d0 = s_idx[0];
    std::set<std::size_t> in_s(s_idx.begin(), s_idx.end());
    for (std::size_t k = 1; k < s_idx.size(); ++k) {
        std::size_t dk = s_idx[k];
        std::vector<Rational> normal(static_cast<std::size_t>(ctx.m));
        for (int i = 0; i < ctx.m; ++i)
            normal[static_cast<std::size_t>(i)] =
                Rational(ctx.supp[d0][static_cast<std::size_t>(i)] -
                         ctx.supp[dk][static_cast<std::size_t>(i)]);
        p.add_equality(std::move(normal), ctx.vals[dk] - ctx.vals[d0]);
    }
    for (std::size_t e = 0; e < ctx.supp.size(); ++e) {
        if (in_s.count(e))
            continue;
        std::vector<Rational> normal(static_cast<std::size_t>(ctx.m));
        for (int i = 0; i < ctx.m; ++i)
            normal[static_cast<std::size_t>(i)] =
                Rational(ctx.supp[e][static_cast<std::size_t>(i)] -
                         ctx.supp[d0][static_cast<std::size_t>(i)]);
        p.add_inequality(std::move(normal), ctx.vals[d0] - ctx.vals[e], strict_rest);
    }
    return p;
}

// Maximal tie set of a nonempty tie cell: S plus every index whose weight
// function coincides with the minimum on the whole cell.
std::vector<std::size_t> canonical_tie_set(const TieContext& ctx,
                                           const std::vector<std::size_t>& s_idx,
                                           const RationalPolyhedron& cell) {
    std::size_t d0 = s_idx[0];
    std::set<std::size_t> out(s_idx.begin(), s_idx.end());
    for (std::size_t e = 0; e < ctx.supp.size(); ++e) {
        if (out.count(e))
            continue;
        std::vector<Rational> objective(static_cast<std::size_t>(ctx.m));
        for (int i = 0; i < ctx.m; ++i)
            objective[static_cast<std::size_t>(i)] =
                Rational(ctx.supp[e][static_cast<std::size_t>(i)] -
                         ctx.supp[d0][static_cast<std::size_t>(i)]);
        auto res = optimize(cell, objective, true);
        if (res.status == LpStatus::optimal &&
            res.value + ctx.vals[e] - ctx.vals[d0] == 0)
            out.insert(e);
    }
    return std::vector<std::size_t>(out.begin(), out.end());
}

TieContext make_context(const KPolynomial& f, int stage) {
    TieContext ctx;
    ctx.m = f.var_count();
    ctx.supp = f.support();
    ctx.vals.reserve(ctx.supp.size());
    for (const auto& d : ctx.supp)
        ctx.vals.push_back(f.coefficient(d).t_order(stage));
    return ctx;
}

}  // namespace

std::vector<StageCell> stage_tie_cells(const KPolynomial& f, int stage, bool deepen_strata) {
    if (f.is_zero())
        throw std::invalid_argument("tie cells of zero polynomial");
    TieContext ctx = make_context(f, stage);
    std::size_t k = ctx.supp.size();

    std::map<std::vector<std::size_t>, RationalPolyhedron> cells;
    auto try_add = [&](const std::vector<std::size_t>& s_idx) {
        RationalPolyhedron closed = tie_cell(ctx, s_idx, false);
        if (!is_feasible(closed, false))
            return;
        std::vector<std::size_t> key = canonical_tie_set(ctx, s_idx, closed);
        if (cells.count(key))
            return;
        cells.emplace(key, tie_cell(ctx, key, false));
    };

    for (std::size_t a = 0; a < k; ++a)
        for (std::size_t b = a + 1; b < k; ++b)
            try_add({a, b});

    if (deepen_strata) {
        // close the cell family under intersection: the union of two tie
        // sets, when feasible, is again a stratum
        bool grew = true;
        while (grew) {
            grew = false;
            std::vector<std::vector<std::size_t>> keys;
            for (const auto& [key, cell] : cells)
                keys.push_back(key);
            for (std::size_t a = 0; a < keys.size(); ++a) {
                for (std::size_t b = a + 1; b < keys.size(); ++b) {
                    std::vector<std::size_t> u;
                    std::set_union(keys[a].begin(), keys[a].end(), keys[b].begin(),
                                   keys[b].end(), std::back_inserter(u));
                    if (cells.count(u))
                        continue;
                    std::size_t before = cells.size();
                    try_add(u);
                    if (cells.size() > before)
                        grew = true;
                }
            }
        }
    }

    std::vector<StageCell> out;
    for (const auto& [key, cell] : cells) {
        StageCell sc{cell, tie_cell(ctx, key, true), {}, {}};
        for (std::size_t idx : key)
            sc.tied_support.push_back(ctx.supp[idx]);
        auto witness = relative_interior_point(cell);
        if (!witness)
            throw InternalInconsistencyError("tie cell with empty relative interior");
        sc.witness = *witness;
        out.push_back(std::move(sc));
    }
    std::sort(out.begin(), out.end(), [](const StageCell& a, const StageCell& b) {
        return a.tied_support < b.tied_support;
    });
    return out;
}

Rank1Complex rank1_hypersurface(const KPolynomial& g) {
    if (g.is_zero())
        throw std::invalid_argument("rank1_hypersurface of zero polynomial");
    if (g.tower().height() != 1)
        throw std::invalid_argument("rank1_hypersurface needs a height-1 tower");
    Rank1Complex out;
    out.complex.ambient_dim = g.var_count();
    if (g.term_count() < 2)
        return out;  // monomials have empty tropicalization
    auto cells = stage_tie_cells(g, 1, false);
    for (auto& sc : cells) {
        out.complex.cells.push_back(sc.cell);
        out.tied_sets.push_back(sc.tied_support);
        out.witnesses.push_back(sc.witness);
    }
    for (std::size_t i = 0; i < out.tied_sets.size(); ++i) {
        for (std::size_t j = 0; j < out.tied_sets.size(); ++j) {
            if (i == j)
                continue;
            // more ties = smaller cell = face
            if (out.tied_sets[i].size() > out.tied_sets[j].size() &&
                std::includes(out.tied_sets[i].begin(), out.tied_sets[i].end(),
                              out.tied_sets[j].begin(), out.tied_sets[j].end()))
                out.complex.face_of.emplace_back(static_cast<int>(i), static_cast<int>(j));
        }
    }
    return out;
}

namespace {

FiberedComplex build_fibered(const KPolynomial& f, long max_cells, long& budget) {
    FiberedComplex out;
    out.stage = f.tower().height();
    out.m = f.var_count();
    if (f.term_count() < 2)
        return out;  // monomial: empty tropicalization at every stage
    auto cells = stage_tie_cells(f, out.stage, true);
    for (auto& sc : cells) {
        if (--budget < 0)
            throw std::runtime_error("cell budget exceeded (max-cells = " +
                                     std::to_string(max_cells) + ")");
        KPolynomial residual = stage_initial(f, out.stage, sc.witness);
        if (residual.support() != sc.tied_support)
            throw InternalInconsistencyError(
                "stage initial form does not match the tie set of its cell");
        if (is_monomial(residual))
            continue;  // empty fiber; cannot happen for tie sets of size >= 2
        FiberedCell fc{std::move(sc), residual, {}};
        if (out.stage > 1)
            fc.children.push_back(build_fibered(residual, max_cells, budget));
        out.cells.push_back(std::move(fc));
    }
    return out;
}

}  // namespace

FiberedComplex iterated_trop(const KPolynomial& f, long max_cells) {
    if (f.is_zero())
        throw std::invalid_argument("iterated_trop of zero polynomial");
    if (f.tower().height() < 1)
        throw std::invalid_argument("iterated_trop needs tower height >= 1");
    long budget = max_cells;
    return build_fibered(f, max_cells, budget);
}

namespace {

// Lift a constraint on stage-s weights in Q^m to the flattened space Q^{nm}
// with variable-major coordinates.
std::vector<Rational> lift_normal(const std::vector<Rational>& normal, int stage, int m, int n) {
    std::vector<Rational> out(static_cast<std::size_t>(n * m), Rational(0));
    for (int i = 0; i < m; ++i)
        out[static_cast<std::size_t>(i * n + stage - 1)] = normal[static_cast<std::size_t>(i)];
    return out;
}

void append_lifted(RationalPolyhedron& target, const RationalPolyhedron& cell, int stage, int m,
                   int n, bool strict) {
    for (const auto& eq : cell.equalities())
        target.add_equality(lift_normal(eq.normal, stage, m, n), eq.offset);
    const auto& flags = cell.strict_flags();
    for (std::size_t i = 0; i < cell.inequalities().size(); ++i) {
        const auto& c = cell.inequalities()[i];
        target.add_inequality(lift_normal(c.normal, stage, m, n), c.offset,
                              strict && flags[i]);
    }
}

void walk(const FiberedComplex& fc, int m, int n, std::vector<int>& path,
          std::vector<const FiberedCell*>& chain, FlattenedComplex& out) {
    for (std::size_t idx = 0; idx < fc.cells.size(); ++idx) {
        const FiberedCell& cell = fc.cells[idx];
        path.push_back(static_cast<int>(idx));
        chain.push_back(&cell);
        if (cell.children.empty()) {
            FlatCell flat{RationalPolyhedron(n * m), RationalPolyhedron(n * m),
                          cell.residual,  {},  {},  {}, 0};
            flat.path = path;
            for (std::size_t level = 0; level < chain.size(); ++level) {
                // chain[level] is the cell chosen at stage n - level
                int stage = n - static_cast<int>(level);
                const StageCell& geom = chain[level]->geometry;
                append_lifted(flat.closure, geom.cell, stage, m, n, false);
                append_lifted(flat.stratum, geom.stratum, stage, m, n, true);
                flat.stage_cells.push_back(geom.cell);
                flat.stage_dims.push_back(dimension(geom.cell));
                flat.dim += flat.stage_dims.back();
            }
            out.cells.push_back(std::move(flat));
        } else {
            walk(cell.children.front(), m, n, path, chain, out);
        }
        chain.pop_back();
        path.pop_back();
    }
}

}  // namespace

FlattenedComplex flatten(const FiberedComplex& fc, int m, int n) {
    FlattenedComplex out;
    out.n = n;
    out.m = m;
    out.ambient_dim = n * m;
    std::vector<int> path;
    std::vector<const FiberedCell*> chain;
    walk(fc, m, n, path, chain, out);
    return out;
}

PolyhedralComplex FlattenedComplex::to_complex() const {
    PolyhedralComplex c;
    c.ambient_dim = ambient_dim;
    for (const auto& cell : cells)
        c.cells.push_back(cell.closure);
    for (std::size_t i = 0; i < cells.size(); ++i) {
        for (std::size_t j = 0; j < cells.size(); ++j) {
            if (i == j)
                continue;
            bool subset = true;
            for (std::size_t s = 0; s < cells[i].stage_cells.size() && subset; ++s)
                subset = contains(cells[j].stage_cells[s], cells[i].stage_cells[s]);
            if (subset && cells[i].dim < cells[j].dim)
                c.face_of.emplace_back(static_cast<int>(i), static_cast<int>(j));
        }
    }
    return c;
}

ComplexReport FlattenedComplex::report() const {
    ComplexReport report;
    for (const auto& cell : cells)
        report.cell_dims.push_back(cell.dim);
    // containment respects the per-stage product structure
    auto contained_in = [&](std::size_t i, std::size_t j) {
        for (std::size_t s = 0; s < cells[i].stage_cells.size(); ++s)
            if (!contains(cells[j].stage_cells[s], cells[i].stage_cells[s]))
                return false;
        return true;
    };
    for (std::size_t i = 0; i < cells.size(); ++i) {
        bool maximal = true;
        for (std::size_t j = 0; j < cells.size() && maximal; ++j) {
            if (i == j)
                continue;
            if (contained_in(i, j) && !contained_in(j, i))
                maximal = false;
        }
        if (maximal)
            report.maximal.push_back(static_cast<int>(i));
    }
    report.dim = -1;
    for (int idx : report.maximal)
        report.dim = std::max(report.dim, cells[static_cast<std::size_t>(idx)].dim);
    report.pure = true;
    for (int idx : report.maximal)
        report.pure = report.pure && cells[static_cast<std::size_t>(idx)].dim == report.dim;
    return report;
}

TropReport trop_report(const KPolynomial& f, long max_cells) {
    if (f.is_zero())
        throw std::invalid_argument("trop_report of zero polynomial");
    int n = f.tower().height();
    int m = f.var_count();
    TropReport report{iterated_trop(f, max_cells), FlattenedComplex{}, ComplexReport{},
                      n * (m - 1), false, {}};
    report.flattened = flatten(report.fibered, m, n);
    report.complex_report = report.flattened.report();
    report.dim_matches = report.complex_report.dim == report.expected_dim;
    for (int idx : report.complex_report.maximal) {
        if (report.flattened.cells[static_cast<std::size_t>(idx)].dim < report.expected_dim)
            report.deficient_maximal.push_back(idx);
    }
    return report;
}

WitnessCertificate root_witness(const KPolynomial& f, const WeightMatrix& w) {
    if (!is_in_trop(f, w))
        throw std::invalid_argument("weight is not in the tropicalization; no witness exists");
    int n = f.tower().height();
    // translate w to the origin: fold t^{<w, d>} into each coefficient
    KPolynomial twisted(f.tower(), f.vars());
    for (const auto& [d, a] : f.terms()) {
        std::vector<Rational> e(static_cast<std::size_t>(n), Rational(0));
        for (int s = 1; s <= n; ++s) {
            Rational shift(0);
            for (std::size_t i = 0; i < d.size(); ++i)
                shift += w.entry(i).coord(s) * d[i];
            e[static_cast<std::size_t>(s - 1)] = shift;
        }
        twisted = twisted + KPolynomial::monomial(f.tower(), f.vars(), a.uniformizer_shift(e), d);
    }
    std::vector<long> b = generic_b(twisted);
    KPolynomial univariate = univariate_reduce(twisted, b);
    RootValuationReport roots = root_valuations(univariate);
    LexValue zero = LexValue::zero(n);
    for (const auto& edge : roots.edges) {
        if (edge.slope == zero)
            return WitnessCertificate{std::move(b), std::move(univariate), edge};
    }
    throw InternalInconsistencyError("no slope-zero edge for a certified tropical point");
}

}  // namespace lextrop
