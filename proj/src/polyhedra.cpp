#include "lextrop/polyhedra.hpp"

#include <algorithm>
#include <stdexcept>

namespace lextrop {

namespace {

// Exact primal simplex with Bland's rule on the computational form
//   min c.y  s.t.  M y = r,  y >= 0.
// Dense rational tableau; fine at desk scale.
struct Tableau {
    std::vector<std::vector<Rational>> rows;
    std::vector<Rational> rhs;
    std::vector<std::size_t> basis;
    std::vector<Rational> cost;  // reduced costs
    Rational objective = 0;      // current objective value
    std::size_t n_cols = 0;
    std::size_t n_structural = 0;  // columns that are not artificial

    void pivot(std::size_t row, std::size_t col) {
        Rational inv = 1 / rows[row][col];
        for (auto& v : rows[row])
            v *= inv;
        rhs[row] *= inv;
        for (std::size_t i = 0; i < rows.size(); ++i) {
            if (i == row || rows[i][col] == 0)
                continue;
            Rational factor = rows[i][col];
            for (std::size_t j = 0; j < n_cols; ++j)
                rows[i][j] -= factor * rows[row][j];
            rhs[i] -= factor * rhs[row];
        }
        if (cost[col] != 0) {
            Rational factor = cost[col];
            for (std::size_t j = 0; j < n_cols; ++j)
                cost[j] -= factor * rows[row][j];
            objective += factor * rhs[row];
        }
        basis[row] = col;
    }

    // Returns false when unbounded below.
    bool iterate(std::size_t col_limit) {
        while (true) {
            std::size_t enter = n_cols;
            for (std::size_t j = 0; j < col_limit; ++j) {
                if (cost[j] < 0) {
                    enter = j;
                    break;
                }
            }
            if (enter == n_cols)
                return true;
            std::size_t leave = rows.size();
            for (std::size_t i = 0; i < rows.size(); ++i) {
                if (rows[i][enter] <= 0)
                    continue;
                if (leave == rows.size())
                    leave = i;
                else {
                    Rational lhs = rhs[i] * rows[leave][enter];
                    Rational rhsv = rhs[leave] * rows[i][enter];
                    if (lhs < rhsv || (lhs == rhsv && basis[i] < basis[leave]))
                        leave = i;
                }
            }
            if (leave == rows.size())
                return false;
            pivot(leave, enter);
        }
    }
};

struct StandardProblem {
    // columns: x+ (D), x- (D), extras (slacks etc.); rows with rhs
    std::vector<std::vector<Rational>> rows;
    std::vector<Rational> rhs;
    std::vector<Rational> objective;  // minimized
    std::size_t n_cols = 0;
};

struct StandardResult {
    LpStatus status;
    Rational value;
    std::vector<Rational> y;
};

StandardResult solve_standard(const StandardProblem& prob) {
    std::size_t m = prob.rows.size();
    std::size_t n = prob.n_cols;
    Tableau t;
    t.n_structural = n;
    t.n_cols = n + m;  // one artificial per row
    t.rows.assign(m, std::vector<Rational>(t.n_cols, Rational(0)));
    t.rhs.assign(m, Rational(0));
    t.basis.assign(m, 0);
    for (std::size_t i = 0; i < m; ++i) {
        bool flip = prob.rhs[i] < 0;
        for (std::size_t j = 0; j < n; ++j)
            t.rows[i][j] = flip ? -prob.rows[i][j] : prob.rows[i][j];
        t.rhs[i] = flip ? -prob.rhs[i] : prob.rhs[i];
        t.rows[i][n + i] = 1;
        t.basis[i] = n + i;
    }

    // phase 1: minimize the sum of artificials
    t.cost.assign(t.n_cols, Rational(0));
    for (std::size_t i = 0; i < m; ++i)
        t.cost[n + i] = 1;
    t.objective = 0;
    for (std::size_t i = 0; i < m; ++i) {
        for (std::size_t j = 0; j < t.n_cols; ++j)
            t.cost[j] -= t.rows[i][j];
        t.objective += t.rhs[i];
    }
    t.iterate(t.n_cols);
    if (t.objective != 0)
        return {LpStatus::infeasible, Rational(0), {}};

    // drive artificials out of the basis; all-zero rows are redundant
    for (std::size_t i = 0; i < m; ++i) {
        if (t.basis[i] < n)
            continue;
        std::size_t col = n;
        for (std::size_t j = 0; j < n; ++j) {
            if (t.rows[i][j] != 0) {
                col = j;
                break;
            }
        }
        if (col < n)
            t.pivot(i, col);
    }

    // phase 2
    t.cost.assign(t.n_cols, Rational(0));
    for (std::size_t j = 0; j < n; ++j)
        t.cost[j] = prob.objective[j];
    t.objective = 0;
    for (std::size_t i = 0; i < m; ++i) {
        if (t.basis[i] >= n)
            continue;  // artificial stuck at zero in a redundant row
        Rational c = prob.objective[t.basis[i]];
        if (c == 0)
            continue;
        for (std::size_t j = 0; j < t.n_cols; ++j)
            t.cost[j] -= c * t.rows[i][j];
        t.objective += c * t.rhs[i];
    }
    // artificial columns must not re-enter
    for (std::size_t i = 0; i < m; ++i)
        t.cost[n + i] = 0;
    if (!t.iterate(n))
        return {LpStatus::unbounded, Rational(0), {}};

    std::vector<Rational> y(n, Rational(0));
    for (std::size_t i = 0; i < m; ++i) {
        if (t.basis[i] < n)
            y[t.basis[i]] = t.rhs[i];
    }
    return {LpStatus::optimal, t.objective, std::move(y)};
}

// Assemble the split-variable standard form for a polyhedron. Column layout:
// x+ (D), x- (D), [epsilon], one slack per inequality row.
struct Assembled {
    StandardProblem prob;
    std::size_t eps_col = 0;
    bool has_eps = false;
    int dim = 0;
};

Assembled assemble(const RationalPolyhedron& p, bool with_eps,
                   const std::vector<bool>& eps_rows) {
    Assembled a;
    a.dim = p.ambient_dim();
    std::size_t d = static_cast<std::size_t>(a.dim);
    std::size_t n_ineq = p.inequalities().size();
    a.has_eps = with_eps;
    a.eps_col = 2 * d;
    std::size_t extra = with_eps ? 1 : 0;
    a.prob.n_cols = 2 * d + extra + n_ineq + (with_eps ? 1 : 0);  // slacks + eps cap slack

    auto make_row = [&](const LinearConstraint& c) {
        std::vector<Rational> row(a.prob.n_cols, Rational(0));
        for (std::size_t k = 0; k < d; ++k) {
            row[k] = c.normal[k];
            row[d + k] = -c.normal[k];
        }
        return row;
    };

    for (const auto& eq : p.equalities()) {
        a.prob.rows.push_back(make_row(eq));
        a.prob.rhs.push_back(eq.offset);
    }
    for (std::size_t i = 0; i < n_ineq; ++i) {
        auto row = make_row(p.inequalities()[i]);
        if (with_eps && eps_rows[i])
            row[a.eps_col] = -1;
        row[2 * d + extra + i] = -1;  // surplus: <a,x> - eps - s = b
        a.prob.rows.push_back(std::move(row));
        a.prob.rhs.push_back(p.inequalities()[i].offset);
    }
    if (with_eps) {
        // eps <= 1
        std::vector<Rational> row(a.prob.n_cols, Rational(0));
        row[a.eps_col] = 1;
        row[2 * d + extra + n_ineq] = 1;
        a.prob.rows.push_back(std::move(row));
        a.prob.rhs.push_back(Rational(1));
    }
    a.prob.objective.assign(a.prob.n_cols, Rational(0));
    return a;
}

std::vector<Rational> extract_point(const Assembled& a, const std::vector<Rational>& y) {
    std::size_t d = static_cast<std::size_t>(a.dim);
    std::vector<Rational> x(d);
    for (std::size_t k = 0; k < d; ++k)
        x[k] = y[k] - y[d + k];
    return x;
}

// Exact Gaussian elimination; returns the rank, reducing rows in place to
// row echelon form. Columns are eliminated right-to-left so that solved
// forms pivot on the latest variable (useful for readable rendering).
std::size_t echelonize(std::vector<std::vector<Rational>>& rows, std::size_t width,
                       bool rightmost_pivots) {
    std::size_t rank = 0;
    std::vector<std::size_t> col_order;
    for (std::size_t c = 0; c < width; ++c)
        col_order.push_back(rightmost_pivots ? width - 1 - c : c);
    for (std::size_t col : col_order) {
        std::size_t pivot_row = rows.size();
        for (std::size_t i = rank; i < rows.size(); ++i) {
            if (rows[i][col] != 0) {
                pivot_row = i;
                break;
            }
        }
        if (pivot_row == rows.size())
            continue;
        std::swap(rows[rank], rows[pivot_row]);
        Rational inv = 1 / rows[rank][col];
        for (auto& v : rows[rank])
            v *= inv;
        for (std::size_t i = 0; i < rows.size(); ++i) {
            if (i == rank || rows[i][col] == 0)
                continue;
            Rational f = rows[i][col];
            for (std::size_t j = 0; j < rows[i].size(); ++j)
                rows[i][j] -= f * rows[rank][j];
        }
        ++rank;
        if (rank == rows.size())
            break;
    }
    return rank;
}

}  // namespace

RationalPolyhedron::RationalPolyhedron(int ambient_dim) : dim_(ambient_dim) {
    if (ambient_dim < 1)
        throw std::invalid_argument("polyhedron needs ambient dimension >= 1");
}

void RationalPolyhedron::add_equality(std::vector<Rational> normal, Rational offset) {
    if (static_cast<int>(normal.size()) != dim_)
        throw std::invalid_argument("constraint normal has wrong length");
    eqs_.push_back({std::move(normal), std::move(offset)});
}

void RationalPolyhedron::add_inequality(std::vector<Rational> normal, Rational offset,
                                        bool strict) {
    if (static_cast<int>(normal.size()) != dim_)
        throw std::invalid_argument("constraint normal has wrong length");
    ineqs_.push_back({std::move(normal), std::move(offset)});
    strict_.push_back(strict);
}

RationalPolyhedron RationalPolyhedron::closure() const {
    RationalPolyhedron p(*this);
    std::fill(p.strict_.begin(), p.strict_.end(), false);
    return p;
}

RationalPolyhedron RationalPolyhedron::with_all_strict() const {
    RationalPolyhedron p(*this);
    std::fill(p.strict_.begin(), p.strict_.end(), true);
    return p;
}

bool RationalPolyhedron::contains_point(const std::vector<Rational>& x, bool honor_strict) const {
    if (static_cast<int>(x.size()) != dim_)
        throw std::invalid_argument("point has wrong dimension");
    auto dot = [&](const LinearConstraint& c) {
        Rational s(0);
        for (std::size_t k = 0; k < x.size(); ++k)
            s += c.normal[k] * x[k];
        return s;
    };
    for (const auto& eq : eqs_)
        if (dot(eq) != eq.offset)
            return false;
    for (std::size_t i = 0; i < ineqs_.size(); ++i) {
        Rational v = dot(ineqs_[i]);
        if (honor_strict && strict_[i] ? v <= ineqs_[i].offset : v < ineqs_[i].offset)
            return false;
    }
    return true;
}

std::optional<std::vector<Rational>> is_feasible(const RationalPolyhedron& p, bool honor_strict) {
    bool any_strict = false;
    if (honor_strict)
        for (bool s : p.strict_flags())
            any_strict = any_strict || s;
    if (!any_strict) {
        Assembled a = assemble(p, false, {});
        auto res = solve_standard(a.prob);
        if (res.status != LpStatus::optimal)
            return std::nullopt;
        return extract_point(a, res.y);
    }
    Assembled a = assemble(p, true, p.strict_flags());
    a.prob.objective[a.eps_col] = -1;  // maximize eps
    auto res = solve_standard(a.prob);
    if (res.status != LpStatus::optimal)
        return std::nullopt;
    if (res.y[a.eps_col] <= 0)
        return std::nullopt;
    return extract_point(a, res.y);
}

LpResult optimize(const RationalPolyhedron& p, const std::vector<Rational>& objective,
                  bool maximize) {
    if (static_cast<int>(objective.size()) != p.ambient_dim())
        throw std::invalid_argument("objective has wrong dimension");
    Assembled a = assemble(p, false, {});
    std::size_t d = static_cast<std::size_t>(p.ambient_dim());
    for (std::size_t k = 0; k < d; ++k) {
        a.prob.objective[k] = maximize ? -objective[k] : objective[k];
        a.prob.objective[d + k] = maximize ? objective[k] : -objective[k];
    }
    auto res = solve_standard(a.prob);
    if (res.status != LpStatus::optimal)
        return {res.status, Rational(0), {}};
    Rational value = maximize ? -res.value : res.value;
    return {LpStatus::optimal, value, extract_point(a, res.y)};
}

namespace {

// Indices of inequalities that hold with equality on all of p (p nonempty).
std::vector<bool> implied_tight(const RationalPolyhedron& p) {
    std::vector<bool> tight(p.inequalities().size(), false);
    for (std::size_t i = 0; i < p.inequalities().size(); ++i) {
        const auto& c = p.inequalities()[i];
        auto res = optimize(p, c.normal, true);
        if (res.status == LpStatus::optimal && res.value == c.offset)
            tight[i] = true;
    }
    return tight;
}

std::vector<std::vector<Rational>> hull_rows(const RationalPolyhedron& p,
                                             const std::vector<bool>& tight) {
    std::size_t d = static_cast<std::size_t>(p.ambient_dim());
    std::vector<std::vector<Rational>> rows;
    auto push = [&](const LinearConstraint& c) {
        std::vector<Rational> row(d + 1);
        for (std::size_t k = 0; k < d; ++k)
            row[k] = c.normal[k];
        row[d] = c.offset;
        rows.push_back(std::move(row));
    };
    for (const auto& eq : p.equalities())
        push(eq);
    for (std::size_t i = 0; i < tight.size(); ++i)
        if (tight[i])
            push(p.inequalities()[i]);
    return rows;
}

}  // namespace

int dimension(const RationalPolyhedron& p) {
    if (!is_feasible(p, false))
        return -1;
    auto rows = hull_rows(p, implied_tight(p));
    std::size_t rank = echelonize(rows, static_cast<std::size_t>(p.ambient_dim()), false);
    return p.ambient_dim() - static_cast<int>(rank);
}

std::vector<LinearConstraint> affine_hull(const RationalPolyhedron& p) {
    if (!is_feasible(p, false))
        throw std::invalid_argument("affine hull of empty polyhedron");
    auto rows = hull_rows(p, implied_tight(p));
    std::size_t d = static_cast<std::size_t>(p.ambient_dim());
    std::size_t rank = echelonize(rows, d, true);
    std::vector<LinearConstraint> out;
    for (std::size_t i = 0; i < rank; ++i) {
        LinearConstraint c;
        c.normal.assign(rows[i].begin(), rows[i].begin() + static_cast<std::ptrdiff_t>(d));
        c.offset = rows[i][d];
        out.push_back(std::move(c));
    }
    return out;
}

namespace {

std::optional<unsigned> g_pivot_seed;

RationalPolyhedron permuted_for_seed(const RationalPolyhedron& p) {
    if (!g_pivot_seed)
        return p;
    std::vector<std::size_t> order(p.inequalities().size());
    for (std::size_t i = 0; i < order.size(); ++i)
        order[i] = i;
    // small deterministic LCG shuffle
    unsigned long long state = *g_pivot_seed * 6364136223846793005ULL + 1442695040888963407ULL;
    for (std::size_t i = order.size(); i > 1; --i) {
        state = state * 6364136223846793005ULL + 1442695040888963407ULL;
        std::swap(order[i - 1], order[(state >> 33) % i]);
    }
    RationalPolyhedron out(p.ambient_dim());
    for (const auto& eq : p.equalities())
        out.add_equality(eq.normal, eq.offset);
    for (std::size_t i : order)
        out.add_inequality(p.inequalities()[i].normal, p.inequalities()[i].offset,
                           p.strict_flags()[i]);
    return out;
}

}  // namespace

void set_pivot_seed(std::optional<unsigned> seed) {
    g_pivot_seed = seed;
}

std::optional<unsigned> pivot_seed() {
    return g_pivot_seed;
}

std::optional<std::vector<Rational>> relative_interior_point(const RationalPolyhedron& p_in) {
    RationalPolyhedron p = permuted_for_seed(p_in);
    if (!is_feasible(p, false))
        return std::nullopt;
    auto tight = implied_tight(p);
    bool any_loose = false;
    for (bool t : tight)
        any_loose = any_loose || !t;
    if (!any_loose)
        return is_feasible(p, false);
    Assembled a = assemble(p, true, [&] {
        std::vector<bool> rows(tight.size());
        for (std::size_t i = 0; i < tight.size(); ++i)
            rows[i] = !tight[i];
        return rows;
    }());
    a.prob.objective[a.eps_col] = -1;
    auto res = solve_standard(a.prob);
    if (res.status != LpStatus::optimal || res.y[a.eps_col] <= 0)
        return std::nullopt;  // cannot happen for nonempty p
    return extract_point(a, res.y);
}

bool contains(const RationalPolyhedron& outer, const RationalPolyhedron& inner) {
    if (outer.ambient_dim() != inner.ambient_dim())
        throw std::invalid_argument("ambient dimension mismatch");
    if (!is_feasible(inner, false))
        return true;
    for (const auto& eq : outer.equalities()) {
        auto mx = optimize(inner, eq.normal, true);
        if (mx.status != LpStatus::optimal || mx.value != eq.offset)
            return false;
        auto mn = optimize(inner, eq.normal, false);
        if (mn.status != LpStatus::optimal || mn.value != eq.offset)
            return false;
    }
    for (const auto& c : outer.inequalities()) {
        auto mn = optimize(inner, c.normal, false);
        if (mn.status != LpStatus::optimal || mn.value < c.offset)
            return false;
    }
    return true;
}

bool equal_as_sets(const RationalPolyhedron& a, const RationalPolyhedron& b) {
    return contains(a, b) && contains(b, a);
}

ComplexReport complex_dimension_and_purity(const PolyhedralComplex& c) {
    ComplexReport report;
    report.cell_dims.reserve(c.cells.size());
    for (const auto& cell : c.cells)
        report.cell_dims.push_back(dimension(cell));
    for (std::size_t i = 0; i < c.cells.size(); ++i) {
        if (report.cell_dims[i] < 0)
            continue;  // empty cells are never maximal
        bool maximal = true;
        for (std::size_t j = 0; j < c.cells.size() && maximal; ++j) {
            if (i == j || report.cell_dims[j] < report.cell_dims[i])
                continue;
            if (contains(c.cells[j], c.cells[i]) && !contains(c.cells[i], c.cells[j]))
                maximal = false;
        }
        if (maximal)
            report.maximal.push_back(static_cast<int>(i));
    }
    report.dim = -1;
    for (int idx : report.maximal)
        report.dim = std::max(report.dim, report.cell_dims[static_cast<std::size_t>(idx)]);
    report.pure = true;
    for (int idx : report.maximal)
        report.pure = report.pure && report.cell_dims[static_cast<std::size_t>(idx)] == report.dim;
    return report;
}

namespace {

RationalPolyhedron intersect(const RationalPolyhedron& a, const RationalPolyhedron& b) {
    RationalPolyhedron out = a.closure();
    for (const auto& eq : b.equalities())
        out.add_equality(eq.normal, eq.offset);
    for (const auto& c : b.inequalities())
        out.add_inequality(c.normal, c.offset);
    return out;
}

// Smallest face of p containing q (q nonempty, q subset of p): turn every
// inequality of p that is tight on q into an equality.
RationalPolyhedron face_hull(const RationalPolyhedron& p, const RationalPolyhedron& q) {
    RationalPolyhedron out(p.ambient_dim());
    for (const auto& eq : p.equalities())
        out.add_equality(eq.normal, eq.offset);
    for (const auto& c : p.inequalities()) {
        auto mx = optimize(q, c.normal, true);
        bool tight = mx.status == LpStatus::optimal && mx.value == c.offset;
        if (tight)
            out.add_equality(c.normal, c.offset);
        else
            out.add_inequality(c.normal, c.offset);
    }
    return out;
}

}  // namespace

bool complex_intersections_are_faces(const PolyhedralComplex& c) {
    for (std::size_t i = 0; i < c.cells.size(); ++i) {
        for (std::size_t j = i + 1; j < c.cells.size(); ++j) {
            RationalPolyhedron meet = intersect(c.cells[i], c.cells[j]);
            if (!is_feasible(meet, false))
                continue;
            if (!equal_as_sets(face_hull(c.cells[i], meet), meet))
                return false;
            if (!equal_as_sets(face_hull(c.cells[j], meet), meet))
                return false;
        }
    }
    return true;
}

std::size_t rational_rref(std::vector<std::vector<Rational>>& rows, std::size_t width,
                          bool rightmost_pivots) {
    return echelonize(rows, width, rightmost_pivots);
}

std::optional<SkeletonPiece> skeleton_piece(const RationalPolyhedron& p) {
    auto interior = relative_interior_point(p);
    if (!interior)
        return std::nullopt;
    int dim = dimension(p);
    if (dim > 1)
        return std::nullopt;
    SkeletonPiece piece;
    if (dim == 0) {
        piece.kind = SkeletonPiece::Kind::point;
        piece.vertices.push_back(*interior);
        return piece;
    }
    // 1-dimensional: direction = kernel of the affine hull equations
    auto hull = affine_hull(p);
    std::size_t d = static_cast<std::size_t>(p.ambient_dim());
    std::vector<std::vector<Rational>> rows;
    for (const auto& eq : hull) {
        std::vector<Rational> row(eq.normal);
        rows.push_back(std::move(row));
    }
    std::size_t rank = echelonize(rows, d, false);
    // find the free column and build the kernel vector
    std::vector<bool> pivot_col(d, false);
    std::vector<std::size_t> pivot_of_row(rank, d);
    for (std::size_t i = 0; i < rank; ++i) {
        for (std::size_t j = 0; j < d; ++j) {
            if (rows[i][j] != 0) {
                pivot_col[j] = true;
                pivot_of_row[i] = j;
                break;
            }
        }
    }
    std::vector<Rational> dir(d, Rational(0));
    for (std::size_t j = 0; j < d; ++j) {
        if (!pivot_col[j]) {
            dir[j] = 1;
            for (std::size_t i = 0; i < rank; ++i)
                dir[pivot_of_row[i]] = -rows[i][j];
            break;
        }
    }
    // canonical sign: first nonzero coordinate positive
    for (std::size_t j = 0; j < d; ++j) {
        if (dir[j] != 0) {
            if (dir[j] < 0)
                for (auto& v : dir)
                    v = -v;
            break;
        }
    }
    auto mx = optimize(p, dir, true);
    auto mn = optimize(p, dir, false);
    if (mx.status == LpStatus::optimal && mn.status == LpStatus::optimal) {
        piece.kind = SkeletonPiece::Kind::segment;
        piece.vertices.push_back(mn.point);
        piece.vertices.push_back(mx.point);
    } else if (mx.status == LpStatus::optimal) {
        piece.kind = SkeletonPiece::Kind::ray;
        piece.vertices.push_back(mx.point);
        for (auto& v : dir)
            v = -v;
        piece.direction = dir;
    } else if (mn.status == LpStatus::optimal) {
        piece.kind = SkeletonPiece::Kind::ray;
        piece.vertices.push_back(mn.point);
        piece.direction = dir;
    } else {
        piece.kind = SkeletonPiece::Kind::line;
        piece.base_point = *interior;
        piece.direction = dir;
    }
    return piece;
}

}  // namespace lextrop
