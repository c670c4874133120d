#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "lextrop/rational.hpp"

namespace lextrop {

// <normal, x> >= offset (inequality) or <normal, x> = offset (equality).
struct LinearConstraint {
    std::vector<Rational> normal;
    Rational offset;
};

// A rational polyhedron given by equalities and inequalities. Inequalities
// carry a strict flag used for relative-interior queries; closure queries
// ignore it. The representation may be redundant but all operations are
// exact.
class RationalPolyhedron {
public:
    explicit RationalPolyhedron(int ambient_dim);

    int ambient_dim() const { return dim_; }
    void add_equality(std::vector<Rational> normal, Rational offset);
    void add_inequality(std::vector<Rational> normal, Rational offset, bool strict = false);

    const std::vector<LinearConstraint>& equalities() const { return eqs_; }
    const std::vector<LinearConstraint>& inequalities() const { return ineqs_; }
    const std::vector<bool>& strict_flags() const { return strict_; }

    RationalPolyhedron closure() const;              // strict flags cleared
    RationalPolyhedron with_all_strict() const;      // every inequality strict

    bool contains_point(const std::vector<Rational>& x, bool honor_strict) const;

private:
    int dim_;
    std::vector<LinearConstraint> eqs_;
    std::vector<LinearConstraint> ineqs_;
    std::vector<bool> strict_;
};

// Exact feasibility; a rational witness when nonempty. With honor_strict the
// strict-flagged inequalities must hold strictly.
std::optional<std::vector<Rational>> is_feasible(const RationalPolyhedron& p, bool honor_strict);

enum class LpStatus { optimal, unbounded, infeasible };

struct LpResult {
    LpStatus status;
    Rational value;                // meaningful for optimal
    std::vector<Rational> point;   // meaningful for optimal
};

// Exact optimization of <objective, x> over the closure of p.
LpResult optimize(const RationalPolyhedron& p, const std::vector<Rational>& objective,
                  bool maximize);

// Dimension of p (-1 when empty): ambient dimension minus the rank of the
// implicit equality system.
int dimension(const RationalPolyhedron& p);

// Minimal equality system cutting out the affine hull. Errors on empty input.
std::vector<LinearConstraint> affine_hull(const RationalPolyhedron& p);

// A rational point in the relative interior (all non-implied inequalities
// strict); nullopt when empty. Deterministic for a fixed constraint order.
std::optional<std::vector<Rational>> relative_interior_point(const RationalPolyhedron& p);

// Debugging aid: when set, relative-interior searches run with a seeded
// permutation of the inequality order instead of the canonical one. Results
// stay valid; witness points may differ.
void set_pivot_seed(std::optional<unsigned> seed);
std::optional<unsigned> pivot_seed();

// closure(inner) subset of closure(outer)
bool contains(const RationalPolyhedron& outer, const RationalPolyhedron& inner);
bool equal_as_sets(const RationalPolyhedron& a, const RationalPolyhedron& b);

struct PolyhedralComplex {
    int ambient_dim = 0;
    std::vector<RationalPolyhedron> cells;
    // (i, j) meaning: cell i is a face of cell j
    std::vector<std::pair<int, int>> face_of;
};

struct ComplexReport {
    int dim = -1;
    bool pure = true;
    std::vector<int> maximal;    // indices of inclusion-maximal cells
    std::vector<int> cell_dims;  // dimension per cell
};

ComplexReport complex_dimension_and_purity(const PolyhedralComplex& c);

// On-demand desk-scale validation that pairwise intersections of listed
// cells are faces of each.
bool complex_intersections_are_faces(const PolyhedralComplex& c);

// Exact row reduction over Q on rows of the given width (trailing columns
// ride along). With rightmost_pivots, pivot columns are chosen right to
// left, which leaves the earliest variables free in solved forms.
std::size_t rational_rref(std::vector<std::vector<Rational>>& rows, std::size_t width,
                          bool rightmost_pivots);

// Geometry of a cell of dimension <= 1, for plot output.
struct SkeletonPiece {
    enum class Kind { point, segment, ray, line };
    Kind kind = Kind::point;
    std::vector<std::vector<Rational>> vertices;      // 1 or 2 entries
    std::optional<std::vector<Rational>> direction;   // for ray/line
    std::optional<std::vector<Rational>> base_point;  // for line
};

std::optional<SkeletonPiece> skeleton_piece(const RationalPolyhedron& p);

}  // namespace lextrop
