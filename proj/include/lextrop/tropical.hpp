#pragma once

#include <stdexcept>
#include <string>
#include <vector>

#include "lextrop/kpolynomial.hpp"
#include "lextrop/newton.hpp"
#include "lextrop/polyhedra.hpp"

namespace lextrop {

// Thrown when two routes that must agree by construction disagree (tie
// condition vs initial form, or a missing slope-zero edge in a certified
// witness). Mapped to a dedicated CLI exit code.
class InternalInconsistencyError : public std::logic_error {
public:
    explicit InternalInconsistencyError(const std::string& what) : std::logic_error(what) {}
};

struct TropicalEvaluation {
    LexValue value;
    std::vector<std::vector<long>> achievers;  // support points attaining the minimum
};

// f^tau(u) = min over the support of nu(a_d) + <d, u>, with the achieving
// support points.
TropicalEvaluation trop_eval(const KPolynomial& f, const WeightMatrix& u);

// Membership in the tropical hypersurface. Computes both routes — the tie
// condition of trop_eval and non-monomiality of the initial form — and
// throws InternalInconsistencyError if they ever disagree.
bool is_in_trop(const KPolynomial& f, const WeightMatrix& w);

// One cell of a stage tie locus in weight space Q^m.
struct StageCell {
    RationalPolyhedron cell;     // closed
    RationalPolyhedron stratum;  // same constraints, inequalities strict
    std::vector<std::vector<long>> tied_support;  // maximal tie set; canonical cell key
    std::vector<Rational> witness;                // rational relative-interior point
};

// Tie locus of f seen through the t_stage-order of its coefficients only.
// With deepen_strata, the cell list is closed under intersection so that
// every stratum (every maximal tie set) appears; otherwise only the
// deduplicated pair cells are listed.
std::vector<StageCell> stage_tie_cells(const KPolynomial& f, int stage, bool deepen_strata);

struct Rank1Complex {
    PolyhedralComplex complex;
    std::vector<std::vector<std::vector<long>>> tied_sets;  // per cell
    std::vector<std::vector<Rational>> witnesses;           // per cell
};

// Classical tie-locus hypersurface complex of a polynomial over a height-1
// tower: one cell per deduplicated support pair, with face relations.
Rank1Complex rank1_hypersurface(const KPolynomial& g);

// The stage-wise tropicalization tree: stage-s cells fiber over stage-(s-1)
// complexes of their residual polynomials; leaves carry fully degenerate
// initial forms over the base field.
struct FiberedCell;

struct FiberedComplex {
    int stage = 0;
    int m = 0;
    std::vector<FiberedCell> cells;
};

struct FiberedCell {
    StageCell geometry;
    KPolynomial residual;                 // over the height-(stage-1) tower
    std::vector<FiberedComplex> children;  // empty for leaves, else one entry
};

FiberedComplex iterated_trop(const KPolynomial& f, long max_cells = 100000);

// A root-to-leaf cell of the flattened tropicalization in Q^{nm}
// (variable-major coordinates: all n stage coordinates of x1, then x2, ...).
struct FlatCell {
    RationalPolyhedron closure;
    RationalPolyhedron stratum;
    KPolynomial leaf_form;
    std::vector<int> path;                        // cell index per stage, outermost first
    std::vector<RationalPolyhedron> stage_cells;  // closed stage cells in Q^m
    std::vector<int> stage_dims;
    int dim = 0;
};

struct FlattenedComplex {
    int n = 0;
    int m = 0;
    int ambient_dim = 0;
    std::vector<FlatCell> cells;

    PolyhedralComplex to_complex() const;  // closures only
    // Dimension / purity / maximal cells, using the per-stage product
    // structure of the cells.
    ComplexReport report() const;
};

FlattenedComplex flatten(const FiberedComplex& fc, int m, int n);

struct TropReport {
    FiberedComplex fibered;
    FlattenedComplex flattened;
    ComplexReport complex_report;
    int expected_dim = 0;  // n(m-1)
    bool dim_matches = false;
    std::vector<int> deficient_maximal;  // maximal cells below the expected dimension
};

TropReport trop_report(const KPolynomial& f, long max_cells = 100000);

// Existence certificate for a point of the variety with valuation w: after
// twisting w to the origin, the univariate reduction along a deterministic
// generic direction has a bounded Newton-polytope edge of generalized
// slope zero.
struct WitnessCertificate {
    std::vector<long> b;
    KPolynomial univariate;  // f_b over the twisted coefficients
    SlopeEdge zero_edge;
};

WitnessCertificate root_witness(const KPolynomial& f, const WeightMatrix& w);

}  // namespace lextrop
