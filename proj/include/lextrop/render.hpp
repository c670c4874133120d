#pragma once

#include <string>
#include <vector>

#include <json.hpp>

#include "lextrop/newton.hpp"
#include "lextrop/tropical.hpp"

namespace lextrop {

// Weight coordinate name for torus variable var (0-based) at stage s: "w<i><s>".
std::string weight_name(int var, int stage);

// Human-readable description of a (stratum) polyhedron: solved equalities
// with variable chains merged, interval bounds for single free parameters,
// remaining constraints raw. Matches the style of the degeneration tables,
// e.g. "w12 = w22 < 0" or "w21 = w11/2 + 1/2, 1 < w11 < 2".
std::string render_conditions(const RationalPolyhedron& p, const std::vector<std::string>& names);

// A residual polynomial over a partially degenerated tower, rendered with
// the not-yet-applied stage twists shown symbolically: x with weight name
// w11 over QQ((t1)) renders as "t1^w11*x". flip_sign renders the twists for
// the opposite weight-sign convention.
std::string symbolic_twist_str(const KPolynomial& g, bool flip_sign = false);

nlohmann::json json_rational(const Rational& q);
nlohmann::json json_lexvalue(const LexValue& v);
nlohmann::json json_tower(const FieldTower& t);
nlohmann::json json_polyhedron(const RationalPolyhedron& p);
nlohmann::json json_complex(const PolyhedralComplex& c, const ComplexReport& report);
nlohmann::json json_fibered(const FiberedComplex& fc);
nlohmann::json json_trop_report(const KPolynomial& f, const TropReport& report,
                                const std::string& convention);
nlohmann::json json_root_valuations(const RootValuationReport& report);
nlohmann::json json_witness(const WitnessCertificate& cert);

// Plot data: indexed vertex records followed by edge/ray/line records, one
// per line. For nm = 4 the four axis-pair projections are emitted instead.
std::string plot_data_flattened(const FlattenedComplex& fc);
// Lifted support points (i, v_n [, v_{n-1}]) and the bounded lower-hull
// edges of a univariate polynomial, for towers of height <= 2.
std::string plot_data_newton(const ExtendedNewtonPolytope& p, const std::vector<SlopeEdge>& hull);

}  // namespace lextrop
