#include "lextrop/render.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <set>
#include <sstream>

namespace lextrop {

std::string weight_name(int var, int stage) {
    return "w" + std::to_string(var + 1) + std::to_string(stage);
}

namespace {

// affine expression sum_j coeffs[j] * names[j] + constant
std::string render_affine(const std::map<std::size_t, Rational>& coeffs, const Rational& constant,
                          const std::vector<std::string>& names) {
    std::ostringstream out;
    bool first = true;
    auto emit = [&](bool negative, const std::string& body) {
        if (first) {
            out << (negative ? "-" : "") << body;
            first = false;
        } else {
            out << (negative ? " - " : " + ") << body;
        }
    };
    for (const auto& [col, coeff] : coeffs) {
        if (coeff == 0)
            continue;
        Rational c = coeff < 0 ? Rational(-coeff) : coeff;
        std::string body;
        if (c == 1)
            body = names[col];
        else if (c.get_num() == 1)
            body = names[col] + "/" + c.get_den().get_str();
        else
            body = rational_to_string(c) + "*" + names[col];
        emit(coeff < 0, body);
    }
    if (constant != 0 || first) {
        Rational c = constant < 0 ? Rational(-constant) : constant;
        emit(constant < 0, rational_to_string(c));
    }
    return out.str();
}

struct Bound {
    Rational value;
    bool strict = false;
    bool present = false;

    void tighten_lower(const Rational& v, bool s) {
        if (!present || v > value || (v == value && s)) {
            value = v;
            strict = s;
            present = true;
        }
    }
    void tighten_upper(const Rational& v, bool s) {
        if (!present || v < value || (v == value && s)) {
            value = v;
            strict = s;
            present = true;
        }
    }
};

}  // namespace

std::string render_conditions(const RationalPolyhedron& p, const std::vector<std::string>& names) {
    std::size_t d = static_cast<std::size_t>(p.ambient_dim());

    // solved equality system, pivoting on the latest variables
    std::vector<std::vector<Rational>> rows;
    for (const auto& eq : p.equalities()) {
        std::vector<Rational> row(eq.normal);
        row.push_back(eq.offset);
        rows.push_back(std::move(row));
    }
    std::size_t rank = rational_rref(rows, d, true);
    rows.resize(rank);

    std::vector<std::size_t> pivot_of_row(rank, d);
    std::vector<bool> is_pivot(d, false);
    for (std::size_t i = 0; i < rank; ++i) {
        for (std::size_t j = d; j-- > 0;) {
            if (rows[i][j] != 0 && !is_pivot[j]) {
                // rightmost nonzero entry not already claimed is this row's pivot
                pivot_of_row[i] = j;
                is_pivot[j] = true;
                break;
            }
        }
    }

    // variable chains w_a = w_b and constant pins w_a = c
    std::vector<std::size_t> chain_parent(d);
    for (std::size_t j = 0; j < d; ++j)
        chain_parent[j] = j;
    std::function<std::size_t(std::size_t)> find = [&](std::size_t j) {
        return chain_parent[j] == j ? j : chain_parent[j] = find(chain_parent[j]);
    };
    std::map<std::size_t, Rational> pinned;  // chain root -> constant
    std::vector<std::string> general_equalities;

    for (std::size_t i = 0; i < rank; ++i) {
        std::size_t pv = pivot_of_row[i];
        std::map<std::size_t, Rational> others;
        for (std::size_t j = 0; j < d; ++j)
            if (j != pv && rows[i][j] != 0)
                others[j] = rows[i][j];
        Rational pivot_coeff = rows[i][pv];
        if (others.empty()) {
            pinned[find(pv)] = rows[i][d] / pivot_coeff;
            continue;
        }
        if (others.size() == 1) {
            auto [q, cq] = *others.begin();
            if (rows[i][d] == 0 && cq == -pivot_coeff) {
                std::size_t ra = find(pv), rb = find(q);
                if (ra != rb)
                    chain_parent[std::max(ra, rb)] = std::min(ra, rb);
                continue;
            }
        }
        // solved form: pivot = (offset - rest) / pivot_coeff
        std::map<std::size_t, Rational> rhs;
        for (const auto& [j, c] : others)
            rhs[j] = -c / pivot_coeff;
        general_equalities.push_back(names[pv] + " = " +
                                     render_affine(rhs, rows[i][d] / pivot_coeff, names));
    }

    // inequalities reduced modulo the solved equalities
    std::set<std::pair<std::vector<Rational>, std::pair<Rational, bool>>> reduced;
    const auto& flags = p.strict_flags();
    for (std::size_t k = 0; k < p.inequalities().size(); ++k) {
        std::vector<Rational> a(p.inequalities()[k].normal);
        Rational b = p.inequalities()[k].offset;
        for (std::size_t i = 0; i < rank; ++i) {
            std::size_t pv = pivot_of_row[i];
            if (a[pv] == 0)
                continue;
            Rational f = a[pv] / rows[i][pv];
            for (std::size_t j = 0; j < d; ++j)
                a[j] -= f * rows[i][j];
            b -= f * rows[i][d];
        }
        bool all_zero = std::all_of(a.begin(), a.end(), [](const Rational& q) { return q == 0; });
        if (all_zero)
            continue;
        // primitive positive scaling
        mpz_class scale = 1;
        for (const auto& q : a)
            scale = scale / mpz_class(gcd(scale, q.get_den())) * q.get_den();
        mpz_class g = 0;
        for (const auto& q : a)
            g = gcd(g, mpz_class(q.get_num() * (scale / q.get_den())));
        Rational factor = Rational(scale) / Rational(g);
        for (auto& q : a)
            q *= factor;
        b *= factor;
        reduced.insert({a, {b, flags[k]}});
    }

    // interval bounds for single-variable constraints, raw text otherwise
    std::map<std::size_t, std::pair<Bound, Bound>> bounds;  // var -> (lower, upper)
    std::vector<std::string> raw;
    std::set<std::size_t> mentioned;
    for (const auto& [a, rhs] : reduced) {
        const auto& [b, strict] = rhs;
        std::size_t nonzero = 0, var = 0;
        for (std::size_t j = 0; j < d; ++j) {
            if (a[j] != 0) {
                ++nonzero;
                var = j;
            }
        }
        if (nonzero == 1) {
            Rational v = b / a[var];
            if (a[var] > 0)
                bounds[var].first.tighten_lower(v, strict);
            else
                bounds[var].second.tighten_upper(v, strict);
            mentioned.insert(find(var));
            continue;
        }
        std::map<std::size_t, Rational> coeffs;
        for (std::size_t j = 0; j < d; ++j) {
            if (a[j] != 0) {
                coeffs[j] = a[j];
                mentioned.insert(find(j));
            }
        }
        raw.push_back(render_affine(coeffs, Rational(0), names) + (strict ? " > " : " >= ") +
                      rational_to_string(b));
    }

    // assemble: chains (with pins or attached bounds), then leftover
    // intervals, raw constraints, and unconstrained variables
    std::vector<std::string> pieces;
    std::map<std::size_t, std::vector<std::size_t>> chains;
    for (std::size_t j = 0; j < d; ++j)
        chains[find(j)].push_back(j);

    // chains pinned to the same constant display as one run: "w12 = w22 = 0"
    std::map<Rational, std::vector<std::size_t>> pin_groups;
    for (const auto& [root, value] : pinned)
        pin_groups[value].push_back(root);

    std::set<std::size_t> rendered_vars;
    for (const auto& [value, roots] : pin_groups) {
        std::vector<std::size_t> members;
        for (std::size_t root : roots)
            for (std::size_t member : chains[root])
                members.push_back(member);
        std::sort(members.begin(), members.end());
        std::string body = names[members[0]];
        for (std::size_t k = 1; k < members.size(); ++k)
            body += " = " + names[members[k]];
        body += " = " + rational_to_string(value);
        pieces.push_back(body);
        for (std::size_t member : members)
            rendered_vars.insert(member);
    }

    for (const auto& [root, members] : chains) {
        if (rendered_vars.count(root))
            continue;
        bool is_chain = members.size() > 1;
        auto bound_it = bounds.find(root);
        bool has_bounds = bound_it != bounds.end();
        if (!is_chain && !has_bounds)
            continue;
        std::string body = names[members[0]];
        for (std::size_t k = 1; k < members.size(); ++k)
            body += " = " + names[members[k]];
        if (has_bounds) {
            const auto& [lo, hi] = bound_it->second;
            if (lo.present && hi.present && lo.value == hi.value && !lo.strict && !hi.strict) {
                body += " = " + rational_to_string(lo.value);
            } else if (lo.present && hi.present) {
                body = rational_to_string(lo.value) + (lo.strict ? " < " : " <= ") + body +
                       (hi.strict ? " < " : " <= ") + rational_to_string(hi.value);
            } else if (lo.present) {
                body += (lo.strict ? " > " : " >= ") + rational_to_string(lo.value);
            } else if (hi.present) {
                body += (hi.strict ? " < " : " <= ") + rational_to_string(hi.value);
            }
        }
        pieces.push_back(body);
        for (std::size_t member : members)
            rendered_vars.insert(member);
    }
    for (const auto& s : general_equalities)
        pieces.push_back(s);
    for (const auto& s : raw)
        pieces.push_back(s);
    // variables not touched by any constraint
    for (std::size_t j = 0; j < d; ++j) {
        if (is_pivot[j] || rendered_vars.count(j) || mentioned.count(find(j)))
            continue;
        bool in_general = false;
        for (std::size_t i = 0; i < rank && !in_general; ++i)
            in_general = rows[i][j] != 0;
        if (!in_general)
            pieces.push_back(names[j] + " in R");
    }

    if (pieces.empty())
        return "no constraints";
    std::string out = pieces[0];
    for (std::size_t i = 1; i < pieces.size(); ++i)
        out += ", " + pieces[i];
    return out;
}

std::string symbolic_twist_str(const KPolynomial& g, bool flip_sign) {
    int h = g.tower().height();
    if (h == 0)
        return g.str();
    std::ostringstream out;
    bool first = true;
    // term order matching KPolynomial::str: graded, then lex descending
    std::vector<std::vector<long>> supp = g.support();
    auto total = [](const std::vector<long>& d) {
        long t = 0;
        for (long e : d)
            t += e;
        return t;
    };
    std::sort(supp.begin(), supp.end(), [&](const auto& a, const auto& b) {
        if (total(a) != total(b))
            return total(a) > total(b);
        return a > b;
    });
    for (const auto& d : supp) {
        const FieldElement& coeff = g.coefficient(d);

        // the monomial part in the torus variables
        std::string mono;
        for (std::size_t i = 0; i < d.size(); ++i) {
            if (d[i] == 0)
                continue;
            if (!mono.empty())
                mono += "*";
            mono += g.vars()[i];
            if (d[i] != 1)
                mono += "^" + std::to_string(d[i]);
        }

        // coefficient terms, with the symbolic stage twist folded into the
        // uniformizer exponents; flip tracks an extracted leading sign
        auto coeff_term = [&](const std::vector<Rational>& exps, const Rational& c,
                              bool flip) -> std::pair<bool, std::string> {
            Rational value = flip ? Rational(-c) : c;
            bool neg = value < 0;
            Rational cabs = neg ? Rational(-value) : value;
            std::vector<std::string> factors;
            for (int s = 1; s <= h; ++s) {
                std::map<std::size_t, Rational> sym;
                for (std::size_t i = 0; i < d.size(); ++i)
                    if (d[i] != 0)
                        sym[i] = Rational(flip_sign ? -d[i] : d[i]);
                Rational cpart = exps[static_cast<std::size_t>(s - 1)];
                if (sym.empty() && cpart == 0)
                    continue;
                std::vector<std::string> names;
                for (std::size_t i = 0; i < d.size(); ++i)
                    names.push_back(weight_name(static_cast<int>(i), s));
                std::string e = render_affine(sym, cpart, names);
                bool simple = e.find_first_of("+- */") == std::string::npos;
                factors.push_back(g.tower().uniformizer_name(s) + "^" +
                                  (simple ? e : "(" + e + ")"));
            }
            if (factors.empty() || cabs != 1)
                factors.insert(factors.begin(), rational_to_string(cabs));
            std::string body = factors[0];
            for (std::size_t i = 1; i < factors.size(); ++i)
                body += "*" + factors[i];
            return {neg, body};
        };

        auto terms = coeff.terms();
        bool neg;
        std::string body;
        if (terms.size() == 1) {
            auto [n1, b1] = coeff_term(terms[0].first, terms[0].second, false);
            neg = n1;
            body = b1;
        } else {
            // factor out the sign of the first term: "-(t1 + t1^2)*x" style
            neg = terms[0].second < 0;
            std::string inner;
            for (std::size_t k = 0; k < terms.size(); ++k) {
                auto [nk, bk] = coeff_term(terms[k].first, terms[k].second, neg);
                if (k == 0)
                    inner += (nk ? "-" : "") + bk;
                else
                    inner += (nk ? " - " : " + ") + bk;
            }
            body = "(" + inner + ")";
        }
        if (!mono.empty())
            body = body == "1" ? mono : body + "*" + mono;

        if (first) {
            out << (neg ? "-" : "") << body;
            first = false;
        } else {
            out << (neg ? " - " : " + ") << body;
        }
    }
    return out.str();
}

nlohmann::json json_rational(const Rational& q) {
    return rational_to_string(q);
}

nlohmann::json json_lexvalue(const LexValue& v) {
    return v.str();
}

nlohmann::json json_tower(const FieldTower& t) {
    nlohmann::json j;
    j["base"] = t.base().str();
    j["height"] = t.height();
    j["uniformizers"] = t.uniformizer_names();
    j["ramification"] = t.ramification();
    return j;
}

nlohmann::json json_polyhedron(const RationalPolyhedron& p) {
    nlohmann::json j;
    auto constraint_row = [](const LinearConstraint& c) {
        nlohmann::json row = nlohmann::json::array();
        for (const auto& q : c.normal)
            row.push_back(json_rational(q));
        row.push_back(json_rational(c.offset));
        return row;
    };
    j["equalities"] = nlohmann::json::array();
    for (const auto& eq : p.equalities())
        j["equalities"].push_back(constraint_row(eq));
    j["inequalities"] = nlohmann::json::array();
    for (const auto& c : p.inequalities())
        j["inequalities"].push_back(constraint_row(c));
    j["strict"] = p.strict_flags();
    j["dim"] = dimension(p);
    return j;
}

nlohmann::json json_complex(const PolyhedralComplex& c, const ComplexReport& report) {
    nlohmann::json j;
    j["ambient_dim"] = c.ambient_dim;
    j["cells"] = nlohmann::json::array();
    for (const auto& cell : c.cells)
        j["cells"].push_back(json_polyhedron(cell));
    j["face_of"] = nlohmann::json::array();
    for (const auto& [a, b] : c.face_of)
        j["face_of"].push_back(nlohmann::json::array({a, b}));
    j["maximal"] = report.maximal;
    j["pure"] = report.pure;
    j["dim"] = report.dim;
    return j;
}

namespace {

nlohmann::json json_fibered_cell(const FiberedCell& cell, int stage, int m) {
    nlohmann::json j;
    j["stage"] = stage;
    j["cell"] = json_polyhedron(cell.geometry.cell);
    j["stratum"] = json_polyhedron(cell.geometry.stratum);
    j["tied_support"] = cell.geometry.tied_support;
    nlohmann::json witness = nlohmann::json::array();
    for (const auto& q : cell.geometry.witness)
        witness.push_back(json_rational(q));
    j["witness"] = witness;
    std::vector<std::string> names;
    for (int i = 0; i < m; ++i)
        names.push_back(weight_name(i, stage));
    j["condition"] = render_conditions(cell.geometry.stratum, names);
    j["residual"] = cell.residual.str();
    j["children"] = nlohmann::json::array();
    for (const auto& child : cell.children) {
        for (const auto& sub : child.cells)
            j["children"].push_back(json_fibered_cell(sub, child.stage, child.m));
    }
    return j;
}

}  // namespace

nlohmann::json json_fibered(const FiberedComplex& fc) {
    nlohmann::json j;
    j["stage"] = fc.stage;
    j["cells"] = nlohmann::json::array();
    for (const auto& cell : fc.cells)
        j["cells"].push_back(json_fibered_cell(cell, fc.stage, fc.m));
    return j;
}

nlohmann::json json_trop_report(const KPolynomial& f, const TropReport& report,
                                const std::string& convention) {
    nlohmann::json j;
    j["tower"] = json_tower(f.tower());
    j["polynomial"] = f.str();
    j["variables"] = f.vars();
    j["convention"] = convention;
    j["fibered"] = json_fibered(report.fibered);
    PolyhedralComplex flat = report.flattened.to_complex();
    j["flattened"] = json_complex(flat, report.complex_report);
    nlohmann::json strata = nlohmann::json::array();
    for (const auto& cell : report.flattened.cells) {
        nlohmann::json s;
        s["stratum"] = json_polyhedron(cell.stratum);
        s["leaf_form"] = cell.leaf_form.str();
        s["path"] = cell.path;
        s["dim"] = cell.dim;
        strata.push_back(std::move(s));
    }
    j["strata"] = strata;
    j["dim"] = report.complex_report.dim;
    j["expected_dim"] = report.expected_dim;
    j["dim_matches"] = report.dim_matches;
    j["pure"] = report.complex_report.pure;
    return j;
}

nlohmann::json json_root_valuations(const RootValuationReport& report) {
    nlohmann::json j;
    j["roots_at_zero"] = report.roots_at_zero;
    j["valuations"] = nlohmann::json::array();
    for (const auto& [v, mult] : report.valuations)
        j["valuations"].push_back({{"valuation", v.str()}, {"multiplicity", mult}});
    j["edges"] = nlohmann::json::array();
    for (const auto& e : report.edges) {
        nlohmann::json edge;
        edge["from"] = {e.from_x, e.from_v.str()};
        edge["to"] = {e.to_x, e.to_v.str()};
        edge["slope"] = e.slope.str();
        edge["multiplicity"] = e.multiplicity;
        j["edges"].push_back(std::move(edge));
    }
    return j;
}

nlohmann::json json_witness(const WitnessCertificate& cert) {
    nlohmann::json j;
    j["b"] = cert.b;
    j["univariate"] = cert.univariate.str();
    nlohmann::json edge;
    edge["from"] = {cert.zero_edge.from_x, cert.zero_edge.from_v.str()};
    edge["to"] = {cert.zero_edge.to_x, cert.zero_edge.to_v.str()};
    edge["slope"] = cert.zero_edge.slope.str();
    edge["multiplicity"] = cert.zero_edge.multiplicity;
    j["zero_edge"] = edge;
    return j;
}

namespace {

struct PlotSink {
    std::ostringstream out;
    std::vector<std::vector<Rational>> vertices;

    std::size_t vertex(const std::vector<Rational>& v) {
        for (std::size_t i = 0; i < vertices.size(); ++i)
            if (vertices[i] == v)
                return i;
        vertices.push_back(v);
        out << "vertex " << vertices.size() - 1;
        for (const auto& q : v)
            out << " " << rational_to_string(q);
        out << "\n";
        return vertices.size() - 1;
    }

    void piece(const SkeletonPiece& p) {
        switch (p.kind) {
            case SkeletonPiece::Kind::point:
                vertex(p.vertices[0]);
                break;
            case SkeletonPiece::Kind::segment: {
                std::size_t a = vertex(p.vertices[0]);
                std::size_t b = vertex(p.vertices[1]);
                out << "edge " << a << " " << b << "\n";
                break;
            }
            case SkeletonPiece::Kind::ray: {
                std::size_t a = vertex(p.vertices[0]);
                out << "ray " << a;
                for (const auto& q : *p.direction)
                    out << " " << rational_to_string(q);
                out << "\n";
                break;
            }
            case SkeletonPiece::Kind::line: {
                std::size_t a = vertex(*p.base_point);
                out << "line " << a;
                for (const auto& q : *p.direction)
                    out << " " << rational_to_string(q);
                out << "\n";
                break;
            }
        }
    }
};

std::vector<Rational> project(const std::vector<Rational>& v, std::size_t a, std::size_t b) {
    return {v[a], v[b]};
}

}  // namespace

std::string plot_data_flattened(const FlattenedComplex& fc) {
    if (fc.ambient_dim <= 3) {
        PlotSink sink;
        for (const auto& cell : fc.cells) {
            if (cell.dim > 1)
                continue;
            auto piece = skeleton_piece(cell.closure);
            if (piece)
                sink.piece(*piece);
        }
        return sink.out.str();
    }
    if (fc.ambient_dim == 4 && fc.n == 2 && fc.m == 2) {
        // axis-pair projections: stage planes, then variable planes
        std::vector<std::pair<std::size_t, std::size_t>> pairs = {
            {0, 2}, {1, 3}, {0, 1}, {2, 3}};
        std::ostringstream out;
        for (auto [a, b] : pairs) {
            out << "# projection " << weight_name(static_cast<int>(a) / fc.n, 1 + static_cast<int>(a) % fc.n)
                << " " << weight_name(static_cast<int>(b) / fc.n, 1 + static_cast<int>(b) % fc.n)
                << "\n";
            PlotSink sink;
            for (const auto& cell : fc.cells) {
                if (cell.dim > 1)
                    continue;
                auto piece = skeleton_piece(cell.closure);
                if (!piece)
                    continue;
                SkeletonPiece proj = *piece;
                for (auto& v : proj.vertices)
                    v = project(v, a, b);
                if (proj.direction) {
                    auto dir = project(*proj.direction, a, b);
                    bool zero = dir[0] == 0 && dir[1] == 0;
                    if (zero) {
                        proj.kind = SkeletonPiece::Kind::point;
                        if (proj.vertices.empty() && proj.base_point)
                            proj.vertices.push_back(project(*proj.base_point, a, b));
                        proj.direction.reset();
                        proj.base_point.reset();
                    } else {
                        proj.direction = dir;
                        if (proj.base_point)
                            proj.base_point = project(*proj.base_point, a, b);
                    }
                }
                if (proj.kind == SkeletonPiece::Kind::segment &&
                    proj.vertices[0] == proj.vertices[1]) {
                    proj.kind = SkeletonPiece::Kind::point;
                    proj.vertices.resize(1);
                }
                sink.piece(proj);
            }
            out << sink.out.str();
        }
        return out.str();
    }
    throw std::invalid_argument("plot data needs nm <= 3 or the 2x2 case (nm = 4)");
}

std::string plot_data_newton(const ExtendedNewtonPolytope& p, const std::vector<SlopeEdge>& hull) {
    if (p.n > 2)
        throw std::invalid_argument("newton plot data needs tower height <= 2");
    std::vector<NewtonGenerator> gens = p.generators;
    std::sort(gens.begin(), gens.end(),
              [](const NewtonGenerator& a, const NewtonGenerator& b) { return a.d[0] < b.d[0]; });
    std::ostringstream out;
    std::map<long, std::size_t> index_of;
    for (std::size_t i = 0; i < gens.size(); ++i) {
        index_of[gens[i].d[0]] = i;
        out << "point " << i << " " << gens[i].d[0];
        for (int s = p.n; s >= 1; --s)
            out << " " << rational_to_string(gens[i].v.coord(s));
        out << "\n";
    }
    for (const auto& e : hull)
        out << "edge " << index_of.at(e.from_x) << " " << index_of.at(e.to_x) << "\n";
    return out.str();
}

}  // namespace lextrop
