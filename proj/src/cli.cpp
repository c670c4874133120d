#include "lextrop/cli.hpp"

#include <ostream>
#include <sstream>

#include <CLI11.hpp>

#include "lextrop/parser.hpp"
#include "lextrop/render.hpp"
#include "lextrop/tropical.hpp"

namespace lextrop {

namespace {

struct Options {
    std::string tower_text = "QQ((t1))((t2))";
    std::string vars_text;
    std::string weight_text;
    std::string output = "table";
    std::string convention = "plus";
    long max_cells = 20000;
    long seed_pivot = 0;
    bool seed_set = false;
    std::string polynomial;

    bool minus() const { return convention == "paper-minus"; }
};

std::vector<std::string> split_commas(const std::string& text) {
    std::vector<std::string> out;
    std::size_t start = 0;
    while (true) {
        std::size_t comma = text.find(',', start);
        std::string piece =
            text.substr(start, comma == std::string::npos ? comma : comma - start);
        std::size_t a = piece.find_first_not_of(" \t");
        std::size_t b = piece.find_last_not_of(" \t");
        if (a != std::string::npos)
            out.push_back(piece.substr(a, b - a + 1));
        if (comma == std::string::npos)
            break;
        start = comma + 1;
    }
    return out;
}

struct Prepared {
    FieldTower tower;
    std::vector<std::string> vars;
    KPolynomial poly;
};

Prepared prepare(const Options& o, std::ostream& err) {
    FieldTower tower = parse_tower(o.tower_text);
    std::vector<std::string> vars =
        o.vars_text.empty() ? infer_variables(o.polynomial, tower) : split_commas(o.vars_text);
    KPolynomial poly = parse_polynomial(o.polynomial, tower, vars);
    if (poly.is_zero())
        err << "warning: zero polynomial\n";
    return Prepared{std::move(tower), std::move(vars), std::move(poly)};
}

std::string monomial_str(const std::vector<long>& d, const std::vector<std::string>& vars) {
    std::string out;
    for (std::size_t i = 0; i < d.size(); ++i) {
        if (d[i] == 0)
            continue;
        if (!out.empty())
            out += "*";
        out += vars[i];
        if (d[i] != 1)
            out += "^" + std::to_string(d[i]);
    }
    return out.empty() ? "1" : out;
}

// names of the flattened coordinates, variable-major
std::vector<std::string> flattened_names(int m, int n) {
    std::vector<std::string> names;
    for (int i = 0; i < m; ++i)
        for (int s = 1; s <= n; ++s)
            names.push_back(weight_name(i, s));
    return names;
}

std::vector<std::string> stage_names(int m, int stage) {
    std::vector<std::string> names;
    for (int i = 0; i < m; ++i)
        names.push_back(weight_name(i, stage));
    return names;
}

// coordinate reflection x -> -x, for the paper-minus weight convention
RationalPolyhedron reflect(const RationalPolyhedron& p) {
    RationalPolyhedron out(p.ambient_dim());
    for (const auto& eq : p.equalities()) {
        std::vector<Rational> normal(eq.normal);
        for (auto& q : normal)
            q = -q;
        out.add_equality(std::move(normal), eq.offset);
    }
    for (std::size_t i = 0; i < p.inequalities().size(); ++i) {
        std::vector<Rational> normal(p.inequalities()[i].normal);
        for (auto& q : normal)
            q = -q;
        out.add_inequality(std::move(normal), p.inequalities()[i].offset, p.strict_flags()[i]);
    }
    return out;
}

std::vector<Rational> reflect_point(std::vector<Rational> v) {
    for (auto& q : v)
        q = -q;
    return v;
}

void reflect_fibered(FiberedComplex& fc) {
    for (auto& cell : fc.cells) {
        cell.geometry.cell = reflect(cell.geometry.cell);
        cell.geometry.stratum = reflect(cell.geometry.stratum);
        cell.geometry.witness = reflect_point(cell.geometry.witness);
        for (auto& child : cell.children)
            reflect_fibered(child);
    }
}

void reflect_report(TropReport& report) {
    reflect_fibered(report.fibered);
    for (auto& cell : report.flattened.cells) {
        cell.closure = reflect(cell.closure);
        cell.stratum = reflect(cell.stratum);
        for (auto& sc : cell.stage_cells)
            sc = reflect(sc);
    }
}

int cmd_trop(const Options& o, std::ostream& out, std::ostream& err) {
    Prepared in = prepare(o, err);
    if (in.poly.is_zero()) {
        err << "error: tropicalization of the zero polynomial is undefined\n";
        return exit_failure;
    }
    if (is_monomial(in.poly))
        err << "warning: monomial input, tropicalization is empty\n";
    TropReport report = trop_report(in.poly, o.max_cells);
    if (o.minus())
        reflect_report(report);
    int n = in.tower.height();
    int m = in.poly.var_count();
    if (o.output == "json") {
        out << json_trop_report(in.poly, report, o.convention).dump(2) << "\n";
        return exit_ok;
    }
    if (o.output == "plot-data") {
        out << plot_data_flattened(report.flattened);
        return exit_ok;
    }
    auto names = flattened_names(m, n);
    out << "tower: " << in.tower.str() << "\n";
    out << "polynomial: " << in.poly.str() << "\n";
    out << "flattened dimension: " << report.complex_report.dim << " (expected "
        << report.expected_dim << ")\n";
    out << "pure: " << (report.complex_report.pure ? "yes" : "no") << "\n";
    out << "strata: " << report.flattened.cells.size() << ", maximal cells: "
        << report.complex_report.maximal.size() << "\n";
    for (int idx : report.complex_report.maximal) {
        const auto& cell = report.flattened.cells[static_cast<std::size_t>(idx)];
        out << "  [" << idx << "] dim " << cell.dim << ": "
            << render_conditions(cell.stratum, names) << "  ->  " << cell.leaf_form.str()
            << "\n";
    }
    if (!report.deficient_maximal.empty()) {
        out << "maximal cells below the expected dimension:";
        for (int idx : report.deficient_maximal)
            out << " [" << idx << "]";
        out << "\n";
    }
    return exit_ok;
}

struct TableRow {
    int stage;
    std::string condition;
    std::string degeneration;
    bool leaf;
};

void collect_rows(const FiberedComplex& fc, bool minus, std::vector<TableRow>& rows) {
    struct Frame {
        const FiberedCell* cell;
        std::string prefix;
    };
    std::vector<Frame> frontier;
    for (const auto& cell : fc.cells)
        frontier.push_back({&cell, ""});
    int stage = fc.stage;
    int m = fc.m;
    while (!frontier.empty()) {
        std::vector<Frame> next;
        for (const auto& frame : frontier) {
            std::string condition = render_conditions(frame.cell->geometry.stratum,
                                                      stage_names(m, stage));
            if (!frame.prefix.empty())
                condition = frame.prefix + ", " + condition;
            bool leaf = frame.cell->children.empty();
            rows.push_back(TableRow{stage, condition,
                                    symbolic_twist_str(frame.cell->residual, minus), leaf});
            for (const auto& child : frame.cell->children)
                for (const auto& sub : child.cells)
                    next.push_back({&sub, condition});
        }
        frontier = std::move(next);
        --stage;
    }
}

int cmd_table(const Options& o, std::ostream& out, std::ostream& err) {
    Prepared in = prepare(o, err);
    if (in.poly.is_zero()) {
        err << "error: degeneration table of the zero polynomial is undefined\n";
        return exit_failure;
    }
    if (is_monomial(in.poly))
        err << "warning: monomial input, table is empty\n";
    FiberedComplex fibered = iterated_trop(in.poly, o.max_cells);
    if (o.minus())
        reflect_fibered(fibered);
    std::vector<TableRow> rows;
    collect_rows(fibered, o.minus(), rows);
    if (o.output == "json") {
        nlohmann::json j = nlohmann::json::array();
        for (const auto& row : rows)
            j.push_back({{"stage", row.stage},
                         {"condition", row.condition},
                         {"degeneration", row.degeneration},
                         {"leaf", row.leaf}});
        out << j.dump(2) << "\n";
        return exit_ok;
    }
    if (o.output == "plot-data") {
        err << "error: table has no plot-data output\n";
        return exit_failure;
    }
    std::size_t width = 0;
    for (const auto& row : rows)
        width = std::max(width, row.condition.size());
    out << "condition | initial degeneration\n";
    for (const auto& row : rows) {
        out << row.condition;
        for (std::size_t i = row.condition.size(); i < width; ++i)
            out << ' ';
        out << " | " << row.degeneration << "\n";
    }
    return exit_ok;
}

int cmd_newton(const Options& o, std::ostream& out, std::ostream& err) {
    Prepared in = prepare(o, err);
    if (in.poly.var_count() != 1) {
        err << "error: newton needs a univariate polynomial\n";
        return exit_failure;
    }
    RootValuationReport report = root_valuations(in.poly);
    if (o.output == "json") {
        out << json_root_valuations(report).dump(2) << "\n";
        return exit_ok;
    }
    if (o.output == "plot-data") {
        ExtendedNewtonPolytope p = build_polytope(in.poly);
        out << plot_data_newton(p, lower_hull_univariate(p));
        return exit_ok;
    }
    if (report.roots_at_zero != 0)
        out << "roots at zero: " << report.roots_at_zero << "\n";
    out << "root valuations: ";
    for (std::size_t i = 0; i < report.valuations.size(); ++i) {
        if (i > 0)
            out << ", ";
        out << report.valuations[i].first.str() << " x" << report.valuations[i].second;
    }
    out << "\n";
    return exit_ok;
}

WeightMatrix parse_session_weight(const Options& o, const Prepared& in) {
    WeightMatrix w =
        parse_weight(o.weight_text, in.poly.var_count(), in.tower.height());
    return o.minus() ? w.negated() : w;
}

int cmd_member(const Options& o, std::ostream& out, std::ostream& err) {
    Prepared in = prepare(o, err);
    WeightMatrix w = parse_session_weight(o, in);
    bool member = is_in_trop(in.poly, w);
    KPolynomial form = initial_form(in.poly, w);
    if (o.output == "json") {
        nlohmann::json j;
        j["member"] = member;
        j["initial_form"] = form.str();
        out << j.dump(2) << "\n";
        return exit_ok;
    }
    if (member)
        out << "member\n";
    else
        out << "not member (initial form = " << form.str() << ")\n";
    return exit_ok;
}

int cmd_witness(const Options& o, std::ostream& out, std::ostream& err) {
    Prepared in = prepare(o, err);
    WeightMatrix w = parse_session_weight(o, in);
    if (!is_in_trop(in.poly, w)) {
        err << "error: weight is not in the tropicalization; no witness exists\n";
        return exit_failure;
    }
    WitnessCertificate cert = root_witness(in.poly, w);
    if (o.output == "json") {
        out << json_witness(cert).dump(2) << "\n";
        return exit_ok;
    }
    out << "b = (";
    for (std::size_t i = 0; i < cert.b.size(); ++i)
        out << (i ? ", " : "") << cert.b[i];
    out << ")\n";
    out << "f_b = " << cert.univariate.str() << "\n";
    out << "slope-0 edge: x " << cert.zero_edge.from_x << " -> " << cert.zero_edge.to_x
        << ", value " << cert.zero_edge.from_v.str() << " -> " << cert.zero_edge.to_v.str()
        << ", multiplicity " << cert.zero_edge.multiplicity << "\n";
    return exit_ok;
}

int cmd_eval(const Options& o, std::ostream& out, std::ostream& err) {
    Prepared in = prepare(o, err);
    WeightMatrix w = parse_session_weight(o, in);
    TropicalEvaluation ev = trop_eval(in.poly, w);
    if (o.output == "json") {
        nlohmann::json j;
        j["value"] = ev.value.str();
        j["achievers"] = nlohmann::json::array();
        for (const auto& d : ev.achievers)
            j["achievers"].push_back(monomial_str(d, in.poly.vars()));
        out << j.dump(2) << "\n";
        return exit_ok;
    }
    out << "value = " << ev.value.str() << "\n";
    out << "achievers: ";
    for (std::size_t i = 0; i < ev.achievers.size(); ++i)
        out << (i ? ", " : "") << monomial_str(ev.achievers[i], in.poly.vars());
    out << "\n";
    return exit_ok;
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"exact tropical geometry over iterated Laurent series fields"};
    app.require_subcommand(1);

    Options o;
    CLI::Option* seed_opt = nullptr;
    auto add_common = [&](CLI::App* sub, bool with_weight) {
        sub->add_option("--tower", o.tower_text, "field tower, e.g. QQ((t1))((t2))");
        sub->add_option("--vars", o.vars_text, "torus variables (comma-separated; default: infer)");
        sub->add_option("--output", o.output, "output mode")
            ->check(CLI::IsMember({"table", "json", "plot-data"}));
        sub->add_option("--convention", o.convention, "weight sign convention")
            ->check(CLI::IsMember({"plus", "paper-minus"}));
        sub->add_option("--max-cells", o.max_cells, "safety bound on generated cells");
        seed_opt = sub->add_option("--seed-pivot", o.seed_pivot,
                                   "seeded inequality order for interior-point searches");
        if (with_weight)
            sub->add_option("--weight", o.weight_text,
                            "weight matrix, e.g. \"1,0;1/2,0\" (coordinate 1 first)")
                ->required();
        sub->add_option("polynomial", o.polynomial, "input polynomial")->required();
    };

    CLI::App* trop = app.add_subcommand("trop", "tropicalization report");
    add_common(trop, false);
    CLI::App* table = app.add_subcommand("table", "degeneration table");
    add_common(table, false);
    CLI::App* newton = app.add_subcommand("newton", "root valuations of a univariate polynomial");
    add_common(newton, false);
    CLI::App* member = app.add_subcommand("member", "tropical membership test");
    add_common(member, true);
    CLI::App* witness = app.add_subcommand("witness", "root-valuation existence certificate");
    add_common(witness, true);
    CLI::App* eval = app.add_subcommand("eval", "piecewise linear evaluation");
    add_common(eval, true);

    std::vector<const char*> argv;
    argv.push_back("lextrop");
    for (const auto& s : args)
        argv.push_back(s.c_str());
    try {
        app.parse(static_cast<int>(argv.size()), argv.data());
    } catch (const CLI::ParseError& e) {
        std::ostringstream capture_out, capture_err;
        int code = app.exit(e, capture_out, capture_err);
        out << capture_out.str();
        err << capture_err.str();
        return code;
    }

    if (seed_opt != nullptr && seed_opt->count() > 0)
        set_pivot_seed(static_cast<unsigned>(o.seed_pivot));
    else
        set_pivot_seed(std::nullopt);

    try {
        if (*trop)
            return cmd_trop(o, out, err);
        if (*table)
            return cmd_table(o, out, err);
        if (*newton)
            return cmd_newton(o, out, err);
        if (*member)
            return cmd_member(o, out, err);
        if (*witness)
            return cmd_witness(o, out, err);
        if (*eval)
            return cmd_eval(o, out, err);
        err << "error: no subcommand\n";
        return exit_failure;
    } catch (const ParseError& e) {
        err << e.what() << "\n";
        return exit_parse_error;
    } catch (const InternalInconsistencyError& e) {
        err << "internal inconsistency: " << e.what() << "\n";
        return exit_inconsistency;
    } catch (const std::exception& e) {
        err << "error: " << e.what() << "\n";
        return exit_failure;
    }
}

}  // namespace lextrop
