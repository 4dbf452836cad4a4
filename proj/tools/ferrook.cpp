// Command-line front end for the ferrook library.

#include "ferrook/bounds.hpp"
#include "ferrook/census.hpp"
#include "ferrook/construct.hpp"
#include "ferrook/counting.hpp"
#include "ferrook/errors.hpp"
#include "ferrook/golden.hpp"
#include "ferrook/rook.hpp"
#include "ferrook/sampling.hpp"
#include "ferrook/serialize.hpp"

#include <CLI11.hpp>
#include <omp.h>

#include <fstream>
#include <iomanip>
#include <iostream>
#include <map>
#include <optional>
#include <string>

using namespace ferrook;

namespace {

enum Exit { kOk = 0, kUsage = 1, kHypothesis = 2, kBudget = 3, kGolden = 4 };

struct Options {
    std::string format = "text";
    int jobs = 0;
    std::uint64_t max_enum = default_enum_budget();
    std::uint64_t max_combos = default_combination_budget();
    std::uint64_t trials = 2000;
    std::uint64_t seed = 1;

    std::string diagram;
    int d = 0;
    int r = -1;
    int k = 0;
    long q = 0;
    int n = 0;
    int m = 0;
    bool force = false;
    bool verify = false;
    std::uint64_t samples = 0;
    std::string file;
    std::string golden = default_golden_path();
};

bool json_out(const Options& o) { return o.format == "json"; }

void emit(const Json& j) { std::cout << j.dump(2) << "\n"; }

int cmd_kappa(const Options& o) {
    const FerrersDiagram f = parse_diagram(o.diagram);
    const KappaReport k = kappa(f, o.d);
    if (json_out(o)) {
        Json j = to_json(k);
        j["diagram"] = f.to_string();
        j["d"] = o.d;
        emit(j);
    } else {
        std::cout << "kappa(" << f.to_string() << ", " << o.d << ") = " << k.minimum << "\n"
                  << "kappa_j: " << Json(k.values).dump() << "  argmin j: " << Json(k.argmin).dump() << "\n";
    }
    return kOk;
}

int cmd_tau(const Options& o) {
    const FerrersDiagram f = parse_diagram(o.diagram);
    const std::optional<long> closed = tau_closed_form(f, o.r);
    const ExtendedInt poly = tau_via_polynomial(f, o.r);
    if (!closed && !o.force) {
        throw HypothesisViolation("kappa(F, r) = 0, the closed form does not apply (use --force for the raw sum)");
    }
    const long raw = diagonal_excess(f, o.r);
    if (json_out(o)) {
        Json j{{"diagram", f.to_string()}, {"r", o.r}};
        j["closed_form"] = closed ? Json(*closed) : Json(nullptr);
        j["polynomial_route"] = poly.is_finite() ? Json(poly.value()) : Json("-inf");
        if (o.force) j["diagonal_excess"] = raw;
        emit(j);
    } else {
        std::cout << "tau closed form:      " << (closed ? std::to_string(*closed) : "n/a (kappa = 0)") << "\n"
                  << "tau via R_q(F, r):    " << poly << "\n";
        if (o.force) std::cout << "raw diagonal excess:  " << raw << "\n";
    }
    return kOk;
}

int cmd_rookpoly(const Options& o) {
    const FerrersDiagram f = parse_diagram(o.diagram);
    const IntPolynomial p = rook_polynomial(f, o.r);
    if (json_out(o)) {
        emit(Json{{"diagram", f.to_string()}, {"r", o.r}, {"polynomial", to_json(p)}});
    } else {
        std::cout << p.to_string() << "\n";
    }
    return kOk;
}

int cmd_census(const Options& o) {
    const FerrersDiagram f = parse_diagram(o.diagram);
    if (o.q > 0) {
        const FieldTable field(static_cast<std::uint32_t>(o.q));
        const RankCensus c = brute_force_census(f, field, o.max_enum);
        if (json_out(o)) {
            emit(to_json(c));
        } else {
            for (std::size_t r = 0; r < c.counts.size(); ++r) {
                if (o.r < 0 || static_cast<int>(r) == o.r) std::cout << "rank " << r << ": " << c.counts[r] << "\n";
            }
        }
        return kOk;
    }
    const int lo = o.r < 0 ? 0 : o.r;
    const int hi = o.r < 0 ? std::min(f.rows(), f.cols()) : o.r;
    Json j{{"diagram", f.to_string()}, {"polynomials", Json::object()}};
    for (int r = lo; r <= hi; ++r) {
        const IntPolynomial p = census_polynomial(f, r);
        if (json_out(o)) {
            j["polynomials"][std::to_string(r)] = to_json(p);
        } else {
            std::cout << "P_q(F, " << r << ") = " << p.to_string() << "\n";
        }
    }
    if (json_out(o)) emit(j);
    return kOk;
}

int cmd_ball(const Options& o) {
    const FerrersDiagram f = parse_diagram(o.diagram);
    const BigInt b = ball_size(f, o.r, BigInt(o.q));
    if (json_out(o)) {
        emit(Json{{"diagram", f.to_string()}, {"r", o.r}, {"q", o.q}, {"ball_size", to_string(b)}});
    } else {
        std::cout << b << "\n";
    }
    return kOk;
}

int cmd_mds_check(const Options& o) {
    const FerrersDiagram f = parse_diagram(o.diagram);
    const Json verdict = verdict_json(f, o.d);
    const EquivalenceReport eq = check_equivalences(f, o.d);
    if (json_out(o)) {
        Json j = verdict;
        j["characterizations"] = to_json(eq);
        emit(j);
        return kOk;
    }
    const auto show = [](const std::optional<bool>& b) { return b ? (*b ? "true" : "false") : "n/a"; };
    std::cout << "MDS-constructible: " << (verdict["mds_constructible"].get<bool>() ? "true" : "false")
              << ", kappa=" << verdict["kappa"] << "\n"
              << "sum over all diagonals:     " << verdict["diag_sum_all"] << "\n"
              << "sum over first m diagonals: " << verdict["diag_sum_first_m"] << "\n"
              << "tau(F, d-1):                " << verdict["tau"] << "\n"
              << "characterizations: all=" << (eq.all_equal ? "true" : "false")
              << " first_m=" << show(eq.first_m_equal) << " rook=" << show(eq.tau_equal)
              << (eq.agree() ? "  (agree)" : "  (DISAGREE)") << "\n";
    for (const auto& v : eq.violations) std::cout << "  skipped: " << v << "\n";
    return kOk;
}

int cmd_classify(const Options& o) {
    const FerrersDiagram f = parse_diagram(o.diagram);
    const DensityClass c = classify_density(f, o.d, o.k);
    const long tau = *tau_closed_form(f, o.d - 1);
    if (json_out(o)) {
        emit(Json{{"diagram", f.to_string()}, {"d", o.d}, {"k", o.k}, {"tau", tau}, {"class", to_string(c)}});
    } else {
        std::cout << to_string(c) << " (tau(F, d-1) = " << tau << ")\n";
    }
    return kOk;
}

int cmd_exist_bound(const Options& o) {
    const FerrersDiagram f = parse_diagram(o.diagram);
    const BigInt b = existence_lower_bound(f, o.d, o.k, BigInt(o.q));
    if (json_out(o)) {
        emit(Json{{"diagram", f.to_string()}, {"d", o.d}, {"k", o.k}, {"q", o.q}, {"bound", to_string(b)},
                  {"certifies_existence", b > 0}});
    } else {
        std::cout << b << "\n";
    }
    return kOk;
}

int cmd_density(const Options& o) {
    const FerrersDiagram f = parse_diagram(o.diagram);
    const FieldTable field(static_cast<std::uint32_t>(o.q));
    const DensityReport r = estimate_density(f, o.d, o.k, field, o.trials, o.seed, o.max_combos);
    if (json_out(o)) {
        emit(to_json(r));
    } else {
        std::cout << std::fixed << std::setprecision(4) << "estimate " << r.estimate << "  95% CI [" << r.ci_low
                  << ", " << r.ci_high << "]  trials " << r.trials << "  seed " << r.seed << " (" << r.prng
                  << ")\n";
    }
    return kOk;
}

int report_space(const Options& o, const ConstructedSpace& s, const FieldTable& field) {
    Json j = to_json(s);
    bool pass = true;
    if (o.verify) {
        std::optional<SamplingOptions> sampling;
        if (o.samples > 0) sampling = SamplingOptions{o.samples, o.seed};
        const SpaceVerdict v = verify_space(s, field, o.max_combos, sampling);
        j["verification"] = to_json(v);
        pass = v.pass;
    }
    if (json_out(o)) {
        emit(j);
    } else {
        std::cout << "diagram " << j["diagram"].get<std::string>() << "  d=" << s.d << "  q=" << s.q
                  << "  dimension " << s.dimension() << "  kappa " << j["kappa"] << "  optimal "
                  << (j["optimal"].get<bool>() ? "yes" : "no") << (s.transposed ? "  (built on the transpose)" : "")
                  << "\n";
        for (const auto& w : s.warnings) std::cout << "warning: " << w << "\n";
        if (o.verify) {
            const Json& v = j["verification"];
            std::cout << "verification (" << v["mode"].get<std::string>() << ", " << v["checked"]
                      << " combinations): " << (pass ? "PASS" : "FAIL") << "\n";
        }
    }
    return pass ? kOk : kHypothesis;
}

int cmd_construct(const Options& o) {
    const FerrersDiagram f = parse_diagram(o.diagram);
    const FieldTable field(static_cast<std::uint32_t>(o.q));
    return report_space(o, build_space(f, o.d, field), field);
}

int cmd_verify_space(const Options& o) {
    std::ifstream in(o.file);
    if (!in) throw std::invalid_argument("cannot open " + o.file);
    const ConstructedSpace s = space_from_json(Json::parse(in));
    const FieldTable field(s.q);
    Options opt = o;
    opt.verify = true;
    return report_space(opt, s, field);
}

int cmd_count_mds(const Options& o) {
    if (o.d != 2 && o.d != 3) throw std::invalid_argument("count-mds supports d = 2 or d = 3");
    if (o.d == 3 && o.m != o.n) throw HypothesisViolation("the d = 3 count is for square boards (m = n)");
    const CountReport r = o.d == 2 ? count_mds2(o.n, o.m) : count_mds3_square(o.n);
    if (json_out(o)) {
        emit(to_json(r));
    } else {
        std::cout << "n=" << r.n << " m=" << r.m << " d=" << r.d << "  formula " << r.formula << "  enumeration "
                  << (r.enumerated ? to_string(*r.enumerated) : "skipped") << "  "
                  << (r.agree() ? "agree" : "DISAGREE") << "\n";
    }
    return r.agree() ? kOk : kGolden;
}

int print_golden(const Options& o, const std::vector<GoldenResult>& results) {
    bool all = true;
    Json rows = Json::array();
    for (const auto& r : results) {
        all = all && r.pass;
        if (json_out(o)) {
            rows.push_back(Json{{"label", r.label},
                                {"kind", r.kind},
                                {"expected", r.expected},
                                {"actual", r.actual},
                                {"pass", r.pass},
                                {"detail", r.detail}});
        } else {
            std::cout << (r.pass ? "PASS" : "FAIL") << "  " << r.label << "\n"
                      << "      expected " << r.expected << "\n"
                      << "      actual   " << r.actual << "\n";
            if (!r.detail.empty()) std::cout << "      note     " << r.detail << "\n";
        }
    }
    if (json_out(o)) {
        emit(Json{{"results", rows}, {"all_pass", all}});
    } else {
        std::cout << (all ? "all golden values match" : "golden-value mismatch") << "\n";
    }
    return all ? kOk : kGolden;
}

int cmd_verify_paper(const Options& o) { return print_golden(o, run_golden(load_golden(o.golden))); }

int cmd_table1(const Options& o) {
    std::vector<GoldenResult> rows;
    const auto doc = load_golden(o.golden);
    for (const auto& entry : doc.at("entries")) {
        if (entry.at("kind") == "table1") rows.push_back(run_golden_entry(entry));
    }
    return print_golden(o, rows);
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Ferrers-diagram rank-metric code toolkit"};
    app.require_subcommand(1);
    app.fallthrough();
    Options o;
    app.add_option("--format", o.format, "Output format")->check(CLI::IsMember({"text", "json"}));
    app.add_option("--jobs", o.jobs, "Worker threads (0 = OpenMP default)")->check(CLI::NonNegativeNumber);
    app.add_option("--max-enum", o.max_enum, "Cap on q^|F| for brute-force census (env FERROOK_MAX_ENUM)");
    app.add_option("--max-combos", o.max_combos,
                   "Cap on projective combinations per space check (env FERROOK_MAX_COMBOS)");
    app.add_option("--trials", o.trials, "Monte-Carlo trials");
    app.add_option("--seed", o.seed, "Monte-Carlo seed");

    const auto diagram_arg = [&](CLI::App* sub) {
        sub->add_option("diagram", o.diagram, "Column heights, e.g. \"[1,3,3,4,5]\"")->required();
    };
    std::map<CLI::App*, int (*)(const Options&)> handlers;

    auto* kap = app.add_subcommand("kappa", "kappa(F, d) with the per-j values");
    diagram_arg(kap);
    kap->add_option("-d", o.d, "Minimum rank distance")->required();
    handlers[kap] = cmd_kappa;

    auto* tau = app.add_subcommand("tau", "Trailing degree of R_q(F, r) by closed form and by enumeration");
    diagram_arg(tau);
    tau->add_option("-r", o.r, "Number of rooks")->required();
    tau->add_flag("--force", o.force, "Also print the diagonal sum when kappa(F, r) = 0");
    handlers[tau] = cmd_tau;

    auto* rook = app.add_subcommand("rookpoly", "q-rook polynomial R_q(F, r)");
    diagram_arg(rook);
    rook->add_option("-r", o.r, "Number of rooks")->required();
    handlers[rook] = cmd_rookpoly;

    auto* census = app.add_subcommand("census", "Rank census: polynomials, or brute-force counts with -q");
    diagram_arg(census);
    census->add_option("-q", o.q, "Field size for brute force");
    census->add_option("-r", o.r, "Single rank");
    handlers[census] = cmd_census;

    auto* ball = app.add_subcommand("ball", "Ball size B_q(F, r)");
    diagram_arg(ball);
    ball->add_option("-r", o.r, "Radius")->required();
    ball->add_option("-q", o.q, "Field size")->required();
    handlers[ball] = cmd_ball;

    auto* mds = app.add_subcommand("mds-check", "MDS-constructibility under all three characterizations");
    diagram_arg(mds);
    mds->add_option("-d", o.d, "Minimum rank distance")->required();
    handlers[mds] = cmd_mds_check;

    auto* cls = app.add_subcommand("classify", "Density regime of k-dimensional [F, d]-spaces");
    diagram_arg(cls);
    cls->add_option("-d", o.d, "Minimum rank distance")->required();
    cls->add_option("-k", o.k, "Dimension")->required();
    handlers[cls] = cmd_classify;

    auto* ex = app.add_subcommand("exist-bound", "Lower bound on the number of [F, d]_q-spaces of dimension k");
    diagram_arg(ex);
    ex->add_option("-d", o.d, "Minimum rank distance")->required();
    ex->add_option("-k", o.k, "Dimension")->required();
    ex->add_option("-q", o.q, "Field size")->required();
    handlers[ex] = cmd_exist_bound;

    auto* den = app.add_subcommand("density", "Monte-Carlo share of k-dim subspaces that are [F, d]_q-spaces");
    diagram_arg(den);
    den->add_option("-d", o.d, "Minimum rank distance")->required();
    den->add_option("-k", o.k, "Dimension")->required();
    den->add_option("-q", o.q, "Field size")->required();
    handlers[den] = cmd_density;

    auto* con = app.add_subcommand("construct", "Diagonal Reed-Solomon construction");
    diagram_arg(con);
    con->add_option("-d", o.d, "Minimum rank distance")->required();
    con->add_option("-q", o.q, "Field size")->required();
    con->add_flag("--verify", o.verify, "Check every nonzero element has rank >= d");
    con->add_option("--samples", o.samples, "Sample this many combinations when exhaustion exceeds the budget");
    handlers[con] = cmd_construct;

    auto* ver = app.add_subcommand("verify-space", "Re-check a basis exported by construct --format json");
    ver->add_option("file", o.file, "JSON file")->required();
    ver->add_option("--samples", o.samples, "Sample this many combinations when exhaustion exceeds the budget");
    handlers[ver] = cmd_verify_space;

    auto* cnt = app.add_subcommand("count-mds", "Count MDS-constructible pairs: formula and enumeration");
    cnt->add_option("-n", o.n, "Rows")->required();
    cnt->add_option("-m", o.m, "Columns")->required();
    cnt->add_option("-d", o.d, "2 or 3")->required();
    handlers[cnt] = cmd_count_mds;

    auto* vp = app.add_subcommand("verify-paper", "Run the golden-value suite");
    vp->add_option("--golden", o.golden, "Golden-value file");
    handlers[vp] = cmd_verify_paper;

    auto* t1 = app.add_subcommand("table1", "Reproduce the existence-bound table rows");
    t1->add_option("--golden", o.golden, "Golden-value file");
    handlers[t1] = cmd_table1;

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? kOk : kUsage;
    }

    if (o.jobs > 0) omp_set_num_threads(o.jobs);
    try {
        for (auto* sub : app.get_subcommands()) return handlers.at(sub)(o);
    } catch (const HypothesisViolation& e) {
        std::cerr << "hypothesis violated: " << e.what() << "\n";
        return kHypothesis;
    } catch (const BudgetExceeded& e) {
        std::cerr << "budget refused: " << e.what() << "\n";
        return kBudget;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kUsage;
    }
    return kUsage;
}
