#include "jungck_cli/cli.hpp"

#include <fstream>
#include <optional>
#include <ostream>
#include <sstream>

#include <CLI11.hpp>

#include "jungck/certifier.hpp"
#include "jungck/config.hpp"
#include "jungck/contraction.hpp"
#include "jungck/error.hpp"
#include "jungck/report.hpp"
#include "jungck/solver.hpp"

namespace jungck::cli {

namespace {

struct Flags {
    std::string config_path;
    std::string variant;
    std::string direction;
    std::optional<std::size_t> budget;
    std::optional<double> eps;
    std::string format = "text";
    std::string contraction;
    std::string x0;
};

std::string read_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw Error("cannot open config '" + path + "'");
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

Problem load(const Flags& f) {
    if (f.config_path.empty()) throw Error("--config is required for this command");
    const std::string text = read_file(f.config_path);
    ProblemConfig cfg;
    try {
        cfg = parse_config(text);
    } catch (const ConfigError& e) {
        throw Error(f.config_path + ":" + std::to_string(e.line()) + ":" + std::to_string(e.column()) + ": " + e.what());
    }
    Problem p = build_problem(cfg);
    if (!f.contraction.empty()) p.contraction = make_catalog_entry(f.contraction);
    if (!f.variant.empty()) {
        const auto v = variant_from_string(f.variant, &p.continuity);
        if (!v) throw Error("unknown variant '" + f.variant + "'");
        p.variant = *v;
    }
    if (!f.direction.empty()) p.direction = *direction_from_string(f.direction);
    if (f.budget) p.budget = *f.budget;
    if (f.eps) p.eps = *f.eps;
    if (!f.x0.empty()) p.x0 = parse_point(p.space, f.x0);
    return p;
}

ImplicitContraction contraction_for(const Flags& f) {
    if (!f.contraction.empty()) return make_catalog_entry(f.contraction);
    Problem p = load(f);
    if (!p.contraction) throw Error("no contraction given (use --contraction or a [contraction] block)");
    return *p.contraction;
}

Format format_of(const Flags& f) { return f.format == "structured" ? Format::Structured : Format::Text; }

int cmd_certify(const Flags& f, std::ostream& out) {
    Problem p = load(f);
    if (!p.contraction) throw Error("certify needs a contraction (use --contraction or a [contraction] block)");
    CertifyOptions opts;
    opts.direction = p.direction.value_or(Direction::Increasing);
    opts.continuity = p.continuity;
    opts.solve.budget = p.budget;
    opts.solve.tol = p.tol;
    const HypothesisReport r = certify(p.space, p.pair, *p.contraction, p.variant, p.E, p.x0, opts);
    out << render_certificate(p.space, r, format_of(f));
    return r.verified() ? kSuccess : kRefuted;
}

int cmd_solve(const Flags& f, std::ostream& out) {
    Problem p = load(f);
    if (!p.x0) throw Error("solve needs a start point (x0 in [run] or --x0)");
    SolveOptions so;
    so.budget = p.budget;
    so.direction = p.direction.value_or(Direction::Either);
    so.tol = p.tol;
    const IterationTrace trace = jungck_sequence(p.space, p.pair, *p.x0, so);
    std::optional<FixedPointResult> fp;
    std::string error;
    if (trace.verdict == TraceVerdict::PreconditionFailed) {
        error = trace.detail;
    } else {
        try {
            fp = extract_fixed_point(p.space, p.pair, trace);
        } catch (const NoCoincidence& e) {
            error = e.what();
        }
    }
    out << render_solve(p.space, trace, fp, error, format_of(f));
    if (p.eps && p.contraction && p.contraction->companion && format_of(f) == Format::Text) {
        const CauchyDetection cd = detect_cauchy(p.space, trace, *p.contraction->companion, *p.eps);
        out << "cauchy test (eps " << *p.eps << "): ";
        if (cd.detected) {
            out << "gap below " << cd.threshold << " at n = " << *cd.at;
        } else {
            out << "not detected";
        }
        out << (cd.containment_violated ? ", containment violated" : "") << "\n";
    }
    return fp ? kSuccess : kRefuted;
}

int cmd_oracle(const Flags& f, std::ostream& out) {
    Problem p = load(f);
    std::optional<std::size_t> limit;
    if (p.space.indexed()) limit = std::min(p.budget, p.space.indexed()->budget());
    const BruteForceResult r = coincidence_points_bruteforce(p.space, p.pair, limit);
    out << render_oracle(p.space, r, format_of(f));
    return kSuccess;
}

int cmd_catalog(const Flags& f, std::ostream& out) {
    if (!f.contraction.empty()) {
        out << render_catalog({make_catalog_entry(f.contraction)}, format_of(f));
    } else {
        out << render_catalog(catalog(), format_of(f));
    }
    return kSuccess;
}

int cmd_conditions(const Flags& f, std::ostream& out) {
    const ImplicitContraction ic = contraction_for(f);
    std::vector<ConditionReport> reports;
    if (ic.companion) reports.push_back(check_comparison(*ic.companion));
    if (ic.inner && ic.inner_is_half) reports.push_back(check_half_comparison(HalfComparisonFn(*ic.inner)));
    for (auto id : {ConditionId::F1a, ConditionId::F1b, ConditionId::F1c, ConditionId::F2}) {
        try {
            reports.push_back(check_condition(ic, id));
        } catch (const MissingCompanion& e) {
            ConditionReport r{id};
            r.verdict = ConditionVerdict::NotApplicable;
            r.detail = e.what();
            reports.push_back(r);
        }
    }
    out << render_conditions(ic, reports, format_of(f));
    bool ok = true;
    for (const auto& r : reports) {
        const bool claimed = ic.claims.count(r.id) != 0;
        const bool structural = r.id == ConditionId::Comparison || r.id == ConditionId::HalfComparison;
        if ((claimed || structural || ic.claims.empty()) && !r.passed() && !ic.denies.count(r.id)) ok = false;
    }
    return ok ? kSuccess : kRefuted;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"Jungck iteration, hypothesis certification and implicit-contraction checks"};
    app.require_subcommand(1);
    Flags f;
    auto add_common = [&](CLI::App* sub, bool needs_config) {
        auto* cfg = sub->add_option("--config", f.config_path, "problem description file");
        if (needs_config) cfg->required();
        sub->add_option("--variant", f.variant, "theorem variant, e.g. main-regular or main-continuity(ii)");
        sub->add_option("--direction", f.direction, "start condition direction")
            ->check(CLI::IsMember({"inc", "dec", "either", "increasing", "decreasing"}));
        sub->add_option("--budget", f.budget, "iteration and materialization budget");
        sub->add_option("--eps", f.eps, "epsilon for the Cauchy test");
        sub->add_option("--format", f.format, "report format")->check(CLI::IsMember({"text", "structured"}));
        sub->add_option("--contraction", f.contraction, "catalog entry as ID[:name=value,...]");
        sub->add_option("--x0", f.x0, "start point (label, x<i>, or number)");
    };
    auto* certify_cmd = app.add_subcommand("certify", "check every hypothesis of a theorem variant");
    auto* solve_cmd = app.add_subcommand("solve", "run the T-S-sequence and extract a coincidence point");
    auto* oracle_cmd = app.add_subcommand("oracle", "brute-force coincidence and common fixed points");
    auto* catalog_cmd = app.add_subcommand("catalog", "list the built-in implicit contractions");
    auto* conditions_cmd = app.add_subcommand("conditions", "check F1a, F1b, F1c, F2 for a contraction");
    add_common(certify_cmd, true);
    add_common(solve_cmd, true);
    add_common(oracle_cmd, true);
    add_common(catalog_cmd, false);
    add_common(conditions_cmd, false);

    std::vector<std::string> rev(args.rbegin(), args.rend());
    if (!rev.empty()) rev.pop_back();
    try {
        app.parse(rev);
    } catch (const CLI::CallForHelp&) {
        out << app.help();
        return kSuccess;
    } catch (const CLI::ParseError& e) {
        err << "error: " << e.what() << "\n";
        return kError;
    }

    try {
        if (certify_cmd->parsed()) return cmd_certify(f, out);
        if (solve_cmd->parsed()) return cmd_solve(f, out);
        if (oracle_cmd->parsed()) return cmd_oracle(f, out);
        if (catalog_cmd->parsed()) return cmd_catalog(f, out);
        if (conditions_cmd->parsed()) return cmd_conditions(f, out);
    } catch (const ConfigError& e) {
        err << "error at " << e.line() << ":" << e.column() << ": " << e.what() << "\n";
        return kError;
    } catch (const std::exception& e) {
        err << "error: " << e.what() << "\n";
        return kError;
    }
    return kError;
}

}  // namespace jungck::cli
