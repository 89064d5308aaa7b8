#include "onecenter/cli.hpp"

#include "onecenter/errors.hpp"
#include "onecenter/instance.hpp"
#include "onecenter/oracle.hpp"
#include "onecenter/plot.hpp"
#include "onecenter/serialize.hpp"

#include <CLI11.hpp>

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <optional>

namespace onecenter {

namespace {

constexpr int kExitOk = 0;
constexpr int kExitVerifyFailure = 1;
constexpr int kExitInvalidInput = 2;
constexpr int kExitComplexityGuard = 3;

void apply_seed_env(InstanceConfig& cfg) {
    if (const char* env = std::getenv("ONECENTER_SEED")) {
        try {
            cfg.options.seed = std::stoull(env);
        } catch (const std::exception&) {
            throw ValidationError("ONECENTER_SEED is not an unsigned integer");
        }
    }
}

PiecewiseCenter run_trace(const InstanceConfig& cfg) {
    if (cfg.mobiles.size() == 1)
        return trace_single(cfg.statics, cfg.mobiles[0], cfg.domain, cfg.trace_options());
    return trace_multi(cfg.statics, cfg.mobiles, cfg.domain, cfg.trace_options());
}

void emit(const std::string& text, const std::string& out_path, std::ostream& out) {
    if (out_path.empty()) {
        out << text;
        return;
    }
    std::ofstream f(out_path, std::ios::binary);
    if (!f) throw ValidationError("cannot open output file: " + out_path);
    f << text;
}

int cmd_trace(const InstanceConfig& cfg, const std::string& out_path, std::ostream& out) {
    const PiecewiseCenter pc = run_trace(cfg);
    emit(json_to_text(piecewise_to_json(pc, cfg.options.refine_width)), out_path, out);
    return kExitOk;
}

int cmd_verify(const InstanceConfig& cfg, std::size_t samples_override, std::ostream& out) {
    const PiecewiseCenter pc = run_trace(cfg);
    const std::size_t samples = samples_override ? samples_override : cfg.options.samples;
    const VerifyReport report = verify(pc, cfg.statics, cfg.mobiles, samples, cfg.options.seed);
    const std::vector<EventGap> gaps = continuity_audit(pc, cfg.options.refine_width);

    OrderedJson j = verify_report_to_json(report, gaps, cfg.options.refine_width);
    bool continuity_ok = true;
    const Rat tol(1, 1000000000);
    for (const auto& g : gaps)
        for (const auto& v : g.gap_abs)
            if (g.exact ? v != 0 : v >= tol) continuity_ok = false;
    j["ok"] = report.clean() && continuity_ok;
    out << json_to_text(j);
    return (report.clean() && continuity_ok) ? kExitOk : kExitVerifyFailure;
}

int cmd_eval(const InstanceConfig& cfg, const std::string& t_text, const std::string& derivative,
             std::ostream& out) {
    const Rat t = rat_from_string(t_text);
    if (!cfg.domain.contains(t)) throw ValidationError("--t outside the traced domain");
    const PiecewiseCenter pc = run_trace(cfg);
    const Point p = pc.eval(t);

    OrderedJson j;
    j["t"] = rat_to_string(t);
    OrderedJson pt = OrderedJson::array();
    for (const auto& c : p.x) pt.push_back(rat_to_string(c));
    j["point"] = std::move(pt);

    auto deriv_json = [&](Side side) {
        OrderedJson arr = OrderedJson::array();
        for (const auto& v :
             one_sided_derivative(pc, AlgebraicTime(t), side, cfg.options.refine_width))
            arr.push_back(rat_to_string(v));
        return arr;
    };
    if (derivative == "left" || derivative == "both") j["derivative"]["left"] = deriv_json(Side::Left);
    if (derivative == "right" || derivative == "both") j["derivative"]["right"] = deriv_json(Side::Right);
    out << json_to_text(j);
    return kExitOk;
}

int cmd_plot(const InstanceConfig& cfg, const std::string& out_path, const std::string& format,
             std::size_t samples, std::ostream& out) {
    if (cfg.dimension != 2) throw ValidationError("plot requires dimension 2");
    const PiecewiseCenter pc = run_trace(cfg);
    const std::string text = format == "csv" ? plot_csv(pc, samples)
                                             : plot_svg(pc, cfg.statics, cfg.mobiles, samples);
    emit(text, out_path, out);
    return kExitOk;
}

int cmd_seb(const std::string& points_path, bool check, std::ostream& out) {
    const PointsFile pf = load_points_file(points_path);
    const SebResult result = seb(pf.points);
    OrderedJson j = seb_result_to_json(result);
    if (check) {
        const Ball brute = seb_bruteforce(pf.points);
        if (!(brute == result.ball)) throw std::logic_error("seb disagrees with brute force");
        j["check"] = "ok";
    }
    out << json_to_text(j);
    return kExitOk;
}

} // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"Exact piecewise parametric equation of the Euclidean 1-center of static and mobile points"};
    app.require_subcommand(1);

    std::string config_path, out_path, t_text, derivative, format = "svg", points_path;
    std::size_t samples_override = 0, plot_samples = 128;
    bool check = false;

    auto* trace = app.add_subcommand("trace", "compute the piecewise center function as JSON");
    trace->add_option("-c,--config", config_path, "instance config JSON")->required();
    trace->add_option("-o,--out", out_path, "output file (default stdout)");

    auto* verify_cmd = app.add_subcommand("verify", "trace, then check against per-sample exact SEB");
    verify_cmd->add_option("-c,--config", config_path, "instance config JSON")->required();
    verify_cmd->add_option("--samples", samples_override, "override sample count");

    auto* eval_cmd = app.add_subcommand("eval", "evaluate the center (and derivatives) at a time");
    eval_cmd->add_option("-c,--config", config_path, "instance config JSON")->required();
    eval_cmd->add_option("--t", t_text, "time, rational or decimal")->required();
    eval_cmd->add_option("--derivative", derivative, "left|right|both")
        ->check(CLI::IsMember({"left", "right", "both"}));

    auto* plot_cmd = app.add_subcommand("plot", "emit an SVG or CSV plot (d=2)");
    plot_cmd->add_option("-c,--config", config_path, "instance config JSON")->required();
    plot_cmd->add_option("-o,--out", out_path, "output file")->required();
    plot_cmd->add_option("--format", format, "svg|csv")->check(CLI::IsMember({"svg", "csv"}));
    plot_cmd->add_option("--samples", plot_samples, "samples per arc");

    auto* seb_cmd = app.add_subcommand("seb", "smallest enclosing ball of a point set");
    seb_cmd->add_option("points", points_path, "points JSON file")->required();
    seb_cmd->add_flag("--check", check, "cross-check against brute force");

    std::vector<std::string> reversed(args.rbegin(), args.rend());
    try {
        app.parse(reversed);
    } catch (const CLI::ParseError& e) {
        if (e.get_exit_code() == 0) { // --help
            out << app.help();
            return kExitOk;
        }
        err << OrderedJson{{"error", "usage"}, {"message", e.what()}}.dump() << "\n";
        return kExitInvalidInput;
    }

    try {
        if (*seb_cmd) return cmd_seb(points_path, check, out);

        InstanceConfig cfg = load_instance_file(config_path);
        apply_seed_env(cfg);
        if (samples_override) cfg.options.samples = samples_override;

        if (*trace) return cmd_trace(cfg, out_path, out);
        if (*verify_cmd) return cmd_verify(cfg, samples_override, out);
        if (*eval_cmd) return cmd_eval(cfg, t_text, derivative, out);
        if (*plot_cmd) return cmd_plot(cfg, out_path, format, plot_samples, out);
        err << OrderedJson{{"error", "usage"}, {"message", "no subcommand"}}.dump() << "\n";
        return kExitInvalidInput;
    } catch (const ComplexityGuard& e) {
        err << OrderedJson{{"error", "complexity_guard"}, {"message", e.what()}}.dump() << "\n";
        return kExitComplexityGuard;
    } catch (const ValidationError& e) {
        err << OrderedJson{{"error", "validation"}, {"message", e.what()}}.dump() << "\n";
        return kExitInvalidInput;
    } catch (const std::exception& e) {
        err << OrderedJson{{"error", "internal"}, {"message", e.what()}}.dump() << "\n";
        return kExitInvalidInput;
    }
}

int run_cli(int argc, char** argv) {
    std::vector<std::string> args;
    for (int i = 1; i < argc; ++i) args.emplace_back(argv[i]);
    return run_cli(args, std::cout, std::cerr);
}

} // namespace onecenter
