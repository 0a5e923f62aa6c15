#include "planevar/cli.hpp"

#include <iomanip>
#include <optional>
#include <ostream>
#include <sstream>
#include <utility>

#include <CLI11.hpp>

#include "planevar/bv_element.hpp"
#include "planevar/candidates.hpp"
#include "planevar/problem_io.hpp"
#include "planevar/report.hpp"
#include "planevar/verify.hpp"

namespace planevar {

namespace {

using nlohmann::ordered_json;

void print_doc(std::ostream& out, const ordered_json& doc) { out << doc.dump(2) << '\n'; }

int fail_with(std::ostream& out, const std::string& message) {
    print_doc(out, ordered_json{{"error", message}});
    return 2;
}

Line parse_line_spec(const std::string& text) {
    std::vector<std::string> parts;
    std::string item;
    std::istringstream in(text);
    while (std::getline(in, item, ',')) parts.push_back(item);
    if (parts.size() != 3) {
        throw ValidationError("--line expects three comma-separated rationals \"a,b,c\"");
    }
    return Line(rat_from_string(parts[0]), rat_from_string(parts[1]),
                rat_from_string(parts[2]));
}

const char* sign_label(int s) { return s > 0 ? "+1" : s < 0 ? "-1" : "0"; }

// Search knobs accepted by every estimating subcommand; unset flags defer to
// the problem file and then to the built-in defaults.
struct SearchFlags {
    int depth = 0;
    int repeat = 0;
    int beam = 0;
    std::uint64_t seed = 0;
    CLI::Option* depth_opt = nullptr;
    CLI::Option* repeat_opt = nullptr;
    CLI::Option* beam_opt = nullptr;
    CLI::Option* seed_opt = nullptr;

    void attach(CLI::App* cmd) {
        depth_opt = cmd->add_option("--depth", depth, "longest searched list");
        repeat_opt = cmd->add_option("--repeat", repeat, "largest cycle repetition count");
        beam_opt = cmd->add_option("--beam", beam, "beam width, 0 for exhaustive");
        seed_opt = cmd->add_option("--seed", seed, "search tie-breaking seed");
    }

    SearchConfig resolve(const ProblemFile& p, std::size_t domain_size) const {
        auto given = [](const CLI::Option* o) { return o != nullptr && o->count() > 0; };
        return config_from(p, given(depth_opt) ? std::optional<int>(depth) : std::nullopt,
                           given(repeat_opt) ? std::optional<int>(repeat) : std::nullopt,
                           given(beam_opt) ? std::optional<int>(beam) : std::nullopt,
                           given(seed_opt) ? std::optional<std::uint64_t>(seed) : std::nullopt,
                           domain_size);
    }
};

VariationEstimate estimate_for(const ProblemFile& p, const FunctionTable& f,
                               const SearchConfig& cfg) {
    if (!p.subset_labels.empty()) {
        auto [s1, s2] = problem_subsets(p);
        return join_bound(f, s1, s2, cfg);
    }
    return certified_estimate(f, cfg);
}

std::vector<std::string> estimate_csv_row(const ordered_json& doc) {
    std::string witness;
    for (const auto& idx : doc.at("witness")) {
        if (!witness.empty()) witness += ';';
        witness += idx.dump();
    }
    return {doc.at("lower").dump(), doc.at("upper").dump(), doc.at("exact").dump(),
            doc.at("upper_rule").get<std::string>(), witness};
}

int cmd_vf(const std::string& path, const std::optional<std::string>& line_spec,
           bool explain, std::ostream& out) {
    ProblemFile p = load_problem(path);
    if (!p.has_points()) throw ValidationError("problem file has no points");
    const PointList& S = p.points;

    PerturbedLine pl = line_spec
                           ? PerturbedLine{parse_line_spec(*line_spec), NoPerturb{}}
                           : vf_max(S).witness;
    int v = vf_on_line(S, pl);
    SignVector sv = sign_vector(S, pl);

    if (explain) {
        out << "segment  from  to  class\n";
        for (std::size_t j = 1; j < sv.size(); ++j) {
            out << std::setw(7) << j << "  " << std::setw(4) << sign_label(sv[j - 1])
                << "  " << std::setw(2) << sign_label(sv[j]) << "  "
                << to_string(classify_segment(sv, j)) << '\n';
        }
        out << "vf = " << v << '\n';
        return 0;
    }

    ordered_json doc;
    doc["vf"] = v;
    if (line_spec) {
        ordered_json segments = ordered_json::array();
        for (std::size_t j = 1; j < sv.size(); ++j) {
            segments.push_back(to_string(classify_segment(sv, j)));
        }
        doc["segments"] = std::move(segments);
    } else {
        doc["witness"] = perturbed_line_to_json(pl);
    }
    print_doc(out, doc);
    return 0;
}

int cmd_var(const std::string& path, const SearchFlags& flags, const std::string& format,
            std::ostream& out) {
    if (format != "json" && format != "csv") {
        throw ValidationError("--format must be json or csv");
    }
    ProblemFile p = load_problem(path);
    std::size_t domain_size = problem_domain(p).size();
    FunctionTable f = problem_table(p);
    VariationEstimate est = estimate_for(p, f, flags.resolve(p, domain_size));
    ordered_json doc = estimate_to_json(est, p.points);
    if (format == "csv") {
        out << emit_csv({"lower", "upper", "exact", "upper_rule", "witness"},
                        {estimate_csv_row(doc)});
    } else {
        print_doc(out, doc);
    }
    return 0;
}

int cmd_norm(const std::string& path, const std::string& ops_spec, const SearchFlags& flags,
             std::ostream& out) {
    ProblemFile p = load_problem(path);
    SearchConfig cfg = flags.resolve(p, problem_domain(p).size());
    BVElement acc(problem_table(p), cfg);

    std::string token;
    std::istringstream in(ops_spec);
    while (std::getline(in, token, '|')) {
        if (token.empty()) throw ValidationError("empty operation in --ops");
        std::size_t colon = token.find(':');
        std::string name = token.substr(0, colon);
        if (name == "abs" || name == "conj") {
            if (colon != std::string::npos) {
                throw ValidationError("operation " + name + " takes no argument");
            }
            acc = name == "abs" ? abs_val(acc) : conj(acc);
            continue;
        }
        if (colon == std::string::npos || colon + 1 == token.size()) {
            throw ValidationError("operation " + name + " needs a file argument");
        }
        BVElement g(problem_table(load_problem(token.substr(colon + 1))), cfg);
        if (name == "add") {
            acc = add(acc, g);
        } else if (name == "mul") {
            acc = mul(acc, g);
        } else if (name == "max") {
            acc = lattice_max(acc, g);
        } else if (name == "min") {
            acc = lattice_min(acc, g);
        } else {
            throw ValidationError("unknown operation: " + name);
        }
    }

    ordered_json doc;
    doc["sup"] = acc.sup_norm();
    doc["variation"] = estimate_to_json(acc.norm_estimate(), p.points);
    doc["norm"] = ordered_json{{"lower", acc.bv_lower()}, {"upper", acc.bv_upper()}};
    print_doc(out, doc);
    return 0;
}

int cmd_circle(const std::string& path, int repeat, std::ostream& out) {
    CircleSample sample = load_circle_sample(path);
    SearchConfig cfg;
    cfg.cycle_repetitions = repeat;
    cfg.beam_width = sample.planar_points().size() <= 6 ? 0 : 64;
    CircleComparison cc = circle_compare(sample, cfg);

    ordered_json doc;
    doc["var_bg"] = cc.var_bg;
    doc["planar"] = estimate_to_json(cc.interval, sample.planar_points().points());
    doc["amplified_lower"] = cc.amplified_lower;
    doc["crossing_count"] = cc.crossing_count;
    doc["upper_within_bg"] = cc.upper_within_bg;
    doc["bg_within_doubled"] = cc.bg_within_doubled;
    print_doc(out, doc);
    return cc.upper_within_bg && cc.bg_within_doubled ? 0 : 3;
}

int cmd_verify(std::uint64_t seed, std::uint64_t trials, const std::string& suite,
               std::ostream& out) {
    VerificationReport report = verify_suite(seed, trials, suite);
    print_doc(out, report_to_json(report));
    return report.passed() ? 0 : 3;
}

int cmd_report(const std::string& path, const SearchFlags& flags, const std::string& format,
               std::ostream& out) {
    if (format != "json" && format != "csv" && format != "svg") {
        throw ValidationError("--format must be json, csv, or svg");
    }
    ProblemFile p = load_problem(path);
    std::size_t domain_size = problem_domain(p).size();
    FunctionTable f = problem_table(p);
    VariationEstimate est = estimate_for(p, f, flags.resolve(p, domain_size));

    if (format == "svg") {
        std::optional<Line> line;
        if (!est.lower_witness.empty()) line = vf_max(est.lower_witness).witness.base;
        out << emit_svg(p.points, est.lower_witness, line);
        return 0;
    }
    ordered_json doc = estimate_to_json(est, p.points);
    if (format == "csv") {
        out << emit_csv({"lower", "upper", "exact", "upper_rule", "witness"},
                        {estimate_csv_row(doc)});
    } else {
        print_doc(out, doc);
    }
    return 0;
}

}  // namespace

int run_command(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"crossing-count variation toolkit"};
    app.require_subcommand(1);

    auto* vf_cmd = app.add_subcommand("vf", "crossing count of a point list");
    std::string vf_path;
    std::string vf_line;
    bool vf_explain = false;
    vf_cmd->add_option("--list", vf_path, "problem file with the traversal points")
        ->required();
    CLI::Option* vf_line_opt =
        vf_cmd->add_option("--line", vf_line, "fixed line \"a,b,c\" instead of the maximizer");
    vf_cmd->add_flag("--explain", vf_explain, "print the per-segment classification table");

    auto* var_cmd = app.add_subcommand("var", "two-sided variation estimate");
    std::string var_path;
    std::string var_format = "json";
    SearchFlags var_flags;
    var_cmd->add_option("--problem", var_path, "problem file")->required();
    var_flags.attach(var_cmd);
    var_cmd->add_option("--format", var_format, "output format: json or csv");

    auto* norm_cmd = app.add_subcommand("norm", "algebra norm bounds after optional operations");
    std::string norm_path;
    std::string norm_ops;
    SearchFlags norm_flags;
    norm_cmd->add_option("--problem", norm_path, "problem file")->required();
    norm_cmd->add_option("--ops", norm_ops,
                         "pipeline like \"add:g.json|mul:h.json|abs|max:k.json\"");
    norm_flags.attach(norm_cmd);

    auto* circle_cmd = app.add_subcommand("circle-compare",
                                          "circle variation against the planar certificate");
    std::string circle_path;
    int circle_repeat = 25;
    circle_cmd->add_option("--sample", circle_path, "circle sample file")->required();
    circle_cmd->add_option("--repeat", circle_repeat, "cycle repetition count")
        ->check(CLI::Range(1, 1'000'000));

    auto* verify_cmd = app.add_subcommand("verify", "randomized property suite");
    std::uint64_t verify_seed = 0;
    std::uint64_t verify_trials = 100;
    std::string verify_suite_name = "all";
    verify_cmd->add_option("--seed", verify_seed, "base seed for every property stream")
        ->required();
    verify_cmd->add_option("--trials", verify_trials, "trials per property")
        ->check(CLI::Range(std::uint64_t(1), std::uint64_t(1'000'000)));
    verify_cmd->add_option("--suite", verify_suite_name,
                           "all, geom-only, vf-only, engine-only, algebra-only, circle-only");

    auto* report_cmd = app.add_subcommand("report", "estimate document as json, csv, or svg");
    std::string report_path;
    std::string report_format = "json";
    SearchFlags report_flags;
    report_cmd->add_option("--problem", report_path, "problem file")->required();
    report_cmd->add_option("--format", report_format, "output format: json, csv, or svg");
    report_flags.attach(report_cmd);

    std::vector<const char*> argv;
    argv.reserve(args.size() + 1);
    argv.push_back("planevar");
    for (const std::string& a : args) argv.push_back(a.c_str());

    try {
        app.parse(static_cast<int>(argv.size()), argv.data());
    } catch (const CLI::CallForHelp&) {
        out << app.help();
        return 0;
    } catch (const CLI::CallForAllHelp&) {
        out << app.help("", CLI::AppFormatMode::All);
        return 0;
    } catch (const CLI::ParseError& e) {
        return fail_with(out, e.what());
    }

    try {
        if (app.got_subcommand(vf_cmd)) {
            std::optional<std::string> line_spec;
            if (vf_line_opt->count() > 0) line_spec = vf_line;
            return cmd_vf(vf_path, line_spec, vf_explain, out);
        }
        if (app.got_subcommand(var_cmd)) return cmd_var(var_path, var_flags, var_format, out);
        if (app.got_subcommand(norm_cmd)) return cmd_norm(norm_path, norm_ops, norm_flags, out);
        if (app.got_subcommand(circle_cmd)) return cmd_circle(circle_path, circle_repeat, out);
        if (app.got_subcommand(verify_cmd)) {
            return cmd_verify(verify_seed, verify_trials, verify_suite_name, out);
        }
        if (app.got_subcommand(report_cmd)) {
            return cmd_report(report_path, report_flags, report_format, out);
        }
        err << "no subcommand selected\n";
        return 2;
    } catch (const std::exception& e) {
        return fail_with(out, e.what());
    }
}

int run_command(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
    std::vector<std::string> args;
    args.reserve(argc > 0 ? static_cast<std::size_t>(argc) - 1 : 0);
    for (int i = 1; i < argc; ++i) args.emplace_back(argv[i]);
    return run_command(args, out, err);
}

}  // namespace planevar
