#include "support.hpp"

#include <cstdlib>
#include <fstream>
#include <sstream>

#include "planevar/cli.hpp"
#include "planevar/report.hpp"
#include "planevar/verify.hpp"

using namespace planevar;

namespace {

struct RunResult {
    int code;
    std::string out;
    std::string err;
};

RunResult run(std::vector<std::string> args) {
    std::ostringstream out, err;
    int code = run_command(args, out, err);
    return {code, out.str(), err.str()};
}

void write_file(const std::string& path, const std::string& text) {
    std::ofstream f(path);
    REQUIRE(f.good());
    f << text;
}

const char* kZigzagProblem = R"({"schema_version": 1, "points": [
    {"x": 1, "y": 0}, {"x": 2, "y": 1}, {"x": 3, "y": 0}, {"x": 5, "y": 0},
    {"x": 4, "y": 1}, {"x": 5, "y": -1}, {"x": 6, "y": -1}, {"x": 7, "y": 1},
    {"x": 8, "y": 0}]})";

const char* kValleyProblem = R"({"schema_version": 1,
    "points": [{"x": 1, "y": 0}, {"x": 0, "y": 0}, {"x": "1/2", "y": 0}],
    "values": [2, 2, 1]})";

}  // namespace

TEST_CASE("vf against a fixed line reports the frozen classification") {
    write_file("cli_zigzag.json", kZigzagProblem);
    RunResult r = run({"vf", "--list", "cli_zigzag.json", "--line", "0,1,0"});
    REQUIRE(r.code == 0);

    auto doc = nlohmann::ordered_json::parse(r.out);
    CHECK(doc.at("vf") == 5);
    std::vector<std::string> want{"Type2",       "Type3", "NonCrossing", "NonCrossing",
                                  "Type1",       "NonCrossing", "Type1", "Type3"};
    CHECK(doc.at("segments").get<std::vector<std::string>>() == want);
}

TEST_CASE("vf without a line reports the maximizer") {
    write_file("cli_axis.json",
               R"({"schema_version": 1, "points": [
                   {"x": 2, "y": 0}, {"x": 4, "y": 0}, {"x": 1, "y": 0},
                   {"x": 1, "y": 0}, {"x": 3, "y": 0}, {"x": 2, "y": 0}]})");
    RunResult r = run({"vf", "--list", "cli_axis.json"});
    REQUIRE(r.code == 0);
    auto doc = nlohmann::ordered_json::parse(r.out);
    CHECK(doc.at("vf") == 4);
    CHECK(doc.contains("witness"));
    CHECK(doc.at("witness").contains("line"));
    CHECK(doc.at("witness").contains("move"));
}

TEST_CASE("vf explain prints the segment table") {
    write_file("cli_zigzag.json", kZigzagProblem);
    RunResult r = run({"vf", "--list", "cli_zigzag.json", "--line", "0,1,0", "--explain"});
    REQUIRE(r.code == 0);
    CHECK(r.out.find("segment") != std::string::npos);
    CHECK(r.out.find("Type2") != std::string::npos);
    CHECK(r.out.find("vf = 5") != std::string::npos);
}

TEST_CASE("var reports witness indices in the order points were given") {
    write_file("cli_valley.json", kValleyProblem);
    RunResult r = run({"var", "--problem", "cli_valley.json"});
    REQUIRE(r.code == 0);

    auto doc = nlohmann::ordered_json::parse(r.out);
    CHECK(doc.at("lower") == 2.0);
    CHECK(doc.at("upper") == 2.0);
    CHECK(doc.at("exact") == true);
    CHECK(doc.at("value") == 2.0);
    CHECK(doc.at("upper_rule") == "Exact1D");
    CHECK(doc.at("witness").get<std::vector<int>>() == std::vector<int>{1, 2, 0});

    std::vector<std::string> keys;
    for (auto it = doc.begin(); it != doc.end(); ++it) keys.push_back(it.key());
    CHECK(keys == std::vector<std::string>{"lower", "upper", "exact", "value", "witness",
                                           "upper_rule"});
}

TEST_CASE("var csv is a header and one row") {
    write_file("cli_valley.json", kValleyProblem);
    RunResult r = run({"var", "--problem", "cli_valley.json", "--format", "csv"});
    REQUIRE(r.code == 0);
    CHECK(r.out == "lower,upper,exact,upper_rule,witness\n2.0,2.0,true,Exact1D,1;2;0\n");
}

TEST_CASE("identical invocations produce identical bytes") {
    write_file("cli_valley.json", kValleyProblem);
    RunResult a = run({"var", "--problem", "cli_valley.json"});
    RunResult b = run({"var", "--problem", "cli_valley.json"});
    CHECK(a.out == b.out);

    RunResult v1 = run({"verify", "--seed", "11", "--trials", "3", "--suite", "geom-only"});
    RunResult v2 = run({"verify", "--seed", "11", "--trials", "3", "--suite", "geom-only"});
    CHECK(v1.code == 0);
    CHECK(v1.out == v2.out);
}

TEST_CASE("emitted json re-parses to the same document") {
    write_file("cli_valley.json", kValleyProblem);
    RunResult r = run({"var", "--problem", "cli_valley.json"});
    auto doc = nlohmann::ordered_json::parse(r.out);
    CHECK(doc.dump(2) + "\n" == r.out);
}

TEST_CASE("option overlay: command line beats file options") {
    // The fourth point sits on a hull edge, so no closed-form rule applies and
    // the lower bound is whatever the search finds: repeated two-point cycles
    // reach exactly 1.0 at any depth, the three axis points in order reach 2.0
    // once lists of length three are allowed.
    write_file("cli_opts.json",
               R"({"schema_version": 1,
                   "points": [{"x": 0, "y": 0}, {"x": 1, "y": 0}, {"x": 2, "y": 0},
                              {"x": 1, "y": 1}],
                   "values": [0, 1, 0, 0],
                   "options": {"depth": 1, "repeat": 1}})");
    RunResult file_only = run({"var", "--problem", "cli_opts.json"});
    RunResult overridden = run({"var", "--problem", "cli_opts.json", "--depth", "6"});
    REQUIRE(file_only.code == 0);
    REQUIRE(overridden.code == 0);

    auto weak = nlohmann::ordered_json::parse(file_only.out);
    auto strong = nlohmann::ordered_json::parse(overridden.out);
    CHECK(weak.at("lower") == 1.0);
    CHECK(weak.at("upper") == 2.0);
    CHECK(weak.at("exact") == false);
    CHECK(strong.at("lower") == 2.0);
    CHECK(strong.at("upper") == 2.0);
    CHECK(strong.at("exact") == true);
    CHECK(strong.at("value") == 2.0);
}

TEST_CASE("validation failures exit 2 with an error document") {
    auto expect_error = [](std::vector<std::string> args) {
        RunResult r = run(std::move(args));
        CHECK(r.code == 2);
        auto doc = nlohmann::ordered_json::parse(r.out);
        CHECK(doc.contains("error"));
    };

    expect_error({"var", "--problem", "cli_missing_file.json"});

    write_file("cli_unknown_key.json",
               R"({"schema_version": 1, "points": [{"x": 0, "y": 0}], "junk": 1})");
    expect_error({"var", "--problem", "cli_unknown_key.json"});

    write_file("cli_float_coord.json",
               R"({"schema_version": 1, "points": [{"x": 0.25, "y": 0}], "values": [1]})");
    expect_error({"var", "--problem", "cli_float_coord.json"});

    write_file("cli_dup_point.json",
               R"({"schema_version": 1,
                   "points": [{"x": 0, "y": 0}, {"x": 0, "y": 0}], "values": [1, 2]})");
    expect_error({"var", "--problem", "cli_dup_point.json"});

    write_file("cli_zigzag.json", kZigzagProblem);
    expect_error({"vf", "--list", "cli_zigzag.json", "--line", "0,1"});
    expect_error({"vf", "--list", "cli_zigzag.json", "--line", "0,0,1"});

    write_file("cli_valley.json", kValleyProblem);
    expect_error({"var", "--problem", "cli_valley.json", "--format", "yaml"});
    expect_error({"verify", "--trials", "5"});
    expect_error({"verify", "--seed", "1", "--suite", "bogus-only"});
    expect_error({"badcommand"});
    expect_error({});

    write_file("cli_interleaved.json",
               R"({"schema_version": 1,
                   "points": [{"x": 0, "y": 0}, {"x": 1, "y": 0}, {"x": "1/3", "y": 0},
                              {"x": "1/5", "y": 0}, {"x": "1/7", "y": 0}, {"x": "1/2", "y": 0},
                              {"x": "1/4", "y": 0}, {"x": "1/6", "y": 0}],
                   "values": [0, 1, 0, 1, 0, 1, 0, 1],
                   "subset_labels": ["both", "first", "first", "first", "first",
                                     "second", "second", "second"]})");
    expect_error({"var", "--problem", "cli_interleaved.json"});
}

TEST_CASE("help requests succeed") {
    RunResult r = run({"--help"});
    CHECK(r.code == 0);
    CHECK(r.out.find("vf") != std::string::npos);
    CHECK(r.out.find("verify") != std::string::npos);
}

TEST_CASE("norm pipeline composes operations left to right") {
    write_file("cli_f3.json",
               R"({"schema_version": 1,
                   "points": [{"x": 0, "y": 0}, {"x": "1/2", "y": 0}, {"x": 1, "y": 0}],
                   "values": [3, 3, 3]})");
    write_file("cli_g4.json",
               R"({"schema_version": 1,
                   "points": [{"x": 0, "y": 0}, {"x": "1/2", "y": 0}, {"x": 1, "y": 0}],
                   "values": [2, 1, 2]})");

    RunResult base = run({"norm", "--problem", "cli_g4.json"});
    REQUIRE(base.code == 0);
    auto doc = nlohmann::ordered_json::parse(base.out);
    CHECK(doc.at("sup") == 2.0);
    CHECK(doc.at("norm").at("lower") == 4.0);
    CHECK(doc.at("norm").at("upper") == 4.0);

    RunResult piped = run({"norm", "--problem", "cli_f3.json", "--ops", "mul:cli_g4.json|abs"});
    REQUIRE(piped.code == 0);
    auto piped_doc = nlohmann::ordered_json::parse(piped.out);
    CHECK(piped_doc.at("sup") == 6.0);
    CHECK(piped_doc.at("variation").at("value") == 6.0);

    RunResult bad = run({"norm", "--problem", "cli_f3.json", "--ops", "frobnicate:x.json"});
    CHECK(bad.code == 2);

    write_file("cli_other_domain.json",
               R"({"schema_version": 1,
                   "points": [{"x": 0, "y": 0}, {"x": 2, "y": 0}], "values": [1, 1]})");
    RunResult mismatch =
        run({"norm", "--problem", "cli_f3.json", "--ops", "add:cli_other_domain.json"});
    CHECK(mismatch.code == 2);
}

TEST_CASE("circle compare via files, bare and enveloped") {
    const char* bare = R"({"angles_pi": ["0", "1/4", "1/2", "3/4", "1", "5/4", "3/2", "7/4", "2"],
                           "values": [1, 0, 0, 0, 0, 0, 0, 0, 1]})";
    write_file("cli_chi.json", bare);
    RunResult r = run({"circle-compare", "--sample", "cli_chi.json", "--repeat", "25"});
    REQUIRE(r.code == 0);
    auto doc = nlohmann::ordered_json::parse(r.out);
    CHECK(doc.at("var_bg") == 2.0);
    CHECK(doc.at("planar").at("value") == 1.0);
    CHECK(doc.at("crossing_count") == 51);
    CHECK(doc.at("upper_within_bg") == true);
    CHECK(doc.at("bg_within_doubled") == true);

    std::string envelope = std::string(R"({"schema_version": 1, "circle": )") + bare + "}";
    write_file("cli_chi_env.json", envelope);
    RunResult enveloped = run({"circle-compare", "--sample", "cli_chi_env.json"});
    CHECK(enveloped.code == 0);
    CHECK(enveloped.out == r.out);
}

TEST_CASE("report formats: json, csv, svg") {
    write_file("cli_valley.json", kValleyProblem);
    RunResult as_var = run({"var", "--problem", "cli_valley.json"});
    RunResult as_report = run({"report", "--problem", "cli_valley.json", "--format", "json"});
    CHECK(as_report.out == as_var.out);

    RunResult csv = run({"report", "--problem", "cli_valley.json", "--format", "csv"});
    CHECK(csv.out.rfind("lower,upper,exact,upper_rule,witness\n", 0) == 0);

    write_file("cli_square.json",
               R"({"schema_version": 1,
                   "points": [{"x": 0, "y": 0}, {"x": 1, "y": 0}, {"x": 0, "y": 1},
                              {"x": 1, "y": 1}],
                   "values": [[0, 0], [1, 0], [0, 1], [1, 1]]})");
    RunResult svg = run({"report", "--problem", "cli_square.json", "--format", "svg"});
    REQUIRE(svg.code == 0);
    CHECK(svg.out.rfind("<svg", 0) == 0);
    CHECK(svg.out.find("</svg>\n") != std::string::npos);
    CHECK(svg.out.find("<polyline") != std::string::npos);
    CHECK(svg.out.find("<line") != std::string::npos);

    std::size_t circles = 0;
    for (std::size_t pos = svg.out.find("<circle"); pos != std::string::npos;
         pos = svg.out.find("<circle", pos + 1)) {
        ++circles;
    }
    CHECK(circles == 4);
}

TEST_CASE("csv emitter quotes and validates") {
    CHECK(emit_csv({"a", "b"}, {}) == "a,b\n");
    CHECK(emit_csv({"a", "b"}, {{"1", "x,y"}}) == "a,b\n1,\"x,y\"\n");
    CHECK(emit_csv({"a"}, {{"say \"hi\""}}) == "a\n\"say \"\"hi\"\"\"\n");
    CHECK_THROWS_AS(emit_csv({"a", "b"}, {{"1"}}), ValidationError);
}

TEST_CASE("a broken counting rule is caught by the suite with the fixture witness") {
    CrossingHooks broken;
    broken.on_line = [](const PointList& S, const PerturbedLine& l) {
        int honest = vf_on_line(S, l);
        SignVector sv = sign_vector(S, l);
        // Drop the crossing a list opens with when it starts on the line, the
        // kind of off-by-one a misread boundary rule produces.
        if (!sv.empty() && sv.front() == 0 && honest > 0) return honest - 1;
        return honest;
    };

    VerificationReport report = verify_suite(5, 40, "vf-only", broken);
    CHECK_FALSE(report.passed());

    const PropertyResult* oracle = nullptr;
    for (const PropertyResult& p : report.properties) {
        if (p.name == "crossing-oracle-equality") oracle = &p;
    }
    REQUIRE(oracle != nullptr);
    CHECK(oracle->violations > 0);
    REQUIRE(oracle->worst.is_object());
    CHECK(oracle->worst.at("trial") == 0);
    CHECK(oracle->worst.at("points").size() == 9);

    VerificationReport honest = verify_suite(5, 40, "vf-only");
    CHECK(honest.passed());
}

TEST_CASE("suite filters select their group") {
    VerificationReport geom = verify_suite(1, 2, "geom-only");
    CHECK(geom.properties.size() == 3);
    for (const auto& p : geom.properties) CHECK(p.group == "geom");

    VerificationReport all = verify_suite(1, 1, "all");
    CHECK(all.properties.size() == 23);

    CHECK_THROWS_AS(verify_suite(1, 1, "nonsense"), ValidationError);
    CHECK_THROWS_AS(verify_suite(1, 0, "all"), ValidationError);
}

TEST_CASE("thread cap honors the environment") {
    setenv("VARIATION_THREADS", "1", 1);
    CHECK(effective_thread_cap() == 1u);
    setenv("VARIATION_THREADS", "garbage", 1);
    CHECK(effective_thread_cap() >= 1u);
    unsetenv("VARIATION_THREADS");
    CHECK(effective_thread_cap() >= 1u);
}
