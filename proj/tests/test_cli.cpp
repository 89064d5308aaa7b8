#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "onecenter/cli.hpp"
#include "onecenter/errors.hpp"
#include "onecenter/instance.hpp"
#include "onecenter/oracle.hpp"
#include "onecenter/serialize.hpp"
#include "testutil.hpp"

#include <cstdio>
#include <fstream>
#include <sstream>

using namespace onecenter;
using testutil::Q;

namespace {

const char* kWorkedLinear = R"({
  "format": 1,
  "dimension": 2,
  "static": [["0", "4"], ["-2", "2"]],
  "mobile": [[{"num": ["0", "1"], "den": ["1"]}, {"num": ["0"], "den": ["1"]}]],
  "domain": ["-4", "8"],
  "options": {"seed": 7, "samples": 200}
})";

const char* kWorkedCubic = R"({
  "format": 1,
  "dimension": 2,
  "static": [["0", "4"], ["-2", "2"]],
  "mobile": [[{"num": [0, 0, 0, 1], "den": [1]}, {"num": [0], "den": [1]}]],
  "domain": ["-2", "2"]
})";

struct TempFile {
    std::string path;
    explicit TempFile(const std::string& name, const std::string& content) {
        path = std::string("/tmp/onecenter_test_") + name;
        std::ofstream f(path);
        f << content;
    }
    ~TempFile() { std::remove(path.c_str()); }
};

struct CliRun {
    int code;
    std::string out;
    std::string err;
};

CliRun cli(const std::vector<std::string>& args) {
    std::ostringstream out, err;
    const int code = run_cli(args, out, err);
    return {code, out.str(), err.str()};
}

} // namespace

TEST_CASE("config parsing") {
    SUBCASE("decimal coordinates parse exactly") {
        auto j = nlohmann::json::parse(kWorkedLinear);
        j["static"][0][0] = "0.25";
        const auto cfg = instance_from_json(j);
        CHECK(cfg.statics[0].x[0] == Q(1, 4));
    }
    SUBCASE("binary floats rejected") {
        auto j = nlohmann::json::parse(kWorkedLinear);
        j["static"][0][0] = 0.25;
        CHECK_THROWS_AS(instance_from_json(j), ValidationError);
    }
    SUBCASE("duplicate statics rejected") {
        auto j = nlohmann::json::parse(kWorkedLinear);
        j["static"][1] = j["static"][0];
        CHECK_THROWS_AS(instance_from_json(j), ValidationError);
    }
    SUBCASE("vanishing mobile denominator rejected") {
        auto j = nlohmann::json::parse(kWorkedLinear);
        j["mobile"][0][0]["num"] = {1};    // 1/t has a pole inside the domain
        j["mobile"][0][0]["den"] = {0, 1};
        CHECK_THROWS_AS(instance_from_json(j), ValidationError);
    }
    SUBCASE("removable factor in a curve component is reduced, then accepted") {
        auto j = nlohmann::json::parse(kWorkedLinear);
        j["mobile"][0][0]["num"] = {0, 0, 1}; // t^2 / t == t as a rational function
        j["mobile"][0][0]["den"] = {0, 1};
        const auto cfg = instance_from_json(j);
        CHECK(cfg.mobiles[0].components[0] == RatFn(Poly::variable()));
    }
}

TEST_CASE("cmd trace: worked instance output") {
    TempFile cfg("trace.json", kWorkedLinear);
    const auto r = cli({"trace", "-c", cfg.path});
    REQUIRE(r.code == 0);
    const auto j = nlohmann::json::parse(r.out);
    CHECK(j.at("format") == 1);
    CHECK(j.at("arcs").size() == 3);
    CHECK(j.at("events").size() == 4); // START, two interior, END
    CHECK(j.at("events")[1].at("time").at("approx") == "0.000000000000");
    CHECK(j.at("events")[2].at("time").at("approx") == "4.000000000000");
    CHECK(j.at("arcs")[1].at("support").at("static") == nlohmann::json::array({0, 1}));
}

TEST_CASE("trace output round-trips and evaluates identically") {
    TempFile cfg("roundtrip.json", kWorkedLinear);
    const auto r = cli({"trace", "-c", cfg.path});
    REQUIRE(r.code == 0);
    const auto parsed = piecewise_from_json(nlohmann::json::parse(r.out));

    const auto direct = trace_single({Point{Q(0), Q(4)}, Point{Q(-2), Q(2)}},
                                     RatCurve({RatFn(Poly::variable()), RatFn(Q(0))}, Interval(Q(-4), Q(8))),
                                     Interval(Q(-4), Q(8)));
    for (long num = -16; num <= 32; ++num) {
        const Rat t(num, 4);
        CHECK(parsed.eval(t) == direct.eval(t));
    }
}

TEST_CASE("determinism: identical config and seed give byte-identical output") {
    TempFile cfg("det.json", kWorkedLinear);
    const auto a = cli({"trace", "-c", cfg.path});
    const auto b = cli({"trace", "-c", cfg.path});
    CHECK(a.out == b.out);
    TempFile cfg2("det2.json", kWorkedCubic);
    const auto c = cli({"trace", "-c", cfg2.path});
    const auto d = cli({"trace", "-c", cfg2.path});
    CHECK(c.out == d.out);
}

TEST_CASE("cubic instance reports the algebraic event within refine width") {
    TempFile cfg("cubic_ev.json", kWorkedCubic);
    const auto r = cli({"trace", "-c", cfg.path});
    REQUIRE(r.code == 0);
    const auto j = nlohmann::json::parse(r.out);
    const std::string approx = j.at("events")[2].at("time").at("approx");
    // 2^(2/3) = 1.587401051968199...
    CHECK(approx.substr(0, 13) == "1.58740105196");
}

TEST_CASE("cmd verify") {
    SUBCASE("worked instances verify clean") {
        TempFile cfg("verify.json", kWorkedLinear);
        const auto r = cli({"verify", "-c", cfg.path});
        CHECK(r.code == 0);
        const auto j = nlohmann::json::parse(r.out);
        CHECK(j.at("ok") == true);
        CHECK(j.at("failures").empty());
        CHECK(j.at("max_dev") == "0");
    }
    SUBCASE("cubic instance verifies clean") {
        TempFile cfg("verify2.json", kWorkedCubic);
        const auto r = cli({"verify", "-c", cfg.path, "--samples", "150"});
        CHECK(r.code == 0);
    }
}

TEST_CASE("cmd eval") {
    TempFile cfg("eval.json", kWorkedLinear);
    SUBCASE("middle branch at t=2") {
        const auto r = cli({"eval", "-c", cfg.path, "--t", "2"});
        REQUIRE(r.code == 0);
        const auto j = nlohmann::json::parse(r.out);
        CHECK(j.at("point")[0] == "1/3");
        CHECK(j.at("point")[1] == "5/3");
    }
    SUBCASE("derivatives at the first event") {
        const auto r = cli({"eval", "-c", cfg.path, "--t", "0", "--derivative", "both"});
        REQUIRE(r.code == 0);
        const auto j = nlohmann::json::parse(r.out);
        CHECK(j.at("derivative").at("left") == nlohmann::json::array({"1/2", "0"}));
        CHECK(j.at("derivative").at("right") == nlohmann::json::array({"0", "0"}));
    }
    SUBCASE("outside the domain: exit 2") {
        const auto r = cli({"eval", "-c", cfg.path, "--t", "100"});
        CHECK(r.code == 2);
    }
}

TEST_CASE("cmd plot") {
    TempFile cfg("plot.json", kWorkedLinear);
    SUBCASE("csv rows") {
        const std::string out_path = "/tmp/onecenter_test_plot.csv";
        const auto r = cli({"plot", "-c", cfg.path, "--format", "csv", "--samples", "4", "-o", out_path});
        REQUIRE(r.code == 0);
        std::ifstream f(out_path);
        std::string text((std::istreambuf_iterator<char>(f)), std::istreambuf_iterator<char>());
        CHECK(text.rfind("t,x,y\n", 0) == 0);
        CHECK(text.find("# arc 0") != std::string::npos);
        CHECK(text.find("2,0.333333333333,1.66666666667") != std::string::npos);
        std::remove(out_path.c_str());
    }
    SUBCASE("samples=1 gives endpoints only") {
        const std::string out_path = "/tmp/onecenter_test_plot1.csv";
        const auto r = cli({"plot", "-c", cfg.path, "--format", "csv", "--samples", "1", "-o", out_path});
        REQUIRE(r.code == 0);
        std::ifstream f(out_path);
        std::string line;
        int rows = 0;
        while (std::getline(f, line))
            if (!line.empty() && line[0] != '#' && line.find("t,x,y") == std::string::npos) ++rows;
        CHECK(rows == 6); // 3 arcs x 2 endpoints
        std::remove(out_path.c_str());
    }
    SUBCASE("svg is deterministic and well formed") {
        const std::string p1 = "/tmp/onecenter_test_plot.svg", p2 = "/tmp/onecenter_test_plot2.svg";
        REQUIRE(cli({"plot", "-c", cfg.path, "-o", p1}).code == 0);
        REQUIRE(cli({"plot", "-c", cfg.path, "-o", p2}).code == 0);
        std::ifstream f1(p1), f2(p2);
        std::string s1((std::istreambuf_iterator<char>(f1)), std::istreambuf_iterator<char>());
        std::string s2((std::istreambuf_iterator<char>(f2)), std::istreambuf_iterator<char>());
        CHECK(s1 == s2);
        CHECK(s1.rfind("<svg", 0) == 0);
        CHECK(s1.find("<polyline") != std::string::npos);
        CHECK(s1.find("</svg>") != std::string::npos);
        std::remove(p1.c_str());
        std::remove(p2.c_str());
    }
}

TEST_CASE("cmd seb") {
    TempFile pts("seb_pts.json", R"({"dimension": 2, "points": [["0","0"],["4","0"],["1","1"]]})");
    const auto r = cli({"seb", pts.path, "--check"});
    REQUIRE(r.code == 0);
    const auto j = nlohmann::json::parse(r.out);
    CHECK(j.at("center") == nlohmann::json::array({"2", "0"}));
    CHECK(j.at("radius_sq") == "4");
    CHECK(j.at("support") == nlohmann::json::array({0, 1}));
    CHECK(j.at("check") == "ok");

    TempFile single("seb_single.json", R"({"dimension": 2, "points": [["3","-1"]]})");
    const auto r2 = cli({"seb", single.path});
    REQUIRE(r2.code == 0);
    CHECK(nlohmann::json::parse(r2.out).at("radius_sq") == "0");
}

TEST_CASE("exit codes") {
    SUBCASE("validation failure: 2") {
        TempFile bad("bad.json", R"({"format":1,"dimension":2,"static":[["0","0"],["0","0"]],
          "mobile":[[{"num":["0","1"],"den":["1"]},{"num":["0"],"den":["1"]}]],"domain":["0","1"]})");
        const auto r = cli({"trace", "-c", bad.path});
        CHECK(r.code == 2);
        CHECK(r.err.find("validation") != std::string::npos);
    }
    SUBCASE("complexity guard: 3") {
        TempFile guard("guard.json", R"({"format":1,"dimension":2,
          "static":[["0","13"],["-2","5"],["7","1"],["3","-11"],["-6","-3"],["9","8"]],
          "mobile":[[{"num":["0","1"],"den":["1"]},{"num":["0"],"den":["1"]}],
                    [{"num":["0"],"den":["1"]},{"num":["0","1"],"den":["1"]}]],
          "domain":["0","1"],"options":{"candidate_cap":50}})");
        const auto r = cli({"trace", "-c", guard.path});
        CHECK(r.code == 3);
        CHECK(r.err.find("complexity_guard") != std::string::npos);
    }
    SUBCASE("missing file: 2") {
        CHECK(cli({"trace", "-c", "/nonexistent/nope.json"}).code == 2);
    }
    SUBCASE("usage error: 2") {
        CHECK(cli({"trace"}).code == 2);
        CHECK(cli({"frobnicate"}).code == 2);
    }
}

TEST_CASE("ONECENTER_SEED environment override keeps results valid") {
    TempFile cfg("seed_env.json", kWorkedLinear);
    setenv("ONECENTER_SEED", "987654321", 1);
    const auto r = cli({"verify", "-c", cfg.path, "--samples", "80"});
    unsetenv("ONECENTER_SEED");
    CHECK(r.code == 0);
}
