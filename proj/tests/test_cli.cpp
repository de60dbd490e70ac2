#include <fstream>
#include <sstream>

#include <catch_amalgamated.hpp>

#include "hochhom/cli.hpp"
#include "hochhom/presets.hpp"

using namespace hochhom;

namespace {

struct Outcome
{
    int code;
    std::string out;
    std::string err;
};

Outcome run_cli(const std::vector<std::string>& args)
{
    std::ostringstream out, err;
    int code = run(args, out, err);
    return {code, out.str(), err.str()};
}

std::string config_path(const std::string& name)
{
    return std::string(HOCHHOM_CONFIG_DIR) + "/" + name;
}

}   // namespace

TEST_CASE("Config round trip")
{
    for (const std::string& name : {"weyl:1", "weyl:2", "semiclassical:2:4", "semiclassical-rational:2:1/3",
                                    "free:2:1", "free:3:0", "mixed-minimal:3", "mixed-minimal-rational:2"})
    {
        RunConfig c = preset_config(name);
        REQUIRE(parse_config(emit_config(c)) == c);
        REQUIRE(emit_config(parse_config(emit_config(c))) == emit_config(c));
    }
    RunConfig c = preset_config("free:2:1");
    c.w_min = -3;
    c.w_max = 5;
    c.trunc = 4;
    c.bound = 6;
    c.suite = "quotient";
    c.format = "json";
    REQUIRE(parse_config(emit_config(c)) == c);

    RunConfig file = load_config(config_path("free21.json"));
    REQUIRE(file == preset_config("free:2:1"));
    REQUIRE(load_config(config_path("weyl1.json")) == preset_config("weyl:1"));
    REQUIRE(load_config(config_path("mixed2.json")) == preset_config("mixed-minimal-rational:2"));
}

TEST_CASE("Config parsing accepts the documented schema")
{
    RunConfig c = parse_config(
        R"({"n": 2, "r": 1, "scalar": {"type": "cyclotomic", "order": 2, "exponents": [[0,-1],[1,0]]}})");
    REQUIRE(c == preset_config("mixed-minimal:2"));
    RunConfig q = parse_config(R"({"n": 2, "r": 0, "scalar": {"type": "rational", "values": [["1","1/2"],["2","1"]]}})");
    REQUIRE(spec_from_config(q).lambda(0, 1) == Scalar(Rational(1, 2)));
}

TEST_CASE("Config errors")
{
    const std::string scalar1 = R"("scalar": {"type": "rational", "values": [["1"]]})";
    REQUIRE_THROWS_AS(parse_config("not json"), ConfigError);
    REQUIRE_THROWS_AS(parse_config("[]"), ConfigError);
    REQUIRE_THROWS_AS(parse_config(R"({"n": 1, "r": 1})"), ConfigError);
    REQUIRE_THROWS_AS(parse_config(R"({"n": 1, "r": 2, )" + scalar1 + "}"), ConfigError);
    REQUIRE_THROWS_AS(parse_config(R"({"n": 2, "r": 1, )" + scalar1 + "}"), ConfigError);
    REQUIRE_THROWS_AS(parse_config(R"({"n": 1, "r": 1, "extra": 0, )" + scalar1 + "}"), ConfigError);
    REQUIRE_THROWS_AS(parse_config(R"({"n": 1, "r": 1, "format": "xml", )" + scalar1 + "}"), ConfigError);
    REQUIRE_THROWS_AS(parse_config(R"({"n": 1, "r": 1, "suite": "nope", )" + scalar1 + "}"), ConfigError);
    REQUIRE_THROWS_AS(
        parse_config(R"({"n": 1, "r": 1, "scalar": {"type": "rational", "values": [["1/0"]]}})"), ConfigError);
    REQUIRE_THROWS_AS(
        parse_config(R"({"n": 1, "r": 1, "scalar": {"type": "complex", "values": [["1"]]}})"), ConfigError);
    REQUIRE_THROWS_AS(preset_config("weyl:4"), ConfigError);
    REQUIRE_THROWS_AS(preset_config("free:4:3"), ConfigError);
    REQUIRE_THROWS_AS(preset_config("unknown:1"), ConfigError);
    REQUIRE_THROWS_AS(preset_config("free:2"), ConfigError);

    RunConfig bad = preset_config("free:2:1");
    std::get<RationalModel>(bad.model).values[1][0] = Rational(3);
    REQUIRE_THROWS_AS(spec_from_config(bad), ConfigError);
}

TEST_CASE("Exit codes")
{
    Outcome hh = run_cli({"hh", "--config", config_path("weyl1.json"), "--wmin", "-2", "--wmax", "2"});
    REQUIRE(hh.code == 0);

    Outcome dual = run_cli({"verify", "--config", config_path("mixed2.json"), "--suite", "duality"});
    REQUIRE(dual.code == 1);
    REQUIRE(dual.out.find("row 1 product = 2") != std::string::npos);

    REQUIRE(run_cli({"oracle", "--config", config_path("free21.json"), "--wmax", "4"}).code == 0);
    REQUIRE(run_cli({"verify", "--preset", "weyl:1"}).code == 0);
    REQUIRE(run_cli({"verify", "--preset", "mixed-minimal:2", "--suite", "all"}).code == 0);
    REQUIRE(run_cli({"cohh", "--preset", "weyl:1"}).code == 0);

    REQUIRE(run_cli({}).code == 2);
    REQUIRE(run_cli({"frobnicate"}).code == 2);
    REQUIRE(run_cli({"hh"}).code == 2);
    REQUIRE(run_cli({"hh", "--preset", "weyl:1", "--config", config_path("weyl1.json")}).code == 2);
    REQUIRE(run_cli({"hh", "--config", config_path("missing.json")}).code == 2);
    REQUIRE(run_cli({"hh", "--preset", "weyl:1", "--wmin", "-3"}).code == 2);
    REQUIRE(run_cli({"hh", "--preset", "weyl:1", "--format", "xml"}).code == 2);
    REQUIRE(run_cli({"verify", "--preset", "weyl:1", "--suite", "nope"}).code == 2);
    REQUIRE(run_cli({"cohh", "--preset", "weyl:1", "--trunc", "0"}).code == 2);
    REQUIRE(run_cli({"oracle", "--preset", "semiclassical:1:1", "--wmax", "0"}).code == 0);
    REQUIRE(run_cli({"--help"}).code == 0);
}

TEST_CASE("Oracle command on an unsupported regime is a config error")
{
    std::string cfg = R"({"n": 3, "r": 1, "scalar": {"type": "cyclotomic", "order": 4,
        "exponents": [[0,1,1],[-1,0,1],[-1,-1,0]]}})";
    std::string path = "hochhom_test_unsupported.json";
    std::ofstream(path) << cfg;
    Outcome o = run_cli({"oracle", "--config", path});
    REQUIRE(o.code == 2);
    REQUIRE(o.err.find("unsupported") != std::string::npos);
    REQUIRE(run_cli({"hh", "--config", path, "--wmax", "0"}).code == 0);
}

TEST_CASE("Reports are deterministic and carry the schema")
{
    std::vector<std::string> args{"hh", "--preset", "mixed-minimal:3", "--wmax", "3", "--representatives",
                                  "--format", "json", "--threads", "3"};
    Outcome a = run_cli(args);
    Outcome b = run_cli(args);
    REQUIRE(a.code == 0);
    REQUIRE(a.out == b.out);
    args[args.size() - 1] = "1";
    REQUIRE(run_cli(args).out == a.out);
    REQUIRE(a.out.find("\"schema\": \"hochhom.report/1\"") != std::string::npos);
    REQUIRE(a.out.find("\"representatives\"") != std::string::npos);

    Outcome weyl = run_cli({"hh", "--config", config_path("weyl1.json"), "--wmin", "-2", "--wmax", "2"});
    REQUIRE(weyl.out.find("    -2   2     1\n") != std::string::npos);
    REQUIRE(weyl.out.find("totals HH_0=0 HH_1=0 HH_2=1") != std::string::npos);

    Outcome json = run_cli({"hh", "--config", config_path("weyl1.json"), "--wmin", "-2", "--wmax", "2", "--format",
                            "json"});
    REQUIRE(json.out.find(R"("entries": [
      {
        "w": -2,
        "k": 2,
        "dim": 1
      }
    ])") != std::string::npos);
}

TEST_CASE("Config bounds act as defaults and flags override them")
{
    std::string path = "hochhom_test_bounds.json";
    std::ofstream(path) << R"({"n": 1, "r": 1, "scalar": {"type": "rational", "values": [["1"]]},
        "w_min": -2, "w_max": -2, "format": "json"})";
    Outcome a = run_cli({"hh", "--config", path});
    REQUIRE(a.out.find("\"w_max\": -2") != std::string::npos);
    Outcome b = run_cli({"hh", "--config", path, "--wmax", "0", "--format", "table"});
    REQUIRE(b.out.find("# window w in [-2, 0]") != std::string::npos);
}
