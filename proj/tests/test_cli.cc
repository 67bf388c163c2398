#include <doctest.h>

#include <filesystem>
#include <fstream>
#include <sstream>

#include "idealtop/cli.hh"
#include "support.hh"

using namespace idealtop;
using test_support::fixture_path;
using test_support::mask;

namespace {

struct Run {
    int code;
    std::string out;
    std::string err;
};

Run run(std::vector<std::string> args)
{
    args.insert(args.begin(), "idealtop");
    std::ostringstream out, err;
    int code = run_cli(args, out, err);
    return {code, out.str(), err.str()};
}

ErrorCode parse_error(const std::string& text)
{
    try {
        parse_space_spec(text);
    } catch (const Error& e) {
        return e.code();
    }
    FAIL("expected a parse error");
    return ErrorCode::kEngineDefect;
}

std::string parse_message(const std::string& text)
{
    try {
        parse_space_spec(text);
    } catch (const Error& e) {
        return e.what();
    }
    return {};
}

std::string temp_file(const std::string& name, const std::string& text)
{
    auto path = std::filesystem::temp_directory_path() / ("idealtop_test_" + name);
    std::ofstream(path) << text;
    return path.string();
}

} // namespace

TEST_CASE("E3.3 fixture file parses")
{
    std::ifstream in(fixture_path("e3_3.json"));
    std::stringstream buf;
    buf << in.rdbuf();
    auto space = parse_space_spec(buf.str());
    CHECK(space.points == std::vector<std::string>{"a", "b", "c"});
    CHECK(space.context.topology().open_count() == 3);
    CHECK(space.context.ideal().max_member() == mask(0b010));
    for (std::size_t i = 0; i < 3; ++i)
        CHECK(space.context.gamma().image(i) == mask(0b111));
    CHECK(space.context == paper_fixtures()[0].context);
}

TEST_CASE("every fixture file matches the built-in fixture")
{
    const char* files[] = {"e3_3.json", "e3_5.json", "e3_7.json", "e3_9.json", "e3_11.json", "e3_13.json"};
    const auto& fx = paper_fixtures();
    for (std::size_t i = 0; i < 6; ++i) {
        std::ifstream in(fixture_path(files[i]));
        std::stringstream buf;
        buf << in.rdbuf();
        auto space = parse_space_spec(buf.str());
        CHECK(space.context == fx[i].context);
        CHECK(space.points == fx[i].points);
    }
}

TEST_CASE("space spec errors carry distinct codes and line numbers")
{
    CHECK(parse_error("{\"points\": [\"a\",") == ErrorCode::kSyntax);
    CHECK(parse_error("[1,2]") == ErrorCode::kSchema);
    CHECK(parse_error(R"({"points":["a"],"opens":[[],["a"]],"ideal":{"max":[]}})") == ErrorCode::kSchema);
    CHECK(parse_error(R"({"points":["a","a"],"opens":[],"ideal":{"max":[]},"gamma":"identity"})") ==
          ErrorCode::kDuplicatePoint);
    CHECK(parse_error(R"({"points":["a"],"opens":[[],["z"]],"ideal":{"max":[]},"gamma":"identity"})") ==
          ErrorCode::kUnknownPoint);
    CHECK(parse_error(R"({"points":["a","b"],"opens":[[],["a"],["b"]],"ideal":{"max":[]},"gamma":"identity"})") ==
          ErrorCode::kNotTopology);
    CHECK(parse_error(
              R"({"points":["a","b"],"opens":[[],["a","b"]],"ideal":{"members":[[],["a","b"]]},"gamma":"identity"})") ==
          ErrorCode::kNotIdeal);
    CHECK(parse_error(R"({"points":["a","b"],"opens":[[],["a","b"]],"ideal":{"max":[]},"gamma":"sideways"})") ==
          ErrorCode::kSchema);
    CHECK(parse_error(R"({"points":["a","b"],"opens":[[],["a"],["a","b"]],"ideal":{"max":[]},
        "gamma":[{"open":["a"],"image":["a"]}]})") == ErrorCode::kGammaIncomplete);
    CHECK(parse_error(R"({"schema_version":7,"points":["a"],"opens":[[],["a"]],"ideal":{"max":[]},"gamma":"identity"})") ==
          ErrorCode::kSchema);

    std::string missing_x = "{\n  \"points\": [\"a\", \"b\"],\n  \"opens\": [[], [\"a\"]],\n"
                            "  \"ideal\": {\"max\": []},\n  \"gamma\": \"identity\"\n}\n";
    CHECK(parse_error(missing_x) == ErrorCode::kNotTopology);
    CHECK(parse_message(missing_x) == "line 3: not a topology: missing X");

    std::string not_expansive = "{\n  \"points\": [\"a\", \"b\", \"c\"],\n  \"opens\": [[], [\"a\", \"c\"], [\"a\", "
                                "\"b\", \"c\"]],\n  \"ideal\": {\"max\": []},\n  \"gamma\": [\n"
                                "    {\"open\": [\"a\", \"c\"], \"image\": [\"a\"]},\n"
                                "    {\"open\": [\"a\", \"b\", \"c\"], \"image\": [\"a\", \"b\", \"c\"]}\n  ]\n}\n";
    CHECK(parse_error(not_expansive) == ErrorCode::kGammaNotExpansive);
    CHECK(parse_message(not_expansive).find("gamma not expansive") != std::string::npos);
    CHECK(parse_message(not_expansive).rfind("line 5:", 0) == 0);

    CHECK(parse_message("{\n\"points\": [\n,]}").rfind("line 3:", 0) == 0);
}

TEST_CASE("ideal members form and explicit gamma table")
{
    auto space = parse_space_spec(R"({"points":["x","y"],"opens":[[],["x"],["x","y"]],
        "ideal":{"members":[[],["y"]]},
        "gamma":[{"open":["x"],"image":["x","y"]},{"open":["x","y"],"image":["x","y"]}]})");
    CHECK(space.context.ideal().max_member() == mask(0b10));
    CHECK(space.context.gamma().image(0) == mask(0));
    CHECK(space.context.gamma().image(1) == mask(0b11));
}

TEST_CASE("subset parsing")
{
    std::vector<std::string> pts{"a", "b", "c"};
    CHECK(parse_subset(pts, "a,c") == mask(0b101));
    CHECK(parse_subset(pts, "{a, c}") == mask(0b101));
    CHECK(parse_subset(pts, "ac") == mask(0b101));
    CHECK(parse_subset(pts, "") == mask(0));
    CHECK(parse_subset(pts, "{}") == mask(0));
    CHECK_THROWS_AS(parse_subset(pts, "q"), Error);
    std::vector<std::string> long_names{"p1", "p2"};
    CHECK(parse_subset(long_names, "p2") == mask(0b10));
}

TEST_CASE("witness and space export round-trips")
{
    Bounds b;
    b.n_max = 3;
    for (const auto& spec : converse_theorems()) {
        auto r = verify(spec, b);
        REQUIRE(r.witness);
        auto j = witness_to_json(*r.witness);
        auto back = witness_from_json(nlohmann::json::parse(j.dump()));
        CHECK(back == *r.witness);
        NamedSpace space{default_point_names(r.witness->context.size()), r.witness->context};
        CHECK(parse_space_spec(export_space_spec(space)) == space);
    }
    for (const auto& f : paper_fixtures()) {
        NamedSpace space{f.points, f.context};
        CHECK(parse_space_spec(export_space_spec(space)) == space);
    }
    Bounds back = bounds_from_json(bounds_to_json(b));
    CHECK(back == b);
}

TEST_CASE("cli: classify")
{
    auto r = run({"classify", "--space", fixture_path("e3_13.json"), "--subset", "b"});
    CHECK(r.code == 0);
    CHECK(r.out.find("PRE_GAMMA_I_OPEN: false") != std::string::npos);
    auto ab = run({"classify", "--space", fixture_path("e3_13.json"), "--subset", "a,b"});
    CHECK(ab.out.find("PRE_GAMMA_I_OPEN: true") != std::string::npos);
    CHECK(ab.out.find("A*: {a,b,c}") != std::string::npos);

    auto j = run({"classify", "--space", fixture_path("e3_7.json"), "--subset", "c", "--format", "json"});
    REQUIRE(j.code == 0);
    auto doc = nlohmann::json::parse(j.out);
    CHECK(doc["schema_version"] == kSchemaVersion);
    CHECK(doc["subsets"][0]["classes"]["PRE_I_OPEN"] == true);
    CHECK(doc["subsets"][0]["classes"]["PRE_GAMMA_I_OPEN"] == false);

    auto all = run({"classify", "--space", fixture_path("e3_3.json")});
    CHECK(all.code == 0);
    CHECK(all.out.find("{a,b,c}\n") != std::string::npos);
}

TEST_CASE("cli: enumerate")
{
    CHECK(run({"enumerate", "--kind", "topologies", "--n", "4", "--count-only"}).out == "355\n");
    CHECK(run({"enumerate", "--kind", "ideals", "--n", "3", "--count-only"}).out == "8\n");
    CHECK(run({"enumerate", "--kind", "gammas", "--space", fixture_path("e3_3.json"), "--count-only"}).out ==
          "16\n");
    auto listed = run({"enumerate", "--kind", "topologies", "--n", "2"});
    CHECK(listed.out == "#0: {} {a,b}\n#1: {} {a} {a,b}\n#2: {} {b} {a,b}\n#3: {} {a} {b} {a,b}\n");
    auto gammas = run({"enumerate", "--kind", "gammas", "--n", "1", "--gamma-mode", "presets"});
    CHECK(gammas.code == 0);
    CHECK(run({"enumerate", "--kind", "widgets", "--n", "2"}).code == kExitUsage);
    CHECK(run({"enumerate", "--kind", "topologies"}).code == kExitUsage);
    CHECK(run({"enumerate", "--kind", "topologies", "--n", "9"}).code == kExitUsage);
}

TEST_CASE("cli: verify")
{
    auto ok = run({"verify", "--n", "2"});
    CHECK(ok.code == 0);
    CHECK(ok.out.find("Thm 3.34") != std::string::npos);
    CHECK(ok.out.find("0 counterexamples") != std::string::npos);

    auto bad = run({"verify", "--n", "2", "--spec", "Thm 3.2 converse"});
    CHECK(bad.code == kExitCounterexample);
    CHECK(bad.out.find("counterexample") != std::string::npos);

    auto j = run({"verify", "--n", "2", "--format", "json", "--spec", "Thm 3.6"});
    REQUIRE(j.code == 0);
    auto doc = nlohmann::json::parse(j.out);
    CHECK(doc["schema_version"] == kSchemaVersion);
    CHECK(doc["reports"].size() == 1);
    CHECK(doc["reports"][0]["verdict"] == "no_counterexample");
    CHECK_FALSE(doc["reports"][0].contains("runtime_ms"));
    auto timed = nlohmann::json::parse(run({"verify", "--n", "1", "--format", "json", "--timing"}).out);
    CHECK(timed["reports"][0].contains("runtime_ms"));

    CHECK(run({"verify", "--n", "2", "--budget", "5"}).code == kExitBudget);
    CHECK(run({"verify", "--spec", "Thm 99"}).code == kExitUsage);
    CHECK(run({"verify", "--gamma-mode", "half"}).code == kExitUsage);
    CHECK(run({"verify", "--format", "xml"}).code == kExitUsage);
}

TEST_CASE("cli: hunt")
{
    auto r = run({"hunt", "--from", "PRE_I_OPEN", "--to", "PRE_GAMMA_I_OPEN", "--n", "3"});
    CHECK(r.code == 0);
    CHECK(r.out.rfind("refuted", 0) == 0);
    auto none = run({"hunt", "--from", "GAMMA_OPEN", "--to", "OPEN", "--n", "3"});
    CHECK(none.code == 0);
    CHECK(none.out.rfind("no counterexample", 0) == 0);
    auto j = run({"hunt", "--from", "pre-gamma-i-open", "--to", "gamma-open", "--n", "3", "--format", "json"});
    auto doc = nlohmann::json::parse(j.out);
    CHECK(doc["verdict"] == "refuted");
    CHECK(doc["witness"]["evaluated"][0]["atom"] == "PRE_GAMMA_I_OPEN");
    auto req = run({"hunt", "--from", "PRE_I_OPEN", "--to", "OPEN", "--require", "submaximal", "--n", "3"});
    CHECK(req.out.rfind("no counterexample", 0) == 0);
    CHECK(run({"hunt", "--from", "NOPE", "--to", "OPEN"}).code == kExitUsage);
    CHECK(run({"hunt", "--from", "OPEN", "--to", "OPEN"}).code == kExitUsage);
    CHECK(run({"hunt", "--from", "OPEN", "--to", "CLOSED", "--require", "compact"}).code == kExitUsage);
}

TEST_CASE("cli: atlas")
{
    auto dot = run({"atlas", "--n", "2"});
    CHECK(dot.code == 0);
    CHECK(dot.out.rfind("digraph atlas {", 0) == 0);
    auto path = temp_file("atlas.json", "");
    auto j = run({"atlas", "--n", "2", "--format", "json", "--out", path});
    CHECK(j.code == 0);
    CHECK(j.out.empty());
    std::ifstream in(path);
    auto doc = nlohmann::json::parse(in);
    CHECK(doc["cells"].size() == 400);
    auto m = atlas_from_json(doc);
    CHECK(m.bounds.n_max == 2);
    CHECK(run({"atlas", "--format", "svg"}).code == kExitUsage);
    auto constrained = run({"atlas", "--n", "2", "--require", "gamma_regular"});
    CHECK(constrained.out.find("constraints: gamma_regular") != std::string::npos);
}

TEST_CASE("cli: usage and input errors")
{
    CHECK(run({}).code == kExitUsage);
    CHECK(run({"frobnicate"}).code == kExitUsage);
    CHECK(run({"--help"}).code == kExitOk);
    CHECK(run({"classify"}).code == kExitUsage);
    CHECK(run({"classify", "--space", "/nonexistent/space.json"}).code == kExitInput);
    auto bad = temp_file("bad.json", "{\"points\": [\"a\"], \"opens\": [[]], \"ideal\": {\"max\": []}, "
                                     "\"gamma\": \"identity\"}");
    auto r = run({"classify", "--space", bad});
    CHECK(r.code == kExitInput);
    CHECK(r.err.find("not a topology: missing X") != std::string::npos);
    CHECK(run({"classify", "--space", fixture_path("e3_3.json"), "--subset", "z"}).code == kExitUsage);
    auto unknown = temp_file("unknown.json", "{\"points\": [\"a\"], \"opens\": [[], [\"q\"]], "
                                             "\"ideal\": {\"max\": []}, \"gamma\": \"identity\"}");
    CHECK(run({"classify", "--space", unknown}).code == kExitInput);
}
