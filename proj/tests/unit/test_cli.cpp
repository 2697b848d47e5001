#include <filesystem>
#include <sstream>

#include "doctest.h"
#include "fixtures.hpp"
#include "wfa/cli.hpp"
#include "wfa/error.hpp"
#include "wfa/io.hpp"
#include "wfa/plot.hpp"
#include "wfa/reductions.hpp"

using namespace wfa;
using fixtures::q;
namespace fs = std::filesystem;

namespace {

struct Run {
  int code;
  std::string out;
  std::string err;
};

Run run(std::vector<std::string> args) {
  std::ostringstream out, err;
  const int code = run_cli(args, out, err);
  return {code, out.str(), err.str()};
}

std::string temp_file(const std::string& name, const std::string& content) {
  const fs::path dir = fs::temp_directory_path() / "wfatool_tests";
  fs::create_directories(dir);
  const fs::path p = dir / name;
  write_file(p.string(), content);
  return p.string();
}

std::string wfa_file(const std::string& name, const Wfa& a) { return temp_file(name, to_json(a).dump()); }
std::string set_file(const std::string& name, const MatrixSet& s) { return temp_file(name, to_json(s).dump()); }

}  // namespace

TEST_CASE("automaton JSON round trip is exact") {
  const std::string text = R"({"alphabet":["0","1"],"dim":2,"initial":["2/4",1],"final":["0","-3/6"],
    "transitions":{"1":[["1","0"],["0","1"]],"0":[["0","1"],["1","0"]]}})";
  const Wfa a = wfa_from_json(parse_json(text));
  CHECK(a.initial() == Vector{q(1, 2), 1});
  const std::string once = to_json(a).dump();
  CHECK(once ==
        R"({"alphabet":["0","1"],"dim":2,"initial":["1/2","1"],"final":["0","-1/2"],"transitions":{"0":[["0","1"],["1","0"]],"1":[["1","0"],["0","1"]]}})");
  CHECK(to_json(wfa_from_json(parse_json(once))).dump() == once);

  fixtures::Rng rng(81);
  for (int i = 0; i < 10; ++i) {
    const Wfa r = fixtures::random_ap_wfa(rng, 1 + i % 4, 1 + i % 3);
    CHECK(wfa_from_json(parse_json(to_json(r).dump())) == r);
  }
  CHECK(wfa_from_json(to_json(fixtures::zero_automaton())) == fixtures::zero_automaton());
  const MatrixSet s({fixtures::contex_b0(), fixtures::contex_b1()});
  CHECK(matrix_set_from_json(to_json(s)).matrices() == s.matrices());
}

TEST_CASE("schema violations are parse errors") {
  CHECK_THROWS_AS(parse_json("{"), ParseError);
  const char* bad[] = {
      R"({"dim":1,"initial":["1"],"final":["1"],"transitions":{"0":[["1"]]}})",
      R"({"alphabet":["0"],"dim":2,"initial":["1"],"final":["1"],"transitions":{"0":[["1"]]}})",
      R"({"alphabet":["0"],"dim":1,"initial":["1"],"final":["1"],"transitions":{"1":[["1"]]}})",
      R"({"alphabet":["0"],"dim":1,"initial":["x"],"final":["1"],"transitions":{"0":[["1"]]}})",
      R"({"alphabet":["0","0"],"dim":1,"initial":["1"],"final":["1"],"transitions":{"0":[["1"]]}})",
      R"({"alphabet":["0"],"dim":1,"initial":["1"],"final":["1"],"transitions":{"0":[["1","2"]]}})",
      R"({"alphabet":["0"],"dim":1,"initial":[1.5],"final":["1"],"transitions":{"0":[["1"]]}})",
  };
  for (const char* text : bad) CHECK_THROWS_AS(wfa_from_json(parse_json(text)), ParseError);
}

TEST_CASE("CSV rendering") {
  const auto zero = sample(fixtures::zero_automaton(), 3);
  const std::string csv = render_csv(zero, false);
  std::istringstream lines(csv);
  std::string line;
  std::getline(lines, line);
  CHECK(line == "x,value");
  int rows = 0;
  while (std::getline(lines, line)) {
    ++rows;
    CHECK(line.substr(line.find(',') + 1) == "0.000000000000");
  }
  CHECK(rows == 8);
  const std::string cx = render_csv(sample(fixtures::contex(), 8), false);
  CHECK(cx.substr(0, cx.find('\n', 8) + 1) == "x,value\n0.000000000000,6.000000000000\n");
  CHECK(render_csv({{q(1, 3), std::nullopt}}, true) == "x,value\n1/3,\n");
}

TEST_CASE("SVG rendering") {
  std::vector<Sample> s = sample(d_automaton(), 6);
  s.push_back({q(1), endpoint_left_limit(d_automaton())});
  const std::string svg = render_svg(s);
  CHECK(svg.find("width=\"800\" height=\"600\"") != std::string::npos);
  const auto start = svg.find("points=\"") + 8;
  const std::string points = svg.substr(start, svg.find('"', start) - start);
  const std::string first = points.substr(0, points.find(' '));
  const std::string last = points.substr(points.rfind(' ') + 1);
  const double zero_y = frame_for(s).py(0);
  CHECK(std::stod(first.substr(first.find(',') + 1)) == doctest::Approx(zero_y).epsilon(1e-3));
  CHECK(std::stod(last.substr(last.find(',') + 1)) == doctest::Approx(zero_y).epsilon(1e-3));
  CHECK(std::stod(first.substr(0, first.find(','))) == doctest::Approx(PlotFrame::margin));
  CHECK(std::stod(last.substr(0, last.find(','))) == doctest::Approx(PlotFrame::width - PlotFrame::margin));
  CHECK_THROWS_AS(emit_plot(s, "/nonexistent-dir/plot.svg", PlotFormat::Svg), Error);
}

TEST_CASE("eval, omega-eval and minimize") {
  const auto cx = wfa_file("contex.json", fixtures::contex());
  CHECK(run({"eval", "--wfa", cx, "--word", "01"}).out == "82/9\n");
  CHECK(run({"eval", "--wfa", cx}).out == "10\n");
  CHECK(run({"omega-eval", "--wfa", cx, "--period", "0"}).out == "6\n");
  const auto flip = wfa_file("flip.json", Wfa({"0"}, Vector{1}, {Matrix{{-1}}}, Vector{1}));
  const auto und = run({"omega-eval", "--wfa", flip, "--period", "0"});
  CHECK(und.code == 0);
  CHECK(und.out == "undefined\n");
  const auto m = run({"minimize", "--wfa", wfa_file("const.json", fixtures::constant_example())});
  CHECK(m.code == 0);
  CHECK(wfa_from_json(parse_json(m.out)).dim() == 1);
}

TEST_CASE("check subcommands") {
  const auto cx = wfa_file("contex.json", fixtures::contex());
  CHECK(run({"check", "ap", "--wfa", cx}).out == "true\n");
  CHECK(run({"check", "minimal", "--wfa", cx}).out == "true\n");
  CHECK(run({"check", "zero", "--wfa", cx}).out == "false\n");
  CHECK(run({"check", "constant", "--wfa", cx}).out == "false\n");
  const auto uc = wfa_file("uc.json", fixtures::universal_counterexample());
  CHECK(run({"check", "ap", "--wfa", uc}).out == "false\n");
  const auto bad = run({"check", "zero", "--wfa", uc});
  CHECK(bad.code == 1);
  CHECK(bad.err.rfind("error: precondition:", 0) == 0);
  CHECK(run({"check", "bogus", "--wfa", cx}).code == 1);
}

TEST_CASE("canonicalize") {
  const auto r = run({"canonicalize", "--wfa", wfa_file("three.json", fixtures::three_letter())});
  const Json j = parse_json(r.out);
  CHECK(j["blocks"]["0"] == Json::parse(R"([["-1"]])"));
  CHECK(j["columns"]["2"] == Json::parse(R"(["-1"])"));
  const auto none = run({"canonicalize", "--wfa", wfa_file("uc.json", fixtures::universal_counterexample())});
  CHECK(none.code == 0);
  CHECK(parse_json(none.out)["canonical"].is_null());
}

TEST_CASE("verdict commands print the budget and use the exit-code contract") {
  const auto pair = set_file("pair.json", MatrixSet({fixtures::contex_b0(), fixtures::contex_b1()}));
  const auto st = run({"stability", "--set", pair, "--depth", "12"});
  CHECK(st.code == 0);
  const Json sj = parse_json(st.out);
  CHECK(sj["verdict"] == "Stable");
  CHECK(sj["budget"] == 12);
  CHECK(sj["certificate_depth"].get<int>() <= 12);
  CHECK(parse_json(run({"stability", "--set", pair}).out)["budget"] == 12);

  const auto flip = run({"stability", "--set", set_file("flip.json", MatrixSet({Matrix{{-1}}}))});
  CHECK(flip.code == 0);
  CHECK(parse_json(flip.out)["witness"] == Json::parse(R"(["0"])"));

  const auto slow = set_file("slow.json", MatrixSet({Matrix{{q(1, 2), 100}, {0, q(1, 2)}}}));
  const auto unknown = run({"stability", "--set", slow, "--depth", "2"});
  CHECK(unknown.code == 2);
  CHECK(parse_json(unknown.out)["verdict"] == "Unknown");

  CHECK(parse_json(run({"rcp", "--set", pair}).out)["verdict"] == "ContinuousRCP");
  const auto three = run({"continuity", "--wfa", wfa_file("three.json", fixtures::three_letter())});
  CHECK(three.code == 0);
  CHECK(parse_json(three.out)["verdict"] == "NotContinuous");
  CHECK(parse_json(three.out)["witness"] == Json::parse(R"(["0"])"));
  const auto cx = wfa_file("contex.json", fixtures::contex());
  CHECK(parse_json(run({"uniform-continuity", "--wfa", cx}).out)["verdict"] == "BothContinuous");
  CHECK(parse_json(run({"uniform-continuity", "--wfa", wfa_file("jump.json", fixtures::omega_only())}).out)["verdict"] ==
        "OmegaOnlyContinuous");
}

TEST_CASE("synthesize from the contex seed") {
  const auto seed = temp_file("seed.json", R"({"B0":[["1/3","1/3"],["1/3","1/3"]],"B1":[["2/3","0"],["-1/3","2/3"]],"k":["9","0"],"b0":["3","0"]})");
  const auto r = run({"synthesize", "--input", seed});
  REQUIRE(r.code == 0);
  const Json j = parse_json(r.out);
  CHECK(j["final"] == Json::parse(R"(["10","6","1"])"));
  CHECK(j["transitions"]["1"][0][2] == "5");
  CHECK(j["transitions"]["1"][1][2] == "6");
  const auto imp = temp_file("imp.json", R"({"B0":[["1/4"]],"B1":[["1/4"]],"k":["1"],"b0":["1"]})");
  const auto e = run({"synthesize", "--input", imp});
  CHECK(e.code == 1);
  CHECK(e.err.rfind("error: nonconstant impossible:", 0) == 0);
}

TEST_CASE("sample command") {
  const auto zero = wfa_file("zero.json", fixtures::zero_automaton());
  const auto csv = run({"sample", "--wfa", zero, "--resolution", "3"});
  CHECK(csv.out == render_csv(sample(fixtures::zero_automaton(), 3), false));
  const auto d = wfa_file("d.json", d_automaton());
  CHECK(run({"sample", "--wfa", d, "--resolution", "2", "--exact"}).out == "x,value\n0,0\n1/4,1/2\n1/2,1\n3/4,1/2\n");
  const auto svg = run({"sample", "--wfa", d, "--resolution", "6", "--format", "svg"});
  CHECK(svg.out.rfind("<svg", 0) == 0);
  const auto out = (fs::temp_directory_path() / "wfatool_tests" / "d.csv").string();
  CHECK(run({"sample", "--wfa", d, "--resolution", "2", "--out", out}).out.empty());
  CHECK(read_file(out) == render_csv(sample(d_automaton(), 2), false));
  CHECK(run({"sample", "--wfa", d, "--format", "png"}).code == 1);
  CHECK(run({"sample", "--wfa", d, "--out", "/nonexistent-dir/x.csv"}).code == 1);
}

TEST_CASE("reduce command") {
  const auto pair = set_file("pair.json", MatrixSet({fixtures::contex_b0(), fixtures::contex_b1()}));
  const Json p = parse_json(run({"reduce", "pair", "--set", pair}).out);
  CHECK(p["matrices"]["0"].size() == 4);
  const Json z = parse_json(run({"reduce", "zero-test", "--set", pair}).out);
  CHECK(z["members"].size() == 4);
  CHECK(z["members"][0]["i"] == 1);
  CHECK(z["members"][3]["j"] == 2);
  CHECK(parse_json(run({"reduce", "ap-gadgets", "--set", pair}).out)["members"][0]["wfa"]["dim"] == 3);
  CHECK(parse_json(run({"reduce", "uniform-gadgets", "--set", pair}).out)["members"][0]["wfa"]["dim"] == 5);
  const auto single = set_file("single.json", MatrixSet({Matrix{{1}}}));
  CHECK(run({"reduce", "ap-gadgets", "--set", single}).code == 1);
}

TEST_CASE("equal and redistribute") {
  const auto cx = wfa_file("contex.json", fixtures::contex());
  CHECK(run({"equal", "--wfa", cx, "--other", cx}).out == "true\n");
  CHECK(run({"equal", "--wfa", cx, "--other", wfa_file("d.json", d_automaton())}).out == "false\n");
  const auto shifted = wfa_file("shifted.json", fixtures::contex().with_final(Vector{0, 0, 1}));
  const auto r = run({"redistribute", "--wfa", shifted, "--period", "0"});
  REQUIRE(r.code == 0);
  CHECK(equal_ap(wfa_from_json(parse_json(r.out)), fixtures::contex()));
  CHECK(run({"redistribute", "--wfa", shifted, "--head", "1"}).code == 1);
}

TEST_CASE("errors have distinct diagnostics") {
  const auto cx = wfa_file("contex.json", fixtures::contex());
  const auto malformed = run({"eval", "--wfa", temp_file("bad.json", "{\"alphabet\": ["), "--word", "0"});
  CHECK(malformed.code == 1);
  CHECK(malformed.err.rfind("error: parse: malformed JSON", 0) == 0);
  const auto schema = run({"eval", "--wfa", temp_file("schema.json", R"({"alphabet":["0"]})")});
  CHECK(schema.code == 1);
  CHECK(schema.err.find("missing field \"dim\"") != std::string::npos);
  const auto foreign = run({"eval", "--wfa", cx, "--word", "02"});
  CHECK(foreign.code == 1);
  CHECK(foreign.err.find("foreign letter") != std::string::npos);
  const auto budget = run({"continuity", "--wfa", cx, "--depth", "0"});
  CHECK(budget.code == 1);
  CHECK(budget.err.find("--depth must be positive") != std::string::npos);
  const auto missing = run({"eval", "--wfa", "/nonexistent/file.json"});
  CHECK(missing.code == 1);
  CHECK(missing.err.find("cannot read") != std::string::npos);
  CHECK(run({}).code == 1);
  CHECK(run({"frobnicate"}).code == 1);
  CHECK(run({"eval", "--wfa", cx, "stability"}).code == 1);
  CHECK(run({"--help"}).code == 0);
}

TEST_CASE("output is byte-for-byte deterministic") {
  const auto cx = wfa_file("contex.json", fixtures::contex());
  for (const auto& args : std::vector<std::vector<std::string>>{
           {"canonicalize", "--wfa", cx}, {"uniform-continuity", "--wfa", cx}, {"sample", "--wfa", cx, "--resolution", "5"}}) {
    CHECK(run(args).out == run(args).out);
  }
}
