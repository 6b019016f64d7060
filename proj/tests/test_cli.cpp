#include <doctest.h>

#include <random>
#include <sstream>

#include <json.hpp>

#include "cli.hpp"
#include "oracles.hpp"
#include "permgrid/extensions.hpp"
#include "permgrid/plot.hpp"

using namespace permgrid;
using nlohmann::json;

namespace {

struct Result {
  int code;
  std::string out, err;
};

Result run(std::vector<std::string> args) {
  args.insert(args.begin(), "permgrid");
  std::vector<const char*> argv;
  for (const auto& a : args) argv.push_back(a.c_str());
  std::ostringstream out, err;
  const int code = cli::run(static_cast<int>(argv.size()), argv.data(), out, err);
  return {code, out.str(), err.str()};
}

}  // namespace

TEST_CASE("documented examples") {
  auto r = run({"gen", "parallel-sawtooth", "4"});
  CHECK(r.code == 0);
  CHECK(r.out == "6 1 5 8 2 7 10 3 9 12 4 11\n");
  r = run({"bounds", "h", "2", "2", "2"});
  CHECK(r.out == "60\n");
  r = run({"detect", "simple", "2 4 1 3"});
  CHECK(json::parse(r.out) == json{{"simple", true}});
}

TEST_CASE("exit codes") {
  CHECK(run({}).code == 2);
  CHECK(run({"frobnicate"}).code == 2);
  CHECK(run({"gen"}).code == 2);
  CHECK(run({"--help"}).code == 0);
  const auto r = run({"detect", "simple", "2 4 x"});
  CHECK(r.code == 1);
  const json e = json::parse(r.err);
  CHECK(e["error"]["code"] == "PARSE");
  CHECK(run({"bounds", "g", "0", "1"}).code == 1);
  CHECK(run({"gen", "spiral", "10", "--ext", "4:1:0,4:1:1"}).code == 1);
}

TEST_CASE("json flag switches output") {
  const auto r = run({"--json", "gen", "sum21", "3"});
  CHECK(json::parse(r.out)["perm"] == "2 1 4 3 6 5");
  const auto w = run({"--json", "pins", "word", "21", "UR"});
  CHECK(json::parse(w.out)["perm"] == "2 4 1 3");
  const auto g = run({"--json", "grid", "2 1 4 3", "--v", "1"});
  const json gj = json::parse(g.out);
  CHECK(gj["found"] == true);
  CHECK(gj["v_cuts"] == json::array({2.5}));
  CHECK(json::parse(run({"--json", "grid", "2 1 4 3 6 5 8 7 10 9", "--v", "1"}).out)["found"] ==
        false);
}

TEST_CASE("every subcommand runs") {
  CHECK(run({"gen", "spiral", "10", "--ext", "4:1:2,8:1:0"}).out == "2 4 12 5 8 6 9 3 7 11 1 10\n");
  CHECK(run({"gen", "sliced-wedge", "4", "--type", "3"}).out == "5 12 4 7 3 6 9 2 8 11 1 10\n");
  CHECK(run({"gen", "wedge-sawtooth", "2", "--orient", "reverse"}).code == 0);
  CHECK(json::parse(run({"detect", "sum21", "2 1 4 3"}).out)["max"] == 2);
  CHECK(run({"decompose", "2 6 5 1 3 4"}).code == 0);
  CHECK(run({"pins", "enumerate", "2 4 1 3", "--start", "1", "2"}).code == 0);
  const json rr = json::parse(run({"--json", "pins", "right-reach", "2 4 1 3", "--start", "1", "2"}).out);
  CHECK(rr["points"].back() == 4);
  const json ex = json::parse(
      run({"--json", "pins", "extensions", "4 12 5 8 6 3 7 10 2 9 1 11", "--pins", "3,5,4,7,6,1,2,12,11"}).out);
  CHECK(ex["extended_pins"] == 1);
  CHECK(run({"class", "criterion", "--basis", "123", "--max-len", "5"}).code == 0);
  CHECK(run({"class", "scan", "--basis", "321", "--max-len", "5", "--pin-budget", "5"}).code == 0);
  CHECK(run({"verify", "intervals", "--max-len", "4"}).code == 0);
  CHECK(run({"bounds", "rect", "1", "1"}).out == "16777216\n");
}

TEST_CASE("permutation text round trip") {
  std::mt19937 rng(3);
  for (int i = 0; i < 1000; ++i) {
    const Permutation p = oracle::random_permutation(1 + i % 20, rng);
    REQUIRE(parse_permutation(p.to_string()) == p);
    const auto r = run({"--json", "detect", "sum21", p.to_string()});
    REQUIRE(r.code == 0);
  }
}

TEST_CASE("plots") {
  const auto a = run({"plot", "2 4 1 3"});
  CHECK(a.code == 0);
  CHECK(a.out == run({"plot", "2 4 1 3"}).out);
  CHECK(a.out.find("<svg") != std::string::npos);
  PlotSpec s;
  s.perm = parse_permutation("2 4 1 3");
  const std::string svg = plot_svg(s);
  std::size_t circles = 0;
  for (std::size_t at = svg.find("<circle"); at != std::string::npos; at = svg.find("<circle", at + 1)) {
    ++circles;
  }
  CHECK(circles == 4);
  CHECK(plot_svg(s) == svg);

  const auto x = gen_spiral_with_extensions(Chirality::Clockwise, 10, {{4, 1, 2}, {8, 1, 0}});
  std::string pins;
  for (int p : x.spiral.positions) pins += std::to_string(p) + ",";
  const auto marked = run({"plot", x.perm.to_string(), "--pins", pins, "--extensions"});
  REQUIRE(marked.code == 0);
  PlotSpec want;
  want.perm = x.perm;
  want.pins = x.spiral;
  want.hollow = {7, 10};
  CHECK(marked.out == plot_svg(want));

  const auto grid = run({"plot", "2 1 4 3", "--grid", "0", "1"});
  PlotSpec cut;
  cut.perm = parse_permutation("2 1 4 3");
  cut.v_lines = {2};
  CHECK(grid.out == plot_svg(cut));
  CHECK(grid.out.find("<line x1=\"") != std::string::npos);
  CHECK(run({"plot", "2 1 4 3", "--hollow", "9"}).code == 1);
  CHECK(run({"plot", "2 1 4 3", "--rect", "1,9,1,2"}).code == 1);
}
