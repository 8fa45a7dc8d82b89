#include <doctest.h>

#include <sstream>
#include <vector>

#include "walktransfer/cli.hpp"
#include "walktransfer/json_io.hpp"
#include "walktransfer/suite.hpp"
#include "walktransfer/time_expr.hpp"

using namespace wt;

namespace {

struct Run {
  int code;
  std::string out;
  std::string err;
};

Run cli(std::vector<const char*> args) {
  args.insert(args.begin(), "walktransfer");
  std::ostringstream out;
  std::ostringstream err;
  const int code = run_cli(static_cast<int>(args.size()), args.data(), out, err);
  return {code, out.str(), err.str()};
}

}  // namespace

TEST_CASE("time expressions") {
  CHECK(parse_time("pi/2") == kPi / 2);
  CHECK(parse_time("3pi/4") == 3 * kPi / 4);
  CHECK(parse_time("3*pi/4") == 3 * kPi / 4);
  CHECK(parse_time("pi*3/4") == 3 * kPi / 4);
  CHECK(parse_time("-pi/3") == -kPi / 3);
  CHECK(parse_time("2*pi") == 2 * kPi);
  CHECK(parse_time("1.25") == 1.25);
  CHECK_THROWS_AS(parse_time("pie"), DomainError);
  CHECK_THROWS_AS(parse_time("pi/0"), DomainError);
}

TEST_CASE("graph JSON round trip and validation") {
  const WeightedGraph g = path_family(4, PathVariant::Sqrt2OneEndPot);
  CHECK(graph_from_json(graph_to_json(g)) == g);
  CHECK_THROWS_AS(graph_from_json(Json::parse(R"({"n": 3, "edges": [[1, 0, 1]]})")), DomainError);
  CHECK_THROWS_AS(graph_from_json(Json::parse(R"({"n": 3, "edges": [[0, 1, 1], [0, 1, 2]]})")), DomainError);
  CHECK_THROWS_AS(graph_from_json(Json::parse(R"({"n": 2, "edges": [[0, 5, 1]]})")), DomainError);
  CHECK(graph_from_json(Json::parse(R"({"n": 2, "edges": [[0, 1, 1]]})")) == path(2));
  CHECK(cells_from_json(Json::parse("[[0], [1, 2]]")).size() == 2);
  CHECK(cells_from_json(Json::parse(R"({"cells": [[0, 1]]})")).size() == 1);
}

TEST_CASE("load_graph understands built-in families") {
  CHECK(load_graph("cycle:6") == cycle(6));
  CHECK(load_graph("complement:cycle:6") == complement(cycle(6)));
  CHECK(load_graph("circulant:7:1,2,5,6") == circulant(7, {1, 2, 5, 6}));
  CHECK(load_graph("path-family:sqrt2_both_ends:5") == path_family(5, PathVariant::Sqrt2BothEnds));
  CHECK_THROWS(load_graph("wheel:5"));
}

TEST_CASE("check-pst exit codes") {
  CHECK(cli({"check-pst", "-g", "cycle:4", "--u", "v:0", "--v", "v:2", "--tau", "pi/2"}).code == 0);
  CHECK(cli({"check-pst", "-g", "cycle:4", "--u", "v:0", "--v", "v:1", "--tau", "pi/2"}).code == 1);
  const Run bad = cli({"check-pst", "-g", "cycle:4", "--u", "v:9", "--v", "v:1", "--tau", "pi/2"});
  CHECK(bad.code == 2);
  CHECK(bad.err.find('\n') == bad.err.size() - 1);
  CHECK(cli({}).code == 2);
  CHECK(cli({"--help"}).code == 0);
}

TEST_CASE("cycle-verdict output") {
  const Run r = cli({"cycle-verdict", "8", "--query", "plus"});
  REQUIRE(r.code == 0);
  const Json j = Json::parse(r.out);
  CHECK(j["verdict"] == "yes");
  CHECK(j["evidence"]["pst_time"].get<double>() == kPi / 2);
  const Json no = Json::parse(cli({"cycle-verdict", "12", "--query", "plus"}).out);
  CHECK(no["verdict"] == "no");
}

TEST_CASE("spectrum and evolve") {
  const Json s = Json::parse(cli({"spectrum", "-g", "cycle:4"}).out);
  REQUIRE(s["eigenvalues"].size() == 3);
  const Run e = cli({"evolve", "-g", "path:2", "--t", "pi/2", "--u", "v:0"});
  CHECK(e.code == 0);
}

TEST_CASE("quotient subcommand") {
  const Run r = cli({"quotient", "-g", "cycle:8", "--partition", "[[0],[1,7],[2,6],[3,5],[4]]"});
  CHECK(r.code == 0);
  CHECK(cli({"quotient", "-g", "path:4", "--partition", "[[0,1],[2,3]]"}).code == 1);
}

TEST_CASE("search and certify") {
  const Run s = cli({"search-pgst", "-g", "path:2", "--u", "v:0", "--v", "v:1", "--t-max", "5", "--trace", "--format",
                     "csv"});
  CHECK(s.code == 0);
  CHECK(s.out.rfind("t,fidelity\n", 0) == 0);
  CHECK(cli({"certify-no-pgst", "-g", "cycle:12", "--u", "plus:0,1", "--v", "plus:6,7", "--rotation", "6"}).code == 0);
  CHECK(cli({"certify-no-pgst", "-g", "cycle:8", "--u", "plus:0,1", "--v", "plus:4,5", "--rotation", "4"}).code == 1);
}

TEST_CASE("suite batteries are deterministic per seed") {
  const SuiteReport a = verify_suite("complement", 5);
  const SuiteReport b = verify_suite("complement", 5);
  CHECK(a.all_pass);
  CHECK(format_suite_text(a) == format_suite_text(b));
  CHECK_THROWS_AS(verify_suite("nope"), DomainError);
  SeededRng r1(9);
  SeededRng r2(9);
  for (int k = 0; k < 100; ++k) {
    const double x = r1.uniform();
    CHECK(x == r2.uniform());
    CHECK((x >= 0.0 && x < 1.0));
  }
}
