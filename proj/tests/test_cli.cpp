#include <doctest.h>

#include <algorithm>
#include <filesystem>
#include <fstream>
#include <sstream>

#include <json.hpp>

#include "cli.hpp"
#include "smw/graph.hpp"
#include "support.hpp"

using namespace smw;
using namespace smw::test;

namespace {

struct Outcome {
  int code;
  std::string out;
  std::string err;
};

Outcome call(const std::vector<std::string>& args) {
  std::ostringstream out, err;
  const int code = cli::run(args, out, err);
  return {code, out.str(), err.str()};
}

std::string write_graph(const std::string& name, const Graph& g) {
  const auto dir = std::filesystem::temp_directory_path() / "smw_cli_tests";
  std::filesystem::create_directories(dir);
  const auto path = (dir / name).string();
  std::ofstream f(path);
  write_edge_list(f, g);
  return path;
}

std::string write_text(const std::string& name, const std::string& text) {
  const auto dir = std::filesystem::temp_directory_path() / "smw_cli_tests";
  std::filesystem::create_directories(dir);
  const auto path = (dir / name).string();
  std::ofstream(path) << text;
  return path;
}

}  // namespace

TEST_CASE("hc on C6 prints the cycle") {
  const auto r = call({"hc", write_graph("c6.txt", cycle(6))});
  CHECK(r.code == 0);
  CHECK(r.out == "HAMILTONIAN\n0 1\n0 5\n1 2\n2 3\n3 4\n4 5\n");
}

TEST_CASE("hc on P4 says no") {
  const auto r = call({"hc", write_graph("p4.txt", path(4))});
  CHECK(r.code == 1);
  CHECK(r.out == "NOT HAMILTONIAN\n");
}

TEST_CASE("exact and approximate width of C5") {
  const auto c5 = write_graph("c5.txt", cycle(5));
  CHECK(call({"width", c5, "--exact"}).out == "sm-width 2\n");
  CHECK(call({"width", c5, "--approx"}).out == "sm-width 2\n");
  CHECK(call({"width", c5}).out == "sm-width 2\n");
  CHECK(call({"width", c5, "--exact", "--approx"}).code == 2);
}

TEST_CASE("parse failures exit 2 and refusals exit 3") {
  CHECK(call({}).code == 2);
  CHECK(call({"frobnicate"}).code == 2);
  CHECK(call({"hc"}).code == 2);
  CHECK(call({"hc", "/nonexistent/graph.txt"}).code == 2);
  const auto bad = call({"hc", write_text("bad.txt", "3 2\n0 1\n")});
  CHECK(bad.code == 2);
  CHECK(bad.err.find("header declares") != std::string::npos);
  CHECK(call({"width", write_graph("c13.txt", cycle(13)), "--exact"}).code == 3);
  CHECK(call({"verify", write_graph("c21.txt", cycle(21))}).code == 3);
  CHECK(call({"hc", write_graph("c5b.txt", cycle(5)), "--decomposition", write_text("d.json", "{not json")}).code ==
        2);
  CHECK(call({"--help"}).code == 0);
}

TEST_CASE("decompose output drives hc") {
  const Graph g = seven_vertex_split_graph();
  const auto file = write_graph("seven.txt", g);
  const auto d = call({"decompose", file});
  REQUIRE(d.code == 0);
  const auto doc = nlohmann::json::parse(d.out);
  CHECK(doc.contains("split_decomposition"));
  CHECK(doc.contains("branch_decomposition"));
  CHECK(doc["width_certificate"]["width"].get<int>() >= 1);
  const auto dec = write_text("seven.json", d.out);
  CHECK(call({"hc", file, "--decomposition", dec}).code == 1);
  const auto exact = call({"decompose", file, "--exact"});
  CHECK(exact.code == 0);
  CHECK(nlohmann::json::parse(exact.out)["width_certificate"]["width"] == doc["width_certificate"]["width"]);
}

TEST_CASE("verify reports every check") {
  const auto r = call({"verify", write_graph("k5.txt", complete(5))});
  CHECK(r.code == 0);
  for (const char* name : {"split-recompose: ok", "split-primes: ok", "approx-factor-18: ok", "hc-agrees: ok",
                           "hc-witness: ok", "trim-preservation: ok"})
    CHECK(r.out.find(name) != std::string::npos);
}

TEST_CASE("bench CSV is reproducible") {
  const std::vector<std::string> args{"--seed", "5", "bench", "--n", "6", "7", "--samples", "4", "--no-timing"};
  const auto a = call(args);
  const auto b = call(args);
  CHECK(a.code == 0);
  CHECK(a.out == b.out);
  CHECK(a.out.rfind("n,seed,smw_exact,smw_approx,max_family,millis\n", 0) == 0);
  CHECK(std::count(a.out.begin(), a.out.end(), '\n') == 9);
  auto threaded = args;
  threaded.insert(threaded.begin(), {"--jobs", "3"});
  CHECK(call(threaded).out == a.out);
  const auto banded = call({"bench", "--n", "10", "--bandwidth", "3", "--samples", "2", "--no-timing", "--exact-limit", "8"});
  CHECK(banded.code == 0);
  CHECK(banded.out.find("10,1,NA,") != std::string::npos);
  CHECK(call({"bench", "--n", "3", "--bandwidth", "3"}).code == 2);
}

TEST_CASE("same seed gives identical output") {
  std::mt19937_64 rng(4);
  const auto file = write_graph("r9.txt", random_connected(9, 0.5, rng));
  for (const auto& args : std::vector<std::vector<std::string>>{{"--seed", "9", "decompose", file},
                                                                {"--seed", "9", "hc", file},
                                                                {"hc", file, "--seed", "9"}})
    CHECK(call(args).out == call(args).out);
}
