#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <sstream>

#include "steklov/errors.hpp"
#include "steklov/io.hpp"
#include "steklov/verify.hpp"

using namespace steklov;
using io::json;

TEST_CASE("format_double round-trips") {
  CHECK(io::format_double(0.1) == "0.1");
  CHECK(io::format_double(-2.5) == "-2.5");
  for (double v : {1.0 / 3.0, -0.45015815807855303, 1e-300, 6.02214076e23}) CHECK(std::stod(io::format_double(v)) == v);
}

TEST_CASE("perturbation JSON") {
  const auto rho = io::perturbation_from_json(json::parse(R"({"d": 3, "terms": [{"p": 2, "q": [0, 2], "A": 1.5}]})"));
  CHECK(rho.dim() == 3);
  REQUIRE(rho.terms().size() == 1);
  CHECK(rho.terms()[0].index == HarmonicIndex{3, 2, {0, 2}});
  CHECK(rho.terms()[0].coefficient == 1.5);

  const auto back = io::perturbation_from_json(io::to_json(rho));
  CHECK(back.terms()[0].index == rho.terms()[0].index);
  CHECK(io::perturbation_from_json(json::parse(R"({"d": 4, "terms": []})")).empty());

  const char* bad[] = {
      R"({"d": 3})",
      R"({"d": 3, "terms": [], "extra": 1})",
      R"({"d": 3, "terms": [{"p": 2, "q": [0, 2]}]})",
      R"({"d": 3, "terms": [{"p": 2, "q": [0, 2], "A": 1, "B": 0}]})",
      R"({"d": 3, "terms": [{"p": 2, "q": [3, 2], "A": 1}]})",
      R"({"d": 3, "terms": [{"p": 2, "q": [0, 2, 2], "A": 1}]})",
      R"({"d": 3, "terms": [{"p": 2, "q": [0, 2], "A": 1}, {"p": 2, "q": [0, 2], "A": 2}]})",
      R"({"d": 2, "terms": []})",
      R"({"d": 3, "terms": [{"p": "two", "q": [0, 2], "A": 1}]})",
      R"([1, 2])",
  };
  for (const char* text : bad) CHECK_THROWS_AS(io::perturbation_from_json(json::parse(text)), ParseError);
  CHECK_THROWS_AS(io::load_perturbation("/nonexistent/rho.json"), ParseError);
}

TEST_CASE("harmonic index JSON") {
  const HarmonicIndex idx{4, 3, {-1, 2, 3}};
  CHECK(io::to_json(idx) == json::parse(R"({"l": 3, "m": [-1, 2, 3]})"));
  CHECK(io::harmonic_index_from_json(io::to_json(idx), 4) == idx);
  CHECK_THROWS_AS(io::harmonic_index_from_json(json::parse(R"({"l": 3})"), 4), ParseError);
}

TEST_CASE("spectrum and matrix JSON") {
  const auto pm = perturbation::assemble_matrix_wigner(1, verify::ball_breaking_perturbation(3));
  const auto jm = io::to_json(pm);
  CHECK(jm["d"] == 3);
  CHECK(jm["k"] == 1);
  CHECK(jm["route"] == "wigner");
  CHECK(jm["basis"].size() == 4);
  CHECK(jm["re"].size() == 4);
  CHECK(jm["im"][0].size() == 4);

  const auto rep = perturbation::eigen_spectrum(pm, 0.0);
  const auto js = io::to_json(rep);
  for (const char* key : {"d", "k", "index_range", "lambda1", "e", "scalar_part", "trace_residual", "cluster_sizes"})
    CHECK(js.contains(key));
  CHECK(js["index_range"] == json::array({1, 4}));
}

TEST_CASE("table CSV") {
  const auto rep = perturbation::eigen_spectrum(
      perturbation::assemble_matrix_wigner(2, verify::ball_breaking_perturbation(3)), 0.0);
  const auto rows = io::table_rows(rep);
  REQUIRE(rows.size() == 9);
  CHECK(rows.front().global_index == 5);
  CHECK(rows.back().global_index == 13);
  const std::string csv = io::table_csv(rows, {"first", "second"});
  std::istringstream in(csv);
  std::string line;
  std::getline(in, line);
  CHECK(line == "# first");
  std::getline(in, line);
  CHECK(line == "# second");
  std::getline(in, line);
  CHECK(line == "d,k,global_index,lambda1,e,Lambda1");
  int count = 0;
  while (std::getline(in, line)) {
    ++count;
    CHECK(line.rfind("3,2,", 0) == 0);
  }
  CHECK(count == 9);
}
