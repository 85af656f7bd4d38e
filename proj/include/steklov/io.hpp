#pragma once

#include <string>
#include <vector>

#include <json.hpp>

#include "steklov/dtn_oracle.hpp"
#include "steklov/harmonics.hpp"
#include "steklov/perturbation.hpp"
#include "steklov/perturbation_function.hpp"

namespace steklov::io {

using nlohmann::json;

/// Shortest decimal string that round-trips to the same double.
std::string format_double(double v);

/// {"l": int, "m": [int, ...]}
json to_json(const HarmonicIndex& idx);
/// Throws ParseError on missing/unknown keys or an invalid tuple.
HarmonicIndex harmonic_index_from_json(const json& j, int d);

/// {"d": 3, "terms": [{"p": 2, "q": [0, 2], "A": 1.0}]}; unknown keys rejected.
PerturbationFunction perturbation_from_json(const json& j);
json to_json(const PerturbationFunction& rho);
/// Reads and parses a file; ParseError on I/O or format problems.
PerturbationFunction load_perturbation(const std::string& path);

json to_json(const perturbation::SpectrumReport& r);
json to_json(const PerturbMatrix& m);
json to_json(const dtn::SlopeReport& r);

struct TableRow {
  int d = 3;
  int k = 1;
  std::uint64_t global_index = 0;
  double lambda1 = 0.0;
  double e = 0.0;
  double big_lambda1 = 0.0;
};
/// CSV with `#`-prefixed comment lines, then the header
/// d,k,global_index,lambda1,e,Lambda1.
std::string table_csv(const std::vector<TableRow>& rows, const std::vector<std::string>& comments);
std::vector<TableRow> table_rows(const perturbation::SpectrumReport& r);

}  // namespace steklov::io
