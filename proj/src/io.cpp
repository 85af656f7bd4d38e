#include "steklov/io.hpp"

#include <charconv>
#include <fstream>
#include <set>
#include <sstream>

#include "steklov/errors.hpp"

namespace steklov::io {

std::string format_double(double v) {
  char buf[64];
  const auto res = std::to_chars(buf, buf + sizeof(buf), v);
  return std::string(buf, res.ptr);
}

json to_json(const HarmonicIndex& idx) { return json{{"l", idx.l}, {"m", idx.m}}; }

namespace {

void reject_unknown(const json& j, const std::set<std::string>& allowed, const char* what) {
  if (!j.is_object()) throw ParseError(std::string(what) + ": expected a JSON object");
  for (auto it = j.begin(); it != j.end(); ++it)
    if (!allowed.count(it.key())) throw ParseError(std::string(what) + ": unknown key \"" + it.key() + "\"");
}

int require_int(const json& j, const char* key, const char* what) {
  if (!j.contains(key)) throw ParseError(std::string(what) + ": missing \"" + key + "\"");
  const json& v = j.at(key);
  if (!v.is_number_integer()) throw ParseError(std::string(what) + ": \"" + key + "\" must be an integer");
  return v.get<int>();
}

std::vector<int> require_int_array(const json& j, const char* key, const char* what) {
  if (!j.contains(key)) throw ParseError(std::string(what) + ": missing \"" + key + "\"");
  const json& v = j.at(key);
  if (!v.is_array()) throw ParseError(std::string(what) + ": \"" + key + "\" must be an array");
  std::vector<int> out;
  for (const auto& e : v) {
    if (!e.is_number_integer()) throw ParseError(std::string(what) + ": \"" + key + "\" entries must be integers");
    out.push_back(e.get<int>());
  }
  return out;
}

HarmonicIndex checked_index(int d, int l, std::vector<int> m, const char* what) {
  HarmonicIndex idx{d, l, std::move(m)};
  if (static_cast<int>(idx.m.size()) != d - 1)
    throw ParseError(std::string(what) + ": tuple must have d - 1 = " + std::to_string(d - 1) + " entries");
  if (!idx.is_valid()) throw ParseError(std::string(what) + ": tuple violates the chain condition");
  return idx;
}

}  // namespace

HarmonicIndex harmonic_index_from_json(const json& j, int d) {
  reject_unknown(j, {"l", "m"}, "harmonic index");
  return checked_index(d, require_int(j, "l", "harmonic index"), require_int_array(j, "m", "harmonic index"),
                       "harmonic index");
}

PerturbationFunction perturbation_from_json(const json& j) {
  reject_unknown(j, {"d", "terms"}, "perturbation");
  const int d = require_int(j, "d", "perturbation");
  if (d < 3) throw ParseError("perturbation: d must be >= 3");
  if (!j.contains("terms") || !j.at("terms").is_array()) throw ParseError("perturbation: \"terms\" must be an array");
  PerturbationFunction rho(d);
  for (const auto& t : j.at("terms")) {
    reject_unknown(t, {"p", "q", "A"}, "perturbation term");
    const int p = require_int(t, "p", "perturbation term");
    const HarmonicIndex idx = checked_index(d, p, require_int_array(t, "q", "perturbation term"), "perturbation term");
    if (!t.contains("A") || !t.at("A").is_number()) throw ParseError("perturbation term: \"A\" must be a number");
    try {
      rho.add_term(idx, t.at("A").get<double>());
    } catch (const DomainError& e) {
      throw ParseError(std::string("perturbation term: ") + e.what());
    }
  }
  return rho;
}

json to_json(const PerturbationFunction& rho) {
  json terms = json::array();
  for (const auto& t : rho.terms()) terms.push_back(json{{"p", t.index.l}, {"q", t.index.m}, {"A", t.coefficient}});
  return json{{"d", rho.dim()}, {"terms", terms}};
}

PerturbationFunction load_perturbation(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ParseError("cannot open perturbation file: " + path);
  json j;
  try {
    j = json::parse(in);
  } catch (const json::exception& e) {
    throw ParseError(std::string("malformed JSON in ") + path + ": " + e.what());
  }
  return perturbation_from_json(j);
}

json to_json(const perturbation::SpectrumReport& r) {
  json out;
  out["d"] = r.d;
  out["k"] = r.k;
  out["index_range"] = {r.index_range.first, r.index_range.second};
  out["lambda1"] = r.lambda1;
  out["e"] = r.e;
  out["scalar_part"] = r.scalar_part;
  out["trace_residual"] = r.trace_residual;
  out["cluster_sizes"] = r.cluster_sizes;
  return out;
}

json to_json(const PerturbMatrix& m) {
  json basis = json::array();
  for (const auto& b : m.basis) basis.push_back(to_json(b));
  json re = json::array(), im = json::array();
  for (std::size_t i = 0; i < m.m.rows(); ++i) {
    json rr = json::array(), ii = json::array();
    for (std::size_t j = 0; j < m.m.cols(); ++j) {
      rr.push_back(m.m(i, j).real());
      ii.push_back(m.m(i, j).imag());
    }
    re.push_back(rr);
    im.push_back(ii);
  }
  return json{{"d", m.d}, {"k", m.k}, {"route", route_name(m.route)}, {"basis", basis}, {"re", re}, {"im", im}};
}

json to_json(const dtn::SlopeReport& r) {
  return json{{"d", r.d},
              {"k", r.k},
              {"L", r.L},
              {"grid_degree", r.grid_degree},
              {"eps_list", r.eps_list},
              {"slopes", r.slopes},
              {"m_eigs", r.m_eigs},
              {"rel_err", r.rel_err},
              {"observed_order", r.observed_order},
              {"max_rel_err", r.max_rel_err},
              {"max_imag", r.max_imag}};
}

std::vector<TableRow> table_rows(const perturbation::SpectrumReport& r) {
  const auto branches = perturbation::normalized_expansion(r);
  std::vector<TableRow> rows;
  for (std::size_t j = 0; j < r.lambda1.size(); ++j)
    rows.push_back({r.d, r.k, r.index_range.first + j, r.lambda1[j], r.e[j], branches[j].lambda1});
  return rows;
}

std::string table_csv(const std::vector<TableRow>& rows, const std::vector<std::string>& comments) {
  std::ostringstream os;
  for (const auto& c : comments) os << "# " << c << "\n";
  os << "d,k,global_index,lambda1,e,Lambda1\n";
  for (const auto& r : rows)
    os << r.d << ',' << r.k << ',' << r.global_index << ',' << format_double(r.lambda1) << ',' << format_double(r.e)
       << ',' << format_double(r.big_lambda1) << "\n";
  return os.str();
}

}  // namespace steklov::io
