#pragma once

#include <cstdint>
#include <optional>
#include <random>
#include <string>
#include <vector>

#include "steklov/perturbation_function.hpp"

namespace steklov::verify {

struct CheckResult {
  std::string name;
  bool passed = false;
  double residual = 0.0;
  double tolerance = 0.0;
};

struct Options {
  int d = 3;
  int kmax = 3;
  double tol = -1.0;  // < 0: suite default
  std::optional<PerturbationFunction> rho;
  std::uint64_t seed = 20240611;
};

/// Names accepted by run_suite.
const std::vector<std::string>& suite_names();

/// Runs one named suite; throws DomainError for an unknown name.
std::vector<CheckResult> run_suite(const std::string& suite, const Options& opt);

/// Every term of degree 0..max_degree with coefficients uniform in [-1, 1].
PerturbationFunction random_perturbation(int d, int max_degree, std::mt19937_64& rng);
/// Only the listed degrees.
PerturbationFunction random_perturbation(int d, const std::vector<int>& degrees, std::mt19937_64& rng);

/// Uniformly distributed point of S^d.
AngularPoint random_point(int d, std::mt19937_64& rng);

/// rho = Y_{2,(0,2,...,2)}
PerturbationFunction ball_breaking_perturbation(int d);

}  // namespace steklov::verify
