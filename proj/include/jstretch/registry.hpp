#ifndef JSTRETCH_REGISTRY_HPP
#define JSTRETCH_REGISTRY_HPP

#include <optional>
#include <string>
#include <vector>

#include "jstretch/analysis.hpp"
#include "jstretch/errors.hpp"

namespace jst::cli {

class UnknownExample : public Error {
 public:
  explicit UnknownExample(const std::string& id) : Error("unknown example '" + id + "'") {}
};

struct ParamRange {
  char name = 'r';
  int lo = 0, hi = 0, fallback = 0;
};

struct ExampleInfo {
  std::string id;
  std::string description;
  std::optional<ParamRange> param;
};

const std::vector<ExampleInfo>& registry_examples();
const ExampleInfo& example_info(const std::string& id);

struct RegistryParams {
  std::optional<int> r;
  std::optional<int> t;
  /// Seed for the random points of the point-set examples.
  std::uint64_t construction_seed = 1;
  std::uint32_t p = PrimeField::kDefaultPrime;
};

/// The example's ideal; the parameter falls back to the example's default.
Ideal build_example(const std::string& id, const RegistryParams& params = {});

/// Ideal of n points of P^{k-1} with uniform random coordinates in F_p, k = vars.size().
Ideal random_points_ideal(const std::vector<std::string>& vars, int n, std::uint64_t seed,
                          std::uint32_t p = PrimeField::kDefaultPrime);

struct GoldenCheck {
  std::string name;
  std::string expected;
  std::string actual;
  bool pass = false;
};

struct RegistryResult {
  std::string id;
  /// Resolved parameter value, if the example takes one.
  std::optional<int> param;
  std::optional<char> param_name;
  AnalysisReport report;
  std::vector<GoldenCheck> checks;

  bool all_pass() const;
};

/// Builds the example, runs the full analysis and compares against its golden values.
RegistryResult run_registry(const std::string& id, const RegistryParams& params = {},
                            const AnalysisOptions& options = {});

/// λ(Ī^t/(x_d Ī^{t-1} + Ī^{t+1})) in R̄.
LocalLength residual_graded_length(const ReductionData& rd, int t);

}  // namespace jst::cli

#endif
