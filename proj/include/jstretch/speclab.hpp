#ifndef JSTRETCH_SPECLAB_HPP
#define JSTRETCH_SPECLAB_HPP

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "jstretch/reductions.hpp"

namespace jst {

enum class Quantity {
  /// λ(I^n/J^n)
  IN_JN,
  /// λ(I^n/(J I^{n-1} + I^{n+1}))
  IN_JIN1,
  /// λ(I²/JI)
  I2_JI,
  /// λ((J ∩ I²)/JI)
  JcapI2_JI,
  /// λ((J:I) ∩ I/J)
  TAU,
  /// min{n | I^{n+1} ⊆ J}
  S_J,
};

std::string to_string(Quantity q);
/// Accepts the enumerator names; throws PreconditionFailed otherwise.
Quantity parse_quantity(const std::string& name);
const std::vector<Quantity>& all_quantities();

/// nullopt stands for an infinite length.
using QuantityValue = std::optional<std::int64_t>;

std::string to_string(const QuantityValue& v);

/// Evaluates q for the reduction rd; n is the power used by IN_JN and IN_JIN1.
QuantityValue evaluate(Quantity q, const ReductionData& rd, int n = 2, int cap = 20);

struct TrialValue {
  std::uint64_t seed = 0;
  bool ok = false;
  QuantityValue value;
  std::string error;
};

struct FixedComparison {
  std::string description;
  QuantityValue fixed;
  QuantityValue general;
  bool general_le_fixed = false;
  /// Status of J ∩ I² = JI for the general reduction; only set for S_J.
  std::optional<bool> intersection_hypothesis;
};

struct TrialReport {
  Quantity quantity = Quantity::I2_JI;
  int n = 2;
  std::vector<TrialValue> values;
  std::optional<QuantityValue> modal;
  /// (count of the modal value) / trials
  double stability = 0;
  std::vector<FixedComparison> fixed_comparisons;

  bool all_finite_or_all_infinite() const;
};

struct TrialOptions {
  int trials = 20;
  std::uint64_t seed = 1;
  int n = 2;
  int cap = 20;
};

/// Trials use seeds seed, seed+1, ...; every quantity is evaluated on the same samples.
std::vector<TrialReport> stability_trials(const Ideal& ideal, const std::vector<Quantity>& quantities,
                                          const TrialOptions& options = {});
TrialReport stability_trials(const Ideal& ideal, Quantity quantity, const TrialOptions& options = {});

/// Least r ≤ cap with I^{r+1} ⊆ H I^r locally; NotAReduction if none.
int fixed_reduction_number(const Ideal& ideal, const std::vector<Polynomial>& H, int cap = 20);

/// Compares q at H with its modal general value, appending the comparison to the report.
FixedComparison fixed_vs_general(const Ideal& ideal, const std::vector<Polynomial>& H, const std::string& description,
                                 TrialReport& general, int cap = 20);
FixedComparison fixed_vs_general(const Ideal& ideal, const std::vector<Polynomial>& H, const std::string& description,
                                 Quantity quantity, const TrialOptions& options = {});

}  // namespace jst

#endif
