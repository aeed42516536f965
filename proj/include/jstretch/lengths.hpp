#ifndef JSTRETCH_LENGTHS_HPP
#define JSTRETCH_LENGTHS_HPP

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "jstretch/ideal.hpp"

namespace jst {

/// λ((A/B)_m). An absent value means the length is infinite.
struct LocalLength {
  std::optional<std::int64_t> value;
  /// Truncation exponent N from which dim S/(B+H+m^N) - dim S/(A+H+m^N) no longer moved.
  int stabilized_at = 0;

  bool finite() const { return value.has_value(); }
  std::int64_t operator*() const { return *value; }
  std::string to_string() const { return value ? std::to_string(*value) : "inf"; }

  static LocalLength infinite(int n) { return {std::nullopt, n}; }
  friend bool operator==(const LocalLength& a, const LocalLength& b) { return a.value == b.value; }
};

/// Truncation schedule N = N0, N0+step, ... with N0 = (max generator degree) + extra.
struct LengthOptions {
  int extra = 6;
  int step = 4;
  int cap = 60;
};

/// Length of (A/B) localized at the origin of R, for B ⊆ A locally.
///
/// For N large the sequence
///   0 -> (A+m^N)/(B+m^N) -> S/(B+H+m^N) -> S/(A+H+m^N) -> 0
/// is exact and, once (A/B)_m has finite length, A ∩ m^N ⊆ B + H locally, so
/// the left term is (A/B)_m itself. Each dimension is the number of standard
/// monomials of a reduced basis; for graded input the whole sequence is read
/// off the Hilbert series in closed form, otherwise a basis of B+H+m^N is
/// computed for N on the schedule until two consecutive values agree.
LocalLength quotient_length(const Ideal& a, const Ideal& b, const LengthOptions& options = {});

/// λ(I^n / I^{n+1}) in the ambient ring of I, for I primary to the maximal ideal.
std::int64_t hilbert_function(const Ideal& ideal, int n, const LengthOptions& options = {});

/// dim_k S/(B + H + m^N).
std::int64_t truncated_colength(const Ideal& b, int n_cut);

/// Numerator of the Hilbert series of S/M for a monomial ideal M in nvars variables.
std::vector<std::int64_t> hilbert_numerator(std::vector<Monomial> gens, std::size_t nvars);

}  // namespace jst

#endif
