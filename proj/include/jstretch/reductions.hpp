#ifndef JSTRETCH_REDUCTIONS_HPP
#define JSTRETCH_REDUCTIONS_HPP

#include <cstdint>
#include <memory>
#include <mutex>
#include <random>
#include <vector>

#include "jstretch/ideal.hpp"
#include "jstretch/lengths.hpp"

namespace jst {

/// Uniform coefficients in F_p from a seeded stream.
class GeneralSampler {
 public:
  GeneralSampler(std::uint64_t seed, PrimeField field = PrimeField());

  std::uint64_t seed() const { return seed_; }
  const PrimeField& field() const { return field_; }
  Coeff next();
  /// A row of n coefficients, redrawn until some entry is nonzero.
  std::vector<Coeff> row(std::size_t n);

 private:
  std::uint64_t seed_;
  PrimeField field_;
  std::mt19937_64 engine_;
};

/// A minimal reduction J = (x_1..x_d) of I together with the residual quotient
/// R̄ = R/(J_{d-1} : I^∞). Powers of I and Ī are cached and shared by copies.
class ReductionData {
 public:
  ReductionData() = default;

  const Ideal& ideal() const { return ideal_; }
  const AmbientPtr& ambient() const { return ideal_.ambient(); }
  int dim() const { return d_; }
  std::uint64_t seed() const { return seed_; }
  /// d × s coefficient matrix; empty for an explicitly given reduction.
  const std::vector<std::vector<Coeff>>& coefficients() const { return lambda_; }
  const std::vector<Polynomial>& elements() const { return x_; }
  const Ideal& J() const { return j_; }
  const Ideal& J_prev() const { return j_prev_; }
  const Ideal& sat() const { return sat_; }
  /// Null when sat is the unit ideal locally.
  const AmbientPtr& rbar() const { return rbar_; }
  const Ideal& ibar() const { return ibar_; }
  /// x_d, the last reduction element.
  const Polynomial& last() const { return x_.back(); }

  /// I^n in R and Ī^n in R̄.
  Ideal power(int n) const;
  Ideal power_bar(int n) const;
  /// J·I^n
  Ideal j_times_power(int n) const;
  /// Image of an ideal of R in R̄.
  Ideal to_bar(const Ideal& a) const;

  friend bool operator==(const ReductionData& a, const ReductionData& b);

  friend ReductionData make_reduction(const Ideal& ideal, std::vector<Polynomial> elements, int d,
                                      std::uint64_t seed, std::vector<std::vector<Coeff>> lambda);

 private:
  struct Cache {
    std::mutex mutex;
    std::vector<Ideal> powers, powers_bar, j_powers;
  };
  Ideal ideal_;
  int d_ = 0;
  std::uint64_t seed_ = 0;
  std::vector<std::vector<Coeff>> lambda_;
  std::vector<Polynomial> x_;
  Ideal j_, j_prev_, sat_;
  AmbientPtr rbar_;
  Ideal ibar_;
  std::shared_ptr<Cache> cache_;
};

/// Builds J, J_{d-1}, the saturation and R̄ from the given reduction elements.
ReductionData make_reduction(const Ideal& ideal, std::vector<Polynomial> elements, int d, std::uint64_t seed = 0,
                             std::vector<std::vector<Coeff>> lambda = {});

/// d general elements of I, d = dim R.
ReductionData sample_reduction(const Ideal& ideal, GeneralSampler& sampler);
ReductionData sample_reduction(const Ideal& ideal, std::uint64_t seed);

/// R̄ is nonzero as a local ring, i.e. ℓ(I) = d.
bool max_spread_check(const ReductionData& rd);

/// Least r with I^{r+1} ⊆ J·I^r locally.
int reduction_number(const ReductionData& rd, int cap = 20);
/// Least n with I^{n+1} ⊆ J locally.
int index_of_nilpotency(const ReductionData& rd, int cap = 20);

struct JMultiplicity {
  std::int64_t value = 0;
  /// λ(Ī/Ī²)
  std::int64_t head = 0;
  /// λ(Ī²/x_d Ī)
  std::int64_t tail = 0;
};

/// j(I) = λ(Ī/x_d Ī) in R̄, with its split along Ī².
JMultiplicity j_multiplicity(const ReductionData& rd);

/// Length of a quotient that must be finite; throws PreconditionFailed otherwise.
std::int64_t finite_length(const Ideal& a, const Ideal& b, const char* what);

}  // namespace jst

#endif
