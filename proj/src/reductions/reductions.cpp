#include "jstretch/reductions.hpp"

#include <functional>
#include <string>

#include "jstretch/errors.hpp"

namespace jst {

GeneralSampler::GeneralSampler(std::uint64_t seed, PrimeField field)
    : seed_(seed), field_(field), engine_(seed) {}

Coeff GeneralSampler::next() {
  std::uniform_int_distribution<Coeff> dist(0, field_.characteristic() - 1);
  return dist(engine_);
}

std::vector<Coeff> GeneralSampler::row(std::size_t n) {
  std::vector<Coeff> r(n);
  for (;;) {
    bool nonzero = false;
    for (auto& c : r) {
      c = next();
      nonzero = nonzero || c != 0;
    }
    if (nonzero || n == 0) return r;
  }
}

namespace {

Ideal cached(std::vector<Ideal>& slot, int n, const std::function<Ideal()>& make) {
  if (slot.size() <= static_cast<std::size_t>(n)) slot.resize(n + 1);
  if (!slot[n].ambient()) slot[n] = make();
  return slot[n];
}

}  // namespace

Ideal ReductionData::power(int n) const {
  std::lock_guard lock(cache_->mutex);
  return cached(cache_->powers, n, [&] { return jst::power(ideal_, n); });
}

Ideal ReductionData::power_bar(int n) const {
  if (!rbar_) throw PreconditionFailed("the residual quotient is zero");
  std::lock_guard lock(cache_->mutex);
  return cached(cache_->powers_bar, n, [&] { return jst::power(ibar_, n); });
}

Ideal ReductionData::j_times_power(int n) const {
  Ideal p = power(n);
  std::lock_guard lock(cache_->mutex);
  return cached(cache_->j_powers, n, [&] { return product(j_, p); });
}

Ideal ReductionData::to_bar(const Ideal& a) const {
  if (!rbar_) throw PreconditionFailed("the residual quotient is zero");
  return Ideal(rbar_, a.generators());
}

bool operator==(const ReductionData& a, const ReductionData& b) {
  return a.d_ == b.d_ && a.seed_ == b.seed_ && a.lambda_ == b.lambda_ && a.x_ == b.x_ &&
         a.ideal_.generators() == b.ideal_.generators() && a.sat_.gb() == b.sat_.gb();
}

ReductionData make_reduction(const Ideal& ideal, std::vector<Polynomial> elements, int d, std::uint64_t seed,
                             std::vector<std::vector<Coeff>> lambda) {
  if (static_cast<int>(elements.size()) != d)
    throw PreconditionFailed("a reduction needs " + std::to_string(d) + " elements");
  ReductionData rd;
  rd.ideal_ = ideal;
  rd.d_ = d;
  rd.seed_ = seed;
  rd.lambda_ = std::move(lambda);
  rd.x_ = std::move(elements);
  rd.cache_ = std::make_shared<ReductionData::Cache>();
  const AmbientPtr& amb = ideal.ambient();
  rd.j_ = Ideal(amb, rd.x_);
  std::vector<Polynomial> head(rd.x_.begin(), rd.x_.end() - (d > 0 ? 1 : 0));
  rd.j_prev_ = Ideal(amb, head);
  rd.sat_ = saturate(rd.j_prev_, ideal).compacted();
  if (d > 0 && !contains_locally_at_m(rd.sat_, Ideal::unit(amb))) {
    rd.rbar_ = quotient_ambient(amb, rd.sat_.generators());
    rd.ibar_ = Ideal(rd.rbar_, ideal.generators());
  }
  return rd;
}

ReductionData sample_reduction(const Ideal& ideal, GeneralSampler& sampler) {
  if (!ideal.inside_maximal()) throw NotContainedInMaximal();
  const int d = krull_dim(Ideal::zero(ideal.ambient()));
  const auto& gens = ideal.generators();
  std::vector<std::vector<Coeff>> lambda;
  std::vector<Polynomial> x;
  for (int i = 0; i < d; ++i) {
    auto row = sampler.row(gens.size());
    Polynomial f(ideal.poly_ring());
    for (std::size_t j = 0; j < gens.size(); ++j) f += gens[j].scaled(row[j]);
    lambda.push_back(std::move(row));
    x.push_back(std::move(f));
  }
  return make_reduction(ideal, std::move(x), d, sampler.seed(), std::move(lambda));
}

ReductionData sample_reduction(const Ideal& ideal, std::uint64_t seed) {
  GeneralSampler sampler(seed, ideal.ambient()->field());
  return sample_reduction(ideal, sampler);
}

bool max_spread_check(const ReductionData& rd) { return rd.rbar() != nullptr; }

namespace {

void require_spread(const ReductionData& rd) {
  if (!max_spread_check(rd)) throw PreconditionFailed("analytic spread is below the dimension");
}

}  // namespace

int reduction_number(const ReductionData& rd, int cap) {
  require_spread(rd);
  for (int r = 0; r <= cap; ++r)
    if (contains_locally_at_m(rd.j_times_power(r), rd.power(r + 1))) return r;
  throw CapExceeded("reduction number exceeds " + std::to_string(cap));
}

int index_of_nilpotency(const ReductionData& rd, int cap) {
  require_spread(rd);
  for (int n = 0; n <= cap; ++n)
    if (contains_locally_at_m(rd.J(), rd.power(n + 1))) return n;
  throw CapExceeded("index of nilpotency exceeds " + std::to_string(cap));
}

std::int64_t finite_length(const Ideal& a, const Ideal& b, const char* what) {
  auto len = quotient_length(a, b);
  if (!len.finite()) throw PreconditionFailed(std::string(what) + " has infinite length");
  return *len;
}

JMultiplicity j_multiplicity(const ReductionData& rd) {
  require_spread(rd);
  const Ideal& ib = rd.ibar();
  Ideal ib2 = rd.power_bar(2);
  Ideal xdi = product(principal(rd.rbar(), rd.last()), ib);
  JMultiplicity j;
  j.head = finite_length(ib, ib2, "Ī/Ī²");
  j.tail = finite_length(ib2, xdi, "Ī²/x_dĪ");
  j.value = finite_length(ib, xdi, "Ī/x_dĪ");
  if (j.value != j.head + j.tail) throw Error("j-multiplicity split is inconsistent");
  return j;
}

}  // namespace jst
