#include "jstretch/speclab.hpp"

#include <algorithm>
#include <future>
#include <map>

#include "jstretch/errors.hpp"

namespace jst {

namespace {

const std::vector<std::pair<Quantity, std::string>>& names() {
  static const std::vector<std::pair<Quantity, std::string>> table = {
      {Quantity::IN_JN, "IN_JN"}, {Quantity::IN_JIN1, "IN_JIN1"}, {Quantity::I2_JI, "I2_JI"},
      {Quantity::JcapI2_JI, "JcapI2_JI"}, {Quantity::TAU, "TAU"}, {Quantity::S_J, "S_J"},
  };
  return table;
}

QuantityValue as_value(const LocalLength& l) { return l.value; }

// a ≤ b with ∞ as the top element
bool value_le(const QuantityValue& a, const QuantityValue& b) {
  if (!b) return true;
  if (!a) return false;
  return *a <= *b;
}

}  // namespace

std::string to_string(Quantity q) {
  for (const auto& [k, name] : names())
    if (k == q) return name;
  return "?";
}

Quantity parse_quantity(const std::string& name) {
  for (const auto& [k, n] : names())
    if (n == name) return k;
  throw PreconditionFailed("unknown quantity '" + name + "'");
}

const std::vector<Quantity>& all_quantities() {
  static const std::vector<Quantity> all = [] {
    std::vector<Quantity> v;
    for (const auto& [k, name] : names()) v.push_back(k);
    return v;
  }();
  return all;
}

std::string to_string(const QuantityValue& v) { return v ? std::to_string(*v) : "INFINITE"; }

QuantityValue evaluate(Quantity q, const ReductionData& rd, int n, int cap) {
  if (n < 1) throw PreconditionFailed("quantity power must be at least 1");
  switch (q) {
    case Quantity::IN_JN:
      return as_value(quotient_length(rd.power(n), power(rd.J(), n)));
    case Quantity::IN_JIN1:
      return as_value(quotient_length(rd.power(n), sum(rd.j_times_power(n - 1), rd.power(n + 1))));
    case Quantity::I2_JI:
      return as_value(quotient_length(rd.power(2), rd.j_times_power(1)));
    case Quantity::JcapI2_JI:
      return as_value(quotient_length(intersect(rd.J(), rd.power(2)), rd.j_times_power(1)));
    case Quantity::TAU:
      return as_value(quotient_length(intersect(colon(rd.J(), rd.ideal()), rd.ideal()), rd.J()));
    case Quantity::S_J:
      return index_of_nilpotency(rd, cap);
  }
  return std::nullopt;
}

bool TrialReport::all_finite_or_all_infinite() const {
  bool any_finite = false, any_infinite = false;
  for (const auto& v : values) {
    if (!v.ok) continue;
    (v.value ? any_finite : any_infinite) = true;
  }
  return !(any_finite && any_infinite);
}

std::vector<TrialReport> stability_trials(const Ideal& ideal, const std::vector<Quantity>& quantities,
                                          const TrialOptions& options) {
  if (options.trials < 1) throw PreconditionFailed("at least one trial is required");
  std::vector<std::future<std::vector<TrialValue>>> jobs;
  for (int t = 0; t < options.trials; ++t) {
    std::uint64_t seed = options.seed + static_cast<std::uint64_t>(t);
    jobs.push_back(std::async(std::launch::async, [&, seed] {
      std::vector<TrialValue> out(quantities.size());
      std::optional<ReductionData> rd;
      std::string sample_error;
      try {
        rd = sample_reduction(ideal, seed);
      } catch (const Error& e) {
        sample_error = e.what();
      }
      for (std::size_t i = 0; i < quantities.size(); ++i) {
        out[i].seed = seed;
        if (!rd) {
          out[i].error = sample_error;
          continue;
        }
        try {
          out[i].value = evaluate(quantities[i], *rd, options.n, options.cap);
          out[i].ok = true;
        } catch (const Error& e) {
          out[i].error = e.what();
        }
      }
      return out;
    }));
  }
  std::vector<TrialReport> reports(quantities.size());
  for (std::size_t i = 0; i < quantities.size(); ++i) {
    reports[i].quantity = quantities[i];
    reports[i].n = options.n;
  }
  for (auto& job : jobs) {
    auto row = job.get();
    for (std::size_t i = 0; i < row.size(); ++i) reports[i].values.push_back(std::move(row[i]));
  }
  for (auto& rep : reports) {
    // first value reaching the top count wins ties, so the result follows seed order
    std::map<QuantityValue, int> counts;
    for (const auto& v : rep.values)
      if (v.ok) ++counts[v.value];
    int best = 0;
    for (const auto& v : rep.values) {
      if (!v.ok || counts[v.value] <= best) continue;
      best = counts[v.value];
      rep.modal = v.value;
    }
    rep.stability = static_cast<double>(best) / static_cast<double>(options.trials);
  }
  return reports;
}

TrialReport stability_trials(const Ideal& ideal, Quantity quantity, const TrialOptions& options) {
  return stability_trials(ideal, std::vector<Quantity>{quantity}, options).front();
}

int fixed_reduction_number(const Ideal& ideal, const std::vector<Polynomial>& H, int cap) {
  for (const auto& h : H)
    if (!ideal.contains(h)) throw NotAReduction("an element of H lies outside I");
  Ideal hi(ideal.ambient(), H);
  Ideal power_r = Ideal::unit(ideal.ambient());
  for (int r = 0; r <= cap; ++r) {
    Ideal next = product(power_r, ideal);
    if (contains_locally_at_m(product(hi, power_r), next)) return r;
    power_r = next;
  }
  throw NotAReduction("no r <= " + std::to_string(cap) + " with I^{r+1} = H I^r");
}

FixedComparison fixed_vs_general(const Ideal& ideal, const std::vector<Polynomial>& H, const std::string& description,
                                 TrialReport& general, int cap) {
  const int d = krull_dim(Ideal::zero(ideal.ambient()));
  if (static_cast<int>(H.size()) != d)
    throw PreconditionFailed("H needs " + std::to_string(d) + " generators, got " + std::to_string(H.size()));
  fixed_reduction_number(ideal, H, cap);
  if (!general.modal) throw PreconditionFailed("no general trial succeeded for " + to_string(general.quantity));

  ReductionData rd = make_reduction(ideal, H, d);
  FixedComparison c;
  c.description = description;
  c.fixed = evaluate(general.quantity, rd, general.n, cap);
  c.general = *general.modal;
  c.general_le_fixed = value_le(c.general, c.fixed);
  if (general.quantity == Quantity::S_J) {
    for (const auto& v : general.values) {
      if (!v.ok || v.value != c.general) continue;
      auto sample = sample_reduction(ideal, v.seed);
      c.intersection_hypothesis =
          contains_locally_at_m(sample.j_times_power(1), intersect(sample.J(), sample.power(2)));
      break;
    }
  }
  general.fixed_comparisons.push_back(c);
  return c;
}

FixedComparison fixed_vs_general(const Ideal& ideal, const std::vector<Polynomial>& H, const std::string& description,
                                 Quantity quantity, const TrialOptions& options) {
  TrialReport general = stability_trials(ideal, quantity, options);
  return fixed_vs_general(ideal, H, description, general, options.cap);
}

}  // namespace jst
