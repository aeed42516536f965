#include "jstretch/analysis.hpp"

#include <algorithm>
#include <future>
#include <random>
#include <tuple>

#include "jstretch/errors.hpp"

namespace jst {

std::vector<std::string> Hypotheses::missing() const {
  std::vector<std::string> out;
  if (!G_d) out.push_back("G_d");
  if (!AN_minus) out.push_back("AN_minus");
  if (!depth_RI) out.push_back("depth_RI");
  return out;
}

Verdict make_verdict(bool value, const Hypotheses& hyps) {
  Verdict v;
  v.value = value;
  v.unasserted = hyps.missing();
  v.asserted = v.unasserted.empty();
  return v;
}

namespace {

void require_spread(const ReductionData& rd) {
  if (!max_spread_check(rd)) throw PreconditionFailed("analytic spread is below the dimension");
}

Ideal xd_times(const ReductionData& rd, const Ideal& a) { return product(principal(a.ambient(), rd.last()), a); }

bool locally_equal_sub(const Ideal& small, const Ideal& big) { return contains_locally_at_m(small, big); }

Ideal times_maximal(const AmbientPtr& amb, const Polynomial& f) {
  std::vector<Polynomial> gens;
  for (const auto& x : amb->maximal_ideal_generators()) gens.push_back(f * x);
  return Ideal(amb, std::move(gens));
}

}  // namespace

StretchResult is_j_stretched(const ReductionData& rd) {
  require_spread(rd);
  Ideal i2 = rd.power_bar(2);
  StretchResult s;
  s.length = quotient_length(i2, sum(xd_times(rd, rd.ibar()), rd.power_bar(3)));
  s.value = s.length.finite() && *s.length <= 1;
  return s;
}

Classification classify(const ReductionData& rd) {
  Classification c;
  auto j = j_multiplicity(rd);
  auto s = is_j_stretched(rd);
  c.tail = j.tail;
  c.minimal_j = j.tail == 0;
  c.almost_minimal_j = j.tail <= 1;
  c.almost_almost_minimal_j = j.tail <= 2;
  c.j_stretched = s.value;
  c.stretch_length = s.length;
  return c;
}

NuSequences nu_sequence(const ReductionData& rd, int last) {
  require_spread(rd);
  NuSequences out;
  Ideal jbar = rd.to_bar(rd.J());
  for (int n = 0; n <= last; ++n) {
    out.nu.push_back(quotient_length(rd.power(n + 1), rd.j_times_power(n)));
    out.nubar.push_back(quotient_length(rd.power_bar(n + 1), product(jbar, rd.power_bar(n))));
  }
  return out;
}

bool PropertiesAudit::all_pass() const {
  return std::all_of(items.begin(), items.end(), [](const AuditItem& i) { return i.pass; });
}

const AuditItem* PropertiesAudit::find(const std::string& name) const {
  for (const auto& i : items)
    if (i.name == name) return &i;
  return nullptr;
}

namespace {

struct WitnessSearch {
  const ReductionData& rd;
  Ideal base;  // JI + I³

  bool spans(const Polynomial& a, const Polynomial& b) const {
    const AmbientPtr& amb = rd.ambient();
    if (contains_locally_at_m(rd.J(), principal(amb, a))) return false;
    if (contains_locally_at_m(rd.J(), principal(amb, b))) return false;
    return contains_locally_at_m(sum(base, principal(amb, a * b)), rd.power(2));
  }
};

}  // namespace

PropertiesAudit properties_audit(const ReductionData& rd, int K, std::int64_t j_value, std::int64_t rbar_colength,
                                 std::int64_t h) {
  require_spread(rd);
  auto cls = classify(rd);
  if (!cls.j_stretched || cls.minimal_j)
    throw PreconditionFailed("properties_audit needs a j-stretched ideal without minimal j-multiplicity");
  const AmbientPtr& amb = rd.ambient();
  const auto& gens = rd.ideal().generators();
  WitnessSearch search{rd, sum(rd.j_times_power(1), rd.power(3))};

  PropertiesAudit audit;
  bool found = false;
  std::vector<std::pair<std::size_t, std::size_t>> pairs;
  for (std::size_t i = 0; i < gens.size(); ++i)
    for (std::size_t k = i; k < gens.size(); ++k) pairs.emplace_back(i, k);
  std::stable_sort(pairs.begin(), pairs.end(), [&](const auto& x, const auto& y) {
    return gens[x.first].degree() + gens[x.second].degree() < gens[y.first].degree() + gens[y.second].degree();
  });
  for (const auto& [i, k] : pairs)
    if (search.spans(gens[i], gens[k])) {
      audit.a = gens[i];
      audit.b = gens[k];
      audit.witness_source = "product";
      found = true;
      break;
    }
  if (!found) {
    std::mt19937_64 engine(rd.seed() ^ 0x5bd1e995ULL);
    const PrimeField& field = amb->field();
    std::uniform_int_distribution<Coeff> dist(0, field.characteristic() - 1);
    auto random_element = [&] {
      Polynomial f(rd.ideal().poly_ring());
      for (const auto& g : gens) f += g.scaled(dist(engine));
      return f;
    };
    for (int attempt = 0; attempt < 25 && !found; ++attempt) {
      Polynomial a = random_element(), b = random_element();
      if (a.is_zero() || b.is_zero()) continue;
      if (search.spans(a, b)) {
        audit.a = a;
        audit.b = b;
        audit.witness_source = "random";
        found = true;
      }
    }
  }
  if (!found) throw WitnessNotFound();

  const Polynomial& a = audit.a;
  const Polynomial& b = audit.b;
  audit.items.push_back({"a", j_value >= rbar_colength + h + 1,
                         "j=" + std::to_string(j_value) + " >= " + std::to_string(rbar_colength) + "+" +
                             std::to_string(h) + "+1"});
  bool all_b = true, all_c = true;
  std::string bad_b, bad_c;
  for (int n = 1; n <= std::max(K, 1); ++n) {
    Polynomial anb = a.pow(n) * b;
    Ideal rhs = sum(rd.j_times_power(n), principal(amb, anb));
    if (!contains_locally_at_m(rhs, rd.power(n + 1))) {
      all_b = false;
      bad_b += " n=" + std::to_string(n);
    }
    Ideal target = sum(rd.power(n + 2), rd.j_times_power(n));
    if (!contains_locally_at_m(target, times_maximal(amb, anb))) {
      all_c = false;
      bad_c += " n=" + std::to_string(n);
    }
  }
  audit.items.push_back({"b", all_b, all_b ? "holds for n<=" + std::to_string(std::max(K, 1)) : "fails at" + bad_b});
  audit.items.push_back({"c", all_c, all_c ? "holds for n<=" + std::to_string(std::max(K, 1)) : "fails at" + bad_c});
  Ideal d_rhs = sum(principal(amb, b), intersect(colon(rd.J(), a), rd.ideal()));
  bool d_ok = contains_locally_at_m(d_rhs, rd.ideal());
  audit.items.push_back({"d", d_ok, d_ok ? "I = (b) + (J:a) ∩ I" : "(b) + (J:a) ∩ I is smaller than I"});

  bool all_37a = true;
  std::string bad_37a;
  Polynomial akb = a.pow(K) * b;
  for (int n = 0; n <= K; ++n) {
    Ideal lhs = intersect(rd.J(), rd.power(n + 1));
    Ideal rhs = sum(rd.j_times_power(n), principal(amb, akb));
    if (!equal_locally_at_m(lhs, rhs)) {
      all_37a = false;
      bad_37a += " n=" + std::to_string(n);
    }
  }
  audit.items.push_back({"prop37a", all_37a, all_37a ? "holds for n<=" + std::to_string(K) : "fails at" + bad_37a});
  return audit;
}

bool VvResult::all_equal() const { return std::all_of(equalities.begin(), equalities.end(), [](bool b) { return b; }); }

bool vv_equality(const ReductionData& rd, int t) {
  Ideal meet = intersect(rd.J(), rd.power(t + 1));
  return locally_equal_sub(rd.j_times_power(t), meet);
}

VvResult vv_equalities(const ReductionData& rd, int n, int K) {
  require_spread(rd);
  VvResult v;
  v.n = n;
  for (int t = 0; t <= n; ++t) v.equalities.push_back(vv_equality(rd, t));
  v.inclusion = contains_locally_at_m(rd.j_times_power(n), rd.power(K + 1));
  return v;
}

Theorem41 theorem41_check(int r_J, int s_J, int K, const Hypotheses& hyps) {
  Theorem41 t;
  t.predicted_cm = r_J == s_J;
  t.r_equals_K = r_J == K;
  t.verdict = make_verdict(t.predicted_cm, hyps);
  return t;
}

SallyResult sally_condition(const ReductionData& rd, int K, const Hypotheses& hyps) {
  require_spread(rd);
  SallyResult s;
  bool prefix = true;  // (a) holds for n = 0..p-2
  for (int p = 1; p <= std::max(K, 1); ++p) {
    prefix = prefix && vv_equality(rd, p - 1);
    if (!prefix) break;
    auto len = quotient_length(rd.power(p + 1), rd.j_times_power(p));
    if (len.finite() && *len <= 1) {
      s.p = p;
      break;
    }
  }
  s.verdict = make_verdict(s.p.has_value(), hyps);
  return s;
}

Cor46Result cor46_check(const ReductionData& rd, int K, const Hypotheses& hyps) {
  require_spread(rd);
  if (K < 1) throw PreconditionFailed("cor46_check needs K >= 1");
  Cor46Result c;
  c.inclusion = contains_locally_at_m(rd.j_times_power(K - 1), rd.power(K + 1));
  auto len = quotient_length(rd.power(K), rd.j_times_power(K - 1));
  c.length_one = len.finite() && *len == 1;
  c.acm = make_verdict(c.inclusion, hyps);
  return c;
}

TypeResult type_and_codim(const ReductionData& rd, int K, const Hypotheses& hyps) {
  require_spread(rd);
  TypeResult t;
  t.tau = quotient_length(intersect(colon(rd.J(), rd.ideal()), rd.ideal()), rd.J());
  t.rbar_colength = finite_length(Ideal::unit(rd.rbar()), rd.ibar(), "R̄/Ī");
  t.h = finite_length(rd.ibar(), rd.power_bar(2), "Ī/Ī²") - t.rbar_colength;
  t.small_type = t.tau.finite() && *t.tau < t.h + 1 - t.rbar_colength;
  if (t.small_type) {
    auto nu2 = quotient_length(rd.power(3), rd.j_times_power(2));
    t.nu2_ok = nu2.finite() && *nu2 == K - 2;
    t.vv3_ok = vv_equality(rd, 2);
  }
  t.verdict = make_verdict(t.small_type && t.nu2_ok.value_or(false) && t.vv3_ok.value_or(false), hyps);
  return t;
}

bool is_m_primary(const Ideal& ideal) { return quotient_length(Ideal::unit(ideal.ambient()), ideal).finite(); }

StretchedResult stretched_test(const ReductionData& rd) {
  if (!is_m_primary(rd.ideal())) throw NotMPrimary();
  StretchedResult s;
  Ideal meet = intersect(rd.J(), rd.power(2));
  s.intersection_property = contains_locally_at_m(rd.j_times_power(1), meet);
  s.hf2 = finite_length(rd.power(2), sum(meet, rd.power(3)), "I²/(J∩I²)+I³");
  s.value = s.intersection_property && s.hf2 <= 1;
  return s;
}

AnCriterion an_criterion(const Ideal& ideal, const std::vector<Polynomial>& reduction, const Hypotheses& hyps) {
  const int d = krull_dim(Ideal::zero(ideal.ambient()));
  for (const auto& y : reduction)
    if (!ideal.contains(y)) throw PreconditionFailed("reduction element outside the ideal");
  ReductionData rd = make_reduction(ideal, reduction, d);
  AnCriterion an;
  Ideal i2 = rd.power(2);
  Ideal denom = sum(sum(product(principal(ideal.ambient(), rd.last()), ideal), rd.power(3)), intersect(rd.sat(), i2));
  an.length = quotient_length(i2, denom);
  an.value = an.length.finite() && *an.length <= 1;
  if (is_m_primary(ideal)) an.intersection_property = vv_equality(rd, 1);
  if (an.intersection_property.value_or(false)) {
    an.verdict.value = an.value;
    an.verdict.asserted = true;
  } else {
    an.verdict = make_verdict(an.value, hyps);
  }
  return an;
}

namespace {

struct Core {
  bool ok = false;
  std::string error;
  bool spread = false;
  int r = -1, s = -1;
  std::int64_t j = -1, head = -1, tail = -1;
  std::optional<std::int64_t> stretch;

  auto key() const { return std::tie(ok, spread, r, s, j, tail, stretch); }
};

Core core_invariants(const ReductionData& rd, int cap) {
  Core c;
  try {
    c.spread = max_spread_check(rd);
    if (c.spread) {
      c.r = reduction_number(rd, cap);
      c.s = index_of_nilpotency(rd, cap);
      auto j = j_multiplicity(rd);
      c.j = j.value;
      c.head = j.head;
      c.tail = j.tail;
      c.stretch = is_j_stretched(rd).length.value;
    }
    c.ok = true;
  } catch (const Error& e) {
    c.error = e.what();
  }
  return c;
}

template <class F>
void count_dissent(const std::vector<Core>& cores, const Core& modal, const std::string& name, F get,
                   std::map<std::string, int>& dissent) {
  int n = 0;
  for (const auto& c : cores)
    if (!(get(c) == get(modal))) ++n;
  dissent[name] = n;
}

}  // namespace

AnalysisReport analyze(const Ideal& ideal, const AnalysisOptions& options) {
  ReductionData rd;
  return analyze(ideal, options, rd);
}

AnalysisReport analyze(const Ideal& ideal, const AnalysisOptions& options, ReductionData& chosen) {
  if (options.trials < 1) throw PreconditionFailed("at least one trial is required");
  AnalysisReport rep;
  rep.seed = options.seed;
  rep.p = ideal.ambient()->field().characteristic();
  rep.trials = options.trials;
  rep.cap = options.cap;
  rep.asserted = options.hyps;

  std::vector<std::future<std::pair<ReductionData, Core>>> jobs;
  for (int t = 0; t < options.trials; ++t) {
    std::uint64_t seed = options.seed + static_cast<std::uint64_t>(t);
    jobs.push_back(std::async(std::launch::async, [&ideal, seed, cap = options.cap] {
      ReductionData rd = sample_reduction(ideal, seed);
      Core c = core_invariants(rd, cap);
      return std::make_pair(std::move(rd), std::move(c));
    }));
  }
  std::vector<ReductionData> rds;
  std::vector<Core> cores;
  for (auto& j : jobs) {
    auto [rd, c] = j.get();
    rds.push_back(std::move(rd));
    cores.push_back(std::move(c));
  }
  // modal invariants, ties broken by trial order
  std::size_t best = 0;
  int best_count = 0;
  for (std::size_t i = 0; i < cores.size(); ++i) {
    int n = static_cast<int>(
        std::count_if(cores.begin(), cores.end(), [&](const Core& c) { return c.key() == cores[i].key(); }));
    if (n > best_count) {
      best = i;
      best_count = n;
    }
  }
  const Core& modal = cores[best];
  chosen = rds[best];
  const ReductionData& rd = chosen;
  rep.chosen_seed = rd.seed();
  count_dissent(cores, modal, "ell_is_d", [](const Core& c) { return c.spread; }, rep.dissent);
  count_dissent(cores, modal, "r_J", [](const Core& c) { return c.r; }, rep.dissent);
  count_dissent(cores, modal, "s_J", [](const Core& c) { return c.s; }, rep.dissent);
  count_dissent(cores, modal, "j_mult", [](const Core& c) { return c.j; }, rep.dissent);
  count_dissent(cores, modal, "lambda_tail", [](const Core& c) { return c.tail; }, rep.dissent);
  count_dissent(cores, modal, "stretch_length", [](const Core& c) { return c.stretch; }, rep.dissent);
  for (const auto& [name, n] : rep.dissent)
    if (n > 0) rep.warnings.push_back(name + ": " + std::to_string(n) + " of " + std::to_string(options.trials) +
                                      " trials disagree with the modal value");
  for (std::size_t i = 0; i < cores.size(); ++i)
    if (!cores[i].ok) rep.warnings.push_back("trial seed " + std::to_string(rds[i].seed()) + ": " + cores[i].error);
  if (!modal.ok) throw Error(modal.error);

  rep.d = rd.dim();
  rep.ell_is_d = modal.spread;
  rep.m_primary = is_m_primary(ideal);
  if (!rep.ell_is_d) return rep;

  rep.r_J = modal.r;
  rep.s_J = modal.s;
  rep.j_mult = modal.j;
  rep.lambda_head = modal.head;
  rep.lambda_tail = modal.tail;
  const int K = static_cast<int>(modal.tail) + 1;
  rep.K = K;
  if (rep.s_J != rep.K)
    rep.warnings.push_back("s_J = " + std::to_string(*rep.s_J) + " differs from K = " + std::to_string(K) +
                           " (K - 1 = λ(Ī²/x_dĪ))");

  auto nus = nu_sequence(rd, *rep.r_J);
  rep.nu = nus.nu;
  rep.nubar = nus.nubar;

  auto cls = classify(rd);
  rep.flags.j_stretched = cls.j_stretched;
  rep.flags.minimal_j = cls.minimal_j;
  rep.flags.almost_minimal_j = cls.almost_minimal_j;
  rep.flags.almost_almost_minimal_j = cls.almost_almost_minimal_j;
  rep.stretch_length = cls.stretch_length;
  if (rep.m_primary) rep.flags.stretched = stretched_test(rd).value;

  auto type = type_and_codim(rd, K, options.hyps);
  rep.tau = type.tau;
  rep.h = type.h;
  rep.rbar_colength = type.rbar_colength;

  if (cls.j_stretched) {
    rep.verdicts.thm41_predicted_CM = theorem41_check(*rep.r_J, *rep.s_J, K, options.hyps).verdict;
    auto sally = sally_condition(rd, K, options.hyps);
    rep.verdicts.thm45_p = sally.p;
    rep.verdicts.thm45_depth = sally.verdict;
    rep.verdicts.cor46_acm = cor46_check(rd, K, options.hyps).acm;
    rep.verdicts.thm49_smalltype = type.verdict;
  }
  return rep;
}

}  // namespace jst
