#include "jstretch/lengths.hpp"

#include <algorithm>

#include "jstretch/errors.hpp"

namespace jst {

namespace {

using Series = std::vector<std::int64_t>;

void minimalize(std::vector<Monomial>& gens) {
  std::sort(gens.begin(), gens.end(), [](const Monomial& a, const Monomial& b) { return a.degree() < b.degree(); });
  std::vector<Monomial> out;
  for (const auto& g : gens) {
    bool redundant = false;
    for (const auto& o : out)
      if (o.divides(g)) {
        redundant = true;
        break;
      }
    if (!redundant) out.push_back(g);
  }
  gens = std::move(out);
}

void add_into(Series& a, const Series& b, int shift) {
  if (a.size() < b.size() + shift) a.resize(b.size() + shift, 0);
  for (std::size_t i = 0; i < b.size(); ++i) a[i + shift] += b[i];
}

Series numerator_rec(std::vector<Monomial> gens, std::size_t nvars) {
  minimalize(gens);
  if (gens.empty()) return {1};
  bool coprime = true;
  std::uint32_t seen = 0;
  for (const auto& g : gens) {
    if (g.support() & seen) {
      coprime = false;
      break;
    }
    seen |= g.support();
  }
  if (coprime) {
    Series s{1};
    for (const auto& g : gens) {
      Series t(s.size() + g.degree(), 0);
      for (std::size_t i = 0; i < s.size(); ++i) {
        t[i] += s[i];
        t[i + g.degree()] -= s[i];
      }
      s = std::move(t);
    }
    return s;
  }
  // pivot on the variable shared by most generators, at its smallest positive exponent
  std::vector<int> count(nvars, 0), min_exp(nvars, kMaxDegree + 1);
  for (const auto& g : gens)
    for (std::size_t v = 0; v < nvars; ++v)
      if (g[v] > 0) {
        ++count[v];
        min_exp[v] = std::min(min_exp[v], g[v]);
      }
  std::size_t var = static_cast<std::size_t>(std::max_element(count.begin(), count.end()) - count.begin());
  Monomial pivot = Monomial::variable(var, min_exp[var]);

  std::vector<Monomial> plus = gens;
  plus.push_back(pivot);
  std::vector<Monomial> quot;
  quot.reserve(gens.size());
  for (const auto& g : gens) {
    Monomial q = g;
    q.set(var, std::max(0, g[var] - min_exp[var]));
    quot.push_back(q);
  }
  Series result = numerator_rec(std::move(plus), nvars);
  add_into(result, numerator_rec(std::move(quot), nvars), pivot.degree());
  return result;
}

// sum_{k<n_cut} HF(k) for the series numerator/(1-t)^nvars
std::int64_t partial_dimension(const Series& numerator, std::size_t nvars, int n_cut) {
  std::vector<__int128> s(n_cut, 0);
  for (std::size_t i = 0; i < numerator.size() && static_cast<int>(i) < n_cut; ++i) s[i] = numerator[i];
  for (std::size_t r = 0; r < nvars; ++r)
    for (int k = 1; k < n_cut; ++k) s[k] += s[k - 1];
  __int128 total = 0;
  for (auto v : s) total += v;
  return static_cast<std::int64_t>(total);
}

std::vector<Monomial> leading_monomials(const std::vector<Polynomial>& gb) {
  std::vector<Monomial> lm;
  for (const auto& g : gb)
    if (!g.is_zero()) lm.push_back(g.lm());
  return lm;
}

int max_generator_degree(const Ideal& a, const Ideal& b) {
  int d = 0;
  for (const auto& g : a.generators()) d = std::max(d, g.degree());
  for (const auto& g : b.generators()) d = std::max(d, g.degree());
  for (const auto& g : a.ambient()->relations()) d = std::max(d, g.degree());
  return d;
}

// Graded case: (N_B - N_A)/(1-t)^n must be a polynomial Q; the length is Q(1).
LocalLength graded_length(const Ideal& a, const Ideal& b) {
  const std::size_t n = a.ambient()->nvars();
  if (a.is_unit() && b.is_unit()) return {0, 0};
  Series na = a.is_unit() ? Series{} : hilbert_numerator(leading_monomials(a.gb()), n);
  Series nb = b.is_unit() ? Series{} : hilbert_numerator(leading_monomials(b.gb()), n);
  // S/unit has zero series
  Series diff(std::max(na.size(), nb.size()), 0);
  for (std::size_t i = 0; i < nb.size(); ++i) diff[i] += nb[i];
  for (std::size_t i = 0; i < na.size(); ++i) diff[i] -= na[i];
  while (!diff.empty() && diff.back() == 0) diff.pop_back();
  if (diff.empty()) return {0, 0};
  for (std::size_t r = 0; r < n; ++r) {
    // divide by (1 - t): prefix sums, the total must vanish
    std::int64_t acc = 0;
    for (auto& c : diff) {
      acc += c;
      c = acc;
    }
    if (acc != 0) return LocalLength::infinite(static_cast<int>(diff.size()));
    diff.pop_back();
    while (!diff.empty() && diff.back() == 0) diff.pop_back();
    if (diff.empty()) return {0, 0};
  }
  std::int64_t value = 0;
  for (auto c : diff) value += c;
  return {value, static_cast<int>(diff.size())};
}

}  // namespace

std::vector<std::int64_t> hilbert_numerator(std::vector<Monomial> gens, std::size_t nvars) {
  Series s = numerator_rec(std::move(gens), nvars);
  while (s.size() > 1 && s.back() == 0) s.pop_back();
  return s;
}

std::int64_t truncated_colength(const Ideal& b, int n_cut) {
  const std::size_t n = b.ambient()->nvars();
  if (b.is_unit()) return 0;
  if (b.is_homogeneous()) return partial_dimension(hilbert_numerator(leading_monomials(b.gb()), n), n, n_cut);
  GbOptions opt = b.ambient()->gb_options();
  opt.degree_cap = std::max(opt.degree_cap, n_cut + opt.degree_cap);
  opt.truncate_degree = n_cut;
  auto gb = buchberger(b.gb(), opt);
  if (gb.size() == 1 && gb[0].is_constant()) return 0;
  return partial_dimension(hilbert_numerator(leading_monomials(gb), n), n, n_cut);
}

LocalLength quotient_length(const Ideal& a, const Ideal& b, const LengthOptions& options) {
  if (!same_ring(a.poly_ring(), b.poly_ring())) throw RingMismatch();
  if (!a.contains(b) && !contains_locally_at_m(a, b)) throw NotLocallyContained();
  if (a.is_homogeneous() && b.is_homogeneous()) return graded_length(a, b);

  const int cap = std::min(options.cap, a.ambient()->gb_options().truncation_cap);
  int n_cut = max_generator_degree(a, b) + options.extra;
  std::optional<std::int64_t> previous;
  while (n_cut <= cap) {
    std::int64_t value = truncated_colength(b, n_cut) - truncated_colength(a, n_cut);
    if (previous && *previous == value) return {value, n_cut - options.step};
    previous = value;
    n_cut += options.step;
  }
  return LocalLength::infinite(cap);
}

std::int64_t hilbert_function(const Ideal& ideal, int n, const LengthOptions& options) {
  Ideal unit = Ideal::unit(ideal.ambient());
  if (!quotient_length(unit, ideal, options).finite()) throw NotMPrimary();
  if (n < 0) return 0;
  auto len = quotient_length(power(ideal, n), power(ideal, n + 1), options);
  if (!len.finite()) throw NotMPrimary();
  return *len;
}

}  // namespace jst
