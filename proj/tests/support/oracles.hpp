#ifndef JSTRETCH_TEST_ORACLES_HPP
#define JSTRETCH_TEST_ORACLES_HPP

// Reference computations that avoid the Groebner engine entirely.

#include <algorithm>
#include <map>
#include <random>
#include <vector>

#include "jstretch/polynomial.hpp"

namespace jst::oracle {

/// All exponent vectors of total degree <= max_degree in n variables.
inline std::vector<Monomial> monomials_up_to(std::size_t n, int max_degree) {
  std::vector<Monomial> out;
  std::vector<int> e(n, 0);
  auto rec = [&](auto&& self, std::size_t var, int left) -> void {
    if (var == n) {
      out.push_back(Monomial(e));
      return;
    }
    for (int a = 0; a <= left; ++a) {
      e[var] = a;
      self(self, var + 1, left - a);
    }
    e[var] = 0;
  };
  rec(rec, 0, max_degree);
  return out;
}

inline bool in_monomial_ideal(const Monomial& m, const std::vector<Monomial>& gens) {
  return std::any_of(gens.begin(), gens.end(), [&](const Monomial& g) { return g.divides(m); });
}

/// Number of monomials lying in A but not in B (B ⊆ A monomial ideals), counted up to max_degree.
inline long staircase_difference(std::size_t n, const std::vector<Monomial>& a, const std::vector<Monomial>& b,
                                 int max_degree) {
  long count = 0;
  for (const auto& m : monomials_up_to(n, max_degree))
    if (in_monomial_ideal(m, a) && !in_monomial_ideal(m, b)) ++count;
  return count;
}

/// Generators of the intersection of two monomial ideals by pairwise lcm.
inline std::vector<Monomial> lcm_intersection(const std::vector<Monomial>& a, const std::vector<Monomial>& b) {
  std::vector<Monomial> out;
  for (const auto& x : a)
    for (const auto& y : b) out.push_back(lcm(x, y));
  return out;
}

/// Decides whether h = sum c_i g_i with deg c_i <= cofactor_degree, by Gaussian
/// elimination over F_p on coefficient vectors.
inline bool in_span_of_multiples(const Polynomial& h, const std::vector<Polynomial>& gens, int cofactor_degree) {
  const RingPtr& ring = h.ring();
  const auto& field = ring->field;
  std::map<std::vector<int>, std::size_t> column;
  auto col = [&](const Monomial& m) {
    auto key = m.exponents(ring->nvars());
    auto it = column.find(key);
    if (it != column.end()) return it->second;
    std::size_t c = column.size();
    column.emplace(std::move(key), c);
    return c;
  };
  using Row = std::map<std::size_t, Coeff>;
  auto to_row = [&](const Polynomial& p) {
    Row r;
    for (const auto& t : p.terms()) r[col(t.mono)] = t.coeff;
    return r;
  };
  // echelon rows keyed by pivot column
  std::map<std::size_t, Row> pivots;
  auto reduce = [&](Row r) {
    while (!r.empty()) {
      auto [c, v] = *r.begin();
      auto it = pivots.find(c);
      if (it == pivots.end()) return r;
      Coeff factor = field.mul(v, field.inv(it->second.at(c)));
      for (const auto& [pc, pv] : it->second) {
        Coeff nv = field.sub(r[pc], field.mul(factor, pv));
        if (nv == 0) r.erase(pc);
        else r[pc] = nv;
      }
    }
    return r;
  };
  for (const auto& g : gens)
    for (const auto& u : monomials_up_to(ring->nvars(), cofactor_degree)) {
      Row r = reduce(to_row(g.mul_term(1, u)));
      if (!r.empty()) pivots.emplace(r.begin()->first, std::move(r));
    }
  return reduce(to_row(h)).empty();
}

/// Random polynomial with `terms` terms of degree <= max_degree.
inline Polynomial random_polynomial(const RingPtr& ring, std::mt19937_64& rng, int max_degree, int terms) {
  std::uniform_int_distribution<int> deg(0, max_degree);
  std::uniform_int_distribution<Coeff> coeff(1, ring->field.characteristic() - 1);
  std::vector<Term> t;
  for (int i = 0; i < terms; ++i) {
    std::vector<int> e(ring->nvars(), 0);
    int d = deg(rng);
    std::uniform_int_distribution<std::size_t> var(0, ring->nvars() - 1);
    for (int k = 0; k < d; ++k) ++e[var(rng)];
    t.push_back({Monomial(e), coeff(rng)});
  }
  return Polynomial::from_terms(ring, std::move(t));
}

inline Monomial random_monomial(std::size_t n, std::mt19937_64& rng, int max_degree) {
  std::uniform_int_distribution<int> deg(1, max_degree);
  std::uniform_int_distribution<std::size_t> var(0, n - 1);
  std::vector<int> e(n, 0);
  int d = deg(rng);
  for (int k = 0; k < d; ++k) ++e[var(rng)];
  return Monomial(e);
}

}  // namespace jst::oracle

#endif
