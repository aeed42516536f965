#include "jstretch/groebner.hpp"

#include <algorithm>
#include <tuple>

#include "jstretch/errors.hpp"

namespace jst {

namespace {

// Returns the index of the first basis element whose leading monomial divides m.
int find_reducer(const Monomial& m, std::span<const Polynomial> basis, std::span<const std::uint32_t> supports) {
  const std::uint32_t ms = m.support();
  for (std::size_t i = 0; i < basis.size(); ++i) {
    if ((supports[i] & ~ms) != 0) continue;
    if (basis[i].lm().divides(m)) return static_cast<int>(i);
  }
  return -1;
}

Polynomial reduce_full(const Polynomial& f, std::span<const Polynomial> basis,
                       std::span<const std::uint32_t> supports, int truncate_degree) {
  if (f.is_zero() || basis.empty()) return truncate_degree > 0 ? f.truncated(truncate_degree) : f;
  const auto& field = f.field();
  std::vector<Term> rem;
  Polynomial h = f;
  std::size_t start = 0;
  while (start < h.size()) {
    const Term lead = h.terms()[start];
    if (truncate_degree > 0 && lead.mono.degree() >= truncate_degree) {
      ++start;
      continue;
    }
    int r = find_reducer(lead.mono, basis, supports);
    if (r < 0) {
      rem.push_back(lead);
      ++start;
      continue;
    }
    const Polynomial& g = basis[r];
    if (g.is_monomial()) {
      ++start;
      continue;
    }
    Coeff c = field.mul(lead.coeff, field.inv(g.lc()));
    Monomial u = lead.mono / g.lm();
    // drop the already-consumed prefix before merging
    if (start > 0) {
      std::vector<Term> tail(h.terms().begin() + static_cast<std::ptrdiff_t>(start), h.terms().end());
      h = Polynomial::from_terms(h.ring(), std::move(tail));
      start = 0;
    }
    h = sub_mul(h, c, u, g);
  }
  return Polynomial::from_terms(f.ring(), std::move(rem));
}

std::vector<std::uint32_t> supports_of(std::span<const Polynomial> basis) {
  std::vector<std::uint32_t> s;
  s.reserve(basis.size());
  for (const auto& g : basis) s.push_back(g.lm().support());
  return s;
}

struct Pair {
  int i;
  int j;
  Monomial lcm;
};

class Buchberger {
 public:
  Buchberger(RingPtr ring, const GbOptions& options) : ring_(std::move(ring)), options_(options) {}

  std::vector<Polynomial> run(std::span<const Polynomial> gens) {
    std::vector<Polynomial> input;
    for (const auto& g : gens) {
      if (g.is_zero()) continue;
      Polynomial p = options_.truncate_degree > 0 ? g.truncated(options_.truncate_degree) : g;
      if (p.is_zero()) continue;
      if (p.degree() > options_.degree_cap) throw DegreeBoundExceeded(p.degree());
      input.push_back(p.monic());
    }
    // feed low leading monomials first; it keeps early reductions short
    std::stable_sort(input.begin(), input.end(), [&](const Polynomial& a, const Polynomial& b) {
      return ring_->order.compare(a.lm(), b.lm()) < 0;
    });
    for (const auto& p : input) {
      if (!add(p)) return unit();
    }
    while (!pairs_.empty() || !pending_.empty()) {
      if (pairs_.empty()) {
        Polynomial v = std::move(pending_.back());
        pending_.pop_back();
        if (!add(v)) return unit();
        continue;
      }
      auto best = std::min_element(pairs_.begin(), pairs_.end(), [&](const Pair& a, const Pair& b) {
        if (a.lcm.degree() != b.lcm.degree()) return a.lcm.degree() < b.lcm.degree();
        int c = ring_->order.compare(a.lcm, b.lcm);
        if (c != 0) return c < 0;
        return std::tie(a.i, a.j) < std::tie(b.i, b.j);
      });
      Pair p = *best;
      *best = pairs_.back();
      pairs_.pop_back();
      if (p.lcm.degree() > options_.degree_cap) throw DegreeBoundExceeded(p.lcm.degree());
      const Polynomial& f = basis_[p.i];
      const Polynomial& g = basis_[p.j];
      Polynomial s = sub_mul(f.mul_term(1, p.lcm / f.lm()), 1, p.lcm / g.lm(), g);
      if (!add(s)) return unit();
    }
    return finish();
  }

 private:
  std::vector<Polynomial> unit() const { return {Polynomial::constant(ring_, 1)}; }

  // Reduces p and inserts it. Returns false if the ideal became the unit ideal.
  bool add(const Polynomial& p) {
    Polynomial h = reduce_full(p, alive_basis_, alive_supports_, options_.truncate_degree);
    if (h.is_zero()) return true;
    if (h.is_constant()) return false;
    h = h.monic();
    if (options_.truncate_degree > 0) queue_truncation_pairs(h);
    update(std::move(h));
    return true;
  }

  // With m^N in the ideal, the S-pairs of h against the degree-N monomials are
  // u*h (deg u = N - deg lm h) cut at degree N; only low tail terms survive.
  void queue_truncation_pairs(const Polynomial& h) {
    const int n_cut = options_.truncate_degree;
    const int e = h.lm().degree();
    int low = e;
    for (const auto& t : h.terms()) low = std::min(low, t.mono.degree());
    if (low >= e) return;
    const int k = n_cut - e;
    if (k <= 0) return;
    const int n = static_cast<int>(ring_->nvars());
    std::vector<int> exps(n, 0);
    // enumerate exponent vectors of degree k
    auto emit = [&](auto&& self, int var, int left) -> void {
      if (var == n - 1) {
        exps[var] = left;
        Polynomial s = h.mul_term(1, Monomial(exps)).truncated(n_cut);
        if (!s.is_zero()) pending_.push_back(std::move(s));
        return;
      }
      for (int a = left; a >= 0; --a) {
        exps[var] = a;
        self(self, var + 1, left - a);
      }
      exps[var] = 0;
    };
    if (n > 0) emit(emit, 0, k);
  }

  // Gebauer-Moeller installation of a new basis element.
  void update(Polynomial h) {
    const int hi = static_cast<int>(basis_.size());
    const Monomial& lh = h.lm();
    const bool h_mono = h.is_monomial();

    std::vector<Pair> candidates;
    // pairs of two monomials have zero S-polynomial but still take part in the chain test
    for (int g : alive_) candidates.push_back({g, hi, lcm(basis_[g].lm(), lh)});
    std::vector<bool> coprime(candidates.size());
    for (std::size_t a = 0; a < candidates.size(); ++a)
      coprime[a] = basis_[candidates[a].i].lm().coprime(lh);

    // chain criterion among the new pairs
    std::vector<bool> keep(candidates.size(), true);
    for (std::size_t a = 0; a < candidates.size(); ++a) {
      if (coprime[a]) continue;
      for (std::size_t b = 0; b < candidates.size(); ++b) {
        if (a == b || !keep[b]) continue;
        if (candidates[b].lcm.divides(candidates[a].lcm) &&
            (!(candidates[b].lcm == candidates[a].lcm) || b < a)) {
          keep[a] = false;
          break;
        }
      }
    }
    // old pairs killed by h
    std::vector<Pair> next;
    next.reserve(pairs_.size() + candidates.size());
    for (const auto& p : pairs_) {
      if (lh.divides(p.lcm) && !(lcm(basis_[p.i].lm(), lh) == p.lcm) && !(lcm(basis_[p.j].lm(), lh) == p.lcm))
        continue;
      next.push_back(p);
    }
    for (std::size_t a = 0; a < candidates.size(); ++a) {
      if (!keep[a] || coprime[a]) continue;
      if (h_mono && basis_[candidates[a].i].is_monomial()) continue;
      next.push_back(candidates[a]);
    }
    pairs_ = std::move(next);

    std::vector<int> still;
    for (int g : alive_)
      if (!lh.divides(basis_[g].lm())) still.push_back(g);
    still.push_back(hi);
    alive_ = std::move(still);
    basis_.push_back(std::move(h));
    alive_basis_.clear();
    for (int g : alive_) alive_basis_.push_back(basis_[g]);
    alive_supports_ = supports_of(alive_basis_);
  }

  std::vector<Polynomial> finish() {
    std::vector<Polynomial> g = alive_basis_;
    std::sort(g.begin(), g.end(),
              [&](const Polynomial& a, const Polynomial& b) { return ring_->order.compare(a.lm(), b.lm()) < 0; });
    // interreduce tails
    for (std::size_t i = 0; i < g.size(); ++i) {
      if (g[i].is_monomial()) continue;
      std::vector<Polynomial> others;
      others.reserve(g.size() - 1);
      for (std::size_t j = 0; j < g.size(); ++j)
        if (j != i) others.push_back(g[j]);
      auto sup = supports_of(others);
      Polynomial lead = Polynomial::monomial(ring_, g[i].lm(), g[i].lc());
      Polynomial tail = g[i] - lead;
      g[i] = lead + reduce_full(tail, others, sup, options_.truncate_degree);
    }
    return g;
  }

  RingPtr ring_;
  GbOptions options_;
  std::vector<Polynomial> basis_;
  std::vector<int> alive_;
  std::vector<Polynomial> alive_basis_;
  std::vector<std::uint32_t> alive_supports_;
  std::vector<Pair> pairs_;
  std::vector<Polynomial> pending_;
};

}  // namespace

Polynomial normal_form(const Polynomial& f, std::span<const Polynomial> basis, int truncate_degree) {
  if (f.ring())
    for (const auto& g : basis) check_same_ring(f, g);
  std::vector<Polynomial> nonzero;
  for (const auto& g : basis)
    if (!g.is_zero()) nonzero.push_back(g);
  auto sup = supports_of(nonzero);
  return reduce_full(f, nonzero, sup, truncate_degree);
}

std::vector<Polynomial> buchberger(std::span<const Polynomial> gens, const GbOptions& options) {
  RingPtr ring;
  for (const auto& g : gens) {
    if (!g.ring()) continue;
    if (!ring) ring = g.ring();
    else if (!same_ring(ring, g.ring())) throw RingMismatch();
  }
  if (!ring) return {};
  std::vector<Polynomial> moved;
  moved.reserve(gens.size());
  for (const auto& g : gens)
    if (g.ring() && !g.is_zero()) moved.push_back(g.ring() == ring ? g : g.rebind(ring));
  Buchberger engine(ring, options);
  return engine.run(moved);
}

std::vector<Polynomial> buchberger(std::span<const Polynomial> gens, MonomialOrder order, const GbOptions& options) {
  if (gens.empty()) return {};
  RingPtr ring = with_order(gens.front().ring(), order);
  std::vector<Polynomial> moved;
  moved.reserve(gens.size());
  for (const auto& g : gens) {
    if (!same_ring(with_order(g.ring(), order), ring)) throw RingMismatch();
    moved.push_back(g.rebind(ring));
  }
  return buchberger(moved, options);
}

std::vector<Polynomial> eliminate(std::span<const Polynomial> gens, int k, const GbOptions& options) {
  if (gens.empty()) return {};
  const RingPtr& src = gens.front().ring();
  const int n = static_cast<int>(src->nvars());
  if (k < 0 || k > n) throw Error("eliminate: bad block size");
  auto gb = buchberger(gens, MonomialOrder::elimination(k), options);
  std::vector<std::string> rest(src->variables.begin() + k, src->variables.end());
  RingPtr target = make_ring(rest, src->field, MonomialOrder::grevlex());
  std::vector<int> index_map(n, -1);
  for (int i = k; i < n; ++i) index_map[i] = i - k;
  std::vector<Polynomial> out;
  for (const auto& g : gb)
    if (!g.involves_any_of(0, k)) out.push_back(g.map_variables(target, index_map));
  return out;
}

bool is_groebner_basis(std::span<const Polynomial> basis) {
  std::vector<Polynomial> g;
  for (const auto& p : basis)
    if (!p.is_zero()) g.push_back(p);
  auto sup = supports_of(g);
  for (std::size_t i = 0; i < g.size(); ++i)
    for (std::size_t j = i + 1; j < g.size(); ++j) {
      Monomial l = lcm(g[i].lm(), g[j].lm());
      const auto& field = g[i].field();
      Polynomial s = sub_mul(g[i].mul_term(field.inv(g[i].lc()), l / g[i].lm()), field.inv(g[j].lc()),
                             l / g[j].lm(), g[j]);
      if (!reduce_full(s, g, sup, 0).is_zero()) return false;
    }
  return true;
}

}  // namespace jst
