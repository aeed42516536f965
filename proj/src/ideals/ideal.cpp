#include "jstretch/ideal.hpp"

#include <algorithm>
#include <bit>
#include <sstream>

#include "jstretch/errors.hpp"

namespace jst {

namespace {

void check_ambient(const Ideal& a, const Ideal& b) {
  if (a.ambient() != b.ambient() && !same_ring(a.poly_ring(), b.poly_ring())) throw RingMismatch();
}

std::vector<Polynomial> with_relations(const Ideal& a) {
  std::vector<Polynomial> g = a.generators();
  const auto& h = a.ambient()->relations_gb();
  g.insert(g.end(), h.begin(), h.end());
  return g;
}

}  // namespace

Ideal::Ideal(AmbientPtr ambient, std::vector<Polynomial> generators)
    : ambient_(std::move(ambient)), cache_(std::make_shared<Cache>()) {
  const RingPtr& ring = ambient_->poly_ring();
  for (auto& g : generators) {
    if (g.is_zero()) continue;
    if (!same_ring(g.ring(), ring)) throw RingMismatch();
    Polynomial m = g.ring() == ring ? g.monic() : g.rebind(ring).monic();
    if (std::find(gens_.begin(), gens_.end(), m) == gens_.end()) gens_.push_back(std::move(m));
  }
}

Ideal Ideal::unit(const AmbientPtr& ambient) {
  return Ideal(ambient, {Polynomial::constant(ambient->poly_ring(), 1)});
}

Ideal Ideal::zero(const AmbientPtr& ambient) { return Ideal(ambient, {}); }

Ideal Ideal::maximal(const AmbientPtr& ambient) { return Ideal(ambient, ambient->maximal_ideal_generators()); }

const std::vector<Polynomial>& Ideal::gb() const {
  std::call_once(cache_->once, [this] {
    if (gens_.empty()) {
      cache_->gb = ambient_->relations_gb();
      return;
    }
    cache_->gb = buchberger(with_relations(*this), ambient_->gb_options());
  });
  return cache_->gb;
}

bool Ideal::contains(const Polynomial& f) const { return normal_form(f, gb()).is_zero(); }

bool Ideal::contains(const Ideal& other) const {
  for (const auto& g : other.generators())
    if (!contains(g)) return false;
  return true;
}

bool Ideal::is_unit() const {
  const auto& g = gb();
  return g.size() == 1 && g[0].is_constant() && !g[0].is_zero();
}

bool Ideal::is_zero() const {
  for (const auto& g : gens_)
    if (!normal_form(g, ambient_->relations_gb()).is_zero()) return false;
  return true;
}

bool Ideal::is_homogeneous() const {
  for (const auto& g : gb())
    if (!g.is_homogeneous()) return false;
  return true;
}

bool Ideal::inside_maximal() const {
  for (const auto& g : gb())
    if (g.constant_term() != 0) return false;
  return true;
}

Ideal Ideal::compacted() const {
  std::vector<Polynomial> g;
  for (const auto& p : gb())
    if (!normal_form(p, ambient_->relations_gb()).is_zero()) g.push_back(p);
  Ideal out(ambient_, std::move(g));
  // reuse the basis we already have
  std::call_once(out.cache_->once, [&] { out.cache_->gb = gb(); });
  return out;
}

Ideal Ideal::trimmed() const {
  std::vector<Polynomial> sorted = gens_;
  std::stable_sort(sorted.begin(), sorted.end(),
                   [](const Polynomial& a, const Polynomial& b) { return a.degree() < b.degree(); });
  std::vector<Polynomial> kept;
  for (const auto& g : sorted) {
    if (g.is_zero() || Ideal(ambient_, kept).contains(g)) continue;
    kept.push_back(g);
  }
  return Ideal(ambient_, std::move(kept));
}

bool operator==(const Ideal& a, const Ideal& b) {
  check_ambient(a, b);
  return a.gb() == b.gb();
}

std::string Ideal::to_string() const {
  std::ostringstream os;
  os << '(';
  for (std::size_t i = 0; i < gens_.size(); ++i) os << (i ? ", " : "") << gens_[i].to_string();
  os << ')';
  return os.str();
}

Ideal sum(const Ideal& a, const Ideal& b) {
  check_ambient(a, b);
  std::vector<Polynomial> g = a.generators();
  g.insert(g.end(), b.generators().begin(), b.generators().end());
  return Ideal(a.ambient(), std::move(g));
}

Ideal product(const Ideal& a, const Ideal& b) {
  check_ambient(a, b);
  const auto& h = a.ambient()->relations_gb();
  std::vector<Polynomial> g;
  g.reserve(a.size() * b.size());
  for (const auto& p : a.generators())
    for (const auto& q : b.generators()) {
      Polynomial r = normal_form(p * q, h);
      if (!r.is_zero()) g.push_back(std::move(r));
    }
  return Ideal(a.ambient(), std::move(g));
}

Ideal power(const Ideal& a, int n) {
  if (n < 0) throw Error("negative power");
  if (n == 0) return Ideal::unit(a.ambient());
  const auto& h = a.ambient()->relations_gb();
  const auto& g = a.generators();
  // one product per multiset of generators, tagged with its largest index
  std::vector<std::pair<std::size_t, Polynomial>> level;
  for (std::size_t i = 0; i < g.size(); ++i) level.emplace_back(i, g[i]);
  for (int k = 1; k < n; ++k) {
    std::vector<std::pair<std::size_t, Polynomial>> next;
    for (const auto& [last, p] : level)
      for (std::size_t i = last; i < g.size(); ++i) {
        Polynomial r = normal_form(p * g[i], h);
        if (!r.is_zero()) next.emplace_back(i, std::move(r));
      }
    level = std::move(next);
  }
  std::vector<Polynomial> gens;
  gens.reserve(level.size());
  for (auto& entry : level) gens.push_back(std::move(entry.second));
  return Ideal(a.ambient(), std::move(gens));
}

Ideal principal(const AmbientPtr& ambient, const Polynomial& f) { return Ideal(ambient, {f}); }

std::vector<Polynomial> intersect_generators(const std::vector<Polynomial>& a, const std::vector<Polynomial>& b,
                                             const GbOptions& options) {
  if (a.empty() || b.empty()) return {};
  const RingPtr& ring = a.front().ring();
  const std::size_t n = ring->nvars();
  if (n + 1 > kMaxVars) throw Error("intersect: no room for the auxiliary variable");
  std::vector<std::string> vars{"_t"};
  vars.insert(vars.end(), ring->variables.begin(), ring->variables.end());
  RingPtr ext = make_ring(vars, ring->field, MonomialOrder::elimination(1));
  std::vector<int> shift(n);
  for (std::size_t i = 0; i < n; ++i) shift[i] = static_cast<int>(i + 1);
  Polynomial t = Polynomial::variable(ext, 0);
  Polynomial one_minus_t = Polynomial::constant(ext, 1) - t;
  std::vector<Polynomial> gens;
  for (const auto& p : a) gens.push_back(t * p.map_variables(ext, shift));
  for (const auto& p : b) gens.push_back(one_minus_t * p.map_variables(ext, shift));
  GbOptions opt = options;
  opt.degree_cap = options.degree_cap + 1;
  auto elim = eliminate(gens, 1, opt);
  std::vector<Polynomial> out;
  out.reserve(elim.size());
  for (auto& p : elim) out.push_back(p.rebind(ring));
  return out;
}

Polynomial divide_exact(const Polynomial& f, const Polynomial& g) {
  check_same_ring(f, g);
  if (g.is_zero()) throw Error("divide_exact: division by zero");
  const auto& field = f.field();
  Coeff inv = field.inv(g.lc());
  std::vector<Term> quotient;
  Polynomial h = f;
  while (!h.is_zero()) {
    if (!g.lm().divides(h.lm())) throw Error("internal: inexact division in colon computation");
    Monomial u = h.lm() / g.lm();
    Coeff c = field.mul(h.lc(), inv);
    quotient.push_back({u, c});
    h = sub_mul(h, c, u, g);
  }
  return Polynomial::from_terms(f.ring(), std::move(quotient));
}

Ideal intersect(const Ideal& a, const Ideal& b) {
  check_ambient(a, b);
  if (a.is_unit()) return b;
  if (b.is_unit()) return a;
  auto g = intersect_generators(with_relations(a), with_relations(b), a.ambient()->gb_options());
  return Ideal(a.ambient(), std::move(g)).compacted();
}

Ideal colon(const Ideal& a, const Polynomial& f) {
  if (f.is_zero() || a.contains(f)) return Ideal::unit(a.ambient());
  auto g = intersect_generators(a.gb(), {f}, a.ambient()->gb_options());
  std::vector<Polynomial> q;
  q.reserve(g.size());
  for (const auto& p : g) q.push_back(divide_exact(p, f));
  return Ideal(a.ambient(), std::move(q)).compacted();
}

Ideal colon(const Ideal& a, const Ideal& b) {
  check_ambient(a, b);
  Ideal result = Ideal::unit(a.ambient());
  for (const auto& f : b.generators()) {
    Ideal c = colon(a, f);
    result = result.is_unit() ? c : intersect(result, c);
  }
  return result;
}

Ideal saturate(const Ideal& a, const Ideal& b) {
  Ideal current = a;
  for (;;) {
    Ideal next = colon(current, b);
    if (next == current) return current;
    current = next;
  }
}

bool contains_locally_at_m(const Ideal& a, const Ideal& b) {
  check_ambient(a, b);
  if (a.is_unit()) return true;
  const bool graded = a.is_homogeneous();
  for (const auto& f : b.generators()) {
    if (a.contains(f)) continue;
    // a homogeneous proper colon lies inside the maximal ideal
    if (graded && normal_form(f, a.ambient()->relations_gb()).is_homogeneous()) return false;
    Ideal q = colon(a, f);
    if (q.inside_maximal()) return false;
  }
  return true;
}

bool equal_locally_at_m(const Ideal& a, const Ideal& b) {
  return contains_locally_at_m(a, b) && contains_locally_at_m(b, a);
}

namespace {

void best_independent(const std::vector<std::uint32_t>& supports, std::size_t nvars, std::size_t next,
                      std::uint32_t chosen, int size, int& best) {
  if (size + static_cast<int>(nvars - next) <= best) return;
  if (next == nvars) {
    best = std::max(best, size);
    return;
  }
  std::uint32_t with = chosen | (1u << next);
  bool ok = true;
  for (auto s : supports)
    if ((s & ~with) == 0) {
      ok = false;
      break;
    }
  if (ok) best_independent(supports, nvars, next + 1, with, size + 1, best);
  best_independent(supports, nvars, next + 1, chosen, size, best);
}

}  // namespace

int dimension_from_leading_terms(const std::vector<Polynomial>& gb, std::size_t nvars) {
  std::vector<std::uint32_t> supports;
  for (const auto& g : gb) {
    if (g.is_zero()) continue;
    if (g.is_constant()) return -1;
    supports.push_back(g.lm().support());
  }
  int best = 0;
  best_independent(supports, nvars, 0, 0, 0, best);
  return best;
}

int krull_dim(const Ideal& a) {
  if (!a.inside_maximal()) throw NotContainedInMaximal();
  return dimension_from_leading_terms(a.gb(), a.ambient()->nvars());
}

}  // namespace jst
