#include "jstretch/polynomial.hpp"

#include <algorithm>
#include <sstream>

#include "jstretch/errors.hpp"

namespace jst {

int PolyRing::index_of(std::string_view name) const {
  for (std::size_t i = 0; i < variables.size(); ++i)
    if (variables[i] == name) return static_cast<int>(i);
  return -1;
}

RingPtr make_ring(std::vector<std::string> variables, PrimeField field, MonomialOrder order) {
  if (variables.size() > kMaxVars) throw Error("at most " + std::to_string(kMaxVars) + " variables are supported");
  return std::make_shared<const PolyRing>(PolyRing{std::move(variables), field, order});
}

RingPtr with_order(const RingPtr& ring, MonomialOrder order) {
  if (ring->order == order) return ring;
  return make_ring(ring->variables, ring->field, order);
}

bool same_ring(const RingPtr& a, const RingPtr& b) { return a == b || (a && b && *a == *b); }

void check_same_ring(const Polynomial& a, const Polynomial& b) {
  if (!same_ring(a.ring(), b.ring())) throw RingMismatch();
}

Polynomial Polynomial::constant(RingPtr ring, std::int64_t c) {
  Polynomial p(std::move(ring));
  Coeff v = p.field().from_int(c);
  if (v) p.terms_.push_back({Monomial(), v});
  return p;
}

Polynomial Polynomial::variable(RingPtr ring, std::size_t index) {
  if (index >= ring->nvars()) throw Error("variable index out of range");
  Polynomial p(std::move(ring));
  p.terms_.push_back({Monomial::variable(index), 1});
  return p;
}

Polynomial Polynomial::monomial(RingPtr ring, const Monomial& m, Coeff c) {
  Polynomial p(std::move(ring));
  if (c % p.field().characteristic()) p.terms_.push_back({m, c % p.field().characteristic()});
  return p;
}

Polynomial Polynomial::from_terms(RingPtr ring, std::vector<Term> terms) {
  Polynomial p(std::move(ring));
  const auto& order = p.ring_->order;
  const auto& field = p.field();
  std::sort(terms.begin(), terms.end(),
            [&](const Term& a, const Term& b) { return order.compare(a.mono, b.mono) > 0; });
  for (auto& t : terms) {
    if (!p.terms_.empty() && p.terms_.back().mono == t.mono) {
      p.terms_.back().coeff = field.add(p.terms_.back().coeff, t.coeff);
      if (p.terms_.back().coeff == 0) p.terms_.pop_back();
    } else if (t.coeff % field.characteristic()) {
      p.terms_.push_back({t.mono, t.coeff % field.characteristic()});
    }
  }
  return p;
}

int Polynomial::degree() const {
  int d = -1;
  for (const auto& t : terms_) d = std::max(d, t.mono.degree());
  return d;
}

int Polynomial::order_at_origin() const {
  if (terms_.empty()) return -1;
  int d = kMaxDegree + 1;
  for (const auto& t : terms_) d = std::min(d, t.mono.degree());
  return d;
}

Coeff Polynomial::constant_term() const {
  if (!terms_.empty() && terms_.back().mono.is_one()) return terms_.back().coeff;
  return 0;
}

bool Polynomial::is_homogeneous() const {
  for (const auto& t : terms_)
    if (t.mono.degree() != terms_.front().mono.degree()) return false;
  return true;
}

bool Polynomial::involves_any_of(std::size_t first, std::size_t last) const {
  for (const auto& t : terms_)
    if (t.mono.partial_degree(first, last) > 0) return true;
  return false;
}

Polynomial Polynomial::scaled(Coeff c) const {
  Polynomial r(ring_);
  c %= field().characteristic();
  if (c == 0) return r;
  r.terms_ = terms_;
  for (auto& t : r.terms_) t.coeff = field().mul(t.coeff, c);
  return r;
}

Polynomial Polynomial::monic() const {
  if (terms_.empty() || lc() == 1) return *this;
  return scaled(field().inv(lc()));
}

Polynomial Polynomial::mul_term(Coeff c, const Monomial& m) const {
  Polynomial r(ring_);
  if (c == 0) return r;
  r.terms_.reserve(terms_.size());
  for (const auto& t : terms_) r.terms_.push_back({t.mono * m, field().mul(t.coeff, c)});
  return r;
}

Polynomial Polynomial::pow(int n) const {
  Polynomial result = constant(ring_, 1);
  Polynomial base = *this;
  while (n > 0) {
    if (n & 1) result = result * base;
    n >>= 1;
    if (n) base = base * base;
  }
  return result;
}

Polynomial Polynomial::truncated(int degree) const {
  Polynomial r(ring_);
  for (const auto& t : terms_)
    if (t.mono.degree() < degree) r.terms_.push_back(t);
  return r;
}

Polynomial Polynomial::rebind(const RingPtr& target) const {
  if (target->variables != ring_->variables || !(target->field == ring_->field)) throw RingMismatch();
  if (target->order == ring_->order) {
    Polynomial r(target);
    r.terms_ = terms_;
    return r;
  }
  return from_terms(target, terms_);
}

Polynomial Polynomial::map_variables(const RingPtr& target, std::span<const int> index_map) const {
  if (!(target->field == ring_->field)) throw RingMismatch();
  std::vector<Term> out;
  out.reserve(terms_.size());
  std::vector<int> exps(target->nvars());
  for (const auto& t : terms_) {
    std::fill(exps.begin(), exps.end(), 0);
    for (std::size_t i = 0; i < ring_->nvars(); ++i) {
      if (t.mono[i] == 0) continue;
      if (index_map[i] < 0) throw Error("map_variables: variable " + ring_->variables[i] + " has no image");
      exps[index_map[i]] += t.mono[i];
    }
    out.push_back({Monomial(exps), t.coeff});
  }
  return from_terms(target, std::move(out));
}

Polynomial Polynomial::substitute(std::span<const Polynomial> images) const {
  if (images.size() != ring_->nvars()) throw Error("substitute: wrong number of images");
  RingPtr target = images.empty() ? ring_ : images[0].ring();
  Polynomial result(target);
  for (const auto& t : terms_) {
    Polynomial term = constant(target, 1).scaled(t.coeff);
    for (std::size_t i = 0; i < ring_->nvars(); ++i)
      if (t.mono[i]) term = term * images[i].pow(t.mono[i]);
    result += term;
  }
  return result;
}

Polynomial Polynomial::operator-() const {
  Polynomial r(ring_);
  r.terms_ = terms_;
  for (auto& t : r.terms_) t.coeff = field().neg(t.coeff);
  return r;
}

Polynomial& Polynomial::operator+=(const Polynomial& o) {
  if (o.is_zero()) return *this;
  if (is_zero()) {
    ring_ = o.ring_;
    terms_ = o.terms_;
    return *this;
  }
  *this = sub_mul(*this, field().neg(1), Monomial(), o);
  return *this;
}

Polynomial& Polynomial::operator-=(const Polynomial& o) {
  if (o.is_zero()) return *this;
  if (is_zero()) {
    *this = -o;
    return *this;
  }
  *this = sub_mul(*this, 1, Monomial(), o);
  return *this;
}

Polynomial operator*(const Polynomial& a, const Polynomial& b) {
  if (a.is_zero() || b.is_zero()) return Polynomial(a.ring_ ? a.ring_ : b.ring_);
  check_same_ring(a, b);
  const Polynomial& small = a.size() <= b.size() ? a : b;
  const Polynomial& big = a.size() <= b.size() ? b : a;
  if (small.size() == 1) return big.mul_term(small.lc(), small.lm());
  std::vector<Term> out;
  out.reserve(a.size() * b.size());
  const auto& f = a.field();
  for (const auto& s : a.terms_)
    for (const auto& t : b.terms_) out.push_back({s.mono * t.mono, f.mul(s.coeff, t.coeff)});
  return Polynomial::from_terms(a.ring_, std::move(out));
}

Polynomial sub_mul(const Polynomial& h, Coeff c, const Monomial& u, const Polynomial& g) {
  check_same_ring(h, g);
  const auto& order = h.ring_->order;
  const auto& field = h.field();
  Polynomial r(h.ring_);
  r.terms_.reserve(h.terms_.size() + g.terms_.size());
  auto it = h.terms_.begin();
  const auto end = h.terms_.end();
  for (const auto& gt : g.terms_) {
    Monomial m = gt.mono * u;
    Coeff coeff = field.neg(field.mul(c, gt.coeff));
    while (it != end && order.compare(it->mono, m) > 0) r.terms_.push_back(*it++);
    if (it != end && it->mono == m) {
      Coeff s = field.add(it->coeff, coeff);
      if (s) r.terms_.push_back({m, s});
      ++it;
    } else if (coeff) {
      r.terms_.push_back({m, coeff});
    }
  }
  r.terms_.insert(r.terms_.end(), it, end);
  return r;
}

std::string Polynomial::to_string() const {
  if (terms_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (const auto& t : terms_) {
    std::int64_t c = field().to_signed(t.coeff);
    if (c < 0) {
      os << (first ? "-" : " - ");
      c = -c;
    } else if (!first) {
      os << " + ";
    }
    first = false;
    bool wrote = false;
    if (c != 1 || t.mono.is_one()) {
      os << c;
      wrote = true;
    }
    for (std::size_t i = 0; i < ring_->nvars(); ++i) {
      int e = t.mono[i];
      if (!e) continue;
      if (wrote) os << '*';
      os << ring_->variables[i];
      if (e > 1) os << '^' << e;
      wrote = true;
    }
  }
  return os.str();
}

}  // namespace jst
