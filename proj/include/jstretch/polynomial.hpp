#ifndef JSTRETCH_POLYNOMIAL_HPP
#define JSTRETCH_POLYNOMIAL_HPP

#include <memory>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "jstretch/field.hpp"
#include "jstretch/monomial.hpp"

namespace jst {

/// A polynomial ring k[x_1..x_n] over a prime field with a fixed monomial order.
struct PolyRing {
  std::vector<std::string> variables;
  PrimeField field;
  MonomialOrder order = MonomialOrder::grevlex();

  std::size_t nvars() const { return variables.size(); }
  /// -1 when the name is not a variable of this ring.
  int index_of(std::string_view name) const;

  friend bool operator==(const PolyRing&, const PolyRing&) = default;
};

using RingPtr = std::shared_ptr<const PolyRing>;

RingPtr make_ring(std::vector<std::string> variables, PrimeField field = PrimeField(),
                  MonomialOrder order = MonomialOrder::grevlex());
RingPtr with_order(const RingPtr& ring, MonomialOrder order);
bool same_ring(const RingPtr& a, const RingPtr& b);

struct Term {
  Monomial mono;
  Coeff coeff;
  friend bool operator==(const Term&, const Term&) = default;
};

/// Sparse polynomial. Terms are nonzero and strictly descending in the ring's order.
class Polynomial {
 public:
  Polynomial() = default;
  explicit Polynomial(RingPtr ring) : ring_(std::move(ring)) {}

  static Polynomial constant(RingPtr ring, std::int64_t c);
  static Polynomial variable(RingPtr ring, std::size_t index);
  static Polynomial monomial(RingPtr ring, const Monomial& m, Coeff c = 1);
  /// Sorts, merges duplicate monomials and drops zero coefficients.
  static Polynomial from_terms(RingPtr ring, std::vector<Term> terms);

  const RingPtr& ring() const { return ring_; }
  const PrimeField& field() const { return ring_->field; }
  const std::vector<Term>& terms() const { return terms_; }

  bool is_zero() const { return terms_.empty(); }
  std::size_t size() const { return terms_.size(); }
  const Term& leading() const { return terms_.front(); }
  const Monomial& lm() const { return terms_.front().mono; }
  Coeff lc() const { return terms_.front().coeff; }

  /// Maximal total degree of a term; -1 for zero.
  int degree() const;
  /// Minimal total degree of a term; -1 for zero.
  int order_at_origin() const;
  Coeff constant_term() const;
  bool is_homogeneous() const;
  bool is_monomial() const { return terms_.size() == 1; }
  bool is_constant() const { return terms_.empty() || (terms_.size() == 1 && terms_[0].mono.is_one()); }
  bool involves_any_of(std::size_t first, std::size_t last) const;

  Polynomial monic() const;
  Polynomial scaled(Coeff c) const;
  /// c * m * (*this)
  Polynomial mul_term(Coeff c, const Monomial& m) const;
  Polynomial pow(int n) const;
  /// Drops every term of total degree >= degree.
  Polynomial truncated(int degree) const;

  /// Same variables, possibly another order: re-sorts the terms.
  Polynomial rebind(const RingPtr& target) const;
  /// Sends variable i of this ring to variable index_map[i] of target.
  Polynomial map_variables(const RingPtr& target, std::span<const int> index_map) const;
  /// Substitutes images[i] for variable i; images live in the target ring.
  Polynomial substitute(std::span<const Polynomial> images) const;

  Polynomial operator-() const;
  Polynomial& operator+=(const Polynomial& o);
  Polynomial& operator-=(const Polynomial& o);
  friend Polynomial operator+(Polynomial a, const Polynomial& b) { return a += b; }
  friend Polynomial operator-(Polynomial a, const Polynomial& b) { return a -= b; }
  friend Polynomial operator*(const Polynomial& a, const Polynomial& b);

  friend bool operator==(const Polynomial& a, const Polynomial& b) { return a.terms_ == b.terms_; }

  std::string to_string() const;

 private:
  friend Polynomial sub_mul(const Polynomial& h, Coeff c, const Monomial& u, const Polynomial& g);
  RingPtr ring_;
  std::vector<Term> terms_;
};

/// h - c*u*g, computed by a single merge.
Polynomial sub_mul(const Polynomial& h, Coeff c, const Monomial& u, const Polynomial& g);

void check_same_ring(const Polynomial& a, const Polynomial& b);

}  // namespace jst

#endif
