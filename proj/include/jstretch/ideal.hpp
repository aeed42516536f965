#ifndef JSTRETCH_IDEAL_HPP
#define JSTRETCH_IDEAL_HPP

#include <memory>
#include <mutex>
#include <string>
#include <vector>

#include "jstretch/ring.hpp"

namespace jst {

/// An ideal of R = S/H given by preimage generators in S. The reduced Groebner
/// basis of (generators) + H is computed on first use and shared between copies.
class Ideal {
 public:
  Ideal() = default;
  Ideal(AmbientPtr ambient, std::vector<Polynomial> generators);

  static Ideal unit(const AmbientPtr& ambient);
  static Ideal zero(const AmbientPtr& ambient);
  static Ideal maximal(const AmbientPtr& ambient);

  const AmbientPtr& ambient() const { return ambient_; }
  const RingPtr& poly_ring() const { return ambient_->poly_ring(); }
  const std::vector<Polynomial>& generators() const { return gens_; }
  std::size_t size() const { return gens_.size(); }

  const std::vector<Polynomial>& gb() const;

  bool contains(const Polynomial& f) const;
  /// Global containment other ⊆ *this in R.
  bool contains(const Ideal& other) const;
  bool is_unit() const;
  bool is_zero() const;
  /// True when the reduced basis is homogeneous in the standard grading.
  bool is_homogeneous() const;
  /// All basis elements vanish at the origin.
  bool inside_maximal() const;

  /// The same ideal with generators replaced by the reduced basis minus H-redundant members.
  Ideal compacted() const;
  /// Generators in ascending degree, each dropped when it lies in the ideal of
  /// those kept before it. A minimal generating set when the generators are homogeneous.
  Ideal trimmed() const;

  friend bool operator==(const Ideal& a, const Ideal& b);

  std::string to_string() const;

 private:
  struct Cache {
    std::once_flag once;
    std::vector<Polynomial> gb;
  };
  AmbientPtr ambient_;
  std::vector<Polynomial> gens_;
  std::shared_ptr<Cache> cache_;
};

Ideal sum(const Ideal& a, const Ideal& b);
Ideal product(const Ideal& a, const Ideal& b);
/// power(a, 0) is the unit ideal.
Ideal power(const Ideal& a, int n);
Ideal principal(const AmbientPtr& ambient, const Polynomial& f);

/// A ∩ B, through elimination of an auxiliary variable t from t·A + (1-t)·B.
Ideal intersect(const Ideal& a, const Ideal& b);
/// A : f
Ideal colon(const Ideal& a, const Polynomial& f);
/// A : B = ∩ (A : b_i)
Ideal colon(const Ideal& a, const Ideal& b);
/// A : B^∞, iterating colon until the basis stops changing.
Ideal saturate(const Ideal& a, const Ideal& b);

/// Intersection of two ideals of S given by generators (no relations adjoined).
std::vector<Polynomial> intersect_generators(const std::vector<Polynomial>& a, const std::vector<Polynomial>& b,
                                             const GbOptions& options);
/// q with f == q*g; throws if g does not divide f.
Polynomial divide_exact(const Polynomial& f, const Polynomial& g);

/// B ⊆ A after localizing at the origin.
bool contains_locally_at_m(const Ideal& a, const Ideal& b);
bool equal_locally_at_m(const Ideal& a, const Ideal& b);

/// Krull dimension of S/(A+H), from the leading ideal by the independent-set method.
int krull_dim(const Ideal& a);
/// Dimension of S/L for the leading terms of a basis in a ring with n variables.
int dimension_from_leading_terms(const std::vector<Polynomial>& gb, std::size_t nvars);

}  // namespace jst

#endif
