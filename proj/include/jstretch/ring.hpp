#ifndef JSTRETCH_RING_HPP
#define JSTRETCH_RING_HPP

#include <memory>
#include <vector>

#include "jstretch/groebner.hpp"
#include "jstretch/polynomial.hpp"

namespace jst {

/// R = S/H, read as the localization of S/H at the origin. Every relation
/// vanishes at the origin, so the ideal of all variables is maximal in R.
class AmbientRing {
 public:
  AmbientRing(RingPtr poly_ring, std::vector<Polynomial> relations, GbOptions options = {});

  const RingPtr& poly_ring() const { return ring_; }
  const PrimeField& field() const { return ring_->field; }
  std::size_t nvars() const { return ring_->nvars(); }
  const std::vector<Polynomial>& relations() const { return relations_; }
  /// Reduced Groebner basis of H.
  const std::vector<Polynomial>& relations_gb() const { return relations_gb_; }
  const GbOptions& gb_options() const { return options_; }

  /// The variables, as polynomials of S.
  std::vector<Polynomial> maximal_ideal_generators() const;

 private:
  RingPtr ring_;
  std::vector<Polynomial> relations_;
  std::vector<Polynomial> relations_gb_;
  GbOptions options_;
};

using AmbientPtr = std::shared_ptr<const AmbientRing>;

/// Throws NotContainedInMaximal when some relation has a nonzero constant term.
AmbientPtr make_ambient(RingPtr poly_ring, std::vector<Polynomial> relations = {}, GbOptions options = {});

/// The same presentation with extra relations appended (used for the residual quotient).
AmbientPtr quotient_ambient(const AmbientPtr& base, const std::vector<Polynomial>& extra);

}  // namespace jst

#endif
