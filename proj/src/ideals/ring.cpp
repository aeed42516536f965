#include "jstretch/ring.hpp"

#include "jstretch/errors.hpp"

namespace jst {

AmbientRing::AmbientRing(RingPtr poly_ring, std::vector<Polynomial> relations, GbOptions options)
    : ring_(std::move(poly_ring)), options_(options) {
  for (auto& r : relations) {
    if (r.is_zero()) continue;
    if (!same_ring(r.ring(), ring_)) throw RingMismatch();
    relations_.push_back(r.ring() == ring_ ? r : r.rebind(ring_));
  }
  relations_gb_ = buchberger(relations_, options_);
}

std::vector<Polynomial> AmbientRing::maximal_ideal_generators() const {
  std::vector<Polynomial> m;
  for (std::size_t i = 0; i < ring_->nvars(); ++i) m.push_back(Polynomial::variable(ring_, i));
  return m;
}

AmbientPtr make_ambient(RingPtr poly_ring, std::vector<Polynomial> relations, GbOptions options) {
  for (const auto& r : relations)
    if (r.constant_term() != 0) throw NotContainedInMaximal();
  return std::make_shared<const AmbientRing>(std::move(poly_ring), std::move(relations), options);
}

AmbientPtr quotient_ambient(const AmbientPtr& base, const std::vector<Polynomial>& extra) {
  std::vector<Polynomial> rel = base->relations();
  rel.insert(rel.end(), extra.begin(), extra.end());
  return make_ambient(base->poly_ring(), std::move(rel), base->gb_options());
}

}  // namespace jst
