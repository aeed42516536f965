#ifndef JSTRETCH_TEST_HELPERS_HPP
#define JSTRETCH_TEST_HELPERS_HPP

#include <string>
#include <vector>

#include "jstretch/ideal.hpp"
#include "jstretch/parse.hpp"

namespace jst::test {

inline RingPtr ring(std::vector<std::string> vars, MonomialOrder order = MonomialOrder::grevlex()) {
  return make_ring(std::move(vars), PrimeField(), order);
}

inline Polynomial poly(const RingPtr& r, const std::string& text) { return parse_polynomial(r, text); }

inline std::vector<Polynomial> polys(const RingPtr& r, const std::string& text) {
  return parse_polynomial_list(r, text);
}

inline AmbientPtr ambient(const RingPtr& r, const std::string& relations = "()") {
  return make_ambient(r, polys(r, relations));
}

inline Ideal ideal(const AmbientPtr& a, const std::string& text) { return Ideal(a, polys(a->poly_ring(), text)); }

}  // namespace jst::test

#endif
