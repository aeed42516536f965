#include <doctest.h>

#include <string>

#include "jstretch/errors.hpp"
#include "jstretch/fibercone.hpp"
#include "support/helpers.hpp"

using namespace jst;
using jst::test::ambient;
using jst::test::ideal;
using jst::test::poly;
using jst::test::polys;
using jst::test::ring;

namespace {

// Substitution oracle: every Rees relation vanishes under T_i -> t a_i.
bool vanishes_on_rees_map(const GradedPresentation& p, const Ideal& i) {
  auto big = i.poly_ring()->variables;
  big.push_back("t");
  auto target = ring(big);
  std::vector<int> into(i.poly_ring()->nvars());
  for (std::size_t k = 0; k < into.size(); ++k) into[k] = static_cast<int>(k);
  Polynomial t = Polynomial::variable(target, big.size() - 1);
  std::vector<Polynomial> images;
  for (std::size_t k = 0; k < p.n_x; ++k) images.push_back(Polynomial::variable(target, k));
  for (const auto& a : i.generators()) images.push_back(t * a.map_variables(target, into));
  std::vector<Polynomial> h;
  for (const auto& r : i.ambient()->relations()) h.push_back(r.map_variables(target, into));
  auto hgb = buchberger(h);
  for (const auto& g : p.ideal)
    if (!normal_form(g.substitute(images), hgb).is_zero()) return false;
  return true;
}

}  // namespace

TEST_CASE("rees ideal of (x, y)") {
  auto R = ring({"x", "y"});
  auto i = ideal(ambient(R), "(x, y)");
  auto p = rees_ideal(i);
  CHECK(p.n_x == 2);
  CHECK(p.n_t == 2);
  CHECK(p.t_names() == std::vector<std::string>{"T1", "T2"});
  CHECK(presents(p, polys(p.ring, "(x*T2 - y*T1)")));
  CHECK(vanishes_on_rees_map(p, i));
}

TEST_CASE("rees ideal of a principal ideal carries only the relations") {
  auto R = ring({"x", "y"});
  auto p = rees_ideal(ideal(ambient(R, "(x^2*y)"), "(x)"));
  // x^a y^b T^c lies in the kernel iff b >= 1 and a + c >= 2
  CHECK(presents(p, polys(p.ring, "(x^2*y, x*y*T1, y*T1^2)")));
  auto q = rees_ideal(ideal(ambient(R), "(x)"));
  CHECK(q.ideal.empty());
}

TEST_CASE("rees relations vanish under the substitution map") {
  auto R = ring({"a", "b", "c"});
  for (const char* gens : {"(a^2, a*b, b^2)", "(a^2, b*c, a*c)", "(a^3, a^2*b, b^2*c, a*c^2)"}) {
    auto i = ideal(ambient(R), gens);
    CHECK(vanishes_on_rees_map(rees_ideal(i), i));
  }
}

TEST_CASE("analytic spread") {
  auto R = ring({"a", "b", "c"});
  auto a = ambient(R);
  CHECK(analytic_spread(ideal(a, "(a)")) == 1);
  CHECK(analytic_spread(ideal(a, "(a^2*b^2, a^2*c^2, a*b*c^2, b^3*c)")) == 3);
  CHECK(analytic_spread(ideal(a, "(a^3, a^2*b, b^2*c, a*c^2)")) == 3);
  CHECK(analytic_spread(Ideal::maximal(a)) == 3);
  // (a^2, ab, b^2) has fiber k[T1,T2,T3]/(T1T3 - T2^2)
  CHECK(analytic_spread(ideal(a, "(a^2, a*b, b^2)")) == 2);
  auto x = ring({"x", "y", "z"});
  CHECK(analytic_spread(ideal(ambient(x, "(x^4, x*z, y*z)"), "(x, y)")) == 1);
}

TEST_CASE("gr presentation for the ex4.2 ring") {
  auto R = ring({"x", "y", "z"});
  for (int r : {1, 2, 3}) {
    auto i = ideal(ambient(R, "(x^" + std::to_string(r + 1) + ", x*z, y*z)"), "(x, y)");
    auto p = gr_presentation(i);
    auto target = polys(p.ring, "(x, y, z*T2, T1^" + std::to_string(r + 1) + ", z*T1)");
    CHECK(presents(p, target));
    CHECK(presented_dim(p) == 1);
    CHECK(graded_depth(p) == 1);
  }
}

TEST_CASE("gr presentation of a regular sequence") {
  auto R = ring({"x", "y"});
  auto p = gr_presentation(ideal(ambient(R), "(x, y)"));
  CHECK(presents(p, polys(p.ring, "(x*T2 - y*T1, x, y)")));
  CHECK(graded_depth(p) == 2);
  auto k = ring({"x"});
  auto q = gr_presentation(ideal(ambient(k), "(x)"));
  CHECK(presents(q, polys(q.ring, "(x)")));
}

TEST_CASE("graded depth") {
  auto R = ring({"x", "y", "z"});
  GradedPresentation free;
  free.ring = R;
  free.n_x = 3;
  CHECK(graded_depth(free) == 3);
  GradedPresentation node{R, 3, 0, buchberger(polys(R, "(x*y, x*z)"))};
  CHECK(graded_depth(node) == 1);
  GradedPresentation bad{R, 3, 0, buchberger(polys(R, "(x - y^2)"))};
  CHECK_THROWS_AS(graded_depth(bad), NotHomogeneous);
}

TEST_CASE("ex4.11 with t = 0: gr is the hypersurface k[y,X,Z]/(yX^2)") {
  auto R = ring({"x", "y", "z"});
  auto i = ideal(ambient(R, "(x^3 - x^2*y)"), "(x, z)");
  auto p = gr_presentation(i);
  CHECK(presents(p, polys(p.ring, "(x, z, y*T1^2)")));
  CHECK(presented_dim(p) == 2);
  CHECK(graded_depth(p) == 2);
}

TEST_CASE("ex4.11 with t >= 1: gr has depth below dimension") {
  auto R = ring({"x", "y", "z"});
  for (const char* gens : {"(x*y, z)", "(x*y^2, z)"}) {
    CAPTURE(gens);
    auto p = gr_presentation(ideal(ambient(R, "(x^3 - x^2*y)"), gens));
    CHECK(presented_dim(p) == 2);
    CHECK(graded_depth(p) == 1);
  }
}
