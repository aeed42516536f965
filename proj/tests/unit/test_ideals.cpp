#include <doctest.h>

#include <random>

#include "jstretch/errors.hpp"
#include "support/helpers.hpp"
#include "support/oracles.hpp"

using namespace jst;
using jst::test::ambient;
using jst::test::ideal;
using jst::test::poly;
using jst::test::polys;
using jst::test::ring;

namespace {

Ideal monomial_ideal(const AmbientPtr& a, const std::vector<Monomial>& ms) {
  std::vector<Polynomial> gens;
  for (const auto& m : ms) gens.push_back(Polynomial::monomial(a->poly_ring(), m, 1));
  return Ideal(a, gens);
}

std::vector<Monomial> random_monomials(std::size_t n, std::mt19937_64& rng, int count, int maxdeg) {
  std::vector<Monomial> out;
  for (int i = 0; i < count; ++i) out.push_back(oracle::random_monomial(n, rng, maxdeg));
  return out;
}

}  // namespace

TEST_CASE("ideal construction and membership") {
  auto r = ring({"x", "y", "z"});
  auto a = ambient(r, "(x^4, x*z, y*z)");
  auto i = ideal(a, "(x, y)");
  CHECK(i.contains(poly(r, "x^2 + y")));
  CHECK(i.contains(poly(r, "z*y")));
  CHECK(!i.contains(poly(r, "z")));
  CHECK(i.inside_maximal());
  CHECK(i.is_homogeneous());
  CHECK(Ideal::unit(a).is_unit());
  CHECK(Ideal::zero(a).is_zero());
  CHECK(ideal(a, "(x*z)").is_zero());
  CHECK(Ideal::maximal(a).contains(i));
  CHECK(!i.contains(Ideal::maximal(a)));
}

TEST_CASE("sum, product, power") {
  auto r = ring({"x", "y", "z"});
  auto a = ambient(r);
  auto i = ideal(a, "(x, y)");
  CHECK(sum(i, ideal(a, "(z)")) == Ideal::maximal(a));
  CHECK(product(i, i) == ideal(a, "(x^2, x*y, y^2)"));
  CHECK(power(i, 3) == ideal(a, "(x^3, x^2*y, x*y^2, y^3)"));
  CHECK(power(i, 0).is_unit());
}

TEST_CASE("intersection examples") {
  auto r = ring({"x", "y", "z"});
  auto a = ambient(r);
  CHECK(intersect(ideal(a, "(x)"), ideal(a, "(y)")) == ideal(a, "(x*y)"));
  CHECK(intersect(ideal(a, "(x^2, y)"), ideal(a, "(x, y^2)")) == ideal(a, "(x^2, x*y, y^2)"));
  auto i = ideal(a, "(x + y*z, z^2)");
  CHECK(intersect(i, Ideal::unit(a)) == i);
}

TEST_CASE("property: intersection of monomial ideals matches pairwise lcm") {
  auto r = ring({"x", "y", "z"});
  auto a = ambient(r);
  std::mt19937_64 rng(101);
  for (int k = 0; k < 100; ++k) {
    auto ma = random_monomials(3, rng, 3, 4);
    auto mb = random_monomials(3, rng, 3, 4);
    auto got = intersect(monomial_ideal(a, ma), monomial_ideal(a, mb));
    CHECK(got == monomial_ideal(a, oracle::lcm_intersection(ma, mb)));
  }
}

TEST_CASE("property: intersection is contained in both and contains the product") {
  auto r = ring({"x", "y", "z"});
  auto a = ambient(r);
  std::mt19937_64 rng(102);
  for (int k = 0; k < 20; ++k) {
    Ideal i(a, {oracle::random_polynomial(r, rng, 3, 3), oracle::random_polynomial(r, rng, 3, 3)});
    Ideal j(a, {oracle::random_polynomial(r, rng, 3, 3)});
    auto meet = intersect(i, j);
    CHECK(i.contains(meet));
    CHECK(j.contains(meet));
    CHECK(meet.contains(product(i, j)));
  }
}

TEST_CASE("colon and saturation") {
  auto r = ring({"x", "y", "z"});
  auto a = ambient(r);
  CHECK(colon(ideal(a, "(x*y, x*z)"), poly(r, "x")) == ideal(a, "(y, z)"));
  CHECK(colon(ideal(a, "(x^2*y)"), ideal(a, "(x, y)")) == ideal(a, "(x^2*y)"));
  CHECK(colon(ideal(a, "(x^2, y)"), ideal(a, "(x, y)")) == ideal(a, "(x, y)"));
  CHECK(saturate(ideal(a, "(x^3*y, x^2*z)"), ideal(a, "(x)")) == ideal(a, "(y, z)"));
  // (x,y) is not maximal in three variables, so (x^2, xy) is already saturated
  CHECK(saturate(ideal(a, "(x^2, x*y)"), Ideal::maximal(a)) == ideal(a, "(x^2, x*y)"));
  auto a2 = ambient(ring({"x", "y"}));
  CHECK(saturate(ideal(a2, "(x^2, x*y)"), Ideal::maximal(a2)) == ideal(a2, "(x)"));
  CHECK(colon(ideal(a, "(x)"), poly(r, "x")).is_unit());
}

TEST_CASE("colon in a quotient ring") {
  auto r = ring({"x", "y", "z"});
  auto a = ambient(r, "(x^4, x*z, y*z)");
  auto zero = Ideal::zero(a);
  CHECK(saturate(zero, ideal(a, "(x, y)")) == ideal(a, "(x^4, z)"));
  CHECK(saturate(zero, Ideal::maximal(a)).is_zero());
}

TEST_CASE("property: colon is characterised by f*(A:f) ⊆ A") {
  auto r = ring({"x", "y", "z"});
  auto a = ambient(r);
  std::mt19937_64 rng(103);
  for (int k = 0; k < 20; ++k) {
    Ideal i(a, {oracle::random_polynomial(r, rng, 3, 3), oracle::random_polynomial(r, rng, 3, 3)});
    auto f = oracle::random_polynomial(r, rng, 2, 2);
    if (f.is_zero()) continue;
    auto q = colon(i, f);
    CHECK(q.contains(i));
    for (const auto& g : q.gb()) CHECK(i.contains(f * g));
  }
}

TEST_CASE("property: saturation is idempotent and monotone") {
  auto r = ring({"x", "y", "z"});
  auto a = ambient(r);
  std::mt19937_64 rng(104);
  for (int k = 0; k < 10; ++k) {
    auto ms = random_monomials(3, rng, 3, 4);
    auto i = monomial_ideal(a, ms);
    auto m = Ideal::maximal(a);
    auto s = saturate(i, ideal(a, "(x)"));
    CHECK(s.contains(i));
    CHECK(saturate(s, ideal(a, "(x)")) == s);
    CHECK(saturate(i, m).contains(i));
  }
}

TEST_CASE("local containment") {
  auto r = ring({"x", "y"});
  auto a = ambient(r);
  // (x) and (x(1+y)) agree after localizing at the origin
  CHECK(equal_locally_at_m(ideal(a, "(x)"), ideal(a, "(x + x*y)")));
  CHECK(!(ideal(a, "(x)") == ideal(a, "(x + x*y)")));
  // (x(y-1)) differs from (x) only away from the origin
  CHECK(contains_locally_at_m(ideal(a, "(x*y - x)"), ideal(a, "(x)")));
  CHECK(!contains_locally_at_m(ideal(a, "(x^2)"), ideal(a, "(x)")));
  CHECK(contains_locally_at_m(ideal(a, "(y - 1)"), ideal(a, "(x)")));
}

TEST_CASE("krull dimension") {
  auto r = ring({"x", "y", "z"});
  CHECK(krull_dim(Ideal::zero(ambient(r))) == 3);
  CHECK(krull_dim(ideal(ambient(r), "(x*y, x*z)")) == 2);
  CHECK(krull_dim(Ideal::maximal(ambient(r))) == 0);
  CHECK(krull_dim(Ideal::zero(ambient(r, "(x^4, x*z, y*z)"))) == 1);
  CHECK(krull_dim(Ideal::zero(ambient(r, "(y^2 - x*z, z^2 - x^2*y, x^3 - y*z)"))) == 1);
  CHECK_THROWS_AS(krull_dim(Ideal::unit(ambient(r))), NotContainedInMaximal);
}

TEST_CASE("ambient rejects relations with a constant term") {
  auto r = ring({"x", "y"});
  CHECK_THROWS_AS(ambient(r, "(x - 1)"), NotContainedInMaximal);
}

TEST_CASE("divide_exact") {
  auto r = ring({"x", "y"});
  CHECK(divide_exact(poly(r, "x^2 - y^2"), poly(r, "x - y")) == poly(r, "x + y"));
  CHECK_THROWS(divide_exact(poly(r, "x^2 + y"), poly(r, "x")));
}

TEST_CASE("trimmed drops redundant generators") {
  auto R = ring({"x", "y", "z"});
  auto a = ambient(R);
  auto i = ideal(a, "(x^3 + x*y^2, x^2, x*y, x^2 + x*y, y^2*z)");
  auto t = i.trimmed();
  CHECK(t == i);
  CHECK(t.generators().size() == 3);
  for (const auto& g : t.generators()) CHECK(g.degree() <= 3);
  CHECK(ideal(a, "(x*y, x*y)").trimmed().generators().size() == 1);
  CHECK(ideal(a, "()").trimmed().generators().empty());
}
