#include <doctest.h>

#include <string>

#include "jstretch/errors.hpp"
#include "jstretch/speclab.hpp"
#include "support/helpers.hpp"
#include "support/oracles.hpp"

using namespace jst;
using jst::test::ambient;
using jst::test::ideal;
using jst::test::polys;
using jst::test::ring;

namespace {

Ideal ex22(int r) {
  auto R = ring({"x", "y", "z"});
  return ideal(ambient(R, "(x^" + std::to_string(r + 1) + ", x*z, y*z)"), "(x, y)");
}

Ideal ex26() { return ideal(ambient(ring({"a", "b", "c"})), "(a^2*b^2, a^2*c^2, a*b*c^2, b^2*c^2, a^2*b*c)"); }

Ideal semigroup() {
  auto R = ring({"a", "b", "c"});
  return ideal(ambient(R, "(b^2 - a*c, c^2 - a^2*b, a^3 - b*c)"), "(a, b)");
}

Ideal maximal2() { return ideal(ambient(ring({"x", "y"})), "(x, y)"); }

Monomial mono(int a, int b) {
  int e[] = {a, b};
  return Monomial(e);
}

}  // namespace

TEST_CASE("quantity names round-trip") {
  for (auto q : all_quantities()) CHECK(parse_quantity(to_string(q)) == q);
  CHECK(all_quantities().size() == 6);
  CHECK_THROWS_AS(parse_quantity("nope"), PreconditionFailed);
  CHECK(to_string(QuantityValue{}) == "INFINITE");
  CHECK(to_string(QuantityValue{3}) == "3");
}

TEST_CASE("evaluate on ex2.2 against the staircase") {
  // with J = (y): λ((x,y)^2 + (x^4) / (y^2) + (x^4)) in k[x,y]
  long expected = oracle::staircase_difference(2, {mono(2, 0), mono(1, 1), mono(0, 2), mono(4, 0)},
                                               {mono(0, 2), mono(4, 0)}, 10);
  CHECK(expected == 5);
  auto rd = sample_reduction(ex22(3), 1);
  CHECK(evaluate(Quantity::IN_JN, rd, 2) == expected);
  CHECK(evaluate(Quantity::IN_JIN1, rd, 2) == 1);
  CHECK(evaluate(Quantity::I2_JI, rd) == 2);
  CHECK(evaluate(Quantity::JcapI2_JI, rd) == 0);
  CHECK(evaluate(Quantity::S_J, rd) == 3);
  CHECK_THROWS_AS(evaluate(Quantity::IN_JN, rd, 0), PreconditionFailed);
}

TEST_CASE("stability of the index of nilpotency on ex2.2") {
  auto rep = stability_trials(ex22(3), Quantity::S_J, {.trials = 20});
  REQUIRE(rep.modal.has_value());
  CHECK(*rep.modal == 3);
  CHECK(rep.stability >= 0.9);
  CHECK(rep.values.size() == 20);
  CHECK(rep.values.front().seed == 1);
  CHECK(rep.values.back().seed == 20);
}

TEST_CASE("modal value agrees with a single-seed evaluation") {
  auto rep = stability_trials(ex26(), Quantity::I2_JI, {.trials = 8});
  REQUIRE(rep.modal.has_value());
  CHECK(*rep.modal == evaluate(Quantity::I2_JI, sample_reduction(ex26(), 1)));
  CHECK(rep.all_finite_or_all_infinite());
}

TEST_CASE("complete intersection: everything vanishes") {
  auto reps = stability_trials(maximal2(), all_quantities(), {.trials = 6});
  REQUIRE(reps.size() == 6);
  for (const auto& rep : reps) {
    CAPTURE(to_string(rep.quantity));
    REQUIRE(rep.modal.has_value());
    CHECK(*rep.modal == 0);
    CHECK(rep.stability == 1.0);
  }
}

TEST_CASE("trials are reproducible") {
  auto a = stability_trials(ex22(2), Quantity::TAU, {.trials = 4, .seed = 7});
  auto b = stability_trials(ex22(2), Quantity::TAU, {.trials = 4, .seed = 7});
  REQUIRE(a.values.size() == b.values.size());
  for (std::size_t i = 0; i < a.values.size(); ++i) CHECK(a.values[i].value == b.values[i].value);
}

TEST_CASE("fixed reductions never beat the general one") {
  SUBCASE("semigroup with H = (a)") {
    // valuations: I² = t^6 k[[t]] ⊆ aR and aI misses t^8, so both sides equal 1
    auto i = semigroup();
    auto c = fixed_vs_general(i, polys(i.poly_ring(), "(a)"), "H = (a)", Quantity::JcapI2_JI, {.trials = 5});
    CHECK(c.general == 1);
    CHECK(c.fixed == 1);
    CHECK(c.general_le_fixed);
  }
  SUBCASE("ex2.2 with H = (y)") {
    auto i = ex22(3);
    auto c = fixed_vs_general(i, polys(i.poly_ring(), "(y)"), "H = (y)", Quantity::I2_JI, {.trials = 5});
    CHECK(c.general == c.fixed);
    CHECK(c.fixed == 2);
  }
  SUBCASE("H is a sampled general reduction") {
    auto i = ex26();
    auto rd = sample_reduction(i, 1);
    for (auto q : {Quantity::I2_JI, Quantity::JcapI2_JI, Quantity::IN_JIN1}) {
      auto c = fixed_vs_general(i, rd.elements(), "sampled", q, {.trials = 3});
      CHECK(c.general == c.fixed);
    }
  }
  SUBCASE("every quantity on ex2.2 with H = (x + y)") {
    auto i = ex22(2);
    auto reps = stability_trials(i, all_quantities(), {.trials = 5});
    for (auto& rep : reps) {
      CAPTURE(to_string(rep.quantity));
      auto c = fixed_vs_general(i, polys(i.poly_ring(), "(x + y)"), "H = (x + y)", rep);
      CHECK(c.general_le_fixed);
      CHECK(rep.fixed_comparisons.size() == 1);
      if (rep.quantity == Quantity::S_J) CHECK(c.intersection_hypothesis.has_value());
    }
  }
}

TEST_CASE("fixed reductions are validated") {
  auto i = ex22(3);
  CHECK(fixed_reduction_number(i, polys(i.poly_ring(), "(y)")) == 3);
  CHECK_THROWS_AS(fixed_reduction_number(i, polys(i.poly_ring(), "(x)"), 6), NotAReduction);
  CHECK_THROWS_AS(fixed_reduction_number(i, polys(i.poly_ring(), "(z)")), NotAReduction);
  CHECK_THROWS_AS(fixed_vs_general(i, polys(i.poly_ring(), "(x)"), "H = (x)", Quantity::I2_JI, {.trials = 2, .cap = 6}),
                  NotAReduction);
  CHECK_THROWS_AS(fixed_vs_general(i, polys(i.poly_ring(), "(x, y)"), "two", Quantity::I2_JI, {.trials = 2}),
                  PreconditionFailed);
}
