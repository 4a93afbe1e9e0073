#include "doctest.h"
#include "mqt/units.hpp"

using namespace mqt;

namespace {

InvariantCache& cache() {
  static InvariantCache c;
  return c;
}

Unit eps(const MQField::Ptr& k, i64 d) { return quadratic_unit(k, d, cache()); }

Unit root(const MQField::Ptr& k, std::vector<std::pair<Unit, long>> fs, int deg,
          std::optional<MQElement> t = std::nullopt) {
  return realize(k, fs, deg, t);
}

}  // namespace

TEST_CASE("quadratic units inside bigger fields") {
  auto k = MQField::make({2, 5, 7});
  CHECK(positive_kernels(*k) == std::vector<i64>{2, 5, 7, 10, 14, 35, 70});
  auto e = eps(k, 35);
  CHECK(e.value == MQElement::quadratic(k, 35, 6, 1, 1));
  CHECK(e.exps[5] == 1);
  auto inv = inverse(e);
  CHECK((e * inv).value == MQElement::one(k));
  // sigma_2 sends eps_35 to its conjugate 1/eps_35 (norm +1).
  GaloisElement s2{*k->mask_of(5)};
  CHECK(apply(e, s2).value == inv.value);
}

TEST_CASE("roots of unity") {
  CHECK(roots_of_unity(MQField::make({2, 5})).order == 2);
  CHECK(roots_of_unity(MQField::make({-1, 5})).order == 4);
  CHECK(roots_of_unity(MQField::make({-1, 2})).order == 8);
  CHECK(roots_of_unity(MQField::make({-1, 2, 3, 7})).order == 24);
  auto w = roots_of_unity(MQField::make({-1, 2}));
  CHECK(w.generator.pow(8) == MQElement::one(w.generator.field()));
  CHECK_FALSE(w.generator.pow(4) == MQElement::one(w.generator.field()));
}

TEST_CASE("biquadratic FSUs") {
  {
    auto k = MQField::make({5, 7});
    auto g = fsu_biquadratic(Radicand(5), Radicand(7), cache());
    CHECK(same_unit_lattice(g, {eps(k, 5), eps(k, 7), root(k, {{eps(k, 7), 1}, {eps(k, 35), 1}}, 2)}));
  }
  {
    auto k = MQField::make({5, 14});
    auto g = fsu_biquadratic(Radicand(5), Radicand(14), cache());
    CHECK(same_unit_lattice(g, {eps(k, 5), eps(k, 14), root(k, {{eps(k, 70), 1}}, 2)}));
  }
  {
    auto k = MQField::make({2, 5});
    auto g = fsu_biquadratic(Radicand(2), Radicand(5), cache());
    CHECK(same_unit_lattice(g, {eps(k, 2), eps(k, 5), root(k, {{eps(k, 2), 1}, {eps(k, 5), 1}, {eps(k, 10), 1}}, 2)}));
  }
}

TEST_CASE("a missing root raises domain_error") {
  auto k = MQField::make({2});
  CHECK_THROWS_AS(root(k, {{eps(k, 2), 1}}, 2), std::domain_error);
}

TEST_CASE("unit index") {
  auto k57 = MQField::make({5, 7});
  auto r = unit_index(fundamental_units(k57, cache()), cache());
  CHECK(r.exact == 2);
  REQUIRE(r.certified);
  CHECK(*r.certified == 2);
  // One square root sqrt(eps_2 eps_5 eps_10) beyond the quadratic units.
  auto k25 = MQField::make({2, 5});
  auto s = root(k25, {{eps(k25, 2), 1}, {eps(k25, 5), 1}, {eps(k25, 10), 1}}, 2);
  CHECK(s.value * s.value == (eps(k25, 2) * eps(k25, 5) * eps(k25, 10)).value);
  CHECK(unit_index(fundamental_units(k25, cache()), cache()).exact == 2);
  auto kk = MQField::make({-1, 2, 5, 7});
  auto q = unit_index(fundamental_units(kk, cache()), cache());
  CHECK(q.exact == 256);
  CHECK(q.free_index == 128);
  CHECK(q.torsion_index == 2);
  REQUIRE(q.certified);
  CHECK(*q.certified == 256);
}

TEST_CASE("units of Q(zeta_8)") {
  // (2 + sqrt 2) eps_2 = 4 + 3 sqrt 2 is not a square in Q(sqrt 2): (a + b sqrt 2)^2
  // would need 8b^4 - 16b^2 + 9 = 0, which has no real root. So eps_2 stays.
  auto k0 = MQField::make({2});
  auto x = MQElement::quadratic(k0, 2, 2, 1, 1) * MQElement::quadratic(k0, 2, 1, 1, 1);
  CHECK(x == MQElement::quadratic(k0, 2, 4, 3, 1));
  CHECK_FALSE(x.sqrt_any().has_value());
  auto k = MQField::make({-1, 2});
  auto g = extend_units_with_i(fundamental_units(k0, cache()), k);
  CHECK(g.torsion_order == 8);
  CHECK(same_unit_lattice(g, {eps(k, 2)}));
  // zeta_8 is missing from <i> <eps_2>, so the index is the torsion index 2.
  auto q = unit_index(g, cache());
  CHECK(q.exact == 2);
  CHECK(q.torsion_index == 2);
}

TEST_CASE("Q(sqrt 5, sqrt 7, i)") {
  auto k = MQField::make({-1, 5, 7});
  auto g = fundamental_units(k, cache());
  CHECK(g.torsion_order == 4);
  auto i = MQElement::sqrt_of(k, -1);
  CHECK(same_unit_lattice(g, {eps(k, 5), root(k, {{eps(k, 7), 1}, {eps(k, 35), 1}}, 2), root(k, {{eps(k, 7), 1}}, 2, i)}));
  auto q = unit_index(g, cache());
  CHECK(class_number_formula(*k, q.exact, [](i64 d) { return cache().h2(d); }) == 1);
}

TEST_CASE("class number formula") {
  auto kk = MQField::make({-1, 2, 5, 7});
  CHECK(class_number_formula(*kk, 256, [](i64 d) { return cache().h2(d); }) == cache().h2(-14));
  auto K = MQField::make({-2, 5, 7});
  auto q = unit_index(fundamental_units(K, cache()), cache());
  CHECK(class_number_formula(*K, q.exact, [](i64 d) { return cache().h2(d); }) == 2 * cache().h2(-14));
}

TEST_CASE("pell case analysis") {
  auto c = pell_case_analysis(Radicand(35), cache());
  CHECK(c.x == 6);
  CHECK(c.y == 1);
  CHECK(c.x - 1 == c.c * c.e * c.y1 * c.y1);
  CHECK(c.x + 1 == c.c * (35 / c.e) * c.y2 * c.y2);
  // N(eps_2) = -1 and N(3 + sqrt 10) = 9 - 10 = -1: precondition fails.
  CHECK_THROWS(pell_case_analysis(Radicand(2), cache()));
  CHECK_THROWS(pell_case_analysis(Radicand(10), cache()));
}

TEST_CASE("unit expressions carry integer witnesses") {
  auto u = unit_expressions(5, 7, cache());
  CHECK(u.all_hold);
  CHECK(-5 * u.b1 * u.b1 + 7 * u.b2 * u.b2 == 2);
  CHECK(-10 * u.y1 * u.y1 + 7 * u.y2 * u.y2 == 2);
  CHECK(u.d1 * u.d1 - 14 * u.d2 * u.d2 == 2);
  CHECK(u.d1p * u.d1p - 7 * u.d2p * u.d2p == 2);
}
