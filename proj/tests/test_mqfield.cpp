#include <complex>
#include <random>

#include "doctest.h"
#include "mqt/mqfield.hpp"

using namespace mqt;

namespace {

MQElement random_element(const MQField::Ptr& k, std::mt19937_64& rng, int span = 20) {
  std::uniform_int_distribution<int> c(-span, span);
  std::vector<mpq_class> coords(k->degree());
  for (auto& x : coords) x = mpq_class(c(rng), 1 + (rng() % 3));
  return MQElement::from_coords(k, coords);
}

std::complex<double> as_complex(const ComplexBall& z) { return {z.re.mid_d(), z.im.mid_d()}; }

}  // namespace

TEST_CASE("field construction normalizes generators") {
  auto k = MQField::make({7, 5});
  CHECK(k->generators() == std::vector<i64>{5, 7});
  CHECK(k->degree() == 4);
  CHECK(MQField::make({8, -4})->generators() == std::vector<i64>{-1, 2});
  CHECK_THROWS_AS(MQField::make({5, 7, 35}), std::invalid_argument);
  CHECK(k->mask_of(35).has_value());
  CHECK_FALSE(k->mask_of(2).has_value());
  CHECK(is_subfield(*MQField::make({35}), *k));
  CHECK_FALSE(is_subfield(*MQField::make({2}), *k));
}

TEST_CASE("arithmetic identities") {
  auto k = MQField::make({5, 7});
  auto s5 = MQElement::sqrt_of(k, 5), s7 = MQElement::sqrt_of(k, 7), s35 = MQElement::sqrt_of(k, 35);
  CHECK((s5 + s7) * (s5 + s7) == MQElement(k, 12) + s35 * mpq_class(2));
  auto q2 = MQField::make({2});
  auto e2 = MQElement::quadratic(q2, 2, 1, 1, 1);
  CHECK(e2 * MQElement::quadratic(q2, 2, -1, 1, 1) == MQElement::one(q2));
  std::mt19937_64 rng(7);
  for (int i = 0; i < 50; ++i) {
    auto x = random_element(k, rng);
    if (x.is_zero()) continue;
    CHECK(x * x.inverse() == MQElement::one(k));
  }
}

TEST_CASE("galois action") {
  auto k = MQField::make({2, 5, 7});
  auto s2 = MQElement::sqrt_of(k, 2);
  GaloisElement s1{*k->mask_of(2)}, s2g{*k->mask_of(5)}, s3{*k->mask_of(7)};
  CHECK(s2.apply(s1) == -s2);
  CHECK(MQElement::one(k).apply(s1) == MQElement::one(k));
  auto s35 = MQElement::sqrt_of(k, 35);
  CHECK(s35.apply(s2g * s3) == s35);
  CHECK(s35.apply(s2g) == -s35);
}

TEST_CASE("norms") {
  auto k = MQField::make({2, 5, 7});
  auto ep = MQElement::quadratic(k, 5, 1, 1, 2);
  GaloisElement s2{*k->mask_of(5)};
  CHECK(norm_to_subfield(ep, {GaloisElement{}, s2}) == MQElement(k, -1));
  CHECK(norm_to_subfield(MQElement::one(k), {GaloisElement{}, s2}) == MQElement::one(k));
  auto sub = MQField::make({2, 7});
  CHECK(relative_norm(ep, sub) == MQElement(sub, -1));
}

TEST_CASE("embeddings") {
  auto q2 = MQField::make({2});
  auto z = as_complex(MQElement::sqrt_of(q2, 2).embed(64));
  CHECK(z.real() == doctest::Approx(1.41421356237309).epsilon(1e-14));
  auto k8 = MQField::make({-1, 2});
  auto zeta8 = (MQElement::sqrt_of(k8, 2) + MQElement::sqrt_of(k8, -2)) * mpq_class(1, 2);
  auto w = as_complex(zeta8.embed(128));
  CHECK(w.real() == doctest::Approx(std::sqrt(0.5)));
  CHECK(w.imag() == doctest::Approx(std::sqrt(0.5)));
  CHECK(zeta8.pow(8) == MQElement::one(k8));
  auto e35 = MQElement::quadratic(MQField::make({35}), 35, 6, 1, 1);
  CHECK(as_complex(e35.embed(128)).real() == doctest::Approx(6 + std::sqrt(35.0)));
}

TEST_CASE("square roots") {
  auto k = MQField::make({5, 7});
  auto e35 = MQElement::quadratic(k, 35, 6, 1, 1);
  auto r = (e35 * mpq_class(2)).sqrt();
  REQUIRE(r);
  CHECK(*r == MQElement::sqrt_of(k, 5) + MQElement::sqrt_of(k, 7));
  CHECK(MQElement::one(k).sqrt() == MQElement::one(k));
  auto q2 = MQField::make({2});
  CHECK_FALSE(MQElement::quadratic(q2, 2, 1, 1, 1).sqrt().has_value());
  // sqrt(eps_7) lives in Q(sqrt 2, sqrt 7): 2 eps_7 = (3 + sqrt 7)^2.
  auto k27 = MQField::make({2, 7});
  auto e7 = MQElement::quadratic(k27, 7, 8, 3, 1);
  auto s = e7.sqrt();
  REQUIRE(s);
  CHECK(*s * *s == e7);
  CHECK(s->is_unit());
  CHECK(e7.is_unit());
  CHECK_FALSE(MQElement(k27, 2).is_unit());
}

TEST_CASE("coerce and restrict") {
  auto sub = MQField::make({35});
  auto sup = MQField::make({2, 5, 7});
  auto x = MQElement::quadratic(sub, 35, 6, 1, 1);
  auto y = coerce(x, sup);
  CHECK(restrict_to(y, sub) == x);
  CHECK_THROWS_AS(restrict_to(MQElement::sqrt_of(sup, 2), sub), std::domain_error);
}

TEST_CASE("serialize round trip") {
  auto k = MQField::make({-2, 5, 7});
  std::mt19937_64 rng(3);
  for (int i = 0; i < 20; ++i) {
    auto x = random_element(k, rng);
    CHECK(MQElement::parse(x.serialize()) == x);
  }
}

TEST_CASE("quadratic characters are multiplicative") {
  auto k = MQField::make({2, 5, 7});
  std::mt19937_64 rng(11);
  for (int i = 0; i < 40; ++i) {
    auto x = random_element(k, rng), y = random_element(k, rng);
    auto cx = quadratic_characters(x), cy = quadratic_characters(y), cxy = quadratic_characters(x * y);
    if (cx && cy && cxy) CHECK((*cx ^ *cy) == *cxy);
    if (auto c = quadratic_characters(x * x)) CHECK(*c == 0);
  }
}
