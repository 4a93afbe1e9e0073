#include "doctest.h"
#include "mqt/family.hpp"
#include "oracles.hpp"

using namespace mqt;

namespace {

bool cond_symbols(i64 p, i64 q) {
  return oracle::legendre(2, p) == -1 && oracle::legendre(2, q) == 1 && oracle::legendre(p, q) == -1;
}

}  // namespace

TEST_CASE("condition 1") {
  CHECK(check_condition_1(OddPrime(5), OddPrime(7)));
  CHECK_FALSE(check_condition_1(OddPrime(5), OddPrime(17)));
  // (13/7) = (6/7) = (2/7)(3/7) = -1 by Euler's criterion, so (13, 7) qualifies.
  CHECK(oracle::legendre(13, 7) == -1);
  CHECK(check_condition_1(OddPrime(13), OddPrime(7)));
  CHECK_THROWS_AS(check_condition_1(OddPrime(7), OddPrime(7)), std::invalid_argument);
}

TEST_CASE("condition 2") {
  CHECK(check_condition_2(OddPrime(3), OddPrime(7)));
  CHECK_FALSE(check_condition_2(OddPrime(7), OddPrime(3)));
  CHECK_FALSE(check_condition_2(OddPrime(5), OddPrime(7)));
}

TEST_CASE("condition 3") {
  CHECK(check_condition_3(OddPrime(17)));
  CHECK_FALSE(check_condition_3(OddPrime(13)));
  const bool want97 = (oracle::powmod(2, 24, 97) == 1 ? 1 : -1) != ((96 / 8) % 2 == 0 ? 1 : -1);
  CHECK(check_condition_3(OddPrime(97)) == want97);
}

TEST_CASE("enumeration matches an exhaustive scan") {
  CHECK(enumerate_families(3).empty());
  auto ten = enumerate_families(10);
  CHECK(std::find(ten.begin(), ten.end(), FamilyInstance{FamilyKind::COND1, 5, 7}) != ten.end());
  CHECK(std::find(ten.begin(), ten.end(), FamilyInstance{FamilyKind::COND2, 3, 7}) != ten.end());
  auto twenty = enumerate_families(20);
  CHECK(std::find(twenty.begin(), twenty.end(), FamilyInstance{FamilyKind::COND3, 17, 0}) != twenty.end());

  std::vector<FamilyInstance> want;
  for (i64 p = 3; p < 300; ++p)
    for (i64 q = 3; q < 300; ++q) {
      if (p == q || !oracle::is_prime(p) || !oracle::is_prime(q)) continue;
      if (p % 4 == 1 && q % 4 == 3 && cond_symbols(p, q)) want.push_back({FamilyKind::COND1, p, q});
      if (p % 4 == 3 && q % 4 == 3 && cond_symbols(p, q)) want.push_back({FamilyKind::COND2, p, q});
    }
  for (i64 p = 3; p < 300; ++p)
    if (oracle::is_prime(p) && p % 16 == 1 &&
        (oracle::powmod(2, (p - 1) / 4, p) == 1 ? 1 : -1) != (((p - 1) / 8) % 2 == 0 ? 1 : -1))
      want.push_back({FamilyKind::COND3, p, 0});
  std::sort(want.begin(), want.end());
  CHECK(enumerate_families(300) == want);
}

TEST_CASE("family fields") {
  auto f = fields_for_family({FamilyKind::COND1, 5, 7});
  CHECK(f.at(FieldLabel::F).field()->generators() == std::vector<i64>{-2, 10, 14});
  CHECK(f.at(FieldLabel::L).field()->generators() == std::vector<i64>{-1, 2, 35});
  CHECK(f.at(FieldLabel::Fi).field()->generators() == std::vector<i64>{-1, 5, 7});
  auto g = fields_for_family({FamilyKind::COND2, 3, 7});
  CHECK(g.at(FieldLabel::k).same_field_as(FieldDescriptor{{Radicand(-2), Radicand(42)}, FieldLabel::k}));
  auto h = fields_for_family({FamilyKind::COND3, 17, 0});
  CHECK(h.at(FieldLabel::L).field()->generators() == std::vector<i64>{-1, 2, 17});
  CHECK_THROWS_AS(fields_for_family({FamilyKind::COND1, 7, 5}), std::invalid_argument);
}
