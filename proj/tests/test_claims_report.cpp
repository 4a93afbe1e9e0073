#include <cmath>
#include <sstream>

#include "doctest.h"
#include "json.hpp"
#include "mqt/claims.hpp"
#include "mqt/cli.hpp"
#include "mqt/report.hpp"

using namespace mqt;

namespace {

InvariantCache& cache() {
  static InvariantCache c;
  return c;
}

const CellCheck& cell(const TableCheck& t, const std::string& row, const std::string& col) {
  for (const auto& c : t.cells)
    if (c.row == row && c.column == col) return c;
  throw std::out_of_range(row + "/" + col);
}

int cli(std::vector<std::string> args, std::string* out_text = nullptr) {
  std::vector<const char*> argv{"mqtower"};
  for (auto& a : args) argv.push_back(a.c_str());
  std::ostringstream out, err;
  int rc = run_cli(static_cast<int>(argv.size()), argv.data(), out, err);
  if (out_text) *out_text = out.str();
  return rc;
}

}  // namespace

TEST_CASE("galois action cells against floating point") {
  // p = 5, q = 7. eps_2 = 1 + sqrt 2, eps_7 = 8 + 3 sqrt 7 and
  // sqrt(eps_7) = (3 + sqrt 7)/sqrt 2.
  const double r2 = std::sqrt(2.0), r7 = std::sqrt(7.0);
  const double e2 = 1 + r2, e7 = 8 + 3 * r7;
  const double s7 = (3 + r7) / r2;
  REQUIRE(s7 * s7 == doctest::Approx(e7));
  // sigma1 negates sqrt 2: eps_2 -> 1 - sqrt 2 = -1/eps_2.
  CHECK(1 - r2 == doctest::Approx(-1 / e2));
  // sqrt(eps_7) -> (3 + sqrt 7)/(-sqrt 2) = -sqrt(eps_7).
  // sigma3 negates sqrt 7: (3 - sqrt 7)/sqrt 2 = 1/sqrt(eps_7).
  CHECK((3 - r7) / r2 == doctest::Approx(1 / s7));
  // (1 + sigma3) sqrt(eps_7) = 1.
  CHECK(s7 * (3 - r7) / r2 == doctest::Approx(1.0));

  auto t = galois_action_table(5, 7, cache());
  CHECK(t.all_ok);
  CHECK(t.failures() == 0);
  CHECK(t.cells.size() == 75);
  CHECK(cell(t, "eps_2", "sigma1").ok);
  CHECK(cell(t, "eps_2", "sigma1").expected == "-eps_2^-1");
  CHECK(cell(t, "sqrt(eps_q)", "sigma1").expected == "-sqrt(eps_q)");
  CHECK(cell(t, "sqrt(eps_q)", "sigma3").expected == "sqrt(eps_q^-1)");
  CHECK(cell(t, "sqrt(eps_q)", "1+sigma3").expected == "1");
}

TEST_CASE("norm tables and fsu claims") {
  for (auto [p, q] : {std::pair<i64, i64>{5, 7}, {13, 7}, {5, 47}}) {
    INFO(p << ", " << q);
    CHECK(norm_table(p, q, NormTarget::L, cache()).all_ok);
    CHECK(norm_table(p, q, NormTarget::F, cache()).all_ok);
    auto f = fsu_claims(p, q, cache());
    CHECK(f.size() == 10);
    for (const auto& c : f) CHECK_MESSAGE(c.holds, c.field << ": " << c.detail);
    for (const auto& h : quadratic_h2_table(p, q, cache())) CHECK_MESSAGE(h.ok, h.d);
  }
}

TEST_CASE("unit formula text") {
  UnitFormula u{0, "u", {{"p", 1}, {"2", -1}, {"2p", -1}}, 2};
  CHECK(u.str() == "(-1)^u*sqrt(eps_p*eps_2^-1*eps_2p^-1)");
  CHECK(radicand_of("2pq", 5, 7) == 70);
  CHECK_THROWS(radicand_of("3", 5, 7));
}

TEST_CASE("verify_instance on one member of each family") {
  auto c2 = verify_instance({FamilyKind::COND2, 3, 7}, cache());
  CHECK(c2.count(Status::FAIL) == 0);
  CHECK(c2.count(Status::PASS) > 10);
  auto c3 = verify_instance({FamilyKind::COND3, 17, 0}, cache());
  CHECK(c3.count(Status::FAIL) == 0);
  auto c1 = verify_instance({FamilyKind::COND1, 5, 7}, cache());
  for (const auto& c : c1.claims)
    if (c.anchor.rfind("FSU of", 0) == 0 || c.anchor.rfind("h2", 0) == 0 || c.anchor.rfind("norms", 0) == 0 ||
        c.anchor == "Galois action table on K+" || c.anchor == "q(L*) = 2^8")
      CHECK_MESSAGE(c.status == Status::PASS, c.anchor << ": " << c.evidence);
  CHECK(c1.count(Status::SKIPPED_CITED) == 2);
}

TEST_CASE("rendering") {
  VerifyOptions tiny;
  tiny.bound = 2;
  CHECK_THROWS_AS(run_verify(tiny, cache()), std::invalid_argument);
  tiny.bound = 3;
  CHECK(run_verify(tiny, cache()).empty());
  auto empty = render({}, Format::Markdown, 3);
  CHECK(empty.rfind("# Verification report", 0) == 0);

  VerifyOptions o;
  o.bound = 20;
  auto a = run_verify(o, cache());
  o.jobs = 2;
  auto b = run_verify(o, cache());
  REQUIRE(a.size() == b.size());
  for (auto f : {Format::Markdown, Format::Json, Format::Csv}) CHECK(render(a, f, 20) == render(b, f, 20));

  auto j = nlohmann::json::parse(render(a, Format::Json, 20));
  CHECK(j["instances"].size() == a.size());
  auto csv = render(a, Format::Csv, 20);
  CHECK(csv.rfind("instance,claim,status,evidence\n", 0) == 0);
  CHECK(parse_format("json") == Format::Json);
  CHECK_THROWS(parse_format("xml"));
}

TEST_CASE("cli exit codes") {
  std::string text;
  CHECK(cli({"families", "--bound", "20"}, &text) == 0);
  CHECK(text.find("COND3") != std::string::npos);
  CHECK(cli({"group", "--kind", "S", "--m", "5", "--report"}) == 0);
  CHECK(cli({"verify", "--bound", "20", "--kind", "2,3"}) == 0);
  CHECK(cli({"verify", "--bound", "10", "--kind", "1"}) == 1);
  CHECK(cli({"invariants", "--p", "5", "--q", "7", "--format", "json"}) == 0);
  CHECK(cli({"nosuch"}) == 2);
  CHECK(cli({"group", "--kind", "Q", "--m", "2"}) == 2);
}
