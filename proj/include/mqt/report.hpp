#pragma once

#include <set>
#include <string>
#include <vector>

#include "mqt/family.hpp"
#include "mqt/quad.hpp"

namespace mqt {

enum class Status { PASS, FAIL, SKIPPED_CITED };
std::string to_string(Status s);

struct ClaimResult {
  std::string anchor;
  Status status = Status::FAIL;
  std::string evidence;
};

/// A markdown-ready grid attached to an instance (Galois action, norms, h2).
struct ReportTable {
  std::string title;
  std::vector<std::string> header;
  std::vector<std::vector<std::string>> rows;
};

struct VerificationReport {
  FamilyInstance instance;
  std::vector<ClaimResult> claims;
  std::vector<ReportTable> tables;
  std::string tower;
  double seconds = 0;  // not rendered: reports stay byte-identical across runs
  long precision = 0;  // bits used by the certified unit index of the top field

  std::string id() const { return instance.id(); }
  int count(Status s) const;
  bool failed() const { return count(Status::FAIL) > 0; }
};

struct VerifyOptions {
  i64 bound = 200;
  std::set<FamilyKind> kinds{FamilyKind::COND1, FamilyKind::COND2, FamilyKind::COND3};
  int jobs = 1;
  long precision_start = 128;
};

/// Every claim for one instance. Exceptions become FAIL claims.
VerificationReport verify_instance(const FamilyInstance& inst, InvariantCache& cache, long precision_start = 128);

/// Enumerates the families below bound and verifies them on opts.jobs threads.
/// The result is ordered like enumerate_families whatever the scheduling.
std::vector<VerificationReport> run_verify(const VerifyOptions& opts, InvariantCache& cache);

enum class Format { Markdown, Json, Csv };
Format parse_format(const std::string& s);

/// Full rendering with a summary header; an empty list still gets the header.
std::string render(const std::vector<VerificationReport>& reports, Format f, i64 bound);

/// The capitulation table as markdown.
std::string render_capitulation_table();

std::string render_table(const ReportTable& t, Format f);

}  // namespace mqt
