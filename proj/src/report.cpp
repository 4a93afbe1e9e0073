#include "mqt/report.hpp"

#include <algorithm>
#include <atomic>
#include <chrono>
#include <sstream>
#include <thread>

#include "json.hpp"
#include "mqt/claims.hpp"
#include "mqt/tower.hpp"
#include "mqt/units.hpp"

namespace mqt {

std::string to_string(Status s) {
  switch (s) {
    case Status::PASS: return "PASS";
    case Status::FAIL: return "FAIL";
    case Status::SKIPPED_CITED: return "SKIPPED-cited";
  }
  return "?";
}

int VerificationReport::count(Status s) const {
  return static_cast<int>(std::count_if(claims.begin(), claims.end(), [&](const ClaimResult& c) { return c.status == s; }));
}

Format parse_format(const std::string& s) {
  if (s == "markdown" || s == "md") return Format::Markdown;
  if (s == "json") return Format::Json;
  if (s == "csv") return Format::Csv;
  throw std::invalid_argument("unknown format: " + s);
}

namespace {

std::string pow2(int e) { return "2^" + std::to_string(e); }

struct Recorder {
  VerificationReport& r;
  void add(std::string anchor, bool ok, std::string evidence) {
    r.claims.push_back({std::move(anchor), ok ? Status::PASS : Status::FAIL, std::move(evidence)});
  }
  void cited(std::string anchor, std::string evidence) {
    r.claims.push_back({std::move(anchor), Status::SKIPPED_CITED, std::move(evidence)});
  }
};

std::string table_evidence(const TableCheck& t) {
  std::ostringstream os;
  os << t.cells.size() << " cells, " << t.failures() << " mismatches";
  if (!t.signs.empty()) {
    os << "; signs";
    for (const auto& [v, s] : t.signs) os << " " << v << "=" << s;
  }
  for (const auto& c : t.cells)
    if (!c.ok) os << "; " << c.row << " under " << c.column << ": expected " << c.expected << ", got " << c.actual;
  return os.str();
}

ReportTable galois_grid(const TableCheck& t) {
  ReportTable g{"Action of the Galois group on units of K+", {"unit"}, {}};
  for (const auto& c : t.cells)
    if (std::find(g.header.begin(), g.header.end(), c.column) == g.header.end()) g.header.push_back(c.column);
  for (const auto& c : t.cells) {
    if (g.rows.empty() || g.rows.back()[0] != c.row) {
      g.rows.push_back(std::vector<std::string>(g.header.size()));
      g.rows.back()[0] = c.row;
    }
    auto col = std::find(g.header.begin(), g.header.end(), c.column) - g.header.begin();
    g.rows.back()[col] = c.ok ? c.expected : "MISMATCH " + c.actual;
  }
  return g;
}

ReportTable norm_grid(const std::string& title, const TableCheck& t) {
  ReportTable g{title, {"unit", "expected", "value", "sign"}, {}};
  for (const auto& c : t.cells)
    g.rows.push_back({c.row, c.expected, c.actual, c.ok ? (c.sign_var.empty() ? "fixed" : c.sign_var + " -> " + std::to_string(c.realized_sign)) : "MISMATCH"});
  return g;
}

std::string group_evidence(const TowerClassification& t) {
  std::ostringstream os;
  os << "order 2^" << t.order_exponent;
  if (!t.cap_counts.empty()) {
    std::array<int, 3> counts{t.cap_counts[0], t.cap_counts[1], t.cap_counts[2]};
    os << ", counts " << flags_str(counts, {}) << " (";
    for (std::size_t i = 0; i < t.computed.size(); ++i) os << (i ? "," : "") << (t.computed[i] ? "computed" : "cited");
    os << "), cited flags " << flags_str(counts, t.flags) << ", rows fitting counts and order:";
    for (auto f : t.candidates_without_flags) os << " " << to_string(f);
  }
  return os.str();
}

void group_claim(Recorder& rec, const FamilyClassification& c, FieldLabel l, const std::string& want) {
  const std::string anchor = "G_" + to_string(l) + " = " + want;
  auto it = c.groups.find(l);
  if (it == c.groups.end()) {
    rec.add(anchor, false, "not classified; see consistency");
    return;
  }
  rec.add(anchor, it->second.name() == want, "classified as " + it->second.name() + "; " + group_evidence(it->second));
}

void h2_claim(Recorder& rec, const FamilyClassification& c, FieldLabel l, const mpz_class& want, const std::string& text) {
  auto it = c.h2.find(l);
  if (it == c.h2.end()) {
    rec.add("h2(" + to_string(l) + ") = " + text, false, "not computed");
    return;
  }
  rec.add("h2(" + to_string(l) + ") = " + text, it->second == want,
          "h2 = " + it->second.get_str() + " from q = " + c.q_index.at(l).get_str());
}

void cap_claim(Recorder& rec, const NormIndexReport& n, int want) {
  rec.add("capitulation " + to_string(n.lower.label) + " in " + to_string(n.upper.label) + " = " + std::to_string(want),
          n.cap_count == want,
          "count " + std::to_string(n.cap_count) + " = [" + to_string(n.upper.label) + ":" + to_string(n.lower.label) +
              "] * [E : N(E)] with index " + n.index.get_str() + "; " + n.evidence());
}

void cond12_units(Recorder& rec, VerificationReport& r, i64 p, i64 q, InvariantCache& cache, long prec) {
  auto h2 = quadratic_h2_table(p, q, cache);
  ReportTable ht{"2-class numbers of quadratic subfields", {"d", "expected", "h2"}, {}};
  std::string bad;
  for (const auto& h : h2) {
    ht.rows.push_back({std::to_string(h.d), h.expected, h.actual.get_str()});
    if (!h.ok) bad += " h2(" + std::to_string(h.d) + ") = " + h.actual.get_str() + " (expected " + h.expected + ")";
  }
  rec.add("h2 of the fifteen quadratic subfields", bad.empty(), bad.empty() ? "all fifteen match" : bad);
  r.tables.push_back(ht);

  auto ux = unit_expressions(p, q, cache);
  std::ostringstream ue;
  ue << "b1=" << ux.b1 << " b2=" << ux.b2 << " y1=" << ux.y1 << " y2=" << ux.y2 << " d1=" << ux.d1 << " d2=" << ux.d2
     << " d1'=" << ux.d1p << " d2'=" << ux.d2p;
  if (!ux.all_hold) ue << "; " << ux.failure;
  rec.add("sqrt(2 eps) expansions with integer witnesses", ux.all_hold, ue.str());

  for (const auto& f : fsu_claims(p, q, cache))
    rec.add("FSU of " + f.field, f.holds, "expected " + f.expected + "; computed " + f.computed + "; " + f.detail);

  auto kk = MQField::make({2, p, q, -1});
  auto rep = unit_index(fundamental_units(kk, cache), cache, prec);
  r.precision = rep.precision;
  const bool ok = rep.exact == 256 && (!rep.certified || *rep.certified == 256);
  rec.add("q(L*) = 2^8", ok,
          "exact " + rep.exact.get_str() + " (free " + rep.free_index.get_str() + ", torsion " +
              std::to_string(rep.torsion_index) + "), covolume " +
              (rep.certified ? rep.certified->get_str() : std::string("uncertified")) + " at " +
              std::to_string(rep.precision) + " bits");

  auto gt = galois_action_table(p, q, cache);
  rec.add("Galois action table on K+", gt.all_ok, table_evidence(gt));
  r.tables.push_back(galois_grid(gt));
  auto nl = norm_table(p, q, NormTarget::L, cache);
  rec.add("norms from L* to L", nl.all_ok, table_evidence(nl));
  r.tables.push_back(norm_grid("Norms from L* to L", nl));
  auto nf = norm_table(p, q, NormTarget::F, cache);
  rec.add("norms from L* to F", nf.all_ok, table_evidence(nf));
  r.tables.push_back(norm_grid("Norms from L* to F", nf));
}

}  // namespace

VerificationReport verify_instance(const FamilyInstance& inst, InvariantCache& cache, long precision_start) {
  const auto t0 = std::chrono::steady_clock::now();
  VerificationReport r{inst, {}, {}, {}, 0, precision_start};
  Recorder rec{r};
  try {
    rec.add("family condition", satisfies(inst), inst.id());
    if (inst.kind == FamilyKind::COND1) cond12_units(rec, r, inst.p, inst.q, cache, precision_start);

    auto c = classify_family_instance(inst, cache, precision_start);
    if (inst.kind == FamilyKind::COND3) {
      h2_claim(rec, c, FieldLabel::L, 4, "4");
      rec.cited("capitulation counts of L = (4,4,4)", "cited from the genus theory argument; not recomputed");
      group_claim(rec, c, FieldLabel::L, "(2,2)");
    } else {
      const int m = c.m;
      const bool c1 = inst.kind == FamilyKind::COND1;
      h2_claim(rec, c, FieldLabel::Fi, 1, "1");
      h2_claim(rec, c, FieldLabel::K, mpz_class(1) << (m + 1), pow2(m + 1));
      h2_claim(rec, c, FieldLabel::Lstar, mpz_class(1) << m, pow2(m));
      h2_claim(rec, c, FieldLabel::L, 4, "4");
      h2_claim(rec, c, FieldLabel::F, 4, "4");
      // norm_reports: L*/L, L*/F, K/k, L/k, F/k.
      cap_claim(rec, c.norm_reports.at(0), 2);
      cap_claim(rec, c.norm_reports.at(1), c1 ? 4 : 2);
      for (int i = 2; i < 5; ++i) cap_claim(rec, c.norm_reports.at(i), 2);
      rec.cited("remaining capitulation counts of L and F = 2, 2",
                "kernels in the two non-genus unramified quadratic extensions are cited");
      rec.cited("Taussky A/B flags", "capitulation types A/B are cited, not recomputed");
      group_claim(rec, c, FieldLabel::L, "Q_" + std::to_string(m + 1));
      group_claim(rec, c, FieldLabel::F, (c1 ? "D_" : "Q_") + std::to_string(m + 1));
      auto gk = c.groups.find(FieldLabel::k);
      rec.add("|G_k| = " + pow2(m + 2), gk != c.groups.end() && gk->second.order_exponent == m + 2,
              gk == c.groups.end() ? "not classified" : "order 2^" + std::to_string(gk->second.order_exponent));
      group_claim(rec, c, FieldLabel::k, (c1 ? "S_" : "Q_") + std::to_string(m + 2));
      group_claim(rec, c, FieldLabel::K, "Z/" + mpz_class(mpz_class(1) << (m + 1)).get_str());
      group_claim(rec, c, FieldLabel::Lstar, "Z/" + mpz_class(mpz_class(1) << m).get_str());
      std::string degs;
      bool chain_ok = c.chain.size() == 8;
      for (std::size_t i = 0; i < c.chain.size(); ++i) {
        degs += (i ? " " : "") + c.chain[i].lower + "<" + c.chain[i].upper + ":" + c.chain[i].degree.get_str();
        const mpz_class want = i == 7 ? mpz_class(mpz_class(1) << (m - 1)) : mpz_class(2);
        chain_ok = chain_ok && c.chain[i].degree == want;
      }
      rec.add("tower edges 2, 2, 2, 2^(m-1)", chain_ok, degs);
    }
    std::string contra;
    for (const auto& s : c.contradictions) contra += (contra.empty() ? "" : "; ") + s;
    rec.add("no contradictions", c.contradictions.empty(), contra.empty() ? "none" : contra);
    r.tower = render_tower(c);
  } catch (const std::exception& e) {
    rec.add("pipeline", false, e.what());
  }
  r.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
  return r;
}

std::vector<VerificationReport> run_verify(const VerifyOptions& opts, InvariantCache& cache) {
  if (opts.bound < 3) throw std::invalid_argument("run_verify: bound must be at least 3");
  std::vector<FamilyInstance> todo;
  for (const auto& f : enumerate_families(opts.bound))
    if (opts.kinds.count(f.kind)) todo.push_back(f);
  std::vector<VerificationReport> out(todo.size());
  std::atomic<std::size_t> next{0};
  auto work = [&] {
    for (std::size_t i; (i = next++) < todo.size();) out[i] = verify_instance(todo[i], cache, opts.precision_start);
  };
  const int jobs = std::max(1, std::min<int>(opts.jobs, static_cast<int>(todo.size())));
  {
    std::vector<std::jthread> pool;
    for (int j = 1; j < jobs; ++j) pool.emplace_back(work);
    work();
  }
  return out;
}

namespace {

std::string md_escape(std::string s) {
  std::string o;
  for (char ch : s) {
    if (ch == '|') o += "\\|";
    else if (ch == '\n') o += "<br>";
    else o += ch;
  }
  return o;
}

std::string csv_field(const std::string& s) {
  if (s.find_first_of(",\"\n") == std::string::npos) return s;
  std::string o = "\"";
  for (char ch : s) o += ch == '"' ? std::string("\"\"") : std::string(1, ch);
  return o + "\"";
}

}  // namespace

std::string render_table(const ReportTable& t, Format f) {
  std::ostringstream os;
  if (f == Format::Json) {
    nlohmann::ordered_json j{{"title", t.title}, {"header", t.header}, {"rows", t.rows}};
    return j.dump(2) + "\n";
  }
  if (f == Format::Csv) {
    for (std::size_t i = 0; i < t.header.size(); ++i) os << (i ? "," : "") << csv_field(t.header[i]);
    os << "\n";
    for (const auto& r : t.rows) {
      for (std::size_t i = 0; i < r.size(); ++i) os << (i ? "," : "") << csv_field(r[i]);
      os << "\n";
    }
    return os.str();
  }
  os << "| ";
  for (const auto& h : t.header) os << md_escape(h) << " | ";
  os << "\n|";
  for (std::size_t i = 0; i < t.header.size(); ++i) os << "---|";
  os << "\n";
  for (const auto& r : t.rows) {
    os << "| ";
    for (const auto& c : r) os << md_escape(c) << " | ";
    os << "\n";
  }
  return os.str();
}

std::string render_capitulation_table() {
  ReportTable t{"Capitulation types", {"kernel orders and types", "G", "order"}, {}};
  for (const auto& row : capitulation_table()) {
    std::string order = row.exact_exponent ? "2^" + std::to_string(*row.exact_exponent)
                                           : "2^m, m >= " + std::to_string(row.min_exponent);
    t.rows.push_back({flags_str(row.counts, row.flags), row.label, order});
  }
  return render_table(t, Format::Markdown);
}

std::string render(const std::vector<VerificationReport>& reports, Format f, i64 bound) {
  int pass = 0, fail = 0, cited = 0, claims = 0;
  for (const auto& r : reports) {
    pass += r.count(Status::PASS);
    fail += r.count(Status::FAIL);
    cited += r.count(Status::SKIPPED_CITED);
    claims += static_cast<int>(r.claims.size());
  }
  std::ostringstream os;
  if (f == Format::Json) {
    nlohmann::ordered_json j;
    j["bound"] = bound;
    j["summary"] = {{"instances", reports.size()}, {"claims", claims}, {"PASS", pass}, {"FAIL", fail}, {"SKIPPED-cited", cited}};
    j["instances"] = nlohmann::ordered_json::array();
    for (const auto& r : reports) {
      nlohmann::ordered_json ji{{"id", r.id()}, {"kind", to_string(r.instance.kind)}, {"p", r.instance.p}};
      if (r.instance.kind != FamilyKind::COND3) ji["q"] = r.instance.q;
      ji["precision"] = r.precision;
      ji["claims"] = nlohmann::ordered_json::array();
      for (const auto& c : r.claims)
        ji["claims"].push_back({{"claim", c.anchor}, {"status", to_string(c.status)}, {"evidence", c.evidence}});
      ji["tables"] = nlohmann::ordered_json::array();
      for (const auto& t : r.tables) ji["tables"].push_back({{"title", t.title}, {"header", t.header}, {"rows", t.rows}});
      ji["tower"] = r.tower;
      j["instances"].push_back(ji);
    }
    return j.dump(2) + "\n";
  }
  if (f == Format::Csv) {
    os << "instance,claim,status,evidence\n";
    for (const auto& r : reports)
      for (const auto& c : r.claims)
        os << csv_field(r.id()) << "," << csv_field(c.anchor) << "," << to_string(c.status) << "," << csv_field(c.evidence)
           << "\n";
    return os.str();
  }
  os << "# Verification report\n\n";
  os << "bound " << bound << ": " << reports.size() << " instances, " << claims << " claims, " << pass << " PASS, " << fail
     << " FAIL, " << cited << " SKIPPED-cited\n\n";
  if (reports.empty()) return os.str();
  os << "## Capitulation types\n\n" << render_capitulation_table() << "\n";
  for (const auto& r : reports) {
    os << "## " << r.id() << "\n\n";
    os << "| claim | status | evidence |\n|---|---|---|\n";
    for (const auto& c : r.claims)
      os << "| " << md_escape(c.anchor) << " | " << to_string(c.status) << " | " << md_escape(c.evidence) << " |\n";
    for (const auto& t : r.tables) os << "\n### " << t.title << "\n\n" << render_table(t, Format::Markdown);
    if (!r.tower.empty()) os << "\n### Tower\n\n```\n" << r.tower << "```\n";
    os << "\n";
  }
  return os.str();
}

}  // namespace mqt
