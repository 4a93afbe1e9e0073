#include "mqt/cli.hpp"

#include <chrono>
#include <optional>
#include <sstream>

#include "CLI11.hpp"
#include "json.hpp"
#include "mqt/groups.hpp"
#include "mqt/report.hpp"
#include "mqt/tower.hpp"
#include "mqt/units.hpp"

namespace mqt {

namespace {

struct Options {
  i64 bound = 200;
  std::string kind = "all";
  std::optional<i64> p, q;
  long precision_start = 128;
  int jobs = 1;
  std::string format = "markdown";
  std::string cache_path;
  int m = 3;
  bool report = false;
};

std::set<FamilyKind> parse_kinds(const std::string& s) {
  if (s == "all") return {FamilyKind::COND1, FamilyKind::COND2, FamilyKind::COND3};
  std::set<FamilyKind> out;
  std::stringstream ss(s);
  for (std::string part; std::getline(ss, part, ',');) out.insert(parse_family_kind(part));
  return out;
}

// Tables plus an optional free-text block, in the requested format.
void emit(std::ostream& out, const std::vector<ReportTable>& tables, const std::string& text, Format f) {
  if (f == Format::Json) {
    nlohmann::ordered_json j;
    j["tables"] = nlohmann::ordered_json::array();
    for (const auto& t : tables) j["tables"].push_back({{"title", t.title}, {"header", t.header}, {"rows", t.rows}});
    if (!text.empty()) j["text"] = text;
    out << j.dump(2) << "\n";
    return;
  }
  for (std::size_t i = 0; i < tables.size(); ++i) {
    if (f == Format::Markdown) out << "## " << tables[i].title << "\n\n";
    else if (i) out << "\n";
    out << render_table(tables[i], f);
    if (f == Format::Markdown) out << "\n";
  }
  if (!text.empty() && f == Format::Markdown) out << "```\n" << text << "```\n";
}

FamilyInstance instance_from(const Options& o) {
  if (!o.p) throw std::invalid_argument("--p is required");
  auto kinds = parse_kinds(o.kind == "all" ? (o.q ? "1" : "3") : o.kind);
  if (kinds.size() != 1) throw std::invalid_argument("--kind must name one family");
  FamilyInstance inst{*kinds.begin(), *o.p, 0};
  if (inst.kind != FamilyKind::COND3) {
    if (!o.q) throw std::invalid_argument("--q is required for " + to_string(inst.kind));
    inst.q = *o.q;
  }
  if (!satisfies(inst)) throw std::invalid_argument(inst.id() + " does not satisfy its condition");
  return inst;
}

std::string eps_text(const QuadInvariants& inv) {
  if (!inv.eps) return "-";
  std::ostringstream os;
  os << "(" << inv.eps->a << " + " << inv.eps->b << "*sqrt(" << inv.d << "))";
  if (inv.eps->den != 1) os << "/" << inv.eps->den;
  return os.str();
}

int cmd_families(const Options& o, std::ostream& out, Format f) {
  auto kinds = parse_kinds(o.kind);
  ReportTable t{"Family members below " + std::to_string(o.bound), {"kind", "p", "q", "m"}, {}};
  for (const auto& inst : enumerate_families(o.bound)) {
    if (!kinds.count(inst.kind)) continue;
    const bool two = inst.kind != FamilyKind::COND3;
    t.rows.push_back({to_string(inst.kind), std::to_string(inst.p), two ? std::to_string(inst.q) : "-",
                      two ? std::to_string(m_exponent(OddPrime(inst.q))) : "-"});
  }
  emit(out, {t}, "", f);
  return 0;
}

int cmd_invariants(const Options& o, std::ostream& out, Format f, InvariantCache& cache) {
  if (!o.p) throw std::invalid_argument("--p is required");
  std::vector<i64> ds;
  if (o.q) {
    const i64 p = *o.p, q = *o.q;
    ds = {-1, 2, -2, p, -p, 2 * p, -2 * p, q, -q, 2 * q, -2 * q, p * q, -p * q, 2 * p * q, -2 * p * q};
  } else {
    ds = {*o.p};
  }
  ReportTable t{"Quadratic invariants", {"d", "disc", "eps", "N(eps)", "h", "h2"}, {}};
  for (i64 d : ds) {
    const auto& inv = cache.get(squarefree_kernel(d));
    t.rows.push_back({std::to_string(inv.d), std::to_string(inv.disc), eps_text(inv),
                      inv.eps_norm ? std::to_string(*inv.eps_norm) : "-", inv.h.get_str(), inv.h2.get_str()});
  }
  emit(out, {t}, "", f);
  return 0;
}

int cmd_units(const Options& o, std::ostream& out, Format f, InvariantCache& cache) {
  auto inst = instance_from(o);
  ReportTable t{"Unit groups for " + inst.id(), {"field", "w", "fundamental units", "q", "q (covolume)"}, {}};
  for (const auto& [label, fd] : fields_for_family(inst)) {
    auto k = fd.field();
    auto fsu = fundamental_units(k, cache);
    std::string gens;
    for (std::size_t i = 0; i < fsu.generators.size(); ++i) gens += (i ? ", " : "") + fsu.generators[i].describe();
    std::string qe = "-", qc = "-";
    if (k->degree() > 2) {
      auto rep = unit_index(fsu, cache, o.precision_start);
      qe = rep.exact.get_str();
      qc = rep.certified ? rep.certified->get_str() : "uncertified";
    }
    t.rows.push_back({fd.str(), std::to_string(fsu.torsion_order), gens, qe, qc});
  }
  emit(out, {t}, "", f);
  return 0;
}

int cmd_classify(const Options& o, std::ostream& out, Format f, InvariantCache& cache) {
  auto inst = instance_from(o);
  auto c = classify_family_instance(inst, cache, o.precision_start);
  ReportTable g{"2-class field tower groups for " + inst.id(), {"field", "G", "counts", "cited flags", "h2"}, {}};
  for (const auto& [label, tc] : c.groups) {
    std::string counts = "-", flags = "-";
    if (tc.cap_counts.size() == 3) {
      std::array<int, 3> a{tc.cap_counts[0], tc.cap_counts[1], tc.cap_counts[2]};
      counts = flags_str(a, {});
      flags = flags_str(a, tc.flags);
    }
    auto h = c.h2.find(label);
    g.rows.push_back({tc.base_field.str(), tc.name(), counts, flags, h == c.h2.end() ? "-" : h->second.get_str()});
  }
  ReportTable n{"Norm indices", {"extension", "[E : N(E)]", "capitulation count"}, {}};
  for (const auto& r : c.norm_reports)
    n.rows.push_back({to_string(r.upper.label) + "/" + to_string(r.lower.label), r.index.get_str(), std::to_string(r.cap_count)});
  ReportTable x{"Contradictions", {"detail"}, {}};
  for (const auto& s : c.contradictions) x.rows.push_back({s});
  std::vector<ReportTable> tables{g, n};
  if (!c.contradictions.empty()) tables.push_back(x);
  emit(out, tables, render_tower(c), f);
  return c.contradictions.empty() ? 0 : 1;
}

int cmd_group(const Options& o, std::ostream& out, Format f) {
  TwoGroup g(parse_group_kind(o.kind), o.m);
  ReportTable claims{"Structure claims for " + g.str(), {"claim", "status", "detail"}, {}};
  bool all = true;
  for (const auto& c : verify_structure(g)) {
    all = all && c.holds;
    claims.rows.push_back({c.name, c.holds ? "PASS" : "FAIL", c.detail});
  }
  std::vector<ReportTable> tables{claims};
  if (o.report) {
    ReportTable s{"Index 2 subgroups of " + g.str(), {"subgroup", "order", "exponent", "involutions", "type", "abelianization"}, {}};
    for (const auto& h : index_two_subgroups(g)) {
      std::string ab = "(";
      for (std::size_t i = 0; i < h.abelianization.size(); ++i) ab += (i ? "," : "") + std::to_string(h.abelianization[i]);
      s.rows.push_back({h.name, std::to_string(h.fp.order), std::to_string(h.fp.exponent),
                        std::to_string(h.fp.involutions), to_string(h.fp.tag), ab + ")"});
    }
    auto fp = fingerprint(g, g.elements());
    ReportTable w{"Whole group", {"order", "exponent", "involutions", "type", "G'", "G/G'"}, {}};
    std::string ab = "(";
    auto at = abelianization_type(g);
    for (std::size_t i = 0; i < at.size(); ++i) ab += (i ? "," : "") + std::to_string(at[i]);
    w.rows.push_back({std::to_string(fp.order), std::to_string(fp.exponent), std::to_string(fp.involutions),
                      to_string(fp.tag), std::to_string(commutator_subgroup(g).size()), ab + ")"});
    tables.push_back(w);
    tables.push_back(s);
  }
  emit(out, tables, "", f);
  return all ? 0 : 1;
}

int cmd_verify(const Options& o, std::ostream& out, std::ostream& err, Format f, InvariantCache& cache) {
  VerifyOptions vo{o.bound, parse_kinds(o.kind), o.jobs, o.precision_start};
  const auto t0 = std::chrono::steady_clock::now();
  auto reports = run_verify(vo, cache);
  const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
  out << render(reports, f, o.bound);
  // Timing goes to stderr so that reports stay byte-identical.
  err << "verified " << reports.size() << " instances in " << secs << " s\n";
  for (const auto& r : reports)
    if (r.failed()) return 1;
  return 0;
}

}  // namespace

int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"Units, 2-class groups and 2-class field towers of multiquadratic fields"};
  app.require_subcommand(1);
  Options o;
  auto common = [&](CLI::App* s) {
    s->add_option("--format", o.format, "markdown, json or csv")->check(CLI::IsMember({"markdown", "md", "json", "csv"}));
    s->add_option("--cache-path", o.cache_path, "file backing the quadratic invariant cache");
    s->add_option("--precision-start", o.precision_start, "starting precision in bits")->check(CLI::Range(32, 1 << 20));
  };
  auto* fam = app.add_subcommand("families", "list family members below --bound");
  fam->add_option("--bound", o.bound)->check(CLI::Range(3, 1 << 20));
  fam->add_option("--kind", o.kind, "1, 2, 3, COND1.. or all");
  auto* inv = app.add_subcommand("invariants", "quadratic invariants of d = --p, or of the fifteen fields of (p, q)");
  inv->add_option("--p", o.p);
  inv->add_option("--q", o.q);
  auto* uni = app.add_subcommand("units", "fundamental units and unit indices of the family fields");
  auto* cls = app.add_subcommand("classify", "tower groups of one family member");
  for (auto* s : {uni, cls}) {
    s->add_option("--kind", o.kind, "1, 2 or 3 (default: 1 with --q, else 3)");
    s->add_option("--p", o.p)->required();
    s->add_option("--q", o.q);
  }
  auto* grp = app.add_subcommand("group", "structure claims for Q_m, D_m, S_m or (2,2)");
  grp->add_option("--kind", o.kind, "A, Q, D or S")->required();
  grp->add_option("--m", o.m, "order is 2^m")->required();
  grp->add_flag("--report", o.report, "dump the structure table");
  auto* ver = app.add_subcommand("verify", "run every claim for every family member below --bound");
  ver->add_option("--bound", o.bound)->check(CLI::Range(3, 1 << 20));
  ver->add_option("--kind", o.kind, "1, 2, 3 (comma separated) or all");
  ver->add_option("--jobs", o.jobs)->check(CLI::Range(1, 256));
  for (auto* s : {fam, inv, uni, cls, grp, ver}) common(s);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    return app.exit(e, out, err) == 0 ? 0 : 2;
  }
  try {
    const Format f = parse_format(o.format);
    std::optional<InvariantCache> backed;
    InvariantCache plain;
    if (!o.cache_path.empty()) backed.emplace(o.cache_path);
    InvariantCache& cache = backed ? *backed : plain;
    int rc = 0;
    if (fam->parsed()) rc = cmd_families(o, out, f);
    else if (inv->parsed()) rc = cmd_invariants(o, out, f, cache);
    else if (uni->parsed()) rc = cmd_units(o, out, f, cache);
    else if (cls->parsed()) rc = cmd_classify(o, out, f, cache);
    else if (grp->parsed()) rc = cmd_group(o, out, f);
    else if (ver->parsed()) rc = cmd_verify(o, out, err, f, cache);
    if (backed) backed->flush();
    return rc;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return 2;
  }
}

}  // namespace mqt
