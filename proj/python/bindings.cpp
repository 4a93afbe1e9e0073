#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <sstream>

#include "mqt/cli.hpp"
#include "mqt/groups.hpp"
#include "mqt/report.hpp"
#include "mqt/tower.hpp"

namespace py = pybind11;
using namespace mqt;

namespace {

py::int_ to_py(const mpz_class& z) {
  return py::reinterpret_steal<py::int_>(PyLong_FromString(z.get_str().c_str(), nullptr, 10));
}

InvariantCache& shared_cache() {
  static InvariantCache c;
  return c;
}

py::dict invariants(i64 d) {
  auto inv = shared_cache().get(d);
  py::dict out;
  out["d"] = inv.d;
  out["disc"] = inv.disc;
  out["h"] = to_py(inv.h);
  out["h2"] = to_py(inv.h2);
  if (inv.eps) {
    out["eps"] = py::make_tuple(to_py(inv.eps->a), to_py(inv.eps->b), inv.eps->den);
    out["eps_norm"] = *inv.eps_norm;
  }
  return out;
}

py::dict classify(const std::string& kind, i64 p, i64 q) {
  auto c = classify_family_instance({parse_family_kind(kind), p, q}, shared_cache());
  py::dict groups, h2;
  for (const auto& [l, g] : c.groups) groups[py::str(to_string(l))] = g.name();
  for (const auto& [l, v] : c.h2) h2[py::str(to_string(l))] = to_py(v);
  py::dict out;
  out["m"] = c.m;
  out["groups"] = groups;
  out["h2"] = h2;
  out["contradictions"] = c.contradictions;
  return out;
}

std::string verify(i64 bound, const std::string& format, int jobs) {
  VerifyOptions o;
  o.bound = bound;
  o.jobs = jobs;
  py::gil_scoped_release release;
  auto reports = run_verify(o, shared_cache());
  return render(reports, parse_format(format), bound);
}

py::tuple cli(const std::vector<std::string>& args) {
  std::vector<const char*> argv{"mqtower"};
  for (const auto& a : args) argv.push_back(a.c_str());
  std::ostringstream out, err;
  const int rc = run_cli(static_cast<int>(argv.size()), argv.data(), out, err);
  return py::make_tuple(rc, out.str(), err.str());
}

}  // namespace

PYBIND11_MODULE(_mqtower, m) {
  m.doc() = "Units, 2-class groups and 2-class towers of multiquadratic fields";

  m.def("families", [](i64 bound) {
    std::vector<py::tuple> out;
    for (const auto& f : enumerate_families(bound)) out.push_back(py::make_tuple(to_string(f.kind), f.p, f.q));
    return out;
  }, py::arg("bound"));
  m.def("invariants", &invariants, py::arg("d"), "Discriminant, fundamental unit, h and h2 of Q(sqrt d).");
  m.def("m_exponent", [](i64 q) { return m_exponent(OddPrime(q)); }, py::arg("q"));
  m.def("classify", &classify, py::arg("kind"), py::arg("p"), py::arg("q") = 0);
  m.def("group_claims", [](const std::string& kind, int mm) {
    std::vector<py::tuple> out;
    for (const auto& c : verify_structure(TwoGroup(parse_group_kind(kind), mm)))
      out.push_back(py::make_tuple(c.name, c.holds, c.detail));
    return out;
  }, py::arg("kind"), py::arg("m"));
  m.def("verify", &verify, py::arg("bound") = 200, py::arg("format") = "json", py::arg("jobs") = 1);
  m.def("cli", &cli, py::arg("args"), "Runs the command line; returns (exit code, stdout, stderr).");

  py::register_exception<TowerContradiction>(m, "TowerContradiction", PyExc_RuntimeError);
}
