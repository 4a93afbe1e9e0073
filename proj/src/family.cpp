#include "mqt/family.hpp"

#include <algorithm>
#include <sstream>

namespace mqt {

std::string to_string(FamilyKind k) {
  switch (k) {
    case FamilyKind::COND1: return "COND1";
    case FamilyKind::COND2: return "COND2";
    case FamilyKind::COND3: return "COND3";
  }
  return "?";
}

FamilyKind parse_family_kind(const std::string& s) {
  if (s == "1" || s == "COND1") return FamilyKind::COND1;
  if (s == "2" || s == "COND2") return FamilyKind::COND2;
  if (s == "3" || s == "COND3") return FamilyKind::COND3;
  throw std::invalid_argument("unknown family kind: " + s);
}

std::string FamilyInstance::id() const {
  std::ostringstream os;
  os << to_string(kind) << "(" << p;
  if (kind != FamilyKind::COND3) os << "," << q;
  os << ")";
  return os.str();
}

std::string to_string(FieldLabel l) {
  switch (l) {
    case FieldLabel::L: return "L";
    case FieldLabel::Lstar: return "Lstar";
    case FieldLabel::F: return "F";
    case FieldLabel::K: return "K";
    case FieldLabel::k: return "k";
    case FieldLabel::Kplus: return "Kplus";
    case FieldLabel::KK: return "KK";
    case FieldLabel::Fi: return "Fi";
  }
  return "?";
}

MQField::Ptr FieldDescriptor::field() const {
  return MQField::make(std::vector<i64>(radicands.begin(), radicands.end()));
}

bool FieldDescriptor::same_field_as(const FieldDescriptor& o) const {
  std::vector<i64> a(radicands.begin(), radicands.end());
  std::vector<i64> b(o.radicands.begin(), o.radicands.end());
  std::vector<i64> ab = a;
  ab.insert(ab.end(), b.begin(), b.end());
  int r = square_class_rank(ab);
  return r == square_class_rank(a) && r == square_class_rank(b);
}

std::string FieldDescriptor::str() const {
  std::ostringstream os;
  os << to_string(label) << " = Q(";
  for (std::size_t i = 0; i < radicands.size(); ++i) os << (i ? ", " : "") << "sqrt(" << radicands[i].value() << ")";
  os << ")";
  return os.str();
}

static void require_distinct(OddPrime p, OddPrime q) {
  if (p.value() == q.value()) throw std::invalid_argument("family condition: p == q");
}

static bool common_symbols(i64 p, i64 q) {
  return jacobi(2, p) == -1 && jacobi(2, q) == 1 && jacobi(p, q) == -1;
}

bool check_condition_1(OddPrime p, OddPrime q) {
  require_distinct(p, q);
  return p % 4 == 1 && q % 4 == 3 && common_symbols(p, q);
}

bool check_condition_2(OddPrime p, OddPrime q) {
  require_distinct(p, q);
  return p % 4 == 3 && q % 4 == 3 && common_symbols(p, q);
}

bool check_condition_3(OddPrime pp) {
  return pp % 16 == 1 && quartic_2_over_p(pp) != quartic_p_over_2(pp);
}

bool satisfies(const FamilyInstance& inst) {
  switch (inst.kind) {
    case FamilyKind::COND1: return check_condition_1(OddPrime(inst.p), OddPrime(inst.q));
    case FamilyKind::COND2: return check_condition_2(OddPrime(inst.p), OddPrime(inst.q));
    case FamilyKind::COND3: return inst.q == 0 && check_condition_3(OddPrime(inst.p));
  }
  return false;
}

std::vector<FamilyInstance> enumerate_families(i64 bound) {
  std::vector<FamilyInstance> out;
  auto primes = primes_in(3, bound);
  for (i64 p : primes) {
    for (i64 q : primes) {
      if (p == q) continue;
      if (check_condition_1(OddPrime(p), OddPrime(q))) out.push_back({FamilyKind::COND1, p, q});
      if (check_condition_2(OddPrime(p), OddPrime(q))) out.push_back({FamilyKind::COND2, p, q});
    }
    if (check_condition_3(OddPrime(p))) out.push_back({FamilyKind::COND3, p, 0});
  }
  std::sort(out.begin(), out.end());
  return out;
}

std::map<FieldLabel, FieldDescriptor> fields_for_family(const FamilyInstance& inst) {
  if (!satisfies(inst)) throw std::invalid_argument("fields_for_family: " + inst.id() + " fails its condition");
  auto desc = [](FieldLabel l, std::initializer_list<i64> ds) {
    FieldDescriptor f{{}, l};
    for (i64 d : ds) f.radicands.emplace_back(squarefree_kernel(d));
    return f;
  };
  std::map<FieldLabel, FieldDescriptor> m;
  const i64 p = inst.p, q = inst.q;
  if (inst.kind == FamilyKind::COND3) {
    m.emplace(FieldLabel::L, desc(FieldLabel::L, {2, p, -1}));
    return m;
  }
  m.emplace(FieldLabel::L, desc(FieldLabel::L, {2, p * q, -1}));
  m.emplace(FieldLabel::Lstar, desc(FieldLabel::Lstar, {2, p, q, -1}));
  m.emplace(FieldLabel::Kplus, desc(FieldLabel::Kplus, {2, p, q}));
  m.emplace(FieldLabel::KK, desc(FieldLabel::KK, {2, p, q, -1}));
  m.emplace(FieldLabel::Fi, desc(FieldLabel::Fi, {p, q, -1}));
  if (inst.kind == FamilyKind::COND1) {
    m.emplace(FieldLabel::F, desc(FieldLabel::F, {2 * p, 2 * q, -2}));
    m.emplace(FieldLabel::K, desc(FieldLabel::K, {p, q, -2}));
    m.emplace(FieldLabel::k, desc(FieldLabel::k, {-2, p * q}));
  } else {
    m.emplace(FieldLabel::F, desc(FieldLabel::F, {p, 2 * q, -2}));
    m.emplace(FieldLabel::K, desc(FieldLabel::K, {q, 2 * p, -2}));
    m.emplace(FieldLabel::k, desc(FieldLabel::k, {-2, 2 * p * q}));
  }
  return m;
}

}  // namespace mqt
