#pragma once

// Vojtáš triples (A-, A+, A): finite triples with exact norms and morphism
// search, and coded triples over the representations in values.hpp with
// probe-relative morphism checking.

#include <bit>
#include <functional>
#include <map>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "tukey/errors.hpp"
#include "tukey/values.hpp"

namespace tukey {

// ---------------------------------------------------------------------------
// Finite triples

class FiniteTriple {
 public:
  FiniteTriple(std::vector<std::string> minus, std::vector<std::string> plus, std::vector<std::vector<bool>> relation)
      : minus_(std::move(minus)), plus_(std::move(plus)), relation_(std::move(relation)) {
    if (relation_.size() != minus_.size()) throw ContractError("FiniteTriple: relation has wrong number of rows");
    for (const auto& row : relation_)
      if (row.size() != plus_.size()) throw ContractError("FiniteTriple: relation has wrong number of columns");
    if (std::set<std::string>(minus_.begin(), minus_.end()).size() != minus_.size() ||
        std::set<std::string>(plus_.begin(), plus_.end()).size() != plus_.size()) {
      throw ContractError("FiniteTriple: labels must be unique");
    }
  }

  /// Triple on labels 0..m-1 and 0..p-1 with the relation given as pairs.
  static FiniteTriple from_pairs(std::size_t m, std::size_t p, const std::vector<std::pair<std::size_t, std::size_t>>& pairs) {
    std::vector<std::string> minus, plus;
    for (std::size_t i = 0; i < m; ++i) minus.push_back("x" + std::to_string(i));
    for (std::size_t j = 0; j < p; ++j) plus.push_back("y" + std::to_string(j));
    std::vector<std::vector<bool>> rel(m, std::vector<bool>(p, false));
    for (auto [i, j] : pairs) {
      if (i >= m || j >= p) throw ContractError("FiniteTriple: pair out of range");
      rel[i][j] = true;
    }
    return FiniteTriple(std::move(minus), std::move(plus), std::move(rel));
  }

  const std::vector<std::string>& minus() const { return minus_; }
  const std::vector<std::string>& plus() const { return plus_; }
  const std::vector<std::vector<bool>>& relation() const { return relation_; }
  bool rel(std::size_t x, std::size_t y) const { return relation_[x][y]; }

  std::size_t plus_index(const std::string& label) const {
    auto it = std::find(plus_.begin(), plus_.end(), label);
    if (it == plus_.end()) throw ContractError("unknown plus label '" + label + "'");
    return it - plus_.begin();
  }

  friend bool operator==(const FiniteTriple&, const FiniteTriple&) = default;

 private:
  std::vector<std::string> minus_, plus_;
  std::vector<std::vector<bool>> relation_;
};

/// (A+, A-, x Ă y iff not y A x).
inline FiniteTriple dual(const FiniteTriple& t) {
  std::vector<std::vector<bool>> rel(t.plus().size(), std::vector<bool>(t.minus().size()));
  for (std::size_t y = 0; y < t.plus().size(); ++y)
    for (std::size_t x = 0; x < t.minus().size(); ++x) rel[y][x] = !t.rel(x, y);
  return FiniteTriple(t.plus(), t.minus(), std::move(rel));
}

using PlusSubset = std::vector<std::size_t>;
using SubsetPredicate = std::function<bool(const PlusSubset&)>;

inline bool is_dominating(const FiniteTriple& t, const PlusSubset& family) {
  for (std::size_t x = 0; x < t.minus().size(); ++x) {
    bool hit = false;
    for (auto y : family) hit = hit || t.rel(x, y);
    if (!hit) return false;
  }
  return true;
}

inline constexpr std::size_t kFiniteNormBound = 20;

/// Least size of a dominating family satisfying `prop`; nullopt stands for
/// infinity (no such family). Exhaustive by increasing size.
inline std::optional<Nat> finite_norm(const FiniteTriple& t, const SubsetPredicate& prop = {},
                                      std::size_t bound = kFiniteNormBound) {
  const std::size_t p = t.plus().size();
  if (p > bound || p > 30) throw ResourceLimit("finite_norm: |A+| = " + std::to_string(p) + " exceeds bound " + std::to_string(bound));
  for (std::size_t k = 0; k <= p; ++k) {
    if (k == 0) {
      if (t.minus().empty() && (!prop || prop({}))) return 0;
      continue;
    }
    std::uint32_t subset = (std::uint32_t{1} << k) - 1;
    const std::uint32_t limit = std::uint32_t{1} << p;
    while (subset < limit) {
      PlusSubset family;
      for (std::uint32_t rest = subset; rest; rest &= rest - 1) family.push_back(std::countr_zero(rest));
      if (is_dominating(t, family) && (!prop || prop(family))) return k;
      const std::uint32_t low = subset & -subset;
      const std::uint32_t ripple = subset + low;
      subset = (((ripple ^ subset) >> 2) / low) | ripple;
    }
  }
  return std::nullopt;
}

/// phi : B- -> A-, psi : A+ -> B+, as index maps.
struct FiniteMorphism {
  std::vector<std::size_t> phi;
  std::vector<std::size_t> psi;
  friend bool operator==(const FiniteMorphism&, const FiniteMorphism&) = default;
};

inline bool is_finite_morphism(const FiniteTriple& a, const FiniteTriple& b, const FiniteMorphism& m) {
  if (m.phi.size() != b.minus().size() || m.psi.size() != a.plus().size()) return false;
  for (std::size_t x = 0; x < b.minus().size(); ++x)
    for (std::size_t y = 0; y < a.plus().size(); ++y)
      if (a.rel(m.phi[x], y) && !b.rel(x, m.psi[y])) return false;
  return true;
}

inline constexpr Nat kMorphismSearchBound = Nat{1} << 22;

/// Every morphism from a to b, by exhaustive search.
inline std::vector<FiniteMorphism> find_finite_morphisms(const FiniteTriple& a, const FiniteTriple& b,
                                                         Nat bound = kMorphismSearchBound) {
  const std::size_t bm = b.minus().size(), ap = a.plus().size();
  const std::size_t am = a.minus().size(), bp = b.plus().size();
  long double space = 1;
  for (std::size_t i = 0; i < bm; ++i) space *= am;
  for (std::size_t i = 0; i < ap; ++i) space *= bp;
  if (space > static_cast<long double>(bound)) throw ResourceLimit("find_finite_morphisms: search space too large");
  std::vector<FiniteMorphism> out;
  if ((bm && !am) || (ap && !bp)) return out;
  FiniteMorphism m{std::vector<std::size_t>(bm, 0), std::vector<std::size_t>(ap, 0)};
  auto bump = [](std::vector<std::size_t>& v, std::size_t radix) {
    std::size_t i = 0;
    while (i < v.size() && ++v[i] == radix) v[i++] = 0;
    return i < v.size();
  };
  do {
    do {
      if (is_finite_morphism(a, b, m)) out.push_back(m);
    } while (bump(m.psi, bp));
  } while (bump(m.phi, am));
  return out;
}

// ---------------------------------------------------------------------------
// Coded triples

using Family = std::vector<Value>;

struct Property {
  std::string name;
  std::function<bool(const Family&)> holds;
  bool downward_closed = true;
  std::string note;
};

struct CodedTriple {
  std::string id;
  std::string display;
  Kind minus;
  Kind plus;
  std::string relation_name;
  std::function<bool(const Value&, const Value&)> relation;
  std::optional<Property> property;

  bool simple() const { return !property.has_value(); }
};

inline CodedTriple dual(const CodedTriple& t) {
  if (!t.simple()) throw ContractError("dual: triple '" + t.id + "' carries property '" + t.property->name + "'");
  auto rel = t.relation;
  const bool undo = t.id.size() > 2 && t.id.ends_with("^d");
  return {undo ? t.id.substr(0, t.id.size() - 2) : t.id + "^d",
          undo ? t.display.substr(0, t.display.size() - 2) : t.display + "^d",
          t.plus,
          t.minus,
          "not (y " + t.relation_name + " x)",
          [rel](const Value& x, const Value& y) { return !rel(y, x); },
          std::nullopt};
}

/// Does every probe have a partner in F? Relative to the probe list.
inline bool is_dominating(const Family& family, const CodedTriple& t, const std::vector<Value>& probes) {
  if (probes.empty()) throw ContractError("is_dominating: empty probe set");
  for (const auto& x : probes) {
    bool hit = false;
    for (const auto& y : family) {
      if (t.relation(x, y)) {
        hit = true;
        break;
      }
    }
    if (!hit) return false;
  }
  return true;
}

/// phi : B- -> A-, psi : A+ -> B+.
struct MorphismCandidate {
  std::string name;
  Kind phi_from, phi_to;
  Kind psi_from, psi_to;
  std::function<Value(const Value&)> phi;
  std::function<Value(const Value&)> psi;
};

inline MorphismCandidate identity_candidate(const Kind& minus, const Kind& plus) {
  auto id = [](const Value& v) { return v; };
  return {"identity", minus, minus, plus, plus, id, id};
}

struct ProbeSuite {
  std::vector<Value> b_minus;          // inputs to phi
  std::vector<Value> a_plus;           // inputs to psi
  std::vector<Family> families;        // A+ families for the property clause
};

struct Violation {
  char clause = 'b';  // 'a' property, 'b' relation, 'k' output of the wrong kind
  std::string detail;
  std::vector<std::string> inputs;
};

struct MorphismReport {
  std::vector<Violation> violations;
  std::size_t pairs_checked = 0;
  std::size_t families_checked = 0;

  bool consistent() const { return violations.empty(); }
  std::string summary() const {
    if (consistent()) {
      return "consistent on probes (" + std::to_string(pairs_checked) + " pairs, " + std::to_string(families_checked) +
             " families)";
    }
    return std::to_string(violations.size()) + " violation(s)";
  }
};

namespace detail {

inline Value evaluate(const std::function<Value(const Value&)>& fn, const char* which, const Value& in) {
  try {
    return fn(in);
  } catch (const BudgetExhausted& e) {
    throw BudgetExhausted(std::string(which) + " on " + to_literal(in) + ": " + e.what());
  }
}

inline std::string family_literal(const Family& f) {
  std::string out = "{";
  for (std::size_t i = 0; i < f.size(); ++i) out += (i ? ", " : "") + to_literal(f[i]);
  return out + "}";
}

}  // namespace detail

/// Lists every violation of the morphism conditions on the supplied probes:
/// (a) P(F) implies Q(psi(F)) on each family, (b) phi(x) A y implies
/// x B psi(y) on each probe pair. An empty report is not a proof.
inline MorphismReport check_morphism(const MorphismCandidate& c, const CodedTriple& a, const CodedTriple& b,
                                     const ProbeSuite& probes) {
  if (!(c.phi_from == b.minus) || !(c.phi_to == a.minus) || !(c.psi_from == a.plus) || !(c.psi_to == b.plus)) {
    throw ContractError("check_morphism: candidate '" + c.name + "' does not match " + a.id + " -> " + b.id);
  }
  for (const auto& x : probes.b_minus)
    if (!conforms(b.minus, x)) throw ContractError("probe " + to_literal(x) + " is not of kind " + b.minus.name());
  for (const auto& y : probes.a_plus)
    if (!conforms(a.plus, y)) throw ContractError("probe " + to_literal(y) + " is not of kind " + a.plus.name());

  MorphismReport report;
  std::vector<std::optional<Value>> phis, psis;
  for (const auto& x : probes.b_minus) {
    Value out = detail::evaluate(c.phi, "phi", x);
    if (!conforms(a.minus, out)) {
      report.violations.push_back({'k', "phi output is not of kind " + a.minus.name(), {to_literal(x), to_literal(out)}});
      phis.emplace_back();
    } else {
      phis.emplace_back(std::move(out));
    }
  }
  for (const auto& y : probes.a_plus) {
    Value out = detail::evaluate(c.psi, "psi", y);
    if (!conforms(b.plus, out)) {
      report.violations.push_back({'k', "psi output is not of kind " + b.plus.name(), {to_literal(y), to_literal(out)}});
      psis.emplace_back();
    } else {
      psis.emplace_back(std::move(out));
    }
  }
  for (std::size_t i = 0; i < probes.b_minus.size(); ++i)
    for (std::size_t j = 0; j < probes.a_plus.size(); ++j) {
      if (!phis[i] || !psis[j]) continue;
      ++report.pairs_checked;
      if (a.relation(*phis[i], probes.a_plus[j]) && !b.relation(probes.b_minus[i], *psis[j])) {
        report.violations.push_back({'b',
                                     "phi(x) " + a.relation_name + " y but not x " + b.relation_name + " psi(y)",
                                     {to_literal(probes.b_minus[i]), to_literal(probes.a_plus[j]), to_literal(*phis[i]),
                                      to_literal(*psis[j])}});
      }
    }
  if (b.property) {
    for (const auto& fam : probes.families) {
      for (const auto& y : fam)
        if (!conforms(a.plus, y)) throw ContractError("family member " + to_literal(y) + " is not of kind " + a.plus.name());
      if (a.property && !a.property->holds(fam)) continue;
      ++report.families_checked;
      Family image;
      for (const auto& y : fam) image.push_back(detail::evaluate(c.psi, "psi", y));
      if (!b.property->holds(image)) {
        report.violations.push_back({'a',
                                     (a.property ? a.property->name + " family" : std::string("family")) +
                                         " mapped to a family that is not " + b.property->name,
                                     {detail::family_literal(fam), detail::family_literal(image)}});
      }
    }
  }
  return report;
}

/// c1 : A -> B, c2 : B -> C gives (phi1 . phi2, psi2 . psi1) : A -> C.
inline MorphismCandidate compose(const MorphismCandidate& c1, const MorphismCandidate& c2) {
  if (!(c2.phi_to == c1.phi_from) || !(c1.psi_to == c2.psi_from)) {
    throw ContractError("compose: kinds do not match (" + c1.name + ", " + c2.name + ")");
  }
  auto phi1 = c1.phi, phi2 = c2.phi, psi1 = c1.psi, psi2 = c2.psi;
  return {c2.name + " . " + c1.name,
          c2.phi_from,
          c1.phi_to,
          c1.psi_from,
          c2.psi_to,
          [phi1, phi2](const Value& v) { return phi1(phi2(v)); },
          [psi1, psi2](const Value& v) { return psi2(psi1(v)); }};
}

/// (phi, psi) : A -> B gives (psi, phi) : B^d -> A^d.
inline MorphismCandidate dual_morphism(const MorphismCandidate& c) {
  return {"dual(" + c.name + ")", c.psi_from, c.psi_to, c.phi_from, c.phi_to, c.psi, c.phi};
}

inline MorphismCandidate dual_morphism(const MorphismCandidate& c, const CodedTriple& a, const CodedTriple& b) {
  if (!a.simple() || !b.simple()) throw ContractError("dual_morphism: " + a.id + " and " + b.id + " must be simple");
  return dual_morphism(c);
}

}  // namespace tukey
