#pragma once

// Van Douwen's diagram, classically and up to Borel Tukey morphisms, and
// the Hasse diagram of the (n,m)-splitting triples.

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "tukey/catalog.hpp"
#include "tukey/splitting_order.hpp"

namespace tukey::diagram {

enum class Verdict { bt_morphism, no_bt_morphism, no_morphism_at_all, open };

inline std::string to_string(Verdict v) {
  switch (v) {
    case Verdict::bt_morphism:
      return "BT-morphism";
    case Verdict::no_bt_morphism:
      return "no-BT-morphism";
    case Verdict::no_morphism_at_all:
      return "no-morphism-at-all";
    case Verdict::open:
      return "open";
  }
  return "?";
}

enum class Basis { builtin, forcing_argument, gadget, open };

inline std::string to_string(Basis b) {
  switch (b) {
    case Basis::builtin:
      return "builtin";
    case Basis::forcing_argument:
      return "forcing-argument";
    case Basis::gadget:
      return "gadget";
    case Basis::open:
      return "open";
  }
  return "?";
}

struct EdgeRecord {
  std::string source, target;
  Verdict verdict;
  Basis basis;
  std::string provenance;
  bool in_figure = true;
  std::optional<std::string> morphism = std::nullopt;  // builtin candidate name
};

enum class DiagramKind { classical, borel };

struct Diagram {
  std::string kind;
  std::vector<std::string> nodes;
  std::vector<EdgeRecord> edges;   // drawn arrows
  std::vector<EdgeRecord> absent;  // annotated non-edges
};

inline const EdgeRecord* find_edge(const std::vector<EdgeRecord>& edges, const std::string& s, const std::string& t) {
  for (const auto& e : edges)
    if (e.source == s && e.target == t) return &e;
  return nullptr;
}

namespace detail {

inline EdgeRecord positive(const std::string& s, const std::string& t, const std::string& why, bool in_figure = true) {
  return {s, t, Verdict::bt_morphism, Basis::builtin, why, in_figure, s + "->" + t};
}

}  // namespace detail

inline Diagram vd_diagram(DiagramKind kind) {
  using detail::positive;
  const EdgeRecord i_d{"i", "d", Verdict::no_bt_morphism, Basis::forcing_argument,
                       "a Borel morphism would give r >=_BT d, and r >= d fails in the Miller model"};
  const EdgeRecord a_b{"a", "b", Verdict::no_morphism_at_all, Basis::gadget,
                       "the odd/even gadget refutes every pair of maps"};
  const EdgeRecord s_p{"s", "p", Verdict::no_bt_morphism, Basis::forcing_argument,
                       "adding a pseudo-intersection by Mathias forcing keeps the ground model splitting"};
  const EdgeRecord b_p = positive("b", "p", "continuous psi into a centered family with bounded traces");

  Diagram out;
  out.nodes = {"p", "s", "r", "b", "d", "a", "i", "u"};
  if (kind == DiagramKind::classical) {
    out.kind = "classical";
    out.edges = {i_d,
                 positive("i", "r", "identity maps"),
                 positive("u", "r", "identity maps"),
                 positive("d", "s", "classical proof read as a morphism"),
                 positive("d", "b", "dominating families are unbounded"),
                 positive("r", "b", "dual to d >= s"),
                 a_b,
                 s_p,
                 b_p};
    return out;
  }
  out.kind = "borel";
  out.nodes.push_back("t");
  out.edges = {positive("i", "r", "identity maps"),
               positive("u", "r", "identity maps"),
               positive("d", "s", "classical proof read as a morphism"),
               positive("d", "b", "dominating families are unbounded"),
               positive("r", "b", "dual to d >= s"),
               b_p,
               positive("a", "p", "psi = complement, phi = identity"),
               positive("t", "p", "same triple with a stronger property", false)};
  out.absent = {i_d, a_b, s_p,
                {"p", "t", Verdict::no_bt_morphism, Basis::gadget,
                 "three sets meeting pairwise but not jointly refute every pair of maps", false},
                {"b", "t", Verdict::open, Basis::open, "whether the b -> p construction improves to t is open", false},
                {"t", "b", Verdict::open, Basis::open, "not known", false}};
  for (auto& e : out.absent) e.in_figure = false;
  const char* incomparable = "i, u and a are BT-incomparable: each direction would give a forcing-violable inequality with r";
  for (auto [s, t] : std::vector<std::pair<const char*, const char*>>{{"i", "u"}, {"u", "i"}, {"i", "a"}, {"a", "i"}, {"u", "a"}, {"a", "u"}})
    out.absent.push_back({s, t, Verdict::no_bt_morphism, Basis::forcing_argument, incomparable, false});
  return out;
}

/// Hasse diagram of the (n,m)-splitting triples with n <= box.
inline Diagram splitting_diagram(Nat box) {
  if (box < 1) throw ContractError("splitting_diagram: box must be >= 1");
  using splitting::SplitSpec;
  std::vector<SplitSpec> specs;
  for (Nat n = 1; n <= box; ++n)
    for (Nat m = 1; m <= n; ++m) specs.push_back({n, m});
  auto id = [](const SplitSpec& s) { return "s_" + std::to_string(s.n) + "," + std::to_string(s.m); };
  auto arrow = [](const SplitSpec& a, const SplitSpec& b) { return splitting::bt_edge(a, b).is_morphism(); };
  Diagram out;
  out.kind = "splitting";
  for (const auto& s : specs) out.nodes.push_back(id(s));
  for (const auto& a : specs)
    for (const auto& b : specs) {
      if (a == b || !arrow(a, b)) continue;
      // skip arrows implied by a path through a third node not equivalent to either end
      bool implied = false;
      for (const auto& c : specs) {
        if (c == a || c == b) continue;
        if (arrow(a, c) && arrow(c, b) && !(arrow(c, a) || arrow(b, c))) {
          implied = true;
          break;
        }
      }
      if (!implied) {
        out.edges.push_back({id(a), id(b), Verdict::bt_morphism, Basis::builtin,
                             splitting::describe(splitting::bt_edge(a, b)), true, std::nullopt});
      }
    }
  return out;
}

inline std::string to_dot(const Diagram& d) {
  std::string out = "digraph " + d.kind + " {\n";
  for (const auto& n : d.nodes) out += "  \"" + n + "\";\n";
  for (const auto& e : d.edges) {
    out += "  \"" + e.source + "\" -> \"" + e.target + "\"";
    if (!e.in_figure) out += " [style=dashed]";
    out += ";\n";
  }
  return out + "}\n";
}

}  // namespace tukey::diagram
