#pragma once

// JSON views of reports and certificates, and the finite-triple input format.

#include <json.hpp>

#include "tukey/adversary.hpp"
#include "tukey/bp_morphism.hpp"
#include "tukey/diagram.hpp"
#include "tukey/gadgets.hpp"
#include "tukey/splitting_order.hpp"
#include "tukey/triples.hpp"

namespace tukey::json_io {

using nlohmann::json;

inline json to_json(const bp::Node& node) { return json(node); }

inline json to_json(const bp::OmegaTuple& t) {
  json nodes = json::array();
  for (const auto& n : t.nodes) nodes.push_back(n);
  return {{"level", t.level}, {"nodes", nodes}};
}

inline bp::OmegaTuple omega_tuple_from_json(const json& j) {
  try {
    return {j.at("level").get<Nat>(), j.at("nodes").get<std::vector<bp::Node>>()};
  } catch (const json::exception& e) {
    throw ContractError(std::string("malformed observation: ") + e.what());
  }
}

inline json to_json(const diagram::EdgeRecord& e) {
  json out{{"source", e.source},
           {"target", e.target},
           {"verdict", diagram::to_string(e.verdict)},
           {"basis", diagram::to_string(e.basis)},
           {"provenance", e.provenance},
           {"in_figure", e.in_figure}};
  if (e.morphism) out["morphism"] = *e.morphism;
  return out;
}

inline json to_json(const diagram::Diagram& d) {
  json edges = json::array(), absent = json::array();
  for (const auto& e : d.edges) edges.push_back(to_json(e));
  for (const auto& e : d.absent) absent.push_back(to_json(e));
  return {{"kind", d.kind}, {"nodes", d.nodes}, {"edges", edges}, {"absent", absent}};
}

inline json to_json(const splitting::SplitSpec& s) { return {{"n", s.n}, {"m", s.m}}; }

inline json to_json(const splitting::EdgeVerdict& v) {
  json out{{"source", to_json(v.source)},
           {"target", to_json(v.target)},
           {"morphism", v.is_morphism()},
           {"reason", splitting::to_string(v.reason)},
           {"text", splitting::describe(v)}};
  if (v.lhs_value) out["shaded"] = *v.lhs_value;
  return out;
}

inline json to_json(const splitting::AntichainReport& r) {
  json pairs = json::array();
  for (const auto& p : r.pairs) {
    pairs.push_back({{"m", p.small},
                     {"m_prime", p.large},
                     {"up", to_json(p.up)},
                     {"down", to_json(p.down)},
                     {"chain", {p.chain_power, p.chain_product, p.chain_sum}},
                     {"chain_holds", p.chain_holds}});
  }
  return {{"max_m", r.max_m}, {"pairs", pairs}, {"all_incomparable", r.all_incomparable}};
}

inline json to_json(const splitting::XOrderResult& r) {
  json out{{"morphism", r.is_morphism()}, {"obstructions", json::array()}};
  if (r.witness) out["witness"] = *r.witness;
  for (const auto& v : r.obstructions) out["obstructions"].push_back(to_json(v));
  return out;
}

inline json to_json(const bp::PsiPrefix& p) { return {{"elements", p.elements}, {"depth", p.depth}}; }

inline json to_json(const bp::Witness& w) { return {{"tuple", to_json(w.tuple)}, {"index", w.index.str()}}; }

inline json to_json(const bp::IntersectionResult& r) {
  json tuples = json::array();
  for (const auto& t : r.tuples) tuples.push_back(to_json(t));
  return {{"column", r.column}, {"distinct_level", r.distinct_level}, {"tuples", tuples}, {"finite", true}};
}

inline json to_json(const bp::BoundCertificate& c) {
  json constraints = json::array();
  for (const auto& t : c.constraints) constraints.push_back(to_json(t));
  return {{"column", c.column},
          {"constraints", constraints},
          {"empty", c.empty},
          {"bound", c.bound},
          {"consistent_unions", c.consistent_unions}};
}

inline json to_json(const MorphismReport& r) {
  json violations = json::array();
  for (const auto& v : r.violations)
    violations.push_back({{"clause", std::string(1, v.clause)}, {"detail", v.detail}, {"inputs", v.inputs}});
  return {{"consistent", r.consistent()},
          {"pairs_checked", r.pairs_checked},
          {"families_checked", r.families_checked},
          {"violations", violations},
          {"summary", r.summary()}};
}

inline json to_json(const gadgets::FilterClassViolation& v) {
  return {{"gadget", "a2b"},
          {"psi_odd", v.psi_odd.str()},
          {"psi_even", v.psi_even.str()},
          {"f", v.f.str()},
          {"phi_f", v.phi_f.str()},
          {"x", v.x.str()},
          {"psi_x", v.psi_x.str()},
          {"verified", gadgets::verify(v)}};
}

inline json to_json(const gadgets::PToTViolation& v) {
  json out{{"gadget", "p2t"}, {"clause", std::string(1, v.clause)}, {"verified", gadgets::verify(v)}};
  for (std::size_t i = 0; i < 3; ++i) {
    out["sets"].push_back(v.sets[i].str());
    out["images"].push_back(v.images[i].str());
  }
  if (v.clause == 'a') {
    out["pair"] = {v.pair.first, v.pair.second};
  } else {
    out["meet"] = v.meet.str();
    out["phi_meet"] = v.phi_meet.str();
    out["y"] = v.y;
  }
  return out;
}

inline json to_json(const adversary::AdversaryCertificate& c) {
  using adversary::bits_str;
  json levels = json::array();
  for (std::size_t k = 0; k < c.theta.table.size(); ++k) {
    json theta = json::object();
    for (const auto& [s, t] : c.theta.table[k]) theta[bits_str(s)] = bits_str(t);
    levels.push_back({{"interval", {c.theta.partition.cuts[k], c.theta.partition.cuts[k + 1]}},
                      {"pivot", c.pivots[k]},
                      {"theta", theta}});
  }
  return {{"machine", c.machine}, {"depth", c.depth()}, {"levels", levels}};
}

inline json to_json(const adversary::AdversaryOutcome& o) {
  json out{{"status", adversary::to_string(o.status)}, {"queries", o.queries}, {"certificate", to_json(o.certificate)}};
  if (o.frontier) {
    json open = json::array();
    for (const auto& s : o.frontier->unresolved) open.push_back(adversary::bits_str(s));
    out["frontier"] = {{"level", o.frontier->level}, {"unresolved", open}};
  }
  if (!o.fault.empty()) out["fault"] = o.fault;
  return out;
}

inline adversary::AdversaryCertificate certificate_from_json(const json& j) {
  using adversary::parse_bits;
  adversary::AdversaryCertificate c;
  try {
    c.machine = j.at("machine").get<std::string>();
    for (const auto& level : j.at("levels")) {
      const Nat k = c.pivots.size();
      const auto interval = level.at("interval").get<std::vector<Nat>>();
      if (interval.size() != 2 || interval[0] != c.theta.partition.cuts.back() || interval[1] <= interval[0]) {
        throw ContractError("certificate intervals must be consecutive and nonempty");
      }
      c.theta.partition.cuts.push_back(interval[1]);
      c.pivots.push_back(level.at("pivot").get<Nat>());
      std::map<Bits, Bits> table;
      for (const auto& [s, t] : level.at("theta").items()) {
        table.emplace(parse_bits(s), parse_bits(t.get<std::string>()));
        c.facts.push_back({k, parse_bits(s), parse_bits(t.get<std::string>()), c.pivots.back()});
      }
      c.theta.table.push_back(std::move(table));
    }
  } catch (const json::exception& e) {
    throw ContractError(std::string("malformed certificate: ") + e.what());
  }
  return c;
}

/// {"minus": [labels], "plus": [labels], "relation": [[minus, plus], ...],
///  "properties": {"name": [[plus labels], ...]}}; a family satisfies a
/// named property when it lies inside one of the listed sets.
struct FiniteTripleFile {
  FiniteTriple triple;
  std::map<std::string, std::vector<std::vector<std::size_t>>> properties;
};

inline FiniteTripleFile finite_triple_from_json(const json& j) {
  try {
    const auto minus = j.at("minus").get<std::vector<std::string>>();
    const auto plus = j.at("plus").get<std::vector<std::string>>();
    auto index = [](const std::vector<std::string>& labels, const std::string& l) {
      auto it = std::find(labels.begin(), labels.end(), l);
      if (it == labels.end()) throw ContractError("unknown label '" + l + "'");
      return static_cast<std::size_t>(it - labels.begin());
    };
    std::vector<std::vector<bool>> rel(minus.size(), std::vector<bool>(plus.size(), false));
    for (const auto& pair : j.at("relation")) {
      const auto p = pair.get<std::vector<std::string>>();
      if (p.size() != 2) throw ContractError("relation entries are [minus, plus] pairs");
      rel[index(minus, p[0])][index(plus, p[1])] = true;
    }
    FiniteTripleFile out{FiniteTriple(minus, plus, rel), {}};
    if (j.contains("properties")) {
      for (const auto& [name, sets] : j.at("properties").items()) {
        auto& allowed = out.properties[name];
        for (const auto& s : sets) {
          std::vector<std::size_t> idx;
          for (const auto& l : s.get<std::vector<std::string>>()) idx.push_back(index(plus, l));
          std::sort(idx.begin(), idx.end());
          allowed.push_back(idx);
        }
      }
    }
    return out;
  } catch (const json::exception& e) {
    throw ContractError(std::string("malformed triple file: ") + e.what());
  }
}

inline SubsetPredicate property_predicate(const std::vector<std::vector<std::size_t>>& allowed) {
  return [allowed](const PlusSubset& f) {
    PlusSubset sorted(f.begin(), f.end());
    std::sort(sorted.begin(), sorted.end());
    for (const auto& a : allowed)
      if (std::includes(a.begin(), a.end(), sorted.begin(), sorted.end())) return true;
    return false;
  };
}

}  // namespace tukey::json_io
