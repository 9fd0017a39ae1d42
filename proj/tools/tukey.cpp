// tukey: command-line front end for the triples, splitting order, the
// psi construction, gadgets and the adversary.
//
// Exit codes: 0 ok, 1 negative verdict or violation, 2 usage, 3 budget.

#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <sstream>

#include "tukey/diagram.hpp"
#include "tukey/json_io.hpp"
#include "tukey/process.hpp"

namespace {

using namespace tukey;
using json_io::json;

constexpr int kOk = 0, kNegative = 1, kUsage = 2, kBudget = 3;

json read_json_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ContractError("cannot open " + path);
  try {
    return json::parse(in);
  } catch (const json::parse_error& e) {
    throw ContractError(path + ": " + e.what());
  }
}

std::vector<bp::Branch> parse_branches(const std::vector<std::string>& literals) {
  std::vector<bp::Branch> out;
  for (const auto& l : literals) out.emplace_back(APFunc::parse(l));
  return out;
}

std::set<Nat> parse_nat_set(const std::string& text) {
  std::set<Nat> out;
  if (text == "-" || text.empty()) return out;
  std::stringstream ss(text);
  for (std::string item; std::getline(ss, item, ',');) out.insert(detail::parse_nat(item, "set element"));
  return out;
}

void print(const json& j) { std::cout << j.dump(2) << "\n"; }

std::unique_ptr<adversary::ContinuousMachine> make_machine(const std::string& spec, int timeout_ms) {
  if (spec == "identity") return std::make_unique<adversary::IdentityMachine>();
  if (spec == "ones") return std::make_unique<adversary::ConstantMachine>(true);
  if (spec == "zeros") return std::make_unique<adversary::ConstantMachine>(false);
  return std::make_unique<process::ProcessMachine>(spec, timeout_ms);
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Borel Tukey morphisms: catalog, diagrams, order queries, evaluators and refutations"};
  app.require_subcommand(1);
  std::string format = "text";
  int result = kOk;

  // catalog
  auto* catalog = app.add_subcommand("catalog", "List the triples and the built-in morphisms");
  catalog->add_option("--format", format)->check(CLI::IsMember({"text", "json"}));
  catalog->callback([&] {
    const auto triples = cat::catalog();
    const auto morphisms = cat::builtin_morphisms();
    if (format == "json") {
      json out{{"triples", json::array()}, {"morphisms", json::array()}};
      for (const auto& t : triples) {
        json e{{"id", t.id},
               {"display", t.display},
               {"minus", t.minus.name()},
               {"plus", t.plus.name()},
               {"relation", t.relation_name},
               {"simple", t.simple()}};
        if (t.property) e["property"] = {{"name", t.property->name}, {"note", t.property->note}};
        out["triples"].push_back(e);
      }
      for (const auto& m : morphisms)
        out["morphisms"].push_back({{"source", m.source}, {"target", m.target}, {"name", m.candidate.name}});
      print(out);
      return;
    }
    for (const auto& t : triples) {
      std::cout << t.id << "\t" << t.minus.name() << " -> " << t.plus.name() << "\t" << t.relation_name;
      if (t.property) std::cout << "\tproperty: " << t.property->name;
      std::cout << "\n";
    }
    std::cout << "\n";
    for (const auto& m : morphisms) std::cout << m.source << " -> " << m.target << "\t" << m.candidate.name << "\n";
  });

  // diagram
  std::string kind = "borel";
  Nat box = 5;
  auto* diag = app.add_subcommand("diagram", "Van Douwen's diagram or the splitting Hasse diagram");
  diag->add_option("--kind", kind)->check(CLI::IsMember({"classical", "borel", "splitting"}));
  diag->add_option("--box", box, "largest n for --kind splitting");
  diag->add_option("--format", format)->check(CLI::IsMember({"text", "json", "dot"}));
  diag->callback([&] {
    const auto d = kind == "splitting" ? diagram::splitting_diagram(box)
                                       : diagram::vd_diagram(kind == "borel" ? diagram::DiagramKind::borel
                                                                             : diagram::DiagramKind::classical);
    if (format == "json") {
      print(json_io::to_json(d));
    } else if (format == "dot") {
      std::cout << diagram::to_dot(d);
    } else {
      for (const auto& e : d.edges)
        std::cout << e.source << " -> " << e.target << "\t" << diagram::to_string(e.verdict) << "\t"
                  << diagram::to_string(e.basis) << (e.in_figure ? "" : "\t(not drawn)") << "\n";
      for (const auto& e : d.absent)
        std::cout << e.source << " -/-> " << e.target << "\t" << diagram::to_string(e.verdict) << "\t"
                  << diagram::to_string(e.basis) << "\n";
    }
  });

  // edge
  std::vector<Nat> edge_args;
  auto* edge = app.add_subcommand("edge", "Is there a Borel Tukey morphism s_{n,m} -> s_{n',m'}?");
  edge->add_option("spec", edge_args, "n m n2 m2")->expected(4)->required();
  edge->add_option("--format", format)->check(CLI::IsMember({"text", "json"}));
  edge->callback([&] {
    const auto v = splitting::bt_edge(splitting::SplitSpec::make(edge_args[0], edge_args[1]),
                                      splitting::SplitSpec::make(edge_args[2], edge_args[3]));
    if (format == "json") {
      print(json_io::to_json(v));
    } else {
      std::cout << splitting::describe(v) << "\n";
    }
    result = v.is_morphism() ? kOk : kNegative;
  });

  // antichain
  Nat max_m = 8;
  auto* anti = app.add_subcommand("antichain", "The pairs (2^m, m), 3 <= m <= M, and their incomparability");
  anti->add_option("M", max_m)->required();
  anti->add_option("--format", format)->check(CLI::IsMember({"text", "json"}));
  anti->callback([&] {
    const auto r = splitting::antichain(max_m);
    if (format == "json") {
      print(json_io::to_json(r));
    } else {
      for (const auto& p : r.pairs)
        std::cout << "(" << (Nat{1} << p.small) << "," << p.small << ") vs (" << (Nat{1} << p.large) << ","
                  << p.large << "): " << splitting::describe(p.up) << "; " << splitting::describe(p.down)
                  << (p.chain_holds ? "" : "; inequality chain FAILS") << "\n";
      std::cout << r.pairs.size() << " pairs, " << (r.all_incomparable ? "all incomparable" : "NOT an antichain")
                << "\n";
    }
    result = r.all_incomparable ? kOk : kNegative;
  });

  // embed
  std::string x_text, y_text;
  auto* embed = app.add_subcommand("embed", "Is there a morphism from the X-splitting to the Y-splitting triple?");
  embed->add_option("X", x_text, "comma list of m >= 3, or - for the empty set")->required();
  embed->add_option("Y", y_text)->required();
  embed->add_option("--format", format)->check(CLI::IsMember({"text", "json"}));
  embed->callback([&] {
    const auto r = splitting::x_order(splitting::XSpec(parse_nat_set(x_text)), splitting::XSpec(parse_nat_set(y_text)));
    if (format == "json") {
      print(json_io::to_json(r));
    } else if (r.is_morphism()) {
      std::cout << "morphism (X contains Y)\n";
    } else {
      std::cout << "no morphism (" << *r.witness << " in Y but not in X)\n";
    }
    result = r.is_morphism() ? kOk : kNegative;
  });

  // psi
  std::string f_text;
  Nat bound = 64;
  auto* psi = app.add_subcommand("psi", "psi(f) below N");
  psi->add_option("--f", f_text, "APFunc literal")->required();
  psi->add_option("--N", bound)->required();
  psi->add_option("--format", format)->check(CLI::IsMember({"text", "json"}));
  psi->callback([&] {
    const auto p = bp::psi_prefix(bp::Branch(APFunc::parse(f_text)), bound);
    if (format == "json") {
      print(json_io::to_json(p));
      return;
    }
    std::cout << "{";
    for (std::size_t i = 0; i < p.elements.size(); ++i) std::cout << (i ? "," : "") << p.elements[i];
    std::cout << "}\ndepth " << p.depth << "\n";
  });

  // witnesses
  Nat column = 1, count = 10;
  std::vector<std::string> fs;
  auto* wit = app.add_subcommand("witnesses", "Common elements of psi_n(f_1), ..., psi_n(f_k), k <= n");
  wit->add_option("--n", column)->required();
  wit->add_option("--fs", fs, "APFunc literals")->required();
  wit->add_option("--count", count);
  wit->add_option("--format", format)->check(CLI::IsMember({"text", "json"}));
  wit->callback([&] {
    const auto ws = bp::witness_stream(column, parse_branches(fs), count);
    if (format == "json") {
      json out = json::array();
      for (const auto& w : ws) out.push_back(json_io::to_json(w));
      print(out);
      return;
    }
    for (const auto& w : ws) std::cout << w.index.str() << "\tlevel " << w.tuple.level << "\n";
  });

  // intersect
  auto* inter = app.add_subcommand("intersect", "The finite intersection of psi_n over n+1 distinct branches");
  inter->add_option("--n", column)->required();
  inter->add_option("--fs", fs, "n+1 APFunc literals")->required();
  inter->add_option("--format", format)->check(CLI::IsMember({"text", "json"}));
  inter->callback([&] {
    const auto r = bp::intersection_exact(column, parse_branches(fs));
    if (format == "json") {
      print(json_io::to_json(r));
      return;
    }
    std::cout << r.tuples.size() << " common elements, all below level " << r.distinct_level << "\n";
    for (const auto& t : r.tuples) std::cout << json_io::to_json(t).dump() << "\n";
  });

  // bound
  std::string obs_path;
  auto* bnd = app.add_subcommand("bound", "Bound every f whose psi_n contains the observed tuples");
  bnd->add_option("--column", column)->required();
  bnd->add_option("--obs", obs_path, "JSON list of {level, nodes}")->required();
  bnd->add_option("--format", format)->check(CLI::IsMember({"text", "json"}));
  bnd->callback([&] {
    std::vector<bp::OmegaTuple> observed;
    for (const auto& t : read_json_file(obs_path)) observed.push_back(json_io::omega_tuple_from_json(t));
    const auto c = bp::bound_from_trace(column, observed);
    if (format == "json") {
      print(json_io::to_json(c));
    } else if (c.empty) {
      std::cout << "empty: no branch is consistent with the observations\n";
    } else {
      std::cout << "f <= [";
      for (std::size_t i = 0; i < c.bound.size(); ++i) std::cout << (i ? "," : "") << c.bound[i];
      std::cout << "] on the first " << c.bound.size() << " coordinates\n";
    }
    result = c.empty ? kNegative : kOk;
  });

  // refute
  std::string gadget, phi_cmd, psi_cmd;
  std::vector<std::string> set_literals;
  int timeout_ms = 5000;
  auto* refute = app.add_subcommand("refute", "Run a refutation gadget against external candidate maps");
  refute->add_option("gadget", gadget)->required()->check(CLI::IsMember({"a2b", "p2t"}));
  refute->add_option("--phi", phi_cmd, "command mapping one literal per line")->required();
  refute->add_option("--psi", psi_cmd)->required();
  refute->add_option("--sets", set_literals, "p2t: three sets meeting pairwise but not jointly")->expected(3);
  refute->add_option("--timeout", timeout_ms, "milliseconds per answer");
  refute->add_option("--format", format)->check(CLI::IsMember({"text", "json"}));
  refute->callback([&] {
    json out;
    if (gadget == "a2b") {
      process::ProcessMap phi(phi_cmd, Kind::ic(), timeout_ms), psi_map(psi_cmd, Kind::baire(), timeout_ms);
      MorphismCandidate c{"external", Kind::baire(), Kind::ic(), Kind::ic(), Kind::baire(), phi, psi_map};
      out = json_io::to_json(gadgets::refute_filterclass_to_b(c));
    } else {
      process::ProcessMap phi(phi_cmd, Kind::set(), timeout_ms), psi_map(psi_cmd, Kind::set(), timeout_ms);
      MorphismCandidate c{"external", Kind::set(), Kind::set(), Kind::set(), Kind::set(), phi, psi_map};
      auto sets = gadgets::default_p_to_t_sets();
      if (!set_literals.empty())
        for (std::size_t i = 0; i < 3; ++i) sets[i] = UPSet::parse(set_literals[i]);
      out = json_io::to_json(gadgets::refute_p_to_t(c, sets));
    }
    if (format == "json") {
      print(out);
    } else {
      for (const auto& [k, v] : out.items()) std::cout << k << ": " << (v.is_string() ? v.get<std::string>() : v.dump()) << "\n";
    }
    result = kNegative;
  });

  // adversary
  std::string machine_spec, cert_path;
  Nat depth = 5, budget = 1000000;
  auto* adv = app.add_subcommand("adversary", "Build or re-verify an adversary certificate");
  adv->require_subcommand(1);
  auto* run = adv->add_subcommand("run", "Build the interval partition, predictor and pivots");
  run->add_option("--machine", machine_spec, "identity | ones | zeros | shell command")->required();
  run->add_option("--depth", depth);
  run->add_option("--budget", budget);
  run->add_option("--timeout", timeout_ms, "milliseconds per answer");
  run->add_option("--format", format)->check(CLI::IsMember({"text", "json"}));
  run->callback([&] {
    auto machine = make_machine(machine_spec, timeout_ms);
    const auto o = adversary::build_adversary(*machine, depth, budget);
    if (format == "json") {
      print(json_io::to_json(o));
    } else {
      std::cout << adversary::to_string(o.status) << " after " << o.queries << " queries, depth "
                << o.certificate.depth() << "\n";
      for (Nat k = 0; k < o.certificate.depth(); ++k)
        std::cout << "I_" << k << " = [" << o.certificate.theta.partition.cuts[k] << ","
                  << o.certificate.theta.partition.cuts[k + 1] << ")  a_" << k << " = " << o.certificate.pivots[k]
                  << "\n";
      if (o.frontier) std::cout << "frontier: level " << o.frontier->level << ", " << o.frontier->unresolved.size() << " open\n";
      if (!o.fault.empty()) std::cout << "fault: " << o.fault << "\n";
    }
    result = o.status == adversary::Status::complete ? kOk
             : o.status == adversary::Status::fault  ? kNegative
                                                     : kBudget;
  });
  auto* verify = adv->add_subcommand("verify", "Re-query every decided fact of a certificate");
  verify->add_option("--machine", machine_spec)->required();
  verify->add_option("--cert", cert_path, "JSON certificate (or a run report)")->required();
  verify->add_option("--timeout", timeout_ms, "milliseconds per answer");
  verify->callback([&] {
    auto j = read_json_file(cert_path);
    if (j.contains("certificate")) j = j["certificate"];
    const auto cert = json_io::certificate_from_json(j);
    auto machine = make_machine(machine_spec, timeout_ms);
    const auto disputed = adversary::disputed_facts(cert, *machine);
    std::cout << cert.facts.size() - disputed.size() << " of " << cert.facts.size() << " facts reproduced\n";
    for (const auto& f : disputed)
      std::cout << "disputed: level " << f.level << " s=" << adversary::bits_str(f.s)
                << " theta=" << adversary::bits_str(f.theta) << " pivot " << f.pivot << "\n";
    result = disputed.empty() ? kOk : kNegative;
  });

  // norm
  std::string triple_path, property;
  auto* norm = app.add_subcommand("norm", "Norm of a finite triple, optionally under a named property");
  norm->add_option("--triple", triple_path, "JSON file")->required();
  norm->add_option("--property", property);
  norm->add_option("--format", format)->check(CLI::IsMember({"text", "json"}));
  norm->callback([&] {
    const auto file = json_io::finite_triple_from_json(read_json_file(triple_path));
    SubsetPredicate prop;
    if (!property.empty()) {
      auto it = file.properties.find(property);
      if (it == file.properties.end()) throw ContractError("no property named '" + property + "' in " + triple_path);
      prop = json_io::property_predicate(it->second);
    }
    const auto n = finite_norm(file.triple, prop);
    if (format == "json") {
      print(json{{"norm", n ? json(*n) : json("infinite")}});
    } else {
      std::cout << (n ? std::to_string(*n) : "infinite") << "\n";
    }
  });

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kOk : kUsage;
  } catch (const ContractError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kUsage;
  } catch (const ResourceLimit& e) {
    std::cerr << "resource limit: " << e.what() << "\n";
    return kBudget;
  } catch (const BudgetExhausted& e) {
    std::cerr << "budget exhausted: " << e.what() << "\n";
    return kBudget;
  } catch (const InsufficientPrefix& e) {
    std::cerr << "budget exhausted: " << e.what() << "\n";
    return kBudget;
  } catch (const MachineFault& e) {
    std::cerr << "machine fault: " << e.what() << "\n";
    return kNegative;
  }
  return result;
}
