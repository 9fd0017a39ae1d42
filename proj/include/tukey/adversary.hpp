#pragma once

// Adversary construction against a continuous map 2^ω -> 2^ω: an interval
// partition, a predictor θ and pivots a_0 < a_1 < ... such that ψ(c)(a_k) = 1
// whenever θ predicts c at level k.

#include <algorithm>
#include <functional>
#include <map>
#include <memory>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "tukey/core_reals.hpp"
#include "tukey/errors.hpp"

namespace tukey::adversary {

enum class Answer { zero, one, undecided };

inline std::string bits_str(const Bits& b) {
  if (b.empty()) return "ε";
  std::string s;
  for (bool x : b) s += x ? '1' : '0';
  return s;
}

inline Bits parse_bits(const std::string& s) {
  Bits out;
  if (s == "ε") return out;
  for (char ch : s) {
    if (ch != '0' && ch != '1') throw ContractError("malformed bit string '" + s + "'");
    out.push_back(ch == '1');
  }
  return out;
}

/// A map ψ: 2^ω -> 2^ω given by finite approximations.
class ContinuousMachine {
 public:
  virtual ~ContinuousMachine() = default;
  /// ψ(c)(m) for every c extending prefix, or undecided.
  virtual Answer query(const Bits& prefix, Nat m) = 0;
  /// Optional dense-open hook: an extension t(s) into the region where the
  /// machine is well behaved. Totally continuous machines return nothing.
  virtual Bits dense_extension(const Bits&) { return {}; }
  virtual std::string name() const { return "machine"; }
};

class IdentityMachine : public ContinuousMachine {
 public:
  Answer query(const Bits& prefix, Nat m) override {
    if (m >= prefix.size()) return Answer::undecided;
    return prefix[m] ? Answer::one : Answer::zero;
  }
  std::string name() const override { return "identity"; }
};

class ConstantMachine : public ContinuousMachine {
 public:
  explicit ConstantMachine(bool bit) : bit_(bit) {}
  Answer query(const Bits&, Nat) override { return bit_ ? Answer::one : Answer::zero; }
  std::string name() const override { return bit_ ? "ones" : "zeros"; }

 private:
  bool bit_;
};

class FunctionMachine : public ContinuousMachine {
 public:
  using Fn = std::function<Answer(const Bits&, Nat)>;
  FunctionMachine(std::string name, Fn fn) : name_(std::move(name)), fn_(std::move(fn)) {}
  Answer query(const Bits& prefix, Nat m) override { return fn_(prefix, m); }
  std::string name() const override { return name_; }

 private:
  std::string name_;
  Fn fn_;
};

/// Counts queries against a budget and checks decided answers for
/// persistence under prefix extension.
class Auditor {
 public:
  Auditor(ContinuousMachine& m, Nat budget) : machine_(m), budget_(budget) {}

  Answer query(const Bits& prefix, Nat m) {
    if (queries_ >= budget_) throw BudgetExhausted("query budget of " + std::to_string(budget_) + " exhausted");
    ++queries_;
    const Answer a = machine_.query(prefix, m);
    if (a == Answer::undecided) return a;
    Bits p;
    for (std::size_t len = 0; len <= prefix.size(); ++len) {
      auto it = decided_.find({p, m});
      if (it != decided_.end() && it->second != a) {
        throw MachineFault("answer at " + std::to_string(m) + " changed between prefixes " + bits_str(p) + " and " +
                           bits_str(prefix));
      }
      if (len < prefix.size()) p.push_back(prefix[len]);
    }
    decided_.emplace(std::make_pair(prefix, m), a);
    return a;
  }

  Nat queries() const { return queries_; }
  ContinuousMachine& machine() { return machine_; }

 private:
  ContinuousMachine& machine_;
  Nat budget_;
  Nat queries_ = 0;
  std::map<std::pair<Bits, Nat>, Answer> decided_;
};

struct IntervalPartition {
  std::vector<Nat> cuts{0};  // I_k = [cuts[k], cuts[k+1])

  Nat depth() const { return cuts.size() - 1; }
  Nat start(Nat k) const { return cuts.at(k); }
  Nat length(Nat k) const { return cuts.at(k + 1) - cuts.at(k); }
  Nat level_of(Nat x) const {
    for (Nat k = 0; k < depth(); ++k)
      if (x < cuts[k + 1]) return k;
    throw ContractError("position " + std::to_string(x) + " beyond the constructed partition");
  }
};

struct Predictor {
  IntervalPartition partition;
  std::vector<std::map<Bits, Bits>> table;  // table[k][s] = θ(s), s over I_{<k}
};

struct Fact {
  Nat level;
  Bits s;
  Bits theta;
  Nat pivot;
};

struct AdversaryCertificate {
  std::string machine;
  Predictor theta;
  std::vector<Nat> pivots;
  std::vector<Fact> facts;

  Nat depth() const { return pivots.size(); }
};

enum class Status { complete, budget_exhausted, fault };

inline std::string to_string(Status s) {
  switch (s) {
    case Status::complete:
      return "complete";
    case Status::budget_exhausted:
      return "budget-exhausted";
    case Status::fault:
      return "fault";
  }
  return "?";
}

struct Frontier {
  Nat level;
  std::vector<Bits> unresolved;
};

struct AdversaryOutcome {
  AdversaryCertificate certificate;  // levels completed so far
  Status status = Status::complete;
  std::optional<Frontier> frontier;
  std::string fault;
  Nat queries = 0;
};

namespace detail {

inline Bits concat(Bits a, const Bits& b) {
  a.insert(a.end(), b.begin(), b.end());
  return a;
}

inline Bits bits_of(Nat v, Nat width) {
  Bits out(width);
  for (Nat i = 0; i < width; ++i) out[i] = (v >> (width - 1 - i)) & 1u;
  return out;
}

inline std::vector<Bits> all_strings(Nat width) {
  if (width > 24) throw ResourceLimit("predictor level over " + std::to_string(width) + " bits");
  std::vector<Bits> out;
  for (Nat v = 0; v < (Nat{1} << width); ++v) out.push_back(bits_of(v, width));
  return out;
}

}  // namespace detail

/// Re-queries every decided fact; returns the facts the machine now disputes.
inline std::vector<Fact> disputed_facts(const AdversaryCertificate& cert, ContinuousMachine& machine) {
  std::vector<Fact> out;
  for (const auto& f : cert.facts)
    if (machine.query(detail::concat(f.s, f.theta), f.pivot) != Answer::one) out.push_back(f);
  return out;
}

/// Builds K levels. Within a level, candidate pairs (a, extension) are
/// visited by total length: stage T tries pivots a = a_{k-1}+1+j with
/// extensions of length T-j, lexicographically, so each pair is seen once.
inline AdversaryOutcome build_adversary(ContinuousMachine& machine, Nat depth, Nat budget) {
  Auditor audit(machine, budget);
  AdversaryOutcome out;
  auto& cert = out.certificate;
  cert.machine = machine.name();
  auto& part = cert.theta.partition;
  // found[a][i] = extension deciding 1 at a above the i-th string of the level
  std::map<Nat, std::vector<std::optional<Bits>>> found;
  try {
    for (Nat k = 0; k < depth; ++k) {
      const Nat start = part.cuts.back();
      const Nat first = k == 0 ? 0 : cert.pivots.back() + 1;
      const auto strings = detail::all_strings(start);
      std::vector<Bits> bases;
      for (const auto& s : strings) bases.push_back(detail::concat(s, machine.dense_extension(s)));
      found.clear();
      std::optional<Nat> pivot;
      out.frontier = Frontier{k, strings};
      for (Nat stage = 0; !pivot; ++stage) {
        for (Nat j = 0; j <= stage && !pivot; ++j) {
          const Nat a = first + j, len = stage - j;
          auto& slot = found.try_emplace(a, strings.size()).first->second;
          bool all = true;
          for (std::size_t i = 0; i < strings.size(); ++i) {
            if (slot[i]) continue;
            for (const auto& e : detail::all_strings(len)) {
              if (audit.query(detail::concat(bases[i], e), a) == Answer::one) {
                slot[i] = detail::concat(machine.dense_extension(strings[i]), e);
                break;
              }
            }
            all = all && slot[i].has_value();
          }
          if (all) pivot = a;
        }
      }
      auto& slot = found.at(*pivot);
      Nat width = 1;
      for (const auto& e : slot) width = std::max<Nat>(width, e->size());
      std::map<Bits, Bits> level;
      for (std::size_t i = 0; i < strings.size(); ++i) {
        Bits theta = *slot[i];
        theta.resize(width, false);
        level.emplace(strings[i], theta);
        cert.facts.push_back({k, strings[i], theta, *pivot});
      }
      cert.theta.table.push_back(std::move(level));
      part.cuts.push_back(start + width);
      cert.pivots.push_back(*pivot);
      out.frontier.reset();
    }
    // full re-verification pass on the padded cylinders
    for (const auto& f : cert.facts) {
      if (audit.query(detail::concat(f.s, f.theta), f.pivot) != Answer::one) {
        throw MachineFault("fact at level " + std::to_string(f.level) + " above " + bits_str(f.s) +
                           " not reproduced on the padded cylinder");
      }
    }
  } catch (const BudgetExhausted&) {
    out.status = Status::budget_exhausted;
    if (out.frontier) {
      std::vector<Bits> open;
      for (std::size_t i = 0; i < out.frontier->unresolved.size(); ++i) {
        bool hit = false;
        for (const auto& [a, slot] : found) hit = hit || slot[i].has_value();
        if (!hit) open.push_back(out.frontier->unresolved[i]);
      }
      out.frontier->unresolved = open;
    }
  } catch (const MachineFault& e) {
    out.status = Status::fault;
    out.fault = e.what();
    out.frontier.reset();
  }
  out.queries = audit.queries();
  return out;
}

inline void check_depth(const AdversaryCertificate& cert, Nat k) {
  if (k >= cert.depth()) {
    throw ContractError("level " + std::to_string(k) + " beyond certificate depth " + std::to_string(cert.depth()));
  }
}

/// θ predicts c at level k: θ(c↾I_{<k}) = c↾I_k.
inline bool predicts(const Predictor& theta, const Bits& c, Nat k) {
  if (k >= theta.table.size()) throw ContractError("predicts: level beyond predictor depth");
  const auto& p = theta.partition;
  if (c.size() < p.cuts[k + 1]) throw ContractError("predicts: c not determined on I_<" + std::to_string(k + 1));
  const Bits s(c.begin(), c.begin() + p.cuts[k]);
  const Bits t(c.begin() + p.cuts[k], c.begin() + p.cuts[k + 1]);
  return theta.table[k].at(s) == t;
}

inline bool predicts(const Predictor& theta, const UPSet& c, Nat k) {
  if (k >= theta.table.size()) throw ContractError("predicts: level beyond predictor depth");
  Bits bits;
  for (Nat x = 0; x < theta.partition.cuts[k + 1]; ++x) bits.push_back(c.contains(x));
  return predicts(theta, bits, k);
}

inline void check_class(const AdversaryCertificate& cert, Nat n, Nat r) {
  if (n == 0 || r >= n) throw ContractError("class (n, r) needs r < n");
  if (r >= cert.depth()) throw ContractError("class r = " + std::to_string(r) + " has no level within depth");
}

/// Element of S_{n,r}: θ on levels ≡ r (mod n), free_bits[k] elsewhere.
inline Bits predicted_family_element(const AdversaryCertificate& cert, Nat n, Nat r, const std::vector<Bits>& free_bits) {
  check_class(cert, n, r);
  const auto& p = cert.theta.partition;
  if (free_bits.size() != cert.depth()) throw ContractError("free_bits must have one entry per level");
  Bits c;
  for (Nat k = 0; k < cert.depth(); ++k) {
    if (k % n == r) {
      if (!free_bits[k].empty()) throw ContractError("free_bits given on predicted level " + std::to_string(k));
      const auto& t = cert.theta.table[k].at(c);
      c.insert(c.end(), t.begin(), t.end());
    } else {
      if (free_bits[k].size() != p.length(k)) {
        throw ContractError("free_bits[" + std::to_string(k) + "] must have " + std::to_string(p.length(k)) + " bits");
      }
      c.insert(c.end(), free_bits[k].begin(), free_bits[k].end());
    }
  }
  return c;
}

inline Bits predicted_family_element(const AdversaryCertificate& cert, Nat n, Nat r, bool fill) {
  check_class(cert, n, r);
  std::vector<Bits> free(cert.depth());
  for (Nat k = 0; k < cert.depth(); ++k)
    if (k % n != r) free[k] = Bits(cert.theta.partition.length(k), fill);
  return predicted_family_element(cert, n, r, free);
}

inline std::vector<Nat> free_positions(const AdversaryCertificate& cert, Nat n, Nat r) {
  check_class(cert, n, r);
  std::vector<Nat> out;
  const auto& p = cert.theta.partition;
  for (Nat k = 0; k < cert.depth(); ++k)
    if (k % n != r)
      for (Nat x = p.start(k); x < p.cuts[k + 1]; ++x) out.push_back(x);
  return out;
}

struct Splitter {
  Bits c;
  std::vector<Nat> points;  // target points in the free region, in order
  Nat ones = 0, zeros = 0;
};

/// Sets the free bits to alternate 1, 0, 1, ... along the target's points.
inline Splitter splitter_from_free_class(const AdversaryCertificate& cert, Nat n, Nat r, const UPSet& target) {
  Splitter out;
  for (Nat x : free_positions(cert, n, r))
    if (target.contains(x)) out.points.push_back(x);
  if (out.points.size() < 2) {
    throw ContractError("target " + target.str() + " meets the free region of class (" + std::to_string(n) + ", " +
                        std::to_string(r) + ") in fewer than 2 points");
  }
  const auto& p = cert.theta.partition;
  std::vector<Bits> free(cert.depth());
  for (Nat k = 0; k < cert.depth(); ++k)
    if (k % n != r) free[k] = Bits(p.length(k), false);
  for (std::size_t i = 0; i < out.points.size(); ++i) {
    const Nat x = out.points[i], k = p.level_of(x);
    free[k][x - p.start(k)] = i % 2 == 0;
    (i % 2 == 0 ? out.ones : out.zeros) += 1;
  }
  out.c = predicted_family_element(cert, n, r, free);
  return out;
}

struct PivotFact {
  Nat level;
  Nat pivot;
  Answer answer;
};

/// Re-queries ψ(c)(a_k) for every pivot of class r; all must be 1.
inline std::vector<PivotFact> image_nonsplit_certificate(const AdversaryCertificate& cert, ContinuousMachine& machine,
                                                         const Bits& c, Nat n, Nat r) {
  check_class(cert, n, r);
  std::vector<PivotFact> out;
  for (Nat k = r; k < cert.depth(); k += n) {
    if (!predicts(cert.theta, c, k)) throw ContractError("c is not predicted at level " + std::to_string(k));
    const Answer a = machine.query(c, cert.pivots[k]);
    if (a != Answer::one) {
      throw MachineFault("psi(c)(" + std::to_string(cert.pivots[k]) + ") is not 1 although θ predicts c at level " +
                         std::to_string(k));
    }
    out.push_back({k, cert.pivots[k], a});
  }
  return out;
}

struct ClassReport {
  Nat n, r;
  Bits representative;  // free bits all 1
  std::vector<PivotFact> pivots;
};

struct TargetReport {
  UPSet target;
  Nat n;
  std::optional<std::pair<Nat, Splitter>> split;  // residue r of the class that splits it
};

struct MulticlassReport {
  std::vector<ClassReport> classes;
  std::vector<TargetReport> targets;
};

/// The union of S_{n,r} over the given classes: representatives with their
/// pivot facts, and for each target and each n a class splitting it.
inline MulticlassReport multiclass_family(const AdversaryCertificate& cert, ContinuousMachine& machine,
                                          const std::vector<std::pair<Nat, Nat>>& specs,
                                          const std::vector<UPSet>& targets = {}) {
  MulticlassReport out;
  std::vector<Nat> ns;
  for (const auto& [n, r] : specs) {
    check_class(cert, n, r);
    auto rep = predicted_family_element(cert, n, r, true);
    out.classes.push_back({n, r, rep, image_nonsplit_certificate(cert, machine, rep, n, r)});
    if (std::find(ns.begin(), ns.end(), n) == ns.end()) ns.push_back(n);
  }
  for (const auto& t : targets)
    for (Nat n : ns) {
      TargetReport rep{t, n, std::nullopt};
      for (const auto& [m, r] : specs) {
        if (m != n) continue;
        try {
          rep.split = std::make_pair(r, splitter_from_free_class(cert, n, r, t));
          break;
        } catch (const ContractError&) {
        }
      }
      out.targets.push_back(std::move(rep));
    }
  return out;
}

}  // namespace tukey::adversary
