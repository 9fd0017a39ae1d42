#pragma once

// The continuous map psi : omega^omega -> [omega]^omega with centered range
// and the property that the sets {f : A ⊂* psi(f)} are bounded.
//
// Column n of psi(f) is psi_n(iota_n(f)), where T_n is the tree that is
// omega-branching on its first n levels and binary afterwards, Omega_n is
// the set of n-tuples of equal-level nodes (level l > n) whose level-n
// prefixes have code < l, and psi_n(f) collects the tuples with some
// component on the branch f. Omega_n is enumerated level-major, then by
// code, then by the concatenated binary suffixes; the enumeration index m
// and the column n are paired into omega with the Cantor pairing.

#include <algorithm>
#include <map>
#include <optional>
#include <set>
#include <string>
#include <variant>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

#include "tukey/core_reals.hpp"
#include "tukey/errors.hpp"

namespace tukey::bp {

using BigNat = boost::multiprecision::cpp_int;
using Node = std::vector<Nat>;

// ---------------------------------------------------------------------------
// Pairing and tuple codes

inline BigNat cantor_pair(const BigNat& x, const BigNat& y) {
  const BigNat s = x + y;
  return s * (s + 1) / 2 + y;
}

inline std::pair<BigNat, BigNat> cantor_unpair(const BigNat& z) {
  const BigNat disc = 8 * z + 1;
  BigNat w = (boost::multiprecision::sqrt(disc) - 1) / 2;
  const BigNat t = w * (w + 1) / 2;
  const BigNat y = z - t;
  return {w - y, y};
}

/// Fixed bijection (omega^n)^n -> omega: the n*n entries in row-major order,
/// folded left with the Cantor pairing.
inline BigNat tuple_code(const std::vector<Node>& prefixes) {
  const std::size_t n = prefixes.size();
  if (n == 0) throw ContractError("tuple_code: empty shape");
  for (const auto& row : prefixes)
    if (row.size() != n) throw ContractError("tuple_code: expected an n x n array");
  BigNat code = prefixes[0][0];
  for (std::size_t k = 1; k < n * n; ++k) code = cantor_pair(code, BigNat(prefixes[k / n][k % n]));
  return code;
}

inline std::vector<Node> tuple_decode(BigNat code, std::size_t n) {
  if (n == 0) throw ContractError("tuple_decode: n must be positive");
  std::vector<Node> out(n, Node(n));
  for (std::size_t k = n * n; k-- > 1;) {
    // 0 and 1 unpair to (0,0) and (1,0): the remaining entries are zero.
    if (code <= 1) break;
    auto [rest, last] = cantor_unpair(code);
    out[k / n][k % n] = last.convert_to<Nat>();
    code = rest;
  }
  out[0][0] = code.convert_to<Nat>();
  return out;
}

// ---------------------------------------------------------------------------
// Branches of omega^omega and the embeddings iota_n

/// An element of omega^omega known either completely (APFunc) or up to a
/// finite prefix.
class Branch {
 public:
  Branch(APFunc f) : rep_(std::move(f)) {}
  Branch(std::vector<Nat> prefix) : rep_(std::move(prefix)) {}

  std::optional<Nat> value(Nat k) const {
    if (auto* f = std::get_if<APFunc>(&rep_)) return (*f)(k);
    const auto& p = std::get<std::vector<Nat>>(rep_);
    if (k < p.size()) return p[k];
    return std::nullopt;
  }

  bool is_total() const { return std::holds_alternative<APFunc>(rep_); }
  const APFunc* function() const { return std::get_if<APFunc>(&rep_); }

  std::string str() const {
    if (auto* f = function()) return f->str();
    std::string out = "[";
    for (auto v : std::get<std::vector<Nat>>(rep_)) out += (out.size() > 1 ? "," : "") + std::to_string(v);
    return out + "]";
  }

  friend bool operator==(const Branch&, const Branch&) = default;

 private:
  std::variant<APFunc, std::vector<Nat>> rep_;
};

/// iota_n on a finite prefix: the first n coordinates are copied, each later
/// coordinate v becomes the block 1^v 0 in the binary part.
inline Node iota(Nat n, const std::vector<Nat>& prefix) {
  Node out;
  for (Nat k = 0; k < prefix.size(); ++k) {
    if (k < n) {
      out.push_back(prefix[k]);
    } else {
      out.insert(out.end(), prefix[k], 1);
      out.push_back(0);
    }
  }
  return out;
}

struct IotaPrefix {
  Node node;        // iota_n(f) restricted to the requested level
  Nat depth = 0;    // number of coordinates of f that were read
};

/// iota_n(f) restricted to `level` entries.
inline IotaPrefix iota_prefix(Nat n, const Branch& f, Nat level) {
  IotaPrefix out;
  Nat k = 0;
  while (out.node.size() < level) {
    auto v = f.value(k);
    if (!v) throw InsufficientPrefix("branch " + f.str() + " too short for level " + std::to_string(level), k + 1);
    ++k;
    if (k <= n) {
      out.node.push_back(*v);
    } else {
      for (Nat i = 0; i < *v && out.node.size() < level; ++i) out.node.push_back(1);
      if (out.node.size() < level) out.node.push_back(0);
    }
  }
  out.depth = k;
  return out;
}

/// Values of f determined by a node of T_n (inverse of iota_n on complete
/// blocks; a trailing incomplete block determines nothing).
inline std::vector<Nat> iota_inverse(Nat n, const Node& node) {
  std::vector<Nat> out;
  for (Nat k = 0; k < std::min<Nat>(n, node.size()); ++k) out.push_back(node[k]);
  Nat run = 0;
  for (Nat k = n; k < node.size(); ++k) {
    if (node[k] == 1) {
      ++run;
    } else {
      out.push_back(run);
      run = 0;
    }
  }
  return out;
}

inline bool is_prefix(const Node& a, const Node& b) {
  return a.size() <= b.size() && std::equal(a.begin(), a.end(), b.begin());
}

// ---------------------------------------------------------------------------
// Omega_n

struct OmegaTuple {
  Nat level = 0;
  std::vector<Node> nodes;

  friend bool operator==(const OmegaTuple&, const OmegaTuple&) = default;
};

inline std::vector<Node> level_n_prefixes(Nat n, const OmegaTuple& t) {
  std::vector<Node> out;
  for (const auto& node : t.nodes) out.emplace_back(node.begin(), node.begin() + n);
  return out;
}

inline bool is_tree_node(Nat n, const Node& node) {
  for (Nat k = n; k < node.size(); ++k)
    if (node[k] > 1) return false;
  return true;
}

inline bool in_omega(Nat n, const OmegaTuple& t) {
  if (n == 0 || t.nodes.size() != n || t.level <= n) return false;
  for (const auto& node : t.nodes)
    if (node.size() != t.level || !is_tree_node(n, node)) return false;
  return tuple_code(level_n_prefixes(n, t)) < t.level;
}

inline BigNat omega_block(Nat n, Nat level) { return BigNat(1) << static_cast<unsigned>(n * (level - n)); }

inline BigNat omega_level_size(Nat n, Nat level) { return BigNat(level) * omega_block(n, level); }

/// Number of Omega_n elements on levels below `level`.
inline BigNat omega_offset(Nat n, Nat level) {
  BigNat total = 0;
  for (Nat l = n + 1; l < level; ++l) total += omega_level_size(n, l);
  return total;
}

inline BigNat suffix_number(Nat n, const OmegaTuple& t) {
  BigNat out = 0;
  for (const auto& node : t.nodes)
    for (Nat k = n; k < t.level; ++k) out = out * 2 + node[k];
  return out;
}

inline BigNat omega_index(Nat n, const OmegaTuple& t) {
  if (!in_omega(n, t)) throw ContractError("omega_index: tuple is not in Omega_" + std::to_string(n));
  return omega_offset(n, t.level) + tuple_code(level_n_prefixes(n, t)) * omega_block(n, t.level) +
         suffix_number(n, t);
}

inline constexpr Nat kMaxLevel = 4096;

inline OmegaTuple omega_at(Nat n, BigNat index) {
  if (n == 0) throw ContractError("omega_at: column must be >= 1");
  Nat level = n + 1;
  while (index >= omega_level_size(n, level)) {
    index -= omega_level_size(n, level);
    if (++level > kMaxLevel) throw ResourceLimit("omega_at: index beyond materialization bound");
  }
  const BigNat block = omega_block(n, level);
  const BigNat code = index / block;
  BigNat suffix = index % block;
  OmegaTuple t{level, tuple_decode(code, n)};
  for (Nat i = 0; i < n; ++i) t.nodes[i].resize(level);
  for (Nat i = n; i-- > 0;)
    for (Nat k = level; k-- > n;) {
      t.nodes[i][k] = static_cast<Nat>(suffix % 2);
      suffix /= 2;
    }
  return t;
}

struct IndexedTuple {
  BigNat index;
  OmegaTuple tuple;
};

/// All tuples of Omega_n on `level` that contain every node of `required`
/// as a component, with their indices, in enumeration order. Tuples whose
/// index exceeds `max_index` (when given) are skipped.
inline std::vector<IndexedTuple> enumerate_level_indexed(Nat n, Nat level, const std::vector<Node>& required,
                                                         const std::optional<BigNat>& max_index = std::nullopt) {
  if (level <= n) throw ContractError("enumerate_level: level must exceed n");
  std::set<Node> distinct(required.begin(), required.end());
  for (const auto& r : distinct)
    if (r.size() != level || !is_tree_node(n, r)) throw ContractError("enumerate_level: required node has wrong shape");
  std::vector<IndexedTuple> out;
  if (distinct.size() > n) return out;
  const std::vector<Node> req(distinct.begin(), distinct.end());
  const BigNat offset = omega_offset(n, level);
  const Nat width = level - n;

  for (Nat code = 0; code < level; ++code) {
    const BigNat base = offset + BigNat(code) * omega_block(n, level);
    if (max_index && base > *max_index) break;
    const auto prefixes = tuple_decode(code, n);
    std::vector<Node> slots(n);
    std::vector<int> cover(req.size(), 0);
    std::size_t uncovered = req.size();

    auto visit = [&](auto&& self, Nat slot, const BigNat& partial) -> void {
      if (slot == n) {
        out.push_back({base + partial, {level, slots}});
        return;
      }
      const Nat remaining = n - slot;
      if (uncovered > remaining) return;
      const bool forced = uncovered == remaining;
      auto place = [&](Node node, const BigNat& suffix) -> bool {
        const BigNat next = (partial << static_cast<unsigned>(width)) + suffix;
        if (max_index && base + (next << static_cast<unsigned>(width * (remaining - 1))) > *max_index) return false;
        std::vector<std::size_t> hit;
        for (std::size_t r = 0; r < req.size(); ++r)
          if (req[r] == node && cover[r]++ == 0) hit.push_back(r);
        uncovered -= hit.size();
        slots[slot] = std::move(node);
        self(self, slot + 1, next);
        uncovered += hit.size();
        for (std::size_t r = 0; r < req.size(); ++r)
          if (req[r] == slots[slot]) --cover[r];
        return true;
      };
      auto suffix_of = [&](const Node& node) {
        BigNat v = 0;
        for (Nat k = n; k < level; ++k) v = v * 2 + node[k];
        return v;
      };
      if (forced) {
        // Only uncovered required nodes with this slot's prefix can go here.
        std::vector<std::pair<BigNat, std::size_t>> candidates;
        for (std::size_t r = 0; r < req.size(); ++r)
          if (!cover[r] && std::equal(prefixes[slot].begin(), prefixes[slot].end(), req[r].begin()))
            candidates.emplace_back(suffix_of(req[r]), r);
        std::sort(candidates.begin(), candidates.end());
        for (auto [suffix, r] : candidates)
          if (!place(req[r], suffix)) break;
        return;
      }
      if (width > 40) throw ResourceLimit("enumerate_level: level too deep to enumerate");
      for (Nat suffix = 0; suffix < (Nat{1} << width); ++suffix) {
        Node node = prefixes[slot];
        for (Nat k = 0; k < width; ++k) node.push_back((suffix >> (width - 1 - k)) & 1u);
        if (!place(std::move(node), BigNat(suffix))) break;
      }
    };
    visit(visit, 0, BigNat(0));
  }
  return out;
}

inline std::vector<OmegaTuple> enumerate_level(Nat n, Nat level, const std::vector<Node>& required,
                                               const std::optional<BigNat>& max_index = std::nullopt) {
  std::vector<OmegaTuple> out;
  for (auto& it : enumerate_level_indexed(n, level, required, max_index)) out.push_back(std::move(it.tuple));
  return out;
}

/// psi_n(iota_n(f)) on one level of Omega_n.
inline std::vector<OmegaTuple> psi_n_level(Nat n, const Branch& f, Nat level) {
  if (n == 0) throw ContractError("psi_n_level: column must be >= 1");
  if (level <= n) throw ContractError("psi_n_level: level must exceed n");
  return enumerate_level(n, level, {iota_prefix(n, f, level).node});
}

/// Is the Omega_n tuple in psi_n(iota_n(f))?
inline bool psi_n_contains(Nat n, const Branch& f, const OmegaTuple& t) {
  if (!in_omega(n, t)) return false;
  const Node branch = iota_prefix(n, f, t.level).node;
  return std::find(t.nodes.begin(), t.nodes.end(), branch) != t.nodes.end();
}

// ---------------------------------------------------------------------------
// The glued map psi

struct PsiPrefix {
  std::vector<Nat> elements;  // sorted
  Nat depth = 0;              // coordinates of f that determined the answer
};

/// psi(f) ∩ [0, bound).
inline PsiPrefix psi_prefix(const Branch& f, Nat bound) {
  PsiPrefix out;
  for (Nat n = 1; cantor_pair(n, 0) < bound; ++n) {
    // Largest m with pair(n, m) < bound.
    Nat m_max = 0;
    while (cantor_pair(n, m_max + 1) < bound) ++m_max;
    for (Nat level = n + 1; omega_offset(n, level) <= m_max; ++level) {
      auto branch = iota_prefix(n, f, level);
      out.depth = std::max(out.depth, branch.depth);
      for (const auto& it : enumerate_level_indexed(n, level, {branch.node}, BigNat(m_max)))
        out.elements.push_back(cantor_pair(n, it.index).convert_to<Nat>());
    }
  }
  std::sort(out.elements.begin(), out.elements.end());
  return out;
}

/// Membership x ∈ psi(f), by decoding x into (column, Omega index).
inline bool psi_contains(const Branch& f, const BigNat& x) {
  auto [n, m] = cantor_unpair(x);
  if (n == 0) return false;
  const Nat column = n.convert_to<Nat>();
  return psi_n_contains(column, f, omega_at(column, m));
}

// ---------------------------------------------------------------------------
// Finite intersections in one column

struct IntersectionResult {
  Nat column = 0;
  Nat distinct_level = 0;  // first level at which all branches differ
  std::vector<OmegaTuple> tuples;  // complete: every common element
};

/// First level at which the iota_n-prefixes of all branches are pairwise
/// distinct.
inline Nat first_distinct_level(Nat n, const std::vector<Branch>& fs) {
  for (std::size_t i = 0; i < fs.size(); ++i)
    for (std::size_t j = i + 1; j < fs.size(); ++j)
      if (fs[i] == fs[j]) throw ContractError("branches " + fs[i].str() + " are indistinguishable");
  for (Nat level = 1; level <= kMaxLevel; ++level) {
    std::set<Node> seen;
    for (const auto& f : fs) seen.insert(iota_prefix(n, f, level).node);
    if (seen.size() == fs.size()) return level;
  }
  throw ResourceLimit("first_distinct_level: branches agree beyond the level bound");
}

/// psi_n(f_1) ∩ ... ∩ psi_n(f_{n+1}) for n+1 distinct branches; finite, and
/// all of its elements lie strictly below the first level where the
/// branches separate.
inline IntersectionResult intersection_exact(Nat n, const std::vector<Branch>& fs) {
  if (n == 0) throw ContractError("intersection_exact: column must be >= 1");
  if (fs.size() != n + 1) throw ContractError("intersection_exact: expected n+1 branches");
  IntersectionResult out{n, first_distinct_level(n, fs), {}};
  for (Nat level = n + 1; level < out.distinct_level; ++level) {
    std::vector<Node> required;
    for (const auto& f : fs) required.push_back(iota_prefix(n, f, level).node);
    for (auto& t : enumerate_level(n, level, required)) out.tuples.push_back(std::move(t));
  }
  return out;
}

struct Witness {
  OmegaTuple tuple;
  BigNat index;  // position in Omega_n
};

inline constexpr Nat kWitnessLevelBound = 512;

/// `count` common elements of psi_n(f_1), ..., psi_n(f_k) for k <= n: the
/// tuples of branch restrictions (padded with f_1) on successive levels
/// past the code of their level-n prefixes.
inline std::vector<Witness> witness_stream(Nat n, const std::vector<Branch>& fs, Nat count) {
  if (fs.empty() || fs.size() > n) throw ContractError("witness_stream: need 1 <= k <= n branches");
  std::vector<Node> prefixes;
  for (Nat i = 0; i < n; ++i) prefixes.push_back(iota_prefix(n, fs[i < fs.size() ? i : 0], n).node);
  const BigNat code = tuple_code(prefixes);
  if (code >= kWitnessLevelBound) {
    throw ResourceLimit("witness_stream: prefix code " + code.str() + " needs levels beyond the materialization bound");
  }
  const Nat start = std::max<Nat>(n, code.convert_to<Nat>()) + 1;
  std::vector<Witness> out;
  for (Nat level = start; out.size() < count; ++level) {
    OmegaTuple t{level, {}};
    for (Nat i = 0; i < n; ++i) t.nodes.push_back(iota_prefix(n, fs[i < fs.size() ? i : 0], level).node);
    for (const auto& f : fs)
      if (!psi_n_contains(n, f, t)) throw MachineFault("witness_stream: produced tuple failed verification");
    out.push_back({t, omega_index(n, t)});
  }
  return out;
}

struct CenteredWitness {
  Nat column = 0;
  std::vector<BigNat> elements;  // elements of the intersection of psi(f_i), increasing
};

inline CenteredWitness centered_witness(const std::vector<Branch>& fs, Nat count) {
  if (fs.empty()) throw ContractError("centered_witness: empty family");
  std::vector<Branch> unique;
  for (const auto& f : fs)
    if (std::find(unique.begin(), unique.end(), f) == unique.end()) unique.push_back(f);
  const Nat n = unique.size();
  CenteredWitness out{n, {}};
  for (const auto& w : witness_stream(n, unique, count)) out.elements.push_back(cantor_pair(n, w.index));
  return out;
}

// ---------------------------------------------------------------------------
// Emptiness of column intersections for many separated branches

struct ColumnEmptiness {
  Nat column = 0;
  bool covered = false;
  std::vector<std::size_t> chosen;     // n+1 indices with pairwise distinct level-n prefixes
  std::vector<Node> prefixes;
  std::string reason;
};

/// Pigeonhole certificate: n+1 branches with distinct level-n prefixes
/// have empty common psi_n.
inline bool verify_emptiness(const ColumnEmptiness& c) {
  if (!c.covered) return false;
  std::set<Node> distinct(c.prefixes.begin(), c.prefixes.end());
  return c.prefixes.size() == c.column + 1 && distinct.size() == c.column + 1;
}

inline std::vector<ColumnEmptiness> unbounded_intersection_bound(const std::vector<Branch>& fs, Nat max_column) {
  std::vector<ColumnEmptiness> out;
  for (Nat n = 1; n <= max_column; ++n) {
    ColumnEmptiness c{n, false, {}, {}, {}};
    std::set<Node> seen;
    for (std::size_t i = 0; i < fs.size() && c.chosen.size() < n + 1; ++i) {
      Node p = iota_prefix(n, fs[i], n).node;
      if (seen.insert(p).second) {
        c.chosen.push_back(i);
        c.prefixes.push_back(std::move(p));
      }
    }
    if (c.chosen.size() == n + 1) {
      c.covered = true;
    } else {
      c.reason = "only " + std::to_string(seen.size()) + " distinct level-" + std::to_string(n) +
                 " prefixes, need " + std::to_string(n + 1);
      c.chosen.clear();
      c.prefixes.clear();
    }
    out.push_back(std::move(c));
  }
  return out;
}

// ---------------------------------------------------------------------------
// Bounds from observed traces

struct BoundCertificate {
  Nat column = 0;
  std::vector<OmegaTuple> constraints;  // each: f extends one of its components
  bool empty = false;                   // no branch is consistent with all constraints
  std::vector<Nat> bound;               // f(k) <= bound[k] for k < bound.size()
  std::size_t consistent_unions = 0;
};

/// Merge two comparable nodes into the longer; nullopt if incomparable.
inline std::optional<Node> merge_nodes(const Node& a, const Node& b) {
  if (is_prefix(a, b)) return b;
  if (is_prefix(b, a)) return a;
  return std::nullopt;
}

/// Every f with psi_n(f) containing all observations extends, for some
/// choice of one component per observation, the union of the chosen
/// components; the bound is the per-coordinate maximum over the consistent
/// choices, on the coordinates all of them determine.
inline BoundCertificate bound_from_trace(Nat column, const std::vector<OmegaTuple>& observed) {
  if (observed.empty()) throw ContractError("bound_from_trace: no observations");
  for (const auto& t : observed)
    if (!in_omega(column, t)) throw ContractError("bound_from_trace: observation not in Omega_" + std::to_string(column));
  BoundCertificate cert{column, observed, false, {}, 0};
  std::set<Node> frontier{Node{}};
  for (const auto& t : observed) {
    std::set<Node> next;
    for (const auto& u : frontier)
      for (const auto& component : t.nodes)
        if (auto merged = merge_nodes(u, component)) next.insert(*merged);
    frontier = std::move(next);
    if (frontier.empty()) break;
  }
  if (frontier.empty()) {
    cert.empty = true;
    return cert;
  }
  cert.consistent_unions = frontier.size();
  std::optional<std::size_t> domain;
  for (const auto& u : frontier) {
    auto values = iota_inverse(column, u);
    domain = domain ? std::min(*domain, values.size()) : values.size();
    if (cert.bound.size() < values.size()) cert.bound.resize(values.size(), 0);
    for (std::size_t k = 0; k < values.size(); ++k) cert.bound[k] = std::max(cert.bound[k], values[k]);
  }
  cert.bound.resize(*domain);
  return cert;
}

/// Pointwise maximum of the column bounds on their domains, continued by
/// the identity.
inline APFunc diagonal_bound(const std::vector<BoundCertificate>& certs) {
  std::vector<Nat> prefix;
  for (const auto& c : certs) {
    if (c.empty) continue;
    if (prefix.size() < c.bound.size()) prefix.resize(c.bound.size(), 0);
    for (std::size_t k = 0; k < c.bound.size(); ++k) prefix[k] = std::max(prefix[k], c.bound[k]);
  }
  for (std::size_t k = 0; k < prefix.size(); ++k) prefix[k] = std::max<Nat>(prefix[k], k);
  const Nat tail = prefix.size();
  return APFunc(std::move(prefix), {tail}, 1);
}

/// Candidate bound phi(A) for an ultimately periodic A: each element of A
/// below `horizon` is read as an observation in its column, and the column
/// bounds are diagonalized.
inline APFunc bound_for_set(const UPSet& a, Nat horizon = 2048) {
  std::map<Nat, std::vector<OmegaTuple>> by_column;
  for (Nat x : a.elements_below(horizon)) {
    auto [n, m] = cantor_unpair(x);
    if (n == 0) continue;
    const Nat column = n.convert_to<Nat>();
    by_column[column].push_back(omega_at(column, m));
  }
  std::vector<BoundCertificate> certs;
  for (const auto& [column, obs] : by_column) certs.push_back(bound_from_trace(column, obs));
  return diagonal_bound(certs);
}

}  // namespace tukey::bp
