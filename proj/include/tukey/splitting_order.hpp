#pragma once

// Borel Tukey order among the (n,m)-splitting triples: the bucket
// inequality, its two brute-force readings (balls in buckets, regions hit
// by columns), edge verdicts, the 2^m antichain and the embedding of the
// superset order on finite subsets of {3,4,5,...}.

#include <algorithm>
#include <bit>
#include <cstdint>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "tukey/core_reals.hpp"
#include "tukey/errors.hpp"

namespace tukey::splitting {

struct SplitSpec {
  Nat n = 1;
  Nat m = 1;

  static SplitSpec make(Nat n, Nat m) {
    if (n < 1 || m < 1 || m > n) {
      throw ContractError("SplitSpec needs 1 <= m <= n, got n=" + std::to_string(n) + " m=" + std::to_string(m));
    }
    return {n, m};
  }

  friend bool operator==(const SplitSpec&, const SplitSpec&) = default;
};

/// floor(n/n')(m'-1) + min(n mod n', m'-1).
inline Nat eq1_lhs(Nat n, Nat n_target, Nat m_target) {
  if (n_target == 0) throw ContractError("eq1_lhs: n' must be positive");
  const Nat shaded = m_target == 0 ? 0 : m_target - 1;
  return (n / n_target) * shaded + std::min(n % n_target, shaded);
}

/// Column sizes when n items are spread evenly over `columns` ordered
/// columns, remainder going to the left-most ones.
inline std::vector<Nat> even_spread(Nat n, Nat columns) {
  std::vector<Nat> sizes(columns, n / columns);
  for (Nat i = 0; i < n % columns; ++i) ++sizes[i];
  return sizes;
}

/// Drops n balls one at a time into n' buckets round-robin and counts those
/// that land in the first m'-1 buckets.
inline Nat balls_oracle(Nat n, Nat n_target, Nat m_target) {
  if (n_target == 0) throw ContractError("balls_oracle: n' must be positive");
  std::vector<Nat> buckets(n_target, 0);
  for (Nat ball = 0; ball < n; ++ball) ++buckets[ball % n_target];
  Nat shaded = 0;
  for (Nat b = 0; b + 1 < m_target && b < n_target; ++b) shaded += buckets[b];
  return shaded;
}

inline constexpr Nat kMinColumnsBound = 30;

/// Regions 0..n-1 are laid out in n' columns (even spread, remainder left);
/// returns the least number of distinct columns touched by an m-element set
/// of regions, by enumerating every m-subset.
inline Nat min_columns_hit(Nat n, Nat n_target, Nat m, Nat bound = kMinColumnsBound) {
  if (n_target == 0) throw ContractError("min_columns_hit: n' must be positive");
  if (m < 1 || m > n) throw ContractError("min_columns_hit: need 1 <= m <= n");
  if (n > bound || n > 62) throw ResourceLimit("min_columns_hit: n exceeds enumeration bound " + std::to_string(bound));
  std::vector<Nat> column_of;
  const auto sizes = even_spread(n, n_target);
  for (Nat c = 0; c < n_target; ++c)
    for (Nat j = 0; j < sizes[c]; ++j) column_of.push_back(c);

  Nat best = n_target;
  // Gosper's hack over m-subsets of n regions.
  std::uint64_t subset = (std::uint64_t{1} << m) - 1;
  const std::uint64_t limit = std::uint64_t{1} << n;
  while (subset < limit) {
    std::uint64_t touched = 0;
    for (std::uint64_t rest = subset; rest; rest &= rest - 1)
      touched |= std::uint64_t{1} << column_of[std::countr_zero(rest)];
    best = std::min<Nat>(best, std::popcount(touched));
    const std::uint64_t low = subset & -subset;
    const std::uint64_t ripple = subset + low;
    subset = (((ripple ^ subset) >> 2) / low) | ripple;
  }
  return best;
}

/// Greedy reading of the same quantity: fill the fullest columns first.
/// Agrees with min_columns_hit on the exhaustively tested range.
inline Nat min_columns_hit_greedy(Nat n, Nat n_target, Nat m) {
  if (n_target == 0) throw ContractError("min_columns_hit_greedy: n' must be positive");
  if (m < 1 || m > n) throw ContractError("min_columns_hit_greedy: need 1 <= m <= n");
  Nat filled = 0, used = 0;
  for (Nat size : even_spread(n, n_target)) {
    if (filled >= m) break;
    filled += size;
    ++used;
  }
  return used;
}

enum class EdgeResult { morphism, no_morphism };
enum class EdgeReason { m_increase, eq1_holds, eq1_fails };

struct EdgeVerdict {
  SplitSpec source;
  SplitSpec target;
  EdgeResult result;
  EdgeReason reason;
  std::optional<Nat> lhs_value;

  bool is_morphism() const { return result == EdgeResult::morphism; }
};

inline std::string to_string(EdgeReason r) {
  switch (r) {
    case EdgeReason::m_increase:
      return "m_increase";
    case EdgeReason::eq1_holds:
      return "eq1_holds";
    case EdgeReason::eq1_fails:
      return "eq1_fails";
  }
  return "?";
}

inline std::string describe(const EdgeVerdict& v) {
  switch (v.reason) {
    case EdgeReason::m_increase:
      return "no morphism (m < m')";
    case EdgeReason::eq1_holds:
      return "morphism (shaded " + std::to_string(*v.lhs_value) + " < " + std::to_string(v.source.m) + ")";
    case EdgeReason::eq1_fails:
      return "no morphism (shaded " + std::to_string(*v.lhs_value) + " >= " + std::to_string(v.source.m) + ")";
  }
  return "?";
}

/// Is there a Borel Tukey morphism from s_{a.n,a.m} to s_{b.n,b.m}?
inline EdgeVerdict bt_edge(SplitSpec a, SplitSpec b) {
  a = SplitSpec::make(a.n, a.m);
  b = SplitSpec::make(b.n, b.m);
  if (a.m < b.m) return {a, b, EdgeResult::no_morphism, EdgeReason::m_increase, std::nullopt};
  const Nat lhs = eq1_lhs(a.n, b.n, b.m);
  if (lhs < a.m) return {a, b, EdgeResult::morphism, EdgeReason::eq1_holds, lhs};
  return {a, b, EdgeResult::no_morphism, EdgeReason::eq1_fails, lhs};
}

struct AntichainPair {
  Nat small = 0;  // m
  Nat large = 0;  // m'
  EdgeVerdict up;    // (2^m, m) -> (2^m', m')
  EdgeVerdict down;  // (2^m', m') -> (2^m, m)
  // 2^{m'-m}(m-1) >= (m'-m+1)(m-1) >= (m'-m+1)+(m-1) = m'
  Nat chain_power = 0;
  Nat chain_product = 0;
  Nat chain_sum = 0;
  bool chain_holds = false;
};

struct AntichainReport {
  Nat max_m = 0;
  std::vector<AntichainPair> pairs;
  bool all_incomparable = true;
};

inline AntichainReport antichain(Nat max_m) {
  if (max_m < 3) throw ContractError("antichain: M must be >= 3");
  if (max_m > 62) throw ResourceLimit("antichain: 2^M must fit in 64 bits");
  AntichainReport report{max_m, {}, true};
  for (Nat m = 3; m <= max_m; ++m) {
    for (Nat big = m + 1; big <= max_m; ++big) {
      const SplitSpec lo{Nat{1} << m, m}, hi{Nat{1} << big, big};
      AntichainPair pair{m, big, bt_edge(lo, hi), bt_edge(hi, lo)};
      const Nat diff = big - m;
      pair.chain_power = (Nat{1} << diff) * (m - 1);
      pair.chain_product = (diff + 1) * (m - 1);
      pair.chain_sum = (diff + 1) + (m - 1);
      pair.chain_holds = pair.chain_power >= pair.chain_product && pair.chain_product >= pair.chain_sum &&
                         pair.chain_sum == big;
      report.all_incomparable = report.all_incomparable && !pair.up.is_morphism() && !pair.down.is_morphism() &&
                                pair.chain_holds;
      report.pairs.push_back(pair);
    }
  }
  return report;
}

/// Finite X ⊆ {3,4,5,...}: a family is X-splitting iff it is
/// (2^m, m)-splitting for every m in X.
class XSpec {
 public:
  XSpec() = default;
  explicit XSpec(std::set<Nat> elements) : elements_(std::move(elements)) {
    for (Nat e : elements_)
      if (e < 3) throw ContractError("XSpec elements must be >= 3, got " + std::to_string(e));
  }
  const std::set<Nat>& elements() const { return elements_; }
  bool includes(const XSpec& other) const {
    return std::includes(elements_.begin(), elements_.end(), other.elements_.begin(), other.elements_.end());
  }

 private:
  std::set<Nat> elements_;
};

struct XOrderResult {
  EdgeResult result;
  std::optional<Nat> witness;          // m0 in Y \ X
  std::vector<EdgeVerdict> obstructions;  // (2^m,m) -> (2^{m0},m0), m in X

  bool is_morphism() const { return result == EdgeResult::morphism; }
};

inline XOrderResult x_order(const XSpec& x, const XSpec& y) {
  if (x.includes(y)) return {EdgeResult::morphism, std::nullopt, {}};
  Nat m0 = 0;
  for (Nat e : y.elements())
    if (!x.elements().count(e)) {
      m0 = e;
      break;
    }
  XOrderResult out{EdgeResult::no_morphism, m0, {}};
  for (Nat m : x.elements()) out.obstructions.push_back(bt_edge({Nat{1} << m, m}, {Nat{1} << m0, m0}));
  return out;
}

struct NMSplitResult {
  bool holds = false;
  std::optional<std::size_t> member;  // index of the witnessing coloring
  std::vector<std::size_t> split_targets;
};

/// Does some coloring in the family split at least m of the n targets?
inline NMSplitResult is_nm_splitting(const std::vector<UPSet>& family, const std::vector<UPSet>& targets, Nat m) {
  for (const auto& t : targets)
    if (!t.is_infinite()) throw ContractError("is_nm_splitting: targets must be infinite");
  NMSplitResult best;
  for (std::size_t i = 0; i < family.size(); ++i) {
    std::vector<std::size_t> hit;
    for (std::size_t j = 0; j < targets.size(); ++j)
      if (splits(family[i], targets[j])) hit.push_back(j);
    if (hit.size() >= m) return {true, i, std::move(hit)};
    if (hit.size() > best.split_targets.size()) best = {false, i, std::move(hit)};
  }
  return best;
}

}  // namespace tukey::splitting
