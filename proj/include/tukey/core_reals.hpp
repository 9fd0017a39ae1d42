#pragma once

// Decidable stand-ins for [omega]^omega, 2^omega and omega^omega:
// ultimately periodic sets and arithmetically periodic functions.
// Every relation used by the combinatorial triples (almost containment,
// splitting, almost disjointness, eventual domination) is exactly decidable
// on these representations.

#include <algorithm>
#include <charconv>
#include <cstdint>
#include <numeric>
#include <ostream>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "tukey/errors.hpp"

namespace tukey {

using Nat = std::uint64_t;
using Bits = std::vector<bool>;

namespace detail {

inline Nat lcm(Nat a, Nat b) { return std::lcm(a, b); }

inline Nat parse_nat(std::string_view s, std::string_view what) {
  Nat v = 0;
  auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
  if (s.empty() || ec != std::errc() || ptr != s.data() + s.size()) {
    throw ContractError("malformed natural '" + std::string(s) + "' in " + std::string(what));
  }
  return v;
}

inline std::vector<std::string_view> split(std::string_view s, char sep) {
  std::vector<std::string_view> out;
  std::size_t start = 0;
  while (true) {
    auto pos = s.find(sep, start);
    if (pos == std::string_view::npos) {
      out.push_back(s.substr(start));
      return out;
    }
    out.push_back(s.substr(start, pos - start));
    start = pos + 1;
  }
}

// Smallest d dividing word.size() such that word is d-periodic.
template <typename Word, typename Eq>
std::size_t primitive_length(const Word& word, Eq&& shifted_equal) {
  const std::size_t p = word.size();
  for (std::size_t d = 1; d < p; ++d) {
    if (p % d == 0 && shifted_equal(d)) return d;
  }
  return p;
}

}  // namespace detail

/// Ultimately periodic subset of omega. Membership of k < |prefix| is
/// prefix[k]; membership of k >= |prefix| is period[(k - |prefix|) mod |period|].
/// Always stored in canonical form (primitive period, then shortest prefix), so
/// equality of objects is equality of the denoted sets.
class UPSet {
 public:
  UPSet() : period_{false} {}

  UPSet(Bits prefix, Bits period) : prefix_(std::move(prefix)), period_(std::move(period)) {
    if (period_.empty()) throw ContractError("UPSet period must be nonempty");
    canonicalize();
  }

  static UPSet all() { return UPSet({}, {true}); }
  static UPSet empty() { return UPSet(); }

  /// { k : k mod modulus in residues }.
  static UPSet residues(Nat modulus, const std::vector<Nat>& residues) {
    if (modulus == 0) throw ContractError("residue modulus must be positive");
    Bits period(modulus, false);
    for (Nat r : residues) period[r % modulus] = true;
    return UPSet({}, std::move(period));
  }

  static UPSet finite(const std::vector<Nat>& elements) {
    Nat top = elements.empty() ? 0 : *std::max_element(elements.begin(), elements.end()) + 1;
    Bits prefix(top, false);
    for (Nat e : elements) prefix[e] = true;
    return UPSet(std::move(prefix), {false});
  }

  static UPSet evens() { return residues(2, {0}); }
  static UPSet odds() { return residues(2, {1}); }

  /// Literal "prefix|period" over {0,1}; an empty prefix may be written as
  /// "" or "ε" (also accepted: "e").
  static UPSet parse(std::string_view text) {
    auto bar = text.find('|');
    if (bar == std::string_view::npos || text.find('|', bar + 1) != std::string_view::npos) {
      throw ContractError("UPSet literal needs exactly one '|': " + std::string(text));
    }
    auto read = [&](std::string_view part, bool allow_empty) {
      if (part == "ε" || part == "e") part = {};
      if (part.empty() && !allow_empty) throw ContractError("UPSet period must be nonempty");
      Bits bits;
      for (char ch : part) {
        if (ch != '0' && ch != '1') {
          throw ContractError("UPSet literal must be bits: " + std::string(text));
        }
        bits.push_back(ch == '1');
      }
      return bits;
    };
    return UPSet(read(text.substr(0, bar), true), read(text.substr(bar + 1), false));
  }

  std::string str() const {
    std::string out;
    if (prefix_.empty()) out = "ε";
    for (bool b : prefix_) out.push_back(b ? '1' : '0');
    out.push_back('|');
    for (bool b : period_) out.push_back(b ? '1' : '0');
    return out;
  }

  bool contains(Nat k) const {
    if (k < prefix_.size()) return prefix_[k];
    return period_[(k - prefix_.size()) % period_.size()];
  }

  const Bits& prefix() const { return prefix_; }
  const Bits& period() const { return period_; }


  bool is_infinite() const { return std::find(period_.begin(), period_.end(), true) != period_.end(); }
  bool is_coinfinite() const { return std::find(period_.begin(), period_.end(), false) != period_.end(); }
  bool is_ic() const { return is_infinite() && is_coinfinite(); }

  std::vector<Nat> elements_below(Nat bound) const {
    std::vector<Nat> out;
    for (Nat k = 0; k < bound; ++k)
      if (contains(k)) out.push_back(k);
    return out;
  }

  /// Largest distance between consecutive elements in the periodic part;
  /// every window of this length beyond the prefix meets the set.
  Nat eventual_max_gap() const {
    if (!is_infinite()) throw ContractError("eventual_max_gap of a finite set");
    std::vector<Nat> ones;
    for (std::size_t i = 0; i < period_.size(); ++i)
      if (period_[i]) ones.push_back(i);
    Nat gap = ones.front() + period_.size() - ones.back();
    for (std::size_t i = 1; i < ones.size(); ++i) gap = std::max<Nat>(gap, ones[i] - ones[i - 1]);
    return gap;
  }

  friend bool operator==(const UPSet&, const UPSet&) = default;

 private:
  void canonicalize() {
    const std::size_t d = detail::primitive_length(period_, [&](std::size_t s) {
      for (std::size_t i = 0; i + s < period_.size(); ++i)
        if (period_[i] != period_[i + s]) return false;
      return true;
    });
    period_.resize(d);
    // Fold trailing prefix bits into the period by rotation.
    while (!prefix_.empty() && prefix_.back() == period_.back()) {
      bool last = period_.back();
      period_.pop_back();
      period_.insert(period_.begin(), last);
      prefix_.pop_back();
    }
  }

  Bits prefix_;
  Bits period_;
};

inline std::ostream& operator<<(std::ostream& os, const UPSet& s) { return os << s.str(); }

enum class SetOp { intersect, unite, minus };

namespace detail {

template <typename Fn>
UPSet combine(const UPSet& a, const UPSet& b, Fn&& fn) {
  const std::size_t start = std::max(a.prefix().size(), b.prefix().size());
  const std::size_t period = lcm(a.period().size(), b.period().size());
  Bits prefix(start), word(period);
  for (std::size_t k = 0; k < start; ++k) prefix[k] = fn(a.contains(k), b.contains(k));
  for (std::size_t i = 0; i < period; ++i) word[i] = fn(a.contains(start + i), b.contains(start + i));
  return UPSet(std::move(prefix), std::move(word));
}

}  // namespace detail

inline UPSet upset_algebra(const UPSet& a, const UPSet& b, SetOp op) {
  switch (op) {
    case SetOp::intersect:
      return detail::combine(a, b, [](bool x, bool y) { return x && y; });
    case SetOp::unite:
      return detail::combine(a, b, [](bool x, bool y) { return x || y; });
    case SetOp::minus:
      return detail::combine(a, b, [](bool x, bool y) { return x && !y; });
  }
  return UPSet();
}

inline UPSet complement(const UPSet& a) {
  Bits prefix = a.prefix(), period = a.period();
  prefix.flip();
  period.flip();
  return UPSet(std::move(prefix), std::move(period));
}

inline UPSet operator&(const UPSet& a, const UPSet& b) { return upset_algebra(a, b, SetOp::intersect); }
inline UPSet operator|(const UPSet& a, const UPSet& b) { return upset_algebra(a, b, SetOp::unite); }
inline UPSet operator-(const UPSet& a, const UPSet& b) { return upset_algebra(a, b, SetOp::minus); }
inline UPSet operator~(const UPSet& a) { return complement(a); }

/// A ⊂* B: A minus B is finite.
inline bool almost_subset(const UPSet& a, const UPSet& b) { return !(a - b).is_infinite(); }

/// A ⊥ B: A ∩ B is finite.
inline bool almost_disjoint(const UPSet& a, const UPSet& b) { return !(a & b).is_infinite(); }

/// The coloring c (read as its characteristic function) takes both values
/// infinitely often on the infinite set A.
inline bool splits(const UPSet& coloring, const UPSet& target) {
  if (!target.is_infinite()) throw ContractError("splits: target set must be infinite");
  return (target & coloring).is_infinite() && (target - coloring).is_infinite();
}

/// Arithmetically periodic function omega -> omega. For k = n0 + q*p + i
/// (n0 = |prefix|, p = |base|, i < p) the value is base[i] + q*drift.
class APFunc {
 public:
  APFunc() : base_{0} {}

  APFunc(std::vector<Nat> prefix, std::vector<Nat> base, Nat drift)
      : prefix_(std::move(prefix)), base_(std::move(base)), drift_(drift) {
    if (base_.empty()) throw ContractError("APFunc base must be nonempty");
    canonicalize();
  }

  static APFunc constant(Nat v) { return APFunc({}, {v}, 0); }
  static APFunc identity() { return APFunc({}, {0}, 1); }
  /// k -> slope*k + offset.
  static APFunc affine(Nat slope, Nat offset) { return APFunc({}, {offset}, slope); }

  /// Literal "v0,v1,...;b0,b1,...;drift" (the prefix list may be empty).
  static APFunc parse(std::string_view text) {
    auto parts = detail::split(text, ';');
    if (parts.size() != 3) throw ContractError("APFunc literal needs 'prefix;base;drift': " + std::string(text));
    auto list = [&](std::string_view part) {
      std::vector<Nat> out;
      if (part.empty()) return out;
      for (auto item : detail::split(part, ',')) out.push_back(detail::parse_nat(item, "APFunc literal"));
      return out;
    };
    auto base = list(parts[1]);
    if (base.empty()) throw ContractError("APFunc base must be nonempty");
    return APFunc(list(parts[0]), std::move(base), detail::parse_nat(parts[2], "APFunc drift"));
  }

  std::string str() const {
    auto join = [](const std::vector<Nat>& v) {
      std::string out;
      for (std::size_t i = 0; i < v.size(); ++i) {
        if (i) out.push_back(',');
        out += std::to_string(v[i]);
      }
      return out;
    };
    return join(prefix_) + ";" + join(base_) + ";" + std::to_string(drift_);
  }

  Nat operator()(Nat k) const {
    if (k < prefix_.size()) return prefix_[k];
    const Nat j = k - prefix_.size();
    return base_[j % base_.size()] + (j / base_.size()) * drift_;
  }

  std::vector<Nat> values_below(Nat n) const {
    std::vector<Nat> out(n);
    for (Nat k = 0; k < n; ++k) out[k] = (*this)(k);
    return out;
  }

  const std::vector<Nat>& prefix() const { return prefix_; }
  const std::vector<Nat>& base() const { return base_; }
  Nat drift() const { return drift_; }
  Nat period() const { return base_.size(); }
  bool eventually_bounded() const { return drift_ == 0; }

  friend bool operator==(const APFunc&, const APFunc&) = default;

 private:
  void canonicalize() {
    const Nat p = base_.size();
    const Nat n0 = prefix_.size();
    const std::size_t d = detail::primitive_length(base_, [&](std::size_t s) {
      if ((drift_ * s) % p != 0) return false;
      const Nat step = drift_ * s / p;
      for (Nat i = 0; i < p; ++i)
        if ((*this)(n0 + i + s) != (*this)(n0 + i) + step) return false;
      return true;
    });
    if (d < p) {
      drift_ = drift_ * d / p;
      base_.resize(d);
    }
    while (!prefix_.empty() && prefix_.back() + drift_ == base_.back()) {
      base_.pop_back();
      base_.insert(base_.begin(), prefix_.back());
      prefix_.pop_back();
    }
  }

  std::vector<Nat> prefix_;
  std::vector<Nat> base_;
  Nat drift_ = 0;
};

inline std::ostream& operator<<(std::ostream& os, const APFunc& f) { return os << f.str(); }

namespace detail {

// Sign of slope(f) - slope(g).
inline int compare_slopes(const APFunc& f, const APFunc& g) {
  const unsigned __int128 lhs = static_cast<unsigned __int128>(f.drift()) * g.period();
  const unsigned __int128 rhs = static_cast<unsigned __int128>(g.drift()) * f.period();
  return lhs < rhs ? -1 : (lhs > rhs ? 1 : 0);
}

}  // namespace detail

/// g ≤* f: g(k) <= f(k) for all but finitely many k.
inline bool eventually_dominates(const APFunc& f, const APFunc& g) {
  const int cmp = detail::compare_slopes(g, f);
  if (cmp != 0) return cmp < 0;
  // Equal slopes: f - g is periodic with period lcm beyond both prefixes.
  const Nat start = std::max(f.prefix().size(), g.prefix().size());
  const Nat period = detail::lcm(f.period(), g.period());
  for (Nat k = start; k < start + period; ++k)
    if (g(k) > f(k)) return false;
  return true;
}

/// Index beyond which the pointwise maximum of f and g is given by one
/// argument alone (the larger-slope one when slopes differ), together with
/// the maximum itself.
inline APFunc ap_max(const APFunc& f, const APFunc& g) {
  const Nat start = std::max(f.prefix().size(), g.prefix().size());
  const Nat period = detail::lcm(f.period(), g.period());
  const int cmp = detail::compare_slopes(f, g);
  if (cmp == 0) {
    std::vector<Nat> prefix(start), base(period);
    for (Nat k = 0; k < start; ++k) prefix[k] = std::max(f(k), g(k));
    for (Nat i = 0; i < period; ++i) base[i] = std::max(f(start + i), g(start + i));
    return APFunc(std::move(prefix), std::move(base), f.drift() * (period / f.period()));
  }
  const APFunc& high = cmp > 0 ? f : g;
  const APFunc& low = cmp > 0 ? g : f;
  // Per-period gain of high over low along each residue class.
  const __int128 gain = static_cast<__int128>(high.drift() * (period / high.period())) -
                        static_cast<__int128>(low.drift() * (period / low.period()));
  Nat rounds = 0;
  for (Nat k = start; k < start + period; ++k) {
    const __int128 diff = static_cast<__int128>(high(k)) - static_cast<__int128>(low(k));
    if (diff < 0) rounds = std::max<Nat>(rounds, static_cast<Nat>((-diff + gain - 1) / gain));
  }
  const Nat crossover = start + rounds * period;
  std::vector<Nat> prefix(crossover), base(high.period());
  for (Nat k = 0; k < crossover; ++k) prefix[k] = std::max(f(k), g(k));
  for (Nat i = 0; i < high.period(); ++i) base[i] = high(crossover + i);
  return APFunc(std::move(prefix), std::move(base), high.drift());
}

enum class FamilyProperty { centered, linearly_ordered, ad_infinite };

/// Decides a finitary property of a finite family of UPSets. For
/// ad_infinite the result certifies only the given sample (the property
/// also asks for the family itself to be infinite).
inline bool family_property(const std::vector<UPSet>& family, FamilyProperty prop) {
  if (family.empty()) throw ContractError("family_property: empty family");
  switch (prop) {
    case FamilyProperty::centered: {
      UPSet meet = UPSet::all();
      for (const auto& s : family) meet = meet & s;
      return meet.is_infinite();
    }
    case FamilyProperty::linearly_ordered:
      for (std::size_t i = 0; i < family.size(); ++i)
        for (std::size_t j = i + 1; j < family.size(); ++j)
          if (!almost_subset(family[i], family[j]) && !almost_subset(family[j], family[i])) return false;
      return true;
    case FamilyProperty::ad_infinite:
      for (std::size_t i = 0; i < family.size(); ++i) {
        if (!family[i].is_infinite()) return false;
        for (std::size_t j = i + 1; j < family.size(); ++j)
          if (!almost_disjoint(family[i], family[j])) return false;
      }
      return true;
  }
  return false;
}

}  // namespace tukey
