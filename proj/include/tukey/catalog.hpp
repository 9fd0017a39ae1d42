#pragma once

// The triples of van Douwen's diagram and the splitting/unsplitting
// variants, their properties, and the explicit morphisms between them.

#include <algorithm>
#include <bit>
#include <map>
#include <string>
#include <vector>

#include "tukey/bp_morphism.hpp"
#include "tukey/triples.hpp"

namespace tukey::cat {

// ---------------------------------------------------------------------------
// Relations on representations

namespace detail {

inline const UPSet& as_set(const Value& v, const char* who) {
  if (auto* s = std::get_if<UPSet>(&v)) return *s;
  throw ContractError(std::string(who) + ": expected an ultimately periodic set, got " + to_literal(v));
}

inline const APFunc& as_func(const Value& v, const char* who) {
  if (auto* f = std::get_if<APFunc>(&v)) return *f;
  throw ContractError(std::string(who) + ": expected a function, got " + to_literal(v));
}

inline const std::vector<UPSet>& as_sets(const Value& v, const char* who) {
  if (auto* t = std::get_if<SetTuple>(&v)) return t->sets;
  throw ContractError(std::string(who) + ": expected a tuple of sets, got " + to_literal(v));
}

}  // namespace detail

/// x ⊂* y, for two ultimately periodic sets or two psi-meets. Mixed pairs
/// are not decidable in this representation.
inline bool almost_subset(const Value& x, const Value& y) {
  auto* xs = std::get_if<UPSet>(&x);
  auto* ys = std::get_if<UPSet>(&y);
  if (xs && ys) return tukey::almost_subset(*xs, *ys);
  auto* xm = std::get_if<PsiMeet>(&x);
  auto* ym = std::get_if<PsiMeet>(&y);
  // The witnesses of the larger meet in column |x| avoid psi(h) for h not in x.
  if (xm && ym) return xm->includes(*ym);
  throw ContractError("almost_subset: cannot compare " + to_literal(x) + " with " + to_literal(y));
}

/// c (an n-coloring) is almost constant on the infinite set b.
inline bool almost_constant(const APFunc& c, const UPSet& b) {
  if (!b.is_infinite()) throw ContractError("almost_constant: set must be infinite");
  if (c.drift() != 0) return false;
  const Nat start = std::max<Nat>(c.prefix().size(), b.prefix().size());
  const Nat window = tukey::detail::lcm(c.period(), b.period().size());
  std::set<Nat> seen;
  for (Nat k = start; k < start + window; ++k)
    if (b.contains(k)) seen.insert(c(k));
  return seen.size() == 1;
}

/// The 2-coloring k -> bit i of c(k).
inline UPSet bit_coloring(const APFunc& c, unsigned bit) {
  if (c.drift() != 0) throw ContractError("bit_coloring: coloring must be bounded");
  Bits prefix, period;
  for (Nat v : c.prefix()) prefix.push_back((v >> bit) & 1u);
  for (Nat v : c.base()) period.push_back((v >> bit) & 1u);
  return UPSet(std::move(prefix), std::move(period));
}

// ---------------------------------------------------------------------------
// Properties of finite families

inline constexpr std::size_t kIndependenceBound = 10;

inline bool is_centered(const Family& fam) {
  if (fam.empty()) return true;
  if (std::all_of(fam.begin(), fam.end(), [](const Value& v) { return std::holds_alternative<UPSet>(v); })) {
    std::vector<UPSet> sets;
    for (const auto& v : fam) sets.push_back(std::get<UPSet>(v));
    return family_property(sets, FamilyProperty::centered);
  }
  if (std::all_of(fam.begin(), fam.end(), [](const Value& v) { return std::holds_alternative<PsiMeet>(v); })) {
    std::vector<APFunc> all;
    for (const auto& v : fam)
      for (const auto& f : std::get<PsiMeet>(v).fs) all.push_back(f);
    std::vector<bp::Branch> branches;
    for (const auto& f : PsiMeet::of(all).fs) branches.emplace_back(f);
    return bp::centered_witness(branches, 3).elements.size() == 3;
  }
  throw ContractError("is_centered: mixed set representations");
}

inline bool is_linearly_ordered(const Family& fam) {
  for (std::size_t i = 0; i < fam.size(); ++i)
    for (std::size_t j = i + 1; j < fam.size(); ++j)
      if (!almost_subset(fam[i], fam[j]) && !almost_subset(fam[j], fam[i])) return false;
  return true;
}

/// Pairwise almost disjoint IC sets whose union is co-infinite: exactly the
/// finite families that extend to an infinite almost disjoint family.
inline bool is_ad_extendible(const Family& fam) {
  UPSet uni = UPSet::empty();
  std::vector<UPSet> sets;
  for (const auto& v : fam) {
    const auto& s = detail::as_set(v, "a.d. property");
    if (!s.is_ic()) return false;
    sets.push_back(s);
    uni = uni | s;
  }
  if (!sets.empty() && !family_property(sets, FamilyProperty::ad_infinite)) return false;
  return uni.is_coinfinite();
}

/// Every full sign pattern over the list has infinite intersection.
inline bool is_independent(const std::vector<UPSet>& base) {
  if (base.size() > kIndependenceBound) throw ResourceLimit("is_independent: too many sets");
  for (Nat signs = 0; signs < (Nat{1} << base.size()); ++signs) {
    UPSet meet = UPSet::all();
    for (std::size_t i = 0; i < base.size(); ++i) meet = meet & ((signs >> i) & 1u ? ~base[i] : base[i]);
    if (!meet.is_infinite()) return false;
  }
  return true;
}

/// Is x an intersection of some members of `base` and complements of others?
inline bool is_boolean_term(const UPSet& x, const std::vector<UPSet>& base) {
  std::vector<unsigned> choice(base.size(), 0);  // 0 absent, 1 positive, 2 negated
  while (true) {
    UPSet meet = UPSet::all();
    bool any = false;
    for (std::size_t i = 0; i < base.size(); ++i) {
      if (choice[i] == 0) continue;
      any = true;
      meet = meet & (choice[i] == 1 ? base[i] : ~base[i]);
    }
    if (any && meet == x) return true;
    std::size_t i = 0;
    while (i < choice.size() && ++choice[i] == 3) choice[i++] = 0;
    if (i == choice.size()) return false;
  }
}

/// F is made of finite boolean terms over an independent list drawn from F
/// itself: members are scanned in order, and each one that is not a term
/// over the list so far joins the list.
inline bool is_independent_derived(const Family& fam) {
  std::vector<UPSet> base;
  for (const auto& v : fam) {
    const auto& s = detail::as_set(v, "independence property");
    if (!base.empty() && is_boolean_term(s, base)) continue;
    base.push_back(s);
    if (!is_independent(base)) return false;
  }
  return true;
}

// ---------------------------------------------------------------------------
// Triples

inline Property centered_property() {
  return {"centered", is_centered, true, ""};
}

inline CodedTriple triple_p() {
  return {"p", "𝔭", Kind::set(), Kind::set(), "not ⊂*",
          [](const Value& x, const Value& y) { return !almost_subset(x, y); }, centered_property()};
}

inline CodedTriple triple_t() {
  auto t = triple_p();
  t.id = "t";
  t.display = "𝔱";
  t.property = Property{"linearly ordered", is_linearly_ordered, false, ""};
  return t;
}

inline CodedTriple triple_s() {
  return {"s", "𝔰", Kind::set(), Kind::binary(), "is split by", [](const Value& x, const Value& y) {
            return splits(detail::as_set(y, "s"), detail::as_set(x, "s"));
          },
          std::nullopt};
}

inline CodedTriple triple_r() {
  return {"r", "𝔯", Kind::binary(), Kind::set(), "does not split", [](const Value& x, const Value& y) {
            return !splits(detail::as_set(x, "r"), detail::as_set(y, "r"));
          },
          std::nullopt};
}

inline CodedTriple triple_b() {
  return {"b", "𝔟", Kind::baire(), Kind::baire(), "not ≥*", [](const Value& x, const Value& y) {
            return !eventually_dominates(detail::as_func(x, "b"), detail::as_func(y, "b"));
          },
          std::nullopt};
}

inline CodedTriple triple_d() {
  return {"d", "𝔡", Kind::baire(), Kind::baire(), "≤*", [](const Value& x, const Value& y) {
            return eventually_dominates(detail::as_func(y, "d"), detail::as_func(x, "d"));
          },
          std::nullopt};
}

inline CodedTriple triple_a() {
  return {"a",
          "𝔞",
          Kind::ic(),
          Kind::ic(),
          "not ⊥",
          [](const Value& x, const Value& y) { return !almost_disjoint(detail::as_set(x, "a"), detail::as_set(y, "a")); },
          Property{"a.d. and extendible to an infinite a.d. family", is_ad_extendible, true,
                   "a finite family extends to an infinite a.d. family iff its union is co-infinite"}};
}

inline CodedTriple triple_i() {
  return {"i",
          "𝔦",
          Kind::ic(),
          Kind::ic(),
          "does not split",
          [](const Value& x, const Value& y) { return !splits(detail::as_set(x, "i"), detail::as_set(y, "i")); },
          Property{"derived from an independent family", is_independent_derived, false,
                   "derived from an independent family by taking all intersections of finitely many sets or their "
                   "complements; only finite families of explicit boolean terms are checked"}};
}

inline CodedTriple triple_u() {
  auto t = triple_r();
  t.id = "u";
  t.display = "𝔲";
  t.minus = Kind::set();
  t.property = centered_property();
  return t;
}

inline CodedTriple triple_r_n(Nat n) {
  return {"r_" + std::to_string(n), "𝔯_" + std::to_string(n), Kind::coloring(n), Kind::set(), "almost constant on",
          [](const Value& x, const Value& y) {
            return almost_constant(detail::as_func(x, "r_n"), detail::as_set(y, "r_n"));
          },
          std::nullopt};
}

inline CodedTriple triple_r_sigma() {
  return {"r_sigma", "𝔯_σ", Kind::binseq(), Kind::set(), "all almost constant on",
          [](const Value& x, const Value& y) {
            const auto& b = detail::as_set(y, "r_sigma");
            const auto& cs = std::get<ColoringSeq>(x).colorings;
            return std::none_of(cs.begin(), cs.end(), [&](const UPSet& c) { return splits(c, b); });
          },
          std::nullopt};
}

namespace detail {

inline Nat count_split(const std::vector<UPSet>& sets, const UPSet& by) {
  return std::count_if(sets.begin(), sets.end(), [&](const UPSet& a) { return splits(by, a); });
}

}  // namespace detail

inline CodedTriple triple_s_nm(Nat n, Nat m) {
  if (n < 1 || m < 1 || m > n) throw ContractError("s_{n,m} needs 1 <= m <= n");
  return {"s_" + std::to_string(n) + "," + std::to_string(m), "𝔰_" + std::to_string(n) + "," + std::to_string(m),
          Kind::sets(n), Kind::binary(), "at least " + std::to_string(m) + " split by",
          [m](const Value& x, const Value& y) {
            return detail::count_split(detail::as_sets(x, "s_nm"), detail::as_set(y, "s_nm")) >= m;
          },
          std::nullopt};
}

inline CodedTriple triple_s_n(Nat n) {
  if (n < 1) throw ContractError("s_n needs n >= 1");
  return {"s_" + std::to_string(n), "𝔰_" + std::to_string(n), Kind::sets(n), Kind::binary(), "all split by",
          [](const Value& x, const Value& y) {
            const auto& sets = detail::as_sets(x, "s_n");
            return detail::count_split(sets, detail::as_set(y, "s_n")) == sets.size();
          },
          std::nullopt};
}

inline CodedTriple triple_s_sigma() {
  auto t = triple_s_n(1);
  t.id = "s_sigma";
  t.display = "𝔰_σ";
  t.minus = Kind::setseq();
  return t;
}

inline CodedTriple triple_s_fin() {
  auto t = triple_s_n(1);
  t.id = "s_fin";
  t.display = "𝔰_<ω";
  t.minus = Kind::sets(0);
  return t;
}

inline std::vector<CodedTriple> catalog() {
  return {triple_p(),      triple_s(),       triple_r(),      triple_b(),        triple_d(),
          triple_a(),      triple_i(),       triple_u(),      triple_t(),        triple_r_n(3),
          triple_r_sigma(), triple_s_n(2),   triple_s_nm(4, 2), triple_s_sigma(), triple_s_fin()};
}

/// Catalog lookup; parametrized entries are written r_5, s_3, s_4,2.
inline CodedTriple lookup(const std::string& id) {
  for (auto& t : catalog())
    if (t.id == id) return t;
  auto num = [&](const std::string& s) { return tukey::detail::parse_nat(s, "triple parameter"); };
  if (id.rfind("r_", 0) == 0) return triple_r_n(num(id.substr(2)));
  if (id.rfind("s_", 0) == 0) {
    const auto rest = id.substr(2);
    const auto comma = rest.find(',');
    if (comma == std::string::npos) return triple_s_n(num(rest));
    return triple_s_nm(num(rest.substr(0, comma)), num(rest.substr(comma + 1)));
  }
  throw ContractError("unknown triple '" + id + "'");
}

// ---------------------------------------------------------------------------
// Default probes

inline std::vector<UPSet> probe_sets() {
  return {UPSet::evens(),           UPSet::odds(),           UPSet::all(),
          UPSet::residues(3, {0}),  UPSet::residues(3, {0, 1}), UPSet::residues(4, {1, 2}),
          UPSet::residues(5, {0}),  UPSet::residues(8, {3}),  UPSet::parse("0110|10"),
          UPSet::parse("1|0110"),   UPSet::parse("000|1"),   UPSet::parse("1011|001")};
}

inline std::vector<Value> probe_values(const std::vector<UPSet>& sets) { return {sets.begin(), sets.end()}; }

inline std::vector<Value> probe_infinite_sets() { return probe_values(probe_sets()); }

inline std::vector<Value> probe_ic_sets() {
  std::vector<Value> out;
  for (const auto& s : probe_sets())
    if (s.is_ic()) out.push_back(s);
  return out;
}

inline std::vector<Value> probe_binary() {
  auto out = probe_infinite_sets();
  for (auto s : {UPSet::empty(), UPSet::finite({1, 3}), UPSet::finite({0, 2, 5, 6})}) out.push_back(s);
  return out;
}

inline std::vector<Value> probe_functions() {
  return {APFunc::constant(0),     APFunc::constant(3),        APFunc::identity(),
          APFunc::affine(2, 1),    APFunc::parse("5,0,7;1,2;0"), APFunc::parse("0;0,1;1"),
          APFunc::parse("2;3;2"),  APFunc::affine(1, 5),       APFunc::parse("9,9;0,4,1;3")};
}

inline std::vector<Value> probe_colorings(Nat n) {
  std::vector<Value> out;
  for (Nat c = 0; c < n; ++c) out.push_back(APFunc::constant(c));
  std::vector<Nat> cycle;
  for (Nat c = 0; c < n; ++c) cycle.push_back(c);
  out.push_back(APFunc({}, cycle, 0));
  out.push_back(APFunc({n - 1, 0}, {0, 0, n - 1}, 0));
  out.push_back(APFunc({}, {n - 1, 0, n - 1, 1 % n}, 0));
  return out;
}

/// Functions whose first coordinates vanish.
inline std::vector<APFunc> bp_probe_functions() {
  return {APFunc::constant(0), APFunc::parse("0,0,0,0;1;0"), APFunc::parse("0,0,0,0;2;1"),
          APFunc::parse("0,0,0,0;0;1"), APFunc::parse("0,0,0,0;3,1;0"), APFunc::parse("0,0,0,0,5;0;2")};
}

template <class T>
std::vector<std::vector<T>> subsets_up_to(const std::vector<T>& items, std::size_t max_size) {
  std::vector<std::vector<T>> out;
  for (Nat mask = 1; mask < (Nat{1} << items.size()); ++mask) {
    if (static_cast<std::size_t>(std::popcount(mask)) > max_size) continue;
    std::vector<T> pick;
    for (std::size_t i = 0; i < items.size(); ++i)
      if ((mask >> i) & 1u) pick.push_back(items[i]);
    out.push_back(std::move(pick));
  }
  return out;
}

/// {k : k ≡ 2^j mod 2^(j+1)} for j < count: pairwise disjoint, union co-infinite.
inline std::vector<UPSet> dyadic_family(Nat count) {
  std::vector<UPSet> out;
  for (Nat j = 0; j < count; ++j) out.push_back(UPSet::residues(Nat{2} << j, {Nat{1} << j}));
  return out;
}

// ---------------------------------------------------------------------------
// Morphisms

namespace detail {

inline APFunc shift_up(const APFunc& f) {
  auto prefix = f.prefix();
  auto base = f.base();
  for (auto& v : prefix) ++v;
  for (auto& v : base) ++v;
  return APFunc(prefix, base, f.drift());
}

/// Coloring by alternating blocks of length m: [0,m) colored 1, [m,2m) 0, ...
inline UPSet block_coloring(Nat m) {
  Bits period(2 * m, false);
  std::fill(period.begin(), period.begin() + m, true);
  return UPSet({}, period);
}

/// Largest g >= 1 with g*(k+1) <=* f, or 1 if there is none.
inline Nat linear_rate(const APFunc& f) {
  Nat g = 1;
  while (eventually_dominates(f, APFunc::affine(g + 1, g + 1))) ++g;
  return g;
}

}  // namespace detail

inline MorphismCandidate morphism_d_to_s() {
  return {"d->s",
          Kind::set(),
          Kind::baire(),
          Kind::baire(),
          Kind::binary(),
          [](const Value& v) {
            const Nat gap = detail::as_set(v, "d->s phi").eventual_max_gap();
            return Value(APFunc::affine(gap, gap));
          },
          [](const Value& v) { return Value(detail::block_coloring(detail::linear_rate(detail::as_func(v, "d->s psi")))); }};
}

inline MorphismCandidate morphism_r_to_b() {
  auto c = dual_morphism(morphism_d_to_s(), triple_d(), triple_s());
  c.name = "r->b";
  return c;
}

inline MorphismCandidate morphism_d_to_b() {
  return {"d->b", Kind::baire(), Kind::baire(), Kind::baire(), Kind::baire(), [](const Value& v) { return v; },
          [](const Value& v) { return Value(detail::shift_up(detail::as_func(v, "d->b psi"))); }};
}

inline MorphismCandidate morphism_u_to_r() {
  return {"u->r", Kind::binary(), Kind::set(), Kind::set(), Kind::set(),
          [](const Value& v) {
            const auto& c = detail::as_set(v, "u->r phi");
            return Value(c.is_infinite() ? c : UPSet::all());
          },
          [](const Value& v) { return v; }};
}

inline MorphismCandidate morphism_i_to_r() {
  return {"i->r", Kind::binary(), Kind::ic(), Kind::ic(), Kind::set(),
          [](const Value& v) {
            const auto& c = detail::as_set(v, "i->r phi");
            return Value(c.is_ic() ? c : UPSet::evens());
          },
          [](const Value& v) { return v; }};
}

inline MorphismCandidate morphism_a_to_p() {
  return {"a->p", Kind::set(), Kind::ic(), Kind::ic(), Kind::set(),
          [](const Value& v) {
            const auto& a = detail::as_set(v, "a->p phi");
            return Value(a.is_ic() ? a : UPSet::evens());
          },
          [](const Value& v) { return Value(~detail::as_set(v, "a->p psi")); }};
}

inline MorphismCandidate morphism_t_to_p() {
  auto c = identity_candidate(Kind::set(), Kind::set());
  c.name = "t->p";
  return c;
}

inline MorphismCandidate morphism_b_to_p() {
  return {"b->p", Kind::set(), Kind::baire(), Kind::baire(), Kind::set(),
          [](const Value& v) {
            if (auto* m = std::get_if<PsiMeet>(&v)) {
              APFunc bound = m->fs.front();
              for (const auto& f : m->fs) bound = ap_max(bound, f);
              return Value(bound);
            }
            return Value(bp::bound_for_set(detail::as_set(v, "b->p phi")));
          },
          [](const Value& v) { return Value(PsiMeet::of({detail::as_func(v, "b->p psi")})); }};
}

inline MorphismCandidate morphism_r_sigma_to_r() {
  return {"r_sigma->r", Kind::binary(), Kind::binseq(), Kind::set(), Kind::set(),
          [](const Value& v) { return Value(ColoringSeq{{detail::as_set(v, "r_sigma->r phi")}}); },
          [](const Value& v) { return v; }};
}

inline MorphismCandidate morphism_r_sigma_to_r_n(Nat n) {
  if (n < 2) throw ContractError("r_sigma->r_n needs n >= 2");
  const unsigned bits = std::bit_width(n - 1);
  return {"r_sigma->r_" + std::to_string(n), Kind::coloring(n), Kind::binseq(), Kind::set(), Kind::set(),
          [bits](const Value& v) {
            ColoringSeq out;
            for (unsigned i = 0; i < bits; ++i) out.colorings.push_back(bit_coloring(detail::as_func(v, "bits"), i));
            return Value(out);
          },
          [](const Value& v) { return v; }};
}

inline MorphismCandidate morphism_r_n_to_r_m(Nat n, Nat m) {
  if (m < 2 || m >= n) throw ContractError("r_n->r_m needs 2 <= m < n");
  return {"r_" + std::to_string(n) + "->r_" + std::to_string(m), Kind::coloring(m), Kind::coloring(n), Kind::set(),
          Kind::set(), [](const Value& v) { return v; }, [](const Value& v) { return v; }};
}

inline MorphismCandidate morphism_s_sigma_to_s() {
  return {"s_sigma->s", Kind::set(), Kind::setseq(), Kind::binary(), Kind::binary(),
          [](const Value& v) { return Value(SetTuple{{detail::as_set(v, "s_sigma->s phi")}}); },
          [](const Value& v) { return v; }};
}

inline MorphismCandidate morphism_s_n_to_s_m(Nat n, Nat m) {
  if (m < 1 || m >= n) throw ContractError("s_n->s_m needs 1 <= m < n");
  return {"s_" + std::to_string(n) + "->s_" + std::to_string(m), Kind::sets(m), Kind::sets(n), Kind::binary(),
          Kind::binary(),
          [n](const Value& v) {
            auto sets = detail::as_sets(v, "s_n->s_m phi");
            while (sets.size() < n) sets.push_back(sets.back());
            return Value(SetTuple{sets});
          },
          [](const Value& v) { return v; }};
}

inline MorphismCandidate morphism_s_sigma_to_s_n(Nat n) {
  return {"s_sigma->s_" + std::to_string(n), Kind::sets(n), Kind::setseq(), Kind::binary(), Kind::binary(),
          [](const Value& v) { return v; }, [](const Value& v) { return v; }};
}

inline MorphismCandidate morphism_d_to_s_sigma() {
  return {"d->s_sigma",
          Kind::setseq(),
          Kind::baire(),
          Kind::baire(),
          Kind::binary(),
          [](const Value& v) {
            Nat gap = 1;
            for (const auto& a : detail::as_sets(v, "d->s_sigma phi")) gap = std::max(gap, a.eventual_max_gap());
            return Value(APFunc::affine(gap, gap));
          },
          morphism_d_to_s().psi};
}

struct BuiltinMorphism {
  std::string source, target;
  MorphismCandidate candidate;
  ProbeSuite probes;
  std::string citation;
};

namespace detail {

inline std::vector<Family> families_of(const std::vector<std::vector<UPSet>>& groups) {
  std::vector<Family> out;
  for (const auto& g : groups) out.push_back(Family(g.begin(), g.end()));
  return out;
}

inline std::vector<Value> tuples_from(const std::vector<UPSet>& sets, Nat n) {
  std::vector<Value> out;
  for (std::size_t i = 0; i + n <= sets.size(); ++i) out.push_back(SetTuple{{sets.begin() + i, sets.begin() + i + n}});
  return out;
}

}  // namespace detail

inline std::vector<BuiltinMorphism> builtin_morphisms() {
  std::vector<BuiltinMorphism> out;
  const auto sets = probe_sets();
  std::vector<UPSet> infinite;
  for (const auto& s : sets)
    if (s.is_infinite()) infinite.push_back(s);

  out.push_back({"d", "s", morphism_d_to_s(), {probe_infinite_sets(), probe_functions(), {}},
                 "classical proof of d >= s read as a morphism"});
  out.push_back({"r", "b", morphism_r_to_b(), {probe_functions(), probe_infinite_sets(), {}}, "dual to d >= s"});
  out.push_back({"d", "b", morphism_d_to_b(), {probe_functions(), probe_functions(), {}},
                 "dominating families are unbounded"});
  out.push_back({"u", "r", morphism_u_to_r(), {probe_binary(), probe_infinite_sets(), {}}, "identity maps"});
  out.push_back({"i", "r", morphism_i_to_r(), {probe_binary(), probe_ic_sets(), {}},
                 "identity maps, arbitrary value on finite and cofinite sets"});

  std::vector<std::vector<UPSet>> ad_groups = subsets_up_to(dyadic_family(4), 4);
  ad_groups.push_back({UPSet::evens(), UPSet::odds()});
  ad_groups.push_back({UPSet::residues(3, {0}), UPSet::residues(3, {0, 1})});
  out.push_back({"a", "p", morphism_a_to_p(), {probe_infinite_sets(), probe_ic_sets(), detail::families_of(ad_groups)},
                 "psi(A) = complement of A, phi = identity"});

  std::vector<std::vector<UPSet>> chains = subsets_up_to(
      std::vector<UPSet>{UPSet::all(), UPSet::evens(), UPSet::residues(4, {0}), UPSet::residues(8, {0})}, 4);
  chains.push_back({UPSet::evens(), UPSet::odds()});
  chains.push_back({UPSet::residues(3, {0, 1}), UPSet::residues(3, {1, 2})});
  out.push_back({"t", "p", morphism_t_to_p(), {probe_infinite_sets(), probe_infinite_sets(), detail::families_of(chains)},
                 "identity maps"});

  std::vector<Value> meets, fvals;
  const auto fs = bp_probe_functions();
  for (const auto& f : fs) fvals.push_back(f);
  for (const auto& g : subsets_up_to(fs, 2)) meets.push_back(PsiMeet::of(g));
  meets.push_back(PsiMeet::of({APFunc::constant(7), APFunc::identity()}));
  std::vector<Family> bfams;
  for (const auto& g : subsets_up_to(fs, 3)) bfams.push_back(Family(g.begin(), g.end()));
  out.push_back({"b", "p", morphism_b_to_p(), {meets, fvals, bfams}, "Borel morphism from b to p"});

  out.push_back({"r_sigma", "r", morphism_r_sigma_to_r(), {probe_binary(), probe_infinite_sets(), {}},
                 "constant sequence and identity"});
  for (Nat n : {2, 3, 4, 5})
    out.push_back({"r_sigma", "r_" + std::to_string(n), morphism_r_sigma_to_r_n(n),
                   {probe_colorings(n), probe_infinite_sets(), {}}, "bit colorings and identity"});
  out.push_back({"r_4", "r_2", morphism_r_n_to_r_m(4, 2), {probe_colorings(2), probe_infinite_sets(), {}},
                 "inclusion of colorings"});
  out.push_back({"s_sigma", "s", morphism_s_sigma_to_s(), {probe_infinite_sets(), probe_binary(), {}},
                 "constant sequence and identity"});
  out.push_back({"s_3", "s_2", morphism_s_n_to_s_m(3, 2), {detail::tuples_from(infinite, 2), probe_binary(), {}},
                 "pad the tuple"});
  out.push_back({"s_sigma", "s_3", morphism_s_sigma_to_s_n(3), {detail::tuples_from(infinite, 3), probe_binary(), {}},
                 "the tuple read as a sequence"});
  out.push_back({"d", "s_sigma", morphism_d_to_s_sigma(),
                 {detail::tuples_from(infinite, 3), probe_functions(), {}}, "usual proof of d >= s_sigma"});
  return out;
}

}  // namespace tukey::cat
