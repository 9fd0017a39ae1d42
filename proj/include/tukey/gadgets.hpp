#pragma once

// Refutation gadgets: given any candidate pair of maps, compute a concrete
// instance on which it fails the morphism conditions, with a certificate
// that is re-checked by the decision procedures on representations.

#include <array>
#include <optional>
#include <string>

#include "tukey/catalog.hpp"
#include "tukey/triples.hpp"

namespace tukey::gadgets {

// ---------------------------------------------------------------------------
// No morphism from a filter-class triple to b

struct FilterClassViolation {
  APFunc psi_odd;
  APFunc psi_even;
  APFunc f;         // pointwise max of the two
  UPSet phi_f;
  bool x_is_odd = false;
  UPSet x;          // member of {O, E} meeting phi(f) infinitely
  APFunc psi_x;
};

/// Re-checks both clauses: phi(f) meets X infinitely, and f >=* psi(X).
inline bool verify(const FilterClassViolation& v) {
  return (v.phi_f & v.x).is_infinite() && eventually_dominates(v.f, v.psi_x);
}

inline FilterClassViolation refute_filterclass_to_b(const MorphismCandidate& c) {
  if (!(c.phi_from == Kind::baire()) || !(c.psi_to == Kind::baire())) {
    throw ContractError("refute_filterclass_to_b: candidate must map functions to sets and sets to functions");
  }
  auto as_func = [](const Value& v) {
    if (auto* f = std::get_if<APFunc>(&v)) return *f;
    throw ContractError("refute_filterclass_to_b: psi returned " + to_literal(v) + ", not a function");
  };
  const UPSet odd = UPSet::odds(), even = UPSet::evens();
  FilterClassViolation v{as_func(tukey::detail::evaluate(c.psi, "psi", odd)),
                         as_func(tukey::detail::evaluate(c.psi, "psi", even)),
                         APFunc::constant(0), UPSet(), false, UPSet(), APFunc::constant(0)};
  v.f = ap_max(v.psi_odd, v.psi_even);
  const Value phi = tukey::detail::evaluate(c.phi, "phi", v.f);
  auto* set = std::get_if<UPSet>(&phi);
  if (!set) throw ContractError("refute_filterclass_to_b: phi returned " + to_literal(phi) + ", not a set");
  if (!set->is_infinite()) throw ContractError("refute_filterclass_to_b: phi(" + v.f.str() + ") is finite");
  v.phi_f = *set;
  v.x_is_odd = (v.phi_f & odd).is_infinite();
  v.x = v.x_is_odd ? odd : even;
  v.psi_x = v.x_is_odd ? v.psi_odd : v.psi_even;
  if (!verify(v)) throw MachineFault("refute_filterclass_to_b: certificate failed re-verification");
  return v;
}

// ---------------------------------------------------------------------------
// No morphism from p to t

struct PToTViolation {
  char clause = 'a';
  std::array<UPSet, 3> sets;
  std::array<UPSet, 3> images;  // psi of each set
  std::pair<std::size_t, std::size_t> pair{0, 0};  // clause a: a centered pair with incomparable images
  UPSet meet;                   // clause b: intersection of the images
  UPSet phi_meet;
  std::size_t y = 0;            // clause b: meet ⊂* psi(Y) but phi(meet) not ⊂* Y
};

inline std::array<UPSet, 3> default_p_to_t_sets() {
  return {UPSet::residues(3, {0, 1}), UPSet::residues(3, {1, 2}), UPSet::residues(3, {0, 2})};
}

inline void check_gadget_sets(const std::array<UPSet, 3>& s) {
  for (std::size_t i = 0; i < 3; ++i)
    for (std::size_t j = i + 1; j < 3; ++j)
      if (!(s[i] & s[j]).is_infinite()) throw ContractError("refute_p_to_t: sets must meet pairwise infinitely");
  if ((s[0] & s[1] & s[2]).is_infinite()) throw ContractError("refute_p_to_t: the three sets must have finite intersection");
}

inline bool verify(const PToTViolation& v) {
  if (v.clause == 'a') {
    const auto& [i, j] = v.pair;
    const bool centered = (v.sets[i] & v.sets[j]).is_infinite();
    const bool incomparable = !almost_subset(v.images[i], v.images[j]) && !almost_subset(v.images[j], v.images[i]);
    return centered && incomparable;
  }
  const UPSet meet = v.images[0] & v.images[1] & v.images[2];
  return meet == v.meet && almost_subset(meet, v.images[v.y]) && !almost_subset(v.phi_meet, v.sets[v.y]);
}

inline PToTViolation refute_p_to_t(const MorphismCandidate& c, const std::array<UPSet, 3>& sets = default_p_to_t_sets()) {
  check_gadget_sets(sets);
  auto as_set = [](const Value& v, const char* who) {
    if (auto* s = std::get_if<UPSet>(&v)) return *s;
    throw ContractError(std::string("refute_p_to_t: ") + who + " returned " + to_literal(v) + ", not a set");
  };
  PToTViolation v;
  v.sets = sets;
  for (std::size_t i = 0; i < 3; ++i) {
    v.images[i] = as_set(tukey::detail::evaluate(c.psi, "psi", sets[i]), "psi");
    if (!v.images[i].is_infinite()) throw ContractError("refute_p_to_t: psi(" + sets[i].str() + ") is finite");
  }
  for (std::size_t i = 0; i < 3; ++i)
    for (std::size_t j = i + 1; j < 3; ++j)
      if (!almost_subset(v.images[i], v.images[j]) && !almost_subset(v.images[j], v.images[i])) {
        v.clause = 'a';
        v.pair = {i, j};
        if (!verify(v)) throw MachineFault("refute_p_to_t: certificate failed re-verification");
        return v;
      }
  v.clause = 'b';
  v.meet = v.images[0] & v.images[1] & v.images[2];
  if (!v.meet.is_infinite()) throw MachineFault("refute_p_to_t: linearly ordered images with finite meet");
  v.phi_meet = as_set(tukey::detail::evaluate(c.phi, "phi", v.meet), "phi");
  if (!v.phi_meet.is_infinite()) throw ContractError("refute_p_to_t: phi(" + v.meet.str() + ") is finite");
  for (std::size_t y = 0; y < 3; ++y)
    if (!almost_subset(v.phi_meet, sets[y])) {
      v.y = y;
      if (!verify(v)) throw MachineFault("refute_p_to_t: certificate failed re-verification");
      return v;
    }
  throw MachineFault("refute_p_to_t: phi(D) is almost contained in a finite intersection");
}

}  // namespace tukey::gadgets
