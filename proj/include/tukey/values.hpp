#pragma once

// Representations of the carriers used by the coded triples, their kinds,
// and the text literals shared by the CLI and the machine protocol.
//
//   set      infinite subset of omega: UPSet, or PsiMeet (a finite meet of
//            images of the b -> p map, which is never ultimately periodic)
//   ic       infinite/co-infinite UPSet
//   binary   element of 2^omega, as a UPSet read as its characteristic function
//   baire    element of omega^omega, as an APFunc
//   coloring:n   n-coloring: APFunc with drift 0 and values < n
//   sets:n   n-tuple of infinite sets (sets:* for any finite length)
//   setseq   omega-sequence of infinite sets, a finite list read cyclically
//   binseq   omega-sequence of 2-colorings, a finite list read cyclically

#include <algorithm>
#include <string>
#include <variant>
#include <vector>

#include "tukey/core_reals.hpp"
#include "tukey/errors.hpp"

namespace tukey {

/// The set psi(f_1) ∩ ... ∩ psi(f_k) for the b -> p map psi.
struct PsiMeet {
  std::vector<APFunc> fs;  // sorted by literal, no repeats

  static PsiMeet of(std::vector<APFunc> fs) {
    if (fs.empty()) throw ContractError("PsiMeet needs at least one function");
    std::sort(fs.begin(), fs.end(), [](const APFunc& a, const APFunc& b) { return a.str() < b.str(); });
    fs.erase(std::unique(fs.begin(), fs.end()), fs.end());
    return {std::move(fs)};
  }

  bool includes(const PsiMeet& other) const {
    for (const auto& f : other.fs)
      if (std::find(fs.begin(), fs.end(), f) == fs.end()) return false;
    return true;
  }

  friend bool operator==(const PsiMeet&, const PsiMeet&) = default;
};

struct SetTuple {
  std::vector<UPSet> sets;
  friend bool operator==(const SetTuple&, const SetTuple&) = default;
};

struct ColoringSeq {
  std::vector<UPSet> colorings;
  friend bool operator==(const ColoringSeq&, const ColoringSeq&) = default;
};

using Value = std::variant<UPSet, APFunc, PsiMeet, SetTuple, ColoringSeq>;

enum class KindTag { set, ic, binary, baire, coloring, sets, setseq, binseq };

struct Kind {
  KindTag tag = KindTag::set;
  Nat arity = 0;  // colors for coloring, length for sets (0 = any)

  static Kind set() { return {KindTag::set, 0}; }
  static Kind ic() { return {KindTag::ic, 0}; }
  static Kind binary() { return {KindTag::binary, 0}; }
  static Kind baire() { return {KindTag::baire, 0}; }
  static Kind coloring(Nat n) {
    if (n < 2) throw ContractError("coloring kind needs at least 2 colors");
    return {KindTag::coloring, n};
  }
  static Kind sets(Nat n) { return {KindTag::sets, n}; }
  static Kind setseq() { return {KindTag::setseq, 0}; }
  static Kind binseq() { return {KindTag::binseq, 0}; }

  std::string name() const {
    switch (tag) {
      case KindTag::set:
        return "set";
      case KindTag::ic:
        return "ic";
      case KindTag::binary:
        return "binary";
      case KindTag::baire:
        return "baire";
      case KindTag::coloring:
        return "coloring:" + std::to_string(arity);
      case KindTag::sets:
        return arity ? "sets:" + std::to_string(arity) : "sets:*";
      case KindTag::setseq:
        return "setseq";
      case KindTag::binseq:
        return "binseq";
    }
    return "?";
  }

  static Kind parse(const std::string& text) {
    for (Kind k : {set(), ic(), binary(), baire(), setseq(), binseq()})
      if (k.name() == text) return k;
    if (text.rfind("coloring:", 0) == 0) return coloring(detail::parse_nat(text.substr(9), "coloring arity"));
    if (text == "sets:*") return sets(0);
    if (text.rfind("sets:", 0) == 0) return sets(detail::parse_nat(text.substr(5), "tuple length"));
    throw ContractError("unknown kind '" + text + "'");
  }

  friend bool operator==(const Kind&, const Kind&) = default;
};

inline constexpr const char* kListSeparator = " & ";

inline std::string to_literal(const Value& v) {
  auto join = [](const auto& items, auto&& lit) {
    std::string out = "[";
    for (std::size_t i = 0; i < items.size(); ++i) out += (i ? kListSeparator : "") + lit(items[i]);
    return out + "]";
  };
  auto set_lit = [](const UPSet& s) { return s.str(); };
  return std::visit(
      [&](const auto& x) -> std::string {
        using T = std::decay_t<decltype(x)>;
        if constexpr (std::is_same_v<T, UPSet>) return x.str();
        if constexpr (std::is_same_v<T, APFunc>) return x.str();
        if constexpr (std::is_same_v<T, PsiMeet>) return "psi" + join(x.fs, [](const APFunc& f) { return f.str(); });
        if constexpr (std::is_same_v<T, SetTuple>) return join(x.sets, set_lit);
        if constexpr (std::is_same_v<T, ColoringSeq>) return join(x.colorings, set_lit);
      },
      v);
}

namespace detail {

inline std::vector<std::string> split_list(std::string text, const std::string& what) {
  auto trim = [](std::string s) {
    const auto b = s.find_first_not_of(' '), e = s.find_last_not_of(' ');
    return b == std::string::npos ? std::string() : s.substr(b, e - b + 1);
  };
  text = trim(text);
  if (text.size() < 2 || text.front() != '[' || text.back() != ']') {
    throw ContractError(what + " literal must be bracketed: '" + text + "'");
  }
  text = text.substr(1, text.size() - 2);
  std::vector<std::string> out;
  std::size_t start = 0;
  while (true) {
    const auto pos = text.find('&', start);
    out.push_back(trim(text.substr(start, pos == std::string::npos ? std::string::npos : pos - start)));
    if (pos == std::string::npos) break;
    start = pos + 1;
  }
  if (out.size() == 1 && out[0].empty()) out.clear();
  return out;
}

}  // namespace detail

inline bool conforms(const Kind& k, const Value& v) {
  auto all_infinite = [](const std::vector<UPSet>& xs) {
    return std::all_of(xs.begin(), xs.end(), [](const UPSet& s) { return s.is_infinite(); });
  };
  switch (k.tag) {
    case KindTag::set:
      if (auto* s = std::get_if<UPSet>(&v)) return s->is_infinite();
      return std::holds_alternative<PsiMeet>(v);
    case KindTag::ic:
      if (auto* s = std::get_if<UPSet>(&v)) return s->is_ic();
      return false;
    case KindTag::binary:
      return std::holds_alternative<UPSet>(v);
    case KindTag::baire:
      return std::holds_alternative<APFunc>(v);
    case KindTag::coloring:
      if (auto* f = std::get_if<APFunc>(&v)) {
        if (f->drift() != 0) return false;
        for (Nat x : f->prefix())
          if (x >= k.arity) return false;
        for (Nat x : f->base())
          if (x >= k.arity) return false;
        return true;
      }
      return false;
    case KindTag::sets:
      if (auto* t = std::get_if<SetTuple>(&v))
        return !t->sets.empty() && (k.arity == 0 || t->sets.size() == k.arity) && all_infinite(t->sets);
      return false;
    case KindTag::setseq:
      if (auto* t = std::get_if<SetTuple>(&v)) return !t->sets.empty() && all_infinite(t->sets);
      return false;
    case KindTag::binseq:
      if (auto* c = std::get_if<ColoringSeq>(&v)) return !c->colorings.empty();
      return false;
  }
  return false;
}

inline Value parse_value(const Kind& k, const std::string& text) {
  Value v = [&]() -> Value {
    switch (k.tag) {
      case KindTag::set:
        if (text.rfind("psi[", 0) == 0) {
          std::vector<APFunc> fs;
          for (const auto& item : detail::split_list(text.substr(3), "psi")) fs.push_back(APFunc::parse(item));
          return PsiMeet::of(std::move(fs));
        }
        return UPSet::parse(text);
      case KindTag::ic:
      case KindTag::binary:
        return UPSet::parse(text);
      case KindTag::baire:
      case KindTag::coloring:
        return APFunc::parse(text);
      case KindTag::sets:
      case KindTag::setseq: {
        SetTuple t;
        for (const auto& item : detail::split_list(text, "tuple")) t.sets.push_back(UPSet::parse(item));
        return t;
      }
      case KindTag::binseq: {
        ColoringSeq c;
        for (const auto& item : detail::split_list(text, "sequence")) c.colorings.push_back(UPSet::parse(item));
        return c;
      }
    }
    throw ContractError("parse_value: unknown kind");
  }();
  if (!conforms(k, v)) throw ContractError("'" + text + "' is not a value of kind " + k.name());
  return v;
}

}  // namespace tukey
