#pragma once

// Naive reference implementations on explicit sets of sets, used to
// cross-check the bit-parallel library code.

#include <algorithm>
#include <set>
#include <vector>

#include "twuality/set_system.hpp"

namespace twuality::oracle {

using Set = std::set<int>;
using Family = std::set<Set>;

inline Family family_of(const SetSystem& d) {
  Family out;
  for (ElementSet x : d.family()) {
    const auto m = x.members();
    out.insert(Set(m.begin(), m.end()));
  }
  return out;
}

inline SetSystem system_of(int n, const Family& f) {
  std::vector<ElementSet> family;
  for (const auto& s : f) {
    std::vector<int> m(s.begin(), s.end());
    family.push_back(ElementSet::of(m));
  }
  return SetSystem(n, std::move(family));
}

inline Set sym_diff(const Set& a, const Set& b) {
  Set out;
  std::set_symmetric_difference(a.begin(), a.end(), b.begin(), b.end(), std::inserter(out, out.end()));
  return out;
}

inline Family twist(const Family& f, int i) {
  Family out;
  for (const auto& x : f) out.insert(sym_diff(x, {i}));
  return out;
}

/// F xor {F u {i} : F in F, i not in F}.
inline Family loop(const Family& f, int i) {
  Family added;
  for (const auto& x : f) {
    if (!x.count(i)) {
      Set y = x;
      y.insert(i);
      added.insert(y);
    }
  }
  Family out;
  for (const auto& x : f) {
    if (!added.count(x)) out.insert(x);
  }
  for (const auto& y : added) {
    if (!f.count(y)) out.insert(y);
  }
  return out;
}

/// The word + * + at i.
inline Family dual_twist(const Family& f, int i) { return loop(twist(loop(f, i), i), i); }

inline bool is_delta_matroid(const Family& f) {
  if (f.empty()) return false;
  for (const auto& x : f) {
    for (const auto& y : f) {
      const Set d = sym_diff(x, y);
      for (int u : d) {
        bool ok = false;
        for (int v : d) {
          if (f.count(sym_diff(x, u == v ? Set{u} : Set{u, v}))) {
            ok = true;
            break;
          }
        }
        if (!ok) return false;
      }
    }
  }
  return true;
}

} // namespace twuality::oracle
