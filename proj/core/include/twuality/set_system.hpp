#pragma once

#include <cstddef>
#include <functional>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "twuality/element_set.hpp"
#include "twuality/flip.hpp"

namespace twuality {

/// A ground set [n] (0 <= n <= 16) together with a family of feasible sets.
///
/// The family is kept sorted (colex, i.e. by mask value) and duplicate-free,
/// so equality, ordering and hashing all operate on the canonical form.
class SetSystem {
public:
  SetSystem() = default;
  /// Sorts and deduplicates `family`. Throws ValidationError when n is out of
  /// range or a member is not a subset of [n].
  SetSystem(int n, std::vector<ElementSet> family);

  /// Strict variant used by parsers: rejects duplicate feasible sets.
  static SetSystem from_distinct(int n, std::vector<ElementSet> family);

  /// Builds a set system from a dense membership table indexed by mask.
  static SetSystem from_indicator(int n, std::span<const std::uint8_t> indicator);

  int n() const { return n_; }
  std::span<const ElementSet> family() const { return family_; }
  std::size_t size() const { return family_.size(); }
  bool contains(ElementSet x) const;

  bool is_proper() const { return !family_.empty(); }
  bool is_normal() const;

  /// Membership table of length 2^n.
  std::vector<std::uint8_t> indicator() const;

  bool operator==(const SetSystem&) const = default;
  auto operator<=>(const SetSystem& o) const {
    if (auto c = n_ <=> o.n_; c != 0) return c;
    return family_ <=> o.family_;
  }

  /// "([3], {{3},{1,3},{2,3}})"
  std::string to_string() const;

private:
  int n_ = 0;
  std::vector<ElementSet> family_;
};

std::size_t hash_value(const SetSystem& d);

/// {X ^ I : X feasible}.
SetSystem twist(const SetSystem& d, ElementSet i);
/// Loop complementation on every element of I, via the parity rule
/// X feasible iff |{Y feasible : X \ I <= Y <= X}| is odd.
SetSystem loop_complement(const SetSystem& d, ElementSet i);
/// Dual-twist on every element of I, via the parity rule
/// X feasible iff |{Y feasible : X <= Y <= X u I}| is odd.
SetSystem dual_twist(const SetSystem& d, ElementSet i);

/// Applies the flip g at element i (1-based). Multi-letter flips act
/// letter by letter, rightmost letter first.
SetSystem apply_flip(const SetSystem& d, Flip g, int i);
/// Applies g at every element of I. Flips at distinct elements commute.
SetSystem apply_flip(const SetSystem& d, Flip g, ElementSet i);

/// Outcome of the symmetric exchange check.
struct DeltaMatroidWitness {
  enum class Failure { None, NotProper, Exchange };

  bool valid = false;
  Failure failure = Failure::NotProper;
  // Populated for Failure::Exchange: X, Y feasible, u in X ^ Y with no
  // v in X ^ Y making X ^ {u, v} feasible.
  ElementSet x;
  ElementSet y;
  int u = 0;
};

/// Checks the symmetric exchange axiom; reports the first failure in
/// (X, Y, u) order with X, Y in family order and u ascending.
DeltaMatroidWitness is_delta_matroid(const SetSystem& d);

/// Lower and upper matroids: feasible sets of minimum and maximum size.
std::pair<SetSystem, SetSystem> min_max_matroids(const SetSystem& d);

enum class RibbonLoopClass { NotRibbonLoop, OrientableLoop, NonOrientableLoop };

std::string_view to_string(RibbonLoopClass c);

/// Ribbon-loop classification of element i. Requires a delta-matroid.
RibbonLoopClass classify_element(const SetSystem& d, int i);

struct VfSafeOptions {
  int max_n = 10;
};

/// Result of the closure search over single-element flips.
struct VfSafeReport {
  bool vf_safe = false;
  /// Number of distinct systems visited.
  std::size_t states = 0;
  /// On failure: the first reached system that is not a delta-matroid and
  /// the flips (applied left to right, each Star or Plus) that reach it.
  std::vector<std::pair<Flip, int>> path;
  SetSystem counterexample;
};

/// Breadth-first closure from d under *1, +1, *2, +2, ... . Throws
/// BudgetExceeded when d.n() > opts.max_n.
VfSafeReport vf_safe_report(const SetSystem& d, const VfSafeOptions& opts = {});
bool is_vf_safe(const SetSystem& d, const VfSafeOptions& opts = {});

} // namespace twuality

template <>
struct std::hash<twuality::SetSystem> {
  std::size_t operator()(const twuality::SetSystem& d) const noexcept {
    return twuality::hash_value(d);
  }
};
