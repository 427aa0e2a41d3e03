#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "twuality/element_set.hpp"
#include "twuality/flip.hpp"
#include "twuality/set_system.hpp"

namespace twuality {

/// A permutation of [n] in one-line notation.
class Perm {
public:
  Perm() = default;
  /// Identity on [n].
  explicit Perm(int n);

  /// images[k] is the image of k+1 (1-based values). Throws ValidationError
  /// unless images is a permutation of 1..n.
  static Perm from_one_line(std::span<const int> images);
  /// Disjoint cycles over [n]; omitted points are fixed.
  static Perm from_cycles(int n, const std::vector<std::vector<int>>& cycles);
  static Perm transposition(int n, int i, int j);

  int size() const { return static_cast<int>(images_.size()); }
  /// Image of element i (1-based).
  int operator()(int i) const { return images_[i - 1] + 1; }
  ElementSet operator()(ElementSet s) const;

  Perm inverse() const;
  bool is_identity() const;

  std::vector<int> one_line() const;
  /// Cycles each starting at its least point, ordered by that point; 1-cycles included.
  std::vector<std::vector<int>> cycles() const;
  std::string to_cycle_string() const;

  /// Advances to the next permutation in lexicographic one-line order;
  /// returns false after the last one.
  bool next();

  bool operator==(const Perm&) const = default;
  auto operator<=>(const Perm&) const = default;

private:
  std::vector<std::uint8_t> images_;
};

/// Composition: (p * q)(i) = p(q(i)).
Perm operator*(const Perm& p, const Perm& q);

/// All permutations of [n] in lexicographic one-line order.
std::vector<Perm> all_perms(int n);

/// A vector of flips, entry k acting on element k+1.
struct FlipVector {
  std::vector<Flip> entries;

  FlipVector() = default;
  explicit FlipVector(std::vector<Flip> e) : entries(std::move(e)) {}
  static FlipVector identity(int n) { return FlipVector(std::vector<Flip>(n, Flip::Identity)); }
  static FlipVector uniform(int n, Flip g) { return FlipVector(std::vector<Flip>(n, g)); }

  int size() const { return static_cast<int>(entries.size()); }
  /// Entry for element i (1-based).
  Flip at(int i) const { return entries[i - 1]; }
  Flip& at(int i) { return entries[i - 1]; }
  bool is_identity() const;
  /// The common entry when all entries are equal and non-identity.
  std::optional<Flip> uniform_entry() const;

  bool operator==(const FlipVector&) const = default;
  auto operator<=>(const FlipVector&) const = default;
};

/// Entrywise product (g o h)(i) = g(i) h(i).
FlipVector compose(const FlipVector& g, const FlipVector& h);
FlipVector inverse(const FlipVector& g);

/// result(i) = g(p^-1(i)): the reindexing of g by p^-1.
FlipVector vec_reindex(const FlipVector& g, const Perm& p);

/// D_pi: every feasible set mapped through p.
SetSystem relabel(const SetSystem& d, const Perm& p);
/// Applies g(i) at each element i.
SetSystem apply_vector(const SetSystem& d, const FlipVector& g);

/// An element (g, pi) of the semidirect product G^n x| S_n.
struct TwualityElement {
  FlipVector gvec;
  Perm perm;

  static TwualityElement identity(int n) { return {FlipVector::identity(n), Perm(n)}; }
  int size() const { return gvec.size(); }
  bool is_identity() const { return gvec.is_identity() && perm.is_identity(); }

  bool operator==(const TwualityElement&) const = default;
  auto operator<=>(const TwualityElement&) const = default;
};

/// (g, p1)(h, p2) = (g o h p1^-1, p1 p2).
TwualityElement sd_mul(const TwualityElement& a, const TwualityElement& b);
/// (g, p)^-1 = (g^-1 p, p^-1).
TwualityElement sd_inv(const TwualityElement& a);

/// (g, pi) D: relabel by pi, then apply g(i) at every element i.
SetSystem act(const TwualityElement& a, const SetSystem& d);

} // namespace twuality
