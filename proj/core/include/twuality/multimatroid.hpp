#pragma once

#include <array>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "twuality/flip.hpp"
#include "twuality/group.hpp"
#include "twuality/orbit.hpp"
#include "twuality/set_system.hpp"

namespace twuality {

// Carriers are always (n,3): skew class i holds the elements (i,1), (i,2), (i,3).

/// A carrier element (index, role), both 1-based.
struct CarrierElement {
  int index = 1;
  int role = 1;
  bool operator==(const CarrierElement&) const = default;
  auto operator<=>(const CarrierElement&) const = default;
};

/// At most one element per skew class, packed two bits per class (0 = none).
class Subtransversal {
public:
  constexpr Subtransversal() = default;
  constexpr explicit Subtransversal(std::uint32_t code) : code_(code) {}
  /// Throws ValidationError on a repeated skew class or out-of-range entry.
  static Subtransversal of(const std::vector<CarrierElement>& elements);
  /// roles[k] is the role chosen in class k+1 (0 = none).
  static Subtransversal from_roles(const std::vector<int>& roles);

  constexpr std::uint32_t code() const { return code_; }
  constexpr int role(int index) const { return static_cast<int>((code_ >> (2 * (index - 1))) & 3u); }
  Subtransversal with(int index, int role) const;
  Subtransversal without(int index) const { return with(index, 0); }
  bool contains(CarrierElement e) const { return role(e.index) == e.role; }
  bool covers(int index) const { return role(index) != 0; }
  int size() const;
  bool is_transversal(int n) const;
  /// Every element of *this is in other.
  bool subset_of(Subtransversal other) const;

  std::vector<CarrierElement> elements() const;

  constexpr bool operator==(const Subtransversal&) const = default;
  constexpr auto operator<=>(const Subtransversal&) const = default;

private:
  std::uint32_t code_ = 0;
};

/// A set of carrier elements, one role mask per class (bit r-1 for role r).
struct CarrierSubset {
  std::vector<std::uint8_t> role_masks;

  static CarrierSubset all(int n) { return {std::vector<std::uint8_t>(n, 7)}; }
  bool contains(Subtransversal s) const;
  bool operator==(const CarrierSubset&) const = default;
};

/// A multimatroid over an (n,3)-carrier, given by its bases. Independent sets
/// are the subsets of bases.
class Multimatroid {
public:
  Multimatroid() = default;
  /// Sorts and deduplicates; throws ValidationError for entries outside the carrier.
  Multimatroid(int n, std::vector<Subtransversal> bases);

  int n() const { return n_; }
  const std::vector<Subtransversal>& bases() const { return bases_; }
  bool is_basis(Subtransversal s) const;

  bool operator==(const Multimatroid&) const = default;

private:
  int n_ = 0;
  std::vector<Subtransversal> bases_;
};

/// Three mutually disjoint transversals T1, T2, T3 covering the carrier.
/// For class i, slot_of_role[i-1][r-1] is the slot (0, 1, 2 for T1, T2, T3)
/// holding element (i, r).
struct TransversalTriple {
  std::vector<SymbolPerm> slot_of_role;

  /// T_k = {(i, k)} for all i.
  static TransversalTriple reference(int n);
  int size() const { return static_cast<int>(slot_of_role.size()); }
  /// Slot (1..3) of element (i, r).
  int slot(int index, int role) const { return slot_of_role[index - 1][role - 1] + 1; }
  /// Role of the T_slot member of class i (slot 1..3).
  int role_in_slot(int index, int slot) const;
  /// T_slot as a transversal.
  Subtransversal transversal(int slot) const;
  bool is_valid() const;

  bool operator==(const TransversalTriple&) const = default;
  auto operator<=>(const TransversalTriple&) const = default;
};

/// All 6^n triples, class 1 varying slowest, each class in flip order.
std::vector<TransversalTriple> all_triples(int n);

/// A projection sigma((i, r)) = rho(i).
struct Projection {
  Perm rho;

  static Projection identity(int n) { return {Perm(n)}; }
  int operator()(int index) const { return rho(index); }
  bool operator==(const Projection&) const = default;
};

/// tau * i swaps the T1 and T2 members of class i, tau + i swaps T2 and T3,
/// tau ~ i swaps T1 and T3. Letters of a composite flip act left to right, so
/// triple_flip(triple_flip(t, h, i), g, i) == triple_flip(t, flip_mul(h, g), i).
TransversalTriple triple_flip(const TransversalTriple& tau, Flip g, int i);
/// Applies g(i) at every class i.
TransversalTriple triple_apply(const TransversalTriple& tau, const FlipVector& g);

struct MultimatroidWitness {
  enum class Axiom {
    None,
    NoBases,       ///< the independence family is empty
    NotSubtransversal, ///< a basis repeats a skew class
    Matroid,       ///< augmentation fails inside `transversal`
    SkewPair,      ///< neither I + x nor I + y is independent
    NotTight,      ///< `transversal` is a basis, class `index` has `count` non-bases
  };

  bool valid = true;
  Axiom axiom = Axiom::None;
  Subtransversal transversal;
  Subtransversal smaller; ///< I
  Subtransversal larger;  ///< J (augmentation)
  int index = 0;
  std::array<int, 2> pair{0, 0};
  int count = 0;
};

struct MultimatroidOptions {
  int max_n = 6;
};

/// Checks both multimatroid axioms on the down-closure of the bases.
MultimatroidWitness is_multimatroid(const Multimatroid& z, const MultimatroidOptions& opts = {});
/// Every basis X and class w: exactly one of (X \ w) u {u}, u in w, is not a basis.
MultimatroidWitness is_tight(const Multimatroid& z, const MultimatroidOptions& opts = {});

/// Z[X]: independents inside X on the induced partition.
struct Restriction {
  CarrierSubset ground;
  /// Maximal independent sets of Z contained in X.
  std::vector<Subtransversal> bases;
};

Restriction restrict(const Multimatroid& z, const CarrierSubset& x);

/// Bases B with B n T1, B n T2 mapped by sigma to F and S, kept when F is
/// feasible in D ~ S. Rejects D that is not vf-safe.
Multimatroid lift(const SetSystem& d, const TransversalTriple& tau, const Projection& sigma,
                  const VfSafeOptions& opts = {});
/// lift() without the vf-safe check; the caller guarantees it.
Multimatroid lift_unchecked(const SetSystem& d, const TransversalTriple& tau,
                            const Projection& sigma);

/// {sigma(X n T2) : X a basis inside T1 u T2}.
SetSystem extract(const Multimatroid& z, const TransversalTriple& tau, const Projection& sigma);

struct LiftOrbitOptions {
  int max_n_full = 4;
  int max_n_iota = 7;
  VfSafeOptions vf_safe{};
};

/// Extracts the lift of d from every triple (and every projection in full mode).
std::vector<SetSystem> orbit_via_lift(const SetSystem& d, const TransversalTriple& tau,
                                      const Projection& sigma, OrbitMode mode,
                                      const LiftOrbitOptions& opts = {});

} // namespace twuality
