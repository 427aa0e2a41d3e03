#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "twuality/group.hpp"
#include "twuality/set_system.hpp"

namespace twuality {

enum class OrbitMode { Full, Iota };

/// A single orbit generator: a twist or loop complementation at one element,
/// or the adjacent relabeling (i i+1).
struct Generator {
  enum class Kind { Twist, Loop, Swap };
  Kind kind = Kind::Twist;
  int index = 1;

  SetSystem apply(const SetSystem& d) const;
  /// "*2", "+2" or "(2 3)".
  std::string token() const;
  bool operator==(const Generator&) const = default;
};

/// Generators in traversal order: *1, +1, *2, +2, ..., then (1 2), (2 3), ...
/// in full mode.
std::vector<Generator> orbit_generators(int n, OrbitMode mode);

struct OrbitReport {
  /// Canonically sorted orbit members.
  std::vector<SetSystem> elements;
  /// paths[k] reaches elements[k] from the seed, generators applied left to right.
  std::vector<std::vector<Generator>> paths;

  std::size_t size() const { return elements.size(); }
  bool contains(const SetSystem& d) const;
};

struct OrbitOptions {
  int max_n_full = 8;
  int max_n_iota = 10;
  /// Worker threads for frontier expansion; the report does not depend on it.
  int threads = 1;
};

/// Breadth-first closure of d under the mode's generators.
OrbitReport orbit(const SetSystem& d, OrbitMode mode, const OrbitOptions& opts = {});

/// True when every generator maps every element back into the report and
/// every path replays to its element.
bool is_generator_closed(const OrbitReport& report, const SetSystem& seed, OrbitMode mode);

enum class StabilizerMode { All, Uniform };

struct StabilizerHit {
  TwualityElement element;
  /// Set when element.gvec is uniform.
  std::optional<Flip> uniform;
};

struct StabilizerOptions {
  int max_n_all = 5;
  int max_n_uniform = 8;
};

/// Elements (g, pi) with g not the identity vector and (g, pi) D = D. Permutations are
/// enumerated in lexicographic one-line order, flip vectors lexicographically
/// in the fixed flip order. Uniform mode only tries the five uniform vectors.
std::vector<StabilizerHit> stabilizer_search(const SetSystem& d, StabilizerMode mode,
                                             const StabilizerOptions& opts = {});

struct TransportResult {
  SetSystem moved;
  TwualityElement stabilizer;
};

/// Given stab fixing d and move = (h, pi), returns d' = move d and the
/// conjugated stabilizer (h o g pi^-1 o h^-1 mu'^-1, pi mu pi^-1) of d'.
TransportResult transport(const SetSystem& d, const TwualityElement& stab,
                          const TwualityElement& move);

/// For every cycle (c1 ... cm) of mu, |g_cm ... g_c1| == |g^m|.
bool cycle_condition(const FlipVector& gvec, const Perm& mu, Flip g);

struct UniformizationResult {
  FlipVector hvec;
  SetSystem target;
  Flip g = Flip::Identity;
  Perm mu;
};

/// Builds h with (h, iota)(gvec, mu)(h, iota)^-1 = (uniform g, mu) and returns
/// target = (h, iota) dp, which is fixed by (uniform g, mu). Throws
/// ValidationError when (gvec, mu) does not fix dp, g is the identity, or the
/// cycle condition fails.
UniformizationResult uniformize(const SetSystem& dp, const FlipVector& gvec, const Perm& mu,
                                Flip g);

/// Orbit representative that is normal and has no feasible singletons: twist
/// by the least minimum-size feasible set, then loop-complement every element
/// whose singleton is feasible. Requires a vf-safe delta-matroid.
SetSystem normalize_rep(const SetSystem& d, const VfSafeOptions& opts = {});

} // namespace twuality
