#pragma once

#include <cstdint>
#include <optional>
#include <random>
#include <string>
#include <unordered_map>
#include <utility>
#include <vector>

#include "twuality/group.hpp"
#include "twuality/ribbon.hpp"
#include "twuality/set_system.hpp"

namespace twtest {
using namespace twuality;

using Rng = std::mt19937_64;

/// Each subset of [n] is feasible with probability `density`; never empty.
SetSystem random_system(Rng& rng, int n, double density = 0.5);
Flip random_flip(Rng& rng);
FlipVector random_flip_vector(Rng& rng, int n);
Perm random_perm(Rng& rng, int n);
TwualityElement random_element(Rng& rng, int n);
ElementSet random_subset(Rng& rng, int n);

TwualityElement power(const TwualityElement& a, int k);
int element_order(const TwualityElement& a);

/// A uniformly random nonempty system fixed by a, or nullopt when a fixes
/// none. The action is linear over GF(2) on membership tables, so the fixed
/// systems are the nonzero vectors of the kernel of A + I.
std::optional<SetSystem> fixed_system(Rng& rng, const TwualityElement& a);

/// A random element with a nonempty fixed system (n <= 6), together with one
/// such system.
std::pair<TwualityElement, SetSystem> random_stabilized(Rng& rng, int n);

/// All ribbon graphs on 1..max_vertices vertices and 0..max_edges edges:
/// every assignment of half-edges to vertices, every cyclic order and every
/// sign pattern. Edge k has half-edges 2k-1, 2k and label k.
std::vector<RibbonGraph> ribbon_catalog(int max_vertices = 3, int max_edges = 3);

/// Hand-built graphs: loops, path, digon, theta, bouquets and a few larger ones.
std::vector<std::pair<std::string, RibbonGraph>> named_ribbon_graphs();

/// A deterministic sample of distinct vf-safe delta-matroids with
/// 1 <= n <= max_n, drawn from ribbon graphs and their orbits.
std::vector<SetSystem> vf_safe_sample(std::size_t count, int max_n, std::uint64_t seed);

class VfSafeCache {
public:
  bool operator()(const SetSystem& d);

private:
  std::unordered_map<SetSystem, bool> memo_;
};

/// Options that skip the per-graph checks in delta_matroid_of; catalog tests
/// check those separately through a cache.
RibbonOptions unchecked_ribbon_options();

} // namespace twtest
