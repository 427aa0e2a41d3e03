#include "twuality/orbit.hpp"

#include <algorithm>
#include <numeric>
#include <string>
#include <thread>
#include <unordered_map>
#include <unordered_set>

#include "twuality/errors.hpp"

namespace twuality {

SetSystem Generator::apply(const SetSystem& d) const {
  switch (kind) {
  case Kind::Twist: return apply_flip(d, Flip::Star, index);
  case Kind::Loop: return apply_flip(d, Flip::Plus, index);
  case Kind::Swap: return relabel(d, Perm::transposition(d.n(), index, index + 1));
  }
  return d;
}

std::string Generator::token() const {
  switch (kind) {
  case Kind::Twist: return "*" + std::to_string(index);
  case Kind::Loop: return "+" + std::to_string(index);
  case Kind::Swap: return "(" + std::to_string(index) + " " + std::to_string(index + 1) + ")";
  }
  return {};
}

std::vector<Generator> orbit_generators(int n, OrbitMode mode) {
  std::vector<Generator> gens;
  for (int i = 1; i <= n; ++i) {
    gens.push_back({Generator::Kind::Twist, i});
    gens.push_back({Generator::Kind::Loop, i});
  }
  if (mode == OrbitMode::Full) {
    for (int i = 1; i < n; ++i) gens.push_back({Generator::Kind::Swap, i});
  }
  return gens;
}

bool OrbitReport::contains(const SetSystem& d) const {
  return std::binary_search(elements.begin(), elements.end(), d);
}

namespace {

std::vector<std::vector<SetSystem>> expand(const std::vector<SetSystem>& frontier,
                                           const std::vector<Generator>& gens, int threads) {
  std::vector<std::vector<SetSystem>> succ(frontier.size());
  auto work = [&](std::size_t lo, std::size_t hi) {
    for (std::size_t k = lo; k < hi; ++k) {
      succ[k].reserve(gens.size());
      for (const Generator& g : gens) succ[k].push_back(g.apply(frontier[k]));
    }
  };
  const std::size_t workers =
      std::clamp<std::size_t>(static_cast<std::size_t>(std::max(threads, 1)), 1, frontier.size());
  if (workers <= 1) {
    work(0, frontier.size());
    return succ;
  }
  std::vector<std::jthread> pool;
  const std::size_t chunk = (frontier.size() + workers - 1) / workers;
  for (std::size_t lo = 0; lo < frontier.size(); lo += chunk) {
    pool.emplace_back(work, lo, std::min(frontier.size(), lo + chunk));
  }
  return succ;
}

} // namespace

OrbitReport orbit(const SetSystem& d, OrbitMode mode, const OrbitOptions& opts) {
  const int cap = mode == OrbitMode::Full ? opts.max_n_full : opts.max_n_iota;
  if (d.n() > cap) {
    throw BudgetExceeded("orbit: n = " + std::to_string(d.n()) + " exceeds cap " +
                         std::to_string(cap));
  }
  const auto gens = orbit_generators(d.n(), mode);

  struct Node {
    std::size_t parent;
    std::size_t generator;
  };
  std::vector<SetSystem> systems{d};
  std::vector<Node> nodes{{0, 0}};
  std::unordered_map<SetSystem, std::size_t> seen{{d, 0}};

  // Successors are computed level by level (possibly in parallel) and then
  // inserted serially in frontier order, so discovery order is fixed.
  std::size_t begin = 0;
  while (begin < systems.size()) {
    const std::size_t end = systems.size();
    std::vector<SetSystem> frontier(systems.begin() + static_cast<std::ptrdiff_t>(begin),
                                    systems.begin() + static_cast<std::ptrdiff_t>(end));
    auto succ = expand(frontier, gens, opts.threads);
    for (std::size_t k = 0; k < succ.size(); ++k) {
      for (std::size_t gi = 0; gi < gens.size(); ++gi) {
        auto& next = succ[k][gi];
        if (seen.contains(next)) continue;
        seen.emplace(next, systems.size());
        systems.push_back(std::move(next));
        nodes.push_back({begin + k, gi});
      }
    }
    begin = end;
  }

  std::vector<std::vector<Generator>> paths(systems.size());
  for (std::size_t k = 1; k < systems.size(); ++k) {
    paths[k] = paths[nodes[k].parent];
    paths[k].push_back(gens[nodes[k].generator]);
  }

  std::vector<std::size_t> order(systems.size());
  std::iota(order.begin(), order.end(), std::size_t{0});
  std::sort(order.begin(), order.end(),
            [&](std::size_t a, std::size_t b) { return systems[a] < systems[b]; });

  OrbitReport report;
  report.elements.reserve(systems.size());
  report.paths.reserve(systems.size());
  for (std::size_t k : order) {
    report.elements.push_back(std::move(systems[k]));
    report.paths.push_back(std::move(paths[k]));
  }
  return report;
}

bool is_generator_closed(const OrbitReport& report, const SetSystem& seed, OrbitMode mode) {
  if (!report.contains(seed) || report.paths.size() != report.elements.size()) return false;
  const auto gens = orbit_generators(seed.n(), mode);
  for (std::size_t k = 0; k < report.size(); ++k) {
    for (const Generator& g : gens) {
      if (!report.contains(g.apply(report.elements[k]))) return false;
    }
    SetSystem replay = seed;
    for (const Generator& g : report.paths[k]) replay = g.apply(replay);
    if (replay != report.elements[k]) return false;
  }
  return true;
}

namespace {

void dense_flip(std::vector<std::uint8_t>& ind, Flip f, std::uint32_t bit) {
  auto twist = [&] {
    for (std::uint32_t x = 0; x < ind.size(); ++x) {
      if (!(x & bit)) std::swap(ind[x], ind[x | bit]);
    }
  };
  auto loop = [&] {
    for (std::uint32_t x = 0; x < ind.size(); ++x) {
      if (x & bit) ind[x] ^= ind[x ^ bit];
    }
  };
  switch (f) {
  case Flip::Identity: break;
  case Flip::Star: twist(); break;
  case Flip::Plus: loop(); break;
  case Flip::StarPlus: loop(); twist(); break;
  case Flip::PlusStar: twist(); loop(); break;
  case Flip::StarBar:
    for (std::uint32_t x = 0; x < ind.size(); ++x) {
      if (!(x & bit)) ind[x] ^= ind[x | bit];
    }
    break;
  }
}

// Enumerates all flip vectors for one relabeled system, position 1 outermost,
// sharing the partial application of every prefix.
void search_vectors(std::vector<std::uint8_t>& ind, int pos, int n, std::vector<Flip>& current,
                    const std::vector<std::uint8_t>& target, const Perm& perm,
                    std::vector<StabilizerHit>& hits) {
  if (pos == n) {
    if (ind != target) return;
    TwualityElement e{FlipVector(current), perm};
    if (e.gvec.is_identity()) return;
    hits.push_back({e, e.gvec.uniform_entry()});
    return;
  }
  const std::uint32_t bit = 1u << pos;
  for (Flip f : kAllFlips) {
    auto next = ind;
    dense_flip(next, f, bit);
    current[pos] = f;
    search_vectors(next, pos + 1, n, current, target, perm, hits);
  }
}

} // namespace

std::vector<StabilizerHit> stabilizer_search(const SetSystem& d, StabilizerMode mode,
                                             const StabilizerOptions& opts) {
  const int cap = mode == StabilizerMode::All ? opts.max_n_all : opts.max_n_uniform;
  if (d.n() > cap) {
    throw BudgetExceeded("stabilizer search: n = " + std::to_string(d.n()) + " exceeds cap " +
                         std::to_string(cap));
  }
  std::vector<StabilizerHit> hits;
  const auto target = d.indicator();
  for (const Perm& p : all_perms(d.n())) {
    const SetSystem moved = relabel(d, p);
    if (mode == StabilizerMode::All) {
      auto ind = moved.indicator();
      std::vector<Flip> current(d.n(), Flip::Identity);
      search_vectors(ind, 0, d.n(), current, target, p, hits);
      continue;
    }
    for (Flip g : kAllFlips) {
      if (g == Flip::Identity) continue;
      const TwualityElement e{FlipVector::uniform(d.n(), g), p};
      if (d.n() == 0) continue;
      if (apply_vector(moved, e.gvec) == d) hits.push_back({e, g});
    }
  }
  for (const auto& h : hits) {
    if (act(h.element, d) != d) throw ConsistencyError("stabilizer hit failed re-verification");
  }
  return hits;
}

TransportResult transport(const SetSystem& d, const TwualityElement& stab,
                          const TwualityElement& move) {
  if (act(stab, d) != d) throw ValidationError("transport: element does not stabilize the system");
  const Perm& pi = move.perm;
  const Perm mu_prime = pi * stab.perm * pi.inverse();
  const FlipVector g_prime = compose(compose(move.gvec, vec_reindex(stab.gvec, pi)),
                                     vec_reindex(inverse(move.gvec), mu_prime));
  TransportResult out{act(move, d), {g_prime, mu_prime}};
  if (act(out.stabilizer, out.moved) != out.moved) {
    throw ConsistencyError("transport: conjugated element does not stabilize the moved system");
  }
  return out;
}

namespace {

Flip cycle_product(const FlipVector& gvec, const std::vector<int>& cycle) {
  Flip p = Flip::Identity;
  for (int c : cycle) p = flip_mul(gvec.at(c), p);
  return p;
}

} // namespace

bool cycle_condition(const FlipVector& gvec, const Perm& mu, Flip g) {
  if (g == Flip::Identity) throw ValidationError("cycle condition: g must not be the identity");
  if (gvec.size() != mu.size()) throw ValidationError("cycle condition: size mismatch");
  for (const auto& cycle : mu.cycles()) {
    const int m = static_cast<int>(cycle.size());
    if (flip_order(cycle_product(gvec, cycle)) != flip_order(flip_pow(g, m))) return false;
  }
  return true;
}

UniformizationResult uniformize(const SetSystem& dp, const FlipVector& gvec, const Perm& mu,
                                Flip g) {
  if (gvec.size() != dp.n() || mu.size() != dp.n()) {
    throw ValidationError("uniformize: size mismatch");
  }
  if (act({gvec, mu}, dp) != dp) {
    throw ValidationError("uniformize: (gvec, mu) does not stabilize the input system");
  }
  if (!cycle_condition(gvec, mu, g)) {
    throw ValidationError("uniformize: cycle order condition fails for g = " +
                          std::string(to_token(g)));
  }
  const Flip g_inv = flip_inverse(g);
  FlipVector h = FlipVector::identity(dp.n());
  for (const auto& cycle : mu.cycles()) {
    const int m = static_cast<int>(cycle.size());
    const Flip product = cycle_product(gvec, cycle);
    const Flip want = flip_pow(g, m);
    const Flip* conj = nullptr;
    for (const Flip& cand : kAllFlips) {
      if (flip_mul(flip_mul(cand, product), flip_inverse(cand)) == want) {
        conj = &cand;
        break;
      }
    }
    if (!conj) throw ConsistencyError("uniformize: no conjugator for a cycle product");
    h.at(cycle[m - 1]) = *conj;
    for (int k = m - 2; k >= 0; --k) {
      h.at(cycle[k]) = flip_mul(flip_mul(g_inv, h.at(cycle[k + 1])), gvec.at(cycle[k + 1]));
    }
  }
  UniformizationResult out{h, act({h, Perm(dp.n())}, dp), g, mu};
  if (act({FlipVector::uniform(dp.n(), g), mu}, out.target) != out.target) {
    throw ConsistencyError("uniformize: result is not fixed by the uniform element");
  }
  return out;
}

SetSystem normalize_rep(const SetSystem& d, const VfSafeOptions& opts) {
  if (!is_delta_matroid(d).valid || !is_vf_safe(d, opts)) {
    throw ValidationError("normalize: input must be a vf-safe delta-matroid");
  }
  const ElementSet least = min_max_matroids(d).first.family().front();
  const SetSystem normal = twist(d, least);
  std::uint32_t singles = 0;
  for (int i = 1; i <= d.n(); ++i) {
    if (normal.contains(ElementSet::singleton(i))) singles |= 1u << (i - 1);
  }
  return loop_complement(normal, ElementSet(singles));
}

} // namespace twuality
