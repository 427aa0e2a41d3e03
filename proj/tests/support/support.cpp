#include "support.hpp"

#include <algorithm>
#include <array>
#include <functional>
#include <set>

#include "twuality/orbit.hpp"

namespace twtest {

SetSystem random_system(Rng& rng, int n, double density) {
  std::bernoulli_distribution pick(density);
  std::uniform_int_distribution<std::uint32_t> any(0, (1u << n) - 1);
  std::vector<ElementSet> family;
  for (std::uint32_t m = 0; m < (1u << n); ++m) {
    if (pick(rng)) family.emplace_back(m);
  }
  if (family.empty()) family.emplace_back(any(rng));
  return SetSystem(n, std::move(family));
}

Flip random_flip(Rng& rng) {
  std::uniform_int_distribution<int> d(0, 5);
  return kAllFlips[d(rng)];
}

FlipVector random_flip_vector(Rng& rng, int n) {
  FlipVector g = FlipVector::identity(n);
  for (auto& f : g.entries) f = random_flip(rng);
  return g;
}

Perm random_perm(Rng& rng, int n) {
  std::vector<int> images(n);
  for (int i = 0; i < n; ++i) images[i] = i + 1;
  std::shuffle(images.begin(), images.end(), rng);
  return Perm::from_one_line(images);
}

TwualityElement random_element(Rng& rng, int n) {
  return {random_flip_vector(rng, n), random_perm(rng, n)};
}

ElementSet random_subset(Rng& rng, int n) {
  std::uniform_int_distribution<std::uint32_t> d(0, (1u << n) - 1);
  return ElementSet(d(rng));
}

TwualityElement power(const TwualityElement& a, int k) {
  TwualityElement out = TwualityElement::identity(a.size());
  for (int j = 0; j < k; ++j) out = sd_mul(out, a);
  return out;
}

int element_order(const TwualityElement& a) {
  TwualityElement x = a;
  int k = 1;
  while (!x.is_identity()) {
    x = sd_mul(x, a);
    ++k;
  }
  return k;
}

std::optional<SetSystem> fixed_system(Rng& rng, const TwualityElement& a) {
  const int n = a.size();
  const int dim = 1 << n;
  // Column x of A is the membership table of a applied to {x}; row r of
  // A + I is assembled bitwise.
  std::vector<std::uint64_t> rows(dim, 0);
  for (int x = 0; x < dim; ++x) {
    const auto col = act(a, SetSystem(n, {ElementSet(static_cast<std::uint32_t>(x))})).indicator();
    for (int r = 0; r < dim; ++r) {
      if (col[r] ^ (r == x)) rows[r] |= std::uint64_t{1} << x;
    }
  }
  // Reduced row echelon form, then one kernel vector per free column.
  std::vector<int> pivot_col;
  int rank = 0;
  for (int c = 0; c < dim && rank < dim; ++c) {
    int p = rank;
    while (p < dim && !((rows[p] >> c) & 1u)) ++p;
    if (p == dim) continue;
    std::swap(rows[p], rows[rank]);
    for (int r = 0; r < dim; ++r) {
      if (r != rank && ((rows[r] >> c) & 1u)) rows[r] ^= rows[rank];
    }
    pivot_col.push_back(c);
    ++rank;
  }
  std::vector<std::uint64_t> kernel;
  for (int f = 0; f < dim; ++f) {
    if (std::find(pivot_col.begin(), pivot_col.end(), f) != pivot_col.end()) continue;
    std::uint64_t v = std::uint64_t{1} << f;
    for (int k = 0; k < rank; ++k) {
      if ((rows[k] >> f) & 1u) v |= std::uint64_t{1} << pivot_col[k];
    }
    kernel.push_back(v);
  }
  if (kernel.empty()) return std::nullopt;
  std::uint64_t v = 0;
  while (v == 0) {
    for (auto k : kernel) {
      if (rng() & 1u) v ^= k;
    }
  }
  std::vector<std::uint8_t> ind(dim, 0);
  for (int x = 0; x < dim; ++x) ind[x] = (v >> x) & 1u;
  return SetSystem::from_indicator(n, ind);
}

std::pair<TwualityElement, SetSystem> random_stabilized(Rng& rng, int n) {
  while (true) {
    auto a = random_element(rng, n);
    if (auto d = fixed_system(rng, a)) return {std::move(a), std::move(*d)};
  }
}

namespace {

void for_each_rotation(const std::vector<std::vector<int>>& at_vertex, std::size_t v,
                       std::vector<std::vector<int>>& current,
                       const std::function<void(const std::vector<std::vector<int>>&)>& f) {
  if (v == at_vertex.size()) {
    f(current);
    return;
  }
  std::vector<int> rot = at_vertex[v];
  if (rot.size() <= 2) {
    current.push_back(rot);
    for_each_rotation(at_vertex, v + 1, current, f);
    current.pop_back();
    return;
  }
  std::sort(rot.begin() + 1, rot.end());
  do {
    current.push_back(rot);
    for_each_rotation(at_vertex, v + 1, current, f);
    current.pop_back();
  } while (std::next_permutation(rot.begin() + 1, rot.end()));
}

RibbonGraph make_graph(std::vector<std::vector<int>> vertices,
                       std::vector<std::pair<std::array<int, 2>, int>> edges) {
  std::vector<RibbonEdge> out;
  for (std::size_t k = 0; k < edges.size(); ++k) {
    out.push_back({edges[k].first, edges[k].second, static_cast<int>(k) + 1});
  }
  return RibbonGraph(std::move(vertices), std::move(out));
}

} // namespace

std::vector<RibbonGraph> ribbon_catalog(int max_vertices, int max_edges) {
  std::vector<RibbonGraph> out;
  for (int v = 1; v <= max_vertices; ++v) {
    for (int e = 0; e <= max_edges; ++e) {
      const int halves = 2 * e;
      std::vector<int> owner(halves, 0);
      while (true) {
        std::vector<std::vector<int>> at_vertex(v);
        for (int h = 0; h < halves; ++h) at_vertex[owner[h]].push_back(h + 1);
        std::vector<std::vector<int>> current;
        for_each_rotation(at_vertex, 0, current, [&](const std::vector<std::vector<int>>& rots) {
          for (std::uint32_t signs = 0; signs < (1u << e); ++signs) {
            std::vector<RibbonEdge> edges;
            for (int k = 0; k < e; ++k) {
              edges.push_back({{2 * k + 1, 2 * k + 2}, ((signs >> k) & 1u) ? -1 : 1, k + 1});
            }
            out.emplace_back(rots, std::move(edges));
          }
        });
        int k = 0;
        while (k < halves && owner[k] == v - 1) owner[k++] = 0;
        if (k == halves) break;
        ++owner[k];
      }
    }
  }
  return out;
}

std::vector<std::pair<std::string, RibbonGraph>> named_ribbon_graphs() {
  std::vector<std::pair<std::string, RibbonGraph>> out;
  out.emplace_back("isolated vertex", make_graph({{}}, {}));
  out.emplace_back("twisted loop", make_graph({{1, 2}}, {{{1, 2}, -1}}));
  out.emplace_back("untwisted loop", make_graph({{1, 2}}, {{{1, 2}, 1}}));
  out.emplace_back("edge", make_graph({{1}, {2}}, {{{1, 2}, 1}}));
  out.emplace_back("twisted edge", make_graph({{1}, {2}}, {{{1, 2}, -1}}));
  out.emplace_back("path", make_graph({{1}, {2, 3}, {4}}, {{{1, 2}, 1}, {{3, 4}, 1}}));
  out.emplace_back("digon", make_graph({{1, 3}, {2, 4}}, {{{1, 2}, 1}, {{3, 4}, 1}}));
  out.emplace_back("twisted digon", make_graph({{1, 3}, {2, 4}}, {{{1, 2}, 1}, {{3, 4}, -1}}));
  out.emplace_back("theta", make_graph({{1, 3, 5}, {2, 6, 4}}, {{{1, 2}, 1}, {{3, 4}, 1}, {{5, 6}, 1}}));
  out.emplace_back("toroidal theta", make_graph({{1, 3, 5}, {2, 4, 6}}, {{{1, 2}, 1}, {{3, 4}, 1}, {{5, 6}, 1}}));
  out.emplace_back("planar bouquet", make_graph({{1, 2, 3, 4}}, {{{1, 2}, 1}, {{3, 4}, 1}}));
  out.emplace_back("interlaced bouquet", make_graph({{1, 3, 2, 4}}, {{{1, 2}, 1}, {{3, 4}, 1}}));
  out.emplace_back("twisted bouquet", make_graph({{1, 3, 2, 4}}, {{{1, 2}, -1}, {{3, 4}, 1}}));
  out.emplace_back("three-loop bouquet",
                   make_graph({{1, 3, 5, 2, 4, 6}}, {{{1, 2}, 1}, {{3, 4}, -1}, {{5, 6}, 1}}));
  out.emplace_back("triangle", make_graph({{1, 6}, {2, 3}, {4, 5}}, {{{1, 2}, 1}, {{3, 4}, 1}, {{5, 6}, 1}}));
  out.emplace_back("loop and isolated vertex", make_graph({{1, 2}, {}}, {{{1, 2}, -1}}));
  out.emplace_back("four-loop bouquet",
                   make_graph({{1, 3, 2, 5, 4, 7, 6, 8}},
                              {{{1, 2}, 1}, {{3, 4}, -1}, {{5, 6}, 1}, {{7, 8}, -1}}));
  out.emplace_back("square", make_graph({{1, 8}, {2, 3}, {4, 5}, {6, 7}},
                                        {{{1, 2}, 1}, {{3, 4}, 1}, {{5, 6}, -1}, {{7, 8}, 1}}));
  out.emplace_back("theta with loop",
                   make_graph({{1, 3, 7, 5, 8}, {2, 6, 4}},
                              {{{1, 2}, 1}, {{3, 4}, -1}, {{5, 6}, 1}, {{7, 8}, 1}}));
  out.emplace_back("k4 minus edge",
                   make_graph({{1, 3, 9}, {2, 5}, {4, 6, 7}, {8, 10}},
                              {{{1, 2}, 1}, {{3, 4}, 1}, {{5, 6}, -1}, {{7, 8}, 1}, {{9, 10}, 1}}));
  return out;
}

bool VfSafeCache::operator()(const SetSystem& d) {
  if (auto it = memo_.find(d); it != memo_.end()) return it->second;
  const bool safe = is_vf_safe(d);
  memo_.emplace(d, safe);
  return safe;
}

RibbonOptions unchecked_ribbon_options() {
  RibbonOptions opts;
  opts.check_max_edges = -1;
  opts.vf_safe.max_n = -1;
  return opts;
}

std::vector<SetSystem> vf_safe_sample(std::size_t count, int max_n, std::uint64_t seed) {
  std::set<SetSystem> seeds;
  for (const auto& g : ribbon_catalog(2, std::min(max_n, 3))) {
    if (g.num_edges() >= 1) seeds.insert(delta_matroid_of(g, unchecked_ribbon_options()));
  }
  for (const auto& [name, g] : named_ribbon_graphs()) {
    if (g.num_edges() >= 1 && g.num_edges() <= max_n) seeds.insert(delta_matroid_of(g));
  }
  // Orbit members of vf-safe systems are vf-safe.
  std::set<SetSystem> pool;
  for (const auto& d : seeds) {
    for (const auto& e : orbit(d, OrbitMode::Iota).elements) pool.insert(e);
  }
  std::vector<SetSystem> all(pool.begin(), pool.end());
  Rng rng(seed);
  std::shuffle(all.begin(), all.end(), rng);
  // Interleave ground sizes so small samples still cover every n.
  std::vector<std::vector<SetSystem>> by_n(max_n + 1);
  for (auto& d : all) by_n[d.n()].push_back(std::move(d));
  std::vector<SetSystem> out;
  for (std::size_t k = 0; out.size() < count; ++k) {
    bool any = false;
    for (int n = 1; n <= max_n && out.size() < count; ++n) {
      if (k < by_n[n].size()) {
        out.push_back(by_n[n][k]);
        any = true;
      }
    }
    if (!any) break;
  }
  return out;
}

} // namespace twtest
