#include "twuality/ribbon.hpp"

#include <algorithm>
#include <numeric>
#include <string>
#include <unordered_map>

#include "twuality/errors.hpp"

namespace twuality {

namespace {

class UnionFind {
public:
  explicit UnionFind(std::size_t n) : parent_(n) { std::iota(parent_.begin(), parent_.end(), 0); }

  std::size_t find(std::size_t x) {
    while (parent_[x] != x) {
      parent_[x] = parent_[parent_[x]];
      x = parent_[x];
    }
    return x;
  }
  void unite(std::size_t a, std::size_t b) {
    a = find(a);
    b = find(b);
    if (a != b) {
      parent_[b] = a;
      --count_offset_;
    }
  }
  int count() const { return static_cast<int>(parent_.size()) + count_offset_; }

private:
  std::vector<std::size_t> parent_;
  int count_offset_ = 0;
};

// Half-edge id -> (edge index, end index).
struct HalfEdgeIndex {
  std::unordered_map<int, std::pair<int, int>> owner;

  explicit HalfEdgeIndex(const std::vector<RibbonEdge>& edges) {
    for (std::size_t e = 0; e < edges.size(); ++e) {
      for (int k = 0; k < 2; ++k) owner[edges[e].ends[k]] = {static_cast<int>(e), k};
    }
  }
};

} // namespace

RibbonGraph::RibbonGraph(std::vector<std::vector<int>> vertices, std::vector<RibbonEdge> edges)
    : vertices_(std::move(vertices)), edges_(std::move(edges)) {
  if (edges_.size() > static_cast<std::size_t>(kMaxGround)) {
    throw ValidationError("ribbon graph has more than " + std::to_string(kMaxGround) + " edges");
  }
  std::unordered_map<int, int> seen_rotation;
  for (const auto& rot : vertices_) {
    for (int h : rot) {
      if (h < 0) throw ValidationError("negative half-edge id " + std::to_string(h));
      if (++seen_rotation[h] > 1) {
        throw ValidationError("half-edge " + std::to_string(h) + " appears twice in rotations");
      }
    }
  }
  std::unordered_map<int, int> seen_edges;
  std::vector<bool> label_used(edges_.size() + 1, false);
  for (const auto& e : edges_) {
    if (e.sign != 1 && e.sign != -1) throw ValidationError("edge sign must be +1 or -1");
    if (e.label < 1 || e.label > static_cast<int>(edges_.size()) || label_used[e.label]) {
      throw ValidationError("edge labels must be a bijection onto [" +
                            std::to_string(edges_.size()) + "]");
    }
    label_used[e.label] = true;
    for (int h : e.ends) {
      if (++seen_edges[h] > 1) {
        throw ValidationError("half-edge " + std::to_string(h) + " is used by two edge ends");
      }
      if (!seen_rotation.count(h)) {
        throw ValidationError("half-edge " + std::to_string(h) + " missing from rotations");
      }
    }
  }
  if (seen_edges.size() != seen_rotation.size()) {
    throw ValidationError("rotations mention half-edges that belong to no edge");
  }
  for (auto& rot : vertices_) {
    std::rotate(rot.begin(), std::min_element(rot.begin(), rot.end()), rot.end());
  }
}

RibbonGraph RibbonGraph::spanning_subgraph(ElementSet labels) const {
  RibbonGraph out;
  std::unordered_map<int, bool> keep;
  for (const auto& e : edges_) {
    if (labels.contains(e.label)) {
      out.edges_.push_back(e);
      keep[e.ends[0]] = keep[e.ends[1]] = true;
    }
  }
  for (const auto& rot : vertices_) {
    std::vector<int> kept;
    for (int h : rot) {
      if (keep.count(h)) kept.push_back(h);
    }
    out.vertices_.push_back(std::move(kept));
  }
  return out;
}

int connected_components(const RibbonGraph& g, ElementSet labels) {
  std::unordered_map<int, int> vertex_of;
  for (std::size_t v = 0; v < g.vertices().size(); ++v) {
    for (int h : g.vertices()[v]) vertex_of[h] = static_cast<int>(v);
  }
  UnionFind uf(g.vertices().size());
  for (const auto& e : g.edges()) {
    if (labels.contains(e.label)) uf.unite(vertex_of[e.ends[0]], vertex_of[e.ends[1]]);
  }
  return uf.count();
}

int boundary_components(const RibbonGraph& g, ElementSet labels) {
  const HalfEdgeIndex index(g.edges());
  // Endpoint nodes: a(h) = 4e + 2k, b(h) = 4e + 2k + 1 for end k of edge e.
  auto a = [&](int h) {
    const auto [e, k] = index.owner.at(h);
    return static_cast<std::size_t>(4 * e + 2 * k);
  };
  auto b = [&](int h) { return a(h) + 1; };
  UnionFind uf(4 * g.edges().size());
  int isolated = 0;
  int unused_nodes = 0;
  for (const auto& rot : g.vertices()) {
    std::vector<int> kept;
    for (int h : rot) {
      if (labels.contains(g.edges()[index.owner.at(h).first].label)) kept.push_back(h);
    }
    if (kept.empty()) {
      ++isolated;
      continue;
    }
    for (std::size_t j = 0; j < kept.size(); ++j) uf.unite(b(kept[j]), a(kept[(j + 1) % kept.size()]));
  }
  for (const auto& e : g.edges()) {
    if (!labels.contains(e.label)) {
      unused_nodes += 4;
      continue;
    }
    const int h = e.ends[0];
    const int t = e.ends[1];
    if (e.sign == 1) {
      uf.unite(a(h), b(t));
      uf.unite(b(h), a(t));
    } else {
      uf.unite(a(h), a(t));
      uf.unite(b(h), b(t));
    }
  }
  return uf.count() - unused_nodes + isolated;
}

int connected_components(const RibbonGraph& g) {
  return connected_components(g, ElementSet::full(g.num_edges()));
}

int boundary_components(const RibbonGraph& g) {
  return boundary_components(g, ElementSet::full(g.num_edges()));
}

std::vector<ElementSet> spanning_quasi_trees(const RibbonGraph& g, const RibbonOptions& opts) {
  const int n = g.num_edges();
  if (n > opts.max_edges) {
    throw BudgetExceeded("ribbon graph has " + std::to_string(n) + " edges, cap is " +
                         std::to_string(opts.max_edges));
  }
  const int k = connected_components(g);
  std::vector<ElementSet> out;
  for (std::uint32_t m = 0; m < (1u << n); ++m) {
    const ElementSet a(m);
    if (boundary_components(g, a) == k && connected_components(g, a) == k) out.push_back(a);
  }
  return out;
}

SetSystem delta_matroid_of(const RibbonGraph& g, const RibbonOptions& opts) {
  SetSystem d(g.num_edges(), spanning_quasi_trees(g, opts));
  if (g.num_edges() <= opts.check_max_edges) {
    const auto w = is_delta_matroid(d);
    if (!w.valid) throw ConsistencyError("quasi-tree family " + d.to_string() + " is not a delta-matroid");
  }
  if (g.num_edges() <= opts.vf_safe.max_n && !is_vf_safe(d, opts.vf_safe)) {
    throw ConsistencyError("quasi-tree family " + d.to_string() + " is not vf-safe");
  }
  return d;
}

namespace {

constexpr Pairing make_pairing(int a, int b, int c, int d) {
  Pairing p;
  p.pairs[0] = {static_cast<std::uint8_t>(a), static_cast<std::uint8_t>(b)};
  p.pairs[1] = {static_cast<std::uint8_t>(c), static_cast<std::uint8_t>(d)};
  return p;
}

bool is_perfect_matching(const Pairing& p) {
  unsigned seen = 0;
  for (const auto& pr : p.pairs) {
    for (auto x : pr) {
      if (x > 3) return false;
      seen |= 1u << x;
    }
  }
  return seen == 0xF;
}

// Pairings as a canonical partner table.
std::array<int, 4> partners(const Pairing& p) {
  std::array<int, 4> out{};
  for (const auto& pr : p.pairs) {
    out[pr[0]] = pr[1];
    out[pr[1]] = pr[0];
  }
  return out;
}

} // namespace

FourRegularGraph medial(const RibbonGraph& g) {
  FourRegularGraph f;
  const int m = g.num_edges();
  f.vertex_labels.resize(m);
  f.transitions.resize(m);
  std::iota(f.vertex_labels.begin(), f.vertex_labels.end(), 1);
  const HalfEdgeIndex index(g.edges());
  auto vertex_of = [&](int edge) { return g.edges()[edge].label - 1; };
  for (int e = 0; e < m; ++e) {
    const int v = vertex_of(e);
    auto& t = f.transitions[v];
    t[static_cast<int>(TransitionKind::Black)] = make_pairing(0, 1, 2, 3);
    if (g.edges()[e].sign == 1) {
      t[static_cast<int>(TransitionKind::White)] = make_pairing(0, 3, 1, 2);
      t[static_cast<int>(TransitionKind::Crossing)] = make_pairing(0, 2, 1, 3);
    } else {
      t[static_cast<int>(TransitionKind::White)] = make_pairing(0, 2, 1, 3);
      t[static_cast<int>(TransitionKind::Crossing)] = make_pairing(0, 3, 1, 2);
    }
  }
  auto slot = [&](int h, bool after) {
    const auto [e, k] = index.owner.at(h);
    return 4 * vertex_of(e) + 2 * k + (after ? 1 : 0);
  };
  for (const auto& rot : g.vertices()) {
    if (rot.empty()) {
      ++f.free_loops;
      continue;
    }
    for (std::size_t j = 0; j < rot.size(); ++j) {
      f.corner_edges.push_back({slot(rot[j], true), slot(rot[(j + 1) % rot.size()], false)});
    }
  }
  return f;
}

void validate(const FourRegularGraph& f) {
  const int v = f.num_vertices();
  if (static_cast<int>(f.transitions.size()) != v) {
    throw ValidationError("transition table does not match the vertex count");
  }
  if (f.free_loops < 0) throw ValidationError("negative free loop count");
  for (int i = 0; i < v; ++i) {
    const auto& t = f.transitions[i];
    for (const auto& p : t) {
      if (!is_perfect_matching(p)) {
        throw ValidationError("vertex " + std::to_string(i) + " has a malformed transition");
      }
    }
    if (partners(t[0]) == partners(t[1]) || partners(t[0]) == partners(t[2]) ||
        partners(t[1]) == partners(t[2])) {
      throw ValidationError("vertex " + std::to_string(i) + " repeats a transition");
    }
  }
  std::vector<int> uses(4 * static_cast<std::size_t>(v), 0);
  for (const auto& c : f.corner_edges) {
    for (int h : c) {
      if (h < 0 || h >= 4 * v) throw ValidationError("corner edge endpoint out of range");
      ++uses[h];
    }
  }
  if (std::any_of(uses.begin(), uses.end(), [](int u) { return u != 1; })) {
    throw ValidationError("every half-edge must lie on exactly one corner edge");
  }
}

int components(const FourRegularGraph& f) {
  const int v = f.num_vertices();
  UnionFind uf(4 * static_cast<std::size_t>(v));
  for (int i = 0; i < v; ++i) {
    for (int k = 1; k < 4; ++k) uf.unite(4 * i, 4 * i + k);
  }
  for (const auto& c : f.corner_edges) uf.unite(c[0], c[1]);
  return uf.count() + f.free_loops;
}

int split_components(const FourRegularGraph& f, const TransitionSystem& t) {
  const int v = f.num_vertices();
  if (static_cast<int>(t.choice.size()) != v) {
    throw ValidationError("transition system does not match the vertex count");
  }
  UnionFind uf(4 * static_cast<std::size_t>(v));
  for (int i = 0; i < v; ++i) {
    const auto& p = f.transitions[i][static_cast<int>(t.choice[i])];
    for (const auto& pr : p.pairs) uf.unite(4 * i + pr[0], 4 * i + pr[1]);
  }
  for (const auto& c : f.corner_edges) uf.unite(c[0], c[1]);
  return uf.count() + f.free_loops;
}

Multimatroid transition_matroid(const FourRegularGraph& f, const TransitionMatroidOptions& opts) {
  validate(f);
  const int v = f.num_vertices();
  if (v > opts.max_vertices) {
    throw BudgetExceeded("4-regular graph has " + std::to_string(v) + " vertices, cap is " +
                         std::to_string(opts.max_vertices));
  }
  std::vector<bool> used(v + 1, false);
  for (int label : f.vertex_labels) {
    if (label < 1 || label > v || used[label]) {
      throw ValidationError("vertex labels must be a bijection onto [" + std::to_string(v) + "]");
    }
    used[label] = true;
  }
  const int k = components(f);
  std::vector<Subtransversal> bases;
  TransitionSystem t{std::vector<TransitionKind>(v, TransitionKind::Black)};
  std::vector<int> digits(v, 0);
  while (true) {
    for (int i = 0; i < v; ++i) t.choice[i] = static_cast<TransitionKind>(digits[i]);
    if (split_components(f, t) == k) {
      Subtransversal s;
      for (int i = 0; i < v; ++i) s = s.with(f.vertex_labels[i], digits[i] + 1);
      bases.push_back(s);
    }
    int j = 0;
    while (j < v && digits[j] == 2) digits[j++] = 0;
    if (j == v) break;
    ++digits[j];
  }
  return Multimatroid(v, std::move(bases));
}

MedialLiftCheck verify_medial_lift(const RibbonGraph& g, int max_edges,
                                   const RibbonOptions& opts) {
  if (g.num_edges() > max_edges) {
    throw BudgetExceeded("ribbon graph has " + std::to_string(g.num_edges()) +
                         " edges, cap is " + std::to_string(max_edges));
  }
  MedialLiftCheck out;
  const SetSystem d = delta_matroid_of(g, opts);
  out.from_lift = lift_unchecked(d, TransversalTriple::reference(d.n()), Projection::identity(d.n()));
  out.from_medial = transition_matroid(medial(g), {std::max(max_edges, 0)});
  const auto& a = out.from_medial.bases();
  const auto& b = out.from_lift.bases();
  std::set_difference(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(out.only_in_medial));
  std::set_difference(b.begin(), b.end(), a.begin(), a.end(), std::back_inserter(out.only_in_lift));
  out.equal = out.only_in_medial.empty() && out.only_in_lift.empty();
  return out;
}

} // namespace twuality
