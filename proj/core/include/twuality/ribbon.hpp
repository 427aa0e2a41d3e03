#pragma once

#include <array>
#include <cstddef>
#include <cstdint>
#include <vector>

#include "twuality/element_set.hpp"
#include "twuality/multimatroid.hpp"
#include "twuality/set_system.hpp"

namespace twuality {

struct RibbonEdge {
  std::array<int, 2> ends{0, 0}; ///< half-edge ids
  int sign = 1;                  ///< +1 untwisted, -1 twisted
  int label = 1;                 ///< position in [n]

  bool operator==(const RibbonEdge&) const = default;
};

/// A ribbon graph as a signed rotation system. Each vertex lists its
/// half-edge ids in cyclic order; an empty list is an isolated vertex.
class RibbonGraph {
public:
  RibbonGraph() = default;
  /// Throws ValidationError unless every half-edge id occurs once in the
  /// rotations and once among the edge ends, signs are +-1 and labels are a
  /// bijection onto [|E|]. Rotations are rotated to start at their least id.
  RibbonGraph(std::vector<std::vector<int>> vertices, std::vector<RibbonEdge> edges);

  const std::vector<std::vector<int>>& vertices() const { return vertices_; }
  const std::vector<RibbonEdge>& edges() const { return edges_; }
  int num_vertices() const { return static_cast<int>(vertices_.size()); }
  int num_edges() const { return static_cast<int>(edges_.size()); }

  /// Spanning subgraph keeping the edges whose labels lie in `labels`
  /// (labels are not renumbered; only used internally for counting).
  RibbonGraph spanning_subgraph(ElementSet labels) const;

  bool operator==(const RibbonGraph&) const = default;

private:
  std::vector<std::vector<int>> vertices_;
  std::vector<RibbonEdge> edges_;
};

/// Number of connected components.
int connected_components(const RibbonGraph& g);
/// Number of boundary components of the surface.
int boundary_components(const RibbonGraph& g);
/// Same two counts for the spanning subgraph on `labels`.
int connected_components(const RibbonGraph& g, ElementSet labels);
int boundary_components(const RibbonGraph& g, ElementSet labels);

struct RibbonOptions {
  int max_edges = 16;
  /// delta_matroid_of re-checks the exchange axiom up to this many edges and
  /// vf-safety up to vf_safe.max_n edges.
  int check_max_edges = 8;
  VfSafeOptions vf_safe{6};
};

/// Label sets A with k(V, A) = k(G) and b(V, A) = k(G), in colex order.
std::vector<ElementSet> spanning_quasi_trees(const RibbonGraph& g, const RibbonOptions& opts = {});

/// ([n], spanning quasi-trees). Throws ConsistencyError if the result fails
/// the delta-matroid or vf-safe checks.
SetSystem delta_matroid_of(const RibbonGraph& g, const RibbonOptions& opts = {});

enum class TransitionKind : std::uint8_t { Black = 0, White = 1, Crossing = 2 };

/// A partition of the four half-edges at a 4-valent vertex into two pairs
/// (local half-edge numbers 0..3).
struct Pairing {
  std::array<std::array<std::uint8_t, 2>, 2> pairs{};
  bool operator==(const Pairing&) const = default;
};

/// A 4-regular graph with a labeled vertex set. Half-edge 4v + k is local
/// half-edge k of vertex v; for a medial graph k = 0, 1 are the before/after
/// slots at the first end of the edge and k = 2, 3 at the second end.
struct FourRegularGraph {
  std::vector<int> vertex_labels;
  std::vector<std::array<int, 2>> corner_edges;
  /// Per vertex, indexed by TransitionKind.
  std::vector<std::array<Pairing, 3>> transitions;
  int free_loops = 0;

  int num_vertices() const { return static_cast<int>(vertex_labels.size()); }
};

/// Validates the invariants: three distinct pairings per vertex and every
/// half-edge on exactly one corner edge. Throws ValidationError.
void validate(const FourRegularGraph& f);

/// One transition per vertex, in vertex order.
struct TransitionSystem {
  std::vector<TransitionKind> choice;

  static TransitionSystem uniform(int vertices, TransitionKind k) {
    return {std::vector<TransitionKind>(vertices, k)};
  }
};

/// Medial graph: one vertex per edge, corner edges joining (h, after) to
/// (next(h), before) around each vertex, isolated vertices as free loops.
FourRegularGraph medial(const RibbonGraph& g);

/// Components of the 4-regular graph, free loops included.
int components(const FourRegularGraph& f);
/// Components of the 2-regular graph obtained by splitting along t.
int split_components(const FourRegularGraph& f, const TransitionSystem& t);

struct TransitionMatroidOptions {
  int max_vertices = 8;
};

/// Bases: transition systems T with k(F|T) = k(F). Class i is the vertex
/// labeled i; role r is TransitionKind r-1 (black, white, crossing).
Multimatroid transition_matroid(const FourRegularGraph& f,
                                const TransitionMatroidOptions& opts = {});

struct MedialLiftCheck {
  bool equal = false;
  Multimatroid from_medial;
  Multimatroid from_lift;
  std::vector<Subtransversal> only_in_medial;
  std::vector<Subtransversal> only_in_lift;
};

/// Compares the transition matroid of the medial graph with the lift of the
/// ribbon graph's delta-matroid at (T_b, T_w, T_c) with labels as projection.
MedialLiftCheck verify_medial_lift(const RibbonGraph& g, int max_edges = 6,
                                   const RibbonOptions& opts = {});

} // namespace twuality
