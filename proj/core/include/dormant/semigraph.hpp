#pragma once

#include <array>
#include <optional>
#include <string>
#include <vector>

#include "dormant/errors.hpp"

namespace dormant {

// A branch is half of an edge: slot k in {0,1} of edge e.
struct Branch {
  int edge = -1;
  int slot = 0;
  auto operator<=>(const Branch&) const = default;
};

// Semi-graph: every edge has two branches; a branch is attached to a vertex
// or open.  No edge may have both branches open.
struct SemiGraph {
  struct Edge {
    // endpoint[k] is the vertex of branch k, or nullopt when the branch is
    // open.
    std::array<std::optional<int>, 2> endpoint;
  };
  int num_vertices = 0;
  std::vector<Edge> edges;
};

struct GraphType {
  int genus = 0;
  int marked = 0;
  auto operator<=>(const GraphType&) const = default;
};

// A trivalent graph together with an ordering of the three branches at each
// vertex and a global ordering of the open branches.
struct ClutchingData {
  SemiGraph graph;
  std::vector<std::array<Branch, 3>> vertex_branches;
  std::vector<Branch> open_branches;
};

// genus = 1 - #V + #E - #open, marked = #open.
GraphType graph_type(const SemiGraph& g);

// Wraps a semi-graph with the canonical orders: vertex branches and open
// branches in lexicographic (edge, slot) order.
ClutchingData make_clutching(SemiGraph g);

// Empty result means valid; otherwise one message per violation (trivalence,
// connectedness, dangling references, doubly-open edges).
std::vector<std::string> validate(const ClutchingData& c);

// Canonical stable graph of the given type.  Requires 2g - 2 + r > 0.
ClutchingData standard_graph(int genus, int marked);

// A second graph of the same type, structurally different from the standard
// one where the type admits it, otherwise a relabeled copy.
ClutchingData alternative_graph(int genus, int marked);

// Joins open branch i of c1 to open branch j of c2.  If c1 and c2 are the
// same object the two branches (i != j) are closed into a loop instead.
ClutchingData glue(const ClutchingData& c1, int i, const ClutchingData& c2,
                   int j);

std::string to_json(const ClutchingData& c);
ClutchingData clutching_from_json(const std::string& text);

}  // namespace dormant
