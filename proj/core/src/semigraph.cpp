#include "dormant/semigraph.hpp"

#include <algorithm>
#include <map>
#include <numeric>

#include "json.hpp"

namespace dormant {

namespace {

std::vector<std::vector<Branch>> incident_branches(const SemiGraph& g) {
  std::vector<std::vector<Branch>> inc(g.num_vertices);
  for (int e = 0; e < static_cast<int>(g.edges.size()); ++e) {
    for (int slot = 0; slot < 2; ++slot) {
      const auto& v = g.edges[e].endpoint[slot];
      if (v && *v >= 0 && *v < g.num_vertices) {
        inc[*v].push_back(Branch{e, slot});
      }
    }
  }
  return inc;
}

std::vector<Branch> open_branches_of(const SemiGraph& g) {
  std::vector<Branch> out;
  for (int e = 0; e < static_cast<int>(g.edges.size()); ++e) {
    for (int slot = 0; slot < 2; ++slot) {
      if (!g.edges[e].endpoint[slot]) out.push_back(Branch{e, slot});
    }
  }
  return out;
}

struct UnionFind {
  std::vector<int> parent;
  explicit UnionFind(int n) : parent(n) {
    std::iota(parent.begin(), parent.end(), 0);
  }
  int find(int x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  }
  void unite(int x, int y) { parent[find(x)] = find(y); }
};

}  // namespace

GraphType graph_type(const SemiGraph& g) {
  const int opens = static_cast<int>(open_branches_of(g).size());
  const int genus = 1 - g.num_vertices + static_cast<int>(g.edges.size()) - opens;
  return GraphType{genus, opens};
}

ClutchingData make_clutching(SemiGraph g) {
  ClutchingData c;
  const auto inc = incident_branches(g);
  c.vertex_branches.resize(g.num_vertices);
  for (int v = 0; v < g.num_vertices; ++v) {
    auto branches = inc[v];
    std::sort(branches.begin(), branches.end());
    for (int i = 0; i < 3; ++i) {
      c.vertex_branches[v][i] =
          i < static_cast<int>(branches.size()) ? branches[i] : Branch{-1, 0};
    }
  }
  c.open_branches = open_branches_of(g);
  c.graph = std::move(g);
  return c;
}

std::vector<std::string> validate(const ClutchingData& c) {
  std::vector<std::string> out;
  const SemiGraph& g = c.graph;
  if (g.num_vertices < 1) {
    out.push_back("graph has no vertices");
  }
  for (int e = 0; e < static_cast<int>(g.edges.size()); ++e) {
    int open = 0;
    for (int slot = 0; slot < 2; ++slot) {
      const auto& v = g.edges[e].endpoint[slot];
      if (!v) {
        ++open;
      } else if (*v < 0 || *v >= g.num_vertices) {
        out.push_back("edge " + std::to_string(e) + " slot " +
                      std::to_string(slot) + ": vertex " + std::to_string(*v) +
                      " out of range");
      }
    }
    if (open == 2) {
      out.push_back("edge " + std::to_string(e) + ": both branches are open");
    }
  }

  const auto inc = incident_branches(g);
  for (int v = 0; v < g.num_vertices; ++v) {
    if (inc[v].size() != 3) {
      out.push_back("vertex " + std::to_string(v) + ": has " +
                    std::to_string(inc[v].size()) +
                    " incident branches, expected 3");
      continue;
    }
    auto expected = inc[v];
    std::sort(expected.begin(), expected.end());
    auto actual = std::vector<Branch>(c.vertex_branches[v].begin(),
                                      c.vertex_branches[v].end());
    std::sort(actual.begin(), actual.end());
    if (actual != expected) {
      out.push_back("vertex " + std::to_string(v) +
                    ": branch order does not list its incident branches");
    }
  }

  auto opens = open_branches_of(g);
  auto listed = c.open_branches;
  std::sort(opens.begin(), opens.end());
  auto sorted_listed = listed;
  std::sort(sorted_listed.begin(), sorted_listed.end());
  if (opens != sorted_listed) {
    out.push_back("open branch order does not list the open branches");
  }

  if (g.num_vertices >= 1) {
    UnionFind uf(g.num_vertices);
    const auto in_range = [&](const std::optional<int>& v) {
      return v && *v >= 0 && *v < g.num_vertices;
    };
    for (const auto& e : g.edges) {
      if (in_range(e.endpoint[0]) && in_range(e.endpoint[1])) {
        uf.unite(*e.endpoint[0], *e.endpoint[1]);
      }
    }
    for (int v = 1; v < g.num_vertices; ++v) {
      if (uf.find(v) != uf.find(0)) {
        out.push_back("graph is not connected");
        break;
      }
    }
  }
  return out;
}

namespace {

SemiGraph loop_tail() {
  SemiGraph g;
  g.num_vertices = 1;
  g.edges.push_back({{0, 0}});
  g.edges.push_back({{0, std::nullopt}});
  return g;
}

// Two vertices joined by a double edge, one open branch on each.
SemiGraph theta_pair() {
  SemiGraph g;
  g.num_vertices = 2;
  g.edges.push_back({{0, std::nullopt}});
  g.edges.push_back({{0, 1}});
  g.edges.push_back({{0, 1}});
  g.edges.push_back({{1, std::nullopt}});
  return g;
}

// Chain with marked legs in left-to-right order; marked == 3 is the
// one-vertex star.
SemiGraph caterpillar(int marked) {
  SemiGraph g;
  g.num_vertices = marked - 2;
  for (int v = 0; v < g.num_vertices; ++v) {
    if (v > 0) {
      g.edges.push_back({{v - 1, v}});
    }
    int legs = 1;
    if (v == 0) ++legs;
    if (v == g.num_vertices - 1) ++legs;
    for (int i = 0; i < legs; ++i) {
      g.edges.push_back({{v, std::nullopt}});
    }
  }
  return g;
}

ClutchingData genus_tail(int genus) {  // type (g, 1)
  ClutchingData c = make_clutching(loop_tail());
  for (int k = 2; k <= genus; ++k) {
    c = glue(c, 0, make_clutching(theta_pair()), 0);
  }
  return c;
}

}  // namespace

ClutchingData standard_graph(int genus, int marked) {
  if (genus < 0 || marked < 0 || 2 * genus - 2 + marked <= 0) {
    throw DomainError("no stable graph of type (" + std::to_string(genus) +
                      ", " + std::to_string(marked) + ")");
  }
  if (genus == 0) {
    return make_clutching(caterpillar(marked));
  }
  if (marked == 0) {
    return glue(genus_tail(genus - 1), 0, make_clutching(loop_tail()), 0);
  }
  if (marked == 1) {
    return genus_tail(genus);
  }
  return glue(make_clutching(caterpillar(marked + 1)), 0, genus_tail(genus), 0);
}

namespace {

ClutchingData relabeled_copy(const ClutchingData& c) {
  const int ne = static_cast<int>(c.graph.edges.size());
  const int nv = c.graph.num_vertices;
  SemiGraph g;
  g.num_vertices = nv;
  g.edges.resize(ne);
  for (int e = 0; e < ne; ++e) {
    for (int slot = 0; slot < 2; ++slot) {
      const auto& v = c.graph.edges[e].endpoint[slot];
      g.edges[ne - 1 - e].endpoint[1 - slot] =
          v ? std::optional<int>(nv - 1 - *v) : std::nullopt;
    }
  }
  ClutchingData out = make_clutching(std::move(g));
  // Preserve the marking correspondence.
  out.open_branches.clear();
  for (const Branch& b : c.open_branches) {
    out.open_branches.push_back(Branch{ne - 1 - b.edge, 1 - b.slot});
  }
  return out;
}

}  // namespace

ClutchingData alternative_graph(int genus, int marked) {
  if (genus == 2 && marked == 0) {
    SemiGraph g;  // theta: two vertices joined by three edges
    g.num_vertices = 2;
    for (int i = 0; i < 3; ++i) g.edges.push_back({{0, 1}});
    return make_clutching(std::move(g));
  }
  if (genus == 3 && marked == 0) {
    SemiGraph g;  // complete graph on four vertices
    g.num_vertices = 4;
    for (int v = 0; v < 4; ++v) {
      for (int w = v + 1; w < 4; ++w) g.edges.push_back({{v, w}});
    }
    return make_clutching(std::move(g));
  }
  if (genus == 1 && marked == 2) {
    SemiGraph g;  // loop vertex bridged to a vertex carrying both legs
    g.num_vertices = 2;
    g.edges.push_back({{0, 0}});
    g.edges.push_back({{0, 1}});
    g.edges.push_back({{1, std::nullopt}});
    g.edges.push_back({{1, std::nullopt}});
    return make_clutching(std::move(g));
  }
  if (genus == 0 && marked == 4) {
    // Same chain, legs paired (1,3)(2,4) instead of (1,2)(3,4).
    ClutchingData c = standard_graph(0, 4);
    std::swap(c.open_branches[1], c.open_branches[2]);
    return c;
  }
  return relabeled_copy(standard_graph(genus, marked));
}

ClutchingData glue(const ClutchingData& c1, int i, const ClutchingData& c2,
                   int j) {
  const bool self = &c1 == &c2;
  if (i < 0 || i >= static_cast<int>(c1.open_branches.size()) || j < 0 ||
      j >= static_cast<int>(c2.open_branches.size())) {
    throw ParameterError("glue: open branch index out of range");
  }
  if (self && i == j) {
    throw ParameterError("glue: cannot glue an open branch to itself");
  }

  if (self) {
    const Branch bi = c1.open_branches[i];
    const Branch bj = c1.open_branches[j];
    if (bi.edge == bj.edge) {
      throw ParameterError("glue: both branches belong to the same edge");
    }
    SemiGraph g = c1.graph;
    // Close branch bi onto the vertex holding the other end of bj's edge,
    // then drop bj's edge; edge ids above it shift down by one.
    const auto other = g.edges[bj.edge].endpoint[1 - bj.slot];
    if (!other) {
      throw ParameterError("glue: the target edge has no attached vertex");
    }
    g.edges[bi.edge].endpoint[bi.slot] = *other;
    g.edges.erase(g.edges.begin() + bj.edge);
    return make_clutching(std::move(g));
  }

  const Branch b1 = c1.open_branches[i];
  const Branch b2 = c2.open_branches[j];
  const int offset_v = c1.graph.num_vertices;
  SemiGraph g = c1.graph;
  g.num_vertices += c2.graph.num_vertices;
  for (int e = 0; e < static_cast<int>(c2.graph.edges.size()); ++e) {
    if (e == b2.edge) continue;
    SemiGraph::Edge edge = c2.graph.edges[e];
    for (int slot = 0; slot < 2; ++slot) {
      if (edge.endpoint[slot]) *edge.endpoint[slot] += offset_v;
    }
    g.edges.push_back(edge);
  }
  // Join: the kept open edge of c1 now ends at the vertex of c2's open edge.
  const auto other = c2.graph.edges[b2.edge].endpoint[1 - b2.slot];
  if (!other) {
    throw ParameterError("glue: the target edge has no attached vertex");
  }
  g.edges[b1.edge].endpoint[b1.slot] = *other + offset_v;
  return make_clutching(std::move(g));
}

using nlohmann::json;

std::string to_json(const ClutchingData& c) {
  json j;
  j["vertices"] = json::array();
  for (int v = 0; v < c.graph.num_vertices; ++v) j["vertices"].push_back(v);
  j["edges"] = json::array();
  for (int e = 0; e < static_cast<int>(c.graph.edges.size()); ++e) {
    json branches = json::array();
    for (int slot = 0; slot < 2; ++slot) {
      const auto& v = c.graph.edges[e].endpoint[slot];
      branches.push_back(v ? json{{"vertex", *v}} : json{{"open", true}});
    }
    j["edges"].push_back({{"id", e}, {"branches", branches}});
  }
  j["open_order"] = json::array();
  for (const Branch& b : c.open_branches) {
    j["open_order"].push_back({{"edge", b.edge}, {"slot", b.slot}});
  }
  return j.dump(2);
}

ClutchingData clutching_from_json(const std::string& text) {
  json j;
  try {
    j = json::parse(text);
  } catch (const json::parse_error& err) {
    throw ParameterError(std::string("graph JSON: ") + err.what());
  }
  if (!j.is_object()) throw ParameterError("graph JSON: root must be an object");
  if (!j.contains("vertices") || !j["vertices"].is_array()) {
    throw ParameterError("graph JSON: vertices: missing or not an array");
  }
  if (!j.contains("edges") || !j["edges"].is_array()) {
    throw ParameterError("graph JSON: edges: missing or not an array");
  }

  SemiGraph g;
  g.num_vertices = static_cast<int>(j["vertices"].size());
  for (int v = 0; v < g.num_vertices; ++v) {
    const auto& entry = j["vertices"][v];
    if (!entry.is_number_integer() || entry.get<int>() != v) {
      throw ParameterError("graph JSON: vertices[" + std::to_string(v) +
                           "]: expected the consecutive id " +
                           std::to_string(v));
    }
  }

  for (int e = 0; e < static_cast<int>(j["edges"].size()); ++e) {
    const auto& entry = j["edges"][e];
    const std::string where = "graph JSON: edges[" + std::to_string(e) + "]";
    if (!entry.is_object()) throw ParameterError(where + ": expected an object");
    if (!entry.contains("id") || !entry["id"].is_number_integer() ||
        entry["id"].get<int>() != e) {
      throw ParameterError(where + ".id: expected the consecutive id " +
                           std::to_string(e));
    }
    if (!entry.contains("branches") || !entry["branches"].is_array() ||
        entry["branches"].size() != 2) {
      throw ParameterError(where + ".branches: expected exactly 2 entries");
    }
    SemiGraph::Edge edge;
    for (int slot = 0; slot < 2; ++slot) {
      const auto& b = entry["branches"][slot];
      const std::string bw = where + ".branches[" + std::to_string(slot) + "]";
      if (!b.is_object()) throw ParameterError(bw + ": expected an object");
      const bool has_vertex = b.contains("vertex");
      const bool has_open = b.contains("open");
      if (has_vertex == has_open) {
        throw ParameterError(bw + ": expected exactly one of vertex or open");
      }
      if (has_open) {
        if (!b["open"].is_boolean() || !b["open"].get<bool>()) {
          throw ParameterError(bw + ".open: expected true");
        }
        edge.endpoint[slot] = std::nullopt;
      } else {
        if (!b["vertex"].is_number_integer()) {
          throw ParameterError(bw + ".vertex: expected an integer");
        }
        const int v = b["vertex"].get<int>();
        if (v < 0 || v >= g.num_vertices) {
          throw ParameterError(bw + ".vertex: index " + std::to_string(v) +
                               " out of range");
        }
        edge.endpoint[slot] = v;
      }
    }
    g.edges.push_back(edge);
  }

  ClutchingData c = make_clutching(std::move(g));
  if (j.contains("open_order")) {
    if (!j["open_order"].is_array()) {
      throw ParameterError("graph JSON: open_order: expected an array");
    }
    std::vector<Branch> order;
    for (int k = 0; k < static_cast<int>(j["open_order"].size()); ++k) {
      const auto& b = j["open_order"][k];
      const std::string where = "graph JSON: open_order[" + std::to_string(k) + "]";
      if (!b.is_object() || !b.contains("edge") || !b.contains("slot") ||
          !b["edge"].is_number_integer() || !b["slot"].is_number_integer()) {
        throw ParameterError(where + ": expected {edge, slot}");
      }
      const Branch br{b["edge"].get<int>(), b["slot"].get<int>()};
      if (br.edge < 0 || br.edge >= static_cast<int>(c.graph.edges.size()) ||
          br.slot < 0 || br.slot > 1) {
        throw ParameterError(where + ": branch out of range");
      }
      if (c.graph.edges[br.edge].endpoint[br.slot]) {
        throw ParameterError(where + ": branch is not open");
      }
      order.push_back(br);
    }
    auto sorted = order;
    std::sort(sorted.begin(), sorted.end());
    auto canonical = c.open_branches;
    std::sort(canonical.begin(), canonical.end());
    if (sorted != canonical) {
      throw ParameterError(
          "graph JSON: open_order: must list every open branch exactly once");
    }
    c.open_branches = order;
  }
  return c;
}

}  // namespace dormant
