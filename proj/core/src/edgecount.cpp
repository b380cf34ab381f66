#include "dormant/edgecount.hpp"

#include <algorithm>
#include <string>
#include <unordered_map>

namespace dormant {

namespace {

// Memoized membership test for balanced triples; the conditions are
// symmetric, so the key is sorted.
class BalancedOracle {
 public:
  explicit BalancedOracle(const PrimeLevel& pp) : pp_(pp) {}

  bool operator()(long long x, long long y, long long z) const {
    long long a = x, b = y, c = z;
    if (a > b) std::swap(a, b);
    if (b > c) std::swap(b, c);
    if (a > b) std::swap(a, b);
    const long long key = (a * pp_.q + b) * pp_.q + c;
    const auto it = memo_.find(key);
    if (it != memo_.end()) return it->second;
    const bool v = in_dagger_C(ExponentTriple{a, b, c}, pp_);
    memo_.emplace(key, v);
    return v;
  }

 private:
  PrimeLevel pp_;
  mutable std::unordered_map<long long, bool> memo_;
};

struct Problem {
  const ClutchingData& c;
  PrimeLevel pp;
  std::vector<long long> alphabet;
  // Allowed values per edge (restricted for open edges under a radius filter).
  std::vector<std::vector<long long>> domain;
  // Marking position of the open branch carried by each edge, or -1.
  std::vector<int> open_pos;
};

Problem make_problem(const ClutchingData& c, const PrimeLevel& pp,
                     const std::optional<std::vector<RadiusClass>>& radii) {
  const auto violations = validate(c);
  if (!violations.empty()) {
    throw ParameterError("invalid graph: " + violations.front());
  }
  Problem pr{c, pp, svalue_alphabet(pp), {}, {}};
  const int ne = static_cast<int>(c.graph.edges.size());
  pr.open_pos.assign(ne, -1);
  for (int k = 0; k < static_cast<int>(c.open_branches.size()); ++k) {
    pr.open_pos[c.open_branches[k].edge] = k;
  }
  if (radii && radii->size() != c.open_branches.size()) {
    throw ParameterError("expected " + std::to_string(c.open_branches.size()) +
                         " radii, got " + std::to_string(radii->size()));
  }
  pr.domain.resize(ne);
  for (int e = 0; e < ne; ++e) {
    if (pr.open_pos[e] >= 0 && radii) {
      const RadiusClass want = (*radii)[pr.open_pos[e]];
      if (want.lambda < 1 || want.lambda > (pp.q - 1) / 2 ||
          want.lambda % pp.p == 0) {
        throw ParameterError("radius " + std::to_string(want.lambda) +
                             " is not a class representative");
      }
      for (long long s : pr.alphabet) {
        if (radius_of_svalue(s, pp) == want) pr.domain[e].push_back(s);
      }
    } else {
      pr.domain[e] = pr.alphabet;
    }
  }
  return pr;
}

}  // namespace

std::vector<EdgeNumbering> enumerate_numberings(
    const ClutchingData& c, const PrimeLevel& pp,
    const std::optional<std::vector<RadiusClass>>& radii,
    long long max_results) {
  const Problem pr = make_problem(c, pp, radii);
  const BalancedOracle balanced(pp);
  const int ne = static_cast<int>(c.graph.edges.size());

  // Vertices whose last incident edge (by id) is e: check them as soon as
  // edge e gets its value.
  std::vector<std::vector<int>> check_after(ne);
  for (int v = 0; v < c.graph.num_vertices; ++v) {
    int last = -1;
    for (const Branch& b : c.vertex_branches[v]) last = std::max(last, b.edge);
    check_after[last].push_back(v);
  }

  std::vector<long long> values(ne, -1);
  std::vector<EdgeNumbering> out;

  auto vertex_ok = [&](int v) {
    const auto& br = c.vertex_branches[v];
    return balanced(values[br[0].edge], values[br[1].edge], values[br[2].edge]);
  };

  auto rec = [&](auto&& self, int e) -> void {
    if (e == ne) {
      if (static_cast<long long>(out.size()) >= max_results) {
        throw ResourceLimit("enumerate_numberings: result budget exceeded");
      }
      out.push_back(EdgeNumbering{values});
      return;
    }
    for (long long s : pr.domain[e]) {
      values[e] = s;
      bool ok = true;
      for (int v : check_after[e]) {
        if (!vertex_ok(v)) {
          ok = false;
          break;
        }
      }
      if (ok) self(self, e + 1);
    }
    values[e] = -1;
  };
  rec(rec, 0);
  return out;
}

CountResult count_numberings(const ClutchingData& c, const PrimeLevel& pp,
                             const std::optional<std::vector<RadiusClass>>& radii,
                             bool per_radius) {
  const Problem pr = make_problem(c, pp, radii);
  const BalancedOracle balanced(pp);
  const int ne = static_cast<int>(c.graph.edges.size());
  const int nv = c.graph.num_vertices;
  const int nopen = static_cast<int>(c.open_branches.size());

  // Greedy processing order: pick the vertex that keeps the frontier of
  // half-processed closed edges smallest.
  std::vector<int> order;
  {
    std::vector<bool> done(nv, false);
    std::vector<int> seen(ne, 0);  // processed endpoints per closed edge
    for (int step = 0; step < nv; ++step) {
      int best = -1, best_width = 1 << 30;
      for (int v = 0; v < nv; ++v) {
        if (done[v]) continue;
        auto seen_copy = seen;
        for (const Branch& b : c.vertex_branches[v]) ++seen_copy[b.edge];
        int width = 0;
        for (int e = 0; e < ne; ++e) {
          const auto& ep = c.graph.edges[e].endpoint;
          const bool closed = ep[0] && ep[1];
          if (closed && seen_copy[e] == 1) ++width;
        }
        if (width < best_width) {
          best_width = width;
          best = v;
        }
      }
      done[best] = true;
      for (const Branch& b : c.vertex_branches[best]) ++seen[b.edge];
      order.push_back(best);
    }
  }

  const auto radius_list = enumerate_radii(pp);
  std::unordered_map<long long, int> lambda_index;
  for (int i = 0; i < static_cast<int>(radius_list.size()); ++i) {
    lambda_index.emplace(radius_list[i].lambda, i);
  }

  // State key layout: one slot per frontier edge (ascending edge id), then,
  // when tabulating radii, one slot per open position (-1 until seen).
  using Key = std::vector<int>;
  std::map<Key, Bigint> state;

  std::vector<bool> processed(nv, false);
  std::vector<int> frontier;  // ascending edge ids with one endpoint done

  {
    Key init;
    if (per_radius) init.assign(nopen, -1);
    state.emplace(init, Bigint(1));
  }

  constexpr size_t kMaxStates = 5'000'000;

  for (int v : order) {
    // Classify the (unique) edges at v.
    std::vector<int> edges_at_v;
    for (const Branch& b : c.vertex_branches[v]) {
      if (std::find(edges_at_v.begin(), edges_at_v.end(), b.edge) ==
          edges_at_v.end()) {
        edges_at_v.push_back(b.edge);
      }
    }
    std::vector<int> fixed;  // position in the current frontier vector
    std::vector<int> free_edges;
    for (int e : edges_at_v) {
      const auto it = std::find(frontier.begin(), frontier.end(), e);
      if (it != frontier.end()) {
        fixed.push_back(static_cast<int>(it - frontier.begin()));
      } else {
        free_edges.push_back(e);
      }
    }

    // The frontier after v: drop edges consumed here, add the new closed
    // edges whose other endpoint is still pending.
    processed[v] = true;
    std::vector<int> next_frontier;
    for (int e : frontier) {
      bool at_v = std::find(edges_at_v.begin(), edges_at_v.end(), e) !=
                  edges_at_v.end();
      if (!at_v) next_frontier.push_back(e);
    }
    for (int e : free_edges) {
      const auto& ep = c.graph.edges[e].endpoint;
      if (!ep[0] || !ep[1]) continue;  // open edges never join the frontier
      const int other = (*ep[0] == v && !(*ep[1] == v)) ? *ep[1]
                        : (*ep[1] == v && !(*ep[0] == v)) ? *ep[0]
                                                          : -1;
      if (other >= 0 && !processed[other]) next_frontier.push_back(e);
    }
    std::sort(next_frontier.begin(), next_frontier.end());

    std::map<Key, Bigint> next_state;
    std::vector<long long> value_of(ne, -1);

    bool feasible = true;
    for (int e : free_edges) {
      if (pr.domain[e].empty()) feasible = false;
    }
    if (!feasible) {
      state.clear();
      frontier = std::move(next_frontier);
      continue;
    }

    for (const auto& [key, weight] : state) {
      // Values of the already-introduced edges at v.
      for (size_t fi = 0; fi < fixed.size(); ++fi) {
        // fixed[fi] indexes the frontier vector; recover the edge and value.
        value_of[frontier[fixed[fi]]] = key[fixed[fi]];
      }
      // Enumerate the free edges.
      const size_t nfree = free_edges.size();
      std::vector<size_t> idx(nfree, 0);
      while (true) {
        for (size_t fi = 0; fi < nfree; ++fi) {
          value_of[free_edges[fi]] = pr.domain[free_edges[fi]][idx[fi]];
        }
        const auto& br = c.vertex_branches[v];
        if (balanced(value_of[br[0].edge], value_of[br[1].edge],
                     value_of[br[2].edge])) {
          Key next_key;
          next_key.reserve(next_frontier.size() + (per_radius ? nopen : 0));
          for (int e : next_frontier) {
            // Either an old frontier edge or one introduced at v.
            long long val = value_of[e];
            if (val < 0) {
              const auto it = std::find(frontier.begin(), frontier.end(), e);
              val = key[it - frontier.begin()];
            }
            next_key.push_back(static_cast<int>(val));
          }
          if (per_radius) {
            Key opens(key.end() - nopen, key.end());
            for (int e : free_edges) {
              if (pr.open_pos[e] >= 0) {
                opens[pr.open_pos[e]] =
                    lambda_index.at(radius_of_svalue(value_of[e], pp).lambda);
              }
            }
            next_key.insert(next_key.end(), opens.begin(), opens.end());
          }
          next_state[next_key] += weight;
          if (next_state.size() > kMaxStates) {
            throw ResourceLimit("count_numberings: state budget exceeded");
          }
        }
        // Odometer.
        size_t fi = 0;
        for (; fi < nfree; ++fi) {
          if (++idx[fi] < pr.domain[free_edges[fi]].size()) break;
          idx[fi] = 0;
        }
        if (fi == nfree) break;
      }
      for (int e : edges_at_v) value_of[e] = -1;
    }
    state = std::move(next_state);
    frontier = std::move(next_frontier);
  }

  CountResult result;
  for (const auto& [key, weight] : state) {
    result.total += weight;
    if (per_radius) {
      std::vector<long long> lambdas(nopen);
      for (int k = 0; k < nopen; ++k) {
        lambdas[k] = radius_list[key[key.size() - nopen + k]].lambda;
      }
      result.per_radius[lambdas] += weight;
    }
  }
  return result;
}

bool independence_check(int genus, int marked, const PrimeLevel& pp) {
  const CountResult a =
      count_numberings(standard_graph(genus, marked), pp, std::nullopt, true);
  const CountResult b = count_numberings(alternative_graph(genus, marked), pp,
                                         std::nullopt, true);
  return a.total == b.total && a.per_radius == b.per_radius;
}

Bigint diff_op_count(int genus, const PrimeLevel& pp) {
  if (genus < 2) {
    throw DomainError("diff_op_count: genus must be at least 2");
  }
  const Bigint scale = ipow(Bigint(pp.p), static_cast<unsigned>(genus * pp.N));
  return scale * count_numberings(standard_graph(genus, 0), pp).total;
}

}  // namespace dormant
