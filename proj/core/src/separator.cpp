#include "vfts/separator.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <queue>

namespace vfts {

namespace {

std::vector<std::vector<int>> adjacency(const WeightedGraph& g) {
  std::vector<std::vector<int>> adj(g.size());
  for (auto [u, v] : g.edges) {
    adj[u].push_back(v);
    adj[v].push_back(u);
  }
  return adj;
}

// Connected components after removing `removed`.
std::vector<std::vector<int>> components(const WeightedGraph& g,
                                         const std::vector<bool>& removed) {
  auto adj = adjacency(g);
  std::vector<int> comp(g.size(), -1);
  std::vector<std::vector<int>> out;
  for (int s = 0; s < g.size(); ++s) {
    if (removed[s] || comp[s] >= 0) continue;
    out.emplace_back();
    std::queue<int> q;
    q.push(s);
    comp[s] = static_cast<int>(out.size()) - 1;
    while (!q.empty()) {
      int u = q.front();
      q.pop();
      out.back().push_back(u);
      for (int v : adj[u]) {
        if (!removed[v] && comp[v] < 0) {
          comp[v] = comp[s];
          q.push(v);
        }
      }
    }
  }
  return out;
}

// Greedy largest-first 2-partition of the components; succeeds when both
// sides end up within 2/3 of the full graph weight.
bool pack_components(const WeightedGraph& g, const std::vector<std::vector<int>>& comps,
                     double total, Separator& out) {
  std::vector<double> cw(comps.size(), 0.0);
  for (std::size_t i = 0; i < comps.size(); ++i)
    for (int v : comps[i]) cw[i] += g.node_weights[v];
  std::vector<int> order(comps.size());
  std::iota(order.begin(), order.end(), 0);
  std::sort(order.begin(), order.end(), [&](int a, int b) {
    if (cw[a] != cw[b]) return cw[a] > cw[b];
    return a < b;
  });
  double wa = 0.0, wb = 0.0;
  std::vector<int> pa, pb;
  for (int i : order) {
    if (wa <= wb) {
      wa += cw[i];
      pa.insert(pa.end(), comps[i].begin(), comps[i].end());
    } else {
      wb += cw[i];
      pb.insert(pb.end(), comps[i].begin(), comps[i].end());
    }
  }
  const double limit = 2.0 / 3.0 * total + 1e-12;
  if (wa > limit || wb > limit) return false;
  std::sort(pa.begin(), pa.end());
  std::sort(pb.begin(), pb.end());
  out.part_a = std::move(pa);
  out.part_b = std::move(pb);
  return true;
}

bool try_separator(const WeightedGraph& g, const std::vector<int>& sep, double total,
                   Separator& out) {
  std::vector<bool> removed(g.size(), false);
  for (int v : sep) removed[v] = true;
  auto comps = components(g, removed);
  Separator cand;
  if (!pack_components(g, comps, total, cand)) return false;
  cand.separator = sep;
  std::sort(cand.separator.begin(), cand.separator.end());
  out = std::move(cand);
  return true;
}

}  // namespace

Separator planar_separator(const WeightedGraph& g) {
  const int m = g.size();
  if (m < 2) throw InvalidInput("separator needs at least 2 nodes");
  const double total = std::accumulate(g.node_weights.begin(), g.node_weights.end(), 0.0);
  const int budget = static_cast<int>(std::floor(4.0 * std::sqrt(double(m)) + 1e-9));

  Separator out;
  if (m <= 12) {
    // exhaustive: smallest separator first, lexicographic node order
    for (int size = 0; size <= std::min(m, budget); ++size) {
      std::vector<int> pick(size);
      std::function<bool(int, int)> rec = [&](int start, int depth) {
        if (depth == size) {
          std::vector<int> sep(pick.begin(), pick.begin() + size);
          return try_separator(g, sep, total, out);
        }
        for (int v = start; v < m; ++v) {
          pick[depth] = v;
          if (rec(v + 1, depth + 1)) return true;
        }
        return false;
      };
      if (rec(0, 0)) return out;
    }
    throw InvalidInput("no separator within budget");
  }

  // BFS levels from node 0, optionally joined by heavy nodes
  auto adj = adjacency(g);
  std::vector<int> level(m, -1);
  std::queue<int> q;
  q.push(0);
  level[0] = 0;
  int max_level = 0;
  while (!q.empty()) {
    int u = q.front();
    q.pop();
    for (int v : adj[u]) {
      if (level[v] < 0) {
        level[v] = level[u] + 1;
        max_level = std::max(max_level, level[v]);
        q.push(v);
      }
    }
  }
  std::vector<int> heavy;
  for (int v = 0; v < m; ++v)
    if (g.node_weights[v] > total / 3.0) heavy.push_back(v);

  for (bool with_heavy : {false, true}) {
    for (int l = 0; l <= max_level; ++l) {
      std::vector<int> sep;
      for (int v = 0; v < m; ++v)
        if (level[v] == l) sep.push_back(v);
      if (with_heavy) {
        for (int h : heavy)
          if (std::find(sep.begin(), sep.end(), h) == sep.end()) sep.push_back(h);
      }
      if (static_cast<int>(sep.size()) > budget) continue;
      if (try_separator(g, sep, total, out)) return out;
    }
  }

  // greedy growth: repeatedly pull the heaviest node of the heaviest component
  std::vector<int> sep = heavy;
  while (static_cast<int>(sep.size()) <= budget) {
    if (try_separator(g, sep, total, out)) return out;
    std::vector<bool> removed(m, false);
    for (int v : sep) removed[v] = true;
    auto comps = components(g, removed);
    int best_comp = -1;
    double best_w = -1.0;
    for (std::size_t i = 0; i < comps.size(); ++i) {
      double w = 0.0;
      for (int v : comps[i]) w += g.node_weights[v];
      if (w > best_w) {
        best_w = w;
        best_comp = static_cast<int>(i);
      }
    }
    if (best_comp < 0) break;
    int pick = comps[best_comp][0];
    for (int v : comps[best_comp])
      if (g.node_weights[v] > g.node_weights[pick]) pick = v;
    sep.push_back(pick);
  }
  throw InvalidInput("no separator within 4*sqrt(m) budget");
}

}  // namespace vfts
