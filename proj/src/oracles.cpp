#include "referee/oracles.hpp"

#include <algorithm>
#include <vector>

namespace referee {

bool has_square(const LabelledGraph& g) {
  // A C4 exists iff two distinct vertices share two common neighbours. For
  // each u, count 2-paths u-v-w with w > u; a second path to the same w closes
  // a square.
  const std::size_t n = g.n();
  std::vector<std::uint32_t> paths(n + 1, 0);
  std::vector<VertexId> touched;
  for (VertexId u = 1; u <= n; ++u) {
    bool found = false;
    for (VertexId v : g.neighbors(u)) {
      for (VertexId w : g.neighbors(v)) {
        if (w <= u) continue;
        if (paths[w]++ == 0) touched.push_back(w);
        else found = true;
      }
      if (found) break;
    }
    for (VertexId w : touched) paths[w] = 0;
    touched.clear();
    if (found) return true;
  }
  return false;
}

bool has_triangle(const LabelledGraph& g) {
  for (VertexId u = 1; u <= g.n(); ++u) {
    auto nu = g.neighbors(u);
    for (VertexId v : nu) {
      if (v <= u) continue;
      auto nv = g.neighbors(v);
      // Sorted intersection restricted to w > v counts each triangle once.
      auto a = std::upper_bound(nu.begin(), nu.end(), v);
      auto b = std::upper_bound(nv.begin(), nv.end(), v);
      while (a != nu.end() && b != nv.end()) {
        if (*a == *b) return true;
        if (*a < *b) ++a;
        else ++b;
      }
    }
  }
  return false;
}

namespace {

Distance eccentricity(const LabelledGraph& g, VertexId source, std::vector<Distance>& dist,
                      std::vector<VertexId>& queue) {
  std::fill(dist.begin(), dist.end(), kInfiniteDistance);
  queue.clear();
  dist[source] = 0;
  queue.push_back(source);
  for (std::size_t head = 0; head < queue.size(); ++head) {
    const VertexId v = queue[head];
    for (VertexId w : g.neighbors(v)) {
      if (dist[w] == kInfiniteDistance) {
        dist[w] = dist[v] + 1;
        queue.push_back(w);
      }
    }
  }
  if (queue.size() < g.n()) return kInfiniteDistance;
  return dist[queue.back()];
}

}  // namespace

Distance diameter(const LabelledGraph& g, Execution exec) {
  const std::size_t n = g.n();
  Distance result = 0;
  if (exec == Execution::serial) {
    std::vector<Distance> dist(n + 1);
    std::vector<VertexId> queue;
    for (VertexId s = 1; s <= n; ++s) {
      result = std::max(result, eccentricity(g, s, dist, queue));
      if (result == kInfiniteDistance) break;
    }
    return result;
  }
#pragma omp parallel reduction(max : result)
  {
    std::vector<Distance> dist(n + 1);
    std::vector<VertexId> queue;
#pragma omp for schedule(dynamic, 8)
    for (std::int64_t s = 1; s <= static_cast<std::int64_t>(n); ++s) {
      result = std::max(result, eccentricity(g, static_cast<VertexId>(s), dist, queue));
    }
  }
  return result;
}

bool is_bipartite_with_split(const LabelledGraph& g, std::size_t split) {
  for (auto [u, v] : g.edges()) {
    if ((u <= split) == (v <= split)) return false;
  }
  return true;
}

}  // namespace referee
