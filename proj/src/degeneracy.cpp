#include "referee/degeneracy.hpp"

#include <algorithm>
#include <functional>
#include <queue>

namespace referee {

std::optional<EliminationOrder> degeneracy_order(const LabelledGraph& g, std::size_t k) {
  const std::size_t n = g.n();
  std::vector<std::size_t> degree(n + 1);
  std::vector<char> removed(n + 1, 0);
  // A vertex enters the queue exactly once: when its degree first drops to <= k.
  std::priority_queue<VertexId, std::vector<VertexId>, std::greater<>> ready;
  for (VertexId v = 1; v <= n; ++v) {
    degree[v] = g.degree(v);
    if (degree[v] <= k) ready.push(v);
  }

  std::vector<VertexId> peeled;
  peeled.reserve(n);
  while (!ready.empty()) {
    const VertexId v = ready.top();
    ready.pop();
    removed[v] = 1;
    peeled.push_back(v);
    for (VertexId w : g.neighbors(v)) {
      if (removed[w]) continue;
      if (degree[w]-- == k + 1) ready.push(w);
    }
  }
  if (peeled.size() < n) return std::nullopt;
  std::reverse(peeled.begin(), peeled.end());
  return EliminationOrder{std::move(peeled), k};
}

std::size_t degeneracy(const LabelledGraph& g) {
  // Bucket-based min-degree peeling; the answer is the largest degree seen at
  // removal time.
  const std::size_t n = g.n();
  std::size_t max_degree = 0;
  std::vector<std::size_t> degree(n + 1);
  for (VertexId v = 1; v <= n; ++v) {
    degree[v] = g.degree(v);
    max_degree = std::max(max_degree, degree[v]);
  }
  std::vector<std::vector<VertexId>> buckets(max_degree + 1);
  for (VertexId v = 1; v <= n; ++v) buckets[degree[v]].push_back(v);

  std::vector<char> removed(n + 1, 0);
  std::size_t result = 0;
  std::size_t current = 0;
  for (std::size_t done = 0; done < n;) {
    while (buckets[current].empty()) ++current;
    const VertexId v = buckets[current].back();
    buckets[current].pop_back();
    if (removed[v] || degree[v] != current) continue;  // stale entry
    removed[v] = 1;
    ++done;
    result = std::max(result, current);
    for (VertexId w : g.neighbors(v)) {
      if (removed[w]) continue;
      buckets[--degree[w]].push_back(w);
    }
    if (current > 0) --current;
  }
  return result;
}

namespace {

bool is_permutation_of_vertices(const LabelledGraph& g, const std::vector<VertexId>& order) {
  if (order.size() != g.n()) return false;
  std::vector<char> seen(g.n() + 1, 0);
  for (VertexId v : order) {
    if (v < 1 || v > g.n() || seen[v]) return false;
    seen[v] = 1;
  }
  return true;
}

}  // namespace

bool is_valid_elimination_order(const LabelledGraph& g, const EliminationOrder& order) {
  if (!is_permutation_of_vertices(g, order.order)) return false;
  std::vector<char> earlier(g.n() + 1, 0);
  for (VertexId v : order.order) {
    std::size_t back = 0;
    for (VertexId w : g.neighbors(v)) back += earlier[w] ? 1 : 0;
    if (back > order.k) return false;
    earlier[v] = 1;
  }
  return true;
}

std::optional<EliminationOrder> generalized_degeneracy_order(const LabelledGraph& g,
                                                             std::size_t k) {
  // Removing any vertex only lowers the degree and co-degree of the others, so
  // a vertex that is removable stays removable and greedy peeling is complete.
  const std::size_t n = g.n();
  std::vector<std::size_t> degree(n + 1);
  for (VertexId v = 1; v <= n; ++v) degree[v] = g.degree(v);
  std::vector<char> live(n + 1, 1);
  std::vector<VertexId> peeled;
  peeled.reserve(n);
  for (std::size_t remaining = n; remaining > 0; --remaining) {
    VertexId pick = 0;
    for (VertexId v = 1; v <= n && pick == 0; ++v) {
      if (live[v] && (degree[v] <= k || remaining - 1 - degree[v] <= k)) pick = v;
    }
    if (pick == 0) return std::nullopt;
    live[pick] = 0;
    peeled.push_back(pick);
    for (VertexId w : g.neighbors(pick)) {
      if (live[w]) --degree[w];
    }
  }
  std::reverse(peeled.begin(), peeled.end());
  return EliminationOrder{std::move(peeled), k};
}

bool is_valid_generalized_elimination_order(const LabelledGraph& g,
                                            const EliminationOrder& order) {
  if (!is_permutation_of_vertices(g, order.order)) return false;
  std::vector<char> earlier(g.n() + 1, 0);
  std::size_t position = 0;
  for (VertexId v : order.order) {
    std::size_t back = 0;
    for (VertexId w : g.neighbors(v)) back += earlier[w] ? 1 : 0;
    const std::size_t co_back = position - back;
    if (back > order.k && co_back > order.k) return false;
    earlier[v] = 1;
    ++position;
  }
  return true;
}

}  // namespace referee
