// Serial reference vs OpenMP path for each parallel kernel. Prints one line
// per kernel with the median of several repetitions and checks that both
// paths return the same result.

#include <algorithm>
#include <chrono>
#include <cstdio>
#include <cstdlib>
#include <functional>
#include <random>
#include <string>
#include <vector>

#if defined(_OPENMP)
#include <omp.h>
#endif

#include "referee/degeneracy_protocol.hpp"
#include "referee/generators.hpp"
#include "referee/oracles.hpp"
#include "referee/reductions.hpp"

using namespace referee;

namespace {

double median_ms(int reps, const std::function<void()>& body) {
  std::vector<double> times;
  for (int i = 0; i < reps; ++i) {
    const auto start = std::chrono::steady_clock::now();
    body();
    times.push_back(std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start).count());
  }
  std::sort(times.begin(), times.end());
  return times[times.size() / 2];
}

template <typename Kernel>
bool compare(const std::string& name, int reps, Kernel kernel) {
  decltype(kernel(Execution::serial)) serial_result{}, parallel_result{};
  const double serial = median_ms(reps, [&] { serial_result = kernel(Execution::serial); });
  const double parallel = median_ms(reps, [&] { parallel_result = kernel(Execution::parallel); });
  const bool same = serial_result == parallel_result;
  std::printf("%-34s serial %9.2f ms  parallel %9.2f ms  speedup %5.2fx  %s\n", name.c_str(), serial, parallel,
              serial / parallel, same ? "same" : "MISMATCH");
  return same;
}

LabelledGraph connected_random(std::size_t n, double mean_degree, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  std::bernoulli_distribution coin(mean_degree / static_cast<double>(n));
  std::vector<Edge> edges;
  // A path backbone keeps the graph connected, so BFS visits everything.
  for (VertexId u = 1; u <= n; ++u)
    for (VertexId v = u + 1; v <= n; ++v)
      if (v == u + 1 || coin(rng)) edges.emplace_back(u, v);
  return LabelledGraph(n, edges);
}

}  // namespace

int main(int argc, char** argv) {
  const int reps = argc > 1 ? std::max(1, std::atoi(argv[1])) : 3;
#if defined(_OPENMP)
  std::printf("threads %d\n", omp_get_max_threads());
#else
  std::printf("threads 1 (built without OpenMP)\n");
#endif
  bool ok = true;

  const auto big = gen_k_degenerate(200000, 4, 1);
  ok &= compare("message_vector degen:k=4 n=2e5", reps, [&](Execution exec) {
    return message_vector(DegeneracyProtocol({.k = 4}), big, exec);
  });

  const auto medium = gen_k_degenerate(20000, 3, 2);
  ok &= compare("message_vector generalized n=2e4", reps, [&](Execution exec) {
    return message_vector(DegeneracyProtocol({.k = 3, .generalized = true}), medium, exec);
  });

  const auto bfs_graph = connected_random(3000, 6.0, 3);
  ok &= compare("diameter n=3000", reps, [&](Execution exec) { return diameter(bfs_graph, exec); });

  ok &= compare("count_square_free n=7", 1, [](Execution exec) { return count_square_free(7, exec); });

  const auto base = connected_random(60, 4.0, 4);
  const auto decider = oracle_decider(Property::diameter_at_most_3, NeighborhoodEncoding::incidence_vector);
  ok &= compare("delta_diameter pair loop n=60", reps, [&](Execution exec) {
    return run(*delta_diameter(decider, exec), base, exec).output;
  });

  return ok ? 0 : 1;
}
