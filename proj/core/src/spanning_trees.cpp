#include "ltower/spanning_trees.hpp"

#include <cmath>

#include "ltower/errors.hpp"

namespace ltower {

IntMatrix laplacian(const Multigraph& graph) {
  const std::size_t n = graph.vertex_count();
  IntMatrix l(n, n);
  for (const Edge& e : graph.edges()) {
    if (e.tail == e.head) continue;
    l(e.tail, e.tail) += 1;
    l(e.head, e.head) += 1;
    l(e.tail, e.head) -= 1;
    l(e.head, e.tail) -= 1;
  }
  return l;
}

BigInt spanning_tree_count(const Multigraph& graph, const DeterminantOptions& options) {
  if (!is_connected(graph)) {
    throw DisconnectedGraphError("spanning trees of a disconnected graph");
  }
  const std::size_t n = graph.vertex_count();
  if (n == 1) return 1;
  const IntMatrix reduced = laplacian(graph).minor(n - 1);

  DeterminantOptions opts = options;
  if (!opts.bound_bits) {
    // The reduced Laplacian is positive definite, so det <= product of the diagonal.
    double bits = 0;
    for (std::size_t i = 0; i < reduced.rows(); ++i) {
      bits += std::log2(reduced(i, i).get_d());
    }
    opts.bound_bits = static_cast<std::size_t>(std::ceil(bits)) + 1;
  }
  return determinant(reduced, opts);
}

}  // namespace ltower
