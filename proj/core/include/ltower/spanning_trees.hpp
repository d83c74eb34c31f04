#pragma once

#include "ltower/bigint.hpp"
#include "ltower/int_matrix.hpp"
#include "ltower/multigraph.hpp"

namespace ltower {

// D - A with loops cancelling out and parallel edges adding multiplicity.
IntMatrix laplacian(const Multigraph& graph);

// Matrix-Tree count: determinant of the Laplacian with the last row and
// column removed. Throws DisconnectedGraphError on disconnected input.
BigInt spanning_tree_count(const Multigraph& graph, const DeterminantOptions& options = {});

}  // namespace ltower
