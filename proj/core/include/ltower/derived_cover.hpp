#pragma once

#include <cstddef>
#include <cstdint>
#include <vector>

#include "ltower/multigraph.hpp"

namespace ltower {

// The level-n cover X(Z/ell^n, S, alpha_n). Vertex (v, a) has index
// a * g + v, where g is the base vertex count; edge (s, a) has index
// a * |S| + s and runs from (tail(s), a) to (head(s), a + alpha_n(s)).
class DerivedCover {
 public:
  DerivedCover(unsigned level, std::uint64_t sheets, Multigraph base, Multigraph cover);

  unsigned level() const noexcept { return level_; }
  std::uint64_t sheets() const noexcept { return sheets_; }
  const Multigraph& base() const noexcept { return base_; }
  const Multigraph& graph() const noexcept { return cover_; }

  std::size_t vertex_index(std::size_t base_vertex, std::uint64_t sheet) const;
  std::size_t base_vertex_of(std::size_t cover_vertex) const;
  std::uint64_t sheet_of(std::size_t cover_vertex) const;
  std::size_t section_edge_of(std::size_t cover_edge) const;

  // Collapses the sheet coordinate: the base vertex and section edge behind
  // each cover edge, as a multigraph over the base vertices.
  Multigraph project() const;

 private:
  unsigned level_;
  std::uint64_t sheets_;
  Multigraph base_;
  Multigraph cover_;
};

// Throws PrecisionError when n exceeds the voltage precision.
DerivedCover derived_graph(const VoltageAssignment& va, unsigned n);

bool is_connected(const DerivedCover& cover);

// Algebraic connectivity criterion: the cycle-normalized voltages generate
// Z/ell^n, i.e. n == 0 or one of them is a unit modulo ell.
bool cycle_voltages_generate(const VoltageAssignment& va, unsigned n);

}  // namespace ltower
