#include "ltower/derived_cover.hpp"

#include "ltower/errors.hpp"

namespace ltower {

namespace {

constexpr std::uint64_t kMaxCoverVertices = std::uint64_t{1} << 26;

}  // namespace

DerivedCover::DerivedCover(unsigned level, std::uint64_t sheets, Multigraph base, Multigraph cover)
    : level_(level), sheets_(sheets), base_(std::move(base)), cover_(std::move(cover)) {}

std::size_t DerivedCover::vertex_index(std::size_t base_vertex, std::uint64_t sheet) const {
  return static_cast<std::size_t>(sheet) * base_.vertex_count() + base_vertex;
}

std::size_t DerivedCover::base_vertex_of(std::size_t cover_vertex) const {
  return cover_vertex % base_.vertex_count();
}

std::uint64_t DerivedCover::sheet_of(std::size_t cover_vertex) const {
  return cover_vertex / base_.vertex_count();
}

std::size_t DerivedCover::section_edge_of(std::size_t cover_edge) const {
  return cover_edge % base_.edge_count();
}

Multigraph DerivedCover::project() const {
  std::vector<Edge> edges;
  edges.reserve(cover_.edge_count());
  for (const Edge& e : cover_.edges()) {
    edges.push_back(Edge{base_vertex_of(e.tail), base_vertex_of(e.head)});
  }
  return Multigraph(base_.vertex_names(), std::move(edges));
}

DerivedCover derived_graph(const VoltageAssignment& va, unsigned n) {
  if (n > va.precision()) {
    throw PrecisionError("level " + std::to_string(n) + " exceeds voltage precision " +
                         std::to_string(va.precision()));
  }
  const Multigraph& base = va.graph();
  const BigInt sheets_z = pow_ui(va.ell(), n);
  if (!sheets_z.fits_ulong_p() ||
      sheets_z.get_ui() * base.vertex_count() > kMaxCoverVertices) {
    throw Error("derived cover too large to build explicitly");
  }
  const std::uint64_t sheets = sheets_z.get_ui();
  const std::size_t g = base.vertex_count();

  std::vector<std::uint64_t> shift(base.edge_count());
  for (std::size_t s = 0; s < base.edge_count(); ++s) shift[s] = va.voltage_mod(s, n).get_ui();

  std::vector<std::string> names;
  names.reserve(sheets * g);
  for (std::uint64_t a = 0; a < sheets; ++a) {
    for (std::size_t v = 0; v < g; ++v) {
      names.push_back("(" + base.vertex_names()[v] + "," + std::to_string(a) + ")");
    }
  }
  std::vector<Edge> edges;
  edges.reserve(sheets * base.edge_count());
  for (std::uint64_t a = 0; a < sheets; ++a) {
    for (std::size_t s = 0; s < base.edge_count(); ++s) {
      const Edge& e = base.edges()[s];
      const std::uint64_t b = (a + shift[s]) % sheets;
      edges.push_back(Edge{static_cast<std::size_t>(a) * g + e.tail,
                           static_cast<std::size_t>(b) * g + e.head});
    }
  }
  return DerivedCover(n, sheets, base, Multigraph(std::move(names), std::move(edges)));
}

bool is_connected(const DerivedCover& cover) { return is_connected(cover.graph()); }

bool cycle_voltages_generate(const VoltageAssignment& va, unsigned n) {
  if (n > va.precision()) throw PrecisionError("level exceeds voltage precision");
  if (!is_connected(va.graph())) return false;
  if (n == 0) return true;
  const VoltageAssignment normalized = normalize_voltages(va);
  for (std::size_t s = 0; s < va.graph().edge_count(); ++s) {
    if (normalized.voltage_mod(s, 1) != 0) return true;
  }
  return false;
}

}  // namespace ltower
