#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "ltower/padic.hpp"

namespace ltower {

// Directed section edge s with inc(s) = (tail, head). Loops have tail == head.
struct Edge {
  std::size_t tail = 0;
  std::size_t head = 0;

  friend bool operator==(const Edge&, const Edge&) = default;
};

// Finite multigraph together with its section S: one orientation per
// undirected edge, kept in input order.
class Multigraph {
 public:
  Multigraph() = default;
  Multigraph(std::vector<std::string> vertex_names, std::vector<Edge> edges);
  // Vertices named v1..vg.
  Multigraph(std::size_t vertex_count, std::vector<Edge> edges);

  std::size_t vertex_count() const noexcept { return names_.size(); }
  std::size_t edge_count() const noexcept { return edges_.size(); }
  const std::vector<Edge>& edges() const noexcept { return edges_; }
  const std::vector<std::string>& vertex_names() const noexcept { return names_; }

  // A loop contributes 2 to the valency of its vertex.
  std::vector<std::size_t> valencies() const;

  friend bool operator==(const Multigraph&, const Multigraph&) = default;

 private:
  std::vector<std::string> names_;
  std::vector<Edge> edges_;
};

struct ValidationReport {
  bool connected = false;
  bool min_valency_ok = false;
  bool euler_nonzero = false;
  std::vector<std::string> violations;

  bool accepted() const noexcept { return connected && min_valency_ok && euler_nonzero; }
};

// Checks the standing hypotheses: connected, no vertex of valency < 2, chi != 0.
ValidationReport validate(const Multigraph& graph);

long euler_characteristic(const Multigraph& graph);

bool is_connected(const Multigraph& graph);

// Edge indices of a spanning tree grown breadth-first from vertex 0, always
// taking the lowest-index edge first. Requires a connected graph.
std::vector<std::size_t> bfs_spanning_tree(const Multigraph& graph);

// One voltage per section edge. `integer` is set iff the voltage was declared
// as a rational integer; only then are exponents treated as integral.
struct Voltage {
  TruncatedPadic value;
  std::optional<long long> integer;

  static Voltage from_integer(long long v, std::uint64_t ell, unsigned precision);
  static Voltage from_padic(TruncatedPadic v) { return Voltage{std::move(v), std::nullopt}; }

  friend bool operator==(const Voltage&, const Voltage&) = default;
};

class VoltageAssignment {
 public:
  VoltageAssignment(Multigraph graph, std::uint64_t ell, unsigned precision,
                    std::vector<Voltage> voltages);

  static VoltageAssignment from_integers(Multigraph graph, std::uint64_t ell, unsigned precision,
                                         const std::vector<long long>& voltages);

  const Multigraph& graph() const noexcept { return graph_; }
  std::uint64_t ell() const noexcept { return ell_; }
  unsigned precision() const noexcept { return precision_; }
  const std::vector<Voltage>& voltages() const noexcept { return voltages_; }

  // True iff every voltage was declared integral.
  bool integral() const noexcept;

  // alpha_n(s) in [0, ell^n). Throws PrecisionError when n > precision.
  BigInt voltage_mod(std::size_t edge, unsigned n) const;

 private:
  Multigraph graph_;
  std::uint64_t ell_;
  unsigned precision_;
  std::vector<Voltage> voltages_;
};

// Cycle-normalized voltages for the same tower: alpha'(s) is the voltage of
// the closed path running from head(s) to tail(s) inside the spanning tree and
// then along s. Tree edges receive voltage 0. When `tree_edges` is empty the
// tree from bfs_spanning_tree is used.
VoltageAssignment normalize_voltages(const VoltageAssignment& va,
                                     const std::optional<std::vector<std::size_t>>& tree_edges = {});

}  // namespace ltower
