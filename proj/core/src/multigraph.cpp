#include "ltower/multigraph.hpp"

#include <algorithm>
#include <numeric>
#include <queue>

#include "ltower/errors.hpp"

namespace ltower {

namespace {

std::vector<std::string> default_names(std::size_t n) {
  std::vector<std::string> names;
  names.reserve(n);
  for (std::size_t i = 0; i < n; ++i) names.push_back("v" + std::to_string(i + 1));
  return names;
}

// Undirected adjacency as (neighbor, edge index), edges in input order.
std::vector<std::vector<std::pair<std::size_t, std::size_t>>> adjacency(const Multigraph& g) {
  std::vector<std::vector<std::pair<std::size_t, std::size_t>>> adj(g.vertex_count());
  for (std::size_t e = 0; e < g.edge_count(); ++e) {
    const Edge& edge = g.edges()[e];
    adj[edge.tail].emplace_back(edge.head, e);
    if (edge.head != edge.tail) adj[edge.head].emplace_back(edge.tail, e);
  }
  return adj;
}

}  // namespace

Multigraph::Multigraph(std::vector<std::string> vertex_names, std::vector<Edge> edges)
    : names_(std::move(vertex_names)), edges_(std::move(edges)) {
  if (names_.empty()) throw Error("a multigraph needs at least one vertex");
  for (const Edge& e : edges_) {
    if (e.tail >= names_.size() || e.head >= names_.size()) {
      throw Error("edge endpoint out of range");
    }
  }
}

Multigraph::Multigraph(std::size_t vertex_count, std::vector<Edge> edges)
    : Multigraph(default_names(vertex_count), std::move(edges)) {}

std::vector<std::size_t> Multigraph::valencies() const {
  std::vector<std::size_t> val(vertex_count(), 0);
  for (const Edge& e : edges_) {
    ++val[e.tail];
    ++val[e.head];
  }
  return val;
}

bool is_connected(const Multigraph& graph) {
  const std::size_t n = graph.vertex_count();
  std::vector<std::size_t> parent(n);
  std::iota(parent.begin(), parent.end(), std::size_t{0});
  auto find = [&](std::size_t x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  };
  std::size_t components = n;
  for (const Edge& e : graph.edges()) {
    std::size_t a = find(e.tail), b = find(e.head);
    if (a != b) {
      parent[a] = b;
      --components;
    }
  }
  return components == 1;
}

long euler_characteristic(const Multigraph& graph) {
  return static_cast<long>(graph.vertex_count()) - static_cast<long>(graph.edge_count());
}

ValidationReport validate(const Multigraph& graph) {
  ValidationReport report;
  report.connected = is_connected(graph);
  if (!report.connected) report.violations.push_back("graph is not connected");

  const auto val = graph.valencies();
  report.min_valency_ok = true;
  for (std::size_t v = 0; v < val.size(); ++v) {
    if (val[v] < 2) {
      report.min_valency_ok = false;
      report.violations.push_back("vertex " + graph.vertex_names()[v] + " has valency " +
                                  std::to_string(val[v]));
    }
  }

  report.euler_nonzero = euler_characteristic(graph) != 0;
  if (!report.euler_nonzero) report.violations.push_back("Euler characteristic is zero");
  return report;
}

std::vector<std::size_t> bfs_spanning_tree(const Multigraph& graph) {
  const auto adj = adjacency(graph);
  std::vector<bool> seen(graph.vertex_count(), false);
  std::vector<std::size_t> tree;
  std::queue<std::size_t> queue;
  seen[0] = true;
  queue.push(0);
  while (!queue.empty()) {
    std::size_t v = queue.front();
    queue.pop();
    for (auto [w, e] : adj[v]) {
      if (seen[w]) continue;
      seen[w] = true;
      tree.push_back(e);
      queue.push(w);
    }
  }
  if (tree.size() + 1 != graph.vertex_count()) {
    throw DisconnectedGraphError("spanning tree requested for a disconnected graph");
  }
  std::sort(tree.begin(), tree.end());
  return tree;
}

Voltage Voltage::from_integer(long long v, std::uint64_t ell, unsigned precision) {
  return Voltage{TruncatedPadic(ell, precision, BigInt(static_cast<long>(v))), v};
}

VoltageAssignment::VoltageAssignment(Multigraph graph, std::uint64_t ell, unsigned precision,
                                     std::vector<Voltage> voltages)
    : graph_(std::move(graph)), ell_(ell), precision_(precision), voltages_(std::move(voltages)) {
  if (voltages_.size() != graph_.edge_count()) {
    throw Error("voltage count does not match the number of section edges");
  }
  for (const Voltage& v : voltages_) {
    if (v.value.ell() != ell_ || v.value.precision() != precision_) {
      throw Error("voltages must share ell and precision");
    }
  }
}

VoltageAssignment VoltageAssignment::from_integers(Multigraph graph, std::uint64_t ell,
                                                   unsigned precision,
                                                   const std::vector<long long>& voltages) {
  std::vector<Voltage> vs;
  vs.reserve(voltages.size());
  for (long long v : voltages) vs.push_back(Voltage::from_integer(v, ell, precision));
  return VoltageAssignment(std::move(graph), ell, precision, std::move(vs));
}

bool VoltageAssignment::integral() const noexcept {
  return std::all_of(voltages_.begin(), voltages_.end(),
                     [](const Voltage& v) { return v.integer.has_value(); });
}

BigInt VoltageAssignment::voltage_mod(std::size_t edge, unsigned n) const {
  return voltages_.at(edge).value.reduce(n);
}

VoltageAssignment normalize_voltages(const VoltageAssignment& va,
                                     const std::optional<std::vector<std::size_t>>& tree_edges) {
  const Multigraph& g = va.graph();
  const std::vector<std::size_t> tree = tree_edges ? *tree_edges : bfs_spanning_tree(g);
  if (tree.size() + 1 != g.vertex_count()) throw Error("not a spanning tree: wrong edge count");

  // Potential phi(v): voltage of the tree path from vertex 0 to v.
  const std::size_t n = g.vertex_count();
  std::vector<std::optional<Voltage>> phi(n);
  phi[0] = Voltage::from_integer(0, va.ell(), va.precision());

  auto add = [&](const Voltage& a, const Voltage& b, bool subtract) {
    Voltage r{subtract ? a.value - b.value : a.value + b.value, std::nullopt};
    if (a.integer && b.integer) r.integer = subtract ? *a.integer - *b.integer : *a.integer + *b.integer;
    return r;
  };

  std::size_t assigned = 1;
  bool progress = true;
  while (assigned < n && progress) {
    progress = false;
    for (std::size_t e : tree) {
      const Edge& edge = g.edges().at(e);
      const Voltage& alpha = va.voltages()[e];
      if (phi[edge.tail] && !phi[edge.head]) {
        phi[edge.head] = add(*phi[edge.tail], alpha, false);
      } else if (phi[edge.head] && !phi[edge.tail]) {
        phi[edge.tail] = add(*phi[edge.head], alpha, true);
      } else {
        continue;
      }
      ++assigned;
      progress = true;
    }
  }
  if (assigned < n) throw Error("not a spanning tree: edges do not reach every vertex");

  std::vector<Voltage> normalized;
  normalized.reserve(g.edge_count());
  for (std::size_t s = 0; s < g.edge_count(); ++s) {
    const Edge& edge = g.edges()[s];
    Voltage v = add(add(va.voltages()[s], *phi[edge.tail], false), *phi[edge.head], true);
    normalized.push_back(std::move(v));
  }
  return VoltageAssignment(g, va.ell(), va.precision(), std::move(normalized));
}

}  // namespace ltower
