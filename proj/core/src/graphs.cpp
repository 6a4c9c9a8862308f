#include "wildmoduli/graphs.hpp"

#include <algorithm>
#include <numeric>

#include "wildmoduli/errors.hpp"

namespace wildmoduli {

Graph::Graph(std::vector<std::string> nodes, std::vector<std::vector<int>> adjacency)
    : nodes_(std::move(nodes)), adj_(std::move(adjacency)) {
  const std::size_t n = nodes_.size();
  if (adj_.size() != n) throw DimensionError("adjacency has wrong number of rows");
  for (std::size_t i = 0; i < n; ++i) {
    if (adj_[i].size() != n) throw DimensionError("adjacency row " + std::to_string(i) + " has wrong length");
    if (adj_[i][i] != 0) throw StructureError("graph has a loop at node " + std::to_string(i));
    for (std::size_t j = 0; j < i; ++j) {
      if (adj_[i][j] < 0) throw StructureError("negative edge multiplicity");
      if (adj_[i][j] != adj_[j][i]) throw StructureError("adjacency is not symmetric");
    }
  }
}

Graph Graph::empty(std::size_t n) {
  std::vector<std::string> ids(n);
  for (std::size_t i = 0; i < n; ++i) ids[i] = std::to_string(i);
  return Graph(std::move(ids), std::vector<std::vector<int>>(n, std::vector<int>(n, 0)));
}

std::int64_t Graph::edge_count() const noexcept {
  std::int64_t total = 0;
  for (std::size_t i = 0; i < adj_.size(); ++i) {
    for (std::size_t j = i + 1; j < adj_.size(); ++j) total += adj_[i][j];
  }
  return total;
}

void Graph::add_edges(std::size_t i, std::size_t j, int count) {
  if (i == j) throw StructureError("loops are not allowed");
  if (count < 0 || adj_.at(i).at(j) + count < 0) throw StructureError("negative edge multiplicity");
  adj_[i][j] += count;
  adj_[j][i] += count;
}

std::vector<std::pair<std::size_t, std::size_t>> Graph::oriented_edges() const {
  std::vector<std::pair<std::size_t, std::size_t>> edges;
  for (std::size_t i = 0; i < adj_.size(); ++i) {
    for (std::size_t j = i + 1; j < adj_.size(); ++j) {
      for (int m = 0; m < adj_[i][j]; ++m) edges.emplace_back(i, j);
    }
  }
  return edges;
}

Partition::Partition(std::vector<int> parts) : parts_(std::move(parts)) {
  if (parts_.empty()) throw StructureError("partition must be nonempty");
  for (std::size_t i = 0; i < parts_.size(); ++i) {
    if (parts_[i] <= 0) throw StructureError("partition parts must be positive");
    if (i > 0 && parts_[i] > parts_[i - 1]) throw StructureError("partition must be weakly decreasing");
  }
}

int Partition::total() const noexcept { return std::accumulate(parts_.begin(), parts_.end(), 0); }

Graph fission_graph(const IrregularType& q) {
  const auto& blocks = q.blocks();
  Graph g = Graph::empty(blocks.size());
  for (std::size_t i = 0; i < blocks.size(); ++i) {
    for (std::size_t j = i + 1; j < blocks.size(); ++j) {
      // q's are distinct with zero constant term, so the difference has degree >= 1.
      const int deg = (blocks[i].q - blocks[j].q).degree();
      g.add_edges(i, j, deg - 1);
    }
  }
  return g;
}

Graph kpartite_graph(const Partition& parts) {
  const auto n = static_cast<std::size_t>(parts.total());
  std::vector<std::size_t> part_of;
  for (std::size_t p = 0; p < parts.length(); ++p) {
    part_of.insert(part_of.end(), static_cast<std::size_t>(parts.parts()[p]), p);
  }
  Graph g = Graph::empty(n);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = i + 1; j < n; ++j) {
      if (part_of[i] != part_of[j]) g.add_edges(i, j, 1);
    }
  }
  return g;
}

IrregularType kpartite_type(const Partition& parts, const std::vector<Complex>& a,
                            const std::vector<Complex>& b) {
  if (a.size() != parts.length()) {
    throw DimensionError("need one quadratic coefficient per part");
  }
  if (b.size() != static_cast<std::size_t>(parts.total())) {
    throw DimensionError("need one linear coefficient per node");
  }
  for (std::size_t p = 0; p < a.size(); ++p) {
    for (std::size_t r = 0; r < p; ++r) {
      if (a[p] == a[r]) throw DistinctnessError("quadratic coefficients of parts must be distinct");
    }
  }
  std::vector<IrregularBlock> blocks;
  std::size_t offset = 0;
  for (std::size_t p = 0; p < parts.length(); ++p) {
    const auto size = static_cast<std::size_t>(parts.parts()[p]);
    for (std::size_t i = offset; i < offset + size; ++i) {
      for (std::size_t j = offset; j < i; ++j) {
        if (b[i] == b[j]) {
          throw DistinctnessError("linear coefficients within part " + std::to_string(p) +
                                  " must be distinct");
        }
      }
      blocks.push_back({PolynomialC({Complex{}, b[i], a[p]}), 1});
    }
    offset += size;
  }
  return IrregularType(static_cast<std::size_t>(parts.total()), std::move(blocks));
}

Graph attach_legs(const Graph& g, const std::vector<int>& legs) {
  if (legs.size() != g.size()) throw DimensionError("need one leg length per node");
  std::vector<std::string> ids = g.nodes();
  for (std::size_t i = 0; i < legs.size(); ++i) {
    if (legs[i] < 0) throw StructureError("leg lengths must be nonnegative");
    for (int l = 1; l <= legs[i]; ++l) ids.push_back(g.nodes()[i] + "~" + std::to_string(l));
  }
  const std::size_t total = ids.size();
  std::vector<std::vector<int>> adj(total, std::vector<int>(total, 0));
  for (std::size_t i = 0; i < g.size(); ++i) {
    for (std::size_t j = 0; j < g.size(); ++j) adj[i][j] = g.multiplicity(i, j);
  }
  Graph out(std::move(ids), std::move(adj));
  std::size_t next = g.size();
  for (std::size_t i = 0; i < legs.size(); ++i) {
    std::size_t prev = i;
    for (int l = 0; l < legs[i]; ++l, ++next) {
      out.add_edges(prev, next, 1);
      prev = next;
    }
  }
  return out;
}

namespace {

void require_node_vector(const Graph& g, std::size_t len, const char* what) {
  if (len != g.size()) {
    throw DimensionError(std::string(what) + " has length " + std::to_string(len) +
                         ", graph has " + std::to_string(g.size()) + " nodes");
  }
}

}  // namespace

std::int64_t cartan_pairing(const Graph& g, const DimVector& d, const DimVector& e) {
  require_node_vector(g, d.size(), "dimension vector");
  require_node_vector(g, e.size(), "dimension vector");
  std::int64_t acc = 0;
  for (std::size_t i = 0; i < g.size(); ++i) {
    acc += 2 * d[i] * e[i];
    for (std::size_t j = 0; j < g.size(); ++j) {
      if (i != j) acc -= static_cast<std::int64_t>(g.multiplicity(i, j)) * d[i] * e[j];
    }
  }
  return acc;
}

DimVector simple_root(const Graph& g, std::size_t i) {
  if (i >= g.size()) throw DimensionError("node index out of range");
  DimVector e(g.size(), 0);
  e[i] = 1;
  return e;
}

Reflected weyl_reflect(const Graph& g, const DimVector& d, const std::vector<Complex>& lambda,
                       std::size_t i) {
  require_node_vector(g, lambda.size(), "lambda");
  const DimVector ei = simple_root(g, i);
  Reflected out{d, lambda};
  out.dims[i] -= cartan_pairing(g, d, ei);
  const Complex li = lambda[i];
  for (std::size_t j = 0; j < g.size(); ++j) {
    const auto cij = cartan_pairing(g, ei, simple_root(g, j));
    out.lambda[j] -= static_cast<double>(cij) * li;
  }
  return out;
}

}  // namespace wildmoduli
