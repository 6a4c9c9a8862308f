#pragma once

// Loop-free multigraphs: fission graphs of irregular types, complete k-partite
// graphs, supernova legs, the Kac-Moody form and simple reflections.

#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include "wildmoduli/irregular.hpp"

namespace wildmoduli {

using DimVector = std::vector<std::int64_t>;

/// Undirected multigraph stored as a symmetric multiplicity matrix with zero
/// diagonal.
class Graph {
 public:
  Graph() = default;
  Graph(std::vector<std::string> nodes, std::vector<std::vector<int>> adjacency);

  /// Nodes "0".."n-1", no edges.
  static Graph empty(std::size_t n);

  std::size_t size() const noexcept { return nodes_.size(); }
  const std::vector<std::string>& nodes() const noexcept { return nodes_; }
  const std::vector<std::vector<int>>& adjacency() const noexcept { return adj_; }
  int multiplicity(std::size_t i, std::size_t j) const { return adj_.at(i).at(j); }
  /// Total number of edges counted with multiplicity.
  std::int64_t edge_count() const noexcept;

  void add_edges(std::size_t i, std::size_t j, int count);

  /// Edges (i, j) with i < j in node order, each repeated by multiplicity.
  std::vector<std::pair<std::size_t, std::size_t>> oriented_edges() const;

  friend bool operator==(const Graph& a, const Graph& b) = default;

 private:
  std::vector<std::string> nodes_;
  std::vector<std::vector<int>> adj_;
};

/// Weakly decreasing positive parts.
class Partition {
 public:
  explicit Partition(std::vector<int> parts);

  const std::vector<int>& parts() const noexcept { return parts_; }
  std::size_t length() const noexcept { return parts_.size(); }
  int total() const noexcept;

 private:
  std::vector<int> parts_;
};

/// One node per block of Q; deg(q_i - q_j) - 1 edges between distinct blocks.
Graph fission_graph(const IrregularType& q);

Graph kpartite_graph(const Partition& parts);

/// Standard reading: q_{p,i} = a_p t^2 + b_{p,i} t, each of multiplicity one.
/// `b` lists the sum(parts) linear coefficients part by part.
IrregularType kpartite_type(const Partition& parts, const std::vector<Complex>& a,
                            const std::vector<Complex>& b);

/// Glue a type A leg of legs[i] new nodes onto node i. New nodes follow the
/// originals, grouped by parent and ordered outward.
Graph attach_legs(const Graph& g, const std::vector<int>& legs);

/// (d, e) = sum_i 2 d_i e_i - sum_{i != j} mult(i,j) d_i e_j.
std::int64_t cartan_pairing(const Graph& g, const DimVector& d, const DimVector& e);

/// Unit vector e_i.
DimVector simple_root(const Graph& g, std::size_t i);

struct Reflected {
  DimVector dims;
  std::vector<Complex> lambda;
};

/// s_i: d' = d - (d, e_i) e_i and lambda'_j = lambda_j - (e_i, e_j) lambda_i.
Reflected weyl_reflect(const Graph& g, const DimVector& d, const std::vector<Complex>& lambda,
                       std::size_t i);

}  // namespace wildmoduli
