#pragma once

// Representations of doubled graphs, the moment map for prod GL(V_i), and
// quiver variety dimension counts.

#include <cstdint>
#include <vector>

#include "wildmoduli/graphs.hpp"

namespace wildmoduli {

/// Maps attached to one oriented edge source -> target.
struct EdgeMaps {
  std::size_t source = 0;
  std::size_t target = 0;
  ComplexMatrix x;  ///< dims[target] x dims[source]
  ComplexMatrix y;  ///< dims[source] x dims[target]
};

/// A point of Rep(Gamma, V). Edge order and orientation follow
/// Graph::oriented_edges().
class GraphRep {
 public:
  GraphRep(Graph graph, DimVector dims, std::vector<EdgeMaps> edges);

  const Graph& graph() const noexcept { return graph_; }
  const DimVector& dims() const noexcept { return dims_; }
  const std::vector<EdgeMaps>& edges() const noexcept { return edges_; }

 private:
  Graph graph_;
  DimVector dims_;
  std::vector<EdgeMaps> edges_;
};

using MomentValue = std::vector<Complex>;

/// 2 * sum over edges (with multiplicity) of d_i d_j.
std::int64_t rep_space_dim(const Graph& g, const DimVector& d);

/// Entries are independent standard complex normals (re, im ~ N(0,1)) drawn
/// from a 64-bit Mersenne twister seeded with `seed`.
GraphRep random_rep(const Graph& g, const DimVector& d, std::uint64_t seed);

/// mu_i = sum_{e: i->j} (-y_e x_e) + sum_{e: j->i} x_e y_e.
std::vector<ComplexMatrix> moment_map(const GraphRep& rep);

/// Acts by x_e -> g_t x_e g_s^{-1}, y_e -> g_s y_e g_t^{-1}.
GraphRep act(const std::vector<ComplexMatrix>& group_element, const GraphRep& rep);

/// 2 - (d, d) for any nonzero integer vector; cross-checked against
/// 2 sum_edges d_i d_j - 2 (sum d_i^2 - 1).
std::int64_t quiver_dim(const Graph& g, const DimVector& d);

/// sum_i lambda_i d_i. Nonzero means the fibre mu = lambda.id is empty.
Complex trace_condition(const MomentValue& lambda, const DimVector& d);

}  // namespace wildmoduli
