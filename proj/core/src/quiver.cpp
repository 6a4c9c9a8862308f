#include "wildmoduli/quiver.hpp"

#include <random>
#include <stdexcept>

#include "wildmoduli/errors.hpp"

namespace wildmoduli {

namespace {

void check_dims(const Graph& g, const DimVector& d) {
  if (d.size() != g.size()) {
    throw DimensionError("dimension vector has length " + std::to_string(d.size()) +
                         ", graph has " + std::to_string(g.size()) + " nodes");
  }
  for (auto v : d) {
    if (v < 0) throw DimensionError("dimension vector entries must be nonnegative");
  }
}

}  // namespace

GraphRep::GraphRep(Graph graph, DimVector dims, std::vector<EdgeMaps> edges)
    : graph_(std::move(graph)), dims_(std::move(dims)), edges_(std::move(edges)) {
  check_dims(graph_, dims_);
  const auto expected = graph_.oriented_edges();
  if (expected.size() != edges_.size()) {
    throw DimensionError("representation has " + std::to_string(edges_.size()) +
                         " edge map pairs, graph has " + std::to_string(expected.size()) + " edges");
  }
  for (std::size_t e = 0; e < edges_.size(); ++e) {
    const auto& m = edges_[e];
    if (m.source != expected[e].first || m.target != expected[e].second) {
      throw StructureError("edge " + std::to_string(e) + " has the wrong orientation");
    }
    const auto ds = dims_[m.source];
    const auto dt = dims_[m.target];
    if (m.x.rows() != dt || m.x.cols() != ds || m.y.rows() != ds || m.y.cols() != dt) {
      throw DimensionError("edge " + std::to_string(e) + " maps have inconsistent shapes");
    }
  }
}

std::int64_t rep_space_dim(const Graph& g, const DimVector& d) {
  check_dims(g, d);
  std::int64_t total = 0;
  for (const auto& [i, j] : g.oriented_edges()) total += d[i] * d[j];
  return 2 * total;
}

GraphRep random_rep(const Graph& g, const DimVector& d, std::uint64_t seed) {
  check_dims(g, d);
  std::mt19937_64 rng(seed);
  std::normal_distribution<double> normal(0.0, 1.0);
  auto draw = [&](std::int64_t rows, std::int64_t cols) {
    ComplexMatrix m(rows, cols);
    for (Eigen::Index c = 0; c < cols; ++c) {
      for (Eigen::Index r = 0; r < rows; ++r) {
        const double re = normal(rng);
        const double im = normal(rng);
        m(r, c) = Complex(re, im);
      }
    }
    return m;
  };
  std::vector<EdgeMaps> edges;
  for (const auto& [i, j] : g.oriented_edges()) {
    EdgeMaps e{i, j, draw(d[j], d[i]), {}};
    e.y = draw(d[i], d[j]);
    edges.push_back(std::move(e));
  }
  return GraphRep(g, d, std::move(edges));
}

std::vector<ComplexMatrix> moment_map(const GraphRep& rep) {
  const auto& d = rep.dims();
  std::vector<ComplexMatrix> mu;
  mu.reserve(d.size());
  for (auto di : d) mu.push_back(ComplexMatrix::Zero(di, di));
  for (const auto& e : rep.edges()) {
    mu[e.source] -= e.y * e.x;
    mu[e.target] += e.x * e.y;
  }
  return mu;
}

GraphRep act(const std::vector<ComplexMatrix>& group_element, const GraphRep& rep) {
  const auto& d = rep.dims();
  if (group_element.size() != d.size()) throw DimensionError("one group factor per node expected");
  std::vector<ComplexMatrix> inverses;
  for (std::size_t i = 0; i < d.size(); ++i) {
    if (group_element[i].rows() != d[i] || group_element[i].cols() != d[i]) {
      throw DimensionError("group factor " + std::to_string(i) + " has the wrong size");
    }
    inverses.push_back(group_element[i].inverse());
  }
  std::vector<EdgeMaps> edges = rep.edges();
  for (auto& e : edges) {
    e.x = group_element[e.target] * e.x * inverses[e.source];
    e.y = group_element[e.source] * e.y * inverses[e.target];
  }
  return GraphRep(rep.graph(), d, std::move(edges));
}

std::int64_t quiver_dim(const Graph& g, const DimVector& d) {
  // Defined on the whole root lattice; reflected vectors may have negative entries.
  if (d.size() != g.size()) {
    throw DimensionError("dimension vector has length " + std::to_string(d.size()) + ", graph has " +
                         std::to_string(g.size()) + " nodes");
  }
  std::int64_t sq = 0;
  bool nonzero = false;
  for (auto v : d) {
    sq += v * v;
    nonzero = nonzero || v != 0;
  }
  if (!nonzero) throw DimensionError("quiver_dim needs a nonzero dimension vector");
  const std::int64_t from_form = 2 - cartan_pairing(g, d, d);
  std::int64_t rep = 0;
  for (const auto& [i, j] : g.oriented_edges()) rep += 2 * d[i] * d[j];
  const std::int64_t from_count = rep - 2 * (sq - 1);
  if (from_form != from_count) {
    throw std::logic_error("quiver_dim: Cartan form gives " + std::to_string(from_form) +
                           " but parameter count gives " + std::to_string(from_count));
  }
  return from_form;
}

Complex trace_condition(const MomentValue& lambda, const DimVector& d) {
  if (lambda.size() != d.size()) throw DimensionError("lambda and dimension vector lengths differ");
  Complex acc{};
  for (std::size_t i = 0; i < d.size(); ++i) acc += lambda[i] * static_cast<double>(d[i]);
  return acc;
}

}  // namespace wildmoduli
