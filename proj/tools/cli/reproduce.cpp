#include "reproduce.hpp"

#include <algorithm>
#include <array>
#include <limits>
#include <numbers>
#include <random>

#include "wildmoduli/betti.hpp"
#include "wildmoduli/graphs.hpp"
#include "wildmoduli/io.hpp"
#include "wildmoduli/irregular.hpp"
#include "wildmoduli/quiver.hpp"
#include "wildmoduli/spectral.hpp"

namespace wildmoduli::cli {

namespace {

// Seeds are pinned per suite; --seed shifts them all together.
constexpr std::uint64_t kDimensionSeed = 11;
constexpr std::uint64_t kSurfaceSeed = 1;
constexpr std::uint64_t kSpectralSeed = 29;

double max_abs(const ComplexMatrix& m) { return m.size() == 0 ? 0.0 : m.cwiseAbs().maxCoeff(); }

Complex normal_complex(std::mt19937_64& rng, double scale = 1.0) {
  std::normal_distribution<double> normal(0.0, scale);
  const double re = normal(rng);
  return {re, normal(rng)};
}

ComplexMatrix random_traceless(std::mt19937_64& rng, Eigen::Index n, double scale) {
  ComplexMatrix m(n, n);
  for (Eigen::Index i = 0; i < m.size(); ++i) m(i) = normal_complex(rng, scale);
  const Complex shift = m.trace() / static_cast<double>(n);
  for (Eigen::Index i = 0; i < n; ++i) m(i, i) -= shift;
  return m;
}

RationalMatrix random_fuchsian(std::mt19937_64& rng, std::size_t n, std::size_t m, bool balanced) {
  std::uniform_real_distribution<double> jitter(-0.15, 0.15);
  std::vector<Complex> positions;
  std::vector<ComplexMatrix> residues;
  ComplexMatrix total = ComplexMatrix::Zero(static_cast<Eigen::Index>(n), static_cast<Eigen::Index>(n));
  for (std::size_t t = 0; t < m; ++t) {
    const double phi = 2.0 * std::numbers::pi * static_cast<double>(t) / static_cast<double>(m) + jitter(rng);
    positions.push_back(std::polar(1.0 + jitter(rng), phi));
    residues.push_back(random_traceless(rng, static_cast<Eigen::Index>(n), balanced ? 0.4 : 0.6));
    total += residues.back();
  }
  if (balanced) residues.back() -= total;
  return RationalMatrix::fuchsian(positions, residues);
}

// Largest |eigenvalue| over the residues.
double residue_radius(const RationalMatrix& a) {
  double r = 0.0;
  for (const auto& p : a.poles()) {
    r = std::max(r, Eigen::ComplexEigenSolver<ComplexMatrix>(p.parts[0], false).eigenvalues().cwiseAbs().maxCoeff());
  }
  return r;
}

// Residue spectra inside |lambda| < 1/2: nonresonant, with moderate |M_t|.
RationalMatrix random_nonresonant(std::mt19937_64& rng) {
  for (;;) {
    RationalMatrix a = random_fuchsian(rng, 2, 3, true);
    if (residue_radius(a) < 0.5) return a;
  }
}

IrregularType painleve_ii_type() {
  const PolynomialC q({0.0, Complex(0.4, 0.1), Complex(-0.3, 0.2), Complex(1.0, 0.5)});
  return IrregularType(2, {{q, 1}, {PolynomialC() - q, 1}});
}

Graph affine_d4() {
  std::vector<std::vector<int>> adj(5, std::vector<int>(5, 0));
  for (int leaf = 1; leaf <= 4; ++leaf) adj[0][leaf] = adj[leaf][0] = 1;
  return Graph({"c", "1", "2", "3", "4"}, adj);
}

Graph random_graph(std::mt19937_64& rng, std::size_t n) {
  std::uniform_int_distribution<int> mult(0, 2);
  Graph g = Graph::empty(n);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = i + 1; j < n; ++j) g.add_edges(i, j, mult(rng));
  }
  return g;
}

void dimensions(Session& s, json& summary) {
  const std::uint64_t seed = kDimensionSeed + s.seed();
  MarkedPoint infinity;
  infinity.pole_order = 4;
  infinity.type = painleve_ii_type();
  infinity.residues = ResidueData{{{{Complex(0.35, -0.1), 1}}, {{Complex(-0.35, 0.1), 1}}}};
  const int orbit = orbit_dim(very_good_point(infinity), GroupSpec::sl(2));
  s.expect_equal("orbit_dim.sl2_k4", orbit, 8);
  s.expect_equal("mstar_dim.painleve_ii", mstar_dim(CurveSpec(0, {infinity}), GroupSpec::sl(2)).value, 2);

  std::vector<MarkedPoint> four;
  const std::array<Complex, 3> where{0.0, 1.0, Complex(0.3, 0.4)};
  for (std::size_t i = 0; i < 4; ++i) {
    MarkedPoint p;
    if (i < 3) p.position = where[i];
    const double e = 0.2 + 0.1 * static_cast<double>(i);
    p.residues = ResidueData::diagonal({e, -e});
    four.push_back(p);
  }
  s.expect_equal("mstar_dim.four_simple_poles", mstar_dim(CurveSpec(0, four), GroupSpec::sl(2)).value, 2);
  s.expect_equal("tame_cv_dim.g2", tame_cv_dim(0, {6, 6, 6, 12}, GroupSpec::parse("G2")).value, 2);

  s.expect_equal("quiver_dim.a1_tilde", quiver_dim(Graph({"0", "1"}, {{0, 2}, {2, 0}}), {1, 1}), 2);
  s.expect_equal("quiver_dim.d4_tilde", quiver_dim(affine_d4(), {2, 1, 1, 1, 1}), 2);
  const Graph p2 = fission_graph(painleve_ii_type());
  s.expect_equal("fission_graph.painleve_ii.nodes", static_cast<long long>(p2.size()), 2);
  s.expect_equal("fission_graph.painleve_ii.edges", p2.edge_count(), 2);
  const Graph g221 = kpartite_graph(Partition({2, 2, 1}));
  s.expect_equal("kpartite_graph.221.nodes", static_cast<long long>(g221.size()), 5);
  s.expect_equal("kpartite_graph.221.edges", g221.edge_count(), 8);

  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<int> len(1, 4), part(1, 4);
  int round_trips = 0;
  for (int trial = 0; trial < 20; ++trial) {
    std::vector<int> parts(static_cast<std::size_t>(len(rng)));
    for (auto& p : parts) p = part(rng);
    std::sort(parts.rbegin(), parts.rend());
    const Partition pi(parts);
    std::vector<Complex> a, b;
    for (std::size_t p = 0; p < pi.length(); ++p) a.push_back(normal_complex(rng));
    for (int i = 0; i < pi.total(); ++i) b.push_back(normal_complex(rng));
    if (fission_graph(kpartite_type(pi, a, b)) == kpartite_graph(pi)) ++round_trips;
  }
  s.expect_equal("kpartite.round_trips", round_trips, 20);

  std::uniform_int_distribution<std::int64_t> entry(0, 3);
  std::uniform_int_distribution<std::size_t> node(0, 4);
  int invariant = 0, involutive = 0;
  for (int trial = 0; trial < 100; ++trial) {
    const Graph g = random_graph(rng, 5);
    DimVector d(5);
    for (auto& v : d) v = entry(rng);
    d[node(rng)] += 1;
    const std::vector<Complex> lambda(5, Complex{});
    const std::size_t i = node(rng);
    const Reflected once = weyl_reflect(g, d, lambda, i);
    if (weyl_reflect(g, once.dims, once.lambda, i).dims == d) ++involutive;
    const bool zero = std::all_of(once.dims.begin(), once.dims.end(), [](auto v) { return v == 0; });
    if (zero || quiver_dim(g, once.dims) == quiver_dim(g, d)) ++invariant;
  }
  s.expect_equal("weyl.invariant", invariant, 100);
  s.expect_equal("weyl.involutive", involutive, 100);

  const double trace_tol = s.tol("moment_map.trace", 1e-10);
  const double equiv_tol = s.tol("moment_map.equivariance", 1e-9);
  double trace_err = 0.0, equiv_err = 0.0;
  std::uniform_int_distribution<std::size_t> nodes(1, 5);
  for (int trial = 0; trial < 50; ++trial) {
    const Graph g = random_graph(rng, nodes(rng));
    DimVector d(g.size());
    for (auto& v : d) v = entry(rng);
    const GraphRep rep = random_rep(g, d, derive_seed(seed, static_cast<std::uint64_t>(trial)));
    const auto mu = moment_map(rep);
    Complex total{};
    for (const auto& m : mu) total += m.trace();
    trace_err = std::max(trace_err, std::abs(total));
    std::vector<ComplexMatrix> group;
    for (auto di : d) {
      ComplexMatrix h = ComplexMatrix::Identity(di, di);
      for (Eigen::Index k = 0; k < h.size(); ++k) h(k) += normal_complex(rng, 0.3);
      group.push_back(h);
    }
    const auto moved = moment_map(act(group, rep));
    for (std::size_t i = 0; i < d.size(); ++i) {
      if (d[i] == 0) continue;
      const ComplexMatrix want = group[i] * mu[i] * group[i].inverse();
      equiv_err = std::max(equiv_err, max_abs(moved[i] - want) / std::max(1.0, max_abs(want)));
    }
  }
  s.check("moment_map.trace_sum", trace_err, trace_tol);
  s.check("moment_map.equivariance", equiv_err, equiv_tol);
  summary = {{"orbit_dim", orbit}, {"kpartite_round_trips", round_trips}, {"weyl_invariant", invariant}};
}

void surfaces(Session& s, json& summary) {
  const std::uint64_t seed = kSurfaceSeed + s.seed();
  BettiTolerances tol;
  tol.constraint = s.tol("betti.constraint", 1e-9);
  const double fit_tol = s.tol("betti.fit", 1e-7);
  const double spread_tol = s.tol("betti.seed_spread", 1e-6);
  tol.fit = std::numeric_limits<double>::infinity();  // judged below, not thrown

  const std::array<std::array<Complex, 4>, 5> traces{{
      {0.0, 0.0, 0.0, 0.0},
      {Complex(0.3, 0.1), Complex(-0.7, 0.2), Complex(1.1, -0.4), Complex(0.5, 0.5)},
      {1.0, -1.0, 0.5, Complex(0.0, 1.5)},
      {Complex(3.0, 0.2), Complex(0.1, -2.5), Complex(-1.2, 0.0), Complex(0.8, 0.8)},
      {Complex(1.9, 0.01), Complex(-1.9, 0.01), Complex(0.2, 0.2), Complex(2.5, -1.0)},
  }};
  json fkv = json::array();
  double residual = 0.0, spread = 0.0, constraint = 0.0;
  for (const auto& t : traces) {
    const SurfaceRun a = run_fkv(t, 40, seed, 24, tol);
    const SurfaceRun b = run_fkv(t, 40, seed + 1, 24, tol);
    residual = std::max({residual, a.fit.validation_residual, b.fit.validation_residual});
    constraint = std::max({constraint, a.max_constraint_residual, b.max_constraint_residual});
    for (std::size_t i = 0; i < 4; ++i) {
      spread = std::max(spread, std::abs(a.fit.coefficients[i] - b.fit.coefficients[i]));
    }
    fkv.push_back(io::to_json(a.fit.coefficients));
  }
  s.check("fkv.constraint", constraint, tol.constraint);
  s.check("fkv.validation_residual", residual, fit_tol);
  s.check("fkv.seed_spread", spread, spread_tol);

  const Complex q0(1.7, -0.4);
  double fn_relation = 0.0, fn_residual = 0.0, fn_spread = 0.0;
  std::vector<Complex> ds;
  for (std::uint64_t k = 0; k < 5; ++k) {
    const SurfaceRun run = run_fn(q0, 12, seed + k, 20, tol);
    fn_relation = std::max(fn_relation, run.max_constraint_residual);
    fn_residual = std::max(fn_residual, run.fit.validation_residual);
    ds.push_back(run.fit.coefficients[0]);
  }
  for (const auto& d : ds) fn_spread = std::max(fn_spread, std::abs(d - ds[0]));
  s.check("fn.relation", fn_relation, tol.constraint);
  s.check("fn.validation_residual", fn_residual, fit_tol);
  s.check("fn.seed_spread", fn_spread, spread_tol);
  summary = {{"fkv_coefficients", fkv}, {"fn_q0", io::to_json(q0)}, {"fn_d", io::to_json(ds[0])}};
}

void spectral(Session& s, json& summary) {
  std::mt19937_64 rng(kSpectralSeed + s.seed());
  const double bracket_tol = s.tol("spectral.bracket", 1e-6);
  const double control_min = s.tol("spectral.control_min", 1e-3);
  const double drift_tol = s.tol("spectral.drift", 1e-6);
  const double abelian_tol = s.tol("monodromy.abelian", 1e-8);
  const double product_tol = s.tol("monodromy.product", 1e-6);
  const double class_tol = s.tol("monodromy.class", 1e-5);
  const double schlesinger_tol = s.tol("schlesinger.trace_drift", 1e-5);

  std::uniform_int_distribution<std::size_t> pick_n(2, 3), pick_m(1, 3);
  double bracket = 0.0;
  for (int config = 0; config < 10; ++config) {
    const std::size_t n = pick_n(rng);
    const std::size_t m = pick_m(rng);
    bracket = std::max(bracket, max_abs(invariant_brackets(random_fuchsian(rng, n, m, false))));
  }
  s.check("spectral.max_bracket", bracket, bracket_tol);

  const RationalMatrix probe_at = random_fuchsian(rng, 2, 3, false);
  const ScalarFunction probe = [](const RationalMatrix& x) { return x.poles()[0].parts[0](0, 1); };
  double control = 0.0;
  for (std::size_t i = 0; i < spectral_invariants(probe_at).values.size(); ++i) {
    control = std::max(control, std::abs(lie_poisson_bracket(probe_at, invariant_function(probe_at, i), probe)));
  }
  s.check("spectral.negative_control", control, control_min, Relation::AtLeast);

  // Order-1 coefficient of tr(A^2)/2 at the first pole: not a Casimir.
  const FlowResult flow = isospectral_flow(probe_at, 3, 1.0, 1000, 1e-5, drift_tol);
  s.check("spectral.flow_drift", flow.max_invariant_drift, drift_tol);

  ComplexMatrix lambda = ComplexMatrix::Zero(2, 2);
  lambda(0, 0) = Complex(0.3, 0.1);
  lambda(1, 1) = Complex(-0.45, 0.2);
  const MonodromyTuple ab = monodromy(RationalMatrix::fuchsian({0.0}, {lambda}));
  ComplexMatrix want = ComplexMatrix::Zero(2, 2);
  for (Eigen::Index i = 0; i < 2; ++i) want(i, i) = std::exp(Complex(0.0, 2.0 * std::numbers::pi) * lambda(i, i));
  s.check("monodromy.abelian", max_abs(ab.matrices[0] - want), abelian_tol);

  double product = 0.0, klass = 0.0;
  for (int trial = 0; trial < 5; ++trial) {
    const RationalMatrix a = random_nonresonant(rng);
    const MonodromyTuple m = monodromy(a);
    product = std::max(product, m.product_residual);
    klass = std::max(klass, monodromy_class_mismatch(a, m));
  }
  s.check("monodromy.product", product, product_tol);
  s.check("monodromy.class", klass, class_tol);

  const Complex c(3.0, 2.0);
  std::vector<ComplexMatrix> residues;
  for (int i = 0; i < 3; ++i) residues.push_back(random_traceless(rng, 2, 0.35));
  const RationalMatrix pvi = move_infinity(RationalMatrix::fuchsian({0.0, 0.3, 1.0}, residues), c);
  const MonodromyTuple before = monodromy(pvi);
  MonodromyOptions fixed;
  fixed.base = before.base;
  fixed.ordering = before.order;
  std::vector<Complex> path;
  for (int k = 1; k <= 10; ++k) path.push_back(1.0 / (Complex(0.3 + 0.005 * k, 0.0) - c));
  const MonodromyTuple after = monodromy(schlesinger_flow(pvi, 1, path), fixed);
  double drift = 0.0;
  for (std::size_t i = 0; i < before.matrices.size(); ++i) {
    for (std::size_t j = i; j < before.matrices.size(); ++j) {
      const Complex tb = i == j ? before.matrices[i].trace() : (before.matrices[i] * before.matrices[j]).trace();
      const Complex ta = i == j ? after.matrices[i].trace() : (after.matrices[i] * after.matrices[j]).trace();
      drift = std::max(drift, std::abs(ta - tb));
    }
  }
  s.check("schlesinger.trace_drift", drift, schlesinger_tol);
  summary = {{"max_bracket", bracket}, {"negative_control", control}, {"flow_drift", flow.max_invariant_drift}};
}

}  // namespace

const std::vector<std::string>& suite_names() {
  static const std::vector<std::string> names{"dimensions", "surfaces", "spectral", "all"};
  return names;
}

void reproduce(const std::string& suite, Session& session) {
  json& outputs = session.report().outputs;
  if (suite == "dimensions" || suite == "all") dimensions(session, outputs["dimensions"]);
  if (suite == "surfaces" || suite == "all") surfaces(session, outputs["surfaces"]);
  if (suite == "spectral" || suite == "all") spectral(session, outputs["spectral"]);
}

}  // namespace wildmoduli::cli
