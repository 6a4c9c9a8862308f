#include "app.hpp"

#include <chrono>
#include <fstream>
#include <functional>
#include <iostream>
#include <limits>
#include <random>

#include <CLI11.hpp>

#include "reproduce.hpp"
#include "session.hpp"
#include "wildmoduli/betti.hpp"
#include "wildmoduli/errors.hpp"
#include "wildmoduli/graphs.hpp"
#include "wildmoduli/io.hpp"
#include "wildmoduli/irregular.hpp"
#include "wildmoduli/quiver.hpp"
#include "wildmoduli/spectral.hpp"

namespace wildmoduli::cli {

namespace {

double max_abs(const ComplexMatrix& m) { return m.size() == 0 ? 0.0 : m.cwiseAbs().maxCoeff(); }

/// Accepts "1.5", "-2i", "0.3+0.1i", "1e-3-4j".
Complex parse_complex_token(const std::string& raw, const std::string& where) {
  std::string s;
  for (char c : raw) {
    if (c != ' ') s.push_back(c);
  }
  auto number = [&](const std::string& text) -> double {
    if (text.empty() || text == "+") return 1.0;
    if (text == "-") return -1.0;
    std::size_t used = 0;
    double v = 0.0;
    try {
      v = std::stod(text, &used);
    } catch (const std::exception&) {
      used = 0;
    }
    if (used != text.size()) throw InputError(where, "cannot parse complex number '" + raw + "'");
    return v;
  };
  if (s.empty()) throw InputError(where, "empty complex number");
  if (s.back() != 'i' && s.back() != 'j') return {number(s), 0.0};
  s.pop_back();
  std::size_t split = std::string::npos;
  for (std::size_t k = s.size(); k-- > 1;) {
    if ((s[k] == '+' || s[k] == '-') && s[k - 1] != 'e' && s[k - 1] != 'E') {
      split = k;
      break;
    }
  }
  if (split == std::string::npos) return {0.0, number(s)};
  return {number(s.substr(0, split)), number(s.substr(split))};
}

std::vector<Complex> parse_complex_tokens(const std::vector<std::string>& tokens, const std::string& where) {
  std::vector<Complex> out;
  for (const auto& t : tokens) out.push_back(parse_complex_token(t, where));
  return out;
}

json complex_list_json(const std::vector<std::string>& tokens) { return json(tokens); }

json labels_json(const SpectralInvariants& inv) {
  json out = json::array();
  for (const auto& l : inv.labels) out.push_back({{"power", l.power}, {"pole", l.pole}, {"order", l.order}});
  return out;
}

/// Traces of M_i and M_i M_j: conjugation invariants of the monodromy tuple.
double trace_drift(const MonodromyTuple& a, const MonodromyTuple& b) {
  double drift = 0.0;
  for (std::size_t i = 0; i < a.matrices.size(); ++i) {
    drift = std::max(drift, std::abs(a.matrices[i].trace() - b.matrices[i].trace()));
    for (std::size_t j = i + 1; j < a.matrices.size(); ++j) {
      drift = std::max(drift,
                       std::abs((a.matrices[i] * a.matrices[j]).trace() - (b.matrices[i] * b.matrices[j]).trace()));
    }
  }
  return drift;
}

struct Options {
  // graph
  std::string type_file, graph_file;
  std::vector<int> partition, legs;
  // quiver
  std::vector<std::int64_t> dims;
  int reps = 50;
  // orbit
  std::string curve_file, principal_file, group = "SL2";
  std::size_t point = 0;
  // betti
  std::vector<std::string> traces;
  std::string q0 = "1";
  std::size_t samples = 40, validation = 24;
  int genus = 0;
  std::vector<int> class_dims, stokes;
  // spectral
  std::string matrix_file, target;
  std::size_t hamiltonian = 0, pole = 0;
  double time = 1.0;
  long steps = 1000;
  std::vector<std::size_t> pair;
  // reproduce
  std::string suite;
};

using Handler = std::function<void(Session&, const Options&)>;

void graph_fission(Session& s, const Options& o) {
  const Graph g = fission_graph(io::parse_irregular_type(s.load(o.type_file)));
  s.report().outputs = {{"graph", io::to_json(g)}, {"nodes", g.size()}, {"edges", g.edge_count()}};
}

void graph_kpartite(Session& s, const Options& o) {
  s.report().parameters = {{"partition", o.partition}};
  if (o.partition.empty()) throw InputError("--partition", "partition must be nonempty");
  Partition parts = [&] {
    try {
      return Partition(o.partition);
    } catch (const Error& e) {
      throw InputError("--partition", e.what());
    }
  }();
  const Graph g = kpartite_graph(parts);
  s.report().outputs = {{"graph", io::to_json(g)}, {"nodes", g.size()}, {"edges", g.edge_count()}};
}

void graph_legs(Session& s, const Options& o) {
  s.report().parameters = {{"legs", o.legs}};
  const Graph g = attach_legs(io::parse_graph(s.load(o.graph_file)), o.legs);
  s.report().outputs = {{"graph", io::to_json(g)}, {"nodes", g.size()}, {"edges", g.edge_count()}};
}

void quiver_dim_cmd(Session& s, const Options& o) {
  s.report().parameters = {{"dims", o.dims}};
  const Graph g = io::parse_graph(s.load(o.graph_file));
  s.report().outputs = {{"quiver_dim", quiver_dim(g, o.dims)}, {"rep_space_dim", rep_space_dim(g, o.dims)}};
}

void quiver_moment_check(Session& s, const Options& o) {
  s.report().parameters = {{"dims", o.dims}, {"reps", o.reps}};
  const Graph g = io::parse_graph(s.load(o.graph_file));
  const double trace_tol = s.tol("moment_map.trace", 1e-10);
  const double equiv_tol = s.tol("moment_map.equivariance", 1e-9);
  std::mt19937_64 rng(derive_seed(s.seed(), 0xfeed));
  std::normal_distribution<double> normal(0.0, 0.3);
  double trace_err = 0.0, equiv_err = 0.0;
  for (int k = 0; k < o.reps; ++k) {
    const GraphRep rep = random_rep(g, o.dims, derive_seed(s.seed(), static_cast<std::uint64_t>(k)));
    const auto mu = moment_map(rep);
    Complex total{};
    for (const auto& m : mu) total += m.trace();
    trace_err = std::max(trace_err, std::abs(total));
    std::vector<ComplexMatrix> group;
    for (auto d : o.dims) {
      ComplexMatrix h = ComplexMatrix::Identity(d, d);
      for (Eigen::Index e = 0; e < h.size(); ++e) h(e) += Complex(normal(rng), normal(rng));
      group.push_back(h);
    }
    const auto moved = moment_map(act(group, rep));
    for (std::size_t i = 0; i < o.dims.size(); ++i) {
      if (o.dims[i] == 0) continue;
      const ComplexMatrix want = group[i] * mu[i] * group[i].inverse();
      equiv_err = std::max(equiv_err, max_abs(moved[i] - want) / std::max(1.0, max_abs(want)));
    }
  }
  s.check("moment_map.trace_sum", trace_err, trace_tol);
  s.check("moment_map.equivariance", equiv_err, equiv_tol);
  s.report().outputs = {{"reps", o.reps}, {"max_trace_sum", trace_err}, {"max_equivariance_error", equiv_err}};
}

void orbit_dim_cmd(Session& s, const Options& o) {
  s.report().parameters = {{"group", o.group}, {"point", o.point}};
  const GroupSpec group = GroupSpec::parse(o.group);
  RankOptions rank;
  rank.relative_threshold = s.tol("rank.relative_threshold", rank.relative_threshold);
  PrincipalPart b = [&] {
    if (!o.principal_file.empty()) return io::parse_principal_part(s.load(o.principal_file));
    const CurveSpec curve = io::parse_curve(s.load(o.curve_file));
    if (o.point >= curve.points().size()) throw InputError("--point", "no marked point with that index");
    return very_good_point(curve.points()[o.point]);
  }();
  s.report().outputs = {{"orbit_dim", orbit_dim(b, group, rank)},
                        {"generic_orbit_dim", group.is_matrix_group() ? generic_orbit_dim(b.order(), group) : 0},
                        {"pole_order", b.order()}};
}

void orbit_mstar(Session& s, const Options& o) {
  s.report().parameters = {{"group", o.group}};
  const GroupSpec group = GroupSpec::parse(o.group);
  RankOptions rank;
  rank.relative_threshold = s.tol("rank.relative_threshold", rank.relative_threshold);
  const ModuliDimension d = mstar_dim(io::parse_curve(s.load(o.curve_file)), group, rank);
  s.report().outputs = {{"mstar_dim", d.value}, {"orbit_dims", d.orbit_dims}, {"empty", d.empty()}};
}

BettiTolerances betti_tolerances(Session& s, double& fit_tol) {
  BettiTolerances tol;
  tol.constraint = s.tol("betti.constraint", tol.constraint);
  fit_tol = s.tol("betti.fit", tol.fit);
  tol.fit = std::numeric_limits<double>::infinity();  // judged by the report check
  return tol;
}

void betti_fkv(Session& s, const Options& o) {
  s.report().parameters = {{"traces", complex_list_json(o.traces)}, {"samples", o.samples},
                           {"validation", o.validation}};
  const auto traces = parse_complex_tokens(o.traces, "--traces");
  if (traces.size() != 4) throw InputError("--traces", "expected four traces p1,p2,p3,p4");
  double fit_tol = 0.0;
  const BettiTolerances tol = betti_tolerances(s, fit_tol);
  const SurfaceRun run = run_fkv({traces[0], traces[1], traces[2], traces[3]}, o.samples, s.seed(), o.validation, tol);
  s.check("fkv.constraint", run.max_constraint_residual, tol.constraint);
  s.check("fkv.validation_residual", run.fit.validation_residual, fit_tol);
  s.report().outputs = {{"fit", io::to_json(run.fit)}, {"coefficient_names", {"a", "b", "c", "d"}}};
}

void betti_fn(Session& s, const Options& o) {
  s.report().parameters = {{"q0", o.q0}, {"samples", o.samples}, {"validation", o.validation}};
  const Complex q0 = parse_complex_token(o.q0, "--q0");
  double fit_tol = 0.0;
  const BettiTolerances tol = betti_tolerances(s, fit_tol);
  const SurfaceRun run = run_fn(q0, o.samples, s.seed(), o.validation, tol);
  s.check("fn.relation", run.max_constraint_residual, tol.constraint);
  s.check("fn.validation_residual", run.fit.validation_residual, fit_tol);
  s.report().outputs = {{"fit", io::to_json(run.fit)}, {"d", io::to_json(run.fit.coefficients[0])}};
}

void betti_dim(Session& s, const Options& o) {
  s.report().parameters = {{"genus", o.genus}, {"group", o.group}, {"class_dims", o.class_dims},
                           {"stokes", o.stokes}};
  const GroupSpec group = GroupSpec::parse(o.group);
  if (!o.class_dims.empty() && !o.stokes.empty()) {
    throw InputError("--stokes", "give either --class-dims (tame) or --stokes (wild), not both");
  }
  const ModuliDimension d =
      o.stokes.empty() ? tame_cv_dim(o.genus, o.class_dims, group) : wild_cv_dim(o.genus, o.stokes, group);
  s.report().outputs = {{"dim", d.value}, {"orbit_dims", d.orbit_dims}, {"empty", d.empty()}};
}

RationalMatrix load_matrix(Session& s, const Options& o) { return io::parse_rational_matrix(s.load(o.matrix_file)); }

void spectral_invariants_cmd(Session& s, const Options& o) {
  const SpectralInvariants inv = spectral_invariants(load_matrix(s, o));
  s.report().outputs = {{"values", io::to_json(inv.values)}, {"labels", labels_json(inv)}};
}

void spectral_bracket(Session& s, const Options& o) {
  s.report().parameters = {{"pair", o.pair}};
  const RationalMatrix a = load_matrix(s, o);
  const double h = s.tol("bracket.step", 1e-5);
  const double tol = s.tol("spectral.bracket", 1e-6);
  if (!o.pair.empty()) {
    if (o.pair.size() != 2) throw InputError("--pair", "expected two invariant indices");
    const std::size_t count = spectral_invariants(a).values.size();
    if (o.pair[0] >= count || o.pair[1] >= count) throw InputError("--pair", "invariant index out of range");
    const Complex v = lie_poisson_bracket(a, o.pair[0], o.pair[1], h);
    s.check("spectral.bracket", std::abs(v), tol);
    s.report().outputs = {{"bracket", io::to_json(v)}};
    return;
  }
  const ComplexMatrix b = invariant_brackets(a, h);
  s.check("spectral.max_bracket", max_abs(b), tol);
  s.report().outputs = {{"brackets", io::to_json(b)}, {"max_abs", max_abs(b)}};
}

void spectral_flow(Session& s, const Options& o) {
  s.report().parameters = {{"hamiltonian", o.hamiltonian}, {"time", o.time}, {"steps", o.steps}};
  const RationalMatrix a = load_matrix(s, o);
  if (o.hamiltonian >= spectral_invariants(a).values.size()) {
    throw InputError("--hamiltonian", "invariant index out of range");
  }
  const double h = s.tol("bracket.step", 1e-5);
  const double tol = s.tol("spectral.drift", 1e-6);
  const FlowResult r = isospectral_flow(a, o.hamiltonian, o.time, o.steps, h, tol);
  s.check("spectral.flow_drift", r.max_invariant_drift, tol);
  s.report().outputs = {{"matrix", io::to_json(r.matrix)}, {"max_invariant_drift", r.max_invariant_drift}};
}

void spectral_monodromy(Session& s, const Options& o) {
  const RationalMatrix a = load_matrix(s, o);
  MonodromyOptions opts;
  opts.tol = s.tol("ode.tol", opts.tol);
  const MonodromyTuple m = monodromy(a, opts);
  json out = {{"base", io::to_json(m.base)}, {"order", m.order}, {"product_residual", m.product_residual}};
  json mats = json::array();
  for (const auto& mt : m.matrices) mats.push_back(io::to_json(mt));
  out["matrices"] = mats;
  ComplexMatrix total = ComplexMatrix::Zero(static_cast<Eigen::Index>(a.n()), static_cast<Eigen::Index>(a.n()));
  for (const auto& p : a.poles()) total += p.parts[0];
  // The relation only holds when infinity is a regular point.
  if (max_abs(total) < 1e-12) s.check("monodromy.product", m.product_residual, s.tol("monodromy.product", 1e-6));
  try {
    const double mismatch = monodromy_class_mismatch(a, m);
    s.check("monodromy.class", mismatch, s.tol("monodromy.class", 1e-5));
    out["class_mismatch"] = mismatch;
  } catch (const PreconditionError& e) {
    out["class_mismatch"] = nullptr;
    out["class_check_skipped"] = e.what();
  }
  s.report().outputs = out;
}

void spectral_schlesinger(Session& s, const Options& o) {
  s.report().parameters = {{"pole", o.pole}, {"to", o.target}, {"steps", o.steps}};
  const RationalMatrix a = load_matrix(s, o);
  if (o.pole >= a.poles().size()) throw InputError("--pole", "pole index out of range");
  if (o.steps < 1) throw InputError("--steps", "need at least one step");
  const Complex target = parse_complex_token(o.target, "--to");
  SchlesingerOptions sopts;
  sopts.tol = s.tol("ode.tol", sopts.tol);
  const Complex from = a.poles()[o.pole].position;
  std::vector<Complex> path;
  for (long k = 1; k <= o.steps; ++k) path.push_back(from + (target - from) * (double(k) / double(o.steps)));
  const RationalMatrix moved = schlesinger_flow(a, o.pole, path, sopts);
  const MonodromyTuple before = monodromy(a);
  MonodromyOptions fixed;
  fixed.base = before.base;
  fixed.ordering = before.order;
  const double drift = trace_drift(before, monodromy(moved, fixed));
  s.check("schlesinger.trace_drift", drift, s.tol("schlesinger.trace_drift", 1e-5));
  s.report().outputs = {{"matrix", io::to_json(moved)}, {"monodromy_trace_drift", drift}};
}

void reproduce_cmd(Session& s, const Options& o) {
  s.report().parameters = {{"suite", o.suite}};
  reproduce(o.suite, s);
}

void write_json(const json& j, const std::string& path) {
  std::ofstream f(path);
  if (!f) throw InputError("", "cannot write '" + path + "'");
  f << j.dump(2) << '\n';
}

}  // namespace

int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"Dimension counts, character varieties and isomonodromy numerics for wild moduli spaces",
               "wildmoduli"};
  app.fallthrough();
  app.require_subcommand(1);
  app.set_version_flag("--version", WILDMODULI_VERSION);

  RunConfig config;
  std::vector<std::string> tol_args;
  std::string out_path, report_path;
  app.add_option("--seed", config.seed, "Base seed for every random draw")->capture_default_str();
  app.add_option("--tol", tol_args, "Tolerance override: NAME=VALUE, or a bare VALUE for all")->delimiter(',');
  app.add_option("--out", out_path, "Write command output JSON here instead of stdout");
  app.add_option("--report", report_path, "Write the full run report JSON here");

  Options o;
  Handler handler;
  auto command = [&](CLI::App* parent, const std::string& name, const std::string& help, Handler h) {
    CLI::App* sub = parent->add_subcommand(name, help);
    sub->callback([&handler, &config, sub, h] {
      handler = h;
      config.command = sub->get_parent()->get_name() + " " + sub->get_name();
    });
    return sub;
  };
  auto group = [&](const std::string& name, const std::string& help) {
    CLI::App* g = app.add_subcommand(name, help);
    g->require_subcommand(1);
    return g;
  };

  CLI::App* graph = group("graph", "Fission, complete k-partite and supernova graphs");
  command(graph, "fission", "Fission graph of an irregular type", graph_fission)
      ->add_option("--type", o.type_file, "Irregular type JSON")->required()->check(CLI::ExistingFile);
  command(graph, "kpartite", "Complete k-partite graph of a partition", graph_kpartite)
      ->add_option("--partition", o.partition, "Parts, e.g. 2,2,1")->required()->delimiter(',');
  CLI::App* legs = command(graph, "legs", "Attach type A legs to the nodes of a graph", graph_legs);
  legs->add_option("--graph", o.graph_file, "Graph JSON")->required()->check(CLI::ExistingFile);
  legs->add_option("--legs", o.legs, "Leg length per node")->required()->delimiter(',');

  CLI::App* quiver = group("quiver", "Quiver varieties of graphs");
  CLI::App* qdim = command(quiver, "dim", "Expected dimension of the quiver variety", quiver_dim_cmd);
  qdim->add_option("--graph", o.graph_file, "Graph JSON")->required()->check(CLI::ExistingFile);
  qdim->add_option("--dims", o.dims, "Dimension vector")->required()->delimiter(',');
  CLI::App* qmm = command(quiver, "moment-check", "Trace and equivariance checks of the moment map",
                          quiver_moment_check);
  qmm->add_option("--graph", o.graph_file, "Graph JSON")->required()->check(CLI::ExistingFile);
  qmm->add_option("--dims", o.dims, "Dimension vector")->required()->delimiter(',');
  qmm->add_option("--reps", o.reps, "Number of random representations")->capture_default_str();

  CLI::App* orbit = group("orbit", "Coadjoint orbits of polar parts");
  CLI::App* odim = command(orbit, "dim", "Orbit dimension of one marked point", orbit_dim_cmd);
  auto* src = odim->add_option("--curve", o.curve_file, "Curve JSON")->check(CLI::ExistingFile);
  odim->add_option("--principal-part", o.principal_file, "Principal part JSON")
      ->check(CLI::ExistingFile)
      ->excludes(src);
  odim->add_option("--point", o.point, "Marked point index in the curve")->capture_default_str();
  odim->add_option("--group", o.group, "GLn, SLn")->capture_default_str();
  CLI::App* mstar = command(orbit, "mstar-dim", "Dimension of the space of rational matrices", orbit_mstar);
  mstar->add_option("--curve", o.curve_file, "Curve JSON")->required()->check(CLI::ExistingFile);
  mstar->add_option("--group", o.group, "GLn, SLn")->capture_default_str();

  CLI::App* betti = group("betti", "Character varieties and Stokes data");
  CLI::App* fkv = command(betti, "fkv", "Sample the four-punctured sphere and fit its cubic surface", betti_fkv);
  fkv->add_option("--traces", o.traces, "Local traces p1,p2,p3,p4 (complex: 0.3+0.1i)")
      ->required()
      ->delimiter(',');
  fkv->add_option("--samples", o.samples, "Fit samples")->capture_default_str();
  fkv->add_option("--validation", o.validation, "Held-out samples")->capture_default_str();
  CLI::App* fn = command(betti, "fn", "Sample the rank-3 fission fibre and fit its cubic surface", betti_fn);
  fn->add_option("--q0", o.q0, "Formal monodromy parameter")->capture_default_str();
  fn->add_option("--samples", o.samples, "Fit samples")->capture_default_str();
  fn->add_option("--validation", o.validation, "Held-out samples")->capture_default_str();
  CLI::App* bdim = command(betti, "dim", "Dimension of a tame or wild character variety", betti_dim);
  bdim->add_option("--genus", o.genus, "Genus")->capture_default_str();
  bdim->add_option("--group", o.group, "GLn, SLn or G2")->capture_default_str();
  bdim->add_option("--class-dims", o.class_dims, "Conjugacy class dimensions (tame)")->delimiter(',');
  bdim->add_option("--stokes", o.stokes, "Stokes pair counts per pole (wild)")->delimiter(',');

  CLI::App* spec = group("spectral", "Spectral invariants, flows and monodromy of rational matrices");
  auto matrix_option = [&](CLI::App* c) {
    c->add_option("--matrix", o.matrix_file, "Rational matrix JSON")->required()->check(CLI::ExistingFile);
    return c;
  };
  matrix_option(command(spec, "invariants", "Coefficients of tr(A^p)/p", spectral_invariants_cmd));
  matrix_option(command(spec, "bracket", "Lie-Poisson brackets of spectral invariants", spectral_bracket))
      ->add_option("--pair", o.pair, "Two invariant indices; default is all pairs")
      ->delimiter(',');
  CLI::App* flow = matrix_option(command(spec, "flow", "Isospectral flow of one invariant", spectral_flow));
  flow->add_option("--hamiltonian", o.hamiltonian, "Invariant index")->capture_default_str();
  flow->add_option("--time", o.time, "Flow duration")->capture_default_str();
  flow->add_option("--steps", o.steps, "RK4 steps")->capture_default_str();
  matrix_option(command(spec, "monodromy", "Monodromy matrices around each pole", spectral_monodromy));
  CLI::App* sch = matrix_option(command(spec, "schlesinger", "Isomonodromic move of one pole", spectral_schlesinger));
  sch->add_option("--pole", o.pole, "Index of the moving pole")->capture_default_str();
  sch->add_option("--to", o.target, "Target position")->required();
  sch->add_option("--steps", o.steps, "Straight-line path segments")->default_val(10);

  CLI::App* repro = app.add_subcommand("reproduce", "Run a pinned-seed acceptance subset");
  repro->add_option("suite", o.suite, "dimensions, surfaces, spectral or all")
      ->required()
      ->check(CLI::IsMember(suite_names()));
  repro->callback([&] {
    handler = reproduce_cmd;
    config.command = "reproduce " + o.suite;
  });

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kOk : kInputError;
  }

  try {
    for (const auto& t : tol_args) {
      const auto eq = t.find('=');
      const std::string name = eq == std::string::npos ? "*" : t.substr(0, eq);
      const std::string value = eq == std::string::npos ? t : t.substr(eq + 1);
      std::size_t used = 0;
      double v = 0.0;
      try {
        v = std::stod(value, &used);
      } catch (const std::exception&) {
        used = 0;
      }
      if (used != value.size() || !(v > 0.0)) throw InputError("--tol", "bad tolerance '" + t + "'");
      config.tolerances[name] = v;
    }
    if (!out_path.empty()) config.out = out_path;
    if (!report_path.empty()) config.report = report_path;

    Session session(config);
    const auto start = std::chrono::steady_clock::now();
    handler(session, o);
    session.finish(std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count());
    const Report& report = session.report();

    if (config.out) {
      write_json(report.outputs, *config.out);
    } else {
      out << report.outputs.dump(2) << '\n';
    }
    if (config.report) write_json(report.to_json(), *config.report);
    for (const auto& c : report.checks) {
      if (!c.passed()) err << "check failed: " << c.name << " value=" << c.value << " threshold=" << c.threshold << '\n';
    }
    return report.passed() ? kOk : kCheckFailed;
  } catch (const InputError& e) {
    err << "input error: " << e.what() << '\n';
    return kInputError;
  } catch (const nlohmann::json::exception& e) {
    err << "input error: " << e.what() << '\n';
    return kInputError;
  } catch (const Error& e) {
    err << "error: " << e.what() << '\n';
    return kDomainError;
  } catch (const std::exception& e) {
    err << "internal error: " << e.what() << '\n';
    return kDomainError;
  }
}

}  // namespace wildmoduli::cli
