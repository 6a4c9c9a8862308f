#include <gtest/gtest.h>

#include <complex>
#include <fstream>
#include <sstream>
#include <string>
#include <vector>

#include <nlohmann/json.hpp>

#include "app.hpp"

namespace {

using nlohmann::json;

const std::string kFixtures = WILDMODULI_FIXTURE_DIR;

std::string fixture(const std::string& name) { return kFixtures + "/" + name; }

struct Result {
  int code = -1;
  std::string out, err;
  json output() const { return json::parse(out); }
};

Result run(std::vector<std::string> args) {
  args.insert(args.begin(), "wildmoduli");
  std::vector<const char*> argv;
  for (const auto& a : args) argv.push_back(a.c_str());
  std::ostringstream out, err;
  Result r;
  r.code = wildmoduli::cli::run(static_cast<int>(argv.size()), argv.data(), out, err);
  r.out = out.str();
  r.err = err.str();
  return r;
}

json read_json(const std::string& path) {
  std::ifstream in(path);
  return json::parse(in);
}

std::string temp_path(const std::string& name) { return ::testing::TempDir() + name; }

TEST(Cli, KpartiteGraph) {
  const Result r = run({"graph", "kpartite", "--partition", "2,2,1"});
  ASSERT_EQ(r.code, 0) << r.err;
  EXPECT_EQ(r.output()["nodes"], 5);
  EXPECT_EQ(r.output()["edges"], 8);
}

TEST(Cli, BadPartitionIsInputError) {
  EXPECT_EQ(run({"graph", "kpartite", "--partition", "1,2"}).code, 2);
  EXPECT_EQ(run({"graph", "kpartite", "--partition", ""}).code, 2);
  EXPECT_EQ(run({"graph", "kpartite"}).code, 2);
}

TEST(Cli, FissionGraphOfPainleveII) {
  const Result r = run({"graph", "fission", "--type", fixture("painleve_ii_type.json")});
  ASSERT_EQ(r.code, 0) << r.err;
  EXPECT_EQ(r.output()["nodes"], 2);
  EXPECT_EQ(r.output()["edges"], 2);
}

TEST(Cli, SupernovaLegs) {
  const Result r = run({"graph", "legs", "--graph", fixture("a1tilde.json"), "--legs", "1,2"});
  ASSERT_EQ(r.code, 0) << r.err;
  EXPECT_EQ(r.output()["nodes"], 5);
  EXPECT_EQ(r.output()["edges"], 5);
}

TEST(Cli, QuiverDimensions) {
  Result r = run({"quiver", "dim", "--graph", fixture("d4tilde.json"), "--dims", "2,1,1,1,1"});
  ASSERT_EQ(r.code, 0) << r.err;
  EXPECT_EQ(r.output()["quiver_dim"], 2);
  r = run({"quiver", "dim", "--graph", fixture("a1tilde.json"), "--dims", "1,1"});
  EXPECT_EQ(r.output()["quiver_dim"], 2);
}

TEST(Cli, MomentCheckPasses) {
  const Result r = run({"quiver", "moment-check", "--graph", fixture("d4tilde.json"), "--dims", "2,1,1,1,1",
                        "--reps", "10", "--seed", "3"});
  EXPECT_EQ(r.code, 0) << r.err;
}

TEST(Cli, SchemaErrorsCarryJsonPointer) {
  const std::string path = temp_path("bad_graph.json");
  {
    std::ofstream f(path);
    f << R"({"nodes": ["a", "b"], "adj": [[0, 1], [1, "x"]]})";
  }
  const Result r = run({"quiver", "dim", "--graph", path, "--dims", "1,1"});
  EXPECT_EQ(r.code, 2);
  EXPECT_NE(r.err.find("/adj/1/1"), std::string::npos) << r.err;
}

TEST(Cli, OrbitAndMstarDimensions) {
  Result r = run({"orbit", "dim", "--curve", fixture("painleve_ii_curve.json")});
  ASSERT_EQ(r.code, 0) << r.err;
  EXPECT_EQ(r.output()["orbit_dim"], 8);
  r = run({"orbit", "mstar-dim", "--curve", fixture("painleve_ii_curve.json")});
  EXPECT_EQ(r.output()["mstar_dim"], 2);
  r = run({"orbit", "mstar-dim", "--curve", fixture("four_poles_curve.json")});
  EXPECT_EQ(r.output()["mstar_dim"], 2);
  EXPECT_EQ(run({"orbit", "mstar-dim", "--curve", fixture("four_poles_curve.json"), "--group", "XY3"}).code, 2);
}

TEST(Cli, BettiDimensions) {
  Result r = run({"betti", "dim", "--class-dims", "6,6,6,12", "--group", "G2"});
  ASSERT_EQ(r.code, 0) << r.err;
  EXPECT_EQ(r.output()["dim"], 2);
  r = run({"betti", "dim", "--stokes", "3", "--group", "SL2"});
  EXPECT_EQ(r.output()["dim"], 2);
  EXPECT_EQ(run({"betti", "dim", "--stokes", "3", "--class-dims", "2"}).code, 2);
}

TEST(Cli, FkvCoefficientsMatchTraceFormula) {
  const Result r = run({"betti", "fkv", "--traces", "0.3+0.1i,-0.7+0.2i,1.1-0.4i,0.5+0.5i", "--seed", "4"});
  ASSERT_EQ(r.code, 0) << r.err;
  using C = std::complex<double>;
  const C p1(0.3, 0.1), p2(-0.7, 0.2), p3(1.1, -0.4), p4(0.5, 0.5);
  const json out = r.output();
  const json& c = out["fit"]["coefficients"];
  const C a(c[0][0].get<double>(), c[0][1].get<double>());
  EXPECT_LT(std::abs(a + (p1 * p2 + p3 * p4)), 1e-8);
}

TEST(Cli, ComplexTokenErrors) {
  EXPECT_EQ(run({"betti", "fn", "--q0", "abc"}).code, 2);
  EXPECT_EQ(run({"betti", "fkv", "--traces", "1,2,3"}).code, 2);
}

TEST(Cli, FailingCheckIsNamed) {
  const Result r = run({"betti", "fkv", "--traces", "0,0,0,0", "--tol", "betti.fit=1e-30"});
  EXPECT_EQ(r.code, 1);
  EXPECT_NE(r.err.find("fkv.validation_residual"), std::string::npos) << r.err;
}

TEST(Cli, BadToleranceIsInputError) {
  EXPECT_EQ(run({"betti", "fkv", "--traces", "0,0,0,0", "--tol", "betti.fit=-1"}).code, 2);
}

TEST(Cli, SpectralCommands) {
  const std::string garnier = fixture("garnier.json");
  Result r = run({"spectral", "invariants", "--matrix", garnier});
  ASSERT_EQ(r.code, 0) << r.err;
  EXPECT_EQ(r.output()["values"].size(), 9u);
  EXPECT_EQ(run({"spectral", "bracket", "--matrix", garnier}).code, 0);
  EXPECT_EQ(run({"spectral", "bracket", "--matrix", garnier, "--pair", "3,5"}).code, 0);
  EXPECT_EQ(run({"spectral", "bracket", "--matrix", garnier, "--pair", "3,99"}).code, 2);
  EXPECT_EQ(run({"spectral", "flow", "--matrix", garnier, "--hamiltonian", "3", "--steps", "200"}).code, 0);
  r = run({"spectral", "monodromy", "--matrix", garnier, "--report", temp_path("mono.json")});
  ASSERT_EQ(r.code, 0) << r.err;
  const json report = read_json(temp_path("mono.json"));
  std::vector<std::string> names;
  for (const auto& c : report["checks"]) names.push_back(c["name"]);
  EXPECT_EQ(names, (std::vector<std::string>{"monodromy.product", "monodromy.class"}));
}

TEST(Cli, SchlesingerKeepsMonodromy) {
  const Result r = run({"spectral", "schlesinger", "--matrix", fixture("pvi.json"), "--pole", "1", "--to", "0.35"});
  ASSERT_EQ(r.code, 0) << r.err;
  EXPECT_LT(r.output()["monodromy_trace_drift"].get<double>(), 1e-5);
}

TEST(Cli, ReproduceSuites) {
  for (const std::string suite : {"dimensions", "surfaces"}) {
    const std::string path = temp_path("repro_" + suite + ".json");
    const Result r = run({"reproduce", suite, "--report", path});
    EXPECT_EQ(r.code, 0) << suite << ": " << r.err;
    const json report = read_json(path);
    EXPECT_TRUE(report["passed"].get<bool>());
    EXPECT_FALSE(report["checks"].empty());
  }
  EXPECT_EQ(run({"reproduce", "nonsense"}).code, 2);
}

TEST(Cli, ReportIsReproducible) {
  const std::vector<std::string> args{"betti", "fn", "--q0", "2+0.5i", "--seed", "9", "--tol", "betti.fit=1e-6"};
  auto report = [&](const std::string& name) {
    std::vector<std::string> a = args;
    a.push_back("--report");
    a.push_back(temp_path(name));
    EXPECT_EQ(run(a).code, 0);
    json j = read_json(temp_path(name));
    j.erase("wall_time_s");
    return j;
  };
  const json a = report("rep_a.json"), b = report("rep_b.json");
  EXPECT_EQ(a.dump(), b.dump());
  EXPECT_EQ(a["seed"], 9);
  EXPECT_EQ(a["tolerances"]["betti.fit"], 1e-6);
  // Every check's threshold is one of the echoed tolerances.
  for (const auto& c : a["checks"]) {
    bool echoed = false;
    for (const auto& [name, value] : a["tolerances"].items()) echoed = echoed || value == c["threshold"];
    EXPECT_TRUE(echoed) << c.dump();
  }
}

TEST(Cli, OutWritesFile) {
  const std::string path = temp_path("kpartite_out.json");
  const Result r = run({"graph", "kpartite", "--partition", "3,1", "--out", path});
  ASSERT_EQ(r.code, 0);
  EXPECT_TRUE(r.out.empty());
  EXPECT_EQ(read_json(path)["edges"], 3);
}

TEST(Cli, RegressionSnapshots) {
  const json snaps = read_json(fixture("snapshots.json"));
  ASSERT_FALSE(snaps["snapshots"].empty());
  for (const auto& s : snaps["snapshots"]) {
    const Result r = run(s["command"].get<std::vector<std::string>>());
    ASSERT_EQ(r.code, 0) << s["provenance"];
    const json got = r.output().at(json::json_pointer(s["path"].get<std::string>()));
    const json& want = s["expected"];
    const double tol = s["tolerance"];
    // Flattened comparison of nested [re, im] arrays.
    std::vector<double> g, w;
    auto flatten = [](const json& j, std::vector<double>& into, auto&& self) -> void {
      if (j.is_number()) {
        into.push_back(j.get<double>());
        return;
      }
      for (const auto& e : j) self(e, into, self);
    };
    flatten(got, g, flatten);
    flatten(want, w, flatten);
    ASSERT_EQ(g.size(), w.size()) << s["name"];
    for (std::size_t i = 0; i < g.size(); ++i) EXPECT_NEAR(g[i], w[i], tol) << s["name"] << " entry " << i;
  }
}

TEST(Cli, HelpExitsCleanly) {
  const Result r = run({"--help"});
  EXPECT_EQ(r.code, 0);
  EXPECT_NE(r.out.find("reproduce"), std::string::npos);
}

}  // namespace
