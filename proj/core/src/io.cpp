#include "wildmoduli/io.hpp"

#include <cmath>
#include <fstream>

#include "wildmoduli/errors.hpp"

namespace wildmoduli::io {

namespace {

std::string child(const std::string& ptr, const std::string& key) { return ptr + "/" + key; }
std::string child(const std::string& ptr, std::size_t i) { return ptr + "/" + std::to_string(i); }

const json& field(const json& j, const std::string& ptr, const char* key) {
  if (!j.is_object()) throw InputError(ptr, "expected an object");
  const auto it = j.find(key);
  if (it == j.end()) throw InputError(ptr, std::string("missing field \"") + key + "\"");
  return *it;
}

const json& array(const json& j, const std::string& ptr) {
  if (!j.is_array()) throw InputError(ptr, "expected an array");
  return j;
}

double number(const json& j, const std::string& ptr) {
  if (!j.is_number()) throw InputError(ptr, "expected a number");
  const double v = j.get<double>();
  if (!std::isfinite(v)) throw InputError(ptr, "number is not finite");
  return v;
}

std::int64_t integer(const json& j, const std::string& ptr) {
  if (!j.is_number_integer()) throw InputError(ptr, "expected an integer");
  return j.get<std::int64_t>();
}

std::size_t size_value(const json& j, const std::string& ptr) {
  const auto v = integer(j, ptr);
  if (v < 0) throw InputError(ptr, "expected a nonnegative integer");
  return static_cast<std::size_t>(v);
}

// Domain validation failures inside a parsed object are reported at its pointer.
template <typename F>
auto construct(const std::string& ptr, F make) {
  try {
    return make();
  } catch (const InputError&) {
    throw;
  } catch (const Error& e) {
    throw InputError(ptr, e.what());
  }
}

std::vector<ComplexMatrix> matrix_list(const json& j, const std::string& ptr) {
  std::vector<ComplexMatrix> out;
  const json& arr = array(j, ptr);
  for (std::size_t i = 0; i < arr.size(); ++i) out.push_back(parse_matrix(arr[i], child(ptr, i)));
  return out;
}

json matrix_list_json(const std::vector<ComplexMatrix>& ms) {
  json out = json::array();
  for (const auto& m : ms) out.push_back(to_json(m));
  return out;
}

}  // namespace

// Writers ---------------------------------------------------------------------

json to_json(Complex z) { return json::array({z.real(), z.imag()}); }

json to_json(const ComplexMatrix& m) {
  json rows = json::array();
  for (Eigen::Index r = 0; r < m.rows(); ++r) {
    json row = json::array();
    for (Eigen::Index c = 0; c < m.cols(); ++c) row.push_back(to_json(m(r, c)));
    rows.push_back(std::move(row));
  }
  return rows;
}

json to_json(const std::vector<Complex>& values) {
  json out = json::array();
  for (const auto& v : values) out.push_back(to_json(v));
  return out;
}

json to_json(const Jet& j) { return {{"n", j.n()}, {"k", j.order()}, {"coeffs", matrix_list_json(j.coeffs())}}; }

json to_json(const PrincipalPart& b) {
  return {{"n", b.n()}, {"k", b.order()}, {"coeffs", matrix_list_json(b.coeffs())}};
}

json to_json(const IrregularType& q) {
  json blocks = json::array();
  for (const auto& b : q.blocks()) {
    // Drop the zero constant term: coeffs start at t^1.
    std::vector<Complex> c(b.q.coeffs().begin() + std::min<std::ptrdiff_t>(1, std::ssize(b.q.coeffs())),
                           b.q.coeffs().end());
    blocks.push_back({{"coeffs", to_json(c)}, {"mult", b.mult}});
  }
  return {{"n", q.n()}, {"blocks", blocks}};
}

json to_json(const ResidueData& r) {
  json blocks = json::array();
  for (const auto& block : r.blocks) {
    json entries = json::array();
    for (const auto& e : block) entries.push_back({{"value", to_json(e.value)}, {"mult", e.mult}});
    blocks.push_back(std::move(entries));
  }
  return blocks;
}

json to_json(const CurveSpec& c) {
  json points = json::array();
  for (const auto& p : c.points()) {
    json pt = {{"position", p.position ? to_json(*p.position) : json(nullptr)},
               {"pole_order", p.pole_order},
               {"residues", to_json(p.residues)}};
    pt["type"] = p.type ? to_json(*p.type) : json(nullptr);
    points.push_back(std::move(pt));
  }
  return {{"genus", c.genus()}, {"points", points}};
}

json to_json(const Graph& g) { return {{"nodes", g.nodes()}, {"adj", g.adjacency()}}; }

json to_json(const GraphRep& rep) {
  json maps = json::array();
  for (const auto& e : rep.edges()) {
    maps.push_back(to_json(e.x));
    maps.push_back(to_json(e.y));
  }
  return {{"graph", to_json(rep.graph())}, {"dims", rep.dims()}, {"maps", maps}};
}

json to_json(const RationalMatrix& a) {
  json poles = json::array();
  for (const auto& p : a.poles()) poles.push_back({{"a", to_json(p.position)}, {"parts", matrix_list_json(p.parts)}});
  return {{"n", a.n()}, {"poles", poles}, {"poly", matrix_list_json(a.poly())}};
}

json to_json(const CubicFit& fit) {
  return {{"coefficients", to_json(fit.coefficients)},
          {"fit_residual", fit.fit_residual},
          {"validation_residual", fit.validation_residual},
          {"fit_samples", fit.fit_samples},
          {"validation_samples", fit.validation_samples}};
}

// Readers ---------------------------------------------------------------------

Complex parse_complex(const json& j, const std::string& ptr) {
  if (j.is_number()) return {number(j, ptr), 0.0};
  if (!j.is_array() || j.size() != 2) throw InputError(ptr, "expected a complex number [re, im]");
  return {number(j[0], child(ptr, std::size_t{0})), number(j[1], child(ptr, std::size_t{1}))};
}

std::vector<Complex> parse_complex_list(const json& j, const std::string& ptr) {
  std::vector<Complex> out;
  const json& arr = array(j, ptr);
  for (std::size_t i = 0; i < arr.size(); ++i) out.push_back(parse_complex(arr[i], child(ptr, i)));
  return out;
}

ComplexMatrix parse_matrix(const json& j, const std::string& ptr) {
  const json& rows = array(j, ptr);
  if (rows.empty()) throw InputError(ptr, "matrix has no rows");
  const std::size_t cols = array(rows[0], child(ptr, std::size_t{0})).size();
  ComplexMatrix m(static_cast<Eigen::Index>(rows.size()), static_cast<Eigen::Index>(cols));
  for (std::size_t r = 0; r < rows.size(); ++r) {
    const std::string rp = child(ptr, r);
    const json& row = array(rows[r], rp);
    if (row.size() != cols) throw InputError(rp, "ragged matrix row");
    for (std::size_t c = 0; c < cols; ++c) {
      m(static_cast<Eigen::Index>(r), static_cast<Eigen::Index>(c)) = parse_complex(row[c], child(rp, c));
    }
  }
  return m;
}

Jet parse_jet(const json& j, const std::string& ptr) {
  const auto n = size_value(field(j, ptr, "n"), child(ptr, "n"));
  auto coeffs = matrix_list(field(j, ptr, "coeffs"), child(ptr, "coeffs"));
  if (j.contains("k") && size_value(j["k"], child(ptr, "k")) != coeffs.size()) {
    throw InputError(child(ptr, "k"), "k does not match the number of coefficients");
  }
  return construct(ptr, [&] { return Jet(n, std::move(coeffs)); });
}

PrincipalPart parse_principal_part(const json& j, const std::string& ptr) {
  const auto n = size_value(field(j, ptr, "n"), child(ptr, "n"));
  auto coeffs = matrix_list(field(j, ptr, "coeffs"), child(ptr, "coeffs"));
  if (j.contains("k") && size_value(j["k"], child(ptr, "k")) != coeffs.size()) {
    throw InputError(child(ptr, "k"), "k does not match the number of coefficients");
  }
  return construct(ptr, [&] { return PrincipalPart(n, std::move(coeffs)); });
}

IrregularType parse_irregular_type(const json& j, const std::string& ptr) {
  const auto n = size_value(field(j, ptr, "n"), child(ptr, "n"));
  const std::string bp = child(ptr, "blocks");
  const json& blocks = array(field(j, ptr, "blocks"), bp);
  if (blocks.empty()) return construct(ptr, [&] { return IrregularType::tame(n); });
  std::vector<IrregularBlock> out;
  for (std::size_t i = 0; i < blocks.size(); ++i) {
    const std::string p = child(bp, i);
    std::vector<Complex> c{Complex{}};
    for (const auto& z : parse_complex_list(field(blocks[i], p, "coeffs"), child(p, "coeffs"))) c.push_back(z);
    const auto mult = integer(field(blocks[i], p, "mult"), child(p, "mult"));
    out.push_back({PolynomialC(std::move(c)), static_cast<int>(mult)});
  }
  return construct(ptr, [&] { return IrregularType(n, std::move(out)); });
}

ResidueData parse_residues(const json& j, const std::string& ptr) {
  ResidueData out;
  const json& blocks = array(j, ptr);
  for (std::size_t b = 0; b < blocks.size(); ++b) {
    const std::string bp = child(ptr, b);
    const json& entries = array(blocks[b], bp);
    std::vector<ResidueEntry> block;
    for (std::size_t e = 0; e < entries.size(); ++e) {
      const std::string ep = child(bp, e);
      if (entries[e].is_object()) {
        const Complex v = parse_complex(field(entries[e], ep, "value"), child(ep, "value"));
        const auto mult = entries[e].contains("mult") ? integer(entries[e]["mult"], child(ep, "mult")) : 1;
        if (mult <= 0) throw InputError(child(ep, "mult"), "multiplicity must be positive");
        block.push_back({v, static_cast<int>(mult)});
      } else {
        block.push_back({parse_complex(entries[e], ep), 1});
      }
    }
    out.blocks.push_back(std::move(block));
  }
  return out;
}

CurveSpec parse_curve(const json& j, const std::string& ptr) {
  const auto genus = integer(field(j, ptr, "genus"), child(ptr, "genus"));
  const std::string pp = child(ptr, "points");
  const json& points = array(field(j, ptr, "points"), pp);
  std::vector<MarkedPoint> out;
  for (std::size_t i = 0; i < points.size(); ++i) {
    const std::string p = child(pp, i);
    const json& pt = points[i];
    MarkedPoint mp;
    const json& pos = field(pt, p, "position");
    if (!pos.is_null()) mp.position = parse_complex(pos, child(p, "position"));
    mp.pole_order = size_value(field(pt, p, "pole_order"), child(p, "pole_order"));
    if (pt.contains("type") && !pt["type"].is_null()) mp.type = parse_irregular_type(pt["type"], child(p, "type"));
    mp.residues = parse_residues(field(pt, p, "residues"), child(p, "residues"));
    out.push_back(std::move(mp));
  }
  return construct(ptr, [&] { return CurveSpec(static_cast<int>(genus), std::move(out)); });
}

Graph parse_graph(const json& j, const std::string& ptr) {
  const std::string np = child(ptr, "nodes");
  const json& nodes = array(field(j, ptr, "nodes"), np);
  std::vector<std::string> ids;
  for (std::size_t i = 0; i < nodes.size(); ++i) {
    if (nodes[i].is_string()) {
      ids.push_back(nodes[i].get<std::string>());
    } else if (nodes[i].is_number_integer()) {
      ids.push_back(std::to_string(nodes[i].get<std::int64_t>()));
    } else {
      throw InputError(child(np, i), "node id must be a string or integer");
    }
  }
  const std::string ap = child(ptr, "adj");
  const json& adj = array(field(j, ptr, "adj"), ap);
  if (adj.size() != ids.size()) throw InputError(ap, "adjacency must have one row per node");
  std::vector<std::vector<int>> rows;
  for (std::size_t r = 0; r < adj.size(); ++r) {
    const std::string rp = child(ap, r);
    const json& row = array(adj[r], rp);
    if (row.size() != ids.size()) throw InputError(rp, "adjacency row has the wrong length");
    std::vector<int> vals;
    for (std::size_t c = 0; c < row.size(); ++c) vals.push_back(static_cast<int>(integer(row[c], child(rp, c))));
    rows.push_back(std::move(vals));
  }
  return construct(ptr, [&] { return Graph(std::move(ids), std::move(rows)); });
}

GraphRep parse_graph_rep(const json& j, const std::string& ptr) {
  Graph g = parse_graph(field(j, ptr, "graph"), child(ptr, "graph"));
  const std::string dp = child(ptr, "dims");
  const json& dims = array(field(j, ptr, "dims"), dp);
  DimVector d;
  for (std::size_t i = 0; i < dims.size(); ++i) d.push_back(integer(dims[i], child(dp, i)));
  const std::string mp = child(ptr, "maps");
  const auto maps = matrix_list(field(j, ptr, "maps"), mp);
  const auto oriented = g.oriented_edges();
  if (maps.size() != 2 * oriented.size()) {
    throw InputError(mp, "expected " + std::to_string(2 * oriented.size()) + " matrices (x, y per edge)");
  }
  std::vector<EdgeMaps> edges;
  for (std::size_t e = 0; e < oriented.size(); ++e) {
    edges.push_back({oriented[e].first, oriented[e].second, maps[2 * e], maps[2 * e + 1]});
  }
  return construct(ptr, [&] { return GraphRep(std::move(g), std::move(d), std::move(edges)); });
}

RationalMatrix parse_rational_matrix(const json& j, const std::string& ptr) {
  const auto n = size_value(field(j, ptr, "n"), child(ptr, "n"));
  std::vector<Pole> poles;
  if (j.contains("poles")) {
    const std::string pp = child(ptr, "poles");
    const json& arr = array(j["poles"], pp);
    for (std::size_t i = 0; i < arr.size(); ++i) {
      const std::string p = child(pp, i);
      poles.push_back({parse_complex(field(arr[i], p, "a"), child(p, "a")),
                       matrix_list(field(arr[i], p, "parts"), child(p, "parts"))});
    }
  }
  std::vector<ComplexMatrix> poly;
  if (j.contains("poly")) poly = matrix_list(j["poly"], child(ptr, "poly"));
  return construct(ptr, [&] { return RationalMatrix(n, std::move(poles), std::move(poly)); });
}

json read_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw InputError("", "cannot open " + path);
  try {
    return json::parse(in);
  } catch (const json::parse_error& e) {
    throw InputError("", path + ": " + e.what());
  }
}

}  // namespace wildmoduli::io
