#pragma once

// JSON encodings. Complex numbers are [re, im]; matrices are row-major
// nested arrays of [re, im]. Parse errors carry the JSON pointer of the
// offending value.

#include <string>

#include <nlohmann/json.hpp>

#include "wildmoduli/betti.hpp"
#include "wildmoduli/graphs.hpp"
#include "wildmoduli/irregular.hpp"
#include "wildmoduli/jetcore.hpp"
#include "wildmoduli/quiver.hpp"
#include "wildmoduli/spectral.hpp"

namespace wildmoduli::io {

using nlohmann::json;

json to_json(Complex z);
json to_json(const ComplexMatrix& m);
json to_json(const Jet& j);
json to_json(const PrincipalPart& b);
json to_json(const IrregularType& q);
json to_json(const ResidueData& r);
json to_json(const CurveSpec& c);
json to_json(const Graph& g);
json to_json(const GraphRep& rep);
json to_json(const RationalMatrix& a);
json to_json(const CubicFit& fit);
json to_json(const std::vector<Complex>& values);

// `ptr` is the JSON pointer of `j` inside the enclosing document.
Complex parse_complex(const json& j, const std::string& ptr = "");
ComplexMatrix parse_matrix(const json& j, const std::string& ptr = "");
Jet parse_jet(const json& j, const std::string& ptr = "");
PrincipalPart parse_principal_part(const json& j, const std::string& ptr = "");
IrregularType parse_irregular_type(const json& j, const std::string& ptr = "");
ResidueData parse_residues(const json& j, const std::string& ptr = "");
CurveSpec parse_curve(const json& j, const std::string& ptr = "");
Graph parse_graph(const json& j, const std::string& ptr = "");
GraphRep parse_graph_rep(const json& j, const std::string& ptr = "");
RationalMatrix parse_rational_matrix(const json& j, const std::string& ptr = "");
std::vector<Complex> parse_complex_list(const json& j, const std::string& ptr = "");

/// Reads and parses a file; syntax errors become InputError at "".
json read_file(const std::string& path);

}  // namespace wildmoduli::io
