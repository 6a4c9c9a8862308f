#include "wildmoduli/irregular.hpp"

#include <algorithm>
#include <cctype>
#include <set>

#include "wildmoduli/errors.hpp"

namespace wildmoduli {

// GroupSpec -----------------------------------------------------------------

GroupSpec GroupSpec::gl(std::size_t n) {
  const int d = static_cast<int>(n * n);
  return {GroupFamily::GL, n, d, 1, static_cast<int>(n), "GL" + std::to_string(n)};
}

GroupSpec GroupSpec::sl(std::size_t n) {
  if (n < 1) throw DimensionError("SL_n needs n >= 1");
  const int d = static_cast<int>(n * n) - 1;
  return {GroupFamily::SL, n, d, 0, static_cast<int>(n) - 1, "SL" + std::to_string(n)};
}

GroupSpec GroupSpec::custom(std::string name, int dim, int center_dim, int torus_dim) {
  if (dim < 0 || center_dim < 0 || torus_dim < 0 || center_dim > dim || torus_dim > dim) {
    throw DimensionError("custom group " + name + ": inconsistent dimensions");
  }
  return {GroupFamily::Custom, 0, dim, center_dim, torus_dim, std::move(name)};
}

GroupSpec GroupSpec::parse(const std::string& text) {
  std::string upper;
  for (char c : text) upper.push_back(static_cast<char>(std::toupper(static_cast<unsigned char>(c))));
  if (upper == "G2") return custom("G2", 14, 0, 2);
  if (upper.size() < 3) throw InputError("", "unknown group '" + text + "'");
  const std::string family = upper.substr(0, 2);
  std::size_t n = 0;
  try {
    std::size_t used = 0;
    n = static_cast<std::size_t>(std::stoul(upper.substr(2), &used));
    if (used != upper.size() - 2) throw std::invalid_argument("trailing");
  } catch (const std::exception&) {
    throw InputError("", "unknown group '" + text + "'");
  }
  if (n == 0) throw InputError("", "group rank must be positive: '" + text + "'");
  if (family == "GL") return gl(n);
  if (family == "SL") return sl(n);
  throw InputError("", "unknown group '" + text + "' (expected GLn, SLn or G2)");
}

// IrregularType ---------------------------------------------------------------

IrregularType::IrregularType(std::size_t n, std::vector<IrregularBlock> blocks)
    : n_(n), blocks_(std::move(blocks)) {
  if (blocks_.empty()) throw StructureError("irregular type needs at least one block");
  std::size_t total = 0;
  for (std::size_t i = 0; i < blocks_.size(); ++i) {
    const auto& b = blocks_[i];
    if (b.mult <= 0) throw StructureError("block multiplicities must be positive");
    if (b.q.coeff(0) != Complex{}) {
      throw StructureError("eigenvalue polynomial " + std::to_string(i) +
                           " has a nonzero constant term");
    }
    total += static_cast<std::size_t>(b.mult);
    for (std::size_t j = 0; j < i; ++j) {
      if (blocks_[j].q == b.q) {
        throw DistinctnessError("eigenvalue polynomials " + std::to_string(j) + " and " +
                                std::to_string(i) + " coincide");
      }
    }
  }
  if (total != n_) {
    throw StructureError("block multiplicities sum to " + std::to_string(total) +
                         ", expected rank " + std::to_string(n_));
  }
}

IrregularType IrregularType::tame(std::size_t n) {
  return IrregularType(n, {IrregularBlock{PolynomialC{}, static_cast<int>(n)}});
}

int IrregularType::degree() const noexcept {
  int d = 0;
  for (const auto& b : blocks_) d = std::max(d, b.q.degree());
  return d;
}

ComplexMatrix IrregularType::coefficient(int i) const {
  const auto sz = static_cast<Eigen::Index>(n_);
  ComplexMatrix a = ComplexMatrix::Zero(sz, sz);
  Eigen::Index pos = 0;
  for (const auto& b : blocks_) {
    for (int r = 0; r < b.mult; ++r, ++pos) a(pos, pos) = b.q.coeff(i);
  }
  return a;
}

// ResidueData -----------------------------------------------------------------

ResidueData ResidueData::diagonal(const std::vector<Complex>& values) {
  ResidueData r;
  r.blocks.emplace_back();
  for (auto v : values) r.blocks.back().push_back({v, 1});
  return r;
}

ResidueData ResidueData::zero_for(const IrregularType& q) {
  ResidueData r;
  for (const auto& b : q.blocks()) r.blocks.push_back({ResidueEntry{Complex{}, b.mult}});
  return r;
}

ComplexVector ResidueData::diagonal_entries() const {
  std::vector<Complex> values;
  for (const auto& block : blocks) {
    for (const auto& e : block) {
      for (int r = 0; r < e.mult; ++r) values.push_back(e.value);
    }
  }
  return Eigen::Map<const ComplexVector>(values.data(), static_cast<Eigen::Index>(values.size()));
}

// CurveSpec -------------------------------------------------------------------

CurveSpec::CurveSpec(int genus, std::vector<MarkedPoint> points)
    : genus_(genus), points_(std::move(points)) {
  if (genus_ != 0) throw UnsupportedError("only genus 0 curves are supported");
  bool seen_infinity = false;
  std::vector<Complex> finite;
  for (std::size_t i = 0; i < points_.size(); ++i) {
    const auto& p = points_[i];
    const std::string where = "marked point " + std::to_string(i);
    if (p.pole_order < 1) throw OrderError(where + ": pole order must be >= 1");
    if (p.type.has_value() != (p.pole_order > 1)) {
      throw StructureError(where + ": irregular type must be present iff pole order > 1");
    }
    if (p.type && p.type->pole_order() != p.pole_order) {
      throw OrderError(where + ": irregular type has pole order " +
                       std::to_string(p.type->pole_order()) + ", point declares " +
                       std::to_string(p.pole_order));
    }
    if (!p.position) {
      if (seen_infinity) throw DistinctnessError("infinity is marked twice");
      seen_infinity = true;
    } else {
      if (std::find(finite.begin(), finite.end(), *p.position) != finite.end()) {
        throw DistinctnessError(where + ": position repeats an earlier marked point");
      }
      finite.push_back(*p.position);
    }
  }
}

// Operations ------------------------------------------------------------------

PrincipalPart very_good_point(const IrregularType& q, const ResidueData& residues) {
  if (residues.blocks.size() != q.blocks().size()) {
    throw StructureError("residue data has " + std::to_string(residues.blocks.size()) +
                         " blocks, irregular type has " + std::to_string(q.blocks().size()));
  }
  for (std::size_t b = 0; b < q.blocks().size(); ++b) {
    int total = 0;
    for (const auto& e : residues.blocks[b]) {
      if (e.mult <= 0) throw StructureError("residue multiplicities must be positive");
      total += e.mult;
    }
    if (total != q.blocks()[b].mult) {
      throw StructureError("residue block " + std::to_string(b) + " has total multiplicity " +
                           std::to_string(total) + ", expected " +
                           std::to_string(q.blocks()[b].mult));
    }
  }
  const std::size_t k = q.pole_order();
  std::vector<ComplexMatrix> coeffs;
  coeffs.reserve(k);
  coeffs.emplace_back(residues.diagonal_entries().asDiagonal());
  // d(A_i z^{-i}) = -i A_i dz/z^{i+1}
  for (std::size_t i = 1; i < k; ++i) {
    coeffs.emplace_back(-static_cast<double>(i) * q.coefficient(static_cast<int>(i)));
  }
  return PrincipalPart(q.n(), std::move(coeffs));
}

PrincipalPart very_good_point(const MarkedPoint& point) {
  if (point.type) return very_good_point(*point.type, point.residues);
  ResidueData flat;
  flat.blocks.emplace_back();
  for (const auto& block : point.residues.blocks) {
    flat.blocks.back().insert(flat.blocks.back().end(), block.begin(), block.end());
  }
  const auto n = static_cast<std::size_t>(flat.diagonal_entries().size());
  if (n == 0) throw StructureError("tame marked point without residue data");
  return very_good_point(IrregularType::tame(n), flat);
}

namespace {

// Basis of gl_n, or of sl_n when trace_free.
std::vector<ComplexMatrix> lie_algebra_basis(std::size_t n, bool trace_free) {
  const auto sz = static_cast<Eigen::Index>(n);
  std::vector<ComplexMatrix> basis;
  for (Eigen::Index a = 0; a < sz; ++a) {
    for (Eigen::Index b = 0; b < sz; ++b) {
      if (a == b) continue;
      ComplexMatrix e = ComplexMatrix::Zero(sz, sz);
      e(a, b) = 1.0;
      basis.push_back(std::move(e));
    }
  }
  const Eigen::Index diag_count = trace_free ? sz - 1 : sz;
  for (Eigen::Index a = 0; a < diag_count; ++a) {
    ComplexMatrix h = ComplexMatrix::Zero(sz, sz);
    h(a, a) = 1.0;
    if (trace_free) h(a + 1, a + 1) = -1.0;
    basis.push_back(std::move(h));
  }
  return basis;
}

}  // namespace

int orbit_dim(const PrincipalPart& b, const GroupSpec& group, const RankOptions& options) {
  if (!group.is_matrix_group()) {
    throw UnsupportedError("orbit_dim needs GL_n or SL_n, got " + group.name);
  }
  if (group.n != b.n()) {
    throw DimensionError("principal part of rank " + std::to_string(b.n()) + " for group " +
                         group.name);
  }
  const std::size_t n = b.n();
  const std::size_t k = b.order();
  const auto basis = lie_algebra_basis(n, group.family == GroupFamily::SL);
  const auto n2 = static_cast<Eigen::Index>(n * n);
  const auto rows = static_cast<Eigen::Index>(k) * n2;
  const auto cols = static_cast<Eigen::Index>(k * basis.size());
  if (rows == 0 || cols == 0) return 0;
  ComplexMatrix map(rows, cols);

  Eigen::Index col = 0;
  for (std::size_t j = 0; j < k; ++j) {
    for (const auto& e : basis) {
      auto coeffs = Jet::zero(n, k).coeffs();
      coeffs[j] = e;
      const PrincipalPart image = coadjoint_action(Jet(n, std::move(coeffs)), b);
      for (std::size_t i = 1; i <= k; ++i) {
        map.col(col).segment(static_cast<Eigen::Index>(i - 1) * n2, n2) =
            image.coefficient(i).reshaped();
      }
      ++col;
    }
  }

  const Eigen::JacobiSVD<ComplexMatrix> svd(map);
  const auto& sv = svd.singularValues();
  if (sv.size() == 0 || sv(0) == 0.0) return 0;
  const double threshold = options.relative_threshold * sv(0);
  int rank = 0;
  while (rank < sv.size() && sv(rank) > threshold) ++rank;
  if (sv(rank - 1) < options.gap_factor * threshold) {
    throw ConditioningError("stabilizer rank is ill-conditioned: singular value " +
                            std::to_string(sv(rank - 1)) + " near threshold " +
                            std::to_string(threshold) + "; perturb the input");
  }
  return rank;
}

int generic_orbit_dim(std::size_t pole_order, const GroupSpec& group) {
  return static_cast<int>(pole_order) * (group.dim - group.torus_dim);
}

ModuliDimension mstar_dim(const CurveSpec& curve, const GroupSpec& group,
                          const RankOptions& options) {
  ModuliDimension out;
  int sum = 0;
  for (const auto& p : curve.points()) {
    const int d = orbit_dim(very_good_point(p), group, options);
    out.orbit_dims.push_back(d);
    sum += d;
  }
  out.value = sum - 2 * (group.dim - group.center_dim);
  return out;
}

}  // namespace wildmoduli
