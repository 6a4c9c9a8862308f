#pragma once

// Irregular types, very good orbit points dQ + Lambda dz/z, orbit dimensions
// by stabilizer rank, and dimension bookkeeping for spaces of rational
// matrices with fixed polar orbits.

#include <optional>
#include <string>
#include <vector>

#include "wildmoduli/jetcore.hpp"

namespace wildmoduli {

enum class GroupFamily { GL, SL, Custom };

/// Dimension data of the structure group. GL_n and SL_n are fully supported;
/// `custom` carries raw dimensions for bookkeeping formulas only.
struct GroupSpec {
  GroupFamily family = GroupFamily::GL;
  std::size_t n = 1;
  int dim = 1;
  int center_dim = 1;
  int torus_dim = 1;
  std::string name = "GL1";

  static GroupSpec gl(std::size_t n);
  static GroupSpec sl(std::size_t n);
  static GroupSpec custom(std::string name, int dim, int center_dim, int torus_dim);
  /// Parses "GL3", "SL2", ... (case-insensitive family prefix).
  static GroupSpec parse(const std::string& text);

  bool is_matrix_group() const noexcept { return family != GroupFamily::Custom; }
};

/// One eigenvalue block of an irregular type: q is a polynomial in t = 1/z
/// with zero constant term, occurring with multiplicity `mult`.
struct IrregularBlock {
  PolynomialC q;
  int mult = 1;
};

/// Q = sum_i A_i z^{-i} with diagonal A_i, grouped into eigenvalue blocks laid
/// out consecutively along the diagonal.
class IrregularType {
 public:
  IrregularType(std::size_t n, std::vector<IrregularBlock> blocks);

  /// Q = 0 as a single block of multiplicity n (tame case).
  static IrregularType tame(std::size_t n);

  std::size_t n() const noexcept { return n_; }
  const std::vector<IrregularBlock>& blocks() const noexcept { return blocks_; }
  /// max deg(q_i); 0 for the tame type.
  int degree() const noexcept;
  /// Pole order k of the connections dQ + Lambda dz/z, i.e. degree() + 1.
  std::size_t pole_order() const noexcept { return static_cast<std::size_t>(degree()) + 1; }
  /// Diagonal coefficient A_i of z^{-i} (i >= 1).
  ComplexMatrix coefficient(int i) const;

 private:
  std::size_t n_;
  std::vector<IrregularBlock> blocks_;
};

struct ResidueEntry {
  Complex value;
  int mult = 1;
};

/// Eigenvalues of the formal residue Lambda restricted to each block of Q.
struct ResidueData {
  std::vector<std::vector<ResidueEntry>> blocks;

  /// A single block with the given diagonal entries, each of multiplicity one.
  static ResidueData diagonal(const std::vector<Complex>& values);
  /// Zero residue on every block of `q`.
  static ResidueData zero_for(const IrregularType& q);
  /// Diagonal of Lambda in the block layout.
  ComplexVector diagonal_entries() const;
};

/// A marked point on P^1. `position` empty means z = infinity; data is always
/// supplied in the local coordinate at the point.
struct MarkedPoint {
  std::optional<Complex> position;
  std::size_t pole_order = 1;
  std::optional<IrregularType> type;
  ResidueData residues;
};

class CurveSpec {
 public:
  CurveSpec(int genus, std::vector<MarkedPoint> points);

  int genus() const noexcept { return genus_; }
  const std::vector<MarkedPoint>& points() const noexcept { return points_; }

 private:
  int genus_;
  std::vector<MarkedPoint> points_;
};

/// B = dQ + Lambda dz/z: B_1 = diag(Lambda), B_{i+1} = -i A_i.
PrincipalPart very_good_point(const IrregularType& q, const ResidueData& residues);
PrincipalPart very_good_point(const MarkedPoint& point);

struct RankOptions {
  double relative_threshold = 1e-8;
  double gap_factor = 1e3;
};

/// dim G_k - dim stab(B), from the numerical rank of X -> ad*_X B on g_k
/// (trace-free jets for SL). Throws ConditioningError when the smallest
/// retained singular value lies within gap_factor of the threshold.
int orbit_dim(const PrincipalPart& b, const GroupSpec& group, const RankOptions& options = {});

/// k (dim G - dim T): orbit dimension for regular semisimple leading term and
/// regular residue.
int generic_orbit_dim(std::size_t pole_order, const GroupSpec& group);

struct ModuliDimension {
  int value = 0;
  std::vector<int> orbit_dims;
  /// Negative formula value: the configuration is empty or non-generic.
  bool empty() const noexcept { return value < 0; }
};

/// sum_i orbit_dim(B_i) - 2 (dim G - dim Z).
ModuliDimension mstar_dim(const CurveSpec& curve, const GroupSpec& group,
                          const RankOptions& options = {});

}  // namespace wildmoduli
