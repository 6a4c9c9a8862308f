#include <gtest/gtest.h>

#include <Eigen/LU>
#include <unsupported/Eigen/KroneckerProduct>

#include "support.hpp"
#include "wildmoduli/errors.hpp"
#include "wildmoduli/irregular.hpp"

namespace wildmoduli {
namespace {

using testing::max_abs;

// Painleve II at infinity in w = 1/z: q_{1,2} = +-(c3 t^3 + c2 t^2 + c1 t), t = 1/w.
IrregularType painleve_ii_type() {
  const PolynomialC q({0.0, Complex(0.4, 0.1), Complex(-0.3, 0.2), Complex(1.0, 0.5)});
  return IrregularType(2, {{q, 1}, {PolynomialC() - q, 1}});
}

ResidueData painleve_ii_residues() { return ResidueData{{{{Complex(0.35, -0.1), 1}}, {{Complex(-0.35, 0.1), 1}}}}; }

MarkedPoint simple_point(Complex position, std::vector<Complex> eigenvalues) {
  MarkedPoint p;
  p.position = position;
  p.residues = ResidueData::diagonal(eigenvalues);
  return p;
}

// Rank of X -> pp[X, B] on gl_n jets, assembled with Kronecker products.
int kernel_oracle_orbit_dim(const PrincipalPart& b) {
  const auto n = static_cast<Eigen::Index>(b.n());
  const auto k = static_cast<Eigen::Index>(b.order());
  const ComplexMatrix id = ComplexMatrix::Identity(n, n);
  const auto n2 = n * n;
  ComplexMatrix big = ComplexMatrix::Zero(k * n2, k * n2);
  // Output coefficient i (dz/z^i) receives [X_j, B_{i+j}].
  for (Eigen::Index i = 1; i <= k; ++i) {
    for (Eigen::Index j = 0; i + j <= k; ++j) {
      const ComplexMatrix& bij = b.coefficient(static_cast<std::size_t>(i + j));
      const ComplexMatrix op = Eigen::kroneckerProduct(bij.transpose(), id) - Eigen::kroneckerProduct(id, bij);
      big.block((i - 1) * n2, j * n2, n2, n2) = op;
    }
  }
  Eigen::FullPivLU<ComplexMatrix> lu(big);
  lu.setThreshold(1e-10);
  return static_cast<int>(lu.rank());
}

TEST(GroupSpec, Dimensions) {
  const auto gl3 = GroupSpec::gl(3), sl2 = GroupSpec::sl(2);
  EXPECT_EQ(gl3.dim, 9);
  EXPECT_EQ(gl3.center_dim, 1);
  EXPECT_EQ(gl3.torus_dim, 3);
  EXPECT_EQ(sl2.dim, 3);
  EXPECT_EQ(sl2.center_dim, 0);
  EXPECT_EQ(sl2.torus_dim, 1);
  EXPECT_EQ(GroupSpec::parse("sl4").dim, 15);
  EXPECT_EQ(GroupSpec::parse("G2").dim, 14);
  EXPECT_THROW(GroupSpec::parse("SO5"), InputError);
  EXPECT_THROW(GroupSpec::parse("GL0"), InputError);
}

TEST(IrregularType, Validation) {
  EXPECT_THROW(IrregularType(2, {}), StructureError);
  EXPECT_THROW(IrregularType(2, {{PolynomialC({1.0, 1.0}), 2}}), StructureError);
  EXPECT_THROW(IrregularType(3, {{PolynomialC({0.0, 1.0}), 2}}), StructureError);
  EXPECT_THROW(IrregularType(2, {{PolynomialC({0.0, 1.0}), 1}, {PolynomialC({0.0, 1.0}), 1}}), DistinctnessError);
  EXPECT_THROW(IrregularType(2, {{PolynomialC({0.0, 1.0}), 0}, {PolynomialC({0.0, 2.0}), 2}}), StructureError);
  const IrregularType q = painleve_ii_type();
  EXPECT_EQ(q.degree(), 3);
  EXPECT_EQ(q.pole_order(), 4u);
  EXPECT_EQ(IrregularType::tame(3).pole_order(), 1u);
}

TEST(VeryGoodPoint, TameCase) {
  const std::vector<Complex> lambda{Complex(0.5, 0.0), Complex(-1.0, 0.25)};
  const PrincipalPart b = very_good_point(IrregularType::tame(2), ResidueData::diagonal(lambda));
  ASSERT_EQ(b.order(), 1u);
  EXPECT_EQ(b.coefficient(1)(0, 0), lambda[0]);
  EXPECT_EQ(b.coefficient(1)(1, 1), lambda[1]);
  EXPECT_EQ(b.coefficient(1)(0, 1), Complex{});
}

TEST(VeryGoodPoint, DifferentiatesQ) {
  const Complex c(1.5, -0.5);
  const IrregularType q(2, {{PolynomialC({0.0, c}), 1}, {PolynomialC({0.0, -c}), 1}});
  const PrincipalPart b = very_good_point(q, ResidueData::zero_for(q));
  ASSERT_EQ(b.order(), 2u);
  EXPECT_LT(max_abs(b.coefficient(1)), 1e-15);
  ComplexMatrix want = ComplexMatrix::Zero(2, 2);
  want(0, 0) = -c;
  want(1, 1) = c;
  EXPECT_LT(max_abs(b.coefficient(2) - want), 1e-15);
}

TEST(VeryGoodPoint, PainleveIILeadingTermIsRegularSemisimple) {
  const PrincipalPart b = very_good_point(painleve_ii_type(), painleve_ii_residues());
  ASSERT_EQ(b.order(), 4u);
  const ComplexMatrix& b4 = b.coefficient(4);
  EXPECT_LT(std::abs(b4(0, 1)) + std::abs(b4(1, 0)), 1e-15);
  EXPECT_GT(std::abs(b4(0, 0) - b4(1, 1)), 1.0);
  // B_4 = -3 A_3.
  EXPECT_LT(std::abs(b4(0, 0) + 3.0 * Complex(1.0, 0.5)), 1e-14);
}

TEST(VeryGoodPoint, ResidueBlocksMustRefineQ) {
  const IrregularType q = painleve_ii_type();
  EXPECT_THROW(very_good_point(q, ResidueData::diagonal({1.0, -1.0})), StructureError);
  EXPECT_THROW(very_good_point(q, ResidueData{{{{1.0, 2}}, {{-1.0, 1}}}}), StructureError);
}

TEST(OrbitDim, TameRegularGL) {
  for (std::size_t n = 1; n <= 4; ++n) {
    std::vector<Complex> lambda;
    for (std::size_t i = 0; i < n; ++i) lambda.push_back(Complex(0.3 * double(i) + 0.1, 0.7 * double(i)));
    const PrincipalPart b = very_good_point(IrregularType::tame(n), ResidueData::diagonal(lambda));
    EXPECT_EQ(orbit_dim(b, GroupSpec::gl(n)), static_cast<int>(n * n - n));
  }
}

TEST(OrbitDim, PainleveIIIsEight) {
  const PrincipalPart b = very_good_point(painleve_ii_type(), painleve_ii_residues());
  EXPECT_EQ(orbit_dim(b, GroupSpec::sl(2)), 8);
}

TEST(OrbitDim, GL3SecondOrderAgainstKernelOracle) {
  const IrregularType q(3, {{PolynomialC({0.0, Complex(1.0, 0.2)}), 1},
                            {PolynomialC({0.0, Complex(-0.7, 0.5)}), 1},
                            {PolynomialC({0.0, Complex(0.1, -1.1)}), 1}});
  const PrincipalPart b = very_good_point(q, ResidueData{{{{0.31, 1}}, {{Complex(-0.2, 0.4), 1}}, {{0.77, 1}}}});
  EXPECT_EQ(kernel_oracle_orbit_dim(b), 12);
  EXPECT_EQ(orbit_dim(b, GroupSpec::gl(3)), 12);
}

TEST(OrbitDim, SizeMismatchAndCustomGroup) {
  const PrincipalPart b = very_good_point(painleve_ii_type(), painleve_ii_residues());
  EXPECT_THROW(orbit_dim(b, GroupSpec::gl(3)), DimensionError);
  EXPECT_THROW(orbit_dim(b, GroupSpec::custom("G2", 14, 0, 2)), UnsupportedError);
}

TEST(OrbitDim, NearlyDegenerateResidueIsFlagged) {
  // Gaps 1 and 1e-7: the small one sits between the threshold and the guard band.
  const PrincipalPart b = very_good_point(IrregularType::tame(3), ResidueData::diagonal({0.0, 1.0, 1.0 + 1e-7}));
  EXPECT_THROW(orbit_dim(b, GroupSpec::gl(3)), ConditioningError);
  // A single small gap sets the scale itself and is not ill-conditioned.
  const PrincipalPart c = very_good_point(IrregularType::tame(2), ResidueData::diagonal({1.0, 1.0 + 1e-6}));
  EXPECT_EQ(orbit_dim(c, GroupSpec::gl(2)), 2);
}

// Random very good point: n <= 3, pole order k <= 4, random block structure.
struct RandomPoint {
  PrincipalPart b;
  std::size_t n;
};

RandomPoint random_very_good_point(std::mt19937_64& rng) {
  std::uniform_int_distribution<std::size_t> pick_n(1, 3), pick_k(1, 4);
  const std::size_t n = pick_n(rng), k = pick_k(rng);
  std::vector<int> mults;
  std::size_t left = n;
  while (left > 0) {
    std::uniform_int_distribution<std::size_t> m(1, left);
    const std::size_t take = m(rng);
    mults.push_back(static_cast<int>(take));
    left -= take;
  }
  if (k == 1) mults = {static_cast<int>(n)};
  std::vector<IrregularBlock> blocks;
  ResidueData residues;
  for (int mult : mults) {
    std::vector<Complex> c{Complex{}};
    for (std::size_t d = 1; d < k; ++d) c.push_back(testing::random_complex(rng));
    blocks.push_back({PolynomialC(c), mult});
    // Residue eigenvalues on this block, possibly repeated.
    std::vector<ResidueEntry> entries;
    int rest = mult;
    while (rest > 0) {
      std::uniform_int_distribution<int> m(1, rest);
      const int take = m(rng);
      entries.push_back({testing::random_complex(rng), take});
      rest -= take;
    }
    residues.blocks.push_back(entries);
  }
  return {very_good_point(IrregularType(n, blocks), residues), n};
}

TEST(OrbitDim, AlwaysEven) {
  std::mt19937_64 rng(21);
  for (int trial = 0; trial < 50; ++trial) {
    const RandomPoint p = random_very_good_point(rng);
    const int gl = orbit_dim(p.b, GroupSpec::gl(p.n));
    EXPECT_EQ(gl % 2, 0) << "trial " << trial;
    EXPECT_GE(gl, 0);
    EXPECT_EQ(orbit_dim(p.b, GroupSpec::sl(p.n)), gl);
  }
}

TEST(OrbitDim, InvariantUnderJetGroupConjugation) {
  std::mt19937_64 rng(22);
  for (int trial = 0; trial < 20; ++trial) {
    const RandomPoint p = random_very_good_point(rng);
    const Jet g = jet_exp(testing::random_jet(rng, p.n, p.b.order(), 0.3));
    const PrincipalPart moved = group_coadjoint_action(g, p.b);
    EXPECT_EQ(orbit_dim(moved, GroupSpec::gl(p.n)), orbit_dim(p.b, GroupSpec::gl(p.n))) << "trial " << trial;
  }
}

TEST(OrbitDim, ClosedFormForRegularData) {
  std::mt19937_64 rng(23);
  for (std::size_t n = 1; n <= 3; ++n) {
    for (std::size_t k = 1; k <= 4; ++k) {
      std::vector<IrregularBlock> blocks;
      ResidueData residues;
      if (k == 1) {
        std::vector<Complex> lambda;
        for (std::size_t i = 0; i < n; ++i) lambda.push_back(testing::random_complex(rng));
        blocks.push_back({PolynomialC(), static_cast<int>(n)});
        residues = ResidueData::diagonal(lambda);
      } else {
        for (std::size_t i = 0; i < n; ++i) {
          std::vector<Complex> c{Complex{}};
          for (std::size_t d = 1; d < k; ++d) c.push_back(testing::random_complex(rng));
          blocks.push_back({PolynomialC(c), 1});
          residues.blocks.push_back({{testing::random_complex(rng), 1}});
        }
      }
      const PrincipalPart b = very_good_point(IrregularType(n, blocks), residues);
      for (const auto& g : {GroupSpec::gl(n), GroupSpec::sl(n)}) {
        EXPECT_EQ(orbit_dim(b, g), generic_orbit_dim(k, g)) << g.name << " k=" << k;
      }
      EXPECT_EQ(kernel_oracle_orbit_dim(b), generic_orbit_dim(k, GroupSpec::gl(n)));
    }
  }
}

TEST(CurveSpec, Validation) {
  EXPECT_THROW(CurveSpec(1, {simple_point(0.0, {1.0, -1.0})}), UnsupportedError);
  MarkedPoint missing_type;
  missing_type.pole_order = 3;
  missing_type.residues = ResidueData::diagonal({1.0, -1.0});
  EXPECT_THROW(CurveSpec(0, {missing_type}), StructureError);
  EXPECT_THROW(CurveSpec(0, {simple_point(1.0, {1.0}), simple_point(1.0, {2.0})}), DistinctnessError);
  MarkedPoint wrong_order;
  wrong_order.pole_order = 2;
  wrong_order.type = painleve_ii_type();
  wrong_order.residues = painleve_ii_residues();
  EXPECT_THROW(CurveSpec(0, {wrong_order}), OrderError);
}

TEST(MStarDim, PainleveII) {
  MarkedPoint infinity;
  infinity.pole_order = 4;
  infinity.type = painleve_ii_type();
  infinity.residues = painleve_ii_residues();
  const ModuliDimension d = mstar_dim(CurveSpec(0, {infinity}), GroupSpec::sl(2));
  EXPECT_EQ(d.value, 2);
  EXPECT_EQ(d.orbit_dims, std::vector<int>{8});
  EXPECT_FALSE(d.empty());
}

TEST(MStarDim, FourSimplePolesSL2) {
  std::vector<MarkedPoint> pts;
  const std::vector<Complex> where{0.0, 1.0, Complex(0.3, 0.4)};
  for (std::size_t i = 0; i < 3; ++i) pts.push_back(simple_point(where[i], {0.2 + 0.1 * double(i), -0.2 - 0.1 * double(i)}));
  MarkedPoint inf = simple_point(0.0, {0.45, -0.45});
  inf.position.reset();
  pts.push_back(inf);
  const ModuliDimension d = mstar_dim(CurveSpec(0, pts), GroupSpec::sl(2));
  EXPECT_EQ(d.value, 2);
  EXPECT_EQ(d.orbit_dims, (std::vector<int>{2, 2, 2, 2}));
}

TEST(MStarDim, AbelianSinglePole) {
  const ModuliDimension d = mstar_dim(CurveSpec(0, {simple_point(0.0, {0.5})}), GroupSpec::gl(1));
  EXPECT_EQ(d.value, 0);
}

TEST(MStarDim, NegativeMeansEmpty) {
  const ModuliDimension d = mstar_dim(CurveSpec(0, {simple_point(0.0, {0.5, -0.5})}), GroupSpec::sl(2));
  EXPECT_EQ(d.value, 2 - 6);
  EXPECT_TRUE(d.empty());
}

}  // namespace
}  // namespace wildmoduli
