#include <gtest/gtest.h>

#include <random>

#include "support.hpp"
#include "wildmoduli/betti.hpp"
#include "wildmoduli/errors.hpp"

namespace wildmoduli {
namespace {

using testing::max_abs;

const std::array<std::array<Complex, 4>, 5> kTraceVectors{{
    {0.0, 0.0, 0.0, 0.0},
    {Complex(0.3, 0.1), Complex(-0.7, 0.2), Complex(1.1, -0.4), Complex(0.5, 0.5)},
    {1.0, -1.0, 0.5, Complex(0.0, 1.5)},
    {Complex(3.0, 0.2), Complex(0.1, -2.5), Complex(-1.2, 0.0), Complex(0.8, 0.8)},
    {Complex(1.9, 0.01), Complex(-1.9, 0.01), Complex(0.2, 0.2), Complex(2.5, -1.0)},
}};

// Closed form for the fibre constant, derived once from the frozen coordinates.
Complex fn_constant(Complex q0) {
  const Complex w = std::sqrt(q0);
  return Complex(0.0, -1.0) * (w + 1.0 / w);
}

TEST(BettiDimensions, TameExamples) {
  EXPECT_EQ(tame_cv_dim(0, {6, 6, 6, 12}, GroupSpec::custom("G2", 14, 0, 2)).value, 2);
  EXPECT_EQ(tame_cv_dim(0, {2, 2, 2, 2}, GroupSpec::sl(2)).value, 2);
  EXPECT_EQ(tame_cv_dim(1, {}, GroupSpec::sl(2)).value, 0);
  EXPECT_THROW(tame_cv_dim(0, {-2}, GroupSpec::sl(2)), DimensionError);
}

TEST(BettiDimensions, WildExamples) {
  const ModuliDimension fn = wild_cv_dim(0, {3}, GroupSpec::sl(2));
  EXPECT_EQ(fn.orbit_dims, std::vector<int>{8});
  EXPECT_EQ(fn.value, 2);
  const ModuliDimension degenerate = wild_cv_dim(0, {1}, GroupSpec::gl(2));
  EXPECT_EQ(degenerate.orbit_dims, std::vector<int>{4});
  EXPECT_EQ(degenerate.value, -2);
  EXPECT_TRUE(degenerate.empty());
  EXPECT_THROW(wild_cv_dim(0, {0}, GroupSpec::sl(2)), DimensionError);
}

TEST(BettiDimensions, FibreParameterCount) {
  // 2r free entries, 3 relation equations, 1 torus direction.
  const int r = 3;
  EXPECT_EQ(2 * r - 3 - 1, wild_cv_dim(0, {r}, GroupSpec::sl(2)).value);
}

TEST(ConjClass, RegularityAndEigenvalue) {
  EXPECT_FALSE(ConjClassSL2(2.0).regular_semisimple());
  EXPECT_FALSE(ConjClassSL2(-2.0).regular_semisimple());
  const ConjClassSL2 c(Complex(0.7, 0.3));
  EXPECT_TRUE(c.regular_semisimple());
  const Complex mu = c.eigenvalue();
  EXPECT_LT(std::abs(mu + 1.0 / mu - c.trace()), 1e-14);
}

TEST(RelationTuple, Validation) {
  ComplexMatrix m = ComplexMatrix::Identity(2, 2);
  m(0, 1) = 1.0;
  EXPECT_THROW(RelationTuple({m}), PreconditionError);
  EXPECT_THROW(RelationTuple({2.0 * m, 0.5 * m.inverse()}), PreconditionError);
  EXPECT_NO_THROW(RelationTuple({m, m.inverse()}));
}

TEST(FkvSampler, ZeroTraces) {
  const RelationTuple t = sample_fkv_tuple({0.0, 0.0, 0.0, 0.0}, 1);
  EXPECT_LT(t.product_residual(), 1e-9);
  for (std::size_t i = 0; i < 4; ++i) EXPECT_LT(std::abs(t[i].trace()), 1e-9);
}

TEST(FkvSampler, RejectsNonRegularClass) {
  EXPECT_THROW(sample_fkv_tuple({2.0, 0.0, 0.0, 0.0}, 1), PreconditionError);
  EXPECT_THROW(sample_fkv_tuple({0.0, 0.0, -2.0, 0.0}, 1), PreconditionError);
}

TEST(FkvSampler, EverySampleSatisfiesContract) {
  int count = 0;
  for (const auto& traces : kTraceVectors) {
    for (std::uint64_t seed = 0; seed < 20; ++seed, ++count) {
      const RelationTuple t = sample_fkv_tuple(traces, seed);
      EXPECT_LT(t.product_residual(), 1e-9);
      for (std::size_t i = 0; i < 4; ++i) {
        EXPECT_LT(std::abs(t[i].trace() - traces[i]), 1e-9 * std::max(1.0, std::abs(traces[i])));
        EXPECT_LT(std::abs(t[i].determinant() - 1.0), 1e-10);
      }
    }
  }
  EXPECT_EQ(count, 100);
}

TEST(FkvCoords, InverseTupleGivesTraceTwo) {
  ComplexMatrix m1(2, 2), m3(2, 2);
  m1 << 2.0, 1.0, 1.0, 1.0;
  m3 << 1.0, Complex(0.0, 1.0), 0.0, 1.0;
  const RelationTuple t({m1, m1.inverse(), m3, m3.inverse()});
  EXPECT_LT(std::abs(fkv_coords(t)[0] - 2.0), 1e-14);
}

TEST(FkvCoords, ConjugationInvariant) {
  std::mt19937_64 rng(51);
  for (std::uint64_t seed = 0; seed < 10; ++seed) {
    const RelationTuple t = sample_fkv_tuple(kTraceVectors[1], seed);
    ComplexMatrix g = ComplexMatrix::Identity(2, 2) + testing::random_matrix(rng, 2, 0.4);
    g /= std::sqrt(g.determinant());
    std::vector<ComplexMatrix> moved;
    for (const auto& m : t.matrices()) moved.push_back(g * m * g.inverse());
    const TracePoint a = fkv_coords(t), b = fkv_coords(RelationTuple(moved));
    for (std::size_t i = 0; i < 3; ++i) EXPECT_LT(std::abs(a[i] - b[i]), 1e-9 * std::max(1.0, std::abs(a[i])));
  }
}

TEST(FkvFit, ResidualAndSeedIndependence) {
  for (const auto& traces : kTraceVectors) {
    const SurfaceRun a = run_fkv(traces, 40, 1, 24);
    const SurfaceRun b = run_fkv(traces, 40, 2, 24);
    EXPECT_LT(a.fit.validation_residual, 1e-7);
    EXPECT_EQ(a.fit.validation_samples, 24u);
    for (std::size_t i = 0; i < 4; ++i) {
      EXPECT_LT(std::abs(a.fit.coefficients[i] - b.fit.coefficients[i]), 1e-6) << "coefficient " << i;
    }
  }
}

TEST(FkvFit, RepeatedPointIsUnderdetermined) {
  const TracePoint p = fkv_coords(sample_fkv_tuple(kTraceVectors[0], 3));
  const std::vector<TracePoint> same(12, p);
  EXPECT_THROW(fit_fkv(same), UnderdeterminedError);
}

TEST(FkvFit, WrongSurfaceFailsFit) {
  std::mt19937_64 rng(52);
  std::vector<TracePoint> noise;
  for (int i = 0; i < 20; ++i) {
    noise.push_back({testing::random_complex(rng), testing::random_complex(rng), testing::random_complex(rng)});
  }
  EXPECT_THROW(fit_fkv(noise), FitError);
}

TEST(FissionFiber, RankOneForcesTrivialEntries) {
  const StokesFiberPoint pt = sample_fission_fiber(1, 1.0, 1);
  EXPECT_EQ(pt.s, (std::vector<Complex>{0.0, 0.0}));
  EXPECT_EQ(pt.relation_residual(), 0.0);
  EXPECT_THROW(sample_fission_fiber(1, 2.0, 1), SamplingError);
}

TEST(FissionFiber, Preconditions) {
  EXPECT_THROW(sample_fission_fiber(0, 1.0, 1), PreconditionError);
  EXPECT_THROW(sample_fission_fiber(3, 0.0, 1), PreconditionError);
}

TEST(FissionFiber, RelationHolds) {
  for (int r = 2; r <= 5; ++r) {
    for (std::uint64_t seed = 1; seed <= 10; ++seed) {
      const StokesFiberPoint pt = sample_fission_fiber(r, Complex(1.7, -0.4), seed);
      EXPECT_LT(pt.relation_residual(), 1e-9) << "r=" << r << " seed=" << seed;
    }
  }
}

TEST(FissionFiber, TorusActionPreservesFibre) {
  const StokesFiberPoint pt = sample_fission_fiber(3, Complex(0.6, 0.9), 1);
  const StokesFiberPoint moved = torus_act(pt, Complex(1.3, -0.7));
  EXPECT_LT(moved.relation_residual(), 1e-9);
}

TEST(FnInvariants, TorusInvariant) {
  for (std::uint64_t seed = 1; seed <= 10; ++seed) {
    const StokesFiberPoint pt = sample_fission_fiber(3, Complex(0.6, 0.9), seed);
    const TracePoint a = fn_invariants(pt), b = fn_invariants(torus_act(pt, Complex(0.4, 1.1)));
    for (std::size_t i = 0; i < 3; ++i) EXPECT_LT(std::abs(a[i] - b[i]), 1e-10 * std::max(1.0, std::abs(a[i])));
  }
}

TEST(FnInvariants, OnlyRankThree) {
  EXPECT_THROW(fn_invariants(sample_fission_fiber(2, 1.5, 1)), UnsupportedError);
}

TEST(FnFit, SingleConstantAcrossSeeds) {
  const Complex q0(1.7, -0.4);
  std::vector<Complex> ds;
  for (std::uint64_t seed = 1; seed <= 10; ++seed) {
    const SurfaceRun run = run_fn(q0, 12, seed, 20);
    EXPECT_LT(run.max_constraint_residual, 1e-9);
    EXPECT_LT(run.fit.validation_residual, 1e-7);
    ds.push_back(run.fit.coefficients[0]);
  }
  for (const auto& d : ds) EXPECT_LT(std::abs(d - ds[0]), 1e-6);
  EXPECT_LT(std::abs(ds[0] - fn_constant(q0)), 1e-9);
}

TEST(FnFit, TabulatedAgainstClosedForm) {
  for (const Complex q0 : {Complex(2.0, 0.5), Complex(0.3, -1.2), Complex(-0.5, 0.1), Complex(5.0, 0.0)}) {
    const SurfaceRun run = run_fn(q0, 10, 7, 20);
    EXPECT_LT(std::abs(run.fit.coefficients[0] - fn_constant(q0)), 1e-8 * std::max(1.0, std::abs(fn_constant(q0))));
  }
}

TEST(FnFit, InverseFibreHasSameConstant) {
  const Complex q0(2.0, 0.5);
  const Complex d = run_fn(q0, 10, 3, 20).fit.coefficients[0];
  const Complex d_inv = run_fn(1.0 / q0, 10, 4, 20).fit.coefficients[0];
  EXPECT_LT(std::abs(d - d_inv), 1e-8);
}

TEST(FnFit, DegenerateSamples) {
  const TracePoint p = fn_invariants(sample_fission_fiber(3, 2.0, 1));
  const std::vector<TracePoint> same(8, p);
  EXPECT_THROW(fit_fn(same, 2.0), UnderdeterminedError);
}

TEST(DeriveSeed, DistinctStreams) {
  EXPECT_NE(derive_seed(1, 0), derive_seed(1, 1));
  EXPECT_NE(derive_seed(1, 0), derive_seed(2, 0));
  EXPECT_EQ(derive_seed(5, 3), derive_seed(5, 3));
}

}  // namespace
}  // namespace wildmoduli
