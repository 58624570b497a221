#include <gtest/gtest.h>

#include "lefcorr/complex_torus.hpp"
#include "lefcorr/errors.hpp"
#include "lefcorr/rng.hpp"
#include "oracles.hpp"

using namespace lefcorr;
using namespace lefcorr::ctorus;

namespace {

ExactScalar g(long re, long im) { return ExactScalar::gaussian(re, im); }

ComplexTorusCorrespondence gaussian_corr(ExactScalar a, ExactScalar b, ExactScalar c = ExactScalar()) {
  return ComplexTorusCorrespondence(LatticeSpec::gaussian(), std::move(a), std::move(b), std::move(c));
}

// sum over N(a - b) fixed points of 1 / (1 - a / b), by grid search for the
// points and direct evaluation of the weight.
ExactScalar brute_force_local(const ComplexTorusCorrespondence& corr) {
  const auto& lattice = corr.lattice();
  const IntMatrix t = lattice.multiplication_matrix(corr.a() - corr.b());
  const auto c = lattice.coordinates(corr.offset());
  const Integer det = abs(determinant(t));
  const long q = det.get_si() * c[0].get_den().get_si() * c[1].get_den().get_si();
  const auto points = oracle::grid_solutions(t, {c[0], c[1]}, q);
  ExactScalar sum = corr.a().is_gaussian() ? ExactScalar::gaussian(0) : ExactScalar();
  for (std::size_t i = 0; i < points.size(); ++i) sum += ExactScalar(1L) / (ExactScalar(1L) - corr.a() / corr.b());
  return sum;
}

}  // namespace

TEST(Lattice, GenericRejectsLowerHalfPlane) {
  EXPECT_THROW(LatticeSpec::generic(g(0, -1)), InvalidArgument);
  EXPECT_THROW(LatticeSpec::generic(ExactScalar(2L)), InvalidArgument);
  EXPECT_NO_THROW(LatticeSpec::generic(ExactScalar::gaussian(Rational(1, 3), Rational(7, 5))));
}

TEST(Lattice, CoordinatesRoundTrip) {
  const auto lattice = LatticeSpec::generic(ExactScalar::gaussian(Rational(1, 2), 2));
  const ExactScalar z = ExactScalar::gaussian(Rational(3, 4), Rational(-5, 3));
  const auto uv = lattice.coordinates(z);
  EXPECT_EQ(lattice.point(uv[0], uv[1]), z);
}

TEST(Lattice, MultiplicationMatrix) {
  const auto lattice = LatticeSpec::gaussian();
  EXPECT_EQ(lattice.multiplication_matrix(g(1, 1)), (IntMatrix{{1, -1}, {1, 1}}));
  EXPECT_EQ(determinant(lattice.multiplication_matrix(g(2, 3))), 13);
  EXPECT_THROW(lattice.multiplication_matrix(ExactScalar(Rational(1, 2))), MultiplierNotInRing);
  const auto generic = LatticeSpec::generic(ExactScalar::gaussian(Rational(1, 3), 2));
  EXPECT_TRUE(generic.admits(ExactScalar(3L)));
  EXPECT_FALSE(generic.admits(g(0, 1)));
  EXPECT_THROW(generic.multiplication_matrix(g(0, 1)), MultiplierNotInRing);
}

TEST(ComplexTorus, ValidateDegrees) {
  const auto degrees = validate(gaussian_corr(g(2, 1), g(1, 1)));
  EXPECT_EQ(degrees.first, 2);
  EXPECT_EQ(degrees.second, 5);
  EXPECT_THROW(validate(gaussian_corr(g(0, 0), g(1, 0))), NotACovering);
}

TEST(ComplexTorus, GlobalExamples) {
  EXPECT_EQ(holo_lefschetz_global(gaussian_corr(g(1, 1), g(1, 0))), g(0, 1));
  EXPECT_EQ(holo_lefschetz_global(hecke_like(3)), g(6, 0));
  EXPECT_EQ(holo_lefschetz_global(gaussian_corr(g(2, 0), g(1, 0))), g(-1, 0));
}

TEST(ComplexTorus, FixedPointsExample) {
  const auto points = fixed_points(gaussian_corr(g(1, 1), g(1, 0)));
  ASSERT_EQ(points.size(), 1U);
  EXPECT_EQ(points[0].location, g(0, 0));
  EXPECT_EQ(points[0].jacobian, g(1, 1));
  EXPECT_EQ(points[0].weight, g(0, 1));
  EXPECT_THROW(fixed_points(gaussian_corr(g(2, 1), g(2, 1))), NonTransversal);
}

TEST(ComplexTorus, LocalSumMatchesBruteForce) {
  auto rng = TrialRng::substream(41, 0);
  for (int trial = 0; trial < 60; ++trial) {
    const ExactScalar a = g(rng.uniform_int(-3, 3), rng.uniform_int(-3, 3));
    const ExactScalar b = g(rng.uniform_int(-3, 3), rng.uniform_int(-3, 3));
    if (a.is_zero() || b.is_zero() || a == b) continue;
    const auto corr = gaussian_corr(a, b, ExactScalar::gaussian(rng.unit_fraction(3), rng.unit_fraction(3)));
    EXPECT_EQ(conjecture1_local_sum(corr), brute_force_local(corr));
    EXPECT_EQ(Integer(fixed_points(corr).size()), (a - b).norm());
  }
}

TEST(ComplexTorus, GenericLatticeAgreement) {
  const auto lattice = LatticeSpec::generic(ExactScalar::gaussian(Rational(1, 5), Rational(3, 2)));
  for (long a : {-4L, 2L, 7L}) {
    for (long b : {-3L, 1L, 5L}) {
      const ComplexTorusCorrespondence corr(lattice, ExactScalar(a), ExactScalar(b),
                                            lattice.point(Rational(1, 3), Rational(1, 4)));
      const auto report = verify_conjecture1(corr);
      EXPECT_TRUE(report.match) << a << " " << b;
      EXPECT_EQ(conjecture1_local_sum(corr), brute_force_local(corr));
    }
  }
}

TEST(ComplexTorus, OffsetIndependence) {
  const auto base = verify_conjecture1(gaussian_corr(g(3, 1), g(1, -1)));
  const auto shifted = verify_conjecture1(gaussian_corr(g(3, 1), g(1, -1), ExactScalar::gaussian(Rational(2, 7), Rational(1, 3))));
  EXPECT_EQ(base.global, shifted.global);
  EXPECT_EQ(base.local, shifted.local);
  EXPECT_EQ(base.fixed_point_count, shifted.fixed_point_count);
}

TEST(ComplexTorus, DegreesMultiplyUnderComposition) {
  const auto corr = gaussian_corr(g(2, 1), g(1, 1), ExactScalar::gaussian(Rational(1, 2)));
  const auto square = self_composite(corr);
  const auto d1 = validate(corr);
  const auto d2 = validate(square);
  EXPECT_EQ(d2.first, d1.first * d1.first);
  EXPECT_EQ(d2.second, d1.second * d1.second);
  EXPECT_TRUE(verify_conjecture1(square).match);
}

TEST(Hecke, GlobalAndPointCount) {
  for (long n = 2; n <= 12; ++n) {
    const auto corr = hecke_like(n);
    const auto report = verify_conjecture1(corr);
    EXPECT_TRUE(report.match);
    EXPECT_EQ(holo_lefschetz_global(corr), ExactScalar::gaussian(n * n - n));
    EXPECT_EQ(report.fixed_point_count, static_cast<std::uint64_t>((n - 1) * (n - 1)));
  }
  EXPECT_THROW(hecke_like(1), InvalidArgument);
}

TEST(Hecke, ReportSerialization) {
  const auto report = verify_conjecture1(hecke_like(5));
  EXPECT_EQ(report.global, "20+0*i");
  EXPECT_EQ(report.local, "20+0*i");
  EXPECT_EQ(report.fixed_point_count, 16U);
}

TEST(ComplexTorus, IntegerMultiplierExamples) {
  const auto generic = LatticeSpec::generic(ExactScalar::gaussian(Rational(1, 4), 1));
  for (const auto& lattice : {LatticeSpec::gaussian(), generic}) {
    const ComplexTorusCorrespondence doubling(lattice, ExactScalar(2L), ExactScalar(1L));
    EXPECT_EQ(holo_lefschetz_global(doubling), ExactScalar(-1L));
    EXPECT_EQ(conjecture1_local_sum(doubling), ExactScalar(-1L));
    auto points = fixed_points(doubling);
    ASSERT_EQ(points.size(), 1U);
    EXPECT_EQ(points[0].location, ExactScalar(0L));
    EXPECT_EQ(points[0].jacobian, ExactScalar(2L));
    EXPECT_EQ(points[0].weight, ExactScalar(-1L));

    points = fixed_points(ComplexTorusCorrespondence(lattice, ExactScalar(1L), ExactScalar(2L)));
    ASSERT_EQ(points.size(), 1U);
    EXPECT_EQ(points[0].jacobian, ExactScalar(Rational(1, 2)));
    EXPECT_EQ(points[0].weight, ExactScalar(2L));
  }
  EXPECT_THROW(validate(ComplexTorusCorrespondence(generic, ExactScalar(2L), ExactScalar(0L))), NotACovering);
  EXPECT_THROW(validate(ComplexTorusCorrespondence(generic, g(1, 1), ExactScalar(1L))), MultiplierNotInRing);
  EXPECT_THROW(fixed_points(ComplexTorusCorrespondence(generic, ExactScalar(1L), ExactScalar(1L))), NonTransversal);
}

TEST(Hecke, SpecificCases) {
  const auto degrees = validate(hecke_like(2));
  EXPECT_EQ(degrees.first, 4);
  EXPECT_EQ(degrees.second, 1);
  EXPECT_EQ(conjecture1_local_sum(hecke_like(3, ExactScalar::gaussian(Rational(1, 7), Rational(2, 3)))), g(6, 0));

  const auto corr = hecke_like(5, ExactScalar(Rational(1, 2)));
  const auto points = fixed_points(corr);
  ASSERT_EQ(points.size(), 16U);
  for (const auto& p : points) EXPECT_EQ(p.weight, ExactScalar::gaussian(Rational(5, 4)));
  EXPECT_EQ(holo_lefschetz_global(corr), g(20, 0));
}
