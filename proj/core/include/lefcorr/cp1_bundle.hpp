#pragma once

#include <array>
#include <vector>

#include "lefcorr/matrix.hpp"
#include "lefcorr/report.hpp"
#include "lefcorr/scalar.hpp"

/// Moebius self-maps of CP^1 with their canonical lifting to O(d), d >= 0.
///
/// Conventions, fixed once for both sides of every check:
///   * the point map sends [v] to [g v];
///   * the lifting acts on sections, i.e. on binary forms P of degree d, by
///     P -> P o g, so H^0(CP^1, O(d)) carries the matrix of that
///     substitution in the monomial basis z0^{d-k} z1^k (row k holds the
///     image of the k-th monomial);
///   * at the fixed point given by the eigenvector of eigenvalue mu (the
///     other eigenvalue being nu) the differential is nu / mu and the fiber
///     map is mu^d.
///
/// In the diagonal model g = diag(mu1, mu2) this is z -> (mu2 / mu1) z with
/// weights mu1^d at 0 and mu2^d at infinity, matching the O(d) transition
/// s1(w) = w^d s0(1/w).
///
/// H^1(CP^1, O(d)) = 0 for d >= 0, so the alternating sum of traces
/// sum_{k>=0} (-1)^k tr H^k reduces to the H^0 trace. The sum is taken from
/// k = 0; a display of this sum starting at k = 1 would drop exactly that
/// term. Negative d is rejected.
namespace lefcorr::cp1 {

/// Absolute tolerance for floating-mode comparisons.
inline constexpr double kFloatTolerance = 1e-9;

template <class T>
class BasicBundleSelfMap {
 public:
  /// Throws ShapeError unless g is 2x2, NotACovering if det g = 0 and
  /// InvalidArgument for d < 0.
  BasicBundleSelfMap(Matrix<T> g, int d);

  const Matrix<T>& g() const { return g_; }
  unsigned degree() const { return degree_; }

 private:
  Matrix<T> g_;
  unsigned degree_;
};

using BundleSelfMap = BasicBundleSelfMap<ExactScalar>;
using FloatBundleSelfMap = BasicBundleSelfMap<Complex>;

FloatBundleSelfMap to_floating(const BundleSelfMap& m);

template <class T>
struct BasicBundleFixedPoint {
  T eigenvalue;
  T other_eigenvalue;
  std::array<T, 2> direction;  // eigenvector, first nonzero coordinate scaled to 1
  T differential;              // other / own eigenvalue
  T phi_weight;                // own eigenvalue ^ d
};

using BundleFixedPoint = BasicBundleFixedPoint<ExactScalar>;
using FloatBundleFixedPoint = BasicBundleFixedPoint<Complex>;

/// (d+1) x (d+1) matrix of P -> P o g, by binomial expansion of
/// (g00 z0 + g01 z1)^{d-k} (g10 z0 + g11 z1)^k. Never looks at eigenvalues.
template <class T>
Matrix<T> cohomology_action(const BasicBundleSelfMap<T>& m);

/// Trace of cohomology_action.
template <class T>
T lefschetz_global(const BasicBundleSelfMap<T>& m);

/// Two fixed points sorted by eigenvalue (real part, then imaginary).
/// Throws DegenerateEigenvalues for a repeated eigenvalue and
/// IrrationalEigenvalues if the eigenvalues are not in Q(i).
std::vector<BundleFixedPoint> fixed_point_data(const BundleSelfMap& m);
/// Throws DegenerateEigenvalues when the eigenvalue gap is below 1e-12
/// relative to their size.
std::vector<FloatBundleFixedPoint> fixed_point_data(const FloatBundleSelfMap& m);

/// Sum of phi_weight / (1 - differential).
template <class T>
T local_sum(const std::vector<BasicBundleFixedPoint<T>>& points);

/// Exact comparison when the eigenvalues lie in Q(i); otherwise falls back
/// to floating point (with a warning) and compares within kFloatTolerance.
VerificationReport verify_ab_4_12(const BundleSelfMap& m);
VerificationReport verify_ab_4_12(const FloatBundleSelfMap& m);

/// A correspondence on CP^1 given as the union of the graphs of several
/// self-maps sharing one bundle degree.
class GraphUnionCorrespondence {
 public:
  /// Throws InvalidArgument for an empty list or mixed degrees.
  explicit GraphUnionCorrespondence(std::vector<BundleSelfMap> branches);

  const std::vector<BundleSelfMap>& branches() const { return branches_; }
  unsigned degree() const { return branches_.front().degree(); }

 private:
  std::vector<BundleSelfMap> branches_;
};

/// global: trace of the summed branch actions; local: sum of the branch
/// local sums.
VerificationReport verify_conjecture2_union(const GraphUnionCorrespondence& u);

}  // namespace lefcorr::cp1
