#pragma once

#include <functional>
#include <string_view>
#include <vector>

#include "lefcorr/matrix.hpp"
#include "lefcorr/report.hpp"
#include "lefcorr/scalar.hpp"
#include "lefcorr/smith.hpp"
#include "lefcorr/trace_core.hpp"

/// Affine correspondences on the flat torus T^n = R^n / Z^n.
///
/// A correspondence is Gamma = {(x, y) : A x == B y + c (mod Z^n)} for
/// integer matrices A, B and a rational offset c. The first projection
/// (x, y) -> x has degree |det B| and the second has degree |det A|.
///
/// Cohomology action. H^k(T^n) has the constant forms dx_I, |I| = k, as a
/// basis (I increasing, lexicographic). On Gamma the relation A dx = B dy
/// gives pr2^*(dy) = M pr1^*(dx) with M = B^{-1} A, so pr2^* acts on H^k as
/// Lambda^k(M). Pushing forward along pr1 sums over its |det B| sheets,
/// which all carry the same constant form, so pr1_* pr1^* = |det B| id. The
/// induced map in degree k is therefore |det B| Lambda^k(M), and the
/// alternating trace collapses to sign(det B) det(B - A).
///
/// Orientation. Gamma is oriented so that pr1 preserves orientation. Near a
/// fixed point Gamma is the graph of h(x) = B^{-1}(A x - c), whose
/// Jacobian is M everywhere, so every fixed point has index
/// sign det(I - M).
namespace lefcorr::torus {

class TorusCorrespondence {
 public:
  /// Throws ShapeError on inconsistent sizes. The offset is reduced mod 1.
  TorusCorrespondence(IntMatrix a, IntMatrix b, TorusPoint c);
  /// Zero offset.
  TorusCorrespondence(IntMatrix a, IntMatrix b);

  /// Text-format constructor ("2,0;0,2"). An offset of "0" stands for the
  /// zero vector in any dimension.
  static TorusCorrespondence parse(std::string_view a, std::string_view b, std::string_view c);

  std::size_t dimension() const { return a_.rows(); }
  const IntMatrix& a() const { return a_; }
  const IntMatrix& b() const { return b_; }
  const TorusPoint& offset() const { return c_; }

  /// det(A - B) != 0, i.e. Gamma meets the diagonal transversally.
  bool is_transversal() const;

 private:
  IntMatrix a_;
  IntMatrix b_;
  TorusPoint c_;
};

struct CoveringDegrees {
  Integer first;   // deg pr1 = |det B|
  Integer second;  // deg pr2 = |det A|
};

/// Throws NotACovering when det A or det B vanishes.
CoveringDegrees validate(const TorusCorrespondence& corr);

/// Blocks |det B| Lambda^k(B^{-1} A), k = 0..n.
GradedMap induced_map(const TorusCorrespondence& corr);

/// sign(det B) det(B - A); the closed form of the alternating trace.
ExactScalar lefschetz_closed_form(const TorusCorrespondence& corr);

/// Alternating trace of induced_map, cross-checked against the closed form
/// (throws std::logic_error if the two ever disagree).
ExactScalar lefschetz_global(const TorusCorrespondence& corr);

struct TorusFixedPoint {
  TorusPoint location;
  int index = 0;
};

/// All |det(A - B)| solutions of (A - B) x == c (mod Z^n), by Smith normal
/// form. Throws NonTransversal if det(A - B) = 0 and NotACovering if the
/// correspondence is invalid.
std::vector<TorusFixedPoint> fixed_points(const TorusCorrespondence& corr);

/// fixed_points without materializing the list: `visit(location, index)` is
/// called once per point, in the same order. `location` is only valid
/// during the call.
using FixedPointVisitor = std::function<void(const TorusPoint&, int)>;
void for_each_fixed_point(const TorusCorrespondence& corr, const FixedPointVisitor& visit);

/// Poincare pairing on T^n in the dx_I basis: integral of dx_I ^ dx_J is
/// the shuffle sign when J is the complement of I, else zero.
PairingData torus_pairing(std::size_t n);

/// Integral over Gamma of the Poincare dual of the diagonal, evaluated term
/// by term: each pr1^* psi_i ^ pr2^* psi_i^* is expanded in exterior algebra
/// after substituting dy = M dx, its top coefficient is read off, and the
/// result is multiplied by deg pr1 = |det B|.
ExactScalar diagonal_integral(const TorusCorrespondence& corr);

/// global = lefschetz_global, local = sum of fixed-point indices.
VerificationReport verify_theorem(const TorusCorrespondence& corr);

/// global = lefschetz_global, local = diagonal_integral. Does not need
/// transversality.
VerificationReport integral_check(const TorusCorrespondence& corr);

}  // namespace lefcorr::torus
