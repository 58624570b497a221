#pragma once

#include <array>
#include <string_view>
#include <vector>

#include "lefcorr/matrix.hpp"
#include "lefcorr/report.hpp"
#include "lefcorr/scalar.hpp"

/// Holomorphic correspondences Gamma = {(z, w) : a z == b w + c (mod L)} on
/// an elliptic curve E = C / L, L = Z + tau Z.
///
/// Cohomology action on H^q(E, O). H^0(E, O) = C (constants): pulling a
/// constant back along pr2 and summing over the N(b) sheets of pr1 gives
/// multiplication by N(b). H^1(E, O) is spanned by the class of dzbar. On
/// Gamma, a dz = b dw, so pr2^*[dwbar] = conj(a / b) [dzbar]; the pullbacks
/// agree on all N(b) sheets of pr1, so the pushforward multiplies by N(b).
/// The trace on H^1 is N(b) conj(a) / conj(b) = b conj(a), giving
///
///     L(Gamma, O) = N(b) - b conj(a).
///
/// This H^1 formula is derived here from fiberwise summation of pulled-back
/// forms; the local side below is computed independently, so an error in it
/// would surface as a mismatch.
///
/// Local side. Fixed points solve (a - b) z == c (mod L); there are
/// N(a - b) of them. Locally Gamma is the graph of w = (a z - c) / b, so
/// the Jacobian is a / b at every fixed point and each contributes
/// 1 / (1 - a / b).
namespace lefcorr::ctorus {

enum class LatticeMode { kGeneric, kGaussian };

class LatticeSpec {
 public:
  /// tau = i; multipliers range over Z[i].
  static LatticeSpec gaussian();
  /// Any tau in Q(i) with Im tau > 0; multipliers are restricted to Z.
  /// Throws InvalidArgument when Im tau <= 0.
  static LatticeSpec generic(const ExactScalar& tau);

  LatticeMode mode() const { return mode_; }
  const ExactScalar& tau() const { return tau_; }
  std::string_view mode_name() const { return mode_ == LatticeMode::kGaussian ? "gaussian" : "generic"; }

  /// (u, v) with z = u + v tau.
  std::array<Rational, 2> coordinates(const ExactScalar& z) const;
  ExactScalar point(const Rational& u, const Rational& v) const;

  /// Integer matrix of z -> m z on the basis (1, tau); column j holds the
  /// coordinates of the image of the j-th basis vector. Throws
  /// MultiplierNotInRing if m L is not contained in L.
  IntMatrix multiplication_matrix(const ExactScalar& m) const;

  /// Whether m is a permitted multiplier in this mode.
  bool admits(const ExactScalar& m) const;

 private:
  LatticeSpec(LatticeMode mode, ExactScalar tau) : mode_(mode), tau_(std::move(tau)) {}

  LatticeMode mode_;
  ExactScalar tau_;
};

class ComplexTorusCorrespondence {
 public:
  /// Offset c is a complex number; it is reduced into the fundamental
  /// parallelogram {u + v tau : 0 <= u, v < 1}. In Gaussian mode the
  /// multipliers are promoted to Q(i).
  ComplexTorusCorrespondence(LatticeSpec lattice, ExactScalar a, ExactScalar b, ExactScalar c = ExactScalar());

  const LatticeSpec& lattice() const { return lattice_; }
  const ExactScalar& a() const { return a_; }
  const ExactScalar& b() const { return b_; }
  const ExactScalar& offset() const { return c_; }

  bool is_transversal() const { return !(a_ == b_); }

 private:
  LatticeSpec lattice_;
  ExactScalar a_;
  ExactScalar b_;
  ExactScalar c_;
};

struct HoloDegrees {
  Integer first;   // deg pr1 = N(b)
  Integer second;  // deg pr2 = N(a)
};

/// Throws MultiplierNotInRing or NotACovering.
HoloDegrees validate(const ComplexTorusCorrespondence& corr);

/// N(b) - b conj(a).
ExactScalar holo_lefschetz_global(const ComplexTorusCorrespondence& corr);

struct HoloFixedPoint {
  ExactScalar location;
  ExactScalar jacobian;
  ExactScalar weight;
};

/// z_m = (c + lambda_m) / (a - b) over coset representatives lambda_m of
/// L / (a - b) L, enumerated by Smith normal form of the multiplication
/// matrix. Throws NonTransversal when a = b.
std::vector<HoloFixedPoint> fixed_points(const ComplexTorusCorrespondence& corr);

/// Literal sum of the fixed-point weights (cross-checked against
/// N(a - b) b / (b - a)).
ExactScalar conjecture1_local_sum(const ComplexTorusCorrespondence& corr);

/// global = holo_lefschetz_global, local = conjecture1_local_sum. A
/// mismatch is reported, never thrown.
VerificationReport verify_conjecture1(const ComplexTorusCorrespondence& corr);

/// The n-division correspondence a = 1, b = n: w ranges over the n^2
/// solutions of n w == z - c. Throws InvalidArgument for n < 2.
ComplexTorusCorrespondence hecke_like(long n, const ExactScalar& c = ExactScalar(),
                                      const LatticeSpec& lattice = LatticeSpec::gaussian());

/// Gamma o Gamma = {(z, u) : a^2 z == b^2 u + (a + b) c}.
ComplexTorusCorrespondence self_composite(const ComplexTorusCorrespondence& corr);

}  // namespace lefcorr::ctorus
