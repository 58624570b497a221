#include "lefcorr/complex_torus.hpp"

#include <stdexcept>

#include "lefcorr/errors.hpp"
#include "lefcorr/smith.hpp"

namespace lefcorr::ctorus {

namespace {

ExactScalar sum_weights(const ComplexTorusCorrespondence& corr, const std::vector<HoloFixedPoint>& points) {
  ExactScalar sum = corr.a().is_gaussian() ? ExactScalar::gaussian(0) : ExactScalar();
  for (const auto& p : points) sum += p.weight;

  const ExactScalar difference = corr.a() - corr.b();
  const ExactScalar closed = ExactScalar(difference.norm()) * corr.b() / (corr.b() - corr.a());
  if (!(sum == closed)) throw std::logic_error("fixed-point weights do not sum to N(a - b) b / (b - a)");
  return sum;
}

}  // namespace

LatticeSpec LatticeSpec::gaussian() { return LatticeSpec(LatticeMode::kGaussian, ExactScalar::i()); }

LatticeSpec LatticeSpec::generic(const ExactScalar& tau) {
  if (sgn(tau.imag()) <= 0) throw InvalidArgument("tau must have positive imaginary part, got " + tau.to_string());
  return LatticeSpec(LatticeMode::kGeneric, tau.promoted());
}

std::array<Rational, 2> LatticeSpec::coordinates(const ExactScalar& z) const {
  Rational v = z.imag() / tau_.imag();
  Rational u = z.real() - v * tau_.real();
  return {std::move(u), std::move(v)};
}

ExactScalar LatticeSpec::point(const Rational& u, const Rational& v) const {
  return ExactScalar::gaussian(u, 0) + tau_ * ExactScalar(v);
}

bool LatticeSpec::admits(const ExactScalar& m) const {
  if (!m.is_integral()) return false;
  return mode_ == LatticeMode::kGaussian || m.is_real();
}

IntMatrix LatticeSpec::multiplication_matrix(const ExactScalar& m) const {
  const auto image_one = coordinates(m);
  const auto image_tau = coordinates(m * tau_);
  IntMatrix out(2, 2);
  const std::array<const Rational*, 4> entries{&image_one[0], &image_tau[0], &image_one[1], &image_tau[1]};
  for (std::size_t idx = 0; idx < 4; ++idx) {
    if (entries[idx]->get_den() != 1) {
      throw MultiplierNotInRing("multiplication by " + m.to_string() + " does not preserve the lattice");
    }
    out(idx / 2, idx % 2) = entries[idx]->get_num();
  }
  return out;
}

ComplexTorusCorrespondence::ComplexTorusCorrespondence(LatticeSpec lattice, ExactScalar a, ExactScalar b,
                                                       ExactScalar c)
    : lattice_(std::move(lattice)), a_(std::move(a)), b_(std::move(b)) {
  if (lattice_.mode() == LatticeMode::kGaussian) {
    a_ = a_.promoted();
    b_ = b_.promoted();
  }
  const auto coords = lattice_.coordinates(c);
  c_ = lattice_.point(frac(coords[0]), frac(coords[1]));
}

HoloDegrees validate(const ComplexTorusCorrespondence& corr) {
  const auto& lattice = corr.lattice();
  for (const ExactScalar* m : {&corr.a(), &corr.b()}) {
    if (!lattice.admits(*m)) {
      throw MultiplierNotInRing("multiplier " + m->to_string() + " is not in " +
                                (lattice.mode() == LatticeMode::kGaussian ? "Z[i]" : "Z (generic tau)"));
    }
  }
  if (corr.a().is_zero()) throw NotACovering("a = 0: the second projection is not a finite covering");
  if (corr.b().is_zero()) throw NotACovering("b = 0: the first projection is not a finite covering");
  return {Integer(corr.b().norm().get_num()), Integer(corr.a().norm().get_num())};
}

ExactScalar holo_lefschetz_global(const ComplexTorusCorrespondence& corr) {
  const HoloDegrees degrees = validate(corr);
  ExactScalar h0(degrees.first);
  ExactScalar h1 = corr.b() * corr.a().conj();
  return h0 - h1;
}

std::vector<HoloFixedPoint> fixed_points(const ComplexTorusCorrespondence& corr) {
  validate(corr);
  if (!corr.is_transversal()) throw NonTransversal("a = b: the correspondence contains the diagonal");
  const auto& lattice = corr.lattice();
  const ExactScalar difference = corr.a() - corr.b();
  const IntMatrix t = lattice.multiplication_matrix(difference);
  const auto c = lattice.coordinates(corr.offset());

  const ExactScalar jacobian = corr.a() / corr.b();
  const ExactScalar weight = ExactScalar(1) / (ExactScalar(1) - jacobian);

  std::vector<HoloFixedPoint> out;
  out.reserve(Integer(abs(determinant(t))).get_ui());
  for_each_congruence_solution(t, {c[0], c[1]}, [&](const TorusPoint& x) {
    out.push_back({lattice.point(x[0], x[1]), jacobian, weight});
  });
  return out;
}

ExactScalar conjecture1_local_sum(const ComplexTorusCorrespondence& corr) {
  return sum_weights(corr, fixed_points(corr));
}

VerificationReport verify_conjecture1(const ComplexTorusCorrespondence& corr) {
  const ExactScalar global = holo_lefschetz_global(corr);
  const auto points = fixed_points(corr);
  const ExactScalar local = sum_weights(corr, points);

  VerificationReport report;
  report.model = "ctorus";
  report.parameters = {{"mode", std::string(corr.lattice().mode_name())},
                       {"tau", corr.lattice().tau().to_string()},
                       {"a", corr.a().to_string()},
                       {"b", corr.b().to_string()},
                       {"c", corr.offset().to_string()}};
  report.global = global.to_string();
  report.local = local.to_string();
  report.fixed_point_count = points.size();
  report.match = global == local;
  if (points.size() <= kMaxListedFixedPoints) {
    for (const auto& p : points) {
      report.fixed_points.push_back(p.location.to_string() + " J=" + p.jacobian.to_string() +
                                    " weight=" + p.weight.to_string());
    }
  }
  return report;
}

ComplexTorusCorrespondence hecke_like(long n, const ExactScalar& c, const LatticeSpec& lattice) {
  if (n < 2) throw InvalidArgument("Hecke-like correspondence needs n >= 2");
  return ComplexTorusCorrespondence(lattice, ExactScalar(1), ExactScalar(n), c);
}

ComplexTorusCorrespondence self_composite(const ComplexTorusCorrespondence& corr) {
  const ExactScalar& a = corr.a();
  const ExactScalar& b = corr.b();
  return ComplexTorusCorrespondence(corr.lattice(), a * a, b * b, (a + b) * corr.offset());
}

}  // namespace lefcorr::ctorus
