#include "lefcorr/cp1_bundle.hpp"

#include <algorithm>
#include <cmath>

#include "lefcorr/errors.hpp"
#include "lefcorr/text_format.hpp"

namespace lefcorr::cp1 {

namespace {

template <class T>
T ipow(T base, unsigned exponent) {
  T result(1);
  while (exponent != 0) {
    if (exponent & 1U) result *= base;
    exponent >>= 1U;
    if (exponent != 0) base *= base;
  }
  return result;
}

template <class T>
T binomial(unsigned m, unsigned j) {
  Integer value;
  mpz_bin_uiui(value.get_mpz_t(), m, j);
  if constexpr (std::is_same_v<T, Complex>) {
    return Complex(value.get_d(), 0.0);
  } else {
    return T(value);
  }
}

// Coefficients of (alpha z0 + beta z1)^m by power of z1.
template <class T>
std::vector<T> linear_power(const T& alpha, const T& beta, unsigned m) {
  std::vector<T> out(m + 1, T(0));
  for (unsigned j = 0; j <= m; ++j) out[j] = binomial<T>(m, j) * ipow(alpha, m - j) * ipow(beta, j);
  return out;
}

bool less_exact(const ExactScalar& lhs, const ExactScalar& rhs) {
  if (lhs.real() != rhs.real()) return lhs.real() < rhs.real();
  return lhs.imag() < rhs.imag();
}

bool less_float(const Complex& lhs, const Complex& rhs) {
  if (lhs.real() != rhs.real()) return lhs.real() < rhs.real();
  return lhs.imag() < rhs.imag();
}

Complex to_complex_value(const ExactScalar& v) { return v.to_complex(); }
Complex to_complex_value(const Complex& v) { return v; }

template <class T>
std::array<T, 2> eigen_direction(const Matrix<T>& g, const T& mu) {
  std::array<T, 2> v{T(0), T(0)};
  if (!is_zero(g(0, 1))) {
    v = {g(0, 1), mu - g(0, 0)};
  } else if (!is_zero(g(1, 0))) {
    v = {mu - g(1, 1), g(1, 0)};
  } else {
    // Diagonal: pick the coordinate axis whose entry equals mu.
    const bool first = std::abs(to_complex_value(g(0, 0) - mu)) <= std::abs(to_complex_value(g(1, 1) - mu));
    v = first ? std::array<T, 2>{T(1), T(0)} : std::array<T, 2>{T(0), T(1)};
  }
  if (!is_zero(v[0])) {
    v[1] /= v[0];
    v[0] = T(1);
  } else {
    v[1] = T(1);
  }
  return v;
}

template <class T>
BasicBundleFixedPoint<T> make_point(const Matrix<T>& g, const T& mu, const T& nu, unsigned d) {
  return {mu, nu, eigen_direction(g, mu), nu / mu, ipow(mu, d)};
}

std::string format_complex_matrix(const ComplexMatrix& m) {
  std::string out;
  for (std::size_t r = 0; r < m.rows(); ++r) {
    if (r != 0) out += ';';
    for (std::size_t c = 0; c < m.cols(); ++c) {
      if (c != 0) out += ',';
      out += format_approx(m(r, c)).substr(1);
    }
  }
  return out;
}

VerificationReport floating_report(const FloatBundleSelfMap& m, std::string model,
                                   std::vector<std::pair<std::string, std::string>> parameters) {
  const Complex global = lefschetz_global(m);
  const auto points = fixed_point_data(m);
  const Complex local = local_sum(points);
  VerificationReport report;
  report.model = std::move(model);
  report.parameters = std::move(parameters);
  report.global = format_approx(global);
  report.local = format_approx(local);
  report.fixed_point_count = points.size();
  report.tolerance = kFloatTolerance;
  report.match = std::abs(global - local) <= kFloatTolerance;
  for (const auto& p : points) {
    report.fixed_points.push_back("mu=" + format_approx(p.eigenvalue) + " f'=" + format_approx(p.differential) +
                                  " phi=" + format_approx(p.phi_weight));
  }
  return report;
}

}  // namespace

template <class T>
BasicBundleSelfMap<T>::BasicBundleSelfMap(Matrix<T> g, int d) : g_(std::move(g)), degree_(0) {
  if (g_.rows() != 2 || g_.cols() != 2) throw ShapeError("bundle self-map needs a 2x2 matrix");
  if (is_zero(determinant(g_))) throw NotACovering("det g = 0: not a Moebius transformation");
  if (d < 0) throw InvalidArgument("bundle degree must be >= 0 (H^1 of O(d) with d < 0 is not handled)");
  degree_ = static_cast<unsigned>(d);
}

FloatBundleSelfMap to_floating(const BundleSelfMap& m) {
  return FloatBundleSelfMap(to_complex(m.g()), static_cast<int>(m.degree()));
}

template <class T>
Matrix<T> cohomology_action(const BasicBundleSelfMap<T>& m) {
  const unsigned d = m.degree();
  const Matrix<T>& g = m.g();
  Matrix<T> out(d + 1, d + 1);
  for (unsigned k = 0; k <= d; ++k) {
    const auto left = linear_power(g(0, 0), g(0, 1), d - k);
    const auto right = linear_power(g(1, 0), g(1, 1), k);
    for (unsigned i = 0; i < left.size(); ++i) {
      if (is_zero(left[i])) continue;
      for (unsigned j = 0; j < right.size(); ++j) out(k, i + j) += left[i] * right[j];
    }
  }
  return out;
}

template <class T>
T lefschetz_global(const BasicBundleSelfMap<T>& m) {
  return trace(cohomology_action(m));
}

std::vector<BundleFixedPoint> fixed_point_data(const BundleSelfMap& m) {
  const ExactMatrix& g = m.g();
  const ExactScalar tr = trace(g);
  const ExactScalar det = determinant(g);
  const ExactScalar disc = tr * tr - ExactScalar(4) * det;
  if (disc.is_zero()) throw DegenerateEigenvalues("g has a repeated eigenvalue " + (tr / ExactScalar(2)).to_string());
  ExactScalar root;
  if (!exact_sqrt(disc, root)) {
    throw IrrationalEigenvalues("eigenvalues of g are not in Q(i) (discriminant " + disc.to_string() + ")");
  }
  if (!disc.is_gaussian() && !tr.is_gaussian() && root.is_real()) root = ExactScalar(root.real());
  ExactScalar mu = (tr + root) / ExactScalar(2);
  ExactScalar nu = (tr - root) / ExactScalar(2);
  if (less_exact(nu, mu)) std::swap(mu, nu);
  return {make_point(g, mu, nu, m.degree()), make_point(g, nu, mu, m.degree())};
}

std::vector<FloatBundleFixedPoint> fixed_point_data(const FloatBundleSelfMap& m) {
  const ComplexMatrix& g = m.g();
  const Complex tr = trace(g);
  const Complex det = determinant(g);
  const Complex root = std::sqrt(tr * tr - 4.0 * det);
  Complex mu = (tr + root) / 2.0;
  Complex nu = (tr - root) / 2.0;
  if (std::abs(mu - nu) <= 1e-12 * std::max({1.0, std::abs(mu), std::abs(nu)})) {
    throw DegenerateEigenvalues("g has (numerically) repeated eigenvalues");
  }
  if (less_float(nu, mu)) std::swap(mu, nu);
  return {make_point(g, mu, nu, m.degree()), make_point(g, nu, mu, m.degree())};
}

template <class T>
T local_sum(const std::vector<BasicBundleFixedPoint<T>>& points) {
  T sum(0);
  for (const auto& p : points) sum += p.phi_weight / (T(1) - p.differential);
  return sum;
}

VerificationReport verify_ab_4_12(const BundleSelfMap& m) {
  std::vector<std::pair<std::string, std::string>> parameters{{"g", format_matrix(m.g())},
                                                              {"d", std::to_string(m.degree())}};
  std::vector<BundleFixedPoint> points;
  try {
    points = fixed_point_data(m);
  } catch (const IrrationalEigenvalues& e) {
    VerificationReport report = floating_report(to_floating(m), "cp1", std::move(parameters));
    report.warnings.push_back(std::string(e.what()) + "; evaluated in floating point");
    return report;
  }
  const ExactScalar global = lefschetz_global(m);
  const ExactScalar local = local_sum(points);
  VerificationReport report;
  report.model = "cp1";
  report.parameters = std::move(parameters);
  report.global = global.to_string();
  report.local = local.to_string();
  report.fixed_point_count = points.size();
  report.match = global == local;
  for (const auto& p : points) {
    report.fixed_points.push_back("mu=" + p.eigenvalue.to_string() + " f'=" + p.differential.to_string() +
                                  " phi=" + p.phi_weight.to_string());
  }
  return report;
}

VerificationReport verify_ab_4_12(const FloatBundleSelfMap& m) {
  return floating_report(m, "cp1", {{"g", format_complex_matrix(m.g())}, {"d", std::to_string(m.degree())}});
}

GraphUnionCorrespondence::GraphUnionCorrespondence(std::vector<BundleSelfMap> branches)
    : branches_(std::move(branches)) {
  if (branches_.empty()) throw InvalidArgument("a graph-union correspondence needs at least one branch");
  for (const auto& branch : branches_) {
    if (branch.degree() != branches_.front().degree()) {
      throw InvalidArgument("all branches must carry the same bundle degree");
    }
  }
}

VerificationReport verify_conjecture2_union(const GraphUnionCorrespondence& u) {
  std::vector<std::pair<std::string, std::string>> parameters{{"d", std::to_string(u.degree())}};
  for (std::size_t i = 0; i < u.branches().size(); ++i) {
    parameters.emplace_back("branch" + std::to_string(i), format_matrix(u.branches()[i].g()));
  }

  std::vector<std::vector<BundleFixedPoint>> branch_points;
  try {
    for (const auto& branch : u.branches()) branch_points.push_back(fixed_point_data(branch));
  } catch (const IrrationalEigenvalues& e) {
    ComplexMatrix total(u.degree() + 1, u.degree() + 1);
    Complex local(0);
    std::uint64_t count = 0;
    for (const auto& branch : u.branches()) {
      const auto floating = to_floating(branch);
      total += cohomology_action(floating);
      const auto points = fixed_point_data(floating);
      local += local_sum(points);
      count += points.size();
    }
    const Complex global = trace(total);
    VerificationReport report;
    report.model = "cp1-union";
    report.parameters = std::move(parameters);
    report.global = format_approx(global);
    report.local = format_approx(local);
    report.fixed_point_count = count;
    report.tolerance = kFloatTolerance;
    report.match = std::abs(global - local) <= kFloatTolerance;
    report.warnings.push_back(std::string(e.what()) + "; evaluated in floating point");
    return report;
  }

  ExactMatrix total(u.degree() + 1, u.degree() + 1);
  for (const auto& branch : u.branches()) total += cohomology_action(branch);
  const ExactScalar global = trace(total);
  ExactScalar local;
  std::uint64_t count = 0;
  for (const auto& points : branch_points) {
    local += local_sum(points);
    count += points.size();
  }
  VerificationReport report;
  report.model = "cp1-union";
  report.parameters = std::move(parameters);
  report.global = global.to_string();
  report.local = local.to_string();
  report.fixed_point_count = count;
  report.match = global == local;
  return report;
}

template class BasicBundleSelfMap<ExactScalar>;
template class BasicBundleSelfMap<Complex>;
template ExactMatrix cohomology_action(const BundleSelfMap&);
template ComplexMatrix cohomology_action(const FloatBundleSelfMap&);
template ExactScalar lefschetz_global(const BundleSelfMap&);
template Complex lefschetz_global(const FloatBundleSelfMap&);
template ExactScalar local_sum(const std::vector<BundleFixedPoint>&);
template Complex local_sum(const std::vector<FloatBundleFixedPoint>&);

}  // namespace lefcorr::cp1
