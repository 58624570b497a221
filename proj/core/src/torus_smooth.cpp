#include "lefcorr/torus_smooth.hpp"

#include <bit>
#include <stdexcept>

#include "lefcorr/errors.hpp"
#include "lefcorr/text_format.hpp"

namespace lefcorr::torus {

namespace {

// Constant-coefficient forms on T^n: coefficient of dx_I stored at bitmask I.
using Form = std::vector<Rational>;
using Mask = std::uint32_t;

int wedge_sign(Mask lhs, Mask rhs) {
  int swaps = 0;
  for (Mask bits = rhs; bits != 0; bits &= bits - 1) {
    const int j = std::countr_zero(bits);
    swaps += std::popcount(lhs >> (j + 1));
  }
  return swaps % 2 == 0 ? 1 : -1;
}

Form wedge(const Form& lhs, const Form& rhs) {
  Form out(lhs.size(), Rational(0));
  for (Mask ml = 0; ml < lhs.size(); ++ml) {
    if (sgn(lhs[ml]) == 0) continue;
    for (Mask mr = 0; mr < rhs.size(); ++mr) {
      if ((ml & mr) != 0 || sgn(rhs[mr]) == 0) continue;
      const Rational term = lhs[ml] * rhs[mr];
      if (wedge_sign(ml, mr) > 0) {
        out[ml | mr] += term;
      } else {
        out[ml | mr] -= term;
      }
    }
  }
  return out;
}

Mask tuple_mask(const std::vector<std::size_t>& tuple) {
  Mask mask = 0;
  for (auto i : tuple) mask |= Mask{1} << i;
  return mask;
}

std::string tuple_label(const std::vector<std::size_t>& tuple) {
  if (tuple.empty()) return "1";
  std::string out;
  for (auto i : tuple) {
    if (!out.empty()) out += '^';
    out += "dx" + std::to_string(i + 1);
  }
  return out;
}

ExactMatrix slope(const TorusCorrespondence& corr) {
  return inverse(to_exact(corr.b())) * to_exact(corr.a());
}

Integer abs_det(const IntMatrix& m) { return abs(determinant(m)); }

std::string format_point(const TorusPoint& x) { return "(" + format_vector(x) + ")"; }

std::vector<std::pair<std::string, std::string>> parameters_of(const TorusCorrespondence& corr) {
  return {{"A", format_matrix(corr.a())}, {"B", format_matrix(corr.b())}, {"c", format_vector(corr.offset())}};
}

}  // namespace

TorusCorrespondence::TorusCorrespondence(IntMatrix a, IntMatrix b, TorusPoint c)
    : a_(std::move(a)), b_(std::move(b)), c_(reduce_mod_one(std::move(c))) {
  if (!a_.is_square() || !b_.is_square() || a_.rows() != b_.rows() || c_.size() != a_.rows()) {
    throw ShapeError("torus correspondence needs n x n matrices A, B and an n-vector c");
  }
  if (a_.rows() == 0) throw ShapeError("torus dimension must be at least 1");
  if (a_.rows() > 16) throw ShapeError("torus dimension above 16 is not supported");
}

TorusCorrespondence::TorusCorrespondence(IntMatrix a, IntMatrix b)
    : TorusCorrespondence(a, b, TorusPoint(a.rows(), Rational(0))) {}

TorusCorrespondence TorusCorrespondence::parse(std::string_view a, std::string_view b, std::string_view c) {
  IntMatrix am = parse_int_matrix(a);
  IntMatrix bm = parse_int_matrix(b);
  TorusPoint cv = parse_rational_vector(c);
  if (cv.size() == 1 && sgn(cv[0]) == 0) cv.assign(am.rows(), Rational(0));
  return TorusCorrespondence(std::move(am), std::move(bm), std::move(cv));
}

bool TorusCorrespondence::is_transversal() const { return sgn(determinant(a_ - b_)) != 0; }

CoveringDegrees validate(const TorusCorrespondence& corr) {
  CoveringDegrees degrees{abs_det(corr.b()), abs_det(corr.a())};
  if (sgn(degrees.second) == 0) throw NotACovering("det A = 0: the second projection is not a finite covering");
  if (sgn(degrees.first) == 0) throw NotACovering("det B = 0: the first projection is not a finite covering");
  return degrees;
}

GradedMap induced_map(const TorusCorrespondence& corr) {
  const CoveringDegrees degrees = validate(corr);
  const ExactMatrix m = slope(corr);
  const ExactScalar sheets(degrees.first);
  std::vector<ExactMatrix> blocks;
  for (std::size_t k = 0; k <= corr.dimension(); ++k) blocks.push_back(exterior_power(m, k) * sheets);
  return GradedMap(std::move(blocks));
}

ExactScalar lefschetz_closed_form(const TorusCorrespondence& corr) {
  validate(corr);
  const Integer det_b = determinant(corr.b());
  const Integer value = determinant(corr.b() - corr.a());
  return ExactScalar(sgn(det_b) < 0 ? Integer(-value) : value);
}

ExactScalar lefschetz_global(const TorusCorrespondence& corr) {
  ExactScalar value = alternating_trace(induced_map(corr));
  if (!(value == lefschetz_closed_form(corr))) {
    throw std::logic_error("alternating trace disagrees with sign(det B) det(B - A)");
  }
  return value;
}

void for_each_fixed_point(const TorusCorrespondence& corr, const FixedPointVisitor& visit) {
  validate(corr);
  const IntMatrix difference = corr.a() - corr.b();
  if (sgn(determinant(difference)) == 0) {
    throw NonTransversal("det(A - B) = 0: the correspondence meets the diagonal non-transversally");
  }
  const ExactMatrix graph_jacobian = slope(corr);
  const ExactScalar index_det = determinant(ExactMatrix::identity(corr.dimension()) - graph_jacobian);
  const int index = sgn(index_det.real()) > 0 ? 1 : -1;
  for_each_congruence_solution(difference, corr.offset(), [&](const TorusPoint& x) { visit(x, index); });
}

std::vector<TorusFixedPoint> fixed_points(const TorusCorrespondence& corr) {
  std::vector<TorusFixedPoint> out;
  for_each_fixed_point(corr, [&out](const TorusPoint& x, int index) { out.push_back({x, index}); });
  return out;
}

PairingData torus_pairing(std::size_t n) {
  std::vector<std::vector<std::string>> labels(n + 1);
  std::vector<std::vector<Mask>> masks(n + 1);
  for (std::size_t k = 0; k <= n; ++k) {
    for (const auto& tuple : increasing_tuples(n, k)) {
      labels[k].push_back(tuple_label(tuple));
      masks[k].push_back(tuple_mask(tuple));
    }
  }
  const Mask top = (Mask{1} << n) - 1;
  std::vector<ExactMatrix> pairings;
  for (std::size_t k = 0; k <= n; ++k) {
    const auto& rows = masks[n - k];
    const auto& cols = masks[k];
    ExactMatrix p(rows.size(), cols.size());
    for (std::size_t i = 0; i < rows.size(); ++i) {
      for (std::size_t j = 0; j < cols.size(); ++j) {
        if ((rows[i] | cols[j]) == top && (rows[i] & cols[j]) == 0) p(i, j) = wedge_sign(rows[i], cols[j]);
      }
    }
    pairings.push_back(std::move(p));
  }
  return PairingData(std::move(labels), std::move(pairings));
}

ExactScalar diagonal_integral(const TorusCorrespondence& corr) {
  const CoveringDegrees degrees = validate(corr);
  const std::size_t n = corr.dimension();
  const std::size_t form_size = std::size_t{1} << n;
  const Mask top = static_cast<Mask>(form_size - 1);
  const ExactMatrix m = slope(corr);

  // pr2^*(dx_J) for every J: wedge of the one-forms sum_l M[j][l] dx_l.
  std::vector<Form> pulled(form_size);
  pulled[0] = Form(form_size, Rational(0));
  pulled[0][0] = 1;
  for (Mask mask = 1; mask < form_size; ++mask) {
    const int highest = std::bit_width(mask) - 1;
    Form row(form_size, Rational(0));
    for (std::size_t l = 0; l < n; ++l) row[Mask{1} << l] = m(static_cast<std::size_t>(highest), l).real();
    pulled[mask] = wedge(pulled[mask & ~(Mask{1} << highest)], row);
  }

  std::vector<std::vector<Mask>> basis(n + 1);
  for (std::size_t k = 0; k <= n; ++k) {
    for (const auto& tuple : increasing_tuples(n, k)) basis[k].push_back(tuple_mask(tuple));
  }

  const DiagonalClass diagonal = diagonal_class(torus_pairing(n));
  Rational total = 0;
  for (const auto& term : diagonal.terms) {
    const std::size_t k = term.dual_degree;
    Form psi(form_size, Rational(0));
    psi[basis[n - k][term.local_index]] = 1;
    Form dual(form_size, Rational(0));
    for (std::size_t j = 0; j < basis[k].size(); ++j) {
      const Rational& coeff = term.dual_coefficients[j].real();
      if (sgn(coeff) == 0) continue;
      const Form& piece = pulled[basis[k][j]];
      for (std::size_t idx = 0; idx < form_size; ++idx) dual[idx] += coeff * piece[idx];
    }
    const Rational top_coeff = wedge(psi, dual)[top];
    if (term.sign > 0) {
      total += top_coeff;
    } else {
      total -= top_coeff;
    }
  }
  return ExactScalar(Rational(total * degrees.first));
}

VerificationReport verify_theorem(const TorusCorrespondence& corr) {
  const ExactScalar global = lefschetz_global(corr);
  long local = 0;
  std::uint64_t count = 0;
  std::vector<std::string> listed;
  for_each_fixed_point(corr, [&](const TorusPoint& x, int index) {
    local += index;
    ++count;
    if (count <= kMaxListedFixedPoints) listed.push_back(format_point(x) + (index > 0 ? " index +1" : " index -1"));
  });
  VerificationReport report;
  report.model = "torus";
  report.parameters = parameters_of(corr);
  report.global = global.to_string();
  report.local = ExactScalar(local).to_string();
  report.fixed_point_count = count;
  report.match = global == ExactScalar(local);
  if (count <= kMaxListedFixedPoints) report.fixed_points = std::move(listed);
  return report;
}

VerificationReport integral_check(const TorusCorrespondence& corr) {
  const ExactScalar global = lefschetz_global(corr);
  const ExactScalar integral = diagonal_integral(corr);
  VerificationReport report;
  report.model = "torus-integral";
  report.parameters = parameters_of(corr);
  report.global = global.to_string();
  report.local = integral.to_string();
  const Integer count = abs(determinant(corr.a() - corr.b()));
  report.fixed_point_count = count.get_ui();
  report.match = global == integral;
  return report;
}

}  // namespace lefcorr::torus
