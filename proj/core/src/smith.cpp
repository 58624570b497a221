#include "lefcorr/smith.hpp"

#include <algorithm>
#include <cstdint>

#include "lefcorr/errors.hpp"

namespace lefcorr {

namespace {

void swap_rows(IntMatrix& m, std::size_t a, std::size_t b) {
  if (a == b) return;
  for (std::size_t c = 0; c < m.cols(); ++c) std::swap(m(a, c), m(b, c));
}

void swap_cols(IntMatrix& m, std::size_t a, std::size_t b) {
  if (a == b) return;
  for (std::size_t r = 0; r < m.rows(); ++r) std::swap(m(r, a), m(r, b));
}

// row[target] -= factor * row[source]
void add_row_multiple(IntMatrix& m, std::size_t target, std::size_t source, const Integer& factor) {
  for (std::size_t c = 0; c < m.cols(); ++c) m(target, c) -= factor * m(source, c);
}

// col[target] -= factor * col[source]
void add_col_multiple(IntMatrix& m, std::size_t target, std::size_t source, const Integer& factor) {
  for (std::size_t r = 0; r < m.rows(); ++r) m(r, target) -= factor * m(r, source);
}

}  // namespace

SmithForm smith_normal_form(const IntMatrix& m) {
  IntMatrix a = m;
  IntMatrix left = IntMatrix::identity(m.rows());
  IntMatrix right = IntMatrix::identity(m.cols());
  const std::size_t steps = std::min(m.rows(), m.cols());

  for (std::size_t t = 0; t < steps; ++t) {
    while (true) {
      // Smallest nonzero entry of the trailing block becomes the pivot.
      bool found = false;
      std::size_t pr = t;
      std::size_t pc = t;
      for (std::size_t r = t; r < a.rows(); ++r) {
        for (std::size_t c = t; c < a.cols(); ++c) {
          if (sgn(a(r, c)) == 0) continue;
          if (!found || mpz_cmpabs(a(r, c).get_mpz_t(), a(pr, pc).get_mpz_t()) < 0) {
            found = true;
            pr = r;
            pc = c;
          }
        }
      }
      if (!found) return {left, a, right};

      swap_rows(a, t, pr);
      swap_rows(left, t, pr);
      swap_cols(a, t, pc);
      swap_cols(right, t, pc);

      bool clean = true;
      Integer q;
      for (std::size_t r = t + 1; r < a.rows(); ++r) {
        mpz_fdiv_q(q.get_mpz_t(), a(r, t).get_mpz_t(), a(t, t).get_mpz_t());
        add_row_multiple(a, r, t, q);
        add_row_multiple(left, r, t, q);
        if (sgn(a(r, t)) != 0) clean = false;
      }
      for (std::size_t c = t + 1; c < a.cols(); ++c) {
        mpz_fdiv_q(q.get_mpz_t(), a(t, c).get_mpz_t(), a(t, t).get_mpz_t());
        add_col_multiple(a, c, t, q);
        add_col_multiple(right, c, t, q);
        if (sgn(a(t, c)) != 0) clean = false;
      }
      if (!clean) continue;

      // Divisibility: fold an offending row into the pivot row and retry.
      bool divides = true;
      for (std::size_t r = t + 1; r < a.rows() && divides; ++r) {
        for (std::size_t c = t + 1; c < a.cols(); ++c) {
          if (mpz_divisible_p(a(r, c).get_mpz_t(), a(t, t).get_mpz_t()) == 0) {
            add_row_multiple(a, t, r, Integer(-1));
            add_row_multiple(left, t, r, Integer(-1));
            divides = false;
            break;
          }
        }
      }
      if (divides) break;
    }
    if (sgn(a(t, t)) < 0) {
      for (std::size_t c = 0; c < a.cols(); ++c) a(t, c) = -a(t, c);
      for (std::size_t c = 0; c < left.cols(); ++c) left(t, c) = -left(t, c);
    }
  }
  return {left, a, right};
}

TorusPoint reduce_mod_one(TorusPoint x) {
  for (auto& v : x) v = frac(v);
  return x;
}

namespace {

// The enumeration below over the common denominator q of all solutions.
// Stepping digit j adds column j of V times q / d_j, and a full wrap adds V
// times q, which vanishes mod q, so carries need no correction. Returns
// false (without visiting anything) when q does not fit in 62 bits.
bool enumerate_machine(const IntMatrix& right, const std::vector<Integer>& moduli, const TorusPoint& uc,
                       const CongruenceVisitor& visit) {
  const std::size_t n = moduli.size();
  Integer q_big = 1;
  for (std::size_t i = 0; i < n; ++i) {
    const Integer term = uc[i].get_den() * moduli[i];
    mpz_lcm(q_big.get_mpz_t(), q_big.get_mpz_t(), term.get_mpz_t());
  }
  if (mpz_sizeinbase(q_big.get_mpz_t(), 2) > 62) return false;
  const std::int64_t q = q_big.get_si();
  auto mod_q = [&q_big](const Integer& v) {
    Integer r;
    mpz_fdiv_r(r.get_mpz_t(), v.get_mpz_t(), q_big.get_mpz_t());
    return static_cast<std::int64_t>(r.get_si());
  };

  std::vector<std::int64_t> x(n, 0);
  std::vector<std::vector<std::int64_t>> step(n, std::vector<std::int64_t>(n));
  std::vector<std::int64_t> limit(n);
  for (std::size_t j = 0; j < n; ++j) {
    const Integer start = uc[j].get_num() * (q_big / (uc[j].get_den() * moduli[j]));
    const Integer stride = q_big / moduli[j];
    limit[j] = moduli[j].get_si();
    for (std::size_t i = 0; i < n; ++i) {
      x[i] = mod_q(Integer(x[i]) + right(i, j) * start);
      step[j][i] = mod_q(right(i, j) * stride);
    }
  }

  TorusPoint point(n);
  std::vector<std::int64_t> digits(n, 0);
  while (true) {
    for (std::size_t i = 0; i < n; ++i) {
      mpq_set_si(point[i].get_mpq_t(), x[i], static_cast<unsigned long>(q));
      point[i].canonicalize();
    }
    visit(point);
    if (n == 0) return true;

    std::size_t pos = n;
    while (pos > 0) {
      --pos;
      for (std::size_t i = 0; i < n; ++i) {
        x[i] += step[pos][i];
        if (x[i] >= q) x[i] -= q;
      }
      if (++digits[pos] < limit[pos]) break;
      digits[pos] = 0;
      if (pos == 0) return true;
    }
  }
}

}  // namespace

void for_each_congruence_solution(const IntMatrix& t, const TorusPoint& c, const CongruenceVisitor& visit) {
  if (!t.is_square() || t.rows() != c.size()) throw ShapeError("congruence shape mismatch");
  const std::size_t n = t.rows();
  const SmithForm snf = smith_normal_form(t);

  std::vector<Integer> moduli(n);
  for (std::size_t i = 0; i < n; ++i) {
    moduli[i] = snf.diagonal(i, i);
    if (sgn(moduli[i]) == 0) throw SingularMatrix("congruence matrix is singular");
  }

  TorusPoint uc(n, Rational(0));
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) uc[i] += Rational(snf.left(i, j)) * c[j];
  }

  if (enumerate_machine(snf.right, moduli, uc, visit)) return;

  std::vector<Integer> digits(n, Integer(0));
  TorusPoint y(n);
  while (true) {
    for (std::size_t i = 0; i < n; ++i) y[i] = (uc[i] + digits[i]) / moduli[i];
    TorusPoint x(n, Rational(0));
    for (std::size_t i = 0; i < n; ++i) {
      for (std::size_t j = 0; j < n; ++j) x[i] += Rational(snf.right(i, j)) * y[j];
    }
    visit(reduce_mod_one(std::move(x)));
    if (n == 0) return;

    // Mixed-radix increment over the residue digits, last coordinate fastest.
    std::size_t pos = n;
    while (pos > 0) {
      --pos;
      if (++digits[pos] < moduli[pos]) break;
      digits[pos] = 0;
      if (pos == 0) return;
    }
  }
}

std::vector<TorusPoint> solve_congruence(const IntMatrix& t, const TorusPoint& c) {
  std::vector<TorusPoint> solutions;
  for_each_congruence_solution(t, c, [&solutions](const TorusPoint& x) { solutions.push_back(x); });
  return solutions;
}

}  // namespace lefcorr
