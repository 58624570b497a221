#pragma once

// Reference implementations used only by tests. They are deliberately
// naive and share no code paths with the library algorithms they check.

#include <algorithm>
#include <cstdint>
#include <numeric>
#include <vector>

#include "lefcorr/matrix.hpp"
#include "lefcorr/rng.hpp"
#include "lefcorr/scalar.hpp"

namespace oracle {

using lefcorr::ExactMatrix;
using lefcorr::ExactScalar;
using lefcorr::IntMatrix;
using lefcorr::Integer;
using lefcorr::Rational;

inline int permutation_sign(const std::vector<std::size_t>& perm) {
  int sign = 1;
  for (std::size_t i = 0; i < perm.size(); ++i) {
    for (std::size_t j = i + 1; j < perm.size(); ++j) {
      if (perm[i] > perm[j]) sign = -sign;
    }
  }
  return sign;
}

// Leibniz expansion.
template <class T>
T leibniz_det(const lefcorr::Matrix<T>& m) {
  std::vector<std::size_t> perm(m.rows());
  std::iota(perm.begin(), perm.end(), 0);
  T total(0);
  do {
    T term(permutation_sign(perm));
    for (std::size_t i = 0; i < perm.size(); ++i) term *= m(i, perm[i]);
    total += term;
  } while (std::next_permutation(perm.begin(), perm.end()));
  return total;
}

// Sum of all principal k-minors, by subset bitmask.
inline ExactScalar principal_minor_sum(const ExactMatrix& m, std::size_t k) {
  const std::size_t n = m.rows();
  ExactScalar total(0L);
  for (std::uint32_t mask = 0; mask < (1U << n); ++mask) {
    if (static_cast<std::size_t>(__builtin_popcount(mask)) != k) continue;
    std::vector<std::size_t> idx;
    for (std::size_t i = 0; i < n; ++i) {
      if (mask & (1U << i)) idx.push_back(i);
    }
    total += leibniz_det(m.submatrix(idx, idx));
  }
  return total;
}

inline IntMatrix random_int_matrix(lefcorr::TrialRng& rng, std::size_t n, long bound) {
  IntMatrix m(n, n);
  for (std::size_t r = 0; r < n; ++r) {
    for (std::size_t c = 0; c < n; ++c) m(r, c) = static_cast<long>(rng.uniform_int(-bound, bound));
  }
  return m;
}

// Complete homogeneous symmetric polynomial h_d(x, y) = sum_j x^j y^(d-j).
inline ExactScalar complete_homogeneous(const ExactScalar& x, const ExactScalar& y, unsigned d) {
  ExactScalar total(0L);
  for (unsigned j = 0; j <= d; ++j) total += lefcorr::pow(x, j) * lefcorr::pow(y, d - j);
  return total;
}

inline Rational frac(const Rational& v) {
  Integer q;
  mpz_fdiv_q(q.get_mpz_t(), v.get_num_mpz_t(), v.get_den_mpz_t());
  return v - Rational(q);
}

// All x in ((1/q) Z / Z)^n with t x == c (mod Z^n), by exhaustive grid
// search. Only usable for tiny q^n.
inline std::vector<std::vector<Rational>> grid_solutions(const IntMatrix& t, const std::vector<Rational>& c,
                                                         long q) {
  const std::size_t n = t.rows();
  std::vector<std::vector<Rational>> out;
  std::vector<long> digits(n, 0);
  while (true) {
    bool ok = true;
    for (std::size_t i = 0; i < n && ok; ++i) {
      Rational row = -c[i];
      for (std::size_t j = 0; j < n; ++j) row += Rational(t(i, j)) * Rational(digits[j], q);
      row.canonicalize();
      ok = row.get_den() == 1;
    }
    if (ok) {
      std::vector<Rational> x(n);
      for (std::size_t j = 0; j < n; ++j) {
        x[j] = Rational(digits[j], q);
        x[j].canonicalize();
      }
      out.push_back(x);
    }
    std::size_t pos = n;
    while (pos > 0) {
      --pos;
      if (++digits[pos] < q) break;
      digits[pos] = 0;
      if (pos == 0) return out;
    }
    if (n == 0) return out;
  }
}

}  // namespace oracle
