#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include "lefcorr/matrix.hpp"
#include "lefcorr/scalar.hpp"

namespace lefcorr {

/// A linear endomorphism of a graded vector space, one square block per
/// degree 0..n. Row i of a block holds the coordinates of the image of the
/// i-th basis vector.
class GradedMap {
 public:
  /// Throws ShapeError unless every block is square.
  explicit GradedMap(std::vector<ExactMatrix> blocks);

  std::size_t degree_count() const { return blocks_.size(); }
  std::vector<std::size_t> dims() const;
  const std::vector<ExactMatrix>& blocks() const { return blocks_; }
  const ExactMatrix& block(std::size_t k) const { return blocks_.at(k); }

  /// Blockwise sum; shapes must agree.
  friend GradedMap operator+(const GradedMap& lhs, const GradedMap& rhs);

 private:
  std::vector<ExactMatrix> blocks_;
};

/// Sum over k of (-1)^k tr(block k).
ExactScalar alternating_trace(const GradedMap& m);

/// Strictly increasing k-tuples from {0..n-1} in lexicographic order.
std::vector<std::vector<std::size_t>> increasing_tuples(std::size_t n, std::size_t k);

/// k-th exterior power in the lexicographic multi-index basis: entry (I, J)
/// is the minor det M[I, J]. Throws ShapeError for k > size(M).
ExactMatrix exterior_power(const ExactMatrix& m, std::size_t k);

/// Finite-dimensional shadow of Poincare duality on a closed oriented
/// n-manifold.
///
/// pairing(k) is the matrix P with P[i][j] = integral of psi_i ^ phi_j, where
/// psi_i runs over the basis of H^{n-k} and phi_j over the basis of H^k.
class PairingData {
 public:
  PairingData(std::vector<std::vector<std::string>> basis_labels, std::vector<ExactMatrix> pairings);

  std::size_t top_degree() const { return labels_.size() - 1; }
  std::vector<std::size_t> dims() const;
  std::size_t total_betti() const;
  const std::vector<std::string>& labels(std::size_t degree) const { return labels_.at(degree); }
  const ExactMatrix& pairing(std::size_t k) const { return pairings_.at(k); }

 private:
  std::vector<std::vector<std::string>> labels_;
  std::vector<ExactMatrix> pairings_;
};

/// Change of basis D in degree k with sum_j P[i][j] D[j][l] = delta_il, so
/// column l of D expresses the dual of psi_l in the phi basis of H^k.
/// Throws PoincareDualityFailure when the pairing is singular.
ExactMatrix dual_basis(const PairingData& pairing, std::size_t k);

struct DiagonalTerm {
  std::size_t dual_degree = 0;  // degree of psi_i^*
  std::size_t index = 0;        // position of psi_i in the degree-ordered basis of H^*
  std::size_t local_index = 0;  // position of psi_i inside H^{n - dual_degree}
  int sign = 1;                 // (-1)^dual_degree, stored explicitly
  std::vector<ExactScalar> dual_coefficients;  // psi_i^* in the basis of H^{dual_degree}
};

/// The formal sum over i of (-1)^{deg psi_i^*} pr1^* psi_i ^ pr2^* psi_i^*,
/// one term per basis element of H^*.
struct DiagonalClass {
  std::vector<DiagonalTerm> terms;
};

DiagonalClass diagonal_class(const PairingData& pairing);

}  // namespace lefcorr
