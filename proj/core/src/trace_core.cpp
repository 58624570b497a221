#include "lefcorr/trace_core.hpp"

#include <numeric>

#include "lefcorr/errors.hpp"

namespace lefcorr {

GradedMap::GradedMap(std::vector<ExactMatrix> blocks) : blocks_(std::move(blocks)) {
  for (std::size_t k = 0; k < blocks_.size(); ++k) {
    if (!blocks_[k].is_square()) {
      throw ShapeError("graded map block " + std::to_string(k) + " is not square");
    }
  }
}

std::vector<std::size_t> GradedMap::dims() const {
  std::vector<std::size_t> out;
  out.reserve(blocks_.size());
  for (const auto& block : blocks_) out.push_back(block.rows());
  return out;
}

GradedMap operator+(const GradedMap& lhs, const GradedMap& rhs) {
  if (lhs.dims() != rhs.dims()) throw ShapeError("graded maps have different dimensions");
  std::vector<ExactMatrix> blocks;
  for (std::size_t k = 0; k < lhs.degree_count(); ++k) blocks.push_back(lhs.block(k) + rhs.block(k));
  return GradedMap(std::move(blocks));
}

ExactScalar alternating_trace(const GradedMap& m) {
  ExactScalar sum;
  for (std::size_t k = 0; k < m.degree_count(); ++k) {
    if (k % 2 == 0) {
      sum += trace(m.block(k));
    } else {
      sum -= trace(m.block(k));
    }
  }
  return sum;
}

std::vector<std::vector<std::size_t>> increasing_tuples(std::size_t n, std::size_t k) {
  std::vector<std::vector<std::size_t>> out;
  if (k > n) return out;
  std::vector<std::size_t> tuple(k);
  std::iota(tuple.begin(), tuple.end(), std::size_t{0});
  while (true) {
    out.push_back(tuple);
    // Advance the rightmost slot that still has room.
    std::size_t slot = k;
    while (slot > 0 && tuple[slot - 1] == n - k + slot - 1) --slot;
    if (slot == 0) break;
    ++tuple[slot - 1];
    for (std::size_t j = slot; j < k; ++j) tuple[j] = tuple[j - 1] + 1;
  }
  return out;
}

ExactMatrix exterior_power(const ExactMatrix& m, std::size_t k) {
  if (!m.is_square()) throw ShapeError("exterior power of a non-square matrix");
  if (k > m.rows()) {
    throw ShapeError("exterior power degree " + std::to_string(k) + " exceeds size " +
                     std::to_string(m.rows()));
  }
  const auto tuples = increasing_tuples(m.rows(), k);
  ExactMatrix out(tuples.size(), tuples.size());
  for (std::size_t r = 0; r < tuples.size(); ++r) {
    for (std::size_t c = 0; c < tuples.size(); ++c) {
      out(r, c) = determinant(m.submatrix(tuples[r], tuples[c]));
    }
  }
  return out;
}

PairingData::PairingData(std::vector<std::vector<std::string>> basis_labels, std::vector<ExactMatrix> pairings)
    : labels_(std::move(basis_labels)), pairings_(std::move(pairings)) {
  if (labels_.empty()) throw ShapeError("pairing data needs at least degree 0");
  const std::size_t n = labels_.size() - 1;
  if (pairings_.size() != labels_.size()) throw ShapeError("one pairing matrix per degree is required");
  for (std::size_t k = 0; k <= n; ++k) {
    const auto& p = pairings_[k];
    if (p.rows() != labels_[n - k].size() || p.cols() != labels_[k].size()) {
      throw ShapeError("pairing matrix for degree " + std::to_string(k) + " has the wrong shape");
    }
  }
}

std::vector<std::size_t> PairingData::dims() const {
  std::vector<std::size_t> out;
  for (const auto& labels : labels_) out.push_back(labels.size());
  return out;
}

std::size_t PairingData::total_betti() const {
  std::size_t total = 0;
  for (const auto& labels : labels_) total += labels.size();
  return total;
}

ExactMatrix dual_basis(const PairingData& pairing, std::size_t k) {
  const ExactMatrix& p = pairing.pairing(k);
  if (!p.is_square()) {
    throw PoincareDualityFailure("pairing between degrees " + std::to_string(pairing.top_degree() - k) +
                                 " and " + std::to_string(k) + " is not square");
  }
  try {
    return inverse(p);
  } catch (const SingularMatrix&) {
    throw PoincareDualityFailure("pairing between degrees " + std::to_string(pairing.top_degree() - k) +
                                 " and " + std::to_string(k) + " is singular");
  }
}

DiagonalClass diagonal_class(const PairingData& pairing) {
  const std::size_t n = pairing.top_degree();
  const auto dims = pairing.dims();
  DiagonalClass out;
  std::size_t index = 0;
  for (std::size_t psi_degree = 0; psi_degree <= n; ++psi_degree) {
    const std::size_t k = n - psi_degree;
    const ExactMatrix dual = dual_basis(pairing, k);
    for (std::size_t local = 0; local < dims[psi_degree]; ++local) {
      DiagonalTerm term;
      term.dual_degree = k;
      term.index = index++;
      term.local_index = local;
      term.sign = k % 2 == 0 ? 1 : -1;
      for (std::size_t j = 0; j < dual.rows(); ++j) term.dual_coefficients.push_back(dual(j, local));
      out.terms.push_back(std::move(term));
    }
  }
  return out;
}

}  // namespace lefcorr
