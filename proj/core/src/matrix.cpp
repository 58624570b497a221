#include "lefcorr/matrix.hpp"

namespace lefcorr {

ExactMatrix to_exact(const IntMatrix& m) {
  return ExactMatrix::convert(m, [](const Integer& v) { return ExactScalar(v); });
}

IntMatrix to_integer(const ExactMatrix& m) {
  return IntMatrix::convert(m, [](const ExactScalar& v) {
    if (!v.is_real() || v.real().get_den() != 1) {
      throw ShapeError("matrix entry " + v.to_string() + " is not an integer");
    }
    return Integer(v.real().get_num());
  });
}

ComplexMatrix to_complex(const ExactMatrix& m) {
  return ComplexMatrix::convert(m, [](const ExactScalar& v) { return v.to_complex(); });
}

}  // namespace lefcorr
