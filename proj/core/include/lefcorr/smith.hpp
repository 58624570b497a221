#pragma once

#include <functional>
#include <vector>

#include "lefcorr/matrix.hpp"

namespace lefcorr {

/// left * input * right == diagonal, with left and right unimodular and the
/// diagonal entries nonnegative, each dividing the next.
struct SmithForm {
  IntMatrix left;
  IntMatrix diagonal;
  IntMatrix right;
};

SmithForm smith_normal_form(const IntMatrix& m);

using TorusPoint = std::vector<Rational>;

/// Every x in [0,1)^n with t*x == c (mod Z^n), for square nonsingular t.
///
/// With U t V = D, the substitution y = V^{-1} x turns the congruence into
/// D y == U c, solved coordinatewise as y_i = ((Uc)_i + m_i) / d_i for
/// 0 <= m_i < d_i. The map y -> Vy is a bijection of the torus, so the
/// |det t| solutions are pairwise distinct. Throws SingularMatrix if t is
/// singular.
std::vector<TorusPoint> solve_congruence(const IntMatrix& t, const TorusPoint& c);

/// The solutions of solve_congruence, in the same order, handed to `visit`
/// one at a time. The referenced point is only valid during the call.
using CongruenceVisitor = std::function<void(const TorusPoint&)>;
void for_each_congruence_solution(const IntMatrix& t, const TorusPoint& c, const CongruenceVisitor& visit);

/// Componentwise reduction into [0,1).
TorusPoint reduce_mod_one(TorusPoint x);

}  // namespace lefcorr
