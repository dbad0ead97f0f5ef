#ifndef PENTA_LIFT_HPP
#define PENTA_LIFT_HPP

#include <optional>
#include <string>

#include "penta/domains.hpp"

namespace penta {

struct LiftResult {
  Matrix2 unitary;
  // Conditioning note for |a| just above the branch cut, where the
  // off-diagonal entry divides by a.
  std::optional<std::string> warning;
};

// The unique unitary with equal diagonal entries over a point of the
// distinguished boundary of the pentablock:
//   a != 0: U = [[s/2, (s^2-4p)/(4a)], [a, s/2]]
//   a  = 0: U = [[s/2, 0], [0, s/2]], which additionally needs s^2 = 4p.
// Rejects points outside K0, naming the first violated condition in the
// order |p| = 1, s = conj(s) p, |s| <= 2, |a|^2 = 1 - |s|^2/4.
LiftResult lift_to_unitary(const Point3& x, const Tolerances& tol = {});

// Inverse direction: pi of a unitary with equal diagonal entries; the
// result lands in K0. Rejects non-unitary input and unequal diagonals.
Point3 project_from_unitary(const Matrix2& u, const Tolerances& tol = {});

}  // namespace penta

#endif  // PENTA_LIFT_HPP
