#pragma once

// The worked example in (-1, -5 / Q): two maximal orders and the involution
// negating the ij coordinate.

#include "dagger/lattices.hpp"

namespace golden {

inline const dagger::QuaternionAlgebra& algebra() {
  static const dagger::QuaternionAlgebra h(dagger::Rat(-1), dagger::Rat(-5));
  return h;
}

inline dagger::Quat quat(const dagger::Rat& w, const dagger::Rat& x, const dagger::Rat& y,
                         const dagger::Rat& z) {
  return dagger::Quat(algebra(), w, x, y, z);
}

inline dagger::OrthogonalInvolution involution() {
  return dagger::OrthogonalInvolution(quat(0, 0, 0, 1));
}

inline dagger::Order4 order1() {
  using dagger::make_rat;
  return dagger::Order4(dagger::IntegralLattice4::canonicalize(
      {quat(1, 0, 0, 0), quat(0, 1, 0, 0), quat(0, 0, 1, 0),
       quat(make_rat(5, 10), make_rat(5, 10), make_rat(3, 10), make_rat(-1, 10))}));
}

// The printed fourth generator (90 + 385i - 63j + ij)/90 has nrd 87/4, so it
// is not integral; (45 + 385i - 63j + ij)/90 is, and reproduces the printed
// intersection.
inline dagger::Order4 order2() {
  using dagger::make_rat;
  return dagger::Order4(dagger::IntegralLattice4::canonicalize(
      {quat(1, 0, 0, 0), quat(0, 9, 0, 0), quat(0, 0, 1, 0),
       quat(make_rat(45, 90), make_rat(385, 90), make_rat(-63, 90), make_rat(1, 90))}));
}

inline dagger::IntegralLattice4 expected_intersection1() {
  using dagger::make_rat;
  const auto h = make_rat(1, 2);
  return dagger::IntegralLattice4::canonicalize(
      {quat(1, 0, 0, 0), quat(0, 1, 0, 0), quat(0, 0, 1, 0), quat(h, h, h, h)});
}

inline dagger::IntegralLattice4 expected_intersection2() {
  using dagger::make_rat;
  const auto n = make_rat(9, 2);
  return dagger::IntegralLattice4::canonicalize(
      {quat(1, 0, 0, 0), quat(0, 9, 0, 0), quat(0, 0, 1, 0), quat(n, n, n, n)});
}

}  // namespace golden
