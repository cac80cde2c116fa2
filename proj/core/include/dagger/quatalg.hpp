#pragma once

// Quaternion algebras (a, b / Q), their elements, and orthogonal involutions
// x -> u x̄ u^-1 given by a pure quaternion u.

#include <array>
#include <optional>

#include "dagger/exactnum.hpp"
#include "dagger/matrix.hpp"

namespace dagger {

/// (a, b / Q) with basis 1, i, j, ij: i^2 = a, j^2 = b, ij = -ji.
class QuaternionAlgebra {
 public:
  QuaternionAlgebra(Rat a, Rat b);
  const Rat& a() const { return a_; }
  const Rat& b() const { return b_; }
  friend bool operator==(const QuaternionAlgebra&, const QuaternionAlgebra&) = default;

  /// Gram matrix of (x, y) -> trd(xy) in the standard basis: diag(2, 2a, 2b, -2ab).
  RatMatrix trace_form() const;

 private:
  Rat a_;
  Rat b_;
};

class Quat {
 public:
  explicit Quat(const QuaternionAlgebra& alg) : alg_(alg), c_{} {}
  Quat(const QuaternionAlgebra& alg, Rat w, Rat x, Rat y, Rat z)
      : alg_(alg), c_{std::move(w), std::move(x), std::move(y), std::move(z)} {}
  Quat(const QuaternionAlgebra& alg, std::span<const Rat> coords);

  static Quat scalar(const QuaternionAlgebra& alg, const Rat& s) { return Quat(alg, s, 0, 0, 0); }
  static Quat basis(const QuaternionAlgebra& alg, std::size_t k);

  const QuaternionAlgebra& algebra() const { return alg_; }
  const std::array<Rat, 4>& coords() const { return c_; }
  const Rat& operator[](std::size_t k) const { return c_[k]; }

  Quat conjugate() const;
  Rat nrd() const;
  Rat trd() const { return 2 * c_[0]; }
  bool is_zero() const;
  bool is_scalar() const { return c_[1] == 0 && c_[2] == 0 && c_[3] == 0; }
  bool is_pure() const { return c_[0] == 0; }
  /// Throws DomainError when nrd == 0.
  Quat inverse() const;

  friend Quat operator+(const Quat& lhs, const Quat& rhs);
  friend Quat operator-(const Quat& lhs, const Quat& rhs);
  friend Quat operator-(const Quat& x);
  friend Quat operator*(const Quat& lhs, const Quat& rhs);
  friend Quat operator*(const Rat& s, const Quat& x);
  friend bool operator==(const Quat&, const Quat&) = default;

 private:
  QuaternionAlgebra alg_;
  std::array<Rat, 4> c_;
};

/// x -> u x̄ u^-1 for a nonzero pure quaternion u; u spans the skew part.
class OrthogonalInvolution {
 public:
  explicit OrthogonalInvolution(Quat u);

  const QuaternionAlgebra& algebra() const { return u_.algebra(); }
  const Quat& u() const { return u_; }

  Quat apply(const Quat& x) const;
  /// Matrix M with coords(x^‡) = coords(x) * M (row convention).
  const RatMatrix& matrix() const { return matrix_; }

  /// Involutions agree iff their u are parallel.
  friend bool operator==(const OrthogonalInvolution& lhs, const OrthogonalInvolution& rhs);

 private:
  Quat u_;
  Quat u_inv_;
  RatMatrix matrix_;
};

SquareClass involution_discriminant(const OrthogonalInvolution& inv);

/// Product of the finite primes at which (a, b / Q) ramifies.
IdealZ algebra_discriminant(const QuaternionAlgebra& alg);

/// If g^‡ g is a scalar, returns l in {0, 1} with g^‡ g = (-1)^l nrd(g).
std::optional<int> is_similitude(const OrthogonalInvolution& inv, const Quat& g);

}  // namespace dagger
