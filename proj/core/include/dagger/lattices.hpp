#pragma once

// Full-rank Z-lattices inside a quaternion algebra, and orders.

#include <vector>

#include "dagger/lattice.hpp"
#include "dagger/quatalg.hpp"

namespace dagger {

class IntegralLattice4 {
 public:
  IntegralLattice4(QuaternionAlgebra alg, RatLattice lattice);
  /// Rows of `gens` are quaternion coordinates.
  static IntegralLattice4 from_generators(const QuaternionAlgebra& alg, const RatMatrix& gens);
  /// Z-span of `vectors` in canonical form; throws DomainError on rank < 4.
  static IntegralLattice4 canonicalize(const std::vector<Quat>& vectors);

  const QuaternionAlgebra& algebra() const { return alg_; }
  const RatLattice& lattice() const { return lattice_; }
  const RatMatrix& basis() const { return lattice_.basis(); }
  std::vector<Quat> basis_elements() const;

  bool contains(const Quat& x) const;
  bool contains(const IntegralLattice4& other) const;

  IntegralLattice4 sum(const IntegralLattice4& other) const;
  IntegralLattice4 intersect(const IntegralLattice4& other) const;
  /// {x : trd(x L) ⊆ Z}.
  IntegralLattice4 trace_dual() const;
  IntegralLattice4 scaled(const Rat& c) const;
  /// Image under coords -> coords * m.
  IntegralLattice4 transformed(const RatMatrix& m) const;
  /// Canonical p-local representative (see RatLattice::localized).
  IntegralLattice4 localized(const Int& p) const;

  /// |det(trd(e_i e_j))| over the canonical basis.
  Rat trace_determinant() const;

  friend bool operator==(const IntegralLattice4& lhs, const IntegralLattice4& rhs) {
    return lhs.alg_ == rhs.alg_ && lhs.lattice_ == rhs.lattice_;
  }
  friend std::strong_ordering operator<=>(const IntegralLattice4& lhs, const IntegralLattice4& rhs) {
    return lhs.lattice_ <=> rhs.lattice_;
  }

 private:
  void require_same(const IntegralLattice4& other) const;
  QuaternionAlgebra alg_;
  RatLattice lattice_;
};

/// 1 ∈ L and the 16 basis products lie in L.
bool is_order(const IntegralLattice4& lattice);

/// An IntegralLattice4 known to be an order.
class Order4 : public IntegralLattice4 {
 public:
  /// Throws DomainError ("does not contain 1" / "not closed under
  /// multiplication") when the lattice is not an order.
  explicit Order4(IntegralLattice4 lattice);

  /// Z<1, i, j, ij>.
  static Order4 standard(const QuaternionAlgebra& alg);

  using IntegralLattice4::intersect;
  Order4 intersect(const Order4& other) const;
};

/// Positive d with d^2 = |det(trd(e_i e_j))|.
IdealZ reduced_discriminant(const Order4& order);

IntegralLattice4 involution_image(const OrthogonalInvolution& inv, const IntegralLattice4& lattice);
Order4 involution_image(const OrthogonalInvolution& inv, const Order4& order);
bool is_dagger_stable(const OrthogonalInvolution& inv, const IntegralLattice4& lattice);

/// O ∩ O^‡, the ‡-order attached to an order O.
Order4 dagger_intersection(const OrthogonalInvolution& inv, const Order4& order);

IntegralLattice4 trace_dual(const IntegralLattice4& lattice);

/// Matrices of x -> x y and x -> y x in coordinates (row convention).
RatMatrix right_multiplication(const Quat& y);
RatMatrix left_multiplication(const Quat& y);

}  // namespace dagger
