#pragma once

// Full-rank Z-lattices in Q^n with a canonical basis, so that equality of
// lattices is equality of matrices.

#include <compare>
#include <span>
#include <vector>

#include "dagger/matrix.hpp"

namespace dagger {

class RatLattice {
 public:
  /// Z-span of the rows of `gens`; throws DomainError if the span is not
  /// full rank.
  static RatLattice from_generators(const RatMatrix& gens);

  /// Canonical representative of the Z_(p)-span of the rows of `gens`: the
  /// unique global lattice that agrees with it at p and with Z^n at every
  /// other prime. Sums, intersections, duals and equality of such
  /// representatives are again representatives, so local questions reduce
  /// to global lattice arithmetic.
  static RatLattice localized(const RatMatrix& gens, const Int& p);

  /// Rows are the canonical basis: d^-1 * HNF(d * gens) for the least
  /// common denominator d.
  const RatMatrix& basis() const { return basis_; }
  std::size_t dim() const { return basis_.rows(); }

  /// Coordinates of v in the canonical basis.
  std::vector<Rat> coordinates(std::span<const Rat> v) const;
  bool contains(std::span<const Rat> v) const;
  bool contains(const RatLattice& other) const;

  RatLattice sum(const RatLattice& other) const;
  RatLattice intersect(const RatLattice& other) const;
  /// Dual with respect to the standard dot product: basis B^{-T}.
  RatLattice dual() const;
  RatLattice scaled(const Rat& c) const;
  /// Image under v -> v * m for an invertible m.
  RatLattice transformed(const RatMatrix& m) const;
  /// Canonical p-local representative of this lattice.
  RatLattice localized(const Int& p) const;

  /// |det(basis)|.
  Rat volume() const;
  /// [other : this] for a sublattice (this ⊆ other), as a rational number.
  Rat index_in(const RatLattice& other) const { return volume() / other.volume(); }

  friend bool operator==(const RatLattice& lhs, const RatLattice& rhs) {
    return lhs.basis_ == rhs.basis_;
  }
  /// Lexicographic order on the canonical basis entries (row-major).
  friend std::strong_ordering operator<=>(const RatLattice& lhs, const RatLattice& rhs);

 private:
  RatLattice(RatMatrix basis, RatMatrix inverse)
      : basis_(std::move(basis)), inverse_(std::move(inverse)) {}
  RatMatrix basis_;
  RatMatrix inverse_;
};

}  // namespace dagger
