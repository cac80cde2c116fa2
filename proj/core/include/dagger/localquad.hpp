#pragma once

// Binary quadratic lattices over Z localized at a prime p, for the split
// model Mat(2, Q_p) with involution σ ↦ D⁻¹σᵀD, D = diag(λ, 1), whose form is
// q(x, y) = λx² + y². Lattices are stored with global rational data and all
// ideals are valuations at p.

#include <optional>
#include <utility>
#include <vector>

#include "dagger/lattice.hpp"

namespace dagger {

/// 2×2 rational matrix.
using Mat2 = RatMatrix;

Mat2 mat2(const Rat& a, const Rat& b, const Rat& c, const Rat& d);
/// diag(λ, 1).
Mat2 form_matrix(const Rat& lambda);

class LocalQuadLattice2 {
 public:
  /// Columns of `basis` span the lattice over Z_(p). Throws DomainError if p
  /// is not prime, λ is zero or the basis is singular.
  LocalQuadLattice2(Int p, Rat lambda, Mat2 basis);
  /// The lattice Z_(p)² spanned by the standard basis.
  static LocalQuadLattice2 standard(const Int& p, const Rat& lambda);

  const Int& prime() const { return p_; }
  const Rat& lambda() const { return lambda_; }
  const Mat2& basis() const { return basis_; }
  /// basisᵀ · diag(λ, 1) · basis.
  const Mat2& gram() const { return gram_; }
  /// Canonical p-local representative of the span (rows are vectors).
  const RatLattice& span() const { return span_; }

  bool contains(const LocalQuadLattice2& other) const { return span_.contains(other.span_); }
  LocalQuadLattice2 scaled(const Rat& c) const;
  /// g · Λ for an invertible g.
  LocalQuadLattice2 image(const Mat2& g) const;

  /// Same p, λ and span.
  friend bool operator==(const LocalQuadLattice2& lhs, const LocalQuadLattice2& rhs);

 private:
  Int p_;
  Rat lambda_;
  Mat2 basis_;
  Mat2 gram_;
  RatLattice span_;
};

/// {v : b(v, Λ) ⊆ Z_(p)}, with basis D⁻¹ B^{-T}.
LocalQuadLattice2 dual(const LocalQuadLattice2& lattice);

struct ScaleNormVolume {
  LocalIdeal scale;
  LocalIdeal norm;
  LocalIdeal volume;
};

/// 𝔰 from all Gram entries, 𝔫 = Σ q(e_i) + 2𝔰, 𝔳 = (det gram).
ScaleNormVolume scale_norm_volume(const LocalQuadLattice2& lattice);

/// 𝔞 = 𝔰Λ when 𝔳Λ = 𝔰Λ², otherwise nothing.
std::optional<LocalIdeal> is_modular(const LocalQuadLattice2& lattice);

/// Whether Λ is 𝔞-maximal. Throws DomainError unless 𝔫Λ ⊆ 𝔞 and 𝔞 is an
/// ideal at the lattice's prime. Uses the square-free volume criterion, the
/// quadratic defect for Z_(2)² with 𝔞 = (1), and otherwise inspects the p + 1
/// superlattices of index p.
bool is_maximal(const LocalQuadLattice2& lattice, const LocalIdeal& ideal);

/// The ideal 𝔞 for which Λ is 𝔞-maximal, if any. Only 𝔞 = 𝔫Λ and 𝔭⁻¹𝔫Λ
/// can occur, since p⁻¹Λ has norm 𝔭⁻²𝔫Λ.
std::optional<LocalIdeal> maximality_ideal(const LocalQuadLattice2& lattice);

/// A basis of the same lattice with diagonal Gram matrix. Returns nothing
/// when p = 2 and 𝔫Λ ≠ 𝔰Λ, where no orthogonal basis exists.
std::optional<LocalQuadLattice2> orthogonalize(const LocalQuadLattice2& lattice);

/// An order in Mat(2, Q) localized at p, stored as a canonical p-local
/// lattice in Q⁴ via (a b; c d) ↦ (a, b, c, d).
class LocalOrder2x2 {
 public:
  /// Z_(p)-span of `generators`. Throws DomainError unless the span has
  /// rank 4, contains 1 and is closed under multiplication.
  LocalOrder2x2(Int p, const std::vector<Mat2>& generators);
  /// Mat(2, Z_(p)).
  static LocalOrder2x2 standard(const Int& p);

  const Int& prime() const { return p_; }
  const RatLattice& span() const { return span_; }
  /// The four canonical basis matrices.
  std::vector<Mat2> generators() const;

  /// Membership in the completion at p: denominators prime to p are allowed.
  bool contains(const Mat2& x) const;
  bool contains(const LocalOrder2x2& other) const { return span_.contains(other.span_); }
  LocalOrder2x2 intersect(const LocalOrder2x2& other) const;
  /// g O g⁻¹.
  LocalOrder2x2 conjugated(const Mat2& g) const;
  /// ord_p of the reduced discriminant.
  long discriminant_valuation() const;

  friend bool operator==(const LocalOrder2x2& lhs, const LocalOrder2x2& rhs) {
    return lhs.p_ == rhs.p_ && lhs.span_ == rhs.span_;
  }
  friend std::strong_ordering operator<=>(const LocalOrder2x2& lhs, const LocalOrder2x2& rhs) {
    return lhs.span_ <=> rhs.span_;
  }

 private:
  LocalOrder2x2(Int p, RatLattice span) : p_(std::move(p)), span_(std::move(span)) {}
  Int p_;
  RatLattice span_;
};

/// End(Λ) = B Mat(2, Z_(p)) B⁻¹.
LocalOrder2x2 endomorphism_order(const LocalQuadLattice2& lattice);

/// End(Λ) ∩ End(Λ^♯).
LocalOrder2x2 order_of_lattice(const LocalQuadLattice2& lattice);

/// Λ1 = cΛ2 or Λ1 = cΛ2^♯ for some c ∈ Q_p^×. Throws DomainError when the
/// primes or λ differ.
bool lattice_equivalent(const LocalQuadLattice2& lhs, const LocalQuadLattice2& rhs);

/// l ∈ {0, 1} with gᵀ D g = (-1)^l det(g) D, if any. Throws DomainError for a
/// singular or non-2×2 g.
std::optional<int> is_similitude_matrix(const Rat& lambda, const Mat2& g);

/// g Mat(2, Z_(p)) g⁻¹ = Mat(2, Z_(p)), i.e. g is a scalar times an element of
/// GL(2, Z_(p)).
bool stabilizes_standard_order(const Int& p, const Mat2& g);

/// Number of isomorphism classes of maximal orders given the valuation of
/// the quadratic defect 𝔡(-λ) (nothing for the zero ideal) and n = ord(2):
/// m + 1 for 𝔭^{2m+1}, n + 1 for 𝔭^{2n} or zero. Throws DomainError for
/// valuations that are not defects of units.
long strange_count(std::optional<long> defect_valuation, long n);

/// Isomorphism classes of maximal ‡_λ-orders of Mat(2, Q_p). λ must be a
/// square-free integer.
long count_classes(const Int& p, const Rat& lambda);

/// (ord α, min(ord β, ord 2)) at p = 2 for the unimodular Gram matrix
/// (α 1; 1 β) with α a norm generator (ord α ≤ ord β, ord α ≤ 1). Throws
/// DomainError otherwise.
std::pair<long, long> norm_weight_orders(const Rat& alpha, const Rat& beta);

}  // namespace dagger
