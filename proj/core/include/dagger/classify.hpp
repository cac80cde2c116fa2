#pragma once

// Enumeration of maximal ‡_λ-orders of Mat(2, Q_p) near the standard order
// and their grouping into isomorphism classes by similitudes.

#include <cstddef>
#include <optional>
#include <vector>

#include "dagger/localquad.hpp"

namespace dagger {

/// Lattices up to scaling at tree distance at most `radius` from Z_(p)²,
/// each in Z_(p)² and not in pZ_(p)²: the span of (1, t), (0, p^k) for
/// t < p^k, or of (ps, 1), (p^k, 0) for s < p^{k-1}, for k = 1..radius.
std::vector<LocalQuadLattice2> lattice_ball(const Int& p, const Rat& lambda, int radius);

/// Default enumeration radius: 5 at p = 2, 3 at p = 3, else 2.
int default_radius(const Int& p);

/// A similitude g (gᵀDg = ±det(g)D) with g O(from) g⁻¹ = O(to) for the
/// orders O(Λ) = End(Λ) ∩ End(Λ^♯). Searches g = (sI + tJ)Rᵉ with
/// J = (0 1; -λ 0), R = diag(1, -1) and (s : t) over P¹(Z/p^K) for
/// K = 1..max_precision. The result is verified exactly.
std::optional<Mat2> find_conjugating_similitude(const LocalQuadLattice2& from,
                                                const LocalQuadLattice2& to, int max_precision);

struct LocalClassification {
  Int prime;
  Rat lambda;
  int radius = 0;
  /// Orders End(Λ) ∩ End(Λ^♯) from lattices with Λ and Λ^♯ in the ball that
  /// are maximal among those, sorted by the tree distance of their lattice
  /// from Z_(p)², then canonically.
  std::vector<LocalOrder2x2> orders;
  /// A lattice for each order.
  std::vector<LocalQuadLattice2> lattices;
  /// Class index of each order; classes are numbered by first occurrence.
  std::vector<std::size_t> class_of;
  /// Index of the first order of each class.
  std::vector<std::size_t> representatives;

  std::size_t class_count() const { return representatives.size(); }
};

LocalClassification classify_maximal_orders(const Int& p, const Rat& lambda, int radius);
inline LocalClassification classify_maximal_orders(const Int& p, const Rat& lambda) {
  return classify_maximal_orders(p, lambda, default_radius(p));
}

}  // namespace dagger
