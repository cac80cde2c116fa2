#pragma once

// Maximal orders, the discriminant target for ‡-orders, maximality
// certificates and the ascent to a maximal ‡-order.

#include <cstdint>
#include <optional>
#include <vector>

#include "dagger/lattices.hpp"

namespace dagger {

/// Caps the number of candidate superlattices examined by one call.
struct SearchBudget {
  std::uint64_t max_candidates = 20'000'000;
};

/// Maximal order containing `order`, changed only at primes where the
/// reduced discriminant exceeds disc(H). Deterministic.
Order4 maximal_order_containing(const Order4& order, SearchBudget budget = {});

/// Same, but only the completion at p is enlarged.
Order4 p_maximal_order_containing(const Order4& order, const Int& p, SearchBudget budget = {});

/// disc(H) ∩ ι(disc ‡).
IdealZ target_discriminant(const QuaternionAlgebra& alg, const OrthogonalInvolution& inv);

struct PrimeWitness {
  Int prime;
  long achieved;  // ord_p of the reduced discriminant
  long target;    // ord_p of the target
  friend bool operator==(const PrimeWitness&, const PrimeWitness&) = default;
};

struct MaximalityCertificate {
  Order4 order;
  IdealZ target;
  IdealZ achieved;
  bool dagger_stable = false;
  /// O == M ∩ M^‡ for M = maximal_order_containing(O); only evaluated when
  /// O is ‡-stable with the target discriminant.
  std::optional<bool> eichler_form;
  bool maximal = false;
  /// One entry per prime dividing achieved * target.
  std::vector<PrimeWitness> witnesses;
};

MaximalityCertificate is_maximal_dagger_order(const Order4& order, const OrthogonalInvolution& inv,
                                              SearchBudget budget = {});

/// A maximal ‡-order containing `order` (which is first replaced by
/// O ∩ O^‡ if it is not ‡-stable).
Order4 enlarge_to_maximal_dagger(const Order4& order, const OrthogonalInvolution& inv,
                                 SearchBudget budget = {});

/// Index-p superlattices O + Zx (x ∈ O^♯ ∩ p^-1 O) that are orders, sorted
/// by canonical basis. Exposed for tests and tooling.
std::vector<Order4> index_p_superorders(const Order4& order, const Int& p, SearchBudget budget = {});

}  // namespace dagger
