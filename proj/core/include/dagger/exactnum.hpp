#pragma once

// Exact arithmetic primitives: rationals, p-adic valuations, square classes,
// ideals of Z, Hilbert symbols and the quadratic defect.

#include <gmpxx.h>

#include <compare>
#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "dagger/errors.hpp"

namespace dagger {

using Int = mpz_class;
using Rat = mpq_class;

/// Builds n/d in lowest terms; throws DomainError when d == 0.
Rat make_rat(const Int& n, const Int& d);

/// Parses "n" or "n/d" (optional sign, decimal digits only).
Rat parse_rat(std::string_view text);
std::string to_string(const Rat& x);
std::string to_string(const Int& x);

Int lcm(const Int& a, const Int& b);
Int gcd(const Int& a, const Int& b);
Int pow(const Int& base, unsigned long exponent);

// ---------------------------------------------------------------------------
// Valuations

/// An integer valuation or +infinity (the valuation of zero).
class Valuation {
 public:
  constexpr explicit Valuation(long v) : value_(v), infinite_(false) {}
  static constexpr Valuation infinity() { return Valuation(); }

  constexpr bool is_infinite() const { return infinite_; }
  /// Throws DomainError for +infinity.
  long value() const;

  friend constexpr bool operator==(const Valuation&, const Valuation&) = default;
  friend constexpr std::strong_ordering operator<=>(const Valuation& lhs,
                                                    const Valuation& rhs) {
    if (lhs.infinite_ || rhs.infinite_) return lhs.infinite_ <=> rhs.infinite_;
    return lhs.value_ <=> rhs.value_;
  }
  friend constexpr Valuation operator+(const Valuation& lhs, const Valuation& rhs) {
    if (lhs.infinite_ || rhs.infinite_) return infinity();
    return Valuation(lhs.value_ + rhs.value_);
  }

  std::string to_string() const;

 private:
  constexpr Valuation() : value_(0), infinite_(true) {}
  long value_;
  bool infinite_;
};

// ---------------------------------------------------------------------------
// Primes and factorization

enum class Primality { composite, prime, unknown };

/// Trial division by small primes, then Miller-Rabin with the first 13 prime
/// bases, which is deterministic below 3.3e24. Larger survivors are `unknown`.
Primality primality(const Int& n);
bool is_prime(const Int& n);

/// Trial-division bound used when none is passed explicitly. Starts at 10^6;
/// tools may override it once at startup (see set_default_trial_bound).
unsigned long default_trial_bound();
void set_default_trial_bound(unsigned long bound);

using Factorization = std::vector<std::pair<Int, unsigned long>>;

/// Prime factorization of |n| (n != 0), primes ascending. Throws
/// FactorizationError when a cofactor with no prime factor below the trial
/// bound is neither a certified prime nor the square of one.
Factorization factor(const Int& n, unsigned long trial_bound = default_trial_bound());

/// Sorted distinct primes dividing the numerator or denominator of x != 0.
std::vector<Int> prime_support(const Rat& x);

/// ord_p(x); +infinity iff x == 0. Throws DomainError if p is not prime.
Valuation valuation(const Rat& x, const Int& p);
Valuation valuation(const Int& x, const Int& p);

/// x / p^ord_p(x) for nonzero x (a p-adic unit).
Rat unit_part(const Rat& x, const Int& p);

// ---------------------------------------------------------------------------
// Square classes and ideals of Z

/// An element of Q^x / (Q^x)^2, stored as its signed square-free integer
/// representative.
class SquareClass {
 public:
  /// Throws DomainError unless `rep` is a nonzero square-free integer.
  explicit SquareClass(Int rep);
  const Int& representative() const { return rep_; }
  friend bool operator==(const SquareClass& lhs, const SquareClass& rhs) {
    return lhs.rep_ == rhs.rep_;
  }

 private:
  Int rep_;
};

SquareClass square_class(const Rat& x);

/// An ideal (g) of Z with g >= 0; (0) is the zero ideal and (1) is Z.
class IdealZ {
 public:
  IdealZ() : gen_(1) {}
  explicit IdealZ(Int generator);
  const Int& generator() const { return gen_; }
  bool is_zero() const { return gen_ == 0; }

  IdealZ operator*(const IdealZ& rhs) const { return IdealZ(gen_ * rhs.gen_); }
  /// (m) ∩ (n) = (lcm(m, n)).
  IdealZ intersect(const IdealZ& rhs) const;
  /// (m) + (n) = (gcd(m, n)).
  IdealZ sum(const IdealZ& rhs) const;
  bool contains(const IdealZ& rhs) const;

  friend bool operator==(const IdealZ& lhs, const IdealZ& rhs) { return lhs.gen_ == rhs.gen_; }
  std::string to_string() const { return gen_.get_str(); }

 private:
  Int gen_;
};

/// p^valuation inside Z localized at p.
struct LocalIdeal {
  Int prime;
  Valuation valuation;

  friend bool operator==(const LocalIdeal&, const LocalIdeal&) = default;
  bool is_zero() const { return valuation.is_infinite(); }
  /// Ideal containment: p^a ⊆ p^b iff a >= b.
  bool subset_of(const LocalIdeal& rhs) const { return valuation >= rhs.valuation; }
};

/// The square-free ideal generated by the integral members of a square class.
IdealZ iota(const SquareClass& c);

// ---------------------------------------------------------------------------
// Local invariants

/// A place of Q: a finite prime or the real place.
class Place {
 public:
  static Place real() { return Place(); }
  static Place finite(Int p);
  bool is_real() const { return !prime_.has_value(); }
  const Int& prime() const;

 private:
  Place() = default;
  std::optional<Int> prime_;
};

/// The Hilbert symbol (a, b)_v in {+1, -1}; a, b nonzero.
int hilbert_symbol(const Rat& a, const Rat& b, const Place& v);
int hilbert_symbol(const Rat& a, const Rat& b, const Int& p);

/// The quadratic defect of a != 0 at p: the intersection of the ideals
/// (a - b^2) Z_(p) over all b. Valuation +infinity iff a is a p-adic square.
LocalIdeal quadratic_defect(const Rat& a, const Int& p);

}  // namespace dagger
