#include "dagger/exactnum.hpp"

#include <algorithm>
#include <array>
#include <atomic>
#include <cctype>

namespace dagger {

Rat make_rat(const Int& n, const Int& d) {
  if (d == 0) throw DomainError("zero denominator");
  Rat r(n, d);
  r.canonicalize();
  return r;
}

Rat parse_rat(std::string_view text) {
  auto valid_integer = [](std::string_view s, bool allow_sign) {
    if (s.empty()) return false;
    std::size_t i = 0;
    if (allow_sign && (s[0] == '-' || s[0] == '+')) i = 1;
    if (i == s.size()) return false;
    return std::all_of(s.begin() + static_cast<std::ptrdiff_t>(i), s.end(),
                       [](char c) { return std::isdigit(static_cast<unsigned char>(c)) != 0; });
  };
  const auto slash = text.find('/');
  std::string_view num = text.substr(0, slash);
  std::string_view den = slash == std::string_view::npos ? std::string_view("1") : text.substr(slash + 1);
  if (!valid_integer(num, true) || !valid_integer(den, false)) {
    throw ParseError("malformed rational '" + std::string(text) + "'");
  }
  std::string n(num);
  if (!n.empty() && n[0] == '+') n.erase(0, 1);
  Int d(std::string(den), 10);
  if (d == 0) throw ParseError("zero denominator in '" + std::string(text) + "'");
  return make_rat(Int(n, 10), d);
}

std::string to_string(const Rat& x) {
  if (x.get_den() == 1) return x.get_num().get_str();
  return x.get_num().get_str() + "/" + x.get_den().get_str();
}

std::string to_string(const Int& x) { return x.get_str(); }

Int lcm(const Int& a, const Int& b) {
  Int r;
  mpz_lcm(r.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
  return r;
}

Int gcd(const Int& a, const Int& b) {
  Int r;
  mpz_gcd(r.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
  return r;
}

Int pow(const Int& base, unsigned long exponent) {
  Int r;
  mpz_pow_ui(r.get_mpz_t(), base.get_mpz_t(), exponent);
  return r;
}

long Valuation::value() const {
  if (infinite_) throw DomainError("valuation is +infinity");
  return value_;
}

std::string Valuation::to_string() const {
  return infinite_ ? std::string("inf") : std::to_string(value_);
}

// ---------------------------------------------------------------------------

namespace {

constexpr std::array<unsigned long, 13> kWitnesses = {2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37, 41};

bool miller_rabin_round(const Int& n, const Int& d, unsigned long s, unsigned long base) {
  Int a(base);
  Int x;
  mpz_powm(x.get_mpz_t(), a.get_mpz_t(), d.get_mpz_t(), n.get_mpz_t());
  const Int n1 = n - 1;
  if (x == 1 || x == n1) return true;
  for (unsigned long r = 1; r < s; ++r) {
    x = x * x % n;
    if (x == n1) return true;
  }
  return false;
}

std::atomic<unsigned long> g_trial_bound{1'000'000};

}  // namespace

Primality primality(const Int& n) {
  if (n < 2) return Primality::composite;
  for (unsigned long q = 2; q < 1000; ++q) {
    if (mpz_divisible_ui_p(n.get_mpz_t(), q) != 0) {
      return n == q ? Primality::prime : Primality::composite;
    }
  }
  if (n < 1000 * 1000) return Primality::prime;
  Int d = n - 1;
  unsigned long s = mpz_scan1(d.get_mpz_t(), 0);
  d >>= s;
  for (unsigned long w : kWitnesses) {
    if (!miller_rabin_round(n, d, s, w)) return Primality::composite;
  }
  static const Int kDeterministicLimit("3317044064679887385961981", 10);
  return n < kDeterministicLimit ? Primality::prime : Primality::unknown;
}

bool is_prime(const Int& n) { return primality(n) == Primality::prime; }

unsigned long default_trial_bound() { return g_trial_bound.load(std::memory_order_relaxed); }

void set_default_trial_bound(unsigned long bound) {
  g_trial_bound.store(std::max(bound, 2UL), std::memory_order_relaxed);
}

Factorization factor(const Int& n, unsigned long trial_bound) {
  if (n == 0) throw DomainError("cannot factor zero");
  Int m = abs(n);
  Factorization out;
  auto strip = [&](unsigned long q) {
    unsigned long e = 0;
    while (mpz_divisible_ui_p(m.get_mpz_t(), q) != 0) {
      mpz_divexact_ui(m.get_mpz_t(), m.get_mpz_t(), q);
      ++e;
    }
    if (e > 0) out.emplace_back(Int(q), e);
  };
  strip(2);
  unsigned long q = 3;
  for (; q <= trial_bound; q += 2) {
    if (m == 1) break;
    if (Int(q) * q > m) break;
    strip(q);
  }
  if (m == 1) return out;
  if (Int(q) * q > m) {
    // No factor up to sqrt(m): m is prime.
    out.emplace_back(m, 1);
    return out;
  }
  switch (primality(m)) {
    case Primality::prime:
      out.emplace_back(m, 1);
      return out;
    case Primality::composite: {
      if (mpz_perfect_square_p(m.get_mpz_t()) != 0) {
        Int r = sqrt(m);
        if (primality(r) == Primality::prime) {
          out.emplace_back(r, 2);
          return out;
        }
      }
      throw FactorizationError("cofactor " + m.get_str() + " has no prime factor below " +
                               std::to_string(trial_bound) + " and cannot be split");
    }
    case Primality::unknown:
      break;
  }
  throw FactorizationError("cannot certify primality of cofactor " + m.get_str());
}

std::vector<Int> prime_support(const Rat& x) {
  if (x == 0) throw DomainError("prime support of zero");
  std::vector<Int> primes;
  for (const auto& [p, e] : factor(x.get_num())) primes.push_back(p);
  for (const auto& [p, e] : factor(x.get_den())) primes.push_back(p);
  std::sort(primes.begin(), primes.end());
  primes.erase(std::unique(primes.begin(), primes.end()), primes.end());
  return primes;
}

namespace {

void require_prime(const Int& p) {
  if (!is_prime(p)) throw DomainError(p.get_str() + " is not prime");
}

long int_valuation(const Int& x, const Int& p) {
  if (x == 0) return 0;
  Int rest;
  return static_cast<long>(mpz_remove(rest.get_mpz_t(), x.get_mpz_t(), p.get_mpz_t()));
}

}  // namespace

Valuation valuation(const Rat& x, const Int& p) {
  require_prime(p);
  if (x == 0) return Valuation::infinity();
  return Valuation(int_valuation(x.get_num(), p) - int_valuation(x.get_den(), p));
}

Valuation valuation(const Int& x, const Int& p) { return valuation(Rat(x), p); }

Rat unit_part(const Rat& x, const Int& p) {
  if (x == 0) throw DomainError("unit part of zero");
  Int num, den;
  mpz_remove(num.get_mpz_t(), x.get_num().get_mpz_t(), p.get_mpz_t());
  mpz_remove(den.get_mpz_t(), x.get_den().get_mpz_t(), p.get_mpz_t());
  return make_rat(num, den);
}

// ---------------------------------------------------------------------------

SquareClass::SquareClass(Int rep) : rep_(std::move(rep)) {
  if (rep_ == 0) throw DomainError("square class of zero");
  for (const auto& [p, e] : factor(rep_)) {
    if (e > 1) throw DomainError(rep_.get_str() + " is not square-free");
  }
}

SquareClass square_class(const Rat& x) {
  if (x == 0) throw DomainError("square class of zero");
  // x * den^2 = num * den has the same class.
  Int rep = x < 0 ? Int(-1) : Int(1);
  for (const Int& part : {x.get_num(), x.get_den()}) {
    for (const auto& [p, e] : factor(part)) {
      if (e % 2 == 1) rep *= p;
    }
  }
  return SquareClass(rep);
}

IdealZ::IdealZ(Int generator) : gen_(abs(generator)) {}

IdealZ IdealZ::intersect(const IdealZ& rhs) const { return IdealZ(lcm(gen_, rhs.gen_)); }

IdealZ IdealZ::sum(const IdealZ& rhs) const { return IdealZ(gcd(gen_, rhs.gen_)); }

bool IdealZ::contains(const IdealZ& rhs) const {
  if (gen_ == 0) return rhs.gen_ == 0;
  return mpz_divisible_p(rhs.gen_.get_mpz_t(), gen_.get_mpz_t()) != 0;
}

IdealZ iota(const SquareClass& c) { return IdealZ(abs(c.representative())); }

// ---------------------------------------------------------------------------

Place Place::finite(Int p) {
  require_prime(p);
  Place v;
  v.prime_ = std::move(p);
  return v;
}

const Int& Place::prime() const {
  if (!prime_) throw DomainError("the real place has no prime");
  return *prime_;
}

namespace {

// Residue of an odd integer modulo 8, in {1, 3, 5, 7}.
unsigned long mod8(const Int& u) {
  Int r = u % 8;
  if (r < 0) r += 8;
  return r.get_ui();
}

// (-1)^((u-1)/2) exponent for odd u.
int eps(const Int& u) { return mod8(u) % 4 == 3 ? 1 : 0; }
// (-1)^((u^2-1)/8) exponent for odd u.
int omega(const Int& u) {
  const auto r = mod8(u);
  return (r == 3 || r == 5) ? 1 : 0;
}

int legendre(const Int& u, const Int& p) {
  Int r = u % p;
  if (r < 0) r += p;
  return mpz_legendre(r.get_mpz_t(), p.get_mpz_t());
}

// Integer in the same square class as x.
Int integral_rep(const Rat& x) { return x.get_num() * x.get_den(); }

}  // namespace

int hilbert_symbol(const Rat& a, const Rat& b, const Place& v) {
  if (a == 0 || b == 0) throw DomainError("Hilbert symbol of zero");
  if (v.is_real()) return (a < 0 && b < 0) ? -1 : 1;
  const Int& p = v.prime();
  const Int A = integral_rep(a);
  const Int B = integral_rep(b);
  const long alpha = int_valuation(A, p);
  const long beta = int_valuation(B, p);
  Int u, w;
  mpz_remove(u.get_mpz_t(), A.get_mpz_t(), p.get_mpz_t());
  mpz_remove(w.get_mpz_t(), B.get_mpz_t(), p.get_mpz_t());
  if (p == 2) {
    const int e = eps(u) * eps(w) + static_cast<int>(alpha % 2) * omega(w) +
                  static_cast<int>(beta % 2) * omega(u);
    return e % 2 == 0 ? 1 : -1;
  }
  int sign = 1;
  if ((alpha % 2 == 1) && (beta % 2 == 1) && mod8(p) % 4 == 3) sign = -sign;
  if (beta % 2 == 1) sign *= legendre(u, p);
  if (alpha % 2 == 1) sign *= legendre(w, p);
  return sign;
}

int hilbert_symbol(const Rat& a, const Rat& b, const Int& p) {
  return hilbert_symbol(a, b, Place::finite(p));
}

LocalIdeal quadratic_defect(const Rat& a, const Int& p) {
  if (a == 0) throw DomainError("quadratic defect of zero");
  const long k = valuation(a, p).value();
  if (k % 2 != 0) return {p, Valuation(k)};
  const Rat u = unit_part(a, p);
  const Int ui = integral_rep(u);
  if (p == 2) {
    switch (mod8(ui)) {
      case 1: return {p, Valuation::infinity()};
      case 5: return {p, Valuation(k + 2)};
      default: return {p, Valuation(k + 1)};
    }
  }
  if (legendre(ui, p) == 1) return {p, Valuation::infinity()};
  return {p, Valuation(k)};
}

}  // namespace dagger
