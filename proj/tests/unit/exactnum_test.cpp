#include <doctest.h>

#include <algorithm>
#include <random>

#include "dagger/exactnum.hpp"
#include "oracles.hpp"

using namespace dagger;

TEST_CASE("valuation") {
  CHECK(valuation(Rat(50), Int(5)) == Valuation(2));
  CHECK(valuation(Rat(0), Int(3)).is_infinite());
  CHECK(valuation(make_rat(9, 10), Int(5)) == Valuation(-1));
  CHECK_THROWS_AS(valuation(Rat(12), Int(6)), DomainError);
}

TEST_CASE("valuation is additive") {
  std::mt19937_64 rng(11);
  for (int t = 0; t < 500; ++t) {
    const Rat x = oracle::random_rat(rng, 1000, 1000);
    const Rat y = oracle::random_rat(rng, 1000, 1000);
    if (x == 0 || y == 0) continue;
    for (long p : {2, 3, 5, 7}) {
      CHECK(valuation(x * y, Int(p)) == valuation(x, Int(p)) + valuation(y, Int(p)));
    }
  }
}

TEST_CASE("parse and print rationals") {
  CHECK(parse_rat("-6/4") == make_rat(-3, 2));
  CHECK(parse_rat("+7") == Rat(7));
  CHECK(to_string(make_rat(-3, 2)) == "-3/2");
  CHECK(to_string(Rat(5)) == "5");
  CHECK_THROWS_AS(parse_rat("1/0"), ParseError);
  CHECK_THROWS_AS(parse_rat("x"), ParseError);
  CHECK_THROWS_AS(parse_rat("1/-2"), ParseError);
  CHECK_THROWS_AS(parse_rat(""), ParseError);
}

TEST_CASE("factorization") {
  const auto f = factor(Int(360));
  REQUIRE(f.size() == 3);
  CHECK(f[0] == std::pair<Int, unsigned long>(Int(2), 3));
  CHECK(f[2] == std::pair<Int, unsigned long>(Int(5), 1));
  // 1000003 * 1000033 has no factor below the bound and is not a prime square.
  CHECK_THROWS_AS(factor(Int(1000003) * 1000033, 1000), FactorizationError);
  const auto sq = factor(Int(1000003) * 1000003, 1000);
  REQUIRE(sq.size() == 1);
  CHECK(sq[0].second == 2);
  CHECK(is_prime(Int("1000000007")));
  CHECK_FALSE(is_prime(Int(561)));
}

TEST_CASE("square classes") {
  CHECK(square_class(make_rat(4, 9)).representative() == 1);
  CHECK(square_class(Rat(-5)).representative() == -5);
  CHECK(square_class(Rat(50)).representative() == 2);
  CHECK(square_class(make_rat(3, 8)).representative() == 6);
  CHECK_THROWS_AS(square_class(Rat(0)), DomainError);
  CHECK_THROWS_AS(SquareClass(Int(12)), DomainError);
}

TEST_CASE("square class is constant on square multiples") {
  std::mt19937_64 rng(12);
  for (int t = 0; t < 1000; ++t) {
    const Rat x = oracle::random_rat(rng, 500, 50);
    const Rat s = oracle::random_rat(rng, 60, 60);
    if (x == 0 || s == 0) continue;
    CHECK(square_class(x * s * s) == square_class(x));
  }
}

TEST_CASE("iota and ideals") {
  CHECK(iota(SquareClass(Int(1))) == IdealZ(Int(1)));
  CHECK(iota(SquareClass(Int(5))) == IdealZ(Int(5)));
  CHECK(iota(SquareClass(Int(-5))) == IdealZ(Int(5)));
  CHECK(IdealZ(Int(2)).intersect(IdealZ(Int(5))) == IdealZ(Int(10)));
  CHECK(IdealZ(Int(6)).sum(IdealZ(Int(10))) == IdealZ(Int(2)));
  CHECK(IdealZ(Int(2)).contains(IdealZ(Int(10))));
  CHECK(IdealZ(Int(0)).is_zero());
}

TEST_CASE("hilbert symbol examples") {
  CHECK(hilbert_symbol(Rat(-1), Rat(-5), Place::real()) == -1);
  CHECK(hilbert_symbol(Rat(-1), Rat(-5), Int(2)) == -1);
  CHECK(hilbert_symbol(Rat(-1), Rat(-5), Int(5)) == 1);
  CHECK(oracle::hilbert_symbol(Rat(-1), Rat(-5), 2) == -1);
  CHECK(oracle::hilbert_symbol(Rat(-1), Rat(-5), 5) == 1);
}

TEST_CASE("hilbert symbol agrees with the solvability oracle") {
  for (long a = -12; a <= 12; ++a) {
    for (long b = -12; b <= 12; ++b) {
      if (a == 0 || b == 0) continue;
      for (long p : {2, 3, 5, 7}) {
        CHECK_MESSAGE(hilbert_symbol(Rat(a), Rat(b), Int(p)) == oracle::hilbert_symbol(Rat(a), Rat(b), p),
                      "a=" << a << " b=" << b << " p=" << p);
      }
    }
  }
}

TEST_CASE("hilbert symbol: symmetry, bimultiplicativity, product formula") {
  std::mt19937_64 rng(13);
  int checked = 0;
  while (checked < 500) {
    const Rat a = oracle::random_rat(rng, 200, 30);
    const Rat b = oracle::random_rat(rng, 200, 30);
    const Rat c = oracle::random_rat(rng, 200, 30);
    if (a == 0 || b == 0 || c == 0) continue;
    ++checked;
    int product = hilbert_symbol(a, b, Place::real());
    std::vector<Int> primes = prime_support(a);
    for (const Int& p : prime_support(b)) primes.push_back(p);
    primes.push_back(Int(2));
    std::sort(primes.begin(), primes.end());
    primes.erase(std::unique(primes.begin(), primes.end()), primes.end());
    for (const Int& p : primes) {
      const int s = hilbert_symbol(a, b, p);
      product *= s;
      CHECK(s == hilbert_symbol(b, a, p));
      CHECK(hilbert_symbol(a * c, b, p) == s * hilbert_symbol(c, b, p));
    }
    CHECK(product == 1);
  }
}

TEST_CASE("quadratic defect examples") {
  CHECK(quadratic_defect(Rat(17), Int(2)).is_zero());
  CHECK(quadratic_defect(Rat(5), Int(2)).valuation == Valuation(2));
  CHECK(quadratic_defect(Rat(3), Int(7)).valuation == Valuation(0));
  CHECK(quadratic_defect(Rat(-2), Int(2)).valuation == Valuation(1));
  CHECK(quadratic_defect(Rat(12), Int(2)).valuation == Valuation(3));
  CHECK_THROWS_AS(quadratic_defect(Rat(0), Int(2)), DomainError);
}

TEST_CASE("quadratic defect agrees with the digit-search oracle") {
  for (long a = -50; a <= 50; ++a) {
    if (a == 0) continue;
    for (long p : {2, 3, 5, 7}) {
      const LocalIdeal d = quadratic_defect(Rat(a), Int(p));
      const long expected = oracle::quadratic_defect_valuation(a, p);
      if (expected < 0) {
        CHECK_MESSAGE(d.is_zero(), "a=" << a << " p=" << p);
      } else {
        CHECK_MESSAGE(d.valuation == Valuation(expected), "a=" << a << " p=" << p);
      }
      const long k = valuation(Rat(a), Int(p)).value();
      if (k % 2 == 1) CHECK(d.valuation == Valuation(k));
    }
  }
}
