#include <doctest.h>

#include <random>
#include <set>

#include "dagger/lattice.hpp"
#include "dagger/matrix.hpp"

using namespace dagger;

namespace {

IntMatrix random_unimodular(std::mt19937_64& rng, std::size_t n) {
  std::uniform_int_distribution<long> d(-3, 3);
  IntMatrix u = IntMatrix::identity(n);
  for (int step = 0; step < 12; ++step) {
    const std::size_t i = rng() % n, j = rng() % n;
    if (i == j) continue;
    const long c = d(rng);
    for (std::size_t k = 0; k < n; ++k) u(i, k) += c * u(j, k);
  }
  return u;
}

IntMatrix random_nonsingular(std::mt19937_64& rng, std::size_t n) {
  std::uniform_int_distribution<long> d(-9, 9);
  for (;;) {
    IntMatrix m(n, n);
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j) m(i, j) = d(rng);
    if (determinant(to_rat(m)) != 0) return m;
  }
}

}  // namespace

TEST_CASE("hermite normal form shape") {
  IntMatrix g(3, 2, {Int(4), Int(6), Int(2), Int(0), Int(0), Int(3)});
  const IntMatrix h = hermite_normal_form(g);
  CHECK(h(1, 0) == 0);
  CHECK(h(0, 0) > 0);
  CHECK(h(1, 1) > 0);
  CHECK(h(0, 1) >= 0);
  CHECK(h(0, 1) < h(1, 1));
  CHECK(abs(determinant(to_rat(h))) == 6);
  CHECK_THROWS_AS(hermite_normal_form(IntMatrix(2, 2, {Int(1), Int(2), Int(2), Int(4)})), DomainError);
}

TEST_CASE("canonical basis is idempotent and rebasing-invariant") {
  std::mt19937_64 rng(21);
  for (int t = 0; t < 1000; ++t) {
    const IntMatrix m = random_nonsingular(rng, 4);
    const RatMatrix scaled_m = scaled(to_rat(m), make_rat(1, 1 + static_cast<long>(rng() % 6)));
    const RatLattice l = RatLattice::from_generators(scaled_m);
    CHECK(RatLattice::from_generators(l.basis()) == l);
    const RatMatrix rebased = to_rat(random_unimodular(rng, 4)) * scaled_m;
    CHECK(RatLattice::from_generators(rebased) == l);
  }
}

TEST_CASE("lattice sum, intersection, duality") {
  std::mt19937_64 rng(22);
  for (int t = 0; t < 200; ++t) {
    const RatLattice a = RatLattice::from_generators(to_rat(random_nonsingular(rng, 3)));
    const RatLattice b = RatLattice::from_generators(to_rat(random_nonsingular(rng, 3)));
    const RatLattice s = a.sum(b);
    const RatLattice i = a.intersect(b);
    CHECK(s.contains(a));
    CHECK(s.contains(b));
    CHECK(a.contains(i));
    CHECK(b.contains(i));
    CHECK(a.dual().dual() == a);
    CHECK(a.sum(b).dual() == a.dual().intersect(b.dual()));
    // [a+b : a] = [b : a∩b]
    CHECK(a.volume() / s.volume() == i.volume() / b.volume());
  }
}

TEST_CASE("localized lattices") {
  // <(1/6, 0), (0, 5)> at p = 2 is <(1/2, 0), (0, 1)>.
  RatMatrix g(2, 2, {make_rat(1, 6), Rat(0), Rat(0), Rat(5)});
  const RatLattice l = RatLattice::localized(g, Int(2));
  CHECK(l == RatLattice::from_generators(RatMatrix(2, 2, {make_rat(1, 2), Rat(0), Rat(0), Rat(1)})));
  const RatLattice l3 = RatLattice::localized(g, Int(3));
  CHECK(l3 == RatLattice::from_generators(RatMatrix(2, 2, {make_rat(1, 3), Rat(0), Rat(0), Rat(1)})));
  const RatLattice l5 = RatLattice::localized(g, Int(5));
  CHECK(l5 == RatLattice::from_generators(RatMatrix(2, 2, {Rat(1), Rat(0), Rat(0), Rat(5)})));
  CHECK(l5.localized(Int(5)) == l5);
}

TEST_CASE("smith normal form") {
  std::mt19937_64 rng(23);
  for (int t = 0; t < 200; ++t) {
    const IntMatrix a = random_nonsingular(rng, 4);
    const SmithForm s = smith_normal_form(a);
    const IntMatrix d = s.left * a * s.right;
    for (std::size_t i = 0; i < 4; ++i)
      for (std::size_t j = 0; j < 4; ++j) {
        if (i == j) {
          CHECK(d(i, i) == s.diagonal[i]);
          CHECK(s.diagonal[i] > 0);
        } else {
          CHECK(d(i, j) == 0);
        }
      }
    for (std::size_t i = 0; i + 1 < 4; ++i) CHECK(s.diagonal[i + 1] % s.diagonal[i] == 0);
    CHECK(abs(determinant(to_rat(s.left))) == 1);
    CHECK(abs(determinant(to_rat(s.right))) == 1);
  }
}

TEST_CASE("row reduction and kernels mod p") {
  FpMatrix m(5, 3, 3);
  const std::uint64_t vals[3][3] = {{1, 2, 3}, {0, 1, 4}, {1, 3, 2}};
  for (std::size_t i = 0; i < 3; ++i)
    for (std::size_t j = 0; j < 3; ++j) m(i, j) = vals[i][j];
  const auto ker = m.left_kernel();
  REQUIRE(ker.size() == 1);
  for (std::size_t j = 0; j < 3; ++j) {
    std::uint64_t acc = 0;
    for (std::size_t i = 0; i < 3; ++i) acc += ker[0][i] * vals[i][j];
    CHECK(acc % 5 == 0);
  }
  CHECK(rank_mod_p({{1, 2, 3}, {0, 1, 4}, {1, 3, 2}}, 5) == 2);
  CHECK(rank_mod_p({{1, 2, 3}, {2, 4, 1}, {3, 1, 4}}, 5) == 1);
  CHECK(reduce_mod(make_rat(1, 3), 7) == 5);
  CHECK_THROWS_AS(reduce_mod(make_rat(1, 7), 7), DomainError);
}

TEST_CASE("lines of a subspace") {
  for (std::uint64_t p : {2u, 3u, 5u}) {
    std::vector<std::vector<std::uint64_t>> basis = {{1, 0, 0}, {0, 1, 0}, {0, 0, 1}};
    std::set<std::vector<std::uint64_t>> seen;
    std::size_t count = 0;
    for_each_line(basis, p, [&](const std::vector<std::uint64_t>& v) {
      seen.insert(v);
      ++count;
      return true;
    });
    CHECK(count == p * p + p + 1);
    CHECK(seen.size() == count);
  }
}
