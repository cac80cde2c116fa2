#include <doctest.h>

#include <random>

#include "dagger/lattices.hpp"
#include "golden.hpp"
#include "oracles.hpp"

using namespace dagger;

namespace {

const QuaternionAlgebra& H() { return golden::algebra(); }
Quat q(const Rat& w, const Rat& x, const Rat& y, const Rat& z) { return golden::quat(w, x, y, z); }

// An order from a random basis change of the standard order's generators:
// Z + N * O_std + (random conjugate) keeps things interesting but valid.
Order4 random_order(std::mt19937_64& rng, const QuaternionAlgebra& h) {
  const Order4 std_order = Order4::standard(h);
  const Quat g = oracle::random_quat(rng, h, 4);
  if (g.nrd() == 0) return std_order;
  // g O g^-1 ∩ O is an order.
  const Quat gi = g.inverse();
  std::vector<Quat> conj;
  for (const Quat& e : std_order.basis_elements()) conj.push_back(g * e * gi);
  const Order4 other(IntegralLattice4::canonicalize(conj));
  return std_order.intersect(other);
}

}  // namespace

TEST_CASE("canonicalize") {
  const auto id = IntegralLattice4::canonicalize({q(1, 0, 0, 0), q(0, 1, 0, 0), q(0, 0, 1, 0), q(0, 0, 0, 1)});
  CHECK(id.basis() == RatMatrix::identity(4));
  const auto h = make_rat(1, 2);
  const auto o = IntegralLattice4::canonicalize({q(1, 0, 0, 0), q(0, 1, 0, 0), q(0, 0, 1, 0), q(h, h, h, h)});
  // Upper-triangular canonical rows.
  RatMatrix expected(4, 4, {h, h, h, h, Rat(0), Rat(1), Rat(0), Rat(0), Rat(0), Rat(0), Rat(1), Rat(0),
                            Rat(0), Rat(0), Rat(0), Rat(1)});
  CHECK(o.basis() == expected);
  CHECK(IntegralLattice4::from_generators(H(), o.basis()) == o);
  const auto s = IntegralLattice4::canonicalize({q(2, 0, 0, 0), q(0, 2, 0, 0), q(1, 1, 0, 0), q(0, 0, 1, 0), q(0, 0, 0, 1)});
  RatMatrix expected_s(4, 4, {Rat(1), Rat(1), Rat(0), Rat(0), Rat(0), Rat(2), Rat(0), Rat(0), Rat(0), Rat(0),
                              Rat(1), Rat(0), Rat(0), Rat(0), Rat(0), Rat(1)});
  CHECK(s.basis() == expected_s);
  CHECK_THROWS_AS(IntegralLattice4::canonicalize({q(1, 0, 0, 0), q(0, 1, 0, 0), q(1, 1, 0, 0)}), DomainError);
}

TEST_CASE("golden intersections") {
  const OrthogonalInvolution inv = golden::involution();
  const Order4 o1 = golden::order1();
  const Order4 o2 = golden::order2();
  CHECK(dagger_intersection(inv, o1) == golden::expected_intersection1());
  CHECK(dagger_intersection(inv, o2) == golden::expected_intersection2());
  CHECK(o1.intersect(o1) == o1);
}

TEST_CASE("is_order") {
  CHECK(is_order(Order4::standard(H())));
  CHECK_FALSE(is_order(IntegralLattice4::canonicalize({q(1, 0, 0, 0), q(0, make_rat(1, 2), 0, 0), q(0, 0, 1, 0), q(0, 0, 0, 1)})));
  CHECK(is_order(golden::order1()));
  CHECK(is_order(golden::order2()));
  // The printed generator of the second order is not integral.
  CHECK_FALSE(is_order(IntegralLattice4::canonicalize(
      {q(1, 0, 0, 0), q(0, 9, 0, 0), q(0, 0, 1, 0), q(1, make_rat(385, 90), make_rat(-63, 90), make_rat(1, 90))})));
  CHECK_THROWS_WITH_AS(Order4(IntegralLattice4::canonicalize({q(2, 0, 0, 0), q(0, 1, 0, 0), q(0, 0, 1, 0), q(0, 0, 0, 1)})),
                       "lattice does not contain 1", DomainError);
  CHECK_THROWS_WITH_AS(Order4(IntegralLattice4::canonicalize({q(1, 0, 0, 0), q(0, make_rat(1, 2), 0, 0), q(0, 0, 1, 0), q(0, 0, 0, 1)})),
                       "lattice is not closed under multiplication", DomainError);
}

TEST_CASE("reduced discriminants") {
  const OrthogonalInvolution inv = golden::involution();
  CHECK(reduced_discriminant(Order4::standard(H())) == IdealZ(Int(20)));
  const Order4 e1 = dagger_intersection(inv, golden::order1());
  const Order4 e2 = dagger_intersection(inv, golden::order2());
  CHECK(reduced_discriminant(e1) == IdealZ(Int(10)));
  CHECK(reduced_discriminant(e2) == IdealZ(Int(810)));
  CHECK(oracle::trace_gram_determinant(e1) == 100);
  CHECK(oracle::trace_gram_determinant(e2) == 810 * 810);
  CHECK(reduced_discriminant(golden::order1()) == IdealZ(Int(2)));
  CHECK(reduced_discriminant(golden::order2()) == IdealZ(Int(2)));
}

TEST_CASE("involution images") {
  const OrthogonalInvolution inv = golden::involution();
  CHECK(is_dagger_stable(inv, dagger_intersection(inv, golden::order1())));
  CHECK(is_dagger_stable(inv, Order4::standard(H())));
  CHECK_FALSE(is_dagger_stable(inv, golden::order2()));
  CHECK(involution_image(inv, involution_image(inv, golden::order2())) == golden::order2());
}

TEST_CASE("trace dual") {
  const QuaternionAlgebra hamilton(Rat(-1), Rat(-1));
  const auto d = Order4::standard(hamilton).trace_dual();
  RatMatrix expected(4, 4);
  for (std::size_t k = 0; k < 4; ++k) expected(k, k) = make_rat(1, 2);
  CHECK(d.basis() == expected);
  CHECK(d.trace_dual() == Order4::standard(hamilton));
  const auto o1 = golden::order1();
  CHECK(o1.scaled(Rat(3)).trace_dual() == o1.trace_dual().scaled(make_rat(1, 3)));
}

TEST_CASE("discriminant is multiplicative in the index") {
  std::mt19937_64 rng(41);
  for (int t = 0; t < 1000; ++t) {
    const QuaternionAlgebra h(Rat(oracle::random_nonzero(rng, 30)), Rat(oracle::random_nonzero(rng, 30)));
    const Order4 o = random_order(rng, h);
    const long n = 1 + static_cast<long>(rng() % 6);
    // Z + n O is a suborder of index n^3.
    RatMatrix gens = dagger::scaled(o.basis(), Rat(n));
    gens.append_row(std::vector<Rat>{Rat(1), Rat(0), Rat(0), Rat(0)});
    const Order4 sub(IntegralLattice4::from_generators(h, gens));
    const Rat index = sub.lattice().index_in(o.lattice());
    CHECK(index == n * n * n);
    CHECK(Rat(reduced_discriminant(sub).generator()) == index * Rat(reduced_discriminant(o).generator()));
    CHECK(Rat(reduced_discriminant(o).generator() * reduced_discriminant(o).generator()) == oracle::trace_gram_determinant(o));
  }
}

TEST_CASE("modular law on lattices containing a common order") {
  std::mt19937_64 rng(42);
  for (int t = 0; t < 300; ++t) {
    const QuaternionAlgebra h(Rat(oracle::random_nonzero(rng, 30)), Rat(oracle::random_nonzero(rng, 30)));
    const Order4 o = Order4::standard(h);
    auto extend = [&](const IntegralLattice4& l) {
      RatMatrix gens = l.basis();
      std::vector<Rat> v(4);
      for (auto& c : v) c = make_rat(static_cast<long>(rng() % 7), 1 + static_cast<long>(rng() % 4));
      gens.append_row(v);
      return IntegralLattice4::from_generators(h, gens);
    };
    const IntegralLattice4 a = extend(o);
    const IntegralLattice4 b = extend(o);
    const IntegralLattice4 c = extend(a);
    REQUIRE(c.contains(a));
    CHECK(a.sum(b.intersect(c)) == a.sum(b).intersect(c));
    CHECK(a.sum(b).trace_dual() == a.trace_dual().intersect(b.trace_dual()));
  }
}

TEST_CASE("dagger intersections of random orders are stable") {
  std::mt19937_64 rng(43);
  for (int t = 0; t < 300; ++t) {
    const QuaternionAlgebra h(Rat(oracle::random_nonzero(rng, 30)), Rat(oracle::random_nonzero(rng, 30)));
    const OrthogonalInvolution inv(oracle::random_pure_invertible(rng, h, 5));
    const Order4 o = random_order(rng, h);
    const Order4 img = involution_image(inv, o);
    CHECK(involution_image(inv, img) == o);
    CHECK(is_dagger_stable(inv, dagger_intersection(inv, o)));
  }
}
