#include <doctest.h>

#include <random>

#include "dagger/maximality.hpp"
#include "golden.hpp"
#include "oracles.hpp"

using namespace dagger;

TEST_CASE("maximal order containing") {
  const QuaternionAlgebra hamilton(Rat(-1), Rat(-1));
  const Order4 m = maximal_order_containing(Order4::standard(hamilton));
  CHECK(reduced_discriminant(m) == IdealZ(Int(2)));
  CHECK(m.contains(Order4::standard(hamilton)));
  // The Hurwitz order: contains (1 + i + j + ij)/2.
  const auto h = make_rat(1, 2);
  CHECK(m.contains(Quat(hamilton, h, h, h, h)));
  CHECK(maximal_order_containing(golden::order1()) == golden::order1());
  CHECK(maximal_order_containing(m) == m);
}

TEST_CASE("maximal orders of random algebras have discriminant disc(H)") {
  std::mt19937_64 rng(51);
  for (int t = 0; t < 100; ++t) {
    const QuaternionAlgebra h(Rat(oracle::random_nonzero(rng, 30)), Rat(oracle::random_nonzero(rng, 30)));
    const Order4 m = maximal_order_containing(Order4::standard(h));
    CHECK(reduced_discriminant(m) == algebra_discriminant(h));
  }
}

TEST_CASE("target discriminant") {
  CHECK(target_discriminant(golden::algebra(), golden::involution()) == IdealZ(Int(10)));
  const QuaternionAlgebra split(Rat(1), Rat(1));
  CHECK(target_discriminant(split, OrthogonalInvolution(Quat(split, 0, 0, 0, 1))) == IdealZ(Int(1)));
  const QuaternionAlgebra hamilton(Rat(-1), Rat(-1));
  // u = i + j has nrd 2.
  CHECK(target_discriminant(hamilton, OrthogonalInvolution(Quat(hamilton, 0, 1, 1, 0))) == IdealZ(Int(2)));
}

TEST_CASE("golden certificates") {
  const OrthogonalInvolution inv = golden::involution();
  const Order4 e1 = dagger_intersection(inv, golden::order1());
  const Order4 e2 = dagger_intersection(inv, golden::order2());
  const auto c1 = is_maximal_dagger_order(e1, inv);
  CHECK(c1.maximal);
  CHECK(c1.target == IdealZ(Int(10)));
  CHECK(c1.achieved == IdealZ(Int(10)));
  const auto c2 = is_maximal_dagger_order(e2, inv);
  CHECK_FALSE(c2.maximal);
  CHECK(c2.achieved == IdealZ(Int(810)));
  REQUIRE(c2.witnesses.size() == 3);
  CHECK(c2.witnesses[1] == PrimeWitness{Int(3), 4, 0});
}

TEST_CASE("enlarge to a maximal dagger order") {
  const OrthogonalInvolution inv = golden::involution();
  const Order4 e2 = dagger_intersection(inv, golden::order2());
  const Order4 big = enlarge_to_maximal_dagger(e2, inv);
  CHECK(big.contains(e2));
  CHECK(reduced_discriminant(big) == IdealZ(Int(10)));
  CHECK(is_maximal_dagger_order(big, inv).maximal);
  const Order4 e1 = dagger_intersection(inv, golden::order1());
  CHECK(enlarge_to_maximal_dagger(e1, inv) == e1);
  const Order4 from_std = enlarge_to_maximal_dagger(Order4::standard(golden::algebra()), inv);
  CHECK(reduced_discriminant(from_std) == IdealZ(Int(10)));
  CHECK(oracle::superorders(from_std, &inv, Int(2)).empty());
  CHECK(oracle::superorders(from_std, &inv, Int(5)).empty());
}

TEST_CASE("index-p superorders match the oracle") {
  const Order4 o = Order4::standard(golden::algebra());
  for (long p : {2, 5}) {
    const auto fast = index_p_superorders(o, Int(p));
    std::vector<IntegralLattice4> slow;
    for (const auto& l : oracle::superorders(o, nullptr, Int(p), 1)) slow.push_back(l);
    REQUIRE(fast.size() == slow.size());
    for (std::size_t k = 0; k < fast.size(); ++k) CHECK(fast[k] == slow[k]);
  }
}

TEST_CASE("ramified prime: the maximal dagger order is unique") {
  // (-1, -1) ramifies at 2; the Hurwitz order is the unique maximal order
  // there, so it is the only maximal ‡-order locally.
  const QuaternionAlgebra hamilton(Rat(-1), Rat(-1));
  for (const Quat& u : {Quat(hamilton, 0, 1, 0, 0), Quat(hamilton, 0, 1, 1, 0), Quat(hamilton, 0, 1, 2, 3)}) {
    const OrthogonalInvolution inv(u);
    const Order4 o = enlarge_to_maximal_dagger(Order4::standard(hamilton), inv);
    CHECK(is_maximal_dagger_order(o, inv).maximal);
    CHECK(valuation(reduced_discriminant(o).generator(), Int(2)) == Valuation(1));
    CHECK(oracle::superorders(o, &inv, Int(2)).empty());
    CHECK(oracle::superorders(o, nullptr, Int(2)).empty());
  }
}

TEST_CASE("random enlargements reach the target") {
  std::mt19937_64 rng(52);
  for (int t = 0; t < 40; ++t) {
    const QuaternionAlgebra h(Rat(oracle::random_nonzero(rng, 30)), Rat(oracle::random_nonzero(rng, 30)));
    const OrthogonalInvolution inv(oracle::random_pure_invertible(rng, h, 5));
    const Order4 o = enlarge_to_maximal_dagger(Order4::standard(h), inv);
    CHECK(reduced_discriminant(o) == target_discriminant(h, inv));
    CHECK(is_maximal_dagger_order(o, inv).maximal);
  }
}
