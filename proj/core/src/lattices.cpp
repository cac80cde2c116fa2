#include "dagger/lattices.hpp"

namespace dagger {

IntegralLattice4::IntegralLattice4(QuaternionAlgebra alg, RatLattice lattice)
    : alg_(std::move(alg)), lattice_(std::move(lattice)) {
  if (lattice_.dim() != 4 || lattice_.basis().cols() != 4) {
    throw DomainError("quaternion lattice must have rank 4");
  }
}

IntegralLattice4 IntegralLattice4::from_generators(const QuaternionAlgebra& alg,
                                                   const RatMatrix& gens) {
  if (gens.cols() != 4) throw DomainError("quaternion generators need four coordinates");
  return IntegralLattice4(alg, RatLattice::from_generators(gens));
}

IntegralLattice4 IntegralLattice4::canonicalize(const std::vector<Quat>& vectors) {
  if (vectors.empty()) throw DomainError("no generators given");
  const QuaternionAlgebra& alg = vectors.front().algebra();
  RatMatrix gens(0, 4);
  for (const Quat& v : vectors) {
    if (!(v.algebra() == alg)) throw DomainError("generators from different algebras");
    gens.append_row(v.coords());
  }
  return from_generators(alg, gens);
}

std::vector<Quat> IntegralLattice4::basis_elements() const {
  std::vector<Quat> out;
  for (std::size_t i = 0; i < 4; ++i) out.emplace_back(alg_, basis().row(i));
  return out;
}

bool IntegralLattice4::contains(const Quat& x) const {
  if (!(x.algebra() == alg_)) throw DomainError("element from a different algebra");
  return lattice_.contains(x.coords());
}

bool IntegralLattice4::contains(const IntegralLattice4& other) const {
  require_same(other);
  return lattice_.contains(other.lattice_);
}

void IntegralLattice4::require_same(const IntegralLattice4& other) const {
  if (!(alg_ == other.alg_)) throw DomainError("lattices live in different algebras");
}

IntegralLattice4 IntegralLattice4::sum(const IntegralLattice4& other) const {
  require_same(other);
  return IntegralLattice4(alg_, lattice_.sum(other.lattice_));
}

IntegralLattice4 IntegralLattice4::intersect(const IntegralLattice4& other) const {
  require_same(other);
  return IntegralLattice4(alg_, lattice_.intersect(other.lattice_));
}

IntegralLattice4 IntegralLattice4::trace_dual() const {
  // x Q B^T integral  <=>  x in Z^4 (Q B^T)^{-1} = Z^4 B^{-T} Q^{-1}.
  const RatMatrix q = alg_.trace_form();
  RatMatrix q_inv(4, 4);
  for (std::size_t k = 0; k < 4; ++k) q_inv(k, k) = 1 / q(k, k);
  return IntegralLattice4(alg_, lattice_.dual().transformed(q_inv));
}

IntegralLattice4 IntegralLattice4::scaled(const Rat& c) const {
  return IntegralLattice4(alg_, lattice_.scaled(c));
}

IntegralLattice4 IntegralLattice4::transformed(const RatMatrix& m) const {
  return IntegralLattice4(alg_, lattice_.transformed(m));
}

IntegralLattice4 IntegralLattice4::localized(const Int& p) const {
  return IntegralLattice4(alg_, lattice_.localized(p));
}

Rat IntegralLattice4::trace_determinant() const {
  const RatMatrix& b = basis();
  return abs(determinant(b * alg_.trace_form() * transpose(b)));
}

bool is_order(const IntegralLattice4& lattice) {
  const QuaternionAlgebra& alg = lattice.algebra();
  if (!lattice.contains(Quat::scalar(alg, 1))) return false;
  const auto e = lattice.basis_elements();
  for (const Quat& x : e)
    for (const Quat& y : e)
      if (!lattice.contains(x * y)) return false;
  return true;
}

Order4::Order4(IntegralLattice4 lattice) : IntegralLattice4(std::move(lattice)) {
  if (!contains(Quat::scalar(algebra(), 1))) throw DomainError("lattice does not contain 1");
  if (!is_order(*this)) throw DomainError("lattice is not closed under multiplication");
}

Order4 Order4::standard(const QuaternionAlgebra& alg) {
  return Order4(IntegralLattice4::from_generators(alg, RatMatrix::identity(4)));
}

Order4 Order4::intersect(const Order4& other) const {
  return Order4(IntegralLattice4::intersect(other));
}

IdealZ reduced_discriminant(const Order4& order) {
  const Rat det = order.trace_determinant();
  if (det.get_den() != 1) throw InternalError("order has a non-integral trace form");
  const Int& n = det.get_num();
  if (mpz_perfect_square_p(n.get_mpz_t()) == 0) {
    throw InternalError("trace-form determinant " + n.get_str() + " is not a square");
  }
  return IdealZ(sqrt(n));
}

IntegralLattice4 involution_image(const OrthogonalInvolution& inv,
                                  const IntegralLattice4& lattice) {
  if (!(inv.algebra() == lattice.algebra())) throw DomainError("involution on a different algebra");
  return lattice.transformed(inv.matrix());
}

Order4 involution_image(const OrthogonalInvolution& inv, const Order4& order) {
  return Order4(involution_image(inv, static_cast<const IntegralLattice4&>(order)));
}

bool is_dagger_stable(const OrthogonalInvolution& inv, const IntegralLattice4& lattice) {
  return involution_image(inv, lattice) == lattice;
}

Order4 dagger_intersection(const OrthogonalInvolution& inv, const Order4& order) {
  return order.intersect(involution_image(inv, order));
}

IntegralLattice4 trace_dual(const IntegralLattice4& lattice) { return lattice.trace_dual(); }

RatMatrix right_multiplication(const Quat& y) {
  RatMatrix m(4, 4);
  for (std::size_t k = 0; k < 4; ++k) {
    const Quat p = Quat::basis(y.algebra(), k) * y;
    for (std::size_t j = 0; j < 4; ++j) m(k, j) = p[j];
  }
  return m;
}

RatMatrix left_multiplication(const Quat& y) {
  RatMatrix m(4, 4);
  for (std::size_t k = 0; k < 4; ++k) {
    const Quat p = y * Quat::basis(y.algebra(), k);
    for (std::size_t j = 0; j < 4; ++j) m(k, j) = p[j];
  }
  return m;
}

}  // namespace dagger
