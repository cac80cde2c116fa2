#include "dagger/quatalg.hpp"

#include <algorithm>

namespace dagger {

QuaternionAlgebra::QuaternionAlgebra(Rat a, Rat b) : a_(std::move(a)), b_(std::move(b)) {
  if (a_ == 0 || b_ == 0) throw DomainError("quaternion algebra needs nonzero a and b");
}

RatMatrix QuaternionAlgebra::trace_form() const {
  RatMatrix q(4, 4);
  q(0, 0) = 2;
  q(1, 1) = 2 * a_;
  q(2, 2) = 2 * b_;
  q(3, 3) = -2 * a_ * b_;
  return q;
}

Quat::Quat(const QuaternionAlgebra& alg, std::span<const Rat> coords) : alg_(alg), c_{} {
  if (coords.size() != 4) throw DomainError("quaternion needs four coordinates");
  for (std::size_t k = 0; k < 4; ++k) c_[k] = coords[k];
}

Quat Quat::basis(const QuaternionAlgebra& alg, std::size_t k) {
  Quat e(alg);
  e.c_.at(k) = 1;
  return e;
}

Quat Quat::conjugate() const { return Quat(alg_, c_[0], -c_[1], -c_[2], -c_[3]); }

Rat Quat::nrd() const {
  const Rat& a = alg_.a();
  const Rat& b = alg_.b();
  return c_[0] * c_[0] - a * c_[1] * c_[1] - b * c_[2] * c_[2] + a * b * c_[3] * c_[3];
}

bool Quat::is_zero() const { return c_[0] == 0 && is_scalar(); }

Quat Quat::inverse() const {
  const Rat n = nrd();
  if (n == 0) throw DomainError("quaternion is not invertible");
  return (1 / n) * conjugate();
}

namespace {

void require_same(const Quat& lhs, const Quat& rhs) {
  if (!(lhs.algebra() == rhs.algebra())) throw DomainError("quaternions from different algebras");
}

}  // namespace

Quat operator+(const Quat& lhs, const Quat& rhs) {
  require_same(lhs, rhs);
  Quat out(lhs.alg_);
  for (std::size_t k = 0; k < 4; ++k) out.c_[k] = lhs.c_[k] + rhs.c_[k];
  return out;
}

Quat operator-(const Quat& lhs, const Quat& rhs) { return lhs + (-rhs); }

Quat operator-(const Quat& x) {
  Quat out(x.alg_);
  for (std::size_t k = 0; k < 4; ++k) out.c_[k] = -x.c_[k];
  return out;
}

Quat operator*(const Rat& s, const Quat& x) {
  Quat out(x.alg_);
  for (std::size_t k = 0; k < 4; ++k) out.c_[k] = s * x.c_[k];
  return out;
}

Quat operator*(const Quat& lhs, const Quat& rhs) {
  require_same(lhs, rhs);
  const Rat& a = lhs.alg_.a();
  const Rat& b = lhs.alg_.b();
  const auto& [w1, x1, y1, z1] = lhs.c_;
  const auto& [w2, x2, y2, z2] = rhs.c_;
  return Quat(lhs.alg_,
              w1 * w2 + a * x1 * x2 + b * y1 * y2 - a * b * z1 * z2,
              w1 * x2 + x1 * w2 - b * y1 * z2 + b * z1 * y2,
              w1 * y2 + y1 * w2 + a * x1 * z2 - a * z1 * x2,
              w1 * z2 + z1 * w2 + x1 * y2 - y1 * x2);
}

OrthogonalInvolution::OrthogonalInvolution(Quat u) : u_(std::move(u)), u_inv_(u_.algebra()) {
  if (!u_.is_pure()) throw DomainError("involution needs a pure quaternion u");
  if (u_.is_zero()) throw DomainError("involution needs u != 0");
  if (u_.nrd() == 0) throw DomainError("involution needs an invertible u");
  u_inv_ = u_.inverse();
  matrix_ = RatMatrix(4, 4);
  for (std::size_t k = 0; k < 4; ++k) {
    const Quat image = apply(Quat::basis(algebra(), k));
    for (std::size_t j = 0; j < 4; ++j) matrix_(k, j) = image[j];
  }
}

Quat OrthogonalInvolution::apply(const Quat& x) const {
  require_same(u_, x);
  return u_ * x.conjugate() * u_inv_;
}

bool operator==(const OrthogonalInvolution& lhs, const OrthogonalInvolution& rhs) {
  if (!(lhs.algebra() == rhs.algebra())) return false;
  // Parallel iff all 2x2 minors of the coordinate pair vanish.
  for (std::size_t i = 1; i < 4; ++i)
    for (std::size_t j = i + 1; j < 4; ++j)
      if (lhs.u_[i] * rhs.u_[j] != lhs.u_[j] * rhs.u_[i]) return false;
  return true;
}

SquareClass involution_discriminant(const OrthogonalInvolution& inv) {
  return square_class(inv.u().nrd());
}

IdealZ algebra_discriminant(const QuaternionAlgebra& alg) {
  // Primes of 2, a and b separately: they may cancel in the product 2ab.
  std::vector<Int> primes = prime_support(alg.a());
  for (const Int& p : prime_support(alg.b())) primes.push_back(p);
  primes.push_back(Int(2));
  std::sort(primes.begin(), primes.end());
  primes.erase(std::unique(primes.begin(), primes.end()), primes.end());
  Int disc = 1;
  for (const Int& p : primes) {
    if (hilbert_symbol(alg.a(), alg.b(), p) == -1) disc *= p;
  }
  return IdealZ(disc);
}

std::optional<int> is_similitude(const OrthogonalInvolution& inv, const Quat& g) {
  const Rat n = g.nrd();
  if (n == 0) throw DomainError("similitude test needs an invertible element");
  const Quat s = inv.apply(g) * g;
  if (!s.is_scalar()) return std::nullopt;
  if (s[0] == n) return 0;
  if (s[0] == -n) return 1;
  throw InternalError("g^‡ g is a scalar other than ±nrd(g)");
}

}  // namespace dagger
