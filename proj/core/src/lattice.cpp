#include "dagger/lattice.hpp"

namespace dagger {

RatLattice RatLattice::from_generators(const RatMatrix& gens) {
  if (gens.rows() == 0) throw DomainError("lattice needs at least one generator");
  const Int d = common_denominator(gens);
  IntMatrix scaled_gens(gens.rows(), gens.cols());
  for (std::size_t i = 0; i < gens.rows(); ++i)
    for (std::size_t j = 0; j < gens.cols(); ++j) {
      const Rat x = gens(i, j) * d;
      scaled_gens(i, j) = x.get_num();
    }
  const IntMatrix h = hermite_normal_form(std::move(scaled_gens));
  RatMatrix basis = to_rat(h);
  const Rat inv_d = make_rat(1, d);
  basis = dagger::scaled(basis, inv_d);
  auto inv = inverse(basis);
  if (!inv) throw InternalError("Hermite basis is singular");
  return RatLattice(std::move(basis), std::move(*inv));
}

RatLattice RatLattice::localized(const RatMatrix& gens, const Int& p) {
  if (!is_prime(p)) throw DomainError(p.get_str() + " is not prime");
  const std::size_t n = gens.cols();
  // Scale each generator by the prime-to-p part of its denominator; this is
  // a unit at p, so the local span is unchanged.
  RatMatrix g = gens;
  Int pe = 1;
  for (std::size_t i = 0; i < g.rows(); ++i) {
    Int den = 1;
    for (const Rat& x : g.row(i)) den = lcm(den, x.get_den());
    Int p_part;
    const auto e = mpz_remove(p_part.get_mpz_t(), den.get_mpz_t(), p.get_mpz_t());
    for (Rat& x : g.row(i)) x *= p_part;
    pe = std::max(pe, pow(p, e));
  }
  const RatLattice raw = from_generators(g);
  // p^N Z^n lies in the local lattice once N >= v_p(det(pe * H)) - v_p(pe).
  const Rat det_scaled = raw.volume() * pow(pe, static_cast<unsigned long>(n));
  const long e_pe = valuation(pe, p).value();
  const long v = valuation(det_scaled, p).value() - e_pe;
  RatMatrix full = g;
  const Rat pn = v >= 0 ? Rat(pow(p, static_cast<unsigned long>(v)))
                        : make_rat(1, pow(p, static_cast<unsigned long>(-v)));
  for (std::size_t k = 0; k < n; ++k) {
    std::vector<Rat> row(n, Rat(0));
    row[k] = pn;
    full.append_row(row);
  }
  return from_generators(full);
}

RatLattice RatLattice::localized(const Int& p) const { return localized(basis_, p); }

std::vector<Rat> RatLattice::coordinates(std::span<const Rat> v) const {
  return row_times(v, inverse_);
}

bool RatLattice::contains(std::span<const Rat> v) const {
  for (const Rat& c : coordinates(v))
    if (c.get_den() != 1) return false;
  return true;
}

bool RatLattice::contains(const RatLattice& other) const {
  for (std::size_t i = 0; i < other.dim(); ++i)
    if (!contains(other.basis_.row(i))) return false;
  return true;
}

RatLattice RatLattice::sum(const RatLattice& other) const {
  return from_generators(vstack(basis_, other.basis_));
}

RatLattice RatLattice::intersect(const RatLattice& other) const {
  return dual().sum(other.dual()).dual();
}

RatLattice RatLattice::dual() const { return from_generators(transpose(inverse_)); }

RatLattice RatLattice::scaled(const Rat& c) const {
  if (c == 0) throw DomainError("cannot scale a lattice by zero");
  return from_generators(dagger::scaled(basis_, c));
}

RatLattice RatLattice::transformed(const RatMatrix& m) const {
  return from_generators(basis_ * m);
}

Rat RatLattice::volume() const { return abs(determinant(basis_)); }

std::strong_ordering operator<=>(const RatLattice& lhs, const RatLattice& rhs) {
  const auto& a = lhs.basis_.data();
  const auto& b = rhs.basis_.data();
  if (a.size() != b.size()) return a.size() <=> b.size();
  for (std::size_t k = 0; k < a.size(); ++k) {
    const int c = cmp(a[k], b[k]);
    if (c != 0) return c < 0 ? std::strong_ordering::less : std::strong_ordering::greater;
  }
  return std::strong_ordering::equal;
}

}  // namespace dagger
