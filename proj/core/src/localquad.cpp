#include "dagger/localquad.hpp"

#include <algorithm>

namespace dagger {

namespace {

void require_2x2(const Mat2& m) {
  if (m.rows() != 2 || m.cols() != 2) throw DomainError("expected a 2x2 matrix");
}

Valuation min_valuation(std::initializer_list<Valuation> vs) { return std::min(vs); }

Mat2 unit_matrix(std::size_t i, std::size_t j) {
  Mat2 e(2, 2);
  e(i, j) = 1;
  return e;
}

std::vector<Rat> flatten(const Mat2& m) { return {m(0, 0), m(0, 1), m(1, 0), m(1, 1)}; }

Mat2 column_pair(const std::vector<Rat>& u, const std::vector<Rat>& v) {
  return mat2(u[0], v[0], u[1], v[1]);
}

std::vector<Rat> column(const Mat2& m, std::size_t j) { return {m(0, j), m(1, j)}; }

}  // namespace

Mat2 mat2(const Rat& a, const Rat& b, const Rat& c, const Rat& d) {
  return Mat2(2, 2, {a, b, c, d});
}

Mat2 form_matrix(const Rat& lambda) { return mat2(lambda, 0, 0, 1); }

LocalQuadLattice2::LocalQuadLattice2(Int p, Rat lambda, Mat2 basis)
    : p_(std::move(p)),
      lambda_(std::move(lambda)),
      basis_(std::move(basis)),
      span_(RatLattice::from_generators(Mat2::identity(2))) {
  if (!is_prime(p_)) throw DomainError(p_.get_str() + " is not prime");
  if (lambda_ == 0) throw DomainError("lambda must be nonzero");
  require_2x2(basis_);
  if (determinant(basis_) == 0) throw DomainError("lattice basis is singular");
  gram_ = transpose(basis_) * form_matrix(lambda_) * basis_;
  span_ = RatLattice::localized(transpose(basis_), p_);
}

LocalQuadLattice2 LocalQuadLattice2::standard(const Int& p, const Rat& lambda) {
  return LocalQuadLattice2(p, lambda, Mat2::identity(2));
}

LocalQuadLattice2 LocalQuadLattice2::scaled(const Rat& c) const {
  if (c == 0) throw DomainError("cannot scale a lattice by zero");
  return LocalQuadLattice2(p_, lambda_, dagger::scaled(basis_, c));
}

LocalQuadLattice2 LocalQuadLattice2::image(const Mat2& g) const {
  require_2x2(g);
  return LocalQuadLattice2(p_, lambda_, g * basis_);
}

bool operator==(const LocalQuadLattice2& lhs, const LocalQuadLattice2& rhs) {
  return lhs.p_ == rhs.p_ && lhs.lambda_ == rhs.lambda_ && lhs.span_ == rhs.span_;
}

LocalQuadLattice2 dual(const LocalQuadLattice2& lattice) {
  const auto inv = inverse(lattice.basis());
  const Rat& l = lattice.lambda();
  return LocalQuadLattice2(lattice.prime(), l, mat2(1 / l, 0, 0, 1) * transpose(*inv));
}

ScaleNormVolume scale_norm_volume(const LocalQuadLattice2& lattice) {
  const Int& p = lattice.prime();
  const Mat2& g = lattice.gram();
  const Valuation scale = min_valuation({valuation(g(0, 0), p), valuation(g(0, 1), p),
                                         valuation(g(1, 1), p)});
  const Valuation norm = min_valuation({valuation(g(0, 0), p), valuation(g(1, 1), p),
                                        valuation(Rat(2), p) + scale});
  const Valuation volume = valuation(determinant(g), p);
  return {LocalIdeal{p, scale}, LocalIdeal{p, norm}, LocalIdeal{p, volume}};
}

std::optional<LocalIdeal> is_modular(const LocalQuadLattice2& lattice) {
  const auto snv = scale_norm_volume(lattice);
  if (snv.volume.valuation == snv.scale.valuation + snv.scale.valuation) return snv.scale;
  return std::nullopt;
}

bool is_maximal(const LocalQuadLattice2& lattice, const LocalIdeal& ideal) {
  const Int& p = lattice.prime();
  if (ideal.prime != p) throw DomainError("ideal and lattice live at different primes");
  if (ideal.is_zero()) throw DomainError("maximality needs a nonzero ideal");
  const auto snv = scale_norm_volume(lattice);
  if (!snv.norm.subset_of(ideal)) throw DomainError("lattice norm is not contained in the ideal");
  const long a = ideal.valuation.value();

  // ord(4 a^-2 v) <= 1 means the ideal has no square factor.
  const long crit = 2 * valuation(Rat(2), p).value() - 2 * a + snv.volume.valuation.value();
  if (crit <= 1) return true;

  const Rat& l = lattice.lambda();
  if (p == 2 && a == 0 && lattice == LocalQuadLattice2::standard(p, l) && l.get_den() == 1 &&
      square_class(l).representative() == l.get_num()) {
    return quadratic_defect(-l, p).valuation == Valuation(1);
  }

  // Any strictly larger lattice with norm in the ideal contains one of the
  // p + 1 superlattices of index p.
  const Mat2& b = lattice.basis();
  const std::vector<Rat> e1 = column(b, 0);
  const std::vector<Rat> e2 = column(b, 1);
  const Rat inv_p = make_rat(1, p);
  auto norm_fits = [&](const Mat2& basis) {
    return scale_norm_volume(LocalQuadLattice2(p, l, basis)).norm.subset_of(ideal);
  };
  if (norm_fits(column_pair(e1, {e2[0] * inv_p, e2[1] * inv_p}))) return false;
  for (Int t = 0; t < p; ++t) {
    const std::vector<Rat> v = {(e1[0] + t * e2[0]) * inv_p, (e1[1] + t * e2[1]) * inv_p};
    if (norm_fits(column_pair(v, e2))) return false;
  }
  return true;
}

std::optional<LocalIdeal> maximality_ideal(const LocalQuadLattice2& lattice) {
  const LocalIdeal norm = scale_norm_volume(lattice).norm;
  const LocalIdeal larger{norm.prime, Valuation(norm.valuation.value() - 1)};
  if (is_maximal(lattice, larger)) return larger;
  if (is_maximal(lattice, norm)) return norm;
  return std::nullopt;
}

std::optional<LocalQuadLattice2> orthogonalize(const LocalQuadLattice2& lattice) {
  const Mat2& g = lattice.gram();
  if (g(0, 1) == 0) return lattice;
  const Int& p = lattice.prime();
  const auto snv = scale_norm_volume(lattice);
  if (snv.norm.valuation != snv.scale.valuation) return std::nullopt;

  // Pivot on a basis vector whose norm generates the scale.
  const Mat2& b = lattice.basis();
  std::vector<Rat> pivot;
  std::vector<Rat> other;
  if (valuation(g(0, 0), p) == snv.scale.valuation) {
    pivot = column(b, 0);
    other = column(b, 1);
  } else if (valuation(g(1, 1), p) == snv.scale.valuation) {
    pivot = column(b, 1);
    other = column(b, 0);
  } else {
    // Only reachable for odd p, where q(e1 + e2) = g11 + 2 g12 + g22 then has
    // the valuation of g12.
    pivot = {b(0, 0) + b(0, 1), b(1, 0) + b(1, 1)};
    other = column(b, 0);
  }
  const Rat& l = lattice.lambda();
  const Rat q_pivot = l * pivot[0] * pivot[0] + pivot[1] * pivot[1];
  const Rat pairing = l * pivot[0] * other[0] + pivot[1] * other[1];
  const Rat c = pairing / q_pivot;
  const std::vector<Rat> w = {other[0] - c * pivot[0], other[1] - c * pivot[1]};
  return LocalQuadLattice2(p, l, column_pair(pivot, w));
}

LocalOrder2x2::LocalOrder2x2(Int p, const std::vector<Mat2>& generators)
    : p_(std::move(p)), span_(RatLattice::from_generators(RatMatrix::identity(4))) {
  if (!is_prime(p_)) throw DomainError(p_.get_str() + " is not prime");
  RatMatrix rows(0, 0);
  for (const Mat2& g : generators) {
    require_2x2(g);
    rows.append_row(flatten(g));
  }
  span_ = RatLattice::localized(rows, p_);
  if (!contains(Mat2::identity(2))) throw DomainError("lattice does not contain 1");
  const auto gens = this->generators();
  for (const Mat2& x : gens)
    for (const Mat2& y : gens)
      if (!contains(x * y)) throw DomainError("lattice is not closed under multiplication");
}

LocalOrder2x2 LocalOrder2x2::standard(const Int& p) {
  return LocalOrder2x2(p, {unit_matrix(0, 0), unit_matrix(0, 1), unit_matrix(1, 0),
                           unit_matrix(1, 1)});
}

std::vector<Mat2> LocalOrder2x2::generators() const {
  std::vector<Mat2> out;
  const RatMatrix& b = span_.basis();
  for (std::size_t k = 0; k < 4; ++k) out.push_back(mat2(b(k, 0), b(k, 1), b(k, 2), b(k, 3)));
  return out;
}

bool LocalOrder2x2::contains(const Mat2& x) const {
  require_2x2(x);
  // Membership in the completion: coordinates integral at p only.
  const std::vector<Rat> c = span_.coordinates(flatten(x));
  return std::all_of(c.begin(), c.end(), [&](const Rat& t) { return valuation(t, p_) >= Valuation(0); });
}

LocalOrder2x2 LocalOrder2x2::intersect(const LocalOrder2x2& other) const {
  if (p_ != other.p_) throw DomainError("orders localized at different primes");
  return LocalOrder2x2(p_, span_.intersect(other.span_));
}

LocalOrder2x2 LocalOrder2x2::conjugated(const Mat2& g) const {
  require_2x2(g);
  const auto inv = inverse(g);
  if (!inv) throw DomainError("conjugating matrix is singular");
  std::vector<Mat2> gens;
  for (const Mat2& x : generators()) gens.push_back(g * x * *inv);
  return LocalOrder2x2(p_, gens);
}

long LocalOrder2x2::discriminant_valuation() const {
  const auto gens = generators();
  RatMatrix t(4, 4);
  for (std::size_t i = 0; i < 4; ++i)
    for (std::size_t j = 0; j < 4; ++j) {
      const Mat2 xy = gens[i] * gens[j];
      t(i, j) = xy(0, 0) + xy(1, 1);
    }
  const long v = valuation(determinant(t), p_).value();
  if (v % 2 != 0) throw InternalError("trace form determinant has odd valuation");
  return v / 2;
}

LocalOrder2x2 endomorphism_order(const LocalQuadLattice2& lattice) {
  const Mat2& b = lattice.basis();
  const Mat2 b_inv = *inverse(b);
  std::vector<Mat2> gens;
  for (std::size_t i = 0; i < 2; ++i)
    for (std::size_t j = 0; j < 2; ++j) gens.push_back(b * unit_matrix(i, j) * b_inv);
  return LocalOrder2x2(lattice.prime(), gens);
}

LocalOrder2x2 order_of_lattice(const LocalQuadLattice2& lattice) {
  return endomorphism_order(lattice).intersect(endomorphism_order(dual(lattice)));
}

bool lattice_equivalent(const LocalQuadLattice2& lhs, const LocalQuadLattice2& rhs) {
  if (lhs.prime() != rhs.prime() || lhs.lambda() != rhs.lambda())
    throw DomainError("lattices belong to different quadratic spaces");
  const Int& p = lhs.prime();
  const long v_lhs = valuation(determinant(lhs.basis()), p).value();
  for (const LocalQuadLattice2& m : {rhs, dual(rhs)}) {
    const long diff = v_lhs - valuation(determinant(m.basis()), p).value();
    if (diff % 2 != 0) continue;
    const long k = diff / 2;
    const Rat c = k >= 0 ? Rat(pow(p, static_cast<unsigned long>(k)))
                         : make_rat(1, pow(p, static_cast<unsigned long>(-k)));
    if (lhs == m.scaled(c)) return true;
  }
  return false;
}

std::optional<int> is_similitude_matrix(const Rat& lambda, const Mat2& g) {
  require_2x2(g);
  const Rat det = determinant(g);
  if (det == 0) throw DomainError("similitude test needs an invertible matrix");
  const Mat2 d = form_matrix(lambda);
  const Mat2 pulled = transpose(g) * d * g;
  if (pulled == dagger::scaled(d, det)) return 0;
  if (pulled == dagger::scaled(d, -det)) return 1;
  return std::nullopt;
}

bool stabilizes_standard_order(const Int& p, const Mat2& g) {
  require_2x2(g);
  const Rat det = determinant(g);
  if (det == 0) throw DomainError("stabilizer test needs an invertible matrix");
  const Valuation k = min_valuation({valuation(g(0, 0), p), valuation(g(0, 1), p),
                                     valuation(g(1, 0), p), valuation(g(1, 1), p)});
  return valuation(det, p) == k + k;
}

long strange_count(std::optional<long> defect_valuation, long n) {
  if (n < 1) throw DomainError("ord(2) must be positive at a dyadic prime");
  if (!defect_valuation || *defect_valuation == 2 * n) return n + 1;
  const long d = *defect_valuation;
  if (d >= 1 && d < 2 * n && d % 2 == 1) return (d - 1) / 2 + 1;
  throw DomainError("valuation " + std::to_string(d) + " is not a quadratic defect");
}

long count_classes(const Int& p, const Rat& lambda) {
  if (!is_prime(p)) throw DomainError(p.get_str() + " is not prime");
  if (lambda == 0 || lambda.get_den() != 1 || square_class(lambda).representative() != lambda.get_num())
    throw DomainError("lambda must be a square-free integer");
  if (p != 2) return 1;
  const LocalIdeal d = quadratic_defect(-lambda, p);
  if (d.is_zero()) return strange_count(std::nullopt, 1);
  return strange_count(d.valuation.value(), 1);
}

std::pair<long, long> norm_weight_orders(const Rat& alpha, const Rat& beta) {
  const Int two = 2;
  if (alpha == 0) throw DomainError("alpha must be a norm generator");
  if (valuation(alpha * beta - 1, two) != Valuation(0))
    throw DomainError("Gram matrix (alpha 1; 1 beta) is not unimodular");
  const Valuation va = valuation(alpha, two);
  const Valuation vb = valuation(beta, two);
  if (va > vb || va > Valuation(1)) throw DomainError("alpha must be a norm generator");
  const Valuation weight = std::min(vb, Valuation(1));
  return {va.value(), weight.value()};
}

}  // namespace dagger
