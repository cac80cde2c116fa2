#include "dagger/matrix.hpp"

#include <algorithm>

namespace dagger {

RatMatrix operator*(const RatMatrix& lhs, const RatMatrix& rhs) {
  if (lhs.cols() != rhs.rows()) throw DomainError("matrix product shape mismatch");
  RatMatrix out(lhs.rows(), rhs.cols());
  for (std::size_t i = 0; i < lhs.rows(); ++i) {
    for (std::size_t k = 0; k < lhs.cols(); ++k) {
      const Rat& a = lhs(i, k);
      if (a == 0) continue;
      for (std::size_t j = 0; j < rhs.cols(); ++j) out(i, j) += a * rhs(k, j);
    }
  }
  return out;
}

IntMatrix operator*(const IntMatrix& lhs, const IntMatrix& rhs) {
  if (lhs.cols() != rhs.rows()) throw DomainError("matrix product shape mismatch");
  IntMatrix out(lhs.rows(), rhs.cols());
  for (std::size_t i = 0; i < lhs.rows(); ++i) {
    for (std::size_t k = 0; k < lhs.cols(); ++k) {
      const Int& a = lhs(i, k);
      if (a == 0) continue;
      for (std::size_t j = 0; j < rhs.cols(); ++j) out(i, j) += a * rhs(k, j);
    }
  }
  return out;
}

RatMatrix transpose(const RatMatrix& m) {
  RatMatrix t(m.cols(), m.rows());
  for (std::size_t i = 0; i < m.rows(); ++i)
    for (std::size_t j = 0; j < m.cols(); ++j) t(j, i) = m(i, j);
  return t;
}

RatMatrix to_rat(const IntMatrix& m) {
  RatMatrix out(m.rows(), m.cols());
  for (std::size_t i = 0; i < m.rows(); ++i)
    for (std::size_t j = 0; j < m.cols(); ++j) out(i, j) = Rat(m(i, j));
  return out;
}

RatMatrix scaled(const RatMatrix& m, const Rat& c) {
  RatMatrix out = m;
  for (std::size_t i = 0; i < m.rows(); ++i)
    for (std::size_t j = 0; j < m.cols(); ++j) out(i, j) *= c;
  return out;
}

RatMatrix vstack(const RatMatrix& top, const RatMatrix& bottom) {
  RatMatrix out = top;
  for (std::size_t i = 0; i < bottom.rows(); ++i) out.append_row(bottom.row(i));
  return out;
}

std::vector<Rat> row_times(std::span<const Rat> v, const RatMatrix& m) {
  if (v.size() != m.rows()) throw DomainError("vector-matrix shape mismatch");
  std::vector<Rat> out(m.cols());
  for (std::size_t k = 0; k < m.rows(); ++k) {
    if (v[k] == 0) continue;
    for (std::size_t j = 0; j < m.cols(); ++j) out[j] += v[k] * m(k, j);
  }
  return out;
}

Rat determinant(RatMatrix m) {
  if (m.rows() != m.cols()) throw DomainError("determinant of non-square matrix");
  const std::size_t n = m.rows();
  Rat det = 1;
  for (std::size_t c = 0; c < n; ++c) {
    std::size_t piv = c;
    while (piv < n && m(piv, c) == 0) ++piv;
    if (piv == n) return 0;
    if (piv != c) {
      m.swap_rows(piv, c);
      det = -det;
    }
    det *= m(c, c);
    for (std::size_t r = c + 1; r < n; ++r) {
      if (m(r, c) == 0) continue;
      const Rat f = m(r, c) / m(c, c);
      for (std::size_t k = c; k < n; ++k) m(r, k) -= f * m(c, k);
    }
  }
  return det;
}

std::optional<RatMatrix> inverse(const RatMatrix& m) {
  if (m.rows() != m.cols()) throw DomainError("inverse of non-square matrix");
  const std::size_t n = m.rows();
  RatMatrix a = m;
  RatMatrix inv = RatMatrix::identity(n);
  for (std::size_t c = 0; c < n; ++c) {
    std::size_t piv = c;
    while (piv < n && a(piv, c) == 0) ++piv;
    if (piv == n) return std::nullopt;
    a.swap_rows(piv, c);
    inv.swap_rows(piv, c);
    const Rat s = 1 / a(c, c);
    for (std::size_t k = 0; k < n; ++k) {
      a(c, k) *= s;
      inv(c, k) *= s;
    }
    for (std::size_t r = 0; r < n; ++r) {
      if (r == c || a(r, c) == 0) continue;
      const Rat f = a(r, c);
      for (std::size_t k = 0; k < n; ++k) {
        a(r, k) -= f * a(c, k);
        inv(r, k) -= f * inv(c, k);
      }
    }
  }
  return inv;
}

Int common_denominator(const RatMatrix& m) {
  Int d = 1;
  for (const Rat& x : m.data()) d = lcm(d, x.get_den());
  return d;
}

namespace {

Int floor_div(const Int& a, const Int& b) {
  Int q;
  mpz_fdiv_q(q.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
  return q;
}

void row_axpy(IntMatrix& m, std::size_t dst, std::size_t src, const Int& q) {
  if (q == 0) return;
  for (std::size_t k = 0; k < m.cols(); ++k) m(dst, k) -= q * m(src, k);
}

void col_axpy(IntMatrix& m, std::size_t dst, std::size_t src, const Int& q) {
  if (q == 0) return;
  for (std::size_t k = 0; k < m.rows(); ++k) m(k, dst) -= q * m(k, src);
}

void swap_cols(IntMatrix& m, std::size_t a, std::size_t b) {
  if (a == b) return;
  for (std::size_t k = 0; k < m.rows(); ++k) std::swap(m(k, a), m(k, b));
}

}  // namespace

IntMatrix hermite_normal_form(IntMatrix a) {
  const std::size_t m = a.rows();
  const std::size_t n = a.cols();
  if (m < n) throw DomainError("too few generators for a full-rank lattice");
  for (std::size_t c = 0; c < n; ++c) {
    const std::size_t r = c;
    for (;;) {
      std::size_t best = m;
      for (std::size_t i = r; i < m; ++i) {
        if (a(i, c) == 0) continue;
        if (best == m || abs(a(i, c)) < abs(a(best, c))) best = i;
      }
      if (best == m) throw DomainError("generators do not span a full-rank lattice");
      a.swap_rows(best, r);
      bool clean = true;
      for (std::size_t i = r + 1; i < m; ++i) {
        if (a(i, c) == 0) continue;
        row_axpy(a, i, r, floor_div(a(i, c), a(r, c)));
        if (a(i, c) != 0) clean = false;
      }
      if (clean) break;
    }
    if (a(r, c) < 0) {
      for (std::size_t k = 0; k < n; ++k) a(r, k) = -a(r, k);
    }
    for (std::size_t i = 0; i < r; ++i) row_axpy(a, i, r, floor_div(a(i, c), a(r, c)));
  }
  IntMatrix h(n, n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) h(i, j) = a(i, j);
  return h;
}

SmithForm smith_normal_form(const IntMatrix& a) {
  if (a.rows() != a.cols()) throw DomainError("Smith form of non-square matrix");
  const std::size_t n = a.rows();
  IntMatrix d = a;
  IntMatrix u = IntMatrix::identity(n);
  IntMatrix v = IntMatrix::identity(n);
  for (std::size_t t = 0; t < n; ++t) {
    for (;;) {
      std::size_t bi = n, bj = n;
      for (std::size_t i = t; i < n; ++i)
        for (std::size_t j = t; j < n; ++j)
          if (d(i, j) != 0 && (bi == n || abs(d(i, j)) < abs(d(bi, bj)))) {
            bi = i;
            bj = j;
          }
      if (bi == n) throw DomainError("Smith form of singular matrix");
      d.swap_rows(t, bi);
      u.swap_rows(t, bi);
      swap_cols(d, t, bj);
      swap_cols(v, t, bj);
      bool clean = true;
      for (std::size_t i = t + 1; i < n; ++i) {
        if (d(i, t) == 0) continue;
        const Int q = floor_div(d(i, t), d(t, t));
        row_axpy(d, i, t, q);
        row_axpy(u, i, t, q);
        if (d(i, t) != 0) clean = false;
      }
      for (std::size_t j = t + 1; j < n; ++j) {
        if (d(t, j) == 0) continue;
        const Int q = floor_div(d(t, j), d(t, t));
        col_axpy(d, j, t, q);
        col_axpy(v, j, t, q);
        if (d(t, j) != 0) clean = false;
      }
      if (!clean) continue;
      bool divides = true;
      for (std::size_t i = t + 1; i < n && divides; ++i)
        for (std::size_t j = t + 1; j < n; ++j)
          if (mpz_divisible_p(d(i, j).get_mpz_t(), d(t, t).get_mpz_t()) == 0) {
            row_axpy(d, t, i, Int(-1));
            row_axpy(u, t, i, Int(-1));
            divides = false;
            break;
          }
      if (divides) break;
    }
    if (d(t, t) < 0) {
      for (std::size_t k = 0; k < n; ++k) {
        d(t, k) = -d(t, k);
        u(t, k) = -u(t, k);
      }
    }
  }
  SmithForm out;
  for (std::size_t i = 0; i < n; ++i) out.diagonal.push_back(d(i, i));
  out.left = std::move(u);
  out.right = std::move(v);
  return out;
}

IntMatrix unimodular_inverse(const IntMatrix& u) {
  const auto inv = inverse(to_rat(u));
  if (!inv) throw DomainError("matrix is singular");
  IntMatrix out(u.rows(), u.cols());
  for (std::size_t i = 0; i < u.rows(); ++i)
    for (std::size_t j = 0; j < u.cols(); ++j) {
      const Rat& x = (*inv)(i, j);
      if (x.get_den() != 1) throw DomainError("matrix is not unimodular");
      out(i, j) = x.get_num();
    }
  return out;
}

// ---------------------------------------------------------------------------

namespace {
__extension__ using u128 = unsigned __int128;
__extension__ using i128 = __int128;
}  // namespace

std::uint64_t mulmod(std::uint64_t a, std::uint64_t b, std::uint64_t p) {
  return static_cast<std::uint64_t>((static_cast<u128>(a) * b) % p);
}

std::uint64_t invmod(std::uint64_t a, std::uint64_t p) {
  // Extended Euclid on signed 128-bit values.
  i128 t = 0, nt = 1, r = p, nr = a % p;
  while (nr != 0) {
    const i128 q = r / nr;
    t -= q * nt;
    std::swap(t, nt);
    r -= q * nr;
    std::swap(r, nr);
  }
  if (r != 1) throw DomainError("element is not invertible modulo p");
  if (t < 0) t += p;
  return static_cast<std::uint64_t>(t);
}

std::uint64_t reduce_mod(const Rat& x, std::uint64_t p) {
  const Int pp(static_cast<unsigned long>(p));
  Int num = x.get_num() % pp;
  if (num < 0) num += pp;
  Int den = x.get_den() % pp;
  if (den == 0) throw DomainError("denominator divisible by p");
  return mulmod(num.get_ui(), invmod(den.get_ui(), p), p);
}

FpMatrix::FpMatrix(std::uint64_t p, std::size_t rows, std::size_t cols)
    : p_(p), rows_(rows), cols_(cols), data_(rows * cols, 0) {}

std::size_t FpMatrix::row_reduce() {
  std::size_t rank = 0;
  for (std::size_t c = 0; c < cols_ && rank < rows_; ++c) {
    std::size_t piv = rank;
    while (piv < rows_ && (*this)(piv, c) == 0) ++piv;
    if (piv == rows_) continue;
    for (std::size_t k = 0; k < cols_; ++k) std::swap((*this)(piv, k), (*this)(rank, k));
    const std::uint64_t s = invmod((*this)(rank, c), p_);
    for (std::size_t k = 0; k < cols_; ++k) (*this)(rank, k) = mulmod((*this)(rank, k), s, p_);
    for (std::size_t r = 0; r < rows_; ++r) {
      if (r == rank || (*this)(r, c) == 0) continue;
      const std::uint64_t f = (*this)(r, c);
      for (std::size_t k = 0; k < cols_; ++k) {
        (*this)(r, k) = ((*this)(r, k) + p_ - mulmod(f, (*this)(rank, k), p_)) % p_;
      }
    }
    ++rank;
  }
  return rank;
}

std::vector<std::vector<std::uint64_t>> FpMatrix::left_kernel() const {
  // x * M = 0  <=>  M^T x^T = 0: null space of the transpose.
  FpMatrix t(p_, cols_, rows_);
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t j = 0; j < cols_; ++j) t(j, i) = (*this)(i, j);
  t.row_reduce();
  std::vector<std::size_t> pivot_col;
  std::vector<bool> is_pivot(rows_, false);
  for (std::size_t r = 0; r < t.rows(); ++r) {
    std::size_t c = 0;
    while (c < t.cols() && t(r, c) == 0) ++c;
    if (c == t.cols()) break;
    pivot_col.push_back(c);
    is_pivot[c] = true;
  }
  std::vector<std::vector<std::uint64_t>> basis;
  for (std::size_t f = 0; f < rows_; ++f) {
    if (is_pivot[f]) continue;
    std::vector<std::uint64_t> v(rows_, 0);
    v[f] = 1;
    for (std::size_t r = 0; r < pivot_col.size(); ++r) v[pivot_col[r]] = (p_ - t(r, f)) % p_;
    basis.push_back(std::move(v));
  }
  return basis;
}

std::size_t rank_mod_p(const std::vector<std::vector<std::uint64_t>>& vectors, std::uint64_t p) {
  if (vectors.empty()) return 0;
  FpMatrix m(p, vectors.size(), vectors.front().size());
  for (std::size_t i = 0; i < vectors.size(); ++i)
    for (std::size_t j = 0; j < vectors[i].size(); ++j) m(i, j) = vectors[i][j] % p;
  return m.row_reduce();
}

}  // namespace dagger
