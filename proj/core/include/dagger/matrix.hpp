#pragma once

// Dense exact matrices over Z, Q and F_p, with the handful of algorithms the
// lattice code needs: Hermite and Smith normal forms, inverses, determinants,
// and row reduction modulo a prime.

#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <vector>

#include "dagger/exactnum.hpp"

namespace dagger {

template <class T>
class Matrix {
 public:
  Matrix() = default;
  Matrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), data_(rows * cols) {}
  Matrix(std::size_t rows, std::size_t cols, std::vector<T> data)
      : rows_(rows), cols_(cols), data_(std::move(data)) {
    if (data_.size() != rows_ * cols_) throw DomainError("matrix data size mismatch");
  }

  static Matrix identity(std::size_t n) {
    Matrix m(n, n);
    for (std::size_t i = 0; i < n; ++i) m(i, i) = T(1);
    return m;
  }

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }

  T& operator()(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
  const T& operator()(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }

  std::span<T> row(std::size_t r) { return {data_.data() + r * cols_, cols_}; }
  std::span<const T> row(std::size_t r) const { return {data_.data() + r * cols_, cols_}; }

  void append_row(std::span<const T> values) {
    if (rows_ == 0 && cols_ == 0) cols_ = values.size();
    if (values.size() != cols_) throw DomainError("row length mismatch");
    data_.insert(data_.end(), values.begin(), values.end());
    ++rows_;
  }

  void swap_rows(std::size_t a, std::size_t b) {
    if (a == b) return;
    for (std::size_t c = 0; c < cols_; ++c) std::swap((*this)(a, c), (*this)(b, c));
  }

  const std::vector<T>& data() const { return data_; }

  friend bool operator==(const Matrix&, const Matrix&) = default;

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<T> data_;
};

using IntMatrix = Matrix<Int>;
using RatMatrix = Matrix<Rat>;

RatMatrix operator*(const RatMatrix& lhs, const RatMatrix& rhs);
IntMatrix operator*(const IntMatrix& lhs, const IntMatrix& rhs);
RatMatrix transpose(const RatMatrix& m);
RatMatrix to_rat(const IntMatrix& m);
RatMatrix scaled(const RatMatrix& m, const Rat& c);
RatMatrix vstack(const RatMatrix& top, const RatMatrix& bottom);

/// Row vector times matrix.
std::vector<Rat> row_times(std::span<const Rat> v, const RatMatrix& m);

Rat determinant(RatMatrix m);
/// nullopt when singular.
std::optional<RatMatrix> inverse(const RatMatrix& m);

/// Least common multiple of all entry denominators.
Int common_denominator(const RatMatrix& m);

/// Row-style Hermite normal form of the Z-row-span of `gens` (any number of
/// rows, full column rank required): an upper-triangular square matrix with
/// positive pivots and entries above each pivot reduced into [0, pivot).
/// Throws DomainError if the rows do not span a full-rank lattice.
IntMatrix hermite_normal_form(IntMatrix gens);

/// Smith normal form D = U * A * V of a square nonsingular integer matrix,
/// with unimodular U, V and d_1 | d_2 | ... positive.
struct SmithForm {
  std::vector<Int> diagonal;
  IntMatrix left;   // U
  IntMatrix right;  // V
};
SmithForm smith_normal_form(const IntMatrix& a);

/// Unimodular inverse of an integer matrix with determinant +-1.
IntMatrix unimodular_inverse(const IntMatrix& u);

// ---------------------------------------------------------------------------
// Linear algebra over F_p for word-sized p.

class FpMatrix {
 public:
  FpMatrix(std::uint64_t p, std::size_t rows, std::size_t cols);

  std::uint64_t modulus() const { return p_; }
  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  std::uint64_t& operator()(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
  std::uint64_t operator()(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }

  /// Reduced row echelon form in place; returns the rank.
  std::size_t row_reduce();
  /// Basis of {x : x * M = 0} (left kernel), as rows.
  std::vector<std::vector<std::uint64_t>> left_kernel() const;

 private:
  std::uint64_t p_;
  std::size_t rows_;
  std::size_t cols_;
  std::vector<std::uint64_t> data_;
};

std::uint64_t mulmod(std::uint64_t a, std::uint64_t b, std::uint64_t p);
std::uint64_t invmod(std::uint64_t a, std::uint64_t p);
/// Reduces a p-integral rational modulo p; throws DomainError if p divides
/// the denominator.
std::uint64_t reduce_mod(const Rat& x, std::uint64_t p);

/// Rank of a family of F_p vectors.
std::size_t rank_mod_p(const std::vector<std::vector<std::uint64_t>>& vectors, std::uint64_t p);

/// Calls `visit` once per one-dimensional subspace of the span of `basis`
/// (vectors in F_p^n), with a representative whose leading coefficient in
/// terms of `basis` is 1. Enumeration order is deterministic. Stops early
/// when `visit` returns false.
template <class Visit>
void for_each_line(const std::vector<std::vector<std::uint64_t>>& basis, std::uint64_t p,
                   Visit&& visit);

}  // namespace dagger

#include "dagger/detail/lines.hpp"
