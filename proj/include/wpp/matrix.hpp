#pragma once

#include <cstddef>
#include <numeric>
#include <span>
#include <type_traits>
#include <utility>
#include <vector>

#include "wpp/scalar.hpp"

namespace wpp {

/// Dense row-major matrix over an exact field.
template <class Field>
class ExactMatrix {
 public:
  using Element = typename Field::Element;

  ExactMatrix(Field field, std::size_t rows, std::size_t cols)
      : field_(std::move(field)), rows_(rows), cols_(cols), data_(rows * cols, field_.zero()) {}

  const Field& field() const { return field_; }
  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }

  Element& at(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
  const Element& at(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }

  std::span<const Element> row(std::size_t r) const { return {data_.data() + r * cols_, cols_}; }

 private:
  Field field_;
  std::size_t rows_;
  std::size_t cols_;
  std::vector<Element> data_;
};

template <class Field>
using Vector = std::vector<typename Field::Element>;

template <class Field>
Vector<Field> multiply(const ExactMatrix<Field>& m, std::span<const typename Field::Element> v) {
  const Field& f = m.field();
  Vector<Field> out(m.rows(), f.zero());
  for (std::size_t r = 0; r < m.rows(); ++r) {
    auto acc = f.zero();
    for (std::size_t c = 0; c < m.cols(); ++c) acc = f.add(acc, f.mul(m.at(r, c), v[c]));
    out[r] = acc;
  }
  return out;
}

namespace detail {

template <class Field>
std::vector<std::size_t> reduce_to_rref(std::vector<Vector<Field>>& a, const Field& f, std::size_t cols);

inline std::size_t rank_gauss_jordan_fp(const ExactMatrix<PrimeField>& m) {
  std::vector<Vector<PrimeField>> a(m.rows());
  for (std::size_t r = 0; r < m.rows(); ++r) a[r].assign(m.row(r).begin(), m.row(r).end());
  return reduce_to_rref(a, m.field(), m.cols()).size();
}


// Montgomery arithmetic modulo an odd p < 2^63, R = 2^64.
class Montgomery {
 public:
  explicit Montgomery(std::uint64_t p) : p_(p) {
    std::uint64_t inv = p;  // Newton iteration for p^-1 mod 2^64
    for (int i = 0; i < 5; ++i) inv *= 2 - p * inv;
    neg_inv_ = ~inv + 1;
    const unsigned __int128 r = (static_cast<unsigned __int128>(1) << 64) % p;
    r2_ = static_cast<std::uint64_t>(r * r % p);
  }

  std::uint64_t mul(std::uint64_t x, std::uint64_t y) const {
    return reduce(static_cast<unsigned __int128>(x) * y);
  }
  std::uint64_t to_mont(std::uint64_t x) const { return mul(x, r2_); }
  std::uint64_t from_mont(std::uint64_t x) const { return reduce(x); }

 private:
  std::uint64_t reduce(unsigned __int128 t) const {
    const std::uint64_t m = static_cast<std::uint64_t>(t) * neg_inv_;
    const auto r = static_cast<std::uint64_t>((t + static_cast<unsigned __int128>(m) * p_) >> 64);
    return r >= p_ ? r - p_ : r;
  }

  std::uint64_t p_;
  std::uint64_t neg_inv_;
  std::uint64_t r2_;
};

// Columns are visited with a fixed stride coprime to cols (close to
// cols / golden ratio); structured condition matrices reach full row rank
// much sooner this way than in monomial order.
inline std::size_t column_stride(std::size_t cols) {
  if (cols <= 2) return 1;
  std::size_t stride = static_cast<std::size_t>(static_cast<double>(cols) * 0.6180339887498949);
  while (std::gcd(stride, cols) != 1) ++stride;
  return stride;
}

// Column-streaming elimination over F_p in Montgomery form. Each incoming
// column is reduced against the pivots found so far; every basis vector is
// zero above its own pivot and on earlier pivot rows. Stops once every row
// is a pivot.
inline std::size_t rank_streaming(const ExactMatrix<PrimeField>& m) {
  const PrimeField& f = m.field();
  const std::size_t rows = m.rows();
  const std::size_t cols = m.cols();
  if (rows == 0 || cols == 0) return 0;
  if (f.modulus() == 2) return rank_gauss_jordan_fp(m);
  const Montgomery mont(f.modulus());
  std::vector<std::vector<std::uint64_t>> basis;
  std::vector<std::size_t> pivot_rows;
  std::vector<std::uint64_t> col(rows);
  const std::size_t stride = column_stride(cols);
  for (std::size_t visited = 0, c = 0; visited < cols && basis.size() < rows; ++visited, c = (c + stride) % cols) {
    for (std::size_t r = 0; r < rows; ++r) col[r] = mont.to_mont(m.at(r, c));
    for (std::size_t k = 0; k < basis.size(); ++k) {
      const std::uint64_t coeff = col[pivot_rows[k]];
      if (coeff == 0) continue;
      const auto& b = basis[k];
      for (std::size_t r = pivot_rows[k]; r < rows; ++r) col[r] = f.sub(col[r], mont.mul(coeff, b[r]));
    }
    std::size_t pivot = rows;
    for (std::size_t r = 0; r < rows; ++r) {
      if (col[r] != 0) {
        pivot = r;
        break;
      }
    }
    if (pivot == rows) continue;
    const std::uint64_t scale = mont.to_mont(f.inv(mont.from_mont(col[pivot])));
    for (auto& x : col) x = mont.mul(x, scale);
    basis.push_back(col);
    pivot_rows.push_back(pivot);
  }
  return basis.size();
}

// Bareiss fraction-free elimination on the integer matrix obtained by
// clearing denominators row by row.
inline std::size_t rank_bareiss(const ExactMatrix<RationalField>& m) {
  const std::size_t rows = m.rows();
  const std::size_t cols = m.cols();
  if (rows == 0 || cols == 0) return 0;
  std::vector<std::vector<BigInt>> a(rows, std::vector<BigInt>(cols));
  for (std::size_t r = 0; r < rows; ++r) {
    BigInt lcm_den = 1;
    for (std::size_t c = 0; c < cols; ++c) {
      mpz_lcm(lcm_den.get_mpz_t(), lcm_den.get_mpz_t(), m.at(r, c).get_den_mpz_t());
    }
    for (std::size_t c = 0; c < cols; ++c) {
      const Rational& q = m.at(r, c);
      a[r][c] = q.get_num() * (lcm_den / q.get_den());
    }
  }
  BigInt prev = 1;
  std::size_t rank = 0;
  for (std::size_t c = 0; c < cols && rank < rows; ++c) {
    std::size_t pivot = rows;
    for (std::size_t r = rank; r < rows; ++r) {
      if (a[r][c] != 0) {
        pivot = r;
        break;
      }
    }
    if (pivot == rows) continue;
    std::swap(a[pivot], a[rank]);
    for (std::size_t r = rank + 1; r < rows; ++r) {
      for (std::size_t k = c + 1; k < cols; ++k) {
        a[r][k] = a[rank][c] * a[r][k] - a[r][c] * a[rank][k];
        mpz_divexact(a[r][k].get_mpz_t(), a[r][k].get_mpz_t(), prev.get_mpz_t());
      }
      a[r][c] = 0;
    }
    prev = a[rank][c];
    ++rank;
  }
  return rank;
}

// Gauss-Jordan to reduced row echelon form; returns pivot columns.
template <class Field>
std::vector<std::size_t> reduce_to_rref(std::vector<Vector<Field>>& a, const Field& f, std::size_t cols) {
  std::vector<std::size_t> pivots;
  std::size_t rank = 0;
  for (std::size_t c = 0; c < cols && rank < a.size(); ++c) {
    std::size_t pivot = a.size();
    for (std::size_t r = rank; r < a.size(); ++r) {
      if (!f.is_zero(a[r][c])) {
        pivot = r;
        break;
      }
    }
    if (pivot == a.size()) continue;
    std::swap(a[pivot], a[rank]);
    const auto scale = f.inv(a[rank][c]);
    for (std::size_t k = c; k < cols; ++k) a[rank][k] = f.mul(a[rank][k], scale);
    for (std::size_t r = 0; r < a.size(); ++r) {
      if (r == rank || f.is_zero(a[r][c])) continue;
      const auto factor = a[r][c];
      for (std::size_t k = c; k < cols; ++k) a[r][k] = f.sub(a[r][k], f.mul(factor, a[rank][k]));
    }
    pivots.push_back(c);
    ++rank;
  }
  return pivots;
}

}  // namespace detail

/// Rank over the matrix's field. Deterministic.
template <class Field>
std::size_t rank(const ExactMatrix<Field>& m) {
  if constexpr (std::is_same_v<Field, PrimeField>) {
    return detail::rank_streaming(m);
  } else {
    return detail::rank_bareiss(m);
  }
}

/// Reference rank by plain Gauss-Jordan; independent of rank().
template <class Field>
std::size_t rank_gauss_jordan(const ExactMatrix<Field>& m) {
  std::vector<Vector<Field>> a(m.rows());
  for (std::size_t r = 0; r < m.rows(); ++r) a[r].assign(m.row(r).begin(), m.row(r).end());
  return detail::reduce_to_rref(a, m.field(), m.cols()).size();
}

/// Basis of the right kernel from the reduced row echelon form: one vector
/// per free column, with that column set to 1 and the other free columns 0.
template <class Field>
std::vector<Vector<Field>> kernel_basis(const ExactMatrix<Field>& m) {
  const Field& f = m.field();
  std::vector<Vector<Field>> a(m.rows());
  for (std::size_t r = 0; r < m.rows(); ++r) a[r].assign(m.row(r).begin(), m.row(r).end());
  const auto pivots = detail::reduce_to_rref(a, f, m.cols());
  std::vector<bool> is_pivot(m.cols(), false);
  for (auto c : pivots) is_pivot[c] = true;
  std::vector<Vector<Field>> basis;
  for (std::size_t free = 0; free < m.cols(); ++free) {
    if (is_pivot[free]) continue;
    Vector<Field> v(m.cols(), f.zero());
    v[free] = f.one();
    for (std::size_t k = 0; k < pivots.size(); ++k) v[pivots[k]] = f.neg(a[k][free]);
    basis.push_back(std::move(v));
  }
  return basis;
}

}  // namespace wpp
