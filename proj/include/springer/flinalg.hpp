#pragma once

// Dense exact linear algebra over prime fields F_ℓ (ℓ < 2^16) and over the
// integers. All pivoting is deterministic: columns are scanned left to right
// and the first row carrying a nonzero entry is taken as pivot row.

#include <algorithm>
#include <cstddef>
#include <cstdint>
#include <optional>
#include <ostream>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

#include "springer/errors.hpp"

namespace springer {

using Integer = boost::multiprecision::cpp_int;
using Residue = std::uint32_t;

inline bool is_prime(long long p) {
  if (p < 2) return false;
  for (long long d = 2; d * d <= p; ++d)
    if (p % d == 0) return false;
  return true;
}

inline void require_field_prime(long long ell) {
  if (!is_prime(ell) || ell >= (1 << 16))
    throw DomainError("ell must be a prime below 2^16, got " +
                      std::to_string(ell));
}

inline Residue reduce_mod(long long value, Residue ell) {
  long long r = value % static_cast<long long>(ell);
  return static_cast<Residue>(r < 0 ? r + ell : r);
}

inline Residue reduce_mod(const Integer& value, Residue ell) {
  Integer r = value % ell;
  if (r < 0) r += ell;
  return r.convert_to<Residue>();
}

inline Residue inverse_mod(Residue a, Residue ell) {
  // extended Euclid on small words
  long long t = 0, new_t = 1, r = ell, new_r = a;
  while (new_r != 0) {
    const long long q = r / new_r;
    t = std::exchange(new_t, t - q * new_t);
    r = std::exchange(new_r, r - q * new_r);
  }
  if (r != 1) throw DomainError("residue is not invertible");
  return static_cast<Residue>(t < 0 ? t + ell : t);
}

/// Dense matrix over F_ℓ. Entries always lie in [0, ℓ).
class FMatrix {
 public:
  FMatrix() = default;
  FMatrix(Residue ell, std::size_t rows, std::size_t cols)
      : ell_(ell), rows_(rows), cols_(cols), data_(rows * cols, 0) {}

  static FMatrix identity(Residue ell, std::size_t n) {
    FMatrix m(ell, n, n);
    for (std::size_t i = 0; i < n; ++i) m.data_[i * n + i] = 1 % ell;
    return m;
  }

  /// Reduces arbitrary integers into [0, ℓ).
  static FMatrix from_rows(Residue ell,
                           const std::vector<std::vector<long long>>& rows) {
    const std::size_t r = rows.size();
    const std::size_t c = r ? rows.front().size() : 0;
    FMatrix m(ell, r, c);
    for (std::size_t i = 0; i < r; ++i) {
      if (rows[i].size() != c) throw DomainError("ragged matrix rows");
      for (std::size_t j = 0; j < c; ++j) m.set(i, j, rows[i][j]);
    }
    return m;
  }

  Residue ell() const noexcept { return ell_; }
  std::size_t rows() const noexcept { return rows_; }
  std::size_t cols() const noexcept { return cols_; }

  Residue operator()(std::size_t i, std::size_t j) const {
    return data_[i * cols_ + j];
  }
  void set(std::size_t i, std::size_t j, long long value) {
    data_[i * cols_ + j] = reduce_mod(value, ell_);
  }

  /// Raw row access for elimination kernels; writers must keep entries reduced.
  std::span<Residue> row(std::size_t i) {
    return {data_.data() + i * cols_, cols_};
  }
  std::span<const Residue> row(std::size_t i) const {
    return {data_.data() + i * cols_, cols_};
  }

  FMatrix transpose() const {
    FMatrix t(ell_, cols_, rows_);
    for (std::size_t i = 0; i < rows_; ++i)
      for (std::size_t j = 0; j < cols_; ++j) t.data_[j * rows_ + i] = (*this)(i, j);
    return t;
  }

  bool is_zero() const {
    return std::all_of(data_.begin(), data_.end(), [](Residue x) { return x == 0; });
  }

  friend FMatrix operator*(const FMatrix& a, const FMatrix& b) {
    if (a.cols_ != b.rows_ || a.ell_ != b.ell_)
      throw DomainError("FMatrix product shape or field mismatch");
    FMatrix c(a.ell_, a.rows_, b.cols_);
    std::vector<std::uint64_t> acc(b.cols_);
    for (std::size_t i = 0; i < a.rows_; ++i) {
      std::fill(acc.begin(), acc.end(), 0);
      for (std::size_t k = 0; k < a.cols_; ++k) {
        const std::uint64_t aik = a(i, k);
        if (aik == 0) continue;
        const Residue* brow = b.data_.data() + k * b.cols_;
        for (std::size_t j = 0; j < b.cols_; ++j) acc[j] += aik * brow[j];
      }
      for (std::size_t j = 0; j < b.cols_; ++j)
        c.data_[i * c.cols_ + j] = static_cast<Residue>(acc[j] % a.ell_);
    }
    return c;
  }

  friend FMatrix operator+(const FMatrix& a, const FMatrix& b) {
    a.require_same_shape(b);
    FMatrix c = a;
    for (std::size_t k = 0; k < c.data_.size(); ++k)
      c.data_[k] = (a.data_[k] + b.data_[k]) % a.ell_;
    return c;
  }

  friend FMatrix operator-(const FMatrix& a, const FMatrix& b) {
    a.require_same_shape(b);
    FMatrix c = a;
    for (std::size_t k = 0; k < c.data_.size(); ++k)
      c.data_[k] = (a.data_[k] + a.ell_ - b.data_[k]) % a.ell_;
    return c;
  }

  FMatrix scaled(Residue s) const {
    FMatrix c = *this;
    for (auto& x : c.data_)
      x = static_cast<Residue>((std::uint64_t{x} * s) % ell_);
    return c;
  }

  friend bool operator==(const FMatrix&, const FMatrix&) = default;

  friend std::ostream& operator<<(std::ostream& os, const FMatrix& m) {
    for (std::size_t i = 0; i < m.rows_; ++i) {
      for (std::size_t j = 0; j < m.cols_; ++j) os << (j ? " " : "") << m(i, j);
      os << '\n';
    }
    return os;
  }

 private:
  void require_same_shape(const FMatrix& b) const {
    if (rows_ != b.rows_ || cols_ != b.cols_ || ell_ != b.ell_)
      throw DomainError("FMatrix shape or field mismatch");
  }

  Residue ell_ = 2;
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<Residue> data_;
};

/// Reduced row echelon form together with its pivot columns.
struct Echelon {
  FMatrix matrix;
  std::vector<std::size_t> pivots;
};

inline Echelon rref(FMatrix m) {
  const Residue ell = m.ell();
  std::vector<std::size_t> pivots;
  std::size_t r = 0;
  for (std::size_t c = 0; c < m.cols() && r < m.rows(); ++c) {
    std::size_t p = r;
    while (p < m.rows() && m(p, c) == 0) ++p;
    if (p == m.rows()) continue;
    if (p != r) {
      auto a = m.row(p), b = m.row(r);
      std::swap_ranges(a.begin(), a.end(), b.begin());
    }
    auto prow = m.row(r);
    const std::uint64_t inv = inverse_mod(prow[c], ell);
    for (auto& x : prow) x = static_cast<Residue>((x * inv) % ell);
    for (std::size_t i = 0; i < m.rows(); ++i) {
      if (i == r) continue;
      auto row = m.row(i);
      const std::uint64_t f = row[c];
      if (f == 0) continue;
      const std::uint64_t neg = ell - f;
      for (std::size_t j = c; j < m.cols(); ++j)
        row[j] = static_cast<Residue>((row[j] + neg * prow[j]) % ell);
    }
    pivots.push_back(c);
    ++r;
  }
  return {std::move(m), std::move(pivots)};
}

inline std::size_t rank_f(const FMatrix& m) { return rref(m).pivots.size(); }

/// Basis of the right kernel {x : m x = 0}, one basis vector per column.
inline FMatrix nullspace_f(const FMatrix& m) {
  const auto [e, pivots] = rref(m);
  std::vector<bool> is_pivot(m.cols(), false);
  for (auto c : pivots) is_pivot[c] = true;
  std::vector<std::size_t> free_cols;
  for (std::size_t c = 0; c < m.cols(); ++c)
    if (!is_pivot[c]) free_cols.push_back(c);
  FMatrix basis(m.ell(), m.cols(), free_cols.size());
  for (std::size_t k = 0; k < free_cols.size(); ++k) {
    const std::size_t f = free_cols[k];
    basis.set(f, k, 1);
    for (std::size_t i = 0; i < pivots.size(); ++i)
      basis.set(pivots[i], k, -static_cast<long long>(e(i, f)));
  }
  return basis;
}

/// One solution x of a x = b (b a column block), or nothing if inconsistent.
inline std::optional<FMatrix> solve_f(const FMatrix& a, const FMatrix& b) {
  if (a.rows() != b.rows()) throw DomainError("solve_f shape mismatch");
  FMatrix aug(a.ell(), a.rows(), a.cols() + b.cols());
  for (std::size_t i = 0; i < a.rows(); ++i) {
    for (std::size_t j = 0; j < a.cols(); ++j) aug.row(i)[j] = a(i, j);
    for (std::size_t j = 0; j < b.cols(); ++j) aug.row(i)[a.cols() + j] = b(i, j);
  }
  const auto [e, pivots] = rref(std::move(aug));
  FMatrix x(a.ell(), a.cols(), b.cols());
  for (std::size_t i = 0; i < pivots.size(); ++i) {
    if (pivots[i] >= a.cols()) return std::nullopt;
    for (std::size_t j = 0; j < b.cols(); ++j)
      x.row(pivots[i])[j] = e(i, a.cols() + j);
  }
  return x;
}

inline std::optional<FMatrix> inverse_f(const FMatrix& a) {
  if (a.rows() != a.cols()) return std::nullopt;
  if (rank_f(a) != a.rows()) return std::nullopt;
  return solve_f(a, FMatrix::identity(a.ell(), a.rows()));
}

/// Dense integer matrix with arbitrary-precision entries.
class IntMatrix {
 public:
  IntMatrix() = default;
  IntMatrix(std::size_t rows, std::size_t cols)
      : rows_(rows), cols_(cols), data_(rows * cols) {}

  static IntMatrix identity(std::size_t n) {
    IntMatrix m(n, n);
    for (std::size_t i = 0; i < n; ++i) m(i, i) = 1;
    return m;
  }

  static IntMatrix from_rows(const std::vector<std::vector<long long>>& rows) {
    const std::size_t r = rows.size();
    const std::size_t c = r ? rows.front().size() : 0;
    IntMatrix m(r, c);
    for (std::size_t i = 0; i < r; ++i) {
      if (rows[i].size() != c) throw DomainError("ragged matrix rows");
      for (std::size_t j = 0; j < c; ++j) m(i, j) = rows[i][j];
    }
    return m;
  }

  std::size_t rows() const noexcept { return rows_; }
  std::size_t cols() const noexcept { return cols_; }

  Integer& operator()(std::size_t i, std::size_t j) { return data_[i * cols_ + j]; }
  const Integer& operator()(std::size_t i, std::size_t j) const {
    return data_[i * cols_ + j];
  }

  IntMatrix transpose() const {
    IntMatrix t(cols_, rows_);
    for (std::size_t i = 0; i < rows_; ++i)
      for (std::size_t j = 0; j < cols_; ++j) t(j, i) = (*this)(i, j);
    return t;
  }

  /// Sub-matrix keeping the listed rows and columns, in the listed order.
  IntMatrix select(const std::vector<std::size_t>& row_idx,
                   const std::vector<std::size_t>& col_idx) const {
    IntMatrix s(row_idx.size(), col_idx.size());
    for (std::size_t i = 0; i < row_idx.size(); ++i)
      for (std::size_t j = 0; j < col_idx.size(); ++j)
        s(i, j) = (*this)(row_idx[i], col_idx[j]);
    return s;
  }

  FMatrix mod(Residue ell) const {
    FMatrix f(ell, rows_, cols_);
    for (std::size_t i = 0; i < rows_; ++i)
      for (std::size_t j = 0; j < cols_; ++j) f.row(i)[j] = reduce_mod((*this)(i, j), ell);
    return f;
  }

  friend IntMatrix operator*(const IntMatrix& a, const IntMatrix& b) {
    if (a.cols_ != b.rows_) throw DomainError("IntMatrix product shape mismatch");
    IntMatrix c(a.rows_, b.cols_);
    for (std::size_t i = 0; i < a.rows_; ++i)
      for (std::size_t k = 0; k < a.cols_; ++k) {
        const Integer& aik = a(i, k);
        if (aik == 0) continue;
        for (std::size_t j = 0; j < b.cols_; ++j) c(i, j) += aik * b(k, j);
      }
    return c;
  }

  friend bool operator==(const IntMatrix&, const IntMatrix&) = default;

  friend std::ostream& operator<<(std::ostream& os, const IntMatrix& m) {
    for (std::size_t i = 0; i < m.rows_; ++i) {
      for (std::size_t j = 0; j < m.cols_; ++j) os << (j ? " " : "") << m(i, j);
      os << '\n';
    }
    return os;
  }

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<Integer> data_;
};

namespace detail {
inline void remove_content(std::vector<Integer>& row) {
  Integer g = 0;
  for (const auto& x : row) g = boost::multiprecision::gcd(g, x);
  if (g > 1)
    for (auto& x : row) x /= g;
}
}  // namespace detail

/// Rank over the rationals by fraction-free elimination (each updated row is
/// divided by its content, so entries stay small and arithmetic stays exact).
inline std::size_t rank_q(const IntMatrix& m) {
  std::vector<std::vector<Integer>> rows(m.rows(), std::vector<Integer>(m.cols()));
  for (std::size_t i = 0; i < m.rows(); ++i)
    for (std::size_t j = 0; j < m.cols(); ++j) rows[i][j] = m(i, j);
  std::size_t rank = 0;
  for (std::size_t c = 0; c < m.cols() && rank < rows.size(); ++c) {
    std::size_t p = rank;
    while (p < rows.size() && rows[p][c] == 0) ++p;
    if (p == rows.size()) continue;
    std::swap(rows[p], rows[rank]);
    const auto& prow = rows[rank];
    for (std::size_t i = rank + 1; i < rows.size(); ++i) {
      if (rows[i][c] == 0) continue;
      const Integer a = prow[c], b = rows[i][c];
      for (std::size_t j = c; j < m.cols(); ++j) rows[i][j] = a * rows[i][j] - b * prow[j];
      detail::remove_content(rows[i]);
    }
    ++rank;
  }
  return rank;
}

/// Determinant by Bareiss' fraction-free elimination.
inline Integer determinant(const IntMatrix& m) {
  if (m.rows() != m.cols()) throw DomainError("determinant of a non-square matrix");
  const std::size_t n = m.rows();
  if (n == 0) return 1;
  IntMatrix a = m;
  Integer prev = 1;
  int sign = 1;
  for (std::size_t k = 0; k + 1 < n; ++k) {
    if (a(k, k) == 0) {
      std::size_t p = k + 1;
      while (p < n && a(p, k) == 0) ++p;
      if (p == n) return 0;
      for (std::size_t j = 0; j < n; ++j) std::swap(a(k, j), a(p, j));
      sign = -sign;
    }
    for (std::size_t i = k + 1; i < n; ++i) {
      for (std::size_t j = k + 1; j < n; ++j)
        a(i, j) = (a(i, j) * a(k, k) - a(i, k) * a(k, j)) / prev;
      a(i, k) = 0;
    }
    prev = a(k, k);
  }
  return sign * a(n - 1, n - 1);
}

/// Nonzero invariant factors d_1 | d_2 | ... of m (Smith normal form), with
/// multiplicity, all positive.
inline std::vector<Integer> smith_normal_form(const IntMatrix& input) {
  IntMatrix a = input;
  const std::size_t m = a.rows(), n = a.cols();
  std::vector<Integer> factors;
  const auto swap_rows = [&](std::size_t i, std::size_t j) {
    for (std::size_t c = 0; c < n; ++c) std::swap(a(i, c), a(j, c));
  };
  const auto swap_cols = [&](std::size_t i, std::size_t j) {
    for (std::size_t r = 0; r < m; ++r) std::swap(a(r, i), a(r, j));
  };
  for (std::size_t t = 0; t < std::min(m, n); ++t) {
    for (;;) {
      // smallest nonzero entry of the trailing block becomes the pivot
      std::optional<std::pair<std::size_t, std::size_t>> best;
      for (std::size_t i = t; i < m; ++i)
        for (std::size_t j = t; j < n; ++j)
          if (a(i, j) != 0 &&
              (!best || abs(a(i, j)) < abs(a(best->first, best->second))))
            best = {i, j};
      if (!best) return factors;
      swap_rows(t, best->first);
      swap_cols(t, best->second);
      const Integer pivot = a(t, t);
      bool clean = true;
      for (std::size_t i = t + 1; i < m; ++i) {
        if (a(i, t) == 0) continue;
        const Integer q = a(i, t) / pivot;
        for (std::size_t c = t; c < n; ++c) a(i, c) -= q * a(t, c);
        if (a(i, t) != 0) clean = false;
      }
      for (std::size_t j = t + 1; j < n; ++j) {
        if (a(t, j) == 0) continue;
        const Integer q = a(t, j) / pivot;
        for (std::size_t r = t; r < m; ++r) a(r, j) -= q * a(r, t);
        if (a(t, j) != 0) clean = false;
      }
      if (!clean) continue;
      // pivot must divide the whole trailing block
      std::optional<std::size_t> bad_row;
      for (std::size_t i = t + 1; i < m && !bad_row; ++i)
        for (std::size_t j = t + 1; j < n; ++j)
          if (a(i, j) % pivot != 0) {
            bad_row = i;
            break;
          }
      if (!bad_row) break;
      for (std::size_t c = t; c < n; ++c) a(t, c) += a(*bad_row, c);
    }
    factors.push_back(abs(a(t, t)));
  }
  return factors;
}

}  // namespace springer
