#pragma once

// Dense exact linear algebra over Z and Q.

#include "tropint/rational.hpp"

#include <algorithm>
#include <cstddef>
#include <optional>
#include <ostream>
#include <vector>

namespace tropint {

using IntVector = std::vector<Integer>;
using RatVector = std::vector<Rational>;

inline std::strong_ordering compare(const IntVector& a, const IntVector& b) {
  if (a.size() != b.size()) return a.size() <=> b.size();
  for (std::size_t i = 0; i < a.size(); ++i) {
    auto c = compare(a[i], b[i]);
    if (c != 0) return c;
  }
  return std::strong_ordering::equal;
}

inline std::strong_ordering compare(const RatVector& a, const RatVector& b) {
  if (a.size() != b.size()) return a.size() <=> b.size();
  for (std::size_t i = 0; i < a.size(); ++i) {
    auto c = compare(a[i], b[i]);
    if (c != 0) return c;
  }
  return std::strong_ordering::equal;
}

inline RatVector to_rational(const IntVector& v) {
  RatVector out;
  out.reserve(v.size());
  for (const auto& x : v) out.emplace_back(x);
  return out;
}

inline bool is_zero(const IntVector& v) {
  return std::all_of(v.begin(), v.end(), [](const Integer& x) { return x == 0; });
}

inline bool is_zero(const RatVector& v) {
  return std::all_of(v.begin(), v.end(), [](const Rational& x) { return x == 0; });
}

inline Integer dot(const IntVector& a, const IntVector& b) {
  Integer s = 0;
  for (std::size_t i = 0; i < a.size(); ++i) s += a[i] * b[i];
  return s;
}

inline Rational dot(const IntVector& a, const RatVector& b) {
  Rational s = 0;
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (a[i] != 0) s += Rational(a[i]) * b[i];
  }
  return s;
}

inline Rational dot(const RatVector& a, const RatVector& b) {
  Rational s = 0;
  for (std::size_t i = 0; i < a.size(); ++i) s += a[i] * b[i];
  return s;
}

inline IntVector add(const IntVector& a, const IntVector& b) {
  IntVector out(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) out[i] = a[i] + b[i];
  return out;
}

inline RatVector add(const RatVector& a, const RatVector& b) {
  RatVector out(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) out[i] = a[i] + b[i];
  return out;
}

inline RatVector subtract(const RatVector& a, const RatVector& b) {
  RatVector out(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) out[i] = a[i] - b[i];
  return out;
}

inline IntVector scaled(const IntVector& v, const Integer& s) {
  IntVector out(v.size());
  for (std::size_t i = 0; i < v.size(); ++i) out[i] = v[i] * s;
  return out;
}

inline RatVector scaled(const RatVector& v, const Rational& s) {
  RatVector out(v.size());
  for (std::size_t i = 0; i < v.size(); ++i) out[i] = v[i] * s;
  return out;
}

inline IntVector negated(const IntVector& v) { return scaled(v, Integer(-1)); }

/// Multiplies by the least positive rational making the vector integral with
/// coprime entries. Returns the scale factor through `factor` when requested.
inline IntVector primitive_integer_multiple(const RatVector& v, Rational* factor = nullptr) {
  Integer den_lcm = 1;
  for (const auto& x : v) {
    if (x != 0) den_lcm = lcm(den_lcm, Integer(x.get_den()));
  }
  IntVector out(v.size());
  Integer g = 0;
  for (std::size_t i = 0; i < v.size(); ++i) {
    Rational scaled_entry = v[i] * den_lcm;
    out[i] = scaled_entry.get_num();
    g = gcd(g, out[i]);
  }
  if (g == 0) {
    if (factor) *factor = 1;
    return out;
  }
  for (auto& x : out) x /= g;
  if (factor) *factor = make_rational(den_lcm, g);
  return out;
}

/// Row-major integer matrix.
class IntMatrix {
 public:
  IntMatrix() = default;
  IntMatrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), data_(rows * cols, 0) {}

  static IntMatrix identity(std::size_t n) {
    IntMatrix m(n, n);
    for (std::size_t i = 0; i < n; ++i) m(i, i) = 1;
    return m;
  }

  /// Builds a matrix whose rows are the given vectors.
  static IntMatrix from_rows(const std::vector<IntVector>& rows, std::size_t cols) {
    IntMatrix m(rows.size(), cols);
    for (std::size_t r = 0; r < rows.size(); ++r) {
      if (rows[r].size() != cols) throw Error("ragged matrix rows");
      for (std::size_t c = 0; c < cols; ++c) m(r, c) = rows[r][c];
    }
    return m;
  }

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }

  Integer& operator()(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
  const Integer& operator()(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }

  IntVector row(std::size_t r) const {
    return IntVector(data_.begin() + static_cast<std::ptrdiff_t>(r * cols_),
                     data_.begin() + static_cast<std::ptrdiff_t>((r + 1) * cols_));
  }

  IntVector column(std::size_t c) const {
    IntVector out(rows_);
    for (std::size_t r = 0; r < rows_; ++r) out[r] = (*this)(r, c);
    return out;
  }

  std::vector<IntVector> row_vectors() const {
    std::vector<IntVector> out;
    for (std::size_t r = 0; r < rows_; ++r) out.push_back(row(r));
    return out;
  }

  IntMatrix transpose() const {
    IntMatrix t(cols_, rows_);
    for (std::size_t r = 0; r < rows_; ++r)
      for (std::size_t c = 0; c < cols_; ++c) t(c, r) = (*this)(r, c);
    return t;
  }

  void swap_rows(std::size_t a, std::size_t b) {
    if (a == b) return;
    for (std::size_t c = 0; c < cols_; ++c) std::swap((*this)(a, c), (*this)(b, c));
  }

  void swap_cols(std::size_t a, std::size_t b) {
    if (a == b) return;
    for (std::size_t r = 0; r < rows_; ++r) std::swap((*this)(r, a), (*this)(r, b));
  }

  /// row[dst] += factor * row[src]
  void add_row_multiple(std::size_t dst, std::size_t src, const Integer& factor) {
    if (factor == 0) return;
    for (std::size_t c = 0; c < cols_; ++c) (*this)(dst, c) += factor * (*this)(src, c);
  }

  /// col[dst] += factor * col[src]
  void add_col_multiple(std::size_t dst, std::size_t src, const Integer& factor) {
    if (factor == 0) return;
    for (std::size_t r = 0; r < rows_; ++r) (*this)(r, dst) += factor * (*this)(r, src);
  }

  void negate_row(std::size_t r) {
    for (std::size_t c = 0; c < cols_; ++c) (*this)(r, c) = -(*this)(r, c);
  }

  void negate_col(std::size_t c) {
    for (std::size_t r = 0; r < rows_; ++r) (*this)(r, c) = -(*this)(r, c);
  }

  IntVector apply(const IntVector& v) const {
    if (v.size() != cols_) throw Error("matrix-vector dimension mismatch");
    IntVector out(rows_, 0);
    for (std::size_t r = 0; r < rows_; ++r)
      for (std::size_t c = 0; c < cols_; ++c) out[r] += (*this)(r, c) * v[c];
    return out;
  }

  RatVector apply(const RatVector& v) const {
    if (v.size() != cols_) throw Error("matrix-vector dimension mismatch");
    RatVector out(rows_, Rational(0));
    for (std::size_t r = 0; r < rows_; ++r)
      for (std::size_t c = 0; c < cols_; ++c)
        if ((*this)(r, c) != 0) out[r] += Rational((*this)(r, c)) * v[c];
    return out;
  }

  /// Row vector times matrix: v^T * M.
  IntVector left_apply(const IntVector& v) const {
    if (v.size() != rows_) throw Error("vector-matrix dimension mismatch");
    IntVector out(cols_, 0);
    for (std::size_t r = 0; r < rows_; ++r)
      if (v[r] != 0)
        for (std::size_t c = 0; c < cols_; ++c) out[c] += v[r] * (*this)(r, c);
    return out;
  }

  friend IntMatrix operator*(const IntMatrix& a, const IntMatrix& b) {
    if (a.cols_ != b.rows_) throw Error("matrix product dimension mismatch");
    IntMatrix m(a.rows_, b.cols_);
    for (std::size_t i = 0; i < a.rows_; ++i)
      for (std::size_t k = 0; k < a.cols_; ++k) {
        if (a(i, k) == 0) continue;
        for (std::size_t j = 0; j < b.cols_; ++j) m(i, j) += a(i, k) * b(k, j);
      }
    return m;
  }

  friend bool operator==(const IntMatrix& a, const IntMatrix& b) {
    return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.data_ == b.data_;
  }

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<Integer> data_;
};

inline std::ostream& operator<<(std::ostream& os, const IntMatrix& m) {
  os << '[';
  for (std::size_t r = 0; r < m.rows(); ++r) {
    os << (r ? ", [" : "[");
    for (std::size_t c = 0; c < m.cols(); ++c) os << (c ? ", " : "") << m(r, c);
    os << ']';
  }
  return os << ']';
}

/// Reduced row echelon form over Q.
struct RowEchelon {
  std::vector<RatVector> rows;        // nonzero rows, pivot entries equal to 1
  std::vector<std::size_t> pivots;    // pivot column of each row
};

inline RowEchelon reduced_row_echelon(std::vector<RatVector> rows, std::size_t cols) {
  RowEchelon out;
  std::size_t rank = 0;
  for (std::size_t c = 0; c < cols && rank < rows.size(); ++c) {
    std::size_t pivot = rank;
    while (pivot < rows.size() && rows[pivot][c] == 0) ++pivot;
    if (pivot == rows.size()) continue;
    std::swap(rows[rank], rows[pivot]);
    Rational inv = 1 / rows[rank][c];
    for (auto& x : rows[rank]) x *= inv;
    for (std::size_t r = 0; r < rows.size(); ++r) {
      if (r == rank || rows[r][c] == 0) continue;
      Rational f = rows[r][c];
      for (std::size_t k = 0; k < cols; ++k) {
        if (rows[rank][k] != 0) rows[r][k] -= f * rows[rank][k];
      }
    }
    out.pivots.push_back(c);
    ++rank;
  }
  rows.resize(rank);
  out.rows = std::move(rows);
  return out;
}

inline std::size_t rank(const std::vector<RatVector>& rows, std::size_t cols) {
  return reduced_row_echelon(rows, cols).pivots.size();
}

inline std::size_t rank(const std::vector<IntVector>& rows, std::size_t cols) {
  std::vector<RatVector> q;
  for (const auto& r : rows) q.push_back(to_rational(r));
  return rank(q, cols);
}

/// Basis of {x : row . x = 0 for all rows}.
inline std::vector<RatVector> nullspace(const std::vector<RatVector>& rows, std::size_t cols) {
  RowEchelon e = reduced_row_echelon(rows, cols);
  std::vector<bool> is_pivot(cols, false);
  for (auto p : e.pivots) is_pivot[p] = true;
  std::vector<RatVector> basis;
  for (std::size_t free = 0; free < cols; ++free) {
    if (is_pivot[free]) continue;
    RatVector v(cols, Rational(0));
    v[free] = 1;
    for (std::size_t r = 0; r < e.rows.size(); ++r) v[e.pivots[r]] = -e.rows[r][free];
    basis.push_back(std::move(v));
  }
  return basis;
}

/// Coordinates c with sum c_i basis_i = v, if v lies in the span.
/// The basis vectors must be linearly independent.
inline std::optional<RatVector> coordinates_in(const std::vector<RatVector>& basis, const RatVector& v) {
  const std::size_t k = basis.size();
  const std::size_t n = v.size();
  // Solve the n x k system B c = v via the augmented transpose.
  std::vector<RatVector> rows(n, RatVector(k + 1));
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < k; ++j) rows[i][j] = basis[j][i];
    rows[i][k] = v[i];
  }
  RowEchelon e = reduced_row_echelon(rows, k + 1);
  if (!e.pivots.empty() && e.pivots.back() == k) return std::nullopt;
  if (e.pivots.size() != k) throw Error("coordinates_in: basis is not linearly independent");
  RatVector c(k);
  for (std::size_t r = 0; r < e.rows.size(); ++r) c[e.pivots[r]] = e.rows[r][k];
  return c;
}

/// Determinant by fraction-free Bareiss elimination.
inline Integer determinant(IntMatrix m) {
  const std::size_t n = m.rows();
  if (n != m.cols()) throw Error("determinant of non-square matrix");
  if (n == 0) return 1;
  Integer sign = 1;
  Integer prev = 1;
  for (std::size_t k = 0; k + 1 < n; ++k) {
    if (m(k, k) == 0) {
      std::size_t p = k + 1;
      while (p < n && m(p, k) == 0) ++p;
      if (p == n) return 0;
      m.swap_rows(k, p);
      sign = -sign;
    }
    for (std::size_t i = k + 1; i < n; ++i) {
      for (std::size_t j = k + 1; j < n; ++j) {
        Integer num = m(i, j) * m(k, k) - m(i, k) * m(k, j);
        mpz_divexact(m(i, j).get_mpz_t(), num.get_mpz_t(), prev.get_mpz_t());
      }
      m(i, k) = 0;
    }
    prev = m(k, k);
  }
  return sign * m(n - 1, n - 1);
}

}  // namespace tropint
