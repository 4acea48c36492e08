#pragma once

// Integer lattice algebra: normal forms, saturated sublattices, quotient
// generators and lattice indices. The ambient lattice is always Z^n.

#include "tropint/linalg.hpp"

#include <cstdlib>
#include <utility>

namespace tropint {

/// v / gcd(v). Throws on the zero vector.
inline IntVector primitive_part(const IntVector& v) {
  Integer g = 0;
  for (const auto& x : v) g = gcd(g, x);
  if (g == 0) throw Error("no primitive part of zero");
  IntVector out(v.size());
  for (std::size_t i = 0; i < v.size(); ++i) out[i] = v[i] / g;
  return out;
}

struct HermiteForm {
  IntMatrix H;  // row Hermite normal form
  IntMatrix U;  // unimodular, H = U * M
};

/// Row-style Hermite normal form: pivots positive, entries above a pivot
/// reduced into [0, pivot), zero rows last.
inline HermiteForm hermite_normal_form(const IntMatrix& M) {
  IntMatrix H = M;
  IntMatrix U = IntMatrix::identity(M.rows());
  std::size_t r = 0;
  for (std::size_t c = 0; c < H.cols() && r < H.rows(); ++c) {
    while (true) {
      std::size_t best = H.rows();
      for (std::size_t i = r; i < H.rows(); ++i) {
        if (H(i, c) == 0) continue;
        if (best == H.rows() || abs(H(i, c)) < abs(H(best, c))) best = i;
      }
      if (best == H.rows()) break;
      H.swap_rows(r, best);
      U.swap_rows(r, best);
      bool done = true;
      for (std::size_t i = r + 1; i < H.rows(); ++i) {
        if (H(i, c) == 0) continue;
        Integer q = floor_div(H(i, c), H(r, c));
        H.add_row_multiple(i, r, -q);
        U.add_row_multiple(i, r, -q);
        if (H(i, c) != 0) done = false;
      }
      if (done) break;
    }
    if (H(r, c) == 0) continue;
    if (H(r, c) < 0) {
      H.negate_row(r);
      U.negate_row(r);
    }
    for (std::size_t i = 0; i < r; ++i) {
      Integer q = floor_div(H(i, c), H(r, c));
      H.add_row_multiple(i, r, -q);
      U.add_row_multiple(i, r, -q);
    }
    ++r;
  }
  return {std::move(H), std::move(U)};
}

struct SmithForm {
  IntMatrix S;     // diagonal, d_1 | d_2 | ..., nonnegative
  IntMatrix U;     // unimodular, S = U * M * V
  IntMatrix V;     // unimodular
  IntMatrix Vinv;  // inverse of V
};

inline SmithForm smith_normal_form(const IntMatrix& M) {
  const std::size_t m = M.rows();
  const std::size_t n = M.cols();
  IntMatrix S = M;
  IntMatrix U = IntMatrix::identity(m);
  IntMatrix V = IntMatrix::identity(n);
  IntMatrix Vinv = IntMatrix::identity(n);

  auto col_op = [&](std::size_t dst, std::size_t src, const Integer& f) {
    // col_dst += f col_src on S and V; the inverse row operation on Vinv.
    S.add_col_multiple(dst, src, f);
    V.add_col_multiple(dst, src, f);
    Vinv.add_row_multiple(src, dst, -f);
  };
  auto col_swap = [&](std::size_t a, std::size_t b) {
    S.swap_cols(a, b);
    V.swap_cols(a, b);
    Vinv.swap_rows(a, b);
  };

  for (std::size_t t = 0; t < std::min(m, n); ++t) {
    while (true) {
      std::size_t bi = m, bj = n;
      for (std::size_t i = t; i < m; ++i)
        for (std::size_t j = t; j < n; ++j) {
          if (S(i, j) == 0) continue;
          if (bi == m || abs(S(i, j)) < abs(S(bi, bj))) {
            bi = i;
            bj = j;
          }
        }
      if (bi == m) break;
      S.swap_rows(t, bi);
      U.swap_rows(t, bi);
      col_swap(t, bj);
      bool changed = false;
      for (std::size_t i = t + 1; i < m; ++i) {
        if (S(i, t) == 0) continue;
        Integer q = S(i, t) / S(t, t);
        S.add_row_multiple(i, t, -q);
        U.add_row_multiple(i, t, -q);
        if (S(i, t) != 0) changed = true;
      }
      for (std::size_t j = t + 1; j < n; ++j) {
        if (S(t, j) == 0) continue;
        Integer q = S(t, j) / S(t, t);
        col_op(j, t, -q);
        if (S(t, j) != 0) changed = true;
      }
      if (changed) continue;
      bool fixed = false;
      for (std::size_t i = t + 1; i < m && !fixed; ++i)
        for (std::size_t j = t + 1; j < n && !fixed; ++j) {
          if (S(i, j) % S(t, t) != 0) {
            S.add_row_multiple(t, i, 1);
            U.add_row_multiple(t, i, 1);
            fixed = true;
          }
        }
      if (!fixed) break;
    }
    if (S(t, t) < 0) {
      S.negate_row(t);
      U.negate_row(t);
    }
  }
  return {std::move(S), std::move(U), std::move(V), std::move(Vinv)};
}

/// A Z-basis of a sublattice of Z^n.
class LatticeBasis {
 public:
  LatticeBasis() = default;
  LatticeBasis(std::size_t ambient_dim, std::vector<IntVector> vectors)
      : ambient_dim_(ambient_dim), vectors_(std::move(vectors)) {
    for (const auto& v : vectors_)
      if (v.size() != ambient_dim_) throw Error("lattice basis vector has wrong length");
    if (tropint::rank(vectors_, ambient_dim_) != vectors_.size())
      throw Error("lattice basis vectors are linearly dependent");
  }

  static LatticeBasis standard(std::size_t n) {
    std::vector<IntVector> vs;
    for (std::size_t i = 0; i < n; ++i) {
      IntVector e(n, 0);
      e[i] = 1;
      vs.push_back(std::move(e));
    }
    return LatticeBasis(n, std::move(vs));
  }

  std::size_t ambient_dim() const { return ambient_dim_; }
  std::size_t rank() const { return vectors_.size(); }
  const std::vector<IntVector>& vectors() const { return vectors_; }

  std::vector<RatVector> rational_vectors() const {
    std::vector<RatVector> out;
    for (const auto& v : vectors_) out.push_back(to_rational(v));
    return out;
  }

  /// The same lattice with its basis replaced by the nonzero HNF rows.
  LatticeBasis canonical() const {
    if (vectors_.empty()) return *this;
    auto hnf = hermite_normal_form(IntMatrix::from_rows(vectors_, ambient_dim_));
    std::vector<IntVector> rows;
    for (std::size_t r = 0; r < hnf.H.rows(); ++r) {
      IntVector row = hnf.H.row(r);
      if (!is_zero(row)) rows.push_back(std::move(row));
    }
    return LatticeBasis(ambient_dim_, std::move(rows));
  }

  /// Integer coordinates of v in this basis, if v is a lattice element.
  std::optional<IntVector> coordinates(const IntVector& v) const {
    auto c = coordinates_in(rational_vectors(), to_rational(v));
    if (!c) return std::nullopt;
    IntVector out;
    for (const auto& x : *c) {
      if (!is_integer(x)) return std::nullopt;
      out.push_back(x.get_num());
    }
    return out;
  }

  bool contains(const IntVector& v) const { return coordinates(v).has_value(); }

  friend bool operator==(const LatticeBasis& a, const LatticeBasis& b) {
    if (a.ambient_dim_ != b.ambient_dim_ || a.rank() != b.rank()) return false;
    return a.canonical().vectors_ == b.canonical().vectors_;
  }

 private:
  std::size_t ambient_dim_ = 0;
  std::vector<IntVector> vectors_;
};

/// Basis of span_Q(spanning) ∩ Z^n, in Hermite normal form.
inline LatticeBasis subspace_lattice(const std::vector<RatVector>& spanning, std::size_t ambient_dim) {
  std::vector<IntVector> rows;
  for (const auto& v : spanning) {
    if (v.size() != ambient_dim) throw Error("spanning vector has wrong length");
    if (!is_zero(v)) rows.push_back(primitive_integer_multiple(v));
  }
  if (rows.empty()) return LatticeBasis(ambient_dim, {});
  auto snf = smith_normal_form(IntMatrix::from_rows(rows, ambient_dim));
  std::size_t r = 0;
  while (r < std::min(snf.S.rows(), snf.S.cols()) && snf.S(r, r) != 0) ++r;
  // Row space of M is spanned by d_i * (row i of V^-1); the first r rows of
  // the unimodular V^-1 therefore span its saturation.
  std::vector<IntVector> basis;
  for (std::size_t i = 0; i < r; ++i) basis.push_back(snf.Vinv.row(i));
  return LatticeBasis(ambient_dim, std::move(basis)).canonical();
}

/// A vector u in `super` such that sub ∪ {u} generates super. The sign is
/// arbitrary.
inline IntVector quotient_generator(const LatticeBasis& sub, const LatticeBasis& super) {
  if (sub.ambient_dim() != super.ambient_dim()) throw Error("quotient_generator: ambient dimension mismatch");
  if (super.rank() != sub.rank() + 1) throw Error("quotient_generator: rank mismatch");
  const std::size_t m = super.rank();
  if (sub.rank() == 0) return super.vectors().front();
  std::vector<IntVector> coords;
  for (const auto& v : sub.vectors()) {
    auto c = super.coordinates(v);
    if (!c) throw Error("quotient_generator: sub is not contained in super");
    coords.push_back(std::move(*c));
  }
  auto snf = smith_normal_form(IntMatrix::from_rows(coords, m));
  for (std::size_t i = 0; i < sub.rank(); ++i) {
    if (snf.S(i, i) == 0) throw Error("quotient_generator: rank mismatch");
    if (snf.S(i, i) != 1) throw Error("quotient_generator: torsion in quotient (sub is not saturated in super)");
  }
  IntVector w = snf.Vinv.row(m - 1);
  IntVector u(super.ambient_dim(), 0);
  for (std::size_t j = 0; j < m; ++j) u = add(u, scaled(super.vectors()[j], w[j]));
  return u;
}

/// An integer matrix acting on column vectors, Z^source_dim -> Z^target_dim.
class IntegerLinearMap {
 public:
  IntegerLinearMap() = default;
  explicit IntegerLinearMap(IntMatrix matrix) : matrix_(std::move(matrix)) {}

  static IntegerLinearMap identity(std::size_t n) { return IntegerLinearMap(IntMatrix::identity(n)); }

  /// The coordinate projection (x_0..x_{n-1}) -> (x_first .. x_{first+count-1}).
  static IntegerLinearMap projection(std::size_t n, std::size_t first, std::size_t count) {
    IntMatrix m(count, n);
    for (std::size_t i = 0; i < count; ++i) m(i, first + i) = 1;
    return IntegerLinearMap(std::move(m));
  }

  const IntMatrix& matrix() const { return matrix_; }
  std::size_t source_dim() const { return matrix_.cols(); }
  std::size_t target_dim() const { return matrix_.rows(); }

  IntVector apply(const IntVector& v) const { return matrix_.apply(v); }
  RatVector apply(const RatVector& v) const { return matrix_.apply(v); }

  /// (this ∘ inner)
  IntegerLinearMap compose(const IntegerLinearMap& inner) const {
    return IntegerLinearMap(matrix_ * inner.matrix_);
  }

  friend bool operator==(const IntegerLinearMap&, const IntegerLinearMap&) = default;

 private:
  IntMatrix matrix_;
};

/// Index |target / f(source)|. Requires equal ranks and f(source) ⊆ target.
inline Integer lattice_index(const IntegerLinearMap& f, const LatticeBasis& source, const LatticeBasis& target) {
  if (f.source_dim() != source.ambient_dim() || f.target_dim() != target.ambient_dim())
    throw Error("lattice_index: dimension mismatch");
  if (source.rank() != target.rank()) throw Error("lattice_index: rank mismatch");
  const std::size_t k = source.rank();
  if (k == 0) return 1;
  IntMatrix coords(k, k);
  for (std::size_t i = 0; i < k; ++i) {
    IntVector image = f.apply(source.vectors()[i]);
    auto c = target.coordinates(image);
    if (!c) throw Error("lattice_index: image is not contained in the target lattice");
    for (std::size_t j = 0; j < k; ++j) coords(i, j) = (*c)[j];
  }
  Integer det = determinant(coords);
  if (det == 0) throw Error("map not injective on lattice");
  return abs(det);
}

/// An integer linear form λ on Z^n with λ(b_i) = values_i for the basis b_i of
/// a saturated lattice.
inline IntVector integral_functional_with_values(const LatticeBasis& basis, const IntVector& values) {
  if (values.size() != basis.rank()) throw Error("integral_functional_with_values: value count mismatch");
  const std::size_t n = basis.ambient_dim();
  if (basis.rank() == 0) return IntVector(n, 0);
  auto snf = smith_normal_form(IntMatrix::from_rows(basis.vectors(), n));
  // B = U^-1 [D|0] V^-1 and B λ = values  <=>  D μ = U values with μ = V^-1 λ.
  IntVector rhs = snf.U.apply(values);
  IntVector mu(n, 0);
  for (std::size_t i = 0; i < basis.rank(); ++i) {
    if (snf.S(i, i) == 0 || rhs[i] % snf.S(i, i) != 0)
      throw Error("integral_functional_with_values: lattice is not saturated");
    mu[i] = rhs[i] / snf.S(i, i);
  }
  return snf.V.apply(mu);
}

}  // namespace tropint
