#pragma once

// Exact rational linear programming.
//
// A dictionary simplex over Q with Bland's rule. Equalities are eliminated
// up front by parametrizing their solution space, so the remaining problem
// has free variables and nonnegative slacks only. Free variables are pivoted
// into the basis first and never leave it.

#include "tropint/linalg.hpp"

namespace tropint {

/// linear · x + constant >= 0, or == 0 when `equality` is set.
struct LinearConstraint {
  RatVector linear;
  Rational constant;
  bool equality = false;
};

enum class LpStatus { optimal, infeasible, unbounded };

struct LpResult {
  LpStatus status = LpStatus::infeasible;
  Rational value;     // optimal objective value (optimal only)
  RatVector point;    // an optimal (or, for unbounded, feasible) point
};

namespace detail {

class Dictionary {
 public:
  // x_basic[r] = T[r][0] + sum_j T[r][j+1] x_j  (j nonbasic)
  Dictionary(std::size_t free_count, std::size_t slack_count)
      : free_count_(free_count), nvars_(free_count + slack_count + 1) {
    basic_.resize(slack_count);
    rows_.assign(slack_count, RatVector(nvars_ + 1, Rational(0)));
    for (std::size_t i = 0; i < slack_count; ++i) basic_[i] = free_count + i;
    is_basic_.assign(nvars_, false);
    for (std::size_t i = 0; i < slack_count; ++i) is_basic_[free_count + i] = true;
  }

  std::size_t aux() const { return nvars_ - 1; }
  bool is_free(std::size_t var) const { return var < free_count_; }

  RatVector& row(std::size_t r) { return rows_[r]; }
  std::size_t rows() const { return rows_.size(); }
  std::size_t basic(std::size_t r) const { return basic_[r]; }

  void pivot(std::size_t r, std::size_t entering, RatVector* objective) {
    RatVector& pr = rows_[r];
    const Rational a = pr[entering + 1];
    const std::size_t leaving = basic_[r];
    RatVector nr(nvars_ + 1, Rational(0));
    for (std::size_t j = 0; j <= nvars_; ++j) {
      if (j == entering + 1 || pr[j] == 0) continue;
      nr[j] = -pr[j] / a;
    }
    nr[leaving + 1] = 1 / a;
    pr = std::move(nr);
    basic_[r] = entering;
    is_basic_[entering] = true;
    is_basic_[leaving] = false;
    auto substitute = [&](RatVector& target) {
      Rational f = target[entering + 1];
      if (f == 0) return;
      target[entering + 1] = 0;
      for (std::size_t j = 0; j <= nvars_; ++j)
        if (rows_[r][j] != 0) target[j] += f * rows_[r][j];
    };
    for (std::size_t i = 0; i < rows_.size(); ++i)
      if (i != r) substitute(rows_[i]);
    if (objective) substitute(*objective);
  }

  /// Maximizes the objective row (index 0 = constant). Returns false when
  /// unbounded.
  bool run(RatVector& objective, bool aux_allowed) {
    while (true) {
      std::size_t entering = nvars_;
      for (std::size_t j = free_count_; j < nvars_; ++j) {
        if (is_basic_[j] || (!aux_allowed && j == aux())) continue;
        if (objective[j + 1] > 0) {
          entering = j;
          break;
        }
      }
      if (entering == nvars_) return true;
      std::size_t leave_row = rows_.size();
      Rational best;
      for (std::size_t r = 0; r < rows_.size(); ++r) {
        if (is_free(basic_[r])) continue;
        const Rational& coef = rows_[r][entering + 1];
        if (coef >= 0) continue;
        Rational ratio = rows_[r][0] / (-coef);
        if (leave_row == rows_.size() || ratio < best ||
            (ratio == best && basic_[r] < basic_[leave_row])) {
          leave_row = r;
          best = ratio;
        }
      }
      if (leave_row == rows_.size()) return false;
      pivot(leave_row, entering, &objective);
    }
  }

  void erase_row(std::size_t r) {
    is_basic_[basic_[r]] = false;
    rows_.erase(rows_.begin() + static_cast<std::ptrdiff_t>(r));
    basic_.erase(basic_.begin() + static_cast<std::ptrdiff_t>(r));
  }

  bool is_basic(std::size_t var) const { return is_basic_[var]; }
  std::size_t nvars() const { return nvars_; }

 private:
  std::size_t free_count_;
  std::size_t nvars_;
  std::vector<std::size_t> basic_;
  std::vector<bool> is_basic_;
  std::vector<RatVector> rows_;
};

}  // namespace detail

/// maximize objective · x subject to the constraints, x ∈ Q^dim.
inline LpResult maximize(const RatVector& objective, const std::vector<LinearConstraint>& constraints,
                         std::size_t dim) {
  // Parametrize the equality solution set as x = origin + sum_k y_k basis_k.
  std::vector<RatVector> eq_rows;
  for (const auto& c : constraints) {
    if (!c.equality) continue;
    RatVector row = c.linear;
    row.push_back(c.constant);
    eq_rows.push_back(std::move(row));
  }
  RowEchelon ech = reduced_row_echelon(eq_rows, dim + 1);
  if (!ech.pivots.empty() && ech.pivots.back() == dim) return {LpStatus::infeasible, 0, {}};
  RatVector origin(dim, Rational(0));
  std::vector<bool> is_pivot(dim, false);
  for (std::size_t r = 0; r < ech.rows.size(); ++r) {
    origin[ech.pivots[r]] = -ech.rows[r][dim];
    is_pivot[ech.pivots[r]] = true;
  }
  std::vector<RatVector> basis;
  for (std::size_t f = 0; f < dim; ++f) {
    if (is_pivot[f]) continue;
    RatVector v(dim, Rational(0));
    v[f] = 1;
    for (std::size_t r = 0; r < ech.rows.size(); ++r) v[ech.pivots[r]] = -ech.rows[r][f];
    basis.push_back(std::move(v));
  }
  const std::size_t free_count = basis.size();

  std::vector<const LinearConstraint*> ineqs;
  for (const auto& c : constraints)
    if (!c.equality) ineqs.push_back(&c);

  detail::Dictionary dict(free_count, ineqs.size());
  for (std::size_t i = 0; i < ineqs.size(); ++i) {
    RatVector& row = dict.row(i);
    row[0] = dot(ineqs[i]->linear, origin) + ineqs[i]->constant;
    for (std::size_t k = 0; k < free_count; ++k) row[k + 1] = dot(ineqs[i]->linear, basis[k]);
  }

  // Phase 0: free variables into the basis.
  std::vector<bool> stuck(free_count, false);
  for (std::size_t k = 0; k < free_count; ++k) {
    std::size_t r = 0;
    while (r < dict.rows() && (dict.is_free(dict.basic(r)) || dict.row(r)[k + 1] == 0)) ++r;
    if (r == dict.rows()) {
      stuck[k] = true;
      continue;
    }
    dict.pivot(r, k, nullptr);
  }

  // Phase 1.
  std::size_t most_negative = dict.rows();
  for (std::size_t r = 0; r < dict.rows(); ++r) {
    if (dict.is_free(dict.basic(r))) continue;
    if (dict.row(r)[0] < 0 && (most_negative == dict.rows() || dict.row(r)[0] < dict.row(most_negative)[0]))
      most_negative = r;
  }
  const std::size_t aux = dict.aux();
  if (most_negative != dict.rows()) {
    for (std::size_t r = 0; r < dict.rows(); ++r)
      if (!dict.is_free(dict.basic(r))) dict.row(r)[aux + 1] = 1;
    RatVector phase1(dict.nvars() + 1, Rational(0));
    phase1[aux + 1] = -1;
    dict.pivot(most_negative, aux, &phase1);
    dict.run(phase1, true);
    if (phase1[0] < 0) return {LpStatus::infeasible, 0, {}};
    for (std::size_t r = 0; r < dict.rows(); ++r) {
      if (dict.basic(r) != aux) continue;
      std::size_t j = 0;
      while (j < dict.nvars() && (j == aux || dict.is_basic(j) || dict.row(r)[j + 1] == 0)) ++j;
      if (j == dict.nvars()) {
        dict.erase_row(r);
      } else {
        dict.pivot(r, j, nullptr);
      }
      break;
    }
    for (std::size_t r = 0; r < dict.rows(); ++r) dict.row(r)[aux + 1] = 0;
  }

  // Phase 2 objective in terms of the nonbasic variables.
  RatVector obj_y(free_count);
  for (std::size_t k = 0; k < free_count; ++k) obj_y[k] = dot(objective, basis[k]);
  RatVector obj(dict.nvars() + 1, Rational(0));
  obj[0] = dot(objective, origin);
  for (std::size_t k = 0; k < free_count; ++k) {
    if (obj_y[k] == 0) continue;
    if (stuck[k]) {
      obj[k + 1] += obj_y[k];
      continue;
    }
    for (std::size_t r = 0; r < dict.rows(); ++r) {
      if (dict.basic(r) != k) continue;
      for (std::size_t j = 0; j <= dict.nvars(); ++j)
        if (dict.row(r)[j] != 0) obj[j] += obj_y[k] * dict.row(r)[j];
    }
  }
  bool bounded = true;
  for (std::size_t k = 0; k < free_count; ++k)
    if (stuck[k] && obj[k + 1] != 0) bounded = false;
  if (bounded) bounded = dict.run(obj, false);

  RatVector y(free_count, Rational(0));
  for (std::size_t r = 0; r < dict.rows(); ++r)
    if (dict.is_free(dict.basic(r))) y[dict.basic(r)] = dict.row(r)[0];
  RatVector x = origin;
  for (std::size_t k = 0; k < free_count; ++k)
    if (y[k] != 0) x = add(x, scaled(basis[k], y[k]));
  if (!bounded) return {LpStatus::unbounded, 0, std::move(x)};
  return {LpStatus::optimal, obj[0], std::move(x)};
}

inline LpResult minimize(const RatVector& objective, const std::vector<LinearConstraint>& constraints,
                         std::size_t dim) {
  LpResult r = maximize(scaled(objective, Rational(-1)), constraints, dim);
  if (r.status == LpStatus::optimal) r.value = -r.value;
  return r;
}

}  // namespace tropint
