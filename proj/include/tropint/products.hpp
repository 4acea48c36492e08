#pragma once

// The intersection product of cycles in R^n, degrees and Bézout checks.

#include "tropint/morphisms.hpp"

#include <random>

namespace tropint {

enum class DiagonalSign {
  x_minus_y,  // ψ_i = max{0, x_i - y_i}
  y_minus_x,  // ψ_i = max{0, y_i - x_i}
};

struct DiagonalDivisors {
  std::size_t n = 0;
  std::vector<PLFunction> divisors;  // ψ_1..ψ_n on R^{2n}
};

inline DiagonalDivisors diagonal_divisors(std::size_t n, DiagonalSign sign = DiagonalSign::x_minus_y) {
  DiagonalDivisors d{n, {}};
  for (std::size_t i = 0; i < n; ++i) {
    AffineForm diff{IntVector(2 * n, 0), 0};
    diff.linear[i] = sign == DiagonalSign::x_minus_y ? 1 : -1;
    diff.linear[n + i] = sign == DiagonalSign::x_minus_y ? -1 : 1;
    d.divisors.push_back(TropicalPolynomial(2 * n, {constant_form(2 * n, 0), diff}));
  }
  return d;
}

/// C · D = π_*(ψ_1 ⋯ ψ_n · (C × D)) with π(x, y) = x. If dim C + dim D < n
/// the result is the empty cycle of (negative) dimension dim C + dim D - n.
inline Cycle stable_intersect(const Cycle& c, const Cycle& d, DiagonalSign sign = DiagonalSign::x_minus_y) {
  const std::size_t n = c.ambient_dim();
  if (d.ambient_dim() != n) throw Error("stable_intersect: ambient dimension mismatch");
  const int dim = c.dim() + d.dim() - static_cast<int>(n);
  if (dim < 0 || c.reduced().empty() || d.reduced().empty()) return Cycle::empty_cycle(n, dim);
  Cycle product = cartesian_product(c.reduced(), d.reduced());
  Cycle cut = divisor_chain(diagonal_divisors(n, sign).divisors, product);
  return push_forward(IntegerLinearMap::projection(2 * n, 0, n), cut);
}

/// {(x, x)} ⊂ R^{2n} with weight 1.
inline Cycle explicit_diagonal(std::size_t n) {
  ConstraintSystem s{2 * n, {}, {}};
  for (std::size_t i = 0; i < n; ++i) {
    AffineForm f{IntVector(2 * n, 0), 0};
    f.linear[i] = 1;
    f.linear[n + i] = -1;
    s.equalities.push_back(std::move(f));
  }
  return Cycle::trusted(WeightedComplex(2 * n, static_cast<int>(n), {{canonicalize(s), 1}}));
}

/// ψ_1 ⋯ ψ_n · [R^{2n}], checked against the explicit diagonal.
inline Cycle diagonal_cycle(std::size_t n) {
  Cycle computed = divisor_chain(diagonal_divisors(n).divisors, whole_space_cycle(2 * n));
  if (!cycles_equal(computed, explicit_diagonal(n))) throw Error("diagonal_cycle: product differs from the diagonal");
  return computed;
}

/// Sum of weights of a 0-cycle; for a k-cycle the degree of C · L^n_{n-k}.
inline Integer degree(const Cycle& c) {
  if (c.empty()) return 0;
  if (c.dim() == 0) {
    Integer total = 0;
    for (const auto& w : c.weights()) total += w;
    return total;
  }
  const std::size_t n = c.ambient_dim();
  return degree(stable_intersect(c, standard_skeleton(n, n - static_cast<std::size_t>(c.dim()))));
}

/// Every maximal cell's recession cone lies in some cone of L^n_k.
inline bool is_pn_generic(const Cycle& c) {
  if (c.empty()) return true;
  const std::size_t n = c.ambient_dim();
  const auto subsets = index_subsets(n, static_cast<std::size_t>(c.dim()));
  std::vector<Cell> cones;
  for (const auto& I : subsets) cones.push_back(skeleton_cone(n, I));
  for (std::size_t i = 0; i < c.size(); ++i) {
    if (c.weight(i) == 0) continue;
    Cell rc = recession_cone(c.cell(i));
    bool found = false;
    for (const auto& cone : cones)
      if (contains(cone, rc)) {
        found = true;
        break;
      }
    if (!found) return false;
  }
  return true;
}

struct BezoutReport {
  Integer degree_c;
  Integer degree_d;
  Integer degree_product;
  bool applicable = true;  // both cycles P^n-generic
  bool pass = false;
};

inline BezoutReport bezout_check(const Cycle& c, const Cycle& d) {
  if (c.ambient_dim() != d.ambient_dim()) throw Error("bezout_check: ambient dimension mismatch");
  if (c.dim() + d.dim() != static_cast<int>(c.ambient_dim()))
    throw Error("bezout_check: dimensions are not complementary");
  BezoutReport r;
  r.degree_c = degree(c);
  r.degree_d = degree(d);
  r.degree_product = degree(stable_intersect(c, d));
  r.applicable = is_pn_generic(c) && is_pn_generic(d);
  r.pass = r.applicable && r.degree_product == r.degree_c * r.degree_d;
  return r;
}

inline bool degree_zero_check(const PLFunction& phi, const Cycle& c) {
  if (c.dim() != 1) throw Error("degree_zero_check: cycle must be one-dimensional");
  if (!is_bounded_on(phi, c)) throw Error("lemma hypothesis violated");
  return degree(weil_divisor(phi, c)) == 0;
}

inline bool translation_invariance_check(const Cycle& c, const Cycle& d, const RatVector& v1, const RatVector& v2) {
  return degree(stable_intersect(c, d)) == degree(stable_intersect(translate(c, v1), translate(d, v2)));
}

/// Intersection multiplicity of two transversally meeting cells:
/// ω ω' [Z^n : Λ_σ + Λ_τ].
inline Integer transversal_multiplicity(const Cell& sigma, const Cell& tau) {
  const std::size_t n = sigma.ambient_dim();
  std::vector<IntVector> gens = sigma.direction_lattice().vectors();
  for (const auto& v : tau.direction_lattice().vectors()) gens.push_back(v);
  if (gens.size() != n) throw Error("transversal_multiplicity: dimensions are not complementary");
  return abs(determinant(IntMatrix::from_rows(gens, n)));
}

struct DisplacementReport {
  bool transversal = false;
  int attempts = 0;
  RatVector shift;
  Integer transversal_degree;  // Σ ω ω' [Z^n : Λ_σ + Λ_τ] over the meeting points
  Integer pipeline_degree;     // degree(C · D)
  bool agree = false;
};

/// Moves C by a random integer vector with coordinates in ±[10, 100] until it
/// meets D transversally (at most 5 tries) and compares the transversal count
/// with the degree of C · D.
inline DisplacementReport displacement_check(const Cycle& c, const Cycle& d, std::uint32_t seed = 1) {
  const std::size_t n = c.ambient_dim();
  if (c.dim() + d.dim() != static_cast<int>(n)) throw Error("displacement_check: dimensions are not complementary");
  DisplacementReport report;
  report.pipeline_degree = degree(stable_intersect(c, d));
  std::mt19937 rng(seed);
  std::uniform_int_distribution<long> magnitude(10, 100);
  std::bernoulli_distribution negative(0.5);
  Cycle cr = c.reduced(), dr = d.reduced();
  for (report.attempts = 1; report.attempts <= 5; ++report.attempts) {
    RatVector v;
    for (std::size_t i = 0; i < n; ++i) v.emplace_back(negative(rng) ? -magnitude(rng) : magnitude(rng));
    Cycle moved = translate(cr, v);
    bool transversal = true;
    Integer total = 0;
    for (std::size_t i = 0; i < moved.size() && transversal; ++i)
      for (std::size_t j = 0; j < dr.size() && transversal; ++j) {
        auto meet = intersect(moved.cell(i), dr.cell(j));
        if (!meet) continue;
        const RatVector& p = meet->interior_point();
        if (meet->dim() != 0 || !relative_interior_contains(moved.cell(i), p) ||
            !relative_interior_contains(dr.cell(j), p)) {
          transversal = false;
          break;
        }
        total += moved.weight(i) * dr.weight(j) * transversal_multiplicity(moved.cell(i), dr.cell(j));
      }
    if (!transversal) continue;
    report.transversal = true;
    report.shift = v;
    report.transversal_degree = total;
    report.agree = total == report.pipeline_degree &&
                   degree(stable_intersect(moved, dr)) == report.pipeline_degree;
    return report;
  }
  report.attempts = 5;
  return report;
}

}  // namespace tropint
