#pragma once

// Rational functions on cycles and their Weil divisors. Tropical
// polynomials use the max convention.

#include "tropint/cycles.hpp"

#include <variant>

namespace tropint {

struct TropicalPolynomial {
  std::size_t ambient_dim = 0;
  std::vector<AffineForm> terms;

  TropicalPolynomial() = default;
  TropicalPolynomial(std::size_t n, std::vector<AffineForm> ts) : ambient_dim(n), terms(std::move(ts)) {
    if (terms.empty()) throw Error("tropical polynomial needs at least one term");
    for (const auto& t : terms)
      if (t.linear.size() != n) throw Error("tropical polynomial term has wrong dimension");
    std::sort(terms.begin(), terms.end());
    terms.erase(std::unique(terms.begin(), terms.end()), terms.end());
  }

  Rational operator()(const RatVector& x) const {
    Rational best = terms.front()(x);
    for (const auto& t : terms) {
      Rational v = t(x);
      if (v > best) best = v;
    }
    return best;
  }

  bool is_affine() const { return terms.size() == 1; }
};

/// Affine data on a family of cells. Forms must agree where cells meet.
struct PiecewiseAffine {
  std::size_t ambient_dim = 0;
  std::vector<Cell> cells;
  std::vector<AffineForm> forms;
};

class PLFunction {
 public:
  PLFunction() = default;
  PLFunction(TropicalPolynomial p) : rep_(std::move(p)) {}
  PLFunction(PiecewiseAffine p) : rep_(std::move(p)) {
    const auto& pw = std::get<PiecewiseAffine>(rep_);
    if (pw.cells.size() != pw.forms.size()) throw Error("piecewise function: cell/form count mismatch");
    if (pw.cells.empty()) throw Error("piecewise function: empty domain");
    for (std::size_t i = 0; i < pw.cells.size(); ++i)
      if (pw.cells[i].ambient_dim() != pw.ambient_dim || pw.forms[i].linear.size() != pw.ambient_dim)
        throw Error("piecewise function: dimension mismatch");
  }

  static PLFunction affine(AffineForm f) {
    std::size_t n = f.linear.size();
    return TropicalPolynomial(n, {std::move(f)});
  }

  std::size_t ambient_dim() const {
    return is_polynomial() ? polynomial().ambient_dim : piecewise().ambient_dim;
  }
  bool is_polynomial() const { return std::holds_alternative<TropicalPolynomial>(rep_); }
  const TropicalPolynomial& polynomial() const { return std::get<TropicalPolynomial>(rep_); }
  const PiecewiseAffine& piecewise() const { return std::get<PiecewiseAffine>(rep_); }
  bool is_affine() const { return is_polynomial() && polynomial().is_affine(); }

  Rational operator()(const RatVector& x) const {
    if (is_polynomial()) return polynomial()(x);
    const auto& pw = piecewise();
    for (std::size_t i = 0; i < pw.cells.size(); ++i)
      if (contains_point(pw.cells[i], x)) return pw.forms[i](x);
    throw Error("function undefined at point");
  }

 private:
  std::variant<TropicalPolynomial, PiecewiseAffine> rep_;
};

/// A rational function modulo globally affine functions.
struct CartierDivisor {
  PLFunction representative;
};

/// Checks that a piecewise function agrees on overlaps.
inline bool is_continuous(const PiecewiseAffine& f) {
  for (std::size_t i = 0; i < f.cells.size(); ++i)
    for (std::size_t j = i + 1; j < f.cells.size(); ++j) {
      auto inter = intersect(f.cells[i], f.cells[j]);
      if (inter && !vanishes_on(*inter, f.forms[i] - f.forms[j])) return false;
    }
  return true;
}

/// The regions of R^n on which a single term attains the maximum.
inline PiecewiseAffine to_piecewise(const TropicalPolynomial& p) {
  PiecewiseAffine out{p.ambient_dim, {}, {}};
  for (std::size_t i = 0; i < p.terms.size(); ++i) {
    std::vector<AffineForm> ineqs;
    for (std::size_t j = 0; j < p.terms.size(); ++j)
      if (j != i) ineqs.push_back(p.terms[i] - p.terms[j]);
    auto region = try_canonicalize({p.ambient_dim, ineqs, {}});
    if (region && region->dim() == p.ambient_dim) {
      out.cells.push_back(*region);
      out.forms.push_back(p.terms[i]);
    }
  }
  return out;
}

inline PiecewiseAffine to_piecewise(const PLFunction& f) {
  return f.is_polynomial() ? to_piecewise(f.polynomial()) : f.piecewise();
}

inline PLFunction operator-(const PLFunction& f) {
  if (f.is_affine()) return PLFunction::affine(-f.polynomial().terms.front());
  PiecewiseAffine pw = to_piecewise(f);
  for (auto& form : pw.forms) form = -form;
  return pw;
}

inline PLFunction operator+(const PLFunction& a, const PLFunction& b) {
  if (a.ambient_dim() != b.ambient_dim()) throw Error("function sum: dimension mismatch");
  if (a.is_polynomial() && b.is_affine()) {
    std::vector<AffineForm> terms;
    for (const auto& t : a.polynomial().terms) terms.push_back(t + b.polynomial().terms.front());
    return TropicalPolynomial(a.ambient_dim(), std::move(terms));
  }
  if (b.is_polynomial() && a.is_affine()) return b + a;
  PiecewiseAffine pa = to_piecewise(a), pb = to_piecewise(b);
  PiecewiseAffine out{a.ambient_dim(), {}, {}};
  for (std::size_t i = 0; i < pa.cells.size(); ++i)
    for (std::size_t j = 0; j < pb.cells.size(); ++j) {
      auto inter = intersect(pa.cells[i], pb.cells[j]);
      if (!inter || inter->dim() != std::min(pa.cells[i].dim(), pb.cells[j].dim())) continue;
      out.cells.push_back(*inter);
      out.forms.push_back(pa.forms[i] + pb.forms[j]);
    }
  if (out.cells.empty()) throw Error("function sum: domains do not overlap");
  return out;
}

inline PLFunction operator-(const PLFunction& a, const PLFunction& b) { return a + (-b); }

inline PLFunction operator*(const Integer& m, const PLFunction& f) {
  if (f.is_polynomial() && m > 0) {
    std::vector<AffineForm> terms;
    for (const auto& t : f.polynomial().terms) terms.push_back({scaled(t.linear, m), t.constant * m});
    return TropicalPolynomial(f.ambient_dim(), std::move(terms));
  }
  PiecewiseAffine pw = to_piecewise(f);
  for (auto& form : pw.forms) form = {scaled(form.linear, m), form.constant * m};
  return pw;
}

/// A refinement of a complex on whose cells the function is affine.
struct Linearization {
  WeightedComplex complex;
  std::vector<AffineForm> forms;  // forms[i] is the function on complex.cell(i)
};

namespace detail {
inline Linearization assemble(std::size_t n, int dim, std::vector<std::tuple<Cell, Integer, AffineForm>> pieces) {
  std::sort(pieces.begin(), pieces.end(),
            [](const auto& a, const auto& b) { return std::get<0>(a) < std::get<0>(b); });
  std::vector<std::pair<Cell, Integer>> cells;
  std::vector<AffineForm> forms;
  for (auto& [c, w, f] : pieces) {
    cells.emplace_back(std::move(c), std::move(w));
    forms.push_back(std::move(f));
  }
  return {WeightedComplex(n, dim, std::move(cells)), std::move(forms)};
}
}  // namespace detail

inline Linearization linearize_on(const PLFunction& phi, const WeightedComplex& c) {
  if (phi.ambient_dim() != c.ambient_dim()) throw Error("linearize_on: dimension mismatch");
  std::vector<std::tuple<Cell, Integer, AffineForm>> pieces;
  if (phi.is_polynomial()) {
    const auto& terms = phi.polynomial().terms;
    for (std::size_t s = 0; s < c.size(); ++s) {
      const Cell& sigma = c.cell(s);
      if (terms.size() == 1) {
        pieces.emplace_back(sigma, c.weight(s), terms.front());
        continue;
      }
      // Max regions of the terms, restricted to sigma. Terms tied on a
      // region produce the same piece once.
      std::vector<Cell> seen;
      for (std::size_t i = 0; i < terms.size(); ++i) {
        std::vector<AffineForm> ineqs;
        bool possible = true;
        for (std::size_t j = 0; j < terms.size(); ++j) {
          if (j == i) continue;
          AffineForm g = terms[i] - terms[j];
          if (!sigma.is_constant_on(g))
            ineqs.push_back(std::move(g));
          else if (g(sigma.interior_point()) < 0)
            possible = false;
        }
        if (!possible) continue;
        auto piece = intersect_with(sigma, ineqs);
        if (!piece || piece->dim() != sigma.dim()) continue;
        if (std::find(seen.begin(), seen.end(), *piece) != seen.end()) continue;
        seen.push_back(*piece);
        pieces.emplace_back(*piece, c.weight(s), terms[i]);
        if (*piece == sigma) break;
      }
    }
    return detail::assemble(c.ambient_dim(), c.dim(), std::move(pieces));
  }

  const auto& pw = phi.piecewise();
  HalfspaceArrangement arr;
  for (const auto& d : pw.cells) arr.add_cell(d);
  WeightedComplex refined = refine(c, arr);
  for (std::size_t s = 0; s < refined.size(); ++s) {
    const Cell& piece = refined.cell(s);
    bool found = false;
    for (std::size_t i = 0; i < pw.cells.size() && !found; ++i) {
      if (!contains_point(pw.cells[i], piece.interior_point())) continue;
      pieces.emplace_back(piece, refined.weight(s), pw.forms[i]);
      found = true;
    }
    if (!found) throw Error("function undefined on support");
  }
  return detail::assemble(c.ambient_dim(), c.dim(), std::move(pieces));
}

inline Linearization linearize_on(const PLFunction& phi, const Cycle& c) { return linearize_on(phi, c.complex()); }

/// Codim-1 cells of a linearization with the divisor weight of each, zero
/// weights included.
inline WeightedComplex weil_divisor_weights(const PLFunction& phi, const Cycle& c) {
  const int k = c.dim() - 1;
  if (c.empty()) return WeightedComplex(c.ambient_dim(), k);
  if (c.dim() <= 0) throw Error("weil_divisor: cycle has dimension 0");
  Linearization lin = linearize_on(phi, c.reduced());
  std::vector<std::pair<Cell, Integer>> out;
  for (const auto& r : ridges(lin.complex)) {
    IntVector s(c.ambient_dim(), 0);
    Rational total = 0;
    for (const auto& a : r.adjacent) {
      IntVector wv = scaled(a.normal, lin.complex.weight(a.facet));
      total += lin.forms[a.facet].on_direction(wv);
      s = add(s, wv);
    }
    // s lies in V_tau, where every adjacent form restricts to φ_tau.
    total -= lin.forms[r.adjacent.front().facet].on_direction(s);
    if (!is_integer(total)) throw Error("weil_divisor: non-integral weight");
    out.emplace_back(r.cell, total.get_num());
  }
  return WeightedComplex(c.ambient_dim(), k, std::move(out));
}

inline Cycle weil_divisor(const PLFunction& phi, const Cycle& c) {
  return Cycle::trusted(nonzero_part(weil_divisor_weights(phi, c)));
}

inline Cycle weil_divisor(const CartierDivisor& phi, const Cycle& c) { return weil_divisor(phi.representative, c); }

/// φ_1 ⋯ φ_r · C, applying φ_r first.
inline Cycle divisor_chain(const std::vector<PLFunction>& phis, const Cycle& c) {
  if (static_cast<int>(phis.size()) > c.dim()) throw Error("divisor_chain: more functions than the cycle dimension");
  Cycle cur = c;
  for (auto it = phis.rbegin(); it != phis.rend(); ++it) cur = weil_divisor(*it, cur);
  return cur;
}

/// The balanced graph of φ over C in R^{n+1}, with downward walls over the
/// codim-1 cells weighted by the divisor.
inline Cycle graph_fan(const PLFunction& phi, const Cycle& c) {
  const std::size_t n = c.ambient_dim();
  if (c.empty()) return Cycle::empty_cycle(n + 1, c.dim());
  Linearization lin = linearize_on(phi, c.reduced());
  auto lift = [&](const AffineForm& f) { return detail::pad_form(f, 0, 1); };
  auto graph_equation = [&](const AffineForm& f) {
    // z - λx - c = 0
    AffineForm g{negated(f.linear), -f.constant};
    g.linear.push_back(1);
    return g;
  };
  std::vector<std::pair<Cell, Integer>> cells;
  for (std::size_t i = 0; i < lin.complex.size(); ++i) {
    const Cell& sigma = lin.complex.cell(i);
    ConstraintSystem s{n + 1, {}, {}};
    for (const auto& f : sigma.inequalities()) s.inequalities.push_back(lift(f));
    for (const auto& f : sigma.equalities()) s.equalities.push_back(lift(f));
    s.equalities.push_back(graph_equation(lin.forms[i]));
    cells.emplace_back(canonicalize(s), lin.complex.weight(i));
  }
  // Walls: the graph over tau extended in direction (0, -1).
  WeightedComplex weights = weil_divisor_weights(phi, c);
  for (std::size_t t = 0; t < weights.size(); ++t) {
    if (weights.weight(t) == 0) continue;
    const Cell& tau = weights.cell(t);
    AffineForm phi_tau;
    bool found = false;
    for (std::size_t i = 0; i < lin.complex.size() && !found; ++i) {
      if (contains(lin.complex.cell(i), tau)) {
        phi_tau = lin.forms[i];
        found = true;
      }
    }
    if (!found) throw Error("graph_fan: ridge without adjacent cell");
    ConstraintSystem s{n + 1, {}, {}};
    for (const auto& f : tau.inequalities()) s.inequalities.push_back(lift(f));
    for (const auto& f : tau.equalities()) s.equalities.push_back(lift(f));
    s.inequalities.push_back(-graph_equation(phi_tau));  // λx + c - z >= 0
    cells.emplace_back(canonicalize(s), weights.weight(t));
  }
  return Cycle::trusted(WeightedComplex(n + 1, c.dim(), std::move(cells)));
}

/// Whether φ is bounded on |C|: on every cell of a linearization its linear
/// part vanishes on the recession cone.
inline bool is_bounded_on(const PLFunction& phi, const Cycle& c) {
  Linearization lin = linearize_on(phi, c);
  for (std::size_t i = 0; i < lin.complex.size(); ++i) {
    Cell rc = recession_cone(lin.complex.cell(i));
    if (!rc.is_constant_on({lin.forms[i].linear, 0})) return false;
  }
  return true;
}

/// Whether a - b agrees on |C| with a single affine function.
inline bool divisors_equal(const PLFunction& a, const PLFunction& b, const Cycle& c) {
  if (c.empty()) return true;
  Linearization lin = linearize_on(a - b, c);
  const std::size_t n = c.ambient_dim();
  // Unknowns (g_1..g_n, g_0): g·x + g_0 = d_σ on each cell σ.
  std::vector<RatVector> rows;
  for (std::size_t i = 0; i < lin.complex.size(); ++i) {
    const Cell& sigma = lin.complex.cell(i);
    const AffineForm& d = lin.forms[i];
    RatVector at = sigma.interior_point();
    at.push_back(1);
    at.push_back(d(sigma.interior_point()));
    rows.push_back(std::move(at));
    for (const auto& dir : sigma.direction_basis()) {
      RatVector row = dir;
      row.push_back(0);
      row.push_back(d.on_direction(dir));
      rows.push_back(std::move(row));
    }
  }
  RowEchelon e = reduced_row_echelon(std::move(rows), n + 2);
  return e.pivots.empty() || e.pivots.back() != n + 1;
}

inline bool divisors_equal(const CartierDivisor& a, const CartierDivisor& b, const Cycle& c) {
  return divisors_equal(a.representative, b.representative, c);
}

/// The integer linear form on span(rays) taking the given values on the
/// rays; the rays must be a basis of their saturated lattice.
inline AffineForm linear_form_with_values(std::size_t n, const std::vector<IntVector>& rays, const IntVector& values) {
  LatticeBasis basis(n, rays);
  if (!(subspace_lattice(basis.rational_vectors(), n) == basis))
    throw Error("linear_form_with_values: rays do not form a lattice basis");
  return {integral_functional_with_values(basis, values), 0};
}

/// max{x_1, ..., x_n, 0}.
inline TropicalPolynomial hyperplane_function(std::size_t n) {
  std::vector<AffineForm> terms{constant_form(n, 0)};
  for (std::size_t i = 0; i < n; ++i) terms.push_back(coordinate_form(n, i));
  return TropicalPolynomial(n, std::move(terms));
}

}  // namespace tropint
