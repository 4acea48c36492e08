#pragma once

// Weighted polyhedral complexes in R^n and cycles (balanced complexes up to
// refinement). Complexes store maximal cells only; faces are derived.

#include "tropint/polyhedra.hpp"

#include <map>
#include <sstream>
#include <string>

namespace tropint {

class WeightedComplex {
 public:
  WeightedComplex() = default;
  WeightedComplex(std::size_t ambient_dim, int dim) : ambient_dim_(ambient_dim), dim_(dim) {}

  /// Cells are kept in canonical order. Duplicates and cells of the wrong
  /// dimension are kept; validate_complex reports them.
  WeightedComplex(std::size_t ambient_dim, int dim, std::vector<std::pair<Cell, Integer>> cells)
      : ambient_dim_(ambient_dim), dim_(dim) {
    for (const auto& [c, w] : cells)
      if (c.ambient_dim() != ambient_dim) throw Error("complex: cell has wrong ambient dimension");
    std::stable_sort(cells.begin(), cells.end(), [](const auto& a, const auto& b) { return a.first < b.first; });
    for (auto& [c, w] : cells) {
      cells_.push_back(std::move(c));
      weights_.push_back(std::move(w));
    }
  }

  std::size_t ambient_dim() const { return ambient_dim_; }
  int dim() const { return dim_; }
  std::size_t size() const { return cells_.size(); }
  bool empty() const { return cells_.empty(); }
  const std::vector<Cell>& cells() const { return cells_; }
  const std::vector<Integer>& weights() const { return weights_; }
  const Cell& cell(std::size_t i) const { return cells_[i]; }
  const Integer& weight(std::size_t i) const { return weights_[i]; }

  std::vector<std::pair<Cell, Integer>> entries() const {
    std::vector<std::pair<Cell, Integer>> out;
    for (std::size_t i = 0; i < cells_.size(); ++i) out.emplace_back(cells_[i], weights_[i]);
    return out;
  }

  /// Weight of a maximal cell, 0 if absent.
  Integer weight_of(const Cell& c) const {
    auto it = std::lower_bound(cells_.begin(), cells_.end(), c);
    if (it == cells_.end() || !(*it == c)) return 0;
    return weights_[static_cast<std::size_t>(it - cells_.begin())];
  }

  friend bool operator==(const WeightedComplex& a, const WeightedComplex& b) {
    return a.ambient_dim_ == b.ambient_dim_ && (a.dim_ == b.dim_ || (a.empty() && b.empty())) &&
           a.cells_ == b.cells_ && a.weights_ == b.weights_;
  }

 private:
  std::size_t ambient_dim_ = 0;
  int dim_ = 0;
  std::vector<Cell> cells_;
  std::vector<Integer> weights_;
};

struct ComplexDiagnostics {
  std::vector<std::string> violations;
  bool ok() const { return violations.empty(); }
};

/// Whether `sub` is a face of `cell`.
inline bool is_face(const Cell& cell, const Cell& sub) {
  if (!contains(cell, sub)) return false;
  ConstraintSystem s{cell.ambient_dim(), {}, cell.equalities()};
  for (const auto& f : cell.inequalities()) {
    if (vanishes_on(sub, f))
      s.equalities.push_back(f);
    else
      s.inequalities.push_back(f);
  }
  return canonicalize(s) == sub;
}

inline ComplexDiagnostics validate_complex(const WeightedComplex& c) {
  ComplexDiagnostics d;
  for (std::size_t i = 0; i < c.size(); ++i) {
    if (c.cell(i).ambient_dim() != c.ambient_dim()) d.violations.push_back("cell " + std::to_string(i) + ": wrong ambient dimension");
    if (static_cast<int>(c.cell(i).dim()) != c.dim()) d.violations.push_back("cell " + std::to_string(i) + ": not of pure dimension");
  }
  if (!d.ok()) return d;
  for (std::size_t i = 0; i < c.size(); ++i) {
    for (std::size_t j = i + 1; j < c.size(); ++j) {
      const std::string pair = "cells " + std::to_string(i) + " and " + std::to_string(j);
      if (c.cell(i) == c.cell(j)) {
        d.violations.push_back(pair + ": duplicate cell");
        continue;
      }
      auto inter = intersect(c.cell(i), c.cell(j));
      if (!inter) continue;
      if (!is_face(c.cell(i), *inter) || !is_face(c.cell(j), *inter))
        d.violations.push_back(pair + ": intersection is not a common face");
    }
  }
  return d;
}

struct NormalVector {
  Cell facet;
  Cell ridge;
  IntVector representative;
};

/// The primitive normal vector of `facet` relative to its codim-1 face
/// `ridge`, pointing into the facet.
inline NormalVector normal_vector(const Cell& facet, const Cell& ridge) {
  if (ridge.dim() + 1 != facet.dim() || !is_face(facet, ridge))
    throw Error("normal_vector: ridge is not a codimension one face of the facet");
  IntVector u = quotient_generator(ridge.direction_lattice(), facet.direction_lattice());
  for (const auto& f : facet.inequalities()) {
    if (f(ridge.interior_point()) != 0) continue;
    if (f.on_direction(u) < 0) u = negated(u);
    return {facet, ridge, std::move(u)};
  }
  throw Error("normal_vector: no facet inequality vanishes on the ridge");
}

/// A codim-1 cell with its adjacent maximal cells.
struct Ridge {
  Cell cell;
  struct Adjacent {
    std::size_t facet;  // index into the complex
    IntVector normal;
  };
  std::vector<Adjacent> adjacent;
};

/// All codim-1 faces of the maximal cells, grouped. Sorted by cell.
inline std::vector<Ridge> ridges(const WeightedComplex& c) {
  std::map<Cell, std::vector<Ridge::Adjacent>> groups;
  for (std::size_t i = 0; i < c.size(); ++i) {
    const Cell& sigma = c.cell(i);
    for (const auto& tau : faces_of_codim_one(sigma)) {
      IntVector u = quotient_generator(tau.direction_lattice(), sigma.direction_lattice());
      // The facet inequality tight on tau is positive on the normal.
      for (const auto& f : sigma.inequalities()) {
        if (f(tau.interior_point()) != 0) continue;
        if (f.on_direction(u) < 0) u = negated(u);
        break;
      }
      groups[tau].push_back({i, std::move(u)});
    }
  }
  std::vector<Ridge> out;
  for (auto& [tau, adj] : groups) out.push_back({tau, std::move(adj)});
  return out;
}

inline WeightedComplex nonzero_part(const WeightedComplex& c) {
  std::vector<std::pair<Cell, Integer>> kept;
  for (std::size_t i = 0; i < c.size(); ++i)
    if (c.weight(i) != 0) kept.emplace_back(c.cell(i), c.weight(i));
  return WeightedComplex(c.ambient_dim(), c.dim(), std::move(kept));
}

struct BalancingReport {
  bool balanced = true;
  std::optional<Cell> witness;  // first unbalanced ridge
  IntVector defect;             // Σ ω v at the witness
};

inline BalancingReport balancing_report(const WeightedComplex& c) {
  WeightedComplex nz = nonzero_part(c);
  for (const auto& r : ridges(nz)) {
    IntVector s(nz.ambient_dim(), 0);
    for (const auto& a : r.adjacent) s = add(s, scaled(a.normal, nz.weight(a.facet)));
    for (const auto& e : r.cell.equalities()) {
      if (e.on_direction(s) != 0) return {false, r.cell, s};
    }
  }
  return {};
}

inline bool is_balanced(const WeightedComplex& c) { return balancing_report(c).balanced; }

/// A balanced weighted complex, considered up to refinement.
class Cycle {
 public:
  Cycle() = default;

  /// Verifies pure dimension and balancing.
  explicit Cycle(WeightedComplex c) : complex_(std::move(c)) {
    for (const auto& cell : complex_.cells())
      if (static_cast<int>(cell.dim()) != complex_.dim()) throw Error("complex is not of pure dimension");
    auto report = balancing_report(complex_);
    if (!report.balanced) throw Error("complex is not balanced");
  }

  /// Wraps a complex known to be balanced by construction.
  static Cycle trusted(WeightedComplex c) {
    Cycle out;
    out.complex_ = std::move(c);
    return out;
  }

  static Cycle empty_cycle(std::size_t ambient_dim, int dim) { return trusted(WeightedComplex(ambient_dim, dim)); }

  const WeightedComplex& complex() const { return complex_; }
  std::size_t ambient_dim() const { return complex_.ambient_dim(); }
  int dim() const { return complex_.dim(); }
  std::size_t size() const { return complex_.size(); }
  bool empty() const { return complex_.empty(); }
  const std::vector<Cell>& cells() const { return complex_.cells(); }
  const std::vector<Integer>& weights() const { return complex_.weights(); }
  const Cell& cell(std::size_t i) const { return complex_.cell(i); }
  const Integer& weight(std::size_t i) const { return complex_.weight(i); }
  Integer weight_of(const Cell& c) const { return complex_.weight_of(c); }

  bool is_reduced() const {
    return std::none_of(weights().begin(), weights().end(), [](const Integer& w) { return w == 0; });
  }
  Cycle reduced() const { return trusted(nonzero_part(complex_)); }

 private:
  WeightedComplex complex_;
};

inline bool is_balanced(const Cycle& c) { return is_balanced(c.complex()); }

/// The forms defining every cell of the complexes.
inline HalfspaceArrangement defining_arrangement(std::initializer_list<const WeightedComplex*> complexes) {
  HalfspaceArrangement arr;
  for (const auto* c : complexes)
    for (const auto& cell : c->cells()) arr.add_cell(cell);
  return arr.normalized();
}

/// Refines the complex along the arrangement; weights are inherited.
inline WeightedComplex refine(const WeightedComplex& c, const HalfspaceArrangement& arr) {
  HalfspaceArrangement norm = arr.normalized();
  std::vector<std::pair<Cell, Integer>> out;
  for (std::size_t i = 0; i < c.size(); ++i)
    for (auto& piece : refine_cell(c.cell(i), norm)) out.emplace_back(std::move(piece), c.weight(i));
  return WeightedComplex(c.ambient_dim(), c.dim(), std::move(out));
}

inline Cycle refine(const Cycle& c, const HalfspaceArrangement& arr) { return Cycle::trusted(refine(c.complex(), arr)); }

inline std::pair<WeightedComplex, WeightedComplex> common_refinement(const WeightedComplex& a,
                                                                     const WeightedComplex& b) {
  if (a.ambient_dim() != b.ambient_dim()) throw Error("common_refinement: ambient dimension mismatch");
  HalfspaceArrangement arr = defining_arrangement({&a, &b});
  return {refine(a, arr), refine(b, arr)};
}

inline Cycle add(const Cycle& a, const Cycle& b) {
  if (a.ambient_dim() != b.ambient_dim()) throw Error("add: ambient dimension mismatch");
  if (a.empty()) return b.reduced();
  if (b.empty()) return a.reduced();
  if (a.dim() != b.dim()) throw Error("add: dimension mismatch");
  auto [ra, rb] = common_refinement(a.complex(), b.complex());
  std::map<Cell, Integer> sum;
  for (const auto* c : {&ra, &rb})
    for (std::size_t i = 0; i < c->size(); ++i) sum[c->cell(i)] += c->weight(i);
  std::vector<std::pair<Cell, Integer>> cells;
  for (auto& [cell, w] : sum)
    if (w != 0) cells.emplace_back(cell, w);
  return Cycle::trusted(WeightedComplex(a.ambient_dim(), a.dim(), std::move(cells)));
}

inline Cycle scale(const Cycle& a, const Integer& m) {
  if (m == 0) return Cycle::empty_cycle(a.ambient_dim(), a.dim());
  auto cells = a.complex().entries();
  for (auto& [c, w] : cells) w *= m;
  return Cycle::trusted(WeightedComplex(a.ambient_dim(), a.dim(), std::move(cells)));
}

inline Cycle negate(const Cycle& a) { return scale(a, -1); }

inline bool cycles_equal(const Cycle& a, const Cycle& b) {
  if (a.ambient_dim() != b.ambient_dim()) return false;
  if (!a.empty() && !b.empty() && a.dim() != b.dim()) return false;
  return add(a, negate(b)).empty();
}

inline Cycle cartesian_product(const Cycle& a, const Cycle& b) {
  const std::size_t n = a.ambient_dim() + b.ambient_dim();
  if (a.empty() || b.empty()) return Cycle::empty_cycle(n, a.dim() + b.dim());
  std::vector<std::pair<Cell, Integer>> cells;
  for (std::size_t i = 0; i < a.size(); ++i)
    for (std::size_t j = 0; j < b.size(); ++j)
      cells.emplace_back(cell_product(a.cell(i), b.cell(j)), a.weight(i) * b.weight(j));
  return Cycle::trusted(WeightedComplex(n, a.dim() + b.dim(), std::move(cells)));
}

inline Cycle translate(const Cycle& a, const RatVector& v) {
  auto cells = a.complex().entries();
  for (auto& [c, w] : cells) c = translate(c, v);
  return Cycle::trusted(WeightedComplex(a.ambient_dim(), a.dim(), std::move(cells)));
}

/// -e_i for i in 1..n and -e_0 = (1, ..., 1).
inline IntVector skeleton_ray(std::size_t n, std::size_t i) {
  if (i == 0) return IntVector(n, 1);
  IntVector v(n, 0);
  v[i - 1] = -1;
  return v;
}

/// The cone of L^n_k spanned by -e_i, i in I.
inline Cell skeleton_cone(std::size_t n, const std::vector<std::size_t>& I) {
  std::vector<IntVector> rays;
  for (auto i : I) rays.push_back(skeleton_ray(n, i));
  return cone_from_rays(n, rays);
}

/// All k-subsets of {0..n}, in lexicographic order.
inline std::vector<std::vector<std::size_t>> index_subsets(std::size_t n, std::size_t k) {
  std::vector<std::vector<std::size_t>> out;
  std::vector<std::size_t> cur;
  auto rec = [&](auto&& self, std::size_t start) -> void {
    if (cur.size() == k) {
      out.push_back(cur);
      return;
    }
    for (std::size_t i = start; i <= n; ++i) {
      cur.push_back(i);
      self(self, i + 1);
      cur.pop_back();
    }
  };
  rec(rec, 0);
  return out;
}

/// L^n_k: cones σ_I with |I| = k, I ≠ {0..n}, weight 1.
inline Cycle standard_skeleton(std::size_t n, std::size_t k) {
  if (k > n) throw Error("standard_skeleton: k exceeds n");
  std::vector<std::pair<Cell, Integer>> cells;
  for (const auto& I : index_subsets(n, k)) cells.emplace_back(skeleton_cone(n, I), 1);
  return Cycle::trusted(WeightedComplex(n, static_cast<int>(k), std::move(cells)));
}

/// [R^n] with weight 1.
inline Cycle whole_space_cycle(std::size_t n) {
  return Cycle::trusted(WeightedComplex(n, static_cast<int>(n), {{whole_space(n), 1}}));
}

inline Cycle point_cycle(const RatVector& p, const Integer& weight = 1) {
  return Cycle::trusted(WeightedComplex(p.size(), 0, {{point_cell(p), weight}}));
}

/// The fan of cones R_{>=0}(σ - p) over maximal cells σ ⊇ τ, with p a
/// relative-interior point of τ.
inline WeightedComplex star_fan(const WeightedComplex& c, const Cell& tau) {
  const RatVector& p = tau.interior_point();
  std::vector<std::pair<Cell, Integer>> cones;
  for (std::size_t i = 0; i < c.size(); ++i) {
    const Cell& sigma = c.cell(i);
    if (!contains(sigma, tau)) continue;
    ConstraintSystem s{c.ambient_dim(), {}, {}};
    for (const auto& e : sigma.equalities()) s.equalities.push_back({e.linear, 0});
    for (const auto& f : sigma.inequalities())
      if (f(p) == 0) s.inequalities.push_back({f.linear, 0});
    cones.emplace_back(canonicalize(s), c.weight(i));
  }
  return WeightedComplex(c.ambient_dim(), c.dim(), std::move(cones));
}

inline std::string describe(const Cell& c) {
  std::ostringstream os;
  os << "{";
  bool first = true;
  auto put = [&](const AffineForm& f, const char* rel) {
    if (!first) os << ", ";
    first = false;
    for (std::size_t i = 0; i < f.linear.size(); ++i) os << (i ? " " : "") << f.linear[i];
    os << " | " << rel << " " << to_string(Rational(-f.constant));
  };
  for (const auto& e : c.equalities()) put(e, "=");
  for (const auto& f : c.inequalities()) put(f, ">=");
  os << "}";
  return os.str();
}

}  // namespace tropint
