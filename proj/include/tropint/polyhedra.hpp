#pragma once

// Rational polyhedra in H-representation.
//
// A Cell is always canonical: equalities are the primitive-integer rows of
// the reduced echelon form of the affine hull, inequalities are reduced
// modulo the equalities, primitive, irredundant and sorted. Two cells with
// the same point set therefore have identical constraint systems, and cell
// equality and ordering are structural.

#include "tropint/lattice.hpp"
#include "tropint/lp.hpp"

#include <map>
#include <memory>
#include <mutex>
#include <optional>

namespace tropint {

/// x ↦ linear · x + constant with an integral linear part.
struct AffineForm {
  IntVector linear;
  Rational constant = 0;

  Rational operator()(const RatVector& x) const { return dot(linear, x) + constant; }
  Integer on_direction(const IntVector& v) const { return dot(linear, v); }
  Rational on_direction(const RatVector& v) const { return dot(linear, v); }

  AffineForm operator-() const { return {negated(linear), -constant}; }
  friend AffineForm operator+(const AffineForm& a, const AffineForm& b) {
    return {add(a.linear, b.linear), a.constant + b.constant};
  }
  friend AffineForm operator-(const AffineForm& a, const AffineForm& b) { return a + (-b); }

  bool is_constant() const { return is_zero(linear); }

  friend std::strong_ordering operator<=>(const AffineForm& a, const AffineForm& b) {
    auto c = compare(a.linear, b.linear);
    if (c != 0) return c;
    return compare(a.constant, b.constant);
  }
  friend bool operator==(const AffineForm& a, const AffineForm& b) {
    return a.linear == b.linear && a.constant == b.constant;
  }
};

inline AffineForm constant_form(std::size_t n, const Rational& c) { return {IntVector(n, 0), c}; }

inline AffineForm coordinate_form(std::size_t n, std::size_t i) {
  AffineForm f{IntVector(n, 0), 0};
  f.linear[i] = 1;
  return f;
}

/// Scales a rational affine function by a positive factor so that its linear
/// part becomes a primitive integer vector. Constant forms are returned as is.
inline AffineForm primitive_form(const RatVector& linear, const Rational& constant) {
  if (is_zero(linear)) return {IntVector(linear.size(), 0), constant};
  Rational factor;
  IntVector lin = primitive_integer_multiple(linear, &factor);
  return {std::move(lin), constant * factor};
}

inline AffineForm primitive_form(const AffineForm& f) { return primitive_form(to_rational(f.linear), f.constant); }

/// The hyperplane form with primitive linear part whose first nonzero
/// coefficient is positive; f and -f describe the same hyperplane.
inline AffineForm hyperplane_form(const AffineForm& f) {
  AffineForm g = primitive_form(f);
  for (const auto& x : g.linear) {
    if (x == 0) continue;
    if (x < 0) g = -g;
    break;
  }
  return g;
}

inline std::vector<LinearConstraint> to_constraints(const std::vector<AffineForm>& ineqs,
                                                    const std::vector<AffineForm>& eqs) {
  std::vector<LinearConstraint> out;
  out.reserve(ineqs.size() + eqs.size());
  for (const auto& f : eqs) out.push_back({to_rational(f.linear), f.constant, true});
  for (const auto& f : ineqs) out.push_back({to_rational(f.linear), f.constant, false});
  return out;
}

/// Raw input for canonicalization: inequalities mean form(x) >= 0,
/// equalities form(x) = 0.
struct ConstraintSystem {
  std::size_t ambient_dim = 0;
  std::vector<AffineForm> inequalities;
  std::vector<AffineForm> equalities;
};

class Cell;
std::optional<Cell> try_canonicalize(const ConstraintSystem& system);

class Cell {
 public:
  Cell() = default;

  std::size_t ambient_dim() const { return data_->ambient_dim; }
  std::size_t dim() const { return data_->ambient_dim - data_->equalities.size(); }
  const std::vector<AffineForm>& inequalities() const { return data_->inequalities; }
  const std::vector<AffineForm>& equalities() const { return data_->equalities; }
  const RatVector& interior_point() const { return data_->interior; }

  ConstraintSystem system() const { return {ambient_dim(), inequalities(), equalities()}; }

  /// Rational basis of the linear space parallel to the affine hull.
  const std::vector<RatVector>& direction_basis() const {
    std::call_once(data_->direction_once, [this] {
      std::vector<RatVector> rows;
      for (const auto& e : data_->equalities) rows.push_back(to_rational(e.linear));
      data_->direction = nullspace(rows, data_->ambient_dim);
    });
    return data_->direction;
  }

  /// The saturated lattice of the affine hull's direction space.
  const LatticeBasis& direction_lattice() const {
    std::call_once(data_->lattice_once,
                   [this] { data_->lattice = subspace_lattice(direction_basis(), data_->ambient_dim); });
    return data_->lattice;
  }

  std::vector<LinearConstraint> constraints() const { return to_constraints(inequalities(), equalities()); }

  /// Whether the linear part of f vanishes on the direction space.
  bool is_constant_on(const AffineForm& f) const {
    for (const auto& d : direction_basis())
      if (f.on_direction(d) != 0) return false;
    return true;
  }

  bool is_bounded() const {
    // Bounded iff the recession cone is {0}; checked through LPs per direction.
    for (const auto& d : direction_basis()) {
      for (int sign : {1, -1}) {
        RatVector obj = scaled(d, Rational(sign));
        if (maximize(obj, constraints(), ambient_dim()).status == LpStatus::unbounded) return false;
      }
    }
    return true;
  }

  friend std::strong_ordering operator<=>(const Cell& a, const Cell& b) {
    if (a.data_ == b.data_) return std::strong_ordering::equal;
    if (a.ambient_dim() != b.ambient_dim()) return a.ambient_dim() <=> b.ambient_dim();
    if (a.dim() != b.dim()) return a.dim() <=> b.dim();
    auto lex = [](const std::vector<AffineForm>& x, const std::vector<AffineForm>& y) {
      if (x.size() != y.size()) return x.size() <=> y.size();
      for (std::size_t i = 0; i < x.size(); ++i) {
        auto c = x[i] <=> y[i];
        if (c != 0) return c;
      }
      return std::strong_ordering::equal;
    };
    auto c = lex(a.equalities(), b.equalities());
    if (c != 0) return c;
    return lex(a.inequalities(), b.inequalities());
  }
  friend bool operator==(const Cell& a, const Cell& b) { return (a <=> b) == 0; }

 private:
  struct Data {
    std::size_t ambient_dim = 0;
    std::vector<AffineForm> inequalities;
    std::vector<AffineForm> equalities;
    RatVector interior;
    mutable std::once_flag direction_once;
    mutable std::vector<RatVector> direction;
    mutable std::once_flag lattice_once;
    mutable LatticeBasis lattice;
  };

  Cell(std::size_t n, std::vector<AffineForm> ineqs, std::vector<AffineForm> eqs, RatVector interior)
  {
    auto d = std::make_shared<Data>();
    d->ambient_dim = n;
    d->inequalities = std::move(ineqs);
    d->equalities = std::move(eqs);
    d->interior = std::move(interior);
    data_ = std::move(d);
  }

  std::shared_ptr<const Data> data_;

  friend std::optional<Cell> try_canonicalize(const ConstraintSystem& system);
  friend Cell translate(const Cell& cell, const RatVector& v);
  friend Cell cell_product(const Cell& a, const Cell& b);
};

namespace detail {

struct EqualityReduction {
  std::vector<AffineForm> equalities;  // canonical primitive rows
  RowEchelon echelon;                  // rational RREF of [linear | constant]
  bool consistent = true;
};

inline EqualityReduction reduce_equalities(std::size_t n, const std::vector<AffineForm>& eqs) {
  std::vector<RatVector> rows;
  for (const auto& e : eqs) {
    RatVector row = to_rational(e.linear);
    row.push_back(e.constant);
    rows.push_back(std::move(row));
  }
  EqualityReduction out;
  out.echelon = reduced_row_echelon(std::move(rows), n + 1);
  if (!out.echelon.pivots.empty() && out.echelon.pivots.back() == n) {
    out.consistent = false;
    return out;
  }
  for (const auto& row : out.echelon.rows) {
    RatVector lin(row.begin(), row.begin() + static_cast<std::ptrdiff_t>(n));
    out.equalities.push_back(primitive_form(lin, row[n]));
  }
  return out;
}

/// Reduces f modulo the equality echelon form and makes it primitive.
inline AffineForm reduce_form(std::size_t n, const AffineForm& f, const RowEchelon& echelon) {
  RatVector row = to_rational(f.linear);
  row.push_back(f.constant);
  for (std::size_t r = 0; r < echelon.rows.size(); ++r) {
    const Rational coef = row[echelon.pivots[r]];
    if (coef == 0) continue;
    for (std::size_t j = 0; j <= n; ++j)
      if (echelon.rows[r][j] != 0) row[j] -= coef * echelon.rows[r][j];
  }
  RatVector lin(row.begin(), row.begin() + static_cast<std::ptrdiff_t>(n));
  return primitive_form(lin, row[n]);
}

}  // namespace detail

/// Canonical form of a constraint system, or nullopt when it is empty.
inline std::optional<Cell> try_canonicalize(const ConstraintSystem& system) {
  const std::size_t n = system.ambient_dim;
  for (const auto* list : {&system.inequalities, &system.equalities})
    for (const auto& f : *list)
      if (f.linear.size() != n) throw Error("constraint has wrong ambient dimension");

  std::vector<AffineForm> eqs = system.equalities;
  std::vector<AffineForm> raw_ineqs = system.inequalities;
  while (true) {
    auto red = detail::reduce_equalities(n, eqs);
    if (!red.consistent) return std::nullopt;

    std::map<IntVector, Rational, decltype([](const IntVector& a, const IntVector& b) {
               return compare(a, b) < 0;
             })>
        tightest;
    for (const auto& f : raw_ineqs) {
      AffineForm g = detail::reduce_form(n, f, red.echelon);
      if (g.is_constant()) {
        if (g.constant < 0) return std::nullopt;
        continue;
      }
      auto it = tightest.find(g.linear);
      if (it == tightest.end())
        tightest.emplace(g.linear, g.constant);
      else if (g.constant < it->second)
        it->second = g.constant;
    }
    std::vector<AffineForm> ineqs;
    for (auto& [lin, c] : tightest) ineqs.push_back({lin, c});

    // max t  s.t.  eqs, ineq_i(x) - t >= 0, 1 - t >= 0   over (x, t).
    std::vector<LinearConstraint> lifted;
    for (const auto& e : red.equalities) {
      RatVector lin = to_rational(e.linear);
      lin.push_back(0);
      lifted.push_back({std::move(lin), e.constant, true});
    }
    for (const auto& f : ineqs) {
      RatVector lin = to_rational(f.linear);
      lin.push_back(-1);
      lifted.push_back({std::move(lin), f.constant, false});
    }
    {
      RatVector lin(n + 1, Rational(0));
      lin[n] = -1;
      lifted.push_back({std::move(lin), 1, false});
    }
    RatVector objective(n + 1, Rational(0));
    objective[n] = 1;
    LpResult slack = maximize(objective, lifted, n + 1);
    if (slack.status != LpStatus::optimal) throw Error("canonicalize: unexpected LP status");
    if (slack.value < 0) return std::nullopt;

    if (slack.value == 0) {
      // Some inequalities vanish on the whole set; find and promote them.
      auto cons = to_constraints(ineqs, red.equalities);
      std::vector<AffineForm> still;
      bool promoted = false;
      for (const auto& f : ineqs) {
        LpResult r = maximize(to_rational(f.linear), cons, n);
        if (r.status == LpStatus::optimal && r.value + f.constant == 0) {
          red.equalities.push_back(f);
          promoted = true;
        } else {
          still.push_back(f);
        }
      }
      if (!promoted) throw Error("canonicalize: failed to detect implicit equalities");
      eqs = std::move(red.equalities);
      raw_ineqs = std::move(still);
      continue;
    }

    RatVector interior(slack.point.begin(), slack.point.begin() + static_cast<std::ptrdiff_t>(n));

    // Drop redundant inequalities.
    std::vector<bool> keep(ineqs.size(), true);
    if (ineqs.size() > 1) {
      for (std::size_t i = 0; i < ineqs.size(); ++i) {
        std::vector<AffineForm> others;
        for (std::size_t j = 0; j < ineqs.size(); ++j)
          if (j != i && keep[j]) others.push_back(ineqs[j]);
        LpResult r = minimize(to_rational(ineqs[i].linear), to_constraints(others, red.equalities), n);
        if (r.status == LpStatus::optimal && r.value + ineqs[i].constant >= 0) keep[i] = false;
      }
    }
    std::vector<AffineForm> irredundant;
    for (std::size_t i = 0; i < ineqs.size(); ++i)
      if (keep[i]) irredundant.push_back(std::move(ineqs[i]));
    std::sort(irredundant.begin(), irredundant.end());
    return Cell(n, std::move(irredundant), std::move(red.equalities), std::move(interior));
  }
}

inline Cell canonicalize(const ConstraintSystem& system) {
  auto c = try_canonicalize(system);
  if (!c) throw Error("empty cell");
  return *c;
}

inline Cell whole_space(std::size_t n) { return canonicalize({n, {}, {}}); }

inline Cell point_cell(const RatVector& p) {
  ConstraintSystem s{p.size(), {}, {}};
  for (std::size_t i = 0; i < p.size(); ++i) {
    AffineForm f = coordinate_form(p.size(), i);
    f.constant = -p[i];
    s.equalities.push_back(std::move(f));
  }
  return canonicalize(s);
}

/// {apex + sum t_i g_i : t_i >= 0}; the generators must be linearly
/// independent. Generators listed in `bounded` get t_i <= 1 as well.
inline Cell simplicial_cell(const RatVector& apex, const std::vector<RatVector>& generators,
                            const std::vector<bool>& bounded = {}) {
  const std::size_t n = apex.size();
  const std::size_t d = generators.size();
  if (rank(generators, n) != d) throw Error("simplicial_cell: generators are linearly dependent");
  ConstraintSystem s{n, {}, {}};
  for (const auto& w : nullspace(generators, n)) {
    AffineForm f = primitive_form(w, Rational(0));
    f.constant = -dot(f.linear, apex);
    s.equalities.push_back(std::move(f));
  }
  // Dual functionals λ_i with λ_i(g_j) = δ_ij, taken inside span(g).
  for (std::size_t i = 0; i < d; ++i) {
    std::vector<RatVector> rows;
    RatVector rhs;
    for (std::size_t j = 0; j < d; ++j) {
      RatVector row(d);
      for (std::size_t k = 0; k < d; ++k) row[k] = dot(generators[j], generators[k]);
      row.push_back(i == j ? 1 : 0);
      rows.push_back(std::move(row));
    }
    RowEchelon e = reduced_row_echelon(rows, d + 1);
    RatVector lambda(n, Rational(0));
    for (std::size_t r = 0; r < e.rows.size(); ++r)
      lambda = add(lambda, scaled(generators[e.pivots[r]], e.rows[r][d]));
    // λ(x - apex) >= 0 and, if bounded, 1 - λ(x - apex) >= 0.
    s.inequalities.push_back(primitive_form(lambda, -dot(lambda, apex)));
    if (i < bounded.size() && bounded[i])
      s.inequalities.push_back(primitive_form(scaled(lambda, Rational(-1)), 1 + dot(lambda, apex)));
  }
  return canonicalize(s);
}

inline Cell cone_from_rays(std::size_t n, const std::vector<IntVector>& rays) {
  std::vector<RatVector> gens;
  for (const auto& r : rays) gens.push_back(to_rational(r));
  return simplicial_cell(RatVector(n, Rational(0)), gens);
}

inline Cell ray_cell(const RatVector& apex, const RatVector& direction) {
  return simplicial_cell(apex, {direction});
}

inline Cell segment_cell(const RatVector& p, const RatVector& q) {
  return simplicial_cell(p, {subtract(q, p)}, {true});
}

inline std::optional<Cell> intersect(const Cell& a, const Cell& b) {
  if (a.ambient_dim() != b.ambient_dim()) throw Error("intersect: ambient dimension mismatch");
  ConstraintSystem s = a.system();
  s.inequalities.insert(s.inequalities.end(), b.inequalities().begin(), b.inequalities().end());
  s.equalities.insert(s.equalities.end(), b.equalities().begin(), b.equalities().end());
  return try_canonicalize(s);
}

inline std::optional<Cell> intersect_with(const Cell& a, const std::vector<AffineForm>& ineqs,
                                          const std::vector<AffineForm>& eqs = {}) {
  ConstraintSystem s = a.system();
  s.inequalities.insert(s.inequalities.end(), ineqs.begin(), ineqs.end());
  s.equalities.insert(s.equalities.end(), eqs.begin(), eqs.end());
  return try_canonicalize(s);
}

/// All faces of dimension dim - 1, one per irredundant inequality.
inline std::vector<Cell> faces_of_codim_one(const Cell& cell) {
  std::vector<Cell> faces;
  const auto& ineqs = cell.inequalities();
  for (std::size_t i = 0; i < ineqs.size(); ++i) {
    ConstraintSystem s{cell.ambient_dim(), {}, cell.equalities()};
    for (std::size_t j = 0; j < ineqs.size(); ++j) {
      if (j == i)
        s.equalities.push_back(ineqs[j]);
      else
        s.inequalities.push_back(ineqs[j]);
    }
    faces.push_back(canonicalize(s));
  }
  std::sort(faces.begin(), faces.end());
  return faces;
}

inline Cell recession_cone(const Cell& cell) {
  ConstraintSystem s{cell.ambient_dim(), {}, {}};
  for (const auto& f : cell.inequalities()) s.inequalities.push_back({f.linear, 0});
  for (const auto& f : cell.equalities()) s.equalities.push_back({f.linear, 0});
  return canonicalize(s);
}

inline bool contains_point(const Cell& cell, const RatVector& p) {
  if (p.size() != cell.ambient_dim()) throw Error("contains_point: dimension mismatch");
  for (const auto& e : cell.equalities())
    if (e(p) != 0) return false;
  for (const auto& f : cell.inequalities())
    if (f(p) < 0) return false;
  return true;
}

inline bool relative_interior_contains(const Cell& cell, const RatVector& p) {
  if (p.size() != cell.ambient_dim()) throw Error("relative_interior_contains: dimension mismatch");
  for (const auto& e : cell.equalities())
    if (e(p) != 0) return false;
  for (const auto& f : cell.inequalities())
    if (f(p) <= 0) return false;
  return true;
}

/// Whether f >= 0 on all of the cell.
inline bool is_nonnegative_on(const Cell& cell, const AffineForm& f) {
  if (cell.is_constant_on(f)) return f(cell.interior_point()) >= 0;
  LpResult r = minimize(to_rational(f.linear), cell.constraints(), cell.ambient_dim());
  return r.status == LpStatus::optimal && r.value + f.constant >= 0;
}

/// Whether f vanishes identically on the cell.
inline bool vanishes_on(const Cell& cell, const AffineForm& f) {
  return cell.is_constant_on(f) && f(cell.interior_point()) == 0;
}

/// inner ⊆ outer.
inline bool contains(const Cell& outer, const Cell& inner) {
  for (const auto& e : outer.equalities())
    if (!vanishes_on(inner, e)) return false;
  for (const auto& f : outer.inequalities())
    if (!is_nonnegative_on(inner, f)) return false;
  return true;
}

/// Whether the hyperplane {f = 0} separates the cell into two full-dimensional
/// pieces.
inline bool hyperplane_cuts(const Cell& cell, const AffineForm& f) {
  if (cell.is_constant_on(f)) return false;
  Rational at = f(cell.interior_point());
  if (at == 0) return true;
  auto cons = cell.constraints();
  if (at > 0) {
    LpResult r = minimize(to_rational(f.linear), cons, cell.ambient_dim());
    return r.status == LpStatus::unbounded || r.value + f.constant < 0;
  }
  LpResult r = maximize(to_rational(f.linear), cons, cell.ambient_dim());
  return r.status == LpStatus::unbounded || r.value + f.constant > 0;
}

/// A finite set of affine hyperplanes {f = 0}.
struct HalfspaceArrangement {
  std::vector<AffineForm> forms;

  /// Normalized, deduplicated, constant forms removed.
  HalfspaceArrangement normalized() const {
    std::vector<AffineForm> out;
    for (const auto& f : forms) {
      if (f.is_constant()) continue;
      out.push_back(hyperplane_form(f));
    }
    std::sort(out.begin(), out.end());
    out.erase(std::unique(out.begin(), out.end()), out.end());
    return {std::move(out)};
  }

  void add_cell(const Cell& c) {
    forms.insert(forms.end(), c.inequalities().begin(), c.inequalities().end());
    forms.insert(forms.end(), c.equalities().begin(), c.equalities().end());
  }
};

/// Splits one cell by every hyperplane. Pieces keep the cell's dimension.
inline std::vector<Cell> refine_cell(const Cell& cell, const HalfspaceArrangement& arrangement) {
  std::vector<Cell> pieces{cell};
  for (const auto& f : arrangement.forms) {
    std::vector<Cell> next;
    for (const auto& piece : pieces) {
      if (!hyperplane_cuts(piece, f)) {
        next.push_back(piece);
        continue;
      }
      next.push_back(*intersect_with(piece, {f}));
      next.push_back(*intersect_with(piece, {-f}));
    }
    pieces = std::move(next);
  }
  return pieces;
}

/// Refines every cell by the arrangement; output is sorted and free of
/// duplicates.
inline std::vector<Cell> refine_by_arrangement(const std::vector<Cell>& cells, const HalfspaceArrangement& arr) {
  HalfspaceArrangement norm = arr.normalized();
  std::vector<Cell> out;
  for (const auto& c : cells) {
    auto pieces = refine_cell(c, norm);
    out.insert(out.end(), pieces.begin(), pieces.end());
  }
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

inline Cell translate(const Cell& cell, const RatVector& v) {
  if (v.size() != cell.ambient_dim()) throw Error("translate: dimension mismatch");
  auto shift = [&](const std::vector<AffineForm>& forms) {
    std::vector<AffineForm> out;
    for (const auto& f : forms) out.push_back({f.linear, f.constant - dot(f.linear, v)});
    return out;
  };
  // Linear parts are distinct and unchanged, so the canonical order survives.
  return Cell(cell.ambient_dim(), shift(cell.inequalities()), shift(cell.equalities()),
              add(cell.interior_point(), v));
}

namespace detail {
inline AffineForm pad_form(const AffineForm& f, std::size_t before, std::size_t after) {
  AffineForm g{IntVector(before, 0), f.constant};
  g.linear.insert(g.linear.end(), f.linear.begin(), f.linear.end());
  g.linear.resize(before + f.linear.size() + after, 0);
  return g;
}
}  // namespace detail

/// a × b ⊂ R^{n+m}.
inline Cell cell_product(const Cell& a, const Cell& b) {
  const std::size_t n = a.ambient_dim();
  const std::size_t m = b.ambient_dim();
  std::vector<AffineForm> ineqs, eqs;
  for (const auto& f : a.equalities()) eqs.push_back(detail::pad_form(f, 0, m));
  for (const auto& f : b.equalities()) eqs.push_back(detail::pad_form(f, n, 0));
  for (const auto& f : a.inequalities()) ineqs.push_back(detail::pad_form(f, 0, m));
  for (const auto& f : b.inequalities()) ineqs.push_back(detail::pad_form(f, n, 0));
  std::sort(ineqs.begin(), ineqs.end());
  RatVector p = a.interior_point();
  p.insert(p.end(), b.interior_point().begin(), b.interior_point().end());
  return Cell(n + m, std::move(ineqs), std::move(eqs), std::move(p));
}

/// Pulls constraints back along x ↦ M x; may be empty.
inline AffineForm pull_back_form(const AffineForm& f, const IntegerLinearMap& map) {
  return {map.matrix().left_apply(f.linear), f.constant};
}

inline std::optional<Cell> preimage(const Cell& cell, const IntegerLinearMap& map) {
  ConstraintSystem s{map.source_dim(), {}, {}};
  for (const auto& f : cell.inequalities()) s.inequalities.push_back(pull_back_form(f, map));
  for (const auto& f : cell.equalities()) s.equalities.push_back(pull_back_form(f, map));
  return try_canonicalize(s);
}

/// Whether the map is injective on the cell's direction space.
inline bool is_injective_on(const IntegerLinearMap& map, const Cell& cell) {
  std::vector<RatVector> images;
  for (const auto& d : cell.direction_basis()) images.push_back(map.apply(d));
  return rank(images, map.target_dim()) == cell.dim();
}

/// Image of a cell under a map that is injective on it.
inline Cell injective_image(const Cell& cell, const IntegerLinearMap& map) {
  if (!is_injective_on(map, cell)) throw Error("injective_image: map is not injective on the cell");
  const std::size_t m = map.target_dim();
  const std::size_t k = cell.dim();
  const RatVector& p = cell.interior_point();
  const RatVector fp = map.apply(p);
  const auto& B = cell.direction_basis();
  std::vector<RatVector> FB;
  for (const auto& d : B) FB.push_back(map.apply(d));

  ConstraintSystem s{m, {}, {}};
  for (const auto& w : nullspace(FB, m)) {
    AffineForm f = primitive_form(w, Rational(0));
    f.constant = -dot(f.linear, fp);
    s.equalities.push_back(std::move(f));
  }
  // Left inverse on the image: y = L (z - f(p)) with L FB = I. Row i of L is
  // the dual functional to FB_i inside span(FB).
  std::vector<RatVector> L;
  for (std::size_t i = 0; i < k; ++i) {
    std::vector<RatVector> rows;
    for (std::size_t j = 0; j < k; ++j) {
      RatVector row(k);
      for (std::size_t l = 0; l < k; ++l) row[l] = dot(FB[j], FB[l]);
      row.push_back(i == j ? 1 : 0);
      rows.push_back(std::move(row));
    }
    RowEchelon e = reduced_row_echelon(rows, k + 1);
    RatVector li(m, Rational(0));
    for (std::size_t r = 0; r < e.rows.size(); ++r) li = add(li, scaled(FB[e.pivots[r]], e.rows[r][k]));
    L.push_back(std::move(li));
  }
  // f(p + B y) = (f·B) y + f(p); substitute y = L (z - f(p)).
  for (const auto& f : cell.inequalities()) {
    RatVector coef(m, Rational(0));
    for (std::size_t i = 0; i < k; ++i) {
      Rational fb = f.on_direction(B[i]);
      if (fb != 0) coef = add(coef, scaled(L[i], fb));
    }
    Rational c = f(p) - dot(coef, fp);
    s.inequalities.push_back(primitive_form(coef, c));
  }
  return canonicalize(s);
}

}  // namespace tropint
