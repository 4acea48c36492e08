#pragma once

// Integer linear maps between cycles: push-forward and pull-back.

#include "tropint/divisors.hpp"

namespace tropint {

/// Whether f maps |source| into |target|.
inline bool maps_into(const IntegerLinearMap& f, const Cycle& source, const Cycle& target) {
  if (f.source_dim() != source.ambient_dim() || f.target_dim() != target.ambient_dim()) return false;
  HalfspaceArrangement arr;
  for (const auto& delta : target.cells()) {
    for (const auto& g : delta.inequalities()) arr.forms.push_back(pull_back_form(g, f));
    for (const auto& g : delta.equalities()) arr.forms.push_back(pull_back_form(g, f));
  }
  WeightedComplex refined = refine(source.reduced().complex(), arr);
  for (const auto& piece : refined.cells()) {
    RatVector image = f.apply(piece.interior_point());
    bool inside = false;
    for (std::size_t j = 0; j < target.size() && !inside; ++j)
      inside = target.weight(j) != 0 && contains_point(target.cell(j), image);
    if (!inside) return false;
  }
  return true;
}

class Morphism {
 public:
  Morphism(IntegerLinearMap map, Cycle source, Cycle target)
      : map_(std::move(map)), source_(std::move(source)), target_(std::move(target)) {
    if (!maps_into(map_, source_, target_)) throw Error("morphism: image of source is not contained in target");
  }

  /// A morphism into [R^m].
  Morphism(IntegerLinearMap map, Cycle source)
      : Morphism(map, std::move(source), whole_space_cycle(map.target_dim())) {}

  const IntegerLinearMap& map() const { return map_; }
  const Cycle& source() const { return source_; }
  const Cycle& target() const { return target_; }

 private:
  IntegerLinearMap map_;
  Cycle source_;
  Cycle target_;
};

/// f_* E for a cycle E in the source space of f.
inline Cycle push_forward(const IntegerLinearMap& f, const Cycle& e) {
  if (f.source_dim() != e.ambient_dim()) throw Error("push_forward: dimension mismatch");
  const std::size_t m = f.target_dim();
  if (e.empty()) return Cycle::empty_cycle(m, e.dim());
  // Only cells on which f is injective contribute. Images are cut by the
  // facet hyperplanes of images with the same affine span.
  std::vector<std::pair<Cell, Integer>> kept;
  std::map<std::vector<AffineForm>, HalfspaceArrangement> span_forms;
  for (std::size_t i = 0; i < e.size(); ++i) {
    if (e.weight(i) == 0 || !is_injective_on(f, e.cell(i))) continue;
    kept.emplace_back(e.cell(i), e.weight(i));
    Cell image = injective_image(e.cell(i), f);
    auto& forms = span_forms[image.equalities()].forms;
    forms.insert(forms.end(), image.inequalities().begin(), image.inequalities().end());
  }
  if (kept.empty()) return Cycle::empty_cycle(m, e.dim());
  for (auto& [span, arr] : span_forms) arr = arr.normalized();
  std::vector<std::pair<Cell, Integer>> pieces;
  for (const auto& [sigma, w] : kept) {
    HalfspaceArrangement pulled;
    for (const auto& g : span_forms.at(injective_image(sigma, f).equalities()).forms)
      pulled.forms.push_back(pull_back_form(g, f));
    for (auto& piece : refine_cell(sigma, pulled.normalized())) pieces.emplace_back(std::move(piece), w);
  }
  WeightedComplex refined(e.ambient_dim(), e.dim(), std::move(pieces));

  std::map<Cell, Integer> weights;
  const LatticeBasis target_lattice = LatticeBasis::standard(m);
  for (std::size_t i = 0; i < refined.size(); ++i) {
    const Cell& sigma = refined.cell(i);
    Cell image = injective_image(sigma, f);
    Integer index = lattice_index(f, sigma.direction_lattice(), image.direction_lattice());
    weights[image] += refined.weight(i) * index;
  }
  std::vector<std::pair<Cell, Integer>> cells;
  for (auto& [c, w] : weights) {
    // A second pass must not cut any image cell again.
    if (refine_cell(c, span_forms.at(c.equalities())).size() != 1)
      throw Error("push_forward: image refinement is not a fixpoint");
    if (w != 0) cells.emplace_back(c, w);
  }
  return Cycle::trusted(WeightedComplex(m, e.dim(), std::move(cells)));
}

inline Cycle push_forward(const Morphism& f, const Cycle& e) { return push_forward(f.map(), e); }

/// h ∘ f.
inline PLFunction pull_back(const IntegerLinearMap& f, const PLFunction& h) {
  if (h.ambient_dim() != f.target_dim()) throw Error("pull_back: dimension mismatch");
  if (h.is_polynomial()) {
    std::vector<AffineForm> terms;
    for (const auto& t : h.polynomial().terms) terms.push_back(pull_back_form(t, f));
    return TropicalPolynomial(f.source_dim(), std::move(terms));
  }
  PiecewiseAffine out{f.source_dim(), {}, {}};
  const auto& pw = h.piecewise();
  for (std::size_t i = 0; i < pw.cells.size(); ++i) {
    auto pre = preimage(pw.cells[i], f);
    if (!pre) continue;
    out.cells.push_back(*pre);
    out.forms.push_back(pull_back_form(pw.forms[i], f));
  }
  if (out.cells.empty()) throw Error("pull_back: function domain misses the image");
  return out;
}

inline PLFunction pull_back(const Morphism& f, const PLFunction& h) { return pull_back(f.map(), h); }

inline CartierDivisor pull_back(const Morphism& f, const CartierDivisor& h) {
  return {pull_back(f.map(), h.representative)};
}

/// φ · f_*E == f_*(f^*φ · E).
inline bool check_projection_formula(const IntegerLinearMap& f, const Cycle& e, const PLFunction& phi) {
  Cycle lhs = weil_divisor(phi, push_forward(f, e));
  Cycle rhs = push_forward(f, weil_divisor(pull_back(f, phi), e));
  return cycles_equal(lhs, rhs);
}

inline bool check_projection_formula(const Morphism& f, const Cycle& e, const CartierDivisor& phi) {
  return check_projection_formula(f.map(), e, phi.representative);
}

}  // namespace tropint
