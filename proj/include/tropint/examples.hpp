#pragma once

// Named example cycles, functions and maps.

#include "tropint/products.hpp"

namespace tropint::examples {

inline IntVector ints(std::initializer_list<long> xs) {
  IntVector v;
  for (long x : xs) v.emplace_back(x);
  return v;
}

inline RatVector rats(std::initializer_list<long> xs) {
  RatVector v;
  for (long x : xs) v.emplace_back(x);
  return v;
}

/// S = [L^3_2].
inline Cycle rigid_surface() { return standard_skeleton(3, 2); }

namespace detail {
// Cones of the refinement L_R of L^3_2 with the function values on their rays.
struct RayCone {
  std::vector<IntVector> rays;
  IntVector values;
};

inline std::vector<RayCone> rigid_cones() {
  const IntVector m0 = ints({1, 1, 1}), m1 = ints({-1, 0, 0}), m2 = ints({0, -1, 0}), m3 = ints({0, 0, -1});
  const IntVector mR = ints({-1, -1, 0}), mnR = ints({1, 1, 0});
  return {
      {{m0, m1}, ints({1, 0})},  {{m0, m2}, ints({1, 0})},   {{m1, m3}, ints({0, 0})},
      {{m2, m3}, ints({0, 0})},  {{m1, mR}, ints({0, -1})},  {{mR, m2}, ints({-1, 0})},
      {{m0, mnR}, ints({1, 0})}, {{mnR, m3}, ints({0, 0})},
  };
}
}  // namespace detail

/// L_R: L^3_2 with σ_{12} and σ_{03} subdivided along ±(e_1 + e_2).
inline Cycle rigid_surface_refined() {
  std::vector<std::pair<Cell, Integer>> cells;
  for (const auto& c : detail::rigid_cones()) cells.emplace_back(cone_from_rays(3, c.rays), 1);
  return Cycle(WeightedComplex(3, 2, std::move(cells)));
}

/// The function on L_R with value 1 at -e_0, -1 at -e_R and 0 at the other
/// rays, linear on each cone.
inline PLFunction rigid_function() {
  PiecewiseAffine f{3, {}, {}};
  for (const auto& c : detail::rigid_cones()) {
    f.cells.push_back(cone_from_rays(3, c.rays));
    f.forms.push_back(linear_form_with_values(3, c.rays, c.values));
  }
  return f;
}

/// R: the line through e_1 + e_2, as two rays of weight 1.
inline Cycle rigid_curve() {
  return Cycle(WeightedComplex(3, 1,
                               {{cone_from_rays(3, {ints({1, 1, 0})}), 1}, {cone_from_rays(3, {ints({-1, -1, 0})}), 1}}));
}

/// Three rays (1,0), (0,1), (-1,-1) with weight 1.
inline Cycle pushforward_fan() {
  return Cycle(WeightedComplex(2, 1,
                               {{cone_from_rays(2, {ints({1, 0})}), 1},
                                {cone_from_rays(2, {ints({0, 1})}), 1},
                                {cone_from_rays(2, {ints({-1, -1})}), 1}}));
}

inline IntegerLinearMap map_f1() { return IntegerLinearMap(IntMatrix::from_rows({ints({1, 1})}, 2)); }
inline IntegerLinearMap map_f2() { return IntegerLinearMap(IntMatrix::from_rows({ints({1, 0})}, 2)); }

/// max{0, x+1, y+1, 2x, x+y+1, 2y}: a smooth plane conic.
inline TropicalPolynomial conic_polynomial() {
  return TropicalPolynomial(2, {{ints({0, 0}), 0},
                                {ints({1, 0}), 1},
                                {ints({0, 1}), 1},
                                {ints({2, 0}), 0},
                                {ints({1, 1}), 1},
                                {ints({0, 2}), 0}});
}

inline Cycle conic() { return weil_divisor(conic_polynomial(), whole_space_cycle(2)); }

/// Boundary of [0,2]^2 with a ray leaving each corner diagonally.
inline Cycle quadrilateral_curve() {
  std::vector<std::pair<Cell, Integer>> cells;
  const std::vector<RatVector> corners{rats({0, 0}), rats({2, 0}), rats({2, 2}), rats({0, 2})};
  const std::vector<RatVector> out{rats({-1, -1}), rats({1, -1}), rats({1, 1}), rats({-1, 1})};
  for (std::size_t i = 0; i < 4; ++i) {
    cells.emplace_back(segment_cell(corners[i], corners[(i + 1) % 4]), 1);
    cells.emplace_back(ray_cell(corners[i], out[i]), 1);
  }
  return Cycle(WeightedComplex(2, 1, std::move(cells)));
}

/// A bounded function on the quadrilateral curve whose divisor is
/// (1,0) + (2,1) - (1,2) - (0,1).
inline PLFunction sawtooth_function() {
  PiecewiseAffine f{2, {}, {}};
  auto piece = [&](Cell c, std::initializer_list<long> lin, long constant) {
    f.cells.push_back(std::move(c));
    f.forms.push_back({ints(lin), Rational(constant)});
  };
  piece(segment_cell(rats({1, 0}), rats({2, 0})), {0, 0}, 0);
  piece(segment_cell(rats({2, 0}), rats({2, 1})), {0, 0}, 0);
  piece(segment_cell(rats({2, 1}), rats({2, 2})), {0, 1}, -1);
  piece(segment_cell(rats({2, 2}), rats({1, 2})), {-1, 0}, 3);
  piece(segment_cell(rats({1, 2}), rats({0, 2})), {0, 0}, 2);
  piece(segment_cell(rats({0, 2}), rats({0, 1})), {0, 0}, 2);
  piece(segment_cell(rats({0, 1}), rats({0, 0})), {0, 1}, 1);
  piece(segment_cell(rats({0, 0}), rats({1, 0})), {-1, 0}, 1);
  piece(ray_cell(rats({0, 0}), rats({-1, -1})), {0, 0}, 1);
  piece(ray_cell(rats({2, 0}), rats({1, -1})), {0, 0}, 0);
  piece(ray_cell(rats({2, 2}), rats({1, 1})), {0, 0}, 1);
  piece(ray_cell(rats({0, 2}), rats({-1, 1})), {0, 0}, 2);
  return f;
}

/// max{0, x_i + c} in R^n.
inline PLFunction corner_function(std::size_t n, std::size_t i, long c = 0) {
  AffineForm x = coordinate_form(n, i);
  x.constant = c;
  return TropicalPolynomial(n, {constant_form(n, 0), x});
}

/// max{0, x_i} - max{0, x_i - 1}: x_i clamped to [0, 1].
inline PLFunction clamp_function(std::size_t n, std::size_t i) {
  return corner_function(n, i) - corner_function(n, i, -1);
}

}  // namespace tropint::examples
