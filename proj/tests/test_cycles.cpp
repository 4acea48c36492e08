#include "test_support.hpp"

using namespace testing_support;

TEST(ValidateComplex, OverlappingConesAreRejected) {
  // Two cones whose intersection is not a face of the first.
  WeightedComplex bad(2, 2,
                      {{cone_from_rays(2, {ints({1, 0}), ints({0, 1})}), 1},
                       {cone_from_rays(2, {ints({1, 1}), ints({-1, 1})}), 1}});
  auto d = validate_complex(bad);
  EXPECT_FALSE(d.ok());
}

TEST(ValidateComplex, AcceptsFansAndHalfplanes) {
  EXPECT_TRUE(validate_complex(standard_skeleton(2, 1).complex()).ok());
  EXPECT_TRUE(validate_complex(standard_skeleton(3, 2).complex()).ok());
  EXPECT_TRUE(validate_complex(WeightedComplex(2, 2, {{canonicalize({2, {form({0, 1}, 0)}, {}}), 1}})).ok());
  WeightedComplex dup(1, 1, {{whole_space(1), 1}, {whole_space(1), 2}});
  EXPECT_FALSE(validate_complex(dup).ok());
  WeightedComplex mixed(2, 1, {{ray_cell(rats({0, 0}), rats({1, 0})), 1}, {whole_space(2), 1}});
  EXPECT_FALSE(validate_complex(mixed).ok());
}

TEST(NonzeroPart, DropsZeroWeights) {
  WeightedComplex c(2, 1,
                    {{cone_from_rays(2, {ints({1, 0})}), 1},
                     {cone_from_rays(2, {ints({0, 1})}), 0},
                     {cone_from_rays(2, {ints({-1, -1})}), 1}});
  EXPECT_EQ(nonzero_part(c).size(), 2u);
  EXPECT_EQ(nonzero_part(nonzero_part(c)), nonzero_part(c));
  WeightedComplex zeros(1, 1, {{whole_space(1), 0}});
  EXPECT_TRUE(nonzero_part(zeros).empty());
}

TEST(NormalVector, Examples) {
  auto ray = cone_from_rays(2, {ints({-1, 0})});
  EXPECT_EQ(normal_vector(ray, point_cell(rats({0, 0}))).representative, ints({-1, 0}));
  // σ_{1,2} over σ_{1} in R^3: -e_2 modulo Λ_{σ_1}.
  auto facet = skeleton_cone(3, {1, 2});
  auto ridge = skeleton_cone(3, {1});
  IntVector v = normal_vector(facet, ridge).representative;
  EXPECT_EQ(v[1], -1);
  EXPECT_EQ(v[2], 0);
  auto half = canonicalize({2, {form({0, 1}, 0)}, {}});
  auto axis = canonicalize({2, {}, {form({0, 1}, 0)}});
  IntVector u = normal_vector(half, axis).representative;
  EXPECT_EQ(u[1], 1);
  EXPECT_THROW(normal_vector(half, point_cell(rats({0, 0}))), Error);
}

TEST(Balancing, StandardSkeletaAreBalanced) {
  for (std::size_t n = 1; n <= 4; ++n)
    for (std::size_t k = 0; k <= n; ++k) EXPECT_TRUE(is_balanced(standard_skeleton(n, k))) << n << "," << k;
  EXPECT_EQ(standard_skeleton(2, 1).size(), 3u);
  EXPECT_EQ(standard_skeleton(3, 3).size(), 4u);
  EXPECT_TRUE(curve_balanced_oracle(standard_skeleton(2, 1)));
  EXPECT_TRUE(is_balanced(examples::rigid_surface_refined()));
}

TEST(Balancing, WitnessForUnbalancedPair) {
  WeightedComplex c(1, 1, {{cone_from_rays(1, {ints({1})}), 1}, {cone_from_rays(1, {ints({-1})}), 2}});
  auto r = balancing_report(c);
  EXPECT_FALSE(r.balanced);
  ASSERT_TRUE(r.witness);
  EXPECT_EQ(*r.witness, point_cell(rats({0})));
  EXPECT_EQ(r.defect, ints({-1}));
  EXPECT_THROW(Cycle{c}, Error);
}

TEST(Balancing, LibraryAgreesWithOracle) {
  for (const auto& [name, c] : plane_curve_library()) {
    EXPECT_TRUE(is_balanced(c)) << name;
    EXPECT_TRUE(curve_balanced_oracle(c)) << name;
  }
  WeightedComplex two_rays(2, 1, {{cone_from_rays(2, {ints({1, 0})}), 1}, {cone_from_rays(2, {ints({0, 1})}), 1}});
  EXPECT_FALSE(is_balanced(two_rays));
  EXPECT_FALSE(curve_balanced_oracle(Cycle::trusted(two_rays)));
}

TEST(CommonRefinement, SplitsAlongTheOtherComplex) {
  Cycle line = whole_space_cycle(1);
  Cycle split = Cycle(WeightedComplex(1, 1, {{cone_from_rays(1, {ints({1})}), 1}, {cone_from_rays(1, {ints({-1})}), 1}}));
  auto [a, b] = common_refinement(line.complex(), split.complex());
  EXPECT_EQ(a.size(), 2u);
  EXPECT_EQ(a, b);
  auto [c, d] = common_refinement(standard_skeleton(2, 1).complex(), standard_skeleton(2, 1).complex());
  EXPECT_EQ(c, standard_skeleton(2, 1).complex());
  EXPECT_EQ(c, d);
}

TEST(CycleGroup, AxiomsOnLibrary) {
  auto lib = plane_curve_library();
  const Cycle zero = Cycle::empty_cycle(2, 1);
  for (std::size_t i = 0; i < lib.size(); ++i) {
    const Cycle& x = lib[i].second;
    EXPECT_TRUE(cycles_equal(add(x, zero), x)) << lib[i].first;
    EXPECT_TRUE(add(x, negate(x)).empty()) << lib[i].first;
    EXPECT_TRUE(scale(x, 0).empty());
    EXPECT_TRUE(cycles_equal(scale(x, 1), x));
    EXPECT_TRUE(cycles_equal(scale(x, 2), add(x, x)));
    const Cycle& y = lib[(i + 1) % lib.size()].second;
    const Cycle& z = lib[(i + 2) % lib.size()].second;
    Cycle xy = add(x, y);
    EXPECT_TRUE(is_balanced(xy));
    EXPECT_TRUE(curve_balanced_oracle(xy));
    EXPECT_TRUE(cycles_equal(xy, add(y, x)));
    EXPECT_TRUE(cycles_equal(add(xy, z), add(x, add(y, z))));
  }
}

TEST(CycleGroup, SumOfIdenticalSupports) {
  Cycle twice = add(standard_skeleton(2, 1), standard_skeleton(2, 1));
  ASSERT_EQ(twice.size(), 3u);
  for (const auto& w : twice.weights()) EXPECT_EQ(w, 2);
  Cycle changed = Cycle::trusted(WeightedComplex(
      2, 1,
      {{skeleton_cone(2, {0}), 2}, {skeleton_cone(2, {1}), 1}, {skeleton_cone(2, {2}), 1}}));
  EXPECT_FALSE(cycles_equal(standard_skeleton(2, 1), changed));
}

TEST(CycleGroup, RefinementInvariance) {
  for (const auto& [name, c] : plane_curve_library()) {
    HalfspaceArrangement arr{{form({1, 0}, 0), form({0, 1}, -1), form({1, -2}, 3)}};
    Cycle refined = refine(c, arr);
    EXPECT_GE(refined.size(), c.size());
    EXPECT_TRUE(cycles_equal(c, refined)) << name;
    EXPECT_TRUE(is_balanced(refined)) << name;
  }
}

TEST(CartesianProduct, WeightsMultiply) {
  Cycle p = cartesian_product(point_cycle(rats({0}), 2), point_cycle(rats({1}), 3));
  ASSERT_EQ(p.size(), 1u);
  EXPECT_EQ(p.weight(0), 6);
  EXPECT_EQ(p.cell(0), point_cell(rats({0, 1})));
  EXPECT_TRUE(cycles_equal(cartesian_product(line_R1(), line_R1()), whole_space_cycle(2)));
  Cycle lifted = cartesian_product(standard_skeleton(2, 1), point_cycle(rats({0})));
  EXPECT_EQ(lifted.ambient_dim(), 3u);
  EXPECT_TRUE(is_balanced(lifted));
  Cycle prod = cartesian_product(examples::conic(), standard_skeleton(1, 1));
  EXPECT_EQ(prod.dim(), 2);
  EXPECT_TRUE(is_balanced(prod));
}

TEST(Translate, RoundTripAndBalancing) {
  Cycle c = examples::quadrilateral_curve();
  RatVector v{Rational(3, 2), Rational(-7)};
  Cycle t = translate(c, v);
  EXPECT_TRUE(is_balanced(t));
  EXPECT_TRUE(cycles_equal(translate(t, scaled(v, Rational(-1))), c));
  EXPECT_TRUE(cycles_equal(translate(c, rats({0, 0})), c));
  for (std::size_t i = 0; i < c.size(); ++i) EXPECT_EQ(recession_cone(c.cell(i)), recession_cone(t.cell(i)));
}

TEST(StarFan, Examples) {
  Cycle L = standard_skeleton(2, 1);
  WeightedComplex s = star_fan(L.complex(), point_cell(rats({0, 0})));
  EXPECT_EQ(s, L.complex());
  Cycle Q = examples::quadrilateral_curve();
  WeightedComplex corner = star_fan(Q.complex(), point_cell(rats({2, 2})));
  EXPECT_EQ(corner.size(), 3u);
  EXPECT_TRUE(is_balanced(corner));
  WeightedComplex whole = star_fan(Q.complex(), Q.cell(0));
  ASSERT_EQ(whole.size(), 1u);
  EXPECT_EQ(whole.cell(0).dim(), 1u);
  EXPECT_TRUE(whole.cell(0).inequalities().empty());
  // In L_R the star of the ray -e_R sees the two cones next to it.
  Cycle LR = examples::rigid_surface_refined();
  WeightedComplex star = star_fan(LR.complex(), cone_from_rays(3, {ints({-1, -1, 0})}));
  EXPECT_EQ(star.size(), 2u);
}

TEST(Refinement, NewRidgesInsideFacetsCancel) {
  // A ridge created inside a facet has two neighbours with opposite normals
  // and equal weights, so an affine function assigns it weight zero.
  Cycle c = examples::conic();
  Cycle refined = refine(c, HalfspaceArrangement{{form({1, 1}, 1), form({1, 0}, 5)}});
  PLFunction affine = PLFunction::affine(form({3, -2}, 1));
  WeightedComplex w = weil_divisor_weights(affine, refined);
  EXPECT_FALSE(w.empty());
  for (const auto& x : w.weights()) EXPECT_EQ(x, 0);
}
