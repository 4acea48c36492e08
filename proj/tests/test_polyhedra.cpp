#include "tropint/polyhedra.hpp"

#include <gtest/gtest.h>

using namespace tropint;

namespace {

IntVector iv(std::initializer_list<long> xs) {
  IntVector v;
  for (long x : xs) v.emplace_back(x);
  return v;
}

RatVector rv(std::initializer_list<long> xs) {
  RatVector v;
  for (long x : xs) v.emplace_back(x);
  return v;
}

AffineForm form(std::initializer_list<long> lin, long c) { return {iv(lin), Rational(c)}; }

Cell unit_square() { return canonicalize({2, {form({1, 0}, 0), form({-1, 0}, 1), form({0, 1}, 0), form({0, -1}, 1)}, {}}); }

}  // namespace

TEST(Cell, RedundantAndScaledConstraintsCanonicalize) {
  Cell a = unit_square();
  Cell b = canonicalize({2,
                         {form({2, 0}, 0), form({-3, 0}, 3), form({0, 1}, 0), form({0, -1}, 1), form({1, 1}, 5),
                          form({1, 0}, 1)},
                         {}});
  EXPECT_EQ(a, b);
  EXPECT_EQ(a.dim(), 2u);
  EXPECT_EQ(a.inequalities().size(), 4u);
  EXPECT_TRUE(relative_interior_contains(a, a.interior_point()));
}

TEST(Cell, ImplicitEqualitiesAreDetected) {
  // x >= 0, -x >= 0 is the line x = 0; combined with y >= 0 a ray.
  Cell r = canonicalize({2, {form({1, 0}, 0), form({-1, 0}, 0), form({0, 1}, 0)}, {}});
  EXPECT_EQ(r.dim(), 1u);
  EXPECT_EQ(r.equalities().size(), 1u);
  EXPECT_EQ(r, ray_cell(rv({0, 0}), rv({0, 1})));
  // x + y >= 1, x <= 0, y <= 1 pins the point (0, 1).
  Cell p = canonicalize({2, {form({1, 1}, -1), form({-1, 0}, 0), form({0, -1}, 1)}, {}});
  EXPECT_EQ(p.dim(), 0u);
  EXPECT_EQ(p, point_cell(rv({0, 1})));
}

TEST(Cell, EmptySystems) {
  EXPECT_FALSE(try_canonicalize({1, {form({1}, -2), form({-1}, 1)}, {}}));
  EXPECT_FALSE(try_canonicalize({2, {}, {form({1, 0}, 0), form({1, 0}, -1)}}));
  EXPECT_THROW(canonicalize({1, {form({0}, -1)}, {}}), Error);
}

TEST(Cell, EqualityOrderDoesNotMatter) {
  Cell a = canonicalize({3, {}, {form({1, 1, 0}, 0), form({0, 1, 1}, -2)}});
  Cell b = canonicalize({3, {}, {form({1, 0, -1}, 2), form({2, 2, 0}, 0)}});
  EXPECT_EQ(a, b);
  EXPECT_EQ(a.dim(), 1u);
  EXPECT_EQ(a.direction_lattice().rank(), 1u);
  EXPECT_EQ(abs(a.direction_lattice().vectors()[0][0]), Integer(1));
}

TEST(Cell, FacesOfSquare) {
  auto faces = faces_of_codim_one(unit_square());
  ASSERT_EQ(faces.size(), 4u);
  for (const auto& f : faces) {
    EXPECT_EQ(f.dim(), 1u);
    EXPECT_TRUE(contains(unit_square(), f));
    auto verts = faces_of_codim_one(f);
    EXPECT_EQ(verts.size(), 2u);
  }
  EXPECT_TRUE(std::find(faces.begin(), faces.end(), segment_cell(rv({0, 0}), rv({1, 0}))) != faces.end());
}

TEST(Cell, RecessionConeOfShiftedCone) {
  Cell c = simplicial_cell(rv({3, -1}), {rv({1, 0}), rv({1, 2})});
  Cell rc = recession_cone(c);
  EXPECT_EQ(rc, cone_from_rays(2, {iv({1, 0}), iv({1, 2})}));
  EXPECT_EQ(recession_cone(unit_square()), point_cell(rv({0, 0})));
  EXPECT_FALSE(c.is_bounded());
  EXPECT_TRUE(unit_square().is_bounded());
}

TEST(Cell, NonPointedCells) {
  // A half-plane has a line of lineality; its only facet is a line.
  Cell h = canonicalize({2, {form({1, -1}, 0)}, {}});
  auto faces = faces_of_codim_one(h);
  ASSERT_EQ(faces.size(), 1u);
  EXPECT_EQ(faces[0].dim(), 1u);
  EXPECT_TRUE(faces_of_codim_one(faces[0]).empty());
}

TEST(Cell, ContainmentAndIntersection) {
  Cell q = cone_from_rays(2, {iv({1, 0}), iv({0, 1})});
  Cell r = cone_from_rays(2, {iv({1, 1}), iv({-1, 1})});
  auto i = intersect(q, r);
  ASSERT_TRUE(i);
  EXPECT_EQ(*i, cone_from_rays(2, {iv({1, 1}), iv({0, 1})}));
  EXPECT_TRUE(contains(q, *i));
  EXPECT_FALSE(contains(*i, q));
  EXPECT_TRUE(contains_point(q, rv({0, 0})));
  EXPECT_FALSE(relative_interior_contains(q, rv({0, 0})));
  EXPECT_FALSE(intersect(segment_cell(rv({0, 0}), rv({1, 0})), segment_cell(rv({2, 0}), rv({3, 0}))));
}

TEST(Cell, RefineByArrangement) {
  auto pieces = refine_by_arrangement({unit_square()}, {{form({2, 0}, -1), form({0, 1}, -1), form({1, 1}, -1)}});
  // x = 1/2 and the diagonal x + y = 1 cut the square into 4 regions.
  EXPECT_EQ(pieces.size(), 4u);
  for (const auto& p : pieces) EXPECT_EQ(p.dim(), 2u);
  auto line = refine_by_arrangement({whole_space(1)}, {{form({1}, 0), form({-1}, 0), form({1}, -1)}});
  EXPECT_EQ(line.size(), 3u);
}

TEST(Cell, TranslateAndProductMatchCanonicalize) {
  Cell c = simplicial_cell(rv({0, 0, 0}), {rv({1, 0, 0}), rv({1, 1, 1})});
  RatVector v{Rational(1, 2), Rational(-3), Rational(7)};
  Cell t = translate(c, v);
  EXPECT_EQ(t, canonicalize(t.system()));
  EXPECT_EQ(t, simplicial_cell(v, {rv({1, 0, 0}), rv({1, 1, 1})}));
  Cell p = cell_product(c, segment_cell(rv({0}), rv({2})));
  EXPECT_EQ(p, canonicalize(p.system()));
  EXPECT_EQ(p.dim(), 3u);
  Cell p2 = cell_product(unit_square(), ray_cell(rv({1, 1}), rv({-1, 2})));
  EXPECT_EQ(p2, canonicalize(p2.system()));
}

TEST(Cell, InjectiveImage) {
  IntegerLinearMap f(IntMatrix::from_rows({iv({1, 1})}, 2));
  Cell ray = ray_cell(rv({0, 0}), rv({-1, -1}));
  Cell img = injective_image(ray, f);
  EXPECT_EQ(img, ray_cell(rv({0}), rv({-1})));
  Cell seg = segment_cell(rv({1, 0}), rv({0, 1}));
  EXPECT_FALSE(is_injective_on(f, seg));
  EXPECT_THROW(injective_image(seg, f), Error);
  IntegerLinearMap g(IntMatrix::from_rows({iv({1, 0}), iv({1, 1}), iv({0, 2})}, 2));
  Cell im2 = injective_image(unit_square(), g);
  EXPECT_EQ(im2.dim(), 2u);
  auto back = preimage(im2, g);
  ASSERT_TRUE(back);
  EXPECT_EQ(*back, unit_square());
}
