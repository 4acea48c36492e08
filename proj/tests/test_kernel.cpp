#include "library.hpp"

#include <gtest/gtest.h>

#include <random>

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

}  // namespace

TEST(Rational, ParsesIntegersAndFractions) {
  EXPECT_EQ(parse_rational("7"), Rational(7));
  EXPECT_EQ(parse_rational("-3/6"), Rational(-1, 2));
  EXPECT_EQ(parse_rational("4/2"), Rational(2));
  EXPECT_THROW(parse_rational("1.5"), Error);
  EXPECT_THROW(parse_rational("1/0"), Error);
  EXPECT_THROW(parse_rational(""), Error);
  EXPECT_THROW(parse_rational("abc"), Error);
  EXPECT_EQ(to_string(make_rational(-5, 10)), "-1/2");
}

TEST(Rational, ArbitraryPrecision) {
  Rational big = parse_rational("123456789012345678901234567890/7");
  Rational back = big * 7;
  EXPECT_EQ(to_string(back), "123456789012345678901234567890");
}

TEST(Linalg, RankNullspaceDeterminant) {
  std::vector<RatVector> rows{rv({1, 2, 3}), rv({2, 4, 6}), rv({0, 1, 1})};
  EXPECT_EQ(rank(rows, 3), 2u);
  auto ns = nullspace(rows, 3);
  ASSERT_EQ(ns.size(), 1u);
  for (const auto& r : rows) EXPECT_EQ(dot(r, ns[0]), 0);
  EXPECT_EQ(determinant(IntMatrix::from_rows({iv({2, 1}), iv({7, 4})}, 2)), Integer(1));
  EXPECT_EQ(determinant(IntMatrix::from_rows({iv({0, 1, 2}), iv({3, 4, 5}), iv({6, 7, 9})}, 3)), Integer(-3));
}

TEST(Lattice, HermiteIndex) {
  auto M = IntMatrix::from_rows({iv({6, 4}), iv({4, 6})}, 2);
  auto h = hermite_normal_form(M);
  EXPECT_EQ(h.H(1, 0), 0);
  EXPECT_EQ(h.H(0, 0) * h.H(1, 1), Integer(20));
  EXPECT_EQ(h.U * M, h.H);
  EXPECT_EQ(abs(determinant(h.U)), Integer(1));
}

TEST(Lattice, SmithDiagonal) {
  auto M = IntMatrix::from_rows({iv({2, 4}), iv({6, 8})}, 2);
  auto s = smith_normal_form(M);
  EXPECT_EQ(s.S(0, 0), Integer(2));
  EXPECT_EQ(s.S(1, 1), Integer(4));
  EXPECT_EQ(s.S(0, 1), 0);
  EXPECT_EQ(s.S(1, 0), 0);
  EXPECT_EQ(s.U * M * s.V, s.S);
  EXPECT_EQ(s.V * s.Vinv, IntMatrix::identity(2));
}

TEST(Lattice, SubspaceLatticeIsSaturated) {
  auto L = subspace_lattice({rv({2, 4, 6})}, 3);
  ASSERT_EQ(L.rank(), 1u);
  EXPECT_EQ(L.vectors()[0], iv({1, 2, 3}));
  auto P = subspace_lattice({rv({1, 1, 0}), rv({1, -1, 0})}, 3);
  EXPECT_EQ(P, LatticeBasis(3, {iv({1, 0, 0}), iv({0, 1, 0})}));
}

TEST(Lattice, QuotientGenerator) {
  LatticeBasis sub(2, {iv({1, 1})});
  auto u = quotient_generator(sub, LatticeBasis::standard(2));
  EXPECT_EQ(abs(determinant(IntMatrix::from_rows({iv({1, 1}), u}, 2))), Integer(1));
  EXPECT_THROW(quotient_generator(LatticeBasis(2, {iv({2, 0})}), LatticeBasis::standard(2)), Error);
}

TEST(Lattice, IndexMatchesFundamentalDomainCount) {
  std::mt19937 rng(12345);
  std::uniform_int_distribution<long> d(-6, 6);
  int checked = 0;
  while (checked < 200) {
    IntVector a = iv({d(rng), d(rng)});
    IntVector b = iv({d(rng), d(rng)});
    if (a[0] * b[1] - a[1] * b[0] == 0) continue;
    IntegerLinearMap f(IntMatrix::from_rows({iv({a[0].get_si(), b[0].get_si()}), iv({a[1].get_si(), b[1].get_si()})}, 2));
    EXPECT_EQ(lattice_index(f, LatticeBasis::standard(2), LatticeBasis::standard(2)),
              Integer(testing_support::count_fundamental_domain(a, b)));
    ++checked;
  }
}

TEST(Lattice, IndexOnALine) {
  // Z -> saturated line through (1,2) in Z^2, generator mapped to (3,6).
  IntegerLinearMap f(IntMatrix::from_rows({iv({3}), iv({6})}, 1));
  EXPECT_EQ(lattice_index(f, LatticeBasis::standard(1), LatticeBasis(2, {iv({1, 2})})), Integer(3));
  IntegerLinearMap zero(IntMatrix::from_rows({iv({1, -1}), iv({1, -1})}, 2));
  LatticeBasis diag(2, {iv({1, 1})});
  EXPECT_THROW(lattice_index(zero, diag, LatticeBasis(2, {iv({1, 1})})), Error);
}

TEST(Lattice, IntegralFunctional) {
  LatticeBasis L(3, {iv({1, 1, 0}), iv({0, 1, 1})});
  IntVector lambda = integral_functional_with_values(L, iv({3, -2}));
  EXPECT_EQ(dot(lambda, L.vectors()[0]), Integer(3));
  EXPECT_EQ(dot(lambda, L.vectors()[1]), Integer(-2));
}

namespace {

// Brute-force 2D LP: enumerate all pairwise intersections of boundary lines.
std::optional<Rational> brute_force_max(const RatVector& obj, const std::vector<LinearConstraint>& cons) {
  std::optional<Rational> best;
  for (std::size_t i = 0; i < cons.size(); ++i)
    for (std::size_t j = i + 1; j < cons.size(); ++j) {
      const auto& a = cons[i];
      const auto& b = cons[j];
      Rational det = a.linear[0] * b.linear[1] - a.linear[1] * b.linear[0];
      if (det == 0) continue;
      Rational x = (-a.constant * b.linear[1] + b.constant * a.linear[1]) / det;
      Rational y = (-a.linear[0] * b.constant + b.linear[0] * a.constant) / det;
      RatVector p{x, y};
      bool ok = true;
      for (const auto& c : cons) {
        Rational v = dot(c.linear, p) + c.constant;
        if (c.equality ? v != 0 : v < 0) ok = false;
      }
      if (!ok) continue;
      Rational val = dot(obj, p);
      if (!best || val > *best) best = val;
    }
  return best;
}

}  // namespace

TEST(LinearProgram, MatchesVertexEnumeration) {
  std::mt19937 rng(7);
  std::uniform_int_distribution<long> d(-5, 5);
  for (int trial = 0; trial < 150; ++trial) {
    std::vector<LinearConstraint> cons;
    // Bounding box keeps the problem bounded.
    cons.push_back({rv({1, 0}), 10, false});
    cons.push_back({rv({-1, 0}), 10, false});
    cons.push_back({rv({0, 1}), 10, false});
    cons.push_back({rv({0, -1}), 10, false});
    for (int k = 0; k < 4; ++k) cons.push_back({rv({d(rng), d(rng)}), Rational(d(rng)), false});
    RatVector obj = rv({d(rng), d(rng)});
    auto expected = brute_force_max(obj, cons);
    auto got = maximize(obj, cons, 2);
    if (!expected) {
      EXPECT_EQ(got.status, LpStatus::infeasible) << "trial " << trial;
      continue;
    }
    ASSERT_EQ(got.status, LpStatus::optimal) << "trial " << trial;
    EXPECT_EQ(got.value, *expected) << "trial " << trial;
    for (const auto& c : cons) EXPECT_GE(dot(c.linear, got.point) + c.constant, 0);
  }
}

TEST(LinearProgram, EqualitiesAndUnbounded) {
  // x + y = 1, x >= 0, y >= 0: max x = 1.
  std::vector<LinearConstraint> cons{{rv({1, 1}), -1, true}, {rv({1, 0}), 0, false}, {rv({0, 1}), 0, false}};
  auto r = maximize(rv({1, 0}), cons, 2);
  ASSERT_EQ(r.status, LpStatus::optimal);
  EXPECT_EQ(r.value, 1);
  EXPECT_EQ(r.point, rv({1, 0}));
  EXPECT_EQ(maximize(rv({1, 1}), {{rv({1, 0}), 0, false}}, 2).status, LpStatus::unbounded);
  EXPECT_EQ(maximize(rv({1}), {{rv({1}), -1, true}, {rv({1}), 2, true}}, 1).status, LpStatus::infeasible);
  EXPECT_EQ(minimize(rv({1}), {{rv({1}), -3, false}}, 1).value, 3);
  // No constraints at all.
  EXPECT_EQ(maximize(rv({0, 0}), {}, 2).status, LpStatus::optimal);
  EXPECT_EQ(maximize(rv({1, 0}), {}, 2).status, LpStatus::unbounded);
}

TEST(Lattice, IndexOnRandomLinesMatchesPointCount) {
  std::mt19937 rng(777);
  std::uniform_int_distribution<long> d(-9, 9);
  int checked = 0;
  while (checked < 100) {
    IntVector v = iv({d(rng), d(rng)});
    if (is_zero(v)) continue;
    IntegerLinearMap f(IntMatrix::from_rows({iv({v[0].get_si()}), iv({v[1].get_si()})}, 1));
    LatticeBasis line = subspace_lattice({to_rational(v)}, 2);
    EXPECT_EQ(lattice_index(f, LatticeBasis::standard(1), line), Integer(testing_support::count_segment_points(v)));
    ++checked;
  }
}
