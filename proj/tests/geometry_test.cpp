#include <gtest/gtest.h>

#include <random>

#include "oracles.hpp"
#include "origami/geometry.hpp"

namespace {

using namespace origami;

Point P(std::initializer_list<long> l) {
  Point p;
  for (long x : l) p.push_back(Rational(x));
  return p;
}

TEST(Direction, Canonicalization) {
  EXPECT_EQ(canonicalize_direction(P({-1, 1})).coords(), P({1, -1}));
  EXPECT_EQ(canonicalize_direction(Point{Rational(2, 3), Rational(1), Rational(1)}).coords(), P({2, 3, 3}));
  EXPECT_EQ(canonicalize_direction(P({0, 5, 0, 0})).coords(), P({0, 1, 0, 0}));
  EXPECT_THROW(canonicalize_direction(P({0, 0})), Error);
  EXPECT_THROW(canonicalize_direction(P({3})), Error);
  const Direction d(P({4, -6}));
  EXPECT_EQ(Direction(d.coords()), d);  // idempotent
}

TEST(Direction, RescalingMapsToSameDirection) {
  std::mt19937_64 rng(3);
  for (int i = 0; i < 200; ++i) {
    const Point v = oracle::random_nonzero_vector(rng, 3);
    Rational c = oracle::random_rational(rng);
    if (c.is_zero()) c = Rational(-7, 3);
    EXPECT_EQ(Direction(v), Direction(c * v));
  }
}

TEST(LineRelation, KnownAndTrivialCases) {
  auto rel = line_relation<Rational>(P({0, 0}), Direction(P({0, 1})), P({1, 0}), Direction(P({-1, 1})));
  // Same lines through the raw representatives (−1, 1) to pin r and s.
  auto raw = line_relation<Rational>(std::span<const Rational>(P({0, 0})), std::span<const Rational>(P({0, 1})),
                                     std::span<const Rational>(P({1, 0})), std::span<const Rational>(P({-1, 1})));
  ASSERT_TRUE(std::holds_alternative<Intersecting<Rational>>(rel));
  const auto& hit = std::get<Intersecting<Rational>>(raw);
  EXPECT_EQ(hit.point, P({0, 1}));
  EXPECT_EQ(hit.r, Rational(1));
  EXPECT_EQ(hit.s, Rational(1));

  EXPECT_TRUE(std::holds_alternative<Skew>(
      line_relation<Rational>(P({0, 0, 0}), Direction(P({1, 0, 0})), P({0, 0, 1}), Direction(P({0, 1, 0})))));
  EXPECT_TRUE(std::holds_alternative<Identical>(
      line_relation<Rational>(P({0, 0}), Direction(P({1, 0})), P({3, 0}), Direction(P({1, 0})))));
  EXPECT_TRUE(std::holds_alternative<ParallelDistinct>(
      line_relation<Rational>(P({0, 0}), Direction(P({1, 0})), P({3, 1}), Direction(P({1, 0})))));
  EXPECT_THROW(line_relation<Rational>(P({0, 0}), Direction(P({1, 0})), P({0, 0, 0}), Direction(P({1, 0}))), Error);
}

TEST(Intersect, KnownValues) {
  EXPECT_EQ(*intersect<Rational>(P({0, 0}), P({1, 0}), Direction(P({1, 0})), Direction(P({0, 1}))), P({1, 0}));
  const Point third{Rational(1, 3), Rational(0), Rational(0)};
  EXPECT_EQ(*intersect<Rational>(P({0, 0, 0}), P({1, 1, 1}), Direction(P({1, 0, 0})), Direction(P({2, 3, 3}))),
            third);
  EXPECT_EQ(*intersect<Rational>(P({2, 5}), P({2, 5}), Direction(P({1, 0})), Direction(P({1, 7}))), P({2, 5}));
}

TEST(IntersectComplex, KnownValues) {
  EXPECT_EQ(intersect_complex(P({0, 0}), P({1, 0}), Direction(P({0, 1})), Direction(P({-1, 1}))), P({0, 1}));
  EXPECT_EQ(intersect_complex(P({0, 0}), P({1, 0}), Direction(P({1, 0})), Direction(P({0, 1}))), P({1, 0}));
  EXPECT_EQ(intersect_complex(P({2, 0}), P({2, 0}), Direction(P({1, 0})), Direction(P({0, 1}))), P({2, 0}));
  EXPECT_THROW(intersect_complex(P({0, 0}), P({1, 0}), Direction(P({1, 1})), Direction(P({2, 2}))), Error);
}

// An instance with a guaranteed intersection: both lines pass through x.
struct Instance {
  Point p, q, alpha, beta;
};

Instance meeting_instance(std::mt19937_64& rng, std::size_t n) {
  for (;;) {
    const Point x = oracle::random_vector(rng, n);
    const Point a = oracle::random_nonzero_vector(rng, n);
    const Point b = oracle::random_nonzero_vector(rng, n);
    if (Direction(a) == Direction(b)) continue;
    const Rational r = oracle::random_rational(rng), s = oracle::random_rational(rng);
    return {x - r * a, x - s * b, a, b};
  }
}

Instance any_instance(std::mt19937_64& rng, std::size_t n) {
  if (rng() % 2 == 0) return meeting_instance(rng, n);
  return {oracle::random_vector(rng, n), oracle::random_vector(rng, n), oracle::random_nonzero_vector(rng, n),
          oracle::random_nonzero_vector(rng, n)};
}

std::optional<Point> X(const Point& p, const Point& q, const Point& a, const Point& b) {
  return intersect<Rational>(std::span<const Rational>(p), std::span<const Rational>(q), std::span<const Rational>(a),
                             std::span<const Rational>(b));
}

class IntersectionIdentities : public ::testing::TestWithParam<std::size_t> {};

TEST_P(IntersectionIdentities, AgreesWithNormalEquationOracle) {
  std::mt19937_64 rng(100 + GetParam());
  for (int i = 0; i < 1000; ++i) {
    const auto in = any_instance(rng, GetParam());
    const auto mine = X(in.p, in.q, in.alpha, in.beta);
    auto theirs = oracle::intersect(in.p, in.q, in.alpha, in.beta);
    ASSERT_EQ(mine.has_value(), theirs.has_value());
    if (mine) {
      ASSERT_EQ(*mine, *theirs);
    }
  }
}

TEST_P(IntersectionIdentities, Symmetry) {
  std::mt19937_64 rng(200 + GetParam());
  for (int i = 0; i < 1000; ++i) {
    const auto in = any_instance(rng, GetParam());
    const auto a = X(in.p, in.q, in.alpha, in.beta);
    const auto b = X(in.q, in.p, in.beta, in.alpha);
    ASSERT_EQ(a, b);
  }
}

TEST_P(IntersectionIdentities, Sum) {
  std::mt19937_64 rng(300 + GetParam());
  std::size_t both = 0;
  for (int i = 0; i < 1000; ++i) {
    // [[q,p]]_{α,β} also exists when the α-line through q meets the β-line through p.
    auto in = meeting_instance(rng, GetParam());
    const auto a = X(in.p, in.q, in.alpha, in.beta);
    const auto b = X(in.q, in.p, in.alpha, in.beta);
    if (!a || !b) continue;
    ++both;
    ASSERT_EQ(*a + *b, in.p + in.q);
  }
  EXPECT_GT(both, 0u);
}

TEST_P(IntersectionIdentities, Translation) {
  std::mt19937_64 rng(400 + GetParam());
  for (int i = 0; i < 1000; ++i) {
    const auto in = any_instance(rng, GetParam());
    const Point a = oracle::random_vector(rng, GetParam());
    const auto base = X(in.p, in.q, in.alpha, in.beta);
    const auto moved = X(a + in.p, a + in.q, in.alpha, in.beta);
    ASSERT_EQ(base.has_value(), moved.has_value());
    if (base) {
      ASSERT_EQ(*moved, a + *base);
    }
  }
}

TEST_P(IntersectionIdentities, Scaling) {
  std::mt19937_64 rng(500 + GetParam());
  for (int i = 0; i < 1000; ++i) {
    const auto in = any_instance(rng, GetParam());
    Rational k = oracle::random_rational(rng);
    const auto base = X(in.p, in.q, in.alpha, in.beta);
    const auto scaled = X(k * in.p, k * in.q, in.alpha, in.beta);
    if (k.is_zero()) {
      ASSERT_TRUE(scaled.has_value() || !base);  // both lines pass through 0
      continue;
    }
    ASSERT_EQ(base.has_value(), scaled.has_value());
    if (base) {
      ASSERT_EQ(*scaled, k * *base);
    }
  }
}

TEST_P(IntersectionIdentities, DirectionRescaling) {
  std::mt19937_64 rng(600 + GetParam());
  for (int i = 0; i < 1000; ++i) {
    const auto in = any_instance(rng, GetParam());
    Rational c = oracle::random_rational(rng), d = oracle::random_rational(rng);
    if (c.is_zero()) c = Rational(3);
    if (d.is_zero()) d = Rational(-2);
    ASSERT_EQ(X(in.p, in.q, in.alpha, in.beta), X(in.p, in.q, c * in.alpha, d * in.beta));
  }
}

INSTANTIATE_TEST_SUITE_P(Dimensions, IntersectionIdentities, ::testing::Values(2, 3, 4));

TEST(IntersectComplex, EquivalentToGenericSolver) {
  std::mt19937_64 rng(77);
  std::size_t undefined = 0;
  for (int i = 0; i < 1000; ++i) {
    const auto in = any_instance(rng, 2);
    const auto generic = X(in.p, in.q, in.alpha, in.beta);
    std::optional<Point> closed;
    try {
      closed = intersect_complex(in.p, in.q, in.alpha, in.beta);
    } catch (const Error& e) {
      ASSERT_EQ(e.code(), Errc::SameDirection);
      ++undefined;
    }
    ASSERT_EQ(generic.has_value(), closed.has_value());
    if (generic) {
      ASSERT_EQ(*generic, *closed);
    }
  }
  (void)undefined;
}

}  // namespace
