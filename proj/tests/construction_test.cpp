#include <gtest/gtest.h>

#include <algorithm>
#include <set>

#include "oracles.hpp"
#include "origami/construction.hpp"
#include "origami/lattice.hpp"

namespace {

using namespace origami;

Point P(std::initializer_list<long> l) {
  Point p;
  for (long x : l) p.push_back(Rational(x));
  return p;
}

std::vector<Direction> dirs(const std::vector<Point>& l) {
  std::vector<Direction> out;
  for (const auto& p : l) out.emplace_back(p);
  return out;
}

std::set<Point> as_set(std::span<const Point> s) { return {s.begin(), s.end()}; }

const std::vector<Direction> kGauss = dirs({P({1, 0}), P({0, 1}), P({1, 1})});

TEST(Generate, GaussianDepths) {
  GenerationConfig cfg;
  cfg.max_depth = 2;
  const auto s = generate(kGauss, cfg);
  EXPECT_EQ(as_set(s.points_at_depth(0)), (std::set<Point>{P({0, 0}), P({1, 0})}));
  EXPECT_EQ(as_set(s.points_at_depth(1)), (std::set<Point>{P({0, 0}), P({1, 0}), P({1, 1}), P({0, -1})}));
  EXPECT_EQ(as_set(s.points_at_depth(2)), (std::set<Point>{P({0, 0}), P({1, 0}), P({1, 1}), P({0, -1}), P({0, 1}),
                                                           P({2, 1}), P({-1, -1}), P({1, -1})}));
  EXPECT_EQ(s.depth_of(P({2, 1})), 2u);
  EXPECT_THROW(s.points_at_depth(3), Error);
}

TEST(Generate, MatchesBruteForceOracle) {
  const std::vector<std::vector<Point>> sets{
      {P({1, 0}), P({0, 1}), P({1, 1})},
      {P({1, 0}), P({0, 1}), P({-1, 1})},
      {P({1, 0}), P({1, 2}), P({-1, 1})},
      {P({1, 0, 0}), P({0, 1, 0}), P({0, 0, 1}), P({1, 1, 0}), P({1, 0, 1})},
  };
  for (const auto& raw : sets) {
    std::vector<Direction> d;
    for (const auto& v : raw) d.emplace_back(v);
    GenerationConfig cfg;
    cfg.max_depth = raw.front().size() == 2 ? 3 : 2;
    const auto s = generate(d, cfg);
    const auto levels = oracle::generate(raw, cfg.max_depth);
    for (std::size_t k = 0; k <= cfg.max_depth; ++k) {
      EXPECT_EQ(as_set(s.points_at_depth(k)), levels[k]) << "depth " << k;
    }
  }
}

TEST(Generate, GaussianPointsAreGaussianIntegers) {
  GenerationConfig cfg;
  cfg.max_depth = 4;
  const auto s = generate(kGauss, cfg);
  const auto z2 = LatticeBasis::from_generators({P({1, 0}), P({0, 1})});
  for (const auto& p : s.points()) EXPECT_TRUE(z2.contains(p)) << format_point<Rational>(p);
}

TEST(Generate, CubeExampleDepthsMatchBruteForce) {
  const std::vector<Point> raw{P({1, 0, 0}), P({0, 1, 0}), P({0, 0, 1}), P({1, 1, 0}), P({1, 0, 1})};
  GenerationConfig cfg;
  cfg.max_depth = 3;
  const auto s = generate(dirs(raw), cfg);
  const auto expected = oracle::generate(raw, 3);
  for (std::size_t k = 0; k <= 3; ++k) EXPECT_EQ(as_set(s.points_at_depth(k)), expected[k]) << "depth " << k;
  EXPECT_EQ(s.depth_of(P({1, 1, 1})), 2u);
  EXPECT_EQ(s.depth_of(P({0, 1, 1})), 3u);
}

TEST(Generate, MonotoneAndDeterministicUnderPermutation) {
  auto cube = dirs({P({1, 0, 0}), P({0, 1, 0}), P({0, 0, 1}), P({1, 1, 0}), P({1, 0, 1})});
  GenerationConfig cfg;
  cfg.max_depth = 3;
  cfg.retention_box = Box::cube(3, Rational(-1), Rational(2));
  const auto a = generate(cube, cfg);
  std::reverse(cube.begin(), cube.end());
  std::rotate(cube.begin(), cube.begin() + 2, cube.end());
  const auto b = generate(cube, cfg);
  for (std::size_t k = 0; k <= 3; ++k) {
    const auto ak = as_set(a.points_at_depth(k));
    EXPECT_EQ(ak, as_set(b.points_at_depth(k)));
    if (k > 0) {
      const auto prev = as_set(a.points_at_depth(k - 1));
      EXPECT_TRUE(std::includes(ak.begin(), ak.end(), prev.begin(), prev.end()));
    }
  }
}

TEST(Generate, MarginBoxClipsAndFlags) {
  GenerationConfig cfg;
  cfg.max_depth = 4;
  cfg.retention_box = Box::cube(2, Rational(-1), Rational(1));
  cfg.margin_factor = Rational(1);
  const auto s = generate(kGauss, cfg);
  EXPECT_TRUE(s.box_truncated());
  for (const auto& p : s.points()) EXPECT_TRUE(cfg.retention_box->contains(p));
  // Inside the window, clipping only loses points, never invents them.
  GenerationConfig open;
  open.max_depth = 4;
  const auto full = generate(kGauss, open);
  for (const auto& p : s.points()) EXPECT_TRUE(full.contains(p));
}

TEST(Generate, PointCapTruncatesDeterministically) {
  GenerationConfig cfg;
  cfg.max_depth = 5;
  cfg.max_points = 10;
  const auto a = generate(kGauss, cfg);
  const auto b = generate(kGauss, cfg);
  EXPECT_TRUE(a.cap_truncated());
  EXPECT_EQ(a.points().size(), 10u);
  EXPECT_TRUE(std::equal(a.points().begin(), a.points().end(), b.points().begin(), b.points().end()));
}

TEST(Generate, DepthZeroIsSeed) {
  GenerationConfig cfg;
  cfg.max_depth = 0;
  EXPECT_EQ(as_set(generate(kGauss, cfg).points()), (std::set<Point>{P({0, 0}), P({1, 0})}));
}

TEST(Generate, RejectsBadAngleSets) {
  GenerationConfig cfg;
  auto code = [&](const std::vector<Direction>& d) {
    try {
      (void)generate(d, cfg);
    } catch (const Error& e) {
      return e.code();
    }
    return Errc::Config;
  };
  EXPECT_EQ(code(dirs({P({1, 0})})), Errc::TooFewAngles);
  EXPECT_EQ(code(dirs({P({0, 1}), P({1, 1})})), Errc::MissingUnitDirection);
  EXPECT_EQ(code(dirs({P({1, 0}), P({0, 1}), P({0, 2})})), Errc::DuplicateAngle);
  EXPECT_EQ(code(dirs({P({1, 0}), P({0, 1, 0})})), Errc::DimensionMismatch);
}

}  // namespace
