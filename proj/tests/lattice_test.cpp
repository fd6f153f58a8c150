#include <gtest/gtest.h>

#include <random>

#include "oracles.hpp"
#include "origami/density.hpp"
#include "origami/hnf.hpp"
#include "origami/lattice.hpp"

namespace {

using namespace origami;

Point P(std::initializer_list<long> l) {
  Point p;
  for (long x : l) p.push_back(Rational(x));
  return p;
}

const Rational h(1, 2);

std::vector<Direction> dirs(std::initializer_list<Point> l) {
  std::vector<Direction> out;
  for (const auto& p : l) out.emplace_back(p);
  return out;
}

LatticeBasis hurwitz() {
  return LatticeBasis::from_generators({P({1, 0, 0, 0}), P({0, 1, 0, 0}), P({0, 0, 1, 0}), Point{h, h, h, h}});
}

LatticeBasis lipschitz() {
  return LatticeBasis::from_generators({P({1, 0, 0, 0}), P({0, 1, 0, 0}), P({0, 0, 1, 0}), P({0, 0, 0, 1})});
}

TEST(Hnf, KnownForms) {
  const auto z2 = LatticeBasis::from_generators({P({1, 0}), P({0, 1})});
  EXPECT_EQ(z2.denominator(), Integer(1));
  EXPECT_EQ(z2.hnf(), (IntMatrix{{1, 0}, {0, 1}}));
  // 2·Hurwitz generators are the columns e1..e3 scaled by 2 and (1,1,1,1);
  // by hand: H = [[2,0,0,1],[0,2,0,1],[0,0,2,1],[0,0,0,1]].
  const auto hw = hurwitz();
  EXPECT_EQ(hw.denominator(), Integer(2));
  EXPECT_EQ(hw.hnf(), (IntMatrix{{2, 0, 0, 1}, {0, 2, 0, 1}, {0, 0, 2, 1}, {0, 0, 0, 1}}));
  EXPECT_THROW(LatticeBasis::from_generators({P({1, 0}), P({2, 0})}), Error);
  EXPECT_THROW(hermite_normal_form({{1, 2}, {2, 4}}), Error);
}

TEST(Hnf, InvariantUnderUnimodularChange) {
  std::mt19937_64 rng(9);
  for (std::size_t n = 2; n <= 4; ++n) {
    for (int trial = 0; trial < 50; ++trial) {
      std::vector<Point> g;
      for (std::size_t i = 0; i < n; ++i) g.push_back(oracle::random_vector(rng, n, 5, 3));
      if (rank<Rational>(g) < n) continue;
      // Random elementary column operations g_j += c·g_k and swaps.
      std::vector<Point> u = g;
      for (int op = 0; op < 8; ++op) {
        const std::size_t j = rng() % n, k = rng() % n;
        if (j == k) continue;
        if (rng() % 3 == 0) {
          std::swap(u[j], u[k]);
        } else {
          const Rational c(static_cast<long>(rng() % 7) - 3);
          u[j] = u[j] + c * u[k];
        }
      }
      if (rng() % 2) u[0] = Rational(-1) * u[0];
      const auto a = LatticeBasis::from_generators(g);
      const auto b = LatticeBasis::from_generators(u);
      ASSERT_EQ(a, b);
      // Redundant generators do not change the lattice either.
      std::vector<Point> more = u;
      more.push_back(u[0] + u[1]);
      ASSERT_EQ(LatticeBasis::span_of(more, n), a);
      // H is upper triangular with reduced off-diagonal entries.
      const auto& H = a.hnf();
      for (std::size_t i = 0; i < n; ++i) {
        ASSERT_GT(H[i][i], 0);
        for (std::size_t j = 0; j < i; ++j) ASSERT_EQ(H[i][j], 0);
        for (std::size_t j = i + 1; j < n; ++j) {
          ASSERT_GE(H[i][j], 0);
          ASSERT_LT(H[i][j], H[i][i]);
        }
      }
      // Generators have unit coordinates.
      for (std::size_t i = 0; i < n; ++i) {
        auto c = member(a, a.generators()[i]);
        ASSERT_TRUE(c);
        for (std::size_t j = 0; j < n; ++j) ASSERT_EQ((*c)[j], Integer(i == j ? 1 : 0));
      }
    }
  }
}

TEST(Lattice, Membership) {
  const auto z2 = LatticeBasis::from_generators({P({1, 0}), P({0, 1})});
  EXPECT_EQ(*member(z2, P({2, 1})), (std::vector<Integer>{2, 1}));
  EXPECT_FALSE(member(z2, Point{Rational(1, 3), Rational(0)}));
  const auto hw = hurwitz();
  EXPECT_EQ(*member(hw, Point{h, h, h, h}), (std::vector<Integer>{0, 0, 0, 1}));
  EXPECT_TRUE(hw.contains(Point{h, -h, h, -h}));
  EXPECT_FALSE(hw.contains(Point{h, h, 0, 0}));
}

TEST(Lattice, HurwitzIsIndexTwoOverLipschitz) {
  EXPECT_TRUE(hurwitz().contains_lattice(lipschitz()));
  EXPECT_FALSE(lipschitz().contains_lattice(hurwitz()));
  EXPECT_EQ(*hurwitz().index_of(lipschitz()), Integer(2));
  EXPECT_EQ(hurwitz().covolume(), Rational(1, 2));
}

TEST(Lattice, PointsInBox) {
  const auto z2 = LatticeBasis::from_generators({P({1, 0}), P({1, 2})});
  const auto pts = z2.points_in_box(Box::cube(2, Rational(-1), Rational(1)));
  // Lattice {(a, 2b)} ∪ … : x + y even? Members are (a + b, 2b).
  std::size_t brute = 0;
  for (long x = -1; x <= 1; ++x) {
    for (long y = -1; y <= 1; ++y) brute += z2.contains(P({x, y})) ? 1 : 0;
  }
  EXPECT_EQ(pts.size(), brute);
  EXPECT_EQ(hurwitz().points_in_box(Box::cube(4, Rational(-1), Rational(1))).size(), 81u + 16u);
}

TEST(Synthesis, TauFromPair) {
  EXPECT_EQ(*tau_from_pair(Direction(P({0, 1})), Direction(P({-1, 1}))), P({0, 1}));
  EXPECT_EQ(*tau_from_pair(Direction(P({-1, 1})), Direction(P({0, 1}))), P({1, -1}));
  EXPECT_EQ(*tau_from_pair(Direction(P({1, 0})), Direction(P({0, 1}))), P({1, 0}));
}

TEST(Synthesis, AnglesForLattices) {
  const auto g = angles_for_lattice(LatticeBasis::from_generators({P({1, 0}), P({0, 1})}));
  EXPECT_EQ(g, dirs({P({1, 0}), P({0, 1}), P({-1, 1})}));
  const auto l = angles_for_lattice(lipschitz());
  EXPECT_EQ(l, dirs({P({1, 0, 0, 0}), P({0, 1, 0, 0}), P({-1, 1, 0, 0}), P({0, 0, 1, 0}), P({-1, 0, 1, 0}),
                     P({0, 0, 0, 1}), P({-1, 0, 0, 1})}));
  const auto hw = angles_for_lattice(hurwitz());
  EXPECT_EQ(hw, dirs({P({1, 0, 0, 0}), P({0, 1, 0, 0}), P({-1, 1, 0, 0}), P({0, 0, 1, 0}), P({-1, 0, 1, 0}),
                      P({1, 1, 1, 1}), P({-1, 1, 1, 1})}));
  // 1 is not primitive in 2ℤ × ℤ.
  EXPECT_THROW(angles_for_lattice(LatticeBasis::from_generators({P({2, 0}), P({0, 1})})), Error);
}

TEST(Synthesis, ClosureTables) {
  const auto z2 = LatticeBasis::from_generators({P({1, 0}), P({0, 1})});
  const auto g = angles_for_lattice(z2);
  const auto rep = verify_closure_table(g, z2, 3);
  EXPECT_TRUE(rep.ok());
  EXPECT_EQ(rep.checks, 49u * 6u);

  // Independent loop over the same cases.
  std::size_t defined = 0;
  for (long a = -3; a <= 3; ++a) {
    for (long b = -3; b <= 3; ++b) {
      for (std::size_t x = 0; x < 3; ++x) {
        for (std::size_t y = 0; y < 3; ++y) {
          if (x == y) continue;
          auto hit = oracle::intersect(P({0, 0}), P({a, b}), g[x].coords(), g[y].coords());
          if (!hit) continue;
          ++defined;
          EXPECT_TRUE((*hit)[0].is_integer() && (*hit)[1].is_integer());
        }
      }
    }
  }
  EXPECT_EQ(rep.defined, defined);
}

TEST(Synthesis, ClosureTableRows) {
  // Row "1, αᵢ": [[0, a₀ + aᵢτᵢ]]_{1,αᵢ} = a₀; row "αᵢ, αᵢ′": (a₀ + aᵢ)τᵢ.
  const Direction one(P({1, 0})), alpha(P({0, 1})), alpha_p(P({-1, 1}));
  for (long a0 = -3; a0 <= 3; ++a0) {
    for (long a1 = -3; a1 <= 3; ++a1) {
      const Point q = P({a0, a1});
      EXPECT_EQ(*intersect<Rational>(P({0, 0}), q, one, alpha), P({a0, 0}));
      EXPECT_EQ(*intersect<Rational>(P({0, 0}), q, alpha, alpha_p), P({0, a0 + a1}));
    }
  }
}

TEST(StructuralScan, CubeAndLipschitz) {
  const auto cube = dirs({P({1, 0, 0}), P({0, 1, 0}), P({1, 1, 0}), P({0, 0, 1}), P({1, 0, 1})});
  auto scan = structural_scan(cube);
  ASSERT_TRUE(std::holds_alternative<PairingReport>(scan));
  const auto& rep = std::get<PairingReport>(scan);
  ASSERT_EQ(rep.pairs.size(), 2u);
  EXPECT_EQ(cube[rep.pairs[0].alpha].coords(), P({0, 1, 0}));
  EXPECT_EQ(cube[rep.pairs[0].alpha_prime].coords(), P({1, 1, 0}));
  EXPECT_EQ(cube[rep.pairs[1].alpha].coords(), P({0, 0, 1}));
  EXPECT_EQ(cube[rep.pairs[1].alpha_prime].coords(), P({1, 0, 1}));

  const auto lip = angles_for_lattice(lipschitz());
  auto ls = structural_scan(lip);
  ASSERT_TRUE(std::holds_alternative<PairingReport>(ls));
  EXPECT_EQ(std::get<PairingReport>(ls).pairs.size(), 3u);
  EXPECT_EQ(LatticeBasis::from_generators(std::get<PairingReport>(ls).xi_basis), lipschitz());

  auto fail = structural_scan(dirs({P({1, 0}), P({0, 1})}));
  EXPECT_TRUE(std::holds_alternative<ScanFailure>(fail));
}

TEST(Verdict, GaussianLipschitzHurwitzAndDense) {
  GenerationConfig cfg;
  cfg.max_depth = 4;
  auto g = lattice_hypothesis_test(dirs({P({1, 0}), P({0, 1}), P({1, 1})}), cfg);
  ASSERT_TRUE(std::holds_alternative<LatticeVerdict>(g));
  EXPECT_EQ(std::get<LatticeVerdict>(g).basis, LatticeBasis::from_generators({P({1, 0}), P({0, 1})}));

  const std::vector<Direction> nine = dirs({P({1, 0, 0, 0}), P({0, 1, 0, 0}), P({-1, 1, 0, 0}), P({0, 0, 1, 0}),
                                            P({-1, 0, 1, 0}), P({0, 0, 0, 1}), P({-1, 0, 0, 1}),
                                            P({1, 1, 1, 1}), P({-1, 1, 1, 1})});
  GenerationConfig c4;
  c4.max_depth = 5;
  c4.retention_box = Box::cube(4, Rational(-1), Rational(1));
  auto v = lattice_hypothesis_test(nine, c4);
  ASSERT_TRUE(std::holds_alternative<LatticeVerdict>(v));
  EXPECT_EQ(std::get<LatticeVerdict>(v).basis, hurwitz());
  EXPECT_TRUE(std::get<LatticeVerdict>(v).refined);

  auto dense = lattice_hypothesis_test(
      dirs({P({1, 0, 0, 0}), P({0, 1, 0, 0}), P({-2, 1, 0, 0}), P({-1, 2, 0, 0}), P({0, 0, 1, 0}),
            P({-1, 0, 1, 0}), P({0, 0, 0, 1}), P({-1, 0, 0, 1})}),
      c4);
  ASSERT_TRUE(std::holds_alternative<DenseVerdict>(dense));
  EXPECT_EQ(std::get<DenseVerdict>(dense).indices, (std::vector<std::size_t>{0, 1, 2, 3}));

  auto thin = lattice_hypothesis_test(dirs({P({1, 0, 0}), P({0, 1, 0})}), cfg);
  ASSERT_TRUE(std::holds_alternative<UnknownVerdict>(thin));
  EXPECT_EQ(std::get<UnknownVerdict>(thin).diagnostics.rfind("span deficient", 0), 0u);
}

TEST(Density, CoplanarQuadrupleAgreesWithGramOracle) {
  std::mt19937_64 rng(21);
  for (int trial = 0; trial < 200; ++trial) {
    const std::size_t m = 4 + rng() % 5;  // 4..8
    std::vector<Direction> d;
    while (d.size() < m) {
      // Small entries in a few coordinates make coplanar quadruples common.
      Point v(4);
      for (std::size_t i = 0; i < 4; ++i) v[i] = Rational(static_cast<long>(rng() % 3) - 1) * Rational(i < 2 || rng() % 3 == 0 ? 1 : 0);
      if (is_zero_vector<Rational>(v)) continue;
      Direction dir(v);
      if (std::find(d.begin(), d.end(), dir) == d.end()) d.push_back(dir);
    }
    bool any = false;
    for (std::size_t a = 0; a < m && !any; ++a)
      for (std::size_t b = a + 1; b < m && !any; ++b)
        for (std::size_t c = b + 1; c < m && !any; ++c)
          for (std::size_t e = c + 1; e < m && !any; ++e)
            any = oracle::coplanar4({d[a].coords(), d[b].coords(), d[c].coords(), d[e].coords()});
    const auto found = coplanar_quadruple(d);
    ASSERT_EQ(found.indices.has_value(), any);
    if (found.indices) {
      const auto& q = *found.indices;
      ASSERT_TRUE(oracle::coplanar4({d[q[0]].coords(), d[q[1]].coords(), d[q[2]].coords(), d[q[3]].coords()}));
      std::vector<Direction> rev(d.rbegin(), d.rend());
      ASSERT_TRUE(coplanar_quadruple(rev).indices.has_value());  // order independent
    }
  }
  EXPECT_FALSE(coplanar_quadruple(angles_for_lattice(lipschitz())).indices);
  EXPECT_FALSE(coplanar_quadruple(dirs({P({1, 0}), P({0, 1}), P({1, 1})})).indices);
}

TEST(Density, GaussianSegmentIsInconclusive) {
  GenerationConfig cfg;
  cfg.max_depth = 4;
  const auto s = generate(dirs({P({1, 0}), P({0, 1}), P({1, 1})}), cfg);
  const auto probe = density_probe(s, P({0, 0}), P({1, 0}));
  EXPECT_FALSE(probe.shrinking());
  for (const auto& g : probe.per_depth) EXPECT_EQ(g.max_gap, Rational(1));
}

TEST(Density, CubeWithThirdDirectionShrinks) {
  const auto u = dirs({P({1, 0, 0}), P({0, 1, 0}), P({0, 0, 1}), P({1, 1, 0}), P({1, 0, 1}), P({2, 3, 3})});
  GenerationConfig cfg;
  cfg.max_depth = 5;
  cfg.retention_box = Box::cube(3, Rational(-1, 2), Rational(3, 2));
  const auto s = generate(u, cfg);
  const Point third{Rational(1, 3), Rational(0), Rational(0)};
  ASSERT_TRUE(s.depth_of(third));
  EXPECT_LE(*s.depth_of(third), 3u);
  const auto probe = density_probe(s, P({0, 0, 0}), P({1, 0, 0}));
  // Pinned from oracle runs of the generator (boxes [−1/2,3/2]³ and [−1,2]³).
  const std::vector<Rational> gaps{Rational(1), Rational(1), Rational(1), Rational(1, 3), Rational(1, 3), Rational(1, 9)};
  ASSERT_EQ(probe.per_depth.size(), gaps.size());
  for (std::size_t k = 0; k < gaps.size(); ++k) EXPECT_EQ(probe.per_depth[k].max_gap, gaps[k]) << k;
  EXPECT_EQ(probe.reported_depths, (std::vector<std::size_t>{0, 3, 5}));
  EXPECT_TRUE(probe.shrinking());
  EXPECT_EQ(probe.run_length, 2u);
}

}  // namespace
