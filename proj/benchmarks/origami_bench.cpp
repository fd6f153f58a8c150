// Throughput of generation, lattice reduction and quaternion tables.

#include <benchmark/benchmark.h>

#include "origami/construction.hpp"
#include "origami/lattice.hpp"
#include "origami/quaternion.hpp"

namespace {

using namespace origami;

Point P(std::initializer_list<long> l) {
  Point p;
  for (long x : l) p.push_back(Rational(x));
  return p;
}

std::vector<Direction> dirs(std::initializer_list<Point> l) {
  std::vector<Direction> out;
  for (const auto& p : l) out.emplace_back(p);
  return out;
}

void BM_GenerateGaussian(benchmark::State& state) {
  const auto u = dirs({P({1, 0}), P({0, 1}), P({1, 1})});
  GenerationConfig cfg;
  cfg.max_depth = static_cast<std::size_t>(state.range(0));
  cfg.retention_box = Box::cube(2, Rational(-4), Rational(4));
  std::size_t points = 0;
  for (auto _ : state) {
    const auto s = generate(u, cfg);
    points = s.points().size();
    benchmark::DoNotOptimize(points);
  }
  state.counters["points"] = static_cast<double>(points);
}
BENCHMARK(BM_GenerateGaussian)->DenseRange(2, 5)->Unit(benchmark::kMillisecond);

void BM_GenerateLipschitz(benchmark::State& state) {
  const auto u = dirs({P({1, 0, 0, 0}), P({0, 1, 0, 0}), P({-1, 1, 0, 0}), P({0, 0, 1, 0}), P({-1, 0, 1, 0}),
                       P({0, 0, 0, 1}), P({-1, 0, 0, 1})});
  GenerationConfig cfg;
  cfg.max_depth = static_cast<std::size_t>(state.range(0));
  cfg.retention_box = Box::cube(4, Rational(-1), Rational(1));
  for (auto _ : state) benchmark::DoNotOptimize(generate(u, cfg).points().size());
}
BENCHMARK(BM_GenerateLipschitz)->DenseRange(2, 4)->Unit(benchmark::kMillisecond);

void BM_LatticeSpanOf(benchmark::State& state) {
  const Rational h(1, 2);
  std::vector<Point> g{P({1, 0, 0, 0}), P({0, 1, 0, 0}), P({0, 0, 1, 0}), P({0, 0, 0, 1}), Point{h, h, h, h},
                       Point{-h, h, h, h}, P({3, -2, 5, 7}), Point{Rational(5, 2), h, -h, Rational(3, 2)}};
  for (auto _ : state) benchmark::DoNotOptimize(LatticeBasis::span_of(g, 4));
}
BENCHMARK(BM_LatticeSpanOf);

void BM_OrderTable(benchmark::State& state) {
  const auto u = state.range(0) == 0 ? lipschitz_angles() : hurwitz_angles();
  for (auto _ : state) benchmark::DoNotOptimize(order_table(u));
}
BENCHMARK(BM_OrderTable)->Arg(0)->Arg(1);

}  // namespace

BENCHMARK_MAIN();
