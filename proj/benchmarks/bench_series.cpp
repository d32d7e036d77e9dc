#include <benchmark/benchmark.h>

#include "slicereg/rng.hpp"
#include "slicereg/series.hpp"

using namespace slicereg;

namespace {

PowerSeries random_series(Rng& rng, int deg) {
  std::vector<Quaternion> c(deg + 1);
  for (auto& q : c) q = rng.quaternion(-1, 1);
  return PowerSeries(std::move(c));
}

void bm_star_mul(benchmark::State& state) {
  Rng rng(99);
  int deg = static_cast<int>(state.range(0));
  PowerSeries f = random_series(rng, deg), g = random_series(rng, deg);
  for (auto _ : state) benchmark::DoNotOptimize(star_mul(f, g, 2 * deg));
}

void bm_star_inverse(benchmark::State& state) {
  Rng rng(100);
  int deg = static_cast<int>(state.range(0));
  PowerSeries f = random_series(rng, deg);
  std::vector<Quaternion> c = f.coeffs();
  c[0] = Quaternion::one();
  PowerSeries g(std::move(c));
  for (auto _ : state) benchmark::DoNotOptimize(star_inverse(g));
}

void bm_compose_inverse(benchmark::State& state) {
  Rng rng(101);
  int deg = static_cast<int>(state.range(0));
  std::vector<Quaternion> c(deg + 1);
  c[1] = Quaternion::one();
  for (size_t n = 2; n < c.size(); ++n) c[n] = rng.quaternion(-0.5, 0.5);
  PowerSeries g(std::move(c));
  for (auto _ : state) benchmark::DoNotOptimize(compose_inverse(g, InverseSide::right));
}

}  // namespace

BENCHMARK(bm_star_mul)->Arg(16)->Arg(64)->Arg(256);
BENCHMARK(bm_star_inverse)->Arg(16)->Arg(64)->Arg(256);
BENCHMARK(bm_compose_inverse)->Arg(8)->Arg(16)->Arg(32);
