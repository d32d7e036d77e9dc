#include <benchmark/benchmark.h>

#include "slicereg/rng.hpp"
#include "slicereg/zeros.hpp"

using namespace slicereg;

namespace {

PowerSeries build_poly(Rng& rng, int degree) {
  PowerSeries P = PowerSeries::constant(Quaternion::one());
  int deg = 0;
  while (deg < degree) {
    double x = rng.uniform(-2, 2), y = rng.uniform(0.5, 2.5);
    if (deg + 2 <= degree && rng.uniform() < 0.5) {
      P = star_mul(P, PowerSeries({Quaternion{x * x + y * y, 0, 0, 0}, Quaternion{-2 * x, 0, 0, 0},
                                   Quaternion::one()}));
      deg += 2;
    } else {
      Quaternion pt = Quaternion{x, 0, 0, 0} + y * rng.unit().value();
      P = star_mul(P, PowerSeries({-pt, Quaternion::one()}));
      deg += 1;
    }
  }
  return P;
}

void bm_find_zeros(benchmark::State& state) {
  Rng rng(7);
  PowerSeries P = build_poly(rng, static_cast<int>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(find_zeros(P));
}

}  // namespace

BENCHMARK(bm_find_zeros)->Arg(4)->Arg(8)->Arg(12);
