#include <benchmark/benchmark.h>

#include "slicereg/integral.hpp"

using namespace slicereg;

namespace {

void bm_cauchy_eval(benchmark::State& state) {
  PowerSeries f = exp_series(64);
  Quaternion q{0.5, 0.5, 0, 0};
  ContourSpec C = ContourSpec::make(ImaginaryUnit::i(), 2.0, static_cast<int>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(cauchy_eval(f, q, 0, C));
}

void bm_borel_invert(benchmark::State& state) {
  PowerSeries f = exp_series(96);
  BorelSeries phi = borel(f);
  Quaternion q{0.4, 0, 0.3, 0};
  ContourSpec C = ContourSpec::make(ImaginaryUnit::i(), 2.0, static_cast<int>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(borel_invert(phi, q, C));
}

}  // namespace

BENCHMARK(bm_cauchy_eval)->Arg(256)->Arg(1024);
BENCHMARK(bm_borel_invert)->Arg(256)->Arg(1024);
