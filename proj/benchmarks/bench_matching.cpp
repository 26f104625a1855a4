/*
Copyright 2026 The ssgm Authors

Licensed under the Apache License, Version 2.0 (the "License");
you may not use this file except in compliance with the License.
You may obtain a copy of the License at

    http://www.apache.org/licenses/LICENSE-2.0

Unless required by applicable law or agreed to in writing, software
distributed under the License is distributed on an "AS IS" BASIS,
WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
See the License for the specific language governing permissions and
limitations under the License.
*/

#include <benchmark/benchmark.h>

#include <random>

#include "ssgm/ssgm.hpp"

namespace {

using namespace ssgm;

struct Pair {
  GrayImage left;
  GrayImage right;
};

Pair make_pair(int width, int height, int shift) {
  std::mt19937 rng(1234);
  std::uniform_int_distribution<int> px(0, 255);
  Pair p{GrayImage(width, height), GrayImage(width, height)};
  for (auto& v : p.left.data) v = static_cast<std::uint8_t>(px(rng));
  for (int r = 0; r < height; ++r) {
    for (int c = 0; c < width; ++c) {
      p.right.at(r, c) = c + shift < width ? p.left.at(r, c + shift) : static_cast<std::uint8_t>(px(rng));
    }
  }
  return p;
}

void BM_Census(benchmark::State& state) {
  const Pair p = make_pair(640, 480, 0);
  for (auto _ : state) {
    benchmark::DoNotOptimize(census_transform(p.left, 7));
  }
  state.SetItemsProcessed(state.iterations() * 640 * 480);
}
BENCHMARK(BM_Census)->Unit(benchmark::kMillisecond);

void BM_MatchFrame(benchmark::State& state) {
  const int D = static_cast<int>(state.range(0));
  const Pair p = make_pair(640, 480, D / 3);
  RunConfig cfg;
  cfg.disparity_range = D;
  StreamingMatcher m(cfg);
  for (auto _ : state) {
    benchmark::DoNotOptimize(m.match(p.left, p.right));
  }
  state.SetItemsProcessed(state.iterations() * 640 * 480);
}
BENCHMARK(BM_MatchFrame)->Arg(32)->Arg(64)->Arg(92)->Unit(benchmark::kMillisecond);

void BM_Striped(benchmark::State& state) {
  const Pair p = make_pair(640, 480, 30);
  RunConfig cfg;
  cfg.sections = static_cast<int>(state.range(0));
  for (auto _ : state) {
    benchmark::DoNotOptimize(match_frame_striped(p.left, p.right, cfg));
  }
  state.SetItemsProcessed(state.iterations() * 640 * 480);
}
BENCHMARK(BM_Striped)->Arg(1)->Arg(5)->Unit(benchmark::kMillisecond)->UseRealTime();

void BM_OracleMgm(benchmark::State& state) {
  const Pair p = make_pair(160, 120, 10);
  RunConfig cfg;
  cfg.disparity_range = 32;
  for (auto _ : state) {
    benchmark::DoNotOptimize(oracle::mgm_full(p.left, p.right, cfg));
  }
}
BENCHMARK(BM_OracleMgm)->Unit(benchmark::kMillisecond);

void BM_Remap(benchmark::State& state) {
  const Pair p = make_pair(640, 480, 0);
  RemapTable t = RemapTable::identity(640, 480);
  for (auto& c : t.coords) c.x = static_cast<std::uint16_t>(c.x > 8 ? c.x - 7 : c.x);
  for (auto _ : state) {
    benchmark::DoNotOptimize(remap(p.left, t));
  }
}
BENCHMARK(BM_Remap)->Unit(benchmark::kMillisecond);

} // namespace

BENCHMARK_MAIN();
