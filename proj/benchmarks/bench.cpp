#include <benchmark/benchmark.h>

#include <random>
#include <vector>

#include "hypcat/instances.hpp"
#include "hypcat/term.hpp"

using namespace hypcat;

namespace {

std::vector<Label> ab() { return {intern("a"), intern("b")}; }

/// Pre-draws composable cospan pairs so the timed loop measures only the
/// pushout itself.
std::vector<std::pair<Cospan, Cospan>> composable_pairs(int n, int size) {
  std::mt19937 rng(1);
  std::vector<std::pair<Cospan, Cospan>> out;
  for (int i = 0; i < n; ++i) {
    LabeledFinSet x = random_object(ab(), rng, size);
    LabeledFinSet y = random_object(ab(), rng, size);
    LabeledFinSet z = random_object(ab(), rng, size);
    out.emplace_back(random_cospan(x, y, ab(), rng),
                     random_cospan(y, z, ab(), rng));
  }
  return out;
}

void BM_compose(benchmark::State& state) {
  auto pairs = composable_pairs(64, static_cast<int>(state.range(0)));
  std::size_t i = 0;
  for (auto _ : state) {
    const auto& [a, b] = pairs[i++ % pairs.size()];
    benchmark::DoNotOptimize(compose(a, b));
  }
}
BENCHMARK(BM_compose)->Arg(4)->Arg(16)->Arg(64);

void BM_canonicalize(benchmark::State& state) {
  std::mt19937 rng(2);
  std::vector<Cospan> raws;
  for (int i = 0; i < 64; ++i) {
    LabeledFinSet x = random_object(ab(), rng, static_cast<int>(state.range(0)));
    LabeledFinSet y = random_object(ab(), rng, static_cast<int>(state.range(0)));
    raws.push_back(compose_raw(random_cospan(x, y, ab(), rng),
                               random_cospan(y, x, ab(), rng)));
  }
  std::size_t i = 0;
  for (auto _ : state) {
    benchmark::DoNotOptimize(canonicalize(raws[i++ % raws.size()]));
  }
}
BENCHMARK(BM_canonicalize)->Arg(4)->Arg(16)->Arg(64);

void BM_decompose_eval(benchmark::State& state) {
  std::mt19937 rng(3);
  CospanInstance inst(ab());
  std::vector<Cospan> cs;
  for (int i = 0; i < 32; ++i) {
    LabeledFinSet x = random_object(ab(), rng, static_cast<int>(state.range(0)));
    LabeledFinSet y = random_object(ab(), rng, static_cast<int>(state.range(0)));
    cs.push_back(random_cospan(x, y, ab(), rng));
  }
  std::size_t i = 0;
  for (auto _ : state) {
    const Cospan& c = cs[i++ % cs.size()];
    benchmark::DoNotOptimize(eval_term(decompose(c), inst));
  }
}
BENCHMARK(BM_decompose_eval)->Arg(4)->Arg(8);

void BM_linrel_compose(benchmark::State& state) {
  std::mt19937 rng(4);
  int d = static_cast<int>(state.range(0));
  std::vector<std::pair<LinRel, LinRel>> pairs;
  for (int i = 0; i < 64; ++i)
    pairs.emplace_back(linrel_random(d, d, rng), linrel_random(d, d, rng));
  std::size_t i = 0;
  for (auto _ : state) {
    const auto& [r, s] = pairs[i++ % pairs.size()];
    benchmark::DoNotOptimize(linrel_compose(r, s));
  }
}
BENCHMARK(BM_linrel_compose)->Arg(2)->Arg(4)->Arg(8);

}  // namespace

BENCHMARK_MAIN();
