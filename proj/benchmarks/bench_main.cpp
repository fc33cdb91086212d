#include <benchmark/benchmark.h>

#include "braidcx/braid.hpp"
#include "braidcx/poset.hpp"
#include "braidcx/subword.hpp"

using namespace braidcx;

namespace {

const CoxeterSystem& a4() {
  static const CoxeterSystem sys(CoxeterMatrix::named("A", 4));
  return sys;
}

const CoxeterSystem& h3() {
  static const CoxeterSystem sys(CoxeterMatrix::named("H", 3));
  return sys;
}

}  // namespace

static void BM_FacetsMultiCluster(benchmark::State& state) {
  const Word c{1, 2, 3, 4};
  Word q;
  for (int k = 0; k < state.range(0); ++k) q = q + c;
  q = q + c_sorting_word(a4(), c, longest_element(a4()));
  const auto d = SubwordDescriptor::plain(a4(), q, longest_element(a4()));
  for (auto _ : state) benchmark::DoNotOptimize(build(d));
  state.counters["letters"] = static_cast<double>(q.size());
}
BENCHMARK(BM_FacetsMultiCluster)->DenseRange(0, 2);

static void BM_ReducedWordsLongest(benchmark::State& state) {
  for (auto _ : state) benchmark::DoNotOptimize(reduced_words(a4(), longest_element(a4())));
}
BENCHMARK(BM_ReducedWordsLongest);

static void BM_ClassifyH3(benchmark::State& state) {
  const auto ctx = BraidContext::make(h3(), Word{3, 2}, Word{3}, 1, 2, longest_element(h3()));
  for (auto _ : state) benchmark::DoNotOptimize(classify(ctx));
}
BENCHMARK(BM_ClassifyH3);

static void BM_RhoA3(benchmark::State& state) {
  static const CoxeterSystem a3(CoxeterMatrix::named("A", 3));
  RhoOptions opts;
  opts.jobs = static_cast<unsigned>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(build_rho(a3, Word{1, 2, 3}, Word{}, longest_element(a3), opts));
}
BENCHMARK(BM_RhoA3)->Arg(1)->Arg(4)->Unit(benchmark::kMillisecond);
BENCHMARK_MAIN();
