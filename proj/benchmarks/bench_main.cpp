#include <benchmark/benchmark.h>

#include <vector>

#include "bgg/bggcomplex.hpp"
#include "bgg/envelope.hpp"
#include "bgg/verma.hpp"

namespace {

std::shared_ptr<const bgg::Algebra> fresh_algebra(bgg::Series s, int rank) {
  return std::make_shared<const bgg::Algebra>(bgg::build_root_system(s, rank));
}

// F-word followed by an E-word, forcing a full straightening pass.
void BM_NormalOrderB2(benchmark::State& state) {
  const int len = static_cast<int>(state.range(0));
  for (auto _ : state) {
    auto alg = fresh_algebra(bgg::Series::B, 2);
    std::vector<bgg::Generator> word;
    for (int i = 0; i < len; ++i) word.push_back(bgg::E(i % 4));
    for (int i = 0; i < len; ++i) word.push_back(bgg::F(i % 4));
    benchmark::DoNotOptimize(alg->normal_order(word));
  }
}
BENCHMARK(BM_NormalOrderB2)->Arg(2)->Arg(4)->Arg(6)->Unit(benchmark::kMillisecond);

void BM_SingularVectorA2(benchmark::State& state) {
  const int m = static_cast<int>(state.range(0));
  for (auto _ : state) {
    auto alg = fresh_algebra(bgg::Series::A, 2);
    bgg::VermaModule target(alg, bgg::Weight{{m, m}});
    // s_theta . lambda = lambda - (2m+2) theta, theta = (1,1) in fundamental coordinates.
    benchmark::DoNotOptimize(bgg::find_singular_vector(target, bgg::Weight{{-m - 2, -m - 2}}));
  }
}
BENCHMARK(BM_SingularVectorA2)->Arg(0)->Arg(1)->Arg(2)->Unit(benchmark::kMillisecond);

void BM_VerifyA2(benchmark::State& state) {
  const int cutoff = static_cast<int>(state.range(0));
  for (auto _ : state) {
    auto c = bgg::fix_signs(bgg::assemble(fresh_algebra(bgg::Series::A, 2), bgg::Weight{{1, 1}}));
    benchmark::DoNotOptimize(bgg::verify_all(c, cutoff));
  }
}
BENCHMARK(BM_VerifyA2)->Arg(6)->Arg(12)->Unit(benchmark::kMillisecond);

void BM_VerifyB2Trivial(benchmark::State& state) {
  for (auto _ : state) {
    auto c = bgg::fix_signs(bgg::assemble(fresh_algebra(bgg::Series::B, 2), bgg::Weight{{0, 0}}));
    benchmark::DoNotOptimize(bgg::verify_all(c, 8));
  }
}
BENCHMARK(BM_VerifyB2Trivial)->Unit(benchmark::kMillisecond);

}  // namespace
BENCHMARK_MAIN();
