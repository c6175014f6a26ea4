#include <benchmark/benchmark.h>

#include <cmath>
#include <limits>

#include "atd/duality.hpp"
#include "atd/fixtures.hpp"
#include "atd/random.hpp"
#include "atd/splitting.hpp"
#include "atd/suites.hpp"
#include "atd/zoo.hpp"

using namespace atd;

namespace {

constexpr double kInf = std::numeric_limits<double>::infinity();

Vec sample(Eigen::Index dim, std::uint64_t seed = 7) {
  Rng rng(seed);
  return rng.point_in_cube(dim, 5.0);
}

}  // namespace

static void BM_BoxResolvent(benchmark::State& state) {
  const auto dim = static_cast<Eigen::Index>(state.range(0));
  const auto op = normal_cone_operator(
      box_set(Vec::Zero(dim), Vec::Constant(dim, kInf)));
  const Vec x = sample(dim);
  for (auto _ : state) benchmark::DoNotOptimize(op.resolvent(x));
}
BENCHMARK(BM_BoxResolvent)->Arg(2)->Arg(16)->Arg(128);

static void BM_LinearResolvent(benchmark::State& state) {
  const auto dim = static_cast<Eigen::Index>(state.range(0));
  Mat m = Mat::Zero(dim, dim);
  for (Eigen::Index i = 0; i + 1 < dim; ++i) {
    m(i, i + 1) = 1.0;
    m(i + 1, i) = -1.0;
  }
  const auto op = linear_operator(m);
  const Vec x = sample(dim);
  for (auto _ : state) benchmark::DoNotOptimize(op.resolvent(x));
}
BENCHMARK(BM_LinearResolvent)->Arg(2)->Arg(16)->Arg(128);

static void BM_DrStep(benchmark::State& state) {
  const auto& fx = find_fixture("orthogonal-2d");
  const auto op = dr_operator(fx.pair);
  const Vec x = sample(2);
  for (auto _ : state) benchmark::DoNotOptimize(op.apply(x));
}
BENCHMARK(BM_DrStep);

static void BM_DrSolveFeasibility(benchmark::State& state) {
  const auto& fx = find_fixture("feasibility-1d");
  const auto op = dr_operator(fx.pair);
  Vec x0(1);
  x0 << 100.0;
  for (auto _ : state) {
    benchmark::DoNotOptimize(iterate_dr(op, x0, 1e-10, 1000));
  }
}
BENCHMARK(BM_DrSolveFeasibility);

static void BM_HalpernThousandSteps(benchmark::State& state) {
  const auto& fx = find_fixture("orthogonal-2d");
  const auto op = dr_operator(fx.pair);
  Vec y(2);
  y << -1.0, 2.0;
  for (auto _ : state) {
    benchmark::DoNotOptimize(iterate_halpern(op, y, y, {}, 1e-15, 1000));
  }
}
BENCHMARK(BM_HalpernThousandSteps);

static void BM_MembershipOracle(benchmark::State& state) {
  const auto& fx = find_fixture("ww-nested");
  Vec z(2), k(2);
  z << 2.0, 0.0;
  k << 0.0, 0.5;
  for (auto _ : state) benchmark::DoNotOptimize(kz_contains(fx.pair, z, k));
}
BENCHMARK(BM_MembershipOracle);

static void BM_IdentitiesSuite(benchmark::State& state) {
  const auto& fx = find_fixture("normskew");
  for (auto _ : state) {
    benchmark::DoNotOptimize(run_suite(fx, Suite::identities,
                                       static_cast<int>(state.range(0)), 42));
  }
}
BENCHMARK(BM_IdentitiesSuite)->Arg(100)->Arg(1000);

BENCHMARK_MAIN();
