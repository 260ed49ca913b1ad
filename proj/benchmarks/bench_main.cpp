#include <benchmark/benchmark.h>

#include "cohomlen/asymptotics.hpp"
#include "cohomlen/dsl.hpp"
#include "cohomlen/polyhedra.hpp"
#include "cohomlen/takayama.hpp"

using namespace cohomlen;

namespace {

const MonomialIdeal& path5() {
  static const auto ideal = parse_ideal("ring 5; ideal x1*x2, x2*x3, x3*x4, x4*x5;");
  return ideal;
}

void BM_TableBuild(benchmark::State& state) {
  const auto member = FamilyMember::from_ideal(power(path5(), static_cast<std::size_t>(state.range(0))));
  for (auto _ : state) {
    LocalizationTable table(member);
    benchmark::DoNotOptimize(table.point_count());
  }
}
BENCHMARK(BM_TableBuild)->Arg(4)->Arg(8)->Arg(12)->Unit(benchmark::kMillisecond);

void BM_ClosureTableBuild(benchmark::State& state) {
  const auto member = FamilyMember::integral_closure(path5(), static_cast<std::size_t>(state.range(0)));
  for (auto _ : state) {
    LocalizationTable table(member);
    benchmark::DoNotOptimize(table.point_count());
  }
}
BENCHMARK(BM_ClosureTableBuild)->Arg(4)->Arg(8)->Unit(benchmark::kMillisecond);

void BM_TotalLength(benchmark::State& state) {
  const LocalizationTable table(FamilyMember::from_ideal(power(path5(), 10)));
  const ScanOptions opts{{}, static_cast<unsigned>(state.range(0)), true};
  for (auto _ : state) benchmark::DoNotOptimize(total_length(table, 1, opts).value);
}
BENCHMARK(BM_TotalLength)->Arg(1)->Arg(4)->Arg(8)->Unit(benchmark::kMillisecond)->UseRealTime();

void BM_UnitSimplexVolume(benchmark::State& state) {
  const auto d = static_cast<std::size_t>(state.range(0));
  std::vector<RationalPoint> pts{RationalPoint(d, Rational(0))};
  for (std::size_t i = 0; i < d; ++i) {
    RationalPoint e(d, Rational(0));
    e[i] = 1;
    pts.push_back(e);
  }
  for (auto _ : state) benchmark::DoNotOptimize(polytope_volume(pts));
}
BENCHMARK(BM_UnitSimplexVolume)->DenseRange(2, 6);

void BM_VolumeLimit(benchmark::State& state) {
  for (auto _ : state) benchmark::DoNotOptimize(limit_via_volume(path5(), 1));
}
BENCHMARK(BM_VolumeLimit)->Unit(benchmark::kMillisecond);

void BM_Fit(benchmark::State& state) {
  const auto seq = length_sequence(IdealFamily::powers(path5()), 1, 16);
  for (auto _ : state) benchmark::DoNotOptimize(fit_quasipolynomial(seq, {5, 2}).period);
}
BENCHMARK(BM_Fit)->Unit(benchmark::kMicrosecond);

}  // namespace

BENCHMARK_MAIN();
