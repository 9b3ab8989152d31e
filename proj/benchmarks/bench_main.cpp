#include <benchmark/benchmark.h>

#include "pdt/bounded_search.hpp"
#include "pdt/divisor.hpp"
#include "pdt/psigma_ideal.hpp"

namespace {

using namespace pdt;

const ZxPoly X = ZxPoly::x();

std::vector<ZxVector> space_gens() {
  return {ZxVector{X, 1, 1}, ZxVector{1, X, 1}, ZxVector{1, 1, X}, ZxVector{1, 1, 1}};
}

std::vector<ZxVector> simplex(std::size_t n) {
  std::vector<ZxVector> out{zero_vector(n)};
  for (std::size_t i = 0; i < n; ++i) out.push_back(unit_vector(n, i));
  return out;
}

void BM_GroebnerBasis(benchmark::State& state) {
  const std::vector<ZxVector> gens{{X * X + 3, 2 * X - 1, 5}, {X - 4, X * X, 3 * X + 1}, {7, -X, X * X - 2},
                                   {2 * X, 1, -3}};
  for (auto _ : state) benchmark::DoNotOptimize(StrongGroebnerBasis(gens, 3).elements().size());
}
BENCHMARK(BM_GroebnerBasis);

void BM_SyzygyBasis(benchmark::State& state) {
  const auto gens = space_gens();
  for (auto _ : state) benchmark::DoNotOptimize(syzygy_basis(gens, 3).generators().size());
}
BENCHMARK(BM_SyzygyBasis);

void BM_Saturate(benchmark::State& state) {
  const Lattice l(3, {ZxVector{2, X, 0}, ZxVector{0, 2 * X + 2, 4}});
  for (auto _ : state) benchmark::DoNotOptimize(saturate(l).generators().size());
}
BENCHMARK(BM_Saturate);

void BM_EnumerateFaces(benchmark::State& state) {
  const AffineSemimodule s(3, space_gens());
  const Bounds b = default_bounds(s.generators());
  for (auto _ : state) benchmark::DoNotOptimize(enumerate_faces(s, b).faces.size());
}
BENCHMARK(BM_EnumerateFaces);

void BM_ProjectiveFanCheck(benchmark::State& state) {
  const auto n = static_cast<std::size_t>(state.range(0));
  const auto pts = simplex(n);
  const Fan f = projective_fan(pts, n);
  const Bounds b = default_bounds(pts);
  for (auto _ : state) benchmark::DoNotOptimize(check_fan(f, b).verdict.kind);
}
BENCHMARK(BM_ProjectiveFanCheck)->DenseRange(1, 3);

void BM_ClassModule(benchmark::State& state) {
  const auto n = static_cast<std::size_t>(state.range(0));
  const auto pts = simplex(n);
  const DivisorContext ctx(projective_fan(pts, n), default_bounds(pts));
  for (auto _ : state) benchmark::DoNotOptimize(class_module(ctx).shape());
}
BENCHMARK(BM_ClassModule)->DenseRange(1, 3);

void BM_PicModule(benchmark::State& state) {
  const auto pts = simplex(2);
  const DivisorContext ctx(projective_fan(pts, 2), default_bounds(pts));
  for (auto _ : state) benchmark::DoNotOptimize(pic_module(ctx).shape());
}
BENCHMARK(BM_PicModule);

void BM_DivisorContext(benchmark::State& state) {
  const auto pts = simplex(2);
  const Fan f = projective_fan(pts, 2);
  const Bounds b = default_bounds(pts);
  for (auto _ : state) benchmark::DoNotOptimize(DivisorContext(f, b).prime_count());
}
BENCHMARK(BM_DivisorContext);

void BM_MembershipSearch(benchmark::State& state) {
  const AffineSemimodule s(3, space_gens());
  const ZxVector w = combine(s.generators(), ZxVector{X + 1, 2, X * X, 3}, 3);
  const Bounds b = default_bounds(s.generators());
  for (auto _ : state) benchmark::DoNotOptimize(sm_member(s, w, b).verdict.kind);
}
BENCHMARK(BM_MembershipSearch);

}  // namespace

BENCHMARK_MAIN();
