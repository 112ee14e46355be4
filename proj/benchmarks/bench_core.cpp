#include <benchmark/benchmark.h>

#include <hecke0/catalog.hpp>
#include <hecke0/cocenter.hpp>
#include <hecke0/reps.hpp>

using namespace hecke0;

static void BM_LengthFormula(benchmark::State& state) {
  const Weyl& W = catalogDatum("G2")->weylFull();
  auto ball = W.ball(int(state.range(0)));
  for (auto _ : state)
    for (const auto& e : ball) benchmark::DoNotOptimize(W.length(e));
  state.SetItemsProcessed(state.iterations() * int64_t(ball.size()));
}
BENCHMARK(BM_LengthFormula)->Arg(4)->Arg(6);

static void BM_LengthHyperplanes(benchmark::State& state) {
  const Weyl& W = catalogDatum("G2")->weylFull();
  auto ball = W.ball(int(state.range(0)));
  for (auto _ : state)
    for (const auto& e : ball) benchmark::DoNotOptimize(W.lengthHyperplanes(e));
  state.SetItemsProcessed(state.iterations() * int64_t(ball.size()));
}
BENCHMARK(BM_LengthHyperplanes)->Arg(4)->Arg(6);

static void BM_BallEnumeration(benchmark::State& state) {
  const Weyl& W = catalogDatum("C2")->weylFull();
  for (auto _ : state) benchmark::DoNotOptimize(W.ball(int(state.range(0))));
}
BENCHMARK(BM_BallEnumeration)->Arg(4)->Arg(6)->Arg(8);

static void BM_TMultiply(benchmark::State& state) {
  const Weyl& W = catalogDatum("A2-ad")->weylFull();
  auto ball = W.ball(4);
  HeckeMode mode = state.range(0) ? HeckeMode::Generic : HeckeMode::Zero;
  size_t i = 0, j = ball.size() / 2;
  for (auto _ : state) {
    benchmark::DoNotOptimize(
        tMultiply(W, heckeBasis(ball[i], mode), heckeBasis(ball[j], mode)));
    i = (i + 1) % ball.size();
    j = (j + 7) % ball.size();
  }
}
BENCHMARK(BM_TMultiply)->Arg(0)->Arg(1);

static void BM_EBasis(benchmark::State& state) {
  const Weyl& W = catalogDatum("A2-ad")->weylFull();
  auto ball = W.ball(5);
  size_t i = 0;
  for (auto _ : state) {
    benchmark::DoNotOptimize(eBasis(W, ball[i]));
    i = (i + 1) % ball.size();
  }
}
BENCHMARK(BM_EBasis);

static void BM_ClassEnumeration(benchmark::State& state) {
  const Weyl& W = catalogDatum("C2")->weylFull();
  for (auto _ : state) benchmark::DoNotOptimize(enumerateMinClasses(W, int(state.range(0))));
}
BENCHMARK(BM_ClassEnumeration)->Arg(3)->Arg(5);

static void BM_SigmaOf(benchmark::State& state) {
  const Weyl& W = catalogDatum("A2-ad")->weylFull();
  auto ball = W.ball(6);
  size_t i = 0;
  for (auto _ : state) {
    benchmark::DoNotOptimize(sigmaOf(W, ball[i]));
    i = (i + 1) % ball.size();
  }
}
BENCHMARK(BM_SigmaOf);

static void BM_InducePi(benchmark::State& state) {
  DatumPtr rd = catalogDatum("A2-ad");
  ParahoricDatum pd(*rd, rd->fullJ(), {0});
  Character chi{std::vector<Rat>(pd.stabGens().size(), Rat(1))};
  for (auto _ : state) benchmark::DoNotOptimize(inducePi(pd, chi));
}
BENCHMARK(BM_InducePi);

static void BM_CocenterProject(benchmark::State& state) {
  const Weyl& W = catalogDatum("A2-ad")->weylFull();
  Cocenter coc(W, 6);
  auto ball = W.ball(6);
  size_t i = 0;
  for (auto _ : state) {
    benchmark::DoNotOptimize(coc.project(heckeBasis(ball[i], HeckeMode::Zero)));
    i = (i + 1) % ball.size();
  }
}
BENCHMARK(BM_CocenterProject);

BENCHMARK_MAIN();
