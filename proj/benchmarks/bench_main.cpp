#include <benchmark/benchmark.h>

#include "eqtor/ellcore.hpp"
#include "eqtor/relcheck.hpp"

using namespace eqtor;

static void BM_theta(benchmark::State& st) {
  const Params P;
  const cplx z(0.7, 0.3);
  for (auto _ : st) benchmark::DoNotOptimize(theta(z, P.p, static_cast<int>(st.range(0))));
}
BENCHMARK(BM_theta)->Arg(20)->Arg(40)->Arg(80);

static void BM_pf_expand(benchmark::State& st) {
  const Params P;
  const int n = static_cast<int>(st.range(0));
  std::vector<cplx> a, b;
  for (int s = 0; s < n; ++s) {
    a.push_back(std::polar(0.8 + 0.1 * s, 0.7 * s));
    b.push_back(std::polar(1.1 + 0.05 * s, -0.4 * s));
  }
  const cplx t = std::polar(1.3, 0.2);
  cplx prod = t;
  for (auto x : a) prod *= x;
  for (auto x : b) prod /= x;
  b.push_back(prod);
  for (auto _ : st) benchmark::DoNotOptimize(pf_expand(a, b, t, P.p, P.trunc_M));
}
BENCHMARK(BM_pf_expand)->DenseRange(1, 4);

static void BM_fock_apply(benchmark::State& st) {
  const FockRep F(3, 0, Params());
  const auto lams = partitions_up_to(static_cast<int>(st.range(0)), 3, 0);
  for (auto _ : st)
    for (const auto& lam : lams)
      for (int j = 0; j < 3; ++j) benchmark::DoNotOptimize(F.apply_x(+1, j, F.basis(lam)));
  st.SetItemsProcessed(st.iterations() * static_cast<long>(lams.size()) * 3);
}
BENCHMARK(BM_fock_apply)->Arg(4)->Arg(6)->Arg(8);

static void BM_fock_suite(benchmark::State& st) {
  const FockRep F(3, 0, Params());
  const auto states = fock_states(F, static_cast<int>(st.range(0)));
  for (auto _ : st) benchmark::DoNotOptimize(run_suite(F, states, fock_relation_ids()));
}
BENCHMARK(BM_fock_suite)->Arg(4)->Arg(6)->Unit(benchmark::kMillisecond);

static void BM_exchange_A2(benchmark::State& st) {
  const Heisenberg H(cartan_data("A2"), Params().with_level(1));
  const int D = static_cast<int>(st.range(0));
  for (auto _ : st)
    for (int r = 0; r < kExchangeCount; ++r) benchmark::DoNotOptimize(check_exchange(H, r, D, 4));
}
BENCHMARK(BM_exchange_A2)->Arg(1)->Arg(2)->Unit(benchmark::kMillisecond);

static void BM_zalgebra(benchmark::State& st) {
  const Params P = Params().with_level(1);
  const LatticeModule L(cartan_data("A2"), 0);
  for (auto _ : st)
    for (int rel = 1; rel <= 5; ++rel) benchmark::DoNotOptimize(check_zalgebra(L, rel, P, 6));
}
BENCHMARK(BM_zalgebra)->Unit(benchmark::kMillisecond);

BENCHMARK_MAIN();
