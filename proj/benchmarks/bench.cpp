#include <benchmark/benchmark.h>

#include "ellip/catalog.hpp"
#include "ellip/products.hpp"
#include "ellip/theta.hpp"
#include "ellip/transforms.hpp"

using namespace ellip;

namespace {

const cplx kTau{0.1, 1.1};
const cplx kZ{0.31, 0.17};

void BM_ThetaSeries(benchmark::State& state) {
    const LatticeTau L(kTau);
    for (auto _ : state) benchmark::DoNotOptimize(theta(1, kZ / 2.0, L));
}
BENCHMARK(BM_ThetaSeries);

void BM_WeierstrassSetup(benchmark::State& state) {
    for (auto _ : state) benchmark::DoNotOptimize(Weierstrass(kTau).e(1));
}
BENCHMARK(BM_WeierstrassSetup);

void BM_Wp(benchmark::State& state) {
    const Weierstrass w(kTau);
    for (auto _ : state) benchmark::DoNotOptimize(w.wp(kZ));
}
BENCHMARK(BM_Wp);

void BM_WpPrime(benchmark::State& state) {
    const Weierstrass w(kTau);
    for (auto _ : state) benchmark::DoNotOptimize(w.wp_prime(kZ));
}
BENCHMARK(BM_WpPrime);

void BM_WpMinusEProduct(benchmark::State& state) {
    TruncationPolicy pol;
    pol.eps = std::pow(10.0, -static_cast<double>(state.range(0)));
    const Weierstrass w(kTau, pol);
    for (auto _ : state) benchmark::DoNotOptimize(wp_minus_e_product(1, kZ, w));
}
BENCHMARK(BM_WpMinusEProduct)->Arg(6)->Arg(9)->Arg(12)->Arg(15);

void BM_WpPrimeProduct(benchmark::State& state) {
    const Weierstrass w(kTau);
    const cplx c = std::pow(kPi, 3) / 8.0;
    for (auto _ : state) benchmark::DoNotOptimize(wp_prime_product(kZ, w, c));
}
BENCHMARK(BM_WpPrimeProduct);

void BM_SineSum(benchmark::State& state) {
    const Weierstrass w(kTau);
    for (auto _ : state) benchmark::DoNotOptimize(wp_logderiv_full_sum(kZ, w));
}
BENCHMARK(BM_SineSum);

void BM_OrderN(benchmark::State& state) {
    const OrderPair p(kTau, static_cast<int>(state.range(0)));
    const WpNOptions opts{ShiftRule::two_m_over_n, 2};
    for (auto _ : state) benchmark::DoNotOptimize(wp_n_identity(1, kZ, p, opts).rhs_theta);
}
BENCHMARK(BM_OrderN)->Arg(3)->Arg(5)->Arg(9);

void BM_AuditRecord(benchmark::State& state) {
    const auto rec = audit::lookup("thm2-1.e1");
    audit::GridConfig g;
    for (auto _ : state) benchmark::DoNotOptimize(audit::audit(rec, g).status);
}
BENCHMARK(BM_AuditRecord)->Unit(benchmark::kMillisecond);

}  // namespace

BENCHMARK_MAIN();
