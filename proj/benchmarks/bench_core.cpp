#include <benchmark/benchmark.h>

#include "axtk/catalog.hpp"
#include "axtk/io.hpp"

using namespace axtk;

namespace {

std::size_t b6(long i) { return static_cast<std::size_t>(((i + 2) % 6 + 6) % 6); }

const catalog::CatalogEntry& entry6A() {
    static catalog::CatalogEntry e = catalog::build_6A();
    return e;
}

}  // namespace

static void BM_nullspace_6A_adjoint(benchmark::State& state) {
    const Algebra& A = *entry6A().algebra;
    Matrix ad = A.adjoint(A.basis_vector(b6(0)));
    Matrix shifted = ad - Matrix::identity(A.field(), 8).scaled(entry6A().law.alpha());
    for (auto _ : state) {
        auto basis = nullspace(shifted);
        benchmark::DoNotOptimize(basis);
    }
}
BENCHMARK(BM_nullspace_6A_adjoint)->Unit(benchmark::kMillisecond);

static void BM_axis_report_6A(benchmark::State& state) {
    const Algebra& A = *entry6A().algebra;
    for (auto _ : state) {
        AxisReport rep = axis_report(A, A.basis_vector(b6(0)), entry6A().law);
        benchmark::DoNotOptimize(rep);
    }
}
BENCHMARK(BM_axis_report_6A)->Unit(benchmark::kMillisecond);

static void BM_decompose_6A_at_rational(benchmark::State& state) {
    catalog::CatalogEntry e = catalog::build_6A(Field::rationals()->from_int(5));
    for (auto _ : state) {
        Decomposition dec = decompose(*e.algebra, e.algebra->basis_vector(b6(0)), e.law);
        benchmark::DoNotOptimize(dec);
    }
}
BENCHMARK(BM_decompose_6A_at_rational);

static void BM_skew_closure(benchmark::State& state) {
    auto k = static_cast<unsigned long>(state.range(0));
    axet::C2Axet x = axet::C2Axet::skew(k);
    for (auto _ : state) {
        auto cl = axet::closure(x, {x.point_of_label(0), x.point_of_label(1)});
        benchmark::DoNotOptimize(cl);
    }
}
BENCHMARK(BM_skew_closure)->Arg(16)->Arg(64);

static void BM_mpoly_gcd(benchmark::State& state) {
    MPoly x = MPoly::variable(1, 0, 0);
    MPoly f = MPoly::constant(1, 0, Rat(1));
    MPoly g = MPoly::constant(1, 0, Rat(1));
    for (int i = 1; i <= 6; ++i) {
        f = f * (x.scaled(Rat(i)) - MPoly::constant(1, 0, Rat(1, i + 1)));
        if (i % 2 == 0) g = g * (x.scaled(Rat(i)) - MPoly::constant(1, 0, Rat(1, i + 1)));
    }
    for (auto _ : state) {
        MPoly d = MPoly::gcd(f, g);
        benchmark::DoNotOptimize(d);
    }
}
BENCHMARK(BM_mpoly_gcd);

static void BM_parse_gamma(benchmark::State& state) {
    FieldPtr F = Field::function(Field::rationals(), {"alpha"});
    for (auto _ : state) {
        Scalar g = io::parse_scalar("alpha/(8*(2*alpha-1))", F);
        benchmark::DoNotOptimize(g);
    }
}
BENCHMARK(BM_parse_gamma);

BENCHMARK_MAIN();
