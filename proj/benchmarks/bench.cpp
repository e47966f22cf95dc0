#include <benchmark/benchmark.h>

#include "heisvc/chain.hpp"
#include "heisvc/model.hpp"

using namespace heisvc;

namespace {

void BM_GroupMul(benchmark::State& state) {
    HeisElement g{12, -7, 35}, h{-3, 9, 4};
    for (auto _ : state) {
        benchmark::DoNotOptimize(mul(g, h));
    }
}
BENCHMARK(BM_GroupMul);

void BM_PrimitiveRoot(benchmark::State& state) {
    HeisElement g{24, 36, 30};
    for (auto _ : state) {
        benchmark::DoNotOptimize(primitive_root(g));
    }
}
BENCHMARK(BM_PrimitiveRoot);

void BM_Splitting(benchmark::State& state) {
    HeisElement g{6, 4, 1};
    for (auto _ : state) {
        benchmark::DoNotOptimize(splitting(g));
    }
}
BENCHMARK(BM_Splitting);

void BM_Act(benchmark::State& state) {
    ConjClassId cls = canonical_class({2, 3, 1});
    ModelPoint p = make_line_point(cls, {1, 1, 0}, Rational(1, 2));
    HeisElement g{1, -2, 3};
    for (auto _ : state) {
        benchmark::DoNotOptimize(p = act(g, p));
    }
}
BENCHMARK(BM_Act);

void BM_Census(benchmark::State& state) {
    SubgroupSpec k{{{2, 0, 1}}};
    for (auto _ : state) {
        benchmark::DoNotOptimize(fixed_point_census(k, state.range(0)));
    }
}
BENCHMARK(BM_Census)->Arg(4)->Arg(8);

void BM_BfVerify(benchmark::State& state) {
    for (auto _ : state) {
        benchmark::DoNotOptimize(bf_verify(state.range(0)));
    }
}
BENCHMARK(BM_BfVerify)->Arg(1)->Arg(2)->Arg(3)->Unit(benchmark::kMillisecond);

void BM_HomologyS3Cylinder(benchmark::State& state) {
    for (auto _ : state) {
        ProductResult torus = product_complex(circle_complex(), circle_complex());
        ChainComplex s3 =
            double_cylinder_complex(torus.proj_first, torus.proj_second);
        benchmark::DoNotOptimize(homology(s3));
    }
}
BENCHMARK(BM_HomologyS3Cylinder);

void BM_HomologyS3Join(benchmark::State& state) {
    SimplicialComplex tri{3, {{0, 1}, {0, 2}, {1, 2}}};
    for (auto _ : state) {
        benchmark::DoNotOptimize(
            homology(from_simplicial(simplicial_join(tri, tri))));
    }
}
BENCHMARK(BM_HomologyS3Join);

void BM_SmithNormalForm(benchmark::State& state) {
    SimplicialComplex tri{3, {{0, 1}, {0, 2}, {1, 2}}};
    ChainComplex join = from_simplicial(simplicial_join(tri, tri));
    IntMatrix b = join.boundary(2);  // 15 x 18
    for (auto _ : state) {
        benchmark::DoNotOptimize(smith_normal_form(b));
    }
}
BENCHMARK(BM_SmithNormalForm);

}  // namespace

BENCHMARK_MAIN();
