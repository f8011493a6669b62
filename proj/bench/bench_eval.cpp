// Parallel vs serial evaluation of trace polynomials at random points mod p.

#include <benchmark/benchmark.h>

#include <vector>

#include "matinv/exprlang.hpp"
#include "matinv/genmat.hpp"
#include "matinv/invariants.hpp"
#include "matinv/tableaux.hpp"

using namespace matinv;

namespace {

// Every catalogued vector of degree 10 plus the (6,4) corpus products.
const std::vector<FormalTracePoly>& workload() {
    static const std::vector<FormalTracePoly> fs = [] {
        std::vector<FormalTracePoly> out;
        for (auto s : catalogued_shapes())
            if (s.degree() == 10)
                for (const auto& v : catalogue_basis(s)) out.push_back(FormalTracePoly::from_trace_poly(v));
        auto corpus = load_corpus();
        for (const auto& [name, e] : corpus.definitions(Partition::make(6, 4)).vs) out.push_back(expand_formal(*e));
        return out;
    }();
    return fs;
}

void BM_matrix_parallel(benchmark::State& st) {
    auto pts = make_points(kDefaultSeed, 0, kDefaultPrime1, static_cast<std::size_t>(st.range(0)));
    for (auto _ : st) benchmark::DoNotOptimize(evaluation_matrix(workload(), pts));
    st.SetItemsProcessed(st.iterations() * st.range(0));
}

void BM_matrix_serial(benchmark::State& st) {
    auto pts = make_points(kDefaultSeed, 0, kDefaultPrime1, static_cast<std::size_t>(st.range(0)));
    for (auto _ : st) benchmark::DoNotOptimize(evaluation_matrix_serial(workload(), pts));
    st.SetItemsProcessed(st.iterations() * st.range(0));
}

void BM_points_parallel(benchmark::State& st) {
    auto f = expand_formal(*parse_expr("tr([x,y]^5) - 5/6*tr([x,y]^2)*tr([x,y]^3)"));
    auto pts = make_points(kDefaultSeed, 0, kDefaultPrime1, static_cast<std::size_t>(st.range(0)));
    for (auto _ : st) benchmark::DoNotOptimize(eval_at_points(f, pts));
    st.SetItemsProcessed(st.iterations() * st.range(0));
}

void BM_points_serial(benchmark::State& st) {
    auto f = expand_formal(*parse_expr("tr([x,y]^5) - 5/6*tr([x,y]^2)*tr([x,y]^3)"));
    auto pts = make_points(kDefaultSeed, 0, kDefaultPrime1, static_cast<std::size_t>(st.range(0)));
    for (auto _ : st) benchmark::DoNotOptimize(eval_at_points_serial(f, pts));
    st.SetItemsProcessed(st.iterations() * st.range(0));
}

}  // namespace

BENCHMARK(BM_matrix_parallel)->Arg(32)->Arg(128)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_matrix_serial)->Arg(32)->Arg(128)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_points_parallel)->Arg(64)->Arg(512)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_points_serial)->Arg(64)->Arg(512)->Unit(benchmark::kMillisecond);

BENCHMARK_MAIN();
