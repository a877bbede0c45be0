#include <benchmark/benchmark.h>

#include "topoevid/audit.hpp"
#include "topoevid/parser.hpp"
#include "topoevid/representation.hpp"
#include "topoevid/semantics.hpp"

using namespace topoevid;

static void BM_GenerateTopology(benchmark::State& state) {
    int n = int(state.range(0));
    Rng rng(1);
    std::vector<Mask> sub;
    Mask x = full_mask(n);
    for (int k = 0; k < 6; ++k) {
        Mask s = rng.submask(x);
        if (s) sub.push_back(s);
    }
    for (auto _ : state) benchmark::DoNotOptimize(generate_topology(sub, n));
}
BENCHMARK(BM_GenerateTopology)->Arg(6)->Arg(10)->Arg(14);

static void BM_EvalTopo(benchmark::State& state) {
    Rng rng(2);
    TopoEModel m = random_topo_model(rng, 8, 3, 3);
    while (m.agents < 3 || m.carrier < 4) m = random_topo_model(rng, 8, 3, 3);
    Vocab v = standard_vocab(3, 3);
    FormulaPtr f = parse_formula("[share{a,b}] (K{a} p & B{A} (q -> Box{b,c} r))", v);
    for (auto _ : state) benchmark::DoNotOptimize(eval_topo(m, f, v).extension);
}
BENCHMARK(BM_EvalTopo);

static void BM_KbCompanion(benchmark::State& state) {
    Rng rng(3);
    EvPseudoModel s = random_ev_pseudo(rng, int(state.range(0)), 3, 2, true);
    for (auto _ : state) benchmark::DoNotOptimize(kb_from_evidence(s));
}
BENCHMARK(BM_KbCompanion)->Arg(5)->Arg(8);

static void BM_BoundedSat(benchmark::State& state) {
    Vocab v = standard_vocab(1, 2);
    FormulaPtr f = expand_kb(parse_formula("K{a} p & K{b} p & ~B{A} p", v));
    for (auto _ : state) benchmark::DoNotOptimize(bounded_sat(f, v, int(state.range(0))));
}
BENCHMARK(BM_BoundedSat)->Arg(2)->Arg(3);

static void BM_AxiomAudit(benchmark::State& state) {
    for (auto _ : state) benchmark::DoNotOptimize(axiom_audit(7, int(state.range(0))));
}
BENCHMARK(BM_AxiomAudit)->Arg(20);

BENCHMARK_MAIN();
