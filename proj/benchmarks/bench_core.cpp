#include <benchmark/benchmark.h>

#include <fstream>
#include <numeric>
#include <sstream>
#include <string>
#include <vector>

#include "jungck/certifier.hpp"
#include "jungck/config.hpp"
#include "jungck/contraction.hpp"
#include "jungck/solver.hpp"

using namespace jungck;

namespace {

// Chain a_0 < ... < a_{n-1} on the line, T halving the index toward a_0.
std::pair<OrderedMetricSpace, MappingPair> halving_chain(std::size_t n) {
    std::vector<std::string> labels(n);
    std::vector<double> values(n);
    SelfMap::Table t(n);
    for (std::size_t i = 0; i < n; ++i) {
        labels[i] = "a" + std::to_string(i);
        values[i] = double(i);
        t[i] = i / 2;
    }
    MappingPair p;
    p.T = SelfMap::table(t);
    return {FiniteSpace::on_line(labels, values), p};
}

std::string read_config(const char* name) {
    std::ifstream in(std::string(JUNGCK_CONFIG_DIR) + "/" + name);
    std::stringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

void BM_SequenceOnInterval(benchmark::State& state) {
    const auto problem = build_problem(parse_config(read_config("interval_third.cfg")));
    for (auto _ : state) {
        auto tr = jungck_sequence(problem.space, problem.pair, Point::at_value(0.9));
        benchmark::DoNotOptimize(tr.steps.size());
    }
}
BENCHMARK(BM_SequenceOnInterval);

void BM_CertifyChain(benchmark::State& state) {
    const auto [space, pair] = halving_chain(static_cast<std::size_t>(state.range(0)));
    const auto ic = make_catalog_entry("banach:k=0.5");
    CertifyOptions o;
    o.direction = Direction::Decreasing;
    for (auto _ : state) {
        auto r = certify(space, pair, ic, TheoremVariant::MainRegular, Subspace::whole(), std::nullopt, o);
        benchmark::DoNotOptimize(r.overall);
    }
    state.SetComplexityN(state.range(0));
}
BENCHMARK(BM_CertifyChain)->RangeMultiplier(2)->Range(4, 64)->Complexity();

void BM_BruteForce(benchmark::State& state) {
    const auto [space, pair] = halving_chain(static_cast<std::size_t>(state.range(0)));
    for (auto _ : state) {
        auto r = coincidence_points_bruteforce(space, pair);
        benchmark::DoNotOptimize(r.common_fixed_points.size());
    }
}
BENCHMARK(BM_BruteForce)->RangeMultiplier(4)->Range(8, 512);

void BM_CatalogConditions(benchmark::State& state) {
    const auto entries = catalog();
    for (auto _ : state) {
        for (const auto& ic : entries)
            for (auto c : {ConditionId::F1a, ConditionId::F1b, ConditionId::F1c, ConditionId::F2}) {
                auto r = check_condition(ic, c);
                benchmark::DoNotOptimize(r.verdict);
            }
    }
}
BENCHMARK(BM_CatalogConditions)->Unit(benchmark::kMillisecond);

void BM_ParseConfig(benchmark::State& state) {
    const std::string text = read_config("quarter_powers.cfg");
    for (auto _ : state) {
        auto c = parse_config(text);
        benchmark::DoNotOptimize(c);
    }
}
BENCHMARK(BM_ParseConfig);

}  // namespace
BENCHMARK_MAIN();
