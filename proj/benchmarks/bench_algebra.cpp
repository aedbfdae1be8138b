#include "embcalc/abelian.hpp"
#include "embcalc/dax.hpp"
#include "embcalc/module.hpp"

#include <benchmark/benchmark.h>

#include <random>

namespace {

using namespace embcalc;

IntMatrix random_matrix(std::size_t rows, std::size_t cols, std::uint64_t seed) {
    std::mt19937_64 rng(seed);
    std::uniform_int_distribution<long long> dist(-9, 9);
    IntMatrix m(rows, cols);
    for (std::size_t i = 0; i < rows; ++i)
        for (std::size_t j = 0; j < cols; ++j) m.at(i, j) = dist(rng);
    return m;
}

void BM_SmithNormalForm(benchmark::State& state) {
    const auto n = static_cast<std::size_t>(state.range(0));
    IntMatrix m = random_matrix(n, n, 0x5eed + n);
    for (auto _ : state) {
        SmithResult snf = smith_normal_form(m);
        benchmark::DoNotOptimize(snf.d.at(n - 1, n - 1));
    }
}
BENCHMARK(BM_SmithNormalForm)->Arg(8)->Arg(16)->Arg(32);

void BM_DaxTrace(benchmark::State& state) {
    GroupSpec f2 = GroupSpec::free_group(2);
    ParityContext ctx(2, 7);
    std::mt19937_64 rng(0xda5);
    std::uniform_int_distribution<int> letter(0, 1), exp(-3, 3), sign(0, 1);
    Trace trace;
    for (int i = 0; i < static_cast<int>(state.range(0)); ++i) {
        std::vector<Syllable> w;
        for (int s = 0; s < 4; ++s) {
            int e = exp(rng);
            if (e != 0) w.emplace_back(static_cast<std::size_t>(letter(rng)), e);
        }
        trace.push_back({sign(rng) ? 1 : -1, f2.word_element(w)});
    }
    for (auto _ : state) {
        DaxClass c = dax_of_trace(ctx, f2, trace, true);
        benchmark::DoNotOptimize(c.value.is_zero());
    }
}
BENCHMARK(BM_DaxTrace)->Arg(64)->Arg(512);

void BM_InvolutionQuotient(benchmark::State& state) {
    GroupSpec q8 = GroupSpec::quaternion();
    ParityContext ctx(2, 7);
    SpanSpec md;
    md.generators.push_back(RingElement::term(q8.element(1), 1));
    for (auto _ : state) {
        auto q = md_image_quotient(ctx, q8, md, true);
        benchmark::DoNotOptimize(std::get<AbelianGroup>(q).free_rank);
    }
}
BENCHMARK(BM_InvolutionQuotient);

void BM_DualOrbit(benchmark::State& state) {
    GroupSpec d4 = GroupSpec::dihedral(4);
    ModuleData mod;
    mod.generators = 8;
    mod.relations = IntMatrix(0, 8);
    // Regular representation: each generator permutes the basis.
    auto perm = [&](const GroupElement& g) {
        IntMatrix m(8, 8);
        for (std::size_t i = 0; i < 8; ++i) m.at(d4.multiply(g, d4.element(i)).index, i) = 1;
        return m;
    };
    mod.actions.push_back({d4.element(1), perm(d4.element(1)), std::nullopt});
    mod.actions.push_back({d4.element(4), perm(d4.element(4)), std::nullopt});
    std::vector<Int> dual(8, Int(0));
    dual[0] = 1;
    for (auto _ : state) {
        DualQuotient q = quotient_by_dual(d4, mod, dual);
        benchmark::DoNotOptimize(q.group.free_rank);
    }
}
BENCHMARK(BM_DualOrbit);

} // namespace

BENCHMARK_MAIN();
