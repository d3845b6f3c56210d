#include <benchmark/benchmark.h>

#include "gen.hpp"
#include "npnas/decider.hpp"
#include "npnas/eubridge.hpp"
#include "npnas/oracle.hpp"

namespace {

using namespace npnas;

Problem translated_example() {
  EUProblem s;
  s.name_vars = {"A", "B"};
  s.perm_vars = {"Q", "Q2"};
  Vertex a{Vertex::Kind::kNameVar, "A"}, b{Vertex::Kind::kNameVar, "B"};
  NameTerm qa = NameTerm::perm("Q", a), qb = NameTerm::perm("Q", b);
  s.constraints = {{EUConstraint::Kind::kEq, qa, NameTerm::swap(qa, qb, qa)},
                   {EUConstraint::Kind::kFresh, NameTerm::perm("Q2", a), NameTerm::perm("Q2", b)}};
  return translate_problem(s).problem;
}

void BM_DecideTranslated(benchmark::State& state) {
  Signature sig = eu_signature();
  Problem p = translated_example();
  SolveOptions opts;
  opts.strategy = state.range(0) ? Strategy::kFull : Strategy::kFocused;
  std::size_t nodes = 0;
  for (auto _ : state) {
    Verdict v = decide(sig, p, opts);
    nodes = v.stats.nodes;
    benchmark::DoNotOptimize(v.status);
  }
  state.counters["nodes"] = static_cast<double>(nodes);
}
BENCHMARK(BM_DecideTranslated)->Arg(0)->Arg(1)->Unit(benchmark::kMillisecond);

void BM_DecideRandom(benchmark::State& state) {
  Signature sig = testing::lam_signature();
  testing::Rng rng(99);
  std::vector<Problem> ps;
  for (int i = 0; i < 64; ++i) {
    ps.push_back(testing::random_problem(rng, sig, {static_cast<std::size_t>(state.range(0)), 3, 2, 40}));
  }
  std::size_t i = 0;
  for (auto _ : state) {
    Verdict v = decide(sig, ps[i++ % ps.size()]);
    benchmark::DoNotOptimize(v.status);
  }
}
BENCHMARK(BM_DecideRandom)->DenseRange(2, 6, 2)->Unit(benchmark::kMicrosecond);

void BM_Canonicalize(benchmark::State& state) {
  Signature sig = testing::two_sort_signature();
  testing::Rng rng(7);
  std::vector<GroundTree> trees;
  for (int i = 0; i < 256; ++i) {
    trees.push_back(testing::random_ground(rng, sig, Type::data("D"),
                                           static_cast<std::size_t>(state.range(0)), 4));
  }
  std::size_t i = 0;
  for (auto _ : state) benchmark::DoNotOptimize(canonicalize(trees[i++ % trees.size()]));
}
BENCHMARK(BM_Canonicalize)->RangeMultiplier(2)->Range(2, 16);

void BM_AlphaEquivalent(benchmark::State& state) {
  Signature sig = testing::two_sort_signature();
  testing::Rng rng(8);
  std::vector<std::pair<GroundTree, GroundTree>> pairs;
  for (int i = 0; i < 256; ++i) {
    GroundTree g = testing::random_ground(rng, sig, Type::data("D"), 8, 4);
    pairs.emplace_back(g, testing::rename_binders(rng, g, 4));
  }
  std::size_t i = 0;
  for (auto _ : state) {
    const auto& [g, h] = pairs[i++ % pairs.size()];
    benchmark::DoNotOptimize(alpha_equivalent(g, h));
  }
}
BENCHMARK(BM_AlphaEquivalent);

void BM_Oracle(benchmark::State& state) {
  Signature sig = testing::lam_signature();
  testing::Rng rng(5);
  std::vector<Problem> ps;
  for (int i = 0; i < 32; ++i) ps.push_back(testing::random_problem(rng, sig, {4, 3, 2, 40}));
  std::size_t i = 0;
  for (auto _ : state) {
    OracleResult r = brute_sat(sig, ps[i++ % ps.size()], {static_cast<std::size_t>(state.range(0)), 3});
    benchmark::DoNotOptimize(r.sat);
  }
}
BENCHMARK(BM_Oracle)->Arg(5)->Arg(9)->Unit(benchmark::kMicrosecond);

}  // namespace

BENCHMARK_MAIN();
