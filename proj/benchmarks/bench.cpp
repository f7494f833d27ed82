#include <benchmark/benchmark.h>

#include <random>
#include <string>

#include "agt/arb.hpp"
#include "agt/artin.hpp"
#include "agt/garside.hpp"
#include "agt/intmat.hpp"
#include "agt/json_io.hpp"
#include "agt/mcg.hpp"
#include "agt/verify.hpp"
#include "agt/words.hpp"

namespace {

using namespace agt;

Word alternating_word(int len) {
  Generator a = Generator::abstract("a");
  Generator b = Generator::abstract("bb");
  Word w;
  for (int i = 0; i < len; ++i) {
    w.push_back(lit(i % 2 ? a : b, i % 3 ? 1 : -1));
    w.push_back(lit(i % 2 ? a : b, i % 3 ? -1 : 1));
  }
  return w;
}

Word random_type_word(const ParabolicType& t, size_t len,
                      std::uint32_t seed) {
  std::mt19937 rng(seed);
  std::uniform_int_distribution<size_t> pick(0, t.gens.size() - 1);
  std::uniform_int_distribution<int> coin(0, 1);
  Word w;
  for (size_t i = 0; i < len; ++i)
    w.push_back(lit(t.gens[pick(rng)], coin(rng) ? 1 : -1));
  return w;
}

void BM_WordReduce(benchmark::State& state) {
  Word w = alternating_word(static_cast<int>(state.range(0)));
  for (auto _ : state) {
    benchmark::DoNotOptimize(reduce(w));
  }
}
BENCHMARK(BM_WordReduce)->Arg(256)->Arg(4096);

// Garside normal form of random words; range(0) is the word length.
template <Family F, int Rank>
void BM_NormalForm(benchmark::State& state) {
  ParabolicType t = family_type(F, Rank);
  Word w = random_type_word(t, static_cast<size_t>(state.range(0)), 11);
  normal_form(t, w);  // warm the root-system cache outside the loop
  for (auto _ : state) {
    benchmark::DoNotOptimize(normal_form(t, w));
  }
}
BENCHMARK(BM_NormalForm<Family::A, 3>)->Arg(64)->Arg(512);
BENCHMARK(BM_NormalForm<Family::D, 4>)->Arg(64)->Arg(512);
BENCHMARK(BM_NormalForm<Family::E6, 6>)->Arg(64);

void BM_GarsideEqual(benchmark::State& state) {
  ParabolicType t = family_type(Family::A, 3);
  size_t len = static_cast<size_t>(state.range(0));
  Word u = random_type_word(t, len, 21);
  Word v = random_type_word(t, len, 22);
  garside_equal(t, u, v);
  for (auto _ : state) {
    benchmark::DoNotOptimize(garside_equal(t, u, v));
  }
}
BENCHMARK(BM_GarsideEqual)->Arg(128);

// Coset enumeration of the finite reflection quotients.
template <Family F, int Rank>
void BM_ToddCoxeter(benchmark::State& state) {
  Presentation p = coxeter_quotient(F, Rank);
  for (auto _ : state) {
    benchmark::DoNotOptimize(todd_coxeter(p, 100000));
  }
}
BENCHMARK(BM_ToddCoxeter<Family::A, 3>);
BENCHMARK(BM_ToddCoxeter<Family::B, 3>);
BENCHMARK(BM_ToddCoxeter<Family::D, 4>);

void BM_SmithForm(benchmark::State& state) {
  IntMatrix m = exponent_matrix(
      b1r_presentation(static_cast<int>(state.range(0)),
                       DeltaMode::homogeneity_corrected));
  for (auto _ : state) {
    benchmark::DoNotOptimize(smith_normal_form(m));
  }
}
BENCHMARK(BM_SmithForm)->Arg(3)->Arg(10);

void BM_BuildSurface(benchmark::State& state) {
  MapoParams params;
  params.g = static_cast<int>(state.range(0));
  params.n = static_cast<int>(state.range(1));
  for (auto _ : state) {
    benchmark::DoNotOptimize(
        mapo_presentation(params, DeltaMode::homogeneity_corrected));
  }
}
BENCHMARK(BM_BuildSurface)->Args({1, 2})->Args({3, 5});

void BM_BuildTower(benchmark::State& state) {
  int r = static_cast<int>(state.range(0));
  for (auto _ : state) {
    benchmark::DoNotOptimize(
        b1r_presentation(r, DeltaMode::homogeneity_corrected));
  }
}
BENCHMARK(BM_BuildTower)->Arg(3)->Arg(10);

void BM_BuildDoubled(benchmark::State& state) {
  for (auto _ : state) {
    benchmark::DoNotOptimize(
        b21_presentation(DeltaMode::homogeneity_corrected));
  }
}
BENCHMARK(BM_BuildDoubled);

void BM_BoundaryEval(benchmark::State& state) {
  Presentation p = b21_presentation(DeltaMode::homogeneity_corrected);
  for (auto _ : state) {
    benchmark::DoNotOptimize(perm_eval_builtin(p));
  }
}
BENCHMARK(BM_BoundaryEval);

void BM_Abelianization(benchmark::State& state) {
  Presentation p = b21_presentation(DeltaMode::homogeneity_corrected);
  for (auto _ : state) {
    benchmark::DoNotOptimize(abelianization(p));
  }
}
BENCHMARK(BM_Abelianization);

void BM_JsonRoundTrip(benchmark::State& state) {
  Presentation p = b21_presentation(DeltaMode::homogeneity_corrected);
  for (auto _ : state) {
    benchmark::DoNotOptimize(
        presentation_from_string(presentation_to_string(p)));
  }
}
BENCHMARK(BM_JsonRoundTrip);

}  // namespace

BENCHMARK_MAIN();
