// Microbenchmarks for the hot paths: occurrence counting, correlation
// tables, exact win-probability construction, and the prefix-pair
// automaton build/solve cycle.
#include <benchmark/benchmark.h>

#include "penney/automaton.hpp"
#include "penney/correlation.hpp"
#include "penney/properties.hpp"
#include "penney/winprob.hpp"

using namespace penney;

namespace {

Word long_v() { return Word::parse("110111010011011101001101110100"); }
Word long_w() { return Word::parse("011010110001101011000110101100"); }

void bm_occurrences(benchmark::State& state) {
  Word pat = Word::parse("1101110");
  Word text = long_v();
  for (auto _ : state) benchmark::DoNotOptimize(occurrences(pat, text));
}
BENCHMARK(bm_occurrences);

void bm_correlation_poly(benchmark::State& state) {
  Word v = long_v(), w = long_w();
  for (auto _ : state) benchmark::DoNotOptimize(correlation_poly(v, w));
}
BENCHMARK(bm_correlation_poly);

void bm_win_probability(benchmark::State& state) {
  Word v = Word::from_bits(0b110111010011, 12);
  Word w = Word::from_bits(0b011010110001, 12);
  for (auto _ : state) benchmark::DoNotOptimize(win_probability(v, w));
}
BENCHMARK(bm_win_probability);

void bm_win_probability_at(benchmark::State& state) {
  Word v = long_v(), w = long_w();
  Rat q(9, 20);
  for (auto _ : state) benchmark::DoNotOptimize(win_probability_at(v, w, q));
}
BENCHMARK(bm_win_probability_at);

void bm_automaton_build(benchmark::State& state) {
  Word v = long_v(), w = long_w();
  for (auto _ : state) benchmark::DoNotOptimize(build(v, w));
}
BENCHMARK(bm_automaton_build);

void bm_automaton_solve(benchmark::State& state) {
  PrefixPairAutomaton g = build(long_v(), long_w());
  Rat q(1, 2);
  for (auto _ : state) benchmark::DoNotOptimize(absorption_win(g, q));
}
BENCHMARK(bm_automaton_solve);

void bm_property_r(benchmark::State& state) {
  Word v = Word::parse("000100000100"), w = Word::parse("001110001110");
  for (auto _ : state) benchmark::DoNotOptimize(has_property_r(v, w));
}
BENCHMARK(bm_property_r);

void bm_property_e_witness(benchmark::State& state) {
  // middle-split pair with a = 011110, b = 011101
  Word v = Word::parse("011110011101"), w = Word::parse("011101011110");
  for (auto _ : state) benchmark::DoNotOptimize(property_e_witness(v, w));
}
BENCHMARK(bm_property_e_witness);

}  // namespace

BENCHMARK_MAIN();
