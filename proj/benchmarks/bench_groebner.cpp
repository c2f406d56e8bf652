#include <benchmark/benchmark.h>

#include "nilpat/nilpat.hpp"

namespace {

using namespace nilpat;

const ZnzPattern kG5 = ZnzPattern::from_rows({"---00", "+++00", "000--", "0-00-", "-0000"});
const ZnzPattern kCycleLoops = ZnzPattern::from_rows({"**0", "0**", "*0*"});
const ZnzPattern kFull3 = ZnzPattern::from_rows({"***", "***", "***"});

template <class Field>
void pattern_basis(benchmark::State& state, const ZnzPattern& a, Field field, MonomialOrder order) {
  const auto pi = pattern_ideal(a, field);
  for (auto _ : state) benchmark::DoNotOptimize(buchberger(pi.ideal, order));
}

template <class Field>
void saturation(benchmark::State& state, const ZnzPattern& a, Field field, SaturationMethod method) {
  const auto pi = pattern_ideal(a, field);
  const auto m = pi.star_monomial();
  SaturationOptions opts;
  opts.method = method;
  for (auto _ : state) benchmark::DoNotOptimize(saturate(pi.ideal, m, opts));
}

void BM_Groebner_CycleLoops_Q_Lex(benchmark::State& s) { pattern_basis(s, kCycleLoops, RationalField{}, MonomialOrder::lex()); }
void BM_Groebner_Full3_Z7_Lex(benchmark::State& s) { pattern_basis(s, kFull3, PrimeField(7), MonomialOrder::lex()); }
void BM_Groebner_Full3_Z7_Grevlex(benchmark::State& s) { pattern_basis(s, kFull3, PrimeField(7), MonomialOrder::grevlex()); }
void BM_Groebner_G5_Q_Lex(benchmark::State& s) { pattern_basis(s, kG5, RationalField{}, MonomialOrder::lex()); }

void BM_Saturate_G5_Q_ExtraVariable(benchmark::State& s) { saturation(s, kG5, RationalField{}, SaturationMethod::extra_variable); }
void BM_Saturate_G5_Q_IteratedColon(benchmark::State& s) { saturation(s, kG5, RationalField{}, SaturationMethod::iterated_colon); }
void BM_Saturate_CycleLoops_Z5(benchmark::State& s) { saturation(s, kCycleLoops, PrimeField(5), SaturationMethod::extra_variable); }

}  // namespace

BENCHMARK(BM_Groebner_CycleLoops_Q_Lex)->Unit(benchmark::kMicrosecond);
BENCHMARK(BM_Groebner_Full3_Z7_Lex)->Unit(benchmark::kMicrosecond);
BENCHMARK(BM_Groebner_Full3_Z7_Grevlex)->Unit(benchmark::kMicrosecond);
BENCHMARK(BM_Groebner_G5_Q_Lex)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_Saturate_G5_Q_ExtraVariable)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_Saturate_G5_Q_IteratedColon)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_Saturate_CycleLoops_Z5)->Unit(benchmark::kMicrosecond);
