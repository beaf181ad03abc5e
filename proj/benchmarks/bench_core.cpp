#include <benchmark/benchmark.h>

#include "grpd/algebra.hpp"
#include "grpd/br.hpp"
#include "grpd/groupoid.hpp"
#include "grpd/kpar.hpp"
#include "grpd/partial_rep.hpp"
#include "grpd/scalar.hpp"

namespace {

void BM_BuildBrPairGroupoid(benchmark::State& state) {
  grpd::FiniteGroupoid g = grpd::build_pair_groupoid(std::size_t(state.range(0)));
  for (auto _ : state) {
    grpd::BRGroupoid brg = grpd::build_br_groupoid(g, 1u << 20);
    benchmark::DoNotOptimize(brg.size());
  }
}
BENCHMARK(BM_BuildBrPairGroupoid)->DenseRange(2, 5);

void BM_BuildBrCyclic(benchmark::State& state) {
  grpd::FiniteGroupoid g = grpd::build_cyclic_group(std::size_t(state.range(0)));
  for (auto _ : state) {
    grpd::BRGroupoid brg = grpd::build_br_groupoid(g, 1u << 20);
    benchmark::DoNotOptimize(brg.size());
  }
}
BENCHMARK(BM_BuildBrCyclic)->DenseRange(2, 8);

void BM_ValidateBrBase(benchmark::State& state) {
  grpd::BRGroupoid brg =
      grpd::build_br_groupoid(grpd::build_pair_groupoid(std::size_t(state.range(0))), 1u << 20);
  for (auto _ : state) {
    grpd::ValidationReport report = grpd::validate(brg.base());
    benchmark::DoNotOptimize(report.ok());
  }
}
BENCHMARK(BM_ValidateBrBase)->DenseRange(2, 4);

void BM_SubalgebraClosure(benchmark::State& state) {
  grpd::RationalField q;
  grpd::FiniteGroupoid g = grpd::build_pair_groupoid(std::size_t(state.range(0)));
  grpd::BRGroupoid brg = grpd::build_br_groupoid(g, 1u << 20);
  std::vector<grpd::AlgebraElement<grpd::RationalField>> lam = grpd::lambda_rep(g, brg, q);
  for (auto _ : state) {
    auto basis = grpd::subalgebra_closure(brg.base(), q, lam, false);
    benchmark::DoNotOptimize(basis.size());
  }
}
BENCHMARK(BM_SubalgebraClosure)->DenseRange(2, 3);

void BM_VerifyIsoEx1(benchmark::State& state) {
  grpd::FiniteGroupoid g = grpd::build_ex1();
  grpd::RationalField q;
  for (auto _ : state) {
    grpd::IsoCertificate cert = grpd::verify_iso(g, q);
    benchmark::DoNotOptimize(cert.passed());
  }
}
BENCHMARK(BM_VerifyIsoEx1);

void BM_PiTildeRegular(benchmark::State& state) {
  grpd::FiniteGroupoid g = grpd::build_pair_groupoid(2);
  grpd::RationalField q;
  grpd::BRGroupoid brg = grpd::build_br_groupoid(g);
  grpd::PartialRep<grpd::RationalField> rep = grpd::rep_from_regular(g, q);
  for (auto _ : state) {
    grpd::BRAlgebraHom<grpd::RationalField> hom = grpd::pi_tilde(rep, brg);
    benchmark::DoNotOptimize(hom.images.size());
  }
}
BENCHMARK(BM_PiTildeRegular);

}  // namespace

BENCHMARK_MAIN();
