// Serial vs OpenMP versions of the three parallel kernels.

#include "slodowy/invariants.hpp"
#include "slodowy/poisson.hpp"
#include "slodowy/stages.hpp"

#include <benchmark/benchmark.h>
#include <omp.h>

#include <algorithm>

using namespace slodowy;

namespace {

Mat E(int n, int i, int j) { return Mat::unit(n, i, j); }

const StageQuantum& sl3_quantum() {
  static const StageQuantum sq = make_stage_quantum(build_stage(Partition({2, 1}), Partition({3})));
  return sq;
}

void BM_InvariantBasis(benchmark::State& state) {
  const auto& ctx = *sl3_quantum().oneshot;
  const int D = static_cast<int>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(invariant_basis(ctx, D));
}

void BM_InvariantBasisSerial(benchmark::State& state) {
  const auto& ctx = *sl3_quantum().oneshot;
  const int D = static_cast<int>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(invariant_basis_serial(ctx, D));
}

// Slice through e = E12 + E23 in sl4 with the (3,1) Premet subalgebra.
struct SliceSetup {
  std::unique_ptr<PoissonAlgebra> P;
  std::unique_ptr<PoissonCtx> ctx;
  Vars prm;
  Section sec;

  SliceSetup() {
    const int n = 4;
    std::vector<Mat> m{E(n, 2, 1), E(n, 3, 1), E(n, 3, 2), E(n, 4, 1), E(n, 3, 4)};
    std::vector<Mat> elems;
    std::vector<std::string> names;
    for (int i = 1; i < n; ++i) {
      elems.push_back(E(n, i, i) - E(n, i + 1, i + 1));
      names.push_back("h" + std::to_string(i));
    }
    for (int i = 1; i <= n; ++i)
      for (int j = 1; j <= n; ++j)
        if (i != j && std::find(m.begin(), m.end(), E(n, i, j)) == m.end()) {
          elems.push_back(E(n, i, j));
          names.push_back(default_name(E(n, i, j), 0));
        }
    const int first_m = static_cast<int>(elems.size());
    const Mat e = E(n, 1, 2) + E(n, 2, 3);
    std::vector<Rat> chi;
    for (const auto& y : m) {
      elems.push_back(y);
      names.push_back(default_name(y, 0));
      chi.push_back((e * y).trace());
    }
    P = std::make_unique<PoissonAlgebra>(LieBasis(elems, names));
    ctx = std::make_unique<PoissonCtx>(*P, first_m, chi);
    prm = make_vars({"a", "b", "c", "d", "f"});
    const char* rows[4][4] = {{"a", "1", "0", "0"},
                              {"b - 3*a^2", "a", "1", "0"},
                              {"c + 20*a^3", "b - 3*a^2", "a", "d"},
                              {"f", "0", "0", "-3*a"}};
    std::vector<std::vector<Poly>> X(4);
    for (int i = 0; i < 4; ++i)
      for (int j = 0; j < 4; ++j) X[i].push_back(parse_poly(prm, rows[i][j]));
    sec = section_from_matrix(*ctx, prm, X);
  }
};

const SliceSetup& slice() {
  static const SliceSetup s;
  return s;
}

void BM_InvariantLift(benchmark::State& state) {
  const auto& s = slice();
  const auto target = Poly::var(s.prm, "c");
  for (auto _ : state) benchmark::DoNotOptimize(invariant_lift(target, s.sec, *s.ctx, 3));
}

void BM_InvariantLiftSerial(benchmark::State& state) {
  const auto& s = slice();
  const auto target = Poly::var(s.prm, "c");
  for (auto _ : state) benchmark::DoNotOptimize(invariant_lift_serial(target, s.sec, *s.ctx, 3));
}

std::vector<std::pair<Partition, Partition>> covers_of(int n) {
  std::vector<std::pair<Partition, Partition>> out;
  for (const auto& mu : all_partitions(n))
    for (const auto& lam : covers_above(mu)) out.emplace_back(mu, lam);
  return out;
}

void BM_VerifyCovers(benchmark::State& state) {
  const auto work = covers_of(static_cast<int>(state.range(0)));
  const int count = static_cast<int>(work.size());
  for (auto _ : state) {
    int pass = 0;
#pragma omp parallel for schedule(dynamic, 1) reduction(+ : pass)
    for (int k = 0; k < count; ++k) pass += verify_stage(work[k].first, work[k].second).all();
    benchmark::DoNotOptimize(pass);
  }
}

void BM_VerifyCoversSerial(benchmark::State& state) {
  const auto work = covers_of(static_cast<int>(state.range(0)));
  for (auto _ : state) {
    int pass = 0;
    for (const auto& [mu, lam] : work) pass += verify_stage(mu, lam).all();
    benchmark::DoNotOptimize(pass);
  }
}

}  // namespace

BENCHMARK(BM_InvariantBasisSerial)->Arg(4)->Arg(6)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_InvariantBasis)->Arg(4)->Arg(6)->Unit(benchmark::kMillisecond)->UseRealTime();
BENCHMARK(BM_InvariantLiftSerial)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_InvariantLift)->Unit(benchmark::kMillisecond)->UseRealTime();
BENCHMARK(BM_VerifyCoversSerial)->Arg(6)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_VerifyCovers)->Arg(6)->Unit(benchmark::kMillisecond)->UseRealTime();

BENCHMARK_MAIN();
