#include <benchmark/benchmark.h>

#include <numeric>
#include <random>

#include "fcg/bsgs.hpp"
#include "fcg/lattice.hpp"
#include "fcg/structure.hpp"
#include "fcg/theorems.hpp"
#include "support.hpp"

using namespace fcg;

namespace {

// S_n from a transposition and an n-cycle.
void BM_BsgsSymmetric(benchmark::State& state) {
  const auto n = static_cast<std::size_t>(state.range(0));
  std::vector<long long> swap(n), cycle(n);
  std::iota(swap.begin(), swap.end(), 1);
  std::swap(swap[0], swap[1]);
  for (std::size_t i = 0; i < n; ++i) cycle[i] = static_cast<long long>((i + 1) % n + 1);
  const std::vector<Perm> gens{Perm::from_one_based(swap), Perm::from_one_based(cycle)};
  for (auto _ : state) benchmark::DoNotOptimize(Bsgs(n, gens).base().size());
}
BENCHMARK(BM_BsgsSymmetric)->Arg(8)->Arg(12)->Arg(16)->Arg(20);

void BM_HermiteNormalForm(benchmark::State& state) {
  const auto n = static_cast<std::size_t>(state.range(0));
  std::mt19937_64 rng(1);
  std::uniform_int_distribution<Int> entry(-9, 9);
  Matrix m(n, n);
  for (std::size_t r = 0; r < n; ++r)
    for (std::size_t c = 0; c < n; ++c) m(r, c) = entry(rng);
  for (auto _ : state) benchmark::DoNotOptimize(hermite_normal_form(m));
}
BENCHMARK(BM_HermiteNormalForm)->Arg(2)->Arg(4)->Arg(6);

void BM_CentralizerAffine(benchmark::State& state) {
  const Group g = test::fixture("Z2C4").group;
  const Subgroup whole = Subgroup::whole(g);
  const Element x = test::word(g, "c*x");
  const Modulus one = Modulus::trivial(g);
  for (auto _ : state) benchmark::DoNotOptimize(centralizer_mod(whole, x, one));
}
BENCHMARK(BM_CentralizerAffine);

void BM_NilpotentTower(benchmark::State& state) {
  const Group g = test::fixture("Z2C4").group;
  const FCChain chain = check_bounded_fc_nilpotent_chain(FCChain::make(
      g, ChainKind::Nilpotent, {Subgroup::trivial(g), test::sub(g, {"x", "y"}), Subgroup::whole(g)}));
  for (auto _ : state) benchmark::DoNotOptimize(nilpotent_tower(chain).index);
}
BENCHMARK(BM_NilpotentTower);

}  // namespace

BENCHMARK_MAIN();
