#include <benchmark/benchmark.h>

#include <random>

#include "netcurve/curve.hpp"
#include "netcurve/matrix.hpp"
#include "netcurve/netcode.hpp"
#include "netcurve/realize.hpp"

using namespace netcurve;

namespace {

Matrix random_matrix(const Field& f, std::size_t n, std::mt19937_64& rng) {
  std::uniform_int_distribution<Raw> dist(0, f.order() - 1);
  Matrix m(f, n, n);
  for (std::size_t r = 0; r < n; ++r)
    for (std::size_t c = 0; c < n; ++c) m(r, c) = dist(rng);
  return m;
}

NetworkCode standard_code(const Field& f, std::size_t n, std::size_t members, std::size_t dim) {
  std::vector<Member> ms;
  for (std::size_t s = 0; s < members; ++s) {
    std::vector<Vector> rows;
    for (std::size_t i = 0; i < dim; ++i) {
      Vector v(n, 0);
      v[(s + i) % n] = 1;
      rows.push_back(v);
    }
    ms.push_back({"m" + std::to_string(s), Subspace::span(f, n, rows), std::nullopt});
  }
  return NetworkCode(f, n, std::move(ms));
}

void BM_Rref(benchmark::State& state) {
  const Field f = Field::of_order(static_cast<std::uint32_t>(state.range(1)));
  std::mt19937_64 rng(1);
  const Matrix m = random_matrix(f, static_cast<std::size_t>(state.range(0)), rng);
  for (auto _ : state) benchmark::DoNotOptimize(rref(m));
}
BENCHMARK(BM_Rref)->Args({16, 2})->Args({64, 2})->Args({64, 251})->Args({128, 256});

void BM_AssignPoints(benchmark::State& state) {
  const Field f = Field::of_order(static_cast<std::uint32_t>(state.range(0)));
  const auto code = standard_code(f, 6, 5, 3);
  for (auto _ : state) benchmark::DoNotOptimize(assign_points(code));
}
BENCHMARK(BM_AssignPoints)->Arg(2)->Arg(9)->Arg(65536);

void BM_Realize(benchmark::State& state) {
  const Field f = Field::of_order(9);
  const auto dim = static_cast<std::size_t>(state.range(0));
  const auto code = standard_code(f, 8, 5, dim);
  for (auto _ : state) benchmark::DoNotOptimize(realize(code, Mode::plain));
}
BENCHMARK(BM_Realize)->Arg(1)->Arg(3)->Arg(6);

void BM_OrderSequence(benchmark::State& state) {
  const Field f = Field::of_order(256);
  const auto rnc = rational_normal_curve(f, static_cast<std::size_t>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(full_order_sequence(rnc, P1Point::affine(7)));
}
BENCHMARK(BM_OrderSequence)->Arg(8)->Arg(32)->Arg(64);

}  // namespace

BENCHMARK_MAIN();
