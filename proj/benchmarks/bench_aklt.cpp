#include "aklt/channels.hpp"
#include "aklt/exact.hpp"
#include "aklt/hqmm.hpp"
#include "aklt/spt.hpp"

#include <benchmark/benchmark.h>

#include <random>

namespace {

using namespace aklt;

hqmm::ObservableWord random_word(int n, std::uint64_t seed) {
  std::mt19937_64 gen(seed);
  std::normal_distribution<double> dist(0.0, 1.0);
  const auto square = [&](Eigen::Index dim) {
    Matrix m(dim, dim);
    for (Eigen::Index i = 0; i < dim; ++i) {
      for (Eigen::Index j = 0; j < dim; ++j) m(i, j) = Complex(dist(gen), dist(gen));
    }
    return m;
  };
  std::vector<Matrix> xs, ys;
  for (int l = 0; l < n; ++l) {
    xs.push_back(square(2));
    ys.push_back(square(3));
  }
  return hqmm::ObservableWord(std::move(xs), std::move(ys));
}

void BM_Evaluate(benchmark::State& state) {
  const hqmm::GenerativeTriplet triplet = hqmm::aklt_triplet();
  const hqmm::ObservableWord word = random_word(static_cast<int>(state.range(0)), 1);
  for (auto _ : state) {
    benchmark::DoNotOptimize(hqmm::evaluate(triplet, word));
  }
}
BENCHMARK(BM_Evaluate)->Arg(2)->Arg(4)->Arg(8)->Arg(16);

void BM_EvaluateDecomposed(benchmark::State& state) {
  const hqmm::GenerativeTriplet triplet = hqmm::aklt_triplet();
  const hqmm::ObservableWord word = random_word(static_cast<int>(state.range(0)), 2);
  for (auto _ : state) {
    benchmark::DoNotOptimize(hqmm::evaluate_decomposed(triplet, word));
  }
}
BENCHMARK(BM_EvaluateDecomposed)->DenseRange(1, 4);

void BM_SampleTrajectory(benchmark::State& state) {
  const hqmm::GenerativeTriplet triplet = hqmm::aklt_triplet();
  std::uint64_t seed = 0;
  for (auto _ : state) {
    benchmark::DoNotOptimize(hqmm::sample_observations(triplet, static_cast<int>(state.range(0)), seed++));
  }
}
BENCHMARK(BM_SampleTrajectory)->Arg(3)->Arg(8);

void BM_TransferSpectrum(benchmark::State& state) {
  const channels::KrausChannel phi = channels::aklt_channel();
  for (auto _ : state) {
    benchmark::DoNotOptimize(channels::transfer_spectrum(phi));
  }
}
BENCHMARK(BM_TransferSpectrum);

void BM_Choi(benchmark::State& state) {
  const channels::KrausChannel phi = channels::aklt_channel();
  for (auto _ : state) {
    benchmark::DoNotOptimize(channels::choi(phi));
  }
}
BENCHMARK(BM_Choi);

void BM_BuildState(benchmark::State& state) {
  for (auto _ : state) {
    benchmark::DoNotOptimize(exact::build_state(static_cast<int>(state.range(0))));
  }
}
BENCHMARK(BM_BuildState)->Arg(4)->Arg(6)->Arg(8);

void BM_GroundEnergyCheck(benchmark::State& state) {
  for (auto _ : state) {
    benchmark::DoNotOptimize(exact::ground_energy_check(static_cast<int>(state.range(0))));
  }
}
BENCHMARK(BM_GroundEnergyCheck)->Arg(4)->Arg(6);

void BM_BlockEntropy(benchmark::State& state) {
  for (auto _ : state) {
    benchmark::DoNotOptimize(exact::block_entropy(6, 3));
  }
}
BENCHMARK(BM_BlockEntropy);

void BM_CovarianceCheck(benchmark::State& state) {
  const spt::SymmetryElement g = spt::rotation(0.3, -0.7, 0.2, 1.3);
  for (auto _ : state) {
    benchmark::DoNotOptimize(spt::check_covariance(g));
  }
}
BENCHMARK(BM_CovarianceCheck);

}  // namespace

int main(int argc, char** argv) {
  benchmark::Initialize(&argc, argv);
  if (benchmark::ReportUnrecognizedArguments(argc, argv)) return 1;
  benchmark::RunSpecifiedBenchmarks();
  benchmark::Shutdown();
  return 0;
}
