#include "aklt/hqmm.hpp"

#include <algorithm>
#include <cmath>
#include <random>

namespace aklt::hqmm {
namespace {

constexpr double kPrefixProbabilityFloor = 1e-14;

void check_density(const Matrix& rho) {
  if (rho.rows() != rho.cols()) throw std::invalid_argument("GenerativeTriplet: phi0 must be square");
  if (!ops::is_hermitian(rho, kStrictTol)) {
    throw std::invalid_argument("GenerativeTriplet: phi0 is not Hermitian to 1e-12");
  }
  if (std::abs(rho.trace().real() - 1.0) > kStrictTol) {
    throw std::invalid_argument("GenerativeTriplet: phi0 trace deviates from 1 beyond 1e-12");
  }
  Eigen::SelfAdjointEigenSolver<Matrix> es(rho);
  if (es.eigenvalues().minCoeff() < -kStrictTol) {
    throw std::invalid_argument("GenerativeTriplet: phi0 has an eigenvalue below -1e-12");
  }
}

void check_word_dims(const GenerativeTriplet& t, const ObservableWord& word) {
  for (const Matrix& x : word.hidden) {
    if (x.rows() != t.hidden_dim() || x.cols() != t.hidden_dim()) {
      throw std::invalid_argument("ObservableWord: hidden observable dimension mismatch");
    }
  }
  for (const Matrix& y : word.observed) {
    if (y.rows() != t.physical_dim() || y.cols() != t.physical_dim()) {
      throw std::invalid_argument("ObservableWord: observed observable dimension mismatch");
    }
  }
}

std::vector<Matrix> identity_list(int n, Eigen::Index dim) {
  return std::vector<Matrix>(static_cast<std::size_t>(n), ops::identity(dim));
}

// Forward (Schroedinger) step of the sampler: the adjoint of
// Z -> E_H(M_k (x) Z) acting on the hidden state, with M_k = dagger(B_k) B_k.
Matrix forward_step(const GenerativeTriplet& t, const std::vector<Matrix>& blocks,
                    const Matrix& sigma, int k) {
  const Eigen::Index d = t.hidden_dim();
  const Matrix big = t.e_h.dual(sigma);  // V sigma dagger(V) on the pair
  const Matrix mk = blocks[static_cast<std::size_t>(k)].adjoint() *
                    blocks[static_cast<std::size_t>(k)];
  const Matrix weighted = ops::kron(mk, ops::identity(d)) * big;
  return ops::partial_trace(weighted, {d, d}, {1});
}

double canonical_uniform(std::mt19937_64& gen) {
  return static_cast<double>(gen() >> 11) * 0x1.0p-53;
}

}  // namespace

GenerativeTriplet::GenerativeTriplet(Matrix initial, transitions::TransitionExpectation hidden,
                                     transitions::TransitionExpectation emission)
    : phi0(std::move(initial)), e_h(std::move(hidden)), e_oh(std::move(emission)) {
  check_density(phi0);
  if (e_h.d_a != e_h.d_b) {
    throw std::invalid_argument("GenerativeTriplet: hidden transition must act on H (x) H");
  }
  if (phi0.rows() != e_h.d_a || e_oh.d_a != e_h.d_a) {
    throw std::invalid_argument("GenerativeTriplet: hidden dimensions disagree");
  }
}

GenerativeTriplet aklt_triplet() {
  return GenerativeTriplet(ops::identity(2) / 2.0, transitions::hidden_transition(),
                           transitions::emission_transition());
}

ObservableWord::ObservableWord(std::vector<Matrix> xs, std::vector<Matrix> ys)
    : hidden(std::move(xs)), observed(std::move(ys)) {
  if (hidden.empty() || hidden.size() != observed.size()) {
    throw std::invalid_argument("ObservableWord: lists must be nonempty and of equal length");
  }
}

TrajectoryAbort::TrajectoryAbort(std::string partial)
    : std::runtime_error("trajectory aborted: prefix probability below 1e-14 after \"" + partial +
                         "\""),
      prefix(std::move(partial)) {}

Matrix transition_map(const GenerativeTriplet& triplet, const Matrix& x, const Matrix& y,
                      const Matrix& z) {
  if (z.rows() != triplet.hidden_dim() || z.cols() != triplet.hidden_dim()) {
    throw std::invalid_argument("transition_map: z dimension mismatch");
  }
  return triplet.e_h.apply(ops::kron(triplet.e_oh.apply(ops::kron(x, y)), z));
}

Complex evaluate(const GenerativeTriplet& triplet, const ObservableWord& word) {
  check_word_dims(triplet, word);
  Matrix z = ops::identity(triplet.hidden_dim());
  for (int l = word.n() - 1; l >= 0; --l) {
    z = transition_map(triplet, word.hidden[static_cast<std::size_t>(l)],
                       word.observed[static_cast<std::size_t>(l)], z);
  }
  return (triplet.phi0 * z).trace();
}

Complex coefficient_functional(const GenerativeTriplet& triplet, const std::vector<int>& ks,
                               const std::vector<int>& kps, const std::vector<Matrix>& xs) {
  const std::size_t n = xs.size();
  if (ks.size() != n || kps.size() != n || n == 0) {
    throw std::invalid_argument("coefficient_functional: index/observable length mismatch");
  }
  const std::vector<Matrix> blocks = transitions::emission_blocks(triplet.e_oh);
  const int m = static_cast<int>(blocks.size());
  for (std::size_t l = 0; l < n; ++l) {
    if (ks[l] < 0 || ks[l] >= m || kps[l] < 0 || kps[l] >= m) {
      throw std::out_of_range("coefficient_functional: physical index out of range");
    }
  }
  Matrix z = ops::identity(triplet.hidden_dim());
  for (int l = static_cast<int>(n) - 1; l >= 0; --l) {
    const Matrix sandwich = blocks[static_cast<std::size_t>(ks[static_cast<std::size_t>(l)])].adjoint() *
                            xs[static_cast<std::size_t>(l)] *
                            blocks[static_cast<std::size_t>(kps[static_cast<std::size_t>(l)])];
    z = triplet.e_h.apply(ops::kron(sandwich, z));
  }
  return (triplet.phi0 * z).trace();
}

Complex evaluate_decomposed(const GenerativeTriplet& triplet, const ObservableWord& word) {
  check_word_dims(triplet, word);
  const int n = word.n();
  if (n > kDecomposedHorizonGuard) {
    throw std::invalid_argument("evaluate_decomposed: horizon guard n <= 8 exceeded");
  }
  const std::vector<Matrix> blocks = transitions::emission_blocks(triplet.e_oh);
  const int m = static_cast<int>(blocks.size());

  // Per-site Kraus sandwiches dagger(B_k) X_l B_k' and matrix elements
  // <k|Y_l|k'>, indexed k*m + k'.
  std::vector<std::vector<Matrix>> sandwiches(static_cast<std::size_t>(n));
  std::vector<std::vector<Complex>> weights(static_cast<std::size_t>(n));
  for (int l = 0; l < n; ++l) {
    auto& sl = sandwiches[static_cast<std::size_t>(l)];
    auto& wl = weights[static_cast<std::size_t>(l)];
    sl.reserve(static_cast<std::size_t>(m * m));
    wl.reserve(static_cast<std::size_t>(m * m));
    for (int k = 0; k < m; ++k) {
      for (int kp = 0; kp < m; ++kp) {
        sl.push_back(blocks[static_cast<std::size_t>(k)].adjoint() *
                     word.hidden[static_cast<std::size_t>(l)] *
                     blocks[static_cast<std::size_t>(kp)]);
        wl.push_back(word.observed[static_cast<std::size_t>(l)](k, kp));
      }
    }
  }

  // Depth-first over index strings, sharing the fold of common suffixes.
  Complex total = 0.0;
  const auto recurse = [&](auto&& self, int l, const Matrix& z) -> void {
    if (l < 0) {
      total += (triplet.phi0 * z).trace();
      return;
    }
    for (int pair = 0; pair < m * m; ++pair) {
      const Complex w = weights[static_cast<std::size_t>(l)][static_cast<std::size_t>(pair)];
      if (w == 0.0) continue;
      const Matrix inner =
          triplet.e_h.apply(ops::kron(sandwiches[static_cast<std::size_t>(l)][static_cast<std::size_t>(pair)], z));
      self(self, l - 1, Matrix(w * inner));
    }
  };
  recurse(recurse, n - 1, ops::identity(triplet.hidden_dim()));
  return total;
}

Complex hidden_marginal(const GenerativeTriplet& triplet, const std::vector<Matrix>& xs) {
  if (xs.empty()) throw std::invalid_argument("hidden_marginal: empty observable list");
  return evaluate(triplet, ObservableWord(xs, identity_list(static_cast<int>(xs.size()),
                                                            triplet.physical_dim())));
}

Complex hidden_marginal_recursion(const GenerativeTriplet& triplet, const std::vector<Matrix>& xs,
                                  const channels::KrausChannel& collapse) {
  if (xs.empty()) throw std::invalid_argument("hidden_marginal_recursion: empty observable list");
  Matrix z = ops::identity(triplet.hidden_dim());
  for (int l = static_cast<int>(xs.size()) - 1; l >= 0; --l) {
    z = triplet.e_h.apply(
        ops::kron(channels::apply(collapse, xs[static_cast<std::size_t>(l)]), z));
  }
  return (triplet.phi0 * z).trace();
}

Complex observation_marginal(const GenerativeTriplet& triplet, const std::vector<Matrix>& ys) {
  if (ys.empty()) throw std::invalid_argument("observation_marginal: empty observable list");
  return evaluate(triplet, ObservableWord(identity_list(static_cast<int>(ys.size()),
                                                        triplet.hidden_dim()),
                                          ys));
}

double string_probability(const GenerativeTriplet& triplet, const std::vector<int>& outcomes) {
  std::vector<Matrix> ys;
  ys.reserve(outcomes.size());
  for (int k : outcomes) {
    if (k < 0 || k >= triplet.physical_dim()) {
      throw std::out_of_range("string_probability: outcome index out of range");
    }
    ys.push_back(ops::projector(triplet.physical_dim(), k));
  }
  return observation_marginal(triplet, ys).real();
}

std::vector<double> enumerate_string_probabilities(const GenerativeTriplet& triplet, int n) {
  if (n < 1 || n > 10) {
    throw std::invalid_argument("enumerate_string_probabilities: requires 1 <= n <= 10");
  }
  const std::vector<Matrix> blocks = transitions::emission_blocks(triplet.e_oh);
  const int m = static_cast<int>(blocks.size());
  std::vector<double> out;
  out.reserve(static_cast<std::size_t>(std::pow(m, n)));
  // Forward tree over prefixes; leaves arrive in row-major outcome order.
  const auto recurse = [&](auto&& self, int depth, const Matrix& sigma) -> void {
    if (depth == n) {
      out.push_back(sigma.trace().real());
      return;
    }
    for (int k = 0; k < m; ++k) self(self, depth + 1, forward_step(triplet, blocks, sigma, k));
  };
  recurse(recurse, 0, triplet.phi0);
  return out;
}

std::vector<double> conditional_next_distribution(const GenerativeTriplet& triplet,
                                                  const std::vector<int>& prefix) {
  const std::vector<Matrix> blocks = transitions::emission_blocks(triplet.e_oh);
  const int m = static_cast<int>(blocks.size());
  Matrix sigma = triplet.phi0;
  for (int k : prefix) {
    if (k < 0 || k >= m) throw std::out_of_range("conditional_next_distribution: bad prefix index");
    sigma = forward_step(triplet, blocks, sigma, k);
    const double w = sigma.trace().real();
    if (w < kPrefixProbabilityFloor) {
      throw std::invalid_argument("conditional_next_distribution: prefix has vanishing probability");
    }
    sigma /= w;
  }
  std::vector<double> dist(static_cast<std::size_t>(m), 0.0);
  double total = 0.0;
  for (int k = 0; k < m; ++k) {
    const double w = std::max(0.0, forward_step(triplet, blocks, sigma, k).trace().real());
    dist[static_cast<std::size_t>(k)] = w;
    total += w;
  }
  for (double& w : dist) w /= total;
  return dist;
}

TrajectorySample sample_observations(const GenerativeTriplet& triplet, int n, std::uint64_t seed) {
  if (n < 1) throw std::invalid_argument("sample_observations: horizon must be >= 1");
  if (triplet.physical_dim() != basis::kPhysicalDim) {
    throw std::invalid_argument("sample_observations: outcome alphabet is {+,0,-}");
  }
  const std::vector<Matrix> blocks = transitions::emission_blocks(triplet.e_oh);
  const int m = static_cast<int>(blocks.size());

  std::mt19937_64 gen(seed);
  Matrix sigma = triplet.phi0;
  std::string outcomes;
  outcomes.reserve(static_cast<std::size_t>(n));
  double probability = 1.0;

  std::vector<double> weights(static_cast<std::size_t>(m), 0.0);
  for (int step = 0; step < n; ++step) {
    double total = 0.0;
    for (int k = 0; k < m; ++k) {
      weights[static_cast<std::size_t>(k)] =
          std::max(0.0, forward_step(triplet, blocks, sigma, k).trace().real());
      total += weights[static_cast<std::size_t>(k)];
    }
    if (total < kPrefixProbabilityFloor) throw TrajectoryAbort(outcomes);

    const double u = canonical_uniform(gen) * total;
    int chosen = m - 1;
    double cum = 0.0;
    for (int k = 0; k < m; ++k) {
      cum += weights[static_cast<std::size_t>(k)];
      if (u < cum) {
        chosen = k;
        break;
      }
    }

    // With Tr(sigma) renormalized to 1 the weights are the conditional
    // probabilities, and their running product telescopes to the exact
    // probability of the emitted string.
    probability *= weights[static_cast<std::size_t>(chosen)];
    if (probability < kPrefixProbabilityFloor) {
      throw TrajectoryAbort(outcomes + basis::physical_label(chosen));
    }
    sigma = forward_step(triplet, blocks, sigma, chosen) /
            weights[static_cast<std::size_t>(chosen)];
    outcomes.push_back(basis::physical_label(chosen));
  }

  TrajectorySample sample;
  sample.outcomes = std::move(outcomes);
  sample.probability = probability;
  sample.seed = seed;
  return sample;
}

}  // namespace aklt::hqmm
