// The generative triplet (phi0, E_H, E_OH), finite-horizon state evaluation
// in nested and decomposed form, hidden/observation marginals, and a
// Born-rule observation sampler.

#pragma once

#include "aklt/channels.hpp"
#include "aklt/transitions.hpp"

#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

namespace aklt::hqmm {

struct GenerativeTriplet {
  Matrix phi0;  // hidden density matrix rho_0 representing the initial functional
  transitions::TransitionExpectation e_h;
  transitions::TransitionExpectation e_oh;

  GenerativeTriplet(Matrix initial, transitions::TransitionExpectation hidden,
                    transitions::TransitionExpectation emission);

  Eigen::Index hidden_dim() const { return e_h.d_a; }
  Eigen::Index physical_dim() const { return e_oh.d_b; }
};

// Canonical triplet: rho_0 = I/2 (the fixed point of the AKLT channel),
// hidden map from V, emission map from W.
GenerativeTriplet aklt_triplet();

// Local observables X_1..X_n (hidden) and Y_1..Y_n (observed).
struct ObservableWord {
  std::vector<Matrix> hidden;
  std::vector<Matrix> observed;

  ObservableWord(std::vector<Matrix> xs, std::vector<Matrix> ys);
  int n() const { return static_cast<int>(hidden.size()); }
};

struct TrajectorySample {
  std::string outcomes;  // over the alphabet {+,0,-}
  double probability = 0.0;
  std::uint64_t seed = 0;
};

// Raised when a sampled prefix probability falls below 1e-14 and the
// conditional state can no longer be renormalized.
struct TrajectoryAbort : std::runtime_error {
  std::string prefix;
  explicit TrajectoryAbort(std::string partial);
};

// One step of the forward composition: E_H(E_OH(x (x) y) (x) z).
Matrix transition_map(const GenerativeTriplet& triplet, const Matrix& x, const Matrix& y,
                      const Matrix& z);

// Nested evaluation: fold Z <- transition_map(X_l, Y_l, Z) from l = n down
// to 1 starting at the identity, then trace against rho_0.
Complex evaluate(const GenerativeTriplet& triplet, const ObservableWord& word);

// The coefficient functional attached to index strings (k_1..k_n) and
// (k'_1..k'_n): the nested composition with the emission sum replaced by the
// single Kraus sandwich dagger(B_k) X_l B_k' at every site.
Complex coefficient_functional(const GenerativeTriplet& triplet, const std::vector<int>& ks,
                               const std::vector<int>& kps, const std::vector<Matrix>& xs);

// Independent evaluation path summing prod_l <k_l|Y_l|k'_l> times the
// coefficient functional over all index strings (9^n terms; guarded n <= 8).
Complex evaluate_decomposed(const GenerativeTriplet& triplet, const ObservableWord& word);

inline constexpr int kDecomposedHorizonGuard = 8;

// Marginal over the hidden algebra: evaluate with every Y_l = identity.
Complex hidden_marginal(const GenerativeTriplet& triplet, const std::vector<Matrix>& xs);

// Single-sum Markov recursion Z <- E_H(collapse(X_l) (x) Z). For the AKLT
// triplet the emission sum collapses to the AKLT channel, so passing
// channels::aklt_channel() reproduces hidden_marginal.
Complex hidden_marginal_recursion(const GenerativeTriplet& triplet, const std::vector<Matrix>& xs,
                                  const channels::KrausChannel& collapse);

// Marginal over the observation algebra: evaluate with every X_l = identity.
Complex observation_marginal(const GenerativeTriplet& triplet, const std::vector<Matrix>& ys);

// Probability of an outcome string, i.e. the observation marginal of the
// corresponding projector word. Outcomes are physical basis indices.
double string_probability(const GenerativeTriplet& triplet, const std::vector<int>& outcomes);

// All 3^n outcome-string probabilities in row-major order (first site most
// significant). Guarded at n <= 10.
std::vector<double> enumerate_string_probabilities(const GenerativeTriplet& triplet, int n);

// Conditional distribution of the next outcome given an observed prefix;
// exposes the history dependence of the observation process.
std::vector<double> conditional_next_distribution(const GenerativeTriplet& triplet,
                                                  const std::vector<int>& prefix);

// Draws one trajectory of length n by sequential unraveling of the
// observation marginal: the unnormalized conditional hidden state is carried
// forward and renormalized per step. Deterministic for a fixed seed; the
// emitted probability is the exact probability of the string.
TrajectorySample sample_observations(const GenerativeTriplet& triplet, int n, std::uint64_t seed);

}  // namespace aklt::hqmm
