// Brute-force reference computations on the n-site periodic AKLT chain:
// explicit state vector, Hamiltonian, energies, correlators, and block
// entropies. Built only on ops-level primitives and the raw site tensors,
// independent of the channel/transition evaluation paths.

#pragma once

#include "aklt/ops.hpp"

namespace aklt::exact {

struct MpsStateVector {
  int n = 0;
  Vector amplitudes;  // 3^n entries, unnormalized trace amplitudes
  double norm_sq = 0.0;
};

struct HamiltonianMatrix {
  int n = 0;
  Matrix matrix;  // 3^n square
  bool periodic = true;
};

struct EnergyCheck {
  double energy = 0.0;
  double residual = 0.0;  // ||(H - E) psi|| / ||psi||
};

// Amplitude of outcome string (k_1..k_n) is Tr(A_{k_1} ... A_{k_n});
// flat index is row-major with the first site most significant.
// Guarded at 2 <= n <= 10.
MpsStateVector build_state(int n);

// Closed form 1 + 3(-1/3)^n for the squared norm of build_state(n).
double norm_sq_closed_form(int n);

// The 9x9 bond term S.S + (S.S)^2 / 3 with S.S built from spin1_operators.
Matrix two_site_term();

// Sum of bond terms over nearest neighbors, wrapping when periodic.
// Guarded at 2 <= n <= 8.
HamiltonianMatrix build_hamiltonian(int n, bool periodic);

// Rayleigh quotient and eigen-residual of the periodic chain state under the
// periodic Hamiltonian, evaluated matrix-free. Guarded at 2 <= n <= 8.
EnergyCheck ground_energy_check(int n);

// Expectation of a single-site observable in the normalized periodic state.
// Sites are 1-based.
double site_expectation(int n, const Matrix& op, int i);

// Connected correlator <op_i op_j> - <op_i><op_j> in the normalized periodic
// state, for a Hermitian single-site observable and 1 <= i < j <= n.
double correlation(int n, const Matrix& op, int i, int j);

// Von Neumann entropy (bits) of the reduced state of the first block_length
// sites of the normalized periodic state, 1 <= block_length < n.
double block_entropy(int n, int block_length);

}  // namespace aklt::exact
