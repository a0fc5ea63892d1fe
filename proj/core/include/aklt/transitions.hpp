// The isometries V and W, the Clebsch-Gordan projection P, and the hidden /
// emission transition expectations with their dual channels.

#pragma once

#include "aklt/channels.hpp"
#include "aklt/ops.hpp"

#include <vector>

namespace aklt::transitions {

// A d_big x d_small matrix with dagger(m) * m = identity(d_small).
struct Isometry {
  Matrix matrix;
  Eigen::Index d_small = 0;
  Eigen::Index d_big = 0;

  explicit Isometry(Matrix m);
};

// A unital completely positive map B(H_A (x) H_B) -> B(H_A) in Stinespring
// form: apply(X) = dagger(V) X V with V: H_A -> H_A (x) H_B. Its dual
// dual(rho) = V rho dagger(V) is a trace-preserving channel.
struct TransitionExpectation {
  Isometry stinespring;
  Eigen::Index d_a = 0;
  Eigen::Index d_b = 0;

  TransitionExpectation(Isometry iso, Eigen::Index dim_a, Eigen::Index dim_b);

  Matrix apply(const Matrix& x_joint) const;
  Matrix dual(const Matrix& rho) const;

  // The same maps as Kraus channels, which makes the Choi machinery and the
  // complete-positivity checks of the channels component directly reusable.
  channels::KrausChannel as_channel() const;    // d_big -> d_small, unital
  channels::KrausChannel dual_channel() const;  // d_small -> d_big, trace-preserving
};

struct BellStates {
  Vector psi_minus;  // (|ud> - |du|)/sqrt(2)
  Vector psi_plus;   // (|ud> + |du|)/sqrt(2)
};

BellStates bell_states();

// V = |psi-><up| + |psi+><down|, a 4x2 isometry.
Isometry v_isometry();

// W xi = sum_k A_k xi (x) |k>, a 6x2 isometry onto hidden (x) physical.
Isometry w_isometry();

// Clebsch-Gordan projection (3x4) from virtual (x) virtual onto the spin-1
// triplet: P = |+><uu| + |-><dd| + |0> (<ud| + <du|)/sqrt(2).
Matrix projection_p();

// Canonical transition expectations built on V and W.
const TransitionExpectation& hidden_transition();
const TransitionExpectation& emission_transition();

Matrix e_h(const Matrix& x_joint);   // dagger(V) x V, 4x4 -> 2x2
Matrix e_h_dual(const Matrix& rho);  // V rho dagger(V), 2x2 -> 4x4
Matrix e_oh(const Matrix& x, const Matrix& y);  // dagger(W)(x (x) y)W, (2x2, 3x3) -> 2x2
Matrix e_oh_dual(const Matrix& z);   // W z dagger(W), 2x2 -> 6x6

// Block decomposition of a Stinespring isometry against the second tensor
// factor: V = sum_k B_k (x) |k>, giving the Kraus family of the emission sum
// apply(X (x) Y) = sum_{k,k'} <k|Y|k'> dagger(B_k) X B_k'.
std::vector<Matrix> emission_blocks(const TransitionExpectation& te);

}  // namespace aklt::transitions
