// Kraus-channel calculus: application and duality, Choi-Jamiolkowski
// construction, CPTP verification, transfer-matrix spectra, and the AKLT
// channel itself.

#pragma once

#include "aklt/ops.hpp"

#include <vector>

namespace aklt::channels {

// A completely positive map given by a finite Kraus family. Trace
// preservation is checked on demand, never assumed.
struct KrausChannel {
  std::vector<Matrix> kraus;  // each d_out x d_in
  Eigen::Index d_in = 0;
  Eigen::Index d_out = 0;

  KrausChannel(std::vector<Matrix> operators, Eigen::Index in, Eigen::Index out);
};

struct ChoiReport {
  Matrix choi;  // (d_in*d_out) square, reference factor first
  double min_eigenvalue = 0.0;
  double purity = 0.0;
  double entropy_ref = 0.0;  // bits, reduced over the reference factor
  double entropy_out = 0.0;  // bits, reduced over the output factor
};

struct CptpReport {
  bool cptp = false;
  double trace_residual = 0.0;       // max-norm of sum K^dag K - identity
  double choi_min_eigenvalue = 0.0;  // most negative Choi eigenvalue
};

struct SpectrumReport {
  std::vector<Complex> eigenvalues;  // sorted by descending magnitude
  double spectral_gap = 0.0;         // |lambda_1| - |lambda_2|
  double correlation_length = 0.0;   // lattice sites; infinity when gapless
};

// Schroedinger action sum_K K rho K^dagger.
Matrix apply(const KrausChannel& ch, const Matrix& rho);

// Heisenberg (Hilbert-Schmidt adjoint) action sum_K K^dagger x K.
Matrix dual_apply(const KrausChannel& ch, const Matrix& x);

// Choi state J = (id (x) ch)(|Omega><Omega|) with |Omega> the 1/sqrt(d_in)
// normalized maximally entangled pair, so Tr J = 1 for a trace-preserving
// channel. Reduced entropies are taken across the reference/output cut of
// J normalized to unit trace.
ChoiReport choi(const KrausChannel& ch);

CptpReport is_cptp(const KrausChannel& ch, double tol = kDefaultTol);

// Eigenvalues of the d^2 x d^2 matrix sum_K K (x) conj(K) acting on
// row-major vectorized matrices. Ties in magnitude are broken by descending
// real part, then descending imaginary part.
SpectrumReport transfer_spectrum(const KrausChannel& ch);

// The 2 -> 2 channel with Kraus family {A_+, A_0, A_-}.
KrausChannel aklt_channel();

// Kraus operators recovered from the eigendecomposition of a Choi matrix;
// eigenvalues below `tol` are dropped.
std::vector<Matrix> kraus_from_choi(const Matrix& choi_matrix, Eigen::Index d_in,
                                    Eigen::Index d_out, double tol = kDefaultTol);

}  // namespace aklt::channels
