// Dense complex linear algebra and the fixed operator zoo (Pauli, spin-1,
// AKLT site tensors) shared by every other component.

#pragma once

#include <Eigen/Dense>

#include <array>
#include <complex>
#include <vector>

namespace aklt {

using Complex = std::complex<double>;
using Matrix = Eigen::MatrixXcd;
using Vector = Eigen::VectorXcd;

// Shared absolute tolerance for numerical checks. Structural identities
// (isometries, completeness sums) are held to the tighter strict value.
inline constexpr double kDefaultTol = 1e-10;
inline constexpr double kStrictTol = 1e-12;

// Basis bookkeeping used everywhere: physical spin-1 states (+,0,-) map to
// indices (0,1,2); virtual spin-1/2 states (up,down) map to (0,1).
namespace basis {

inline constexpr int kPhysicalDim = 3;
inline constexpr int kVirtualDim = 2;
inline constexpr int kPlus = 0;
inline constexpr int kZero = 1;
inline constexpr int kMinus = 2;
inline constexpr int kUp = 0;
inline constexpr int kDown = 1;
inline constexpr std::array<char, 3> kPhysicalLabels{'+', '0', '-'};

char physical_label(int k);
int physical_index(char label);

}  // namespace basis

namespace ops {

Matrix identity(Eigen::Index dim);
Matrix dagger(const Matrix& m);
Matrix commutator(const Matrix& a, const Matrix& b);

Matrix sigma_x();
Matrix sigma_y();
Matrix sigma_z();
Matrix sigma_plus();   // |up><down|
Matrix sigma_minus();  // |down><up|

Vector ket(Eigen::Index dim, Eigen::Index i);
Matrix ketbra(Eigen::Index dim, Eigen::Index i, Eigen::Index j);
Matrix projector(Eigen::Index dim, Eigen::Index i);

// Hilbert-Schmidt inner product Tr(a^dagger b).
Complex hs_inner(const Matrix& a, const Matrix& b);

double max_abs(const Matrix& m);
bool is_hermitian(const Matrix& m, double tol = kStrictTol);

// Tensor product with row-major pair index (iA, iB) -> iA*rows(b) + iB.
Matrix kron(const Matrix& a, const Matrix& b);

// Reduced matrix over the kept tensor factors. `dims` lists the factor
// dimensions in index order; `keep` is a strictly increasing subset of factor
// positions. Keeping nothing yields the 1x1 full trace.
Matrix partial_trace(const Matrix& m, const std::vector<Eigen::Index>& dims,
                     const std::vector<int>& keep);

struct Spin1Operators {
  Matrix sx;
  Matrix sy;
  Matrix sz;  // diag(1, 0, -1) in the (+,0,-) basis
};

Spin1Operators spin1_operators();

// AKLT site tensors acting on the virtual qubit:
//   A_+ = sqrt(2/3) sigma+,  A_0 = sqrt(1/3) sigma_z,  A_- = -sqrt(2/3) sigma-
struct AkltTensors {
  Matrix a_plus;
  Matrix a_zero;
  Matrix a_minus;

  const Matrix& operator[](int k) const;
  std::array<const Matrix*, 3> as_array() const;
};

AkltTensors aklt_tensors();

// Von Neumann entropy in bits, -sum lambda log2 lambda with 0 log 0 = 0.
// Requires a Hermitian, positive semidefinite, unit-trace input; eigenvalues
// below -1e-10 or a trace off by more than 1e-10 are rejected, and eigenvalues
// inside [-1e-10, 1e-12) are clamped to zero before the log.
double von_neumann_entropy(const Matrix& rho);

}  // namespace ops
}  // namespace aklt
