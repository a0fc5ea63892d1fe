#include "aklt/transitions.hpp"

#include <cmath>
#include <stdexcept>

namespace aklt::transitions {

Isometry::Isometry(Matrix m) : matrix(std::move(m)), d_small(matrix.cols()), d_big(matrix.rows()) {
  if (d_small <= 0 || d_big < d_small) {
    throw std::invalid_argument("Isometry: matrix must be tall with positive dimensions");
  }
  if (ops::max_abs(matrix.adjoint() * matrix - ops::identity(d_small)) > kStrictTol) {
    throw std::invalid_argument("Isometry: dagger(m) m deviates from identity beyond 1e-12");
  }
}

TransitionExpectation::TransitionExpectation(Isometry iso, Eigen::Index dim_a, Eigen::Index dim_b)
    : stinespring(std::move(iso)), d_a(dim_a), d_b(dim_b) {
  if (d_a <= 0 || d_b <= 0) {
    throw std::invalid_argument("TransitionExpectation: dimensions must be positive");
  }
  if (stinespring.d_big != d_a * d_b) {
    throw std::invalid_argument("TransitionExpectation: isometry codomain must be d_a * d_b");
  }
  if (stinespring.d_small != d_a) {
    throw std::invalid_argument("TransitionExpectation: isometry domain must equal d_a");
  }
}

Matrix TransitionExpectation::apply(const Matrix& x_joint) const {
  if (x_joint.rows() != stinespring.d_big || x_joint.cols() != stinespring.d_big) {
    throw std::invalid_argument("TransitionExpectation::apply: input must be d_a*d_b square");
  }
  return stinespring.matrix.adjoint() * x_joint * stinespring.matrix;
}

Matrix TransitionExpectation::dual(const Matrix& rho) const {
  if (rho.rows() != stinespring.d_small || rho.cols() != stinespring.d_small) {
    throw std::invalid_argument("TransitionExpectation::dual: input must be d_a square");
  }
  return stinespring.matrix * rho * stinespring.matrix.adjoint();
}

channels::KrausChannel TransitionExpectation::as_channel() const {
  return channels::KrausChannel({stinespring.matrix.adjoint()}, stinespring.d_big,
                                stinespring.d_small);
}

channels::KrausChannel TransitionExpectation::dual_channel() const {
  return channels::KrausChannel({stinespring.matrix}, stinespring.d_small, stinespring.d_big);
}

BellStates bell_states() {
  const double r = 1.0 / std::sqrt(2.0);
  BellStates b;
  b.psi_minus = Vector::Zero(4);
  b.psi_minus(1) = r;   // |up down>
  b.psi_minus(2) = -r;  // |down up>
  b.psi_plus = Vector::Zero(4);
  b.psi_plus(1) = r;
  b.psi_plus(2) = r;
  return b;
}

Isometry v_isometry() {
  const BellStates b = bell_states();
  Matrix v(4, 2);
  v.col(basis::kUp) = b.psi_minus;
  v.col(basis::kDown) = b.psi_plus;
  return Isometry(std::move(v));
}

Isometry w_isometry() {
  const ops::AkltTensors a = ops::aklt_tensors();
  Matrix w = Matrix::Zero(6, 2);
  for (int k = 0; k < basis::kPhysicalDim; ++k) {
    for (int i = 0; i < basis::kVirtualDim; ++i) {
      for (int j = 0; j < basis::kVirtualDim; ++j) {
        w(i * basis::kPhysicalDim + k, j) = a[k](i, j);
      }
    }
  }
  return Isometry(std::move(w));
}

Matrix projection_p() {
  const double r = 1.0 / std::sqrt(2.0);
  Matrix p = Matrix::Zero(3, 4);
  p(basis::kPlus, 0) = 1.0;   // <up up|
  p(basis::kMinus, 3) = 1.0;  // <down down|
  p(basis::kZero, 1) = r;
  p(basis::kZero, 2) = r;
  return p;
}

const TransitionExpectation& hidden_transition() {
  static const TransitionExpectation te(v_isometry(), 2, 2);
  return te;
}

const TransitionExpectation& emission_transition() {
  static const TransitionExpectation te(w_isometry(), 2, 3);
  return te;
}

Matrix e_h(const Matrix& x_joint) { return hidden_transition().apply(x_joint); }

Matrix e_h_dual(const Matrix& rho) { return hidden_transition().dual(rho); }

Matrix e_oh(const Matrix& x, const Matrix& y) {
  if (x.rows() != 2 || x.cols() != 2) throw std::invalid_argument("e_oh: x must be 2x2");
  if (y.rows() != 3 || y.cols() != 3) throw std::invalid_argument("e_oh: y must be 3x3");
  return emission_transition().apply(ops::kron(x, y));
}

Matrix e_oh_dual(const Matrix& z) { return emission_transition().dual(z); }

std::vector<Matrix> emission_blocks(const TransitionExpectation& te) {
  const Matrix& w = te.stinespring.matrix;
  std::vector<Matrix> blocks;
  blocks.reserve(static_cast<std::size_t>(te.d_b));
  for (Eigen::Index k = 0; k < te.d_b; ++k) {
    Matrix b(te.d_a, te.stinespring.d_small);
    for (Eigen::Index i = 0; i < te.d_a; ++i) {
      for (Eigen::Index j = 0; j < te.stinespring.d_small; ++j) b(i, j) = w(i * te.d_b + k, j);
    }
    blocks.push_back(std::move(b));
  }
  return blocks;
}

}  // namespace aklt::transitions
