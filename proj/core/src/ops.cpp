#include "aklt/ops.hpp"

#include <unsupported/Eigen/KroneckerProduct>

#include <cmath>
#include <stdexcept>
#include <string>

namespace aklt {
namespace basis {

char physical_label(int k) {
  if (k < 0 || k >= kPhysicalDim) {
    throw std::out_of_range("physical_label: index must be 0, 1 or 2");
  }
  return kPhysicalLabels[static_cast<std::size_t>(k)];
}

int physical_index(char label) {
  switch (label) {
    case '+':
      return kPlus;
    case '0':
      return kZero;
    case '-':
      return kMinus;
    default:
      throw std::invalid_argument(std::string("physical_index: unknown label '") + label + "'");
  }
}

}  // namespace basis

namespace ops {

Matrix identity(Eigen::Index dim) { return Matrix::Identity(dim, dim); }

Matrix dagger(const Matrix& m) { return m.adjoint(); }

Matrix commutator(const Matrix& a, const Matrix& b) { return a * b - b * a; }

Matrix sigma_x() {
  Matrix m(2, 2);
  m << 0, 1, 1, 0;
  return m;
}

Matrix sigma_y() {
  Matrix m(2, 2);
  m << 0, Complex(0, -1), Complex(0, 1), 0;
  return m;
}

Matrix sigma_z() {
  Matrix m(2, 2);
  m << 1, 0, 0, -1;
  return m;
}

Matrix sigma_plus() { return ketbra(2, basis::kUp, basis::kDown); }

Matrix sigma_minus() { return ketbra(2, basis::kDown, basis::kUp); }

Vector ket(Eigen::Index dim, Eigen::Index i) {
  if (i < 0 || i >= dim) throw std::out_of_range("ket: index out of range");
  Vector v = Vector::Zero(dim);
  v(i) = 1.0;
  return v;
}

Matrix ketbra(Eigen::Index dim, Eigen::Index i, Eigen::Index j) {
  if (i < 0 || i >= dim || j < 0 || j >= dim) {
    throw std::out_of_range("ketbra: index out of range");
  }
  Matrix m = Matrix::Zero(dim, dim);
  m(i, j) = 1.0;
  return m;
}

Matrix projector(Eigen::Index dim, Eigen::Index i) { return ketbra(dim, i, i); }

Complex hs_inner(const Matrix& a, const Matrix& b) {
  if (a.rows() != b.rows() || a.cols() != b.cols()) {
    throw std::invalid_argument("hs_inner: dimension mismatch");
  }
  return (a.adjoint() * b).trace();
}

double max_abs(const Matrix& m) {
  if (m.size() == 0) return 0.0;
  return m.cwiseAbs().maxCoeff();
}

bool is_hermitian(const Matrix& m, double tol) {
  if (m.rows() != m.cols()) return false;
  return max_abs(m - m.adjoint()) <= tol;
}

Matrix kron(const Matrix& a, const Matrix& b) {
  Matrix out(a.rows() * b.rows(), a.cols() * b.cols());
  out = Eigen::kroneckerProduct(a, b);
  return out;
}

Matrix partial_trace(const Matrix& m, const std::vector<Eigen::Index>& dims,
                     const std::vector<int>& keep) {
  if (m.rows() != m.cols()) throw std::invalid_argument("partial_trace: matrix must be square");
  Eigen::Index total = 1;
  for (Eigen::Index d : dims) {
    if (d <= 0) throw std::invalid_argument("partial_trace: factor dimensions must be positive");
    total *= d;
  }
  if (total != m.rows()) {
    throw std::invalid_argument("partial_trace: matrix dimension does not match factor product");
  }
  const int nf = static_cast<int>(dims.size());
  for (std::size_t i = 0; i < keep.size(); ++i) {
    if (keep[i] < 0 || keep[i] >= nf) throw std::out_of_range("partial_trace: keep index out of range");
    if (i > 0 && keep[i] <= keep[i - 1]) {
      throw std::invalid_argument("partial_trace: keep indices must be strictly increasing");
    }
  }

  std::vector<int> traced;
  for (int f = 0; f < nf; ++f) {
    bool kept = false;
    for (int k : keep) kept = kept || (k == f);
    if (!kept) traced.push_back(f);
  }

  // Row-major strides: factor f advances by prod(dims[f+1:]).
  std::vector<Eigen::Index> stride(dims.size(), 1);
  for (int f = nf - 2; f >= 0; --f) stride[f] = stride[f + 1] * dims[f + 1];

  Eigen::Index kept_dim = 1;
  for (int k : keep) kept_dim *= dims[k];
  Eigen::Index traced_dim = 1;
  for (int t : traced) traced_dim *= dims[t];

  Matrix out = Matrix::Zero(kept_dim, kept_dim);
  for (Eigen::Index r = 0; r < kept_dim; ++r) {
    // Unpack the kept multi-index of r (row-major over kept factors).
    Eigen::Index base_r = 0, base_c = 0;
    for (Eigen::Index c = 0; c < kept_dim; ++c) {
      Eigen::Index rr = r, cc = c;
      base_r = 0;
      base_c = 0;
      for (int i = static_cast<int>(keep.size()) - 1; i >= 0; --i) {
        const Eigen::Index d = dims[keep[i]];
        base_r += (rr % d) * stride[keep[i]];
        base_c += (cc % d) * stride[keep[i]];
        rr /= d;
        cc /= d;
      }
      Complex sum = 0.0;
      for (Eigen::Index t = 0; t < traced_dim; ++t) {
        Eigen::Index tt = t, off = 0;
        for (int i = static_cast<int>(traced.size()) - 1; i >= 0; --i) {
          const Eigen::Index d = dims[traced[i]];
          off += (tt % d) * stride[traced[i]];
          tt /= d;
        }
        sum += m(base_r + off, base_c + off);
      }
      out(r, c) = sum;
    }
  }
  return out;
}

Spin1Operators spin1_operators() {
  const double r = 1.0 / std::sqrt(2.0);
  Spin1Operators s;
  s.sx = Matrix::Zero(3, 3);
  s.sx << 0, r, 0, r, 0, r, 0, r, 0;
  s.sy = Matrix::Zero(3, 3);
  s.sy << 0, Complex(0, -r), 0, Complex(0, r), 0, Complex(0, -r), 0, Complex(0, r), 0;
  s.sz = Matrix::Zero(3, 3);
  s.sz(0, 0) = 1.0;
  s.sz(2, 2) = -1.0;
  return s;
}

const Matrix& AkltTensors::operator[](int k) const {
  switch (k) {
    case basis::kPlus:
      return a_plus;
    case basis::kZero:
      return a_zero;
    case basis::kMinus:
      return a_minus;
    default:
      throw std::out_of_range("AkltTensors: index must be 0, 1 or 2");
  }
}

std::array<const Matrix*, 3> AkltTensors::as_array() const {
  return {&a_plus, &a_zero, &a_minus};
}

AkltTensors aklt_tensors() {
  AkltTensors t;
  t.a_plus = std::sqrt(2.0 / 3.0) * sigma_plus();
  t.a_zero = std::sqrt(1.0 / 3.0) * sigma_z();
  t.a_minus = -std::sqrt(2.0 / 3.0) * sigma_minus();
  return t;
}

double von_neumann_entropy(const Matrix& rho) {
  if (rho.rows() != rho.cols()) {
    throw std::invalid_argument("von_neumann_entropy: matrix must be square");
  }
  if (!is_hermitian(rho, kDefaultTol)) {
    throw std::invalid_argument("von_neumann_entropy: matrix is not Hermitian");
  }
  const double tr = rho.trace().real();
  if (std::abs(tr - 1.0) > kDefaultTol) {
    throw std::invalid_argument("von_neumann_entropy: trace deviates from 1 beyond 1e-10");
  }
  Eigen::SelfAdjointEigenSolver<Matrix> es(rho);
  if (es.info() != Eigen::Success) {
    throw std::runtime_error("von_neumann_entropy: eigensolver failed");
  }
  double bits = 0.0;
  for (Eigen::Index i = 0; i < es.eigenvalues().size(); ++i) {
    double lambda = es.eigenvalues()(i);
    if (lambda < -kDefaultTol) {
      throw std::invalid_argument("von_neumann_entropy: eigenvalue below -1e-10");
    }
    if (lambda < kStrictTol) lambda = 0.0;
    if (lambda > 0.0) bits -= lambda * std::log2(lambda);
  }
  return bits;
}

}  // namespace ops
}  // namespace aklt
