#include "aklt/exact.hpp"

#include <cmath>
#include <stdexcept>
#include <vector>

namespace aklt::exact {
namespace {

constexpr int kStateGuard = 10;
constexpr int kHamiltonianGuard = 8;

Eigen::Index pow3(int n) {
  Eigen::Index p = 1;
  for (int i = 0; i < n; ++i) p *= 3;
  return p;
}

void check_site_range(int n, int i) {
  if (i < 1 || i > n) throw std::out_of_range("exact: site index out of range");
}

// Applies a 9x9 two-site operator to the state vector on (1-based) sites
// a < b without materializing the full matrix.
Vector apply_two_site(const Matrix& op9, const Vector& psi, int n, int a, int b) {
  const Eigen::Index stride_a = pow3(n - a);
  const Eigen::Index stride_b = pow3(n - b);
  Vector out = Vector::Zero(psi.size());
  for (Eigen::Index idx = 0; idx < psi.size(); ++idx) {
    const Complex amp = psi(idx);
    if (amp == Complex(0.0)) continue;
    const int ka = static_cast<int>((idx / stride_a) % 3);
    const int kb = static_cast<int>((idx / stride_b) % 3);
    const Eigen::Index base = idx - ka * stride_a - kb * stride_b;
    for (int kap = 0; kap < 3; ++kap) {
      for (int kbp = 0; kbp < 3; ++kbp) {
        const Complex val = op9(kap * 3 + kbp, ka * 3 + kb);
        if (val == Complex(0.0)) continue;
        out(base + kap * stride_a + kbp * stride_b) += val * amp;
      }
    }
  }
  return out;
}

Vector apply_single_site(const Matrix& op, const Vector& psi, int n, int site) {
  const Eigen::Index stride = pow3(n - site);
  Vector out = Vector::Zero(psi.size());
  for (Eigen::Index idx = 0; idx < psi.size(); ++idx) {
    const Complex amp = psi(idx);
    if (amp == Complex(0.0)) continue;
    const int k = static_cast<int>((idx / stride) % 3);
    for (int kp = 0; kp < 3; ++kp) {
      const Complex val = op(kp, k);
      if (val == Complex(0.0)) continue;
      out(idx + (kp - k) * stride) += val * amp;
    }
  }
  return out;
}

Vector periodic_h_apply(const Vector& psi, int n) {
  const Matrix h2 = two_site_term();
  Vector out = Vector::Zero(psi.size());
  for (int a = 1; a < n; ++a) out += apply_two_site(h2, psi, n, a, a + 1);
  // Wrap bond (n, 1); on a two-site ring this doubles the single bond, which
  // keeps the per-bond count at n and the ground energy at -2n/3 for all n.
  out += apply_two_site(h2, psi, n, 1, n);
  return out;
}

}  // namespace

MpsStateVector build_state(int n) {
  if (n < 2 || n > kStateGuard) throw std::invalid_argument("build_state: requires 2 <= n <= 10");
  const ops::AkltTensors a = ops::aklt_tensors();

  MpsStateVector state;
  state.n = n;
  state.amplitudes = Vector::Zero(pow3(n));

  // Depth-first over outcome strings, sharing ordered prefix products; leaves
  // arrive in row-major order (first site most significant).
  Eigen::Index next = 0;
  const auto recurse = [&](auto&& self, int depth, const Matrix& product) -> void {
    if (depth == n) {
      state.amplitudes(next++) = product.trace();
      return;
    }
    for (int k = 0; k < 3; ++k) self(self, depth + 1, Matrix(product * a[k]));
  };
  recurse(recurse, 0, ops::identity(2));

  state.norm_sq = state.amplitudes.squaredNorm();
  if (state.norm_sq <= 0.0) throw std::runtime_error("build_state: vanishing norm");
  return state;
}

double norm_sq_closed_form(int n) { return 1.0 + 3.0 * std::pow(-1.0 / 3.0, n); }

Matrix two_site_term() {
  const ops::Spin1Operators s = ops::spin1_operators();
  const Matrix ss = ops::kron(s.sx, s.sx) + ops::kron(s.sy, s.sy) + ops::kron(s.sz, s.sz);
  return ss + (ss * ss) / 3.0;
}

HamiltonianMatrix build_hamiltonian(int n, bool periodic) {
  if (n < 2 || n > kHamiltonianGuard) {
    throw std::invalid_argument("build_hamiltonian: requires 2 <= n <= 8");
  }
  const Matrix h2 = two_site_term();
  const Eigen::Index dim = pow3(n);

  HamiltonianMatrix ham;
  ham.n = n;
  ham.periodic = periodic;
  ham.matrix = Matrix::Zero(dim, dim);

  // Embed the bond term on (1-based) sites a < b by looping over its nonzero
  // entries times an identity on the remaining factors.
  const auto add_bond = [&](int a, int b) {
    const Eigen::Index stride_a = pow3(n - a);
    const Eigen::Index stride_b = pow3(n - b);
    for (int ka = 0; ka < 3; ++ka) {
      for (int kb = 0; kb < 3; ++kb) {
        for (int kap = 0; kap < 3; ++kap) {
          for (int kbp = 0; kbp < 3; ++kbp) {
            const Complex val = h2(kap * 3 + kbp, ka * 3 + kb);
            if (val == Complex(0.0)) continue;
            for (Eigen::Index rest = 0; rest < dim; ++rest) {
              // Keep only indices whose a/b digits vanish; `rest` carries the
              // other factors.
              if ((rest / stride_a) % 3 != 0 || (rest / stride_b) % 3 != 0) continue;
              const Eigen::Index col = rest + ka * stride_a + kb * stride_b;
              const Eigen::Index row = rest + kap * stride_a + kbp * stride_b;
              ham.matrix(row, col) += val;
            }
          }
        }
      }
    }
  };

  for (int a = 1; a < n; ++a) add_bond(a, a + 1);
  if (periodic) add_bond(1, n);  // doubles the bond on a two-site ring
  return ham;
}

EnergyCheck ground_energy_check(int n) {
  if (n < 2 || n > kHamiltonianGuard) {
    throw std::invalid_argument("ground_energy_check: requires 2 <= n <= 8");
  }
  const MpsStateVector state = build_state(n);
  const Vector hpsi = periodic_h_apply(state.amplitudes, n);

  EnergyCheck check;
  const double norm = std::sqrt(state.norm_sq);
  check.energy = state.amplitudes.dot(hpsi).real() / state.norm_sq;
  check.residual = (hpsi - check.energy * state.amplitudes).norm() / norm;
  return check;
}

double site_expectation(int n, const Matrix& op, int i) {
  check_site_range(n, i);
  if (op.rows() != 3 || op.cols() != 3) {
    throw std::invalid_argument("site_expectation: observable must be 3x3");
  }
  const MpsStateVector state = build_state(n);
  const Vector applied = apply_single_site(op, state.amplitudes, n, i);
  return state.amplitudes.dot(applied).real() / state.norm_sq;
}

double correlation(int n, const Matrix& op, int i, int j) {
  check_site_range(n, i);
  check_site_range(n, j);
  if (i >= j) throw std::out_of_range("correlation: requires i < j");
  if (op.rows() != 3 || op.cols() != 3) {
    throw std::invalid_argument("correlation: observable must be 3x3");
  }
  const MpsStateVector state = build_state(n);
  const Vector applied =
      apply_single_site(op, apply_single_site(op, state.amplitudes, n, j), n, i);
  const double joint = state.amplitudes.dot(applied).real() / state.norm_sq;

  const auto single = [&](int site) {
    const Vector v = apply_single_site(op, state.amplitudes, n, site);
    return state.amplitudes.dot(v).real() / state.norm_sq;
  };
  return joint - single(i) * single(j);
}

double block_entropy(int n, int block_length) {
  if (block_length < 1 || block_length >= n) {
    throw std::invalid_argument("block_entropy: requires 1 <= block_length < n");
  }
  MpsStateVector state = build_state(n);
  state.amplitudes /= std::sqrt(state.norm_sq);

  // Reduced states on both sides of the cut share their nonzero spectrum
  // (the global state is pure), so diagonalize on the smaller factor.
  const int small = std::min(block_length, n - block_length);
  const Eigen::Index rows = pow3(small);
  const Eigen::Index cols = pow3(n - small);
  Matrix rho = Matrix::Zero(rows, rows);
  if (small == block_length) {
    // Row-major reshape: leading block index is the slow index.
    Eigen::Map<const Eigen::Matrix<Complex, Eigen::Dynamic, Eigen::Dynamic, Eigen::RowMajor>>
        psi(state.amplitudes.data(), rows, cols);
    rho = psi * psi.adjoint();
  } else {
    Eigen::Map<const Eigen::Matrix<Complex, Eigen::Dynamic, Eigen::Dynamic, Eigen::RowMajor>>
        psi(state.amplitudes.data(), cols, rows);
    rho = psi.transpose() * psi.conjugate();
  }
  return ops::von_neumann_entropy(rho);
}

}  // namespace aklt::exact
