#include "aklt/channels.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <stdexcept>

namespace aklt::channels {

KrausChannel::KrausChannel(std::vector<Matrix> operators, Eigen::Index in, Eigen::Index out)
    : kraus(std::move(operators)), d_in(in), d_out(out) {
  if (kraus.empty()) throw std::invalid_argument("KrausChannel: empty Kraus family");
  if (d_in <= 0 || d_out <= 0) throw std::invalid_argument("KrausChannel: dimensions must be positive");
  for (const Matrix& k : kraus) {
    if (k.rows() != d_out || k.cols() != d_in) {
      throw std::invalid_argument("KrausChannel: Kraus operator shape differs from declared d_out x d_in");
    }
  }
}

Matrix apply(const KrausChannel& ch, const Matrix& rho) {
  if (rho.rows() != ch.d_in || rho.cols() != ch.d_in) {
    throw std::invalid_argument("channels::apply: input must be d_in square");
  }
  Matrix out = Matrix::Zero(ch.d_out, ch.d_out);
  for (const Matrix& k : ch.kraus) out += k * rho * k.adjoint();
  return out;
}

Matrix dual_apply(const KrausChannel& ch, const Matrix& x) {
  if (x.rows() != ch.d_out || x.cols() != ch.d_out) {
    throw std::invalid_argument("channels::dual_apply: input must be d_out square");
  }
  Matrix out = Matrix::Zero(ch.d_in, ch.d_in);
  for (const Matrix& k : ch.kraus) out += k.adjoint() * x * k;
  return out;
}

ChoiReport choi(const KrausChannel& ch) {
  const Eigen::Index din = ch.d_in;
  const Eigen::Index dout = ch.d_out;
  const Eigen::Index dim = din * dout;

  // J = sum_K |v_K><v_K| with v_K[(i,a)] = K(a,i)/sqrt(d_in).
  Matrix j = Matrix::Zero(dim, dim);
  const double scale = 1.0 / std::sqrt(static_cast<double>(din));
  for (const Matrix& k : ch.kraus) {
    Vector v(dim);
    for (Eigen::Index i = 0; i < din; ++i) {
      for (Eigen::Index a = 0; a < dout; ++a) v(i * dout + a) = scale * k(a, i);
    }
    j += v * v.adjoint();
  }

  ChoiReport report;
  report.choi = j;
  Eigen::SelfAdjointEigenSolver<Matrix> es(j);
  if (es.info() != Eigen::Success) throw std::runtime_error("channels::choi: eigensolver failed");
  report.min_eigenvalue = es.eigenvalues().minCoeff();
  report.purity = (j * j).trace().real();

  const double tr = j.trace().real();
  if (tr <= 0.0) throw std::runtime_error("channels::choi: Choi matrix has nonpositive trace");
  const Matrix jn = j / tr;
  report.entropy_ref =
      ops::von_neumann_entropy(ops::partial_trace(jn, {din, dout}, {0}));
  report.entropy_out =
      ops::von_neumann_entropy(ops::partial_trace(jn, {din, dout}, {1}));
  return report;
}

CptpReport is_cptp(const KrausChannel& ch, double tol) {
  CptpReport report;
  Matrix sum = Matrix::Zero(ch.d_in, ch.d_in);
  for (const Matrix& k : ch.kraus) sum += k.adjoint() * k;
  report.trace_residual = ops::max_abs(sum - ops::identity(ch.d_in));

  Eigen::SelfAdjointEigenSolver<Matrix> es(choi(ch).choi);
  report.choi_min_eigenvalue = es.eigenvalues().minCoeff();

  report.cptp = report.trace_residual <= tol && report.choi_min_eigenvalue >= -tol;
  return report;
}

SpectrumReport transfer_spectrum(const KrausChannel& ch) {
  if (ch.d_in != ch.d_out) {
    throw std::invalid_argument("channels::transfer_spectrum: requires d_in == d_out");
  }
  const Eigen::Index d = ch.d_in;
  Matrix t = Matrix::Zero(d * d, d * d);
  for (const Matrix& k : ch.kraus) t += ops::kron(k, k.conjugate());

  Eigen::ComplexEigenSolver<Matrix> es(t, /*computeEigenvectors=*/false);
  if (es.info() != Eigen::Success) {
    throw std::runtime_error("channels::transfer_spectrum: eigensolver failed");
  }

  SpectrumReport report;
  report.eigenvalues.assign(es.eigenvalues().data(),
                            es.eigenvalues().data() + es.eigenvalues().size());
  std::sort(report.eigenvalues.begin(), report.eigenvalues.end(),
            [](const Complex& a, const Complex& b) {
              const double ma = std::abs(a), mb = std::abs(b);
              if (ma != mb) return ma > mb;
              if (a.real() != b.real()) return a.real() > b.real();
              return a.imag() > b.imag();
            });

  if (report.eigenvalues.size() >= 2) {
    const double m1 = std::abs(report.eigenvalues[0]);
    const double m2 = std::abs(report.eigenvalues[1]);
    report.spectral_gap = m1 - m2;
    // Snap trailing numerical error at |lambda_2| = 1 to the gapless case.
    if (m2 >= 1.0 - kStrictTol) {
      report.correlation_length = std::numeric_limits<double>::infinity();
    } else if (m2 <= 0.0) {
      report.correlation_length = 0.0;
    } else {
      report.correlation_length = -1.0 / std::log(m2);
    }
  } else {
    report.spectral_gap = 0.0;
    report.correlation_length = std::numeric_limits<double>::infinity();
  }
  return report;
}

KrausChannel aklt_channel() {
  const ops::AkltTensors t = ops::aklt_tensors();
  return KrausChannel({t.a_plus, t.a_zero, t.a_minus}, 2, 2);
}

std::vector<Matrix> kraus_from_choi(const Matrix& choi_matrix, Eigen::Index d_in,
                                    Eigen::Index d_out, double tol) {
  if (choi_matrix.rows() != d_in * d_out || choi_matrix.cols() != d_in * d_out) {
    throw std::invalid_argument("kraus_from_choi: Choi matrix dimension mismatch");
  }
  Eigen::SelfAdjointEigenSolver<Matrix> es(choi_matrix);
  if (es.info() != Eigen::Success) throw std::runtime_error("kraus_from_choi: eigensolver failed");

  std::vector<Matrix> out;
  const double scale = std::sqrt(static_cast<double>(d_in));
  for (Eigen::Index m = 0; m < es.eigenvalues().size(); ++m) {
    const double lambda = es.eigenvalues()(m);
    if (lambda <= tol) continue;
    Matrix k(d_out, d_in);
    for (Eigen::Index i = 0; i < d_in; ++i) {
      for (Eigen::Index a = 0; a < d_out; ++a) {
        k(a, i) = scale * std::sqrt(lambda) * es.eigenvectors()(i * d_out + a, m);
      }
    }
    out.push_back(std::move(k));
  }
  if (out.empty()) throw std::runtime_error("kraus_from_choi: no eigenvalue above tolerance");
  return out;
}

}  // namespace aklt::channels
