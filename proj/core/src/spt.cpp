#include "aklt/spt.hpp"

#include "aklt/transitions.hpp"

#include <cmath>
#include <random>
#include <stdexcept>

namespace aklt::spt {
namespace {

Matrix exp_neg_i_angle(const Matrix& hermitian_generator, double angle) {
  Eigen::SelfAdjointEigenSolver<Matrix> es(hermitian_generator);
  if (es.info() != Eigen::Success) throw std::runtime_error("spt: eigensolver failed");
  Vector phases(es.eigenvalues().size());
  for (Eigen::Index i = 0; i < phases.size(); ++i) {
    phases(i) = std::exp(Complex(0.0, -angle * es.eigenvalues()(i)));
  }
  return es.eigenvectors() * phases.asDiagonal() * es.eigenvectors().adjoint();
}

// Fixed D2 section: pi(e) = I, pi(g_a) = -i sigma_a.
Matrix section(D2Element g) {
  switch (g) {
    case D2Element::e:
      return ops::identity(2);
    case D2Element::gx:
      return Complex(0, -1) * ops::sigma_x();
    case D2Element::gy:
      return Complex(0, -1) * ops::sigma_y();
    case D2Element::gz:
      return Complex(0, -1) * ops::sigma_z();
  }
  throw std::invalid_argument("spt: unknown D2 element");
}

// Hard-coded D2 multiplication table (pi-rotations about orthogonal axes).
D2Element d2_multiply(D2Element a, D2Element b) {
  if (a == D2Element::e) return b;
  if (b == D2Element::e) return a;
  if (a == b) return D2Element::e;
  const auto other = [](D2Element p, D2Element q) {
    const bool x = p == D2Element::gx || q == D2Element::gx;
    const bool y = p == D2Element::gy || q == D2Element::gy;
    if (x && y) return D2Element::gz;
    if (x) return D2Element::gy;
    return D2Element::gx;
  };
  return other(a, b);
}

struct RandomRotationStream {
  std::mt19937_64 gen;

  explicit RandomRotationStream(std::uint64_t seed) : gen(seed) {}

  double uniform() { return static_cast<double>(gen() >> 11) * 0x1.0p-53; }

  double gaussian() {
    std::normal_distribution<double> dist(0.0, 1.0);
    return dist(gen);
  }

  SymmetryElement element() {
    Eigen::Vector3d axis;
    do {
      axis = Eigen::Vector3d(gaussian(), gaussian(), gaussian());
    } while (axis.norm() < 1e-6);
    axis.normalize();
    return SymmetryElement(axis, uniform() * 2.0 * M_PI);
  }

  Matrix ginibre(Eigen::Index dim) {
    Matrix m(dim, dim);
    for (Eigen::Index i = 0; i < dim; ++i) {
      for (Eigen::Index j = 0; j < dim; ++j) m(i, j) = Complex(gaussian(), gaussian());
    }
    return m;
  }

  Matrix density(Eigen::Index dim) {
    const Matrix g = ginibre(dim);
    Matrix rho = g * g.adjoint();
    rho /= rho.trace();
    // Symmetrize the ~1e-16 anti-Hermitian rounding noise.
    return Matrix(((rho + rho.adjoint()) / 2.0));
  }
};

}  // namespace

SymmetryElement::SymmetryElement(Eigen::Vector3d rotation_axis, double rotation_angle,
                                 std::string tag)
    : axis(std::move(rotation_axis)), angle(rotation_angle), label(std::move(tag)) {
  if (std::abs(axis.norm() - 1.0) > kStrictTol) {
    throw std::invalid_argument("SymmetryElement: axis must have unit norm to 1e-12");
  }
}

SymmetryElement rotation(double ax, double ay, double az, double angle, std::string label) {
  Eigen::Vector3d axis(ax, ay, az);
  const double norm = axis.norm();
  if (norm <= 0.0) throw std::invalid_argument("rotation: zero axis");
  return SymmetryElement(axis / norm, angle, std::move(label));
}

SymmetryElement d2_element(D2Element g) {
  switch (g) {
    case D2Element::e:
      return rotation(0, 0, 1, 0.0, "e");
    case D2Element::gx:
      return rotation(1, 0, 0, M_PI, "g_x");
    case D2Element::gy:
      return rotation(0, 1, 0, M_PI, "g_y");
    case D2Element::gz:
      return rotation(0, 0, 1, M_PI, "g_z");
  }
  throw std::invalid_argument("spt: unknown D2 element");
}

RepresentationPair rep_pair(const SymmetryElement& g) {
  const Matrix h_virtual =
      (g.axis(0) * ops::sigma_x() + g.axis(1) * ops::sigma_y() + g.axis(2) * ops::sigma_z()) / 2.0;

  const ops::Spin1Operators s = ops::spin1_operators();
  const Matrix h_physical = g.axis(0) * s.sx - g.axis(1) * s.sy - g.axis(2) * s.sz;

  RepresentationPair pair;
  pair.pi_g = exp_neg_i_angle(h_virtual, g.angle);
  pair.rho_g = exp_neg_i_angle(h_physical, g.angle);
  return pair;
}

double check_covariance(const SymmetryElement& g) {
  const RepresentationPair rep = rep_pair(g);
  const Matrix m = rep.rho_g.adjoint();
  const ops::AkltTensors a = ops::aklt_tensors();

  double residual = 0.0;
  for (int k = 0; k < basis::kPhysicalDim; ++k) {
    Matrix lhs = Matrix::Zero(2, 2);
    for (int kp = 0; kp < basis::kPhysicalDim; ++kp) lhs += m(k, kp) * a[kp];
    const Matrix rhs = rep.pi_g * a[k] * rep.pi_g.adjoint();
    residual = std::max(residual, ops::max_abs(lhs - rhs));
  }
  return residual;
}

double check_equivariance(const SymmetryElement& g, const Matrix& x, const Matrix& y) {
  const RepresentationPair rep = rep_pair(g);
  const Matrix lhs = transitions::e_oh(rep.pi_g * x * rep.pi_g.adjoint(),
                                       rep.rho_g * y * rep.rho_g.adjoint());
  const Matrix rhs = rep.pi_g * transitions::e_oh(x, y) * rep.pi_g.adjoint();
  return ops::max_abs(lhs - rhs);
}

double check_dual_covariance(const SymmetryElement& g, const Matrix& sigma) {
  if (sigma.rows() != 2 || sigma.cols() != 2 || !ops::is_hermitian(sigma, kDefaultTol) ||
      std::abs(sigma.trace().real() - 1.0) > kDefaultTol) {
    throw std::invalid_argument("check_dual_covariance: sigma must be a 2x2 density matrix");
  }
  const RepresentationPair rep = rep_pair(g);
  const Matrix lhs = transitions::e_oh_dual(rep.pi_g * sigma * rep.pi_g.adjoint());
  const Matrix both = ops::kron(rep.pi_g, rep.rho_g);
  const Matrix rhs = both * transitions::e_oh_dual(sigma) * both.adjoint();
  return ops::max_abs(lhs - rhs);
}

SptIndexReport d2_index() {
  const Matrix ux = section(D2Element::gx);
  const Matrix uy = section(D2Element::gy);

  SptIndexReport report;
  report.commutator_matrix = ux * uy * ux.adjoint() * uy.adjoint();

  const double plus = ops::max_abs(report.commutator_matrix - ops::identity(2));
  const double minus = ops::max_abs(report.commutator_matrix + ops::identity(2));
  if (std::min(plus, minus) > kDefaultTol) {
    throw std::runtime_error("d2_index: commutator is not within 1e-10 of +/- identity");
  }
  report.eta_xy = minus < plus ? -1.0 : 1.0;
  report.theta = (report.commutator_matrix.trace() / 2.0).real();

  const auto square_phase = [](const Matrix& u) {
    const Matrix sq = u * u;
    const Complex phase = sq.trace() / 2.0;  // sq is +/- identity for the section
    if (ops::max_abs(sq - phase * ops::identity(2)) > kDefaultTol) {
      throw std::runtime_error("d2_index: generator square is not proportional to identity");
    }
    return phase.real();
  };
  report.eta_x = square_phase(ux);
  report.eta_y = square_phase(uy);
  return report;
}

Complex cocycle_phase(D2Element g1, D2Element g2) {
  const Matrix product = section(g1) * section(g2);
  const Matrix target = section(d2_multiply(g1, g2));
  const Complex omega = (target.adjoint() * product).trace() / 2.0;
  if (std::abs(std::abs(omega) - 1.0) > kDefaultTol ||
      ops::max_abs(product - omega * target) > kDefaultTol) {
    throw std::runtime_error("cocycle_phase: product is not proportional to the section element");
  }
  return omega;
}

SweepReport random_sweep(int trials, std::uint64_t seed) {
  if (trials < 1) throw std::invalid_argument("random_sweep: trials must be >= 1");
  RandomRotationStream stream(seed);

  SweepReport report;
  report.trials = trials;
  report.seed = seed;
  for (int t = 0; t < trials; ++t) {
    const SymmetryElement g = stream.element();
    report.max_covariance_residual =
        std::max(report.max_covariance_residual, check_covariance(g));
    report.max_equivariance_residual = std::max(
        report.max_equivariance_residual, check_equivariance(g, stream.ginibre(2), stream.ginibre(3)));
    report.max_dual_covariance_residual =
        std::max(report.max_dual_covariance_residual, check_dual_covariance(g, stream.density(2)));
  }
  return report;
}

}  // namespace aklt::spt
