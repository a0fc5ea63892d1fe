#include "aklt/ops.hpp"

#include "test_helpers.hpp"

#include <doctest.h>

#include <cmath>

using namespace aklt;

TEST_CASE("kron bookkeeping") {
  CHECK(ops::max_abs(ops::kron(ops::identity(2), ops::identity(2)) - ops::identity(4)) == 0.0);

  // sigma+ (x) sigma- has its single 1 at row (0,1), column (1,0).
  const Matrix k = ops::kron(ops::sigma_plus(), ops::sigma_minus());
  CHECK(k(1, 2) == Complex(1.0));
  CHECK(std::abs(k.sum() - Complex(1.0)) < 1e-15);

  const ops::AkltTensors a = ops::aklt_tensors();
  const Matrix t = ops::kron(a.a_plus, a.a_plus.conjugate());
  CHECK(std::abs(t(0, 3) - Complex(2.0 / 3.0)) < 1e-15);
  CHECK(std::abs(t.sum() - Complex(2.0 / 3.0)) < 1e-15);
}

TEST_CASE("kron associativity") {
  testing::Rng rng(11);
  for (int trial = 0; trial < 20; ++trial) {
    const Matrix a = rng.ginibre(2, 3);
    const Matrix b = rng.ginibre(3, 2);
    const Matrix c = rng.ginibre(2, 2);
    CHECK(ops::max_abs(ops::kron(ops::kron(a, b), c) - ops::kron(a, ops::kron(b, c))) < 1e-12);
  }
}

TEST_CASE("partial trace") {
  Vector bell = Vector::Zero(4);
  bell(1) = 1.0 / std::sqrt(2.0);
  bell(2) = -1.0 / std::sqrt(2.0);
  const Matrix rho = bell * bell.adjoint();
  CHECK(ops::max_abs(ops::partial_trace(rho, {2, 2}, {0}) - ops::identity(2) / 2.0) < 1e-15);
  CHECK(ops::max_abs(ops::partial_trace(rho, {2, 2}, {1}) - ops::identity(2) / 2.0) < 1e-15);

  testing::Rng rng(12);
  const Matrix m = rng.complex_square(12);

  SUBCASE("full trace") {
    const Matrix traced = ops::partial_trace(m, {2, 3, 2}, {});
    CHECK(traced.rows() == 1);
    CHECK(std::abs(traced(0, 0) - m.trace()) < 1e-12);
  }

  SUBCASE("sequential equals joint") {
    const Matrix joint = ops::partial_trace(m, {2, 3, 2}, {1});
    const Matrix first = ops::partial_trace(m, {2, 3, 2}, {1, 2});  // drop factor 0
    const Matrix seq = ops::partial_trace(first, {3, 2}, {0});
    CHECK(ops::max_abs(joint - seq) < 1e-12);

    const Matrix other = ops::partial_trace(ops::partial_trace(m, {2, 3, 2}, {0, 1}), {2, 3}, {1});
    CHECK(ops::max_abs(joint - other) < 1e-12);
  }

  SUBCASE("trace preserved") {
    const Matrix reduced = ops::partial_trace(m, {4, 3}, {0});
    CHECK(std::abs(reduced.trace() - m.trace()) < 1e-12);
  }

  SUBCASE("dimension mismatch") {
    CHECK_THROWS_AS(ops::partial_trace(m, {2, 3}, {0}), std::invalid_argument);
    CHECK_THROWS_AS(ops::partial_trace(m, {2, 3, 2}, {3}), std::out_of_range);
  }
}

TEST_CASE("spin-1 operators") {
  const ops::Spin1Operators s = ops::spin1_operators();

  CHECK(ops::max_abs(ops::commutator(s.sx, s.sy) - Complex(0, 1) * s.sz) < 1e-14);
  CHECK(ops::max_abs(ops::commutator(s.sy, s.sz) - Complex(0, 1) * s.sx) < 1e-14);
  CHECK(ops::max_abs(ops::commutator(s.sz, s.sx) - Complex(0, 1) * s.sy) < 1e-14);

  CHECK(ops::max_abs(s.sx * s.sx + s.sy * s.sy + s.sz * s.sz - 2.0 * ops::identity(3)) < 1e-14);

  CHECK(s.sz(0, 0) == Complex(1.0));
  CHECK(s.sz(1, 1) == Complex(0.0));
  CHECK(s.sz(2, 2) == Complex(-1.0));
}

TEST_CASE("AKLT tensors") {
  const ops::AkltTensors a = ops::aklt_tensors();

  CHECK(ops::max_abs(a.a_zero - std::sqrt(1.0 / 3.0) * ops::sigma_z()) == 0.0);
  CHECK(ops::max_abs(a.a_plus - std::sqrt(2.0 / 3.0) * ops::sigma_plus()) == 0.0);
  CHECK(ops::max_abs(a.a_minus + std::sqrt(2.0 / 3.0) * ops::sigma_minus()) == 0.0);

  Matrix completeness = Matrix::Zero(2, 2);
  Matrix unitality = Matrix::Zero(2, 2);
  for (int k = 0; k < 3; ++k) {
    completeness += a[k].adjoint() * a[k];
    unitality += a[k] * a[k].adjoint();
  }
  CHECK(ops::max_abs(completeness - ops::identity(2)) < 1e-12);
  CHECK(ops::max_abs(unitality - ops::identity(2)) < 1e-12);
}

TEST_CASE("von Neumann entropy") {
  CHECK(ops::von_neumann_entropy(ops::identity(2) / 2.0) == doctest::Approx(1.0).epsilon(1e-12));
  CHECK(ops::von_neumann_entropy(ops::projector(4, 2)) == doctest::Approx(0.0).epsilon(1e-12));

  Matrix mixed = Matrix::Zero(4, 4);
  mixed(1, 1) = 0.5;
  mixed(2, 2) = 0.5;
  CHECK(ops::von_neumann_entropy(mixed) == doctest::Approx(1.0).epsilon(1e-12));

  SUBCASE("error paths") {
    Matrix negative = Matrix::Zero(2, 2);
    negative(0, 0) = 1.1;
    negative(1, 1) = -0.1;
    CHECK_THROWS_AS(ops::von_neumann_entropy(negative), std::invalid_argument);
    CHECK_THROWS_AS(ops::von_neumann_entropy(ops::identity(2)), std::invalid_argument);
    CHECK_THROWS_AS(ops::von_neumann_entropy(ops::sigma_plus()), std::invalid_argument);
  }

  SUBCASE("bounds on random densities") {
    testing::Rng rng(13);
    for (int trial = 0; trial < 25; ++trial) {
      const double bits = ops::von_neumann_entropy(rng.density(5));
      CHECK(bits >= 0.0);
      CHECK(bits <= std::log2(5.0) + 1e-12);
    }
  }
}

TEST_CASE("hermiticity detection") {
  testing::Rng rng(14);
  const Matrix h = rng.hermitian(4);
  CHECK(ops::is_hermitian(h));
  Matrix bumped = h;
  bumped(0, 1) += Complex(0, 2e-12);
  CHECK_FALSE(ops::is_hermitian(bumped));
  CHECK(ops::is_hermitian(bumped, 1e-10));
}

TEST_CASE("basis convention") {
  CHECK(basis::physical_label(0) == '+');
  CHECK(basis::physical_label(1) == '0');
  CHECK(basis::physical_label(2) == '-');
  CHECK(basis::physical_index('-') == 2);
  CHECK_THROWS_AS(basis::physical_index('x'), std::invalid_argument);
}
