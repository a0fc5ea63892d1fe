#include "aklt/exact.hpp"

#include "test_helpers.hpp"

#include <doctest.h>

#include <cmath>

using namespace aklt;

TEST_CASE("periodic state amplitudes") {
  const exact::MpsStateVector state = exact::build_state(2);

  // String "00" sits at flat index 1*3 + 1; Tr(A_0 A_0) = 2/3.
  CHECK(std::abs(state.amplitudes(4) - Complex(2.0 / 3.0)) < 1e-15);
  // String "++" has amplitude Tr(A_+ A_+) = 0.
  CHECK(std::abs(state.amplitudes(0)) < 1e-15);
  CHECK(state.norm_sq == doctest::Approx(4.0 / 3.0).epsilon(1e-12));

  CHECK_THROWS_AS(exact::build_state(1), std::invalid_argument);
  CHECK_THROWS_AS(exact::build_state(11), std::invalid_argument);
}

TEST_CASE("norm closed form") {
  for (int n = 2; n <= 10; ++n) {
    const exact::MpsStateVector state = exact::build_state(n);
    CHECK(std::abs(state.norm_sq - exact::norm_sq_closed_form(n)) < 1e-10);
  }
}

TEST_CASE("two-site bond term") {
  const Matrix h2 = exact::two_site_term();
  CHECK(ops::is_hermitian(h2));

  Eigen::SelfAdjointEigenSolver<Matrix> es(h2);
  int low = 0, high = 0;
  for (Eigen::Index i = 0; i < 9; ++i) {
    const double ev = es.eigenvalues()(i);
    if (std::abs(ev + 2.0 / 3.0) < 1e-12) {
      ++low;
    } else if (std::abs(ev - 4.0 / 3.0) < 1e-12) {
      ++high;
    }
  }
  CHECK(low == 4);   // joint spin 0 and 1 sectors
  CHECK(high == 5);  // joint spin 2 sector
}

TEST_CASE("Hamiltonian structure") {
  const exact::HamiltonianMatrix open = exact::build_hamiltonian(2, false);
  CHECK(ops::max_abs(open.matrix - exact::two_site_term()) < 1e-14);

  const exact::HamiltonianMatrix ring = exact::build_hamiltonian(2, true);
  CHECK(ops::max_abs(ring.matrix - 2.0 * exact::two_site_term()) < 1e-14);

  const exact::HamiltonianMatrix h4 = exact::build_hamiltonian(4, true);
  CHECK(ops::is_hermitian(h4.matrix));

  // Total Sz commutes with the Hamiltonian.
  const ops::Spin1Operators s = ops::spin1_operators();
  Matrix total_sz = Matrix::Zero(81, 81);
  for (int site = 0; site < 4; ++site) {
    Matrix term = ops::identity(1);
    for (int f = 0; f < 4; ++f) term = ops::kron(term, f == site ? s.sz : ops::identity(3));
    total_sz += term;
  }
  CHECK(ops::max_abs(ops::commutator(h4.matrix, total_sz)) < 1e-12);

  CHECK_THROWS_AS(exact::build_hamiltonian(9, true), std::invalid_argument);
}

TEST_CASE("ground energy and eigen-residual") {
  for (int n = 3; n <= 6; ++n) {
    const exact::EnergyCheck check = exact::ground_energy_check(n);
    CHECK(check.energy == doctest::Approx(-2.0 * n / 3.0).epsilon(1e-10));
    CHECK(check.residual < 1e-8);
  }
}

TEST_CASE("matrix-free application agrees with the dense Hamiltonian") {
  const int n = 4;
  const exact::HamiltonianMatrix ham = exact::build_hamiltonian(n, true);
  const exact::MpsStateVector state = exact::build_state(n);
  const Vector dense = ham.matrix * state.amplitudes;

  const exact::EnergyCheck check = exact::ground_energy_check(n);
  const double dense_energy = state.amplitudes.dot(dense).real() / state.norm_sq;
  CHECK(check.energy == doctest::Approx(dense_energy).epsilon(1e-12));
  const double dense_residual =
      (dense - dense_energy * state.amplitudes).norm() / std::sqrt(state.norm_sq);
  CHECK(check.residual == doctest::Approx(dense_residual).epsilon(1e-9));
}

TEST_CASE("correlators") {
  const ops::Spin1Operators s = ops::spin1_operators();
  const Matrix sz = s.sz;

  SUBCASE("single-site expectations vanish by symmetry") {
    for (int i = 1; i <= 6; ++i) CHECK(std::abs(exact::site_expectation(6, sz, i)) < 1e-12);
  }

  SUBCASE("antiferromagnetic nearest neighbors") {
    CHECK(exact::correlation(6, sz, 1, 2) < 0.0);
  }

  SUBCASE("decay ratio near -1/3 at n = 8") {
    const double c1 = exact::correlation(8, sz, 1, 2);
    const double c2 = exact::correlation(8, sz, 1, 3);
    const double c3 = exact::correlation(8, sz, 1, 4);
    CHECK(c1 < 0.0);
    CHECK(c2 > 0.0);
    CHECK(c3 < 0.0);
    // Finite-size wrap effects allowed: within 25% of 1/3 in magnitude.
    CHECK(std::abs(c2 / c1) == doctest::Approx(1.0 / 3.0).epsilon(0.25));
    CHECK(std::abs(c3 / c2) == doctest::Approx(1.0 / 3.0).epsilon(0.25));
  }

  SUBCASE("index validation") {
    CHECK_THROWS_AS(exact::correlation(4, sz, 2, 2), std::out_of_range);
    CHECK_THROWS_AS(exact::correlation(4, sz, 0, 2), std::out_of_range);
    CHECK_THROWS_AS(exact::correlation(4, sz, 1, 5), std::out_of_range);
  }
}

TEST_CASE("block entropies") {
  SUBCASE("half chain approaches two cut bonds") {
    const double bits = exact::block_entropy(6, 3);
    CHECK(bits > 1.9);
    CHECK(bits <= 2.0 + 1e-12);
  }

  SUBCASE("complement symmetry") {
    CHECK(exact::block_entropy(6, 2) == doctest::Approx(exact::block_entropy(6, 4)).epsilon(1e-10));
  }

  SUBCASE("two sites reduce to the single-site state") {
    const exact::MpsStateVector state = exact::build_state(2);
    const Matrix rho_full =
        state.amplitudes * state.amplitudes.adjoint() / state.norm_sq;
    const Matrix rho_site = ops::partial_trace(rho_full, {3, 3}, {0});
    CHECK(exact::block_entropy(2, 1) ==
          doctest::Approx(ops::von_neumann_entropy(rho_site)).epsilon(1e-12));
  }

  SUBCASE("reshape agrees with the operator-level partial trace") {
    const exact::MpsStateVector state = exact::build_state(4);
    const Matrix rho_full = state.amplitudes * state.amplitudes.adjoint() / state.norm_sq;
    const Matrix rho_block = ops::partial_trace(rho_full, {9, 9}, {0});
    CHECK(exact::block_entropy(4, 2) ==
          doctest::Approx(ops::von_neumann_entropy(rho_block)).epsilon(1e-12));
  }

  CHECK_THROWS_AS(exact::block_entropy(4, 0), std::invalid_argument);
  CHECK_THROWS_AS(exact::block_entropy(4, 4), std::invalid_argument);
}
