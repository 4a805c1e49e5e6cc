#include "covent/matrix.hpp"
#include "oracles.hpp"

#include <doctest.h>

#include <cmath>
#include <stdexcept>

using namespace covent;

namespace {

ComplexMatrix random_matrix(int n, Rng& rng) {
  ComplexMatrix m(n, n);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) m(i, j) = rng.complex_normal();
  return m;
}

ComplexMatrix random_density(int n, Rng& rng) {
  const ComplexMatrix g = random_matrix(n, rng);
  ComplexMatrix rho = g * g.adjoint();
  return rho / rho.trace().real();
}

}  // namespace

TEST_CASE("kron matches the index definition") {
  Rng rng(1);
  const ComplexMatrix a = random_matrix(2, rng);
  const ComplexMatrix b = random_matrix(3, rng);
  const ComplexMatrix k = kron(a, b);
  REQUIRE(k.rows() == 6);
  for (int i = 0; i < 2; ++i)
    for (int j = 0; j < 2; ++j)
      for (int p = 0; p < 3; ++p)
        for (int q = 0; q < 3; ++q) CHECK(std::abs(k(i * 3 + p, j * 3 + q) - a(i, j) * b(p, q)) < 1e-14);
}

TEST_CASE("partial trace of a product state returns the factors") {
  Rng rng(2);
  for (int d : {2, 3, 4}) {
    const ComplexMatrix r1 = random_density(d, rng);
    const ComplexMatrix r2 = random_density(d, rng);
    const ComplexMatrix rho = kron(r1, r2);
    CHECK(max_abs_diff(partial_trace(rho, d, Subsystem::Second), r1) < 1e-13);
    CHECK(max_abs_diff(partial_trace(rho, d, Subsystem::First), r2) < 1e-13);
  }
}

TEST_CASE("partial trace of a generic state against index sums") {
  Rng rng(3);
  const int d = 3;
  const ComplexMatrix rho = random_density(d * d, rng);
  const ComplexMatrix r1 = partial_trace(rho, d, Subsystem::Second);
  for (int a = 0; a < d; ++a)
    for (int c = 0; c < d; ++c) {
      Complex s = 0.0;
      for (int b = 0; b < d; ++b) s += rho(a * d + b, c * d + b);
      CHECK(std::abs(r1(a, c) - s) < 1e-14);
    }
}

TEST_CASE("partial transpose") {
  const int d = 2;
  const ComplexMatrix singlet = oracle::projector(oracle::singlet(d, 0, 1));
  const RealVector ev = hermitian_eigenvalues(partial_transpose(singlet, d, Subsystem::Second));
  CHECK(ev(0) == doctest::Approx(-0.5).epsilon(1e-12));
  CHECK(ev(3) == doctest::Approx(0.5).epsilon(1e-12));

  Rng rng(4);
  const ComplexMatrix rho = random_density(9, rng);
  const ComplexMatrix twice = partial_transpose(partial_transpose(rho, 3, Subsystem::First), 3, Subsystem::First);
  CHECK(max_abs_diff(twice, rho) < 1e-15);
  // Transposing both halves is the full transpose.
  const ComplexMatrix both = partial_transpose(partial_transpose(rho, 3, Subsystem::First), 3, Subsystem::Second);
  CHECK(max_abs_diff(both, rho.transpose()) < 1e-15);
}

TEST_CASE("hermitian_eig") {
  Rng rng(5);
  const ComplexMatrix rho = random_density(5, rng);
  const auto spec = hermitian_eig(rho);
  for (int k = 1; k < 5; ++k) CHECK(spec.eigenvalues(k - 1) >= spec.eigenvalues(k));
  const ComplexMatrix back = spec.eigenvectors * spec.eigenvalues.cast<Complex>().asDiagonal() *
                             spec.eigenvectors.adjoint();
  CHECK(max_abs_diff(back, rho) < 1e-13);
  CHECK(min_eigenvalue(rho) == doctest::Approx(spec.eigenvalues(4)));

  ComplexMatrix bad = rho;
  bad(0, 1) += 0.1;
  CHECK_THROWS_AS(hermitian_eig(bad), std::invalid_argument);
}

TEST_CASE("symmetric and antisymmetric projectors") {
  for (int d = 2; d <= 5; ++d) {
    const ComplexMatrix ps = sym_projector(d);
    const ComplexMatrix pa = antisym_projector(d);
    CHECK(ps.trace().real() == doctest::Approx(d * (d + 1) / 2.0));
    CHECK(pa.trace().real() == doctest::Approx(d * (d - 1) / 2.0));
    CHECK(max_abs_diff(ps * ps, ps) < 1e-14);
    CHECK(max_abs(ps * pa) < 1e-14);
    CHECK(max_abs_diff(ps + pa, ComplexMatrix::Identity(d * d, d * d)) < 1e-14);
    const ComplexMatrix s01 = oracle::projector(oracle::singlet(d, 0, d - 1));
    CHECK(max_abs_diff(pa * s01, s01) < 1e-14);
  }
}

TEST_CASE("Haar unitaries") {
  Rng rng(42);
  double moment = 0.0;
  const int n = 4000;
  for (int s = 0; s < n; ++s) {
    const ComplexMatrix u = haar_unitary(2, rng);
    CHECK(unitarity_residual(u) < 1e-12);
    moment += std::norm(u(0, 0));
  }
  CHECK(std::abs(moment / n - 0.5) < 0.02);

  // |U_11|^2 is Beta(1, D-1) distributed: mean 1/D for any D.
  Rng rng3(7);
  double m3 = 0.0;
  for (int s = 0; s < n; ++s) m3 += std::norm(haar_unitary(3, rng3)(0, 0));
  CHECK(std::abs(m3 / n - 1.0 / 3.0) < 0.02);
}

TEST_CASE("Rng is deterministic per seed") {
  Rng a(99), b(99), c(100);
  for (int k = 0; k < 10; ++k) {
    const double x = a.normal();
    CHECK(x == b.normal());
    (void)c.normal();
  }
  CHECK(a.draws() == b.draws());
  CHECK(Rng(99).uniform() != Rng(100).uniform());
}

TEST_CASE("von Neumann entropy") {
  for (int d = 2; d <= 6; ++d) {
    const ComplexMatrix mixed = ComplexMatrix::Identity(d, d) / double(d);
    CHECK(von_neumann_entropy(mixed) == doctest::Approx(std::log(d)).epsilon(1e-12));
    CHECK(std::abs(von_neumann_entropy(oracle::projector(basis_ket(d, 1)))) < 1e-12);
  }
  ComplexMatrix diag = ComplexMatrix::Zero(3, 3);
  diag(0, 0) = 0.5;
  diag(1, 1) = 0.3;
  diag(2, 2) = 0.2;
  CHECK(von_neumann_entropy(diag) == doctest::Approx(oracle::entropy_of({0.5, 0.3, 0.2})));
}
