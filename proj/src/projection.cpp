#include "covent/projection.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <stdexcept>

namespace covent {

ComplexVector angular_momentum_ket(int J, int M) {
  ComplexVector v = ComplexVector::Zero(4);
  const double r = std::numbers::sqrt2 / 2.0;
  if (J == 1 && M == 1) {
    v(0) = 1.0;
  } else if (J == 1 && M == 0) {
    v(1) = r;
    v(2) = r;
  } else if (J == 1 && M == -1) {
    v(3) = 1.0;
  } else if (J == 0 && M == 0) {
    v(1) = r;
    v(2) = -r;
  } else {
    throw std::invalid_argument("angular_momentum_ket: invalid (J, M)");
  }
  return v;
}

AngularMomentumProjector angular_momentum_projector(int J) {
  if (J != 0 && J != 1) throw std::invalid_argument("angular_momentum_projector: J must be 0 or 1");
  ComplexMatrix p = ComplexMatrix::Zero(4, 4);
  for (int M = -J; M <= J; ++M) {
    const ComplexVector k = angular_momentum_ket(J, M);
    p += k * k.adjoint();
  }
  return {J, p};
}

ProjectionOutcome project_process(const BlochVector& m, int J) {
  if (m.dim != 2) throw std::invalid_argument("project_process: qubit input required");
  if (!m.is_pure(1e-9)) throw std::invalid_argument("project_process: input must be pure");
  const ComplexMatrix rho_in = bloch_to_density(m).rho;
  const ComplexMatrix rho1 = kron(rho_in, ComplexMatrix::Identity(2, 2) / 2.0);
  const ComplexMatrix& p = angular_momentum_projector(J).matrix;
  const ComplexMatrix projected = p * rho1 * p;
  const double prob = projected.trace().real();
  if (prob <= 1e-14) throw std::domain_error("project_process: zero-probability outcome");
  return {{2, projected / prob}, prob};
}

std::array<double, 3> triplet_weights(const ComplexMatrix& rho) {
  std::array<double, 3> w{};
  for (int M = 1; M >= -1; --M) {
    const ComplexVector k = angular_momentum_ket(1, M);
    w[static_cast<std::size_t>(1 - M)] = (k.adjoint() * rho * k)(0, 0).real();
  }
  return w;
}

double covariance_demo_deviation(const ComplexMatrix& u, int J) {
  const auto base = project_process(BlochVector::reference(2), J);
  const auto rotated = project_process(bloch_from_ket(u.col(0)), J);
  const ComplexMatrix uu = kron(u, u);
  return max_abs_diff(rotated.state.rho, uu * base.state.rho * uu.adjoint());
}

double covariance_demo(Rng& rng, int samples) {
  double worst = 0.0;
  for (int s = 0; s < samples; ++s) {
    const ComplexMatrix u = haar_unitary(2, rng);
    for (int J : {0, 1}) worst = std::max(worst, covariance_demo_deviation(u, J));
  }
  return worst;
}

}  // namespace covent
