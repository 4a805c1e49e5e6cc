// Two-qubit total-angular-momentum projection applied to rho_in (x) 1/2.
//
// |J,M> in the computational basis (|1> = spin up = index 0):
//   |1, 1> = |11>
//   |1, 0> = (|12> + |21>)/sqrt2
//   |1,-1> = |22>
//   |0, 0> = (|12> - |21>)/sqrt2      (singlet)

#pragma once

#include "covent/matrix.hpp"
#include "covent/process.hpp"
#include "covent/sud.hpp"

#include <array>

namespace covent {

struct AngularMomentumProjector {
  int J = 0;
  ComplexMatrix matrix;
};

/// |J,M> as a 4-vector. Throws std::invalid_argument for invalid (J, M).
ComplexVector angular_momentum_ket(int J, int M);
AngularMomentumProjector angular_momentum_projector(int J);

struct ProjectionOutcome {
  TwoParticleState state;
  double probability = 0.0;
};

/// P_J (rho_in (x) 1/2) P_J, normalized, plus its trace. The input must be a
/// pure qubit Bloch vector; throws std::domain_error on a zero-probability
/// outcome.
ProjectionOutcome project_process(const BlochVector& m, int J);

/// <J=1,M|rho|J=1,M> for M = 1, 0, -1.
std::array<double, 3> triplet_weights(const ComplexMatrix& rho);

/// max over Haar samples and both J of
///   || rho_J(U m0) - (U (x) U) rho_J(m0) (U (x) U)^dagger ||_max, m0 = 2 e_11.
double covariance_demo(Rng& rng, int samples);
double covariance_demo_deviation(const ComplexMatrix& u, int J);

}  // namespace covent
