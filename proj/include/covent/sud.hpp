// SU(D) generators A_ij and the generalized Bloch parametrization
//   rho = (1/D) (1 + m_ij A_ij)        (summed over i, j)
// with (A_ij)_kl = delta_ik delta_jl - delta_ij delta_kl / D.
//
// All D^2 generators are stored, including the redundant combination
// sum_i A_ii = 0. Indices are 0-based in code; documentation and the JSON
// field description use 1-based labels (|1> is basis index 0).

#pragma once

#include "covent/matrix.hpp"

#include <utility>
#include <vector>

namespace covent {

class GeneratorSet {
 public:
  explicit GeneratorSet(int dim);

  int dim() const { return dim_; }
  const ComplexMatrix& operator()(int i, int j) const { return mats_[i * dim_ + j]; }

 private:
  int dim_;
  std::vector<ComplexMatrix> mats_;
};

/// Throws std::invalid_argument for dim < 2.
GeneratorSet make_generators(int dim);

/// Coefficients m_ij. Pure states are stored in the gauge Tr m = D, where
/// m = D * rho; this is the gauge in which the reference input is D e_11.
struct BlochVector {
  int dim = 0;
  ComplexMatrix m;

  static BlochVector reference(int dim);  // D e_11, i.e. |1><1|
  static BlochVector zero(int dim);

  /// max |m_ij* - m_ji|
  double conjugate_symmetry_residual() const;
  /// sum |m_ij|^2 - (1/D)(sum_i m_ii)^2; equals D(D-1) for pure states.
  double purity_constraint_value() const;
  bool is_pure(double tol = 1e-9) const;
};

struct OneParticleState {
  int dim = 0;
  ComplexMatrix rho;
};

/// Throws std::domain_error if the result has an eigenvalue below -kPositivityTol,
/// std::invalid_argument if m is not conjugate-symmetric.
OneParticleState bloch_to_density(const BlochVector& m);
/// Same construction without the positivity check.
ComplexMatrix bloch_operator(const BlochVector& m);

/// m_ij = D Tr(rho A_ji) + delta_ij Tr(rho), which equals D rho_ij.
BlochVector density_to_bloch(const OneParticleState& state);

/// Haar-random pure state U|1><1|U^dagger together with its Bloch vector.
std::pair<OneParticleState, BlochVector> random_pure_input(int dim, Rng& rng);

/// Pure-state Bloch vector for a normalized ket.
BlochVector bloch_from_ket(const ComplexVector& psi);

/// Leading eigenvector of rho = m / D, normalized, with a real non-negative
/// first nonzero component. Throws std::invalid_argument if m is not pure
/// within tol.
ComplexVector ket_from_bloch(const BlochVector& m, double tol = 1e-6);

}  // namespace covent
