// The one-parameter family of optimal universal entanglement processes:
// p1 = p3 = 0, a1 = a2, beta real, parametrized by p4 in [0, 1]
// (p4 = 0 only, for D = 2). At the reference input the output is
//
//   (1 - p4) rho2_opt  (+)  p4 rho4_opt
//
// with rho2_opt uniform over (|1j> - |j1>)/sqrt2 and rho4_opt uniform over
// (|ij> - |ji>)/sqrt2, 2 <= i < j. Both are supported on the antisymmetric
// subspace.

#pragma once

#include "covent/matrix.hpp"
#include "covent/process.hpp"
#include "covent/sud.hpp"

#include <vector>

namespace covent {

struct OptimalProcess {
  int dim = 0;
  double p4 = 0.0;

  /// Throws std::invalid_argument on dim < 2, p4 outside [0, 1] or p4 != 0 at D = 2.
  static OptimalProcess make(int dim, double p4);
  ProcessParams params() const;
};

struct OptimalityCertificate {
  int samples = 0;
  double max_subtractable_weight = 0.0;
  double min_sym_overlap = 0.0;
};

/// Named members of the family. min_entropy holds both p4 = 0 and p4 = 1 at D = 4.
struct NamedProcesses {
  int dim = 0;
  double info_erasing = 0.0;
  double max_info = 0.0;
  std::vector<double> min_entropy;
  double max_entropy = 0.0;
};

ProcessParams optimal_params(int dim, double p4);

/// (1 - p4) rho2_opt + p4 rho4_opt, assembled directly in the |ij> basis.
ComplexMatrix optimal_reference_state(int dim, double p4);

/// Householder reflection U with U|1> = psi up to a global phase. Identity
/// when psi is already e_1 up to phase.
ComplexMatrix rotation_to(const ComplexVector& psi);

/// (U (x) U) optimal_reference_state (U (x) U)^dagger where U|1> realizes m.
/// Throws std::invalid_argument if m is not pure to 1e-6.
TwoParticleState optimal_output_state(int dim, double p4, const BlochVector& m);

/// Largest lambda with rho - lambda |psi><psi| >= 0: zero if psi leaves the
/// support of rho (eigenvalues above cutoff), else 1 / <psi|rho^+|psi>.
double max_subtractable_weight(const ComplexMatrix& rho, const ComplexVector& psi,
                               double cutoff = 1e-10);

/// Samples Haar-random product vectors |phi>|chi>. Throws std::invalid_argument
/// unless ||P_sym rho P_sym||_max <= 1e-9.
OptimalityCertificate certify_optimal_entanglement(const TwoParticleState& state, Rng& rng,
                                                   int samples);

NamedProcesses named_processes(int dim);

}  // namespace covent
