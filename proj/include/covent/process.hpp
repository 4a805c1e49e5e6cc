// Covariant two-particle output states
//
//   rho_out(m) = 1/D^2 + a1 m_ij A_ij (x) 1 + a2 m_ij 1 (x) A_ij + C A_ij (x) A_ji
//              + beta m_il A_ij (x) A_jl + beta* m_il* A_ji (x) A_lj
//
// and their block structure at the reference input m = D e_11, where the
// state splits into four orthogonal blocks:
//   block 1: |11>
//   block 2: span{|1j>, |j1>}, j >= 2
//   block 3: span{|jj>}, j >= 2
//   block 4: span{|ij>, |ji>}, 2 <= i < j   (empty for D = 2)

#pragma once

#include "covent/matrix.hpp"
#include "covent/sud.hpp"

#include <array>
#include <iosfwd>
#include <vector>

namespace covent {

struct ProcessParams {
  int dim = 0;
  double C = 0.0;
  double alpha1 = 0.0;
  double alpha2 = 0.0;
  Complex beta = 0.0;

  static ProcessParams zero(int dim) { return ProcessParams{dim}; }
};

struct ProbabilityQuadruple {
  double p1 = 0.0, p2 = 0.0, p3 = 0.0, p4 = 0.0;

  double sum() const { return p1 + p2 + p3 + p4; }
  double min() const;
  std::array<double, 4> as_array() const { return {p1, p2, p3, p4}; }
};

struct TwoParticleState {
  int dim = 0;
  ComplexMatrix rho;
};

/// Output of build_output_state. Positivity is measured, not enforced.
struct CheckedOutput {
  TwoParticleState state;
  double min_eigenvalue = 0.0;

  bool non_negative() const { return min_eigenvalue >= -kPositivityTol; }
};

struct BlockDecomposition {
  ProbabilityQuadruple probs;
  /// p_k rho_k, always defined.
  std::array<ComplexMatrix, 4> weighted;
  /// rho_k; zero matrix when p_k <= kBlockProbabilityFloor.
  std::array<ComplexMatrix, 4> blocks;

  ComplexMatrix reconstruct() const;
};

inline constexpr double kBlockProbabilityFloor = 1e-12;

struct EigenvalueMultiplicity {
  double value = 0.0;
  int multiplicity = 0;
};

struct SpectrumReport {
  std::vector<EigenvalueMultiplicity> analytic;
  HermitianSpectrum numeric;

  /// Analytic multiset expanded and sorted ascending.
  std::vector<double> analytic_sorted() const;
  /// max |analytic - numeric| over the sorted multisets.
  double max_deviation() const;
};

struct Admissibility {
  bool admissible = false;
  /// min over all p_k and all analytic eigenvalues.
  double margin = 0.0;
};

struct RegionPoint {
  double p2 = 0.0, p3 = 0.0, p4 = 0.0, p1 = 0.0;
  bool admissible = false;
  double margin = 0.0;
};

/// Unchecked Hermitian operator for arbitrary parameters (inadmissible points
/// allowed). Throws std::invalid_argument on dimension mismatch.
ComplexMatrix output_operator(const ProcessParams& params, const BlochVector& m);
CheckedOutput build_output_state(const ProcessParams& params, const BlochVector& m);

/// Block probabilities at m = D e_11. p4 is 0 for D = 2.
ProbabilityQuadruple probabilities_from_params(const ProcessParams& params);

BlockDecomposition block_decomposition(const ProcessParams& params);

/// lambda_1 (x1), lambda_2+- (x(D-1) each), lambda_3 (x(D-1)),
/// lambda_4+- (x(D-1)(D-2)/2 each, omitted for D = 2).
std::vector<EigenvalueMultiplicity> analytic_eigenvalues(const ProcessParams& params);
SpectrumReport spectrum_report(const ProcessParams& params);

/// Coordinates (p1, p3, p4) plus a1 - a2 and Im beta to process parameters.
/// Requires D >= 3; throws std::invalid_argument otherwise.
ProcessParams params_from_probabilities(double p1, double p3, double p4, double alpha_diff,
                                        double beta_imag, int dim);

Admissibility is_admissible(const ProcessParams& params);

/// Simplex lattice p2 + p3 + p4 <= 1 with step 1/grid on the slice
/// a1 = a2, Im beta = 0. Rows ordered by (p2, p3, p4) lexicographically.
std::vector<RegionPoint> positivity_region_scan(int dim, int grid);
void write_region_csv(std::ostream& out, const std::vector<RegionPoint>& rows);

/// max over Haar samples U of
///   || rho_out(m(U|1>)) - (U (x) U) rho_out(D e_11) (U (x) U)^dagger ||_max
double covariance_check(const ProcessParams& params, Rng& rng, int samples);
/// Same identity for one fixed unitary.
double covariance_deviation(const ProcessParams& params, const ComplexMatrix& u);

/// Random admissible parameters. D >= 3: (p1..p4) uniform on the simplex
/// with a random a1 - a2 and Im beta inside the lambda_2- bound. D = 2:
/// rejection from a box around the maximally mixed process.
ProcessParams random_admissible_params(int dim, Rng& rng);

}  // namespace covent
