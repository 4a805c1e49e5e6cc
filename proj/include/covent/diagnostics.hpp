// Entropy, correlation and entanglement diagnostics for the optimal family.
// All entropies are in nats.

#pragma once

#include "covent/matrix.hpp"
#include "covent/process.hpp"
#include "covent/sud.hpp"

#include <iosfwd>
#include <utility>
#include <vector>

namespace covent {

struct DiagnosticsReport {
  int dim = 0;
  double p4 = 0.0;
  double entropy_numeric = 0.0;
  double entropy_analytic = 0.0;
  double ic_numeric = 0.0;
  double ic_analytic = 0.0;  // NaN for D = 2
  double min_pt_eigenvalue = 0.0;
  double lambda_formula = 0.0;
  OneParticleState reduced1;
  OneParticleState reduced2;
  double alpha_sum = 0.0;
  double beta_sum = 0.0;
};

struct NegativityCheck {
  double min_pt_eigenvalue = 0.0;
  double lambda_formula = 0.0;
};

/// S(p4) = p4 ln((D-1)(D-2)/(2 p4)) + (1 - p4) ln((D-1)/(1 - p4)), with
/// 0 ln 0 = 0. Returns 0 for D = 2.
double entropy_analytic(int dim, double p4);

/// IC(p4) = ln(4/(1+p4)) + p4 ln(2 p4 (D-1) / ((1+p4)(D-2))). Requires D >= 3
/// (throws std::domain_error for D = 2).
double index_of_correlation_analytic(int dim, double p4);

/// S(R1) + S(R2) - S(rho).
double index_of_correlation(const ComplexMatrix& rho, int dim);

std::pair<OneParticleState, OneParticleState> reduced_states(const TwoParticleState& state);
/// 1/D + D alpha m_ij A_ij
ComplexMatrix reduced_state_analytic(double alpha, const BlochVector& m);

/// Negative partial-transpose eigenvalue expression evaluated literally,
/// reading the braced term as (p4/(D-1))^2. Reported for comparison only.
double lambda_formula(int dim, double p2, double p3, double p4);

/// Family state at the reference input: numeric min PT eigenvalue and the
/// formula above at p2 = 1 - p4, p3 = 0.
NegativityCheck negativity_check(int dim, double p4);

/// a1 of the p4 = 0 family member: (D-2) / (2 D^2 (D-1)).
double alpha_max(int dim);
/// a1 of the optimal symmetric cloner (p1 = 2/(D+1), p3 = p4 = 0):
/// (D+2) / (2 D^2 (D+1)).
double alpha_clone(int dim);
double alpha_ratio(int dim);

/// Closed forms built from an alpha row with the constant, p3 and p4 terms
/// halved and the p1 term divided by 2D. They disagree with the states this
/// library constructs and are exposed only so the two can be compared.
namespace uncorrected {
double alpha_max(int dim);    // (D-2) / (4 D^2 (D-1))
double alpha_clone(int dim);  // (D-2) / (4 D^2 (D-1)) + 1 / (2 D^2 (D-1)(D+1))
double alpha_ratio(int dim);
}  // namespace uncorrected

/// Full report for the family state with input m (reference input by default).
DiagnosticsReport diagnose(int dim, double p4);
DiagnosticsReport diagnose(int dim, double p4, const BlochVector& m);

struct EntropyScanRow {
  int dim = 0;
  double p4 = 0.0;
  double s_analytic = 0.0;
  double s_numeric = 0.0;
  double ic_analytic = 0.0;
  double ic_numeric = 0.0;
  double min_pt_eig = 0.0;
};

/// p4 = k / grid, k = 0..grid, for each D in [dim_min, dim_max]; D = 2
/// contributes the single point p4 = 0.
std::vector<EntropyScanRow> entropy_scan(int dim_min, int dim_max, int grid);
void write_entropy_csv(std::ostream& out, const std::vector<EntropyScanRow>& rows);
void write_alpha_ratio_csv(std::ostream& out, int dim_min, int dim_max);

}  // namespace covent
