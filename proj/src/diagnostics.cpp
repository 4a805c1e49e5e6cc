#include "covent/diagnostics.hpp"

#include "covent/family.hpp"
#include "covent/format.hpp"

#include <cmath>
#include <limits>
#include <ostream>
#include <stdexcept>
#include <tuple>

namespace covent {

namespace {

// x ln(c / x), continuous at x = 0.
double xlog_ratio(double x, double c) { return x <= 0.0 ? 0.0 : x * std::log(c / x); }

void require_p4(double p4) {
  if (!(p4 >= 0.0 && p4 <= 1.0)) throw std::invalid_argument("p4 must lie in [0, 1]");
}

}  // namespace

double entropy_analytic(int dim, double p4) {
  if (dim < 2) throw std::invalid_argument("entropy_analytic: dim must be >= 2");
  require_p4(p4);
  if (dim == 2) return 0.0;
  const double d = dim;
  return xlog_ratio(p4, (d - 1.0) * (d - 2.0) / 2.0) + xlog_ratio(1.0 - p4, d - 1.0);
}

double index_of_correlation_analytic(int dim, double p4) {
  if (dim < 3) throw std::domain_error("index_of_correlation_analytic: requires D >= 3");
  require_p4(p4);
  const double d = dim;
  const double tail = p4 <= 0.0 ? 0.0 : p4 * std::log(2.0 * p4 * (d - 1.0) / ((1.0 + p4) * (d - 2.0)));
  return std::log(4.0 / (1.0 + p4)) + tail;
}

double index_of_correlation(const ComplexMatrix& rho, int dim) {
  return von_neumann_entropy(partial_trace(rho, dim, Subsystem::Second)) +
         von_neumann_entropy(partial_trace(rho, dim, Subsystem::First)) - von_neumann_entropy(rho);
}

std::pair<OneParticleState, OneParticleState> reduced_states(const TwoParticleState& state) {
  return {OneParticleState{state.dim, partial_trace(state.rho, state.dim, Subsystem::Second)},
          OneParticleState{state.dim, partial_trace(state.rho, state.dim, Subsystem::First)}};
}

ComplexMatrix reduced_state_analytic(double alpha, const BlochVector& m) {
  const int d = m.dim;
  const GeneratorSet a(d);
  ComplexMatrix r = ComplexMatrix::Identity(d, d) / static_cast<double>(d);
  for (int i = 0; i < d; ++i) {
    for (int j = 0; j < d; ++j) r += static_cast<double>(d) * alpha * m.m(i, j) * a(i, j);
  }
  return r;
}

double lambda_formula(int dim, double p2, double p3, double p4) {
  const double d = dim;
  const double bracket = 0.5 - p3 * (d - 2.0) / (2.0 * (d - 1.0)) - p4 / 2.0 - p2 * d / (2.0 * (d - 1.0));
  const double lead = p4 / (d - 1.0);
  return -p4 / (2.0 * (d - 1.0)) - std::sqrt(lead * lead + 4.0 * (d - 1.0) * bracket * bracket);
}

NegativityCheck negativity_check(int dim, double p4) {
  const auto proc = OptimalProcess::make(dim, p4);
  const ComplexMatrix rho = output_operator(proc.params(), BlochVector::reference(dim));
  return {min_eigenvalue(partial_transpose(rho, dim, Subsystem::Second)),
          lambda_formula(dim, 1.0 - proc.p4, 0.0, proc.p4)};
}

double alpha_max(int dim) {
  const double d = dim;
  return (d - 2.0) / (2.0 * d * d * (d - 1.0));
}

double alpha_clone(int dim) {
  const double d = dim;
  return (d + 2.0) / (2.0 * d * d * (d + 1.0));
}

double alpha_ratio(int dim) { return alpha_max(dim) / alpha_clone(dim); }

namespace uncorrected {

double alpha_max(int dim) {
  const double d = dim;
  return (d - 2.0) / (4.0 * d * d * (d - 1.0));
}

double alpha_clone(int dim) {
  const double d = dim;
  return alpha_max(dim) + 1.0 / (2.0 * d * d * (d - 1.0) * (d + 1.0));
}

double alpha_ratio(int dim) { return alpha_max(dim) / alpha_clone(dim); }

}  // namespace uncorrected

DiagnosticsReport diagnose(int dim, double p4) { return diagnose(dim, p4, BlochVector::reference(dim)); }

DiagnosticsReport diagnose(int dim, double p4, const BlochVector& m) {
  const auto proc = OptimalProcess::make(dim, p4);
  const ProcessParams params = proc.params();
  const TwoParticleState state{dim, output_operator(params, m)};

  DiagnosticsReport r;
  r.dim = dim;
  r.p4 = proc.p4;
  r.entropy_numeric = von_neumann_entropy(state.rho);
  r.entropy_analytic = entropy_analytic(dim, proc.p4);
  r.ic_numeric = index_of_correlation(state.rho, dim);
  r.ic_analytic = dim >= 3 ? index_of_correlation_analytic(dim, proc.p4)
                           : std::numeric_limits<double>::quiet_NaN();
  const auto neg = negativity_check(dim, proc.p4);
  r.min_pt_eigenvalue = neg.min_pt_eigenvalue;
  r.lambda_formula = neg.lambda_formula;
  std::tie(r.reduced1, r.reduced2) = reduced_states(state);
  r.alpha_sum = params.alpha1 + params.alpha2;
  r.beta_sum = 2.0 * params.beta.real();
  return r;
}

std::vector<EntropyScanRow> entropy_scan(int dim_min, int dim_max, int grid) {
  if (dim_min < 2 || dim_max < dim_min) throw std::invalid_argument("entropy_scan: bad dimension range");
  if (grid < 2) throw std::invalid_argument("entropy_scan: grid must be >= 2");
  std::vector<EntropyScanRow> rows;
  for (int d = dim_min; d <= dim_max; ++d) {
    const int points = d == 2 ? 0 : grid;
    for (int k = 0; k <= points; ++k) {
      const double p4 = static_cast<double>(k) / grid;
      const auto rep = diagnose(d, p4);
      rows.push_back({d, p4, rep.entropy_analytic, rep.entropy_numeric, rep.ic_analytic, rep.ic_numeric,
                      rep.min_pt_eigenvalue});
    }
  }
  return rows;
}

void write_entropy_csv(std::ostream& out, const std::vector<EntropyScanRow>& rows) {
  out << "D,p4,S_analytic,S_numeric,IC_analytic,IC_numeric,min_pt_eig\n";
  for (const auto& r : rows) {
    out << r.dim << ',' << fmt12(r.p4) << ',' << fmt12(r.s_analytic) << ',' << fmt12(r.s_numeric) << ','
        << fmt12(r.ic_analytic) << ',' << fmt12(r.ic_numeric) << ',' << fmt12(r.min_pt_eig) << '\n';
  }
}

void write_alpha_ratio_csv(std::ostream& out, int dim_min, int dim_max) {
  if (dim_min < 2 || dim_max < dim_min) throw std::invalid_argument("alpha ratio: bad dimension range");
  out << "D,alpha_max,alpha_clone,ratio\n";
  for (int d = dim_min; d <= dim_max; ++d) {
    out << d << ',' << fmt12(alpha_max(d)) << ',' << fmt12(alpha_clone(d)) << ',' << fmt12(alpha_ratio(d))
        << '\n';
  }
}

}  // namespace covent
