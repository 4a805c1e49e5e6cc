#include "covent/process.hpp"
#include "covent/format.hpp"

#include <algorithm>
#include <cmath>
#include <ostream>
#include <stdexcept>
#include <string>

namespace covent {

namespace {

int pair_index(int dim, int i, int j) { return i * dim + j; }

void add_outer(ComplexMatrix& m, int dim, int i, int j, int k, int l, Complex value) {
  m(pair_index(dim, i, j), pair_index(dim, k, l)) += value;
}

}  // namespace

double ProbabilityQuadruple::min() const { return std::min({p1, p2, p3, p4}); }

ComplexMatrix BlockDecomposition::reconstruct() const {
  ComplexMatrix sum = weighted[0];
  for (std::size_t k = 1; k < weighted.size(); ++k) sum += weighted[k];
  return sum;
}

std::vector<double> SpectrumReport::analytic_sorted() const {
  std::vector<double> out;
  for (const auto& e : analytic) out.insert(out.end(), static_cast<std::size_t>(e.multiplicity), e.value);
  std::sort(out.begin(), out.end());
  return out;
}

double SpectrumReport::max_deviation() const {
  const std::vector<double> a = analytic_sorted();
  std::vector<double> n(numeric.eigenvalues.begin(), numeric.eigenvalues.end());
  std::sort(n.begin(), n.end());
  if (a.size() != n.size()) throw std::logic_error("spectrum size mismatch");
  double worst = 0.0;
  for (std::size_t k = 0; k < a.size(); ++k) worst = std::max(worst, std::abs(a[k] - n[k]));
  return worst;
}

ComplexMatrix output_operator(const ProcessParams& params, const BlochVector& m) {
  const int d = params.dim;
  if (d < 2) throw std::invalid_argument("output_operator: dim must be >= 2");
  if (m.dim != d || m.m.rows() != d || m.m.cols() != d) {
    throw std::invalid_argument("output_operator: Bloch vector dimension mismatch");
  }
  if (m.conjugate_symmetry_residual() > kHermitianTol) {
    throw std::invalid_argument("output_operator: m_ij* != m_ji");
  }
  const GeneratorSet a(d);
  const ComplexMatrix id = ComplexMatrix::Identity(d, d);
  const Eigen::Index n = static_cast<Eigen::Index>(d) * d;

  ComplexMatrix rho = ComplexMatrix::Identity(n, n) / static_cast<double>(d * d);

  ComplexMatrix m_a = ComplexMatrix::Zero(d, d);  // m_ij A_ij
  for (int i = 0; i < d; ++i) {
    for (int j = 0; j < d; ++j) m_a += m.m(i, j) * a(i, j);
  }
  rho += params.alpha1 * kron(m_a, id) + params.alpha2 * kron(id, m_a);

  ComplexMatrix beta_term = ComplexMatrix::Zero(n, n);
  for (int i = 0; i < d; ++i) {
    for (int j = 0; j < d; ++j) {
      rho += params.C * kron(a(i, j), a(j, i));
      // beta m_il A_ij (x) A_jl, summed over l
      ComplexMatrix right = ComplexMatrix::Zero(d, d);
      for (int l = 0; l < d; ++l) right += m.m(i, l) * a(j, l);
      beta_term += kron(a(i, j), right);
    }
  }
  // beta* m_il* A_ji (x) A_lj is the adjoint of the beta term.
  beta_term *= params.beta;
  rho += beta_term + beta_term.adjoint();
  return rho;
}

CheckedOutput build_output_state(const ProcessParams& params, const BlochVector& m) {
  CheckedOutput out;
  out.state = {params.dim, output_operator(params, m)};
  out.min_eigenvalue = min_eigenvalue(out.state.rho);
  return out;
}

ProbabilityQuadruple probabilities_from_params(const ProcessParams& params) {
  const double d = params.dim;
  if (params.dim < 2) throw std::invalid_argument("probabilities_from_params: dim must be >= 2");
  const double m11 = d;
  const double asum = params.alpha1 + params.alpha2;
  const double bsum = 2.0 * params.beta.real();  // beta + beta*
  const double c = params.C;

  ProbabilityQuadruple p;
  p.p1 = 1.0 / (d * d) + asum * m11 * (1.0 - 1.0 / d) + c * (1.0 - 1.0 / d) +
         bsum * m11 * (1.0 - 1.0 / d) * (1.0 - 1.0 / d);
  p.p2 = (d - 1.0) * (2.0 / (d * d) + asum * m11 * (1.0 - 2.0 / d) - 2.0 * c / d -
                      2.0 * bsum * m11 * (1.0 - 1.0 / d) / d);
  p.p3 = (d - 1.0) * (1.0 / (d * d) - asum * m11 / d + c * (1.0 - 1.0 / d) + bsum * m11 / (d * d));
  p.p4 = params.dim < 3
             ? 0.0
             : (d - 1.0) * (d - 2.0) * (1.0 / (d * d) - asum * m11 / d - c / d + bsum * m11 / (d * d));
  return p;
}

BlockDecomposition block_decomposition(const ProcessParams& params) {
  const int d = params.dim;
  const double dd = d;
  const Eigen::Index n = static_cast<Eigen::Index>(d) * d;
  const double m11 = dd;
  const double adiff = params.alpha1 - params.alpha2;
  const Complex off = params.C + params.beta * m11;

  BlockDecomposition out;
  out.probs = probabilities_from_params(params);
  const auto& p = out.probs;
  for (auto& w : out.weighted) w = ComplexMatrix::Zero(n, n);

  add_outer(out.weighted[0], d, 0, 0, 0, 0, p.p1);

  for (int j = 1; j < d; ++j) {
    add_outer(out.weighted[1], d, 0, j, 0, j, p.p2 / (2.0 * (dd - 1.0)) + adiff * m11 / 2.0);
    add_outer(out.weighted[1], d, j, 0, j, 0, p.p2 / (2.0 * (dd - 1.0)) - adiff * m11 / 2.0);
    add_outer(out.weighted[1], d, 0, j, j, 0, off);
    add_outer(out.weighted[1], d, j, 0, 0, j, std::conj(off));

    add_outer(out.weighted[2], d, j, j, j, j, p.p3 / (dd - 1.0));
  }

  if (d >= 3) {
    const double diag = p.p4 / ((dd - 1.0) * (dd - 2.0));
    for (int i = 1; i < d; ++i) {
      for (int j = i + 1; j < d; ++j) {
        add_outer(out.weighted[3], d, i, j, i, j, diag);
        add_outer(out.weighted[3], d, j, i, j, i, diag);
        add_outer(out.weighted[3], d, i, j, j, i, params.C);
        add_outer(out.weighted[3], d, j, i, i, j, params.C);
      }
    }
  }

  const auto probs = p.as_array();
  for (std::size_t k = 0; k < 4; ++k) {
    out.blocks[k] = probs[k] > kBlockProbabilityFloor ? ComplexMatrix(out.weighted[k] / probs[k])
                                                       : ComplexMatrix(ComplexMatrix::Zero(n, n));
  }
  return out;
}

std::vector<EigenvalueMultiplicity> analytic_eigenvalues(const ProcessParams& params) {
  const int d = params.dim;
  const double dd = d;
  const double m11 = dd;
  const auto p = probabilities_from_params(params);
  const double half_diff = (params.alpha1 - params.alpha2) * m11 / 2.0;
  const double radius2 = std::sqrt(half_diff * half_diff + std::norm(params.C + m11 * params.beta));

  std::vector<EigenvalueMultiplicity> out;
  out.push_back({p.p1, 1});
  out.push_back({p.p2 / (2.0 * (dd - 1.0)) + radius2, d - 1});
  out.push_back({p.p2 / (2.0 * (dd - 1.0)) - radius2, d - 1});
  out.push_back({p.p3 / (dd - 1.0), d - 1});
  if (d >= 3) {
    const int mult = (d - 1) * (d - 2) / 2;
    const double centre = p.p4 / ((dd - 1.0) * (dd - 2.0));
    out.push_back({centre + std::abs(params.C), mult});
    out.push_back({centre - std::abs(params.C), mult});
  }
  return out;
}

SpectrumReport spectrum_report(const ProcessParams& params) {
  SpectrumReport report;
  report.analytic = analytic_eigenvalues(params);
  report.numeric = hermitian_eig(output_operator(params, BlochVector::reference(params.dim)));
  return report;
}

ProcessParams params_from_probabilities(double p1, double p3, double p4, double alpha_diff,
                                        double beta_imag, int dim) {
  if (dim < 3) {
    throw std::invalid_argument("params_from_probabilities: requires D >= 3, got " +
                                std::to_string(dim));
  }
  const double d = dim;
  const double beta_sum = -1.0 / (d * (d - 1.0)) + p4 / ((d - 1.0) * (d - 2.0)) + p1 / (d - 1.0);
  const double alpha_sum = (d - 2.0) / (d * d * (d - 1.0)) + p1 / (d * (d - 1.0)) -
                           (p3 + p4) / (d * (d - 1.0));
  const double c = p3 / (d - 1.0) - p4 / ((d - 1.0) * (d - 2.0));

  ProcessParams out{dim};
  out.C = c;
  out.alpha1 = 0.5 * (alpha_sum + alpha_diff);
  out.alpha2 = 0.5 * (alpha_sum - alpha_diff);
  out.beta = Complex(0.5 * beta_sum, beta_imag);
  return out;
}

Admissibility is_admissible(const ProcessParams& params) {
  const auto p = probabilities_from_params(params);
  double margin = p.min();
  for (const auto& e : analytic_eigenvalues(params)) margin = std::min(margin, e.value);
  const bool normalized = std::abs(p.sum() - 1.0) <= kPositivityTol;
  return {normalized && margin >= -kPositivityTol, margin};
}

std::vector<RegionPoint> positivity_region_scan(int dim, int grid) {
  if (dim < 3) throw std::invalid_argument("positivity_region_scan: requires D >= 3");
  if (grid < 1) throw std::invalid_argument("positivity_region_scan: grid must be positive");
  const double step = 1.0 / grid;
  std::vector<RegionPoint> rows;
  for (int i = 0; i <= grid; ++i) {
    for (int j = 0; i + j <= grid; ++j) {
      for (int k = 0; i + j + k <= grid; ++k) {
        RegionPoint r;
        r.p2 = i * step;
        r.p3 = j * step;
        r.p4 = k * step;
        r.p1 = static_cast<double>(grid - i - j - k) * step;
        const auto verdict = is_admissible(params_from_probabilities(r.p1, r.p3, r.p4, 0.0, 0.0, dim));
        r.admissible = verdict.admissible;
        r.margin = verdict.margin;
        rows.push_back(r);
      }
    }
  }
  return rows;
}

void write_region_csv(std::ostream& out, const std::vector<RegionPoint>& rows) {
  out << "p2,p3,p4,p1,admissible,margin\n";
  for (const auto& r : rows) {
    out << fmt12(r.p2) << ',' << fmt12(r.p3) << ',' << fmt12(r.p4) << ',' << fmt12(r.p1) << ','
        << (r.admissible ? 1 : 0) << ',' << fmt12(r.margin) << '\n';
  }
}

double covariance_deviation(const ProcessParams& params, const ComplexMatrix& u) {
  const int d = params.dim;
  const ComplexMatrix reference = output_operator(params, BlochVector::reference(d));
  const BlochVector rotated = bloch_from_ket(u.col(0));
  const ComplexMatrix uu = kron(u, u);
  return max_abs_diff(output_operator(params, rotated), uu * reference * uu.adjoint());
}

double covariance_check(const ProcessParams& params, Rng& rng, int samples) {
  double worst = 0.0;
  for (int s = 0; s < samples; ++s) {
    worst = std::max(worst, covariance_deviation(params, haar_unitary(params.dim, rng)));
  }
  return worst;
}

ProcessParams random_admissible_params(int dim, Rng& rng) {
  if (dim < 2) throw std::invalid_argument("random_admissible_params: dim must be >= 2");
  const double d = dim;
  for (int attempt = 0; attempt < 10000; ++attempt) {
    ProcessParams params{dim};
    if (dim == 2) {
      params.C = 0.5 * (rng.uniform() - 0.5);
      params.alpha1 = 0.5 * (rng.uniform() - 0.5);
      params.alpha2 = 0.5 * (rng.uniform() - 0.5);
      params.beta = Complex(0.5 * (rng.uniform() - 0.5), 0.5 * (rng.uniform() - 0.5));
    } else {
      // Uniform point on the 3-simplex from normalized exponentials.
      std::array<double, 4> e{};
      double total = 0.0;
      for (auto& x : e) total += (x = -std::log(rng.uniform()));
      for (auto& x : e) x /= total;
      const double scale = e[1] / (d * (d - 1.0));
      params = params_from_probabilities(e[0], e[2], e[3], scale * (2.0 * rng.uniform() - 1.0),
                                         0.5 * scale * (2.0 * rng.uniform() - 1.0), dim);
    }
    if (is_admissible(params).admissible) return params;
  }
  throw std::runtime_error("random_admissible_params: rejection sampling did not converge");
}

}  // namespace covent
