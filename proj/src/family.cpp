#include "covent/family.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <stdexcept>
#include <string>

namespace covent {

namespace {

// Eigenvectors spanning supp(rho) and their eigenvalues.
struct Support {
  ComplexMatrix vectors;
  RealVector values;
};

Support support_of(const ComplexMatrix& rho, double cutoff) {
  const HermitianSpectrum spec = hermitian_eig(rho);
  Eigen::Index rank = 0;
  while (rank < spec.eigenvalues.size() && spec.eigenvalues[rank] > cutoff) ++rank;
  return {spec.eigenvectors.leftCols(rank), spec.eigenvalues.head(rank)};
}

double subtractable_weight(const Support& s, const ComplexVector& psi) {
  const ComplexVector coeffs = s.vectors.adjoint() * psi;
  const double outside = psi.squaredNorm() - coeffs.squaredNorm();
  if (outside > 1e-10) return 0.0;
  double quad = 0.0;  // <psi|rho^+|psi>
  for (Eigen::Index k = 0; k < coeffs.size(); ++k) quad += std::norm(coeffs[k]) / s.values[k];
  return quad > 0.0 ? 1.0 / quad : 0.0;
}

void add_singlet_like(ComplexMatrix& rho, int dim, int i, int j, double weight) {
  // weight * (|ij> - |ji>)(<ij| - <ji|) / 2
  const int a = i * dim + j;
  const int b = j * dim + i;
  rho(a, a) += 0.5 * weight;
  rho(b, b) += 0.5 * weight;
  rho(a, b) -= 0.5 * weight;
  rho(b, a) -= 0.5 * weight;
}

}  // namespace

OptimalProcess OptimalProcess::make(int dim, double p4) {
  if (dim < 2) throw std::invalid_argument("optimal process: dim must be >= 2");
  if (!(p4 >= 0.0 && p4 <= 1.0)) {
    throw std::invalid_argument("optimal process: p4 must lie in [0, 1], got " + std::to_string(p4));
  }
  if (dim == 2 && p4 != 0.0) throw std::invalid_argument("optimal process: D = 2 requires p4 = 0");
  return {dim, p4};
}

ProcessParams OptimalProcess::params() const {
  if (dim == 2) {
    // p1 = p3 = 0 leaves only C + 2 beta = -1/2; choose C = 0.
    ProcessParams out{2};
    out.beta = Complex(-0.25, 0.0);
    return out;
  }
  return params_from_probabilities(0.0, 0.0, p4, 0.0, 0.0, dim);
}

ProcessParams optimal_params(int dim, double p4) { return OptimalProcess::make(dim, p4).params(); }

ComplexMatrix optimal_reference_state(int dim, double p4) {
  const auto proc = OptimalProcess::make(dim, p4);
  const Eigen::Index n = static_cast<Eigen::Index>(dim) * dim;
  const double d = dim;
  ComplexMatrix rho = ComplexMatrix::Zero(n, n);
  for (int j = 1; j < dim; ++j) add_singlet_like(rho, dim, 0, j, (1.0 - proc.p4) / (d - 1.0));
  if (dim >= 3) {
    const double w = 2.0 * proc.p4 / ((d - 1.0) * (d - 2.0));
    for (int i = 1; i < dim; ++i) {
      for (int j = i + 1; j < dim; ++j) add_singlet_like(rho, dim, i, j, w);
    }
  }
  return rho;
}

ComplexMatrix rotation_to(const ComplexVector& psi) {
  const Eigen::Index d = psi.size();
  const double norm = psi.norm();
  if (norm == 0.0) throw std::invalid_argument("rotation_to: zero vector");
  const ComplexVector target = psi / norm;
  // Align the phase of e_1 with target(0) so <x, target> is real.
  const double mag0 = std::abs(target(0));
  const Complex phase = mag0 > 0.0 ? target(0) / mag0 : Complex(1.0, 0.0);
  ComplexVector x = ComplexVector::Zero(d);
  x(0) = phase;
  const ComplexVector w = x - target;
  const double w2 = w.squaredNorm();
  if (w2 < 1e-30) return ComplexMatrix::Identity(d, d);
  return ComplexMatrix::Identity(d, d) - (2.0 / w2) * (w * w.adjoint());
}

TwoParticleState optimal_output_state(int dim, double p4, const BlochVector& m) {
  if (m.dim != dim) throw std::invalid_argument("optimal_output_state: dimension mismatch");
  const ComplexMatrix u = rotation_to(ket_from_bloch(m, 1e-6));
  const ComplexMatrix uu = kron(u, u);
  return {dim, uu * optimal_reference_state(dim, p4) * uu.adjoint()};
}

double max_subtractable_weight(const ComplexMatrix& rho, const ComplexVector& psi, double cutoff) {
  return subtractable_weight(support_of(rho, cutoff), psi);
}

OptimalityCertificate certify_optimal_entanglement(const TwoParticleState& state, Rng& rng,
                                                   int samples) {
  const int d = state.dim;
  const ComplexMatrix ps = sym_projector(d);
  const double sym_part = max_abs(ps * state.rho * ps);
  if (sym_part > 1e-9) {
    throw std::invalid_argument("certify_optimal_entanglement: state has a symmetric component (" +
                                std::to_string(sym_part) + ")");
  }
  const Support support = support_of(state.rho, 1e-10);
  OptimalityCertificate cert;
  cert.samples = samples;
  cert.min_sym_overlap = samples > 0 ? std::numeric_limits<double>::infinity() : 0.0;
  for (int s = 0; s < samples; ++s) {
    const ComplexVector phi = haar_unitary(d, rng).col(0);
    const ComplexVector chi = haar_unitary(d, rng).col(0);
    const ComplexVector psi = kron(phi, chi);
    cert.max_subtractable_weight = std::max(cert.max_subtractable_weight, subtractable_weight(support, psi));
    cert.min_sym_overlap = std::min(cert.min_sym_overlap, (psi.adjoint() * ps * psi)(0, 0).real());
  }
  return cert;
}

NamedProcesses named_processes(int dim) {
  if (dim < 2) throw std::invalid_argument("named_processes: dim must be >= 2");
  NamedProcesses out;
  out.dim = dim;
  if (dim == 2) {
    out.min_entropy = {0.0};
    return out;
  }
  const double erasing = static_cast<double>(dim - 2) / dim;
  out.info_erasing = erasing;
  out.max_info = 0.0;
  out.max_entropy = erasing;
  if (dim > 4) {
    out.min_entropy = {0.0};
  } else if (dim < 4) {
    out.min_entropy = {1.0};
  } else {
    out.min_entropy = {0.0, 1.0};
  }
  return out;
}

}  // namespace covent
