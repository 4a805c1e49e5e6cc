#include "covent/sud.hpp"

#include <cmath>
#include <stdexcept>
#include <string>

namespace covent {

GeneratorSet::GeneratorSet(int dim) : dim_(dim) {
  if (dim < 2) throw std::invalid_argument("make_generators: dim must be >= 2");
  mats_.reserve(static_cast<std::size_t>(dim) * dim);
  for (int i = 0; i < dim; ++i) {
    for (int j = 0; j < dim; ++j) {
      ComplexMatrix a = ComplexMatrix::Zero(dim, dim);
      a(i, j) = 1.0;
      if (i == j) a -= ComplexMatrix::Identity(dim, dim) / static_cast<double>(dim);
      mats_.push_back(std::move(a));
    }
  }
}

GeneratorSet make_generators(int dim) { return GeneratorSet(dim); }

BlochVector BlochVector::reference(int dim) {
  BlochVector v = zero(dim);
  v.m(0, 0) = static_cast<double>(dim);
  return v;
}

BlochVector BlochVector::zero(int dim) {
  if (dim < 2) throw std::invalid_argument("BlochVector: dim must be >= 2");
  return BlochVector{dim, ComplexMatrix::Zero(dim, dim)};
}

double BlochVector::conjugate_symmetry_residual() const { return max_abs_diff(m, m.adjoint()); }

double BlochVector::purity_constraint_value() const {
  const Complex tr = m.trace();
  return m.squaredNorm() - std::real(tr * tr) / static_cast<double>(dim);
}

bool BlochVector::is_pure(double tol) const {
  return std::abs(purity_constraint_value() - static_cast<double>(dim) * (dim - 1)) <= tol;
}

ComplexMatrix bloch_operator(const BlochVector& m) {
  if (m.dim < 2 || m.m.rows() != m.dim || m.m.cols() != m.dim) {
    throw std::invalid_argument("bloch_to_density: malformed Bloch vector");
  }
  if (m.conjugate_symmetry_residual() > kHermitianTol) {
    throw std::invalid_argument("bloch_to_density: m_ij* != m_ji");
  }
  const GeneratorSet gens(m.dim);
  ComplexMatrix rho = ComplexMatrix::Identity(m.dim, m.dim);
  for (int i = 0; i < m.dim; ++i) {
    for (int j = 0; j < m.dim; ++j) rho += m.m(i, j) * gens(i, j);
  }
  return rho / static_cast<double>(m.dim);
}

OneParticleState bloch_to_density(const BlochVector& m) {
  ComplexMatrix rho = bloch_operator(m);
  const double lo = min_eigenvalue(rho);
  if (lo < -kPositivityTol) {
    throw std::domain_error("bloch_to_density: not a positive operator (min eigenvalue " +
                            std::to_string(lo) + ")");
  }
  return {m.dim, std::move(rho)};
}

BlochVector density_to_bloch(const OneParticleState& state) {
  const int d = state.dim;
  if (d < 2 || state.rho.rows() != d || state.rho.cols() != d) {
    throw std::invalid_argument("density_to_bloch: malformed state");
  }
  const GeneratorSet gens(d);
  const Complex tr = state.rho.trace();
  BlochVector out = BlochVector::zero(d);
  for (int i = 0; i < d; ++i) {
    for (int j = 0; j < d; ++j) {
      out.m(i, j) = static_cast<double>(d) * (state.rho * gens(j, i)).trace();
      if (i == j) out.m(i, j) += tr;
    }
  }
  return out;
}

BlochVector bloch_from_ket(const ComplexVector& psi) {
  const int d = static_cast<int>(psi.size());
  BlochVector out = BlochVector::zero(d);
  out.m = static_cast<double>(d) * (psi * psi.adjoint());
  return out;
}

std::pair<OneParticleState, BlochVector> random_pure_input(int dim, Rng& rng) {
  const ComplexMatrix u = haar_unitary(dim, rng);
  const ComplexVector psi = u.col(0);
  OneParticleState state{dim, psi * psi.adjoint()};
  return {state, bloch_from_ket(psi)};
}

ComplexVector ket_from_bloch(const BlochVector& m, double tol) {
  if (!m.is_pure(tol)) throw std::invalid_argument("ket_from_bloch: Bloch vector is not pure");
  const ComplexMatrix rho = bloch_operator(m);
  const HermitianSpectrum spec = hermitian_eig(rho);
  ComplexVector psi = spec.eigenvectors.col(0);
  psi.normalize();
  for (Eigen::Index k = 0; k < psi.size(); ++k) {
    const double mag = std::abs(psi(k));
    if (mag > 1e-12) {
      psi *= std::conj(psi(k)) / mag;
      break;
    }
  }
  return psi;
}

}  // namespace covent
