#include "covent/matrix.hpp"

#include <Eigen/Eigenvalues>
#include <Eigen/QR>

#include <cmath>
#include <limits>
#include <numbers>
#include <stdexcept>
#include <string>

namespace covent {

namespace {

void require_bipartite(const ComplexMatrix& rho, int dim, const char* what) {
  if (dim < 1) throw std::invalid_argument(std::string(what) + ": dim must be positive");
  const Eigen::Index n = static_cast<Eigen::Index>(dim) * dim;
  if (rho.rows() != n || rho.cols() != n) {
    throw std::invalid_argument(std::string(what) + ": expected " + std::to_string(n) + "x" +
                                std::to_string(n) + " matrix, got " + std::to_string(rho.rows()) +
                                "x" + std::to_string(rho.cols()));
  }
}

}  // namespace

double Rng::uniform() {
  // 53 random bits, shifted off zero so log() below is finite.
  ++draws_;
  const std::uint64_t bits = engine_() >> 11;
  return (static_cast<double>(bits) + 0.5) * 0x1.0p-53;
}

double Rng::normal() {
  if (has_spare_) {
    has_spare_ = false;
    return spare_;
  }
  const double u1 = uniform();
  const double u2 = uniform();
  const double r = std::sqrt(-2.0 * std::log(u1));
  const double phi = 2.0 * std::numbers::pi * u2;
  spare_ = r * std::sin(phi);
  has_spare_ = true;
  return r * std::cos(phi);
}

Complex Rng::complex_normal() {
  const double re = normal();
  const double im = normal();
  return {re * std::numbers::sqrt2 / 2.0, im * std::numbers::sqrt2 / 2.0};
}

ComplexMatrix kron(const ComplexMatrix& a, const ComplexMatrix& b) {
  ComplexMatrix out(a.rows() * b.rows(), a.cols() * b.cols());
  for (Eigen::Index i = 0; i < a.rows(); ++i) {
    for (Eigen::Index j = 0; j < a.cols(); ++j) {
      out.block(i * b.rows(), j * b.cols(), b.rows(), b.cols()) = a(i, j) * b;
    }
  }
  return out;
}

ComplexMatrix partial_trace(const ComplexMatrix& rho, int dim, Subsystem traced) {
  require_bipartite(rho, dim, "partial_trace");
  ComplexMatrix out = ComplexMatrix::Zero(dim, dim);
  for (int a = 0; a < dim; ++a) {
    for (int b = 0; b < dim; ++b) {
      Complex sum = 0.0;
      for (int k = 0; k < dim; ++k) {
        sum += traced == Subsystem::Second ? rho(a * dim + k, b * dim + k)
                                           : rho(k * dim + a, k * dim + b);
      }
      out(a, b) = sum;
    }
  }
  return out;
}

ComplexMatrix partial_transpose(const ComplexMatrix& rho, int dim, Subsystem transposed) {
  require_bipartite(rho, dim, "partial_transpose");
  ComplexMatrix out(rho.rows(), rho.cols());
  for (int i = 0; i < dim; ++i) {
    for (int j = 0; j < dim; ++j) {
      for (int k = 0; k < dim; ++k) {
        for (int l = 0; l < dim; ++l) {
          // <ij|rho|kl>
          const Complex v = rho(i * dim + j, k * dim + l);
          if (transposed == Subsystem::Second) {
            out(i * dim + l, k * dim + j) = v;
          } else {
            out(k * dim + j, i * dim + l) = v;
          }
        }
      }
    }
  }
  return out;
}

double hermiticity_residual(const ComplexMatrix& m) {
  if (m.rows() != m.cols()) return std::numeric_limits<double>::infinity();
  return max_abs_diff(m, m.adjoint());
}

HermitianSpectrum hermitian_eig(const ComplexMatrix& m) {
  if (m.rows() != m.cols() || m.rows() == 0) {
    throw std::invalid_argument("hermitian_eig: matrix must be square and non-empty");
  }
  const double asym = hermiticity_residual(m);
  if (asym > kHermitianTol) {
    throw std::invalid_argument("hermitian_eig: input is not Hermitian (residual " +
                                std::to_string(asym) + ")");
  }
  const ComplexMatrix sym = 0.5 * (m + m.adjoint());
  Eigen::SelfAdjointEigenSolver<ComplexMatrix> solver(sym);
  if (solver.info() != Eigen::Success) throw std::runtime_error("hermitian_eig: no convergence");

  // Eigen returns ascending order; reverse to descending.
  HermitianSpectrum out;
  out.eigenvalues = solver.eigenvalues().reverse();
  out.eigenvectors = solver.eigenvectors().rowwise().reverse();
  out.asymmetry = asym;
  return out;
}

RealVector hermitian_eigenvalues(const ComplexMatrix& m) {
  if (m.rows() != m.cols() || m.rows() == 0) {
    throw std::invalid_argument("hermitian_eigenvalues: matrix must be square and non-empty");
  }
  const double asym = hermiticity_residual(m);
  if (asym > kHermitianTol) {
    throw std::invalid_argument("hermitian_eigenvalues: input is not Hermitian (residual " +
                                std::to_string(asym) + ")");
  }
  const ComplexMatrix sym = 0.5 * (m + m.adjoint());
  Eigen::SelfAdjointEigenSolver<ComplexMatrix> solver(sym, Eigen::EigenvaluesOnly);
  if (solver.info() != Eigen::Success) {
    throw std::runtime_error("hermitian_eigenvalues: no convergence");
  }
  return solver.eigenvalues();
}

double min_eigenvalue(const ComplexMatrix& m) { return hermitian_eigenvalues(m).minCoeff(); }

ComplexMatrix sym_projector(int dim) {
  if (dim < 2) throw std::invalid_argument("sym_projector: dim must be >= 2");
  const Eigen::Index n = static_cast<Eigen::Index>(dim) * dim;
  // (1 + SWAP) / 2
  ComplexMatrix p = 0.5 * ComplexMatrix::Identity(n, n);
  for (int i = 0; i < dim; ++i) {
    for (int j = 0; j < dim; ++j) p(i * dim + j, j * dim + i) += 0.5;
  }
  return p;
}

ComplexMatrix antisym_projector(int dim) {
  if (dim < 2) throw std::invalid_argument("antisym_projector: dim must be >= 2");
  const Eigen::Index n = static_cast<Eigen::Index>(dim) * dim;
  return ComplexMatrix::Identity(n, n) - sym_projector(dim);
}

ComplexMatrix haar_unitary(int dim, Rng& rng) {
  if (dim < 1) throw std::invalid_argument("haar_unitary: dim must be positive");
  ComplexMatrix z(dim, dim);
  for (int j = 0; j < dim; ++j) {
    for (int i = 0; i < dim; ++i) z(i, j) = rng.complex_normal();
  }
  Eigen::HouseholderQR<ComplexMatrix> qr(z);
  ComplexMatrix q = qr.householderQ();
  const ComplexMatrix& r = qr.matrixQR();
  for (int j = 0; j < dim; ++j) {
    const double mag = std::abs(r(j, j));
    if (mag > 0.0) q.col(j) *= r(j, j) / mag;
  }
  return q;
}

double max_abs(const ComplexMatrix& m) { return m.size() == 0 ? 0.0 : m.cwiseAbs().maxCoeff(); }

double max_abs_diff(const ComplexMatrix& a, const ComplexMatrix& b) {
  if (a.rows() != b.rows() || a.cols() != b.cols()) {
    throw std::invalid_argument("max_abs_diff: shape mismatch");
  }
  return max_abs(a - b);
}

double unitarity_residual(const ComplexMatrix& u) {
  return max_abs_diff(u * u.adjoint(), ComplexMatrix::Identity(u.rows(), u.cols()));
}

ComplexMatrix basis_op(int dim, int i, int j) {
  if (i < 0 || j < 0 || i >= dim || j >= dim) throw std::out_of_range("basis_op: index");
  ComplexMatrix m = ComplexMatrix::Zero(dim, dim);
  m(i, j) = 1.0;
  return m;
}

ComplexVector basis_ket(int dim, int i) {
  if (i < 0 || i >= dim) throw std::out_of_range("basis_ket: index");
  ComplexVector v = ComplexVector::Zero(dim);
  v(i) = 1.0;
  return v;
}

double von_neumann_entropy(const ComplexMatrix& rho) {
  double s = 0.0;
  for (double lambda : hermitian_eigenvalues(rho)) {
    if (lambda > 1e-300) s -= lambda * std::log(lambda);
  }
  return s;
}

}  // namespace covent
