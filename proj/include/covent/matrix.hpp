// Dense complex linear algebra for bipartite D x D systems.
//
// Basis convention: |ij> = e_i (x) e_j with the first particle as the major
// index, i.e. the row of |ij> in a D^2 x D^2 matrix is i*D + j (0-based).

#pragma once

#include <Eigen/Dense>

#include <complex>
#include <cstdint>
#include <random>
#include <vector>

namespace covent {

using Complex = std::complex<double>;
using ComplexMatrix = Eigen::MatrixXcd;
using ComplexVector = Eigen::VectorXcd;
using RealVector = Eigen::VectorXd;

/// Operators with min eigenvalue at or above -kPositivityTol count as non-negative.
inline constexpr double kPositivityTol = 1e-10;
/// Largest asymmetry accepted by hermitian_eig.
inline constexpr double kHermitianTol = 1e-9;

enum class Subsystem { First = 1, Second = 2 };

/// Eigen-decomposition of a Hermitian matrix, eigenvalues sorted descending.
struct HermitianSpectrum {
  RealVector eigenvalues;
  ComplexMatrix eigenvectors;  // column k belongs to eigenvalues[k]
  double asymmetry = 0.0;      // max |m - m^dagger| of the input
};

/// Seeded stream on top of std::mt19937_64. Gaussian variates are produced
/// with Box-Muller from raw 64-bit draws so the sequence does not depend on
/// the standard library's distribution implementations.
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : seed_(seed), engine_(seed) {}

  std::uint64_t seed() const { return seed_; }
  std::uint64_t draws() const { return draws_; }

  /// Uniform in (0, 1).
  double uniform();
  /// Standard normal.
  double normal();
  /// Complex normal with E|z|^2 = 1.
  Complex complex_normal();

 private:
  std::uint64_t seed_;
  std::mt19937_64 engine_;
  std::uint64_t draws_ = 0;
  bool has_spare_ = false;
  double spare_ = 0.0;
};

ComplexMatrix kron(const ComplexMatrix& a, const ComplexMatrix& b);

ComplexMatrix partial_trace(const ComplexMatrix& rho, int dim, Subsystem traced);
ComplexMatrix partial_transpose(const ComplexMatrix& rho, int dim, Subsystem transposed);

/// Throws std::invalid_argument when the input is not square or
/// ||m - m^dagger||_max > kHermitianTol. Solves (m + m^dagger)/2.
HermitianSpectrum hermitian_eig(const ComplexMatrix& m);
/// Eigenvalues only, ascending. Same preconditions as hermitian_eig.
RealVector hermitian_eigenvalues(const ComplexMatrix& m);
double min_eigenvalue(const ComplexMatrix& m);

ComplexMatrix sym_projector(int dim);
ComplexMatrix antisym_projector(int dim);

/// Haar-distributed unitary: QR of a complex Gaussian matrix with the phases
/// of diag(R) moved into Q.
ComplexMatrix haar_unitary(int dim, Rng& rng);

double max_abs(const ComplexMatrix& m);
double max_abs_diff(const ComplexMatrix& a, const ComplexMatrix& b);
double hermiticity_residual(const ComplexMatrix& m);
double unitarity_residual(const ComplexMatrix& u);

/// Matrix basis element |i><j| (0-based).
ComplexMatrix basis_op(int dim, int i, int j);
ComplexVector basis_ket(int dim, int i);

/// -Tr(rho ln rho) in nats; eigenvalues below 1e-300 contribute 0.
double von_neumann_entropy(const ComplexMatrix& rho);

}  // namespace covent
