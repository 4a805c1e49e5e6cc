// Test-only reference implementations, written from index formulas and kept
// independent of the library's Eigen-level constructions.

#pragma once

#include "covent/matrix.hpp"
#include "covent/process.hpp"
#include "covent/sud.hpp"

#include <cmath>
#include <complex>
#include <vector>

namespace oracle {

using covent::Complex;
using covent::ComplexMatrix;

inline double delta(int a, int b) { return a == b ? 1.0 : 0.0; }

// (A_ij)_ac
inline double gen(int d, int i, int j, int a, int c) {
  return delta(i, a) * delta(j, c) - delta(i, j) * delta(a, c) / d;
}

// Output state entry by entry: <ab| rho |cd>.
inline ComplexMatrix output_state(const covent::ProcessParams& p, const ComplexMatrix& m) {
  const int d = p.dim;
  ComplexMatrix rho(d * d, d * d);
  for (int a = 0; a < d; ++a)
    for (int b = 0; b < d; ++b)
      for (int c = 0; c < d; ++c)
        for (int e = 0; e < d; ++e) {
          Complex v = delta(a, c) * delta(b, e) / double(d * d);
          Complex ma = 0.0;  // (m_ij A_ij)_ac
          Complex mb = 0.0;  // (m_ij A_ij)_be
          for (int i = 0; i < d; ++i)
            for (int j = 0; j < d; ++j) {
              ma += m(i, j) * gen(d, i, j, a, c);
              mb += m(i, j) * gen(d, i, j, b, e);
              v += p.C * gen(d, i, j, a, c) * gen(d, j, i, b, e);
              for (int l = 0; l < d; ++l) {
                v += p.beta * m(i, l) * gen(d, i, j, a, c) * gen(d, j, l, b, e);
                v += std::conj(p.beta) * std::conj(m(i, l)) * gen(d, j, i, a, c) * gen(d, l, j, b, e);
              }
            }
          v += p.alpha1 * ma * delta(b, e) + p.alpha2 * delta(a, c) * mb;
          rho(a * d + b, c * d + e) = v;
        }
  return rho;
}

inline ComplexMatrix projector(const covent::ComplexVector& v) { return v * v.adjoint(); }

// (|ij> - |ji>)/sqrt(2)
inline covent::ComplexVector singlet(int d, int i, int j) {
  covent::ComplexVector v = covent::ComplexVector::Zero(d * d);
  v(i * d + j) = 1.0 / std::sqrt(2.0);
  v(j * d + i) = -1.0 / std::sqrt(2.0);
  return v;
}

// Entropy from a real spectrum, 0 ln 0 = 0.
inline double entropy_of(const std::vector<double>& spectrum) {
  double s = 0.0;
  for (double x : spectrum)
    if (x > 1e-15) s -= x * std::log(x);
  return s;
}

inline double max_norm(const ComplexMatrix& m) { return m.cwiseAbs().maxCoeff(); }

}  // namespace oracle
