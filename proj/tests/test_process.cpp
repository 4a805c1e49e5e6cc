#include "covent/process.hpp"
#include "oracles.hpp"

#include <doctest.h>

#include <algorithm>
#include <cmath>
#include <sstream>
#include <stdexcept>

using namespace covent;

namespace {

// Diagonal weight of rho_out(D e_11) on each of the four index blocks.
std::array<double, 4> block_weights(const ComplexMatrix& rho, int d) {
  std::array<double, 4> w{};
  for (int a = 0; a < d; ++a)
    for (int b = 0; b < d; ++b) {
      const double x = rho(a * d + b, a * d + b).real();
      if (a == 0 && b == 0) w[0] += x;
      else if (a == 0 || b == 0) w[1] += x;
      else if (a == b) w[2] += x;
      else w[3] += x;
    }
  return w;
}

ProcessParams sample_params(int d, Rng& rng) {
  ProcessParams p{d};
  p.C = 0.1 * rng.normal();
  p.alpha1 = 0.1 * rng.normal();
  p.alpha2 = 0.1 * rng.normal();
  p.beta = 0.1 * rng.complex_normal();
  return p;
}

}  // namespace

TEST_CASE("output operator matches the entrywise oracle") {
  Rng rng(21);
  for (int d = 2; d <= 4; ++d) {
    for (int s = 0; s < 5; ++s) {
      const ProcessParams p = sample_params(d, rng);
      const BlochVector m = random_pure_input(d, rng).second;
      const ComplexMatrix rho = output_operator(p, m);
      CHECK(max_abs_diff(rho, oracle::output_state(p, m.m)) < 1e-13);
      CHECK(std::abs(rho.trace() - 1.0) < 1e-13);
      CHECK(hermiticity_residual(rho) < 1e-14);
    }
  }
}

TEST_CASE("output operator is affine in the parameters") {
  Rng rng(22);
  const int d = 3;
  const BlochVector m = random_pure_input(d, rng).second;
  const ProcessParams p = sample_params(d, rng), q = sample_params(d, rng);
  ProcessParams sum{d, p.C + q.C, p.alpha1 + q.alpha1, p.alpha2 + q.alpha2, p.beta + q.beta};
  const ComplexMatrix zero = output_operator(ProcessParams::zero(d), m);
  CHECK(max_abs_diff(zero, ComplexMatrix::Identity(9, 9) / 9.0) < 1e-15);
  CHECK(max_abs_diff(output_operator(sum, m) + zero, output_operator(p, m) + output_operator(q, m)) < 1e-14);
}

TEST_CASE("block probabilities: maximally mixed process at D = 3") {
  const auto q = probabilities_from_params(ProcessParams::zero(3));
  CHECK(q.p1 == doctest::Approx(1.0 / 9));
  CHECK(q.p2 == doctest::Approx(4.0 / 9));
  CHECK(q.p3 == doctest::Approx(2.0 / 9));
  CHECK(q.p4 == doctest::Approx(2.0 / 9));
}

TEST_CASE("block probabilities match oracle diagonal sums") {
  Rng rng(23);
  for (int d = 2; d <= 5; ++d) {
    for (int s = 0; s < 10; ++s) {
      const ProcessParams p = sample_params(d, rng);
      const auto w = block_weights(oracle::output_state(p, BlochVector::reference(d).m), d);
      const auto q = probabilities_from_params(p);
      CHECK(q.p1 == doctest::Approx(w[0]).epsilon(1e-12));
      CHECK(q.p2 == doctest::Approx(w[1]).epsilon(1e-12));
      CHECK(q.p3 == doctest::Approx(w[2]).epsilon(1e-12));
      CHECK(std::abs(q.p4 - w[3]) < 1e-12);
      CHECK(q.sum() == doctest::Approx(1.0).epsilon(1e-12));
    }
  }
}

TEST_CASE("block decomposition reconstructs the state") {
  Rng rng(24);
  for (int d = 2; d <= 5; ++d) {
    const ProcessParams p = random_admissible_params(d, rng);
    const auto blocks = block_decomposition(p);
    CHECK(max_abs_diff(blocks.reconstruct(), oracle::output_state(p, BlochVector::reference(d).m)) < 1e-13);
    const auto probs = blocks.probs.as_array();
    for (std::size_t k = 0; k < 4; ++k) {
      if (probs[k] > kBlockProbabilityFloor) {
        CHECK(std::abs(blocks.blocks[k].trace() - 1.0) < 1e-12);
        CHECK(min_eigenvalue(blocks.blocks[k]) > -1e-10);
      }
    }
  }
}

TEST_CASE("analytic spectrum equals numeric spectrum") {
  Rng rng(25);
  for (int d = 2; d <= 6; ++d) {
    for (int s = 0; s < 40; ++s) {
      const ProcessParams p = random_admissible_params(d, rng);
      const auto report = spectrum_report(p);
      CHECK(report.max_deviation() < 1e-9);
      // Independent numeric side.
      RealVector ev = hermitian_eigenvalues(oracle::output_state(p, BlochVector::reference(d).m));
      const auto a = report.analytic_sorted();
      REQUIRE(a.size() == static_cast<std::size_t>(ev.size()));
      for (Eigen::Index k = 0; k < ev.size(); ++k) CHECK(std::abs(a[k] - ev(k)) < 1e-9);
    }
  }
  // Inadmissible parameters too: the spectrum formulas are algebraic identities.
  for (int d = 2; d <= 5; ++d) CHECK(spectrum_report(sample_params(d, rng)).max_deviation() < 1e-9);
}

TEST_CASE("random admissible parameters give positive states") {
  Rng rng(26);
  for (int d = 2; d <= 6; ++d) {
    for (int s = 0; s < 30; ++s) {
      const ProcessParams p = random_admissible_params(d, rng);
      CHECK(is_admissible(p).admissible);
      const auto out = build_output_state(p, random_pure_input(d, rng).second);
      CHECK(out.non_negative());
    }
  }
}

TEST_CASE("inadmissible point is flagged") {
  const ProcessParams p = params_from_probabilities(1.0, 0.0, 0.0, 0.0, 0.0, 3);
  const auto adm = is_admissible(p);
  CHECK_FALSE(adm.admissible);
  CHECK(adm.margin < -0.1);
  CHECK_FALSE(build_output_state(p, BlochVector::reference(3)).non_negative());
}

TEST_CASE("inversion from probabilities") {
  SUBCASE("D = 3, antisymmetric corner") {
    const ProcessParams p = params_from_probabilities(0.0, 0.0, 0.0, 0.0, 0.0, 3);
    CHECK(2.0 * p.beta.real() == doctest::Approx(-1.0 / 6));
    CHECK(std::abs(p.C) < 1e-15);
    CHECK(p.alpha1 == doctest::Approx(1.0 / 36));
    CHECK(p.alpha2 == doctest::Approx(1.0 / 36));
    const auto q = probabilities_from_params(p);
    CHECK(std::abs(q.p1) < 1e-14);
    CHECK(std::abs(q.p3) < 1e-14);
    CHECK(std::abs(q.p4) < 1e-14);
    CHECK(q.p2 == doctest::Approx(1.0));
  }
  SUBCASE("D = 4, p4 = 1/2") {
    const ProcessParams p = params_from_probabilities(0.0, 0.0, 0.5, 0.0, 0.0, 4);
    CHECK(p.C == doctest::Approx(-1.0 / 12));
    CHECK(std::abs(p.alpha1) < 1e-15);
    CHECK(std::abs(p.alpha2) < 1e-15);
    CHECK(std::abs(p.beta) < 1e-15);
  }
  SUBCASE("round trip") {
    Rng rng(27);
    for (int d = 3; d <= 6; ++d) {
      for (int s = 0; s < 20; ++s) {
        const ProcessParams p = sample_params(d, rng);
        const auto q = probabilities_from_params(p);
        const ProcessParams back =
            params_from_probabilities(q.p1, q.p3, q.p4, p.alpha1 - p.alpha2, p.beta.imag(), d);
        CHECK(std::abs(back.C - p.C) < 1e-12);
        CHECK(std::abs(back.alpha1 - p.alpha1) < 1e-12);
        CHECK(std::abs(back.alpha2 - p.alpha2) < 1e-12);
        CHECK(std::abs(back.beta - p.beta) < 1e-12);
      }
    }
  }
  CHECK_THROWS_AS(params_from_probabilities(0.0, 0.0, 0.0, 0.0, 0.0, 2), std::invalid_argument);
}

TEST_CASE("positivity region: cloning bound") {
  for (int d : {3, 4, 5}) {
    const int grid = d == 4 ? 60 : 30;
    const auto rows = positivity_region_scan(d, grid);
    double best = 0.0;
    std::size_t admissible = 0;
    for (const auto& r : rows) {
      CHECK(r.p1 == doctest::Approx(1.0 - r.p2 - r.p3 - r.p4));
      if (r.admissible) {
        ++admissible;
        best = std::max(best, r.p1);
      }
    }
    CHECK(admissible > 0);
    CHECK(std::abs(best - 2.0 / (d + 1)) <= 1.0 / grid + 1e-12);
  }
}

TEST_CASE("region CSV layout") {
  std::ostringstream s;
  write_region_csv(s, positivity_region_scan(3, 2));
  std::istringstream in(s.str());
  std::string line;
  std::getline(in, line);
  CHECK(line == "p2,p3,p4,p1,admissible,margin");
  int n = 0;
  while (std::getline(in, line)) ++n;
  CHECK(n == 10);  // points with p2 + p3 + p4 <= 1 at step 1/2
}

TEST_CASE("covariance under U (x) U") {
  Rng rng(28);
  for (int d = 2; d <= 5; ++d) {
    const ProcessParams p = random_admissible_params(d, rng);
    CHECK(covariance_check(p, rng, 20) < 1e-10);
    CHECK(covariance_deviation(p, ComplexMatrix::Identity(d, d)) < 1e-14);
    // Covariance is algebraic, so it also holds off the admissible set.
    CHECK(covariance_check(sample_params(d, rng), rng, 5) < 1e-10);
  }
}
