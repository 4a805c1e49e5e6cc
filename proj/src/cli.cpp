#include "covent/cli.hpp"

#include "covent/diagnostics.hpp"
#include "covent/family.hpp"
#include "covent/format.hpp"
#include "covent/matrix.hpp"
#include "covent/process.hpp"
#include "covent/projection.hpp"
#include "covent/sud.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <algorithm>
#include <cmath>
#include <functional>
#include <ostream>
#include <sstream>
#include <limits>
#include <stdexcept>

namespace covent {

namespace {

using nlohmann::json;

class CheckBuilder {
 public:
  CheckBuilder(std::string name, double tol) : check_{std::move(name), tol, 0.0, false} {}
  void observe(double deviation) { check_.worst = std::max(check_.worst, deviation); }
  VerifyCheck finish() {
    check_.passed = std::isfinite(check_.worst) && check_.worst <= check_.tolerance;
    return check_;
  }

 private:
  VerifyCheck check_;
};

double commutator_deviation(int d) {
  const GeneratorSet a(d);
  double worst = 0.0;
  for (int i = 0; i < d; ++i)
    for (int j = 0; j < d; ++j)
      for (int m = 0; m < d; ++m)
        for (int n = 0; n < d; ++n) {
          const ComplexMatrix lhs = a(i, j) * a(m, n) - a(m, n) * a(i, j);
          ComplexMatrix rhs = ComplexMatrix::Zero(d, d);
          if (j == m) rhs += a(i, n);
          if (i == n) rhs -= a(m, j);
          worst = std::max(worst, max_abs_diff(lhs, rhs));
        }
  return worst;
}

double trace_identity_deviation(int d) {
  const GeneratorSet a(d);
  double worst = 0.0;
  for (int i = 0; i < d; ++i)
    for (int j = 0; j < d; ++j)
      for (int k = 0; k < d; ++k)
        for (int l = 0; l < d; ++l) {
          const Complex lhs = (a(i, j) * a(k, l).adjoint()).trace();
          const double rhs = (i == k && j == l ? 1.0 : 0.0) - (i == j && k == l ? 1.0 / d : 0.0);
          worst = std::max(worst, std::abs(lhs - rhs));
        }
  return worst;
}

std::vector<double> family_grid(int d) {
  if (d == 2) return {0.0};
  std::vector<double> grid;
  for (int k = 0; k <= 10; ++k) grid.push_back(k / 10.0);
  grid.push_back(static_cast<double>(d - 2) / d);
  return grid;
}

json params_json(const ProcessParams& p) {
  return {{"C", round12(p.C)},
          {"alpha1", round12(p.alpha1)},
          {"alpha2", round12(p.alpha2)},
          {"beta_re", round12(p.beta.real())},
          {"beta_im", round12(p.beta.imag())}};
}

void emit(const RunConfig& cfg, const std::string& text, std::ostream& out) {
  if (cfg.out.empty()) {
    out << text;
  } else {
    write_file_atomic(cfg.out, text);
  }
}

int cmd_verify(const RunConfig& cfg, std::ostream& out) {
  const auto checks = run_verify_suite(cfg);
  bool all = true;
  json report = {{"dim_max", cfg.dim_max}, {"tol", cfg.tol}, {"seed", cfg.seed}, {"samples", cfg.samples}};
  json arr = json::array();
  for (const auto& c : checks) {
    all = all && c.passed;
    out << (c.passed ? "PASS " : "FAIL ") << c.name << "  worst=" << fmt12(c.worst)
        << "  tol=" << fmt12(c.tolerance) << '\n';
    arr.push_back({{"name", c.name}, {"tolerance", c.tolerance}, {"worst", c.worst}, {"passed", c.passed}});
  }
  report["checks"] = arr;
  report["passed"] = all;
  out << (all ? "all checks passed" : "verification FAILED") << '\n';
  if (!cfg.out.empty()) write_file_atomic(cfg.out, report.dump(2) + "\n");
  return all ? 0 : 1;
}

int cmd_region(const RunConfig& cfg, std::ostream& out) {
  std::ostringstream s;
  write_region_csv(s, positivity_region_scan(cfg.dim, cfg.grid));
  emit(cfg, s.str(), out);
  return 0;
}

int cmd_entropy_scan(const RunConfig& cfg, std::ostream& out) {
  std::ostringstream s;
  write_entropy_csv(s, entropy_scan(cfg.dim_min, cfg.dim_max, cfg.grid));
  emit(cfg, s.str(), out);
  return 0;
}

int cmd_alpha_ratio(const RunConfig& cfg, std::ostream& out) {
  std::ostringstream s;
  write_alpha_ratio_csv(s, cfg.dim_min, cfg.dim_max);
  emit(cfg, s.str(), out);
  return 0;
}

int cmd_family(const RunConfig& cfg, std::ostream& out) {
  const auto proc = OptimalProcess::make(cfg.dim, cfg.p4);
  BlochVector m = BlochVector::reference(cfg.dim);
  if (cfg.random_input) {
    Rng rng(cfg.seed);
    m = random_pure_input(cfg.dim, rng).second;
  }
  const TwoParticleState state = optimal_output_state(cfg.dim, cfg.p4, m);
  const ComplexMatrix ps = sym_projector(cfg.dim);
  json j = {{"dim", cfg.dim},
            {"p4", round12(proc.p4)},
            {"params", params_json(proc.params())},
            {"input", bloch_to_json(m)},
            {"state", matrix_to_json(state.rho)},
            {"antisym_residual", round12(max_abs(ps * state.rho * ps))}};
  emit(cfg, j.dump(2) + "\n", out);
  return 0;
}

int cmd_demo_projection(const RunConfig& cfg, std::ostream& out) {
  BlochVector m = BlochVector::reference(2);
  if (cfg.random_input) {
    Rng rng(cfg.seed);
    m = random_pure_input(2, rng).second;
  }
  json branches = json::array();
  for (int J : {0, 1}) {
    const auto res = project_process(m, J);
    const auto w = triplet_weights(res.state.rho);
    branches.push_back({{"J", J},
                        {"probability", round12(res.probability)},
                        {"state", matrix_to_json(res.state.rho)},
                        {"triplet_weights", {{"M=1", round12(w[0])}, {"M=0", round12(w[1])}, {"M=-1", round12(w[2])}}}});
  }
  json j = {{"input", bloch_to_json(m)}, {"branches", branches}};
  emit(cfg, j.dump(2) + "\n", out);
  return 0;
}

}  // namespace

std::string RunConfig::validate() const {
  if (!(tol > 0.0)) return "--tol must be positive";
  if (grid < 2) return "--grid must be >= 2";
  if (samples < 1) return "--samples must be >= 1";
  if (command == "verify" && dim_max < 2) return "--dim-max must be >= 2";
  if (command == "region" && dim < 3) return "--dim must be >= 3 for the region scan";
  if ((command == "family" || command == "demo-projection") && dim < 2) return "--dim must be >= 2";
  if (command == "entropy-scan" || command == "alpha-ratio") {
    if (dim_min < 2) return "--dim-min must be >= 2";
    if (dim_max < dim_min) return "--dim-max must be >= --dim-min";
    if (dim_max > 64) return "--dim-max must be <= 64";
  }
  if (command == "family") {
    if (!(p4 >= 0.0 && p4 <= 1.0)) return "--p4 must lie in [0, 1]";
    if (dim == 2 && p4 != 0.0) return "--p4 must be 0 for --dim 2";
  }
  if (dim > 64) return "--dim must be <= 64";
  return {};
}

std::vector<VerifyCheck> run_verify_suite(const RunConfig& cfg) {
  Rng rng(cfg.seed);
  const double tol = cfg.tol;
  std::vector<VerifyCheck> out;

  auto per_dim = [&](const std::string& name, int dmin, int dmax, const std::function<double(int)>& f) {
    CheckBuilder b(name, tol);
    for (int d = dmin; d <= dmax; ++d) b.observe(f(d));
    out.push_back(b.finish());
  };
  const int dmax = cfg.dim_max;

  per_dim("generators.commutation", 2, std::min(dmax, 5), commutator_deviation);
  per_dim("generators.trace_identity", 2, std::min(dmax, 6), trace_identity_deviation);
  per_dim("bloch.round_trip", 2, dmax, [&](int d) {
    double w = 0.0;
    for (int s = 0; s < cfg.samples; ++s) {
      const auto [state, m] = random_pure_input(d, rng);
      w = std::max(w, max_abs_diff(bloch_to_density(density_to_bloch(state)).rho, state.rho));
      w = std::max(w, std::abs(m.purity_constraint_value() - d * (d - 1.0)));
    }
    return w;
  });
  per_dim("process.spectrum", 2, dmax, [&](int d) {
    double w = 0.0;
    for (int s = 0; s < cfg.samples; ++s) w = std::max(w, spectrum_report(random_admissible_params(d, rng)).max_deviation());
    return w;
  });
  per_dim("process.block_reconstruction", 2, dmax, [&](int d) {
    double w = 0.0;
    for (int s = 0; s < cfg.samples; ++s) {
      const auto p = random_admissible_params(d, rng);
      w = std::max(w, max_abs_diff(block_decomposition(p).reconstruct(),
                                   output_operator(p, BlochVector::reference(d))));
    }
    return w;
  });
  per_dim("process.inversion_round_trip", 3, dmax, [&](int d) {
    double w = 0.0;
    for (int s = 0; s < cfg.samples; ++s) {
      const auto p = random_admissible_params(d, rng);
      const auto q = probabilities_from_params(p);
      const auto back = params_from_probabilities(q.p1, q.p3, q.p4, p.alpha1 - p.alpha2, p.beta.imag(), d);
      w = std::max({w, std::abs(back.C - p.C), std::abs(back.alpha1 - p.alpha1), std::abs(back.alpha2 - p.alpha2),
                    std::abs(back.beta - p.beta)});
    }
    return w;
  });
  per_dim("process.covariance", 2, dmax, [&](int d) {
    return covariance_check(random_admissible_params(d, rng), rng, cfg.samples);
  });
  per_dim("family.consistency", 2, dmax, [&](int d) {
    double w = 0.0;
    for (double p4 : family_grid(d)) {
      const auto m = random_pure_input(d, rng).second;
      w = std::max(w, max_abs_diff(optimal_output_state(d, p4, m).rho, output_operator(optimal_params(d, p4), m)));
    }
    return w;
  });
  per_dim("family.antisymmetric_support", 2, dmax, [&](int d) {
    const ComplexMatrix pa = antisym_projector(d);
    double w = 0.0;
    for (double p4 : family_grid(d)) {
      const auto m = random_pure_input(d, rng).second;
      const ComplexMatrix rho = output_operator(optimal_params(d, p4), m);
      w = std::max(w, max_abs_diff(pa * rho * pa, rho));
    }
    return w;
  });
  per_dim("family.certificate", 3, std::min(dmax, 5), [&](int d) {
    double w = 0.0;
    for (double p4 : family_grid(d)) {
      const TwoParticleState st{d, optimal_reference_state(d, p4)};
      w = std::max(w, certify_optimal_entanglement(st, rng, cfg.samples).max_subtractable_weight);
    }
    return w;
  });
  per_dim("diagnostics.entropy", 2, dmax, [&](int d) {
    double w = 0.0;
    for (double p4 : family_grid(d)) {
      const auto r = diagnose(d, p4);
      w = std::max(w, std::abs(r.entropy_numeric - r.entropy_analytic));
    }
    return w;
  });
  per_dim("diagnostics.index_of_correlation", 3, dmax, [&](int d) {
    double w = 0.0;
    for (double p4 : family_grid(d)) {
      const auto r = diagnose(d, p4);
      w = std::max(w, std::abs(r.ic_numeric - r.ic_analytic));
    }
    return w;
  });
  per_dim("diagnostics.reduced_states", 2, dmax, [&](int d) {
    double w = 0.0;
    for (double p4 : family_grid(d)) {
      const auto m = random_pure_input(d, rng).second;
      const auto params = optimal_params(d, p4);
      const auto [r1, r2] = reduced_states({d, output_operator(params, m)});
      w = std::max({w, max_abs_diff(r1.rho, reduced_state_analytic(params.alpha1, m)),
                    max_abs_diff(r2.rho, reduced_state_analytic(params.alpha2, m))});
    }
    return w;
  });
  {
    // Sign check, independent of --tol: every family member has a negative PT eigenvalue.
    VerifyCheck c{"diagnostics.free_entanglement", -1e-6, -std::numeric_limits<double>::infinity(), false};
    for (int d = 2; d <= dmax; ++d) {
      for (double p4 : family_grid(d)) c.worst = std::max(c.worst, negativity_check(d, p4).min_pt_eigenvalue);
    }
    c.passed = c.worst < c.tolerance;
    out.push_back(c);
  }
  {
    CheckBuilder b("demo.projection", tol);
    const auto j1 = project_process(BlochVector::reference(2), 1);
    const auto j0 = project_process(BlochVector::reference(2), 0);
    const auto w = triplet_weights(j1.state.rho);
    const ComplexVector singlet = angular_momentum_ket(0, 0);
    b.observe(std::abs(w[0] - 2.0 / 3.0));
    b.observe(std::abs(w[1] - 1.0 / 3.0));
    b.observe(std::abs(w[2]));
    b.observe(std::abs(j0.probability - 0.25));
    b.observe(std::abs(j1.probability - 0.75));
    b.observe(max_abs_diff(j0.state.rho, singlet * singlet.adjoint()));
    b.observe(covariance_demo(rng, cfg.samples));
    out.push_back(b.finish());
  }
  return out;
}

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  RunConfig cfg;
  CLI::App app{"Universal two-particle entanglement processes: construction and verification", "covent"};
  app.require_subcommand(1, 1);

  auto add_seed_tol = [&](CLI::App* sub) {
    sub->add_option("--seed", cfg.seed, "RNG seed (mt19937_64)")->capture_default_str();
    sub->add_option("--samples", cfg.samples, "Random samples per check")->capture_default_str();
    sub->add_option("--out", cfg.out, "Output path (default: stdout)");
  };

  auto* verify = app.add_subcommand("verify", "Run the analytic-vs-numeric suite");
  verify->add_option("--dim-max", cfg.dim_max, "Largest dimension D checked (from D=2)")->capture_default_str();
  verify->add_option("--tol", cfg.tol, "Tolerance for every equivalence check")->capture_default_str();
  add_seed_tol(verify);

  auto* region = app.add_subcommand("region", "Positivity-region scan on the (p2,p3,p4) simplex (CSV)");
  region->add_option("--dim", cfg.dim, "Dimension D (>= 3)")->capture_default_str();
  region->add_option("--grid", cfg.grid, "Lattice steps per unit")->default_str("60");
  region->add_option("--out", cfg.out, "Output path (default: stdout)");

  auto* escan = app.add_subcommand("entropy-scan", "Entropy / index of correlation / PT scan (CSV)");
  escan->add_option("--dim-min", cfg.dim_min, "Smallest D")->default_str("3");
  escan->add_option("--dim-max", cfg.dim_max, "Largest D")->default_str("8");
  escan->add_option("--grid", cfg.grid, "p4 steps in [0,1]")->capture_default_str();
  escan->add_option("--out", cfg.out, "Output path (default: stdout)");

  auto* aratio = app.add_subcommand("alpha-ratio", "alpha_max / alpha_clone by dimension (CSV)");
  aratio->add_option("--dim-min", cfg.dim_min, "Smallest D")->default_str("2");
  aratio->add_option("--dim-max", cfg.dim_max, "Largest D")->default_str("32");
  aratio->add_option("--out", cfg.out, "Output path (default: stdout)");

  auto* family = app.add_subcommand("family", "Optimal-family process parameters and output state (JSON)");
  family->add_option("--dim", cfg.dim, "Dimension D")->capture_default_str();
  family->add_option("--p4", cfg.p4, "Family parameter p4 in [0,1]")->capture_default_str();
  family->add_flag("--random-input", cfg.random_input, "Use a Haar-random pure input drawn from --seed");
  family->add_option("--seed", cfg.seed, "RNG seed (mt19937_64)")->capture_default_str();
  family->add_option("--out", cfg.out, "Output path (default: stdout)");

  auto* demo = app.add_subcommand("demo-projection", "Two-qubit J-projection demo (JSON)");
  demo->add_flag("--random-input", cfg.random_input, "Use a Haar-random pure input drawn from --seed");
  demo->add_option("--seed", cfg.seed, "RNG seed (mt19937_64)")->capture_default_str();
  demo->add_option("--out", cfg.out, "Output path (default: stdout)");

  // Per-command defaults that differ from RunConfig's.
  region->preparse_callback([&](std::size_t) { cfg.grid = 60; });
  escan->preparse_callback([&](std::size_t) {
    cfg.dim_min = 3;
    cfg.dim_max = 8;
  });
  aratio->preparse_callback([&](std::size_t) {
    cfg.dim_min = 2;
    cfg.dim_max = 32;
  });

  std::vector<std::string> rev(args.rbegin(), args.rend());
  try {
    app.parse(rev);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return 0;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return 0;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << '\n';
    return 2;
  }
  cfg.command = app.get_subcommands().front()->get_name();

  if (const auto problem = cfg.validate(); !problem.empty()) {
    err << "error: " << problem << '\n';
    return 2;
  }

  try {
    if (cfg.command == "verify") return cmd_verify(cfg, out);
    if (cfg.command == "region") return cmd_region(cfg, out);
    if (cfg.command == "entropy-scan") return cmd_entropy_scan(cfg, out);
    if (cfg.command == "alpha-ratio") return cmd_alpha_ratio(cfg, out);
    if (cfg.command == "family") return cmd_family(cfg, out);
    if (cfg.command == "demo-projection") return cmd_demo_projection(cfg, out);
  } catch (const std::exception& e) {
    err << "error: " << e.what() << '\n';
    return 2;
  }
  return 2;
}

}  // namespace covent
