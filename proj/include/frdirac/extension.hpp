#pragma once

#include <string>
#include <vector>

namespace frdirac::extension {

// One Fourier mode of the flat extension problem.  The branch s = +-1 is
// the eigenvalue sign of the boundary operator nu*D (symbol M(xi)), so the
// Dirichlet-to-Neumann value of the mode is s |xi|^(2 lambda).  The
// normalized profile solves
//   Psi'' + (1-2L)/t Psi' + (s|xi|/t - |xi|^2) Psi = 0,   Psi(0+) = 1.
struct ModeProblem {
  int n = 2;
  double lambda = 0.3;
  double xi = 1.0;
  int s = +1;
  // graded sampling grid t_i = t_max_mult/xi * (i/M)^grade, i = 1..M
  double t_max_mult = 40.0;
  int M = 4096;
  double grade = 3.0;

  ModeProblem() = default;
  ModeProblem(int n_, double lambda_, double xi_, int s_);
  double t_max() const { return t_max_mult / xi; }
  double node(int i) const;
  void validate() const;
};

// Sampled profile with derivative, normalized to Psi(0+) = 1, plus the
// small-t expansion coefficients recovered by the normalization fit
// (Psi ~ 1 + beta t + c2 t^(2L) + ...) and diagnostics.
struct ModeSolution {
  std::vector<double> t;
  std::vector<double> psi;
  std::vector<double> dpsi;
  double beta = 0.0;       // linear coefficient (-s xi / (1-2L))
  double c2 = 0.0;         // t^(2L) coefficient; dtn = d_lambda * c2
  double fit_residual = 0.0;
  double norm_defect = 0.0;  // |regular part at t_1 - 1|
  int rk_steps = 0;
};

// Closed form through the confluent functions:
//   Psi(t) = t^(2L) e^(-xi t) (Gamma(a)/Gamma(2L)) (2 xi)^(2L)
//            V(a, 2L+1, 2 xi t),  a = lambda + (1-s)/2.
ModeSolution closed_form_mode(const ModeProblem& p);

// Inward adaptive Runge-Kutta integration from t_max with the decaying
// asymptotic seed, rescaled to the Psi(0+) = 1 normalization.  Re-runs
// from 1.5 t_max and flags growing-mode contamination above 1e-6.
ModeSolution solve_mode_ode(const ModeProblem& p);

// (d_lambda / 2 lambda) lim t^(1-2L) Psi'(t), Richardson-style
// extrapolation over a decreasing node ladder with the known correction
// exponents; for lambda > 1/2 the linear term beta t is subtracted first.
double dtn_extract(const ModeProblem& p, const ModeSolution& sol);

// Same limit through the (k+1)-st derivative formula with k = floor(2L),
// finite differences on the stored samples; cross-check of dtn_extract.
double higher_derivative_dtn(const ModeProblem& p, const ModeSolution& sol);

// Weighted energy identity of the mode's own extension equation, reported
// as (lhs, rhs) with the energy branch sign sigma = -s:
//   lhs = int t^(1-2L) (|Psi'|^2 + xi^2 Psi^2 + sigma xi Psi^2 / t) dt,
//   rhs = (2L/d_lambda) sigma xi^(2L).
// Graded-grid trapezoid with closed-form head/tail corrections.
struct EnergyPair {
  double lhs = 0.0;
  double rhs = 0.0;
};
EnergyPair mode_energy(const ModeProblem& p, const ModeSolution& sol);

// Zero-trace perturbation sampled on the mode grid (values + derivative).
struct Perturbation {
  std::vector<double> vals;
  std::vector<double> dvals;
};

// energy(Psi + eta) - rhs; nonnegative up to quadrature tolerance, zero
// iff eta = 0 (the profile minimizes the energy at fixed trace).
double sobolev_gap(const ModeProblem& p, const ModeSolution& sol,
                   const Perturbation& eta);

// Batch driver: rows of (n, lambda, xi, s), solved independently (OpenMP);
// output rows ordered by input index.
struct ModeReportRow {
  ModeProblem p;
  double dtn_numeric = 0.0;
  double dtn_closed = 0.0;
  double rel_err = 0.0;
  double energy_lhs = 0.0;  // NaN when lambda >= 1/2
  double energy_rhs = 0.0;
};
std::vector<ModeReportRow> run_mode_batch(const std::vector<ModeProblem>& rows);

std::vector<ModeProblem> load_mode_batch_csv(const std::string& path);
void save_mode_batch_csv(const std::vector<ModeReportRow>& rows,
                         const std::string& path);

namespace reference {
// Serial batch loop, kept as the determinism/correctness reference for
// the parallel driver.
std::vector<ModeReportRow> run_mode_batch(const std::vector<ModeProblem>& rows);
}  // namespace reference

}  // namespace frdirac::extension
