#include "frdirac/extension.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <limits>
#include <sstream>
#include <string>

#include "frdirac/errors.hpp"
#include "frdirac/linalg.hpp"
#include "frdirac/specfun.hpp"

namespace frdirac::extension {

using specfun::d_lambda;
using specfun::gamma_ratio;
using specfun::kummer_V;
using specfun::lgamma_signed;

ModeProblem::ModeProblem(int n_, double lambda_, double xi_, int s_)
    : n(n_), lambda(lambda_), xi(xi_), s(s_) {
  validate();
}

double ModeProblem::node(int i) const {
  return t_max() * std::pow(static_cast<double>(i) / M, grade);
}

void ModeProblem::validate() const {
  if (!(lambda > 0.0 && lambda < 1.0) || std::abs(lambda - 0.5) < 1e-12) {
    std::ostringstream os;
    os << "ModeProblem: lambda must lie in (0,1) away from 1/2, got " << lambda;
    throw ParameterError(os.str());
  }
  if (!(xi > 0.0)) throw ParameterError("ModeProblem: xi must be > 0");
  if (s != 1 && s != -1) throw ParameterError("ModeProblem: s must be +-1");
  if (M < 16) throw SizeError("ModeProblem: grid too coarse");
  if (!(grade >= 1.0)) throw ParameterError("ModeProblem: grade must be >= 1");
}

namespace {

struct SmallTFit {
  double a0, beta, c2, residual;
};

// Fit y(t) ~ a0 (1 + beta t + c2 t^(2L) + ...) on the nodes below t_cut.
SmallTFit fit_small_t(const ModeProblem& p, const std::vector<double>& t,
                      const std::vector<double>& y, double t_cut) {
  const double L = p.lambda;
  std::vector<double> ts, ys;
  for (size_t i = 0; i < t.size(); ++i)
    if (t[i] <= t_cut) {
      ts.push_back(t[i]);
      ys.push_back(y[i]);
    }
  const int rows = static_cast<int>(ts.size());
  const double exps[6] = {0.0, 2.0 * L, 1.0, 1.0 + 2.0 * L, 2.0, 2.0 + 2.0 * L};
  const int cols = 6;
  if (rows < cols + 4)
    throw PrecisionError("extension: too few small-t nodes for the normalization fit");
  std::vector<double> A(static_cast<size_t>(rows) * cols);
  for (int j = 0; j < cols; ++j)
    for (int i = 0; i < rows; ++i)
      A[static_cast<size_t>(j) * rows + i] = std::pow(ts[i], exps[j]);
  double resid = 0.0;
  std::vector<double> c = linalg::lstsq(std::move(A), rows, cols, ys, 1e12, &resid);
  return {c[0], c[2] / c[0], c[1] / c[0], resid};
}

double dtn_target_scale(const ModeProblem& p) {
  return std::pow(p.xi, 2.0 * p.lambda);
}

}  // namespace

ModeSolution closed_form_mode(const ModeProblem& p) {
  p.validate();
  const double L = p.lambda, xi = p.xi;
  const double a = L + 0.5 * (1 - p.s);
  const double b = 2.0 * L + 1.0;
  // prefactor Gamma(a)/Gamma(2L) (2 xi)^(2L); a = 0 would need the limit
  // form but s = +1 keeps a = lambda > 0
  const double pref = gamma_ratio(a, 2.0 * L) * std::pow(2.0 * xi, 2.0 * L);
  ModeSolution sol;
  sol.t.resize(p.M);
  sol.psi.resize(p.M);
  sol.dpsi.resize(p.M);
  for (int i = 1; i <= p.M; ++i) {
    const double t = p.node(i);
    const double u = 2.0 * xi * t;
    const double V = kummer_V(a, b, u);
    const double Vp = -a * kummer_V(a + 1.0, b + 1.0, u);  // dV/du
    const double core = std::pow(t, 2.0 * L) * std::exp(-xi * t);
    sol.t[i - 1] = t;
    sol.psi[i - 1] = pref * core * V;
    sol.dpsi[i - 1] =
        pref * std::exp(-xi * t) *
        (2.0 * L * std::pow(t, 2.0 * L - 1.0) * V - xi * std::pow(t, 2.0 * L) * V +
         std::pow(t, 2.0 * L) * Vp * 2.0 * xi);
  }
  const SmallTFit fit = fit_small_t(p, sol.t, sol.psi, 2e-3 / xi);
  sol.beta = fit.beta;
  sol.c2 = fit.c2;
  sol.fit_residual = fit.residual;
  sol.norm_defect = std::abs(fit.a0 - 1.0);
  return sol;
}

namespace {

// Dormand-Prince 5(4) step for the linear mode system y = (psi, psi').
struct RKState {
  double t;
  double y[2];
};

void mode_rhs(const ModeProblem& p, double t, const double y[2], double f[2]) {
  f[0] = y[1];
  f[1] = -(1.0 - 2.0 * p.lambda) / t * y[1] +
         (p.xi * p.xi - p.s * p.xi / t) * y[0];
}

// One adaptive DP45 attempt; returns true and updates state when the step
// is accepted, otherwise shrinks h.  h < 0 for inward integration.
bool dp45_step(const ModeProblem& p, RKState& st, double& h, double rtol,
               int& steps) {
  static const double c2 = 1.0 / 5, c3 = 3.0 / 10, c4 = 4.0 / 5, c5 = 8.0 / 9;
  static const double a21 = 1.0 / 5;
  static const double a31 = 3.0 / 40, a32 = 9.0 / 40;
  static const double a41 = 44.0 / 45, a42 = -56.0 / 15, a43 = 32.0 / 9;
  static const double a51 = 19372.0 / 6561, a52 = -25360.0 / 2187,
                      a53 = 64448.0 / 6561, a54 = -212.0 / 729;
  static const double a61 = 9017.0 / 3168, a62 = -355.0 / 33,
                      a63 = 46732.0 / 5247, a64 = 49.0 / 176,
                      a65 = -5103.0 / 18656;
  static const double b1 = 35.0 / 384, b3 = 500.0 / 1113, b4 = 125.0 / 192,
                      b5 = -2187.0 / 6784, b6 = 11.0 / 84;
  static const double e1 = 71.0 / 57600, e3 = -71.0 / 16695, e4 = 71.0 / 1920,
                      e5 = -17253.0 / 339200, e6 = 22.0 / 525, e7 = -1.0 / 40;
  double k1[2], k2[2], k3[2], k4[2], k5[2], k6[2], k7[2], yt[2], y5[2];
  mode_rhs(p, st.t, st.y, k1);
  for (int i = 0; i < 2; ++i) yt[i] = st.y[i] + h * a21 * k1[i];
  mode_rhs(p, st.t + c2 * h, yt, k2);
  for (int i = 0; i < 2; ++i) yt[i] = st.y[i] + h * (a31 * k1[i] + a32 * k2[i]);
  mode_rhs(p, st.t + c3 * h, yt, k3);
  for (int i = 0; i < 2; ++i)
    yt[i] = st.y[i] + h * (a41 * k1[i] + a42 * k2[i] + a43 * k3[i]);
  mode_rhs(p, st.t + c4 * h, yt, k4);
  for (int i = 0; i < 2; ++i)
    yt[i] = st.y[i] + h * (a51 * k1[i] + a52 * k2[i] + a53 * k3[i] + a54 * k4[i]);
  mode_rhs(p, st.t + c5 * h, yt, k5);
  for (int i = 0; i < 2; ++i)
    yt[i] = st.y[i] + h * (a61 * k1[i] + a62 * k2[i] + a63 * k3[i] +
                           a64 * k4[i] + a65 * k5[i]);
  mode_rhs(p, st.t + h, yt, k6);
  for (int i = 0; i < 2; ++i)
    y5[i] = st.y[i] + h * (b1 * k1[i] + b3 * k3[i] + b4 * k4[i] + b5 * k5[i] +
                           b6 * k6[i]);
  mode_rhs(p, st.t + h, y5, k7);
  double errnorm = 0.0;
  for (int i = 0; i < 2; ++i) {
    const double err = h * (e1 * k1[i] + e3 * k3[i] + e4 * k4[i] + e5 * k5[i] +
                            e6 * k6[i] + e7 * k7[i]);
    const double sc = rtol * std::max(std::abs(st.y[i]), std::abs(y5[i])) + 1e-300;
    errnorm = std::max(errnorm, std::abs(err) / sc);
  }
  ++steps;
  if (errnorm <= 1.0) {
    st.t += h;
    st.y[0] = y5[0];
    st.y[1] = y5[1];
    h *= std::min(4.0, 0.9 * std::pow(std::max(errnorm, 1e-10), -0.2));
    return true;
  }
  h *= std::max(0.1, 0.9 * std::pow(errnorm, -0.2));
  return false;
}

// Integrate inward from t_start, sampling at the problem's grid nodes.
// The seed is the decaying asymptote e^{-xi(t - t_start)} (t/t_start)^theta
// (1 + e1/t)/(1 + e1/t_start), kept O(1) by the shift.
void integrate_inward(const ModeProblem& p, double t_start,
                      std::vector<double>& t_nodes, std::vector<double>& psi,
                      std::vector<double>& dpsi, int& steps) {
  const double xi = p.xi, L = p.lambda;
  const double theta = L + 0.5 * (p.s - 1);
  const double e1 = -theta * (theta - 2.0 * L) / (2.0 * xi);
  RKState st;
  st.t = t_start;
  const double norm0 = 1.0 + e1 / t_start;
  st.y[0] = 1.0;
  // derivative of ln(seed): -xi + theta/t - (e1/t^2)/(1+e1/t)
  st.y[1] = -xi + theta / t_start - (e1 / (t_start * t_start)) / norm0;
  double h = -t_start / 512.0;
  psi.assign(t_nodes.size(), 0.0);
  dpsi.assign(t_nodes.size(), 0.0);
  int next = static_cast<int>(t_nodes.size()) - 1;
  while (next >= 0 && t_nodes[next] >= t_start) {
    // nodes beyond the start coincide with the asymptotic seed region
    const double t = t_nodes[next];
    const double v = std::exp(-xi * (t - t_start)) * std::pow(t / t_start, theta) *
                     (1.0 + e1 / t) / norm0;
    psi[next] = v;
    dpsi[next] = v * (-xi + theta / t - (e1 / (t * t)) / (1.0 + e1 / t));
    --next;
  }
  const int max_steps = 4000000;
  while (next >= 0) {
    const double target = t_nodes[next];
    if (st.t <= target * (1.0 + 1e-12)) {
      psi[next] = st.y[0];
      dpsi[next] = st.y[1];
      --next;
      continue;
    }
    if (st.t + h < target) h = target - st.t;
    dp45_step(p, st, h, 1e-12, steps);
    if (steps > max_steps)
      throw PrecisionError("solve_mode_ode: step budget exhausted");
  }
}

}  // namespace

ModeSolution solve_mode_ode(const ModeProblem& p) {
  p.validate();
  ModeSolution sol;
  sol.t.resize(p.M);
  for (int i = 1; i <= p.M; ++i) sol.t[i - 1] = p.node(i);
  int steps = 0;
  integrate_inward(p, p.t_max(), sol.t, sol.psi, sol.dpsi, steps);

  // growing-mode contamination check: a longer runway must give the same
  // profile after normalization
  {
    std::vector<double> probe_t, probe_a, probe_b, dummy;
    for (double t : {0.2 / p.xi, 0.5 / p.xi, 1.0 / p.xi}) probe_t.push_back(t);
    int s2 = 0;
    std::vector<double> pa, da, pb, db;
    std::vector<double> tt = probe_t;
    integrate_inward(p, p.t_max(), tt, pa, da, s2);
    integrate_inward(p, 1.5 * p.t_max(), tt, pb, db, s2);
    const double ra = pa[1] / pa[0], rb = pb[1] / pb[0];
    const double drift = std::abs(ra - rb) / std::abs(ra);
    if (drift > 1e-6) {
      std::ostringstream os;
      os << "solve_mode_ode: growing-mode contamination, profile drift "
         << drift << " between runways t_max and 1.5 t_max";
      throw ContaminationError(os.str());
    }
  }

  const SmallTFit fit = fit_small_t(p, sol.t, sol.psi, 2e-3 / p.xi);
  const double a0 = fit.a0;
  for (int i = 0; i < p.M; ++i) {
    sol.psi[i] /= a0;
    sol.dpsi[i] /= a0;
  }
  sol.beta = fit.beta;
  sol.c2 = fit.c2;
  sol.fit_residual = fit.residual / std::abs(a0);
  // regular part at the first node must sit at 1 after normalization
  const double t1 = sol.t[0];
  sol.norm_defect = std::abs(sol.psi[0] - fit.beta * t1 -
                             fit.c2 * std::pow(t1, 2.0 * p.lambda) - 1.0);
  sol.rk_steps = steps;
  return sol;
}

double dtn_extract(const ModeProblem& p, const ModeSolution& sol) {
  const double L = p.lambda;
  if (sol.t.front() > 1e-4)
    throw ParameterError("dtn_extract: profile not resolved near 0");
  // node ladder for the weighted-derivative limit
  std::vector<double> ts, ws;
  for (size_t i = 0; i < sol.t.size(); ++i) {
    const double t = sol.t[i];
    if (t < 4e-6 / p.xi || t > 4e-4 / p.xi) continue;
    double d = sol.dpsi[i];
    if (L > 0.5) d -= sol.beta;  // remove the linear term first
    ts.push_back(t);
    ws.push_back(std::pow(t, 1.0 - 2.0 * L) * d);
  }
  if (ts.size() < 8)
    throw PrecisionError("dtn_extract: too few nodes in the extrapolation window");
  // corrections: t^(1-2L), t, t^(2-2L) below 1/2; t^(2-2L), t, t^(3-2L) above
  std::vector<double> exps;
  if (L < 0.5)
    exps = {1.0 - 2.0 * L, 1.0, 2.0 - 2.0 * L};
  else
    exps = {2.0 - 2.0 * L, 1.0, 3.0 - 2.0 * L};
  const int rows = static_cast<int>(ts.size());
  const int cols = 1 + static_cast<int>(exps.size());
  std::vector<double> A(static_cast<size_t>(rows) * cols);
  for (int i = 0; i < rows; ++i) A[i] = 1.0;
  for (size_t j = 0; j < exps.size(); ++j)
    for (int i = 0; i < rows; ++i)
      A[(j + 1) * rows + i] = std::pow(ts[i], exps[j]);
  double resid = 0.0;
  const std::vector<double> c =
      linalg::lstsq(std::move(A), rows, cols, ws, 1e12, &resid);
  const double scale = 2.0 * L * std::abs(sol.c2) + 1e-30;
  if (resid / std::sqrt(static_cast<double>(rows)) > 1e-3 * scale +
      1e-6 * dtn_target_scale(p)) {
    std::ostringstream os;
    os << "dtn_extract: extrapolation did not settle; sequence";
    for (int i = 0; i < rows; i += rows / 6 + 1) os << " " << ws[i];
    throw PrecisionError(os.str());
  }
  return d_lambda(L) / (2.0 * L) * c[0];
}

double higher_derivative_dtn(const ModeProblem& p, const ModeSolution& sol) {
  const double L = p.lambda;
  const int k = static_cast<int>(std::floor(2.0 * L));
  if (k == 0) return dtn_extract(p, sol);
  // k = 1: second derivative by nonuniform 3-point stencils
  std::vector<double> ts, ws;
  for (size_t i = 1; i + 1 < sol.t.size(); ++i) {
    const double t = sol.t[i];
    if (t < 2e-4 / p.xi || t > 2e-2 / p.xi) continue;
    const double h1 = sol.t[i] - sol.t[i - 1];
    const double h2 = sol.t[i + 1] - sol.t[i];
    const double d2 = 2.0 * (h2 * sol.psi[i - 1] - (h1 + h2) * sol.psi[i] +
                             h1 * sol.psi[i + 1]) /
                      (h1 * h2 * (h1 + h2));
    ts.push_back(t);
    ws.push_back(std::pow(t, 2.0 + k - 2.0 * L - 1.0) * d2);
  }
  if (ts.size() < 8)
    throw PrecisionError("higher_derivative_dtn: too few stencil nodes");
  const std::vector<double> exps = {2.0 - 2.0 * L, 1.0};
  const int rows = static_cast<int>(ts.size());
  const int cols = 1 + static_cast<int>(exps.size());
  std::vector<double> A(static_cast<size_t>(rows) * cols);
  for (int i = 0; i < rows; ++i) A[i] = 1.0;
  for (size_t j = 0; j < exps.size(); ++j)
    for (int i = 0; i < rows; ++i)
      A[(j + 1) * rows + i] = std::pow(ts[i], exps[j]);
  const std::vector<double> c = linalg::lstsq(std::move(A), rows, cols, ws);
  return d_lambda(L) / (2.0 * L * (2.0 * L - 1.0)) * c[0];
}

namespace {

// trapezoid over the stored graded grid
double trapezoid(const std::vector<double>& t, const std::vector<double>& g) {
  double acc = 0.0;
  for (size_t i = 1; i < t.size(); ++i)
    acc += 0.5 * (g[i] + g[i - 1]) * (t[i] - t[i - 1]);
  return acc;
}

}  // namespace

EnergyPair mode_energy(const ModeProblem& p, const ModeSolution& sol) {
  const double L = p.lambda, xi = p.xi;
  if (!(L > 0.0 && L < 0.5))
    throw ParameterError("mode_energy: requires lambda in (0, 1/2)");
  const int sigma = -p.s;
  const size_t M = sol.t.size();
  std::vector<double> g(M);
  for (size_t i = 0; i < M; ++i) {
    const double t = sol.t[i];
    const double w = std::pow(t, 1.0 - 2.0 * L);
    g[i] = w * (sol.dpsi[i] * sol.dpsi[i] + xi * xi * sol.psi[i] * sol.psi[i] +
                sigma * xi * sol.psi[i] * sol.psi[i] / t);
  }
  double lhs = trapezoid(sol.t, g);

  // closed-form head on [0, t_1] from Psi ~ 1 + beta t + c2 t^(2L)
  {
    const double t1 = sol.t.front();
    const double b = sol.beta, c2 = sol.c2;
    const double d1 = 2.0 - 2.0 * L, d2 = 2.0 * L, d0 = 1.0 - 2.0 * L;
    double head = 0.0;
    // t^(1-2L) psi'^2: beta^2 t^(1-2L) + 4L beta c2 + 4L^2 c2^2 t^(2L-1)
    head += b * b * std::pow(t1, d1) / d1;
    head += 4.0 * L * b * c2 * t1;
    head += 2.0 * L * c2 * c2 * std::pow(t1, d2);
    // xi^2 t^(1-2L) psi^2: xi^2 (t^(1-2L) + 2 b t^(2-2L) + 2 c2 t)
    head += xi * xi * (std::pow(t1, d1) / d1 + 2.0 * b * std::pow(t1, d1 + 1.0) / (d1 + 1.0) +
                       2.0 * c2 * t1 * t1 / 2.0);
    // sigma xi t^(-2L) psi^2: sigma xi (t^(1-2L)/(1-2L) + 2 b t^(2-2L)/(2-2L) + 2 c2 t)
    head += sigma * xi * (std::pow(t1, d0) / d0 + 2.0 * b * std::pow(t1, d1) / d1 +
                          2.0 * c2 * t1);
    lhs += head;
  }

  // exponential tail beyond t_max: integrand ~ g(T) e^{-2 xi (t-T)}
  lhs += g.back() / (2.0 * xi);

  EnergyPair out;
  out.lhs = lhs;
  out.rhs = (2.0 * L / d_lambda(L)) * sigma * std::pow(xi, 2.0 * L);
  return out;
}

double sobolev_gap(const ModeProblem& p, const ModeSolution& sol,
                   const Perturbation& eta) {
  const double L = p.lambda, xi = p.xi;
  if (!(L > 0.0 && L < 0.5))
    throw ParameterError("sobolev_gap: requires lambda in (0, 1/2)");
  if (eta.vals.size() != sol.t.size() || eta.dvals.size() != sol.t.size())
    throw SizeError("sobolev_gap: perturbation not sampled on the mode grid");
  // zero-trace precondition: nothing may live below the head cutoff
  double scale = 0.0;
  for (double v : eta.vals) scale = std::max(scale, std::abs(v));
  const double head_cut = 1e-2 / xi;
  for (size_t i = 0; i < sol.t.size(); ++i)
    if (sol.t[i] < head_cut && std::abs(eta.vals[i]) > 1e-12 * (scale + 1.0)) {
      std::ostringstream os;
      os << "sobolev_gap: perturbation has nonzero trace near t = " << sol.t[i];
      throw ParameterError(os.str());
    }
  const int sigma = -p.s;
  const size_t M = sol.t.size();
  std::vector<double> g(M);
  for (size_t i = 0; i < M; ++i) {
    const double t = sol.t[i];
    const double v = sol.psi[i] + eta.vals[i];
    const double dv = sol.dpsi[i] + eta.dvals[i];
    g[i] = std::pow(t, 1.0 - 2.0 * L) *
           (dv * dv + xi * xi * v * v + sigma * xi * v * v / t);
  }
  double lhs = trapezoid(sol.t, g);
  {
    const double t1 = sol.t.front();
    const double b = sol.beta, c2 = sol.c2;
    const double d1 = 2.0 - 2.0 * L, d2 = 2.0 * L, d0 = 1.0 - 2.0 * L;
    double head = 0.0;
    head += b * b * std::pow(t1, d1) / d1;
    head += 4.0 * L * b * c2 * t1;
    head += 2.0 * L * c2 * c2 * std::pow(t1, d2);
    head += xi * xi * (std::pow(t1, d1) / d1 +
                       2.0 * b * std::pow(t1, d1 + 1.0) / (d1 + 1.0) + c2 * t1 * t1);
    head += sigma * xi * (std::pow(t1, d0) / d0 + 2.0 * b * std::pow(t1, d1) / d1 +
                          2.0 * c2 * t1);
    lhs += head;
  }
  lhs += g.back() / (2.0 * xi);
  const double rhs = (2.0 * L / d_lambda(L)) * sigma * std::pow(xi, 2.0 * L);
  return lhs - rhs;
}

namespace {

ModeReportRow run_one(const ModeProblem& p) {
  ModeReportRow row;
  row.p = p;
  const ModeSolution num = solve_mode_ode(p);
  const ModeSolution cf = closed_form_mode(p);
  row.dtn_numeric = dtn_extract(p, num);
  row.dtn_closed = d_lambda(p.lambda) * cf.c2;
  const double target = p.s * std::pow(p.xi, 2.0 * p.lambda);
  row.rel_err = std::abs(row.dtn_numeric - target) / std::abs(target);
  if (p.lambda < 0.5) {
    const EnergyPair e = mode_energy(p, num);
    row.energy_lhs = e.lhs;
    row.energy_rhs = e.rhs;
  } else {
    row.energy_lhs = std::numeric_limits<double>::quiet_NaN();
    row.energy_rhs = std::numeric_limits<double>::quiet_NaN();
  }
  return row;
}

}  // namespace

std::vector<ModeReportRow> run_mode_batch(const std::vector<ModeProblem>& rows) {
  std::vector<ModeReportRow> out(rows.size());
  std::vector<std::string> errors(rows.size());
#pragma omp parallel for schedule(dynamic)
  for (long i = 0; i < static_cast<long>(rows.size()); ++i) {
    try {
      out[i] = run_one(rows[i]);
    } catch (const std::exception& e) {
      errors[i] = e.what();
    }
  }
  for (size_t i = 0; i < rows.size(); ++i)
    if (!errors[i].empty())
      throw Error("run_mode_batch: row " + std::to_string(i) + ": " + errors[i]);
  return out;
}

namespace reference {
std::vector<ModeReportRow> run_mode_batch(const std::vector<ModeProblem>& rows) {
  std::vector<ModeReportRow> out;
  out.reserve(rows.size());
  for (const ModeProblem& p : rows) out.push_back(run_one(p));
  return out;
}
}  // namespace reference

std::vector<ModeProblem> load_mode_batch_csv(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw Error("load_mode_batch_csv: cannot open " + path);
  std::string line;
  if (!std::getline(in, line) || line.rfind("n,lambda,xi,s", 0) != 0)
    throw Error("load_mode_batch_csv: expected header 'n,lambda,xi,s'");
  std::vector<ModeProblem> rows;
  while (std::getline(in, line)) {
    if (line.empty()) continue;
    std::istringstream ss(line);
    std::string f;
    ModeProblem p;
    std::getline(ss, f, ',');
    p.n = std::stoi(f);
    std::getline(ss, f, ',');
    p.lambda = std::stod(f);
    std::getline(ss, f, ',');
    p.xi = std::stod(f);
    std::getline(ss, f, ',');
    p.s = std::stoi(f);
    p.validate();
    rows.push_back(p);
  }
  return rows;
}

void save_mode_batch_csv(const std::vector<ModeReportRow>& rows,
                         const std::string& path) {
  std::ofstream out(path);
  if (!out) throw Error("save_mode_batch_csv: cannot open " + path);
  out << "n,lambda,xi,s,dtn_numeric,dtn_closed,rel_err,energy_lhs,energy_rhs\n";
  char buf[256];
  for (const ModeReportRow& r : rows) {
    std::snprintf(buf, sizeof buf,
                  "%d,%.17g,%.17g,%d,%.17g,%.17g,%.17g,%.17g,%.17g\n", r.p.n,
                  r.p.lambda, r.p.xi, r.p.s, r.dtn_numeric, r.dtn_closed,
                  r.rel_err, r.energy_lhs, r.energy_rhs);
    out << buf;
  }
}

}  // namespace frdirac::extension
