#include "frdirac/sphere.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <sstream>
#include <tuple>

#include "frdirac/errors.hpp"
#include "frdirac/linalg.hpp"
#include "frdirac/specfun.hpp"

namespace frdirac::sphere {

using specfun::d_lambda;
using specfun::digamma;
using specfun::hyp2f1;
using specfun::lgamma_signed;

SphereSpectrum::SphereSpectrum(int n_, int K_) : n(n_), K(K_) {
  if (K < 1) throw SizeError("SphereSpectrum: K must be >= 1");
  plus.assign(K, cplx{});
  minus.assign(K, cplx{});
}

double mu(int n, int k) {
  if (k < 1) throw SizeError("mu: ladder index k must be >= 1");
  return 0.5 * n + k - 1;
}

namespace {

double gamma_ratio_multiplier(double lambda, double mu_val) {
  const double up = mu_val + 0.5 + lambda;
  const double dn = mu_val + 0.5 - lambda;
  const double rdn = std::round(dn);
  if (rdn <= 0.0 && std::abs(dn - rdn) < 1e-12) {
    std::ostringstream os;
    os << "sphere_multiplier: Gamma pole at mu+1/2-lambda = " << dn;
    throw PoleError(os.str());
  }
  const auto [lu, su] = lgamma_signed(up);
  const auto [ld, sd] = lgamma_signed(dn);
  return su * sd * std::exp(lu - ld);
}

}  // namespace

double sphere_multiplier(double lambda, double mu_val, int s) {
  if (!(lambda > 0.0)) throw ParameterError("sphere_multiplier: lambda must be > 0");
  if (s != 1 && s != -1) throw ParameterError("sphere_multiplier: s must be +-1");
  return s * gamma_ratio_multiplier(lambda, mu_val);
}

SphereSpectrum apply_fractional_dirac_sphere(const SphereSpectrum& spec,
                                             double lambda) {
  SphereSpectrum out = spec;
  // precheck poles so a parallel loop never throws mid-flight
  for (int k = 1; k <= spec.K; ++k) {
    const double dn = mu(spec.n, k) + 0.5 - lambda;
    const double rdn = std::round(dn);
    if (rdn <= 0.0 && std::abs(dn - rdn) < 1e-12) {
      std::ostringstream os;
      os << "apply_fractional_dirac_sphere: pole at mode (k=" << k
         << ", s=+/-), mu+1/2-lambda = " << dn;
      throw PoleError(os.str());
    }
  }
#pragma omp parallel for schedule(static)
  for (int k = 1; k <= spec.K; ++k) {
    const double f = gamma_ratio_multiplier(lambda, mu(spec.n, k));
    out.plus[k - 1] = f * spec.plus[k - 1];
    out.minus[k - 1] = -f * spec.minus[k - 1];
  }
  return out;
}

double recursion_gap(double lambda, double mu_val) {
  const double lhs = gamma_ratio_multiplier(lambda + 1.0, mu_val);
  const double rhs =
      (mu_val * mu_val - (lambda + 0.5) * (lambda + 0.5)) *
      gamma_ratio_multiplier(lambda, mu_val);
  return std::abs(lhs - rhs) / std::abs(lhs);
}

SphereSpectrum q_operator_sphere(const SphereSpectrum& spec, int n) {
  SphereSpectrum out = spec;
#pragma omp parallel for schedule(static)
  for (int k = 1; k <= spec.K; ++k) {
    const double m = mu(n, k);
    // mu + 1/2 - n/2 = k - 1/2 > 0 for k >= 1, so digamma is pole-free
    const double f = gamma_ratio_multiplier(0.5 * n, m);
    const double q = -f * (digamma(m + 0.5 + 0.5 * n) + digamma(m + 0.5 - 0.5 * n));
    out.plus[k - 1] = q * spec.plus[k - 1];
    out.minus[k - 1] = -q * spec.minus[k - 1];
  }
  return out;
}

RadialProfile radial_profile(int n, int k, double lambda, char kind,
                             const std::vector<double>& y_grid) {
  if (kind != 'f' && kind != 'g')
    throw ParameterError("radial_profile: kind must be 'f' or 'g'");
  const double m = mu(n, k);
  RadialProfile out;
  out.n = n;
  out.k = k;
  out.lambda = lambda;
  out.kind = kind;
  out.y = y_grid;
  out.value.resize(y_grid.size());
  const double c3 = kind == 'f' ? m + 0.5 : m + 1.5;
  for (size_t i = 0; i < y_grid.size(); ++i) {
    const double y = y_grid[i];
    if (!(y > 0.0)) throw ParameterError("radial_profile: y must be > 0");
    const double sh = std::sinh(0.5 * y), ch = std::cosh(0.5 * y);
    double F;
    try {
      F = hyp2f1(m + 0.5 - lambda, m + 0.5 + lambda, c3, -sh * sh);
    } catch (const Error& e) {
      std::ostringstream os;
      os << "radial_profile(n=" << n << ", k=" << k << ", lambda=" << lambda
         << ", kind=" << kind << ", y=" << y << "): " << e.what();
      throw PrecisionError(os.str());
    }
    const double pre = kind == 'f' ? std::pow(sh, k - 1) * std::pow(ch, k)
                                   : std::pow(sh, k) * std::pow(ch, k - 1);
    out.value[i] = pre * F;
  }
  return out;
}

double scattering_from_profile(int n, int k, double lambda, double r_lo,
                               double r_hi, int npts) {
  if (!(lambda > 0.0 && lambda < 0.5))
    throw ParameterError("scattering_from_profile: requires lambda in (0, 1/2)");
  if (k > 8) throw SizeError("scattering_from_profile: k too large for the fit");
  if (npts < 2 || !(r_lo > 0.0) || !(r_hi > r_lo))
    throw ConditioningError("scattering_from_profile: degenerate fit window");

  std::vector<double> ys(npts);
  const double step = std::log(r_hi / r_lo) / (npts - 1);
  std::vector<double> rs(npts);
  for (int i = 0; i < npts; ++i) {
    rs[i] = r_lo * std::exp(step * i);
    ys[i] = -std::log(0.5 * rs[i]);
  }
  const RadialProfile prof = radial_profile(n, k, lambda, 'f', ys);

  // each branch of the small-r expansion steps in integer powers of r;
  // the correction columns keep the mu_k-sized subleading terms out of c2
  const double a = 0.5 * n - lambda, b = 0.5 * n + lambda;
  const int na = 6, nb = 5;
  std::vector<double> A(static_cast<size_t>(npts) * (na + nb));
  std::vector<double> rhs(npts);
  for (int i = 0; i < npts; ++i) rhs[i] = prof.value[i];
  for (int j = 0; j < na; ++j)
    for (int i = 0; i < npts; ++i)
      A[static_cast<size_t>(j) * npts + i] = std::pow(rs[i], a + j);
  for (int j = 0; j < nb; ++j)
    for (int i = 0; i < npts; ++i)
      A[static_cast<size_t>(na + j) * npts + i] = std::pow(rs[i], b + j);

  std::vector<double> coef;
  try {
    coef = linalg::lstsq(std::move(A), npts, na + nb, std::move(rhs));
  } catch (const ConditioningError& e) {
    std::ostringstream os;
    os << "scattering_from_profile: fit window [" << r_lo << ", " << r_hi
       << "] with " << npts << " points: " << e.what();
    throw ConditioningError(os.str());
  }
  return d_lambda(lambda) * coef[na] / coef[0];
}

void save_spectrum_csv(const SphereSpectrum& spec, const std::string& path) {
  std::ofstream out(path);
  if (!out) throw Error("save_spectrum_csv: cannot open " + path);
  out << "k,s,re,im\n";
  char buf[96];
  for (int k = 1; k <= spec.K; ++k) {
    std::snprintf(buf, sizeof buf, "%d,+,%.17g,%.17g\n", k,
                  spec.plus[k - 1].real(), spec.plus[k - 1].imag());
    out << buf;
    std::snprintf(buf, sizeof buf, "%d,-,%.17g,%.17g\n", k,
                  spec.minus[k - 1].real(), spec.minus[k - 1].imag());
    out << buf;
  }
}

SphereSpectrum load_spectrum_csv(const std::string& path, int n) {
  std::ifstream in(path);
  if (!in) throw Error("load_spectrum_csv: cannot open " + path);
  std::string line;
  std::getline(in, line);  // header
  int kmax = 0;
  std::vector<std::tuple<int, char, double, double>> rows;
  while (std::getline(in, line)) {
    if (line.empty()) continue;
    std::istringstream ss(line);
    std::string f0, f1, f2, f3;
    std::getline(ss, f0, ',');
    std::getline(ss, f1, ',');
    std::getline(ss, f2, ',');
    std::getline(ss, f3, ',');
    rows.emplace_back(std::stoi(f0), f1.at(0), std::stod(f2), std::stod(f3));
    kmax = std::max(kmax, std::stoi(f0));
  }
  SphereSpectrum spec(n, kmax);
  for (auto& [k, s, re, im] : rows) {
    if (s == '+')
      spec.plus[k - 1] = cplx(re, im);
    else
      spec.minus[k - 1] = cplx(re, im);
  }
  return spec;
}

}  // namespace frdirac::sphere
