#pragma once

#include <complex>
#include <string>
#include <vector>

namespace frdirac::sphere {

using cplx = std::complex<double>;

// Coefficients over the nu*D eigenbasis on S^n: ladder index k = 1..K,
// sign branch s = +-.  Everything acting on it is diagonal.
struct SphereSpectrum {
  int n = 0;
  int K = 0;
  std::vector<cplx> plus;   // c_{k,+}, k = 1..K
  std::vector<cplx> minus;  // c_{k,-}

  SphereSpectrum() = default;
  SphereSpectrum(int n_, int K_);
};

// Eigenvalue magnitude ladder mu_k = n/2 + k - 1, k >= 1.
double mu(int n, int k);

// s * Gamma(mu+1/2+lambda) / Gamma(mu+1/2-lambda), evaluated in log space.
double sphere_multiplier(double lambda, double mu, int s);

SphereSpectrum apply_fractional_dirac_sphere(const SphereSpectrum& spec,
                                             double lambda);

// Relative gap of the one-step recursion
//   F(lambda+1, mu) = (mu^2 - (lambda+1/2)^2) F(lambda, mu).
double recursion_gap(double lambda, double mu);

// Spectral Q operator: c_{k,s} -> -s F(n/2, mu_k)
//   [digamma(mu_k+1/2+n/2) + digamma(mu_k+1/2-n/2)] c_{k,s},
// the analytic lambda-derivative of the multiplier at lambda = n/2.
SphereSpectrum q_operator_sphere(const SphereSpectrum& spec, int n);

// Hypergeometric radial profiles of the mode equation on the AdS-type
// cylinder; kind 'f' pairs with the + branch, 'g' with the - branch.
struct RadialProfile {
  int n = 0, k = 0;
  double lambda = 0.0;
  char kind = 'f';
  std::vector<double> y;
  std::vector<double> value;
};

RadialProfile radial_profile(int n, int k, double lambda, char kind,
                             const std::vector<double>& y_grid);

// Independent route to the multiplier: sample f_k near the conformal
// boundary (r = 2 e^{-y} -> 0), fit the two-exponent expansion
// c1 r^(n/2-L) + c2 r^(n/2+L) (with the known integer-shifted correction
// powers of each series), return d_lambda * c2/c1.
double scattering_from_profile(int n, int k, double lambda,
                               double r_lo = 1e-4, double r_hi = 3e-2,
                               int npts = 48);

// CSV round trip, columns k,s,re,im.
void save_spectrum_csv(const SphereSpectrum& spec, const std::string& path);
SphereSpectrum load_spectrum_csv(const std::string& path, int n);

}  // namespace frdirac::sphere
