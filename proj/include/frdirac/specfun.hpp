#pragma once

#include <utility>

namespace frdirac::specfun {

// Gamma function on the real line, Lanczos approximation with reflection.
// Relative error <= 1e-12 on [-50, 50] away from poles.  Non-positive
// integer arguments throw PoleError.
double gamma(double x);

// log|Gamma(x)| and the sign of Gamma(x).  Safe up to x ~ 170 and beyond
// (no overflow); poles throw.
std::pair<double, int> lgamma_signed(double x);

// Gamma(a)/Gamma(b) evaluated in log space with sign tracking, so that
// arguments up to a few hundred do not overflow.
double gamma_ratio(double a, double b);

double digamma(double x);

// d_lambda = 2^(2L) Gamma(1/2+L)/Gamma(1/2-L), poles at L in 1/2 + N0.
double d_lambda(double lam);

// c_lambda = 2^(2L) Gamma(L)/Gamma(-L), poles at L in N.
double c_lambda(double lam);

// Gauss hypergeometric 2F1(a,b;c;z) for z <= 0.  Direct series for small
// |z| (with the Pfaff z/(z-1) mapping below z = -0.5), the two-term 1/z
// inversion for z <= -0.9 (requires a-b not an integer).
double hyp2f1(double a, double b, double c, double z);

// The 1/z inversion transformation on its own, valid for z < 0 and
// a-b not an integer.  Used as the second evaluation route in tests.
double hyp2f1_inversion(double a, double b, double c, double z);

// Kummer/confluent functions.  M is the regular solution (M(a,b,0) = 1);
// V is the solution with t^(b-1) V -> Gamma(b-1)/Gamma(a) as t -> 0.
// Restricted to the a >= 0, b >= 1 regime; V needs b non-integer.
double kummer_M(double a, double b, double t);
double kummer_V(double a, double b, double t);

}  // namespace frdirac::specfun
