#include "frdirac/flat.hpp"

#include <array>
#include <cmath>

#include "frdirac/errors.hpp"
#include "frdirac/fft.hpp"

namespace frdirac::flat {

namespace {

// Apply w * (i sum_j xi_j gamma_j), optionally followed by -nu, to every
// mode of a transformed field.
void apply_symbol(std::vector<cplx>& hat, const TorusGrid& g,
                  const CliffordRep& rep, double lambda, bool geometric) {
  const int N = rep.N;
  const long vol = g.volume();
  // component actions: row r of gamma_j has at most one nonzero in this
  // construction, but stay general and precompute dense copies
  const CMatrix* gam = rep.gammas.data();
  const CMatrix nu = rep.nu();
#pragma omp parallel
  {
    std::array<int, 4> idx{};
    std::vector<cplx> tmp(N), tmp2(N);
#pragma omp for schedule(static)
    for (long s = 0; s < vol; ++s) {
      g.site_coords(s, idx);
      double q2 = 0.0;
      double xi[4] = {0, 0, 0, 0};
      for (int a = 0; a < g.n; ++a) {
        xi[a] = g.freq(idx[a]);
        q2 += xi[a] * xi[a];
      }
      cplx* v = hat.data() + s * N;
      if (q2 == 0.0) {
        for (int c = 0; c < N; ++c) v[c] = 0.0;
        continue;
      }
      const double w = std::pow(q2, lambda - 0.5);  // |xi|^(2L-1)
      for (int c = 0; c < N; ++c) tmp[c] = 0.0;
      for (int a = 0; a < g.n; ++a) {
        if (xi[a] == 0.0) continue;
        const CMatrix& G = gam[a];
        for (int r = 0; r < N; ++r) {
          cplx acc{};
          for (int c = 0; c < N; ++c) acc += G(r, c) * v[c];
          tmp[r] += xi[a] * acc;
        }
      }
      const cplx iw = cplx(0, 1) * w;
      if (!geometric) {
        for (int c = 0; c < N; ++c) v[c] = iw * tmp[c];
      } else {
        for (int r = 0; r < N; ++r) {
          cplx acc{};
          for (int c = 0; c < N; ++c) acc += nu(r, c) * tmp[c];
          tmp2[r] = acc;
        }
        for (int c = 0; c < N; ++c) v[c] = -iw * tmp2[c];
      }
    }
  }
}

SpinorField apply_multiplier(const SpinorField& field, double lambda,
                             bool geometric) {
  if (!(lambda >= 0.0))
    throw ParameterError("fractional_dirac_flat: requires lambda >= 0");
  field.check_finite();
  SpinorField out = field;
  fft::transform_field(out.values, out.grid.n, out.grid.m, out.ncomp(), -1);
  apply_symbol(out.values, out.grid, *out.rep, lambda, geometric);
  fft::transform_field(out.values, out.grid.n, out.grid.m, out.ncomp(), +1);
  return out;
}

}  // namespace

SpinorField fractional_dirac_flat(const SpinorField& field, double lambda) {
  return apply_multiplier(field, lambda, false);
}

SpinorField geometric_fractional_dirac(const SpinorField& field, double lambda) {
  return apply_multiplier(field, lambda, true);
}

SpinorField bubble(const TorusGrid& grid, double lambda,
                   const std::vector<cplx>& phi0,
                   std::shared_ptr<const CliffordRep> rep) {
  if (!(lambda > 0.0) || !(lambda < 0.5 * grid.n))
    throw ParameterError("bubble: requires 0 < lambda < n/2");
  const int N = rep->N;
  if (static_cast<int>(phi0.size()) != N)
    throw SizeError("bubble: phi0 has wrong dimension");
  std::vector<CMatrix> eb;
  for (int j = 1; j <= grid.n; ++j) eb.push_back(boundary_mult(*rep, j));
  std::vector<std::vector<cplx>> ephi;
  for (const CMatrix& e : eb) ephi.push_back(e.apply(phi0));
  SpinorField out(grid, rep);
  const long vol = grid.volume();
  const double expo = 0.5 * (grid.n + 1 - 2.0 * lambda);
#pragma omp parallel
  {
    std::array<int, 4> idx{};
#pragma omp for schedule(static)
    for (long s = 0; s < vol; ++s) {
      grid.site_coords(s, idx);
      double r2 = 0.0;
      double x[4] = {0, 0, 0, 0};
      for (int a = 0; a < grid.n; ++a) {
        x[a] = grid.coord(idx[a]);
        r2 += x[a] * x[a];
      }
      const double f = 2.0 / (1.0 + r2);
      const double pre = std::pow(f, expo);
      cplx* v = out.site(s);
      for (int c = 0; c < N; ++c) {
        cplx acc = phi0[c];
        for (int a = 0; a < grid.n; ++a) acc -= x[a] * ephi[a][c];
        v[c] = pre * acc;
      }
    }
  }
  return out;
}

double yamabe_residual(const SpinorField& psi, double lambda, double mu) {
  if (!std::isfinite(mu)) throw ParameterError("yamabe_residual: mu not finite");
  const SpinorField dpsi = geometric_fractional_dirac(psi, lambda);
  const int N = psi.ncomp();
  const long vol = psi.grid.volume();
  const double q = 4.0 * lambda / (psi.grid.n - 2.0 * lambda);
  double num = 0.0, den = 0.0;
  // serial accumulation keeps reports byte-deterministic
  for (long s = 0; s < vol; ++s) {
    const cplx* p = psi.site(s);
    const cplx* d = dpsi.site(s);
    double a2 = 0.0;
    for (int c = 0; c < N; ++c) a2 += std::norm(p[c]);
    const double amp = a2 > 0.0 ? std::pow(a2, 0.5 * q) : 0.0;
    for (int c = 0; c < N; ++c) {
      num += std::norm(d[c] - mu * amp * p[c]);
      den += std::norm(d[c]);
    }
  }
  if (den == 0.0) throw DegenerateError("yamabe_residual: operator output is zero");
  return std::sqrt(num / den);
}

namespace reference {

SpinorField fractional_dirac_flat(const SpinorField& field, double lambda) {
  SpinorField out = field;
  fft::reference::transform_field(out.values, out.grid.n, out.grid.m,
                                  out.ncomp(), -1);
  // serial symbol application
  const TorusGrid& g = out.grid;
  const CliffordRep& rep = *out.rep;
  const int N = rep.N;
  std::array<int, 4> idx{};
  std::vector<cplx> tmp(N);
  for (long s = 0; s < g.volume(); ++s) {
    g.site_coords(s, idx);
    double q2 = 0.0;
    double xi[4] = {0, 0, 0, 0};
    for (int a = 0; a < g.n; ++a) {
      xi[a] = g.freq(idx[a]);
      q2 += xi[a] * xi[a];
    }
    cplx* v = out.values.data() + s * N;
    if (q2 == 0.0) {
      for (int c = 0; c < N; ++c) v[c] = 0.0;
      continue;
    }
    const double w = std::pow(q2, lambda - 0.5);
    for (int c = 0; c < N; ++c) tmp[c] = 0.0;
    for (int a = 0; a < g.n; ++a) {
      const CMatrix& G = rep.gammas[a];
      for (int r = 0; r < N; ++r) {
        cplx acc{};
        for (int c = 0; c < N; ++c) acc += G(r, c) * v[c];
        tmp[r] += xi[a] * acc;
      }
    }
    for (int c = 0; c < N; ++c) v[c] = cplx(0, 1) * w * tmp[c];
  }
  fft::reference::transform_field(out.values, out.grid.n, out.grid.m,
                                  out.ncomp(), +1);
  return out;
}

}  // namespace reference

}  // namespace frdirac::flat
