#pragma once

#include <complex>
#include <vector>

namespace frdirac {

using cplx = std::complex<double>;

// Small dense complex matrix, row-major.  Just enough arithmetic for the
// gamma-matrix algebra; nothing here is performance critical.
struct CMatrix {
  int n = 0;
  std::vector<cplx> a;

  CMatrix() = default;
  explicit CMatrix(int n_) : n(n_), a(static_cast<size_t>(n_) * n_) {}

  cplx& operator()(int i, int j) { return a[static_cast<size_t>(i) * n + j]; }
  const cplx& operator()(int i, int j) const {
    return a[static_cast<size_t>(i) * n + j];
  }

  static CMatrix identity(int n);
  CMatrix operator*(const CMatrix& o) const;
  CMatrix operator+(const CMatrix& o) const;
  CMatrix operator-(const CMatrix& o) const;
  CMatrix operator*(cplx s) const;
  CMatrix adjoint() const;
  std::vector<cplx> apply(const std::vector<cplx>& v) const;
  double norm() const;  // Frobenius
};

// Gamma-matrix realization of the ambient Clifford algebra: n+1
// skew-Hermitian generators with gamma_i gamma_j + gamma_j gamma_i =
// -2 delta_ij, acting on C^N, N = 2^ceil((n+1)/2).  The last generator is
// the normal direction nu.
struct CliffordRep {
  int n = 0;         // boundary dimension
  int N = 0;         // spinor-space dimension
  int nu_index = 0;  // 1-based index of the normal generator (= n+1)
  std::vector<CMatrix> gammas;

  const CMatrix& gamma(int i) const { return gammas[static_cast<size_t>(i - 1)]; }
  const CMatrix& nu() const { return gammas.back(); }
};

// Deterministic tensor-product construction (X/Y/Z chains), 1 <= n <= 8.
CliffordRep build_clifford(int n);

// Boundary Clifford action e_j := gamma_j gamma_{n+1}, 1 <= j <= n.
CMatrix boundary_mult(const CliffordRep& rep, int j);

// Hermitian symbol M(xi) = i sum_j xi_j gamma_j of the boundary operator;
// M(xi)^2 = |xi|^2 and M anticommutes with nu.
CMatrix nu_dirac_symbol(const CliffordRep& rep, const std::vector<double>& xi);

// Projectors onto ker(nu +- i): P+ = (I + i nu)/2, P- = (I - i nu)/2.
std::pair<CMatrix, CMatrix> projectors_pm(const CliffordRep& rep);

}  // namespace frdirac
