#include "frdirac/clifford.hpp"

#include <cmath>
#include <sstream>

#include "frdirac/errors.hpp"

namespace frdirac {

CMatrix CMatrix::identity(int n) {
  CMatrix m(n);
  for (int i = 0; i < n; ++i) m(i, i) = 1.0;
  return m;
}

CMatrix CMatrix::operator*(const CMatrix& o) const {
  CMatrix r(n);
  for (int i = 0; i < n; ++i)
    for (int k = 0; k < n; ++k) {
      const cplx v = (*this)(i, k);
      if (v == cplx{}) continue;
      for (int j = 0; j < n; ++j) r(i, j) += v * o(k, j);
    }
  return r;
}

CMatrix CMatrix::operator+(const CMatrix& o) const {
  CMatrix r(n);
  for (size_t i = 0; i < a.size(); ++i) r.a[i] = a[i] + o.a[i];
  return r;
}

CMatrix CMatrix::operator-(const CMatrix& o) const {
  CMatrix r(n);
  for (size_t i = 0; i < a.size(); ++i) r.a[i] = a[i] - o.a[i];
  return r;
}

CMatrix CMatrix::operator*(cplx s) const {
  CMatrix r(n);
  for (size_t i = 0; i < a.size(); ++i) r.a[i] = a[i] * s;
  return r;
}

CMatrix CMatrix::adjoint() const {
  CMatrix r(n);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) r(i, j) = std::conj((*this)(j, i));
  return r;
}

std::vector<cplx> CMatrix::apply(const std::vector<cplx>& v) const {
  std::vector<cplx> r(n);
  for (int i = 0; i < n; ++i) {
    cplx s{};
    for (int j = 0; j < n; ++j) s += (*this)(i, j) * v[j];
    r[i] = s;
  }
  return r;
}

double CMatrix::norm() const {
  double s = 0.0;
  for (const cplx& v : a) s += std::norm(v);
  return std::sqrt(s);
}

namespace {

CMatrix kron(const CMatrix& a, const CMatrix& b) {
  CMatrix r(a.n * b.n);
  for (int i = 0; i < a.n; ++i)
    for (int j = 0; j < a.n; ++j)
      for (int k = 0; k < b.n; ++k)
        for (int l = 0; l < b.n; ++l)
          r(i * b.n + k, j * b.n + l) = a(i, j) * b(k, l);
  return r;
}

CMatrix pauli(char which) {
  CMatrix m(2);
  switch (which) {
    case 'x': m(0, 1) = 1.0; m(1, 0) = 1.0; break;
    case 'y': m(0, 1) = cplx(0, -1); m(1, 0) = cplx(0, 1); break;
    case 'z': m(0, 0) = 1.0; m(1, 1) = -1.0; break;
    default:  m(0, 0) = 1.0; m(1, 1) = 1.0; break;
  }
  return m;
}

}  // namespace

CliffordRep build_clifford(int n) {
  if (n < 1 || n > 8) {
    std::ostringstream os;
    os << "build_clifford: n must be in [1, 8], got " << n;
    throw SizeError(os.str());
  }
  const int d = n + 1;               // number of generators
  const int k = (d + 1) / 2;         // qubit count
  CliffordRep rep;
  rep.n = n;
  rep.N = 1 << k;
  rep.nu_index = n + 1;
  // Hermitian chain generators Z..Z P I..I with P in {X, Y}; gamma = i * H
  for (int g = 0; g < d; ++g) {
    const int slot = g / 2;
    const char p = (g % 2 == 0) ? 'x' : 'y';
    CMatrix m(1);
    m(0, 0) = 1.0;
    for (int q = 0; q < k; ++q) {
      char which = q < slot ? 'z' : (q == slot ? p : 'i');
      m = kron(m, pauli(which));
    }
    rep.gammas.push_back(m * cplx(0, 1));
  }
  return rep;
}

CMatrix boundary_mult(const CliffordRep& rep, int j) {
  if (j < 1 || j > rep.n) {
    std::ostringstream os;
    os << "boundary_mult: index " << j << " outside 1.." << rep.n;
    throw SizeError(os.str());
  }
  return rep.gamma(j) * rep.nu();
}

CMatrix nu_dirac_symbol(const CliffordRep& rep, const std::vector<double>& xi) {
  if (static_cast<int>(xi.size()) != rep.n)
    throw SizeError("nu_dirac_symbol: xi has wrong dimension");
  for (double v : xi)
    if (!std::isfinite(v)) throw ParameterError("nu_dirac_symbol: xi not finite");
  CMatrix m(rep.N);
  for (int j = 0; j < rep.n; ++j) {
    if (xi[j] == 0.0) continue;
    const CMatrix& g = rep.gammas[j];
    for (size_t i = 0; i < m.a.size(); ++i) m.a[i] += cplx(0, 1) * xi[j] * g.a[i];
  }
  return m;
}

std::pair<CMatrix, CMatrix> projectors_pm(const CliffordRep& rep) {
  const CMatrix id = CMatrix::identity(rep.N);
  const CMatrix inu = rep.nu() * cplx(0, 1);
  return {(id + inu) * cplx(0.5), (id - inu) * cplx(0.5)};
}

}  // namespace frdirac
