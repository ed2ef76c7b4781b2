#include "frdirac/spinor_field.hpp"

#include <cmath>
#include <cstdint>
#include <cstdio>
#include <fstream>
#include <sstream>

#include "frdirac/errors.hpp"

namespace frdirac {

TorusGrid::TorusGrid(int n_, double L_, int m_) : n(n_), L(L_), m(m_) {
  if (n < 1 || n > 4) throw SizeError("TorusGrid: n must be in [1, 4]");
  if (!(L > 0.0)) throw ParameterError("TorusGrid: L must be positive");
  if (m < 2 || (m & (m - 1)) != 0)
    throw SizeError("TorusGrid: m must be a power of two >= 2");
  long v = 1;
  for (int i = 0; i < n; ++i) v *= m;
  if (v > (1L << 24)) throw SizeError("TorusGrid: total points exceed 2^24");
}

long TorusGrid::volume() const {
  long v = 1;
  for (int i = 0; i < n; ++i) v *= m;
  return v;
}

double TorusGrid::freq(int j) const {
  const int k = j < m / 2 ? j : j - m;
  return 2.0 * M_PI * k / L;
}

void TorusGrid::site_coords(long site, std::array<int, 4>& idx) const {
  for (int a = n - 1; a >= 0; --a) {
    idx[a] = static_cast<int>(site % m);
    site /= m;
  }
}

SpinorField::SpinorField(const TorusGrid& g, std::shared_ptr<const CliffordRep> r)
    : grid(g), rep(std::move(r)), values(g.volume() * rep->N) {}

void SpinorField::check_finite() const {
  for (const cplx& v : values)
    if (!std::isfinite(v.real()) || !std::isfinite(v.imag()))
      throw ParameterError("SpinorField: non-finite entry");
}

void save_field(const SpinorField& f, const std::string& path) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw Error("save_field: cannot open " + path);
  const int32_t n = f.grid.n, m = f.grid.m, N = f.rep->N;
  const double L = f.grid.L;
  out.write(reinterpret_cast<const char*>(&n), sizeof n);
  out.write(reinterpret_cast<const char*>(&L), sizeof L);
  out.write(reinterpret_cast<const char*>(&m), sizeof m);
  out.write(reinterpret_cast<const char*>(&N), sizeof N);
  out.write(reinterpret_cast<const char*>(f.values.data()),
            static_cast<std::streamsize>(f.values.size() * sizeof(cplx)));
}

SpinorField load_field(const std::string& path,
                       std::shared_ptr<const CliffordRep> rep) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error("load_field: cannot open " + path);
  int32_t n = 0, m = 0, N = 0;
  double L = 0.0;
  in.read(reinterpret_cast<char*>(&n), sizeof n);
  in.read(reinterpret_cast<char*>(&L), sizeof L);
  in.read(reinterpret_cast<char*>(&m), sizeof m);
  in.read(reinterpret_cast<char*>(&N), sizeof N);
  if (N != rep->N) throw SizeError("load_field: spinor dimension mismatch");
  SpinorField f(TorusGrid(n, L, m), std::move(rep));
  in.read(reinterpret_cast<char*>(f.values.data()),
          static_cast<std::streamsize>(f.values.size() * sizeof(cplx)));
  if (!in) throw Error("load_field: truncated file " + path);
  return f;
}

void write_axis_slice_csv(const SpinorField& f, const std::string& path) {
  std::ofstream out(path);
  if (!out) throw Error("write_axis_slice_csv: cannot open " + path);
  const int N = f.rep->N;
  out << "x";
  for (int c = 0; c < N; ++c) out << ",re_" << c << ",im_" << c;
  out << "\n";
  long stride = 1;
  for (int a = 1; a < f.grid.n; ++a) stride *= f.grid.m;
  long base = 0;
  for (int a = 1; a < f.grid.n; ++a) base = base * f.grid.m + f.grid.m / 2;
  char buf[64];
  for (int j = 0; j < f.grid.m; ++j) {
    const cplx* v = f.site(j * stride + base);
    std::snprintf(buf, sizeof buf, "%.17g", f.grid.coord(j));
    out << buf;
    for (int c = 0; c < N; ++c) {
      std::snprintf(buf, sizeof buf, ",%.17g,%.17g", v[c].real(), v[c].imag());
      out << buf;
    }
    out << "\n";
  }
}

}  // namespace frdirac
