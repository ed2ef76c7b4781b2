#pragma once

#include <array>
#include <memory>
#include <string>
#include <vector>

#include "frdirac/clifford.hpp"

namespace frdirac {

// Periodic grid on an n-torus, m points per axis (power of two), box side
// L, coordinates centered in the box: x_j = -L/2 + L j / m.  Frequencies
// use the symmetric band k in [-m/2, m/2).
struct TorusGrid {
  int n = 0;
  double L = 0.0;
  int m = 0;

  TorusGrid() = default;
  TorusGrid(int n_, double L_, int m_);

  long volume() const;
  double spacing() const { return L / m; }
  double coord(int j) const { return -0.5 * L + L * static_cast<double>(j) / m; }
  double freq(int j) const;  // 2 pi k / L, symmetric band
  // decode a flat site index into per-axis indices
  void site_coords(long site, std::array<int, 4>& idx) const;
};

// Grid of complex spinor vectors; values stored site-major, N components
// per site.  Fields are immutable values in practice: operations allocate
// fresh outputs.
struct SpinorField {
  TorusGrid grid;
  std::shared_ptr<const CliffordRep> rep;
  std::vector<cplx> values;  // volume * N

  SpinorField() = default;
  SpinorField(const TorusGrid& g, std::shared_ptr<const CliffordRep> r);

  int ncomp() const { return rep->N; }
  cplx* site(long s) { return values.data() + s * rep->N; }
  const cplx* site(long s) const { return values.data() + s * rep->N; }
  void check_finite() const;
};

// Flat binary snapshot: header (n, L, m, N), body row-major complex doubles.
void save_field(const SpinorField& f, const std::string& path);
SpinorField load_field(const std::string& path,
                       std::shared_ptr<const CliffordRep> rep);

// CSV slice along axis 0 (all other indices fixed to mid-box) for plotting:
// columns x, re_0, im_0, ..., re_{N-1}, im_{N-1}.
void write_axis_slice_csv(const SpinorField& f, const std::string& path);

}  // namespace frdirac
