#pragma once

#include <complex>
#include <vector>

namespace frdirac::fft {

using cplx = std::complex<double>;

// In-place radix-2 transform of a single line of length m (power of two).
// sign = -1 forward, +1 inverse; no normalization either way.
void transform_line(cplx* data, int m, int sign);

// n-dimensional transform of a site-major field with ncomp components per
// site: every axis of every component is transformed.  Unnormalized
// forward (sign=-1); the inverse (sign=+1) divides by the total number of
// sites.  Lines are processed independently (OpenMP parallel).
void transform_field(std::vector<cplx>& values, int n, int m, int ncomp,
                     int sign);

namespace reference {
// Naive O(m^2) DFT of one line, same conventions; kept as the serial
// oracle for the fast path.
void transform_line(const cplx* in, cplx* out, int m, int sign);
// Serial field transform built on the naive line DFT.
void transform_field(std::vector<cplx>& values, int n, int m, int ncomp,
                     int sign);
}  // namespace reference

}  // namespace frdirac::fft
