#include "frdirac/fft.hpp"

#include <cmath>

namespace frdirac::fft {

namespace {

constexpr double kTwoPi = 6.28318530717958647692;

// bit-reversal permutation
void bit_reverse(cplx* a, int m) {
  for (int i = 1, j = 0; i < m; ++i) {
    int bit = m >> 1;
    for (; j & bit; bit >>= 1) j ^= bit;
    j ^= bit;
    if (i < j) std::swap(a[i], a[j]);
  }
}

}  // namespace

void transform_line(cplx* a, int m, int sign) {
  bit_reverse(a, m);
  for (int len = 2; len <= m; len <<= 1) {
    const double ang = sign * kTwoPi / len;
    for (int i = 0; i < m; i += len) {
      for (int j = 0; j < len / 2; ++j) {
        // per-butterfly polar keeps the twiddles accurate for long lines
        const cplx w = std::polar(1.0, ang * j);
        const cplx u = a[i + j];
        const cplx v = a[i + j + len / 2] * w;
        a[i + j] = u + v;
        a[i + j + len / 2] = u - v;
      }
    }
  }
}

void transform_field(std::vector<cplx>& values, int n, int m, int ncomp,
                     int sign) {
  long volume = 1;
  for (int a = 0; a < n; ++a) volume *= m;
  long stride = 1;
  for (int axis = n - 1; axis >= 0; --axis) {
    const long nlines = volume / m;
    const long tasks = nlines * ncomp;
#pragma omp parallel
    {
      std::vector<cplx> scratch(m);
#pragma omp for schedule(static)
      for (long task = 0; task < tasks; ++task) {
        const long li = task / ncomp;
        const int c = static_cast<int>(task % ncomp);
        const long o = li / stride, r = li % stride;
        const long start = o * m * stride + r;
        for (int t = 0; t < m; ++t)
          scratch[t] = values[(start + t * stride) * ncomp + c];
        transform_line(scratch.data(), m, sign);
        for (int t = 0; t < m; ++t)
          values[(start + t * stride) * ncomp + c] = scratch[t];
      }
    }
    stride *= m;
  }
  if (sign > 0) {
    const double inv = 1.0 / static_cast<double>(volume);
#pragma omp parallel for schedule(static)
    for (long i = 0; i < static_cast<long>(values.size()); ++i) values[i] *= inv;
  }
}

namespace reference {

void transform_line(const cplx* in, cplx* out, int m, int sign) {
  for (int k = 0; k < m; ++k) {
    cplx s{};
    for (int t = 0; t < m; ++t)
      s += in[t] * std::polar(1.0, sign * kTwoPi * k * t / m);
    out[k] = s;
  }
}

void transform_field(std::vector<cplx>& values, int n, int m, int ncomp,
                     int sign) {
  long volume = 1;
  for (int a = 0; a < n; ++a) volume *= m;
  long stride = 1;
  std::vector<cplx> in(m), out(m);
  for (int axis = n - 1; axis >= 0; --axis) {
    const long nlines = volume / m;
    for (long li = 0; li < nlines; ++li) {
      const long o = li / stride, r = li % stride;
      const long start = o * m * stride + r;
      for (int c = 0; c < ncomp; ++c) {
        for (int t = 0; t < m; ++t)
          in[t] = values[(start + t * stride) * ncomp + c];
        transform_line(in.data(), out.data(), m, sign);
        for (int t = 0; t < m; ++t)
          values[(start + t * stride) * ncomp + c] = out[t];
      }
    }
    stride *= m;
  }
  if (sign > 0)
    for (cplx& v : values) v /= static_cast<double>(volume);
}

}  // namespace reference

}  // namespace frdirac::fft
