#include "frdirac/linalg.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <sstream>

#include "frdirac/errors.hpp"

namespace frdirac::linalg {

std::vector<double> lstsq(std::vector<double> A, int rows, int cols,
                          std::vector<double> b, double cond_limit,
                          double* residual_out) {
  if (rows < cols || cols < 1) {
    std::ostringstream os;
    os << "lstsq: under-determined system (" << rows << " rows, " << cols
       << " cols)";
    throw ConditioningError(os.str());
  }
  auto at = [&](int i, int j) -> double& { return A[j * rows + i]; };

  std::vector<double> colscale(cols, 1.0);
  for (int j = 0; j < cols; ++j) {
    double s = 0.0;
    for (int i = 0; i < rows; ++i) s += at(i, j) * at(i, j);
    s = std::sqrt(s);
    if (s == 0.0) throw ConditioningError("lstsq: zero column");
    colscale[j] = s;
    for (int i = 0; i < rows; ++i) at(i, j) /= s;
  }

  // Householder QR, applying reflectors to b as we go.
  for (int j = 0; j < cols; ++j) {
    double nrm = 0.0;
    for (int i = j; i < rows; ++i) nrm += at(i, j) * at(i, j);
    nrm = std::sqrt(nrm);
    if (nrm == 0.0) throw ConditioningError("lstsq: rank deficient");
    double alpha = at(j, j) > 0.0 ? -nrm : nrm;
    std::vector<double> v(rows - j);
    v[0] = at(j, j) - alpha;
    for (int i = j + 1; i < rows; ++i) v[i - j] = at(i, j);
    double vv = 0.0;
    for (double x : v) vv += x * x;
    if (vv == 0.0) throw ConditioningError("lstsq: rank deficient");
    at(j, j) = alpha;
    for (int i = j + 1; i < rows; ++i) at(i, j) = 0.0;
    for (int k = j + 1; k < cols; ++k) {
      double dot = 0.0;
      for (int i = j; i < rows; ++i) dot += v[i - j] * at(i, k);
      const double f = 2.0 * dot / vv;
      for (int i = j; i < rows; ++i) at(i, k) -= f * v[i - j];
    }
    double dotb = 0.0;
    for (int i = j; i < rows; ++i) dotb += v[i - j] * b[i];
    const double fb = 2.0 * dotb / vv;
    for (int i = j; i < rows; ++i) b[i] -= fb * v[i - j];
  }

  double dmax = 0.0, dmin = std::numeric_limits<double>::infinity();
  for (int j = 0; j < cols; ++j) {
    const double d = std::abs(at(j, j));
    dmax = std::max(dmax, d);
    dmin = std::min(dmin, d);
  }
  if (!(dmin > 0.0) || dmax / dmin > cond_limit) {
    std::ostringstream os;
    os << "lstsq: ill-conditioned fit (diag ratio " << dmax / dmin << ")";
    throw ConditioningError(os.str());
  }

  std::vector<double> x(cols);
  for (int j = cols - 1; j >= 0; --j) {
    double s = b[j];
    for (int k = j + 1; k < cols; ++k) s -= at(j, k) * x[k];
    x[j] = s / at(j, j);
  }
  if (residual_out) {
    double r = 0.0;
    for (int i = cols; i < rows; ++i) r += b[i] * b[i];
    *residual_out = std::sqrt(r);
  }
  for (int j = 0; j < cols; ++j) x[j] /= colscale[j];
  return x;
}

}  // namespace frdirac::linalg
