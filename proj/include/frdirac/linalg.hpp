#pragma once

#include <vector>

namespace frdirac::linalg {

// Least squares min ||A x - b||_2 for a dense column-major A (rows x cols,
// rows >= cols) via Householder QR with column scaling.  Throws
// ConditioningError when the scaled R is rank deficient (condition
// estimate above cond_limit).  Returns x; if residual_out is non-null the
// 2-norm of the residual is stored there.
std::vector<double> lstsq(std::vector<double> A, int rows, int cols,
                          std::vector<double> b, double cond_limit = 1e12,
                          double* residual_out = nullptr);

}  // namespace frdirac::linalg
