#pragma once

#include "frdirac/spinor_field.hpp"

namespace frdirac::flat {

// Fractional Dirac operator on the torus: per Fourier mode the spinor is
// multiplied by |xi|^(2L-1) M(xi) with M = i sum xi_j gamma_j; the zero
// mode is annihilated (the |xi|^(2L-1) weight is singular there for
// L < 1/2 and the classical operator kills constants).
SpinorField fractional_dirac_flat(const SpinorField& field, double lambda);

// Geometric normalization: -nu composed with the above.
SpinorField geometric_fractional_dirac(const SpinorField& field, double lambda);

// Explicit extremal spinor psi(x) = f^((n+1-2L)/2) (I - sum x_j e_j) Phi0,
// f = 2/(1+|x|^2), e_j the boundary Clifford matrices, centered in the box.
SpinorField bubble(const TorusGrid& grid, double lambda,
                   const std::vector<cplx>& phi0,
                   std::shared_ptr<const CliffordRep> rep);

// || D_bar psi - mu |psi|^(4L/(n-2L)) psi ||_2 / || D_bar psi ||_2 on the
// grid; the nonlinear term is 0 where psi vanishes.
double yamabe_residual(const SpinorField& psi, double lambda, double mu);

namespace reference {
// Serial naive-DFT realization of the same multiplier; the correctness
// oracle for the fast path (small grids only).
SpinorField fractional_dirac_flat(const SpinorField& field, double lambda);
}  // namespace reference

}  // namespace frdirac::flat
