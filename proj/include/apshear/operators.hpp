#pragma once

#include <array>
#include <vector>

#include "apshear/grid.hpp"

namespace apshear {

struct StencilEntry {
    int node = -1;
    double coeff = 0.0;
};

/// Three-point derivative stencil along axis (0 = x, 1 = y) at node (i, j):
/// central in the interior, one-sided second order where a neighbour is
/// missing. Throws InvalidMask if the mask leaves fewer than three usable
/// nodes in line.
std::array<StencilEntry, 3> deriv_stencil(const Grid2& g, int i, int j, int axis);

VectorField2 gradient(const ScalarField2& u);
ScalarField2 divergence(const VectorField2& v);
/// Scalar curl in 2-D: dv2/dx1 - dv1/dx2.
ScalarField2 curl2(const VectorField2& v);

/// Trapezoidal node weights (hx*hy/4 per active cell corner).
std::vector<double> quad_weights(const Grid2& g);

/// Trapezoidal integral of a scalar field over the active domain.
double integrate(const ScalarField2& f);

/// Boundary work integral over the rectangle perimeter:
/// sum of edge-wise trapezoids of t*u with the traction taken on the face
/// of each side. Dirichlet nodes contribute through u (normally zero).
double boundary_work(const Grid2& g, const TractionFn& traction, const ScalarField2& u);

/// Adjoint of the gradient operator with quadrature weights:
/// out = G^T (w .* sigma). This is the exact derivative of
/// sum_n w_n f(grad u|_n) when sigma_n = f'(grad u|_n).
ScalarField2 gradient_adjoint(const Grid2& g, const std::vector<double>& weights,
                              const VectorField2& sigma);

}  // namespace apshear
