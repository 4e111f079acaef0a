#pragma once

#include "apshear/grid.hpp"

namespace apshear {

struct StressOptions {
    double tol = 1e-10;  // relative residual of the linear solve
};

struct AdmissibleStress {
    VectorField2 tau;
    ScalarField2 phi;    // stress potential, tau = grad phi
    double div_residual = 0.0;   // max |div tau| over interior nodes
    double flux_residual = 0.0;  // max |n.tau - t| over Neumann faces
};

/**
 * Builds a statically admissible stress field: solves the discrete problem
 * div(grad phi) = 0 at interior nodes, face flux = t on Neumann nodes,
 * phi = 0 on Dirichlet nodes, with div/grad the second-order stencil
 * operators of this library. The returned tau = grad phi is therefore
 * divergence free to solver accuracy and a potential field by construction.
 */
AdmissibleStress admissible_stress(GridPtr grid, const TractionFn& traction,
                                   const StressOptions& opts = {});

}  // namespace apshear
