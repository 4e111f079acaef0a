#pragma once

#include "apshear/dual_solver.hpp"
#include "apshear/grid.hpp"
#include "apshear/material.hpp"

namespace apshear {

/// Total potential energy Pi(u) = int W(grad u) - int_{Gamma_t} t u.
/// Requires u = 0 on the Dirichlet boundary.
double potential_energy(const MaterialModel& m, const ScalarField2& u,
                        const TractionFn& traction);

/// Pure complementary energy Pi_d(zeta) = -int(|tau|^2/(4 s zeta) + V*(zeta)).
/// Throws DivisionNearZero where |zeta| < 1e-12 with |tau| > 0.
double dual_energy(const MaterialModel& m, const ScalarField2& zeta,
                   const VectorField2& tau);

/// Total complementary functional
/// Xi_tau(u, zeta) = int [ s |grad u|^2 zeta - V*(zeta) - (grad u) . tau ].
double total_complementary(const MaterialModel& m, const ScalarField2& u,
                           const ScalarField2& zeta, const VectorField2& tau);

/// Complementary gap G(u, zeta) = int zeta * s |grad u|^2; nonnegative for
/// every u exactly when zeta >= 0 over the domain.
double gap_function(const ScalarField2& zeta, const ScalarField2& u, double strain_scale);

enum class TrialityKind { GlobalMin, LocalMin1DOnly, LocalMax, Degenerate };

enum class DualInterval { PositiveAxis, MiddleNegative, BelowCritical, Boundary };

struct TrialityLabel {
    TrialityKind kind = TrialityKind::Degenerate;
    RootSign zeta_sign = RootSign::Zero;
    DualInterval interval = DualInterval::Boundary;
    double W_second = 0.0;      // d2W/dgamma2 at the critical shear
    bool two_d_caveat = false;  // middle-root local-min claim unproven off the line
};

/**
 * Classifies a root of the p = 2 cubic by the triality intervals:
 * GlobalMin on (0, inf), LocalMax below the fold point zeta_c = -2 alpha/(3c),
 * LocalMin1DOnly on (zeta_c, 0) (with a caveat flag in 2-D, where the
 * double-min duality is proven only for one-dimensional domains), Degenerate
 * within 1e-9 * max(1, alpha/c) of zero or of zeta_c. Also evaluates the
 * one-dimensional second derivative of the stored energy at the associated
 * shear and checks its sign against the interval. Throws InvalidRoot when
 * the root does not satisfy the dual equation to 1e-11 * max(1, tau_sq).
 */
TrialityLabel classify(const MaterialModel& m, double zeta_root, double tau_sq,
                       int domain_dim);

struct EnergyReport {
    double Pi = 0.0;
    double Pid = 0.0;
    double Xi_tau = 0.0;
    double gap = 0.0;
    double duality_gap = 0.0;  // |Pi - Pid|
};

EnergyReport energy_report(const MaterialModel& m, const ScalarField2& u,
                           const ScalarField2& zeta, const VectorField2& tau,
                           const TractionFn& traction);

}  // namespace apshear
