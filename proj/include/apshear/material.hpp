#pragma once

#include <string>

#include "apshear/grid.hpp"

namespace apshear {

enum class MaterialKind { QuadExp, PowerLaw };

/**
 * Canonical material triple for the anti-plane shear models.
 *
 * QuadExp:   W(g) = mu/2 |g|^2 + nu (exp(|g|^2/2) - 1), strain scale s = 1/2
 *            so xi = |g|^2/2, V(xi) = mu xi + nu (exp(xi) - 1).
 * PowerLaw:  W(g) = mu/(2b) [(1 + (b/p)(|g|^2 - eps))^p - 1], s = 1 so
 *            xi = |g|^2, V(xi) = beta/2 (xi - alpha)^p - beta_o with the
 *            derived constants below.
 *
 * The derived constants are always recomputed from (mu, b, p, eps):
 *   beta   = mu b^(p-1) / p^p
 *   alpha  = eps - p/b
 *   beta_o = mu / (2b)
 *   c      = (2/mu)^(1/(p-1)) p/b      (so c = 4/(mu b) when p = 2)
 */
struct MaterialModel {
    MaterialKind kind = MaterialKind::QuadExp;
    double mu = 1.0;
    double nu = 0.0;   // QuadExp only
    double b = 0.0;    // PowerLaw only
    double p = 0.0;
    double eps = 0.0;

    double beta = 0.0;
    double alpha = 0.0;
    double beta_o = 0.0;
    double c = 0.0;

    double strain_scale = 0.5;  // s in xi = s |grad u|^2
    double exp_cap = 700.0;

    static MaterialModel quad_exp(double mu, double nu);
    static MaterialModel power_law(double mu, double b, double p, double eps);

    std::string describe() const;
};

/// W(gamma). Throws OverflowError past the exp cap, NonRealError when a
/// fractional power of a negative base would be needed.
double stored_energy(const MaterialModel& m, Vec2 gamma);

/// grad W(gamma); equals 2 s zeta(xi) gamma with zeta = canonical_dual_map.
Vec2 shear_stress(const MaterialModel& m, Vec2 gamma);

/// V(xi) on xi >= 0.
double canonical_value(const MaterialModel& m, double xi);

/// zeta = V'(xi).
double canonical_dual_map(const MaterialModel& m, double xi);

/// V''(xi), used by the triality second-derivative formula.
double canonical_curvature(const MaterialModel& m, double xi);

/// Legendre conjugate V*(zeta). QuadExp requires zeta > mu.
double conjugate(const MaterialModel& m, double zeta);

/// xi = (V*)'(zeta); inverse of the duality map.
double conjugate_gradient(const MaterialModel& m, double zeta);

/// x^e for real e; negative base allowed only for (numerically) integer e.
double real_pow(double base, double expo);

}  // namespace apshear
