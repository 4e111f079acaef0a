#include "apshear/energy.hpp"

#include <cmath>

#include "apshear/operators.hpp"

namespace apshear {

double potential_energy(const MaterialModel& m, const ScalarField2& u,
                        const TractionFn& traction) {
    const Grid2& g = *u.grid;
    u.check_finite("potential_energy: u");
    const double uscale = std::max(1.0, u.max_abs());
    for (int j = 0; j <= g.ny(); ++j)
        for (int i = 0; i <= g.nx(); ++i)
            if (g.active(i, j) && g.tag(i, j) == BoundaryTag::Dirichlet &&
                std::abs(u.at(i, j)) > 1e-9 * uscale)
                throw DomainError("potential_energy: u does not vanish on the Dirichlet boundary");

    const VectorField2 grad = gradient(u);
    ScalarField2 density(u.grid);
    for (int j = 0; j <= g.ny(); ++j)
        for (int i = 0; i <= g.nx(); ++i)
            if (g.active(i, j)) density.at(i, j) = stored_energy(m, grad.at(i, j));
    return integrate(density) - boundary_work(g, traction, u);
}

double dual_energy(const MaterialModel& m, const ScalarField2& zeta, const VectorField2& tau) {
    const Grid2& g = *zeta.grid;
    const double s = m.strain_scale;
    ScalarField2 density(zeta.grid);
    for (int j = 0; j <= g.ny(); ++j) {
        for (int i = 0; i <= g.nx(); ++i) {
            if (!g.active(i, j)) continue;
            const double z = zeta.at(i, j);
            const double tsq = tau.at(i, j).norm_sq();
            if (std::abs(z) < 1e-12 && tsq > 0.0)
                throw DivisionNearZero("dual_energy: zeta vanishes where tau does not");
            const double transport = (tsq == 0.0 && z == 0.0) ? 0.0 : tsq / (4.0 * s * z);
            density.at(i, j) = -(transport + conjugate(m, z));
        }
    }
    return integrate(density);
}

double total_complementary(const MaterialModel& m, const ScalarField2& u,
                           const ScalarField2& zeta, const VectorField2& tau) {
    const Grid2& g = *u.grid;
    const double s = m.strain_scale;
    const VectorField2 grad = gradient(u);
    ScalarField2 density(u.grid);
    for (int j = 0; j <= g.ny(); ++j) {
        for (int i = 0; i <= g.nx(); ++i) {
            if (!g.active(i, j)) continue;
            const Vec2 du = grad.at(i, j);
            const double z = zeta.at(i, j);
            density.at(i, j) =
                s * du.norm_sq() * z - conjugate(m, z) - dot(du, tau.at(i, j));
        }
    }
    return integrate(density);
}

double gap_function(const ScalarField2& zeta, const ScalarField2& u, double strain_scale) {
    const Grid2& g = *u.grid;
    const VectorField2 grad = gradient(u);
    ScalarField2 density(u.grid);
    for (int j = 0; j <= g.ny(); ++j)
        for (int i = 0; i <= g.nx(); ++i)
            if (g.active(i, j))
                density.at(i, j) = zeta.at(i, j) * strain_scale * grad.at(i, j).norm_sq();
    return integrate(density);
}

TrialityLabel classify(const MaterialModel& m, double zeta_root, double tau_sq,
                       int domain_dim) {
    if (m.kind != MaterialKind::PowerLaw || m.p != 2.0)
        throw DomainError("classify: triality intervals are defined for the p = 2 model");
    const double c = m.c, alpha = m.alpha;
    const double residual = std::abs(4.0 * zeta_root * zeta_root * (c * zeta_root + alpha) -
                                     tau_sq);
    if (residual > 1e-11 * std::max(1.0, tau_sq))
        throw InvalidRoot("classify: root residual " + std::to_string(residual) +
                          " fails the dual equation bound");

    const double zc = critical_zeta(c, alpha);
    const double tol = 1e-9 * std::max(1.0, alpha / c);
    const double s = m.strain_scale;

    TrialityLabel out;
    out.zeta_sign = zeta_root > tol    ? RootSign::Positive
                    : zeta_root < -tol ? RootSign::Negative
                                       : RootSign::Zero;

    const bool zeta_near_zero = std::abs(zeta_root) <= tol;
    const double gamma = zeta_near_zero && tau_sq == 0.0
                             ? 0.0
                             : std::sqrt(tau_sq) / (2.0 * s * zeta_root);
    const double xi = gamma * gamma;  // Lambda(u) at s = 1
    out.W_second = 2.0 * canonical_dual_map(m, xi) +
                   4.0 * gamma * gamma * canonical_curvature(m, xi);

    if (zeta_near_zero || std::abs(zeta_root - zc) <= tol) {
        out.kind = TrialityKind::Degenerate;
        out.interval = DualInterval::Boundary;
        return out;
    }
    if (zeta_root > 0.0) {
        out.kind = TrialityKind::GlobalMin;
        out.interval = DualInterval::PositiveAxis;
    } else if (zeta_root < zc) {
        out.kind = TrialityKind::LocalMax;
        out.interval = DualInterval::BelowCritical;
    } else {
        out.kind = TrialityKind::LocalMin1DOnly;
        out.interval = DualInterval::MiddleNegative;
        out.two_d_caveat = domain_dim != 1;
    }

    // sign dichotomy of the second derivative across the fold
    const bool expect_positive = zeta_root > zc;
    if (expect_positive != (out.W_second > 0.0))
        throw Error("classify: second-derivative sign contradicts the interval");
    return out;
}

EnergyReport energy_report(const MaterialModel& m, const ScalarField2& u,
                           const ScalarField2& zeta, const VectorField2& tau,
                           const TractionFn& traction) {
    EnergyReport r;
    r.Pi = potential_energy(m, u, traction);
    r.Pid = dual_energy(m, zeta, tau);
    r.Xi_tau = total_complementary(m, u, zeta, tau);
    r.gap = gap_function(zeta, u, m.strain_scale);
    r.duality_gap = std::abs(r.Pi - r.Pid);
    return r;
}

}  // namespace apshear
