#include "apshear/material.hpp"

#include <cmath>
#include <sstream>

namespace apshear {

MaterialModel MaterialModel::quad_exp(double mu, double nu) {
    if (!(mu > 0.0) || !(nu > 0.0)) throw DomainError("quad_exp: mu and nu must be positive");
    MaterialModel m;
    m.kind = MaterialKind::QuadExp;
    m.mu = mu;
    m.nu = nu;
    m.strain_scale = 0.5;
    return m;
}

MaterialModel MaterialModel::power_law(double mu, double b, double p, double eps) {
    if (!(mu > 0.0) || !(b > 0.0) || !(p > 0.0))
        throw DomainError("power_law: mu, b, p must be positive");
    MaterialModel m;
    m.kind = MaterialKind::PowerLaw;
    m.mu = mu;
    m.b = b;
    m.p = p;
    m.eps = eps;
    m.beta = mu * std::pow(b, p - 1.0) / std::pow(p, p);
    m.alpha = eps - p / b;
    m.beta_o = mu / (2.0 * b);
    if (p != 1.0) m.c = std::pow(2.0 / mu, 1.0 / (p - 1.0)) * p / b;
    m.strain_scale = 1.0;
    return m;
}

std::string MaterialModel::describe() const {
    std::ostringstream os;
    if (kind == MaterialKind::QuadExp)
        os << "quad_exp(mu=" << mu << ", nu=" << nu << ")";
    else
        os << "power_law(mu=" << mu << ", b=" << b << ", p=" << p << ", eps=" << eps << ")";
    return os.str();
}

double real_pow(double base, double expo) {
    if (base > 0.0) return std::pow(base, expo);
    if (base == 0.0) {
        if (expo > 0.0) return 0.0;
        throw DomainError("real_pow: 0 raised to a non-positive exponent");
    }
    const double r = std::round(expo);
    if (std::abs(expo - r) > 1e-12)
        throw NonRealError("real_pow: negative base with fractional exponent");
    const double mag = std::pow(-base, expo);
    return (static_cast<long long>(r) % 2 == 0) ? mag : -mag;
}

namespace {

double checked_exp(const MaterialModel& m, double arg) {
    if (arg > m.exp_cap)
        throw OverflowError("exp argument " + std::to_string(arg) + " exceeds cap");
    return std::exp(arg);
}

}  // namespace

double canonical_value(const MaterialModel& m, double xi) {
    if (xi < 0.0) throw DomainError("canonical_value: xi must be nonnegative");
    if (m.kind == MaterialKind::QuadExp) return m.mu * xi + m.nu * (checked_exp(m, xi) - 1.0);
    return 0.5 * m.beta * real_pow(xi - m.alpha, m.p) - m.beta_o;
}

double canonical_dual_map(const MaterialModel& m, double xi) {
    if (xi < 0.0) throw DomainError("canonical_dual_map: xi must be nonnegative");
    if (m.kind == MaterialKind::QuadExp) return m.mu + m.nu * checked_exp(m, xi);
    if (m.p == 1.0) return 0.5 * m.beta;  // linear model: constant dual stress
    return 0.5 * m.p * m.beta * real_pow(xi - m.alpha, m.p - 1.0);
}

double canonical_curvature(const MaterialModel& m, double xi) {
    if (xi < 0.0) throw DomainError("canonical_curvature: xi must be nonnegative");
    if (m.kind == MaterialKind::QuadExp) return m.nu * checked_exp(m, xi);
    if (m.p == 1.0) return 0.0;
    return 0.5 * m.p * (m.p - 1.0) * m.beta * real_pow(xi - m.alpha, m.p - 2.0);
}

double stored_energy(const MaterialModel& m, Vec2 gamma) {
    return canonical_value(m, m.strain_scale * gamma.norm_sq());
}

Vec2 shear_stress(const MaterialModel& m, Vec2 gamma) {
    // chain rule: grad W = 2 s V'(xi) gamma
    const double zeta = canonical_dual_map(m, m.strain_scale * gamma.norm_sq());
    return (2.0 * m.strain_scale * zeta) * gamma;
}

double conjugate(const MaterialModel& m, double zeta) {
    if (m.kind == MaterialKind::QuadExp) {
        if (!(zeta > m.mu)) throw DomainError("conjugate: zeta must exceed mu for quad_exp");
        const double d = zeta - m.mu;
        return d * (std::log(d / m.nu) - 1.0) + m.nu;
    }
    if (m.p == 1.0) throw DomainError("conjugate: undefined for the linear model p = 1");
    return (m.p - 1.0) / m.p * m.c * real_pow(zeta, m.p / (m.p - 1.0)) + m.alpha * zeta +
           m.beta_o;
}

double conjugate_gradient(const MaterialModel& m, double zeta) {
    if (m.kind == MaterialKind::QuadExp) {
        if (!(zeta > m.mu))
            throw DomainError("conjugate_gradient: zeta must exceed mu for quad_exp");
        return std::log((zeta - m.mu) / m.nu);
    }
    if (m.p == 1.0) throw DomainError("conjugate_gradient: undefined for p = 1");
    return m.alpha + m.c * real_pow(zeta, 1.0 / (m.p - 1.0));
}

}  // namespace apshear
