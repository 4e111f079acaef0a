#include "apshear/dual_solver.hpp"

#include <algorithm>
#include <cmath>

#include "apshear/parallel.hpp"

namespace apshear {

namespace {

constexpr double kPi = 3.14159265358979323846;

RootSign sign_of(double zeta, double scale) {
    if (std::abs(zeta) <= 1e-13 * std::max(1.0, scale)) return RootSign::Zero;
    return zeta > 0.0 ? RootSign::Positive : RootSign::Negative;
}

// Bisection to near machine width, assuming f(lo) and f(hi) bracket a root.
double bisect(const std::function<double(double)>& f, double lo, double hi, double flo) {
    for (int it = 0; it < 200 && hi - lo > 1e-16 * (1.0 + std::abs(lo) + std::abs(hi)); ++it) {
        const double mid = 0.5 * (lo + hi);
        const double fm = f(mid);
        if (fm == 0.0) return mid;
        if ((fm < 0.0) == (flo < 0.0)) {
            lo = mid;
            flo = fm;
        } else {
            hi = mid;
        }
    }
    return 0.5 * (lo + hi);
}

// Newton steps that keep the best iterate by |f|.
double polish(const std::function<double(double)>& f, const std::function<double(double)>& fp,
              double z) {
    double best = z, fbest = std::abs(f(z));
    for (int it = 0; it < 8; ++it) {
        const double d = fp(z);
        if (d == 0.0 || !std::isfinite(d)) break;
        z -= f(z) / d;
        if (!std::isfinite(z)) break;
        const double fz = std::abs(f(z));
        if (fz < fbest) {
            fbest = fz;
            best = z;
        } else {
            break;
        }
    }
    return best;
}

void sort_desc(std::vector<DualRoot>& roots) {
    std::sort(roots.begin(), roots.end(),
              [](const DualRoot& a, const DualRoot& b) { return a.zeta > b.zeta; });
}

}  // namespace

double solve_quadexp(double mu, double nu, double tau_sq, double root_tol) {
    if (!(mu > 0.0) || !(nu > 0.0)) throw DomainError("solve_quadexp: mu, nu must be positive");
    if (tau_sq < 0.0) throw DomainError("solve_quadexp: tau_sq must be nonnegative");
    const double z0 = mu + nu;
    if (tau_sq == 0.0) return z0;

    auto f = [&](double z) { return 2.0 * z * z * std::log((z - mu) / nu) - tau_sq; };
    auto fp = [&](double z) {
        return 4.0 * z * std::log((z - mu) / nu) + 2.0 * z * z / (z - mu);
    };

    double hi = z0;
    double fhi = -tau_sq;
    for (int k = 0; k < 400 && fhi <= 0.0; ++k) {
        hi *= 2.0;
        fhi = f(hi);
    }
    if (fhi <= 0.0) throw Error("solve_quadexp: bracket expansion failed");
    double z = bisect(f, z0, hi, -tau_sq);
    z = polish(f, fp, z);
    if (std::abs(f(z)) > root_tol * std::max(1.0, tau_sq) * 10.0)
        throw Error("solve_quadexp: residual above tolerance after polish");
    return z;
}

double multiplicity_criterion(double c, double alpha) {
    if (!(c > 0.0)) throw DegenerateInput("multiplicity_criterion: c must be positive");
    return 16.0 * alpha * alpha * alpha / (27.0 * c * c);
}

double critical_zeta(double c, double alpha) { return -2.0 * alpha / (3.0 * c); }

std::array<std::complex<double>, 3> closed_form_roots_p2(double c, double alpha,
                                                         double tau_sq) {
    using C = std::complex<double>;
    // Radical form of 4 zeta^2 (c zeta + alpha) = tau_sq. The psi expression
    // below solves the cubic with a doubled forcing term, so it is fed
    // 2*tau_sq; see the unit tests for the verification against the
    // trigonometric path.
    const double t = std::sqrt(2.0 * tau_sq);
    const double cbrt2_4 = std::pow(2.0, 4.0 / 3.0);
    const double cbrt2_1 = std::pow(2.0, 1.0 / 3.0);
    const C inner = C(-32.0 * std::pow(alpha, 3) * c * c + 27.0 * std::pow(c, 4) * t * t, 0.0);
    const C psi = std::pow(
        C(-16.0 * std::pow(alpha, 3) + 27.0 * c * c * t * t, 0.0) +
            3.0 * std::sqrt(C(3.0, 0.0)) * t * std::sqrt(inner),
        1.0 / 3.0);
    const C i_sqrt3(0.0, std::sqrt(3.0));
    const double a3c = alpha / (3.0 * c);
    std::array<C, 3> z;
    z[0] = -a3c + cbrt2_4 * alpha * alpha / (3.0 * c * psi) + psi / (3.0 * cbrt2_4 * c);
    z[1] = -a3c - cbrt2_1 * alpha * alpha * (1.0 - i_sqrt3) / (3.0 * c * psi) -
           (1.0 + i_sqrt3) * psi / (12.0 * cbrt2_1 * c);
    z[2] = -a3c - cbrt2_1 * alpha * alpha * (1.0 + i_sqrt3) / (3.0 * c * psi) -
           (1.0 - i_sqrt3) * psi / (12.0 * cbrt2_1 * c);
    return z;
}

DualRootSet solve_cubic_p2(double c, double alpha, double tau_sq) {
    if (!(c > 0.0)) throw DegenerateInput("solve_cubic_p2: c must be positive");
    if (tau_sq < 0.0) throw DomainError("solve_cubic_p2: tau_sq must be nonnegative");

    auto f = [&](double z) { return 4.0 * z * z * (c * z + alpha) - tau_sq; };
    auto fp = [&](double z) { return 12.0 * c * z * z + 8.0 * alpha * z; };
    const double scale = std::max(1.0, std::abs(alpha) / c);

    DualRootSet out;
    out.tau_sq = tau_sq;

    auto push = [&](double z, bool polish_it) {
        if (polish_it) z = polish(f, fp, z);
        out.roots.push_back({z, std::abs(f(z)), sign_of(z, scale)});
    };

    const double eta = multiplicity_criterion(c, alpha);
    const double zc = critical_zeta(c, alpha);

    if (tau_sq == 0.0) {
        // 4 zeta^2 (c zeta + alpha) = 0 factors directly.
        push(0.0, false);
        push(0.0, false);
        if (alpha != 0.0) push(-alpha / c, false);
        out.mcase = MultiplicityCase::BoundaryEta;
        sort_desc(out.roots);
        return out;
    }

    const bool at_eta = eta > 0.0 && std::abs(tau_sq - eta) <= 1e-10 * std::max(1.0, eta);
    if (at_eta) {
        // Simple positive root plus the fold point as a double root.
        const double z1 = bisect(f, 0.0, std::max(1.0, 2.0 * std::cbrt(tau_sq / (4.0 * c)) +
                                                            2.0 * std::abs(alpha) / c),
                                 -tau_sq);
        push(z1, true);
        push(zc, false);
        push(zc, false);
        out.mcase = MultiplicityCase::BoundaryEta;
        sort_desc(out.roots);
        return out;
    }

    // Depressed form y^3 + P y + Q with zeta = y - a2/3, a2 = alpha/c.
    const double a2 = alpha / c;
    const double P = -a2 * a2 / 3.0;
    const double Q = 2.0 * a2 * a2 * a2 / 27.0 - tau_sq / (4.0 * c);
    const double disc = -4.0 * P * P * P - 27.0 * Q * Q;

    if (disc > 0.0) {
        // three distinct real roots: trigonometric method
        const double mfac = 2.0 * std::sqrt(-P / 3.0);
        const double arg = std::clamp(3.0 * Q / (P * mfac), -1.0, 1.0);
        const double theta = std::acos(arg);
        for (int k = 0; k < 3; ++k)
            push(mfac * std::cos(theta / 3.0 - 2.0 * kPi * k / 3.0) - a2 / 3.0, true);
        out.mcase = MultiplicityCase::Triple;
    } else {
        // single real root: Cardano
        const double D = Q * Q / 4.0 + P * P * P / 27.0;
        const double sq = std::sqrt(std::max(D, 0.0));
        const double y = std::cbrt(-Q / 2.0 + sq) + std::cbrt(-Q / 2.0 - sq);
        push(y - a2 / 3.0, true);
        out.mcase = MultiplicityCase::Unique;
    }
    sort_desc(out.roots);

    // Cross-check against the radical evaluation away from the fold.
    const auto cf = closed_form_roots_p2(c, alpha, tau_sq);
    for (const auto& z : cf) {
        if (std::abs(z.imag()) > 1e-9) continue;
        double best = 1e300;
        for (const auto& r : out.roots) best = std::min(best, std::abs(r.zeta - z.real()));
        if (best > 1e-9 * std::max(1.0, std::abs(z.real())))
            throw Error("solve_cubic_p2: radical-form cross-check disagrees with solver");
    }
    return out;
}

namespace {

// Sign-change scan over a log-spaced lattice on one side of zero.
// lo and hi share a sign; magnitudes run from min(|lo|,|hi|) upward.
void scan_branch(const std::function<double(double)>& f, double lo, double hi, int lattice,
                 std::vector<std::pair<double, double>>& brackets) {
    const double sgn = lo < 0.0 ? -1.0 : 1.0;
    const double alo = std::min(std::abs(lo), std::abs(hi));
    const double ahi = std::max(std::abs(lo), std::abs(hi));
    double prev_z = sgn * alo;
    double prev_f = f(prev_z);
    for (int k = 1; k <= lattice; ++k) {
        const double mag = alo * std::pow(ahi / alo, static_cast<double>(k) / lattice);
        const double z = sgn * mag;
        const double fz = f(z);
        if (std::isfinite(prev_f) && std::isfinite(fz) && (prev_f < 0.0) != (fz < 0.0)) {
            if (sgn > 0)
                brackets.emplace_back(prev_z, z);
            else
                brackets.emplace_back(z, prev_z);
        }
        prev_z = z;
        prev_f = fz;
    }
}

}  // namespace

DualRootSet solve_powerlaw(const MaterialModel& m, double tau_sq, const ScanOptions& opts) {
    if (m.kind != MaterialKind::PowerLaw)
        throw DomainError("solve_powerlaw: power-law model required");
    if (tau_sq < 0.0) throw DomainError("solve_powerlaw: tau_sq must be nonnegative");

    if (m.p == 2.0) return solve_cubic_p2(m.c, m.alpha, tau_sq);

    DualRootSet out;
    out.tau_sq = tau_sq;
    const double scale = std::max(1.0, std::abs(m.alpha) / std::max(m.c, 1e-300));

    if (m.p == 1.0) {
        // linear model: the dual stress is the constant mu/2
        out.roots.push_back({0.5 * m.mu, 0.0, RootSign::Positive});
        out.mcase = MultiplicityCase::Unique;
        return out;
    }

    if (m.p == 0.5) {
        // 4 zeta^2 (c zeta^-2 + alpha) = tau_sq  ==>  4c + 4 alpha zeta^2 = tau_sq,
        // real roots only for tau_sq <= mu^2/(2b) (= 4c).
        const double cap = m.mu * m.mu / (2.0 * m.b);
        if (tau_sq > cap)
            throw NoRealRootError("solve_powerlaw: p=1/2 has no real root for tau_sq > mu^2/(2b)");
        auto residual = [&](double z) { return std::abs(4.0 * m.c + 4.0 * m.alpha * z * z - tau_sq); };
        if (m.alpha < 0.0) {
            const double r = 0.5 * std::sqrt((4.0 * m.c - tau_sq) / (-m.alpha));
            if (r == 0.0) {
                out.roots.push_back({0.0, residual(0.0), RootSign::Zero});
                out.roots.push_back({0.0, residual(0.0), RootSign::Zero});
                out.mcase = MultiplicityCase::BoundaryEta;
            } else {
                out.roots.push_back({r, residual(r), RootSign::Positive});
                out.roots.push_back({-r, residual(-r), RootSign::Negative});
                out.mcase = MultiplicityCase::Triple;
            }
        } else {
            // alpha >= 0: 4 alpha zeta^2 = tau_sq - 4c <= 0 has no nonzero solution
            if (tau_sq == 4.0 * m.c) {
                out.roots.push_back({0.0, 0.0, RootSign::Zero});
                out.mcase = MultiplicityCase::BoundaryEta;
            } else {
                throw NoRealRootError("solve_powerlaw: p=1/2 with alpha >= 0 admits no real root");
            }
        }
        sort_desc(out.roots);
        return out;
    }

    const double expo = 1.0 / (m.p - 1.0);
    auto h2 = [&](double z) {
        double powz;
        try {
            powz = real_pow(z, expo);
        } catch (const Error&) {
            return std::nan("");
        }
        return 4.0 * z * z * (m.c * powz + m.alpha);
    };
    auto f = [&](double z) { return h2(z) - tau_sq; };

    if (m.p < 0.5) {
        // No real root is admitted in this regime; a numerically found
        // root would indicate a solver defect, so surface it loudly.
        std::vector<std::pair<double, double>> checks;
        scan_branch(f, 1e-10 * scale, 1e6 * scale, opts.lattice, checks);
        std::string msg = "solve_powerlaw: no real root for p < 1/2";
        if (!checks.empty())
            msg += " (diagnostic: sign-change scan bracketed " +
                   std::to_string(checks.size()) +
                   " candidate roots of the raw equation; the admissible-range "
                   "restriction excludes them)";
        throw NoRealRootError(msg);
    }

    // Enumerate brackets on the positive branch, and on the negative branch
    // when zeta^(1/(p-1)) is real there (integer exponent).
    std::vector<std::pair<double, double>> brackets;
    const double lo_mag = 1e-12 * scale;
    double hi_mag = scale;
    // expand until the positive branch has passed tau_sq (p > 1 grows without bound)
    for (int k = 0; k < 200 && !(h2(hi_mag) > tau_sq); ++k) {
        hi_mag *= 2.0;
        if (!std::isfinite(h2(hi_mag))) break;
    }
    hi_mag *= 4.0;
    scan_branch(f, lo_mag, hi_mag, opts.lattice, brackets);
    // zero can be a root only when tau_sq == 0
    if (tau_sq == 0.0) out.roots.push_back({0.0, 0.0, RootSign::Zero});
    const bool negative_branch = std::abs(expo - std::round(expo)) < 1e-12;
    if (negative_branch) scan_branch(f, -hi_mag, -lo_mag, opts.lattice, brackets);

    auto fp = [&](double z) {  // numerical derivative is adequate for polish
        const double h = 1e-7 * std::max(1.0, std::abs(z));
        return (f(z + h) - f(z - h)) / (2.0 * h);
    };
    for (auto [lo, hi] : brackets) {
        double z = bisect(f, lo, hi, f(lo));
        z = polish(f, fp, z);
        bool dup = false;
        for (const auto& r : out.roots)
            if (std::abs(r.zeta - z) <= 1e-10 * std::max(1.0, std::abs(z))) dup = true;
        if (!dup) out.roots.push_back({z, std::abs(f(z)), sign_of(z, scale)});
    }
    sort_desc(out.roots);
    out.mcase = out.roots.empty()            ? MultiplicityCase::NoRealRoot
                : out.roots.size() == 1      ? MultiplicityCase::Unique
                                             : MultiplicityCase::Triple;
    if (out.roots.empty())
        throw NoRealRootError("solve_powerlaw: scan found no real root for tau_sq = " +
                              std::to_string(tau_sq));
    return out;
}

DualRootSet solve_dual(const MaterialModel& m, double tau_sq, const ScanOptions& opts) {
    if (m.kind == MaterialKind::QuadExp) {
        DualRootSet out;
        out.tau_sq = tau_sq;
        const double z = solve_quadexp(m.mu, m.nu, tau_sq, opts.root_tol);
        const double res = std::abs(2.0 * z * z * std::log((z - m.mu) / m.nu) - tau_sq);
        out.roots.push_back({z, res, RootSign::Positive});
        out.mcase = MultiplicityCase::Unique;
        return out;
    }
    return solve_powerlaw(m, tau_sq, opts);
}

FieldRoots solve_field(const MaterialModel& m, const VectorField2& tau, int threads,
                       const ScanOptions& opts) {
    const Grid2& g = *tau.grid;
    tau.check_finite("solve_field: tau");
    FieldRoots out;
    out.sets.resize(g.node_count());
    std::vector<std::string> errs(g.node_count());

    parallel_for(g.node_count(), threads, [&](int lo, int hi) {
        for (int k = lo; k < hi; ++k) {
            const int i = k % g.npx();
            const int j = k / g.npx();
            if (!g.active(i, j)) continue;
            const double tau_sq = tau.at(i, j).norm_sq();
            try {
                out.sets[k] = solve_dual(m, tau_sq, opts);
            } catch (const Error& e) {
                errs[k] = e.what();
            }
        }
    });

    for (int j = 0; j <= g.ny(); ++j)
        for (int i = 0; i <= g.nx(); ++i) {
            const int k = g.id(i, j);
            if (!errs[k].empty())
                out.errors.push_back({i, j, g.x(i), g.y(j), errs[k]});
        }
    return out;
}

}  // namespace apshear
