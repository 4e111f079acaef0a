#pragma once

#include <complex>
#include <string>
#include <vector>

#include "apshear/grid.hpp"
#include "apshear/material.hpp"

namespace apshear {

enum class RootSign { Positive, Zero, Negative };

/// Regime of the per-point dual algebraic equation.
///  Unique       one real root
///  Triple       multiple distinct real roots (three for the p = 2 cubic,
///               the +/- pair for p = 1/2)
///  BoundaryEta  degenerate multiplicity (double root; |tau|^2 at the
///               critical threshold or zero)
///  NoRealRoot   no real root exists
enum class MultiplicityCase { Unique, Triple, BoundaryEta, NoRealRoot };

struct DualRoot {
    double zeta = 0.0;
    double residual = 0.0;  // |h^2(zeta) - tau_sq| of the defining equation
    RootSign sign = RootSign::Zero;
};

struct DualRootSet {
    std::vector<DualRoot> roots;  // sorted by zeta, descending
    double tau_sq = 0.0;
    MultiplicityCase mcase = MultiplicityCase::Unique;

    int count() const { return static_cast<int>(roots.size()); }
    const DualRoot& largest() const { return roots.front(); }
};

struct ScanOptions {
    int lattice = 512;         // points per monotone branch
    double root_tol = 1e-12;   // absolute tolerance after polish
};

/// Unique root of 2 zeta^2 log((zeta - mu)/nu) = tau_sq on [mu + nu, inf):
/// geometric bracket expansion, bisection, Newton polish.
double solve_quadexp(double mu, double nu, double tau_sq, double root_tol = 1e-12);

/// eta = 16 alpha^3 / (27 c^2), the threshold separating the one-root and
/// three-root regimes of the p = 2 cubic.
double multiplicity_criterion(double c, double alpha);

/// Critical dual stress -2 alpha / (3 c) where the cubic's branch folds.
double critical_zeta(double c, double alpha);

/// All real roots of 4 zeta^2 (c zeta + alpha) = tau_sq. The production
/// path is the trigonometric three-real-root method plus a Cardano branch;
/// the radical formulas evaluated in complex arithmetic (closed_form_roots_p2)
/// are run as a cross-check away from the degenerate boundary.
DualRootSet solve_cubic_p2(double c, double alpha, double tau_sq);

/// Radical (Cardano-form) solutions of the same cubic, evaluated in complex
/// arithmetic. Real roots appear with vanishing imaginary part.
std::array<std::complex<double>, 3> closed_form_roots_p2(double c, double alpha,
                                                         double tau_sq);

/// Real roots of 4 zeta^2 (c zeta^(1/(p-1)) + alpha) = tau_sq for a general
/// power-law model. p = 2 delegates to the cubic, p = 1 is the constant
/// closed form, p = 1/2 uses the exact rearrangement with its existence
/// condition tau_sq <= mu^2/(2b). Throws NoRealRootError for p < 1/2.
DualRootSet solve_powerlaw(const MaterialModel& m, double tau_sq,
                           const ScanOptions& opts = {});

/// Dispatch on the material kind.
DualRootSet solve_dual(const MaterialModel& m, double tau_sq,
                       const ScanOptions& opts = {});

struct NodeSolveError {
    int i = 0, j = 0;
    double x = 0.0, y = 0.0;
    std::string message;
};

struct FieldRoots {
    std::vector<DualRootSet> sets;  // node-indexed (inactive nodes left empty)
    std::vector<NodeSolveError> errors;
};

/// Pointwise dual solve over a stress field; nodes are independent and run
/// on a worker pool. Output ordering is node order regardless of threads.
FieldRoots solve_field(const MaterialModel& m, const VectorField2& tau, int threads = 0,
                       const ScanOptions& opts = {});

}  // namespace apshear
