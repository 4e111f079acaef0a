#include "apshear/stress.hpp"

#include <Eigen/Sparse>
#include <cmath>
#include <vector>

#include "apshear/operators.hpp"

namespace apshear {

namespace {

double face_sign(Face f) {
    return (f == Face::XPlus || f == Face::YPlus) ? 1.0 : -1.0;
}

int face_axis(Face f) {
    return (f == Face::XMinus || f == Face::XPlus) ? 0 : 1;
}

}  // namespace

AdmissibleStress admissible_stress(GridPtr grid, const TractionFn& traction,
                                   const StressOptions& opts) {
    const Grid2& g = *grid;
    g.validate();

    const int n = g.node_count();
    std::vector<Eigen::Triplet<double>> trips;
    Eigen::VectorXd b = Eigen::VectorXd::Zero(n);

    // Row scratch: accumulate coefficients per column.
    std::vector<double> row(n, 0.0);
    std::vector<int> touched;
    auto add = [&](int col, double c) {
        if (row[col] == 0.0) touched.push_back(col);
        row[col] += c;
    };
    auto flush = [&](int r) {
        for (int col : touched) {
            if (row[col] != 0.0) trips.emplace_back(r, col, row[col]);
            row[col] = 0.0;
        }
        touched.clear();
    };

    for (int j = 0; j <= g.ny(); ++j) {
        for (int i = 0; i <= g.nx(); ++i) {
            if (!g.active(i, j)) continue;
            const int r = g.id(i, j);

            if (g.is_interior_node(i, j)) {
                // div(grad phi) = 0: compose the two stencil applications.
                for (int axis = 0; axis < 2; ++axis) {
                    for (const auto& outer : deriv_stencil(g, i, j, axis)) {
                        if (outer.node < 0) continue;
                        const int mi = outer.node % g.npx();
                        const int mj = outer.node / g.npx();
                        for (const auto& inner : deriv_stencil(g, mi, mj, axis))
                            if (inner.node >= 0) add(inner.node, outer.coeff * inner.coeff);
                    }
                }
                b[r] = 0.0;
            } else if (g.tag(i, j) == BoundaryTag::Dirichlet) {
                add(r, 1.0);
                b[r] = 0.0;
            } else {
                // Neumann: average of the outward face fluxes equals the
                // average of the prescribed tractions.
                const auto faces = g.outward_faces(i, j);
                const double w = 1.0 / static_cast<double>(faces.size());
                double rhs = 0.0;
                for (Face f : faces) {
                    const double sgn = face_sign(f);
                    for (const auto& e : deriv_stencil(g, i, j, face_axis(f)))
                        if (e.node >= 0) add(e.node, w * sgn * e.coeff);
                    rhs += w * traction(g.x(i), g.y(j), f);
                }
                b[r] = rhs;
            }
            flush(r);
        }
    }
    // Inactive nodes: pin to zero so the system is square over all nodes.
    for (int k = 0; k < n; ++k)
        if (!g.active_flags()[k]) trips.emplace_back(k, k, 1.0);

    Eigen::SparseMatrix<double> A(n, n);
    A.setFromTriplets(trips.begin(), trips.end());
    A.makeCompressed();

    Eigen::SparseLU<Eigen::SparseMatrix<double>> lu;
    lu.analyzePattern(A);
    lu.factorize(A);
    if (lu.info() != Eigen::Success)
        throw SolveFailure("admissible_stress: sparse factorization failed");
    Eigen::VectorXd phi_vec = lu.solve(b);
    if (lu.info() != Eigen::Success)
        throw SolveFailure("admissible_stress: sparse solve failed");

    const double scale = std::max(1.0, b.lpNorm<Eigen::Infinity>());
    const double res = (A * phi_vec - b).lpNorm<Eigen::Infinity>();
    if (!(res <= opts.tol * scale))
        throw SolveFailure("admissible_stress: residual " + std::to_string(res) +
                           " above tolerance");

    AdmissibleStress out;
    out.phi = ScalarField2(grid);
    for (int k = 0; k < n; ++k) out.phi.values[k] = phi_vec[k];
    out.tau = gradient(out.phi);

    const ScalarField2 div = divergence(out.tau);
    for (int j = 0; j <= g.ny(); ++j)
        for (int i = 0; i <= g.nx(); ++i)
            if (g.is_interior_node(i, j))
                out.div_residual = std::max(out.div_residual, std::abs(div.at(i, j)));

    for (int j = 0; j <= g.ny(); ++j) {
        for (int i = 0; i <= g.nx(); ++i) {
            if (!g.active(i, j) || g.tag(i, j) != BoundaryTag::Neumann) continue;
            const auto faces = g.outward_faces(i, j);
            double err = 0.0;
            for (Face f : faces) {
                const double flux = face_sign(f) * (face_axis(f) == 0 ? out.tau.at(i, j).x
                                                                      : out.tau.at(i, j).y);
                err += (flux - traction(g.x(i), g.y(j), f)) / static_cast<double>(faces.size());
            }
            out.flux_residual = std::max(out.flux_residual, std::abs(err));
        }
    }
    return out;
}

}  // namespace apshear
