#include "apshear/operators.hpp"

#include <cmath>

namespace apshear {

std::array<StencilEntry, 3> deriv_stencil(const Grid2& g, int i, int j, int axis) {
    const double h = axis == 0 ? g.hx() : g.hy();
    auto node = [&](int s) {  // offset s along the axis
        return axis == 0 ? std::array<int, 2>{i + s, j} : std::array<int, 2>{i, j + s};
    };
    auto ok = [&](int s) {
        auto [a, b] = node(s);
        return g.active(a, b);
    };
    auto idx = [&](int s) {
        auto [a, b] = node(s);
        return g.id(a, b);
    };

    if (ok(-1) && ok(1))
        return {{{idx(-1), -0.5 / h}, {idx(1), 0.5 / h}, {-1, 0.0}}};
    if (ok(1) && ok(2))  // forward one-sided
        return {{{idx(0), -1.5 / h}, {idx(1), 2.0 / h}, {idx(2), -0.5 / h}}};
    if (ok(-1) && ok(-2))  // backward one-sided
        return {{{idx(0), 1.5 / h}, {idx(-1), -2.0 / h}, {idx(-2), 0.5 / h}}};
    throw InvalidMask("deriv_stencil: mask leaves no second-order stencil at node");
}

VectorField2 gradient(const ScalarField2& u) {
    const Grid2& g = *u.grid;
    VectorField2 out(u.grid);
    for (int j = 0; j <= g.ny(); ++j) {
        for (int i = 0; i <= g.nx(); ++i) {
            if (!g.active(i, j)) continue;
            Vec2 v{0.0, 0.0};
            for (const auto& e : deriv_stencil(g, i, j, 0))
                if (e.node >= 0) v.x += e.coeff * u.values[e.node];
            for (const auto& e : deriv_stencil(g, i, j, 1))
                if (e.node >= 0) v.y += e.coeff * u.values[e.node];
            out.set(i, j, v);
        }
    }
    return out;
}

ScalarField2 divergence(const VectorField2& v) {
    const Grid2& g = *v.grid;
    ScalarField2 out(v.grid);
    for (int j = 0; j <= g.ny(); ++j) {
        for (int i = 0; i <= g.nx(); ++i) {
            if (!g.active(i, j)) continue;
            double d = 0.0;
            for (const auto& e : deriv_stencil(g, i, j, 0))
                if (e.node >= 0) d += e.coeff * v.vx[e.node];
            for (const auto& e : deriv_stencil(g, i, j, 1))
                if (e.node >= 0) d += e.coeff * v.vy[e.node];
            out.at(i, j) = d;
        }
    }
    return out;
}

ScalarField2 curl2(const VectorField2& v) {
    const Grid2& g = *v.grid;
    ScalarField2 out(v.grid);
    for (int j = 0; j <= g.ny(); ++j) {
        for (int i = 0; i <= g.nx(); ++i) {
            if (!g.active(i, j)) continue;
            double c = 0.0;
            for (const auto& e : deriv_stencil(g, i, j, 0))
                if (e.node >= 0) c += e.coeff * v.vy[e.node];
            for (const auto& e : deriv_stencil(g, i, j, 1))
                if (e.node >= 0) c -= e.coeff * v.vx[e.node];
            out.at(i, j) = c;
        }
    }
    return out;
}

std::vector<double> quad_weights(const Grid2& g) {
    std::vector<double> w(g.node_count(), 0.0);
    const double q = 0.25 * g.hx() * g.hy();
    for (int j = 0; j < g.ny(); ++j) {
        for (int i = 0; i < g.nx(); ++i) {
            if (g.active(i, j) && g.active(i + 1, j) && g.active(i, j + 1) &&
                g.active(i + 1, j + 1)) {
                w[g.id(i, j)] += q;
                w[g.id(i + 1, j)] += q;
                w[g.id(i, j + 1)] += q;
                w[g.id(i + 1, j + 1)] += q;
            }
        }
    }
    return w;
}

double integrate(const ScalarField2& f) {
    const std::vector<double> w = quad_weights(*f.grid);
    double s = 0.0;
    for (int k = 0; k < f.grid->node_count(); ++k) s += w[k] * f.values[k];
    return s;
}

double boundary_work(const Grid2& g, const TractionFn& traction, const ScalarField2& u) {
    double s = 0.0;
    auto edge_term = [&](int ia, int ja, int ib, int jb, Face f, double len) {
        if (!g.active(ia, ja) || !g.active(ib, jb)) return;
        const double ta = traction(g.x(ia), g.y(ja), f);
        const double tb = traction(g.x(ib), g.y(jb), f);
        s += 0.5 * len * (ta * u.at(ia, ja) + tb * u.at(ib, jb));
    };
    for (int j = 0; j < g.ny(); ++j) {
        edge_term(0, j, 0, j + 1, Face::XMinus, g.hy());
        edge_term(g.nx(), j, g.nx(), j + 1, Face::XPlus, g.hy());
    }
    for (int i = 0; i < g.nx(); ++i) {
        edge_term(i, 0, i + 1, 0, Face::YMinus, g.hx());
        edge_term(i, g.ny(), i + 1, g.ny(), Face::YPlus, g.hx());
    }
    return s;
}

ScalarField2 gradient_adjoint(const Grid2& g, const std::vector<double>& weights,
                              const VectorField2& sigma) {
    ScalarField2 out(sigma.grid);
    for (int j = 0; j <= g.ny(); ++j) {
        for (int i = 0; i <= g.nx(); ++i) {
            if (!g.active(i, j)) continue;
            const int n = g.id(i, j);
            const double wx = weights[n] * sigma.vx[n];
            const double wy = weights[n] * sigma.vy[n];
            for (const auto& e : deriv_stencil(g, i, j, 0))
                if (e.node >= 0) out.values[e.node] += wx * e.coeff;
            for (const auto& e : deriv_stencil(g, i, j, 1))
                if (e.node >= 0) out.values[e.node] += wy * e.coeff;
        }
    }
    return out;
}

}  // namespace apshear
