#pragma once

#include <cstdint>
#include <functional>
#include <memory>
#include <string>
#include <vector>

#include "apshear/errors.hpp"

namespace apshear {

enum class BoundaryTag : std::uint8_t { None = 0, Dirichlet, Neumann };

/// Outward face directions of a boundary node.
enum class Face : std::uint8_t { XMinus = 0, XPlus, YMinus, YPlus };

struct Vec2 {
    double x = 0.0;
    double y = 0.0;
    double norm_sq() const { return x * x + y * y; }
};

inline Vec2 operator+(Vec2 a, Vec2 b) { return {a.x + b.x, a.y + b.y}; }
inline Vec2 operator-(Vec2 a, Vec2 b) { return {a.x - b.x, a.y - b.y}; }
inline Vec2 operator*(double s, Vec2 a) { return {s * a.x, s * a.y}; }
inline double dot(Vec2 a, Vec2 b) { return a.x * b.x + a.y * b.y; }

/**
 * Node-centered structured grid on a rectangle, with an optional interior
 * mask for non-rectangular domains. nx, ny count cells; nodes are
 * (nx+1) x (ny+1). Every active boundary node carries exactly one tag;
 * the Dirichlet set must be non-empty (the reconstruction needs an anchor).
 */
class Grid2 {
public:
    Grid2(int nx, int ny, double hx, double hy, double x0 = 0.0, double y0 = 0.0);

    int nx() const { return nx_; }
    int ny() const { return ny_; }
    double hx() const { return hx_; }
    double hy() const { return hy_; }
    double x0() const { return x0_; }
    double y0() const { return y0_; }

    int npx() const { return nx_ + 1; }
    int npy() const { return ny_ + 1; }
    int node_count() const { return npx() * npy(); }

    int id(int i, int j) const { return j * npx() + i; }
    double x(int i) const { return x0_ + i * hx_; }
    double y(int j) const { return y0_ + j * hy_; }

    bool in_range(int i, int j) const { return i >= 0 && i <= nx_ && j >= 0 && j <= ny_; }
    bool active(int i, int j) const { return in_range(i, j) && active_[id(i, j)]; }

    BoundaryTag tag(int i, int j) const { return tags_[id(i, j)]; }

    /// Active node on the rectangle edge or next to an inactive node.
    bool is_boundary_node(int i, int j) const;
    /// Active node with all four neighbours active (the open-domain set).
    bool is_interior_node(int i, int j) const;

    /// Outward faces of a boundary node (missing-neighbour directions).
    std::vector<Face> outward_faces(int i, int j) const;

    /// Deactivate nodes where keep(x, y) is false. Call before tagging.
    void apply_mask(const std::function<bool(double, double)>& keep);

    /// Tag the four rectangle edges. Corners take the Dirichlet tag when
    /// either adjoining edge is Dirichlet.
    void tag_edges(BoundaryTag left, BoundaryTag right, BoundaryTag bottom, BoundaryTag top);

    /// Tag all mask-created boundary nodes (inner boundaries).
    void tag_inner_boundary(BoundaryTag t);

    void set_tag(int i, int j, BoundaryTag t);

    /// Checks the structural invariants; throws DomainError on violation.
    void validate() const;

    const std::vector<std::uint8_t>& active_flags() const { return active_; }
    const std::vector<BoundaryTag>& tags() const { return tags_; }

private:
    int nx_, ny_;
    double hx_, hy_;
    double x0_, y0_;
    std::vector<std::uint8_t> active_;
    std::vector<BoundaryTag> tags_;
};

using GridPtr = std::shared_ptr<const Grid2>;

/// Immutable scalar field over the nodes of a grid.
struct ScalarField2 {
    GridPtr grid;
    std::vector<double> values;

    ScalarField2() = default;
    explicit ScalarField2(GridPtr g, double fill = 0.0)
        : grid(std::move(g)), values(grid->node_count(), fill) {}

    double& at(int i, int j) { return values[grid->id(i, j)]; }
    double at(int i, int j) const { return values[grid->id(i, j)]; }

    double max_abs() const;
    void check_finite(const char* what) const;
};

/// Immutable 2-vector field over the nodes of a grid.
struct VectorField2 {
    GridPtr grid;
    std::vector<double> vx;
    std::vector<double> vy;

    VectorField2() = default;
    explicit VectorField2(GridPtr g) : grid(std::move(g)) {
        vx.assign(grid->node_count(), 0.0);
        vy.assign(grid->node_count(), 0.0);
    }

    Vec2 at(int i, int j) const {
        const int k = grid->id(i, j);
        return {vx[k], vy[k]};
    }
    void set(int i, int j, Vec2 v) {
        const int k = grid->id(i, j);
        vx[k] = v.x;
        vy[k] = v.y;
    }

    double max_norm() const;
    void check_finite(const char* what) const;
};

/// Per-node, per-face traction data on the Neumann boundary.
using TractionFn = std::function<double(double x, double y, Face f)>;

/// Convenience: constant traction per rectangle edge.
TractionFn edge_tractions(double left, double right, double bottom, double top);

ScalarField2 make_scalar(GridPtr g, const std::function<double(double, double)>& f);
VectorField2 make_vector(GridPtr g, const std::function<Vec2(double, double)>& f);

// --- serialization ---------------------------------------------------------

/// CSV with header "x,y,value", row-major node order (inactive nodes skipped).
std::string to_csv(const ScalarField2& f);
std::string to_csv(const VectorField2& f);

}  // namespace apshear
