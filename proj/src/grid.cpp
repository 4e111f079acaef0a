#include "apshear/grid.hpp"

#include <cmath>
#include <sstream>

namespace apshear {

Grid2::Grid2(int nx, int ny, double hx, double hy, double x0, double y0)
    : nx_(nx), ny_(ny), hx_(hx), hy_(hy), x0_(x0), y0_(y0) {
    if (nx < 2 || ny < 2) throw DomainError("Grid2: nx and ny must be >= 2");
    if (!(hx > 0.0) || !(hy > 0.0)) throw DomainError("Grid2: spacings must be positive");
    active_.assign(node_count(), 1);
    tags_.assign(node_count(), BoundaryTag::None);
}

bool Grid2::is_boundary_node(int i, int j) const {
    if (!active(i, j)) return false;
    if (i == 0 || i == nx_ || j == 0 || j == ny_) return true;
    return !active(i - 1, j) || !active(i + 1, j) || !active(i, j - 1) || !active(i, j + 1);
}

bool Grid2::is_interior_node(int i, int j) const {
    return active(i, j) && !is_boundary_node(i, j);
}

std::vector<Face> Grid2::outward_faces(int i, int j) const {
    std::vector<Face> faces;
    if (i == 0 || !active(i - 1, j)) faces.push_back(Face::XMinus);
    if (i == nx_ || !active(i + 1, j)) faces.push_back(Face::XPlus);
    if (j == 0 || !active(i, j - 1)) faces.push_back(Face::YMinus);
    if (j == ny_ || !active(i, j + 1)) faces.push_back(Face::YPlus);
    return faces;
}

void Grid2::apply_mask(const std::function<bool(double, double)>& keep) {
    for (int j = 0; j <= ny_; ++j)
        for (int i = 0; i <= nx_; ++i)
            if (!keep(x(i), y(j))) active_[id(i, j)] = 0;
}

void Grid2::tag_edges(BoundaryTag left, BoundaryTag right, BoundaryTag bottom, BoundaryTag top) {
    auto prefer = [](BoundaryTag a, BoundaryTag b) {
        return (a == BoundaryTag::Dirichlet || b == BoundaryTag::Dirichlet)
                   ? BoundaryTag::Dirichlet
                   : a;
    };
    for (int j = 0; j <= ny_; ++j) {
        if (active(0, j)) tags_[id(0, j)] = left;
        if (active(nx_, j)) tags_[id(nx_, j)] = right;
    }
    for (int i = 0; i <= nx_; ++i) {
        if (active(i, 0)) tags_[id(i, 0)] = bottom;
        if (active(i, ny_)) tags_[id(i, ny_)] = top;
    }
    if (active(0, 0)) tags_[id(0, 0)] = prefer(left, bottom);
    if (active(nx_, 0)) tags_[id(nx_, 0)] = prefer(right, bottom);
    if (active(0, ny_)) tags_[id(0, ny_)] = prefer(left, top);
    if (active(nx_, ny_)) tags_[id(nx_, ny_)] = prefer(right, top);
}

void Grid2::tag_inner_boundary(BoundaryTag t) {
    for (int j = 1; j < ny_; ++j)
        for (int i = 1; i < nx_; ++i)
            if (is_boundary_node(i, j) && tags_[id(i, j)] == BoundaryTag::None)
                tags_[id(i, j)] = t;
}

void Grid2::set_tag(int i, int j, BoundaryTag t) { tags_[id(i, j)] = t; }

void Grid2::validate() const {
    bool have_dirichlet = false;
    for (int j = 0; j <= ny_; ++j) {
        for (int i = 0; i <= nx_; ++i) {
            const int k = id(i, j);
            if (!active_[k]) continue;
            if (is_boundary_node(i, j)) {
                if (tags_[k] == BoundaryTag::None)
                    throw DomainError("Grid2: untagged boundary node at (" + std::to_string(i) +
                                      "," + std::to_string(j) + ")");
                if (tags_[k] == BoundaryTag::Dirichlet) have_dirichlet = true;
            } else if (tags_[k] != BoundaryTag::None) {
                throw DomainError("Grid2: interior node carries a boundary tag");
            }
        }
    }
    if (!have_dirichlet) throw DomainError("Grid2: Dirichlet boundary must be non-empty");
}

double ScalarField2::max_abs() const {
    double m = 0.0;
    for (int j = 0; j <= grid->ny(); ++j)
        for (int i = 0; i <= grid->nx(); ++i)
            if (grid->active(i, j)) m = std::max(m, std::abs(at(i, j)));
    return m;
}

void ScalarField2::check_finite(const char* what) const {
    for (int j = 0; j <= grid->ny(); ++j)
        for (int i = 0; i <= grid->nx(); ++i)
            if (grid->active(i, j) && !std::isfinite(at(i, j)))
                throw DomainError(std::string(what) + ": non-finite value at node");
}

double VectorField2::max_norm() const {
    double m = 0.0;
    for (int j = 0; j <= grid->ny(); ++j)
        for (int i = 0; i <= grid->nx(); ++i)
            if (grid->active(i, j)) m = std::max(m, std::sqrt(at(i, j).norm_sq()));
    return m;
}

void VectorField2::check_finite(const char* what) const {
    for (int j = 0; j <= grid->ny(); ++j)
        for (int i = 0; i <= grid->nx(); ++i) {
            if (!grid->active(i, j)) continue;
            const Vec2 v = at(i, j);
            if (!std::isfinite(v.x) || !std::isfinite(v.y))
                throw DomainError(std::string(what) + ": non-finite vector at node");
        }
}

TractionFn edge_tractions(double left, double right, double bottom, double top) {
    return [=](double, double, Face f) {
        switch (f) {
            case Face::XMinus: return left;
            case Face::XPlus: return right;
            case Face::YMinus: return bottom;
            case Face::YPlus: return top;
        }
        return 0.0;
    };
}

ScalarField2 make_scalar(GridPtr g, const std::function<double(double, double)>& f) {
    ScalarField2 out(g);
    for (int j = 0; j <= g->ny(); ++j)
        for (int i = 0; i <= g->nx(); ++i)
            out.at(i, j) = f(g->x(i), g->y(j));
    return out;
}

VectorField2 make_vector(GridPtr g, const std::function<Vec2(double, double)>& f) {
    VectorField2 out(g);
    for (int j = 0; j <= g->ny(); ++j)
        for (int i = 0; i <= g->nx(); ++i)
            out.set(i, j, f(g->x(i), g->y(j)));
    return out;
}

std::string to_csv(const ScalarField2& f) {
    std::ostringstream os;
    os.precision(17);
    os << "x,y,value\n";
    const Grid2& g = *f.grid;
    for (int j = 0; j <= g.ny(); ++j)
        for (int i = 0; i <= g.nx(); ++i)
            if (g.active(i, j)) os << g.x(i) << ',' << g.y(j) << ',' << f.at(i, j) << '\n';
    return os.str();
}

std::string to_csv(const VectorField2& f) {
    std::ostringstream os;
    os.precision(17);
    os << "x,y,vx,vy\n";
    const Grid2& g = *f.grid;
    for (int j = 0; j <= g.ny(); ++j)
        for (int i = 0; i <= g.nx(); ++i)
            if (g.active(i, j)) {
                const Vec2 v = f.at(i, j);
                os << g.x(i) << ',' << g.y(j) << ',' << v.x << ',' << v.y << '\n';
            }
    return os.str();
}

}  // namespace apshear
