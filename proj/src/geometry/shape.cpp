#include "geofuse/geometry/shape.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace geofuse::geom {

namespace {

int grid_count(double extent, double spacing) {
    return std::max(2, static_cast<int>(std::lround(extent / spacing)) + 1);
}

void sample_box(const Box& box, double spacing, std::vector<Vec3>& out) {
    const Vec3 h = 0.5 * box.extents;
    const int nx = grid_count(box.extents.x(), spacing);
    const int ny = grid_count(box.extents.y(), spacing);
    const int nz = grid_count(box.extents.z(), spacing);

    auto lin = [](double lo, double hi, int n, int i) {
        return lo + (hi - lo) * static_cast<double>(i) / static_cast<double>(n - 1);
    };

    // +-x faces
    for (int iy = 0; iy < ny; ++iy)
        for (int iz = 0; iz < nz; ++iz) {
            const double y = lin(-h.y(), h.y(), ny, iy);
            const double z = lin(-h.z(), h.z(), nz, iz);
            out.emplace_back(h.x(), y, z);
            out.emplace_back(-h.x(), y, z);
        }
    // +-y faces (interior grid in x to avoid duplicating the x-face edges)
    for (int ix = 1; ix + 1 < nx; ++ix)
        for (int iz = 0; iz < nz; ++iz) {
            const double x = lin(-h.x(), h.x(), nx, ix);
            const double z = lin(-h.z(), h.z(), nz, iz);
            out.emplace_back(x, h.y(), z);
            out.emplace_back(x, -h.y(), z);
        }
    // +-z faces
    for (int ix = 1; ix + 1 < nx; ++ix)
        for (int iy = 1; iy + 1 < ny; ++iy) {
            const double x = lin(-h.x(), h.x(), nx, ix);
            const double y = lin(-h.y(), h.y(), ny, iy);
            out.emplace_back(x, y, h.z());
            out.emplace_back(x, y, -h.z());
        }
}

void sample_cylinder(const Cylinder& cyl, double spacing, std::vector<Vec3>& out) {
    const double half_h = 0.5 * cyl.height;
    const int n_ang = std::max(8, static_cast<int>(std::lround(2.0 * M_PI * cyl.radius / spacing)));
    const int n_z = grid_count(cyl.height, spacing);

    // lateral surface
    for (int iz = 0; iz < n_z; ++iz) {
        const double z = -half_h + cyl.height * static_cast<double>(iz) / (n_z - 1);
        for (int ia = 0; ia < n_ang; ++ia) {
            const double a = 2.0 * M_PI * ia / n_ang;
            out.emplace_back(cyl.radius * std::cos(a), cyl.radius * std::sin(a), z);
        }
    }
    // caps: concentric rings (the rim ring already emitted above)
    const int n_r = std::max(1, static_cast<int>(std::lround(cyl.radius / spacing)));
    for (int ir = 0; ir < n_r; ++ir) {
        const double r = cyl.radius * static_cast<double>(ir) / n_r;
        const int n_a = ir == 0 ? 1 : std::max(6, static_cast<int>(std::lround(2.0 * M_PI * r / spacing)));
        for (int ia = 0; ia < n_a; ++ia) {
            const double a = 2.0 * M_PI * ia / n_a;
            const double x = r * std::cos(a);
            const double y = r * std::sin(a);
            out.emplace_back(x, y, half_h);
            out.emplace_back(x, y, -half_h);
        }
    }
}

}  // namespace

std::vector<Vec3> sample_surface_points(const Shape& shape, double spacing) {
    if (spacing <= 0.0) throw std::invalid_argument("spacing must be positive");
    std::vector<Vec3> out;
    if (const auto* box = std::get_if<Box>(&shape)) {
        if (box->extents.minCoeff() <= 0.0)
            throw std::invalid_argument("box extents must be positive");
        sample_box(*box, spacing, out);
    } else {
        const auto& cyl = std::get<Cylinder>(shape);
        if (cyl.radius <= 0.0 || cyl.height <= 0.0)
            throw std::invalid_argument("cylinder dims must be positive");
        sample_cylinder(cyl, spacing, out);
    }
    return out;
}

double signed_distance(const Shape& shape, const Vec3& p) {
    if (const auto* box = std::get_if<Box>(&shape)) {
        const Vec3 q = p.cwiseAbs() - 0.5 * box->extents;
        const Vec3 outside = q.cwiseMax(0.0);
        const double inside = std::min(q.maxCoeff(), 0.0);
        return outside.norm() + inside;
    }
    const auto& cyl = std::get<Cylinder>(shape);
    const double dr = std::hypot(p.x(), p.y()) - cyl.radius;
    const double dz = std::abs(p.z()) - 0.5 * cyl.height;
    const double outside = std::hypot(std::max(dr, 0.0), std::max(dz, 0.0));
    const double inside = std::min(std::max(dr, dz), 0.0);
    return outside + inside;
}

Vec3 ObjectModel::half_extents() const {
    if (is_box()) return 0.5 * box().extents;
    const auto& c = cylinder();
    return Vec3(c.radius, c.radius, 0.5 * c.height);
}

ObjectModel make_model(int class_id, std::string name, Shape shape, double spacing) {
    ObjectModel m;
    m.class_id = class_id;
    m.name = std::move(name);
    m.shape = std::move(shape);
    if (std::holds_alternative<Cylinder>(m.shape)) m.symmetry_axis = Vec3::UnitZ();
    m.surface_points = sample_surface_points(m.shape, spacing);
    return m;
}

}  // namespace geofuse::geom
