#pragma once

#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "geofuse/geometry/pose.hpp"

namespace geofuse::geom {

struct Box {
    Vec3 extents;  // full side lengths, meters
};

struct Cylinder {
    double radius = 0.0;
    double height = 0.0;  // along the body z axis
};

using Shape = std::variant<Box, Cylinder>;

/// A rigid convex primitive with surface points sampled on a fixed grid.
/// Cylinders are rotationally symmetric about their body z axis and declare
/// it as symmetry_axis.
struct ObjectModel {
    int class_id = 0;
    std::string name;
    Shape shape{Box{Vec3(0.1, 0.1, 0.1)}};
    std::optional<Vec3> symmetry_axis;
    std::vector<Vec3> surface_points;  // body frame, on the shape boundary

    bool is_box() const { return std::holds_alternative<Box>(shape); }
    const Box& box() const { return std::get<Box>(shape); }
    const Cylinder& cylinder() const { return std::get<Cylinder>(shape); }

    /// Half extents of the body-frame bounding box (box: extents/2,
    /// cylinder: [r, r, h/2]).
    Vec3 half_extents() const;

    /// Largest distance from the body origin to the surface.
    double bounding_radius() const { return half_extents().norm(); }
};

/// Samples boundary points on a grid with the given spacing. Face grids
/// include the face edges, so every point satisfies the implicit boundary
/// equation exactly.
std::vector<Vec3> sample_surface_points(const Shape& shape, double spacing);

/// Exact signed distance to the shape boundary, negative inside.
double signed_distance(const Shape& shape, const Vec3& p_body);

ObjectModel make_model(int class_id, std::string name, Shape shape, double spacing);

}  // namespace geofuse::geom
