#pragma once

#include <array>
#include <variant>
#include <vector>

#include "geofuse/geometry/pose.hpp"
#include "geofuse/geometry/shape.hpp"

namespace geofuse::geom {

/// Flat face: center point, outward unit normal, boundary polygon vertices.
struct PlaneFeature {
    Vec3 center;
    Vec3 normal;
    std::vector<Vec3> boundary;
};

/// Surface of revolution segment. Polyhedron edges are the radius-zero case.
struct CurvedFeature {
    Vec3 center;
    Vec3 axis;
    std::array<Vec3, 2> axis_boundary;
    double radius = 0.0;
};

using SurfaceFeature = std::variant<PlaneFeature, CurvedFeature>;

inline bool is_plane(const SurfaceFeature& f) { return std::holds_alternative<PlaneFeature>(f); }
inline const PlaneFeature& as_plane(const SurfaceFeature& f) { return std::get<PlaneFeature>(f); }
inline const CurvedFeature& as_curved(const SurfaceFeature& f) { return std::get<CurvedFeature>(f); }

/// Box: features 0..5 are the +x,-x,+y,-y,+z,-z faces, 6..17 the twelve
/// edges as radius-zero curved features. Cylinder: 0 is the +z cap, 1 the
/// -z cap, 2 the lateral surface.
std::vector<SurfaceFeature> extract_surface_features(const ObjectModel& model);

/// Face indices adjacent to box edge feature `feature_index` (6..17).
std::array<int, 2> box_edge_parent_faces(int feature_index);

/// Points move by the full rigid transform, directions by rotation only.
SurfaceFeature transform_feature(const SurfaceFeature& f, const Pose& pose);

}  // namespace geofuse::geom
