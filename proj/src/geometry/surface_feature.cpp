#include "geofuse/geometry/surface_feature.hpp"

#include <cmath>
#include <stdexcept>

namespace geofuse::geom {

namespace {

PlaneFeature box_face(const Vec3& h, int axis, double sign) {
    PlaneFeature f;
    f.normal = Vec3::Zero();
    f.normal[axis] = sign;
    f.center = f.normal.cwiseProduct(h);
    const int u = (axis + 1) % 3;
    const int v = (axis + 2) % 3;
    // counter-clockwise seen from outside
    for (int k = 0; k < 4; ++k) {
        Vec3 p = f.center;
        const double su = (k == 0 || k == 3) ? -1.0 : 1.0;
        const double sv = (k < 2) ? -1.0 : 1.0;
        p[u] = su * h[u];
        p[v] = sv * h[v];
        f.boundary.push_back(p);
    }
    return f;
}

CurvedFeature box_edge(const Vec3& h, int along, double su, double sv) {
    const int u = (along + 1) % 3;
    const int v = (along + 2) % 3;
    CurvedFeature e;
    e.axis = Vec3::Zero();
    e.axis[along] = 1.0;
    Vec3 mid = Vec3::Zero();
    mid[u] = su * h[u];
    mid[v] = sv * h[v];
    e.center = mid;
    Vec3 a = mid, b = mid;
    a[along] = -h[along];
    b[along] = h[along];
    e.axis_boundary = {a, b};
    e.radius = 0.0;
    return e;
}

int face_index(int axis, double sign) { return 2 * axis + (sign > 0 ? 0 : 1); }

}  // namespace

std::vector<SurfaceFeature> extract_surface_features(const ObjectModel& model) {
    std::vector<SurfaceFeature> feats;
    if (model.is_box()) {
        const Vec3 h = 0.5 * model.box().extents;
        for (int axis = 0; axis < 3; ++axis) {
            feats.emplace_back(box_face(h, axis, 1.0));
            feats.emplace_back(box_face(h, axis, -1.0));
        }
        for (int along = 0; along < 3; ++along)
            for (double su : {1.0, -1.0})
                for (double sv : {1.0, -1.0})
                    feats.emplace_back(box_edge(h, along, su, sv));
        return feats;
    }

    const auto& cyl = model.cylinder();
    const double hh = 0.5 * cyl.height;
    const int n_rim = 16;
    for (double sign : {1.0, -1.0}) {
        PlaneFeature cap;
        cap.center = Vec3(0.0, 0.0, sign * hh);
        cap.normal = Vec3(0.0, 0.0, sign);
        for (int k = 0; k < n_rim; ++k) {
            const double a = 2.0 * M_PI * k / n_rim;
            cap.boundary.emplace_back(cyl.radius * std::cos(a), cyl.radius * std::sin(a),
                                      sign * hh);
        }
        feats.emplace_back(std::move(cap));
    }
    CurvedFeature lateral;
    lateral.center = Vec3::Zero();
    lateral.axis = Vec3::UnitZ();
    lateral.axis_boundary = {Vec3(0.0, 0.0, -hh), Vec3(0.0, 0.0, hh)};
    lateral.radius = cyl.radius;
    feats.emplace_back(std::move(lateral));
    return feats;
}

std::array<int, 2> box_edge_parent_faces(int feature_index) {
    if (feature_index < 6 || feature_index > 17)
        throw std::out_of_range("not a box edge feature index");
    const int k = feature_index - 6;
    const int along = k / 4;
    const double su = (k % 4) < 2 ? 1.0 : -1.0;
    const double sv = (k % 2) == 0 ? 1.0 : -1.0;
    const int u = (along + 1) % 3;
    const int v = (along + 2) % 3;
    return {face_index(u, su), face_index(v, sv)};
}

SurfaceFeature transform_feature(const SurfaceFeature& f, const Pose& pose) {
    if (is_plane(f)) {
        const auto& p = as_plane(f);
        PlaneFeature out;
        out.center = pose.point(p.center);
        out.normal = pose.direction(p.normal);
        out.boundary.reserve(p.boundary.size());
        for (const auto& b : p.boundary) out.boundary.push_back(pose.point(b));
        return out;
    }
    const auto& c = as_curved(f);
    CurvedFeature out;
    out.center = pose.point(c.center);
    out.axis = pose.direction(c.axis);
    out.axis_boundary = {pose.point(c.axis_boundary[0]), pose.point(c.axis_boundary[1])};
    out.radius = c.radius;
    return out;
}

}  // namespace geofuse::geom
