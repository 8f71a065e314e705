#pragma once

#include <Eigen/Core>
#include <Eigen/Geometry>

namespace geofuse::geom {

using Vec3 = Eigen::Vector3d;
using Vec6 = Eigen::Matrix<double, 6, 1>;
using Mat3 = Eigen::Matrix3d;
using Mat6 = Eigen::Matrix<double, 6, 6>;
using Quat = Eigen::Quaterniond;

inline Mat3 skew(const Vec3& v) {
    Mat3 m;
    m << 0.0, -v.z(), v.y(),
         v.z(), 0.0, -v.x(),
        -v.y(), v.x(), 0.0;
    return m;
}

/// Rotation-vector (axis-angle) log of a unit quaternion. Angle in [0, pi]
/// when the quaternion is canonical (w >= 0).
inline Vec3 so3_log(const Quat& q) {
    const double n = q.vec().norm();
    const double w = q.w();
    if (n < 1e-14) {
        // sin(t/2)/t -> 1/2 for t -> 0
        return 2.0 / std::max(w, 1e-14) * q.vec();
    }
    const double angle = 2.0 * std::atan2(n, w);
    return (angle / n) * q.vec();
}

inline Quat so3_exp(const Vec3& phi) {
    const double theta = phi.norm();
    double half_sinc;  // sin(theta/2)/theta
    if (theta < 1e-8) {
        half_sinc = 0.5 - theta * theta / 48.0;
    } else {
        half_sinc = std::sin(0.5 * theta) / theta;
    }
    Quat q(std::cos(0.5 * theta), half_sinc * phi.x(), half_sinc * phi.y(),
           half_sinc * phi.z());
    return q;
}

/// Inverse of the right Jacobian of SO(3): log(Exp(phi) Exp(d)) ~ phi + Jr_inv(phi) d.
inline Mat3 so3_right_jacobian_inv(const Vec3& phi) {
    const double theta = phi.norm();
    const Mat3 px = skew(phi);
    double c;
    if (theta < 1e-6) {
        c = 1.0 / 12.0 + theta * theta / 720.0;
    } else {
        const double half = 0.5 * theta;
        c = 1.0 / (theta * theta) - 0.5 * std::cos(half) / (theta * std::sin(half));
    }
    return Mat3::Identity() + 0.5 * px + c * px * px;
}

/// Rigid transform in SE(3): x_out = q * x + t. The quaternion is kept unit
/// norm and sign-canonical (w >= 0) so equality checks are deterministic.
struct Pose {
    Quat q{1.0, 0.0, 0.0, 0.0};
    Vec3 t{0.0, 0.0, 0.0};

    Pose() = default;
    Pose(const Quat& q_in, const Vec3& t_in) : q(q_in), t(t_in) { canonicalize(); }

    static Pose identity() { return {}; }

    static Pose from_rotation(const Vec3& axis, double angle) {
        return Pose(Quat(Eigen::AngleAxisd(angle, axis.normalized())), Vec3::Zero());
    }

    static Pose from_translation(const Vec3& t) { return Pose(Quat::Identity(), t); }

    void canonicalize() {
        q.normalize();
        if (q.w() < 0.0) q.coeffs() = -q.coeffs();
    }

    Vec3 point(const Vec3& p) const { return q * p + t; }
    Vec3 direction(const Vec3& v) const { return q * v; }

    Mat3 rotation() const { return q.toRotationMatrix(); }
};

inline Pose compose(const Pose& a, const Pose& b) {
    return Pose(a.q * b.q, a.t + a.q * b.t);
}

inline Pose inverse(const Pose& p) {
    const Quat qi = p.q.conjugate();
    return Pose(qi, -(qi * p.t));
}

/// relative(a, b) = a^-1 * b, so compose(a, relative(a, b)) == b.
inline Pose relative(const Pose& a, const Pose& b) {
    return compose(inverse(a), b);
}

/// Minimal coordinates of a pose: rotation vector stacked over translation.
/// Exact inverse of se3_exp (the product-manifold SO(3) x R^3 chart).
inline Vec6 se3_log(const Pose& p) {
    Vec6 v;
    v.head<3>() = so3_log(p.q);
    v.tail<3>() = p.t;
    return v;
}

inline Pose se3_exp(const Vec6& v) {
    return Pose(so3_exp(v.head<3>()), v.tail<3>());
}

/// Right-increment retraction used by the optimizer: p * exp(delta).
inline Pose retract(const Pose& p, const Vec6& delta) {
    return compose(p, se3_exp(delta));
}

inline double rotation_angle(const Pose& p) { return so3_log(p.q).norm(); }

inline bool approx_equal(const Pose& a, const Pose& b, double tol = 1e-9) {
    return rotation_angle(relative(a, b)) <= tol && (a.t - b.t).norm() <= tol;
}

}  // namespace geofuse::geom
