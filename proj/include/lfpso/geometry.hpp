#pragma once

#include <algorithm>
#include <cmath>
#include <limits>
#include <optional>

namespace lfpso {

inline constexpr double kPi = 3.14159265358979323846;
inline constexpr double kTwoPi = 2.0 * kPi;

struct Vec2 {
    double x = 0.0;
    double y = 0.0;

    constexpr Vec2 operator+(Vec2 o) const noexcept { return {x + o.x, y + o.y}; }
    constexpr Vec2 operator-(Vec2 o) const noexcept { return {x - o.x, y - o.y}; }
    constexpr Vec2 operator*(double s) const noexcept { return {x * s, y * s}; }
    constexpr Vec2 operator/(double s) const noexcept { return {x / s, y / s}; }
    constexpr Vec2& operator+=(Vec2 o) noexcept { x += o.x; y += o.y; return *this; }
    constexpr bool operator==(const Vec2&) const noexcept = default;

    constexpr double dot(Vec2 o) const noexcept { return x * o.x + y * o.y; }
    double norm() const noexcept { return std::hypot(x, y); }
    constexpr double norm_sq() const noexcept { return x * x + y * y; }
};

constexpr Vec2 operator*(double s, Vec2 v) noexcept { return v * s; }

inline double distance(Vec2 a, Vec2 b) noexcept { return (a - b).norm(); }

inline Vec2 unit_from_angle(double theta) noexcept {
    return {std::cos(theta), std::sin(theta)};
}

/// Wraps an angle into [0, 2*pi).
inline double wrap_angle(double theta) noexcept {
    double t = std::fmod(theta, kTwoPi);
    if (t < 0.0) t += kTwoPi;
    // fmod of a value just below 2*pi can round back up to 2*pi
    if (t >= kTwoPi) t -= kTwoPi;
    return t;
}

/// Axis-aligned rectangle, min corner inclusive of its boundary.
struct Rect {
    double xmin = 0.0, ymin = 0.0, xmax = 0.0, ymax = 0.0;

    constexpr bool operator==(const Rect&) const = default;

    constexpr double width() const noexcept { return xmax - xmin; }
    constexpr double height() const noexcept { return ymax - ymin; }

    constexpr bool contains(Vec2 p) const noexcept {
        return p.x >= xmin && p.x <= xmax && p.y >= ymin && p.y <= ymax;
    }
    constexpr bool contains_interior(Vec2 p) const noexcept {
        return p.x > xmin && p.x < xmax && p.y > ymin && p.y < ymax;
    }
    constexpr Rect inflated(double m) const noexcept {
        return {xmin - m, ymin - m, xmax + m, ymax + m};
    }
};

/// First intersection parameter t >= 0 of the ray origin + t*dir with the
/// rectangle (slab test). Returns nullopt on a miss. A ray starting inside
/// reports t = 0.
inline std::optional<double> ray_rect_hit(Vec2 origin, Vec2 dir, const Rect& r) noexcept {
    double tmin = 0.0;
    double tmax = std::numeric_limits<double>::infinity();
    const double o[2] = {origin.x, origin.y};
    const double d[2] = {dir.x, dir.y};
    const double lo[2] = {r.xmin, r.ymin};
    const double hi[2] = {r.xmax, r.ymax};
    for (int axis = 0; axis < 2; ++axis) {
        if (d[axis] == 0.0) {
            if (o[axis] < lo[axis] || o[axis] > hi[axis]) return std::nullopt;
        } else {
            double t1 = (lo[axis] - o[axis]) / d[axis];
            double t2 = (hi[axis] - o[axis]) / d[axis];
            if (t1 > t2) std::swap(t1, t2);
            tmin = std::max(tmin, t1);
            tmax = std::min(tmax, t2);
            if (tmin > tmax) return std::nullopt;
        }
    }
    return tmin;
}

/// Distance along dir (unit length) from an interior point to the boundary of
/// the box [0,w] x [0,h].
inline double ray_box_exit(Vec2 origin, Vec2 dir, double w, double h) noexcept {
    double t = std::numeric_limits<double>::infinity();
    if (dir.x > 0.0) t = std::min(t, (w - origin.x) / dir.x);
    if (dir.x < 0.0) t = std::min(t, (0.0 - origin.x) / dir.x);
    if (dir.y > 0.0) t = std::min(t, (h - origin.y) / dir.y);
    if (dir.y < 0.0) t = std::min(t, (0.0 - origin.y) / dir.y);
    return std::max(t, 0.0);
}

} // namespace lfpso
