#pragma once

#include <algorithm>
#include <cmath>
#include <numbers>

namespace auvnav {

struct Vec2 {
    double x = 0.0;
    double y = 0.0;

    constexpr Vec2 operator+(Vec2 o) const { return {x + o.x, y + o.y}; }
    constexpr Vec2 operator-(Vec2 o) const { return {x - o.x, y - o.y}; }
    constexpr Vec2 operator*(double s) const { return {x * s, y * s}; }
    constexpr bool operator==(const Vec2&) const = default;
};

inline constexpr double dot(Vec2 a, Vec2 b) { return a.x * b.x + a.y * b.y; }
inline constexpr double cross(Vec2 a, Vec2 b) { return a.x * b.y - a.y * b.x; }
inline double norm(Vec2 a) { return std::hypot(a.x, a.y); }
inline double distance(Vec2 a, Vec2 b) { return norm(b - a); }

// Unit vector; (1, 0) for a near-zero input.
inline Vec2 normalized(Vec2 a) {
    const double n = norm(a);
    if (n < 1e-12) return {1.0, 0.0};
    return {a.x / n, a.y / n};
}

inline Vec2 rotated(Vec2 a, double angle_rad) {
    const double c = std::cos(angle_rad), s = std::sin(angle_rad);
    return {c * a.x - s * a.y, s * a.x + c * a.y};
}

// Wrap an angle to (-pi, pi].
inline double wrap_angle(double a) {
    const double two_pi = 2.0 * std::numbers::pi;
    a = std::fmod(a, two_pi);
    if (a <= -std::numbers::pi) a += two_pi;
    if (a > std::numbers::pi) a -= two_pi;
    return a;
}

// Unsigned angle between two vectors, in [0, pi].
inline double angle_between(Vec2 a, Vec2 b) {
    return std::abs(std::atan2(cross(a, b), dot(a, b)));
}

inline constexpr double deg_to_rad(double d) { return d * std::numbers::pi / 180.0; }
inline constexpr double rad_to_deg(double r) { return r * 180.0 / std::numbers::pi; }

// Distance from point p to segment [a, b].
inline double point_segment_distance(Vec2 p, Vec2 a, Vec2 b) {
    const Vec2 ab = b - a;
    const double len2 = dot(ab, ab);
    if (len2 < 1e-24) return distance(p, a);
    double t = dot(p - a, ab) / len2;
    t = std::clamp(t, 0.0, 1.0);
    return distance(p, a + ab * t);
}

}  // namespace auvnav
