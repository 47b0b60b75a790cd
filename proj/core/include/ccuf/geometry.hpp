#pragma once

#include <array>
#include <cmath>
#include <compare>
#include <cstddef>
#include <functional>

namespace ccuf {

struct Vec2 {
  double x = 0.0;
  double y = 0.0;

  friend constexpr Vec2 operator+(Vec2 a, Vec2 b) { return {a.x + b.x, a.y + b.y}; }
  friend constexpr Vec2 operator-(Vec2 a, Vec2 b) { return {a.x - b.x, a.y - b.y}; }
  friend constexpr Vec2 operator*(Vec2 a, double s) { return {a.x * s, a.y * s}; }
  friend constexpr Vec2 operator*(double s, Vec2 a) { return {a.x * s, a.y * s}; }
  friend constexpr bool operator==(Vec2, Vec2) = default;

  double norm() const { return std::hypot(x, y); }
  constexpr double norm2() const { return x * x + y * y; }
};

inline double distance(Vec2 a, Vec2 b) { return (a - b).norm(); }
constexpr double distance2(Vec2 a, Vec2 b) { return (a - b).norm2(); }

struct Vec3 {
  double x = 0.0;
  double y = 0.0;
  double z = 0.0;
  friend constexpr bool operator==(Vec3, Vec3) = default;
};

inline double distance(Vec3 a, Vec3 b) {
  return std::sqrt((a.x - b.x) * (a.x - b.x) + (a.y - b.y) * (a.y - b.y) + (a.z - b.z) * (a.z - b.z));
}

/// Axis-aligned rectangle; containment is closed on all four edges.
struct Rect {
  double x_min = 0.0;
  double y_min = 0.0;
  double x_max = 0.0;
  double y_max = 0.0;

  constexpr bool contains(Vec2 p) const {
    return p.x >= x_min && p.x <= x_max && p.y >= y_min && p.y <= y_max;
  }
  constexpr Vec2 center() const { return {(x_min + x_max) / 2, (y_min + y_max) / 2}; }
  constexpr double area() const { return (x_max - x_min) * (y_max - y_min); }
  friend constexpr bool operator==(const Rect&, const Rect&) = default;
};

/// Axial coordinates on a pointy-top hexagonal lattice.
struct HexCoord {
  int q = 0;
  int r = 0;

  friend constexpr HexCoord operator+(HexCoord a, HexCoord b) { return {a.q + b.q, a.r + b.r}; }
  friend constexpr HexCoord operator-(HexCoord a, HexCoord b) { return {a.q - b.q, a.r - b.r}; }
  friend constexpr HexCoord operator*(HexCoord a, int k) { return {a.q * k, a.r * k}; }
  friend constexpr auto operator<=>(HexCoord, HexCoord) = default;
};

// Counter-clockwise order; direction i+1 is direction i turned by 60 degrees.
inline constexpr std::array<HexCoord, 6> kHexDirections{{
    {1, 0}, {0, 1}, {-1, 1}, {-1, 0}, {0, -1}, {1, -1},
}};

constexpr HexCoord hex_direction(int i) { return kHexDirections[static_cast<std::size_t>(((i % 6) + 6) % 6)]; }

/// Squared reuse distance in units of the lattice spacing: q^2 + qr + r^2.
constexpr int hex_norm2(HexCoord h) { return h.q * h.q + h.q * h.r + h.r * h.r; }

constexpr int hex_distance(HexCoord a, HexCoord b) {
  const HexCoord d = a - b;
  const int s = -d.q - d.r;
  const int aq = d.q < 0 ? -d.q : d.q;
  const int ar = d.r < 0 ? -d.r : d.r;
  const int as = s < 0 ? -s : s;
  return (aq + ar + as) / 2;
}

/// Centre of a hexagonal cell with circumradius `cell_radius`.
inline Vec2 hex_to_point(HexCoord h, double cell_radius) {
  return {cell_radius * std::sqrt(3.0) * (h.q + h.r / 2.0), cell_radius * 1.5 * h.r};
}

/// Cell containing `p`.
HexCoord point_to_hex(Vec2 p, double cell_radius);

/// Reuse label in [0, w^2+wz+z^2). Cells with equal label are co-channel under (w, z).
int reuse_label(HexCoord h, int w, int z);

}  // namespace ccuf

template <>
struct std::hash<ccuf::HexCoord> {
  std::size_t operator()(const ccuf::HexCoord& h) const noexcept {
    return std::hash<long long>{}((static_cast<long long>(h.q) << 32) ^ static_cast<unsigned int>(h.r));
  }
};
