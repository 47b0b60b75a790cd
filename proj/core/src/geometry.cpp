#include "ccuf/geometry.hpp"

#include <cmath>
#include <stdexcept>

namespace ccuf {

HexCoord point_to_hex(Vec2 p, double cell_radius) {
  const double qf = (std::sqrt(3.0) / 3.0 * p.x - p.y / 3.0) / cell_radius;
  const double rf = (2.0 / 3.0 * p.y) / cell_radius;
  const double sf = -qf - rf;
  double q = std::round(qf);
  double r = std::round(rf);
  const double s = std::round(sf);
  const double dq = std::abs(q - qf);
  const double dr = std::abs(r - rf);
  const double ds = std::abs(s - sf);
  if (dq > dr && dq > ds) {
    q = -r - s;
  } else if (dr > ds) {
    r = -q - s;
  }
  return {static_cast<int>(q), static_cast<int>(r)};
}

int reuse_label(HexCoord h, int w, int z) {
  const int n = w * w + w * z + z * z;
  if (n <= 0) throw std::invalid_argument("reuse_label: w and z must not both be zero");
  const int f = (w * h.r - z * h.q) % n;
  return f < 0 ? f + n : f;
}

}  // namespace ccuf
