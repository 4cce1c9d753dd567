#pragma once

// Planar primitives used across the engine: points, axis-aligned rectangles,
// square (sup-norm) annuli, exact tessellation and segment intersection.
// Annuli are sup-norm boxes throughout; Euclidean disks are never used for
// annulus membership.

#include <cmath>
#include <stdexcept>
#include <string>
#include <vector>

namespace perc {

struct Point {
  double x = 0.0;
  double y = 0.0;
};

inline double dist2(const Point& a, const Point& b) {
  const double dx = a.x - b.x;
  const double dy = a.y - b.y;
  return dx * dx + dy * dy;
}

inline double dist(const Point& a, const Point& b) { return std::sqrt(dist2(a, b)); }

// Sup-norm distance from the point to a center.
inline double sup_dist(const Point& p, const Point& c) {
  return std::max(std::abs(p.x - c.x), std::abs(p.y - c.y));
}

struct Rect {
  double x0 = 0.0;
  double x1 = 0.0;
  double y0 = 0.0;
  double y1 = 0.0;

  double width() const { return x1 - x0; }
  double height() const { return y1 - y0; }
  double area() const { return width() * height(); }
  bool valid() const { return std::isfinite(x0) && std::isfinite(x1) && std::isfinite(y0) &&
                              std::isfinite(y1) && x0 < x1 && y0 < y1; }
  // Closed containment.
  bool contains(const Point& p) const {
    return p.x >= x0 && p.x <= x1 && p.y >= y0 && p.y <= y1;
  }
  Rect enlarged(double margin) const { return Rect{x0 - margin, x1 + margin, y0 - margin, y1 + margin}; }
  bool operator==(const Rect& o) const = default;
};

inline Rect square(double side) { return Rect{0.0, side, 0.0, side}; }

inline void require_valid(const Rect& r, const char* what) {
  if (!r.valid()) throw std::invalid_argument(std::string(what) + ": invalid rectangle");
}

inline bool rects_overlap(const Rect& a, const Rect& b) {
  return a.x0 <= b.x1 && b.x0 <= a.x1 && a.y0 <= b.y1 && b.y0 <= a.y1;
}

// Sup-norm annulus Lambda_c(r_out) \ Lambda_c(r_in).
struct SquareAnnulus {
  Point center;
  double r_in = 0.0;
  double r_out = 0.0;

  bool valid() const { return r_in > 0.0 && r_in < r_out; }
  bool contains(const Point& p) const {
    const double d = sup_dist(p, center);
    return d > r_in && d <= r_out;
  }
  // The annulus as a union of four closed bands (top, bottom, left, right).
  std::vector<Rect> bands() const {
    const double cx = center.x, cy = center.y;
    return {
        Rect{cx - r_out, cx + r_out, cy + r_in, cy + r_out},   // top
        Rect{cx - r_out, cx + r_out, cy - r_out, cy - r_in},   // bottom
        Rect{cx - r_out, cx - r_in, cy - r_in, cy + r_in},     // left
        Rect{cx + r_in, cx + r_out, cy - r_in, cy + r_in},     // right
    };
  }
};

// Exact disjointness of two sup-norm annuli via their band decompositions.
inline bool annuli_disjoint(const SquareAnnulus& a, const SquareAnnulus& b) {
  for (const Rect& ra : a.bands())
    for (const Rect& rb : b.bands())
      if (rects_overlap(ra, rb)) return false;
  return true;
}

// Disjoint cover of `rect` by side x side squares in row-major order.
// Rect dimensions must be integer multiples of `side`.
inline std::vector<Rect> tessellate(const Rect& rect, double side) {
  require_valid(rect, "tessellate");
  if (!(side > 0.0)) throw std::invalid_argument("tessellate: side must be positive");
  const double wq = rect.width() / side;
  const double hq = rect.height() / side;
  const long long nx = llround(wq);
  const long long ny = llround(hq);
  const double tol = 1e-9;
  if (nx < 1 || ny < 1 || std::abs(wq - double(nx)) > tol || std::abs(hq - double(ny)) > tol)
    throw std::invalid_argument("tessellate: rect dimensions are not integer multiples of side");
  std::vector<Rect> cells;
  cells.reserve(std::size_t(nx * ny));
  for (long long j = 0; j < ny; ++j)
    for (long long i = 0; i < nx; ++i)
      cells.push_back(Rect{rect.x0 + double(i) * side, rect.x0 + double(i + 1) * side,
                           rect.y0 + double(j) * side, rect.y0 + double(j + 1) * side});
  return cells;
}

namespace detail {
inline int orientation(const Point& a, const Point& b, const Point& c) {
  const double v = (b.x - a.x) * (c.y - a.y) - (b.y - a.y) * (c.x - a.x);
  if (v > 0.0) return 1;
  if (v < 0.0) return -1;
  return 0;
}
inline bool on_segment(const Point& a, const Point& b, const Point& p) {
  return std::min(a.x, b.x) <= p.x && p.x <= std::max(a.x, b.x) &&
         std::min(a.y, b.y) <= p.y && p.y <= std::max(a.y, b.y);
}
}  // namespace detail

// True iff the closed segments [a1,a2] and [b1,b2] share at least one point.
inline bool segment_intersects(const Point& a1, const Point& a2, const Point& b1, const Point& b2) {
  using detail::on_segment;
  using detail::orientation;
  const int o1 = orientation(a1, a2, b1);
  const int o2 = orientation(a1, a2, b2);
  const int o3 = orientation(b1, b2, a1);
  const int o4 = orientation(b1, b2, a2);
  if (o1 != o2 && o3 != o4) return true;
  if (o1 == 0 && on_segment(a1, a2, b1)) return true;
  if (o2 == 0 && on_segment(a1, a2, b2)) return true;
  if (o3 == 0 && on_segment(b1, b2, a1)) return true;
  if (o4 == 0 && on_segment(b1, b2, a2)) return true;
  return false;
}

}  // namespace perc
