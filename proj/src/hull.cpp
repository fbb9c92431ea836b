#include <algorithm>
#include <cmath>
#include <vector>

#include "zekit/klcodes.hpp"

namespace zekit {

namespace {

double cross(cplx o, cplx a, cplx b) {
  return (a.real() - o.real()) * (b.imag() - o.imag()) - (a.imag() - o.imag()) * (b.real() - o.real());
}

double segment_distance(cplx a, cplx b) {
  const cplx ab = b - a;
  const double len2 = std::norm(ab);
  if (len2 == 0.0) return std::abs(a);
  const double t = std::clamp(-(a.real() * ab.real() + a.imag() * ab.imag()) / len2, 0.0, 1.0);
  return std::abs(a + t * ab);
}

// Andrew's monotone chain; counter-clockwise, no repeated endpoint.
std::vector<cplx> convex_hull(std::vector<cplx> pts) {
  std::sort(pts.begin(), pts.end(), [](cplx a, cplx b) {
    return a.real() < b.real() || (a.real() == b.real() && a.imag() < b.imag());
  });
  pts.erase(std::unique(pts.begin(), pts.end(), [](cplx a, cplx b) { return std::abs(a - b) < 1e-15; }), pts.end());
  if (pts.size() < 3) return pts;
  std::vector<cplx> hull(2 * pts.size());
  std::size_t k = 0;
  for (const auto& p : pts) {
    while (k >= 2 && cross(hull[k - 2], hull[k - 1], p) <= 0) --k;
    hull[k++] = p;
  }
  for (std::size_t i = pts.size() - 1, t = k + 1; i > 0; --i) {
    const cplx p = pts[i - 1];
    while (k >= t && cross(hull[k - 2], hull[k - 1], p) <= 0) --k;
    hull[k++] = p;
  }
  hull.resize(k - 1);
  return hull;
}

}  // namespace

double origin_hull_distance(std::span<const cplx> points) {
  const auto hull = convex_hull(std::vector<cplx>(points.begin(), points.end()));
  if (hull.empty()) return 0.0;
  if (hull.size() == 1) return std::abs(hull[0]);
  if (hull.size() == 2) return segment_distance(hull[0], hull[1]);
  bool inside = true;
  double best = std::abs(hull[0]);
  for (std::size_t i = 0; i < hull.size(); ++i) {
    const cplx a = hull[i];
    const cplx b = hull[(i + 1) % hull.size()];
    if (cross(a, b, cplx{0.0, 0.0}) < 0.0) inside = false;
    best = std::min(best, segment_distance(a, b));
  }
  return inside ? 0.0 : best;
}

double hull_distance(const Angle& theta1, const Angle& theta2, bool conj2) {
  const cplx g1 = theta1.gamma();
  const cplx g2 = conj2 ? std::conj(theta2.gamma()) : theta2.gamma();
  const cplx pts[] = {cplx{1.0, 0.0}, g2, g1, g1 * g2};
  return origin_hull_distance(pts);
}

}  // namespace zekit
