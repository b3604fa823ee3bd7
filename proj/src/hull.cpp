#include "mfbound/hull.hpp"

#include <algorithm>
#include <cmath>

#include "mfbound/error.hpp"

namespace mfbound {

namespace {

double cross(Complex o, Complex a, Complex b) {
  return (a.real() - o.real()) * (b.imag() - o.imag()) - (a.imag() - o.imag()) * (b.real() - o.real());
}

bool lex_less(const Complex& a, const Complex& b) {
  if (a.real() != b.real()) return a.real() < b.real();
  return a.imag() < b.imag();
}

double segment_distance(Complex a, Complex b, Complex z) {
  const Complex ab = b - a;
  const double len2 = std::norm(ab);
  if (len2 == 0.0) return std::abs(z - a);
  const double t = std::clamp(((z - a) * std::conj(ab)).real() / len2, 0.0, 1.0);
  return std::abs(z - (a + t * ab));
}

}  // namespace

HullPolygon convex_hull(std::span<const Complex> points, const Tolerances& tol) {
  if (points.empty()) throw InvalidArgument("convex_hull: empty point set");
  std::vector<Complex> p(points.begin(), points.end());
  std::sort(p.begin(), p.end(), lex_less);
  p.erase(std::unique(p.begin(), p.end()), p.end());

  HullPolygon h;
  for (std::size_t i = 0; i < p.size(); ++i)
    for (std::size_t j = i + 1; j < p.size(); ++j) h.diameter = std::max(h.diameter, std::abs(p[i] - p[j]));

  if (p.size() == 1) {
    h.vertices = p;
    h.shape = HullShape::point;
    return h;
  }

  const double eps = tol.collinear_rel * h.diameter * h.diameter;
  std::vector<Complex> chain(2 * p.size());
  std::size_t k = 0;
  for (std::size_t i = 0; i < p.size(); ++i) {
    while (k >= 2 && cross(chain[k - 2], chain[k - 1], p[i]) <= eps) --k;
    chain[k++] = p[i];
  }
  for (std::size_t i = p.size() - 1, lower = k + 1; i-- > 0;) {
    while (k >= lower && cross(chain[k - 2], chain[k - 1], p[i]) <= eps) --k;
    chain[k++] = p[i];
  }
  chain.resize(k - 1);  // last point repeats the first

  if (chain.size() <= 2) {
    // Collinear input: the chain collapses to the two extreme points.
    h.vertices = {p.front(), p.back()};
    h.shape = HullShape::segment;
  } else {
    h.vertices = std::move(chain);
    h.shape = HullShape::polygon;
  }
  return h;
}

std::vector<Complex> boundary_samples(const HullPolygon& h, std::size_t per_edge) {
  if (per_edge == 0) throw InvalidArgument("boundary_samples: per_edge must be at least 1");
  std::vector<Complex> out;
  auto edge = [&](Complex a, Complex b) {
    out.push_back(a);
    for (std::size_t s = 1; s < per_edge; ++s) {
      const double t = static_cast<double>(s) / static_cast<double>(per_edge);
      out.push_back(a + t * (b - a));
    }
  };
  switch (h.shape) {
    case HullShape::point:
      out.push_back(h.vertices.front());
      break;
    case HullShape::segment:
      edge(h.vertices[0], h.vertices[1]);
      out.push_back(h.vertices[1]);
      break;
    case HullShape::polygon:
      for (std::size_t i = 0; i < h.vertices.size(); ++i)
        edge(h.vertices[i], h.vertices[(i + 1) % h.vertices.size()]);
      break;
  }
  return out;
}

bool contains(const HullPolygon& h, Complex z, const Tolerances& tol) {
  const double eps = tol.hull_contains_rel * std::max(h.diameter, 1.0);
  switch (h.shape) {
    case HullShape::point:
      return std::abs(z - h.vertices.front()) <= eps;
    case HullShape::segment:
      return segment_distance(h.vertices[0], h.vertices[1], z) <= eps;
    case HullShape::polygon:
      break;
  }
  const std::size_t n = h.vertices.size();
  for (std::size_t i = 0; i < n; ++i) {
    const Complex a = h.vertices[i];
    const Complex b = h.vertices[(i + 1) % n];
    // Signed distance of z to the left of edge a->b.
    if (cross(a, b, z) < -eps * std::abs(b - a)) return false;
  }
  return true;
}

}  // namespace mfbound
