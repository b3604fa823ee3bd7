#pragma once

#include <span>
#include <vector>

#include "mfbound/config.hpp"
#include "mfbound/matrix.hpp"

namespace mfbound {

enum class HullShape { point, segment, polygon };

/// Convex hull of a planar point set, complex numbers read as (re, im).
/// Vertices run counter-clockwise with no three consecutive collinear;
/// a segment stores its two endpoints, a point its single vertex.
struct HullPolygon {
  std::vector<Complex> vertices;
  HullShape shape = HullShape::point;
  double diameter = 0.0;
};

/// Andrew's monotone chain. Duplicates are dropped first; near-collinear
/// turns (|cross| <= collinear_rel * diameter^2) are discarded.
HullPolygon convex_hull(std::span<const Complex> points, const Tolerances& tol = default_tolerances());

/// Vertices plus per_edge - 1 equally spaced interior points of every edge.
std::vector<Complex> boundary_samples(const HullPolygon& h, std::size_t per_edge);

/// Closed-hull membership with tolerance hull_contains_rel * max(diameter, 1).
bool contains(const HullPolygon& h, Complex z, const Tolerances& tol = default_tolerances());

}  // namespace mfbound
