// Deterministic random convex polygons with exact rational vertices: sample
// edge vectors summing to zero, sort them by angle, take prefix sums. Convex
// and simple by construction; resamples on degenerate draws.
#pragma once

#include <algorithm>
#include <vector>

#include "fischerlab/domains.hpp"
#include "support/testing.hpp"

namespace fischerlab::testing {

inline bool angle_less(const Point& a, const Point& b) {
  const auto half = [](const Point& v) {
    return (v[1].sign() > 0 || (v[1].sign() == 0 && v[0].sign() > 0)) ? 0 : 1;
  };
  if (half(a) != half(b)) return half(a) < half(b);
  return (a[0] * b[1] - a[1] * b[0]).sign() > 0;  // a strictly CCW-before b
}

inline PolygonSpec random_convex_polygon(Rng& rng, int n) {
  for (;;) {
    std::vector<Point> edges;
    Point sum{Rational(0), Rational(0)};
    for (int i = 0; i + 1 < n; ++i) {
      const Point e{rng.rational(6, 2), rng.rational(6, 2)};
      if (e[0].is_zero() && e[1].is_zero()) break;
      sum[0] += e[0];
      sum[1] += e[1];
      edges.push_back(e);
    }
    if (static_cast<int>(edges.size()) + 1 != n) continue;
    const Point last{-sum[0], -sum[1]};
    if (last[0].is_zero() && last[1].is_zero()) continue;
    edges.push_back(last);

    // Same-direction duplicates would create a straight vertex.
    bool degenerate = false;
    for (std::size_t i = 0; i < edges.size() && !degenerate; ++i) {
      for (std::size_t j = i + 1; j < edges.size(); ++j) {
        const Rational cross = edges[i][0] * edges[j][1] - edges[i][1] * edges[j][0];
        const Rational dot = edges[i][0] * edges[j][0] + edges[i][1] * edges[j][1];
        if (cross.is_zero() && dot.sign() > 0) {
          degenerate = true;
          break;
        }
      }
    }
    if (degenerate) continue;

    std::sort(edges.begin(), edges.end(), angle_less);
    std::vector<Point> vertices;
    Point cursor{rng.rational(4, 2), rng.rational(4, 2)};
    for (int i = 0; i < n; ++i) {
      vertices.push_back(cursor);
      cursor[0] += edges[i][0];
      cursor[1] += edges[i][1];
    }
    return PolygonSpec(std::move(vertices));
  }
}

}  // namespace fischerlab::testing
