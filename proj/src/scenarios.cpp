#include "convexdepth/scenarios.hpp"

#include <cmath>

namespace cdepth {

Family build_figure1_family(double tol) {
  const double s3 = std::sqrt(3.0);
  // Triangle (0,0), (3,0), (1.5, 3*s3/2); every edge keeps its middle unit
  // segment after removing the unit disks at the corners.
  std::vector<Polytope> segments;
  segments.emplace_back(std::vector<Vec>{{1.0, 0.0}, {2.0, 0.0}});
  segments.emplace_back(std::vector<Vec>{{0.5, s3 / 2}, {1.0, s3}});
  segments.emplace_back(std::vector<Vec>{{2.5, s3 / 2}, {2.0, s3}});
  return Family(2, std::move(segments), tol);
}

Vec figure1_center() { return {1.5, std::sqrt(3.0) / 2}; }

Family triangle_edge_family(double tol) {
  std::vector<Polytope> edges;
  edges.emplace_back(std::vector<Vec>{{0.0, 0.0}, {1.0, 0.0}});
  edges.emplace_back(std::vector<Vec>{{0.0, 0.0}, {0.0, 1.0}});
  edges.emplace_back(std::vector<Vec>{{1.0, 0.0}, {0.0, 1.0}});
  return Family(2, std::move(edges), tol);
}

}  // namespace cdepth
