#pragma once

#include "convexdepth/geometry.hpp"

namespace cdepth {

// Demo family of three segments: the edges of an equilateral triangle with
// sidelength 3, each trimmed by a unit disk at both triangle corners. The
// depth-2 region of this family is the single center point, while every
// representative triple has Tukey depth at most 1 there.
Family build_figure1_family(double tol = kDefaultTol);

// Center point of the triangle underlying the family above.
Vec figure1_center();

// The three edges of the triangle (0,0), (1,0), (0,1) as segments; the
// smallest family whose pairwise intersections are nonempty while the triple
// intersection is empty.
Family triangle_edge_family(double tol = kDefaultTol);

}  // namespace cdepth
