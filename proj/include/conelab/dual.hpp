#pragma once

#include "conelab/cone.hpp"

namespace conelab {

// Rays and lineality space (both as columns) of {x : A x >= 0}.
struct RaySystem {
  QMat rays;
  QMat lineality;
};

// Double description method with exact rational arithmetic and combinatorial
// adjacency.  Rows of `a` are inequality functionals.
RaySystem extreme_rays_of_system(const QMat& a);

// Scale a rational ray to coprime integer entries (direction preserved).
QVec canonical_ray(const QVec& r);

// Canonicalize, dedupe, and sort columns lexicographically.
QMat canonical_ray_set(const QMat& rays);

// Generators of the dual cone {y : <y,x> >= 0 for all x in C}, as columns.
// Lineality directions of the dual (present when C is not full-dimensional)
// are emitted as +/- pairs.  Polyhedral variants only.
QMat dual_generators(const Cone& cone);

Cone v_to_h(const Cone& cone);
Cone h_to_v(const Cone& cone);

}  // namespace conelab
