#pragma once

#include <vector>

#include "nullproj/body.hpp"
#include "nullproj/chain.hpp"
#include "nullproj/hyperplane.hpp"

namespace nullproj {

// Steiner symmetrization image of a boundary point: translate the chord
// through x parallel to the plane normal until its midpoint lies on the
// plane, and return where x lands.
Vec<double> steiner(const ConvexBody& b, const Hyperplane<double>& p, const Vec<double>& x);

// Signed height of x over the plane after symmetrization: steiner(x).u - c.
// Vanishes exactly on the equator, is positive on one hemisphere and
// negative on the other.
double signed_height(const ConvexBody& b, const Hyperplane<double>& p, const Vec<double>& x);

// Second intersection of the normal-parallel line through x with the
// boundary: the boundary involution that swaps hemispheres, fixes the
// equator, and equals x - 2 * signed_height(x) * u (cross-checked).
// Requires a strictly convex body.
Vec<double> involution(const ConvexBody& b, const Hyperplane<double>& p, const Vec<double>& x);

enum class HemisphereLabel { Plus, Minus };

inline HemisphereLabel opposite(HemisphereLabel h) {
  return h == HemisphereLabel::Plus ? HemisphereLabel::Minus : HemisphereLabel::Plus;
}

// Which side of the equator carries x; points within epsilon of the equator
// have no hemisphere and raise NumericError.
HemisphereLabel hemisphere_of(const ConvexBody& b, const Hyperplane<double>& p,
                              const Vec<double>& x);

// Involutions composed left to right: planes[0] is applied first. Requires
// independent normals and a strictly convex body.
Vec<double> composed_involution(const ConvexBody& b,
                                const std::vector<Hyperplane<double>>& planes,
                                const Vec<double>& x);

// Oriented discretization of the equator {x on boundary : gauss(x).u = 0},
// which for an ellipsoid is the boundary slice by the plane through the
// center with normal A u. Ambient dimension 2 gives two signed points, 3 a
// polygon with `resolution` vertices, 4 a triangulated sphere with at least
// `resolution` triangles. Orientation: frames (u, gauss, cell frame) are
// positively oriented.
Chain<double> equator(const Ellipsoid& b, const Hyperplane<double>& p, std::size_t resolution);

// Snaps every vertex to the boundary along the ray from the center;
// multiplicities are preserved. Vertices must start within one tenth of the
// diameter from the boundary.
Chain<double> project_cycle_onto_body(const Ellipsoid& b, const Chain<double>& t);

// Consistently outward-oriented triangulated boundary of a 3D ellipsoid,
// by repeated midpoint subdivision of the octahedron; vertices are shared
// bitwise so the boundary cancels exactly.
Chain<double> ellipsoid_mesh(const Ellipsoid& b, std::size_t level);

}  // namespace nullproj
