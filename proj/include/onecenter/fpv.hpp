#ifndef ONECENTER_FPV_HPP
#define ONECENTER_FPV_HPP

#include "onecenter/curve.hpp"
#include "onecenter/geometry.hpp"
#include "onecenter/roots.hpp"

#include <cstddef>
#include <vector>

namespace onecenter {

// Points x with normal.x == offset.
struct Hyperplane {
    std::vector<Rat> normal;
    Rat offset;
};

// Perpendicular bisector of a and b: |x-a|^2 == |x-b|^2, written as
// 2(b-a).x == |b|^2 - |a|^2. Throws IdenticalPoints.
Hyperplane bisector(const Point& a, const Point& b);

// x lies on the farthest-point Voronoi face generated by S' (exact equality
// of distances within S', strictly farther than every other point of S).
// |S'| == 1 reduces to farthest-cell membership.
bool face_membership(const Point& x, const std::vector<std::size_t>& sprime_ids,
                     const std::vector<Point>& s);

struct PlaneRoots {
    bool identically_on_plane = false;
    std::vector<AlgebraicTime> roots;
};
// Roots of normal.c(t) - offset over the curve's domain.
PlaneRoots curve_hyperplane_roots(const RatCurve& c, const Hyperplane& h);

struct FaceEvent {
    AlgebraicTime time;
    std::vector<std::size_t> joining; // sorted static ids that become equidistant
};
// Times where the arc meets a farthest-point Voronoi face involving S':
// bisector crossings of one representative of S' against every other static,
// merged by equal time and filtered by exact face membership (inequalities
// certified by sign-stable interval refinement at algebraic times).
std::vector<FaceEvent> curve_face_intersections(const RatCurve& arc,
                                                const std::vector<std::size_t>& sprime_ids,
                                                const std::vector<Point>& s);

enum class CrossLabel { In, Out, Tangent };

struct SphereCrossing {
    AlgebraicTime time;
    CrossLabel label;
};
// Times where |c(t) - center|^2 - radius_sq changes sign (In: + to -,
// Out: - to +) or touches zero with even parity (Tangent).
std::vector<SphereCrossing> curve_sphere_intersections(const RatCurve& c, const Ball& ball);

// Exact sign of a rational function at an algebraic time (refines tau).
int ratfn_sign_at(const RatFn& f, AlgebraicTime& tau);

// Squared distance from a curve to a fixed point, as a rational function.
RatFn sqdist_fn(const RatCurve& c, const Point& p);

} // namespace onecenter

#endif
