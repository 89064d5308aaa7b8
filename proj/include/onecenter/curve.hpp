#ifndef ONECENTER_CURVE_HPP
#define ONECENTER_CURVE_HPP

#include "onecenter/geometry.hpp"
#include "onecenter/ratfn.hpp"
#include "onecenter/roots.hpp"

#include <string>
#include <vector>

namespace onecenter {

// Rational parametric curve: one RatFn per coordinate on a compact interval.
struct RatCurve {
    std::vector<RatFn> components;
    Interval domain;

    RatCurve() = default;
    RatCurve(std::vector<RatFn> comps, Interval dom) : components(std::move(comps)), domain(std::move(dom)) {}

    static RatCurve constant(const Point& p, const Interval& dom);

    std::size_t dim() const { return components.size(); }
    bool is_constant() const;
    Point eval(const Rat& t) const;

    std::string to_string() const;
};

// Rejects curves whose denominators vanish somewhere on the closed domain.
void validate_curve_domain(const RatCurve& c, const std::string& name);

// Componentwise cross-multiplication equality.
bool curves_eq(const RatCurve& a, const RatCurve& b);

struct SymbolicCircumcenter {
    RatCurve curve;    // circumcenter as a function of t
    RatFn radius_sq;   // squared circumradius as a function of t
    RatFn gram_det;    // det M(t); isolated zeros are momentary degeneracies
};

// Circumcenter of static points plus mobile points as rational functions of
// t: Cramer's rule on the Gram system over the polynomial ring (fraction-free
// Bareiss elimination after clearing row denominators). Throws
// IdenticallyDegenerate when det M(t) is identically zero.
SymbolicCircumcenter circumcenter_symbolic(const std::vector<Point>& static_pts,
                                           const std::vector<RatCurve>& mobile_curves,
                                           const Interval& domain);

// Parameter values where the curves coincide in every coordinate (roots of
// the gcd of the coordinate-difference numerators over the closed domain).
// Identical curves yield no isolated intersections: empty list with the flag.
struct CurveIntersections {
    bool identical = false;
    std::vector<AlgebraicTime> times;
};
CurveIntersections curve_curve_intersections(const RatCurve& a, const RatCurve& b, const Interval& domain);

// Fraction-free determinant of a square polynomial matrix.
Poly bareiss_det(std::vector<std::vector<Poly>> m);

// Numerator polynomial of det of a RatFn matrix (rows cleared of
// denominators, then Bareiss). Zero polynomial iff det vanishes identically;
// the dropped denominator is a product of the row scales.
Poly ratfn_matrix_det_num(const std::vector<std::vector<RatFn>>& m);

} // namespace onecenter

#endif
