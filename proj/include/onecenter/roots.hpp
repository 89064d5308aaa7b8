#ifndef ONECENTER_ROOTS_HPP
#define ONECENTER_ROOTS_HPP

#include "onecenter/poly.hpp"
#include "onecenter/rat.hpp"

#include <vector>

namespace onecenter {

// A real algebraic number: the unique root of `defining` inside `isolate`.
// Either a point interval (rational value, defining vanishes there) or an
// open sign-change interval: defining(lo) and defining(hi) are nonzero with
// opposite signs and exactly one root lies strictly inside.
class AlgebraicTime {
public:
    AlgebraicTime() : AlgebraicTime(Rat(0)) {}
    explicit AlgebraicTime(const Rat& value);
    AlgebraicTime(Poly defining, Interval isolate, bool even_multiplicity = false);

    const Poly& defining() const { return defining_; }
    const Interval& isolate() const { return isolate_; }
    bool even_multiplicity() const { return even_multiplicity_; }
    void set_even_multiplicity(bool v) { even_multiplicity_ = v; }

    bool is_rational() const { return isolate_.is_point(); }
    // Exact value; only valid when is_rational().
    const Rat& value() const { return isolate_.lo; }

    const Rat& lower() const { return isolate_.lo; }
    const Rat& upper() const { return isolate_.hi; }

    // Shrinks the isolating interval below `width` (bisection; collapses to a
    // point interval if a probe hits the root exactly). Same root throughout.
    void refine_below(const Rat& width);
    // Performs one bisection step (no-op on point intervals).
    void refine_step();

    // Midpoint of the interval refined below `width`; does not mutate.
    Rat approx(const Rat& width) const;

    double to_double() const { return rat_to_double(isolate_.midpoint()); }

private:
    Poly defining_;      // square-free, primitive integer coefficients
    Interval isolate_;
    bool even_multiplicity_ = false;
};

// refine(a, width): non-mutating spec-facing form of refine_below.
AlgebraicTime refine(const AlgebraicTime& a, const Rat& width);

// Total order on real algebraic numbers: -1, 0, +1. Refines internal copies;
// exact (equality decided through gcds, never by approximation).
int compare(const AlgebraicTime& a, const AlgebraicTime& b);

inline bool at_less(const AlgebraicTime& a, const AlgebraicTime& b) { return compare(a, b) < 0; }
inline bool at_equal(const AlgebraicTime& a, const AlgebraicTime& b) { return compare(a, b) == 0; }

// Exact sign of h at the root represented by tau. Refines tau in place so the
// certificate can be reused by later queries.
int sign_at(const Poly& h, AlgebraicTime& tau);

// Number of distinct real roots of p in the half-open interval (lo, hi],
// via the Sturm chain of the square-free part. p must be nonzero.
int sturm_count(const Poly& p, const Interval& iv);

// Isolates every distinct real root of p in the closed interval [lo, hi].
// Returned values are sorted increasing with pairwise-disjoint isolating
// intervals; each carries the parity of the root's multiplicity in p.
std::vector<AlgebraicTime> isolate_roots(const Poly& p, const Interval& iv);

// Exact rational strictly between the roots of a and b (requires a < b).
// Refines both arguments while separating them.
Rat gap_midpoint(AlgebraicTime& a, AlgebraicTime& b);
// Same, with an exact rational right endpoint (requires root(a) < b).
Rat gap_midpoint(AlgebraicTime& a, const Rat& b);

} // namespace onecenter

#endif
