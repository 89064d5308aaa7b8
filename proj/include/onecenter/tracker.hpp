#ifndef ONECENTER_TRACKER_HPP
#define ONECENTER_TRACKER_HPP

#include "onecenter/curve.hpp"
#include "onecenter/fpv.hpp"
#include "onecenter/seb.hpp"

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

namespace onecenter {

// Boundary points determining an arc: indices into the static set and into
// the mobile set, both sorted.
struct SupportSet {
    std::vector<std::size_t> static_ids;
    std::vector<std::size_t> mobile_ids;

    std::size_t size() const { return static_ids.size() + mobile_ids.size(); }
    bool operator==(const SupportSet& o) const = default;
    std::string to_string() const;
};

// One maximal time span on which the 1-center follows a single circumcenter
// expression (constant when no mobile point is on the boundary).
struct Arc {
    AlgebraicTime start;
    AlgebraicTime end;
    SupportSet support;
    RatCurve curve;
    RatFn radius_sq;
    RatFn gram_det; // det M(t) of the support; constant for constant arcs

    bool mobile_free() const { return support.mobile_ids.empty(); }
};

enum class EventKind { Start, End, In, Out, SupportChange };
std::string to_string(EventKind k);

struct Event {
    AlgebraicTime time;
    EventKind kind;
    SupportSet joined;
    SupportSet left;
};

struct PiecewiseCenter {
    Interval domain;
    std::size_t dimension = 0;
    std::vector<Arc> arcs;
    std::vector<Event> events;

    const Arc& arc_at(const Rat& t) const;
    Point eval(const Rat& t) const;
};

struct TraceOptions {
    Rat refine_width = Rat(1, Int("1000000000000")); // 1e-12
    std::uint64_t seed = 1;
    bool skip_gp_check = false;
    std::size_t candidate_cap = 20000;
};

// Rejects inputs the algorithm is not defined for: duplicate statics, static
// set not in general position (unless skipped), mobile denominators vanishing
// on the domain, identical mobiles, mobiles identical to a static.
void validate_instance(const std::vector<Point>& statics, const std::vector<RatCurve>& mobiles,
                       const Interval& domain, const TraceOptions& opts);

// Full piecewise parametric equation of the 1-center for one mobile point.
PiecewiseCenter trace_single(const std::vector<Point>& statics, const RatCurve& mobile,
                             const Interval& domain, const TraceOptions& opts = {});

// Multi-mobile variant: exhaustive candidate supports of size 2..d+1 over
// statics and mobiles. Throws ComplexityGuard when the subset count exceeds
// opts.candidate_cap.
PiecewiseCenter trace_multi(const std::vector<Point>& statics, const std::vector<RatCurve>& mobiles,
                            const Interval& domain, const TraceOptions& opts = {});

// The arc determined by SEB(S u V(t0)): certified boundary support reduced to
// a maximum affinely independent subset, plus its symbolic circumcenter.
Arc initial_arc(const std::vector<Point>& statics, const std::vector<RatCurve>& mobiles,
                const Interval& domain, const Rat& t0, const TraceOptions& opts = {});

struct InOutList {
    bool initially_inside = false;
    std::vector<SphereCrossing> crossings; // tangential touches discarded
};
InOutList in_out_list(const std::vector<Point>& statics, const RatCurve& mobile,
                      const TraceOptions& opts = {});

// First genuine event strictly after t_last while `current` governs, or
// nothing if the arc extends to the end of the domain.
std::optional<Event> next_event(const std::vector<Point>& statics, const std::vector<RatCurve>& mobiles,
                                const Interval& domain, const Arc& current, const AlgebraicTime& t_last,
                                const TraceOptions& opts = {});

// Support set valid immediately after t_e: SEB certification at an exact
// rational sample placed before the earliest later candidate root
// (gap-midpoint rule).
SupportSet support_after_event(const std::vector<Point>& statics, const std::vector<RatCurve>& mobiles,
                               const Interval& domain, const Arc& current, const AlgebraicTime& t_e,
                               const TraceOptions& opts = {});

enum class Side { Left, Right };

// One-sided derivative of the center function at time t: the exact derivative
// of the adjacent arc, evaluated exactly at rational t or at the refined
// approximation otherwise.
std::vector<Rat> one_sided_derivative(const PiecewiseCenter& pc, const AlgebraicTime& t, Side side,
                                      const Rat& refine_width = Rat(1, Int("1000000000000")));

} // namespace onecenter

#endif
