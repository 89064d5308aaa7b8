#ifndef ONECENTER_ORACLE_HPP
#define ONECENTER_ORACLE_HPP

#include "onecenter/tracker.hpp"

#include <cstdint>
#include <vector>

namespace onecenter {

struct VerifyFailure {
    Rat t;
    Point expected; // per-sample exact SEB center
    Point got;      // arc evaluation
};

struct VerifyReport {
    std::size_t samples = 0;
    std::size_t exact_matches = 0;
    Rat max_dev{0}; // max per-coordinate deviation over failures; 0 when clean
    std::vector<VerifyFailure> failures;

    bool clean() const { return failures.empty(); }
};

// Compares the symbolic arcs against per-sample exact SEB computation at
// rational times stratified across arcs (event isolating intervals excluded).
// Matches are exact rational comparisons.
VerifyReport verify(const PiecewiseCenter& pc, const std::vector<Point>& statics,
                    const std::vector<RatCurve>& mobiles, std::size_t samples, std::uint64_t seed);

struct EventGap {
    std::size_t event_index; // into pc.events
    AlgebraicTime time;
    std::vector<Rat> gap_abs; // per-coordinate |left - right|
    bool exact;               // true when the event time is rational
};

// Per-interior-event continuity gaps between adjacent arcs, evaluated exactly
// at rational events and at the refined approximation otherwise.
std::vector<EventGap> continuity_audit(const PiecewiseCenter& pc,
                                       const Rat& refine_width = Rat(1, Int("1000000000000")));

} // namespace onecenter

#endif
