#include "onecenter/oracle.hpp"

#include "onecenter/seb.hpp"

#include <algorithm>
#include <random>
#include <stdexcept>

namespace onecenter {

VerifyReport verify(const PiecewiseCenter& pc, const std::vector<Point>& statics,
                    const std::vector<RatCurve>& mobiles, std::size_t samples, std::uint64_t seed) {
    if (samples < 1) throw std::invalid_argument("verify: samples must be >= 1");
    VerifyReport report;
    if (pc.arcs.empty()) return report;

    std::mt19937_64 rng(seed);
    std::uniform_int_distribution<long> jitter(1, (1L << 20) - 1);

    // open sampling window per arc, strictly between the event isolating
    // intervals at the two ends
    std::vector<Interval> windows;
    std::vector<double> lengths;
    for (const auto& arc : pc.arcs) {
        AlgebraicTime a = arc.start, b = arc.end;
        while (!(a.upper() < b.lower())) {
            a.refine_step();
            b.refine_step();
            if (a.is_rational() && b.is_rational() && !(a.value() < b.value()))
                throw std::logic_error("verify: degenerate arc span");
        }
        windows.emplace_back(a.upper(), b.lower());
        lengths.push_back(rat_to_double(b.lower() - a.upper()));
    }
    double total_len = 0;
    for (double l : lengths) total_len += l;

    // distribute samples proportionally to arc length, at least one per arc
    std::vector<std::size_t> quota(windows.size(), 1);
    std::size_t assigned = windows.size();
    if (samples > assigned && total_len > 0) {
        const std::size_t pool = samples - assigned;
        for (std::size_t i = 0; i < windows.size(); ++i) {
            const auto extra = static_cast<std::size_t>(pool * (lengths[i] / total_len));
            quota[i] += extra;
            assigned += extra;
        }
    }
    for (std::size_t i = 0; assigned < samples; ++i, ++assigned) quota[i % quota.size()]++;

    for (std::size_t ai = 0; ai < windows.size(); ++ai) {
        const Interval& w = windows[ai];
        const Rat span = w.hi - w.lo;
        for (std::size_t j = 0; j < quota[ai]; ++j) {
            // stratified: cell j of the window, jittered, endpoints avoided
            Rat u(jitter(rng), 1L << 20);
            u.canonicalize();
            const Rat t = w.lo + span * (Rat(static_cast<long>(j)) + u) / Rat(static_cast<long>(quota[ai]));

            std::vector<Point> pts = statics;
            for (const auto& m : mobiles) pts.push_back(m.eval(t));
            const Point expected = seb(pts, seed).ball.center;
            const Point got = pc.arcs[ai].curve.eval(t);

            ++report.samples;
            if (expected == got) {
                ++report.exact_matches;
                continue;
            }
            for (std::size_t c = 0; c < expected.dim(); ++c) {
                const Rat dev = rat_abs(expected.x[c] - got.x[c]);
                if (dev > report.max_dev) report.max_dev = dev;
            }
            report.failures.push_back(VerifyFailure{t, expected, got});
        }
    }
    return report;
}

std::vector<EventGap> continuity_audit(const PiecewiseCenter& pc, const Rat& refine_width) {
    std::vector<EventGap> out;
    for (std::size_t ei = 0; ei < pc.events.size(); ++ei) {
        const Event& ev = pc.events[ei];
        if (ev.kind == EventKind::Start || ev.kind == EventKind::End) continue;

        const Arc* left = nullptr;
        const Arc* right = nullptr;
        for (const auto& arc : pc.arcs) {
            if (compare(arc.end, ev.time) == 0) left = &arc;
            if (compare(arc.start, ev.time) == 0 && !right) right = &arc;
        }
        if (!left || !right) throw std::logic_error("continuity_audit: event without adjacent arcs");

        EventGap gap;
        gap.event_index = ei;
        gap.time = ev.time;
        gap.exact = ev.time.is_rational();
        const Rat where = gap.exact ? ev.time.value() : ev.time.approx(refine_width);
        const Point l = left->curve.eval(where);
        const Point r = right->curve.eval(where);
        gap.gap_abs.reserve(l.dim());
        for (std::size_t c = 0; c < l.dim(); ++c) gap.gap_abs.push_back(rat_abs(l.x[c] - r.x[c]));
        out.push_back(std::move(gap));
    }
    return out;
}

} // namespace onecenter
