#include "onecenter/tracker.hpp"

#include "onecenter/errors.hpp"

#include <algorithm>
#include <stdexcept>

namespace onecenter {

std::string SupportSet::to_string() const {
    std::string s = "{static:";
    for (auto i : static_ids) s += " " + std::to_string(i);
    s += "; mobile:";
    for (auto i : mobile_ids) s += " " + std::to_string(i);
    return s + "}";
}

std::string to_string(EventKind k) {
    switch (k) {
        case EventKind::Start: return "START";
        case EventKind::End: return "END";
        case EventKind::In: return "IN";
        case EventKind::Out: return "OUT";
        case EventKind::SupportChange: return "SUPPORT_CHANGE";
    }
    return "?";
}

const Arc& PiecewiseCenter::arc_at(const Rat& t) const {
    const AlgebraicTime at(t);
    for (const auto& arc : arcs)
        if (compare(arc.start, at) <= 0 && compare(at, arc.end) <= 0) return arc;
    throw std::out_of_range("arc_at: t outside the traced domain");
}

Point PiecewiseCenter::eval(const Rat& t) const { return arc_at(t).curve.eval(t); }

void validate_instance(const std::vector<Point>& statics, const std::vector<RatCurve>& mobiles,
                       const Interval& domain, const TraceOptions& opts) {
    if (statics.empty()) throw ValidationError("at least one static point is required");
    const std::size_t d = statics[0].dim();
    if (d < 2) throw ValidationError("dimension must be at least 2");
    for (const auto& p : statics)
        if (p.dim() != d) throw ValidationError("static point dimension mismatch");
    for (std::size_t i = 0; i < statics.size(); ++i)
        for (std::size_t j = i + 1; j < statics.size(); ++j)
            if (statics[i] == statics[j])
                throw ValidationError("duplicate static points at indices " + std::to_string(i) + " and " +
                                      std::to_string(j));
    if (!(domain.lo < domain.hi)) throw ValidationError("domain must satisfy lo < hi");
    if (mobiles.empty()) throw ValidationError("at least one mobile point is required");

    for (std::size_t i = 0; i < mobiles.size(); ++i) {
        const auto& m = mobiles[i];
        if (m.dim() != d)
            throw ValidationError("mobile curve " + std::to_string(i) + " has wrong dimension");
        validate_curve_domain(m, "mobile curve " + std::to_string(i));
    }
    for (std::size_t i = 0; i < mobiles.size(); ++i) {
        for (std::size_t j = i + 1; j < mobiles.size(); ++j)
            if (curves_eq(mobiles[i], mobiles[j]))
                throw ValidationError("mobile curves " + std::to_string(i) + " and " + std::to_string(j) +
                                      " are identical");
        for (std::size_t j = 0; j < statics.size(); ++j)
            if (curves_eq(mobiles[i], RatCurve::constant(statics[j], domain)))
                throw ValidationError("mobile curve " + std::to_string(i) + " coincides with static point " +
                                      std::to_string(j));
    }

    if (!opts.skip_gp_check && !general_position_check(statics))
        throw ValidationError("static points are not in general position (use skip_gp_check to bypass)");
}

namespace {

std::vector<std::size_t> id_difference(const std::vector<std::size_t>& a, const std::vector<std::size_t>& b) {
    std::vector<std::size_t> out;
    for (auto v : a)
        if (std::find(b.begin(), b.end(), v) == b.end()) out.push_back(v);
    return out;
}

template <typename F>
void for_each_subset_of(std::size_t n, std::size_t k, F&& body) {
    if (k > n || k == 0) return;
    std::vector<std::size_t> idx(k);
    for (std::size_t i = 0; i < k; ++i) idx[i] = i;
    for (;;) {
        body(idx);
        std::size_t i = k;
        bool done = true;
        while (i-- > 0) {
            if (idx[i] != i + n - k) {
                ++idx[i];
                for (std::size_t j = i + 1; j < k; ++j) idx[j] = idx[j - 1] + 1;
                done = false;
                break;
            }
        }
        if (done) return;
    }
}

struct ScanResult {
    Event event;
    Arc next_arc;
    std::vector<AlgebraicTime> next_candidates;
};

struct Engine {
    const std::vector<Point>& statics;
    const std::vector<RatCurve>& mobiles;
    Interval domain;
    TraceOptions opts;
    bool multi;
    std::size_t dim;

    Ball static_ball;
    std::vector<std::vector<SphereCrossing>> crossings; // per mobile, tangents dropped
    std::vector<Poly> guard_polys; // coincidence + co-sphericity degeneracy instants

    struct CachedArc {
        SupportSet support;
        RatCurve curve;
    };
    std::vector<CachedArc> cached; // multi candidate supports

    Engine(const std::vector<Point>& s, const std::vector<RatCurve>& m, const Interval& dom,
           const TraceOptions& o, bool multi_mode)
        : statics(s), mobiles(m), domain(dom), opts(o), multi(multi_mode), dim(s[0].dim()) {
        static_ball = seb(statics, opts.seed).ball;

        for (const auto& mc : mobiles) {
            std::vector<SphereCrossing> cs = curve_sphere_intersections(mc, static_ball);
            std::erase_if(cs, [](const SphereCrossing& c) { return c.label == CrossLabel::Tangent; });
            crossings.push_back(std::move(cs));
        }

        build_guard_polys();
        if (multi) build_cached_arcs();
    }

    RatCurve static_as_curve(std::size_t j) const { return RatCurve::constant(statics[j], domain); }

    // All generator coordinates as curves: statics first, then mobiles.
    RatCurve generator(std::size_t id) const {
        return id < statics.size() ? static_as_curve(id) : mobiles[id - statics.size()];
    }

    void build_guard_polys() {
        // coincidence instants: mobile meets a static or another mobile
        auto coincidence_poly = [&](const RatCurve& a, const RatCurve& b) -> Poly {
            Poly g;
            for (std::size_t c = 0; c < dim; ++c) {
                const RatFn diff = a.components[c] - b.components[c];
                if (diff.is_zero()) continue;
                g = g.is_zero() ? poly_primitive(diff.num()) : poly_gcd(g, diff.num());
                if (g.degree() < 1) return Poly();
            }
            return g.degree() >= 1 ? g : Poly();
        };
        for (std::size_t i = 0; i < mobiles.size(); ++i) {
            for (std::size_t j = 0; j < statics.size(); ++j) {
                Poly g = coincidence_poly(mobiles[i], static_as_curve(j));
                if (!g.is_zero()) guard_polys.push_back(std::move(g));
            }
            for (std::size_t j = i + 1; j < mobiles.size(); ++j) {
                Poly g = coincidence_poly(mobiles[i], mobiles[j]);
                if (!g.is_zero()) guard_polys.push_back(std::move(g));
            }
        }

        // co-sphericity degeneracy instants: d+2 generators on a common sphere
        // (subsets must involve a mobile; statics alone pass general position)
        const std::size_t total = statics.size() + mobiles.size();
        if (total < dim + 2) return;
        for_each_subset_of(total, dim + 2, [&](const std::vector<std::size_t>& idx) {
            bool has_mobile = false;
            for (auto id : idx) has_mobile |= id >= statics.size();
            if (!has_mobile) return;
            std::vector<std::vector<RatFn>> m(idx.size(), std::vector<RatFn>(dim + 2));
            for (std::size_t r = 0; r < idx.size(); ++r) {
                const RatCurve g = generator(idx[r]);
                RatFn norm;
                for (std::size_t c = 0; c < dim; ++c) {
                    m[r][c] = g.components[c];
                    norm += g.components[c] * g.components[c];
                }
                m[r][dim] = norm;
                m[r][dim + 1] = RatFn(Rat(1));
            }
            const Poly det_num = ratfn_matrix_det_num(m);
            if (det_num.degree() >= 1) guard_polys.push_back(poly_primitive(det_num));
        });
    }

    void build_cached_arcs() {
        const std::size_t total = statics.size() + mobiles.size();
        // candidate count gate, computed exactly
        Int count(0);
        for (std::size_t k = 2; k <= std::min<std::size_t>(dim + 1, total); ++k) {
            Int binom;
            mpz_bin_uiui(binom.get_mpz_t(), static_cast<unsigned long>(total), static_cast<unsigned long>(k));
            count += binom;
        }
        if (count > Int(static_cast<unsigned long>(opts.candidate_cap)))
            throw ComplexityGuard("candidate subset count " + count.get_str() + " exceeds cap " +
                                  std::to_string(opts.candidate_cap));

        for (std::size_t k = 2; k <= std::min<std::size_t>(dim + 1, total); ++k) {
            for_each_subset_of(total, k, [&](const std::vector<std::size_t>& idx) {
                SupportSet sup;
                std::vector<Point> spts;
                std::vector<RatCurve> mcurves;
                for (auto id : idx) {
                    if (id < statics.size()) {
                        sup.static_ids.push_back(id);
                        spts.push_back(statics[id]);
                    } else {
                        sup.mobile_ids.push_back(id - statics.size());
                        mcurves.push_back(mobiles[id - statics.size()]);
                    }
                }
                try {
                    SymbolicCircumcenter sc = circumcenter_symbolic(spts, mcurves, domain);
                    cached.push_back(CachedArc{std::move(sup), std::move(sc.curve)});
                } catch (const IdenticallyDegenerate&) {
                    // reduced subsets are enumerated separately
                }
            });
        }
    }

    Arc arc_at_sample(const Rat& ts) const {
        std::vector<Point> pts = statics;
        for (const auto& m : mobiles) pts.push_back(m.eval(ts));
        const SebResult sr = seb(pts, opts.seed);

        Arc a;
        a.start = AlgebraicTime(domain.lo);
        a.end = AlgebraicTime(domain.hi);
        for (auto id : sr.support) {
            if (id < statics.size())
                a.support.static_ids.push_back(id);
            else
                a.support.mobile_ids.push_back(id - statics.size());
        }

        if (a.support.mobile_ids.empty()) {
            // every mobile interior: the ball is SEB(S), the center constant
            a.curve = RatCurve::constant(sr.ball.center, domain);
            a.radius_sq = RatFn(sr.ball.radius_sq);
            a.gram_det = RatFn(Rat(1));
        } else {
            std::vector<Point> spts;
            std::vector<RatCurve> mcurves;
            for (auto id : a.support.static_ids) spts.push_back(statics[id]);
            for (auto id : a.support.mobile_ids) mcurves.push_back(mobiles[id]);
            SymbolicCircumcenter sc = circumcenter_symbolic(spts, mcurves, domain);
            a.curve = std::move(sc.curve);
            a.radius_sq = std::move(sc.radius_sq);
            a.gram_det = std::move(sc.gram_det);
        }
        return a;
    }

    // Candidate event times of `arc`, strictly inside (after, domain.hi).
    std::vector<AlgebraicTime> candidates(const Arc& arc, const AlgebraicTime& after) const {
        std::vector<AlgebraicTime> out;
        const AlgebraicTime hi_at(domain.hi);
        auto add = [&](const AlgebraicTime& at) {
            if (compare(at, after) <= 0) return;
            if (compare(at, hi_at) >= 0) return;
            out.push_back(at);
        };
        auto add_poly = [&](const Poly& p) {
            if (p.degree() < 1) return;
            for (const auto& r : isolate_roots(p, domain)) add(r);
        };
        auto add_curve_intersections = [&](const RatCurve& other) {
            const CurveIntersections ci = curve_curve_intersections(arc.curve, other, domain);
            if (ci.identical) return;
            for (const auto& r : ci.times) add(r);
        };

        if (arc.mobile_free()) {
            // constant arc: nothing changes until a mobile reaches the sphere
            for (const auto& list : crossings)
                for (const auto& c : list) add(c.time);
        } else if (!multi) {
            const auto& sp = arc.support.static_ids;
            // (a) boundary statics leaving: intersections with sub-support arcs
            if (!sp.empty()) {
                for (std::size_t k = 1; k < sp.size(); ++k) {
                    for_each_subset_of(sp.size(), k, [&](const std::vector<std::size_t>& pick) {
                        std::vector<Point> spts;
                        for (auto i : pick) spts.push_back(statics[sp[i]]);
                        try {
                            add_curve_intersections(
                                circumcenter_symbolic(spts, {mobiles[0]}, domain).curve);
                        } catch (const IdenticallyDegenerate&) {
                        }
                    });
                }
                // the mobile leaving the boundary while >= 2 statics remain
                if (sp.size() >= 2) {
                    std::vector<Point> spts;
                    for (auto i : sp) spts.push_back(statics[i]);
                    const Circumball cb = circumcenter(spts);
                    add_curve_intersections(RatCurve::constant(cb.center, domain));
                }
                // (b) statics joining: farthest-point Voronoi face crossings
                for (const auto& fe : curve_face_intersections(arc.curve, sp, statics)) add(fe.time);
            }
            // (c) the mobile crossing the boundary of SEB(S)
            for (const auto& c : crossings[0]) add(c.time);
        } else {
            for (const auto& ca : cached) {
                if (ca.support == arc.support) continue;
                add_curve_intersections(ca.curve);
            }
            for (const auto& list : crossings)
                for (const auto& c : list) add(c.time);
            if (!arc.support.static_ids.empty())
                for (const auto& fe : curve_face_intersections(arc.curve, arc.support.static_ids, statics))
                    add(fe.time);
        }

        if (!arc.mobile_free()) {
            // momentary degeneracies of the support (Gram determinant zeros)
            if (!arc.gram_det.num().is_constant()) add_poly(arc.gram_det.num());
            for (const auto& g : guard_polys) add_poly(g);
        }

        std::sort(out.begin(), out.end(), [](const AlgebraicTime& x, const AlgebraicTime& y) {
            return at_less(x, y);
        });
        std::vector<AlgebraicTime> dedup;
        for (auto& at : out)
            if (dedup.empty() || !at_equal(dedup.back(), at)) dedup.push_back(std::move(at));
        return dedup;
    }

    static bool arcs_equivalent(const Arc& a, const Arc& b) {
        return curves_eq(a.curve, b.curve) && ratfn_eq(a.radius_sq, b.radius_sq);
    }

    // Arc that governs immediately after `e`, certified at a sample chosen so
    // the arc's own candidate roots clear (e, sample]; the perturbation never
    // skips the following event. Returns the arc and its candidates after e.
    std::pair<Arc, std::vector<AlgebraicTime>> stabilized_after(const AlgebraicTime& e, Rat ts) {
        for (int guard = 0; guard < 1000; ++guard) {
            Arc a = arc_at_sample(ts);
            std::vector<AlgebraicTime> cand = candidates(a, e);
            const AlgebraicTime ts_at(ts);
            if (cand.empty() || compare(cand.front(), ts_at) > 0)
                return {std::move(a), std::move(cand)};
            AlgebraicTime ec = e, first = cand.front();
            const Rat next_raw = gap_midpoint(ec, first);
            AlgebraicTime ec2 = e, cur(ts);
            const Rat forced = gap_midpoint(ec2, cur); // strictly decreases ts
            ts = std::min(next_raw, forced);
        }
        throw std::logic_error("stabilized_after: sample refinement did not converge");
    }

    std::pair<Arc, std::vector<AlgebraicTime>> initial_state() {
        const AlgebraicTime t0(domain.lo);
        Arc prov = arc_at_sample(domain.lo);
        std::vector<AlgebraicTime> cand = candidates(prov, t0);
        Rat ts;
        if (cand.empty()) {
            ts = (domain.lo + domain.hi) / 2;
        } else {
            AlgebraicTime c0 = t0, first = cand.front();
            ts = gap_midpoint(c0, first);
        }
        return stabilized_after(t0, ts);
    }

    static EventKind classify(const SupportSet& before, const SupportSet& after) {
        if (!before.mobile_ids.empty() && after.mobile_ids.empty()) return EventKind::In;
        if (before.mobile_ids.empty() && !after.mobile_ids.empty()) return EventKind::Out;
        return EventKind::SupportChange;
    }

    std::optional<ScanResult> scan_next(const Arc& current, const AlgebraicTime& t_last) {
        return scan_next(current, candidates(current, t_last));
    }

    std::optional<ScanResult> scan_next(const Arc& current, const std::vector<AlgebraicTime>& cand) {
        for (std::size_t i = 0; i < cand.size(); ++i) {
            AlgebraicTime c = cand[i];
            Rat ts;
            if (i + 1 < cand.size()) {
                AlgebraicTime nxt = cand[i + 1];
                ts = gap_midpoint(c, nxt);
            } else {
                ts = gap_midpoint(c, domain.hi);
            }
            auto [next_arc, next_cand] = stabilized_after(cand[i], ts);
            if (arcs_equivalent(next_arc, current)) continue; // not a combinatorial change

            Event ev;
            ev.time = cand[i];
            ev.kind = classify(current.support, next_arc.support);
            ev.joined.static_ids = id_difference(next_arc.support.static_ids, current.support.static_ids);
            ev.joined.mobile_ids = id_difference(next_arc.support.mobile_ids, current.support.mobile_ids);
            ev.left.static_ids = id_difference(current.support.static_ids, next_arc.support.static_ids);
            ev.left.mobile_ids = id_difference(current.support.mobile_ids, next_arc.support.mobile_ids);
            return ScanResult{std::move(ev), std::move(next_arc), std::move(next_cand)};
        }
        return std::nullopt;
    }

    PiecewiseCenter trace() {
        PiecewiseCenter pc;
        pc.domain = domain;
        pc.dimension = dim;
        pc.events.push_back(Event{AlgebraicTime(domain.lo), EventKind::Start, {}, {}});

        auto [current, cand] = initial_state();
        AlgebraicTime t_last(domain.lo);

        for (;;) {
            std::optional<ScanResult> res = scan_next(current, cand);
            if (!res) {
                current.start = t_last;
                current.end = AlgebraicTime(domain.hi);
                pc.arcs.push_back(std::move(current));
                break;
            }
            current.start = t_last;
            current.end = res->event.time;
            pc.arcs.push_back(current);
            pc.events.push_back(res->event);
            t_last = res->event.time;
            current = std::move(res->next_arc);
            cand = std::move(res->next_candidates);
        }
        pc.events.push_back(Event{AlgebraicTime(domain.hi), EventKind::End, {}, {}});
        return pc;
    }
};

} // namespace

PiecewiseCenter trace_single(const std::vector<Point>& statics, const RatCurve& mobile,
                             const Interval& domain, const TraceOptions& opts) {
    const std::vector<RatCurve> mobiles{mobile};
    validate_instance(statics, mobiles, domain, opts);
    Engine eng(statics, mobiles, domain, opts, /*multi=*/false);
    return eng.trace();
}

PiecewiseCenter trace_multi(const std::vector<Point>& statics, const std::vector<RatCurve>& mobiles,
                            const Interval& domain, const TraceOptions& opts) {
    validate_instance(statics, mobiles, domain, opts);
    Engine eng(statics, mobiles, domain, opts, /*multi=*/true);
    return eng.trace();
}

Arc initial_arc(const std::vector<Point>& statics, const std::vector<RatCurve>& mobiles,
                const Interval& domain, const Rat& t0, const TraceOptions& opts) {
    validate_instance(statics, mobiles, domain, opts);
    if (!domain.contains(t0)) throw ValidationError("initial_arc: t0 outside the domain");
    Engine eng(statics, mobiles, domain, opts, mobiles.size() > 1);
    Arc a = eng.arc_at_sample(t0);
    a.start = AlgebraicTime(t0);
    a.end = AlgebraicTime(t0);
    return a;
}

InOutList in_out_list(const std::vector<Point>& statics, const RatCurve& mobile, const TraceOptions& opts) {
    InOutList out;
    const Ball ball = seb(statics, opts.seed).ball;
    out.crossings = curve_sphere_intersections(mobile, ball);
    std::erase_if(out.crossings, [](const SphereCrossing& c) { return c.label == CrossLabel::Tangent; });
    out.initially_inside = sqdist(mobile.eval(mobile.domain.lo), ball.center) < ball.radius_sq;
    return out;
}

std::optional<Event> next_event(const std::vector<Point>& statics, const std::vector<RatCurve>& mobiles,
                                const Interval& domain, const Arc& current, const AlgebraicTime& t_last,
                                const TraceOptions& opts) {
    Engine eng(statics, mobiles, domain, opts, mobiles.size() > 1);
    auto res = eng.scan_next(current, t_last);
    if (!res) return std::nullopt;
    return res->event;
}

SupportSet support_after_event(const std::vector<Point>& statics, const std::vector<RatCurve>& mobiles,
                               const Interval& domain, const Arc& current, const AlgebraicTime& t_e,
                               const TraceOptions& opts) {
    Engine eng(statics, mobiles, domain, opts, mobiles.size() > 1);
    std::vector<AlgebraicTime> cand = eng.candidates(current, t_e);
    Rat ts;
    if (cand.empty()) {
        AlgebraicTime e = t_e;
        ts = gap_midpoint(e, domain.hi);
    } else {
        AlgebraicTime e = t_e, first = cand.front();
        ts = gap_midpoint(e, first);
    }
    return eng.stabilized_after(t_e, ts).first.support;
}

std::vector<Rat> one_sided_derivative(const PiecewiseCenter& pc, const AlgebraicTime& t, Side side,
                                      const Rat& refine_width) {
    const Arc* chosen = nullptr;
    for (const auto& arc : pc.arcs) {
        const int cs = compare(arc.start, t);
        const int ce = compare(t, arc.end);
        if (side == Side::Left && cs < 0 && ce <= 0) chosen = &arc;
        if (side == Side::Right && cs <= 0 && ce < 0 && !chosen) chosen = &arc;
    }
    if (!chosen) throw std::out_of_range("one_sided_derivative: no adjacent arc on that side");

    const Rat where = t.is_rational() ? t.value() : t.approx(refine_width);
    std::vector<Rat> out;
    out.reserve(chosen->curve.dim());
    for (const auto& comp : chosen->curve.components) out.push_back(comp.derivative().eval(where));
    return out;
}

} // namespace onecenter
