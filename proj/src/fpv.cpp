#include "onecenter/fpv.hpp"

#include "onecenter/errors.hpp"

#include <algorithm>
#include <stdexcept>

namespace onecenter {

Hyperplane bisector(const Point& a, const Point& b) {
    if (a == b) throw IdenticalPoints("bisector of identical points");
    Hyperplane h;
    h.normal.resize(a.dim());
    for (std::size_t i = 0; i < a.dim(); ++i) h.normal[i] = 2 * (b.x[i] - a.x[i]);
    h.offset = sqnorm(b) - sqnorm(a);
    return h;
}

bool face_membership(const Point& x, const std::vector<std::size_t>& sprime_ids,
                     const std::vector<Point>& s) {
    if (sprime_ids.empty()) throw std::invalid_argument("face_membership: empty generator set");
    const Rat ref = sqdist(x, s[sprime_ids[0]]);
    for (std::size_t i = 1; i < sprime_ids.size(); ++i)
        if (sqdist(x, s[sprime_ids[i]]) != ref) return false;
    for (std::size_t j = 0; j < s.size(); ++j) {
        if (std::find(sprime_ids.begin(), sprime_ids.end(), j) != sprime_ids.end()) continue;
        if (!(sqdist(x, s[j]) < ref)) return false;
    }
    return true;
}

PlaneRoots curve_hyperplane_roots(const RatCurve& c, const Hyperplane& h) {
    RatFn f;
    for (std::size_t i = 0; i < c.dim(); ++i) f += RatFn(h.normal[i]) * c.components[i];
    f -= RatFn(h.offset);
    PlaneRoots out;
    if (f.is_zero()) {
        out.identically_on_plane = true;
        return out;
    }
    out.roots = isolate_roots(f.num(), c.domain);
    return out;
}

int ratfn_sign_at(const RatFn& f, AlgebraicTime& tau) {
    if (f.is_zero()) return 0;
    const int sn = sign_at(f.num(), tau);
    if (sn == 0) return 0;
    const int sd = sign_at(f.den(), tau);
    if (sd == 0) throw PoleAtSample("rational function sign queried at a pole");
    return sn * sd;
}

RatFn sqdist_fn(const RatCurve& c, const Point& p) {
    if (c.dim() != p.dim()) throw std::invalid_argument("sqdist_fn: dimension mismatch");
    RatFn acc;
    for (std::size_t i = 0; i < c.dim(); ++i) {
        const RatFn d = c.components[i] - RatFn(p.x[i]);
        acc += d * d;
    }
    return acc;
}

std::vector<FaceEvent> curve_face_intersections(const RatCurve& arc,
                                                const std::vector<std::size_t>& sprime_ids,
                                                const std::vector<Point>& s) {
    if (sprime_ids.empty()) throw std::invalid_argument("curve_face_intersections: empty S'");
    const std::size_t rep = *std::min_element(sprime_ids.begin(), sprime_ids.end());

    // collect bisector crossings, grouped by equal algebraic time
    std::vector<FaceEvent> merged;
    for (std::size_t j = 0; j < s.size(); ++j) {
        if (std::find(sprime_ids.begin(), sprime_ids.end(), j) != sprime_ids.end()) continue;
        const PlaneRoots pr = curve_hyperplane_roots(arc, bisector(s[rep], s[j]));
        if (pr.identically_on_plane) continue; // arc rides the bisector: no isolated events
        for (const auto& root : pr.roots) {
            bool placed = false;
            for (auto& fe : merged) {
                if (at_equal(fe.time, root)) {
                    fe.joining.push_back(j);
                    placed = true;
                    break;
                }
            }
            if (!placed) merged.push_back(FaceEvent{root, {j}});
        }
    }

    // exact membership filter at each candidate time
    std::vector<FaceEvent> out;
    for (auto& fe : merged) {
        std::sort(fe.joining.begin(), fe.joining.end());
        const RatFn ref = sqdist_fn(arc, s[rep]);
        bool ok = true;
        // equalities within S' (the arc should already ride the face)
        for (const auto sid : sprime_ids) {
            if (sid == rep) continue;
            if (ratfn_sign_at(ref - sqdist_fn(arc, s[sid]), fe.time) != 0) {
                ok = false;
                break;
            }
        }
        // strictly farther than every static outside S' and the joiners
        if (ok) {
            for (std::size_t l = 0; l < s.size() && ok; ++l) {
                if (std::find(sprime_ids.begin(), sprime_ids.end(), l) != sprime_ids.end()) continue;
                if (std::find(fe.joining.begin(), fe.joining.end(), l) != fe.joining.end()) continue;
                if (ratfn_sign_at(ref - sqdist_fn(arc, s[l]), fe.time) <= 0) ok = false;
            }
        }
        if (ok) out.push_back(std::move(fe));
    }

    std::sort(out.begin(), out.end(),
              [](const FaceEvent& a, const FaceEvent& b) { return at_less(a.time, b.time); });
    return out;
}

std::vector<SphereCrossing> curve_sphere_intersections(const RatCurve& c, const Ball& ball) {
    RatFn dist = sqdist_fn(c, ball.center) - RatFn(ball.radius_sq);
    std::vector<SphereCrossing> out;
    if (dist.is_zero()) return out; // curve rides the sphere: no isolated crossings

    const auto roots = isolate_roots(dist.num(), c.domain);
    if (roots.empty()) return out;

    auto sign_at_rat = [&](const Rat& t) {
        return rat_sign(dist.num().eval(t)) * rat_sign(dist.den().eval(t));
    };

    for (std::size_t i = 0; i < roots.size(); ++i) {
        SphereCrossing sc{roots[i], CrossLabel::Tangent};
        if (!roots[i].even_multiplicity()) {
            // sample strictly after this root and before the next one
            AlgebraicTime cur = roots[i];
            Rat after;
            if (i + 1 < roots.size()) {
                AlgebraicTime nxt = roots[i + 1];
                after = gap_midpoint(cur, nxt);
            } else if (cur.is_rational() && cur.value() == c.domain.hi) {
                // crossing exactly at the right endpoint: flip from the left sample
                AlgebraicTime before_lo = i == 0 ? AlgebraicTime(c.domain.lo) : roots[i - 1];
                const Rat before = gap_midpoint(before_lo, cur);
                sc.label = sign_at_rat(before) > 0 ? CrossLabel::In : CrossLabel::Out;
                out.push_back(std::move(sc));
                continue;
            } else {
                after = gap_midpoint(cur, c.domain.hi);
            }
            sc.label = sign_at_rat(after) < 0 ? CrossLabel::In : CrossLabel::Out;
        }
        out.push_back(std::move(sc));
    }
    return out;
}

} // namespace onecenter
