#include "onecenter/seb.hpp"

#include "onecenter/errors.hpp"

#include <algorithm>
#include <random>
#include <stdexcept>

namespace onecenter {

namespace {

// Smallest ball with all of R on its boundary; R is co-spherical whenever
// the Welzl invariant holds. Affinely dependent R is reduced to a maximum
// affinely independent subset first (the circumball is unchanged).
Ball ball_with_boundary(const std::vector<Point>& r, std::size_t dim) {
    if (r.empty()) {
        Ball b;
        b.center = Point(std::vector<Rat>(dim, Rat(0)));
        b.radius_sq = Rat(-1); // contains nothing
        return b;
    }
    if (r.size() == 1) return Ball{r[0], Rat(0)};
    const AffineRank ar = affine_rank(r);
    std::vector<Point> basis;
    basis.reserve(ar.basis.size());
    for (auto i : ar.basis) basis.push_back(r[i]);
    Circumball cb = basis.size() == 1 ? Circumball{basis[0], Rat(0)} : circumcenter(basis);
    for (const auto& p : r)
        if (sqdist(p, cb.center) != cb.radius_sq)
            throw std::logic_error("ball_with_boundary: boundary set is not co-spherical");
    return Ball{std::move(cb.center), std::move(cb.radius_sq)};
}

struct WelzlState {
    std::vector<Point> pts; // mutated by move-to-front
    std::size_t dim;

    Ball run(std::size_t n, std::vector<Point>& boundary) {
        Ball b = ball_with_boundary(boundary, dim);
        for (std::size_t i = 0; i < n; ++i) {
            if (b.contains(pts[i])) continue;
            boundary.push_back(pts[i]);
            b = run(i, boundary);
            boundary.pop_back();
            // move-to-front
            Point moved = pts[i];
            pts.erase(pts.begin() + static_cast<std::ptrdiff_t>(i));
            pts.insert(pts.begin(), std::move(moved));
        }
        return b;
    }
};

template <typename F>
bool for_each_index_subset(std::size_t n, std::size_t k, F&& body) {
    if (k > n) return true;
    std::vector<std::size_t> idx(k);
    for (std::size_t i = 0; i < k; ++i) idx[i] = i;
    for (;;) {
        if (!body(idx)) return false;
        std::size_t i = k;
        while (i-- > 0) {
            if (idx[i] != i + n - k) {
                ++idx[i];
                for (std::size_t j = i + 1; j < k; ++j) idx[j] = idx[j - 1] + 1;
                break;
            }
            if (i == 0) return true;
        }
    }
}

// Certified support: smallest (size, then lexicographic) affinely independent
// subset of the boundary points whose circumball is the ball itself and whose
// circumcenter lies in its convex hull. Exists by Caratheodory applied to the
// center inside the convex hull of the boundary points.
std::vector<std::size_t> certify_support(const Ball& ball, const std::vector<Point>& pts,
                                         const std::vector<std::size_t>& boundary_ids) {
    const std::size_t d = pts.empty() ? 0 : pts[0].dim();
    std::vector<std::size_t> result;
    for (std::size_t size = 1; size <= std::min(boundary_ids.size(), d + 1); ++size) {
        const bool found_none = for_each_index_subset(boundary_ids.size(), size, [&](const std::vector<std::size_t>& sel) {
            std::vector<Point> sub;
            sub.reserve(sel.size());
            for (auto s : sel) sub.push_back(pts[boundary_ids[s]]);
            if (sub.size() == 1) {
                if (ball.radius_sq != 0) return true;
            } else {
                if (affine_rank(sub).rank != static_cast<int>(sub.size()) - 1) return true;
                const Circumball cb = circumcenter(sub);
                if (!(cb.center == ball.center) || cb.radius_sq != ball.radius_sq) return true;
                for (const auto& coeff : cc_affine_coefficients(sub))
                    if (coeff < 0) return true;
            }
            result.reserve(sel.size());
            for (auto s : sel) result.push_back(boundary_ids[s]);
            return false; // stop
        });
        if (!found_none) return result;
    }
    throw std::logic_error("certify_support: no certified support subset found");
}

} // namespace

SebResult seb(const std::vector<Point>& pts, std::uint64_t seed) {
    if (pts.empty()) throw std::invalid_argument("seb: empty point set");
    const std::size_t d = pts[0].dim();
    for (const auto& p : pts)
        if (p.dim() != d) throw std::invalid_argument("seb: dimension mismatch");

    // dedupe (tracker samples may instantiate coincident points)
    std::vector<Point> distinct;
    for (const auto& p : pts)
        if (std::find(distinct.begin(), distinct.end(), p) == distinct.end()) distinct.push_back(p);

    WelzlState st{distinct, d};
    std::mt19937_64 rng(seed);
    std::shuffle(st.pts.begin(), st.pts.end(), rng);

    std::vector<Point> boundary;
    Ball ball = st.run(st.pts.size(), boundary);
    if (distinct.size() == 1) ball = Ball{distinct[0], Rat(0)};

    // boundary ids against the original input, lowest index representative
    std::vector<std::size_t> boundary_ids;
    std::vector<Point> seen;
    for (std::size_t i = 0; i < pts.size(); ++i) {
        if (!ball.on_boundary(pts[i])) continue;
        if (std::find(seen.begin(), seen.end(), pts[i]) != seen.end()) continue;
        seen.push_back(pts[i]);
        boundary_ids.push_back(i);
    }

    SebResult result;
    result.support = certify_support(ball, pts, boundary_ids);
    result.ball = std::move(ball);
    return result;
}

Ball seb_bruteforce(const std::vector<Point>& pts) {
    if (pts.empty()) throw std::invalid_argument("seb_bruteforce: empty point set");
    if (pts.size() == 1) return Ball{pts[0], Rat(0)};
    const std::size_t d = pts[0].dim();

    bool have = false;
    Ball best;
    for (std::size_t size = 2; size <= std::min(pts.size(), d + 1); ++size) {
        for_each_index_subset(pts.size(), size, [&](const std::vector<std::size_t>& sel) {
            std::vector<Point> sub;
            sub.reserve(sel.size());
            for (auto s : sel) sub.push_back(pts[s]);
            if (affine_rank(sub).rank != static_cast<int>(sub.size()) - 1) return true;
            if (!is_boundary_support(sub, pts)) return true;
            const Circumball cb = circumcenter(sub);
            const Ball candidate{cb.center, cb.radius_sq};
            if (have && !(candidate == best))
                throw std::logic_error("seb_bruteforce: certified balls disagree");
            best = candidate;
            have = true;
            return true;
        });
    }
    if (!have) {
        // all points identical (distinct inputs never reach here)
        best = Ball{pts[0], Rat(0)};
        for (const auto& p : pts)
            if (!(p == pts[0])) throw std::logic_error("seb_bruteforce: no boundary support found");
    }
    return best;
}

} // namespace onecenter
