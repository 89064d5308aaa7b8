#include "onecenter/roots.hpp"

#include "onecenter/errors.hpp"

#include <algorithm>
#include <deque>
#include <stdexcept>
#include <tuple>

namespace onecenter {

namespace {

// Primitive integer representative with the original sign kept. Sturm chains
// may be rescaled only by positive constants.
Poly primitive_keep_sign(const Poly& p) {
    if (p.is_zero()) return p;
    Poly q = poly_primitive(p);
    return p.leading() < 0 ? -q : q;
}

struct SturmChain {
    std::vector<Poly> seq;

    explicit SturmChain(const Poly& squarefree) {
        seq.push_back(squarefree);
        Poly d = squarefree.derivative();
        if (d.is_zero()) return;
        seq.push_back(primitive_keep_sign(d));
        while (seq.back().degree() > 0) {
            Poly r = poly_divmod(seq[seq.size() - 2], seq.back()).rem;
            if (r.is_zero()) break;
            seq.push_back(primitive_keep_sign(-r));
        }
    }

    // Sign variations at x, zeros skipped.
    int variations(const Rat& x) const {
        int v = 0, prev = 0;
        for (const auto& p : seq) {
            int s = rat_sign(p.eval(x));
            if (s == 0) continue;
            if (prev != 0 && s != prev) ++v;
            prev = s;
        }
        return v;
    }

    // Distinct roots in (a, b].
    int count(const Rat& a, const Rat& b) const { return variations(a) - variations(b); }
};

Poly linear_defining(const Rat& r) {
    // den*t - num: primitive with positive leading coefficient
    return Poly({Rat(-r.get_num()), Rat(r.get_den())});
}

Int rat_floor(const Rat& a) {
    Int q;
    mpz_fdiv_q(q.get_mpz_t(), a.get_num().get_mpz_t(), a.get_den().get_mpz_t());
    return q;
}

// Rational with the smallest denominator in the open interval (a, b).
Rat simplest_between(const Rat& a, const Rat& b) {
    if (a < 0 && 0 < b) return Rat(0);
    if (b <= 0) return -simplest_between(-b, -a);
    const Int ia = rat_floor(a);
    const Rat next(ia + 1);
    if (next < b) return next;
    // x = ia + 1/y with y in (1/(b-ia), 1/(a-ia)); the upper bound is
    // infinite when a is the integer ia itself
    const Rat lo_y = Rat(1) / (b - Rat(ia));
    if (a == Rat(ia)) return Rat(ia) + Rat(1) / Rat(rat_floor(lo_y) + 1);
    return Rat(ia) + Rat(1) / simplest_between(lo_y, Rat(1) / (a - Rat(ia)));
}

// If the single root inside `at` is rational, its denominator divides the
// leading coefficient of the (primitive integer) defining polynomial. Refine
// below 1/(2 lc^2): the root is then the only rational with denominator <= lc
// in the interval, and that is the simplest rational there.
bool try_extract_rational(const Poly& q, AlgebraicTime& at) {
    const Int lc = abs(q.leading().get_num());
    if (mpz_sizeinbase(lc.get_mpz_t(), 2) > 512) return false; // not worth the refinement
    const Rat bound = Rat(1) / Rat(2 * lc * lc);
    at.refine_below(bound);
    if (at.is_rational()) return true;
    const Rat candidate = simplest_between(at.lower(), at.upper());
    if (q.eval(candidate) != 0) return false;
    at = AlgebraicTime(candidate);
    return true;
}

} // namespace

AlgebraicTime::AlgebraicTime(const Rat& value)
    : defining_(linear_defining(value)), isolate_(value, value) {}

AlgebraicTime::AlgebraicTime(Poly defining, Interval isolate, bool even_multiplicity)
    : defining_(std::move(defining)), isolate_(std::move(isolate)), even_multiplicity_(even_multiplicity) {
    if (defining_.is_zero()) throw std::invalid_argument("AlgebraicTime: zero defining polynomial");
}

void AlgebraicTime::refine_step() {
    if (is_rational()) return;
    const Rat mid = isolate_.midpoint();
    const int sm = rat_sign(defining_.eval(mid));
    if (sm == 0) {
        isolate_ = Interval(mid, mid);
        return;
    }
    const int sl = rat_sign(defining_.eval(isolate_.lo));
    if (sl != sm)
        isolate_.hi = mid;
    else
        isolate_.lo = mid;
}

void AlgebraicTime::refine_below(const Rat& width) {
    while (!is_rational() && isolate_.width() > width) refine_step();
}

Rat AlgebraicTime::approx(const Rat& width) const {
    AlgebraicTime copy = *this;
    copy.refine_below(width);
    return copy.isolate().midpoint();
}

AlgebraicTime refine(const AlgebraicTime& a, const Rat& width) {
    AlgebraicTime copy = a;
    copy.refine_below(width);
    return copy;
}

int sturm_count(const Poly& p, const Interval& iv) {
    if (p.is_zero()) throw std::invalid_argument("sturm_count: zero polynomial");
    if (iv.lo > iv.hi) throw std::invalid_argument("sturm_count: inverted interval");
    if (iv.lo == iv.hi) return 0;
    const Poly q = poly_squarefree_part(p);
    if (q.degree() < 1) return 0;
    return SturmChain(q).count(iv.lo, iv.hi);
}

int compare(const AlgebraicTime& a0, const AlgebraicTime& b0) {
    if (a0.is_rational() && b0.is_rational()) {
        const int c = cmp(a0.value(), b0.value());
        return c < 0 ? -1 : (c > 0 ? 1 : 0);
    }
    AlgebraicTime a = a0, b = b0;

    // Equality is decided exactly, up front; roots that differ separate below.
    if (a.is_rational()) {
        const Rat& v = a.value();
        if (b.lower() < v && v < b.upper() && b.defining().eval(v) == 0) return 0;
    } else if (b.is_rational()) {
        const Rat& v = b.value();
        if (a.lower() < v && v < a.upper() && a.defining().eval(v) == 0) return 0;
    } else {
        const Rat lo = std::max(a.lower(), b.lower());
        const Rat hi = std::min(a.upper(), b.upper());
        if (lo < hi) {
            const Poly g = poly_gcd(a.defining(), b.defining());
            if (g.degree() > 0 && sturm_count(g, Interval(lo, hi)) >= 1) return 0;
        }
    }

    for (;;) {
        if (a.is_rational() && b.is_rational())
            return cmp(a.value(), b.value()) < 0 ? -1 : 1;
        if (a.upper() < b.lower() || (a.is_rational() && a.upper() <= b.lower())) return -1;
        if (b.upper() < a.lower() || (b.is_rational() && b.upper() <= a.lower())) return 1;
        a.refine_step();
        b.refine_step();
    }
}

int sign_at(const Poly& h, AlgebraicTime& tau) {
    if (h.is_zero()) return 0;
    if (tau.is_rational()) return rat_sign(h.eval(tau.value()));

    const Poly g = poly_gcd(h, tau.defining());
    if (g.degree() > 0 && sturm_count(g, tau.isolate()) >= 1) return 0;

    const SturmChain chain(poly_squarefree_part(h));
    for (;;) {
        if (chain.count(tau.lower(), tau.upper()) == 0) return rat_sign(h.eval(tau.upper()));
        tau.refine_step();
        if (tau.is_rational()) return rat_sign(h.eval(tau.value()));
    }
}

namespace {

bool vanishes_at(const Poly& h, AlgebraicTime& at) {
    if (h.is_zero()) return true;
    if (at.is_rational()) return h.eval(at.value()) == 0;
    return sign_at(h, at) == 0;
}

bool even_parity_in(const Poly& p, AlgebraicTime at) {
    int m = 0;
    Poly h = p;
    while (!h.is_zero() && vanishes_at(h, at)) {
        h = h.derivative();
        ++m;
    }
    return m % 2 == 0;
}

} // namespace

std::vector<AlgebraicTime> isolate_roots(const Poly& p, const Interval& iv) {
    if (p.is_zero()) throw std::invalid_argument("isolate_roots: zero polynomial");
    if (iv.lo > iv.hi) throw std::invalid_argument("isolate_roots: inverted interval");

    Poly q = poly_squarefree_part(p);
    std::vector<Rat> rational_roots;
    std::vector<Interval> open_intervals;

    // Probes that hit a root exactly deflate q and restart; every extracted
    // root is rational, every surviving root gets a sign-change interval.
    bool restart = true;
    while (restart) {
        restart = false;
        open_intervals.clear();

        for (const Rat* e : {&iv.lo, &iv.hi}) {
            if (q.degree() >= 1 && q.eval(*e) == 0) {
                rational_roots.push_back(*e);
                q = poly_primitive(poly_exact_div(q, linear_defining(*e)));
                restart = true;
            }
        }
        if (restart) continue;
        if (q.degree() < 1 || iv.lo == iv.hi) break;

        const SturmChain chain(q);
        std::deque<std::tuple<Rat, Rat, int>> work;
        const int total = chain.count(iv.lo, iv.hi);
        if (total > 0) work.emplace_back(iv.lo, iv.hi, total);

        while (!work.empty()) {
            auto [a, b, c] = work.front();
            work.pop_front();
            if (c == 1) {
                // q(a) != 0 and q(b) != 0 here, so the single root is interior
                // and the endpoint signs differ.
                open_intervals.emplace_back(a, b);
                continue;
            }
            const Rat mid = (a + b) / 2;
            if (q.eval(mid) == 0) {
                rational_roots.push_back(mid);
                q = poly_primitive(poly_exact_div(q, linear_defining(mid)));
                restart = true;
                break;
            }
            const int left = chain.count(a, mid);
            if (left > 0) work.emplace_back(a, mid, left);
            if (c - left > 0) work.emplace_back(mid, b, c - left);
        }
    }

    std::vector<AlgebraicTime> out;
    out.reserve(rational_roots.size() + open_intervals.size());
    for (const Rat& r : rational_roots) out.emplace_back(r);
    for (const Interval& itv : open_intervals) {
        AlgebraicTime at(q, itv);
        if (try_extract_rational(q, at)) rational_roots.push_back(at.value());
        out.push_back(std::move(at));
    }

    // Keep isolating intervals pairwise disjoint: push interval roots off any
    // extracted rational root they happen to straddle.
    for (auto& at : out) {
        if (at.is_rational()) continue;
        for (const Rat& r : rational_roots)
            while (at.lower() <= r && r <= at.upper() && !at.is_rational()) at.refine_step();
    }

    for (auto& at : out) at.set_even_multiplicity(even_parity_in(p, at));

    std::sort(out.begin(), out.end(), [](const AlgebraicTime& x, const AlgebraicTime& y) {
        if (x.lower() != y.lower()) return x.lower() < y.lower();
        return x.upper() < y.upper();
    });
    return out;
}

Rat gap_midpoint(AlgebraicTime& a, AlgebraicTime& b) {
    for (;;) {
        if (a.is_rational() && b.is_rational()) {
            if (!(a.value() < b.value())) throw std::logic_error("gap_midpoint: roots not ordered");
            return (a.value() + b.value()) / 2;
        }
        if (a.upper() < b.lower()) return (a.upper() + b.lower()) / 2;
        a.refine_step();
        b.refine_step();
    }
}

Rat gap_midpoint(AlgebraicTime& a, const Rat& b) {
    if (a.is_rational()) {
        if (!(a.value() < b)) throw std::logic_error("gap_midpoint: root not below endpoint");
        return (a.value() + b) / 2;
    }
    while (!(a.upper() < b)) {
        a.refine_step();
        if (a.is_rational()) return (a.value() + b) / 2;
    }
    return (a.upper() + b) / 2;
}

} // namespace onecenter
