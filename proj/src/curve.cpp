#include "onecenter/curve.hpp"

#include "onecenter/errors.hpp"

#include <stdexcept>

namespace onecenter {

RatCurve RatCurve::constant(const Point& p, const Interval& dom) {
    std::vector<RatFn> comps;
    comps.reserve(p.dim());
    for (const auto& c : p.x) comps.emplace_back(c);
    return RatCurve(std::move(comps), dom);
}

bool RatCurve::is_constant() const {
    for (const auto& c : components)
        if (!c.is_constant()) return false;
    return true;
}

Point RatCurve::eval(const Rat& t) const {
    std::vector<Rat> coords;
    coords.reserve(components.size());
    for (const auto& c : components) coords.push_back(c.eval(t));
    return Point(std::move(coords));
}

std::string RatCurve::to_string() const {
    std::string s = "(";
    for (std::size_t i = 0; i < components.size(); ++i) {
        if (i) s += ", ";
        s += components[i].to_string();
    }
    return s + ")";
}

void validate_curve_domain(const RatCurve& c, const std::string& name) {
    for (std::size_t i = 0; i < c.components.size(); ++i) {
        const Poly& den = c.components[i].den();
        if (den.is_constant()) continue;
        const auto roots = isolate_roots(den, c.domain);
        if (!roots.empty()) {
            const Rat w(1, 1000000);
            throw ValidationError(name + ": denominator of component " + std::to_string(i) +
                                  " vanishes on the domain near t = " +
                                  rat_to_decimal(roots.front().approx(w), 6));
        }
    }
}

bool curves_eq(const RatCurve& a, const RatCurve& b) {
    if (a.dim() != b.dim()) return false;
    for (std::size_t i = 0; i < a.dim(); ++i)
        if (!ratfn_eq(a.components[i], b.components[i])) return false;
    return true;
}

Poly bareiss_det(std::vector<std::vector<Poly>> m) {
    const std::size_t n = m.size();
    if (n == 0) return Poly::constant(Rat(1));
    int sign = 1;
    Poly prev = Poly::constant(Rat(1));
    for (std::size_t k = 0; k + 1 < n; ++k) {
        if (m[k][k].is_zero()) {
            std::size_t r = k + 1;
            while (r < n && m[r][k].is_zero()) ++r;
            if (r == n) return Poly();
            std::swap(m[r], m[k]);
            sign = -sign;
        }
        for (std::size_t i = k + 1; i < n; ++i) {
            for (std::size_t j = k + 1; j < n; ++j) {
                Poly num = m[k][k] * m[i][j] - m[i][k] * m[k][j];
                m[i][j] = num.is_zero() ? Poly() : poly_exact_div(num, prev);
            }
            m[i][k] = Poly();
        }
        prev = m[k][k];
    }
    Poly det = m[n - 1][n - 1];
    return sign < 0 ? -det : det;
}

namespace {

Poly poly_lcm(const Poly& a, const Poly& b) {
    if (a.is_zero() || b.is_zero()) return Poly();
    return poly_primitive(poly_exact_div(a * b, poly_gcd(a, b)));
}

// entry * L must be a polynomial (L is a multiple of the denominator)
Poly scale_to_poly(const RatFn& entry, const Poly& l) {
    return entry.num() * poly_exact_div(l, entry.den());
}

} // namespace

SymbolicCircumcenter circumcenter_symbolic(const std::vector<Point>& static_pts,
                                           const std::vector<RatCurve>& mobile_curves,
                                           const Interval& domain) {
    const std::size_t total = static_pts.size() + mobile_curves.size();
    if (total < 2) throw std::invalid_argument("circumcenter_symbolic: need at least 2 points");

    std::size_t dim = 0;
    if (!static_pts.empty())
        dim = static_pts[0].dim();
    else
        dim = mobile_curves[0].dim();

    // coordinates of all participating points as rational functions
    std::vector<std::vector<RatFn>> q;
    q.reserve(total);
    for (const auto& p : static_pts) {
        if (p.dim() != dim) throw std::invalid_argument("circumcenter_symbolic: dimension mismatch");
        std::vector<RatFn> comps;
        comps.reserve(dim);
        for (const auto& c : p.x) comps.emplace_back(c);
        q.push_back(std::move(comps));
    }
    for (const auto& mc : mobile_curves) {
        if (mc.dim() != dim) throw std::invalid_argument("circumcenter_symbolic: dimension mismatch");
        q.push_back(mc.components);
    }

    const std::size_t k = total - 1;
    std::vector<std::vector<RatFn>> diff(k, std::vector<RatFn>(dim));
    for (std::size_t i = 0; i < k; ++i)
        for (std::size_t c = 0; c < dim; ++c) diff[i][c] = q[i + 1][c] - q[0][c];

    std::vector<std::vector<RatFn>> gram(k, std::vector<RatFn>(k));
    std::vector<RatFn> rhs(k);
    for (std::size_t i = 0; i < k; ++i) {
        for (std::size_t j = i; j < k; ++j) {
            RatFn dot;
            for (std::size_t c = 0; c < dim; ++c) dot += diff[i][c] * diff[j][c];
            gram[i][j] = dot;
            gram[j][i] = dot;
        }
        rhs[i] = gram[i][i] * RatFn(Rat(1, 2));
    }

    // clear denominators row by row; the Cramer ratios are unaffected
    std::vector<std::vector<Poly>> m(k, std::vector<Poly>(k));
    std::vector<Poly> rhs_poly(k);
    Poly row_scale_prod = Poly::constant(Rat(1));
    for (std::size_t i = 0; i < k; ++i) {
        Poly l = Poly::constant(Rat(1));
        for (std::size_t j = 0; j < k; ++j) l = poly_lcm(l, gram[i][j].den());
        l = poly_lcm(l, rhs[i].den());
        for (std::size_t j = 0; j < k; ++j) m[i][j] = scale_to_poly(gram[i][j], l);
        rhs_poly[i] = scale_to_poly(rhs[i], l);
        row_scale_prod *= l;
    }

    const Poly det = bareiss_det(m);
    if (det.is_zero())
        throw IdenticallyDegenerate("circumcenter_symbolic: Gram determinant vanishes identically");

    std::vector<RatFn> lambda(k);
    for (std::size_t j = 0; j < k; ++j) {
        std::vector<std::vector<Poly>> mj = m;
        for (std::size_t i = 0; i < k; ++i) mj[i][j] = rhs_poly[i];
        lambda[j] = RatFn(bareiss_det(std::move(mj)), det);
    }

    SymbolicCircumcenter out;
    out.curve.domain = domain;
    out.curve.components.resize(dim);
    for (std::size_t c = 0; c < dim; ++c) {
        RatFn comp = q[0][c];
        for (std::size_t j = 0; j < k; ++j) comp += lambda[j] * diff[j][c];
        out.curve.components[c] = std::move(comp);
    }
    RatFn r2;
    for (std::size_t c = 0; c < dim; ++c) {
        const RatFn d = out.curve.components[c] - q[0][c];
        r2 += d * d;
    }
    out.radius_sq = std::move(r2);
    out.gram_det = RatFn(det, row_scale_prod);
    return out;
}

Poly ratfn_matrix_det_num(const std::vector<std::vector<RatFn>>& m) {
    const std::size_t n = m.size();
    std::vector<std::vector<Poly>> scaled(n, std::vector<Poly>(n));
    for (std::size_t i = 0; i < n; ++i) {
        Poly l = Poly::constant(Rat(1));
        for (std::size_t j = 0; j < n; ++j) l = poly_lcm(l, m[i][j].den());
        for (std::size_t j = 0; j < n; ++j) scaled[i][j] = scale_to_poly(m[i][j], l);
    }
    return bareiss_det(std::move(scaled));
}

CurveIntersections curve_curve_intersections(const RatCurve& a, const RatCurve& b, const Interval& domain) {
    if (a.dim() != b.dim()) throw std::invalid_argument("curve_curve_intersections: dimension mismatch");
    CurveIntersections out;
    Poly g;
    bool any_nonzero = false;
    for (std::size_t c = 0; c < a.dim(); ++c) {
        const RatFn diff = a.components[c] - b.components[c];
        if (diff.is_zero()) continue;
        any_nonzero = true;
        g = g.is_zero() ? poly_primitive(diff.num()) : poly_gcd(g, diff.num());
        if (g.degree() < 1) return out; // no common root anywhere
    }
    if (!any_nonzero) {
        out.identical = true;
        return out;
    }
    out.times = isolate_roots(g, domain);
    return out;
}

} // namespace onecenter
