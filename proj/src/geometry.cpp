#include "onecenter/geometry.hpp"

#include "onecenter/errors.hpp"

#include <stdexcept>

namespace onecenter {

std::string Point::to_string() const {
    std::string s = "(";
    for (std::size_t i = 0; i < x.size(); ++i) {
        if (i) s += ", ";
        s += rat_to_string(x[i]);
    }
    return s + ")";
}

Rat sqdist(const Point& a, const Point& b) {
    if (a.dim() != b.dim()) throw std::invalid_argument("sqdist: dimension mismatch");
    Rat s(0);
    for (std::size_t i = 0; i < a.dim(); ++i) {
        const Rat d = a.x[i] - b.x[i];
        s += d * d;
    }
    return s;
}

Rat sqnorm(const Point& a) {
    Rat s(0);
    for (const auto& v : a.x) s += v * v;
    return s;
}

namespace {

// Solves m * sol = rhs over the rationals; false when m is singular.
bool solve_linear(std::vector<std::vector<Rat>> m, std::vector<Rat> rhs, std::vector<Rat>& sol) {
    const std::size_t n = m.size();
    for (std::size_t col = 0; col < n; ++col) {
        std::size_t piv = col;
        while (piv < n && m[piv][col] == 0) ++piv;
        if (piv == n) return false;
        std::swap(m[piv], m[col]);
        std::swap(rhs[piv], rhs[col]);
        for (std::size_t r = col + 1; r < n; ++r) {
            if (m[r][col] == 0) continue;
            const Rat f = m[r][col] / m[col][col];
            for (std::size_t c = col; c < n; ++c) m[r][c] -= f * m[col][c];
            rhs[r] -= f * rhs[col];
        }
    }
    sol.assign(n, Rat(0));
    for (std::size_t r = n; r-- > 0;) {
        Rat acc = rhs[r];
        for (std::size_t c = r + 1; c < n; ++c) acc -= m[r][c] * sol[c];
        sol[r] = acc / m[r][r];
    }
    return true;
}

} // namespace

Rat rat_det(std::vector<std::vector<Rat>> m) {
    const std::size_t n = m.size();
    Rat det(1);
    for (std::size_t col = 0; col < n; ++col) {
        std::size_t piv = col;
        while (piv < n && m[piv][col] == 0) ++piv;
        if (piv == n) return Rat(0);
        if (piv != col) {
            std::swap(m[piv], m[col]);
            det = -det;
        }
        det *= m[col][col];
        for (std::size_t r = col + 1; r < n; ++r) {
            if (m[r][col] == 0) continue;
            const Rat f = m[r][col] / m[col][col];
            for (std::size_t c = col; c < n; ++c) m[r][c] -= f * m[col][c];
        }
    }
    return det;
}

AffineRank affine_rank(const std::vector<Point>& pts) {
    if (pts.empty()) throw std::invalid_argument("affine_rank: empty point set");
    const std::size_t d = pts[0].dim();

    AffineRank out;
    out.basis.push_back(0);
    // row-echelon basis of difference vectors relative to pts[0]
    std::vector<std::vector<Rat>> echelon;
    std::vector<std::size_t> lead_cols;

    for (std::size_t i = 1; i < pts.size(); ++i) {
        if (pts[i].dim() != d) throw std::invalid_argument("affine_rank: dimension mismatch");
        std::vector<Rat> v(d);
        for (std::size_t c = 0; c < d; ++c) v[c] = pts[i].x[c] - pts[0].x[c];
        for (std::size_t r = 0; r < echelon.size(); ++r) {
            if (v[lead_cols[r]] == 0) continue;
            const Rat f = v[lead_cols[r]] / echelon[r][lead_cols[r]];
            for (std::size_t c = 0; c < d; ++c) v[c] -= f * echelon[r][c];
        }
        std::size_t lead = 0;
        while (lead < d && v[lead] == 0) ++lead;
        if (lead == d) continue; // affinely dependent on the selected sublist
        echelon.push_back(std::move(v));
        lead_cols.push_back(lead);
        out.basis.push_back(i);
        if (echelon.size() == d) break; // full rank
    }
    out.rank = static_cast<int>(out.basis.size()) - 1;
    return out;
}

GramSystem build_gram_system(const std::vector<Point>& pts) {
    if (pts.size() < 2) throw std::invalid_argument("build_gram_system: need at least 2 points");
    const std::size_t k = pts.size() - 1;
    const Point& p0 = pts[0];
    std::vector<std::vector<Rat>> diff(k, std::vector<Rat>(p0.dim()));
    for (std::size_t i = 0; i < k; ++i)
        for (std::size_t c = 0; c < p0.dim(); ++c) diff[i][c] = pts[i + 1].x[c] - p0.x[c];

    GramSystem sys;
    sys.base = p0;
    sys.matrix.assign(k, std::vector<Rat>(k, Rat(0)));
    sys.rhs.assign(k, Rat(0));
    for (std::size_t i = 0; i < k; ++i) {
        for (std::size_t j = i; j < k; ++j) {
            Rat dot(0);
            for (std::size_t c = 0; c < p0.dim(); ++c) dot += diff[i][c] * diff[j][c];
            sys.matrix[i][j] = dot;
            sys.matrix[j][i] = dot;
        }
        sys.rhs[i] = sys.matrix[i][i] / 2;
    }
    return sys;
}

namespace {

std::vector<Rat> gram_lambda(const std::vector<Point>& pts) {
    const GramSystem sys = build_gram_system(pts);
    std::vector<Rat> lambda;
    if (!solve_linear(sys.matrix, sys.rhs, lambda))
        throw DegenerateSimplex("circumcenter of an affinely dependent point set");
    return lambda;
}

} // namespace

Circumball circumcenter(const std::vector<Point>& pts) {
    if (pts.size() < 2) throw std::invalid_argument("circumcenter: need at least 2 points");
    const std::vector<Rat> lambda = gram_lambda(pts);
    const Point& p0 = pts[0];
    Point c = p0;
    for (std::size_t j = 0; j < lambda.size(); ++j)
        for (std::size_t i = 0; i < p0.dim(); ++i) c.x[i] += lambda[j] * (pts[j + 1].x[i] - p0.x[i]);
    return {c, sqdist(c, p0)};
}

std::vector<Rat> cc_affine_coefficients(const std::vector<Point>& pts) {
    const std::vector<Rat> lambda = gram_lambda(pts);
    Rat sum(0);
    for (const auto& l : lambda) sum += l;
    std::vector<Rat> coeffs;
    coeffs.reserve(pts.size());
    coeffs.push_back(Rat(1) - sum);
    coeffs.insert(coeffs.end(), lambda.begin(), lambda.end());
    return coeffs;
}

bool is_boundary_support(const std::vector<Point>& T, const std::vector<Point>& S_all) {
    const Circumball cb = circumcenter(T);
    for (const auto& p : S_all)
        if (sqdist(p, cb.center) > cb.radius_sq) return false;
    for (const auto& coeff : cc_affine_coefficients(T))
        if (coeff < 0) return false;
    return true;
}

namespace {

// Lifted determinant: rows (p, |p|^2, 1). Zero iff the points are
// co-spherical or lie in a common hyperplane.
Rat lifted_det(const std::vector<Point>& pts, const std::vector<std::size_t>& idx) {
    const std::size_t d = pts[idx[0]].dim();
    std::vector<std::vector<Rat>> m(idx.size(), std::vector<Rat>(d + 2));
    for (std::size_t r = 0; r < idx.size(); ++r) {
        const Point& p = pts[idx[r]];
        for (std::size_t c = 0; c < d; ++c) m[r][c] = p.x[c];
        m[r][d] = sqnorm(p);
        m[r][d + 1] = Rat(1);
    }
    return rat_det(std::move(m));
}

template <typename F>
bool for_each_subset(std::size_t n, std::size_t k, F&& body) {
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

} // namespace

bool general_position_check(const std::vector<Point>& pts) {
    if (pts.empty()) return true;
    const std::size_t d = pts[0].dim();
    const std::size_t n = pts.size();

    // affine independence of every subset of size <= d+1 reduces to the
    // subsets of size min(n, d+1)
    const std::size_t k = std::min(n, d + 1);
    bool ok = for_each_subset(n, k, [&](const std::vector<std::size_t>& idx) {
        std::vector<Point> sub;
        sub.reserve(idx.size());
        for (auto i : idx) sub.push_back(pts[i]);
        return affine_rank(sub).rank == static_cast<int>(idx.size()) - 1;
    });
    if (!ok) return false;

    return for_each_subset(n, d + 2, [&](const std::vector<std::size_t>& idx) {
        return lifted_det(pts, idx) != 0;
    });
}

} // namespace onecenter
