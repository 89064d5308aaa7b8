#include "onecenter/poly.hpp"

#include <stdexcept>

namespace onecenter {

void Poly::trim() {
    while (!c_.empty() && c_.back() == 0) c_.pop_back();
}

Poly Poly::monomial(std::size_t k, const Rat& coeff) {
    if (coeff == 0) return Poly();
    std::vector<Rat> c(k + 1, Rat(0));
    c[k] = coeff;
    return Poly(std::move(c));
}

Rat Poly::eval(const Rat& t) const {
    Rat acc(0);
    for (auto it = c_.rbegin(); it != c_.rend(); ++it) acc = acc * t + *it;
    return acc;
}

Poly Poly::derivative() const {
    if (c_.size() <= 1) return Poly();
    std::vector<Rat> d(c_.size() - 1);
    for (std::size_t k = 1; k < c_.size(); ++k) d[k - 1] = c_[k] * Rat(static_cast<long>(k));
    return Poly(std::move(d));
}

Poly Poly::operator-() const {
    std::vector<Rat> d(c_.size());
    for (std::size_t i = 0; i < c_.size(); ++i) d[i] = -c_[i];
    return Poly(std::move(d));
}

Poly& Poly::operator+=(const Poly& o) {
    if (o.c_.size() > c_.size()) c_.resize(o.c_.size(), Rat(0));
    for (std::size_t i = 0; i < o.c_.size(); ++i) c_[i] += o.c_[i];
    trim();
    return *this;
}

Poly& Poly::operator-=(const Poly& o) {
    if (o.c_.size() > c_.size()) c_.resize(o.c_.size(), Rat(0));
    for (std::size_t i = 0; i < o.c_.size(); ++i) c_[i] -= o.c_[i];
    trim();
    return *this;
}

Poly& Poly::operator*=(const Poly& o) {
    if (is_zero() || o.is_zero()) {
        c_.clear();
        return *this;
    }
    std::vector<Rat> prod(c_.size() + o.c_.size() - 1, Rat(0));
    for (std::size_t i = 0; i < c_.size(); ++i)
        for (std::size_t j = 0; j < o.c_.size(); ++j) prod[i + j] += c_[i] * o.c_[j];
    c_ = std::move(prod);
    trim();
    return *this;
}

Poly& Poly::operator*=(const Rat& s) {
    if (s == 0) {
        c_.clear();
        return *this;
    }
    for (auto& v : c_) v *= s;
    return *this;
}

std::string Poly::to_string(const std::string& var) const {
    if (is_zero()) return "0";
    std::string out;
    for (std::size_t k = c_.size(); k-- > 0;) {
        if (c_[k] == 0) continue;
        if (!out.empty()) out += c_[k] > 0 ? " + " : " - ";
        else if (c_[k] < 0) out += "-";
        Rat a = rat_abs(c_[k]);
        bool unit = a == 1 && k > 0;
        if (!unit) out += rat_to_string(a);
        if (k > 0) {
            if (!unit) out += "*";
            out += var;
            if (k > 1) out += "^" + std::to_string(k);
        }
    }
    return out;
}

PolyDivMod poly_divmod(const Poly& a, const Poly& b) {
    if (b.is_zero()) throw std::invalid_argument("poly_divmod: division by zero polynomial");
    std::vector<Rat> rem = a.coeffs();
    const auto& bc = b.coeffs();
    int db = b.degree();
    if (a.degree() < db) return {Poly(), a};
    std::vector<Rat> quot(a.degree() - db + 1, Rat(0));
    for (int k = a.degree(); k >= db; --k) {
        Rat q = rem[k] / bc[db];
        if (q == 0) continue;
        quot[k - db] = q;
        for (int j = 0; j <= db; ++j) rem[k - db + j] -= q * bc[j];
    }
    return {Poly(std::move(quot)), Poly(std::move(rem))};
}

Poly poly_exact_div(const Poly& a, const Poly& b) {
    auto [q, r] = poly_divmod(a, b);
    if (!r.is_zero()) throw std::logic_error("poly_exact_div: nonzero remainder");
    return q;
}

Poly poly_primitive(const Poly& a) {
    if (a.is_zero()) return a;
    // common denominator, then integer content
    Int den(1);
    for (const auto& c : a.coeffs()) mpz_lcm(den.get_mpz_t(), den.get_mpz_t(), c.get_den().get_mpz_t());
    Int content(0);
    std::vector<Int> ints;
    ints.reserve(a.coeffs().size());
    for (const auto& c : a.coeffs()) {
        Int v = c.get_num() * (den / c.get_den());
        mpz_gcd(content.get_mpz_t(), content.get_mpz_t(), v.get_mpz_t());
        ints.push_back(std::move(v));
    }
    if (sgn(ints.back()) < 0) content = -content;
    std::vector<Rat> out;
    out.reserve(ints.size());
    for (auto& v : ints) out.emplace_back(Rat(v / content));
    return Poly(std::move(out));
}

Poly poly_gcd(const Poly& a, const Poly& b) {
    Poly f = poly_primitive(a);
    Poly g = poly_primitive(b);
    if (f.is_zero()) return g;
    if (g.is_zero()) return f;
    if (f.degree() < g.degree()) std::swap(f, g);
    // Euclid over Q[t], each remainder renormalized to its primitive
    // integer representative to keep coefficients small.
    while (!g.is_zero()) {
        Poly r = poly_divmod(f, g).rem;
        f = std::move(g);
        g = poly_primitive(r);
    }
    return f;
}

Poly poly_squarefree_part(const Poly& a) {
    if (a.is_zero()) return a;
    if (a.degree() == 0) return Poly::constant(Rat(1));
    Poly g = poly_gcd(a, a.derivative());
    return poly_primitive(poly_exact_div(poly_primitive(a), g));
}

Poly poly_pow(const Poly& base, unsigned exp) {
    Poly acc = Poly::constant(Rat(1));
    Poly b = base;
    while (exp) {
        if (exp & 1u) acc *= b;
        b *= b;
        exp >>= 1u;
    }
    return acc;
}

} // namespace onecenter
