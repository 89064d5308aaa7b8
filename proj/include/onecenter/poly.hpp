#ifndef ONECENTER_POLY_HPP
#define ONECENTER_POLY_HPP

#include "onecenter/rat.hpp"

#include <initializer_list>
#include <string>
#include <vector>

namespace onecenter {

// Univariate polynomial over Rat, coefficients stored lowest degree first.
// The zero polynomial has an empty coefficient vector; otherwise the
// leading (last) coefficient is nonzero.
class Poly {
public:
    Poly() = default;
    explicit Poly(std::vector<Rat> coeffs) : c_(std::move(coeffs)) { trim(); }
    Poly(std::initializer_list<Rat> coeffs) : c_(coeffs) { trim(); }

    static Poly zero() { return Poly(); }
    static Poly constant(const Rat& v) { return Poly({v}); }
    // t^k
    static Poly monomial(std::size_t k, const Rat& coeff = Rat(1));
    static Poly variable() { return monomial(1); }

    bool is_zero() const { return c_.empty(); }
    // degree of the zero polynomial is -1
    int degree() const { return static_cast<int>(c_.size()) - 1; }
    const std::vector<Rat>& coeffs() const { return c_; }
    const Rat& leading() const { return c_.back(); }
    Rat coeff(std::size_t k) const { return k < c_.size() ? c_[k] : Rat(0); }
    bool is_constant() const { return c_.size() <= 1; }

    Rat eval(const Rat& t) const;
    Poly derivative() const;

    Poly operator-() const;
    Poly& operator+=(const Poly& o);
    Poly& operator-=(const Poly& o);
    Poly& operator*=(const Poly& o);
    Poly& operator*=(const Rat& s);

    friend Poly operator+(Poly a, const Poly& b) { return a += b; }
    friend Poly operator-(Poly a, const Poly& b) { return a -= b; }
    friend Poly operator*(Poly a, const Poly& b) { return a *= b; }
    friend Poly operator*(Poly a, const Rat& s) { return a *= s; }
    friend Poly operator*(const Rat& s, Poly a) { return a *= s; }

    bool operator==(const Poly& o) const { return c_ == o.c_; }

    std::string to_string(const std::string& var = "t") const;

private:
    void trim();
    std::vector<Rat> c_;
};

// Quotient and remainder over Q[t]; b must be nonzero.
struct PolyDivMod {
    Poly quot;
    Poly rem;
};
PolyDivMod poly_divmod(const Poly& a, const Poly& b);

// Division known to be exact; throws std::logic_error on nonzero remainder.
Poly poly_exact_div(const Poly& a, const Poly& b);

// Primitive integer representative: integer coefficients, content 1,
// positive leading coefficient. Zero maps to zero.
Poly poly_primitive(const Poly& a);

// gcd over Q[t], returned as the primitive integer representative.
Poly poly_gcd(const Poly& a, const Poly& b);

// a / gcd(a, a'); primitive, positive leading coefficient.
Poly poly_squarefree_part(const Poly& a);

Poly poly_pow(const Poly& base, unsigned exp);

} // namespace onecenter

#endif
