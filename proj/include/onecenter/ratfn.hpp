#ifndef ONECENTER_RATFN_HPP
#define ONECENTER_RATFN_HPP

#include "onecenter/poly.hpp"

#include <string>

namespace onecenter {

// Rational function num/den in canonical form: gcd(num, den) = 1 and den is
// the primitive integer polynomial with positive leading coefficient. The
// canonical form is unique, so operator== is exact function equality.
class RatFn {
public:
    RatFn() : num_(), den_(Poly::constant(Rat(1))) {}
    explicit RatFn(Poly numerator) : num_(std::move(numerator)), den_(Poly::constant(Rat(1))) {}
    RatFn(Poly numerator, Poly denominator);
    explicit RatFn(const Rat& c) : num_(Poly::constant(c)), den_(Poly::constant(Rat(1))) {}

    static RatFn variable() { return RatFn(Poly::variable()); }

    const Poly& num() const { return num_; }
    const Poly& den() const { return den_; }
    bool is_zero() const { return num_.is_zero(); }
    bool is_constant() const { return num_.is_constant() && den_.is_constant(); }

    // Exact evaluation; throws PoleAtSample where the denominator vanishes.
    Rat eval(const Rat& t) const;

    RatFn derivative() const;

    RatFn operator-() const;
    RatFn& operator+=(const RatFn& o);
    RatFn& operator-=(const RatFn& o);
    RatFn& operator*=(const RatFn& o);
    RatFn& operator/=(const RatFn& o);

    friend RatFn operator+(RatFn a, const RatFn& b) { return a += b; }
    friend RatFn operator-(RatFn a, const RatFn& b) { return a -= b; }
    friend RatFn operator*(RatFn a, const RatFn& b) { return a *= b; }
    friend RatFn operator/(RatFn a, const RatFn& b) { return a /= b; }

    // Canonical form is unique: structural equality is function equality.
    bool operator==(const RatFn& o) const { return num_ == o.num_ && den_ == o.den_; }

    std::string to_string(const std::string& var = "t") const;

private:
    void reduce();
    Poly num_;
    Poly den_;
};

// Cross-multiplication identity a.num*b.den - b.num*a.den == 0.
bool ratfn_eq(const RatFn& a, const RatFn& b);

} // namespace onecenter

#endif
