#include "onecenter/ratfn.hpp"

#include "onecenter/errors.hpp"

#include <stdexcept>

namespace onecenter {

RatFn::RatFn(Poly numerator, Poly denominator) : num_(std::move(numerator)), den_(std::move(denominator)) {
    if (den_.is_zero()) throw std::invalid_argument("RatFn: zero denominator");
    reduce();
}

void RatFn::reduce() {
    if (num_.is_zero()) {
        den_ = Poly::constant(Rat(1));
        return;
    }
    Poly g = poly_gcd(num_, den_);
    if (g.degree() > 0) {
        num_ = poly_exact_div(num_, g);
        den_ = poly_exact_div(den_, g);
    }
    // scale so den is primitive integer with positive leading coefficient
    const Poly den_prim = poly_primitive(den_);
    const Rat scale = den_prim.leading() / den_.leading();
    num_ *= scale;
    den_ = den_prim;
}

Rat RatFn::eval(const Rat& t) const {
    const Rat d = den_.eval(t);
    if (d == 0) throw PoleAtSample("rational function evaluated at a pole: t = " + rat_to_string(t));
    return num_.eval(t) / d;
}

RatFn RatFn::derivative() const {
    return RatFn(num_.derivative() * den_ - num_ * den_.derivative(), den_ * den_);
}

RatFn RatFn::operator-() const {
    RatFn r = *this;
    r.num_ = -r.num_;
    return r;
}

RatFn& RatFn::operator+=(const RatFn& o) {
    *this = RatFn(num_ * o.den_ + o.num_ * den_, den_ * o.den_);
    return *this;
}

RatFn& RatFn::operator-=(const RatFn& o) {
    *this = RatFn(num_ * o.den_ - o.num_ * den_, den_ * o.den_);
    return *this;
}

RatFn& RatFn::operator*=(const RatFn& o) {
    *this = RatFn(num_ * o.num_, den_ * o.den_);
    return *this;
}

RatFn& RatFn::operator/=(const RatFn& o) {
    if (o.num_.is_zero()) throw std::invalid_argument("RatFn: division by zero function");
    *this = RatFn(num_ * o.den_, den_ * o.num_);
    return *this;
}

std::string RatFn::to_string(const std::string& var) const {
    if (den_ == Poly::constant(Rat(1))) return num_.to_string(var);
    return "(" + num_.to_string(var) + ") / (" + den_.to_string(var) + ")";
}

bool ratfn_eq(const RatFn& a, const RatFn& b) {
    return (a.num() * b.den() - b.num() * a.den()).is_zero();
}

} // namespace onecenter
