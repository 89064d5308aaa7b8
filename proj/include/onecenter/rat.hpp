#ifndef ONECENTER_RAT_HPP
#define ONECENTER_RAT_HPP

#include <gmpxx.h>

#include <cstdint>
#include <string>

namespace onecenter {

// Exactness carrier for every coordinate and coefficient in the engine.
// mpq_class keeps fractions canonical: gcd(|num|, den) == 1, den >= 1.
using Rat = mpq_class;
using Int = mpz_class;

inline Rat rat_abs(const Rat& a) { return a < 0 ? Rat(-a) : a; }

inline int rat_sign(const Rat& a) { return sgn(a); }

inline double rat_to_double(const Rat& a) { return a.get_d(); }

// Parses "p/q", an integer, or an exact decimal ("-1.25", "1e-12", "2.5e3").
// Decimal inputs become exact fractions over powers of ten.
Rat rat_from_string(const std::string& text);

// Canonical "p" or "p/q" form; inverse of rat_from_string on its own output.
std::string rat_to_string(const Rat& a);

// Fixed-point decimal approximation with `digits` fractional digits,
// rounded to nearest (ties away from zero). Deterministic.
std::string rat_to_decimal(const Rat& a, std::size_t digits);

// A compact closed interval [lo, hi] of rationals.
struct Interval {
    Rat lo;
    Rat hi;

    Interval() = default;
    Interval(Rat l, Rat h) : lo(std::move(l)), hi(std::move(h)) {}

    Rat width() const { return hi - lo; }
    Rat midpoint() const { return (lo + hi) / 2; }
    bool is_point() const { return lo == hi; }
    bool contains(const Rat& t) const { return lo <= t && t <= hi; }
};

} // namespace onecenter

#endif
