#include "onecenter/rat.hpp"

#include "onecenter/errors.hpp"

#include <cctype>
#include <cstdlib>

namespace onecenter {

namespace {

bool all_digits(const std::string& s) {
    if (s.empty()) return false;
    for (char c : s)
        if (!std::isdigit(static_cast<unsigned char>(c))) return false;
    return true;
}

} // namespace

Rat rat_from_string(const std::string& text) {
    std::string s;
    for (char c : text)
        if (!std::isspace(static_cast<unsigned char>(c))) s.push_back(c);
    if (s.empty()) throw ValidationError("empty rational literal");

    auto slash = s.find('/');
    if (slash != std::string::npos) {
        const std::string num = s.substr(0, slash);
        const std::string den = s.substr(slash + 1);
        if (num.empty() || den.empty())
            throw ValidationError("malformed rational literal: " + text);
        Rat r;
        if (mpq_set_str(r.get_mpq_t(), (num + "/" + den).c_str(), 10) != 0)
            throw ValidationError("malformed rational literal: " + text);
        if (mpz_sgn(mpq_denref(r.get_mpq_t())) == 0)
            throw ValidationError("zero denominator: " + text);
        r.canonicalize();
        return r;
    }

    // Decimal / integer, optional exponent. Converted exactly.
    std::string mantissa = s;
    long exponent = 0;
    auto epos = s.find_first_of("eE");
    if (epos != std::string::npos) {
        mantissa = s.substr(0, epos);
        const std::string expstr = s.substr(epos + 1);
        if (expstr.empty() || (!all_digits(expstr) && !(expstr.size() > 1 && (expstr[0] == '-' || expstr[0] == '+') && all_digits(expstr.substr(1)))))
            throw ValidationError("malformed exponent: " + text);
        exponent = std::strtol(expstr.c_str(), nullptr, 10);
    }

    bool negative = false;
    std::string digits = mantissa;
    if (!digits.empty() && (digits[0] == '+' || digits[0] == '-')) {
        negative = digits[0] == '-';
        digits = digits.substr(1);
    }
    long frac_digits = 0;
    auto dot = digits.find('.');
    if (dot != std::string::npos) {
        frac_digits = static_cast<long>(digits.size() - dot - 1);
        digits = digits.substr(0, dot) + digits.substr(dot + 1);
    }
    if (!all_digits(digits))
        throw ValidationError("malformed number: " + text);

    Int n(digits, 10);
    if (negative) n = -n;
    Rat r(n);
    long net = exponent - frac_digits;
    if (net > 0) {
        Int p10;
        mpz_ui_pow_ui(p10.get_mpz_t(), 10, static_cast<unsigned long>(net));
        r *= Rat(p10);
    } else if (net < 0) {
        Int p10;
        mpz_ui_pow_ui(p10.get_mpz_t(), 10, static_cast<unsigned long>(-net));
        r /= Rat(p10);
    }
    r.canonicalize();
    return r;
}

std::string rat_to_string(const Rat& a) {
    if (a.get_den() == 1) return a.get_num().get_str();
    return a.get_num().get_str() + "/" + a.get_den().get_str();
}

std::string rat_to_decimal(const Rat& a, std::size_t digits) {
    Int p10;
    mpz_ui_pow_ui(p10.get_mpz_t(), 10, static_cast<unsigned long>(digits));
    // round(a * 10^digits), ties away from zero
    Rat scaled = a * Rat(p10);
    Int num = scaled.get_num(), den = scaled.get_den();
    Int q, r;
    mpz_tdiv_qr(q.get_mpz_t(), r.get_mpz_t(), num.get_mpz_t(), den.get_mpz_t());
    Int twice_r = 2 * abs(r);
    if (twice_r >= den) q += (sgn(num) < 0 ? -1 : 1);

    bool neg = sgn(q) < 0;
    const Int q_abs = abs(q);
    std::string body = q_abs.get_str();
    if (digits == 0) return (neg ? "-" : "") + body;
    if (body.size() <= digits) body.insert(0, digits + 1 - body.size(), '0');
    body.insert(body.size() - digits, ".");
    return (neg ? "-" : "") + body;
}

} // namespace onecenter
