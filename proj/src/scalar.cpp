#include "crooked/scalar.hpp"

#include <cctype>
#include <cmath>
#include <limits>

namespace crooked {

namespace {

bool all_digits(const std::string& s) {
    if (s.empty()) return false;
    for (char c : s)
        if (!std::isdigit(static_cast<unsigned char>(c))) return false;
    return true;
}

Rational power_of_ten(long e) {
    Rational r(1);
    const Rational ten(10);
    for (long i = 0; i < (e < 0 ? -e : e); ++i) r *= ten;
    return e < 0 ? Rational(1) / r : r;
}

Rational parse_decimal(std::string text) {
    bool negative = false;
    if (!text.empty() && (text[0] == '+' || text[0] == '-')) {
        negative = text[0] == '-';
        text.erase(0, 1);
    }
    long exponent = 0;
    if (auto e = text.find_first_of("eE"); e != std::string::npos) {
        std::string exp_part = text.substr(e + 1);
        text.resize(e);
        bool exp_negative = false;
        if (!exp_part.empty() && (exp_part[0] == '+' || exp_part[0] == '-')) {
            exp_negative = exp_part[0] == '-';
            exp_part.erase(0, 1);
        }
        if (!all_digits(exp_part) || exp_part.size() > 6) throw ParseError("bad exponent");
        exponent = std::stol(exp_part) * (exp_negative ? -1 : 1);
    }
    std::string digits = text;
    if (auto dot = text.find('.'); dot != std::string::npos) {
        digits = text.substr(0, dot) + text.substr(dot + 1);
        exponent -= static_cast<long>(text.size() - dot - 1);
    }
    if (!all_digits(digits)) throw ParseError("not a number: '" + text + "'");
    Rational value{boost::multiprecision::mpz_int(digits)};
    value *= power_of_ten(exponent);
    return negative ? Rational(-value) : value;
}

}  // namespace

Rational parse_rational(const std::string& raw) {
    std::string text;
    for (char c : raw)
        if (!std::isspace(static_cast<unsigned char>(c))) text += c;
    if (text.empty()) throw ParseError("empty number");
    if (auto slash = text.find('/'); slash != std::string::npos) {
        const Rational num = parse_decimal(text.substr(0, slash));
        const Rational den = parse_decimal(text.substr(slash + 1));
        if (den == 0) throw ParseError("zero denominator");
        return num / den;
    }
    return parse_decimal(text);
}

Rational rational_from_double(double x) {
    if (!std::isfinite(x)) throw DomainError("non-finite value has no rational form");
    int exp = 0;
    const double mant = std::frexp(x, &exp);
    // mant * 2^53 is an integer for every double.
    const auto scaled = static_cast<long long>(std::ldexp(mant, 53));
    Rational r{boost::multiprecision::mpz_int(scaled)};
    exp -= 53;
    const Rational two(2);
    Rational p(1);
    for (int i = 0; i < (exp < 0 ? -exp : exp); ++i) p *= two;
    return exp < 0 ? Rational(r / p) : Rational(r * p);
}

std::string to_string(const Rational& x) {
    return x.str();
}

}  // namespace crooked
