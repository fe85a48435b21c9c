#include "canalg/numeric.hpp"

#include <limits>

#include "canalg/errors.hpp"

namespace canalg {

std::string to_string(const Int& v) { return v.str(); }

std::string to_string(const Rational& r) {
    if (denominator(r) == 1) return numerator(r).str();
    return numerator(r).str() + "/" + denominator(r).str();
}

std::string to_fraction_string(const Rational& r) {
    return numerator(r).str() + "/" + denominator(r).str();
}

namespace {

Int parse_integer(const std::string& text) {
    std::size_t pos = 0;
    bool negative = false;
    if (pos < text.size() && (text[pos] == '-' || text[pos] == '+')) {
        negative = text[pos] == '-';
        ++pos;
    }
    if (pos == text.size()) throw InvalidInput("empty integer in '" + text + "'");
    Int value = 0;
    for (; pos < text.size(); ++pos) {
        const char c = text[pos];
        if (c < '0' || c > '9') throw InvalidInput("not an integer: '" + text + "'");
        value = value * 10 + (c - '0');
    }
    return negative ? Int(-value) : value;
}

}  // namespace

Rational parse_rational(const std::string& text) {
    const auto slash = text.find('/');
    if (slash == std::string::npos) return Rational(parse_integer(text));
    const Int num = parse_integer(text.substr(0, slash));
    const Int den = parse_integer(text.substr(slash + 1));
    if (den == 0) throw InvalidInput("zero denominator in '" + text + "'");
    return Rational(num, den);
}

Int ceil(const Rational& r) {
    const Int num = numerator(r);
    const Int den = denominator(r);  // positive
    Int q = num / den;               // truncates toward zero
    if (q * den < num) ++q;
    return q;
}

bool fits_int64(const Int& v) {
    return v >= std::numeric_limits<std::int64_t>::min() &&
           v <= std::numeric_limits<std::int64_t>::max();
}

std::int64_t to_int64(const Int& v) {
    if (!fits_int64(v)) throw OutOfRange("integer " + v.str() + " does not fit in 64 bits");
    return v.convert_to<std::int64_t>();
}

Int lcm(const Int& a, const Int& b) {
    if (a == 0 || b == 0) return 0;
    return boost::multiprecision::abs(a / boost::multiprecision::gcd(a, b) * b);
}

}  // namespace canalg
