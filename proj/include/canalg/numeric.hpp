#pragma once

#include <cstdint>
#include <string>

#include <boost/multiprecision/cpp_int.hpp>

namespace canalg {

using Int = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

inline Int numerator(const Rational& r) { return boost::multiprecision::numerator(r); }
inline Int denominator(const Rational& r) { return boost::multiprecision::denominator(r); }

// Shortest form: "3", "-1/4".
std::string to_string(const Int& v);
std::string to_string(const Rational& r);

// Always "num/den", even for integers.
std::string to_fraction_string(const Rational& r);

// Accepts "a", "a/b", "-a/b". Throws InvalidInput.
Rational parse_rational(const std::string& text);

// Smallest integer >= r.
Int ceil(const Rational& r);

bool fits_int64(const Int& v);
std::int64_t to_int64(const Int& v);  // throws OutOfRange when it does not fit

Int lcm(const Int& a, const Int& b);

}  // namespace canalg
