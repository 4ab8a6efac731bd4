#pragma once

#include <cstdint>
#include <string>
#include <string_view>

#include <boost/rational.hpp>

namespace swf {

using Rational = boost::rational<std::int64_t>;

// Accepts "p/q", "p", with optional sign. Throws std::invalid_argument.
Rational parse_rational(std::string_view text);

// Always "p/q" with q > 0, e.g. "0/1", "-1/2".
std::string format_rational(const Rational& r);

// Representative of r modulo `modulus` in [0, modulus).
Rational reduce_mod(const Rational& r, std::int64_t modulus);

}  // namespace swf
