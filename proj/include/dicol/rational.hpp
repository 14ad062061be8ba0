#pragma once

#include <cstdint>
#include <string>
#include <string_view>

#include <boost/rational.hpp>

namespace dicol {

using Rational = boost::rational<std::int64_t>;

/// Formats as "p" when the denominator is 1 and "p/q" otherwise.
std::string to_string(const Rational& r);

/// Accepts "p", "p/q" or a plain decimal such as "0.25".
/// Throws std::invalid_argument on malformed text or a zero denominator.
Rational parse_rational(std::string_view text);

/// Smallest integer not below r.
std::int64_t ceil(const Rational& r);

} // namespace dicol
