#pragma once

#include <boost/rational.hpp>

#include <cstdint>
#include <string>

namespace xorcache {

// All cache sizes and delivery rates are exact rationals in file units.
// Nothing in this library ever rounds.
using Rat = boost::rational<std::int64_t>;

// Lowest-terms rendering: "9/4"; integral values drop the denominator ("2", "0").
std::string format_rat(const Rat& value);

// Accepts "p" or "p/q" with an optional leading minus sign. Throws
// std::invalid_argument on malformed input or a zero denominator.
Rat parse_rat(const std::string& text);

}  // namespace xorcache
