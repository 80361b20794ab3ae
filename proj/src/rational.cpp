#include "xorcache/rational.hpp"

#include <charconv>
#include <stdexcept>

namespace xorcache {

std::string format_rat(const Rat& value) {
  if (value.denominator() == 1) {
    return std::to_string(value.numerator());
  }
  return std::to_string(value.numerator()) + "/" + std::to_string(value.denominator());
}

namespace {

std::int64_t parse_int(std::string_view text) {
  std::int64_t out = 0;
  const auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), out);
  if (ec != std::errc{} || ptr != text.data() + text.size()) {
    throw std::invalid_argument("malformed rational component: '" + std::string(text) + "'");
  }
  return out;
}

}  // namespace

Rat parse_rat(const std::string& text) {
  if (text.empty()) {
    throw std::invalid_argument("empty rational");
  }
  const auto slash = text.find('/');
  if (slash == std::string::npos) {
    return Rat(parse_int(text));
  }
  const std::int64_t num = parse_int(std::string_view(text).substr(0, slash));
  const std::int64_t den = parse_int(std::string_view(text).substr(slash + 1));
  if (den == 0) {
    throw std::invalid_argument("zero denominator in rational: '" + text + "'");
  }
  return Rat(num, den);
}

}  // namespace xorcache
