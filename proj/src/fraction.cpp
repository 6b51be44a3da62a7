#include "mslopes/fraction.hpp"

#include <charconv>
#include <ostream>

namespace mslopes {

namespace {

std::string_view trim(std::string_view s) {
  while (!s.empty() && (s.front() == ' ' || s.front() == '\t')) s.remove_prefix(1);
  while (!s.empty() && (s.back() == ' ' || s.back() == '\t')) s.remove_suffix(1);
  return s;
}

std::int64_t parse_int(std::string_view s, std::string_view whole) {
  s = trim(s);
  if (!s.empty() && s.front() == '+') s.remove_prefix(1);
  std::int64_t v = 0;
  auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
  if (s.empty() || ec != std::errc() || ptr != s.data() + s.size())
    throw std::invalid_argument("not a rational: '" + std::string(whole) + "'");
  return v;
}

}  // namespace

Fraction Fraction::parse(std::string_view text) {
  auto slash = text.find('/');
  if (slash == std::string_view::npos) return Fraction(parse_int(text, text));
  std::int64_t n = parse_int(text.substr(0, slash), text);
  std::int64_t d = parse_int(text.substr(slash + 1), text);
  if (d == 0) throw std::invalid_argument("zero denominator in '" + std::string(text) + "'");
  return reduce(n, d);
}

std::string Fraction::str() const {
  if (den_ == 1) return std::to_string(num_);
  return std::to_string(num_) + "/" + std::to_string(den_);
}

std::ostream& operator<<(std::ostream& os, Fraction f) { return os << f.str(); }

}  // namespace mslopes
