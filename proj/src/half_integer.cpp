#include "dunkl/half_integer.hpp"

#include <charconv>
#include <cmath>

#include "dunkl/errors.hpp"

namespace dunkl {

namespace {

bool parse_int(std::string_view s, int& out) {
  if (s.empty()) return false;
  if (s.front() == '+') s.remove_prefix(1);
  auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), out);
  return ec == std::errc{} && ptr == s.data() + s.size();
}

}  // namespace

HalfInteger HalfInteger::parse(std::string_view text) {
  std::string_view t = text;
  while (!t.empty() && t.front() == ' ') t.remove_prefix(1);
  while (!t.empty() && t.back() == ' ') t.remove_suffix(1);
  int num = 0;
  if (const auto slash = t.find('/'); slash != std::string_view::npos) {
    int den = 0;
    if (parse_int(t.substr(0, slash), num) && parse_int(t.substr(slash + 1), den)) {
      if (den == 1) return from_int(num);
      if (den == 2) return from_twice(num);
    }
    throw DomainError("not a multiple of 1/2: '" + std::string(text) + "'");
  }
  if (parse_int(t, num)) return from_int(num);
  double x = 0.0;
  auto [ptr, ec] = std::from_chars(t.data(), t.data() + t.size(), x);
  if (ec != std::errc{} || ptr != t.data() + t.size()) {
    throw DomainError("not a number: '" + std::string(text) + "'");
  }
  return from_double(x);
}

HalfInteger HalfInteger::from_double(double x) {
  if (!std::isfinite(x)) throw DomainError("half-integer must be finite");
  const double twice = 2.0 * x;
  const double rounded = std::round(twice);
  if (std::abs(twice - rounded) > 1e-12) {
    throw DomainError("not a multiple of 1/2: " + std::to_string(x));
  }
  return from_twice(static_cast<int>(rounded));
}

std::string HalfInteger::to_string() const {
  if (is_integer()) return std::to_string(twice_ / 2);
  return std::to_string(twice_) + "/2";
}

}  // namespace dunkl
