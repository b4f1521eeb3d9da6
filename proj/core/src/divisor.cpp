#include "excoll/divisor.hpp"

#include <charconv>
#include <string>

namespace excoll {

namespace checked {

void overflow(const char* what) {
  throw std::overflow_error(std::string("integer overflow in divisor ") + what);
}

}  // namespace checked

std::string format_pair(DivisorClass d) {
  return std::to_string(d.a) + "," + std::to_string(d.b);
}

namespace {

void append_term(std::string& out, Coeff c, char symbol) {
  if (c == 0) return;
  if (c < 0) {
    out += '-';
  } else if (!out.empty()) {
    out += '+';
  }
  const Coeff mag = c < 0 ? -c : c;
  if (mag != 1) out += std::to_string(mag);
  out += symbol;
}

std::string_view trim(std::string_view s) {
  while (!s.empty() && (s.front() == ' ' || s.front() == '\t')) s.remove_prefix(1);
  while (!s.empty() && (s.back() == ' ' || s.back() == '\t')) s.remove_suffix(1);
  return s;
}

Coeff parse_coeff(std::string_view s, std::string_view whole) {
  s = trim(s);
  if (!s.empty() && s.front() == '+') s.remove_prefix(1);
  Coeff value = 0;
  const auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), value);
  if (s.empty() || ec != std::errc{} || ptr != s.data() + s.size()) {
    throw std::invalid_argument("malformed divisor '" + std::string(whole) +
                                "': expected a,b with integer coefficients");
  }
  return value;
}

}  // namespace

std::string format_divisor(DivisorClass d) {
  std::string out;
  append_term(out, d.a, 'H');
  append_term(out, d.b, 'E');
  return out.empty() ? "0" : out;
}

DivisorClass parse_divisor(std::string_view text) {
  const auto comma = text.find(',');
  if (comma == std::string_view::npos || text.find(',', comma + 1) != std::string_view::npos) {
    throw std::invalid_argument("malformed divisor '" + std::string(text) +
                                "': expected a,b with integer coefficients");
  }
  return {parse_coeff(text.substr(0, comma), text), parse_coeff(text.substr(comma + 1), text)};
}

}  // namespace excoll
