#include "boyforge/rat.hpp"

#include <cctype>

namespace boyforge {

namespace {

bool parse_int(std::string_view s, Int& out) {
  if (s.empty()) return false;
  size_t i = 0;
  bool neg = false;
  if (s[0] == '+' || s[0] == '-') {
    neg = s[0] == '-';
    i = 1;
  }
  if (i == s.size()) return false;
  Int v = 0;
  for (; i < s.size(); ++i) {
    if (!std::isdigit(static_cast<unsigned char>(s[i]))) return false;
    v = v * 10 + (s[i] - '0');
  }
  out = neg ? -v : v;
  return true;
}

}  // namespace

Rat parse_rat(std::string_view text) {
  size_t slash = text.find('/');
  Int num, den = 1;
  if (slash == std::string_view::npos) {
    if (!parse_int(text, num))
      throw std::invalid_argument("malformed rational literal: '" + std::string(text) + "'");
  } else {
    if (!parse_int(text.substr(0, slash), num) || !parse_int(text.substr(slash + 1), den))
      throw std::invalid_argument("malformed rational literal: '" + std::string(text) + "'");
    if (den <= 0)
      throw std::invalid_argument("denominator must be a positive integer: '" +
                                  std::string(text) + "'");
  }
  return Rat(num, den);
}

std::string format_rat(const Rat& r) {
  std::string s = rat_num(r).str();
  if (rat_den(r) != 1) {
    s += '/';
    s += rat_den(r).str();
  }
  return s;
}

std::string decimal_string(const Rat& r, int sig) {
  Int num = rat_num(r);
  Int den = rat_den(r);
  bool neg = num < 0;
  if (neg) num = -num;

  // Check for a terminating expansion: den = 2^a * 5^b.
  Int d = den;
  int a = 0, b = 0;
  while (d % 2 == 0) { d /= 2; ++a; }
  while (d % 5 == 0) { d /= 5; ++b; }
  if (d == 1) {
    int shift = a > b ? a : b;
    Int scaled = num;
    for (int i = 0; i < shift; ++i) scaled *= 10;
    scaled /= den;
    std::string digits = scaled.str();
    std::string out;
    if (shift == 0) {
      out = digits;
    } else {
      while (static_cast<int>(digits.size()) <= shift) digits.insert(digits.begin(), '0');
      out = digits.substr(0, digits.size() - shift) + "." + digits.substr(digits.size() - shift);
      while (out.back() == '0') out.pop_back();
      if (out.back() == '.') out.pop_back();
    }
    return neg ? "-" + out : out;
  }

  // Non-terminating: round to `sig` significant digits.
  Int ip = num / den;
  std::string ipart = ip.str();
  int int_digits = (ip == 0) ? 0 : static_cast<int>(ipart.size());
  int frac_digits = sig - int_digits;
  if (frac_digits < 0) frac_digits = 0;
  Int scale = 1;
  for (int i = 0; i < frac_digits; ++i) scale *= 10;
  Int rounded = (num * scale * 2 + den) / (den * 2);  // round half up
  std::string digits = rounded.str();
  std::string out;
  if (frac_digits == 0) {
    out = digits;
  } else {
    while (static_cast<int>(digits.size()) <= frac_digits) digits.insert(digits.begin(), '0');
    out = digits.substr(0, digits.size() - frac_digits) + "." + digits.substr(digits.size() - frac_digits);
    while (out.back() == '0') out.pop_back();
    if (out.back() == '.') out.pop_back();
  }
  return neg ? "-" + out : out;
}

}  // namespace boyforge
