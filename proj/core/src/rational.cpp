#include "wangsun/rational.hpp"

#include <stdexcept>

namespace wangsun {

std::string format_rational(const BigRational& r) {
  std::string out = numerator(r).str();
  if (denominator(r) != 1) {
    out += '/';
    out += denominator(r).str();
  }
  return out;
}

BigRational parse_rational(std::string_view text) {
  const auto bad = [&](const char* why) {
    throw std::invalid_argument("parse_rational: " + std::string(why) + ": '" +
                                std::string(text) + "'");
  };
  if (text.empty()) bad("empty input");

  const auto is_integer_token = [](std::string_view t) {
    if (!t.empty() && t.front() == '-') t.remove_prefix(1);
    if (t.empty()) return false;
    for (char c : t)
      if (c < '0' || c > '9') return false;
    return true;
  };

  std::string_view num_part = text;
  std::string_view den_part;
  if (auto slash = text.find('/'); slash != std::string_view::npos) {
    num_part = text.substr(0, slash);
    den_part = text.substr(slash + 1);
    if (!is_integer_token(den_part)) bad("malformed denominator");
  }
  if (!is_integer_token(num_part)) bad("malformed numerator");

  BigInt num{std::string(num_part)};
  if (den_part.empty()) return BigRational(num);

  BigInt den{std::string(den_part)};
  if (den == 0) bad("zero denominator");
  if (den < 0) bad("negative denominator");
  if (den == 1) bad("denominator 1 must be omitted");
  if (gcd(num, den) != 1) bad("not in lowest terms");
  BigRational r(num, den);
  return r;
}

double rational_to_double(const BigRational& r) {
  return r.convert_to<double>();
}

}  // namespace wangsun
