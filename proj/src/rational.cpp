#include "pedalwords/rational.hpp"

#include <cctype>
#include <utility>

#include "pedalwords/errors.hpp"

namespace pedalwords {

Rational make_rational(Integer num, Integer den) {
  if (den == 0) {
    throw DomainError("rational with zero denominator");
  }
  if (den < 0) {
    num = -num;
    den = -den;
  }
  return Rational(std::move(num), std::move(den));
}

namespace {

Integer parse_integer(std::string_view text) {
  if (text.empty()) {
    throw FormatError("empty integer");
  }
  std::size_t i = 0;
  bool negative = false;
  if (text[0] == '-') {
    negative = true;
    i = 1;
  }
  if (i == text.size()) {
    throw FormatError("sign without digits");
  }
  Integer value = 0;
  for (; i < text.size(); ++i) {
    if (!std::isdigit(static_cast<unsigned char>(text[i]))) {
      throw FormatError("invalid integer: '" + std::string(text) + "'");
    }
    value = value * 10 + (text[i] - '0');
  }
  return negative ? -value : value;
}

}  // namespace

Rational parse_rational(std::string_view text) {
  const auto slash = text.find('/');
  if (slash == std::string_view::npos) {
    return Rational(parse_integer(text));
  }
  Integer num = parse_integer(text.substr(0, slash));
  Integer den = parse_integer(text.substr(slash + 1));
  if (den == 0) {
    throw FormatError("zero denominator: '" + std::string(text) + "'");
  }
  return make_rational(std::move(num), std::move(den));
}

std::string format_rational(const Rational& r) {
  std::string out = numerator(r).str();
  if (denominator(r) != 1) {
    out += '/';
    out += denominator(r).str();
  }
  return out;
}

}  // namespace pedalwords
