#include "pec/probability.hpp"

#include <cctype>

namespace pec {

using boost::multiprecision::cpp_int;

namespace {

std::optional<cpp_int> parse_natural(std::string_view digits) {
  if (digits.empty()) return std::nullopt;
  cpp_int value = 0;
  for (char c : digits) {
    if (!std::isdigit(static_cast<unsigned char>(c))) return std::nullopt;
    value = value * 10 + (c - '0');
  }
  return value;
}

}  // namespace

std::optional<Probability> parse_probability(std::string_view text) {
  if (auto slash = text.find('/'); slash != std::string_view::npos) {
    auto num = parse_natural(text.substr(0, slash));
    auto den = parse_natural(text.substr(slash + 1));
    if (!num || !den || *den == 0) return std::nullopt;
    return Probability(*num, *den);
  }
  if (auto dot = text.find('.'); dot != std::string_view::npos) {
    auto whole = parse_natural(text.substr(0, dot));
    std::string_view frac_digits = text.substr(dot + 1);
    auto frac = parse_natural(frac_digits);
    if (!whole || !frac) return std::nullopt;
    cpp_int scale = 1;
    for (std::size_t i = 0; i < frac_digits.size(); ++i) scale *= 10;
    return Probability(*whole) + Probability(*frac, scale);
  }
  auto whole = parse_natural(text);
  if (!whole) return std::nullopt;
  return Probability(*whole);
}

std::string format_fraction(const Probability& p) {
  const cpp_int& num = boost::multiprecision::numerator(p);
  const cpp_int& den = boost::multiprecision::denominator(p);
  if (den == 1) return num.str();
  return num.str() + "/" + den.str();
}

std::string format_decimal(const Probability& p, int digits) {
  if (digits < 0) digits = 0;
  bool negative = p < 0;
  Probability magnitude = negative ? Probability(-p) : p;

  cpp_int scale = 1;
  for (int i = 0; i < digits; ++i) scale *= 10;
  cpp_int num = boost::multiprecision::numerator(magnitude) * scale;
  const cpp_int& den = boost::multiprecision::denominator(magnitude);
  cpp_int quotient = num / den;
  cpp_int twice_remainder = (num % den) * 2;
  if (twice_remainder > den || (twice_remainder == den && (quotient & 1) != 0)) {
    ++quotient;
  }

  std::string body = quotient.str();
  if (digits > 0) {
    if (body.size() <= static_cast<std::size_t>(digits)) {
      body.insert(0, static_cast<std::size_t>(digits) + 1 - body.size(), '0');
    }
    body.insert(body.size() - static_cast<std::size_t>(digits), ".");
  }
  if (negative && quotient != 0) body.insert(0, "-");
  return body;
}

double to_double(const Probability& p) { return p.convert_to<double>(); }

}  // namespace pec
