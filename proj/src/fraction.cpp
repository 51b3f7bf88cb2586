#include "oblivnet/fraction.hpp"

#include <cctype>
#include <stdexcept>

namespace oblivnet {

namespace {

bool all_digits(std::string_view s) {
  if (s.empty()) return false;
  for (char c : s)
    if (!std::isdigit(static_cast<unsigned char>(c))) return false;
  return true;
}

BigInt parse_digits(std::string_view s) {
  BigInt v = 0;
  for (char c : s) v = v * 10 + (c - '0');
  return v;
}

}  // namespace

Fraction parse_fraction(std::string_view text) {
  const auto bad = [&] { return std::invalid_argument("not a fraction: '" + std::string(text) + "'"); };
  std::string_view s = text;
  bool negative = false;
  if (!s.empty() && (s.front() == '-' || s.front() == '+')) {
    negative = s.front() == '-';
    s.remove_prefix(1);
  }
  Fraction value;
  if (const auto slash = s.find('/'); slash != std::string_view::npos) {
    const auto num = s.substr(0, slash);
    const auto den = s.substr(slash + 1);
    if (!all_digits(num) || !all_digits(den)) throw bad();
    const BigInt d = parse_digits(den);
    if (d == 0) throw std::invalid_argument("zero denominator in '" + std::string(text) + "'");
    value = Fraction(parse_digits(num), d);
  } else if (const auto dot = s.find('.'); dot != std::string_view::npos) {
    const auto whole = s.substr(0, dot);
    const auto frac = s.substr(dot + 1);
    if ((whole.empty() && frac.empty()) || (!whole.empty() && !all_digits(whole)) ||
        (!frac.empty() && !all_digits(frac)))
      throw bad();
    BigInt scale = 1;
    for (std::size_t i = 0; i < frac.size(); ++i) scale *= 10;
    const BigInt w = whole.empty() ? BigInt(0) : parse_digits(whole);
    const BigInt f = frac.empty() ? BigInt(0) : parse_digits(frac);
    value = Fraction(w * scale + f, scale);
  } else {
    if (!all_digits(s)) throw bad();
    value = Fraction(parse_digits(s));
  }
  return negative ? Fraction(-value) : value;
}

double to_double(const Fraction& f) { return f.convert_to<double>(); }

BigInt floor_of(const Fraction& f) {
  const BigInt num = boost::multiprecision::numerator(f);
  const BigInt den = boost::multiprecision::denominator(f);
  BigInt q = num / den;
  if (num < 0 && q * den != num) q -= 1;
  return q;
}

std::string to_string(const Fraction& f) {
  const BigInt den = boost::multiprecision::denominator(f);
  if (den == 1) return boost::multiprecision::numerator(f).str();
  return boost::multiprecision::numerator(f).str() + "/" + den.str();
}

}  // namespace oblivnet
