#include "modcalc/rational.hpp"

#include "modcalc/errors.hpp"

#include <cctype>

namespace modcalc {

std::string to_fraction(const Rational& value) {
  std::string out = numerator(value).str();
  out += '/';
  out += denominator(value).str();
  return out;
}

namespace {

bool valid_integer_text(std::string_view text) {
  if (text.empty()) return false;
  std::size_t start = (text[0] == '-' || text[0] == '+') ? 1 : 0;
  if (start == text.size()) return false;
  for (std::size_t k = start; k < text.size(); ++k) {
    if (!std::isdigit(static_cast<unsigned char>(text[k]))) return false;
  }
  return true;
}

}  // namespace

Rational parse_fraction(std::string_view text) {
  std::string_view num = text;
  std::string_view den = "1";
  if (auto slash = text.find('/'); slash != std::string_view::npos) {
    num = text.substr(0, slash);
    den = text.substr(slash + 1);
  }
  if (!valid_integer_text(num) || !valid_integer_text(den)) {
    fail(ErrorCode::ParseError, "malformed rational '" + std::string(text) + "'");
  }
  Integer d(std::string(den));
  if (d == 0) {
    fail(ErrorCode::ParseError, "zero denominator in '" + std::string(text) + "'");
  }
  return Rational(Integer(std::string(num)), d);
}

Rational binomial(long n, long k) {
  if (k < 0 || n < 0 || k > n) return Rational(0);
  Integer result = 1;
  for (long j = 0; j < k; ++j) {
    result *= (n - j);
    result /= (j + 1);
  }
  return Rational(result);
}

}  // namespace modcalc
