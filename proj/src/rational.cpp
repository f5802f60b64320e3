#include "holo/rational.hpp"

#include <cctype>

#include "holo/errors.hpp"

namespace holo {

namespace {

bool parse_integer(std::string_view text, Integer& out, bool allow_sign) {
  std::size_t start = 0;
  if (allow_sign && !text.empty() && (text[0] == '-' || text[0] == '+')) start = 1;
  if (start == text.size()) return false;
  for (std::size_t i = start; i < text.size(); ++i) {
    if (!std::isdigit(static_cast<unsigned char>(text[i]))) return false;
  }
  std::string digits(text.substr(text[0] == '+' ? 1 : 0));
  return out.set_str(digits, 10) == 0;
}

}  // namespace

Rational parse_rational(std::string_view text) {
  const auto slash = text.find('/');
  Integer num;
  Integer den = 1;
  if (slash == std::string_view::npos) {
    if (!parse_integer(text, num, true)) {
      throw ParseError("", "invalid rational '" + std::string(text) + "'");
    }
  } else {
    if (!parse_integer(text.substr(0, slash), num, true) ||
        !parse_integer(text.substr(slash + 1), den, false)) {
      throw ParseError("", "invalid rational '" + std::string(text) + "'");
    }
    if (den == 0) {
      throw ParseError("", "zero denominator in '" + std::string(text) + "'");
    }
  }
  Rational value(num, den);
  value.canonicalize();
  return value;
}

std::string to_string(const Rational& value) {
  if (value.get_den() == 1) return value.get_num().get_str();
  return value.get_num().get_str() + "/" + value.get_den().get_str();
}

}  // namespace holo
