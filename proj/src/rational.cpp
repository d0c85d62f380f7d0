#include "gconn/rational.hpp"

#include <cctype>

namespace gconn {

std::string rational_to_string(const Rational& q) {
  std::string s = num(q).str();
  if (den(q) != 1) {
    s += "/";
    s += den(q).str();
  }
  return s;
}

std::optional<Rational> parse_rational(const std::string& text) {
  if (text.empty()) return std::nullopt;
  size_t i = 0;
  bool neg = false;
  if (text[i] == '+' || text[i] == '-') {
    neg = text[i] == '-';
    ++i;
  }
  auto read_int = [&](Integer& out) -> bool {
    if (i >= text.size() || !std::isdigit(static_cast<unsigned char>(text[i]))) return false;
    Integer v = 0;
    while (i < text.size() && std::isdigit(static_cast<unsigned char>(text[i]))) {
      v = v * 10 + (text[i] - '0');
      ++i;
    }
    out = v;
    return true;
  };
  Integer n, d = 1;
  if (!read_int(n)) return std::nullopt;
  if (i < text.size() && text[i] == '/') {
    ++i;
    if (!read_int(d)) return std::nullopt;
    if (d == 0) return std::nullopt;
  }
  if (i != text.size()) return std::nullopt;
  Rational q(n, d);
  if (neg) q = -q;
  return q;
}

} // namespace gconn
