#include "delegation/xnum.hpp"

#include <cctype>
#include <ostream>

#include "delegation/error.hpp"

namespace delegation {

namespace {

bool is_integer_literal(std::string_view s) {
  if (!s.empty() && (s.front() == '-' || s.front() == '+')) s.remove_prefix(1);
  if (s.empty()) return false;
  for (char ch : s) {
    if (!std::isdigit(static_cast<unsigned char>(ch))) return false;
  }
  return true;
}

}  // namespace

Rational parse_rational(std::string_view text) {
  const auto slash = text.find('/');
  const auto num = text.substr(0, slash);
  const auto den = slash == std::string_view::npos ? std::string_view("1")
                                                   : text.substr(slash + 1);
  if (!is_integer_literal(num) || !is_integer_literal(den) ||
      den.front() == '-' || den.front() == '+') {
    throw InputError("invalid rational '" + std::string(text) + "'");
  }
  mpz_class n(std::string(num.front() == '+' ? num.substr(1) : num), 10);
  mpz_class d(std::string(den), 10);
  if (d == 0) throw InputError("zero denominator in '" + std::string(text) + "'");
  Rational r(n, d);
  r.canonicalize();
  return r;
}

std::string to_string(const Rational& r) { return r.get_str(10); }

std::strong_ordering compare(const Rational& a, const Rational& b) {
  const int c = cmp(a, b);
  if (c < 0) return std::strong_ordering::less;
  if (c > 0) return std::strong_ordering::greater;
  return std::strong_ordering::equal;
}

XNum& XNum::operator/=(const Rational& s) {
  if (s == 0) throw SemanticError("division of XNum by zero");
  std_ /= s;
  inf_ /= s;
  return *this;
}

XNum parse_xnum(std::string_view text) {
  if (text.empty()) throw InputError("empty number");
  if (text.back() != 'i') return XNum(parse_rational(text));
  text.remove_suffix(1);
  // Split before the last sign that is not the leading one.
  std::size_t split = std::string_view::npos;
  for (std::size_t k = text.size(); k-- > 1;) {
    if (text[k] == '+' || text[k] == '-') {
      split = k;
      break;
    }
  }
  auto coeff = [](std::string_view c) -> Rational {
    if (c.empty() || c == "+") return 1;
    if (c == "-") return -1;
    return parse_rational(c);
  };
  if (split == std::string_view::npos) return XNum(0, coeff(text));
  return XNum(parse_rational(text.substr(0, split)), coeff(text.substr(split)));
}

std::string to_string(const XNum& x) {
  if (x.inf_part() == 0) return to_string(x.std_part());
  std::string out;
  if (x.std_part() != 0) out = to_string(x.std_part());
  const Rational& c = x.inf_part();
  if (c == 1) {
    out += out.empty() ? "i" : "+i";
  } else if (c == -1) {
    out += "-i";
  } else {
    if (c > 0 && !out.empty()) out += '+';
    out += to_string(c) + "i";
  }
  return out;
}

std::ostream& operator<<(std::ostream& os, const XNum& x) {
  return os << to_string(x);
}

}  // namespace delegation
