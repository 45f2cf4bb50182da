#pragma once

#include <compare>
#include <iosfwd>
#include <string>
#include <string_view>

#include <gmpxx.h>

namespace delegation {

using Rational = mpq_class;

/// Parses "p", "-p" or "p/q" into a canonical (reduced) rational.
/// Throws InputError on anything else, including a zero denominator.
Rational parse_rational(std::string_view text);

/// Canonical text form: "p/q" reduced, or "p" when the denominator is 1.
std::string to_string(const Rational& r);

std::strong_ordering compare(const Rational& a, const Rational& b);

/// A number std + inf·ι where ι is a positive infinitesimal.
///
/// Every tie-breaking perturbation the model needs lives in the ι
/// coefficient. Ordering is lexicographic on (std, inf). The set is closed
/// under addition and rational scaling; products of two XNums are not
/// defined.
class XNum {
 public:
  XNum() = default;
  XNum(Rational std_part, Rational inf_part = 0)  // NOLINT: implicit from rational is intended
      : std_(std::move(std_part)), inf_(std::move(inf_part)) {
    std_.canonicalize();
    inf_.canonicalize();
  }
  XNum(long v) : std_(v), inf_(0) {}  // NOLINT
  XNum(int v) : std_(v), inf_(0) {}   // NOLINT

  static XNum iota(const Rational& coeff = 1) { return XNum(0, coeff); }

  const Rational& std_part() const { return std_; }
  const Rational& inf_part() const { return inf_; }

  XNum& operator+=(const XNum& o) {
    std_ += o.std_;
    inf_ += o.inf_;
    return *this;
  }
  XNum& operator-=(const XNum& o) {
    std_ -= o.std_;
    inf_ -= o.inf_;
    return *this;
  }
  XNum& operator*=(const Rational& s) {
    std_ *= s;
    inf_ *= s;
    return *this;
  }
  XNum& operator/=(const Rational& s);

  friend XNum operator+(XNum a, const XNum& b) { return a += b; }
  friend XNum operator-(XNum a, const XNum& b) { return a -= b; }
  friend XNum operator-(const XNum& a) { return XNum(-a.std_, -a.inf_); }
  friend XNum operator*(XNum a, const Rational& s) { return a *= s; }
  friend XNum operator*(const Rational& s, XNum a) { return a *= s; }
  friend XNum operator/(XNum a, const Rational& s) { return a /= s; }

  friend bool operator==(const XNum& a, const XNum& b) {
    return a.std_ == b.std_ && a.inf_ == b.inf_;
  }
  friend std::strong_ordering operator<=>(const XNum& a, const XNum& b) {
    if (auto c = compare(a.std_, b.std_); c != 0) return c;
    return compare(a.inf_, b.inf_);
  }

 private:
  Rational std_;
  Rational inf_;
};

/// Text form used on the command line: "3/2", "-1i", "4-1i", "2+9/7i".
/// The trailing "i" marks the ι coefficient.
XNum parse_xnum(std::string_view text);
std::string to_string(const XNum& x);
std::ostream& operator<<(std::ostream& os, const XNum& x);

}  // namespace delegation
