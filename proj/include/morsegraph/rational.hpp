#pragma once

#include <gmpxx.h>

#include <compare>
#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>

namespace morsegraph {

/// Exact rational number, always kept in reduced form with a positive
/// denominator.  Serialized as "p" when integral and "p/q" otherwise.
class Rational {
 public:
  Rational() : value_(0) {}
  Rational(long long n) : value_(static_cast<long>(n)) {}
  Rational(long long num, long long den)
      : value_(static_cast<long>(num), static_cast<long>(den)) {
    if (den == 0) throw std::invalid_argument("rational with zero denominator");
    value_.canonicalize();
  }

  static std::optional<Rational> parse(const std::string& text) {
    if (text.empty()) return std::nullopt;
    auto digits = [](const std::string& s, size_t from) {
      if (from >= s.size()) return false;
      for (size_t i = from; i < s.size(); ++i)
        if (s[i] < '0' || s[i] > '9') return false;
      return true;
    };
    auto slash = text.find('/');
    std::string num = text.substr(0, slash);
    size_t start = (!num.empty() && num[0] == '-') ? 1 : 0;
    if (!digits(num, start)) return std::nullopt;
    Rational r;
    if (slash == std::string::npos) {
      r.value_ = mpq_class(num);
    } else {
      std::string den = text.substr(slash + 1);
      if (!digits(den, 0) || mpz_class(den) == 0) return std::nullopt;
      r.value_ = mpq_class(num + "/" + den);
      r.value_.canonicalize();
    }
    return r;
  }

  std::string str() const {
    if (is_integer()) return value_.get_num().get_str();
    return value_.get_num().get_str() + "/" + value_.get_den().get_str();
  }

  bool is_integer() const { return value_.get_den() == 1; }

  /// Value as a long long; only meaningful when is_integer().
  long long as_integer() const { return value_.get_num().get_si(); }

  friend Rational operator+(const Rational& a, const Rational& b) {
    return Rational(a.value_ + b.value_);
  }
  friend Rational operator-(const Rational& a, const Rational& b) {
    return Rational(a.value_ - b.value_);
  }
  friend Rational operator*(const Rational& a, const Rational& b) {
    return Rational(a.value_ * b.value_);
  }
  friend Rational operator/(const Rational& a, const Rational& b) {
    if (b.value_ == 0) throw std::invalid_argument("rational division by zero");
    return Rational(a.value_ / b.value_);
  }

  friend bool operator==(const Rational& a, const Rational& b) {
    return a.value_ == b.value_;
  }
  friend std::strong_ordering operator<=>(const Rational& a, const Rational& b) {
    int c = cmp(a.value_, b.value_);
    if (c < 0) return std::strong_ordering::less;
    if (c > 0) return std::strong_ordering::greater;
    return std::strong_ordering::equal;
  }

 private:
  explicit Rational(mpq_class v) : value_(std::move(v)) {}

  mpq_class value_;
};

}  // namespace morsegraph
