#pragma once

#include <compare>
#include <cstdint>
#include <string>

#include <boost/multiprecision/cpp_int.hpp>

namespace ecpart {

using BigInt = boost::multiprecision::cpp_int;

/// Exact rational of the form numerator / 2^exponent, kept in lowest terms
/// (odd numerator or zero with exponent 0). Probabilities built from fair
/// coin flips stay in this form under +, -, and *.
class Dyadic {
 public:
  Dyadic() = default;
  Dyadic(BigInt numerator, unsigned exponent);
  static Dyadic integer(std::int64_t v) { return Dyadic(BigInt(v), 0); }
  static Dyadic one() { return integer(1); }
  /// 2^-k
  static Dyadic inverse_power_of_two(unsigned k) { return Dyadic(BigInt(1), k); }

  const BigInt& numerator() const noexcept { return num_; }
  unsigned exponent() const noexcept { return exp_; }
  BigInt denominator() const { return BigInt(1) << exp_; }

  double to_double() const;
  /// "p/q" in lowest terms, or "p" when the denominator is 1.
  std::string to_string() const;

  friend Dyadic operator+(const Dyadic& a, const Dyadic& b);
  friend Dyadic operator-(const Dyadic& a, const Dyadic& b);
  friend Dyadic operator*(const Dyadic& a, const Dyadic& b);
  Dyadic& operator+=(const Dyadic& o) { return *this = *this + o; }

  friend bool operator==(const Dyadic& a, const Dyadic& b) {
    return a.exp_ == b.exp_ && a.num_ == b.num_;
  }
  friend std::strong_ordering operator<=>(const Dyadic& a, const Dyadic& b);

 private:
  void normalize();

  BigInt num_ = 0;
  unsigned exp_ = 0;
};

}  // namespace ecpart
