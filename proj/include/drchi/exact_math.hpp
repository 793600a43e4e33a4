#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <initializer_list>
#include <iosfwd>
#include <span>
#include <string>

namespace drchi {

using BigInt = mpz_class;

/// Nonnegative gcd of all entries. Zeros are dropped; an empty or all-zero
/// list yields 0.
BigInt gcd_list(std::span<const BigInt> values);
BigInt gcd_list(std::initializer_list<BigInt> values);

BigInt factorial(unsigned long m);
BigInt binomial(unsigned long n, unsigned long k);

/// Result of the extended Euclidean algorithm: p*x + q*y == g with g >= 0.
struct ExtendedGcd {
  BigInt g;
  BigInt p;
  BigInt q;
};

ExtendedGcd extended_gcd(const BigInt& x, const BigInt& y);

/// Exact rational number, always stored reduced with a positive denominator.
///
/// There is deliberately no division: every value in this library is built
/// from integers by addition, multiplication and scaling, with the fixed
/// denominators that appear in the Euler characteristic formulas.
class ExactRational {
 public:
  ExactRational() = default;
  ExactRational(long value) : value_(value) {}  // NOLINT(implicit)
  ExactRational(const BigInt& value) : value_(value) {}  // NOLINT(implicit)
  /// Throws std::domain_error when `denominator` is zero.
  ExactRational(const BigInt& numerator, const BigInt& denominator);

  BigInt numerator() const { return value_.get_num(); }
  BigInt denominator() const { return value_.get_den(); }
  bool is_integer() const { return value_.get_den() == 1; }

  ExactRational operator+(const ExactRational& other) const;
  ExactRational operator-(const ExactRational& other) const;
  ExactRational operator*(const ExactRational& other) const;
  ExactRational operator-() const;
  ExactRational& operator+=(const ExactRational& other);
  ExactRational& operator-=(const ExactRational& other);
  ExactRational scaled(const BigInt& factor) const;

  bool operator==(const ExactRational& other) const {
    return value_ == other.value_;
  }

  /// "p/q", or just "p" when the denominator is 1.
  std::string to_string() const;

 private:
  explicit ExactRational(mpq_class value) : value_(std::move(value)) {}

  mpq_class value_;
};

std::ostream& operator<<(std::ostream& os, const ExactRational& value);

}  // namespace drchi
