#include "drchi/exact_math.hpp"

#include <ostream>
#include <stdexcept>

namespace drchi {

BigInt gcd_list(std::span<const BigInt> values) {
  BigInt g = 0;
  for (const auto& v : values) {
    if (v == 0) continue;
    mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), v.get_mpz_t());
    if (g == 1) break;
  }
  return g;
}

BigInt gcd_list(std::initializer_list<BigInt> values) {
  return gcd_list(std::span<const BigInt>(values.begin(), values.size()));
}

BigInt factorial(unsigned long m) {
  BigInt out;
  mpz_fac_ui(out.get_mpz_t(), m);
  return out;
}

BigInt binomial(unsigned long n, unsigned long k) {
  if (k > n) return 0;
  BigInt out;
  mpz_bin_uiui(out.get_mpz_t(), n, k);
  return out;
}

ExtendedGcd extended_gcd(const BigInt& x, const BigInt& y) {
  // Classic iterative Euclid on |x|, |y|; signs are folded back at the end.
  BigInt old_r = abs(x), r = abs(y);
  BigInt old_s = 1, s = 0;
  BigInt old_t = 0, t = 1;
  while (r != 0) {
    BigInt quotient = old_r / r;
    BigInt tmp = old_r - quotient * r;
    old_r = r;
    r = tmp;
    tmp = old_s - quotient * s;
    old_s = s;
    s = tmp;
    tmp = old_t - quotient * t;
    old_t = t;
    t = tmp;
  }
  if (x < 0) old_s = -old_s;
  if (y < 0) old_t = -old_t;
  return {old_r, old_s, old_t};
}

ExactRational::ExactRational(const BigInt& numerator, const BigInt& denominator) {
  if (denominator == 0) throw std::domain_error("ExactRational: zero denominator");
  value_ = mpq_class(numerator, denominator);
  value_.canonicalize();
}

ExactRational ExactRational::operator+(const ExactRational& other) const {
  return ExactRational(mpq_class(value_ + other.value_));
}

ExactRational ExactRational::operator-(const ExactRational& other) const {
  return ExactRational(mpq_class(value_ - other.value_));
}

ExactRational ExactRational::operator*(const ExactRational& other) const {
  return ExactRational(mpq_class(value_ * other.value_));
}

ExactRational ExactRational::operator-() const {
  return ExactRational(mpq_class(-value_));
}

ExactRational& ExactRational::operator+=(const ExactRational& other) {
  value_ += other.value_;
  return *this;
}

ExactRational& ExactRational::operator-=(const ExactRational& other) {
  value_ -= other.value_;
  return *this;
}

ExactRational ExactRational::scaled(const BigInt& factor) const {
  return ExactRational(mpq_class(value_ * mpq_class(factor)));
}

std::string ExactRational::to_string() const {
  if (is_integer()) return value_.get_num().get_str();
  return value_.get_num().get_str() + "/" + value_.get_den().get_str();
}

std::ostream& operator<<(std::ostream& os, const ExactRational& value) {
  return os << value.to_string();
}

}  // namespace drchi
