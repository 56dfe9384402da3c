#pragma once

#include <cstdint>
#include <string>
#include <vector>

namespace equicat {

/// Arbitrary-precision signed integer, sign-magnitude with 32-bit limbs.
/// Covers only what exact rational arithmetic needs.
class BigInt {
 public:
  BigInt() = default;
  BigInt(long long v);  // NOLINT: implicit by intent
  explicit BigInt(const std::string& decimal);

  bool is_zero() const { return limbs_.empty(); }
  bool is_negative() const { return negative_; }
  int signum() const { return is_zero() ? 0 : (negative_ ? -1 : 1); }

  BigInt operator-() const;
  BigInt abs() const;

  friend BigInt operator+(const BigInt& a, const BigInt& b);
  friend BigInt operator-(const BigInt& a, const BigInt& b);
  friend BigInt operator*(const BigInt& a, const BigInt& b);
  /// Truncated quotient (rounds toward zero), as in C integer division.
  friend BigInt operator/(const BigInt& a, const BigInt& b);
  friend BigInt operator%(const BigInt& a, const BigInt& b);

  friend bool operator==(const BigInt& a, const BigInt& b);
  friend bool operator!=(const BigInt& a, const BigInt& b) { return !(a == b); }
  friend bool operator<(const BigInt& a, const BigInt& b);
  friend bool operator>(const BigInt& a, const BigInt& b) { return b < a; }
  friend bool operator<=(const BigInt& a, const BigInt& b) { return !(b < a); }
  friend bool operator>=(const BigInt& a, const BigInt& b) { return !(a < b); }

  BigInt& operator+=(const BigInt& o) { return *this = *this + o; }
  BigInt& operator-=(const BigInt& o) { return *this = *this - o; }
  BigInt& operator*=(const BigInt& o) { return *this = *this * o; }

  static BigInt gcd(BigInt a, BigInt b);

  std::string to_string() const;

  /// Value as long long; caller guarantees it fits.
  long long to_ll() const;

 private:
  // limbs_[0] is least significant; no trailing zero limbs; zero == empty.
  std::vector<uint32_t> limbs_;
  bool negative_ = false;

  void trim();
  static int cmp_mag(const BigInt& a, const BigInt& b);
  static BigInt add_mag(const BigInt& a, const BigInt& b);
  static BigInt sub_mag(const BigInt& a, const BigInt& b);  // |a| >= |b|
  static void divmod(const BigInt& a, const BigInt& b, BigInt& q, BigInt& r);
  bool bit(size_t i) const;
  size_t bit_length() const;
  void shift_left_one_add_bit(bool b);
};

}  // namespace equicat
