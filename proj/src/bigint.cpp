#include "equicat/bigint.hpp"

#include <algorithm>
#include <stdexcept>

#include "equicat/error.hpp"

namespace equicat {

BigInt::BigInt(long long v) {
  negative_ = v < 0;
  unsigned long long m =
      negative_ ? ~static_cast<unsigned long long>(v) + 1ULL
                : static_cast<unsigned long long>(v);
  while (m != 0) {
    limbs_.push_back(static_cast<uint32_t>(m & 0xffffffffULL));
    m >>= 32;
  }
}

BigInt::BigInt(const std::string& decimal) {
  size_t i = 0;
  bool neg = false;
  if (i < decimal.size() && (decimal[i] == '-' || decimal[i] == '+')) {
    neg = decimal[i] == '-';
    ++i;
  }
  if (i == decimal.size())
    throw Error(ErrorCode::BadInput, "BigInt: empty decimal string");
  BigInt acc;
  for (; i < decimal.size(); ++i) {
    char c = decimal[i];
    if (c < '0' || c > '9')
      throw Error(ErrorCode::BadInput, "BigInt: bad digit in decimal string");
    acc = acc * BigInt(10) + BigInt(c - '0');
  }
  limbs_ = std::move(acc.limbs_);
  negative_ = neg && !limbs_.empty();
}

void BigInt::trim() {
  while (!limbs_.empty() && limbs_.back() == 0) limbs_.pop_back();
  if (limbs_.empty()) negative_ = false;
}

int BigInt::cmp_mag(const BigInt& a, const BigInt& b) {
  if (a.limbs_.size() != b.limbs_.size())
    return a.limbs_.size() < b.limbs_.size() ? -1 : 1;
  for (size_t i = a.limbs_.size(); i-- > 0;) {
    if (a.limbs_[i] != b.limbs_[i]) return a.limbs_[i] < b.limbs_[i] ? -1 : 1;
  }
  return 0;
}

BigInt BigInt::add_mag(const BigInt& a, const BigInt& b) {
  BigInt r;
  const size_t n = std::max(a.limbs_.size(), b.limbs_.size());
  r.limbs_.resize(n, 0);
  uint64_t carry = 0;
  for (size_t i = 0; i < n; ++i) {
    uint64_t s = carry;
    if (i < a.limbs_.size()) s += a.limbs_[i];
    if (i < b.limbs_.size()) s += b.limbs_[i];
    r.limbs_[i] = static_cast<uint32_t>(s & 0xffffffffULL);
    carry = s >> 32;
  }
  if (carry) r.limbs_.push_back(static_cast<uint32_t>(carry));
  return r;
}

BigInt BigInt::sub_mag(const BigInt& a, const BigInt& b) {
  BigInt r;
  r.limbs_.resize(a.limbs_.size(), 0);
  int64_t borrow = 0;
  for (size_t i = 0; i < a.limbs_.size(); ++i) {
    int64_t d = static_cast<int64_t>(a.limbs_[i]) - borrow -
                (i < b.limbs_.size() ? static_cast<int64_t>(b.limbs_[i]) : 0);
    if (d < 0) {
      d += 1LL << 32;
      borrow = 1;
    } else {
      borrow = 0;
    }
    r.limbs_[i] = static_cast<uint32_t>(d);
  }
  r.trim();
  return r;
}

BigInt BigInt::operator-() const {
  BigInt r = *this;
  if (!r.is_zero()) r.negative_ = !r.negative_;
  return r;
}

BigInt BigInt::abs() const {
  BigInt r = *this;
  r.negative_ = false;
  return r;
}

BigInt operator+(const BigInt& a, const BigInt& b) {
  if (a.negative_ == b.negative_) {
    BigInt r = BigInt::add_mag(a, b);
    r.negative_ = a.negative_ && !r.is_zero();
    return r;
  }
  int c = BigInt::cmp_mag(a, b);
  if (c == 0) return BigInt();
  BigInt r = c > 0 ? BigInt::sub_mag(a, b) : BigInt::sub_mag(b, a);
  r.negative_ = (c > 0 ? a.negative_ : b.negative_) && !r.is_zero();
  return r;
}

BigInt operator-(const BigInt& a, const BigInt& b) { return a + (-b); }

BigInt operator*(const BigInt& a, const BigInt& b) {
  if (a.is_zero() || b.is_zero()) return BigInt();
  BigInt r;
  r.limbs_.assign(a.limbs_.size() + b.limbs_.size(), 0);
  for (size_t i = 0; i < a.limbs_.size(); ++i) {
    uint64_t carry = 0;
    for (size_t j = 0; j < b.limbs_.size(); ++j) {
      uint64_t cur = static_cast<uint64_t>(a.limbs_[i]) * b.limbs_[j] +
                     r.limbs_[i + j] + carry;
      r.limbs_[i + j] = static_cast<uint32_t>(cur & 0xffffffffULL);
      carry = cur >> 32;
    }
    size_t k = i + b.limbs_.size();
    while (carry) {
      uint64_t cur = r.limbs_[k] + carry;
      r.limbs_[k] = static_cast<uint32_t>(cur & 0xffffffffULL);
      carry = cur >> 32;
      ++k;
    }
  }
  r.trim();
  r.negative_ = a.negative_ != b.negative_;
  return r;
}

bool BigInt::bit(size_t i) const {
  size_t limb = i / 32, off = i % 32;
  if (limb >= limbs_.size()) return false;
  return (limbs_[limb] >> off) & 1u;
}

size_t BigInt::bit_length() const {
  if (limbs_.empty()) return 0;
  uint32_t top = limbs_.back();
  size_t bits = 0;
  while (top) {
    ++bits;
    top >>= 1;
  }
  return (limbs_.size() - 1) * 32 + bits;
}

void BigInt::shift_left_one_add_bit(bool b) {
  uint32_t carry = b ? 1u : 0u;
  for (auto& limb : limbs_) {
    uint32_t next = limb >> 31;
    limb = (limb << 1) | carry;
    carry = next;
  }
  if (carry) limbs_.push_back(carry);
}

// Binary long division on magnitudes; quadratic but our operands are tiny.
void BigInt::divmod(const BigInt& a, const BigInt& b, BigInt& q, BigInt& r) {
  if (b.is_zero()) throw Error(ErrorCode::BadInput, "BigInt: division by zero");
  BigInt amag = a.abs(), bmag = b.abs();
  q = BigInt();
  r = BigInt();
  if (cmp_mag(amag, bmag) < 0) {
    r = amag;
  } else {
    size_t nbits = amag.bit_length();
    q.limbs_.assign((nbits + 31) / 32, 0);
    for (size_t i = nbits; i-- > 0;) {
      r.shift_left_one_add_bit(amag.bit(i));
      if (cmp_mag(r, bmag) >= 0) {
        r = sub_mag(r, bmag);
        q.limbs_[i / 32] |= 1u << (i % 32);
      }
    }
    q.trim();
    r.trim();
  }
  q.negative_ = !q.is_zero() && (a.negative_ != b.negative_);
  r.negative_ = !r.is_zero() && a.negative_;
}

BigInt operator/(const BigInt& a, const BigInt& b) {
  BigInt q, r;
  BigInt::divmod(a, b, q, r);
  return q;
}

BigInt operator%(const BigInt& a, const BigInt& b) {
  BigInt q, r;
  BigInt::divmod(a, b, q, r);
  return r;
}

bool operator==(const BigInt& a, const BigInt& b) {
  return a.negative_ == b.negative_ && a.limbs_ == b.limbs_;
}

bool operator<(const BigInt& a, const BigInt& b) {
  if (a.negative_ != b.negative_) return a.negative_;
  int c = BigInt::cmp_mag(a, b);
  return a.negative_ ? c > 0 : c < 0;
}

BigInt BigInt::gcd(BigInt a, BigInt b) {
  a.negative_ = false;
  b.negative_ = false;
  while (!b.is_zero()) {
    BigInt r = a % b;
    a = std::move(b);
    b = std::move(r);
  }
  return a;
}

std::string BigInt::to_string() const {
  if (is_zero()) return "0";
  std::string digits;
  BigInt cur = abs();
  const BigInt base(1000000000LL);
  while (!cur.is_zero()) {
    BigInt q, r;
    divmod(cur, base, q, r);
    long long chunk = r.to_ll();
    for (int i = 0; i < 9; ++i) {
      digits.push_back(static_cast<char>('0' + chunk % 10));
      chunk /= 10;
    }
    cur = std::move(q);
  }
  while (digits.size() > 1 && digits.back() == '0') digits.pop_back();
  if (negative_) digits.push_back('-');
  std::reverse(digits.begin(), digits.end());
  return digits;
}

long long BigInt::to_ll() const {
  unsigned long long m = 0;
  for (size_t i = limbs_.size(); i-- > 0;) m = (m << 32) | limbs_[i];
  return negative_ ? -static_cast<long long>(m) : static_cast<long long>(m);
}

}  // namespace equicat
