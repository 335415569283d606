#pragma once

#include <cstdint>
#include <string>
#include <vector>

namespace linres {

// Signed arbitrary-precision integer, sign-magnitude with base-2^32 limbs.
// Covers exactly what fraction-free elimination and the closed-form Betti
// evaluators need: ring arithmetic, truncated divmod, exact division, gcd
// and decimal conversion.
class BigInt {
 public:
  BigInt() = default;
  BigInt(long long v);  // NOLINT: implicit by design, mirrors integer literals

  bool is_zero() const { return sign_ == 0; }
  int sgn() const { return sign_; }

  BigInt operator-() const;

  friend BigInt operator+(const BigInt& a, const BigInt& b);
  friend BigInt operator-(const BigInt& a, const BigInt& b);
  friend BigInt operator*(const BigInt& a, const BigInt& b);
  BigInt& operator+=(const BigInt& b);
  BigInt& operator-=(const BigInt& b);
  BigInt& operator*=(const BigInt& b);

  // Truncated division: a == q*b + r with |r| < |b| and sign(r) == sign(a).
  static void divmod(const BigInt& a, const BigInt& b, BigInt& q, BigInt& r);
  // Quotient of an exact division; throws invalid_input when b does not divide *this.
  BigInt div_exact(const BigInt& b) const;

  static BigInt gcd(const BigInt& a, const BigInt& b);  // nonnegative

  bool operator==(const BigInt& o) const { return sign_ == o.sign_ && limbs_ == o.limbs_; }
  bool operator!=(const BigInt& o) const { return !(*this == o); }
  bool operator<(const BigInt& o) const;
  bool operator>(const BigInt& o) const { return o < *this; }
  bool operator<=(const BigInt& o) const { return !(o < *this); }
  bool operator>=(const BigInt& o) const { return !(*this < o); }

  bool fits_int64() const;
  long long to_int64() const;  // valid only when fits_int64()
  std::string to_string() const;

 private:
  int sign_ = 0;                      // -1, 0, +1
  std::vector<std::uint32_t> limbs_;  // little-endian magnitude, no leading zeros

  void trim();
  static int cmp_mag(const std::vector<std::uint32_t>& a, const std::vector<std::uint32_t>& b);
  static std::vector<std::uint32_t> add_mag(const std::vector<std::uint32_t>& a,
                                            const std::vector<std::uint32_t>& b);
  // requires |a| >= |b|
  static std::vector<std::uint32_t> sub_mag(const std::vector<std::uint32_t>& a,
                                            const std::vector<std::uint32_t>& b);
  static std::vector<std::uint32_t> mul_mag(const std::vector<std::uint32_t>& a,
                                            const std::vector<std::uint32_t>& b);
  static void divmod_mag(const std::vector<std::uint32_t>& a, const std::vector<std::uint32_t>& b,
                         std::vector<std::uint32_t>& q, std::vector<std::uint32_t>& r);
};

}  // namespace linres
