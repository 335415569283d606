#pragma once

#include <cstdint>
#include <string>

#include "linres/errors.hpp"

namespace linres {

// Coefficient field of every homological computation: characteristic 0 means
// the rationals, otherwise GF(p) for a prime p.
class FieldSpec {
 public:
  FieldSpec() = default;  // rationals
  explicit FieldSpec(std::uint32_t characteristic);

  static FieldSpec rationals() { return FieldSpec(); }
  static FieldSpec gf(std::uint32_t p) { return FieldSpec(p); }

  std::uint32_t characteristic() const { return char_; }
  bool is_rationals() const { return char_ == 0; }
  std::string name() const { return char_ == 0 ? "q" : std::to_string(char_); }

  bool operator==(const FieldSpec& o) const { return char_ == o.char_; }
  bool operator!=(const FieldSpec& o) const { return char_ != o.char_; }

 private:
  std::uint32_t char_ = 0;
};

bool is_prime(std::uint64_t n);

inline FieldSpec::FieldSpec(std::uint32_t characteristic) : char_(characteristic) {
  if (char_ != 0 && !is_prime(char_))
    fail(errc::invalid_input, "field characteristic must be 0 or a prime, got " + std::to_string(char_));
}

inline bool is_prime(std::uint64_t n) {
  if (n < 2) return false;
  if (n % 2 == 0) return n == 2;
  for (std::uint64_t p = 3; p * p <= n; p += 2)
    if (n % p == 0) return false;
  return true;
}

}  // namespace linres
