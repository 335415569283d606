#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "linres/bigint.hpp"
#include "linres/errors.hpp"
#include "linres/generators.hpp"

using linres::BigInt;
using linres::Rng;

namespace {

long long rand_i64(Rng& rng) {
  // biased toward small magnitudes so products stay interesting
  const int shift = static_cast<int>(rng.below(60));
  return static_cast<long long>(rng.next() >> (4 + shift)) - (1ll << (59 - shift));
}

}  // namespace

TEST_CASE("ring operations agree with __int128 on random inputs") {
  Rng rng(7);
  for (int iter = 0; iter < 2000; ++iter) {
    const long long a = rand_i64(rng) >> 32;
    const long long b = rand_i64(rng) >> 32;
    CHECK((BigInt(a) + BigInt(b)).to_int64() == a + b);
    CHECK((BigInt(a) - BigInt(b)).to_int64() == a - b);
    const __int128 p = static_cast<__int128>(a) * b;
    const BigInt q = BigInt(a) * BigInt(b);
    CHECK(static_cast<__int128>(q.to_int64()) == p);  // fits: |a|,|b| < 2^31
  }
}

TEST_CASE("divmod is truncated division") {
  Rng rng(11);
  for (int iter = 0; iter < 2000; ++iter) {
    const long long a = rand_i64(rng);
    long long b = rand_i64(rng);
    if (b == 0) b = 17;
    BigInt q, r;
    BigInt::divmod(BigInt(a), BigInt(b), q, r);
    CHECK(q.to_int64() == a / b);
    CHECK(r.to_int64() == a % b);
  }
}

TEST_CASE("multi-limb arithmetic: factorial digits and reconstruction") {
  BigInt f(1);
  for (int k = 2; k <= 25; ++k) f *= BigInt(k);
  CHECK(f.to_string() == "15511210043330985984000000");
  CHECK(!f.fits_int64());
  BigInt g = f;
  for (int k = 25; k >= 2; --k) g = g.div_exact(BigInt(k));
  CHECK(g.to_int64() == 1);
}

TEST_CASE("divmod on multi-limb operands") {
  Rng rng(13);
  for (int iter = 0; iter < 500; ++iter) {
    BigInt a(rand_i64(rng)), b(rand_i64(rng)), c(rand_i64(rng));
    if (b.is_zero()) b = BigInt(3);
    const BigInt n = a * b + c * BigInt(1ll << 20);
    BigInt q, r;
    BigInt::divmod(n, b, q, r);
    CHECK(q * b + r == n);
    // |r| < |b|
    const BigInt abs_r = r.sgn() < 0 ? -r : r;
    const BigInt abs_b = b.sgn() < 0 ? -b : b;
    CHECK(abs_r < abs_b);
  }
}

TEST_CASE("gcd and exact division") {
  CHECK(BigInt::gcd(BigInt(12), BigInt(-18)).to_int64() == 6);
  CHECK(BigInt::gcd(BigInt(0), BigInt(5)).to_int64() == 5);
  CHECK(BigInt(84).div_exact(BigInt(-7)).to_int64() == -12);
  CHECK_THROWS_AS((void)BigInt(5).div_exact(BigInt(2)), linres::error);
}

TEST_CASE("comparisons") {
  CHECK(BigInt(-5) < BigInt(3));
  CHECK(BigInt(3) < BigInt(5));
  CHECK(BigInt(-7) < BigInt(-5));
  BigInt big(1);
  for (int k = 0; k < 10; ++k) big *= BigInt(1ll << 40);
  CHECK(BigInt(1) < big);
  CHECK(-big < BigInt(-1));
}
