#include <cstdint>
#include <vector>

#include "linres/bigint.hpp"
#include "linres/matrix.hpp"

namespace linres {

namespace {

// Packed bit-rows with word XOR elimination; GF(2) dominates the workload.
int rank_gf2(const ExactMatrix& m) {
  const int words = (m.cols + 63) / 64;
  std::vector<std::uint64_t> rows(static_cast<std::size_t>(m.rows) * words, 0);
  for (int i = 0; i < m.rows; ++i)
    for (int j = 0; j < m.cols; ++j) {
      long long v = m.at(i, j) % 2;
      if (v) rows[static_cast<std::size_t>(i) * words + j / 64] ^= 1ull << (j % 64);
    }
  int r = 0;
  for (int c = 0; c < m.cols && r < m.rows; ++c) {
    const int w = c / 64;
    const std::uint64_t bit = 1ull << (c % 64);
    int pivot = -1;
    for (int i = r; i < m.rows; ++i)
      if (rows[static_cast<std::size_t>(i) * words + w] & bit) {
        pivot = i;
        break;
      }
    if (pivot < 0) continue;
    for (int k = 0; k < words; ++k)
      std::swap(rows[static_cast<std::size_t>(r) * words + k],
                rows[static_cast<std::size_t>(pivot) * words + k]);
    for (int i = r + 1; i < m.rows; ++i)
      if (rows[static_cast<std::size_t>(i) * words + w] & bit)
        for (int k = w; k < words; ++k)
          rows[static_cast<std::size_t>(i) * words + k] ^=
              rows[static_cast<std::size_t>(r) * words + k];
    ++r;
  }
  return r;
}

std::uint64_t pow_mod(std::uint64_t b, std::uint64_t e, std::uint64_t p) {
  std::uint64_t r = 1;
  b %= p;
  while (e) {
    if (e & 1) r = r * b % p;
    b = b * b % p;
    e >>= 1;
  }
  return r;
}

int rank_gfp(const ExactMatrix& m, std::uint32_t p) {
  std::vector<std::uint64_t> a(m.a.size());
  for (std::size_t i = 0; i < m.a.size(); ++i) {
    long long v = m.a[i] % static_cast<long long>(p);
    if (v < 0) v += p;
    a[i] = static_cast<std::uint64_t>(v);
  }
  auto at = [&](int i, int j) -> std::uint64_t& { return a[static_cast<std::size_t>(i) * m.cols + j]; };
  int r = 0;
  for (int c = 0; c < m.cols && r < m.rows; ++c) {
    int pivot = -1;
    for (int i = r; i < m.rows; ++i)
      if (at(i, c) != 0) {
        pivot = i;
        break;
      }
    if (pivot < 0) continue;
    if (pivot != r)
      for (int j = c; j < m.cols; ++j) std::swap(at(r, j), at(pivot, j));
    const std::uint64_t inv = pow_mod(at(r, c), p - 2, p);
    for (int i = r + 1; i < m.rows; ++i) {
      if (at(i, c) == 0) continue;
      const std::uint64_t f = at(i, c) * inv % p;
      at(i, c) = 0;
      for (int j = c + 1; j < m.cols; ++j)
        at(i, j) = (at(i, j) + (p - f) * at(r, j)) % p;
    }
    ++r;
  }
  return r;
}

// One-step fraction-free (Bareiss) elimination: every intermediate entry is a
// minor of the input, so divisions by the previous pivot are exact.
template <typename Z, typename Mul, typename DivExact, typename IsZero>
int bareiss(std::vector<Z> a, int rows, int cols, Mul mul, DivExact divx, IsZero is_zero,
            bool* overflow) {
  auto at = [&](int i, int j) -> Z& { return a[static_cast<std::size_t>(i) * cols + j]; };
  Z prev = Z(1);
  int r = 0;
  for (int c = 0; c < cols && r < rows; ++c) {
    int pivot = -1;
    for (int i = r; i < rows; ++i)
      if (!is_zero(at(i, c))) {
        pivot = i;
        break;
      }
    if (pivot < 0) continue;
    if (pivot != r)
      for (int j = c; j < cols; ++j) std::swap(at(r, j), at(pivot, j));
    for (int i = r + 1; i < rows; ++i) {
      for (int j = c + 1; j < cols; ++j) {
        Z t = mul(at(r, c), at(i, j)) - mul(at(i, c), at(r, j));
        at(i, j) = divx(t, prev);
        if (overflow && *overflow) return -1;
      }
      at(i, c) = Z(0);
    }
    prev = at(r, c);
    ++r;
  }
  return r;
}

int rank_q(const ExactMatrix& m) {
  // int64 path with __int128 intermediates; bail out to BigInt on overflow.
  {
    bool overflow = false;
    std::vector<__int128> a(m.a.begin(), m.a.end());
    int r = bareiss<__int128>(
        std::move(a), m.rows, m.cols, [](__int128 x, __int128 y) { return x * y; },
        [&overflow](__int128 x, __int128 p) {
          __int128 q = x / p;
          if (q > static_cast<__int128>(1) << 62 || q < -(static_cast<__int128>(1) << 62))
            overflow = true;
          return q;
        },
        [](__int128 x) { return x == 0; }, &overflow);
    if (!overflow) return r;
  }
  std::vector<BigInt> a(m.a.size());
  for (std::size_t i = 0; i < m.a.size(); ++i) a[i] = BigInt(m.a[i]);
  return bareiss<BigInt>(
      std::move(a), m.rows, m.cols, [](const BigInt& x, const BigInt& y) { return x * y; },
      [](const BigInt& x, const BigInt& p) { return x.div_exact(p); },
      [](const BigInt& x) { return x.is_zero(); }, nullptr);
}

}  // namespace

int rank(const ExactMatrix& m, const FieldSpec& k) {
  if (m.rows == 0 || m.cols == 0) return 0;
  if (k.is_rationals()) return rank_q(m);
  if (k.characteristic() == 2) return rank_gf2(m);
  return rank_gfp(m, k.characteristic());
}

}  // namespace linres
