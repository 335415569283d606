#include "linres/formulas.hpp"

#include <algorithm>

namespace linres {

namespace {

BigInt big_binomial(int n, int k) { return BigInt(static_cast<long long>(binomial(n, k))); }

// q = a / b with an integrality check.
BigInt div_checked(const BigInt& a, const BigInt& b, const char* what) {
  BigInt q, r;
  BigInt::divmod(a, b, q, r);
  if (!r.is_zero())
    fail(errc::non_integral_betti, std::string(what) + " is not an integer: " + a.to_string() +
                                       "/" + b.to_string());
  return q;
}

}  // namespace

BettiTable minimal_resolution_formula(int n, int d, unsigned long long mu) {
  if (d < 1 || d >= n) fail(errc::invalid_input, "minimal resolution formula needs 1 <= d < n");
  if (mu < 1 || mu > binomial(n, d))
    fail(errc::invalid_input, "mu must be between 1 and C(n,d)");
  const BigInt e = BigInt(static_cast<long long>(binomial(n, d) - mu));
  BettiTable t;
  t.n = n;
  t.d = d;
  for (int i = 0; i <= n - d - 1; ++i) {
    // C(n-d,i) * (d*C(n,d) - (d+i)*e) / (d+i)
    BigInt num = big_binomial(n - d, i) *
                 (BigInt(d) * big_binomial(n, d) - BigInt(d + i) * e);
    BigInt v = div_checked(num, BigInt(d + i), "beta_{i,i+d}");
    if (v.sgn() < 0)
      fail(errc::non_integral_betti,
           "beta_{" + std::to_string(i) + "," + std::to_string(i + d) + "} is negative: not a minimal-to-linearity profile");
    if (!v.is_zero()) t.entries[{i, i + d}] = static_cast<unsigned long long>(v.to_int64());
  }
  t.entries[{n - d - 1, n}] = 1;
  BigInt top = BigInt(1) - e;
  for (int i = 0; i <= d - 1; ++i) {
    BigInt term = big_binomial(n, i);
    if ((d + i - 1) % 2 != 0) term = -term;
    top += term;
  }
  if (top.sgn() < 0)
    fail(errc::non_integral_betti, "beta_{n-d,n} is negative: not a minimal-to-linearity profile");
  if (!top.is_zero()) t.entries[{n - d, n}] = static_cast<unsigned long long>(top.to_int64());
  return t;
}

BettiTable cycle_betti(int n) {
  if (n < 4) fail(errc::invalid_input, "cycle Betti numbers need n >= 4");
  BettiTable t;
  t.n = n;
  t.d = 2;
  for (int i = 0; i <= n - 4; ++i) {
    BigInt num = BigInt(n) * big_binomial(n - 2, i) * BigInt(n - 3 - i);
    BigInt v = div_checked(num, BigInt(2 + i), "cycle beta_{i,i+2}");
    if (!v.is_zero()) t.entries[{i, i + 2}] = static_cast<unsigned long long>(v.to_int64());
  }
  t.entries[{n - 3, n}] = 1;
  return t;
}

long long homology_difference_identity(int n, int d, long long e) {
  if (d < 1 || d > n) fail(errc::invalid_input, "identity needs 1 <= d <= n");
  if (e < 0) fail(errc::invalid_input, "multiplicity must be nonnegative");
  long long sum = 0;
  for (int i = 0; i <= d - 1; ++i) {
    long long term = static_cast<long long>(binomial(n, i));
    sum += ((d + i - 1) % 2 == 0) ? term : -term;
  }
  return sum - e;
}

std::vector<BigInt> herzog_kuhl_variant(HerzogKuhlCase which, const std::vector<int>& degrees,
                                        const std::map<int, long long>& beta0,
                                        long long multiplicity, int rho) {
  if (rho < 0) fail(errc::inconsistent_input, "rho must be nonnegative");
  for (std::size_t i = 1; i < degrees.size(); ++i)
    if (degrees[i - 1] >= degrees[i])
      fail(errc::inconsistent_input, "degree sequence must be strictly increasing");
  const int top_k = which == HerzogKuhlCase::ii ? rho + 1 : rho;
  if (static_cast<int>(degrees.size()) < top_k + 1)
    fail(errc::inconsistent_input, "degree sequence too short for this case");
  if (which != HerzogKuhlCase::i && !degrees.empty() && degrees[0] != 0)
    fail(errc::inconsistent_input, "cases (ii) and (iii) require d_0 = 0");
  auto b0_it = beta0.find(degrees.empty() ? 0 : degrees[0]);
  if (b0_it == beta0.end()) fail(errc::inconsistent_input, "beta0 must provide the d_0 entry");
  const BigInt b0(b0_it->second);

  std::vector<BigInt> out;
  if (top_k == 0) return out;

  BigInt factorial(1);
  if (which == HerzogKuhlCase::ii)
    for (int k = 2; k <= rho; ++k) factorial *= BigInt(k);
  if (which == HerzogKuhlCase::iii)
    for (int k = 2; k <= rho - 1; ++k) factorial *= BigInt(k);

  for (int i = 1; i <= top_k; ++i) {
    BigInt num, den(1);
    if (which == HerzogKuhlCase::i) {
      num = b0;
      for (int k = 1; k <= rho; ++k) {
        if (k == i) continue;
        num *= BigInt(degrees[static_cast<std::size_t>(k)] - degrees[0]);
        den *= BigInt(degrees[static_cast<std::size_t>(k)] -
                      degrees[static_cast<std::size_t>(i)]);
      }
      if (i % 2 != 0) num = -num;
    } else {
      BigInt prod(1);
      for (int k = 1; k <= top_k; ++k) {
        if (k == i) continue;
        prod *= BigInt(degrees[static_cast<std::size_t>(k)]);
        den *= BigInt(degrees[static_cast<std::size_t>(k)] -
                      degrees[static_cast<std::size_t>(i)]);
      }
      num = b0 * prod - factorial * BigInt(multiplicity);
      if (i % 2 == 0) num = -num;
    }
    out.push_back(div_checked(num, den, "beta'_i"));
  }
  return out;
}

ResolutionShape resolution_shape(const BettiTable& t) {
  ResolutionShape s;
  if (t.entries.empty()) return s;
  s.positions.resize(static_cast<std::size_t>(t.projdim()) + 1);
  for (const auto& [ij, v] : t.entries)
    s.positions[static_cast<std::size_t>(ij.first)].emplace_back(ij.second, v);
  for (auto& pos : s.positions) std::sort(pos.begin(), pos.end());
  return s;
}

std::string render_resolution(const ResolutionShape& s) {
  std::string out = "0";
  for (std::size_t i = s.positions.size(); i-- > 0;) {
    out += " -> ";
    if (s.positions[i].empty()) {
      out += "0";
      continue;
    }
    for (std::size_t k = 0; k < s.positions[i].size(); ++k) {
      const auto& [j, v] = s.positions[i][k];
      if (k) out += "+";
      out += "S";
      if (v != 1) out += "^" + std::to_string(v);
      out += "(-" + std::to_string(j) + ")";
    }
  }
  out += " -> I -> 0";
  return out;
}

}  // namespace linres
