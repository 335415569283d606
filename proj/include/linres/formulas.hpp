#pragma once

#include <map>

#include "linres/betti.hpp"
#include "linres/bigint.hpp"
#include "linres/binomial.hpp"

namespace linres {

// Closed-form Betti table of a clutter that is minimal to d-linearity on n
// vertices whose ideal has mu minimal generators:
//   beta_{i,i+d}   = C(n-d, i) * (d/(d+i) * C(n,d) - e)   for 0 <= i <= n-d-1
//   beta_{n-d-1,n} = 1
//   beta_{n-d,n}   = 1 - e + sum_{i=0}^{d-1} (-1)^{d+i-1} C(n,i)
// with e = C(n,d) - mu. Every value must come out a nonnegative integer;
// a violation means the (n, d, mu) profile cannot be minimal to linearity.
BettiTable minimal_resolution_formula(int n, int d, unsigned long long mu);

// Betti table of the circuit ideal of an n-cycle (n >= 4):
//   beta_{i,i+2} = n * C(n-2, i) * (n-3-i)/(2+i)  for 0 <= i <= n-4,
//   beta_{n-3,n} = 1.
BettiTable cycle_betti(int n);

// Right-hand side of the homology difference identity for a (d-1)-dimensional
// complex with complete (d-2)-skeleton and e top faces:
//   dim H~_{d-2} - dim H~_{d-1} = sum_{i=0}^{d-1} (-1)^{d+i-1} C(n,i) - e.
long long homology_difference_identity(int n, int d, long long e);

enum class HerzogKuhlCase { i, ii, iii };

// The three displayed closed forms for beta'_i = beta_{i,d_i} - beta_{i-1,d_i},
// evaluated exactly as stated (including their sign conventions):
//   (i)   beta'_i = beta_0 (-1)^i prod_{k!=i} (d_k-d_0)/(d_k-d_i), k = 1..rho
//   (ii)  beta'_i = (-1)^{i-1} [beta_0 prod_{k!=i} d_k - rho! e] / prod_{k!=i} (d_k-d_i),
//         k = 1..rho+1
//   (iii) beta'_i = (-1)^{i-1} [beta_0 prod_{k!=i} d_k - (rho-1)! e] / prod_{k!=i} (d_k-d_i),
//         k = 1..rho
// degrees holds d_0 < d_1 < ...; beta0 maps degree -> multiplicity (beta_0 is
// read at d_0). Non-integral values raise non_integral_betti.
std::vector<BigInt> herzog_kuhl_variant(HerzogKuhlCase which, const std::vector<int>& degrees,
                                        const std::map<int, long long>& beta0,
                                        long long multiplicity, int rho);

// Twists with multiplicities at each homological position of a table.
struct ResolutionShape {
  std::vector<std::vector<std::pair<int, unsigned long long>>> positions;
};
ResolutionShape resolution_shape(const BettiTable& t);
// e.g. "0 -> S^6(-7) -> S^30(-6)+S^2(-7) -> ... -> I -> 0"
std::string render_resolution(const ResolutionShape& s);

}  // namespace linres
