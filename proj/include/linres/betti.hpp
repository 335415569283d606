#pragma once

#include <map>
#include <optional>
#include <string>

#include "linres/complex.hpp"

namespace linres {

// Graded Betti numbers of the circuit ideal I(complement(C)), equivalently of
// the Stanley-Reisner ideal of the clique complex of C. Zero multiplicities
// are omitted.
struct BettiTable {
  int n = 0;
  int d = 0;
  std::optional<FieldSpec> field;  // absent for closed-form tables
  std::map<std::pair<int, int>, unsigned long long> entries;  // (i, j) -> beta_{i,j}

  unsigned long long beta(int i, int j) const;
  int regularity() const;  // max j-i over entries
  int projdim() const;     // max i over entries
  int indeg() const;       // min j among the i == 0 entries
  unsigned long long mu() const;            // number of minimal generators
  unsigned long long multiplicity() const;  // e(S/I) = C(n,d) - mu = |C|
  bool has_entries() const { return !entries.empty(); }
  // Entry-level equality; the field tag is metadata and not compared.
  bool same_entries(const BettiTable& o) const {
    return n == o.n && d == o.d && entries == o.entries;
  }
};

struct HochsterOptions {
  int max_n = 20;       // documented capacity cap for the 2^n enumeration
  int threads = 0;      // 0 = runtime default
  bool parallel = true;
};

// Hochster-formula engine. Enumerates vertex subsets W and accumulates
// dim of the reduced homology of the induced subcomplexes; subsets are
// independent, so the loop runs on the OpenMP worker pool with commutative
// reduction. Throws zero_ideal when C is the maximal clutter.
BettiTable betti_hochster(const Clutter& c, const FieldSpec& k, const HochsterOptions& opt = {});

// Serial reference implementation: plain loops over the public complex API,
// no memoization, no skeleton shortcuts. Kept for tests and the benchmark.
BettiTable betti_hochster_serial(const Clutter& c, const FieldSpec& k);

// reg == indeg; the zero ideal counts as linear. When the clique complex has
// dimension d-1 this is a single top-homology test.
bool has_linear_resolution(const Clutter& c, const FieldSpec& k);

// Vanishing of H~_{d-2} of the clique complex; requires dim = d-1.
bool is_cohen_macaulay(const Clutter& c, const FieldSpec& k);

struct ShapeBoundsReport {
  int n = 0, d = 0;
  int reg = 0, projdim = 0;
  bool reg_in_band = false;        // d <= reg <= d+1
  bool projdim_in_band = false;    // n-d-1 <= projdim <= n-d
  bool entries_in_band = false;    // every entry has d <= j-i <= d+1
  bool top_strand_only_at_n = false;  // entries with j-i == d+1 sit at j == n
  bool ok() const { return reg_in_band && projdim_in_band && entries_in_band; }
};
ShapeBoundsReport verify_shape_bounds(const Clutter& c, const FieldSpec& k);

// Betti diagram:  header "i: 0 1 ...", one row per j-i value, footer
// "reg=<r> pdim=<p> indeg=<m> field=<q|p>".
std::string render_betti_text(const BettiTable& t);
std::string betti_json(const BettiTable& t);

}  // namespace linres
