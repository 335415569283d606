// Acceptance suite: one line per criterion, exit 0 only if all pass.
#include <cstdio>
#include <functional>
#include <map>
#include <sstream>
#include <string>
#include <vector>

#include "linres/binomial.hpp"
#include "linres/formulas.hpp"
#include "linres/generators.hpp"

using namespace linres;

namespace {

const FieldSpec kQ = FieldSpec::rationals();
const FieldSpec kF2 = FieldSpec::gf(2);
const FieldSpec kF3 = FieldSpec::gf(3);

struct Checker {
  bool ok = true;
  std::string detail;
  void expect(bool cond, const std::string& what) {
    if (!cond) {
      if (ok) detail = what;
      ok = false;
    }
  }
};

Clutter random_clutter(Rng& rng, int n, int d, int count) {
  std::vector<VertexMask> pool;
  for_each_subset_of_mask((1ull << n) - 1, d, [&](VertexMask m) { pool.push_back(m); });
  std::vector<VertexMask> cs;
  for (int i = 0; i < count && !pool.empty(); ++i) {
    const std::size_t j = rng.below(pool.size());
    cs.push_back(pool[j]);
    pool.erase(pool.begin() + static_cast<std::ptrdiff_t>(j));
  }
  return Clutter(n, d, std::move(cs));
}

Clutter compact_to_support(const Clutter& c) { return induced(c, c.vertex_support()).clutter; }

using Entries = std::map<std::pair<int, int>, unsigned long long>;

// ---------------------------------------------------------------- criterion 1
void glued_bipyramids_exact(Checker& c) {
  const BettiTable t = betti_hochster(glued_bipyramids(), kQ);
  const Entries expected{{{0, 3}, 24}, {{1, 4}, 61}, {{1, 5}, 2}, {{2, 5}, 62},
                         {{2, 6}, 4},  {{3, 6}, 30}, {{3, 7}, 2}, {{4, 7}, 6}};
  c.expect(t.entries == expected, "entry map differs from the expected table");
  c.expect(t.regularity() == 4, "reg != 4");
  c.expect(t.projdim() == 4, "projdim != 4");
}

// ---------------------------------------------------------------- criterion 2
void glued_bipyramids_strictness(Checker& c) {
  const Clutter whole = glued_bipyramids();
  const Clutter part1 = induced(whole, vertices_to_mask({1, 2, 3, 4, 5}, 7)).clutter;
  const Clutter part2 = induced(whole, vertices_to_mask({3, 4, 5, 6, 7}, 7)).clutter;
  c.expect(part1.size() == 6 && part2.size() == 6, "parts have unexpected sizes");
  c.expect(betti_hochster(part1, kQ).beta(2, 6) == 0, "beta_{2,6}(I_1) != 0");
  c.expect(betti_hochster(part2, kQ).beta(2, 6) == 0, "beta_{2,6}(I_2) != 0");
  c.expect(betti_hochster(whole, kQ).beta(2, 6) == 4, "beta_{2,6}(I) != 4");
}

// ---------------------------------------------------------------- criterion 3
void regularity_of_union(Checker& c) {
  Rng rng(1003);
  int accepted = 0;
  int attempts = 0;
  while (accepted < 50 && attempts < 4000) {
    ++attempts;
    const int d = 2 + static_cast<int>(rng.below(2));
    const bool clique_mode = accepted % 2 == 0;
    const int n1 = d + 1 + static_cast<int>(rng.below(3));
    const int n2 = d + 1 + static_cast<int>(rng.below(3));
    Clutter p1 = compact_to_support(
        random_clutter(rng, n1, d, 2 + static_cast<int>(rng.below(5))));
    Clutter p2 = compact_to_support(
        random_clutter(rng, n2, d, 2 + static_cast<int>(rng.below(5))));
    if (p1.size() < 2 || p2.size() < 2) continue;
    if (binomial(p1.n(), d) == p1.size() || binomial(p2.n(), d) == p2.size()) continue;

    GlueSpec spec;
    Clutter joined(1, 1, {});
    if (clique_mode) {
      spec.mode = GlueMode::clique_intersection;
      const int shared = 1 + static_cast<int>(rng.below(static_cast<std::uint64_t>(d)));
      if (shared > std::min(p1.n(), p2.n())) continue;
      for (int v = 1; v <= shared; ++v) spec.identified.push_back({v, v});
      try {
        joined = glue(p1, p2, spec);
      } catch (const error&) {
        continue;  // shared set was not a clique in some part
      }
    } else {
      spec.mode = GlueMode::sc_disjoint;
      joined = glue(p1, p2, spec);
    }
    if (joined.n() > 10) continue;
    // both parts must keep a private circuit so the decomposition is proper
    bool proper = false;
    for (VertexMask f : p1.circuits())
      if (!p2.contains(f)) proper = true;
    if (!proper || joined.size() <= std::max(p1.size(), p2.size())) continue;

    ++accepted;
    for (const auto& k : {kQ, kF2}) {
      const BettiTable tu = betti_hochster(joined, k);
      const BettiTable t1 = betti_hochster(p1, k);
      const BettiTable t2 = betti_hochster(p2, k);
      const int want = std::max(t1.regularity(), t2.regularity());
      c.expect(tu.regularity() == want,
               "instance " + std::to_string(accepted) + ": reg(union) != max over " + k.name());
      Entries all = tu.entries;
      for (const auto& [ij, v] : t1.entries) all.emplace(ij, 0);
      for (const auto& [ij, v] : t2.entries) all.emplace(ij, 0);
      for (const auto& [ij, v] : all) {
        if (ij.second - ij.first <= d) continue;
        c.expect(tu.beta(ij.first, ij.second) >=
                     t1.beta(ij.first, ij.second) + t2.beta(ij.first, ij.second),
                 "subadditivity fails at (" + std::to_string(ij.first) + "," +
                     std::to_string(ij.second) + ") over " + k.name());
      }
    }
  }
  c.expect(accepted == 50, "could not build 50 glued instances");
}

// ---------------------------------------------------------------- criterion 4
void cycle_formulas(Checker& c) {
  for (int n = 4; n <= 8; ++n) {
    const BettiTable closed = cycle_betti(n);
    for (const auto& k : {kQ, kF2}) {
      const BettiTable t = betti_hochster(cycle(n), k);
      c.expect(t.same_entries(closed), "cycle(" + std::to_string(n) + ") table mismatch over " + k.name());
      c.expect(t.regularity() == 3, "cycle(" + std::to_string(n) + ") reg != 3");
    }
  }
}

// ---------------------------------------------------------------- criterion 5
void rp2_characteristic(Checker& c) {
  const Clutter rp2 = rp2_six();
  c.expect(has_linear_resolution(rp2, kQ), "rp2 not linear over Q");
  c.expect(!has_linear_resolution(rp2, kF2), "rp2 linear over GF(2)");
  const BettiTable t = betti_hochster(rp2, kF2);
  c.expect(t.regularity() == 4, "rp2 reg != 4 over GF(2)");
  c.expect(is_minimal_to_linearity(rp2, kF2), "rp2 not minimal over GF(2)");
  c.expect(minimal_resolution_formula(6, 3, 10).same_entries(t),
           "closed form differs from Hochster for rp2 over GF(2)");
}

// ---------------------------------------------------------------- criterion 6
void oriented_pseudo_manifolds(Checker& c) {
  const Clutter octa = cross_polytope_boundary(3);
  const Clutter torus = torus_seven();
  const Entries octa_expected{{{0, 3}, 12}, {{1, 4}, 21}, {{2, 5}, 12}, {{2, 6}, 1}, {{3, 6}, 3}};
  const Entries torus_expected{{{0, 3}, 21}, {{1, 4}, 49}, {{2, 5}, 42},
                               {{3, 6}, 14}, {{3, 7}, 1},  {{4, 7}, 2}};
  for (const auto& k : {kQ, kF2}) {
    c.expect(is_minimal_to_linearity(octa, k), "octahedron not minimal over " + k.name());
    c.expect(is_minimal_to_linearity(torus, k), "torus not minimal over " + k.name());
    const BettiTable to = betti_hochster(octa, k);
    const BettiTable tt = betti_hochster(torus, k);
    c.expect(to.entries == octa_expected, "octahedron table mismatch over " + k.name());
    c.expect(tt.entries == torus_expected, "torus table mismatch over " + k.name());
    c.expect(minimal_resolution_formula(6, 3, 12).same_entries(to),
             "octahedron formula/Hochster disagree over " + k.name());
    c.expect(minimal_resolution_formula(7, 3, 21).same_entries(tt),
             "torus formula/Hochster disagree over " + k.name());
  }
}

// ---------------------------------------------------------------- criterion 7
void minimal_lemma(Checker& c) {
  std::vector<std::pair<Clutter, FieldSpec>> instances;
  for (int n = 4; n <= 8; ++n) {
    instances.push_back({cycle(n), kQ});
    instances.push_back({cycle(n), kF2});
  }
  instances.push_back({cross_polytope_boundary(3), kQ});
  instances.push_back({cross_polytope_boundary(3), kF2});
  instances.push_back({torus_seven(), kQ});
  instances.push_back({torus_seven(), kF2});
  instances.push_back({rp2_six(), kF2});
  instances.push_back({pinched_surface(), kQ});
  instances.push_back({pinched_surface(), kF2});
  for (const auto& [cl, k] : instances) {
    const std::string tag = "n=" + std::to_string(cl.n()) + ",d=" + std::to_string(cl.d()) +
                            ",field=" + k.name();
    c.expect(is_minimal_to_linearity(cl, k), tag + ": not classified minimal");
    const SimplicialComplex delta = clique_complex(cl);
    const int top = cl.d() - 1;
    c.expect(reduced_homology_dims(delta, k, top, top)[0] == 1, tag + ": top homology dim != 1");
    for (VertexMask w = 1; w < cl.full_mask(); ++w) {
      const SimplicialComplex sub = induced_subcomplex(delta, w);
      if (reduced_homology_dims(sub, k, top, top)[0] != 0) {
        c.expect(false, tag + ": proper induced subcomplex with nonzero top homology");
        break;
      }
    }
  }
}

// ---------------------------------------------------------------- criterion 8
void shape_bounds_random(Checker& c) {
  Rng rng(1008);
  int accepted = 0;
  int attempts = 0;
  while (accepted < 100 && attempts < 5000) {
    ++attempts;
    const int d = 2 + static_cast<int>(rng.below(2));
    const int n = d + 2 + static_cast<int>(rng.below(static_cast<std::uint64_t>(7 - d)));
    const Clutter cl = random_clutter(
        rng, n, d, 1 + static_cast<int>(rng.below(binomial(n, d) - 1)));
    if (cl.empty() || binomial(n, d) == cl.size()) continue;
    if (clique_complex(cl).dim() != d - 1) continue;
    ++accepted;
    const FieldSpec k = accepted % 2 == 0 ? kQ : kF2;
    const ShapeBoundsReport r = verify_shape_bounds(cl, k);
    c.expect(r.ok(), "bounds violated at instance " + std::to_string(accepted));
    const BettiTable t = betti_hochster(cl, k);
    c.expect(is_cohen_macaulay(cl, k) == (t.projdim() == n - d - 1),
             "CM criterion disagrees with projdim at instance " + std::to_string(accepted));
  }
  c.expect(accepted == 100, "could not build 100 random instances");
}

// ---------------------------------------------------------------- criterion 9
// Exhaustive Froberg check. bad[k][g] = some induced subgraph's flag complex
// has homology above dimension 0; computed by vertex-deletion recursion so
// each labeled graph is evaluated once.
struct EdgeTables {
  // edge bit index for pair (u,v), 1 <= u < v <= k
  std::vector<std::vector<int>> idx;
  std::vector<std::pair<int, int>> pairs;
  explicit EdgeTables(int k) : idx(static_cast<std::size_t>(k) + 1,
                                   std::vector<int>(static_cast<std::size_t>(k) + 1, -1)) {
    int next = 0;
    for (int u = 1; u <= k; ++u)
      for (int v = u + 1; v <= k; ++v) {
        idx[static_cast<std::size_t>(u)][static_cast<std::size_t>(v)] = next++;
        pairs.push_back({u, v});
      }
  }
};

std::vector<char> froberg_bad_table(int kmax, const FieldSpec& field,
                                    std::vector<std::vector<char>>& all_levels) {
  all_levels.assign(static_cast<std::size_t>(kmax) + 1, {});
  all_levels[0] = {0};
  for (int k = 1; k <= kmax; ++k) {
    const EdgeTables et(k);
    const EdgeTables et_child(k - 1);
    const int bits = k * (k - 1) / 2;
    // child_bit[v][e]: the bit index of edge e after deleting vertex v, or -1
    std::vector<std::vector<int>> child_bit(static_cast<std::size_t>(k) + 1,
                                            std::vector<int>(static_cast<std::size_t>(bits), -1));
    for (int v = 1; v <= k; ++v)
      for (int e = 0; e < bits; ++e) {
        const auto [a, b] = et.pairs[static_cast<std::size_t>(e)];
        if (a == v || b == v) continue;
        const int a2 = a > v ? a - 1 : a;
        const int b2 = b > v ? b - 1 : b;
        child_bit[static_cast<std::size_t>(v)][static_cast<std::size_t>(e)] =
            et_child.idx[static_cast<std::size_t>(a2)][static_cast<std::size_t>(b2)];
      }
    std::vector<char>& level = all_levels[static_cast<std::size_t>(k)];
    level.assign(1ull << bits, 0);
    const std::vector<char>& prev = all_levels[static_cast<std::size_t>(k) - 1];
    for (std::uint64_t g = 0; g < (1ull << bits); ++g) {
      bool bad = false;
      for (int v = 1; v <= k && !bad; ++v) {
        std::uint64_t child = 0;
        std::uint64_t m = g;
        while (m) {
          const int e = __builtin_ctzll(m);
          m &= m - 1;
          const int nb = child_bit[static_cast<std::size_t>(v)][static_cast<std::size_t>(e)];
          if (nb >= 0) child |= 1ull << nb;
        }
        if (prev[child]) bad = true;
      }
      if (!bad) {
        std::vector<VertexMask> edges;
        std::uint64_t m = g;
        while (m) {
          const int e = __builtin_ctzll(m);
          m &= m - 1;
          const auto [a, b] = et.pairs[static_cast<std::size_t>(e)];
          edges.push_back(vertex_bit(a) | vertex_bit(b));
        }
        const SimplicialComplex delta = clique_complex(Clutter(k, 2, std::move(edges)));
        if (delta.dim() >= 1) {
          const auto dims = reduced_homology_dims(delta, field, 1, delta.dim());
          for (long long h : dims)
            if (h != 0) bad = true;
        }
      }
      level[g] = bad ? 1 : 0;
    }
  }
  return all_levels[static_cast<std::size_t>(kmax)];
}

void froberg_exhaustive(Checker& c) {
  const int kmax = 7;
  std::vector<std::vector<char>> levels_q, levels_2;
  const std::vector<char> bad_q = froberg_bad_table(kmax, kQ, levels_q);
  const std::vector<char> bad_2 = froberg_bad_table(kmax, kF2, levels_2);
  const EdgeTables et(kmax);
  const int bits = kmax * (kmax - 1) / 2;
  long long mismatches = 0;
  for (std::uint64_t g = 0; g < (1ull << bits); ++g) {
    std::vector<VertexMask> edges;
    std::uint64_t m = g;
    while (m) {
      const int e = __builtin_ctzll(m);
      m &= m - 1;
      const auto [a, b] = et.pairs[static_cast<std::size_t>(e)];
      edges.push_back(vertex_bit(a) | vertex_bit(b));
    }
    const bool chordal = is_chordal_graph(Clutter(kmax, 2, std::move(edges)));
    if (chordal != !bad_q[g] || chordal != !bad_2[g]) ++mismatches;
  }
  c.expect(mismatches == 0,
           std::to_string(mismatches) + " graphs disagree with chordality on 7 vertices");

  // the homology recursion agrees with the library predicate
  for (int k = 0; k <= 5; ++k) {
    const EdgeTables small(k);
    const int b = k * (k - 1) / 2;
    for (std::uint64_t g = 0; g < (1ull << b); ++g) {
      std::vector<VertexMask> edges;
      std::uint64_t m = g;
      while (m) {
        const int e = __builtin_ctzll(m);
        m &= m - 1;
        const auto [a, bb] = small.pairs[static_cast<std::size_t>(e)];
        edges.push_back(vertex_bit(a) | vertex_bit(bb));
      }
      const Clutter cl(k, 2, std::move(edges));
      if (has_linear_resolution(cl, kQ) != !levels_q[static_cast<std::size_t>(k)][g]) {
        c.expect(false, "library disagrees with recursion at k=" + std::to_string(k));
        return;
      }
      if (has_linear_resolution(cl, kF2) != !levels_2[static_cast<std::size_t>(k)][g]) {
        c.expect(false, "library disagrees with recursion (GF2) at k=" + std::to_string(k));
        return;
      }
    }
  }
  Rng rng(1009);
  for (int iter = 0; iter < 2000; ++iter) {
    const int k = 6 + static_cast<int>(rng.below(2));
    const int b = k * (k - 1) / 2;
    const std::uint64_t g = rng.next() & ((1ull << b) - 1);
    const EdgeTables t(k);
    std::vector<VertexMask> edges;
    std::uint64_t m = g;
    while (m) {
      const int e = __builtin_ctzll(m);
      m &= m - 1;
      const auto [a, bb] = t.pairs[static_cast<std::size_t>(e)];
      edges.push_back(vertex_bit(a) | vertex_bit(bb));
    }
    const Clutter cl(k, 2, std::move(edges));
    const FieldSpec field = iter % 2 == 0 ? kQ : kF2;
    const auto& lvl = (iter % 2 == 0 ? levels_q : levels_2)[static_cast<std::size_t>(k)];
    if (has_linear_resolution(cl, field) != !lvl[g]) {
      c.expect(false, "library disagrees with recursion on a sampled graph");
      return;
    }
  }
}

// --------------------------------------------------------------- criterion 10
void emtander_linearity(Checker& c) {
  GeneralizedChordalParams p;
  p.d = 3;
  p.max_n = 10;
  p.steps = 8;
  for (std::uint64_t seed = 1; seed <= 100; ++seed) {
    const GeneratedClutter g = generalized_chordal(seed, p);
    for (const auto& k : {kQ, kF2, kF3}) {
      if (!has_linear_resolution(g.clutter, k)) {
        c.expect(false, "seed " + std::to_string(seed) + " not linear over " + k.name());
        return;
      }
    }
  }
}

// --------------------------------------------------------------- criterion 11
bool brute_every_nonempty_subclutter_has_degree_one(const Clutter& cl) {
  const auto& cs = cl.circuits();
  for (std::uint64_t pick = 1; pick < (1ull << cs.size()); ++pick) {
    std::vector<VertexMask> sub;
    for (std::size_t i = 0; i < cs.size(); ++i)
      if (pick >> i & 1) sub.push_back(cs[i]);
    const auto table = submaximal_circuits(Clutter(cl.n(), cl.d(), sub));
    bool deg1 = false;
    for (const auto& [e, deg] : table.entries())
      if (deg == 1) deg1 = true;
    if (!deg1) return false;
  }
  return true;
}

bool brute_every_proper_subclutter_is_forest(const Clutter& cl) {
  const auto& cs = cl.circuits();
  for (std::uint64_t pick = 0; pick + 1 < (1ull << cs.size()); ++pick) {
    std::vector<VertexMask> sub;
    for (std::size_t i = 0; i < cs.size(); ++i)
      if (pick >> i & 1) sub.push_back(cs[i]);
    if (!is_forest(Clutter(cl.n(), cl.d(), sub))) return false;
  }
  return true;
}

void peeling_equivalence(Checker& c) {
  Rng rng(1011);
  int done = 0;
  int attempts = 0;
  while (done < 150 && attempts < 2000) {
    ++attempts;
    const int d = 2 + static_cast<int>(rng.below(2));
    const int n = d + 1 + static_cast<int>(rng.below(static_cast<std::uint64_t>(7 - d)));
    const Clutter cl = random_clutter(rng, n, d, 1 + static_cast<int>(rng.below(12)));
    if (cl.empty() || cl.size() > 12) continue;
    ++done;
    c.expect(peel_core(cl).empty() == brute_every_nonempty_subclutter_has_degree_one(cl),
             "peeling characterization fails at attempt " + std::to_string(attempts));
    bool fast = true;
    for (VertexMask f : cl.circuits())
      if (!is_forest(remove_circuit(cl, f))) fast = false;
    c.expect(fast == brute_every_proper_subclutter_is_forest(cl),
             "per-circuit almost-tree test fails at attempt " + std::to_string(attempts));
  }
  c.expect(done == 150, "could not build 150 instances");
  // the fixtures too
  for (const Clutter& cl : {cross_polytope_boundary(3), rp2_six(), cycle(6)}) {
    bool fast = true;
    for (VertexMask f : cl.circuits())
      if (!is_forest(remove_circuit(cl, f))) fast = false;
    c.expect(fast == brute_every_proper_subclutter_is_forest(cl),
             "per-circuit almost-tree test fails on a fixture");
  }
}

// --------------------------------------------------------------- criterion 12
void final_example(Checker& c) {
  GlueSpec spec;
  spec.mode = GlueMode::clique_intersection;
  spec.identified = {{1, 1}, {2, 2}, {4, 5}};
  const Clutter joined = glue(torus_seven(), rp2_six(), spec);
  c.expect(joined.n() == 10, "glued vertex count != 10");
  for (const auto& k : {kQ, kF2, kF3}) {
    const BettiTable t = betti_hochster(joined, k);
    c.expect(t.regularity() == 4, "reg != 4 over " + k.name());
  }
}

}  // namespace

int main() {
  struct Criterion {
    const char* name;
    std::function<void(Checker&)> body;
  };
  const std::vector<Criterion> criteria = {
      {"glued_bipyramids_exact", glued_bipyramids_exact},
      {"glued_bipyramids_strictness", glued_bipyramids_strictness},
      {"regularity_of_union", regularity_of_union},
      {"cycle_formulas", cycle_formulas},
      {"rp2_characteristic", rp2_characteristic},
      {"oriented_pseudo_manifolds", oriented_pseudo_manifolds},
      {"minimal_lemma", minimal_lemma},
      {"shape_bounds_random", shape_bounds_random},
      {"froberg_exhaustive", froberg_exhaustive},
      {"emtander_linearity", emtander_linearity},
      {"peeling_equivalence", peeling_equivalence},
      {"final_example", final_example},
  };
  int failures = 0;
  for (std::size_t i = 0; i < criteria.size(); ++i) {
    Checker c;
    try {
      criteria[i].body(c);
    } catch (const std::exception& e) {
      c.expect(false, std::string("exception: ") + e.what());
    }
    if (c.ok) {
      std::printf("PASS %2zu %s\n", i + 1, criteria[i].name);
    } else {
      std::printf("FAIL %2zu %s: %s\n", i + 1, criteria[i].name, c.detail.c_str());
      ++failures;
    }
    std::fflush(stdout);
  }
  return failures == 0 ? 0 : 1;
}
