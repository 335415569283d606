#pragma once

#include <cstdint>

#include "linres/classify.hpp"

namespace linres {

// The n-cycle graph as a 2-uniform clutter (n >= 3).
Clutter cycle(int n);
// Boundary of the d-dimensional cross-polytope: 2d vertices in antipodal
// pairs (2i-1, 2i), circuits = one vertex from each pair. An orientable
// pseudo-manifold for every d >= 2; d = 3 is the octahedron.
Clutter cross_polytope_boundary(int d);

// Named instances. The two surface triangulations are validated at
// construction against their homological invariants.
//
// glued_bipyramids: two bipyramid boundaries (5 vertices, 6 triangles each)
// sharing the triangle {3,4,5}; 7 vertices, 11 triangles. Decomposable over
// that clique, with strictly subadditive Betti numbers in the union.
Clutter glued_bipyramids();
// pinched_surface: 10 vertices (a, b, 1..8), 20 triangles, with the edge ab
// lying in four of them. Not a pseudo-manifold, yet every proper subclutter
// is a forest.
Clutter pinched_surface();
std::vector<std::string> pinched_surface_labels();  // labels[v-1] names vertex v
// 6-vertex, 10-triangle projective plane; 7-vertex, 14-triangle torus.
Clutter rp2_six();
Clutter torus_seven();

enum class GlueMode { clique_intersection, sc_disjoint };
struct GlueSpec {
  GlueMode mode = GlueMode::sc_disjoint;
  // identified[k] = {vertex of part1, vertex of part2}; the identified sets
  // must be cliques in both parts for clique_intersection mode.
  std::vector<std::pair<int, int>> identified;
};
// Union on the disjoint vertex sets with the identified vertices merged;
// part2's free vertices are appended after part1's.
Clutter glue(const Clutter& c1, const Clutter& c2, const GlueSpec& spec);

// splitmix64; the single documented randomness source, so seeded runs are
// reproducible across platforms.
struct Rng {
  std::uint64_t state;
  explicit Rng(std::uint64_t seed) : state(seed) {}
  std::uint64_t next() {
    std::uint64_t z = (state += 0x9e3779b97f4a7c15ull);
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ull;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebull;
    return z ^ (z >> 31);
  }
  std::uint64_t below(std::uint64_t bound) {  // uniform in [0, bound)
    std::uint64_t threshold = (0ull - bound) % bound;
    while (true) {
      std::uint64_t r = next();
      if (r >= threshold) return r % bound;
    }
  }
};

struct GeneratedClutter {
  Clutter clutter;
  std::vector<std::string> trace;  // applied construction rules, in order
};

struct GeneralizedChordalParams {
  int d = 3;
  int max_n = 10;  // vertex budget
  int steps = 8;   // attempted growth steps
  int base_n = 0;  // 0: sampled from [d, min(d+2, max_n)]
};

// Random member of Emtander's generalized chordal class: start from a maximal
// clutter, then repeatedly either glue a fresh maximal clutter over a clique
// or add a circuit one of whose (d-1)-subsets is unused.
GeneratedClutter generalized_chordal(std::uint64_t seed, const GeneralizedChordalParams& params);

}  // namespace linres
