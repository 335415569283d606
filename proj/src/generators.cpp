#include "linres/generators.hpp"

#include <algorithm>

#include "linres/binomial.hpp"

namespace linres {

Clutter cycle(int n) {
  if (n < 3) fail(errc::invalid_input, "cycle needs n >= 3");
  std::vector<std::vector<int>> lists;
  for (int i = 1; i < n; ++i) lists.push_back({i, i + 1});
  lists.push_back({1, n});
  return Clutter::from_vertex_lists(n, 2, lists);
}

Clutter cross_polytope_boundary(int d) {
  if (d < 2) fail(errc::invalid_input, "cross-polytope boundary needs d >= 2");
  if (2 * d > kMaxVertices) fail(errc::invalid_input, "cross-polytope boundary too large");
  std::vector<VertexMask> cs;
  for (std::uint64_t pick = 0; pick < (1ull << d); ++pick) {
    VertexMask f = 0;
    for (int i = 0; i < d; ++i) f |= vertex_bit(2 * i + 1 + static_cast<int>(pick >> i & 1));
    cs.push_back(f);
  }
  return Clutter(2 * d, d, std::move(cs));
}

Clutter glued_bipyramids() {
  return Clutter::from_vertex_lists(
      7, 3,
      {{1, 2, 3}, {1, 2, 4}, {1, 3, 4}, {2, 3, 5}, {2, 4, 5}, {3, 4, 5},
       {3, 4, 7}, {3, 6, 7}, {4, 6, 7}, {3, 5, 6}, {4, 5, 6}});
}

Clutter pinched_surface() {
  // vertices a, b map to 9, 10 (see pinched_surface_labels)
  const int a = 9, b = 10;
  return Clutter::from_vertex_lists(
      10, 3,
      {{a, 2, 3}, {b, 1, 4}, {a, b, 1}, {a, 1, 2}, {a, b, 4}, {a, 3, 4},
       {2, 3, 6}, {3, 6, 7}, {1, 2, 5}, {2, 5, 6}, {1, 4, 5}, {4, 5, 8},
       {3, 4, 8}, {3, 7, 8}, {a, 6, 7}, {b, 5, 8}, {a, b, 5}, {a, 5, 6},
       {a, b, 8}, {a, 7, 8}});
}

std::vector<std::string> pinched_surface_labels() {
  return {"1", "2", "3", "4", "5", "6", "7", "8", "a", "b"};
}

namespace {

void validate_surface(const Clutter& c, const char* name, long long chi,
                      const FieldSpec& h1_field, long long h1, bool orientable_expected) {
  if (!is_pseudo_manifold(c))
    fail(errc::fixture_validation_failed, std::string(name) + ": not a pseudo-manifold");
  const SimplicialComplex gen = generated_complex(c);
  if (euler_characteristic(gen) != chi)
    fail(errc::fixture_validation_failed, std::string(name) + ": Euler characteristic mismatch");
  const SimplicialComplex delta = clique_complex(c);
  if (reduced_homology_dims(delta, h1_field, 1, 1)[0] != h1)
    fail(errc::fixture_validation_failed, std::string(name) + ": H~_1 mismatch");
  if (is_orientable(c) != orientable_expected)
    fail(errc::fixture_validation_failed, std::string(name) + ": orientability mismatch");
}

}  // namespace

Clutter rp2_six() {
  Clutter c = Clutter::from_vertex_lists(
      6, 3,
      {{1, 2, 5}, {1, 2, 6}, {1, 3, 4}, {1, 3, 6}, {1, 4, 5},
       {2, 3, 4}, {2, 3, 5}, {2, 4, 6}, {3, 5, 6}, {4, 5, 6}});
  validate_surface(c, "rp2_six", 1, FieldSpec::gf(2), 1, false);
  return c;
}

Clutter torus_seven() {
  // vertex i+1 over Z_7; triangles {i, i+1, i+3} and {i, i+2, i+3}
  std::vector<std::vector<int>> lists;
  for (int i = 0; i < 7; ++i) {
    lists.push_back({i % 7 + 1, (i + 1) % 7 + 1, (i + 3) % 7 + 1});
    lists.push_back({i % 7 + 1, (i + 2) % 7 + 1, (i + 3) % 7 + 1});
  }
  Clutter c = Clutter::from_vertex_lists(7, 3, lists);
  const FVector f = f_vector(generated_complex(c));
  if (f.counts != std::vector<unsigned long long>{1, 7, 21, 14})
    fail(errc::fixture_validation_failed, "torus_seven: f-vector mismatch");
  validate_surface(c, "torus_seven", 0, FieldSpec::rationals(), 2, true);
  return c;
}

Clutter glue(const Clutter& c1, const Clutter& c2, const GlueSpec& spec) {
  if (c1.d() != c2.d()) fail(errc::invalid_glue, "parts must have the same uniformity");
  std::vector<int> map2(static_cast<std::size_t>(c2.n()) + 1, 0);
  VertexMask identified1 = 0, identified2 = 0;
  for (const auto& [v1, v2] : spec.identified) {
    if (v1 < 1 || v1 > c1.n() || v2 < 1 || v2 > c2.n())
      fail(errc::invalid_glue, "identified vertex out of range");
    if (map2[static_cast<std::size_t>(v2)] != 0 || (identified1 & vertex_bit(v1)))
      fail(errc::invalid_glue, "identification map must be injective");
    map2[static_cast<std::size_t>(v2)] = v1;
    identified1 |= vertex_bit(v1);
    identified2 |= vertex_bit(v2);
  }
  if (spec.mode == GlueMode::clique_intersection) {
    if (!is_clique(c1, identified1) || !is_clique(c2, identified2))
      fail(errc::invalid_glue, "identified set must be a clique in both parts");
  }
  int next = c1.n();
  for (int v = 1; v <= c2.n(); ++v)
    if (map2[static_cast<std::size_t>(v)] == 0) map2[static_cast<std::size_t>(v)] = ++next;
  std::vector<VertexMask> cs = c1.circuits();
  for (VertexMask f : c2.circuits()) {
    VertexMask g = 0;
    for (int v : mask_to_vertices(f)) g |= vertex_bit(map2[static_cast<std::size_t>(v)]);
    cs.push_back(g);
  }
  std::sort(cs.begin(), cs.end());
  cs.erase(std::unique(cs.begin(), cs.end()), cs.end());
  Clutter out(next, c1.d(), std::move(cs));
  if (spec.mode == GlueMode::sc_disjoint) {
    // the images' submaximal circuits must stay disjoint
    std::vector<VertexMask> img2;
    for (VertexMask f : c2.circuits()) {
      VertexMask g = 0;
      for (int v : mask_to_vertices(f)) g |= vertex_bit(map2[static_cast<std::size_t>(v)]);
      img2.push_back(g);
    }
    const auto sc1 = submaximal_circuits(Clutter(next, c1.d(), c1.circuits()));
    const auto sc2 = submaximal_circuits(Clutter(next, c1.d(), img2));
    for (const auto& [e, deg] : sc2.entries())
      if (sc1.degree(e) != 0)
        fail(errc::invalid_glue, "submaximal circuits of the parts are not disjoint");
  }
  return out;
}

GeneratedClutter generalized_chordal(std::uint64_t seed, const GeneralizedChordalParams& params) {
  const int d = params.d;
  if (d < 1 || params.max_n < d || params.max_n > kMaxVertices)
    fail(errc::invalid_input, "generalized chordal parameters out of range");
  Rng rng(seed);
  int base = params.base_n;
  if (base == 0) base = d + static_cast<int>(rng.below(static_cast<std::uint64_t>(
                          std::min(2, params.max_n - d) + 1)));
  if (base < d || base > params.max_n)
    fail(errc::invalid_input, "base clutter size out of range");
  Clutter g = maximal_clutter(base, d);
  std::vector<std::string> trace{"a: start C_{" + std::to_string(base) + "," + std::to_string(d) + "}"};

  for (int step = 0; step < params.steps; ++step) {
    const bool try_glue = rng.below(2) == 0;
    if (try_glue) {
      // rule (b): glue a fresh C_{m,d} over a clique of size i, 0 <= i < m.
      const int m = d + static_cast<int>(rng.below(3));
      const int budget = params.max_n - g.n();
      std::vector<int> sizes;
      for (int i = 0; i <= std::min(m - 1, d); ++i)
        if (m - i <= budget && i <= g.n() && (i < d || !g.empty())) sizes.push_back(i);
      if (sizes.empty()) continue;
      int i = sizes[rng.below(sizes.size())];
      VertexMask ident = 0;
      if (i == d) {
        // a clique of d vertices: any circuit
        const auto& cs = g.circuits();
        ident = cs[rng.below(cs.size())];
      } else {
        // any set of fewer than d vertices is a clique
        while (popcount(ident) < i)
          ident |= vertex_bit(1 + static_cast<int>(rng.below(static_cast<std::uint64_t>(g.n()))));
      }
      GlueSpec spec;
      spec.mode = GlueMode::clique_intersection;
      auto vs = mask_to_vertices(ident);
      std::vector<int> pick(vs.size());
      for (std::size_t t = 0; t < vs.size(); ++t) pick[t] = static_cast<int>(t) + 1;
      for (std::size_t t = 0; t < vs.size(); ++t) spec.identified.push_back({vs[t], pick[t]});
      g = glue(g, maximal_clutter(m, d), spec);
      trace.push_back("b: glue C_{" + std::to_string(m) + "," + std::to_string(d) + "} over clique " +
                      mask_to_string(ident));
    } else {
      // rule (c): add a circuit V with an unused (d-1)-subset.
      const auto table = submaximal_circuits(g);
      for (int attempt = 0; attempt < 30; ++attempt) {
        const bool fresh = g.n() < params.max_n && rng.below(2) == 0;
        VertexMask v = 0;
        int nn = g.n();
        if (fresh) {
          nn = g.n() + 1;
          v = vertex_bit(nn);
        }
        while (popcount(v) < d)
          v |= vertex_bit(1 + static_cast<int>(rng.below(static_cast<std::uint64_t>(g.n()))));
        if (popcount(v) != d) continue;
        bool unused = false;
        VertexMask rest = v;
        while (rest) {
          VertexMask bit = rest & (0ull - rest);
          if (table.degree(v ^ bit) == 0) unused = true;
          rest ^= bit;
        }
        if (!unused || (nn == g.n() && g.contains(v))) continue;
        std::vector<VertexMask> cs = g.circuits();
        cs.push_back(v);
        g = Clutter(nn, d, std::move(cs));
        trace.push_back("c: add circuit " + mask_to_string(v));
        break;
      }
    }
  }
  return GeneratedClutter{std::move(g), std::move(trace)};
}

}  // namespace linres
