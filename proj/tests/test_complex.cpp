#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "linres/binomial.hpp"
#include "linres/complex.hpp"
#include "linres/generators.hpp"

using namespace linres;

namespace {

Clutter make(int n, int d, const std::vector<std::vector<int>>& lists) {
  return Clutter::from_vertex_lists(n, d, lists);
}

const FieldSpec kQ = FieldSpec::rationals();
const FieldSpec kF2 = FieldSpec::gf(2);
const FieldSpec kF3 = FieldSpec::gf(3);

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

bool same_levels(const SimplicialComplex& a, const SimplicialComplex& b) {
  if (a.dim() != b.dim()) return false;
  for (int s = 0; s <= a.dim() + 1; ++s)
    if (a.faces_of_size(s) != b.faces_of_size(s)) return false;
  return true;
}

}  // namespace

TEST_CASE("clique complex of the maximal clutter is the full simplex") {
  const SimplicialComplex full = clique_complex(maximal_clutter(5, 2));
  CHECK(full.dim() == 4);
  const FVector f = f_vector(full);
  CHECK(f.counts == std::vector<unsigned long long>{1, 5, 10, 10, 5, 1});
  CHECK(f.euler_characteristic() == 1);
  CHECK(euler_characteristic(clique_complex(maximal_clutter(6, 3))) == 1);
}

TEST_CASE("clique complex of the 4-cycle has no triangles") {
  const SimplicialComplex d = clique_complex(make(4, 2, {{1, 2}, {2, 3}, {3, 4}, {1, 4}}));
  CHECK(d.dim() == 1);
  CHECK(f_vector(d).counts == std::vector<unsigned long long>{1, 4, 4});
}

TEST_CASE("clique complex of the octahedron fixture") {
  const SimplicialComplex d = clique_complex(cross_polytope_boundary(3));
  CHECK(d.dim() == 2);
  CHECK(f_vector(d).counts == std::vector<unsigned long long>{1, 6, 15, 8});
  CHECK(euler_characteristic(d) == -1);
}

TEST_CASE("hollow triangle Euler characteristic") {
  CHECK(euler_characteristic(generated_complex(cycle(3))) == 0);
}

TEST_CASE("facet set of the (d-1)-skeleton recovers the clutter") {
  Rng rng(41);
  for (int iter = 0; iter < 20; ++iter) {
    const Clutter c = random_clutter(rng, 6, 3, static_cast<int>(rng.below(15) + 1));
    const SimplicialComplex d = clique_complex(c);
    CHECK(d.faces_of_size(3) == c.circuits());
  }
}

TEST_CASE("induced subcomplexes") {
  const SimplicialComplex full = clique_complex(maximal_clutter(5, 2));
  const SimplicialComplex sub = induced_subcomplex(full, vertices_to_mask({2, 4, 5}, 5));
  CHECK(f_vector(sub).counts == std::vector<unsigned long long>{1, 3, 3, 1});

  const SimplicialComplex cyc = clique_complex(make(4, 2, {{1, 2}, {2, 3}, {3, 4}, {1, 4}}));
  const SimplicialComplex path = induced_subcomplex(cyc, vertices_to_mask({1, 2, 3}, 4));
  CHECK(f_vector(path).counts == std::vector<unsigned long long>{1, 3, 2});
}

TEST_CASE("induced clique complex equals clique complex of the induced clutter") {
  const VertexMask w = vertices_to_mask({3, 4, 5, 6, 7}, 7);
  const SimplicialComplex lhs = compacted(induced_subcomplex(clique_complex(glued_bipyramids()), w), w);
  const SimplicialComplex rhs = clique_complex(induced(glued_bipyramids(), w).clutter);
  CHECK(same_levels(lhs, rhs));

  Rng rng(42);
  for (int iter = 0; iter < 15; ++iter) {
    const Clutter c = random_clutter(rng, 6, 2 + static_cast<int>(rng.below(2)),
                                     static_cast<int>(rng.below(12)));
    const VertexMask ww = rng.next() & c.full_mask();
    const SimplicialComplex a = compacted(induced_subcomplex(clique_complex(c), ww), ww);
    const SimplicialComplex b = clique_complex(induced(c, ww).clutter);
    CHECK(same_levels(a, b));
  }
}

TEST_CASE("boundary matrix signs") {
  // m isolated vertices: 1 x m all-ones
  const SimplicialComplex pts = clique_complex(make(3, 2, {}));
  const ExactMatrix d0 = boundary_matrix(pts, 0, kQ);
  CHECK(d0.rows == 1);
  CHECK(d0.cols == 3);
  for (int j = 0; j < 3; ++j) CHECK(d0.at(0, j) == 1);

  // hollow triangle: edges 12, 13, 23
  const SimplicialComplex tri = generated_complex(cycle(3));
  const ExactMatrix d1 = boundary_matrix(tri, 1, kQ);
  CHECK(d1.rows == 3);
  CHECK(d1.cols == 3);
  // columns ordered 12 < 13 < 23 by mask; rows 1 < 2 < 3
  CHECK(d1.at(0, 0) == -1);
  CHECK(d1.at(1, 0) == 1);
  CHECK(d1.at(2, 0) == 0);
  CHECK(d1.at(0, 1) == -1);
  CHECK(d1.at(1, 1) == 0);
  CHECK(d1.at(2, 1) == 1);
  CHECK(d1.at(0, 2) == 0);
  CHECK(d1.at(1, 2) == -1);
  CHECK(d1.at(2, 2) == 1);
}

TEST_CASE("boundary of boundary is zero") {
  auto dd_zero = [](const SimplicialComplex& d, const FieldSpec& k) {
    for (int t = 0; t <= d.dim(); ++t) {
      const ExactMatrix a = boundary_matrix(d, t, k);
      const ExactMatrix b = boundary_matrix(d, t + 1, k);
      for (int i = 0; i < a.rows; ++i)
        for (int j = 0; j < b.cols; ++j) {
          long long s = 0;
          for (int l = 0; l < a.cols; ++l) s += a.at(i, l) * b.at(l, j);
          if (k.is_rationals()) {
            if (s != 0) return false;
          } else if (s % k.characteristic() != 0) {
            return false;
          }
        }
    }
    return true;
  };
  CHECK(dd_zero(clique_complex(maximal_clutter(4, 2)), kQ));
  CHECK(dd_zero(clique_complex(cross_polytope_boundary(3)), kQ));
  CHECK(dd_zero(clique_complex(rp2_six()), kF2));
  CHECK(dd_zero(clique_complex(glued_bipyramids()), kF3));
}

TEST_CASE("reduced homology fixtures") {
  // two isolated vertices: one extra component
  const SimplicialComplex two = clique_complex(make(2, 2, {}));
  CHECK(reduced_homology_dims(two, kQ, 0, 0)[0] == 1);

  const SimplicialComplex tri = generated_complex(cycle(3));
  CHECK(reduced_homology_dims(tri, kQ, 1, 1)[0] == 1);

  const SimplicialComplex rp2 = clique_complex(rp2_six());
  CHECK(reduced_homology_dims(rp2, kQ, 1, 1)[0] == 0);
  CHECK(reduced_homology_dims(rp2, kF2, 1, 1)[0] == 1);

  // empty complex: only the empty face
  const SimplicialComplex empty = clique_complex(make(3, 1, {}));
  CHECK(reduced_homology_dims(empty, kQ, -1, -1)[0] == 1);
}

TEST_CASE("Euler characteristic equals the alternating homology sum") {
  const std::vector<SimplicialComplex> fixtures = {
      clique_complex(cross_polytope_boundary(3)), clique_complex(rp2_six()),
      clique_complex(torus_seven()), clique_complex(glued_bipyramids()),
      generated_complex(cycle(6))};
  for (const auto& d : fixtures)
    for (const auto& k : {kQ, kF2, kF3}) {
      const auto dims = reduced_homology_dims(d, k, 0, d.dim());
      long long alt = 0;
      for (int t = 0; t <= d.dim(); ++t)
        alt += (t % 2 == 0 ? 1 : -1) * dims[static_cast<std::size_t>(t)];
      CHECK(euler_characteristic(d) - 1 == alt);
    }
}

TEST_CASE("homology below d-2 vanishes for every induced subcomplex") {
  Rng rng(43);
  for (int iter = 0; iter < 6; ++iter) {
    const Clutter c = random_clutter(rng, 6, 3, static_cast<int>(rng.below(15) + 1));
    const SimplicialComplex delta = clique_complex(c);
    for (VertexMask w = 1; w <= c.full_mask(); ++w) {
      const SimplicialComplex sub = induced_subcomplex(delta, w);
      for (int t = 0; t < c.d() - 2; ++t)
        CHECK(reduced_homology_dims(sub, kQ, t, t)[0] == 0);
    }
  }
}

TEST_CASE("f-vector of clique complexes is binomial below the top") {
  Rng rng(44);
  for (int iter = 0; iter < 10; ++iter) {
    const Clutter c = random_clutter(rng, 7, 3, static_cast<int>(rng.below(20) + 1));
    const FVector f = f_vector(clique_complex(c));
    for (int s = 0; s <= 2; ++s) CHECK(f.counts[static_cast<std::size_t>(s)] == binomial(7, s));
  }
}
