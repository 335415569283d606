// Compares the OpenMP subset-enumeration kernel against the serial reference
// on the bundled fixtures and a seeded random clutter.
#include <chrono>
#include <cstdio>

#include "linres/betti.hpp"
#include "linres/generators.hpp"

using namespace linres;

namespace {

double ms_since(std::chrono::steady_clock::time_point t0) {
  return std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - t0).count();
}

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

void bench_one(const char* name, const Clutter& c, const FieldSpec& k) {
  auto t0 = std::chrono::steady_clock::now();
  const BettiTable serial = betti_hochster_serial(c, k);
  const double serial_ms = ms_since(t0);

  t0 = std::chrono::steady_clock::now();
  const BettiTable parallel = betti_hochster(c, k);
  const double parallel_ms = ms_since(t0);

  const bool equal = serial.same_entries(parallel);
  std::printf("%-28s field=%-2s n=%2d |C|=%3zu  serial %9.2f ms  parallel %9.2f ms  x%.2f  %s\n",
              name, k.name().c_str(), c.n(), c.size(), serial_ms, parallel_ms,
              serial_ms / parallel_ms, equal ? "tables equal" : "TABLES DIFFER");
}

}  // namespace

int main() {
  bench_one("octahedron", cross_polytope_boundary(3), FieldSpec::rationals());
  bench_one("octahedron", cross_polytope_boundary(3), FieldSpec::gf(2));
  bench_one("torus_seven", torus_seven(), FieldSpec::rationals());
  bench_one("torus_seven", torus_seven(), FieldSpec::gf(2));
  bench_one("glued_bipyramids", glued_bipyramids(), FieldSpec::rationals());

  Rng rng(2024);
  const Clutter r9 = random_clutter(rng, 9, 3, 30);
  bench_one("random n=9 d=3 |C|=30", r9, FieldSpec::rationals());
  bench_one("random n=9 d=3 |C|=30", r9, FieldSpec::gf(2));

  const Clutter r10 = random_clutter(rng, 10, 3, 45);
  bench_one("random n=10 d=3 |C|=45", r10, FieldSpec::gf(2));
  return 0;
}
