#include "linres/complex.hpp"

#include <algorithm>
#include <unordered_map>
#include <unordered_set>

namespace linres {

namespace {
constexpr std::size_t kFaceBudget = 1ull << 26;
}

long long FVector::euler_characteristic() const {
  long long chi = 0;
  for (std::size_t s = 1; s < counts.size(); ++s) {
    long long f = static_cast<long long>(counts[s]);
    chi += ((s - 1) % 2 == 0) ? f : -f;
  }
  return chi;
}

SimplicialComplex SimplicialComplex::from_facets(int n, const std::vector<VertexMask>& facets) {
  if (n < 0 || n > kMaxVertices) fail(errc::invalid_input, "complex vertex count out of range");
  std::unordered_set<VertexMask> seen;
  std::vector<VertexMask> stack(facets.begin(), facets.end());
  seen.insert(0);
  for (VertexMask f : facets)
    if (n < 64 && (f & ~((n == 64 ? ~0ull : (1ull << n) - 1))) != 0)
      fail(errc::invalid_input, "facet outside vertex range");
  while (!stack.empty()) {
    VertexMask f = stack.back();
    stack.pop_back();
    if (!seen.insert(f).second) continue;
    if (seen.size() > kFaceBudget) fail(errc::capacity_exceeded, "complex face budget exceeded");
    VertexMask rest = f;
    while (rest) {
      VertexMask bit = rest & (0ull - rest);
      VertexMask sub = f ^ bit;
      if (!seen.count(sub)) stack.push_back(sub);
      rest ^= bit;
    }
  }
  int maxs = 0;
  for (VertexMask f : seen) maxs = std::max(maxs, popcount(f));
  std::vector<std::vector<VertexMask>> levels(static_cast<std::size_t>(maxs) + 1);
  for (VertexMask f : seen) levels[static_cast<std::size_t>(popcount(f))].push_back(f);
  for (auto& lv : levels) std::sort(lv.begin(), lv.end());
  return from_levels(n, std::move(levels));
}

SimplicialComplex SimplicialComplex::from_levels(int n, std::vector<std::vector<VertexMask>> by_size) {
  SimplicialComplex out;
  out.n_ = n;
  if (by_size.empty() || by_size[0] != std::vector<VertexMask>{0})
    fail(errc::invalid_input, "complex must contain the empty face");
  while (by_size.size() > 1 && by_size.back().empty()) by_size.pop_back();
  out.by_size_ = std::move(by_size);
  return out;
}

const std::vector<VertexMask>& SimplicialComplex::faces_of_size(int s) const {
  static const std::vector<VertexMask> kEmpty;
  if (s < 0 || s >= static_cast<int>(by_size_.size())) return kEmpty;
  return by_size_[static_cast<std::size_t>(s)];
}

bool SimplicialComplex::contains(VertexMask f) const {
  const auto& lv = faces_of_size(popcount(f));
  return std::binary_search(lv.begin(), lv.end(), f);
}

std::size_t SimplicialComplex::face_count() const {
  std::size_t total = 0;
  for (const auto& lv : by_size_) total += lv.size();
  return total;
}

SimplicialComplex clique_complex(const Clutter& c) {
  const int n = c.n();
  const int d = c.d();
  std::vector<std::vector<VertexMask>> levels(1, std::vector<VertexMask>{0});

  // All subsets with fewer than d vertices are cliques by convention.
  std::size_t budget = 1;
  for (int s = 1; s <= std::min(d - 1, n); ++s) {
    std::vector<VertexMask> lv;
    for_each_subset_of_mask(c.full_mask(), s, [&](VertexMask m) { lv.push_back(m); });
    budget += lv.size();
    if (budget > kFaceBudget) fail(errc::capacity_exceeded, "clique complex face budget exceeded");
    levels.push_back(std::move(lv));
  }
  if (c.empty() || d > n) return SimplicialComplex::from_levels(n, std::move(levels));

  // ext[e] = vertices extending the (d-1)-set e to a circuit.
  std::unordered_map<VertexMask, VertexMask> ext;
  for (VertexMask f : c.circuits()) {
    VertexMask rest = f;
    while (rest) {
      VertexMask bit = rest & (0ull - rest);
      ext[f ^ bit] |= bit;
      rest ^= bit;
    }
  }
  auto ext_of = [&](VertexMask e) -> VertexMask {
    auto it = ext.find(e);
    return it == ext.end() ? 0 : it->second;
  };

  // Grow cliques vertex by vertex in ascending order: T ∪ {v} is a clique
  // iff v extends every (d-1)-subset of T. The candidate mask carries that
  // intersection along the search path.
  struct Item {
    VertexMask t;
    VertexMask cand;
  };
  std::vector<Item> stack;
  for_each_subset_of_mask(c.full_mask(), d - 1, [&](VertexMask e) {
    VertexMask cand = ext_of(e);
    if (e != 0) {
      int maxv = 63 - __builtin_clzll(e);
      cand &= ~((1ull << (maxv + 1)) - 1);
    }
    if (cand) stack.push_back({e, cand});
  });
  while (!stack.empty()) {
    Item it = stack.back();
    stack.pop_back();
    VertexMask vs = it.cand;
    while (vs) {
      VertexMask vbit = vs & (0ull - vs);
      vs ^= vbit;
      VertexMask t2 = it.t | vbit;
      int s2 = popcount(t2);
      if (static_cast<int>(levels.size()) <= s2) levels.emplace_back();
      levels[static_cast<std::size_t>(s2)].push_back(t2);
      if (++budget > kFaceBudget) fail(errc::capacity_exceeded, "clique complex face budget exceeded");
      // Candidates above v that extend every (d-1)-subset through v.
      VertexMask cand2 = it.cand & ~((vbit << 1) - 1);
      if (cand2) {
        for_each_subset_of_mask(it.t, d - 2, [&](VertexMask e2) { cand2 &= ext_of(e2 | vbit); });
        stack.push_back({t2, cand2});
      }
    }
  }
  for (auto& lv : levels) std::sort(lv.begin(), lv.end());
  return SimplicialComplex::from_levels(n, std::move(levels));
}

SimplicialComplex generated_complex(const Clutter& c) {
  return SimplicialComplex::from_facets(c.n(), c.circuits());
}

SimplicialComplex induced_subcomplex(const SimplicialComplex& dcomplex, VertexMask w) {
  std::vector<std::vector<VertexMask>> levels;
  for (int s = 0; s <= dcomplex.dim() + 1; ++s) {
    std::vector<VertexMask> lv;
    for (VertexMask f : dcomplex.faces_of_size(s))
      if ((f & ~w) == 0) lv.push_back(f);
    levels.push_back(std::move(lv));
  }
  return SimplicialComplex::from_levels(dcomplex.n(), std::move(levels));
}

SimplicialComplex compacted(const SimplicialComplex& dcomplex, VertexMask w) {
  std::vector<int> label = mask_to_vertices(w);
  std::vector<int> newpos(64, 0);
  for (std::size_t i = 0; i < label.size(); ++i) newpos[label[i]] = static_cast<int>(i) + 1;
  std::vector<std::vector<VertexMask>> levels;
  for (int s = 0; s <= dcomplex.dim() + 1; ++s) {
    std::vector<VertexMask> lv;
    for (VertexMask f : dcomplex.faces_of_size(s)) {
      if ((f & ~w) != 0) continue;
      VertexMask g = 0;
      for (int v : mask_to_vertices(f)) g |= vertex_bit(newpos[v]);
      lv.push_back(g);
    }
    std::sort(lv.begin(), lv.end());
    levels.push_back(std::move(lv));
  }
  return SimplicialComplex::from_levels(static_cast<int>(label.size()), std::move(levels));
}

FVector f_vector(const SimplicialComplex& dcomplex) {
  FVector out;
  for (int s = 0; s <= dcomplex.dim() + 1; ++s)
    out.counts.push_back(dcomplex.faces_of_size(s).size());
  return out;
}

long long euler_characteristic(const SimplicialComplex& dcomplex) {
  return f_vector(dcomplex).euler_characteristic();
}

ExactMatrix boundary_matrix(const SimplicialComplex& dcomplex, int i, const FieldSpec& k) {
  const auto& cols = dcomplex.faces_of_size(i + 1);
  const auto& rows = dcomplex.faces_of_size(i);
  ExactMatrix m(static_cast<int>(rows.size()), static_cast<int>(cols.size()));
  const long long minus_one = k.is_rationals() ? -1 : static_cast<long long>(k.characteristic()) - 1;
  for (int cidx = 0; cidx < m.cols; ++cidx) {
    VertexMask f = cols[static_cast<std::size_t>(cidx)];
    VertexMask rest = f;
    int j = 0;
    while (rest) {
      VertexMask bit = rest & (0ull - rest);
      VertexMask sub = f ^ bit;
      auto it = std::lower_bound(rows.begin(), rows.end(), sub);
      int ridx = static_cast<int>(it - rows.begin());
      m.at(ridx, cidx) = (j % 2 == 0) ? 1 : minus_one;
      rest ^= bit;
      ++j;
    }
  }
  return m;
}

std::vector<long long> reduced_homology_dims(const SimplicialComplex& dcomplex, const FieldSpec& k,
                                             int lo, int hi) {
  if (lo > hi) fail(errc::invalid_input, "homology range lo > hi");
  std::vector<int> ranks(static_cast<std::size_t>(hi - lo) + 2, 0);
  for (int t = lo; t <= hi + 1; ++t) {
    if (t < 0 || t > dcomplex.dim()) continue;  // empty boundary maps
    ranks[static_cast<std::size_t>(t - lo)] = rank(boundary_matrix(dcomplex, t, k), k);
  }
  std::vector<long long> dims;
  for (int t = lo; t <= hi; ++t) {
    long long f = static_cast<long long>(dcomplex.faces_of_size(t + 1).size());
    dims.push_back(f - ranks[static_cast<std::size_t>(t - lo)] -
                   ranks[static_cast<std::size_t>(t - lo) + 1]);
  }
  return dims;
}

}  // namespace linres
