#include "linres/betti.hpp"

#include <algorithm>
#include <mutex>
#include <unordered_map>

#ifdef _OPENMP
#include <omp.h>
#endif

#include "json.hpp"
#include "linres/binomial.hpp"

namespace linres {

unsigned long long BettiTable::beta(int i, int j) const {
  auto it = entries.find({i, j});
  return it == entries.end() ? 0 : it->second;
}

int BettiTable::regularity() const {
  if (entries.empty()) fail(errc::zero_ideal, "regularity undefined for the zero ideal");
  int r = 0;
  for (const auto& [ij, v] : entries) r = std::max(r, ij.second - ij.first);
  return r;
}

int BettiTable::projdim() const {
  if (entries.empty()) fail(errc::zero_ideal, "projective dimension undefined for the zero ideal");
  int p = 0;
  for (const auto& [ij, v] : entries) p = std::max(p, ij.first);
  return p;
}

int BettiTable::indeg() const {
  if (entries.empty()) fail(errc::zero_ideal, "initial degree undefined for the zero ideal");
  int m = -1;
  for (const auto& [ij, v] : entries)
    if (ij.first == 0 && (m < 0 || ij.second < m)) m = ij.second;
  return m;
}

unsigned long long BettiTable::mu() const {
  unsigned long long total = 0;
  for (const auto& [ij, v] : entries)
    if (ij.first == 0) total += v;
  return total;
}

unsigned long long BettiTable::multiplicity() const { return binomial(n, d) - mu(); }

namespace {

struct Accumulator {
  int n;
  std::vector<unsigned long long> beta;  // (n+1) x (n+1), index i*(n+1)+j
  explicit Accumulator(int n_) : n(n_), beta(static_cast<std::size_t>(n_ + 1) * (n_ + 1), 0) {}
  void add(int i, int j, unsigned long long v) {
    beta[static_cast<std::size_t>(i) * (n + 1) + j] += v;
  }
  void merge(const Accumulator& o) {
    for (std::size_t t = 0; t < beta.size(); ++t) beta[t] += o.beta[t];
  }
};

VertexMask compact_mask(VertexMask f, VertexMask w) {
  VertexMask g = 0;
  while (f) {
    VertexMask bit = f & (0ull - f);
    g |= 1ull << popcount(w & (bit - 1));
    f ^= bit;
  }
  return g;
}

// Rank over K of the oriented boundary map at face-size level `s` (from
// s-sets to (s-1)-sets) of the subcomplex induced on W, given the filtered
// face lists. Rows at the complete skeleton levels are enumerated on the fly.
int subcomplex_boundary_rank(VertexMask w, int d, int s,
                             const std::vector<std::vector<VertexMask>>& fw, const FieldSpec& k) {
  const std::vector<VertexMask>* cols;
  std::vector<VertexMask> cols_store, rows_store;
  if (s <= d - 1) {
    for_each_subset_of_mask(w, s, [&](VertexMask m) { cols_store.push_back(m); });
    cols = &cols_store;
  } else {
    cols = &fw[static_cast<std::size_t>(s - d)];
  }
  const std::vector<VertexMask>* rows;
  if (s - 1 <= d - 1) {
    for_each_subset_of_mask(w, s - 1, [&](VertexMask m) { rows_store.push_back(m); });
    rows = &rows_store;
  } else {
    rows = &fw[static_cast<std::size_t>(s - 1 - d)];
  }
  ExactMatrix m(static_cast<int>(rows->size()), static_cast<int>(cols->size()));
  const long long minus_one = k.is_rationals() ? -1 : static_cast<long long>(k.characteristic()) - 1;
  for (int cidx = 0; cidx < m.cols; ++cidx) {
    VertexMask f = (*cols)[static_cast<std::size_t>(cidx)];
    VertexMask rest = f;
    int j = 0;
    while (rest) {
      VertexMask bit = rest & (0ull - rest);
      auto it = std::lower_bound(rows->begin(), rows->end(), f ^ bit);
      m.at(static_cast<int>(it - rows->begin()), cidx) = (j % 2 == 0) ? 1 : minus_one;
      rest ^= bit;
      ++j;
    }
  }
  return rank(m, k);
}

// Reduced homology dims of the subcomplex induced on W for face dimensions
// d-2 .. (top). Faces below size d are complete, so their boundary ranks have
// the closed form C(m-1, t).
std::vector<long long> subcomplex_homology(VertexMask w, int m, int d,
                                           const std::vector<std::vector<VertexMask>>& fw,
                                           const FieldSpec& k) {
  int top_size = d - 1;  // largest face size present
  for (std::size_t li = 0; li < fw.size(); ++li)
    if (!fw[li].empty()) top_size = d + static_cast<int>(li);
  const int t0 = d - 2;         // lowest homology dimension that can be nonzero
  const int t1 = top_size - 1;  // dim of the subcomplex
  std::vector<int> ranks(static_cast<std::size_t>(t1 - t0) + 2, 0);
  // rank of the boundary map out of the complete level d-2 (face size d-1)
  ranks[0] = (d >= 2) ? static_cast<int>(binomial(m - 1, d - 2)) : 0;
  for (int t = d - 1; t <= t1; ++t)
    ranks[static_cast<std::size_t>(t - t0)] = subcomplex_boundary_rank(w, d, t + 1, fw, k);
  std::vector<long long> dims;
  for (int t = t0; t <= t1; ++t) {
    long long f = (t + 1 <= d - 1) ? static_cast<long long>(binomial(m, t + 1))
                                   : static_cast<long long>(fw[static_cast<std::size_t>(t + 1 - d)].size());
    dims.push_back(f - ranks[static_cast<std::size_t>(t - t0)] -
                   ranks[static_cast<std::size_t>(t - t0) + 1]);
  }
  return dims;
}

std::string cache_key(VertexMask w, int m, const std::vector<std::vector<VertexMask>>& fw) {
  std::string key;
  key.reserve(2 + fw.size() * 9);
  key.push_back(static_cast<char>(m));
  for (const auto& level : fw) {
    key.push_back('\xff');
    for (VertexMask f : level) {
      VertexMask g = compact_mask(f, w);
      for (int b = 0; b < 8; ++b) key.push_back(static_cast<char>((g >> (8 * b)) & 0xff));
    }
  }
  return key;
}

void check_not_zero_ideal(const Clutter& c) {
  if (binomial(c.n(), c.d()) == c.size())
    fail(errc::zero_ideal, "zero ideal (complement is empty)");
}

}  // namespace

BettiTable betti_hochster(const Clutter& c, const FieldSpec& k, const HochsterOptions& opt) {
  check_not_zero_ideal(c);
  const int n = c.n();
  const int d = c.d();
  if (n > opt.max_n)
    fail(errc::capacity_exceeded, "Hochster enumeration capped at n <= " + std::to_string(opt.max_n) +
                                      " (2^n subsets); got n = " + std::to_string(n));
  const SimplicialComplex delta = clique_complex(c);
  const int dim = delta.dim();

  // Face levels of size >= d (the only non-complete levels of a clique complex).
  std::vector<std::vector<VertexMask>> levels;
  for (int s = d; s <= dim + 1; ++s) levels.push_back(delta.faces_of_size(s));

  std::unordered_map<std::string, std::vector<long long>> cache;
  std::mutex cache_mu;
  Accumulator acc(n);
  const VertexMask full = c.full_mask();

#ifdef _OPENMP
  int nthreads = opt.parallel ? (opt.threads > 0 ? opt.threads : omp_get_max_threads()) : 1;
#else
  int nthreads = 1;
#endif

  const long long total = static_cast<long long>(full);
#pragma omp parallel num_threads(nthreads)
  {
    Accumulator local(n);
    std::vector<std::vector<VertexMask>> fw(levels.size());
#pragma omp for schedule(dynamic, 256)
    for (long long wi = 1; wi <= total; ++wi) {
      const VertexMask w = static_cast<VertexMask>(wi);
      const int m = popcount(w);
      if (m <= d - 1) continue;                              // full simplex on W
      if (m <= dim + 1 && delta.contains(w)) continue;       // W is a clique
      bool any = false;
      for (std::size_t li = 0; li < levels.size(); ++li) {
        fw[li].clear();
        for (VertexMask f : levels[li])
          if ((f & ~w) == 0) {
            fw[li].push_back(f);
            any = true;
          }
      }
      if (!any) {
        // Complete (d-2)-skeleton on m vertices: single homology class block.
        local.add(m - d, m, binomial(m - 1, d - 1));
        continue;
      }
      std::vector<long long> dims;
      const std::string key = cache_key(w, m, fw);
      {
        std::lock_guard<std::mutex> lock(cache_mu);
        auto it = cache.find(key);
        if (it != cache.end()) dims = it->second;
      }
      if (dims.empty()) {
        dims = subcomplex_homology(w, m, d, fw, k);
        std::lock_guard<std::mutex> lock(cache_mu);
        cache.emplace(key, dims);
      }
      const int t0 = d - 2;
      for (std::size_t ti = 0; ti < dims.size(); ++ti) {
        const long long h = dims[ti];
        if (h <= 0) continue;
        const int t = t0 + static_cast<int>(ti);
        const int i = m - t - 2;
        if (i >= 0) local.add(i, m, static_cast<unsigned long long>(h));
      }
    }
#pragma omp critical(linres_betti_merge)
    acc.merge(local);
  }

  BettiTable table;
  table.n = n;
  table.d = d;
  table.field = k;
  for (int i = 0; i <= n; ++i)
    for (int j = 0; j <= n; ++j) {
      unsigned long long v = acc.beta[static_cast<std::size_t>(i) * (n + 1) + j];
      if (v) table.entries[{i, j}] = v;
    }
  return table;
}

BettiTable betti_hochster_serial(const Clutter& c, const FieldSpec& k) {
  check_not_zero_ideal(c);
  const int n = c.n();
  const SimplicialComplex delta = clique_complex(c);
  BettiTable table;
  table.n = n;
  table.d = c.d();
  table.field = k;
  const VertexMask full = c.full_mask();
  for (VertexMask w = 1; w <= full; ++w) {
    const SimplicialComplex sub = induced_subcomplex(delta, w);
    const int m = popcount(w);
    const auto dims = reduced_homology_dims(sub, k, -1, sub.dim());
    for (int t = -1; t <= sub.dim(); ++t) {
      const long long h = dims[static_cast<std::size_t>(t + 1)];
      if (h <= 0) continue;
      const int i = m - t - 2;
      if (i < 0) continue;
      table.entries[{i, m}] += static_cast<unsigned long long>(h);
    }
  }
  return table;
}

bool has_linear_resolution(const Clutter& c, const FieldSpec& k) {
  if (binomial(c.n(), c.d()) == c.size()) return true;  // zero ideal convention
  const SimplicialComplex delta = clique_complex(c);
  if (delta.dim() == c.d() - 1)
    return reduced_homology_dims(delta, k, c.d() - 1, c.d() - 1)[0] == 0;
  const BettiTable t = betti_hochster(c, k);
  return t.regularity() == t.indeg();
}

bool is_cohen_macaulay(const Clutter& c, const FieldSpec& k) {
  const SimplicialComplex delta = clique_complex(c);
  if (delta.dim() != c.d() - 1)
    fail(errc::unsupported_shape, "Cohen-Macaulay test requires dim(clique complex) == d-1");
  return reduced_homology_dims(delta, k, c.d() - 2, c.d() - 2)[0] == 0;
}

ShapeBoundsReport verify_shape_bounds(const Clutter& c, const FieldSpec& k) {
  const SimplicialComplex delta = clique_complex(c);
  if (delta.dim() != c.d() - 1)
    fail(errc::unsupported_shape, "shape bounds require dim(clique complex) == d-1");
  const BettiTable t = betti_hochster(c, k);
  ShapeBoundsReport r;
  r.n = c.n();
  r.d = c.d();
  r.reg = t.regularity();
  r.projdim = t.projdim();
  r.reg_in_band = c.d() <= r.reg && r.reg <= c.d() + 1;
  r.projdim_in_band = c.n() - c.d() - 1 <= r.projdim && r.projdim <= c.n() - c.d();
  r.entries_in_band = true;
  r.top_strand_only_at_n = true;
  for (const auto& [ij, v] : t.entries) {
    const int band = ij.second - ij.first;
    if (band < c.d() || band > c.d() + 1) r.entries_in_band = false;
    if (band == c.d() + 1 && ij.second != c.n()) r.top_strand_only_at_n = false;
  }
  return r;
}

std::string render_betti_text(const BettiTable& t) {
  if (t.entries.empty()) return "empty table\n";
  const int pdim = t.projdim();
  int tmin = t.n + 1, tmax = 0;
  for (const auto& [ij, v] : t.entries) {
    tmin = std::min(tmin, ij.second - ij.first);
    tmax = std::max(tmax, ij.second - ij.first);
  }
  std::string out = "i:";
  for (int i = 0; i <= pdim; ++i) out += " " + std::to_string(i);
  out += "\n";
  for (int band = tmin; band <= tmax; ++band) {
    out += std::to_string(band) + ":";
    for (int i = 0; i <= pdim; ++i) {
      unsigned long long v = t.beta(i, i + band);
      out += v ? " " + std::to_string(v) : " .";
    }
    out += "\n";
  }
  out += "reg=" + std::to_string(t.regularity()) + " pdim=" + std::to_string(pdim) +
         " indeg=" + std::to_string(t.indeg());
  if (t.field) out += " field=" + t.field->name();
  out += "\n";
  return out;
}

std::string betti_json(const BettiTable& t) {
  nlohmann::ordered_json j;
  if (t.field)
    j["field"] = t.field->name();
  else
    j["field"] = nullptr;
  nlohmann::ordered_json entries = nlohmann::ordered_json::object();
  for (const auto& [ij, v] : t.entries)
    entries[std::to_string(ij.first) + "," + std::to_string(ij.second)] = v;
  j["betti"] = entries;
  j["reg"] = t.regularity();
  j["pdim"] = t.projdim();
  j["indeg"] = t.indeg();
  j["mu"] = t.mu();
  j["multiplicity"] = t.multiplicity();
  return j.dump();
}

}  // namespace linres
