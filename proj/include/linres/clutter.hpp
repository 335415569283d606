#pragma once

#include <cstdint>
#include <iosfwd>
#include <string>
#include <vector>

#include "linres/errors.hpp"

namespace linres {

// Vertex sets are bitmasks: bit v-1 encodes vertex v. Subset containment and
// intersection are single word operations, which dominates the Hochster
// enumeration cost; inputs with more than 63 vertices are rejected.
using VertexMask = std::uint64_t;

constexpr int kMaxVertices = 63;

inline int popcount(VertexMask m) { return __builtin_popcountll(m); }
inline VertexMask vertex_bit(int v) { return 1ull << (v - 1); }

std::vector<int> mask_to_vertices(VertexMask m);
VertexMask vertices_to_mask(const std::vector<int>& vs, int n);
std::string mask_to_string(VertexMask m);  // "{1,2,3}"

// Visits every subset of `bits` with exactly k bits set, in increasing mask
// order: Gosper's hack over the compacted index space, spread back through
// the set bits (a monotone map, so the emitted masks stay sorted).
template <typename Fn>
void for_each_subset_of_mask(VertexMask bits, int k, Fn fn) {
  std::vector<int> pos;
  for (int b = 0; b < 64; ++b)
    if (bits >> b & 1) pos.push_back(b);
  const int n = static_cast<int>(pos.size());
  if (k < 0 || k > n) return;
  if (k == 0) {
    fn(static_cast<VertexMask>(0));
    return;
  }
  const VertexMask limit = n == 64 ? ~0ull : (1ull << n);
  VertexMask c = (k == 64) ? ~0ull : (1ull << k) - 1;
  while (c < limit) {
    VertexMask m = 0;
    VertexMask rest = c;
    while (rest) {
      const int b = __builtin_ctzll(rest);
      m |= 1ull << pos[b];
      rest &= rest - 1;
    }
    fn(m);
    const VertexMask u = c & (0ull - c);
    const VertexMask v = c + u;
    if (v == 0) break;
    c = v | (((v ^ c) / u) >> 2);
  }
}

// A d-uniform clutter on vertices 1..n. Circuits are kept sorted and
// duplicate-free; immutable after construction.
class Clutter {
 public:
  Clutter(int n, int d, std::vector<VertexMask> circuits);
  static Clutter from_vertex_lists(int n, int d, const std::vector<std::vector<int>>& lists);

  int n() const { return n_; }
  int d() const { return d_; }
  const std::vector<VertexMask>& circuits() const { return circuits_; }
  std::size_t size() const { return circuits_.size(); }
  bool empty() const { return circuits_.empty(); }
  bool contains(VertexMask f) const;
  VertexMask full_mask() const { return n_ == 64 ? ~0ull : (1ull << n_) - 1; }
  VertexMask vertex_support() const;
  std::vector<std::vector<int>> circuit_lists() const;

  bool operator==(const Clutter& o) const {
    return n_ == o.n_ && d_ == o.d_ && circuits_ == o.circuits_;
  }

 private:
  int n_ = 0;
  int d_ = 1;
  std::vector<VertexMask> circuits_;
};

// Degrees of the (d-1)-subsets contained in at least one circuit.
class SubmaximalCircuitTable {
 public:
  explicit SubmaximalCircuitTable(std::vector<std::pair<VertexMask, int>> entries)
      : entries_(std::move(entries)) {}
  const std::vector<std::pair<VertexMask, int>>& entries() const { return entries_; }
  std::size_t size() const { return entries_.size(); }
  int degree(VertexMask e) const;  // 0 when e is not a submaximal circuit

 private:
  std::vector<std::pair<VertexMask, int>> entries_;  // sorted by mask
};

Clutter maximal_clutter(int n, int d);
Clutter complement(const Clutter& c);
SubmaximalCircuitTable submaximal_circuits(const Clutter& c);

struct InducedClutter {
  Clutter clutter;                 // on vertices 1..|W|, labels compacted order-preservingly
  std::vector<int> original_label; // original_label[v-1] = source vertex of new vertex v
};
InducedClutter induced(const Clutter& c, VertexMask w);

// Connectivity of the circuit graph; adjacency is a shared vertex.
// Empty and single-circuit clutters are connected by convention.
bool connected(const Clutter& c);
// Connectivity in codimension one: adjacency is |F ∩ G| = d-1.
bool strongly_connected(const Clutter& c);

// Repeatedly delete a circuit containing a submaximal circuit of degree one;
// the residue is independent of deletion order.
Clutter peel_core(const Clutter& c);
Clutter remove_circuit(const Clutter& c, VertexMask f);
bool is_forest(const Clutter& c);
bool is_tree(const Clutter& c);

// Canonical text and JSON formats, as consumed by the CLI.
Clutter parse_clutter(std::istream& in);
Clutter parse_clutter_text(std::istream& in);
Clutter parse_clutter_json(std::istream& in);
std::string to_text(const Clutter& c);
std::string to_json_string(const Clutter& c);

}  // namespace linres
