#pragma once

#include <optional>

#include "linres/betti.hpp"

namespace linres {

bool is_clique(const Clutter& c, VertexMask v);

enum class DecompositionKind { clique_intersection, sc_disjoint };

struct Decomposition {
  Clutter part1, part2;      // proper subclutters with part1 ∪ part2 = C, on the ambient vertices
  DecompositionKind kind;
  VertexMask separator = 0;  // the clique separator for clique_intersection
  bool complete_search = true;  // false when the separator cap truncated the clique search
};

// Search order: components of the codimension-one adjacency graph first
// (complete for the SC-disjoint kind), then clique separators up to the cap
// (default d+2). Returns nullopt when neither search splits C.
std::optional<Decomposition> decompose(const Clutter& c, int separator_cap = 0);

// Strongly connected with every submaximal circuit of degree exactly 2.
bool is_pseudo_manifold(const Clutter& c);

// Decided on the complex generated by the circuits: the fundamental class
// survives over Q exactly for orientable pseudo-manifolds. Requires a
// pseudo-manifold input.
bool is_orientable(const Clutter& c);
// Independent route kept for cross-checks: propagate ±1 signs across the
// codimension-one adjacency graph and look for a consistent assignment.
bool orientable_by_sign_propagation(const Clutter& c);

// Obstruction to d-linearity: the ideal is not d-linear but every proper
// subclutter's ideal is. Minimal to d-linearity adds dim(clique complex) = d-1.
// When the dimension condition holds, the verdict reduces to a kernel
// computation; otherwise the subclutter scan is exhaustive and capped.
bool is_obstruction(const Clutter& c, const FieldSpec& k, int exhaustive_cap = 16);
bool is_minimal_to_linearity(const Clutter& c, const FieldSpec& k);

// Every proper subclutter is a forest (forest reading of the tree condition),
// and the ideal itself is not d-linear.
bool is_almost_tree(const Clutter& c, const FieldSpec& k);

// Perfect elimination ordering; d = 2 only.
bool is_chordal_graph(const Clutter& c);

enum class TriState { yes, no, not_applicable };

struct ClassificationReport {
  int n = 0, d = 0;
  FieldSpec field;
  int clique_complex_dim = -1;
  bool clique_complex_dim_ok = false;  // dim == d-1
  bool connected = false;
  bool strongly_connected = false;
  bool forest = false;
  bool tree = false;
  bool pseudo_manifold = false;
  TriState orientable = TriState::not_applicable;
  bool linear_resolution = false;
  bool decomposable = false;
  std::optional<Decomposition> decomposition;
  bool decompose_search_complete = true;
  bool almost_tree = false;                    // forest reading
  std::optional<bool> obstruction;             // nullopt: capacity exceeded
  std::optional<bool> minimal_to_linearity;
  std::optional<bool> chordal;                 // d == 2 only
};

ClassificationReport classify(const Clutter& c, const FieldSpec& k, int separator_cap = 0,
                              int exhaustive_cap = 16);
std::string render_report_text(const ClassificationReport& r);
std::string report_json(const ClassificationReport& r);

}  // namespace linres
