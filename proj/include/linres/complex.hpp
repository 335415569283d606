#pragma once

#include "linres/clutter.hpp"
#include "linres/matrix.hpp"

namespace linres {

// Face counts by dimension; counts[s] is the number of faces with s vertices,
// so counts[0] = 1 stands for f_{-1}.
struct FVector {
  std::vector<unsigned long long> counts;
  // chi = sum_{i>=0} (-1)^i f_i
  long long euler_characteristic() const;
};

// Faces grouped by size, each level a sorted vector of vertex masks. Always
// contains the empty face; closed under taking subsets by construction.
class SimplicialComplex {
 public:
  SimplicialComplex() : by_size_(1, std::vector<VertexMask>{0}) {}
  // Downward closure of the given facets.
  static SimplicialComplex from_facets(int n, const std::vector<VertexMask>& facets);
  // Internal: levels must already be closed and sorted.
  static SimplicialComplex from_levels(int n, std::vector<std::vector<VertexMask>> by_size);

  int n() const { return n_; }
  int dim() const { return static_cast<int>(by_size_.size()) - 2; }
  const std::vector<VertexMask>& faces_of_size(int s) const;
  bool contains(VertexMask f) const;
  std::size_t face_count() const;

 private:
  int n_ = 0;
  std::vector<std::vector<VertexMask>> by_size_;
};

// The complex whose faces are the cliques of C: every subset of fewer than d
// vertices, plus every vertex set all of whose d-subsets are circuits.
SimplicialComplex clique_complex(const Clutter& c);
// The complex generated by the circuits themselves (faces = circuits and
// their subsets); differs from the clique complex only when cliques of more
// than d vertices exist.
SimplicialComplex generated_complex(const Clutter& c);

SimplicialComplex induced_subcomplex(const SimplicialComplex& dcomplex, VertexMask w);
SimplicialComplex compacted(const SimplicialComplex& dcomplex, VertexMask w);

FVector f_vector(const SimplicialComplex& dcomplex);
long long euler_characteristic(const SimplicialComplex& dcomplex);

// Oriented boundary map from i-faces to (i-1)-faces; ascending vertex labels
// give the orientation, the entry for (F minus its j-th smallest vertex) is
// (-1)^j. Out-of-range dimensions give empty matrices.
ExactMatrix boundary_matrix(const SimplicialComplex& dcomplex, int i, const FieldSpec& k);

// dim of the reduced homology in each dimension lo..hi (inclusive).
std::vector<long long> reduced_homology_dims(const SimplicialComplex& dcomplex, const FieldSpec& k,
                                             int lo, int hi);

}  // namespace linres
