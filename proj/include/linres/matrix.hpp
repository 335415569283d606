#pragma once

#include <vector>

#include "linres/field.hpp"

namespace linres {

// Dense matrix of exact field elements, stored as integer representatives.
// Every matrix in this artifact comes from an oriented boundary map, so the
// producers only emit entries in {-1, 0, 1}; rank() reduces representatives
// into the requested field (residues mod p, or exact integers over Q).
struct ExactMatrix {
  int rows = 0;
  int cols = 0;
  std::vector<long long> a;  // row-major, rows*cols entries

  ExactMatrix() = default;
  ExactMatrix(int r, int c) : rows(r), cols(c), a(static_cast<std::size_t>(r) * c, 0) {}

  long long& at(int i, int j) { return a[static_cast<std::size_t>(i) * cols + j]; }
  long long at(int i, int j) const { return a[static_cast<std::size_t>(i) * cols + j]; }

  ExactMatrix transposed() const {
    ExactMatrix t(cols, rows);
    for (int i = 0; i < rows; ++i)
      for (int j = 0; j < cols; ++j) t.at(j, i) = at(i, j);
    return t;
  }

  ExactMatrix without_column(int c) const {
    ExactMatrix t(rows, cols - 1);
    for (int i = 0; i < rows; ++i)
      for (int j = 0, k = 0; j < cols; ++j)
        if (j != c) t.at(i, k++) = at(i, j);
    return t;
  }
};

// Exact rank of M over K. Empty matrices have rank 0.
int rank(const ExactMatrix& m, const FieldSpec& k);

}  // namespace linres
