#ifndef TORELLI_LATTICE_HPP_
#define TORELLI_LATTICE_HPP_

// Exact lattice algebra over Z and truncations of the complex FS(Z^n) of
// rank-1 summands.

#include <cstddef>
#include <string>
#include <utility>
#include <vector>

#include "torelli/int_matrix.hpp"

namespace torelli {

  // U * A * V = D with U, V unimodular and D diagonal, d_i | d_{i+1},
  // d_i >= 0. `V_inverse` is tracked alongside V.
  struct SnfResult {
    IntMatrix U;
    IntMatrix D;
    IntMatrix V;
    IntMatrix V_inverse;

    [[nodiscard]] std::size_t rank() const;
    // Nonzero diagonal entries of D.
    [[nodiscard]] IntVector invariant_factors() const;
  };

  SnfResult   snf(IntMatrix const& a);
  std::size_t rank(IntMatrix const& a);

  // Stacks vectors as rows of a k x n matrix.
  IntMatrix stack_rows(std::vector<IntVector> const& vectors);

  bool is_primitive(IntVector const& v);

  // True iff the vectors are linearly independent and span a direct summand
  // of Z^n (all invariant factors 1). The empty family spans {0}, a summand.
  bool spans_summand(std::vector<IntVector> const& vectors);

  // n x n unimodular matrix whose first rows are exactly `vectors`. With no
  // vectors, `n` fixes the ambient dimension and the result is the identity.
  IntMatrix complete_basis(std::vector<IntVector> const& vectors,
                           std::size_t                   n = 0);

  // Primitive vector up to sign; canonical form has first nonzero entry > 0.
  struct FsVertex {
    IntVector v;
    friend bool operator==(FsVertex const&, FsVertex const&) = default;
  };

  FsVertex canonical_vertex(IntVector v);

  // Canonical primitive vectors with max-norm <= bound, in lexicographic
  // order of their entries in [-bound, bound].
  std::vector<FsVertex> fs_vertices(std::size_t n, long bound);
  bool                  fs_is_simplex(std::vector<FsVertex> const& vertices);

  struct FsGraph {
    std::vector<FsVertex>                            vertices;
    std::vector<std::pair<std::size_t, std::size_t>> edges;  // i < j
  };

  FsGraph     fs_graph(std::size_t n, long bound);
  bool        fs_connected(std::size_t n, long bound);
  std::size_t fs_triangle_count(std::size_t n, long bound);
  // rank ker d1 - rank im d2 on the truncated 2-skeleton (a truncation
  // statistic, not a statement about the full complex).
  std::size_t fs_h1_rank(std::size_t n, long bound);

  std::string fs_dot(FsGraph const& g);

}  // namespace torelli

#endif  // TORELLI_LATTICE_HPP_
