#pragma once

#include "qcorr/algebra.hpp"

namespace qcorr {

/// One full matrix block of the Artin-Wedderburn decomposition.
/// `map` sends coefficient vectors to the column-major flattening of the
/// block image: block(a) = unvec(map * a, size, size).
struct Block {
  Index size = 0;
  Matrix map;  // (size*size) x dim
};

struct BlockDecomposition {
  std::vector<Block> blocks;
  std::vector<Vector> central_projections;  // abstract algebra elements
  double residual = 0.0;  // worst *-isomorphism / reconstruction residual

  Index total_matrix_dim() const;  // sum of block sizes
  Matrix block_matrix(size_t b, const Vector& a) const;
  /// Block-diagonal faithful *-representation beta(a) in M_D, D = sum d_i.
  Matrix block_diag(const Vector& a) const;
  std::vector<Index> sizes() const;
};

/// Decomposes a C*-realizable algebra into full matrix blocks.
/// Throws NotCStar when no decomposition exists within tolerance.
BlockDecomposition block_decompose(const StarAlgebra& alg,
                                   double tol = default_tol(),
                                   std::uint64_t seed = default_seed());

}  // namespace qcorr
