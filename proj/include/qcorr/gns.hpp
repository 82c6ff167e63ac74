#pragma once

#include "qcorr/algebra.hpp"

namespace qcorr {

/// GNS data of a positive functional: Hilbert space quotient, the canonical
/// map Lambda and the left action as matrices on C^hilbert_dim with the
/// standard inner product, arranged so that <Lambda(a), Lambda(b)> = phi(b^* a).
struct GnsData {
  LinearFunctional state;
  Matrix gram;          // gram(i,j) = phi(e_i^* e_j)
  Index hilbert_dim = 0;
  Matrix lambda;        // hilbert_dim x dim
  Matrix lambda_pinv;   // dim x hilbert_dim, right inverse on the range
  std::vector<Matrix> rep;  // rep[i] = action of e_i

  Matrix rep_of(const Vector& a) const;
  bool faithful(Index dim) const { return hilbert_dim == dim; }
};

GnsData gns_construct(const StarAlgebra& alg, const LinearFunctional& phi,
                      double tol = default_tol());

}  // namespace qcorr
