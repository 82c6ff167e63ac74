#pragma once

#include <random>
#include <vector>

#include <unsupported/Eigen/KroneckerProduct>

#include "qcorr/types.hpp"

namespace qcorr {

// Tensor index convention used throughout: the pair (i, j) with i in the
// first factor (dim d1) and j in the second (dim d2) is flattened to
// i * d2 + j, matching Eigen's kroneckerProduct on column vectors.

inline Matrix kron(const Matrix& a, const Matrix& b) {
  return Eigen::kroneckerProduct(a, b);
}

inline Vector kron_vec(const Vector& a, const Vector& b) {
  return Eigen::kroneckerProduct(a, b);
}

/// Column-major flattening of a matrix.
inline Vector vec(const Matrix& m) {
  return Eigen::Map<const Vector>(m.data(), m.size());
}

inline Matrix unvec(const Vector& v, Index rows, Index cols) {
  return Eigen::Map<const Matrix>(v.data(), rows, cols);
}

/// Reshape a tensor-basis vector into the matrix T with T(i, j) = v[i*d2 + j].
Matrix tensor_reshape(const Vector& v, Index d1, Index d2);

/// Inverse of tensor_reshape.
Vector tensor_flatten(const Matrix& t);

/// Permutation matrix mapping kron(a, b) to kron(b, a).
Matrix flip_matrix(Index d1, Index d2);

/// Relative residual of A against B (Frobenius), scale-free.
inline double rel_residual(const Matrix& a, const Matrix& b) {
  return (a - b).norm() / (1.0 + a.norm() + b.norm());
}

inline double rel_residual(const Vector& a, const Vector& b) {
  return (a - b).norm() / (1.0 + a.norm() + b.norm());
}

/// Orthonormal basis of the column span, rank decided at tol * sigma_max.
Matrix orthonormal_columns(const Matrix& m, double tol);

Index rank_of(const Matrix& m, double tol);

/// Distance from v to the span of the orthonormal columns q.
double span_distance(const Matrix& q, const Vector& v);

struct Membership {
  bool member;
  double residual;
};

/// Membership of v in span(space); space need not be orthonormal.
/// True iff distance <= tol * (1 + |v|).
Membership subspace_membership(const Matrix& space, const Vector& v, double tol);

/// Max residual of mutual membership between the two spans (unit basis vectors).
double subspace_equality_residual(const Matrix& a, const Matrix& b, double tol);

/// Orthonormal basis of the null space of m (right singular vectors).
Matrix nullspace(const Matrix& m, double tol);

/// Orthonormal basis of the orthogonal complement of span(q) in C^dim.
Matrix orthogonal_complement(const Matrix& q, Index dim, double tol);

/// Least-squares solution together with the relative residual of A x - b.
struct LstsqResult {
  Vector x;
  double residual;
};
LstsqResult lstsq(const Matrix& a, const Vector& b);

/// Columnwise least squares: X minimizing |A X - B|, plus relative residual.
struct LstsqMatResult {
  Matrix x;
  double residual;
};
LstsqMatResult lstsq_matrix(const Matrix& a, const Matrix& b);

Matrix pinv(const Matrix& m, double tol);

/// Solution set of the affine system A x = b: one particular solution and an
/// orthonormal basis of the homogeneous null space.
struct AffineSolution {
  Vector particular;
  Matrix null_basis;
  double residual;  // relative residual of the particular solution
};
AffineSolution affine_solve(const Matrix& a, const Vector& b, double tol);

/// Eigenvalues of a (numerically) Hermitian matrix, ascending.
RealVector hermitian_eigenvalues(const Matrix& m);

double hermitian_deviation(const Matrix& m);

using Rng = std::mt19937_64;

Vector random_complex_vector(Index n, Rng& rng);

/// Random Hermitian positive semidefinite matrix with unit trace.
Matrix random_density_matrix(Index n, Rng& rng);

}  // namespace qcorr
