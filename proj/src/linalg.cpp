#include "qcorr/linalg.hpp"

#include <Eigen/Eigenvalues>
#include <Eigen/SVD>

namespace qcorr {

const char* error_code_name(ErrorCode code) {
  switch (code) {
    case ErrorCode::ShapeMismatch: return "ShapeMismatch";
    case ErrorCode::NotCStar: return "NotCStar";
    case ErrorCode::NotPositive: return "NotPositive";
    case ErrorCode::NotCoassociative: return "NotCoassociative";
    case ErrorCode::GaloisSingular: return "GaloisSingular";
    case ErrorCode::NoSolution: return "NoSolution";
    case ErrorCode::NoHaarState: return "NoHaarState";
    case ErrorCode::HaarNotFaithful: return "HaarNotFaithful";
    case ErrorCode::NotInvariant: return "NotInvariant";
    case ErrorCode::ZeroSubalgebra: return "ZeroSubalgebra";
    case ErrorCode::DegenerateVector: return "DegenerateVector";
    case ErrorCode::InvalidSubgroup: return "InvalidSubgroup";
    case ErrorCode::HypothesisFailed: return "HypothesisFailed";
    case ErrorCode::InvalidGroup: return "InvalidGroup";
    case ErrorCode::NotNormal: return "NotNormal";
    case ErrorCode::TooLarge: return "TooLarge";
    case ErrorCode::UnknownKind: return "UnknownKind";
    case ErrorCode::ParseError: return "ParseError";
    case ErrorCode::Internal: return "Internal";
  }
  return "Unknown";
}

double default_tol() {
  static const double tol = [] {
    if (const char* env = std::getenv("QCORR_TOL")) {
      double v = std::atof(env);
      if (v > 0) return v;
    }
    return 1e-9;
  }();
  return tol;
}

std::uint64_t default_seed() {
  static const std::uint64_t seed = [] {
    if (const char* env = std::getenv("QCORR_SEED")) {
      return static_cast<std::uint64_t>(std::strtoull(env, nullptr, 10));
    }
    return std::uint64_t{20120822};
  }();
  return seed;
}

Matrix tensor_reshape(const Vector& v, Index d1, Index d2) {
  Matrix t(d1, d2);
  for (Index i = 0; i < d1; ++i)
    for (Index j = 0; j < d2; ++j) t(i, j) = v(i * d2 + j);
  return t;
}

Vector tensor_flatten(const Matrix& t) {
  Vector v(t.rows() * t.cols());
  for (Index i = 0; i < t.rows(); ++i)
    for (Index j = 0; j < t.cols(); ++j) v(i * t.cols() + j) = t(i, j);
  return v;
}

Matrix flip_matrix(Index d1, Index d2) {
  Matrix f = Matrix::Zero(d1 * d2, d1 * d2);
  for (Index i = 0; i < d1; ++i)
    for (Index j = 0; j < d2; ++j) f(j * d1 + i, i * d2 + j) = 1.0;
  return f;
}

Matrix orthonormal_columns(const Matrix& m, double tol) {
  if (m.cols() == 0 || m.norm() == 0.0) return Matrix(m.rows(), 0);
  Eigen::JacobiSVD<Matrix> svd(m, Eigen::ComputeThinU);
  const auto& sv = svd.singularValues();
  double cutoff = tol * sv(0);
  Index r = 0;
  while (r < sv.size() && sv(r) > cutoff) ++r;
  return svd.matrixU().leftCols(r);
}

Index rank_of(const Matrix& m, double tol) {
  if (m.size() == 0 || m.norm() == 0.0) return 0;
  Eigen::JacobiSVD<Matrix> svd(m);
  const auto& sv = svd.singularValues();
  double cutoff = tol * sv(0);
  Index r = 0;
  while (r < sv.size() && sv(r) > cutoff) ++r;
  return r;
}

double span_distance(const Matrix& q, const Vector& v) {
  if (q.cols() == 0) return v.norm();
  return (v - q * (q.adjoint() * v)).norm();
}

Membership subspace_membership(const Matrix& space, const Vector& v, double tol) {
  Matrix q = orthonormal_columns(space, tol);
  double res = span_distance(q, v);
  return {res <= tol * (1.0 + v.norm()), res};
}

double subspace_equality_residual(const Matrix& a, const Matrix& b, double tol) {
  Matrix qa = orthonormal_columns(a, tol);
  Matrix qb = orthonormal_columns(b, tol);
  double worst = 0.0;
  if (qa.cols() != qb.cols()) return 1.0;
  for (Index j = 0; j < qb.cols(); ++j)
    worst = std::max(worst, span_distance(qa, qb.col(j)));
  for (Index j = 0; j < qa.cols(); ++j)
    worst = std::max(worst, span_distance(qb, qa.col(j)));
  return worst;
}

Matrix nullspace(const Matrix& m, double tol) {
  if (m.rows() == 0) return Matrix::Identity(m.cols(), m.cols());
  Eigen::JacobiSVD<Matrix> svd(m, Eigen::ComputeFullV);
  const auto& sv = svd.singularValues();
  double smax = sv.size() > 0 ? sv(0) : 0.0;
  double cutoff = tol * std::max(smax, 1.0);
  Index r = 0;
  while (r < sv.size() && sv(r) > cutoff) ++r;
  return svd.matrixV().rightCols(m.cols() - r);
}

Matrix orthogonal_complement(const Matrix& q, Index dim, double tol) {
  if (q.cols() == 0) return Matrix::Identity(dim, dim);
  return nullspace(q.adjoint(), tol);
}

LstsqResult lstsq(const Matrix& a, const Vector& b) {
  Vector x = a.completeOrthogonalDecomposition().solve(b);
  double res = (a * x - b).norm() / (1.0 + b.norm());
  return {x, res};
}

LstsqMatResult lstsq_matrix(const Matrix& a, const Matrix& b) {
  Matrix x = a.completeOrthogonalDecomposition().solve(b);
  double res = (a * x - b).norm() / (1.0 + b.norm());
  return {x, res};
}

Matrix pinv(const Matrix& m, double tol) {
  Eigen::JacobiSVD<Matrix> svd(m, Eigen::ComputeThinU | Eigen::ComputeThinV);
  const auto& sv = svd.singularValues();
  double cutoff = sv.size() > 0 ? tol * sv(0) : 0.0;
  RealVector inv = RealVector::Zero(sv.size());
  for (Index i = 0; i < sv.size(); ++i)
    if (sv(i) > cutoff) inv(i) = 1.0 / sv(i);
  return svd.matrixV() * inv.asDiagonal() * svd.matrixU().adjoint();
}

AffineSolution affine_solve(const Matrix& a, const Vector& b, double tol) {
  auto sol = lstsq(a, b);
  return {sol.x, nullspace(a, tol), sol.residual};
}

RealVector hermitian_eigenvalues(const Matrix& m) {
  Eigen::SelfAdjointEigenSolver<Matrix> es(0.5 * (m + m.adjoint()),
                                           Eigen::EigenvaluesOnly);
  return es.eigenvalues();
}

double hermitian_deviation(const Matrix& m) {
  return (m - m.adjoint()).norm() / (1.0 + m.norm());
}

Vector random_complex_vector(Index n, Rng& rng) {
  std::normal_distribution<double> dist(0.0, 1.0);
  Vector v(n);
  for (Index i = 0; i < n; ++i) v(i) = Complex(dist(rng), dist(rng));
  return v;
}

Matrix random_density_matrix(Index n, Rng& rng) {
  std::normal_distribution<double> dist(0.0, 1.0);
  Matrix g(n, n);
  for (Index i = 0; i < n; ++i)
    for (Index j = 0; j < n; ++j) g(i, j) = Complex(dist(rng), dist(rng));
  Matrix rho = g * g.adjoint();
  rho /= rho.trace();
  return rho;
}

}  // namespace qcorr
