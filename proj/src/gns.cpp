#include "qcorr/gns.hpp"

#include <Eigen/Eigenvalues>

namespace qcorr {

Matrix GnsData::rep_of(const Vector& a) const {
  Matrix m = Matrix::Zero(hilbert_dim, hilbert_dim);
  for (Index i = 0; i < a.size(); ++i)
    if (a(i) != Complex(0, 0)) m += a(i) * rep[static_cast<size_t>(i)];
  return m;
}

GnsData gns_construct(const StarAlgebra& alg, const LinearFunctional& phi,
                      double tol) {
  const Index d = alg.dim;
  Matrix gram = functional_gram(alg, phi.coeffs);
  if (hermitian_deviation(gram) > tol)
    throw Error(ErrorCode::NotPositive, "functional is not Hermitian");

  Eigen::SelfAdjointEigenSolver<Matrix> es(0.5 * (gram + gram.adjoint()));
  const RealVector& vals = es.eigenvalues();
  double vmax = std::max(vals(vals.size() - 1), 0.0);
  double scale = std::max(vmax, 1.0);
  if (vals(0) < -tol * scale)
    throw Error(ErrorCode::NotPositive, "phi(a* a) < 0 for some a");

  Index h = 0;
  for (Index i = 0; i < d; ++i)
    if (vals(i) > tol * scale) ++h;

  GnsData gns;
  gns.state = phi;
  gns.gram = gram;
  gns.hilbert_dim = h;
  // Keep the eigenvectors above the cutoff (eigenvalues ascending).
  Matrix u = es.eigenvectors().rightCols(h);
  RealVector kept = vals.tail(h);
  gns.lambda = kept.array().sqrt().matrix().asDiagonal().toDenseMatrix().cast<Complex>() *
               u.adjoint();
  gns.lambda_pinv =
      u * kept.array().sqrt().inverse().matrix().asDiagonal().toDenseMatrix().cast<Complex>();
  gns.rep.resize(static_cast<size_t>(d));
  for (Index i = 0; i < d; ++i)
    gns.rep[static_cast<size_t>(i)] = gns.lambda * alg.lmul[i] * gns.lambda_pinv;
  return gns;
}

}  // namespace qcorr
