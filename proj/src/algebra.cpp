#include "qcorr/algebra.hpp"

#include <algorithm>
#include <functional>

namespace qcorr {

Vector StarAlgebra::product(const Vector& a, const Vector& b) const {
  return left_action(a) * b;
}

Vector StarAlgebra::star(const Vector& a) const {
  return invol.transpose() * a.conjugate();
}

Matrix StarAlgebra::left_action(const Vector& a) const {
  Matrix l = Matrix::Zero(dim, dim);
  for (Index i = 0; i < dim; ++i)
    if (a(i) != Complex(0, 0)) l += a(i) * lmul[i];
  return l;
}

Matrix StarAlgebra::right_action(const Vector& a) const {
  Matrix r = Matrix::Zero(dim, dim);
  for (Index i = 0; i < dim; ++i)
    if (a(i) != Complex(0, 0)) r += a(i) * rmul[i];
  return r;
}

Vector StarAlgebra::product2(const Vector& x, const Vector& y) const {
  // (a(x)b)(c(x)e) = ac (x) be, extended bilinearly.
  Matrix ymat = tensor_reshape(y, dim, dim);
  Matrix acc = Matrix::Zero(dim, dim);
  for (Index i = 0; i < dim; ++i) {
    for (Index j = 0; j < dim; ++j) {
      Complex c = x(i * dim + j);
      if (c != Complex(0, 0)) acc += c * (lmul[i] * ymat * lmul[j].transpose());
    }
  }
  return tensor_flatten(acc);
}

Vector StarAlgebra::star2(const Vector& x) const {
  Matrix xmat = tensor_reshape(x, dim, dim).conjugate();
  return tensor_flatten(invol.transpose() * xmat * invol);
}

StarAlgebra make_star_algebra(Index dim, std::vector<std::string> labels,
                              Matrix mult, Vector unit, Matrix invol) {
  if (dim <= 0) throw Error(ErrorCode::ShapeMismatch, "dimension must be positive");
  if (mult.rows() != dim || mult.cols() != dim * dim)
    throw Error(ErrorCode::ShapeMismatch, "mult tensor must be dim x dim^2");
  if (unit.size() != dim)
    throw Error(ErrorCode::ShapeMismatch, "unit vector has wrong dimension");
  if (invol.rows() != dim || invol.cols() != dim)
    throw Error(ErrorCode::ShapeMismatch, "involution matrix must be dim x dim");
  if (labels.empty()) {
    labels.reserve(dim);
    for (Index i = 0; i < dim; ++i) labels.push_back("e" + std::to_string(i));
  }
  if (static_cast<Index>(labels.size()) != dim)
    throw Error(ErrorCode::ShapeMismatch, "label count does not match dimension");

  StarAlgebra alg;
  alg.dim = dim;
  alg.labels = std::move(labels);
  alg.mult = std::move(mult);
  alg.unit = std::move(unit);
  alg.invol = std::move(invol);
  alg.lmul.resize(dim);
  alg.rmul.resize(dim);
  for (Index i = 0; i < dim; ++i) {
    Matrix l(dim, dim), r(dim, dim);
    for (Index j = 0; j < dim; ++j) {
      l.col(j) = alg.mult.col(i * dim + j);  // e_i e_j
      r.col(j) = alg.mult.col(j * dim + i);  // e_j e_i
    }
    alg.lmul[i] = l;
    alg.rmul[i] = r;
  }
  return alg;
}

void ValidationReport::add(const std::string& name, double residual) {
  bool ok = residual < tol;
  checks.push_back({name, residual, ok});
  passed = passed && ok;
}

void ValidationReport::add_flag(const std::string& name, bool ok, double residual) {
  checks.push_back({name, residual, ok});
  passed = passed && ok;
}

const AxiomCheck* ValidationReport::find(const std::string& name) const {
  for (const auto& c : checks)
    if (c.name == name) return &c;
  return nullptr;
}

double ValidationReport::worst() const {
  double w = 0.0;
  for (const auto& c : checks) w = std::max(w, c.residual);
  return w;
}

std::string ValidationReport::first_failed() const {
  for (const auto& c : checks)
    if (!c.pass) return c.name;
  return {};
}

// The regular trace form <a,b> = tr L(b^* a) is a faithful positive Hermitian
// form on any algebra that is *-isomorphic to a direct sum of matrix blocks.
Matrix regular_gram(const StarAlgebra& alg) {
  Matrix g(alg.dim, alg.dim);
  for (Index i = 0; i < alg.dim; ++i) {
    Vector si = alg.star(Vector::Unit(alg.dim, i));
    Matrix lsi = alg.left_action(si);
    for (Index j = 0; j < alg.dim; ++j)
      g(i, j) = (lsi * alg.lmul[j]).trace();
  }
  return g;
}

ValidationReport validate_star_algebra(const StarAlgebra& alg, double tol) {
  ValidationReport report;
  report.tol = tol;
  const Index d = alg.dim;

  // Associativity is equivalent to the left regular action being a
  // homomorphism: L(e_i e_j) = L_i L_j.
  double assoc = 0.0;
  for (Index i = 0; i < d; ++i) {
    for (Index j = 0; j < d; ++j) {
      Vector prod = alg.lmul[i].col(j);
      assoc = std::max(assoc, rel_residual(alg.left_action(prod),
                                           alg.lmul[i] * alg.lmul[j]));
    }
  }
  report.add("assoc", assoc);

  double unit_res = std::max(
      rel_residual(alg.left_action(alg.unit), Matrix::Identity(d, d)),
      rel_residual(alg.right_action(alg.unit), Matrix::Identity(d, d)));
  report.add("unit", unit_res);

  double antimult = 0.0;
  for (Index i = 0; i < d; ++i) {
    Vector si = alg.star(Vector::Unit(d, i));
    for (Index j = 0; j < d; ++j) {
      Vector lhs = alg.star(alg.lmul[i].col(j));       // (e_i e_j)^*
      Vector rhs = alg.product(alg.star(Vector::Unit(d, j)), si);
      antimult = std::max(antimult, rel_residual(lhs, rhs));
    }
  }
  report.add("invol.antimultiplicative", antimult);

  double involutive =
      rel_residual(Matrix(alg.invol.conjugate() * alg.invol), Matrix::Identity(d, d));
  report.add("invol.involutive", involutive);

  // C*-realizability: the regular trace form <a,b> = tr L(b^* a) must be a
  // positive-definite Hermitian form. That holds exactly when the algebra
  // embeds as a *-closed subalgebra of some B(C^n).
  Matrix gram = regular_gram(alg);
  double herm = hermitian_deviation(gram);
  RealVector eigs = hermitian_eigenvalues(gram);
  double lmax = eigs.size() ? std::max(1.0, eigs(eigs.size() - 1)) : 1.0;
  double defect = herm;
  if (eigs.size() && eigs(0) <= tol * lmax)
    defect = std::max(defect, (tol * lmax - eigs(0)) / lmax);
  report.add("cstar.realizable", defect);

  return report;
}

Matrix functional_gram(const StarAlgebra& alg, const Vector& coeffs) {
  Matrix g(alg.dim, alg.dim);
  for (Index i = 0; i < alg.dim; ++i) {
    Vector si = alg.star(Vector::Unit(alg.dim, i));
    Matrix lsi = alg.left_action(si);
    for (Index j = 0; j < alg.dim; ++j)
      g(i, j) = (coeffs.transpose() * (lsi * Vector::Unit(alg.dim, j)))(0);
  }
  return g;
}

LinearFunctional analyze_functional(const StarAlgebra& alg, const Vector& coeffs,
                                    double tol) {
  LinearFunctional f;
  f.coeffs = coeffs;
  Vector star_values(alg.dim);
  for (Index i = 0; i < alg.dim; ++i)
    star_values(i) = (coeffs.transpose() * alg.star(Vector::Unit(alg.dim, i)))(0);
  f.hermitian = (star_values - coeffs.conjugate()).norm() <= tol * (1.0 + coeffs.norm());

  Matrix g = functional_gram(alg, coeffs);
  double herm = hermitian_deviation(g);
  RealVector eigs = hermitian_eigenvalues(g);
  double scale = eigs.size() ? std::max(1.0, std::abs(eigs(eigs.size() - 1))) : 1.0;
  f.positive = herm <= tol && (eigs.size() == 0 || eigs(0) >= -tol * scale);

  Complex at_unit = f(alg.unit);
  f.state = f.positive && std::abs(at_unit - Complex(1, 0)) <= tol * 10.0;
  return f;
}

namespace {

Matrix grow_until_stable(const StarAlgebra& alg, Matrix basis,
                         const std::function<std::vector<Vector>(const Matrix&)>& expand,
                         double tol) {
  basis = orthonormal_columns(basis, tol);
  for (;;) {
    std::vector<Vector> extra = expand(basis);
    Matrix cand(alg.dim, basis.cols() + static_cast<Index>(extra.size()));
    cand.leftCols(basis.cols()) = basis;
    for (Index k = 0; k < static_cast<Index>(extra.size()); ++k)
      cand.col(basis.cols() + k) = extra[static_cast<size_t>(k)];
    Matrix next = orthonormal_columns(cand, tol);
    if (next.cols() == basis.cols()) return next;
    basis = next;
  }
}

}  // namespace

Subalgebra subalgebra_closure(const StarAlgebra& alg,
                              const std::vector<Vector>& seed, double tol) {
  Matrix init(alg.dim, static_cast<Index>(seed.size()));
  for (Index k = 0; k < init.cols(); ++k) init.col(k) = seed[static_cast<size_t>(k)];
  Matrix basis = grow_until_stable(
      alg, init,
      [&](const Matrix& b) {
        std::vector<Vector> out;
        for (Index i = 0; i < b.cols(); ++i) {
          out.push_back(alg.star(b.col(i)));
          for (Index j = 0; j < b.cols(); ++j)
            out.push_back(alg.product(b.col(i), b.col(j)));
        }
        return out;
      },
      tol);
  return Subalgebra{basis};
}

Subalgebra ideal_closure(const StarAlgebra& alg, const Matrix& seed, double tol) {
  Matrix basis = grow_until_stable(
      alg, seed,
      [&](const Matrix& b) {
        std::vector<Vector> out;
        for (Index i = 0; i < b.cols(); ++i) {
          for (Index k = 0; k < alg.dim; ++k) {
            out.push_back(alg.lmul[k] * b.col(i));
            out.push_back(alg.rmul[k] * b.col(i));
          }
        }
        return out;
      },
      tol);
  return Subalgebra{basis};
}

double subalgebra_closure_residual(const StarAlgebra& alg, const Matrix& basis,
                                   double tol) {
  Matrix q = orthonormal_columns(basis, tol);
  double worst = 0.0;
  for (Index i = 0; i < q.cols(); ++i) {
    worst = std::max(worst, span_distance(q, alg.star(q.col(i))));
    for (Index j = 0; j < q.cols(); ++j)
      worst = std::max(worst, span_distance(q, alg.product(q.col(i), q.col(j))));
  }
  return worst;
}

}  // namespace qcorr
