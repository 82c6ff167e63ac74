#pragma once

#include <optional>
#include <string>
#include <vector>

#include "qcorr/linalg.hpp"

namespace qcorr {

/// Finite-dimensional complex *-algebra given by structure constants.
///
/// Elements are coefficient vectors: a = sum_i a_i e_i. The multiplication
/// tensor is stored as the map A (x) A -> A, so (ab) = mult * kron(a, b).
/// The involution matrix stores basis images rowwise: e_i^* has coordinates
/// invol.row(i), and star(a) = invol^T * conj(a).
struct StarAlgebra {
  Index dim = 0;
  std::vector<std::string> labels;
  Matrix mult;   // dim x dim^2
  Vector unit;   // dim
  Matrix invol;  // dim x dim

  std::vector<Matrix> lmul;  // L_i, left multiplication by e_i
  std::vector<Matrix> rmul;  // R_i

  Vector product(const Vector& a, const Vector& b) const;
  Vector star(const Vector& a) const;
  Matrix left_action(const Vector& a) const;
  Matrix right_action(const Vector& a) const;

  /// Product and involution of the tensor-square algebra A (x) A.
  Vector product2(const Vector& x, const Vector& y) const;
  Vector star2(const Vector& x) const;
  Vector unit2() const { return kron_vec(unit, unit); }
};

StarAlgebra make_star_algebra(Index dim, std::vector<std::string> labels,
                              Matrix mult, Vector unit, Matrix invol);

struct AxiomCheck {
  std::string name;
  double residual;
  bool pass;
};

struct ValidationReport {
  std::vector<AxiomCheck> checks;
  double tol = 0.0;
  bool passed = true;

  void add(const std::string& name, double residual);
  void add_flag(const std::string& name, bool ok, double residual);
  const AxiomCheck* find(const std::string& name) const;
  double worst() const;
  std::string first_failed() const;
};

ValidationReport validate_star_algebra(const StarAlgebra& alg,
                                       double tol = default_tol());

/// Subspace of a StarAlgebra closed under product and involution.
/// The basis matrix has orthonormal columns in coefficient coordinates.
struct Subalgebra {
  Matrix basis;
  Index dim() const { return basis.cols(); }
};

/// A linear functional in dual-basis coordinates: mu(a) = sum_i coeffs_i a_i.
struct LinearFunctional {
  Vector coeffs;
  bool hermitian = false;
  bool positive = false;
  bool state = false;

  Complex operator()(const Vector& a) const {
    return (coeffs.transpose() * a)(0);
  }
};

/// Gram matrix [mu(e_i^* e_j)]_{ij}; PSD iff mu is positive.
Matrix functional_gram(const StarAlgebra& alg, const Vector& coeffs);

/// Gram of the regular trace form <a,b> = tr L(b^* a); positive definite
/// exactly for C*-realizable algebras.
Matrix regular_gram(const StarAlgebra& alg);

/// Builds a functional and computes its cached property flags.
LinearFunctional analyze_functional(const StarAlgebra& alg, const Vector& coeffs,
                                    double tol = default_tol());

/// Smallest subspace containing the seed elements that is closed under
/// multiplication and involution. The unit is not added automatically.
Subalgebra subalgebra_closure(const StarAlgebra& alg,
                              const std::vector<Vector>& seed,
                              double tol = default_tol());

/// Smallest two-sided ideal containing the seed subspace.
Subalgebra ideal_closure(const StarAlgebra& alg, const Matrix& seed,
                         double tol = default_tol());

/// Residuals of the subalgebra axioms (closure under product / involution).
double subalgebra_closure_residual(const StarAlgebra& alg, const Matrix& basis,
                                   double tol = default_tol());

}  // namespace qcorr
