#include "qcorr/blocks.hpp"

#include <algorithm>

#include <Eigen/Eigenvalues>

namespace qcorr {

Index BlockDecomposition::total_matrix_dim() const {
  Index d = 0;
  for (const auto& b : blocks) d += b.size;
  return d;
}

Matrix BlockDecomposition::block_matrix(size_t b, const Vector& a) const {
  const Block& blk = blocks[b];
  return unvec(blk.map * a, blk.size, blk.size);
}

Matrix BlockDecomposition::block_diag(const Vector& a) const {
  Index total = total_matrix_dim();
  Matrix out = Matrix::Zero(total, total);
  Index off = 0;
  for (size_t b = 0; b < blocks.size(); ++b) {
    out.block(off, off, blocks[b].size, blocks[b].size) = block_matrix(b, a);
    off += blocks[b].size;
  }
  return out;
}

std::vector<Index> BlockDecomposition::sizes() const {
  std::vector<Index> s;
  for (const auto& b : blocks) s.push_back(b.size);
  return s;
}

namespace {

struct Cluster {
  double value;
  Matrix vectors;  // orthonormal columns spanning the eigenspace
};

std::vector<Cluster> cluster_eigenspaces(const Matrix& hermitian, double gap) {
  Eigen::SelfAdjointEigenSolver<Matrix> es(0.5 * (hermitian + hermitian.adjoint()));
  const RealVector& vals = es.eigenvalues();
  const Matrix& vecs = es.eigenvectors();
  std::vector<Cluster> clusters;
  Index start = 0;
  for (Index i = 1; i <= vals.size(); ++i) {
    if (i == vals.size() || vals(i) - vals(i - 1) > gap) {
      clusters.push_back({vals(start), vecs.middleCols(start, i - start)});
      start = i;
    }
  }
  return clusters;
}

// Orthonormal basis of the center {z : e_i z = z e_i for all i}.
Matrix center_basis(const StarAlgebra& alg, double tol) {
  const Index d = alg.dim;
  Matrix constraints(d * d, d);
  for (Index i = 0; i < d; ++i)
    constraints.middleRows(i * d, d) = alg.lmul[i] - alg.rmul[i];
  return nullspace(constraints, tol);
}

// Orthonormal basis (as vec'd matrices) of {X : X m_i = m_i X for all i}.
Matrix commutant_basis(const std::vector<Matrix>& mats, Index n, double tol) {
  Matrix constraints(static_cast<Index>(mats.size()) * n * n, n * n);
  Matrix id = Matrix::Identity(n, n);
  Index row = 0;
  for (const auto& m : mats) {
    constraints.middleRows(row, n * n) = kron(m.transpose(), id) - kron(id, m);
    row += n * n;
  }
  return nullspace(constraints, tol);
}

}  // namespace

BlockDecomposition block_decompose(const StarAlgebra& alg, double tol,
                                   std::uint64_t seed) {
  const Index d = alg.dim;

  Matrix gram = regular_gram(alg);
  if (hermitian_deviation(gram) > tol)
    throw Error(ErrorCode::NotCStar, "regular trace form is not Hermitian");
  Eigen::SelfAdjointEigenSolver<Matrix> ges(0.5 * (gram + gram.adjoint()));
  const RealVector& gvals = ges.eigenvalues();
  double gmax = std::max(gvals(gvals.size() - 1), 1.0);
  if (gvals(0) <= tol * gmax)
    throw Error(ErrorCode::NotCStar,
                "regular trace form is not positive definite");

  // Coordinates in which the regular representation is a *-representation.
  RealVector sq = gvals.array().sqrt();
  Matrix phi = sq.asDiagonal().toDenseMatrix().cast<Complex>() * ges.eigenvectors().adjoint();
  Matrix phi_inv = ges.eigenvectors() *
                   sq.cwiseInverse().asDiagonal().toDenseMatrix().cast<Complex>();
  std::vector<Matrix> rep(d);
  for (Index i = 0; i < d; ++i) rep[static_cast<size_t>(i)] = phi * alg.lmul[i] * phi_inv;

  double star_res = 0.0;
  for (Index i = 0; i < d; ++i) {
    Matrix rep_star = phi * alg.left_action(alg.star(Vector::Unit(d, i))) * phi_inv;
    star_res = std::max(star_res,
                        rel_residual(rep_star, rep[static_cast<size_t>(i)].adjoint()));
  }
  if (star_res > tol)
    throw Error(ErrorCode::NotCStar, "regular representation is not a *-representation");

  Matrix center = center_basis(alg, tol);
  const Index n_blocks = center.cols();

  Matrix rep_span(d * d, d);
  for (Index i = 0; i < d; ++i) rep_span.col(i) = vec(rep[static_cast<size_t>(i)]);

  Matrix comm = commutant_basis(rep, d, tol);

  Rng rng(seed);
  std::uniform_real_distribution<double> unif(-1.0, 1.0);
  const double gap = 1e-6;

  std::string failure = "block split did not converge";
  for (int attempt = 0; attempt < 8; ++attempt) {
    // Split the center by a random self-adjoint central element.
    Vector z_raw = center * random_complex_vector(n_blocks, rng);
    Vector z = 0.5 * (z_raw + alg.star(z_raw));
    Matrix zrep = phi * alg.left_action(z) * phi_inv;
    auto central_clusters = cluster_eigenspaces(zrep, gap * (1.0 + zrep.norm()));
    if (static_cast<Index>(central_clusters.size()) != n_blocks) continue;

    std::vector<Vector> projections;
    bool ok = true;
    for (const auto& c : central_clusters) {
      Matrix p = c.vectors * c.vectors.adjoint();
      auto sol = lstsq(rep_span, vec(p));
      if (sol.residual > tol) { ok = false; break; }
      projections.push_back(sol.x);
    }
    if (!ok) { failure = "central projection outside the algebra"; continue; }

    // Split multiplicities by a random self-adjoint element of the commutant.
    Matrix r = Matrix::Zero(d, d);
    for (Index k = 0; k < comm.cols(); ++k)
      r += Complex(unif(rng), unif(rng)) * unvec(comm.col(k), d, d);
    r = 0.5 * (r + r.adjoint()).eval();
    auto spaces = cluster_eigenspaces(r, gap * (1.0 + r.norm()));

    // One irreducible invariant subspace per block.
    std::vector<Block> blocks(static_cast<size_t>(n_blocks));
    std::vector<bool> filled(static_cast<size_t>(n_blocks), false);
    for (const auto& sp : spaces) {
      Matrix v = sp.vectors;
      int owner = -1;
      for (Index b = 0; b < n_blocks; ++b) {
        Matrix prep = phi * alg.left_action(projections[static_cast<size_t>(b)]) * phi_inv;
        if ((prep * v - v).norm() <= 1e-6 * (1.0 + v.norm())) { owner = static_cast<int>(b); break; }
      }
      if (owner < 0) { ok = false; break; }
      auto& blk = blocks[static_cast<size_t>(owner)];
      if (filled[static_cast<size_t>(owner)]) {
        if (blk.size != v.cols()) { ok = false; break; }
        continue;
      }
      blk.size = v.cols();
      blk.map.resize(v.cols() * v.cols(), d);
      for (Index j = 0; j < d; ++j)
        blk.map.col(j) = vec((v.adjoint() * rep[static_cast<size_t>(j)] * v).eval());
      filled[static_cast<size_t>(owner)] = true;
    }
    if (!ok) { failure = "invariant subspace split was inconsistent"; continue; }

    BlockDecomposition dec;
    dec.blocks = std::move(blocks);
    dec.central_projections = std::move(projections);

    Index dim_sum = 0;
    for (const auto& b : dec.blocks) dim_sum += b.size * b.size;
    if (dim_sum != d) { failure = "block dimensions do not sum to dim"; continue; }

    // Certify: each block map is a unital, surjective *-homomorphism and the
    // direct sum reproduces multiplication.
    double worst = 0.0;
    for (size_t b = 0; b < dec.blocks.size(); ++b) {
      Index db = dec.blocks[b].size;
      worst = std::max(worst, rel_residual(dec.block_matrix(b, alg.unit),
                                           Matrix::Identity(db, db)));
      if (rank_of(dec.blocks[b].map.transpose(), tol) != db * db) {
        worst = 1.0;
        break;
      }
      for (Index i = 0; i < d; ++i) {
        Matrix bi = dec.block_matrix(b, Vector::Unit(d, i));
        Matrix bstar = dec.block_matrix(b, alg.star(Vector::Unit(d, i)));
        worst = std::max(worst, rel_residual(bstar, bi.adjoint()));
        for (Index j = 0; j < d; ++j) {
          Matrix bij = dec.block_matrix(b, alg.lmul[i].col(j));
          worst = std::max(worst,
                           rel_residual(bij, bi * dec.block_matrix(b, Vector::Unit(d, j))));
        }
      }
    }
    // Central projections: self-adjoint orthogonal idempotents summing to 1.
    Vector psum = Vector::Zero(d);
    for (size_t a = 0; a < dec.central_projections.size(); ++a) {
      const Vector& pa = dec.central_projections[a];
      psum += pa;
      worst = std::max(worst, rel_residual(alg.star(pa), pa));
      for (size_t c = 0; c < dec.central_projections.size(); ++c) {
        Vector prod = alg.product(pa, dec.central_projections[c]);
        Vector expect = (a == c) ? pa : Vector(Vector::Zero(d));
        worst = std::max(worst, rel_residual(prod, expect));
      }
    }
    worst = std::max(worst, rel_residual(psum, alg.unit));

    if (worst <= tol) {
      // Canonical order: ascending size, then descending trace of the
      // projection for determinism.
      std::vector<size_t> order(dec.blocks.size());
      for (size_t i = 0; i < order.size(); ++i) order[i] = i;
      std::stable_sort(order.begin(), order.end(), [&](size_t x, size_t y) {
        return dec.blocks[x].size < dec.blocks[y].size;
      });
      BlockDecomposition sorted;
      for (size_t i : order) {
        sorted.blocks.push_back(std::move(dec.blocks[i]));
        sorted.central_projections.push_back(std::move(dec.central_projections[i]));
      }
      sorted.residual = worst;
      return sorted;
    }
    failure = "block maps failed certification";
  }
  throw Error(ErrorCode::NotCStar, failure);
}

}  // namespace qcorr
