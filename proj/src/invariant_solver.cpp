#include "homoconn/invariant_solver.hpp"

#include <Eigen/Eigenvalues>
#include <Eigen/SVD>
#include <stdexcept>

namespace homoconn {

RVec BilinearMap::eval(const RVec& x, const RVec& y) const {
  const int d = dim();
  RVec out = RVec::Zero(d);
  for (int i = 0; i < d; ++i) {
    if (x[i] == 0.0) continue;
    for (int j = 0; j < d; ++j) {
      const double w = x[i] * y[j];
      if (w == 0.0) continue;
      for (int k = 0; k < d; ++k) out[k] += w * c(i, j, k);
    }
  }
  return out;
}

MVector BilinearMap::eval(const MVector& x, const MVector& y) const {
  return MVector::from_coords(eval(x.coords(), y.coords()));
}

namespace {

// rows of M spanning the same space, in reduced row echelon form
// (largest-pivot tie-breaking), then orthonormalized in order
RMat canonicalize_rows(RMat M) {
  const int rows = static_cast<int>(M.rows());
  const int cols = static_cast<int>(M.cols());
  if (rows == 0 || cols == 0) return M;
  const double scale = M.cwiseAbs().maxCoeff();
  const double tol = 1e-9 * (scale > 0 ? scale : 1.0);
  int r = 0;
  for (int c = 0; c < cols && r < rows; ++c) {
    int piv = r;
    for (int i = r + 1; i < rows; ++i)
      if (std::abs(M(i, c)) > std::abs(M(piv, c))) piv = i;
    if (std::abs(M(piv, c)) < tol) continue;
    M.row(piv).swap(M.row(r));
    M.row(r) /= M(r, c);
    for (int i = 0; i < rows; ++i)
      if (i != r && M(i, c) != 0.0) M.row(i) -= M(i, c) * M.row(r);
    ++r;
  }
  RMat R = M.topRows(r);
  // Gram-Schmidt in row order
  for (int i = 0; i < r; ++i) {
    for (int j = 0; j < i; ++j) R.row(i) -= R.row(i).dot(R.row(j)) * R.row(j);
    R.row(i).normalize();
  }
  return R;
}

// equivariance constraint matrix for a single h-basis element
RMat constraint_block(const ReductiveSplit& s, int l) {
  const int d = s.dim_m();
  const int d3 = d * d * d;
  auto col = [d](int a, int b, int k) { return (a * d + b) * d + k; };
  RMat A = RMat::Zero(d3, d3);
  for (int i = 0; i < d; ++i)
    for (int j = 0; j < d; ++j)
      for (int kp = 0; kp < d; ++kp) {
        const int row = col(i, j, kp);
        for (int k = 0; k < d; ++k)
          A(row, col(i, j, k)) += s.bracket_hm_m(l, k, kp);
        for (int p = 0; p < d; ++p) {
          A(row, col(p, j, kp)) -= s.bracket_hm_m(l, i, p);
          A(row, col(i, p, kp)) -= s.bracket_hm_m(l, j, p);
        }
      }
  return A;
}

MapSpace space_from_rows(const RMat& rows, int d, double tol) {
  MapSpace sp;
  sp.tolerance = tol;
  for (int i = 0; i < rows.rows(); ++i) {
    BilinearMap b(d);
    b.c.flat() = rows.row(i).transpose();
    sp.basis.push_back(std::move(b));
  }
  return sp;
}

}  // namespace

RMat nullspace(const RMat& A, int cols, double rel_tol) {
  if (A.rows() == 0) return RMat::Identity(cols, cols);
  // JacobiSVD: BDCSVD's deflation loses accuracy on these structured systems
  Eigen::JacobiSVD<RMat> svd(A, Eigen::ComputeFullV);
  const auto& sv = svd.singularValues();
  const double smax = sv[0];
  int rank = 0;
  for (int i = 0; i < sv.size(); ++i)
    if (sv[i] > rel_tol * smax) ++rank;
  return canonicalize_rows(svd.matrixV().rightCols(cols - rank).transpose());
}

MapSpace invariant_bilinear_basis(const ReductiveSplit& split) {
  const int d = split.dim_m();
  const int d3 = d * d * d;
  const double rel_tol = 1e-9;
  if (split.dim_h() == 0)
    return space_from_rows(RMat::Identity(d3, d3), d, rel_tol);
  // joint nullspace of all equivariance blocks as the small-eigenvalue space
  // of the accumulated Gram matrix; keeps memory flat for large n and avoids
  // chained SVD rank decisions
  RMat gram = RMat::Zero(d3, d3);
  for (int l = 0; l < split.dim_h(); ++l) {
    const RMat A = constraint_block(split, l);
    gram.noalias() += A.transpose() * A;
  }
  Eigen::SelfAdjointEigenSolver<RMat> es(gram);
  const RVec ev = es.eigenvalues();  // ascending
  const double scale = std::max(ev[d3 - 1], 1.0);
  int nullity = 0;
  while (nullity < d3 && ev[nullity] < rel_tol * scale) ++nullity;
  const RMat B = es.eigenvectors().leftCols(nullity);
  return space_from_rows(canonicalize_rows(B.transpose()), d, rel_tol);
}

double equivariance_residual(const ReductiveSplit& s, const BilinearMap& alpha) {
  const int d = s.dim_m();
  double worst = 0.0;
  for (int l = 0; l < s.dim_h(); ++l)
    for (int i = 0; i < d; ++i)
      for (int j = 0; j < d; ++j)
        for (int kp = 0; kp < d; ++kp) {
          double v = 0.0;
          for (int k = 0; k < d; ++k) {
            v += alpha.c(i, j, k) * s.bracket_hm_m(l, k, kp);
            v -= s.bracket_hm_m(l, i, k) * alpha.c(k, j, kp);
            v -= s.bracket_hm_m(l, j, k) * alpha.c(i, k, kp);
          }
          worst = std::max(worst, std::abs(v));
        }
  return worst;
}

double metric_residual(const ReductiveSplit& s, const BilinearMap& alpha) {
  const int d = s.dim_m();
  double worst = 0.0;
  for (int cc = 0; cc < d; ++cc)
    for (int a = 0; a < d; ++a)
      for (int b = a; b < d; ++b) {
        double v = 0.0;
        for (int k = 0; k < d; ++k)
          v += alpha.c(cc, a, k) * s.gram(k, b) + alpha.c(cc, b, k) * s.gram(k, a);
        worst = std::max(worst, std::abs(v));
      }
  return worst;
}

MapSpace metric_subspace(const MapSpace& space, const ReductiveSplit& split) {
  const int d = split.dim_m();
  const int T = space.dim();
  const int rows = d * d * (d + 1) / 2;
  RMat M(rows, T);
  for (int t = 0; t < T; ++t) {
    const BilinearMap& B = space.basis[t];
    int r = 0;
    for (int cc = 0; cc < d; ++cc)
      for (int a = 0; a < d; ++a)
        for (int b = a; b < d; ++b) {
          double v = 0.0;
          for (int k = 0; k < d; ++k)
            v += B.c(cc, a, k) * split.gram(k, b) + B.c(cc, b, k) * split.gram(k, a);
          M(r++, t) = v;
        }
  }
  const RMat combos = nullspace(M, T);
  RMat out(combos.rows(), d * d * d);
  for (int i = 0; i < combos.rows(); ++i) {
    RVec v = RVec::Zero(d * d * d);
    for (int t = 0; t < T; ++t) v += combos(i, t) * space.basis[t].c.flat();
    out.row(i) = v.transpose();
  }
  return space_from_rows(canonicalize_rows(out), d, space.tolerance);
}

MapSpace skew_torsion_subspace(const MapSpace& metric_space,
                               const ReductiveSplit& split,
                               const BilinearMap& alpha_lc) {
  if (metric_residual(split, alpha_lc) > 1e-8)
    throw std::invalid_argument("skew_torsion_subspace: alpha_lc is not metric");
  const int d = split.dim_m();
  const int T = metric_space.dim();
  const int rows = d * (d + 1) / 2 * d;
  RMat M(rows, T);
  for (int t = 0; t < T; ++t) {
    const BilinearMap& B = metric_space.basis[t];
    int r = 0;
    for (int i = 0; i < d; ++i)
      for (int j = i; j < d; ++j)
        for (int k = 0; k < d; ++k) M(r++, t) = B.c(i, j, k) + B.c(j, i, k);
  }
  const RMat combos = nullspace(M, T);
  RMat out(combos.rows(), d * d * d);
  for (int i = 0; i < combos.rows(); ++i) {
    RVec v = RVec::Zero(d * d * d);
    for (int t = 0; t < T; ++t) v += combos(i, t) * metric_space.basis[t].c.flat();
    out.row(i) = v.transpose();
  }
  return space_from_rows(canonicalize_rows(out), d, metric_space.tolerance);
}

namespace {
int numeric_rank(const RMat& A, double tol) {
  if (A.rows() == 0) return 0;
  Eigen::JacobiSVD<RMat> svd(A);
  const auto& sv = svd.singularValues();
  int rank = 0;
  for (int i = 0; i < sv.size(); ++i)
    if (sv[i] > tol * sv[0]) ++rank;
  return rank;
}
}  // namespace

bool span_equal(const MapSpace& a, const MapSpace& b, double tol) {
  if (a.dim() == 0 && b.dim() == 0) return true;
  if (a.dim() == 0 || b.dim() == 0) return false;
  const int len = a.basis[0].dim();
  if (b.basis[0].dim() != len) return false;
  const int d3 = len * len * len;
  RMat A(a.dim(), d3), B(b.dim(), d3);
  for (int i = 0; i < a.dim(); ++i) A.row(i) = a.basis[i].c.flat().transpose();
  for (int i = 0; i < b.dim(); ++i) B.row(i) = b.basis[i].c.flat().transpose();
  RMat AB(a.dim() + b.dim(), d3);
  AB << A, B;
  const int ra = numeric_rank(A, tol), rb = numeric_rank(B, tol),
            rab = numeric_rank(AB, tol);
  return ra == rb && rb == rab;
}

double span_distance(const MapSpace& space, const BilinearMap& alpha) {
  RVec v = alpha.c.flat();
  for (const BilinearMap& b : space.basis) v -= v.dot(b.c.flat()) * b.c.flat();
  return v.lpNorm<Eigen::Infinity>();
}

}  // namespace homoconn
