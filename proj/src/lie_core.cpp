#include "homoconn/lie_core.hpp"

#include <stdexcept>

namespace homoconn {

namespace {

// flatten a complex matrix to a real vector (Re entries then Im entries)
RVec realify(const Mat& A) {
  const int sz = static_cast<int>(A.size());
  RVec v(2 * sz);
  Eigen::Map<const CVec> flat(A.data(), sz);
  v.head(sz) = flat.real();
  v.tail(sz) = flat.imag();
  return v;
}

RMat basis_matrix(const std::vector<Mat>& basis) {
  const int d = static_cast<int>(basis.size());
  RMat B(2 * basis[0].size(), d);
  for (int i = 0; i < d; ++i) B.col(i) = realify(basis[i]);
  return B;
}

}  // namespace

RVec MatrixLieAlgebra::coords(const Mat& A) const {
  return basis_pinv * realify(A);
}

Mat MatrixLieAlgebra::from_coords(const RVec& c) const {
  Mat A = Mat::Zero(m, m);
  for (int i = 0; i < dim(); ++i) A += c[i] * basis[i];
  return A;
}

MatrixLieAlgebra build_su(int m) {
  if (m < 2) throw std::invalid_argument("build_su: need m >= 2");
  MatrixLieAlgebra alg;
  alg.m = m;
  const cd I(0.0, 1.0);
  for (int j = 0; j < m; ++j) {
    for (int k = j + 1; k < m; ++k) {
      Mat A = Mat::Zero(m, m);
      A(j, k) = 1.0;
      A(k, j) = -1.0;
      alg.basis.push_back(A);
      Mat B = Mat::Zero(m, m);
      B(j, k) = I;
      B(k, j) = I;
      alg.basis.push_back(B);
    }
  }
  for (int j = 0; j + 1 < m; ++j) {
    Mat D = Mat::Zero(m, m);
    D(j, j) = I;
    D(j + 1, j + 1) = -I;
    alg.basis.push_back(D);
  }
  const int d = alg.dim();
  alg.basis_pinv = basis_matrix(alg.basis)
                       .completeOrthogonalDecomposition()
                       .pseudoInverse();
  alg.structure = Tensor3(d, d, d);
  for (int i = 0; i < d; ++i)
    for (int j = i + 1; j < d; ++j) {
      const Mat C = alg.basis[i] * alg.basis[j] - alg.basis[j] * alg.basis[i];
      const RVec c = alg.coords(C);
      for (int k = 0; k < d; ++k) {
        alg.structure(i, j, k) = c[k];
        alg.structure(j, i, k) = -c[k];
      }
    }
  return alg;
}

RVec MVector::coords() const {
  const int nn = n();
  RVec c(2 * nn + 1);
  for (int j = 0; j < nn; ++j) {
    c[2 * j] = z[j].real();
    c[2 * j + 1] = z[j].imag();
  }
  c[2 * nn] = a.imag();
  return c;
}

MVector MVector::from_coords(const RVec& c) {
  const int nn = (static_cast<int>(c.size()) - 1) / 2;
  MVector v;
  v.z = CVec(nn);
  for (int j = 0; j < nn; ++j) v.z[j] = cd(c[2 * j], c[2 * j + 1]);
  v.a = cd(0.0, c[2 * nn]);
  return v;
}

double g_inner(const MVector& A, const MVector& B) {
  return (A.z.transpose() * B.z.conjugate()).value().real() -
         (A.a * B.a).real();
}

Mat ReductiveSplit::m_matrix(const MVector& v) const {
  Mat X = Mat::Zero(n + 1, n + 1);
  X.topLeftCorner(n, n) = (-v.a / static_cast<double>(n)) * Mat::Identity(n, n);
  X.col(n).head(n) = v.z;
  X.row(n).head(n) = -v.z.conjugate().transpose();
  X(n, n) = v.a;
  return X;
}

MVector ReductiveSplit::m_project(const Mat& X) const {
  MVector v;
  v.z = X.col(n).head(n);
  v.a = X(n, n);
  return v;
}

Mat ReductiveSplit::h_project(const Mat& X) const {
  MVector v = m_project(X);
  return X - m_matrix(v);
}

RVec ReductiveSplit::h_coords(const Mat& H) const {
  if (dim_h() == 0) return RVec::Zero(0);
  return hsub.coords(H.topLeftCorner(n, n));
}

ReductiveSplit reductive_split(int n) {
  if (n < 1) throw std::invalid_argument("reductive_split: need n >= 1");
  ReductiveSplit s;
  s.n = n;
  s.g = build_su(n + 1);
  if (n >= 2) {
    s.hsub = build_su(n);
    for (const Mat& B : s.hsub.basis) {
      Mat H = Mat::Zero(n + 1, n + 1);
      H.topLeftCorner(n, n) = B;
      s.h_basis.push_back(H);
    }
  }
  const cd I(0.0, 1.0);
  for (int j = 0; j < n; ++j) {
    MVector e;
    e.z = CVec::Zero(n);
    e.z[j] = 1.0;
    s.m_basis.push_back(s.m_matrix(e));
    e.z[j] = I;
    s.m_basis.push_back(s.m_matrix(e));
  }
  {
    MVector v;
    v.z = CVec::Zero(n);
    v.a = I;
    s.m_basis.push_back(s.m_matrix(v));
  }
  const int d = s.dim_m();
  const int dh = s.dim_h();
  s.gram = RMat::Identity(d, d);
  s.bracket_mm_m = Tensor3(d, d, d);
  s.bracket_mm_h = Tensor3(d, d, std::max(dh, 1));
  s.bracket_hm_m = Tensor3(std::max(dh, 1), d, d);
  for (int i = 0; i < d; ++i)
    for (int j = 0; j < d; ++j) {
      const Mat C = s.m_basis[i] * s.m_basis[j] - s.m_basis[j] * s.m_basis[i];
      const RVec mc = s.m_project(C).coords();
      for (int k = 0; k < d; ++k) s.bracket_mm_m(i, j, k) = mc[k];
      if (dh > 0) {
        const RVec hc = s.h_coords(s.h_project(C));
        for (int l = 0; l < dh; ++l) s.bracket_mm_h(i, j, l) = hc[l];
      }
    }
  for (int l = 0; l < dh; ++l)
    for (int i = 0; i < d; ++i) {
      const Mat C = s.h_basis[l] * s.m_basis[i] - s.m_basis[i] * s.h_basis[l];
      const RVec mc = s.m_project(C).coords();
      for (int k = 0; k < d; ++k) s.bracket_hm_m(l, i, k) = mc[k];
    }
  return s;
}

std::pair<MVector, RVec> bracket_m(const ReductiveSplit& split,
                                   const MVector& A, const MVector& B) {
  if (A.n() != split.n || B.n() != split.n)
    throw std::invalid_argument("bracket_m: dimension mismatch");
  const Mat C = split.m_matrix(A) * split.m_matrix(B) -
                split.m_matrix(B) * split.m_matrix(A);
  return {split.m_project(C), split.h_coords(split.h_project(C))};
}

}  // namespace homoconn
