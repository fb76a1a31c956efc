#pragma once

// su(m) with explicit real bases and structure constants, and the reductive
// decomposition su(n+1) = su(n) + m used everywhere else.

#include <Eigen/Dense>
#include <complex>
#include <utility>
#include <vector>

namespace homoconn {

using cd = std::complex<double>;
using Mat = Eigen::MatrixXcd;
using CVec = Eigen::VectorXcd;
using RVec = Eigen::VectorXd;
using RMat = Eigen::MatrixXd;

// dense rank-3 real array, row-major
class Tensor3 {
 public:
  Tensor3() = default;
  Tensor3(int d0, int d1, int d2)
      : d0_(d0), d1_(d1), d2_(d2), v_(Eigen::VectorXd::Zero(d0 * d1 * d2)) {}
  double& operator()(int i, int j, int k) { return v_[(i * d1_ + j) * d2_ + k]; }
  double operator()(int i, int j, int k) const { return v_[(i * d1_ + j) * d2_ + k]; }
  int d0() const { return d0_; }
  int d1() const { return d1_; }
  int d2() const { return d2_; }
  const Eigen::VectorXd& flat() const { return v_; }
  Eigen::VectorXd& flat() { return v_; }

 private:
  int d0_ = 0, d1_ = 0, d2_ = 0;
  Eigen::VectorXd v_;
};

struct MatrixLieAlgebra {
  int m = 0;                    // matrix size
  std::vector<Mat> basis;       // m^2-1 anti-Hermitian traceless matrices
  Tensor3 structure;            // [b_i,b_j] = sum_k f(i,j,k) b_k

  int dim() const { return static_cast<int>(basis.size()); }
  RVec coords(const Mat& A) const;          // expand A in the basis
  Mat from_coords(const RVec& c) const;

  RMat basis_pinv;              // least-squares expansion, precomputed
};

MatrixLieAlgebra build_su(int m);   // rejects m < 2

// element of m in (z,a) coordinates; a purely imaginary.
// real coords: (Re z1, Im z1, ..., Re zn, Im zn, s) with a = i s.
struct MVector {
  CVec z;
  cd a{0.0, 0.0};

  int n() const { return static_cast<int>(z.size()); }
  RVec coords() const;
  static MVector from_coords(const RVec& c);
};

struct ReductiveSplit {
  int n = 0;                    // sphere S^{2n+1}
  MatrixLieAlgebra g;           // su(n+1)
  MatrixLieAlgebra hsub;        // su(n) used for h-coordinates (m>=2 only)
  std::vector<Mat> h_basis;     // su(n) embedded top-left, empty for n=1
  std::vector<Mat> m_basis;     // 2n+1 matrices, canonical orthonormal list
  Tensor3 bracket_mm_m;         // pi_m[m_i,m_j]
  Tensor3 bracket_mm_h;         // pi_h[m_i,m_j]
  Tensor3 bracket_hm_m;         // [h_l,m_i]  (lands in m)
  RMat gram;                    // identity in the canonical basis

  int dim_m() const { return 2 * n + 1; }
  int dim_h() const { return static_cast<int>(h_basis.size()); }

  Mat m_matrix(const MVector& v) const;       // block embedding of (z,a)
  MVector m_project(const Mat& X) const;      // pi_m in (z,a) coordinates
  Mat h_project(const Mat& X) const;          // pi_h as a matrix
  RVec h_coords(const Mat& H) const;          // expand pi_h output in h_basis
};

ReductiveSplit reductive_split(int n);        // n >= 1

// matrix commutator decomposed into the two subspaces
std::pair<MVector, RVec> bracket_m(const ReductiveSplit& split,
                                   const MVector& A, const MVector& B);

double g_inner(const MVector& A, const MVector& B);  // Re(z^t conj(w)) - ab

}  // namespace homoconn
