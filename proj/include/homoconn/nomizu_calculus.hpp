#pragma once

// torsion, curvature and derived invariants of a connection given by its
// bilinear map, all at the origin tangent space.

#include "homoconn/invariant_solver.hpp"
#include "homoconn/lie_core.hpp"

namespace homoconn {

struct TorsionTensor {
  Tensor3 t;  // T(e_i,e_j) = sum_k t(i,j,k) e_k, antisymmetric in (i,j)
};

class Tensor4 {
 public:
  Tensor4() = default;
  Tensor4(int d) : d_(d), v_(Eigen::VectorXd::Zero(d * d * d * d)) {}
  double& operator()(int i, int j, int k, int l) {
    return v_[((i * d_ + j) * d_ + k) * d_ + l];
  }
  double operator()(int i, int j, int k, int l) const {
    return v_[((i * d_ + j) * d_ + k) * d_ + l];
  }
  int dim() const { return d_; }
  const Eigen::VectorXd& flat() const { return v_; }

 private:
  int d_ = 0;
  Eigen::VectorXd v_;
};

struct CurvatureTensor {
  Tensor4 r;  // R(e_i,e_j)e_k = sum_l r(i,j,k,l) e_l
};

struct ConnectionReport {
  RMat ricci;            // Ric(A,B) = sum_i g(R(e_i,A)B, e_i)
  RMat sym_ricci;        // 1/2 (Ric + Ric^T)
  RMat sym_ricci_indirect;  // Ric^g - (1/4) S, the second route
  double sym_ricci_route_gap = 0.0;
  double scalar = 0.0;
  RMat s_tensor;         // S(X,Y) = sum_j g(T(e_j,X),T(e_j,Y))
  double torsion_norm_sq = 0.0;  // (1/6) sum g(T(e_i,e_j),T(e_i,e_j))
  bool is_metric = false;
  bool is_skew_torsion = false;
  bool is_einstein = false;      // meaningful only when is_skew_torsion
  double einstein_residual = 0.0;
  double curvature_max = 0.0;    // max |R| component
  double torsion_max = 0.0;
};

// Levi-Civita map of the invariant metric, derived from the split alone
BilinearMap levi_civita_alpha(const ReductiveSplit& split);

TorsionTensor torsion(const ReductiveSplit& split, const BilinearMap& alpha);
CurvatureTensor curvature(const ReductiveSplit& split, const BilinearMap& alpha);
ConnectionReport curvature_invariants(const ReductiveSplit& split,
                                      const BilinearMap& alpha);
bool einstein_check(const ConnectionReport& report, int dim, double tol,
                    const RMat& gram);
// torsion 3-form components w(i,j,k) = g(T(e_i,e_j),e_k)
std::pair<Tensor3, bool> torsion_form(const ReductiveSplit& split,
                                      const TorsionTensor& T);

}  // namespace homoconn
