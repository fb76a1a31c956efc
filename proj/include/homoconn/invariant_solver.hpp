#pragma once

// h-invariant bilinear maps on m as an SVD nullspace, plus the metric and
// skew-torsion cuts and span certification against closed-form bases.

#include <string>
#include <vector>

#include "homoconn/lie_core.hpp"

namespace homoconn {

struct BilinearMap {
  Tensor3 c;  // alpha(e_i,e_j) = sum_k c(i,j,k) e_k

  BilinearMap() = default;
  explicit BilinearMap(int d) : c(d, d, d) {}
  int dim() const { return c.d0(); }
  RVec eval(const RVec& x, const RVec& y) const;
  MVector eval(const MVector& x, const MVector& y) const;
};

struct MapSpace {
  std::vector<BilinearMap> basis;  // orthonormal under the Frobenius pairing
  std::vector<std::string> labels;
  double tolerance = 0.0;

  int dim() const { return static_cast<int>(basis.size()); }
};

// nullspace of the equivariance system [h,a(A,B)] = a([h,A],B) + a(A,[h,B])
MapSpace invariant_bilinear_basis(const ReductiveSplit& split);

// maps with alpha(C,.) skew-adjoint for g, for every C
MapSpace metric_subspace(const MapSpace& space, const ReductiveSplit& split);

// differences alpha - alpha_lc that are antisymmetric (totally skew torsion)
MapSpace skew_torsion_subspace(const MapSpace& metric_space,
                               const ReductiveSplit& split,
                               const BilinearMap& alpha_lc);

bool span_equal(const MapSpace& a, const MapSpace& b, double tol);

// max residual of the equivariance equations for one map
double equivariance_residual(const ReductiveSplit& split, const BilinearMap& alpha);
// max residual of the metric criterion
double metric_residual(const ReductiveSplit& split, const BilinearMap& alpha);
// distance from alpha to the span of a MapSpace (Frobenius least squares,
// reported in max-norm of the residual tensor)
double span_distance(const MapSpace& space, const BilinearMap& alpha);

// orthonormal basis of the nullspace of A, canonicalized by RREF with
// largest-pivot tie-breaking; relative singular value threshold rel_tol
RMat nullspace(const RMat& A, int cols, double rel_tol = 1e-9);

}  // namespace homoconn
