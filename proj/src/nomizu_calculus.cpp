#include "homoconn/nomizu_calculus.hpp"

namespace homoconn {

TorsionTensor torsion(const ReductiveSplit& s, const BilinearMap& alpha) {
  const int d = s.dim_m();
  TorsionTensor T{Tensor3(d, d, d)};
  for (int i = 0; i < d; ++i)
    for (int j = 0; j < d; ++j)
      for (int k = 0; k < d; ++k)
        T.t(i, j, k) =
            alpha.c(i, j, k) - alpha.c(j, i, k) - s.bracket_mm_m(i, j, k);
  return T;
}

CurvatureTensor curvature(const ReductiveSplit& s, const BilinearMap& alpha) {
  const int d = s.dim_m();
  const int dh = s.dim_h();
  CurvatureTensor R{Tensor4(d)};
  for (int i = 0; i < d; ++i)
    for (int j = 0; j < d; ++j)
      for (int k = 0; k < d; ++k)
        for (int l = 0; l < d; ++l) {
          double v = 0.0;
          for (int p = 0; p < d; ++p)
            v += alpha.c(j, k, p) * alpha.c(i, p, l) -
                 alpha.c(i, k, p) * alpha.c(j, p, l) -
                 s.bracket_mm_m(i, j, p) * alpha.c(p, k, l);
          for (int q = 0; q < dh; ++q)
            v -= s.bracket_mm_h(i, j, q) * s.bracket_hm_m(q, k, l);
          R.r(i, j, k, l) = v;
        }
  return R;
}

// Levi-Civita map of the invariant metric, straight from the split:
// alpha_g(X,Y) = 1/2 [X,Y]_m + U(X,Y), 2g(U(X,Y),Z) = g([Z,X]_m,Y) + g(X,[Z,Y]_m)
BilinearMap levi_civita_alpha(const ReductiveSplit& s) {
  const int d = s.dim_m();
  BilinearMap a(d);
  for (int i = 0; i < d; ++i)
    for (int j = 0; j < d; ++j)
      for (int k = 0; k < d; ++k) {
        double u = 0.0;  // g(U(e_i,e_j), e_k); gram is the identity
        for (int p = 0; p < d; ++p)
          u += s.bracket_mm_m(k, i, p) * s.gram(p, j) +
               s.bracket_mm_m(k, j, p) * s.gram(p, i);
        a.c(i, j, k) = 0.5 * s.bracket_mm_m(i, j, k) + 0.5 * u;
      }
  return a;
}

std::pair<Tensor3, bool> torsion_form(const ReductiveSplit& s,
                                      const TorsionTensor& T) {
  const int d = s.dim_m();
  Tensor3 w(d, d, d);
  for (int i = 0; i < d; ++i)
    for (int j = 0; j < d; ++j)
      for (int k = 0; k < d; ++k) {
        double v = 0.0;
        for (int l = 0; l < d; ++l) v += T.t(i, j, l) * s.gram(l, k);
        w(i, j, k) = v;
      }
  bool skew = true;  // antisymmetric in (i,j) by construction
  for (int i = 0; i < d && skew; ++i)
    for (int j = 0; j < d && skew; ++j)
      for (int k = 0; k < d && skew; ++k)
        if (std::abs(w(i, j, k) + w(i, k, j)) > 1e-9) skew = false;
  return {w, skew};
}

namespace {
RMat ricci_of(const CurvatureTensor& R, const RMat& gram) {
  const int d = R.r.dim();
  RMat ric = RMat::Zero(d, d);
  for (int a = 0; a < d; ++a)
    for (int b = 0; b < d; ++b) {
      double v = 0.0;
      for (int i = 0; i < d; ++i)
        for (int l = 0; l < d; ++l) v += R.r(i, a, b, l) * gram(l, i);
      ric(a, b) = v;
    }
  return ric;
}
}  // namespace

ConnectionReport curvature_invariants(const ReductiveSplit& s,
                                      const BilinearMap& alpha) {
  const int d = s.dim_m();
  ConnectionReport rep;
  const TorsionTensor T = torsion(s, alpha);
  const CurvatureTensor R = curvature(s, alpha);
  rep.ricci = ricci_of(R, s.gram);
  rep.sym_ricci = 0.5 * (rep.ricci + rep.ricci.transpose());
  rep.scalar = rep.ricci.trace();
  rep.curvature_max = R.r.flat().lpNorm<Eigen::Infinity>();
  rep.torsion_max = T.t.flat().lpNorm<Eigen::Infinity>();

  rep.s_tensor = RMat::Zero(d, d);
  for (int a = 0; a < d; ++a)
    for (int b = 0; b < d; ++b) {
      double v = 0.0;
      for (int j = 0; j < d; ++j)
        for (int k = 0; k < d; ++k)
          for (int l = 0; l < d; ++l)
            v += T.t(j, a, k) * s.gram(k, l) * T.t(j, b, l);
      rep.s_tensor(a, b) = v;
    }
  rep.torsion_norm_sq = 0.0;
  for (int i = 0; i < d; ++i)
    for (int j = 0; j < d; ++j)
      for (int k = 0; k < d; ++k)
        for (int l = 0; l < d; ++l)
          rep.torsion_norm_sq += T.t(i, j, k) * s.gram(k, l) * T.t(i, j, l);
  rep.torsion_norm_sq /= 6.0;

  // second route via the Riemannian Ricci of the same split
  const CurvatureTensor Rg = curvature(s, levi_civita_alpha(s));
  rep.sym_ricci_indirect = ricci_of(Rg, s.gram) - 0.25 * rep.s_tensor;
  rep.sym_ricci_route_gap =
      (rep.sym_ricci - rep.sym_ricci_indirect).cwiseAbs().maxCoeff();

  rep.is_metric = metric_residual(s, alpha) < 1e-9;
  const auto [w, skew] = torsion_form(s, T);
  rep.is_skew_torsion = rep.is_metric && skew;
  rep.einstein_residual =
      (rep.sym_ricci - (rep.scalar / d) * s.gram).cwiseAbs().maxCoeff();
  rep.is_einstein = rep.is_skew_torsion && rep.einstein_residual < 1e-8;
  return rep;
}

bool einstein_check(const ConnectionReport& report, int dim, double tol,
                    const RMat& gram) {
  if (!report.is_skew_torsion) return false;  // not applicable
  return (report.sym_ricci - (report.scalar / dim) * gram)
             .cwiseAbs()
             .maxCoeff() < tol;
}

}  // namespace homoconn
