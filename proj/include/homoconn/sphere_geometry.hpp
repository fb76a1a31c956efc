#pragma once

// ambient-space tensor fields: Sasakian tensors at arbitrary points, the
// quaternionic 3-Sasakian structure on S^7 with the Omega form, Theta and B,
// the octonion algebra and psi-hat on S^5, and the Grassmannian checks.

#include <cstdint>
#include <random>
#include <utility>
#include <vector>

#include "homoconn/invariant_solver.hpp"
#include "homoconn/lie_core.hpp"

namespace homoconn {

// real inner product on C^k = R^{2k}
double gre(const CVec& u, const CVec& v);

// seeded sampling (unitaries via QR of complex Gaussians, phase-corrected)
struct Sampler {
  explicit Sampler(std::uint64_t seed) : rng(seed) {}
  std::mt19937_64 rng;
  double gauss();
  CVec gaussian(int n);
  CVec random_unit(int n);                 // unit vector in C^n
  Mat random_su(int m);                    // Haar-ish element of SU(m)
  CVec random_tangent(const CVec& p);      // unit tangent vector at p
};

CVec tangent_project(const CVec& p, const CVec& v);
std::vector<CVec> tangent_basis(const CVec& p);  // orthonormal real basis

struct SasakiData {
  CVec xi;     // xi(p) = -i p
  double eta;  // eta(x) = g(x, xi)
  CVec psi;    // psi(x) = i x - eta(x) N
};
SasakiData sasaki_at(const CVec& p, const CVec& x);

// quaternionic structure on S^7 (ambient C^4), s in {1,2,3}
CVec jmul(const CVec& z);                           // conjugate-linear j
CVec quat_xi(const CVec& p, int s);
double quat_eta(const CVec& p, const CVec& x, int s);
CVec quat_psi(const CVec& p, const CVec& x, int s);

// Omega = eta2 ^ Phi2 - eta3 ^ Phi3 with
// (a ^ b)(X,Y,Z) = a(X)b(Y,Z) + a(Y)b(Z,X) + a(Z)b(X,Y)
double omega_eval(const CVec& p, const CVec& u, const CVec& v, const CVec& w);
// Theta(x,y) = g-dual of Omega(x,y,.); Theta~ = -psi1 o Theta
std::pair<CVec, CVec> theta_ops(const CVec& p, const CVec& x, const CVec& y);

struct GrassmannSummary {
  int trials = 0;
  int resamples = 0;
  double min_beta = 0.0;        // most negative beta seen
  double max_beta_imag = 0.0;
  double max_delta_err = 0.0;   // max |delta - 1|
};
GrassmannSummary grassmann_checks(std::uint64_t seed, int trials);
cd beta_invariant(const Mat& u);                     // u: 4x2 unitary columns
cd delta_invariant(const Mat& sigma, const CVec& x); // x = (x1,x2,0,0) unit
// unit x=(x1,x2,0,0) with sigma.x in D^perp(sigma.o); false when degenerate
bool constrained_x(const Mat& sigma, CVec& x_out);

// octonions over {1, e1..e7}
using Oct = Eigen::Matrix<double, 8, 1>;
Oct octonion_mul(const Oct& a, const Oct& b);
Oct oct_from_c3(const CVec& z, double x7 = 0.0);  // z1 e1 + z2 e2 + z3 e4 (+ x7 e7)
CVec c3_from_oct(const Oct& o, double* x7_out = nullptr);
// psi-hat on S^5 in C^3 coordinates: J(x) - eta(x) nu, J(X) = Im(N.X)
CVec psi_hat_at(const CVec& p, const CVec& x);

// origin bridge: m-coordinates <-> ambient tangent vectors at o = (0,...,0,1)
CVec origin(int n);
CVec ambient_from_m(int n, const RVec& coords);
RVec m_from_ambient(int n, const CVec& v);

// distance (max-norm after Frobenius least squares) from a 3-form to the span
// of the invariant torsion forms of the S^7 skew family
double torsion_span_distance_s7(const ReductiveSplit& split, const Tensor3& form);
// component tensor at o of eta1^d(eta1)+eta2^d(eta2)+eta3^d(eta3)
Tensor3 g2_torsion_form_at_o(const ReductiveSplit& split);
// false = the G2 form lies outside the invariant span (the expected verdict)
bool g2_form_membership(const ReductiveSplit& split, double* distance = nullptr);

}  // namespace homoconn
