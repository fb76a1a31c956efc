#include "homoconn/sphere_geometry.hpp"

#include "homoconn/connection_families.hpp"
#include "homoconn/nomizu_calculus.hpp"

#include <array>
#include <cmath>
#include <limits>
#include <stdexcept>

namespace homoconn {

namespace {
const cd I{0.0, 1.0};

// h(z,w) = sum_l z_l conj(w_l)
cd h(const CVec& z, const CVec& w) { return w.dot(z); }
}  // namespace

double gre(const CVec& u, const CVec& v) { return h(u, v).real(); }

double Sampler::gauss() {
  std::normal_distribution<double> dist(0.0, 1.0);
  return dist(rng);
}

CVec Sampler::gaussian(int n) {
  CVec v(n);
  for (int l = 0; l < n; ++l) v[l] = cd{gauss(), gauss()};
  return v;
}

CVec Sampler::random_unit(int n) {
  for (;;) {
    CVec v = gaussian(n);
    const double nrm = v.norm();
    if (nrm > 1e-8) return v / nrm;
  }
}

Mat Sampler::random_su(int m) {
  Mat a(m, m);
  for (int i = 0; i < m; ++i)
    for (int j = 0; j < m; ++j) a(i, j) = cd{gauss(), gauss()};
  Eigen::HouseholderQR<Mat> qr(a);
  Mat q = qr.householderQ();
  const Mat r = qr.matrixQR();
  for (int i = 0; i < m; ++i) {
    const cd rii = r(i, i);
    const double mag = std::abs(rii);
    if (mag > 1e-14) q.col(i) *= rii / mag;  // strip QR phase ambiguity
  }
  q.col(0) /= q.determinant();  // |det| = 1, so this lands in SU(m)
  return q;
}

CVec Sampler::random_tangent(const CVec& p) {
  for (;;) {
    CVec v = tangent_project(p, gaussian(static_cast<int>(p.size())));
    const double nrm = v.norm();
    if (nrm > 1e-8) return v / nrm;
  }
}

CVec tangent_project(const CVec& p, const CVec& v) {
  return v - gre(v, p) * p;
}

std::vector<CVec> tangent_basis(const CVec& p) {
  const int k = static_cast<int>(p.size());
  std::vector<CVec> basis;
  basis.reserve(2 * k - 1);
  for (int l = 0; l < 2 * k && static_cast<int>(basis.size()) < 2 * k - 1; ++l) {
    CVec v = CVec::Zero(k);
    v[l / 2] = (l % 2 == 0) ? cd{1.0, 0.0} : I;
    v = tangent_project(p, v);
    for (const CVec& b : basis) v -= gre(v, b) * b;
    const double nrm = v.norm();
    if (nrm > 1e-8) basis.push_back(v / nrm);
  }
  if (static_cast<int>(basis.size()) != 2 * k - 1)
    throw std::runtime_error("tangent_basis: degenerate point");
  return basis;
}

SasakiData sasaki_at(const CVec& p, const CVec& x) {
  SasakiData d;
  d.xi = -I * p;
  d.eta = gre(x, d.xi);
  d.psi = I * x - d.eta * p;
  return d;
}

CVec jmul(const CVec& z) {
  CVec w(4);
  w[0] = -std::conj(z[1]);
  w[1] = std::conj(z[0]);
  w[2] = -std::conj(z[3]);
  w[3] = std::conj(z[2]);
  return w;
}

namespace {
CVec lmul(const CVec& z, int s) {
  switch (s) {
    case 1: return I * z;
    case 2: return jmul(z);
    case 3: return I * jmul(z);  // k = ij
    default: throw std::invalid_argument("quaternionic index must be 1,2,3");
  }
}
}  // namespace

CVec quat_xi(const CVec& p, int s) { return -lmul(p, s); }

double quat_eta(const CVec& p, const CVec& x, int s) {
  return gre(x, quat_xi(p, s));
}

CVec quat_psi(const CVec& p, const CVec& x, int s) {
  return lmul(x, s) - quat_eta(p, x, s) * p;
}

double omega_eval(const CVec& p, const CVec& u, const CVec& v, const CVec& w) {
  auto term = [&](int s) {
    auto eta = [&](const CVec& x) { return quat_eta(p, x, s); };
    auto phi = [&](const CVec& x, const CVec& y) {
      return gre(x, quat_psi(p, y, s));
    };
    return eta(u) * phi(v, w) + eta(v) * phi(w, u) + eta(w) * phi(u, v);
  };
  return term(2) - term(3);
}

std::pair<CVec, CVec> theta_ops(const CVec& p, const CVec& x, const CVec& y) {
  CVec theta = CVec::Zero(p.size());
  for (const CVec& b : tangent_basis(p)) theta += omega_eval(p, x, y, b) * b;
  return {theta, -quat_psi(p, theta, 1)};
}

// ---- octonions ------------------------------------------------------------

namespace {
struct OctTable {
  int idx[8][8];
  double sgn[8][8];
  OctTable() {
    for (int i = 0; i < 8; ++i) {
      idx[0][i] = idx[i][0] = i;
      sgn[0][i] = sgn[i][0] = 1.0;
    }
    for (int i = 1; i < 8; ++i) {
      idx[i][i] = 0;
      sgn[i][i] = -1.0;
    }
    static constexpr int lines[7][3] = {{1, 2, 4}, {2, 3, 5}, {3, 4, 6},
                                        {4, 5, 7}, {5, 6, 1}, {6, 7, 2},
                                        {7, 1, 3}};
    for (const auto& l : lines)
      for (int r = 0; r < 3; ++r) {
        const int a = l[r], b = l[(r + 1) % 3], c = l[(r + 2) % 3];
        idx[a][b] = c;
        sgn[a][b] = 1.0;
        idx[b][a] = c;
        sgn[b][a] = -1.0;
      }
  }
};
const OctTable& oct_table() {
  static const OctTable t;
  return t;
}
}  // namespace

Oct octonion_mul(const Oct& a, const Oct& b) {
  const OctTable& t = oct_table();
  Oct out = Oct::Zero();
  for (int i = 0; i < 8; ++i)
    for (int j = 0; j < 8; ++j)
      out[t.idx[i][j]] += t.sgn[i][j] * a[i] * b[j];
  return out;
}

// z1 -> e1, e3; z2 -> e2, e6; z3 -> e4, e5
Oct oct_from_c3(const CVec& z, double x7) {
  Oct o = Oct::Zero();
  o[1] = z[0].real();
  o[3] = z[0].imag();
  o[2] = z[1].real();
  o[6] = z[1].imag();
  o[4] = z[2].real();
  o[5] = z[2].imag();
  o[7] = x7;
  return o;
}

CVec c3_from_oct(const Oct& o, double* x7_out) {
  CVec z(3);
  z[0] = cd{o[1], o[3]};
  z[1] = cd{o[2], o[6]};
  z[2] = cd{o[4], o[5]};
  if (x7_out) *x7_out = o[7];
  return z;
}

CVec psi_hat_at(const CVec& p, const CVec& x) {
  const Oct n = oct_from_c3(p);
  Oct j = octonion_mul(n, oct_from_c3(x));
  j[0] = 0.0;  // imaginary part; the real part is -<N,x> = 0 for tangent x
  const double eta = gre(x, CVec(-I * p));
  j[7] += eta;  // - eta(x) nu with nu = -e7
  double x7 = 0.0;
  CVec out = c3_from_oct(j, &x7);
  if (std::abs(x7) > 1e-9)
    throw std::runtime_error("psi_hat_at: result escapes T S^5");
  return out;
}

// ---- origin bridge ---------------------------------------------------------

CVec origin(int n) {
  CVec p = CVec::Zero(n + 1);
  p[n] = 1.0;
  return p;
}

CVec ambient_from_m(int n, const RVec& coords) {
  CVec v(n + 1);
  for (int l = 0; l < n; ++l) v[l] = cd{coords[2 * l], coords[2 * l + 1]};
  v[n] = cd{0.0, coords[2 * n]};
  return v;
}

RVec m_from_ambient(int n, const CVec& v) {
  RVec c(2 * n + 1);
  for (int l = 0; l < n; ++l) {
    c[2 * l] = v[l].real();
    c[2 * l + 1] = v[l].imag();
  }
  c[2 * n] = v[n].imag();
  return c;
}

// ---- Grassmannian checks ---------------------------------------------------

cd beta_invariant(const Mat& u) {
  Mat m(4, 4);
  m.col(0) = u.col(0);
  m.col(1) = jmul(u.col(0));
  m.col(2) = u.col(1);
  m.col(3) = jmul(u.col(1));
  return m.determinant();
}

bool constrained_x(const Mat& sigma, CVec& x_out) {
  const CVec o = origin(3);
  const CVec jso = jmul(sigma * o);
  cd c1 = h(sigma.col(0), jso);
  cd c2 = h(sigma.col(1), jso);
  const double nrm = std::sqrt(std::norm(c1) + std::norm(c2));
  if (nrm < 1e-8) return false;
  x_out = CVec::Zero(4);
  x_out[0] = -c2 / nrm;
  x_out[1] = c1 / nrm;
  return true;
}

cd delta_invariant(const Mat& sigma, const CVec& x) {
  const CVec o = origin(3);
  const CVec a = sigma * jmul(x);
  const CVec b = -(sigma * jmul(o));
  const CVec u = jmul(sigma * x);
  const CVec v = -jmul(sigma * o);
  return h(a, u) * h(b, v) - h(b, u) * h(a, v);
}

GrassmannSummary grassmann_checks(std::uint64_t seed, int trials) {
  Sampler samp(seed);
  GrassmannSummary s;
  s.trials = trials;
  s.min_beta = std::numeric_limits<double>::infinity();
  for (int t = 0; t < trials; ++t) {
    const cd beta = beta_invariant(samp.random_su(4).leftCols(2));
    s.min_beta = std::min(s.min_beta, beta.real());
    s.max_beta_imag = std::max(s.max_beta_imag, std::abs(beta.imag()));

    Mat sigma = samp.random_su(4);
    CVec x;
    int guard = 0;
    while (!constrained_x(sigma, x)) {
      ++s.resamples;
      sigma = samp.random_su(4);
      if (++guard > 64)
        throw std::runtime_error("grassmann_checks: persistent degeneracy");
    }
    s.max_delta_err =
        std::max(s.max_delta_err, std::abs(delta_invariant(sigma, x) - 1.0));
  }
  return s;
}

// ---- invariant torsion-form span -------------------------------------------

double torsion_span_distance_s7(const ReductiveSplit& split,
                                const Tensor3& form) {
  if (split.n != 3)
    throw std::invalid_argument("torsion_span_distance_s7 needs n=3");
  const int d = split.dim_m();
  RMat a(d * d * d, 3);
  const std::array<std::pair<double, cd>, 3> dirs = {
      {{1.0, cd{0.0, 0.0}}, {0.0, cd{1.0, 0.0}}, {0.0, cd{0.0, 1.0}}}};
  for (int c = 0; c < 3; ++c) {
    const BilinearMap alpha =
        skew_family(SphereClass::s7, dirs[c].first, dirs[c].second, split);
    a.col(c) = torsion_form(split, torsion(split, alpha)).first.flat();
  }
  const RVec b = form.flat();
  const RVec coeff = a.colPivHouseholderQr().solve(b);
  return (a * coeff - b).lpNorm<Eigen::Infinity>();
}

Tensor3 g2_torsion_form_at_o(const ReductiveSplit& split) {
  if (split.n != 3)
    throw std::invalid_argument("g2_torsion_form_at_o needs n=3");
  const int d = split.dim_m();
  const CVec p = origin(3);
  std::vector<CVec> e(d);
  for (int i = 0; i < d; ++i) {
    RVec c = RVec::Zero(d);
    c[i] = 1.0;
    e[i] = ambient_from_m(3, c);
  }
  Tensor3 phi(d, d, d);
  for (int s = 1; s <= 3; ++s) {
    RVec eta(d);
    RMat f(d, d);  // d(eta_s) = 2 Phi_s
    for (int i = 0; i < d; ++i) {
      eta[i] = quat_eta(p, e[i], s);
      for (int j = 0; j < d; ++j) f(i, j) = 2.0 * gre(e[i], quat_psi(p, e[j], s));
    }
    for (int i = 0; i < d; ++i)
      for (int j = 0; j < d; ++j)
        for (int k = 0; k < d; ++k)
          phi(i, j, k) +=
              eta[i] * f(j, k) + eta[j] * f(k, i) + eta[k] * f(i, j);
  }
  return phi;
}

bool g2_form_membership(const ReductiveSplit& split, double* distance) {
  const double dist = torsion_span_distance_s7(split, g2_torsion_form_at_o(split));
  if (distance) *distance = dist;
  return dist < 1e-8;
}

}  // namespace homoconn
