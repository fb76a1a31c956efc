#include <doctest.h>

#include <random>

#include "homoconn/lie_core.hpp"
#include "homoconn/report.hpp"

using namespace homoconn;

namespace {

MVector mvec(CVec z, cd a) {
  MVector v;
  v.z = std::move(z);
  v.a = a;
  return v;
}

MVector random_mvector(int n, std::mt19937_64& rng) {
  std::normal_distribution<double> gauss;
  CVec z(n);
  for (int j = 0; j < n; ++j) z[j] = cd{gauss(rng), gauss(rng)};
  return mvec(std::move(z), cd{0.0, gauss(rng)});
}

}  // namespace

TEST_CASE("build_su: dimensions and basis properties") {
  CHECK(build_su(2).dim() == 3);
  CHECK(build_su(4).dim() == 15);
  CHECK_THROWS_AS(build_su(1), std::invalid_argument);

  for (int m : {2, 3, 4}) {
    const MatrixLieAlgebra g = build_su(m);
    for (const Mat& A : g.basis) {
      CHECK((A + A.adjoint()).cwiseAbs().maxCoeff() < 1e-12);
      CHECK(std::abs(A.trace()) < 1e-12);
    }
    // linear independence: coordinate round trip on the basis itself
    for (int i = 0; i < g.dim(); ++i) {
      RVec c = g.coords(g.basis[i]);
      RVec e = RVec::Zero(g.dim());
      e[i] = 1.0;
      CHECK((c - e).lpNorm<Eigen::Infinity>() < 1e-10);
    }
  }
}

TEST_CASE("build_su: structure constants reproduce matrix commutators") {
  const MatrixLieAlgebra g = build_su(3);
  const int d = g.dim();
  std::mt19937_64 rng(2024);
  std::normal_distribution<double> gauss;
  for (int trial = 0; trial < 10; ++trial) {
    RVec a(d), b(d);
    for (int i = 0; i < d; ++i) {
      a[i] = gauss(rng);
      b[i] = gauss(rng);
    }
    const Mat A = g.from_coords(a), B = g.from_coords(b);
    RVec c = RVec::Zero(d);
    for (int i = 0; i < d; ++i)
      for (int j = 0; j < d; ++j)
        for (int k = 0; k < d; ++k) c[k] += a[i] * b[j] * g.structure(i, j, k);
    CHECK((Mat(A * B - B * A) - g.from_coords(c)).cwiseAbs().maxCoeff() <
          1e-10);
  }
}

TEST_CASE("build_su: antisymmetry and Jacobi identity of structure constants") {
  for (int m : {2, 3, 4}) {
    const MatrixLieAlgebra g = build_su(m);
    const int d = g.dim();
    double anti = 0.0;
    for (int i = 0; i < d; ++i)
      for (int j = 0; j < d; ++j)
        for (int k = 0; k < d; ++k)
          anti = std::max(anti,
                          std::abs(g.structure(i, j, k) + g.structure(j, i, k)));
    CHECK(anti < 1e-12);
    CHECK(jacobi_residual(g.structure) < 1e-10);
  }
}

TEST_CASE("reductive_split: dimensions and gram") {
  const ReductiveSplit s4 = reductive_split(4);
  CHECK(s4.dim_h() == 15);
  CHECK(s4.dim_m() == 9);
  CHECK((s4.gram - RMat::Identity(9, 9)).cwiseAbs().maxCoeff() < 1e-12);

  const ReductiveSplit s1 = reductive_split(1);
  CHECK(s1.dim_h() == 0);
  CHECK(s1.dim_m() == 3);
  // no isotropy: the h-component of every bracket vanishes identically
  if (s1.bracket_mm_h.flat().size() > 0)
    CHECK(s1.bracket_mm_h.flat().lpNorm<Eigen::Infinity>() == 0.0);
}

TEST_CASE("reductive_split: m-basis block shape and h-projection") {
  for (int n : {2, 3, 4}) {
    const ReductiveSplit s = reductive_split(n);
    for (const Mat& M : s.m_basis) {
      // top-left block is -(a/n) I_n with a the bottom-right entry
      const cd a = M(n, n);
      const Mat tl = M.topLeftCorner(n, n);
      CHECK((tl + (a / static_cast<double>(n)) * Mat::Identity(n, n))
                .cwiseAbs()
                .maxCoeff() < 1e-12);
      CHECK(s.h_project(M).cwiseAbs().maxCoeff() < 1e-12);
    }
  }
}

TEST_CASE("reductive_split: [h,m] stays in m and h acts by isometries") {
  for (int n : {2, 3}) {
    const ReductiveSplit s = reductive_split(n);
    const int d = s.dim_m();
    for (int l = 0; l < s.dim_h(); ++l)
      for (int i = 0; i < d; ++i) {
        const Mat hm = s.h_basis[l] * s.m_basis[i] - s.m_basis[i] * s.h_basis[l];
        // projection residual: reconstruct from the bracket table
        Mat rec = Mat::Zero(n + 1, n + 1);
        for (int k = 0; k < d; ++k) rec += s.bracket_hm_m(l, i, k) * s.m_basis[k];
        CHECK((hm - rec).cwiseAbs().maxCoeff() < 1e-10);
      }
    // g([h,A],B) + g(A,[h,B]) = 0 on all basis triples
    double worst = 0.0;
    for (int l = 0; l < s.dim_h(); ++l)
      for (int i = 0; i < d; ++i)
        for (int j = 0; j < d; ++j) {
          double v = 0.0;
          for (int k = 0; k < d; ++k)
            v += s.bracket_hm_m(l, i, k) * s.gram(k, j) +
                 s.bracket_hm_m(l, j, k) * s.gram(k, i);
          worst = std::max(worst, std::abs(v));
        }
    CHECK(worst < 1e-10);
  }
}

TEST_CASE("reductive_split: h preserves the splitting m = m1 + m2") {
  for (int n : {2, 3}) {
    const ReductiveSplit s = reductive_split(n);
    const int d = s.dim_m();
    const int vert = d - 1;  // index of (0,i)
    for (int l = 0; l < s.dim_h(); ++l) {
      // [h, m2] = 0
      for (int k = 0; k < d; ++k)
        CHECK(std::abs(s.bracket_hm_m(l, vert, k)) < 1e-12);
      // [h, m1] has no vertical component
      for (int i = 0; i < vert; ++i)
        CHECK(std::abs(s.bracket_hm_m(l, i, vert)) < 1e-12);
    }
  }
}

TEST_CASE("MVector: coordinate round trips and norm") {
  std::mt19937_64 rng(7);
  for (int n : {1, 2, 3, 4}) {
    const ReductiveSplit s = reductive_split(n);
    for (int trial = 0; trial < 5; ++trial) {
      const MVector v = random_mvector(n, rng);
      // coords <-> (z,a)
      const MVector w = MVector::from_coords(v.coords());
      CHECK((w.z - v.z).norm() < 1e-12);
      CHECK(std::abs(w.a - v.a) < 1e-12);
      // coords <-> matrix
      const MVector u = s.m_project(s.m_matrix(v));
      CHECK((u.coords() - v.coords()).lpNorm<Eigen::Infinity>() < 1e-12);
      // g(v,v) = |z|^2 + s^2 with a = i s
      const double ss = v.a.imag();
      CHECK(std::abs(g_inner(v, v) - (v.z.squaredNorm() + ss * ss)) < 1e-12);
    }
  }
}

TEST_CASE("bracket_m: decomposition is exact") {
  std::mt19937_64 rng(11);
  for (int n : {1, 2, 3}) {
    const ReductiveSplit s = reductive_split(n);
    for (int trial = 0; trial < 5; ++trial) {
      const MVector A = random_mvector(n, rng);
      const MVector B = random_mvector(n, rng);
      const auto [m_part, h_part] = bracket_m(s, A, B);
      Mat rec = s.m_matrix(m_part);
      for (int l = 0; l < s.dim_h(); ++l) rec += h_part[l] * s.h_basis[l];
      const Mat comm = s.m_matrix(A) * s.m_matrix(B) - s.m_matrix(B) * s.m_matrix(A);
      CHECK((comm - rec).cwiseAbs().maxCoeff() < 1e-10);
    }
  }
}

TEST_CASE("bracket_m: special values") {
  std::mt19937_64 rng(13);
  // [A,A] = 0
  for (int n : {1, 2, 3}) {
    const ReductiveSplit s = reductive_split(n);
    const MVector A = random_mvector(n, rng);
    const auto [m_part, h_part] = bracket_m(s, A, A);
    CHECK(m_part.coords().lpNorm<Eigen::Infinity>() < 1e-12);
    if (h_part.size() > 0) CHECK(h_part.lpNorm<Eigen::Infinity>() < 1e-12);
  }
  // [(e1,0),(0,i)]: m-part proportional to (i e1, 0) with coefficient (n+1)/n
  for (int n : {2, 3, 4}) {
    const ReductiveSplit s = reductive_split(n);
    CVec e1 = CVec::Zero(n);
    e1[0] = 1.0;
    const MVector A = mvec(e1, 0.0);
    const MVector B = mvec(CVec::Zero(n), cd{0.0, 1.0});
    const auto [m_part, h_part] = bracket_m(s, A, B);
    CHECK(std::abs(m_part.a) < 1e-12);
    const cd expected = cd{0.0, (n + 1.0) / n};
    const double direct = (m_part.z - expected * e1).norm();
    const double flipped = (m_part.z + expected * e1).norm();
    CHECK(std::min(direct, flipped) < 1e-12);
    if (h_part.size() > 0) {
      // the commutator of a horizontal and the vertical direction is pure m
      CHECK(h_part.lpNorm<Eigen::Infinity>() < 1e-10);
    }
  }
  // n=1: no h-part ever
  {
    const ReductiveSplit s = reductive_split(1);
    for (int trial = 0; trial < 5; ++trial) {
      const MVector A = random_mvector(1, rng);
      const MVector B = random_mvector(1, rng);
      const auto [m_part, h_part] = bracket_m(s, A, B);
      CHECK(h_part.size() == 0);
    }
  }
}

TEST_CASE("bracket_m: n=3 m-projection matches (4/3)(alpha1-beta1)-2gamma1") {
  const ReductiveSplit s = reductive_split(3);
  std::mt19937_64 rng(17);
  for (int trial = 0; trial < 10; ++trial) {
    const MVector A = random_mvector(3, rng);
    const MVector B = random_mvector(3, rng);
    const auto [m_part, h_part] = bracket_m(s, A, B);
    const cd herm = (A.z.conjugate().transpose() * B.z).value();
    MVector expected;
    expected.z = (4.0 / 3.0) * (B.a * A.z - A.a * B.z);
    expected.a = cd{0.0, -2.0 * herm.imag()};
    CHECK((m_part.coords() - expected.coords()).lpNorm<Eigen::Infinity>() <
          1e-10);
  }
}
