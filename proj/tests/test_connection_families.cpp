#include <doctest.h>

#include <random>

#include "homoconn/connection_families.hpp"
#include "homoconn/nomizu_calculus.hpp"

using namespace homoconn;

namespace {

MVector mvec(CVec z, cd a) {
  MVector v;
  v.z = std::move(z);
  v.a = a;
  return v;
}

CVec unit(int n, int j) {
  CVec e = CVec::Zero(n);
  e[j] = 1.0;
  return e;
}

const cd I{0.0, 1.0};

double map_gap(const BilinearMap& a, const BilinearMap& b) {
  return (a.c.flat() - b.c.flat()).lpNorm<Eigen::Infinity>();
}

MVector random_mvector(int n, std::mt19937_64& rng) {
  std::normal_distribution<double> gauss;
  MVector v;
  v.z = CVec(n);
  for (int j = 0; j < n; ++j) v.z[j] = cd{gauss(rng), gauss(rng)};
  v.a = cd{0.0, gauss(rng)};
  return v;
}

}  // namespace

TEST_CASE("basis_map: pointwise values") {
  const ReductiveSplit s4 = reductive_split(4);
  // delta((0,i),(0,i)) = (0,-i)
  {
    const BilinearMap d = basis_map("delta", s4);
    const MVector v = mvec(CVec::Zero(4), I);
    const MVector out = d.eval(v, v);
    CHECK(out.z.norm() < 1e-12);
    CHECK(std::abs(out.a + I) < 1e-12);
  }
  // gamma1((e1,0),(i e1,0)) = (0,i)
  {
    const BilinearMap g1 = basis_map("gamma1", s4);
    const MVector out = g1.eval(mvec(unit(4, 0), 0.0), mvec(I * unit(4, 0), 0.0));
    CHECK(out.z.norm() < 1e-12);
    CHECK(std::abs(out.a - I) < 1e-12);
  }
  // alpha1((z,a),(w,b)) = (bz, 0)
  {
    const BilinearMap a1 = basis_map("alpha1", s4);
    const MVector out = a1.eval(mvec(unit(4, 1), cd{0.0, 0.5}),
                                mvec(unit(4, 2), cd{0.0, -2.0}));
    CHECK((out.z - cd{0.0, -2.0} * unit(4, 1)).norm() < 1e-12);
    CHECK(std::abs(out.a) < 1e-12);
  }
}

TEST_CASE("basis_map: eps1 is the conjugate cross product") {
  const ReductiveSplit s7 = reductive_split(3);
  const BilinearMap e1m = basis_map("eps1", s7);
  // eps1((e1,0),(e2,0)) = (e3,0)
  const MVector out = e1m.eval(mvec(unit(3, 0), 0.0), mvec(unit(3, 1), 0.0));
  CHECK((out.z - unit(3, 2)).norm() < 1e-12);
  CHECK(std::abs(out.a) < 1e-12);
  // determinant oracle: g(eps1((z,0),(w,0)), (u,0)) = Re det(z|w|u)
  std::mt19937_64 rng(2024);
  for (int trial = 0; trial < 10; ++trial) {
    const MVector x = random_mvector(3, rng);
    const MVector y = random_mvector(3, rng);
    const MVector u = random_mvector(3, rng);
    MVector xh = mvec(x.z, 0.0), yh = mvec(y.z, 0.0), uh = mvec(u.z, 0.0);
    Mat det3(3, 3);
    det3.col(0) = x.z;
    det3.col(1) = y.z;
    det3.col(2) = u.z;
    const double got = g_inner(e1m.eval(xh, yh), uh);
    CHECK(std::abs(got - det3.determinant().real()) < 1e-10);
  }
}

TEST_CASE("basis_map: invalid names and dimensions are rejected") {
  const ReductiveSplit s4 = reductive_split(4);
  CHECK_THROWS_AS(basis_map("eps1", s4), std::invalid_argument);
  CHECK_THROWS_AS(basis_map("alphahat1", s4), std::invalid_argument);
  CHECK_THROWS_AS(basis_map("nonsense", s4), std::invalid_argument);
}

TEST_CASE("family_alpha: Levi-Civita parameters per class") {
  // general family at q=1, t=-1/n is alpha1 - gamma1 - (1/n) beta1 = alpha_g
  for (int n : {2, 3, 4, 5}) {
    const ReductiveSplit split = reductive_split(n);
    FamilyParams p;
    p.sphere_class = SphereClass::general_n;
    p.q1 = cd{1.0, 0.0};
    p.t = -1.0 / n;
    const BilinearMap fam = family_alpha(p, split);
    BilinearMap closed(split.dim_m());
    closed.c.flat() = basis_map("alpha1", split).c.flat() -
                      basis_map("gamma1", split).c.flat() -
                      (1.0 / n) * basis_map("beta1", split).c.flat();
    CHECK(map_gap(fam, closed) < 1e-12);
    CHECK(map_gap(fam, levi_civita_alpha(split)) < 1e-10);
  }
  // s7 and s5 families reduce to Levi-Civita at the quoted parameters
  {
    const ReductiveSplit split = reductive_split(3);
    FamilyParams p;
    p.sphere_class = SphereClass::s7;
    p.q1 = cd{1.0, 0.0};
    p.t = -1.0 / 3.0;
    CHECK(torsion(split, family_alpha(p, split))
              .t.flat()
              .lpNorm<Eigen::Infinity>() < 1e-10);
  }
  {
    const ReductiveSplit split = reductive_split(2);
    FamilyParams p;
    p.sphere_class = SphereClass::s5;
    p.q1 = cd{1.0, 0.0};
    p.t = -0.5;
    CHECK(torsion(split, family_alpha(p, split))
              .t.flat()
              .lpNorm<Eigen::Infinity>() < 1e-10);
  }
}

TEST_CASE("family_alpha: class/n mismatches are rejected") {
  const ReductiveSplit s4 = reductive_split(4);
  FamilyParams p;
  p.sphere_class = SphereClass::s7;
  CHECK_THROWS_AS(family_alpha(p, s4), std::invalid_argument);
  CHECK_THROWS_AS(invariant_family_alpha(s4, 1.0, 0.0, 0.0, cd{1.0, 0.0}, 0.0),
                  std::invalid_argument);
  CHECK_THROWS_AS(
      skew_family(SphereClass::general_n, 1.0, cd{1.0, 0.0}, s4),
      std::invalid_argument);
}

TEST_CASE("named_connection: natural connection") {
  for (int n : {2, 3}) {
    const ReductiveSplit split = reductive_split(n);
    const BilinearMap nat = named_connection(NamedConnection::natural, split);
    BilinearMap half(split.dim_m());
    half.c.flat() = 0.5 * split.bracket_mm_m.flat();
    CHECK(map_gap(nat, half) < 1e-12);
    // equals the invariant family at q1=-q2=(n+1)/(2n), t=0, q3=-1
    const double c = (n + 1.0) / (2.0 * n);
    const BilinearMap fam =
        invariant_family_alpha(split, c, -c, -1.0, 0.0, 0.0);
    CHECK(map_gap(nat, fam) < 1e-12);
    // not metric
    CHECK(metric_residual(split, nat) > 1e-3);
  }
}

TEST_CASE("named_connection: canonical and Tanaka") {
  const ReductiveSplit split = reductive_split(3);
  const BilinearMap can = named_connection(NamedConnection::canonical, split);
  CHECK(can.c.flat().lpNorm<Eigen::Infinity>() == 0.0);
  // Tanaka collapses to -((n+1)/n) beta1
  for (int n : {2, 3, 4}) {
    const ReductiveSplit s = reductive_split(n);
    const BilinearMap tan = named_connection(NamedConnection::tanaka, s);
    BilinearMap expected(s.dim_m());
    expected.c.flat() = -((n + 1.0) / n) * basis_map("beta1", s).c.flat();
    CHECK(map_gap(tan, expected) < 1e-10);
  }
}

TEST_CASE("named_connection: characteristic connection") {
  for (int n : {2, 3, 4}) {
    const ReductiveSplit split = reductive_split(n);
    const BilinearMap chr =
        named_connection(NamedConnection::characteristic, split);
    CHECK(map_gap(chr, skew_family(sphere_class_for(n), 1.0, std::nullopt,
                                   split)) == 0.0);
    CHECK(metric_residual(split, chr) < 1e-10);
    const auto [form, skew] = torsion_form(split, torsion(split, chr));
    CHECK(skew);
    // nabla xi = 0: the difference from Levi-Civita satisfies D(X, xi) = psi(X)
    BilinearMap D(split.dim_m());
    D.c.flat() = chr.c.flat() - levi_civita_alpha(split).c.flat();
    const MVector xi = mvec(CVec::Zero(n), -I);
    std::mt19937_64 rng(3);
    for (int trial = 0; trial < 5; ++trial) {
      const MVector X = random_mvector(n, rng);
      const MVector psiX = mvec(I * X.z, 0.0);
      CHECK((D.eval(X, xi).coords() - psiX.coords())
                .lpNorm<Eigen::Infinity>() < 1e-10);
    }
  }
}

TEST_CASE("skew_family: r=0 (and q=0) is Levi-Civita for every class") {
  for (int n : {1, 2, 3, 4}) {
    const ReductiveSplit split = reductive_split(n);
    const std::optional<cd> q =
        (n == 2 || n == 3) ? std::optional<cd>(cd{0.0, 0.0}) : std::nullopt;
    CHECK(map_gap(skew_family(sphere_class_for(n), 0.0, q, split),
                  levi_civita_alpha(split)) < 1e-12);
  }
}

TEST_CASE("skew_family: membership in the solver subspaces") {
  std::mt19937_64 rng(41);
  std::uniform_real_distribution<double> unif(-1.5, 1.5);
  for (int n : {1, 2, 3, 4}) {
    const ReductiveSplit split = reductive_split(n);
    const MapSpace inv = invariant_bilinear_basis(split);
    const MapSpace met = metric_subspace(inv, split);
    const BilinearMap lc = levi_civita_alpha(split);
    const MapSpace skw = skew_torsion_subspace(met, split, lc);
    for (int trial = 0; trial < 3; ++trial) {
      const std::optional<cd> q =
          (n == 2 || n == 3) ? std::optional<cd>(cd{unif(rng), unif(rng)})
                             : std::nullopt;
      const BilinearMap alpha = skew_family(sphere_class_for(n), unif(rng), q, split);
      CHECK(span_distance(inv, alpha) < 1e-8);
      CHECK(span_distance(met, alpha) < 1e-8);
      BilinearMap diff(split.dim_m());
      diff.c.flat() = alpha.c.flat() - lc.c.flat();
      CHECK(span_distance(skw, diff) < 1e-8);
    }
  }
  // metric family members pass the metric filter
  for (int n : {2, 3, 4}) {
    const ReductiveSplit split = reductive_split(n);
    FamilyParams p;
    p.sphere_class = sphere_class_for(n) == SphereClass::s3
                         ? SphereClass::s3
                         : sphere_class_for(n);
    p.q1 = cd{unif(rng), unif(rng)};
    p.q2 = cd{unif(rng), unif(rng)};
    p.q3 = cd{unif(rng), unif(rng)};
    p.t = unif(rng);
    if (p.sphere_class == SphereClass::general_n ||
        p.sphere_class == SphereClass::s7)
      p.q3 = 0.0;
    if (p.sphere_class == SphereClass::general_n) p.q2 = 0.0;
    CHECK(metric_residual(split, family_alpha(p, split)) < 1e-10);
  }
}

TEST_CASE("skew_family: S^3 diagonal-family bridge t11 = r - 1") {
  const ReductiveSplit split = reductive_split(1);
  for (double r : {-1.0, 0.0, 0.5, 1.0, 2.0}) {
    const BilinearMap alpha =
        skew_family(SphereClass::s3, r, std::nullopt, split);
    FamilyParams p;
    p.sphere_class = SphereClass::s3;
    p.t_matrix = (r - 1.0) * Eigen::Matrix3d::Identity();
    CHECK(map_gap(alpha, family_alpha(p, split)) < 1e-12);
    // the difference tensor itself is r times the diagonal frame sum
    FamilyParams pd;
    pd.sphere_class = SphereClass::s3;
    pd.t_matrix = r * Eigen::Matrix3d::Identity();
    BilinearMap D(3);
    D.c.flat() = alpha.c.flat() - levi_civita_alpha(split).c.flat();
    CHECK(map_gap(D, family_alpha(pd, split)) < 1e-12);
  }
  // Levi-Civita on S^3 is the diagonal family at t = -I
  FamilyParams plc;
  plc.sphere_class = SphereClass::s3;
  plc.t_matrix = -Eigen::Matrix3d::Identity();
  CHECK(map_gap(family_alpha(plc, split), levi_civita_alpha(split)) < 1e-12);
}

TEST_CASE("bracket identity [,]_m = ((n+1)/n)(alpha1-beta1) - 2 gamma1") {
  for (int n : {2, 3, 4, 5}) {
    const ReductiveSplit split = reductive_split(n);
    RVec expected =
        ((n + 1.0) / n) * (basis_map("alpha1", split).c.flat() -
                           basis_map("beta1", split).c.flat()) -
        2.0 * basis_map("gamma1", split).c.flat();
    CHECK((split.bracket_mm_m.flat() - expected).lpNorm<Eigen::Infinity>() <
          1e-10);
  }
}

TEST_CASE("closed_form_basis_names: counts per sphere") {
  CHECK(closed_form_basis_names(1).empty());
  CHECK(closed_form_basis_names(2).size() == 13);
  CHECK(closed_form_basis_names(3).size() == 9);
  CHECK(closed_form_basis_names(4).size() == 7);
  CHECK(closed_form_basis_names(5).size() == 7);
}

TEST_CASE("sphere_class_for") {
  CHECK(sphere_class_for(1) == SphereClass::s3);
  CHECK(sphere_class_for(2) == SphereClass::s5);
  CHECK(sphere_class_for(3) == SphereClass::s7);
  CHECK(sphere_class_for(4) == SphereClass::general_n);
  CHECK(sphere_class_for(7) == SphereClass::general_n);
}
