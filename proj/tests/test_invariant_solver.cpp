#include <doctest.h>

#include "homoconn/connection_families.hpp"
#include "homoconn/invariant_solver.hpp"
#include "homoconn/lie_core.hpp"
#include "homoconn/nomizu_calculus.hpp"

using namespace homoconn;

namespace {

struct Spaces {
  ReductiveSplit split;
  MapSpace invariant;
  MapSpace metric;
  MapSpace skew;
};

Spaces solve_all(int n) {
  Spaces s{reductive_split(n), {}, {}, {}};
  s.invariant = invariant_bilinear_basis(s.split);
  s.metric = metric_subspace(s.invariant, s.split);
  s.skew = skew_torsion_subspace(s.metric, s.split, levi_civita_alpha(s.split));
  return s;
}

MapSpace named_space(const ReductiveSplit& split,
                     const std::vector<std::string>& names) {
  MapSpace sp;
  for (const std::string& name : names) sp.basis.push_back(basis_map(name, split));
  return sp;
}

}  // namespace

TEST_CASE("invariant_bilinear_basis: dimension table") {
  struct Row {
    int n, invariant, metric, skew;
  };
  const Row rows[] = {{1, 27, 9, 1}, {2, 13, 7, 3}, {3, 9, 5, 3},
                      {4, 7, 3, 1},  {5, 7, 3, 1}};
  for (const Row& row : rows) {
    const Spaces s = solve_all(row.n);
    CHECK(s.invariant.dim() == row.invariant);
    CHECK(s.metric.dim() == row.metric);
    CHECK(s.skew.dim() == row.skew);
  }
}

TEST_CASE("invariant_bilinear_basis: residuals and orthonormality") {
  for (int n : {2, 3, 4}) {
    const ReductiveSplit split = reductive_split(n);
    const MapSpace space = invariant_bilinear_basis(split);
    for (const BilinearMap& b : space.basis)
      CHECK(equivariance_residual(split, b) < 1e-8);
    for (int i = 0; i < space.dim(); ++i)
      for (int j = 0; j <= i; ++j) {
        const double dot = space.basis[i].c.flat().dot(space.basis[j].c.flat());
        CHECK(std::abs(dot - (i == j ? 1.0 : 0.0)) < 1e-10);
      }
  }
}

TEST_CASE("metric_subspace: skew-adjointness of alpha(C,.)") {
  for (int n : {2, 3}) {
    const Spaces s = solve_all(n);
    const int d = s.split.dim_m();
    for (const BilinearMap& alpha : s.metric.basis) {
      CHECK(metric_residual(s.split, alpha) < 1e-9);
      // spelled out: g(alpha(A,B),C) + g(B, alpha(A,C)) = 0
      double worst = 0.0;
      for (int a = 0; a < d; ++a)
        for (int b = 0; b < d; ++b)
          for (int c = 0; c < d; ++c)
            worst = std::max(worst,
                             std::abs(alpha.c(a, b, c) + alpha.c(a, c, b)));
      CHECK(worst < 1e-9);
    }
  }
}

TEST_CASE("subspace chains: metric inside invariant, skew inside metric") {
  for (int n : {2, 3, 4}) {
    const Spaces s = solve_all(n);
    for (const BilinearMap& b : s.metric.basis)
      CHECK(span_distance(s.invariant, b) < 1e-8);
    // the skew space holds differences alpha - alpha_lc; translated back,
    // each lies inside the metric space
    const BilinearMap lc = levi_civita_alpha(s.split);
    for (const BilinearMap& diff : s.skew.basis) {
      BilinearMap alpha(s.split.dim_m());
      alpha.c.flat() = lc.c.flat() + diff.c.flat();
      CHECK(span_distance(s.metric, alpha) < 1e-8);
      CHECK(metric_residual(s.split, alpha) < 1e-8);
      // antisymmetry of the difference
      double worst = 0.0;
      const int d = s.split.dim_m();
      for (int i = 0; i < d; ++i)
        for (int j = 0; j < d; ++j)
          for (int k = 0; k < d; ++k)
            worst = std::max(worst,
                             std::abs(diff.c(i, j, k) + diff.c(j, i, k)));
      CHECK(worst < 1e-9);
    }
  }
}

TEST_CASE("skew_torsion_subspace rejects a non-metric origin") {
  const Spaces s = solve_all(2);
  BilinearMap bogus(s.split.dim_m());
  bogus.c(0, 0, 0) = 1.0;  // not metric: g(alpha(e0,e0),e0) != 0
  CHECK_THROWS_AS(skew_torsion_subspace(s.metric, s.split, bogus),
                  std::invalid_argument);
}

TEST_CASE("span_equal: reflexivity and closed-form certification") {
  for (int n : {2, 3, 4}) {
    const ReductiveSplit split = reductive_split(n);
    const MapSpace computed = invariant_bilinear_basis(split);
    CHECK(span_equal(computed, computed, 1e-8));
    const MapSpace closed = named_space(split, closed_form_basis_names(n));
    CHECK(closed.dim() == computed.dim());
    CHECK(span_equal(computed, closed, 1e-8));
  }
  // negative control: the n=4 invariant space is not the n=4 metric space
  const Spaces s = solve_all(4);
  CHECK_FALSE(span_equal(s.invariant, s.metric, 1e-8));
}

TEST_CASE("n=1: full bilinear space, no constraints") {
  const ReductiveSplit split = reductive_split(1);
  const MapSpace space = invariant_bilinear_basis(split);
  CHECK(space.dim() == 27);
}

TEST_CASE("solver output is deterministic") {
  for (int run = 0; run < 2; ++run) {
    static std::vector<RVec> first;
    const MapSpace space = invariant_bilinear_basis(reductive_split(3));
    if (run == 0) {
      for (const BilinearMap& b : space.basis) first.push_back(b.c.flat());
    } else {
      REQUIRE(first.size() == static_cast<std::size_t>(space.dim()));
      for (int i = 0; i < space.dim(); ++i)
        CHECK((space.basis[i].c.flat() - first[i]).lpNorm<Eigen::Infinity>() ==
              0.0);
    }
  }
}

TEST_CASE("nullspace: canonical small cases") {
  // rank-1 matrix in R^{1x3}: nullspace has dimension 2 and is orthonormal
  RMat A(1, 3);
  A << 1.0, 2.0, 2.0;
  const RMat N = nullspace(A, 3);
  CHECK(N.rows() == 2);
  CHECK((A * N.transpose()).cwiseAbs().maxCoeff() < 1e-12);
  CHECK((N * N.transpose() - RMat::Identity(2, 2)).cwiseAbs().maxCoeff() <
        1e-12);
  // empty constraint set: identity
  const RMat full = nullspace(RMat(0, 4), 4);
  CHECK(full.rows() == 4);
}
