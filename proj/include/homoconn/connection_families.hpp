#pragma once

// closed-form constructors for the named bilinear maps and parametrized
// families, emitted over the canonical m-basis.
//
// Conventions worth keeping in mind:
//  * for a connection written covariantly as nabla = nabla^g + D, the
//    corresponding map is alpha = alpha_g + D_o (under the sign convention
//    in which the torsion and curvature formulas of nomizu_calculus hold);
//  * on S^3 the diagonal map-level family alpha = t11 * sum_i E_i^b x sigma^i
//    meets the skew parameter r at t11 = r - 1; Levi-Civita is t = -I.

#include <complex>
#include <optional>
#include <string>
#include <vector>

#include "homoconn/invariant_solver.hpp"
#include "homoconn/lie_core.hpp"

namespace homoconn {

enum class SphereClass { general_n, s7, s5, s3 };

struct FamilyParams {
  SphereClass sphere_class = SphereClass::general_n;
  cd q1{0.0, 0.0};
  cd q2{0.0, 0.0};  // s7: epsilon coefficient; s5: hatted alpha/gamma block
  cd q3{0.0, 0.0};  // s5 only: hatted beta block
  double t = 0.0;
  Eigen::Matrix3d t_matrix = Eigen::Matrix3d::Zero();  // s3 only
};

enum class NamedConnection { levi_civita, canonical, natural, tanaka, characteristic };

// named basis maps: alpha1, alphai, beta1, betai, gamma1, gammai, delta;
// eps1, epsi (n=3 only); alphahat1, alphahati, betahat1, betahati,
// gammahat1, gammahati (n=2 only)
BilinearMap basis_map(const std::string& name, const ReductiveSplit& split);

// metric family of the given sphere class
BilinearMap family_alpha(const FamilyParams& params, const ReductiveSplit& split);

// full invariant family (q4 only meaningful for n=3)
BilinearMap invariant_family_alpha(const ReductiveSplit& split, cd q1, cd q2,
                                   cd q3, cd q4, double t);

BilinearMap named_connection(NamedConnection name, const ReductiveSplit& split);

// alpha_lc plus the skew difference tensor; q admitted for s7 and s5 only
BilinearMap skew_family(SphereClass sphere_class, double r, std::optional<cd> q,
                        const ReductiveSplit& split);

SphereClass sphere_class_for(int n);  // s3/s5/s7/general_n by n

// names of the closed-form invariant basis (empty for n=1, where the whole
// bilinear space is invariant)
std::vector<std::string> closed_form_basis_names(int n);

}  // namespace homoconn
