#include "homoconn/connection_families.hpp"

#include <functional>
#include <stdexcept>

#include "homoconn/nomizu_calculus.hpp"

namespace homoconn {

namespace {

using MapFn = std::function<MVector(const MVector&, const MVector&)>;

BilinearMap tensorize(const ReductiveSplit& s, const MapFn& f) {
  const int d = s.dim_m();
  BilinearMap b(d);
  for (int i = 0; i < d; ++i)
    for (int j = 0; j < d; ++j) {
      RVec ei = RVec::Zero(d), ej = RVec::Zero(d);
      ei[i] = 1.0;
      ej[j] = 1.0;
      const RVec out =
          f(MVector::from_coords(ei), MVector::from_coords(ej)).coords();
      for (int k = 0; k < d; ++k) b.c(i, j, k) = out[k];
    }
  return b;
}

CVec cross3(const CVec& u, const CVec& v) {
  CVec w(3);
  w[0] = u[1] * v[2] - u[2] * v[1];
  w[1] = u[2] * v[0] - u[0] * v[2];
  w[2] = u[0] * v[1] - u[1] * v[0];
  return w;
}

CVec theta2(const CVec& z) {
  CVec w(2);
  w[0] = -std::conj(z[1]);
  w[1] = std::conj(z[0]);
  return w;
}

cd herm(const CVec& z, const CVec& w) {  // conj(z)^t w
  return (z.conjugate().transpose() * w).value();
}

const cd I{0.0, 1.0};

MapFn map_by_name(const std::string& name, int n) {
  auto mv = [](CVec z, cd a) { MVector v; v.z = std::move(z); v.a = a; return v; };
  if (name == "alpha1") return [mv](const MVector& x, const MVector& y) { return mv(y.a * x.z, 0.0); };
  if (name == "alphai") return [mv](const MVector& x, const MVector& y) { return mv(I * y.a * x.z, 0.0); };
  if (name == "beta1") return [mv](const MVector& x, const MVector& y) { return mv(x.a * y.z, 0.0); };
  if (name == "betai") return [mv](const MVector& x, const MVector& y) { return mv(I * x.a * y.z, 0.0); };
  if (name == "gamma1") return [mv, n](const MVector& x, const MVector& y) { return mv(CVec::Zero(n), I * herm(x.z, y.z).imag()); };
  if (name == "gammai") return [mv, n](const MVector& x, const MVector& y) { return mv(CVec::Zero(n), I * herm(x.z, y.z).real()); };
  if (name == "delta") return [mv, n](const MVector& x, const MVector& y) { return mv(CVec::Zero(n), I * x.a * y.a); };
  if (n == 3) {
    if (name == "eps1") return [mv](const MVector& x, const MVector& y) { return mv(cross3(x.z.conjugate(), y.z.conjugate()), 0.0); };
    if (name == "epsi") return [mv](const MVector& x, const MVector& y) { return mv(I * cross3(x.z.conjugate(), y.z.conjugate()), 0.0); };
  }
  if (n == 2) {
    if (name == "alphahat1") return [mv](const MVector& x, const MVector& y) { return mv(y.a * theta2(x.z), 0.0); };
    if (name == "alphahati") return [mv](const MVector& x, const MVector& y) { return mv(I * y.a * theta2(x.z), 0.0); };
    if (name == "betahat1") return [mv](const MVector& x, const MVector& y) { return mv(x.a * theta2(y.z), 0.0); };
    if (name == "betahati") return [mv](const MVector& x, const MVector& y) { return mv(I * x.a * theta2(y.z), 0.0); };
    if (name == "gammahat1") return [mv, n](const MVector& x, const MVector& y) { return mv(CVec::Zero(n), I * herm(theta2(x.z), y.z).imag()); };
    if (name == "gammahati") return [mv, n](const MVector& x, const MVector& y) { return mv(CVec::Zero(n), I * herm(theta2(x.z), y.z).real()); };
  }
  throw std::invalid_argument("basis_map: unknown name '" + name + "' for n=" + std::to_string(n));
}

void axpy(BilinearMap& acc, double w, const BilinearMap& b) {
  if (w != 0.0) acc.c.flat() += w * b.c.flat();
}

}  // namespace

BilinearMap basis_map(const std::string& name, const ReductiveSplit& split) {
  return tensorize(split, map_by_name(name, split.n));
}

BilinearMap invariant_family_alpha(const ReductiveSplit& split, cd q1, cd q2,
                                   cd q3, cd q4, double t) {
  if (q4 != 0.0 && split.n != 3)
    throw std::invalid_argument("invariant_family_alpha: q4 needs n=3");
  const int n = split.n;
  return tensorize(split, [=](const MVector& x, const MVector& y) {
    MVector v;
    v.z = q1 * y.a * x.z + q2 * x.a * y.z;
    if (n == 3 && q4 != 0.0)
      v.z += q4 * cross3(x.z.conjugate(), y.z.conjugate());
    v.a = I * ((t * x.a * y.a).real() + (q3 * herm(x.z, y.z)).imag());
    return v;
  });
}

BilinearMap family_alpha(const FamilyParams& p, const ReductiveSplit& split) {
  const int n = split.n;
  switch (p.sphere_class) {
    case SphereClass::s7:
      if (n != 3) throw std::invalid_argument("family_alpha: s7 needs n=3");
      break;
    case SphereClass::s5:
      if (n != 2) throw std::invalid_argument("family_alpha: s5 needs n=2");
      break;
    case SphereClass::s3:
      if (n != 1) throw std::invalid_argument("family_alpha: s3 needs n=1");
      break;
    case SphereClass::general_n:
      break;
  }
  if (p.sphere_class == SphereClass::s3) {
    // alpha(x,y) = sum_ij t_ij E_i^b(x) sigma^j(y)
    BilinearMap b(3);
    Eigen::Matrix3d sig[3];
    sig[0] << 0, 0, 0, 0, 0, -1, 0, 1, 0;   // sigma^1 = E2^b x E3 - E3^b x E2
    sig[1] << 0, 0, 1, 0, 0, 0, -1, 0, 0;   // sigma^2 = E3^b x E1 - E1^b x E3
    sig[2] << 0, -1, 0, 1, 0, 0, 0, 0, 0;   // sigma^3 = E1^b x E2 - E2^b x E1
    for (int a = 0; a < 3; ++a)
      for (int bb = 0; bb < 3; ++bb)
        for (int k = 0; k < 3; ++k) {
          double v = 0.0;
          for (int j = 0; j < 3; ++j) v += p.t_matrix(a, j) * sig[j](k, bb);
          b.c(a, bb, k) = v;
        }
    return b;
  }
  BilinearMap b(split.dim_m());
  axpy(b, p.q1.real(), basis_map("alpha1", split));
  axpy(b, -p.q1.real(), basis_map("gamma1", split));
  axpy(b, p.q1.imag(), basis_map("alphai", split));
  axpy(b, p.q1.imag(), basis_map("gammai", split));
  axpy(b, p.t, basis_map("beta1", split));
  if (p.sphere_class == SphereClass::s7) {
    axpy(b, p.q2.real(), basis_map("eps1", split));
    axpy(b, p.q2.imag(), basis_map("epsi", split));
  } else if (p.sphere_class == SphereClass::s5) {
    axpy(b, p.q2.real(), basis_map("alphahat1", split));
    axpy(b, -p.q2.real(), basis_map("gammahat1", split));
    axpy(b, p.q2.imag(), basis_map("alphahati", split));
    axpy(b, p.q2.imag(), basis_map("gammahati", split));
    axpy(b, p.q3.real(), basis_map("betahat1", split));
    axpy(b, p.q3.imag(), basis_map("betahati", split));
  }
  return b;
}

BilinearMap skew_family(SphereClass sphere_class, double r, std::optional<cd> q,
                        const ReductiveSplit& split) {
  if (q.has_value() && sphere_class != SphereClass::s7 &&
      sphere_class != SphereClass::s5)
    throw std::invalid_argument("skew_family: q only valid for s7 and s5");
  BilinearMap b = levi_civita_alpha(split);
  // covariant D = r (Phi xi - eta(X) psi(Y) + eta(Y) psi(X)) pulls back to
  // r(gamma1 + beta1 - alpha1), and alpha = alpha_g + D at map level
  axpy(b, -r, basis_map("alpha1", split));
  axpy(b, r, basis_map("gamma1", split));
  axpy(b, r, basis_map("beta1", split));
  const cd qq = q.value_or(cd{0.0, 0.0});
  if (sphere_class == SphereClass::s7 && qq != 0.0) {
    // D += Re(q) Theta + Im(q) Theta~, with Theta = -eps1 and Theta~ = epsi
    axpy(b, -qq.real(), basis_map("eps1", split));
    axpy(b, qq.imag(), basis_map("epsi", split));
  } else if (sphere_class == SphereClass::s5 && qq != 0.0) {
    axpy(b, -qq.real(), basis_map("alphahat1", split));
    axpy(b, qq.real(), basis_map("gammahat1", split));
    axpy(b, qq.real(), basis_map("betahat1", split));
    axpy(b, -qq.imag(), basis_map("alphahati", split));
    axpy(b, -qq.imag(), basis_map("gammahati", split));
    axpy(b, qq.imag(), basis_map("betahati", split));
  }
  return b;
}

BilinearMap named_connection(NamedConnection name, const ReductiveSplit& split) {
  const int d = split.dim_m();
  switch (name) {
    case NamedConnection::levi_civita:
      return levi_civita_alpha(split);
    case NamedConnection::canonical:
      return BilinearMap(d);
    case NamedConnection::natural: {
      BilinearMap b(d);
      b.c.flat() = 0.5 * split.bracket_mm_m.flat();
      return b;
    }
    case NamedConnection::tanaka: {
      // nabla* = nabla^g + eta(X)psi(Y) + eta(Y)psi(X) + Phi(X,Y)xi;
      // the covariant difference pulls back to gamma1 - alpha1 - beta1, so
      // the whole map collapses to -((n+1)/n) beta1
      BilinearMap b = levi_civita_alpha(split);
      axpy(b, -1.0, basis_map("alpha1", split));
      axpy(b, -1.0, basis_map("beta1", split));
      axpy(b, 1.0, basis_map("gamma1", split));
      return b;
    }
    case NamedConnection::characteristic:
      return skew_family(sphere_class_for(split.n), 1.0, std::nullopt, split);
  }
  throw std::invalid_argument("named_connection: bad name");
}

std::vector<std::string> closed_form_basis_names(int n) {
  if (n == 1) return {};
  std::vector<std::string> names = {"alpha1", "alphai",  "beta1", "betai",
                                    "gamma1", "gammai", "delta"};
  if (n == 3) names.insert(names.end(), {"eps1", "epsi"});
  if (n == 2)
    names.insert(names.end(), {"alphahat1", "alphahati", "betahat1",
                               "betahati", "gammahat1", "gammahati"});
  return names;
}

SphereClass sphere_class_for(int n) {
  if (n == 1) return SphereClass::s3;
  if (n == 2) return SphereClass::s5;
  if (n == 3) return SphereClass::s7;
  return SphereClass::general_n;
}

}  // namespace homoconn
