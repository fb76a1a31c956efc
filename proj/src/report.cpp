#include "homoconn/report.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>
#include <stdexcept>

#include "homoconn/invariant_solver.hpp"
#include "homoconn/nomizu_calculus.hpp"
#include "homoconn/sphere_geometry.hpp"

namespace homoconn {

json complex_json(cd z) { return json{{"re", z.real()}, {"im", z.imag()}}; }

cd parse_complex(const std::string& text) {
  std::string s;
  for (char c : text)
    if (!std::isspace(static_cast<unsigned char>(c))) s.push_back(c);
  if (s.empty()) throw std::invalid_argument("empty complex literal");
  auto parse_part = [](const std::string& part, bool imag_unit) {
    if (!imag_unit) return std::stod(part);
    if (part.empty() || part == "+") return 1.0;
    if (part == "-") return -1.0;
    return std::stod(part);
  };
  const auto ipos = s.find_first_of("ij");
  if (ipos == std::string::npos) return cd{parse_part(s, false), 0.0};
  if (ipos != s.size() - 1)
    throw std::invalid_argument("malformed complex literal: " + text);
  std::string body = s.substr(0, s.size() - 1);
  // split off a leading real part, if any, at the last sign that is not an
  // exponent sign and not the leading sign
  std::size_t split = std::string::npos;
  for (std::size_t k = body.size(); k-- > 1;) {
    if ((body[k] == '+' || body[k] == '-') &&
        body[k - 1] != 'e' && body[k - 1] != 'E') {
      split = k;
      break;
    }
  }
  if (split == std::string::npos) return cd{0.0, parse_part(body, true)};
  return cd{parse_part(body.substr(0, split), false),
            parse_part(body.substr(split), true)};
}

std::vector<double> parse_grid(const std::string& spec) {
  std::vector<std::string> parts;
  std::string cur;
  for (char c : spec) {
    if (c == ':') {
      parts.push_back(cur);
      cur.clear();
    } else {
      cur.push_back(c);
    }
  }
  parts.push_back(cur);
  if (parts.size() == 1) return {std::stod(parts[0])};
  if (parts.size() != 3)
    throw std::invalid_argument("grid spec must be 'a:b:step': " + spec);
  const double a = std::stod(parts[0]), b = std::stod(parts[1]),
               step = std::stod(parts[2]);
  if (step <= 0.0) throw std::invalid_argument("grid step must be positive");
  std::vector<double> grid;
  for (double v = a; v <= b + 1e-12; v += step) grid.push_back(v);
  return grid;
}

namespace {

json matrix_json(const RMat& m) {
  json rows = json::array();
  for (int i = 0; i < m.rows(); ++i) {
    json row = json::array();
    for (int j = 0; j < m.cols(); ++j) row.push_back(m(i, j));
    rows.push_back(row);
  }
  return rows;
}

struct SpaceDims {
  int invariant, metric, skew;
};

SpaceDims solve_dims(const ReductiveSplit& split) {
  const MapSpace inv = invariant_bilinear_basis(split);
  const MapSpace met = metric_subspace(inv, split);
  const MapSpace skw =
      skew_torsion_subspace(met, split, levi_civita_alpha(split));
  return {inv.dim(), met.dim(), skw.dim()};
}

}  // namespace

std::vector<DimsRow> dims_table(const std::vector<int>& ns) {
  std::vector<DimsRow> rows;
  for (int n : ns) {
    if (n < 1) throw std::invalid_argument("dims: n must be >= 1");
    const ReductiveSplit split = reductive_split(n);
    const SpaceDims d = solve_dims(split);
    DimsRow row;
    row.n = n;
    row.sphere = "S^" + std::to_string(2 * n + 1);
    row.invariant_dim = d.invariant;
    row.metric_dim = d.metric;
    row.skew_dim = d.skew;
    rows.push_back(row);
  }
  return rows;
}

json cmd_dims(const std::vector<int>& ns) {
  json results = json::array();
  for (const DimsRow& r : dims_table(ns))
    results.push_back({{"n", r.n},
                       {"sphere", r.sphere},
                       {"invariant_dim", r.invariant_dim},
                       {"metric_dim", r.metric_dim},
                       {"skew_dim", r.skew_dim}});
  json ncfg = json::array();
  for (int n : ns) ncfg.push_back(n);
  return json{{"command", "dims"},
              {"config", {{"n", ncfg}}},
              {"results", results},
              {"residuals", json::object()},
              {"verdicts", json::object()}};
}

std::string dims_markdown(const std::vector<DimsRow>& rows) {
  std::ostringstream out;
  out << "| Sphere | Invariant | Metric | Skew-Torsion | Einstein locus |\n";
  out << "|---|---|---|---|---|\n";
  for (const DimsRow& r : rows) {
    const char* locus = r.n == 1 ? "Line" : (r.n == 3 ? "Cone" : "Point");
    out << "| " << r.sphere << " | " << r.invariant_dim << " | "
        << r.metric_dim << " | " << r.skew_dim << " | " << locus << " |\n";
  }
  return out.str();
}

namespace {

const char* sphere_name(SphereClass c) {
  switch (c) {
    case SphereClass::s3: return "s3";
    case SphereClass::s5: return "s5";
    case SphereClass::s7: return "s7";
    case SphereClass::general_n: return "general";
  }
  return "?";
}

double cyclic_residual(const CurvatureTensor& R) {
  const int d = R.r.dim();
  double worst = 0.0;
  for (int i = 0; i < d; ++i)
    for (int j = 0; j < d; ++j)
      for (int k = 0; k < d; ++k)
        for (int l = 0; l < d; ++l)
          worst = std::max(worst, std::abs(R.r(i, j, k, l) - R.r(j, k, i, l)));
  return worst;
}

}  // namespace

json cmd_connection(const ConnectionConfig& cfg) {
  const ReductiveSplit split = reductive_split(cfg.n);
  const BilinearMap alpha =
      skew_family(cfg.sphere_class, cfg.r, cfg.q, split);
  const ConnectionReport rep = curvature_invariants(split, alpha);
  const CurvatureTensor R = curvature(split, alpha);
  const double cyc = cyclic_residual(R);
  const bool flat = rep.curvature_max < 1e-9;
  const bool nonzero = rep.curvature_max >= 1e-9;
  std::string classification = "generic";
  if (flat)
    classification = "flat";
  else if (cyc < 1e-9)
    classification = "totally_skew_curvature";
  else if (cfg.r == 0.0 && (!cfg.q || *cfg.q == 0.0))
    classification = "levi_civita";

  json config{{"sphere", sphere_name(cfg.sphere_class)},
              {"n", cfg.n},
              {"r", cfg.r},
              {"tolerance", cfg.tolerance}};
  if (cfg.q) config["q"] = complex_json(*cfg.q);
  return json{
      {"command", "connection"},
      {"config", config},
      {"results",
       {{"scalar", rep.scalar},
        {"torsion_norm_sq", rep.torsion_norm_sq},
        {"curvature_max", rep.curvature_max},
        {"torsion_max", rep.torsion_max},
        {"ricci", matrix_json(rep.ricci)},
        {"sym_ricci", matrix_json(rep.sym_ricci)},
        {"sym_ricci_indirect", matrix_json(rep.sym_ricci_indirect)},
        {"s_tensor", matrix_json(rep.s_tensor)},
        {"classification", classification}}},
      {"residuals",
       {{"sym_ricci_route_gap", rep.sym_ricci_route_gap},
        {"einstein", rep.einstein_residual},
        {"cyclic_symmetry", cyc},
        {"equivariance", equivariance_residual(split, alpha)},
        {"metric", metric_residual(split, alpha)}}},
      {"verdicts",
       {{"is_metric", rep.is_metric},
        {"is_skew_torsion", rep.is_skew_torsion},
        {"is_einstein", rep.is_einstein},
        {"flat", flat},
        {"curvature_nonzero", nonzero},
        {"cyclic_symmetry", cyc < 1e-9}}}};
}

json cmd_einstein_scan(SphereClass cls, int n, const std::vector<double>& r_grid,
                       const std::vector<cd>& q_grid, double tol) {
  const ReductiveSplit split = reductive_split(n);
  const bool has_q = cls == SphereClass::s7 || cls == SphereClass::s5;
  json results = json::array();
  int einstein_count = 0;
  for (double r : r_grid) {
    const std::vector<cd> qs =
        has_q ? q_grid : std::vector<cd>{cd{0.0, 0.0}};
    for (cd q : qs) {
      const BilinearMap alpha =
          skew_family(cls, r, has_q ? std::optional<cd>(q) : std::nullopt,
                      split);
      const ConnectionReport rep = curvature_invariants(split, alpha);
      const bool einstein =
          einstein_check(rep, split.dim_m(), tol, split.gram);
      einstein_count += einstein ? 1 : 0;
      json point{{"r", r},
                 {"einstein_residual", rep.einstein_residual},
                 {"is_einstein", einstein}};
      if (has_q) point["q"] = complex_json(q);
      results.push_back(point);
    }
  }
  json qcfg = json::array();
  for (cd q : q_grid) qcfg.push_back(complex_json(q));
  json rcfg = json::array();
  for (double r : r_grid) rcfg.push_back(r);
  return json{{"command", "scan"},
              {"config",
               {{"sphere", sphere_name(cls)},
                {"n", n},
                {"r_grid", rcfg},
                {"q_grid", qcfg},
                {"tolerance", tol}}},
              {"results", results},
              {"residuals", json::object()},
              {"verdicts", {{"einstein_points", einstein_count}}}};
}

// ---- verification batteries -------------------------------------------------

double jacobi_residual(const Tensor3& c) {
  const int d = c.d0();
  double worst = 0.0;
  for (int i = 0; i < d; ++i)
    for (int j = 0; j < d; ++j)
      for (int k = 0; k < d; ++k)
        for (int l = 0; l < d; ++l) {
          double v = 0.0;
          for (int m = 0; m < d; ++m)
            v += c(j, k, m) * c(i, m, l) + c(k, i, m) * c(j, m, l) +
                 c(i, j, m) * c(k, m, l);
          worst = std::max(worst, std::abs(v));
        }
  return worst;
}

namespace {

double structure_constants_residual(Sampler& samp, int trials) {
  double worst = 0.0;
  for (int n = 1; n <= 3; ++n) {
    const MatrixLieAlgebra g = build_su(n + 1);
    const int d = g.dim();
    for (int t = 0; t < std::max(1, trials / 10); ++t) {
      RVec a(d), b(d);
      for (int l = 0; l < d; ++l) {
        a[l] = samp.gauss();
        b[l] = samp.gauss();
      }
      const Mat A = g.from_coords(a), B = g.from_coords(b);
      RVec c = RVec::Zero(d);
      for (int i = 0; i < d; ++i)
        for (int j = 0; j < d; ++j)
          for (int k = 0; k < d; ++k)
            c[k] += a[i] * b[j] * g.structure(i, j, k);
      worst = std::max(
          worst, (Mat(A * B - B * A) - g.from_coords(c)).cwiseAbs().maxCoeff());
    }
  }
  return worst;
}

double span_equality_residual(bool* dims_ok) {
  double worst = 0.0;
  *dims_ok = true;
  for (int n = 2; n <= 4; ++n) {
    const ReductiveSplit split = reductive_split(n);
    const MapSpace computed = invariant_bilinear_basis(split);
    const auto names = closed_form_basis_names(n);
    if (computed.dim() != static_cast<int>(names.size())) *dims_ok = false;
    for (const std::string& name : names)
      worst = std::max(worst,
                       span_distance(computed, basis_map(name, split)));
  }
  return worst;
}

double sasakian_residual(Sampler& samp, int trials) {
  double worst = 0.0;
  auto track = [&](double v) { worst = std::max(worst, v); };
  for (int t = 0; t < trials; ++t) {
    // Sasakian identities on S^5 and S^7
    for (int k : {3, 4}) {
      const CVec p = samp.random_unit(k);
      const CVec x = samp.random_tangent(p);
      const CVec y = samp.random_tangent(p);
      const SasakiData dx = sasaki_at(p, x), dy = sasaki_at(p, y);
      track((sasaki_at(p, dx.psi).psi + x - dx.eta * dx.xi).norm());
      track(std::abs(gre(dx.psi, dy.psi) - gre(x, y) + dx.eta * dy.eta));
      track(sasaki_at(p, dx.xi).psi.norm());
      track(std::abs(sasaki_at(p, dx.xi).eta - 1.0));
    }
    // 3-Sasakian composition rules on S^7
    const CVec p = samp.random_unit(4);
    const CVec x = samp.random_tangent(p);
    static constexpr int cyc[3][3] = {{1, 2, 3}, {2, 3, 1}, {3, 1, 2}};
    for (const auto& abc : cyc) {
      const int a = abc[0], b = abc[1], c = abc[2];
      track((quat_psi(p, quat_psi(p, x, b), a) - quat_psi(p, x, c) -
             quat_eta(p, x, b) * quat_xi(p, a))
                .norm());
      track((quat_psi(p, quat_psi(p, x, a), b) + quat_psi(p, x, c) -
             quat_eta(p, x, a) * quat_xi(p, b))
                .norm());
      track((quat_psi(p, quat_xi(p, b), a) - quat_xi(p, c)).norm());
    }
  }
  return worst;
}

// horizontal unit vector at p on S^7
CVec horizontal_unit(Sampler& samp, const CVec& p) {
  for (;;) {
    CVec x = samp.random_tangent(p);
    for (int s = 1; s <= 3; ++s) x -= quat_eta(p, x, s) * quat_xi(p, s);
    const double nrm = x.norm();
    if (nrm > 1e-6) return x / nrm;
  }
}

double theta_table_residual(Sampler& samp, int trials) {
  double worst = 0.0;
  for (int t = 0; t < trials; ++t) {
    const CVec p = samp.random_unit(4);
    const CVec x = horizontal_unit(samp, p);
    std::vector<CVec> f = {x,
                           quat_psi(p, x, 1),
                           quat_psi(p, x, 2),
                           quat_psi(p, x, 3),
                           quat_xi(p, 2),
                           quat_xi(p, 3)};
    // expected Theta values as (coefficient, frame index); -1 marks zero
    struct E {
      int idx;
      double c;
    };
    static constexpr E table[6][6] = {
        {{-1, 0}, {-1, 0}, {4, -1}, {5, 1}, {2, 1}, {3, -1}},
        {{-1, 0}, {-1, 0}, {5, 1}, {4, 1}, {3, -1}, {2, -1}},
        {{4, 1}, {5, -1}, {-1, 0}, {-1, 0}, {0, -1}, {1, 1}},
        {{5, -1}, {4, -1}, {-1, 0}, {-1, 0}, {1, 1}, {0, 1}},
        {{2, -1}, {3, 1}, {0, 1}, {1, -1}, {-1, 0}, {-1, 0}},
        {{3, 1}, {2, 1}, {1, -1}, {0, -1}, {-1, 0}, {-1, 0}}};
    for (int i = 0; i < 6; ++i)
      for (int j = 0; j < 6; ++j) {
        const CVec th = theta_ops(p, f[i], f[j]).first;
        const CVec expected =
            table[i][j].idx < 0 ? CVec(CVec::Zero(4))
                                : CVec(table[i][j].c * f[table[i][j].idx]);
        worst = std::max(worst, (th - expected).norm());
      }
    const CVec xi1 = quat_xi(p, 1);
    for (const CVec& v : f) {
      worst = std::max(worst, theta_ops(p, xi1, v).first.norm());
      worst = std::max(worst, theta_ops(p, v, xi1).first.norm());
    }
  }
  return worst;
}

double b_tensor_residual(Sampler& samp, int trials) {
  double worst = 0.0;
  for (int t = 0; t < trials; ++t) {
    const CVec p = samp.random_unit(4);
    const CVec x = samp.random_tangent(p);
    const CVec y = samp.random_tangent(p);
    double tr = 0.0;
    for (const CVec& b : tangent_basis(p))
      tr += gre(theta_ops(p, x, theta_ops(p, y, b).first).first, b);
    const double expected =
        4.0 * (quat_eta(p, x, 1) * quat_eta(p, y, 1) - gre(x, y));
    worst = std::max(worst, std::abs(tr - expected));
  }
  return worst;
}

double omega_invariance_residual(Sampler& samp, int trials) {
  double worst = 0.0;
  for (int t = 0; t < trials; ++t) {
    const Mat sigma = samp.random_su(4);
    const CVec p = samp.random_unit(4);
    const CVec u = samp.random_tangent(p);
    const CVec v = samp.random_tangent(p);
    const CVec w = samp.random_tangent(p);
    worst = std::max(
        worst, std::abs(omega_eval(sigma * p, sigma * u, sigma * v, sigma * w) -
                        omega_eval(p, u, v, w)));
  }
  return worst;
}

double octonion_residual(Sampler& samp, int trials) {
  double worst = 0.0;
  auto unit = [](int i) {
    Oct o = Oct::Zero();
    o[i] = 1.0;
    return o;
  };
  // spot checks of the multiplication rules
  static constexpr int fano[7][3] = {{1, 2, 4}, {2, 3, 5}, {3, 4, 6},
                                     {4, 5, 7}, {5, 6, 1}, {6, 7, 2},
                                     {7, 1, 3}};
  for (const auto& l : fano) {
    worst = std::max(
        worst, (octonion_mul(unit(l[0]), unit(l[1])) - unit(l[2])).norm());
    worst = std::max(
        worst, (octonion_mul(unit(l[1]), unit(l[0])) + unit(l[2])).norm());
  }
  for (int i = 1; i < 8; ++i)
    worst = std::max(worst,
                     (octonion_mul(unit(i), unit(i)) + unit(0)).norm());
  for (int t = 0; t < trials; ++t) {
    Oct a, b;
    for (int i = 0; i < 8; ++i) {
      a[i] = samp.gauss();
      b[i] = samp.gauss();
    }
    const Oct ab = octonion_mul(a, b);
    worst = std::max(worst, std::abs(ab.norm() - a.norm() * b.norm()));
    worst = std::max(
        worst, (octonion_mul(a, ab) - octonion_mul(octonion_mul(a, a), b))
                       .norm());
    worst = std::max(
        worst, (octonion_mul(ab, b) - octonion_mul(a, octonion_mul(b, b)))
                       .norm());
  }
  return worst;
}

double psi_hat_residual(Sampler& samp, int trials) {
  double worst = 0.0;
  const CVec o5 = origin(2);
  for (int t = 0; t < trials; ++t) {
    // at the origin, psi-hat is the hatted conjugation map
    const CVec x = samp.random_tangent(o5);
    CVec expected(3);
    expected[0] = -std::conj(x[1]);
    expected[1] = std::conj(x[0]);
    expected[2] = 0.0;
    worst = std::max(worst, (psi_hat_at(o5, x) - expected).norm());
    // SU(3)-invariance at arbitrary points
    const Mat sigma = samp.random_su(3);
    const CVec p = samp.random_unit(3);
    const CVec y = samp.random_tangent(p);
    worst = std::max(
        worst, (psi_hat_at(sigma * p, sigma * y) - sigma * psi_hat_at(p, y))
                       .norm());
  }
  return worst;
}

}  // namespace

std::vector<Battery> verify_batteries(std::uint64_t seed, int trials) {
  Sampler samp(seed);
  std::vector<Battery> out;
  auto add = [&](const std::string& name, double residual, double tol) {
    out.push_back({name, residual, residual < tol});
  };

  double jac = 0.0;
  for (int n = 1; n <= 3; ++n)
    jac = std::max(jac, jacobi_residual(build_su(n + 1).structure));
  add("jacobi", jac, 1e-9);
  add("structure_constants", structure_constants_residual(samp, trials), 1e-9);

  bool dims_ok = true;
  const double span = span_equality_residual(&dims_ok);
  out.push_back({"span_equality", span, dims_ok && span < 1e-8});

  add("sasakian_identities", sasakian_residual(samp, trials), 1e-9);
  add("theta_table", theta_table_residual(samp, std::max(1, trials / 5)),
      1e-9);
  add("b_tensor", b_tensor_residual(samp, trials), 1e-9);
  add("omega_invariance", omega_invariance_residual(samp, trials), 1e-9);

  const GrassmannSummary gs = grassmann_checks(seed + 1, trials);
  out.push_back({"grassmann_beta",
                 std::max(gs.max_beta_imag, std::max(0.0, -gs.min_beta)),
                 gs.min_beta > -1e-9 && gs.max_beta_imag < 1e-8});
  out.push_back({"grassmann_delta", gs.max_delta_err, gs.max_delta_err < 1e-8});

  add("octonions", octonion_residual(samp, trials), 1e-9);
  add("psi_hat", psi_hat_residual(samp, trials), 1e-9);

  double g2_dist = 0.0;
  const bool member = g2_form_membership(reductive_split(3), &g2_dist);
  out.push_back({"g2_nonmembership", g2_dist, !member && g2_dist > 0.1});
  return out;
}

json cmd_verify(std::uint64_t seed, int trials) {
  const std::vector<Battery> batteries = verify_batteries(seed, trials);
  json results = json::array();
  json residuals = json::object();
  json verdicts = json::object();
  bool all = true;
  for (const Battery& b : batteries) {
    results.push_back(
        {{"name", b.name}, {"max_residual", b.max_residual}, {"pass", b.pass}});
    residuals[b.name] = b.max_residual;
    verdicts[b.name] = b.pass;
    all = all && b.pass;
  }
  verdicts["all_passed"] = all;
  return json{{"command", "verify"},
              {"config", {{"seed", seed}, {"trials", trials}}},
              {"results", results},
              {"residuals", residuals},
              {"verdicts", verdicts}};
}

std::string markdown_of(const json& report) {
  const std::string cmd = report.at("command");
  std::ostringstream out;
  if (cmd == "dims") {
    std::vector<DimsRow> rows;
    for (const json& r : report.at("results"))
      rows.push_back({r.at("n"), r.at("sphere"), r.at("invariant_dim"),
                      r.at("metric_dim"), r.at("skew_dim")});
    return dims_markdown(rows);
  }
  if (cmd == "connection") {
    const json& res = report.at("results");
    const json& ver = report.at("verdicts");
    out << "## Connection report\n\n";
    out << "| quantity | value |\n|---|---|\n";
    out << "| scalar curvature | " << res.at("scalar") << " |\n";
    out << "| torsion norm^2 | " << res.at("torsion_norm_sq") << " |\n";
    out << "| curvature max | " << res.at("curvature_max") << " |\n";
    out << "| classification | "
        << res.at("classification").get<std::string>() << " |\n";
    out << "| metric | " << ver.at("is_metric") << " |\n";
    out << "| skew torsion | " << ver.at("is_skew_torsion") << " |\n";
    out << "| Einstein | " << ver.at("is_einstein") << " |\n";
    return out.str();
  }
  if (cmd == "scan") {
    out << "| r | q | Einstein residual | Einstein |\n|---|---|---|---|\n";
    for (const json& p : report.at("results")) {
      out << "| " << p.at("r") << " | ";
      if (p.contains("q"))
        out << p.at("q").at("re") << "+" << p.at("q").at("im") << "i";
      else
        out << "-";
      out << " | " << p.at("einstein_residual") << " | "
          << p.at("is_einstein") << " |\n";
    }
    return out.str();
  }
  if (cmd == "verify") {
    out << "| battery | max residual | pass |\n|---|---|---|\n";
    for (const json& b : report.at("results"))
      out << "| " << b.at("name").get<std::string>() << " | "
          << b.at("max_residual") << " | " << b.at("pass") << " |\n";
    return out.str();
  }
  return report.dump(2) + "\n";
}

}  // namespace homoconn
