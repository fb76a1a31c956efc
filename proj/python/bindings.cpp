// pybind11 surface: thin veneer over the core library. Structured reports
// cross the boundary as JSON strings; the python package parses them.

#include <pybind11/complex.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <optional>

#include "homoconn/connection_families.hpp"
#include "homoconn/invariant_solver.hpp"
#include "homoconn/nomizu_calculus.hpp"
#include "homoconn/report.hpp"

namespace py = pybind11;
using namespace homoconn;

namespace {

SphereClass class_of(const std::string& name, int* n) {
  if (name == "s3") { *n = 1; return SphereClass::s3; }
  if (name == "s5") { *n = 2; return SphereClass::s5; }
  if (name == "s7") { *n = 3; return SphereClass::s7; }
  if (name == "general") return SphereClass::general_n;
  throw std::invalid_argument("sphere must be s3, s5, s7 or general");
}

}  // namespace

PYBIND11_MODULE(_homoconn, m) {
  m.doc() = "invariant affine connections on odd spheres";

  m.def(
      "dims",
      [](const std::vector<int>& ns) {
        py::list rows;
        for (const DimsRow& r : dims_table(ns)) {
          py::dict row;
          row["n"] = r.n;
          row["sphere"] = r.sphere;
          row["invariant_dim"] = r.invariant_dim;
          row["metric_dim"] = r.metric_dim;
          row["skew_dim"] = r.skew_dim;
          rows.append(row);
        }
        return rows;
      },
      py::arg("ns"),
      "solver-computed dimensions (invariant / metric / skew) per n");

  m.def(
      "connection_report_json",
      [](const std::string& sphere, double r, std::optional<cd> q, int n,
         double tolerance) {
        ConnectionConfig cfg;
        cfg.sphere_class = class_of(sphere, &n);
        cfg.n = n;
        cfg.r = r;
        cfg.q = q;
        cfg.tolerance = tolerance;
        return cmd_connection(cfg).dump();
      },
      py::arg("sphere"), py::arg("r"), py::arg("q") = std::nullopt,
      py::arg("n") = 4, py::arg("tolerance") = 1e-8,
      "full report for one skew-torsion connection, as a JSON string");

  m.def(
      "einstein_scan_json",
      [](const std::string& sphere, const std::vector<double>& r_grid,
         const std::vector<cd>& q_grid, int n, double tolerance) {
        const SphereClass cls = class_of(sphere, &n);
        return cmd_einstein_scan(cls, n, r_grid, q_grid, tolerance).dump();
      },
      py::arg("sphere"), py::arg("r_grid"),
      py::arg("q_grid") = std::vector<cd>{}, py::arg("n") = 4,
      py::arg("tolerance") = 1e-8,
      "Einstein-locus scan over a parameter grid, as a JSON string");

  m.def(
      "verify_json",
      [](std::uint64_t seed, int trials) {
        return cmd_verify(seed, trials).dump();
      },
      py::arg("seed") = 2024, py::arg("trials") = 100,
      "run the verification batteries, as a JSON string");

  m.def(
      "skew_family_coeffs",
      [](const std::string& sphere, double r, std::optional<cd> q, int n) {
        const SphereClass cls = class_of(sphere, &n);
        const ReductiveSplit split = reductive_split(n);
        const BilinearMap alpha = skew_family(cls, r, q, split);
        const int d = split.dim_m();
        std::vector<std::vector<std::vector<double>>> out(
            d, std::vector<std::vector<double>>(d, std::vector<double>(d)));
        for (int i = 0; i < d; ++i)
          for (int j = 0; j < d; ++j)
            for (int k = 0; k < d; ++k) out[i][j][k] = alpha.c(i, j, k);
        return out;
      },
      py::arg("sphere"), py::arg("r"), py::arg("q") = std::nullopt,
      py::arg("n") = 4,
      "coefficient array c[i][j][k] of the skew-family bilinear map");
}
