#pragma once

// report surface behind the CLI: dimension tables, per-connection reports,
// Einstein-locus scans, verification batteries, JSON/Markdown emitters.

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

#include "homoconn/connection_families.hpp"
#include "homoconn/lie_core.hpp"

namespace homoconn {

using json = nlohmann::json;

json complex_json(cd z);
cd parse_complex(const std::string& text);            // "1+0i", "-0.5i", "2"
std::vector<double> parse_grid(const std::string& spec);  // "a:b:step"

struct DimsRow {
  int n = 0;
  std::string sphere;
  int invariant_dim = 0;
  int metric_dim = 0;
  int skew_dim = 0;
};
std::vector<DimsRow> dims_table(const std::vector<int>& ns);
json cmd_dims(const std::vector<int>& ns);
std::string dims_markdown(const std::vector<DimsRow>& rows);

struct ConnectionConfig {
  SphereClass sphere_class = SphereClass::s7;
  int n = 3;
  double r = 0.0;
  std::optional<cd> q;
  double tolerance = 1e-8;
};
json cmd_connection(const ConnectionConfig& cfg);

json cmd_einstein_scan(SphereClass cls, int n, const std::vector<double>& r_grid,
                       const std::vector<cd>& q_grid, double tol);

struct Battery {
  std::string name;
  double max_residual = 0.0;
  bool pass = false;
};
// residual of the Jacobi identity of a structure-constant tensor
double jacobi_residual(const Tensor3& structure);
std::vector<Battery> verify_batteries(std::uint64_t seed, int trials);
json cmd_verify(std::uint64_t seed, int trials);

std::string markdown_of(const json& report);

}  // namespace homoconn
