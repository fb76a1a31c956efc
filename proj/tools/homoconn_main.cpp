#include <cstdlib>
#include <fstream>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "homoconn/report.hpp"

namespace {

using homoconn::cd;
using homoconn::json;

std::uint64_t default_seed() {
  if (const char* env = std::getenv("HOMOCONN_SEED"))
    return std::stoull(env);
  return 2024;
}

homoconn::SphereClass parse_sphere(const std::string& s, int* n) {
  if (s == "s3") { *n = 1; return homoconn::SphereClass::s3; }
  if (s == "s5") { *n = 2; return homoconn::SphereClass::s5; }
  if (s == "s7") { *n = 3; return homoconn::SphereClass::s7; }
  if (s == "general") return homoconn::SphereClass::general_n;
  throw CLI::ValidationError("--sphere", "expected s3, s5, s7 or general");
}

int emit(const json& report, const std::string& format,
         const std::string& out_path) {
  std::string text =
      format == "markdown" ? homoconn::markdown_of(report) : report.dump(2) + "\n";
  if (out_path.empty()) {
    std::cout << text;
  } else {
    std::ofstream out(out_path);
    if (!out) {
      std::cerr << "cannot write " << out_path << "\n";
      return 2;
    }
    out << text;
  }
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"invariant affine connections on odd spheres"};
  app.require_subcommand(1);

  std::string format = "json";
  std::string out_path;

  // dims
  auto* dims = app.add_subcommand("dims", "dimension table of the invariant spaces");
  std::string n_list = "1,2,3,4,5";
  dims->add_option("--n", n_list, "comma-separated list of n values");
  dims->add_option("--format", format, "json or markdown");
  dims->add_option("--out", out_path, "write the report to a file");

  // connection
  auto* conn = app.add_subcommand("connection", "report on one skew-torsion connection");
  std::string sphere = "s7";
  double r = 0.0;
  std::string q_text;
  double tolerance = 1e-8;
  int n_general = 4;
  conn->add_option("--sphere", sphere, "s3, s5, s7 or general")->required();
  conn->add_option("--n", n_general, "n for --sphere general");
  conn->add_option("--r", r, "skew parameter r");
  conn->add_option("--q", q_text, "complex parameter, e.g. 1+0i (s5/s7 only)");
  conn->add_option("--tolerance", tolerance, "verdict tolerance");
  conn->add_option("--format", format, "json or markdown");
  conn->add_option("--out", out_path, "write the report to a file");

  // scan
  auto* scan = app.add_subcommand("scan", "Einstein locus scan over a parameter grid");
  std::string r_grid_s = "-1:1:0.25";
  std::string qre_grid_s, qim_grid_s, q_grid_s;
  scan->add_option("--sphere", sphere, "s3, s5, s7 or general")->required();
  scan->add_option("--n", n_general, "n for --sphere general");
  scan->add_option("--r-grid", r_grid_s, "grid a:b:step for r");
  scan->add_option("--q-grid", q_grid_s, "grid a:b:step for both Re q and Im q");
  scan->add_option("--qre-grid", qre_grid_s, "grid for Re q");
  scan->add_option("--qim-grid", qim_grid_s, "grid for Im q");
  scan->add_option("--tolerance", tolerance, "Einstein tolerance");
  scan->add_option("--format", format, "json or markdown");
  scan->add_option("--out", out_path, "write the report to a file");

  // verify
  auto* verify = app.add_subcommand("verify", "run the verification batteries");
  std::uint64_t seed = default_seed();
  int trials = 100;
  verify->add_option("--seed", seed, "sampling seed");
  verify->add_option("--trials", trials, "samples per battery");
  verify->add_option("--format", format, "json or markdown");
  verify->add_option("--out", out_path, "write the report to a file");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }

  try {
    if (dims->parsed()) {
      std::vector<int> ns;
      std::stringstream ss(n_list);
      std::string tok;
      while (std::getline(ss, tok, ',')) ns.push_back(std::stoi(tok));
      return emit(homoconn::cmd_dims(ns), format, out_path);
    }
    if (conn->parsed()) {
      homoconn::ConnectionConfig cfg;
      cfg.sphere_class = parse_sphere(sphere, &n_general);
      cfg.n = n_general;
      cfg.r = r;
      cfg.tolerance = tolerance;
      if (!q_text.empty()) cfg.q = homoconn::parse_complex(q_text);
      return emit(homoconn::cmd_connection(cfg), format, out_path);
    }
    if (scan->parsed()) {
      const homoconn::SphereClass cls = parse_sphere(sphere, &n_general);
      const std::vector<double> r_grid = homoconn::parse_grid(r_grid_s);
      std::vector<double> qre{0.0}, qim{0.0};
      if (!q_grid_s.empty()) qre = qim = homoconn::parse_grid(q_grid_s);
      if (!qre_grid_s.empty()) qre = homoconn::parse_grid(qre_grid_s);
      if (!qim_grid_s.empty()) qim = homoconn::parse_grid(qim_grid_s);
      std::vector<cd> q_grid;
      for (double a : qre)
        for (double b : qim) q_grid.emplace_back(a, b);
      return emit(
          homoconn::cmd_einstein_scan(cls, n_general, r_grid, q_grid, tolerance),
          format, out_path);
    }
    if (verify->parsed()) {
      const json report = homoconn::cmd_verify(seed, trials);
      const int rc = emit(report, format, out_path);
      if (rc != 0) return rc;
      return report.at("verdicts").at("all_passed").get<bool>() ? 0 : 3;
    }
  } catch (const CLI::Error& e) {
    std::cerr << e.what() << "\n";
    return 2;
  } catch (const std::invalid_argument& e) {
    std::cerr << "usage error: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
  return 2;
}
