#pragma once

#include <filesystem>
#include <iosfwd>
#include <string>
#include <vector>

#include "json.hpp"

#include "eikvv/rate_lab.hpp"
#include "eikvv/viscosity_check.hpp"
#include "eikvv/vv_solver.hpp"

namespace eikvv {

/// 17 significant digits, printf %.17g; round-trips every double.
std::string format_double(double x);

/// Header `r,p_eps,u_eps,u_limit`, one row per grid point.
void write_solution_csv(std::ostream& out, const ViscousSolution& sol);

/// Sidecar keys: epsilon, dim, potential, panel_order, t_cutoff (plus quadrature
/// details). `stamp` adds a UTC timestamp; data files never carry one.
nlohmann::json solution_metadata(const ViscousSolution& sol, bool stamp = false);

struct SolutionSamples {
  std::vector<double> r;
  std::vector<double> p_eps;
  std::vector<double> u_eps;
  std::vector<double> u_limit;
};

SolutionSamples read_solution_csv(std::istream& in);

/// Keys: status, role, witness_x, lhs, rhs, margin (witness fields null on pass).
nlohmann::json verdict_json(const Verdict& v);

nlohmann::json rate_report_json(const RateReport& rep);
/// One row per epsilon.
void write_rate_report_csv(std::ostream& out, const RateReport& rep);

nlohmann::json zero_probe_json(const ZeroProbe& probe);

/// Writes to a temporary sibling and renames it over `path`.
void write_file_atomic(const std::filesystem::path& path, const std::string& content);

}  // namespace eikvv
