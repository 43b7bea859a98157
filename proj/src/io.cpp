#include "eikvv/io.hpp"

#include <charconv>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <ctime>
#include <fstream>
#include <istream>
#include <ostream>
#include <sstream>
#include <system_error>
#include <unistd.h>

#include "eikvv/error.hpp"

namespace eikvv {

std::string format_double(double x) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.17g", x);
  return buf;
}

void write_solution_csv(std::ostream& out, const ViscousSolution& sol) {
  out << "r,p_eps,u_eps,u_limit\n";
  for (std::size_t i = 0; i < sol.grid.size(); ++i) {
    out << format_double(sol.grid[i]) << ',' << format_double(sol.p_values[i]) << ','
        << format_double(sol.u_values[i]) << ','
        << format_double(eval_limit(sol.spec.potential, sol.grid[i])) << '\n';
  }
}

nlohmann::json solution_metadata(const ViscousSolution& sol, bool stamp) {
  const auto& m = sol.quadrature_meta;
  nlohmann::json j;
  j["epsilon"] = sol.spec.epsilon;
  j["dim"] = sol.spec.dim;
  j["potential"] = sol.spec.potential.label();
  j["panel_order"] = m.panel_order;
  j["t_cutoff"] = m.t_cutoff;
  j["max_panels"] = m.max_panels;
  j["refined_points"] = m.refined_points;
  j["refined_spacing"] = m.refined_spacing;
  j["estimated_error"] = m.estimated_error;
  j["grid_points"] = sol.grid.size();
  if (stamp) {
    const std::time_t now = std::chrono::system_clock::to_time_t(std::chrono::system_clock::now());
    char buf[32];
    std::tm tm{};
    gmtime_r(&now, &tm);
    std::strftime(buf, sizeof buf, "%Y-%m-%dT%H:%M:%SZ", &tm);
    j["timestamp"] = buf;
  }
  return j;
}

namespace {

double csv_number(std::string_view tok, std::size_t line) {
  double x = 0.0;
  auto [ptr, ec] = std::from_chars(tok.data(), tok.data() + tok.size(), x);
  if (ec != std::errc() || ptr != tok.data() + tok.size()) {
    throw ParseError(line, "bad CSV number '" + std::string(tok) + "'");
  }
  return x;
}

}  // namespace

SolutionSamples read_solution_csv(std::istream& in) {
  std::string line;
  std::size_t line_no = 0;
  if (!std::getline(in, line)) throw ParseError(0, "empty solution CSV");
  ++line_no;
  if (!line.empty() && line.back() == '\r') line.pop_back();
  if (line != "r,p_eps,u_eps,u_limit") throw ParseError(1, "expected header r,p_eps,u_eps,u_limit");
  SolutionSamples s;
  while (std::getline(in, line)) {
    ++line_no;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (line.empty()) continue;
    std::vector<std::string_view> cols;
    std::string_view rest(line);
    for (std::size_t pos; (pos = rest.find(',')) != std::string_view::npos;) {
      cols.push_back(rest.substr(0, pos));
      rest.remove_prefix(pos + 1);
    }
    cols.push_back(rest);
    if (cols.size() != 4) throw ParseError(line_no, "expected four CSV columns");
    s.r.push_back(csv_number(cols[0], line_no));
    s.p_eps.push_back(csv_number(cols[1], line_no));
    s.u_eps.push_back(csv_number(cols[2], line_no));
    s.u_limit.push_back(csv_number(cols[3], line_no));
  }
  if (s.r.size() < 2) throw ParseError(line_no, "solution CSV needs at least two rows");
  return s;
}

nlohmann::json verdict_json(const Verdict& v) {
  nlohmann::json j;
  j["status"] = to_string(v.status);
  j["role"] = to_string(v.role);
  const bool show = v.status != VerdictStatus::pass;
  j["witness_x"] = show ? nlohmann::json(v.witness_x) : nlohmann::json(nullptr);
  j["lhs"] = show ? nlohmann::json(v.lhs) : nlohmann::json(nullptr);
  j["rhs"] = show ? nlohmann::json(v.rhs) : nlohmann::json(nullptr);
  j["margin"] = v.margin;
  if (show) {
    j["relation"] = v.relation;
    j["detail"] = v.detail;
  }
  return j;
}

nlohmann::json rate_report_json(const RateReport& rep) {
  nlohmann::json j;
  j["potential"] = rep.potential;
  j["dim"] = rep.dim;
  j["r_min"] = rep.r_min;
  j["grid_size"] = rep.grid_size;
  j["epsilons"] = rep.epsilons;
  j["sup_errors"] = rep.sup_errors;
  j["full_sup_errors"] = rep.full_sup_errors;
  auto pw = nlohmann::json::array();
  for (const auto& p : rep.pointwise_errors) pw.push_back({{"r", p.r}, {"errors", p.errors}});
  j["pointwise_errors"] = pw;
  j["bound_constants"] = rep.bound_constants;
  j["fitted_slope"] = rep.fitted_slope;
  j["fitted_slope_plain"] = rep.fitted_slope_plain;
  return j;
}

void write_rate_report_csv(std::ostream& out, const RateReport& rep) {
  out << "epsilon,sup_error,full_sup_error,bound_constant";
  for (const auto& p : rep.pointwise_errors) out << ",err_r" << format_double(p.r);
  out << '\n';
  for (std::size_t e = 0; e < rep.epsilons.size(); ++e) {
    out << format_double(rep.epsilons[e]) << ',' << format_double(rep.sup_errors[e]) << ','
        << format_double(rep.full_sup_errors[e]) << ',' << format_double(rep.bound_constants[e]);
    for (const auto& p : rep.pointwise_errors) out << ',' << format_double(p.errors[e]);
    out << '\n';
  }
}

nlohmann::json zero_probe_json(const ZeroProbe& probe) {
  nlohmann::json j;
  j["potential"] = probe.potential;
  j["dim"] = probe.dim;
  j["epsilons"] = probe.epsilons;
  j["errors"] = probe.errors;
  j["empirical_slope"] = probe.empirical_slope;
  j["monotone_decreasing"] = probe.monotone_decreasing;
  j["note"] = ZeroProbe::kNote;
  return j;
}

void write_file_atomic(const std::filesystem::path& path, const std::string& content) {
  auto tmp = path;
  tmp += ".tmp." + std::to_string(::getpid());
  {
    std::ofstream out(tmp, std::ios::binary | std::ios::trunc);
    if (!out) throw std::runtime_error("cannot write " + tmp.string());
    out << content;
    out.flush();
    if (!out) throw std::runtime_error("write failed for " + tmp.string());
  }
  std::error_code ec;
  std::filesystem::rename(tmp, path, ec);
  if (ec) {
    std::filesystem::remove(tmp);
    throw std::runtime_error("cannot rename onto " + path.string() + ": " + ec.message());
  }
}

}  // namespace eikvv
