// eikvv: command-line front end for the radial vanishing-viscosity toolkit.
//
// Exit codes: 0 success / pass, 1 check failed, 2 usage or input error.

#include <filesystem>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"

#include "eikvv/error.hpp"
#include "eikvv/io.hpp"
#include "eikvv/piecewise_poly.hpp"
#include "eikvv/potential.hpp"
#include "eikvv/rate_lab.hpp"
#include "eikvv/reference_problems.hpp"
#include "eikvv/viscosity_check.hpp"
#include "eikvv/vv_solver.hpp"

namespace fs = std::filesystem;
using namespace eikvv;

namespace {

constexpr int kExitOk = 0;
constexpr int kExitFail = 1;
constexpr int kExitUsage = 2;

struct RunConfig {
  std::string potential = "const:1";
  int dim = 1;
  std::optional<double> epsilon;
  std::string epsilons;
  std::size_t grid = 1001;
  double r_min = 0.1;
  std::optional<double> tol;
  std::string out;
  std::string format = "csv";
  bool stamp = false;

  // verify / compare
  std::string candidate;
  std::string u;
  std::string v;
  std::string rhs;
  std::string role = "solution";
  bool radial = false;
  bool reflect = false;
};

class UsageError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

std::string slurp(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw UsageError("cannot open '" + path + "'");
  std::ostringstream os;
  os << in.rdbuf();
  return os.str();
}

std::vector<double> parse_epsilon_list(const std::string& text) {
  std::vector<double> out;
  std::stringstream ss(text);
  for (std::string tok; std::getline(ss, tok, ',');) {
    if (tok.empty()) continue;
    try {
      std::size_t used = 0;
      out.push_back(std::stod(tok, &used));
      if (used != tok.size()) throw std::invalid_argument(tok);
    } catch (const std::exception&) {
      throw UsageError("bad epsilon '" + tok + "'");
    }
  }
  if (out.empty()) throw UsageError("epsilon list is empty");
  return out;
}

std::vector<double> sweep(const RunConfig& cfg) {
  if (!cfg.epsilons.empty()) return parse_epsilon_list(cfg.epsilons);
  if (cfg.epsilon) return {*cfg.epsilon};
  return default_epsilon_sweep();
}

std::string path_or(const std::string& out, const char* fallback) {
  return out.empty() ? std::string(fallback) : out;
}

fs::path with_extension(const fs::path& p, const char* ext) {
  auto q = p;
  q.replace_extension(ext);
  return q;
}

std::string to_text(const nlohmann::json& j) { return j.dump(2) + "\n"; }

// Candidate: a `pp` file or a solve CSV (piecewise-linear in r, radial).
struct LoadedCandidate {
  PiecewisePoly poly;
  bool from_samples = false;
};

LoadedCandidate load_candidate(const std::string& path, bool reflect) {
  const std::string text = slurp(path);
  LoadedCandidate c;
  if (text.rfind("r,p_eps", 0) == 0) {
    std::istringstream in(text);
    const auto samples = read_solution_csv(in);
    c.poly = PiecewisePoly::interpolate_linear(samples.r, samples.u_eps);
    c.from_samples = true;
  } else {
    c.poly = parse_candidate(std::string_view(text));
  }
  if (reflect) c.poly = evenly_reflect(c.poly);
  return c;
}

// Right-hand side on the candidate's interval: const:<c>, a pp file, or a
// potential (builtin or file) reflected evenly when the interval is [-b, b].
PiecewisePoly load_rhs(const std::string& spec, const PiecewisePoly& like) {
  if (spec.empty()) throw UsageError("--f is required");
  if (spec.rfind("const:", 0) == 0) {
    const auto V = potential_from_spec(spec);
    return PiecewisePoly::constant(like.lo(), like.hi(), V.parameter());
  }
  if (spec.rfind("vee:", 0) != 0) {
    const std::string text = slurp(spec);
    std::istringstream probe(text);
    std::string head;
    probe >> head;
    if (head == "pp") return parse_candidate(std::string_view(text));
  }
  auto f = PiecewisePoly::from_potential(potential_from_spec(spec));
  if (like.lo() < 0.0) f = evenly_reflect(f);
  return f;
}

VerdictRole parse_role(const std::string& role) {
  if (role == "solution") return VerdictRole::solution;
  if (role == "subsolution") return VerdictRole::subsolution;
  if (role == "supersolution") return VerdictRole::supersolution;
  throw UsageError("unknown role '" + role + "'");
}

void print_verdict(const Verdict& v) {
  std::cout << to_string(v.role) << ": " << to_string(v.status);
  if (v.status != VerdictStatus::pass) {
    std::cout << " at x = " << format_double(v.witness_x) << " (" << v.detail << ": "
              << format_double(v.lhs) << ' ' << v.relation << ' ' << format_double(v.rhs) << ')';
  }
  std::cout << ", margin " << format_double(v.margin) << '\n';
}

int cmd_solve(const RunConfig& cfg) {
  if (!cfg.epsilon) throw UsageError("solve needs --epsilon");
  const ProblemSpec spec{potential_from_spec(cfg.potential), cfg.dim, *cfg.epsilon};
  const ViscousSolution sol = eval_u_eps(spec, uniform_grid(cfg.grid));
  const fs::path out = path_or(cfg.out, "solution.csv");
  std::ostringstream csv;
  write_solution_csv(csv, sol);
  write_file_atomic(out, csv.str());
  write_file_atomic(with_extension(out, ".json"), to_text(solution_metadata(sol, cfg.stamp)));
  std::cout << "u_eps(0) = " << format_double(sol.u_values.front())
            << ", u(0) = " << format_double(eval_limit(spec.potential, 0.0)) << " -> "
            << out.string() << '\n';
  return kExitOk;
}

int cmd_limit(const RunConfig& cfg) {
  const auto V = potential_from_spec(cfg.potential);
  const auto u = maximal_radial_solution(V);
  const fs::path out = path_or(cfg.out, cfg.format == "pp" ? "limit.pp" : "limit.csv");
  std::ostringstream os;
  if (cfg.format == "csv") {
    os << "r,u_limit\n";
    for (double r : uniform_grid(cfg.grid)) os << format_double(r) << ',' << format_double(eval_limit(V, r)) << '\n';
  } else if (cfg.format == "pp") {
    write_candidate(os, u);
  } else if (cfg.format == "json") {
    nlohmann::json j;
    j["potential"] = V.label();
    j["breaks"] = std::vector<double>(u.breaks().begin(), u.breaks().end());
    auto pieces = nlohmann::json::array();
    for (const auto& q : u.pieces()) pieces.push_back({q.c0, q.c1, q.c2});
    j["pieces"] = pieces;
    os << to_text(j);
  } else {
    throw UsageError("limit supports --format csv, json or pp");
  }
  write_file_atomic(out, os.str());
  std::cout << "u(0) = " << format_double(eval_limit(V, 0.0)) << " -> " << out.string() << '\n';
  return kExitOk;
}

int cmd_verify(const RunConfig& cfg) {
  if (cfg.candidate.empty()) throw UsageError("verify needs --candidate");
  const auto cand = load_candidate(cfg.candidate, cfg.reflect);
  const auto f = load_rhs(cfg.rhs, cand.poly);
  CheckOptions opt;
  opt.tol = cfg.tol.value_or(cand.from_samples ? 1e-6 : 1e-9);
  const bool radial = cfg.radial || (cand.from_samples && !cfg.reflect);
  opt.boundary = radial ? BoundaryConvention::right_end : BoundaryConvention::both_ends;

  Verdict v;
  switch (parse_role(cfg.role)) {
    case VerdictRole::subsolution:
      v = check_subsolution(cand.poly, f, opt);
      break;
    case VerdictRole::supersolution:
      v = check_supersolution(cand.poly, f, opt);
      break;
    default:
      v = check_solution(cand.poly, f, opt);
      break;
  }
  write_file_atomic(path_or(cfg.out, "verdict.json"), to_text(verdict_json(v)));
  print_verdict(v);
  return v.passed() ? kExitOk : kExitFail;
}

int cmd_compare(const RunConfig& cfg) {
  if (cfg.u.empty() || cfg.v.empty()) throw UsageError("compare needs --u and --v");
  const auto u = load_candidate(cfg.u, cfg.reflect);
  const auto v = load_candidate(cfg.v, cfg.reflect);
  const auto f = load_rhs(cfg.rhs, u.poly);
  CheckOptions opt;
  opt.tol = cfg.tol.value_or(u.from_samples || v.from_samples ? 1e-6 : 1e-9);
  const Verdict verdict = check_comparison(u.poly, v.poly, f, zero_set(f), opt);
  write_file_atomic(path_or(cfg.out, "comparison.json"), to_text(verdict_json(verdict)));
  print_verdict(verdict);
  return verdict.passed() ? kExitOk : kExitFail;
}

int cmd_rate(const RunConfig& cfg) {
  const auto V = potential_from_spec(cfg.potential);
  const auto eps = sweep(cfg);
  const RateReport rep = run_convergence(V, cfg.dim, eps, cfg.r_min, cfg.grid);
  const fs::path out = path_or(cfg.out, "rate.json");
  write_file_atomic(out, to_text(rate_report_json(rep)));
  std::ostringstream csv;
  write_rate_report_csv(csv, rep);
  write_file_atomic(with_extension(out, ".csv"), csv.str());

  double cmax = 0.0;
  for (double c : rep.bound_constants) cmax = std::max(cmax, c);
  std::cout << "fitted_slope " << format_double(rep.fitted_slope) << '\n'
            << "max_bound_constant " << format_double(cmax) << '\n';
  return kExitOk;
}

int cmd_zero_probe(const RunConfig& cfg) {
  const auto V = potential_from_spec(cfg.potential);
  const ZeroProbe probe = zero_point_probe(V, cfg.dim, sweep(cfg));
  write_file_atomic(path_or(cfg.out, "zero_probe.json"), to_text(zero_probe_json(probe)));
  std::cout << "|u_eps(0) - u(0)| (" << ZeroProbe::kNote << ")\n";
  for (std::size_t i = 0; i < probe.epsilons.size(); ++i) {
    std::cout << "  eps " << format_double(probe.epsilons[i]) << "  " << format_double(probe.errors[i]) << '\n';
  }
  std::cout << "empirical slope " << format_double(probe.empirical_slope)
            << (probe.monotone_decreasing ? "" : " (not monotone)") << '\n';
  return kExitOk;
}

int cmd_examples(const RunConfig& cfg) {
  const fs::path dir = path_or(cfg.out, "figures");
  fs::create_directories(dir);
  const std::vector<std::pair<std::string, PiecewisePoly>> figures{
      {"figure-u", reference::unit_rhs_solution()},
      {"figure-f", reference::two_well_rhs()},
      {"figure-u1", reference::two_well_low_solution()},
      {"figure-u2", reference::two_well_high_solution()},
  };
  constexpr int kHalf = 1000;  // 2001 samples on [-1, 1]
  std::vector<double> xs;
  for (int i = -kHalf; i <= kHalf; ++i) xs.push_back(static_cast<double>(i) / kHalf);

  for (const auto& [name, poly] : figures) {
    std::vector<double> ys(xs.size());
    poly.eval_many(xs, ys);
    std::ostringstream csv;
    csv << "x,y\n";
    for (std::size_t i = 0; i < xs.size(); ++i) csv << format_double(xs[i]) << ',' << format_double(ys[i]) << '\n';
    write_file_atomic(dir / (name + ".csv"), csv.str());
    if (cfg.format == "svg-data") {
      std::ostringstream pts;
      for (std::size_t i = 0; i < xs.size(); ++i) {
        pts << (i ? " " : "") << format_double(xs[i]) << ',' << format_double(ys[i]);
      }
      pts << '\n';
      write_file_atomic(dir / (name + ".svg-data"), pts.str());
    }
  }
  std::cout << "wrote " << figures.size() << " figure files to " << dir.string() << '\n';
  return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Radial vanishing-viscosity solver and viscosity-solution checker"};
  app.require_subcommand(1);
  RunConfig cfg;

  app.add_option("--potential", cfg.potential, "const:<c>, vee:<center> or a potential file");
  app.add_option("--dim", cfg.dim, "Space dimension n")->check(CLI::Range(kMinDim, kMaxDim));
  app.add_option("--epsilon", cfg.epsilon, "Viscosity epsilon");
  app.add_option("--epsilons", cfg.epsilons, "Comma-separated decreasing epsilon list");
  app.add_option("--grid", cfg.grid, "Number of output radii");
  app.add_option("--r-min", cfg.r_min, "Smallest radius used for rate fitting");
  app.add_option("--tol", cfg.tol, "Absolute tolerance of the viscosity checks");
  app.add_option("--out", cfg.out, "Output file (directory for `examples`)");
  app.add_option("--format", cfg.format, "csv | json | svg-data | pp");
  app.add_flag("--stamp", cfg.stamp, "Add a timestamp to JSON sidecars");
  app.fallthrough();

  auto* solve = app.add_subcommand("solve", "Write u^eps and p^eps samples (CSV + JSON sidecar)");
  auto* limit = app.add_subcommand("limit", "Write the limit u(r) = int_r^1 V");
  auto* verify = app.add_subcommand("verify", "Check a candidate against |u'| = f");
  verify->add_option("--candidate", cfg.candidate, "pp file or solve CSV")->required();
  verify->add_option("--f", cfg.rhs, "const:<c>, pp file or potential")->required();
  verify->add_option("--role", cfg.role, "solution | subsolution | supersolution");
  verify->add_flag("--radial", cfg.radial, "Dirichlet condition only at the right end");
  verify->add_flag("--reflect", cfg.reflect, "Reflect a [0,1] candidate evenly to [-1,1]");
  auto* compare = app.add_subcommand("compare", "Comparison check of u against v on the zero set of f");
  compare->add_option("--u", cfg.u, "pp file or solve CSV")->required();
  compare->add_option("--v", cfg.v, "pp file or solve CSV")->required();
  compare->add_option("--f", cfg.rhs, "const:<c>, pp file or potential")->required();
  compare->add_flag("--reflect", cfg.reflect, "Reflect [0,1] candidates evenly to [-1,1]");
  auto* rate = app.add_subcommand("rate", "Convergence-rate sweep over epsilon");
  auto* probe = app.add_subcommand("zero-probe", "|u^eps(0) - u(0)| across epsilon");
  auto* examples = app.add_subcommand("examples", "Sample the closed-form figure functions");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kExitOk : kExitUsage;
  }

  try {
    if (*solve) return cmd_solve(cfg);
    if (*limit) return cmd_limit(cfg);
    if (*verify) return cmd_verify(cfg);
    if (*compare) return cmd_compare(cfg);
    if (*rate) return cmd_rate(cfg);
    if (*probe) return cmd_zero_probe(cfg);
    if (*examples) return cmd_examples(cfg);
  } catch (const ParseError& e) {
    std::cerr << "eikvv: parse error: " << e.what() << '\n';
  } catch (const DomainError& e) {
    std::cerr << "eikvv: " << e.what() << '\n';
  } catch (const UsageError& e) {
    std::cerr << "eikvv: " << e.what() << '\n';
  } catch (const std::exception& e) {
    std::cerr << "eikvv: " << e.what() << '\n';
  }
  return kExitUsage;
}
