#include "fracsemi/cli.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <atomic>
#include <cmath>
#include <cstdlib>
#include <exception>
#include <fstream>
#include <functional>
#include <iomanip>
#include <iostream>
#include <locale>
#include <map>
#include <numbers>
#include <optional>
#include <sstream>
#include <thread>

#include "fracsemi/discrete.hpp"
#include "fracsemi/errors.hpp"
#include "fracsemi/fraclap.hpp"
#include "fracsemi/kernel.hpp"
#include "fracsemi/verify.hpp"

namespace fracsemi::cli {

namespace {

using Json = nlohmann::ordered_json;
constexpr const char* kVersion = "1.0.0";
constexpr double kPi = std::numbers::pi;

const std::map<std::string, Command> kCommands = {{"kernel", Command::kernel},
                                                  {"spectrum", Command::spectrum},
                                                  {"solve", Command::solve},
                                                  {"convergence", Command::convergence},
                                                  {"verify", Command::verify}};

std::string command_name(Command c) {
  for (const auto& [name, value] : kCommands)
    if (value == c) return name;
  return "?";
}

// ---- validation ------------------------------------------------------------

void require(bool ok, const std::string& flag, const std::string& what) {
  if (!ok) throw UsageError(flag + ": " + what);
}

void validate(const RunConfig& c) {
  auto open_unit = [](double x) { return x > 0.0 && x < 1.0; };
  require(open_unit(c.s), "--s", "must lie in (0, 1)");
  for (double s : c.s_list) require(open_unit(s), "--s-list", "every entry must lie in (0, 1)");
  require(c.N >= 1 && c.N <= 3, "--N", "must be 1, 2 or 3");
  for (double t : c.t) require(t > 0.0, "--t", "times must be positive");
  for (double r : c.r) require(r >= 0.0, "--r", "distances must be nonnegative");
  require(std::isfinite(c.a) && std::isfinite(c.b) && c.a < c.b, "--a/--b", "need a finite interval with a < b");
  require(c.n >= 8, "--n", "need at least 8 cells");
  require(c.lambda >= 0.0, "--lambda", "must be nonnegative");
  require(c.epsilon > 0.0 && c.epsilon <= 1.0, "--epsilon", "must lie in (0, 1]");
  require(c.method == "subordinated" || c.method == "fourier" || c.method == "closed", "--method",
          "expected subordinated, fourier or closed");
  require(c.method != "closed" || c.s == 0.5, "--method", "the closed form exists only at s = 0.5");
  require(c.method != "fourier" || c.N == 1, "--method", "the Fourier route is one-dimensional");
  require(c.rhs == "one" || c.rhs == "gaussian" || c.rhs == "bump", "--f", "expected one, gaussian or bump");
  require(c.format.empty() || c.format == "csv" || c.format == "json", "--format", "expected csv or json");
  const auto& names = check_names();
  require(c.check == "all" || std::find(names.begin(), names.end(), c.check) != names.end(), "verify",
          "unknown check '" + c.check + "'");
}

// ---- config file -----------------------------------------------------------

template <class T>
T get(const Json& j, const std::string& key) {
  try {
    return j.get<T>();
  } catch (const nlohmann::json::exception&) {
    throw UsageError("--config: key '" + key + "' has the wrong type");
  }
}

void apply_json(const Json& j, RunConfig& c) {
  if (!j.is_object()) throw UsageError("--config: expected a JSON object");
  for (const auto& [key, v] : j.items()) {
    if (key == "s") c.s = get<double>(v, key);
    else if (key == "N") c.N = get<int>(v, key);
    else if (key == "t") c.t = v.is_array() ? get<std::vector<double>>(v, key) : std::vector{get<double>(v, key)};
    else if (key == "r") c.r = v.is_array() ? get<std::vector<double>>(v, key) : std::vector{get<double>(v, key)};
    else if (key == "s_list") c.s_list = get<std::vector<double>>(v, key);
    else if (key == "a") c.a = get<double>(v, key);
    else if (key == "b") c.b = get<double>(v, key);
    else if (key == "omega") {
      const auto w = get<std::vector<double>>(v, key);
      if (w.size() != 2) throw UsageError("--config: 'omega' needs two entries");
      c.a = w[0];
      c.b = w[1];
    } else if (key == "n") c.n = get<std::size_t>(v, key);
    else if (key == "count") c.count = get<std::size_t>(v, key);
    else if (key == "lambda") c.lambda = get<double>(v, key);
    else if (key == "epsilon") c.epsilon = get<double>(v, key);
    else if (key == "seed") c.seed = get<std::uint64_t>(v, key);
    else if (key == "method") c.method = get<std::string>(v, key);
    else if (key == "f") c.rhs = get<std::string>(v, key);
    else if (key == "out") c.out = get<std::string>(v, key);
    else if (key == "format") c.format = get<std::string>(v, key);
    else if (key == "check") c.check = get<std::string>(v, key);
    else throw UsageError("--config: unknown key '" + key + "'");
  }
}

Json config_json(const RunConfig& c) {
  Json j;
  j["command"] = command_name(c.command);
  if (c.command == Command::verify) j["check"] = c.check;
  j["s"] = c.s;
  j["N"] = c.N;
  switch (c.command) {
    case Command::kernel:
      j["t"] = c.t;
      j["r"] = c.r;
      j["method"] = c.method;
      break;
    case Command::convergence:
      j["s_list"] = c.s_list;
      break;
    default:
      j["omega"] = {c.a, c.b};
      j["n"] = c.n;
      break;
  }
  if (c.command == Command::spectrum) j["count"] = c.count;
  if (c.command == Command::solve) {
    j["lambda"] = c.lambda;
    j["f"] = c.rhs;
  }
  if (c.command == Command::verify) {
    j["epsilon"] = c.epsilon;
    j["s_list"] = c.s_list;
  }
  j["seed"] = c.seed;
  return j;
}

// ---- output ----------------------------------------------------------------

std::string output_format(const RunConfig& c) {
  if (!c.format.empty()) return c.format;
  const auto dot = c.out.rfind('.');
  return dot != std::string::npos && c.out.substr(dot) == ".json" ? "json" : "csv";
}

// Rows of numbers or strings written as CSV (17 significant digits) or JSON.
struct Table {
  std::vector<std::string> columns;
  std::vector<std::vector<Json>> rows;
};

void write_file(const std::string& path, const std::string& body) {
  std::ofstream f(path, std::ios::binary);
  if (!f) throw UsageError("--out: cannot open '" + path + "' for writing");
  f << body;
  if (!f) throw std::runtime_error("write failed: " + path);
}

void emit_table(const RunConfig& c, const Table& table) {
  if (c.out.empty()) return;
  std::ostringstream os;
  os.imbue(std::locale::classic());
  if (output_format(c) == "json") {
    Json rows = Json::array();
    for (const auto& row : table.rows) {
      Json item;
      for (std::size_t k = 0; k < row.size(); ++k) item[table.columns[k]] = row[k];
      rows.push_back(item);
    }
    Json doc;
    doc["version"] = kVersion;
    doc["config"] = config_json(c);
    doc["rows"] = rows;
    os << doc.dump(2) << '\n';
  } else {
    os << std::setprecision(17);
    for (std::size_t k = 0; k < table.columns.size(); ++k) os << (k ? "," : "") << table.columns[k];
    os << '\n';
    for (const auto& row : table.rows) {
      for (std::size_t k = 0; k < row.size(); ++k) {
        if (k) os << ',';
        if (row[k].is_string()) os << row[k].get<std::string>();
        else if (row[k].is_number_integer() || row[k].is_number_unsigned()) os << row[k].dump();
        else os << row[k].get<double>();
      }
      os << '\n';
    }
  }
  write_file(c.out, os.str());
}

std::ostream& brief(std::ostream& out) { return out << std::setprecision(7); }

// ---- commands --------------------------------------------------------------

int run_kernel(const RunConfig& c, std::ostream& out) {
  const FractionalOrder order(c.s, c.N);
  Table table{{"t", "r", "s", "N", "method", "value"}, {}};
  const bool single = c.t.size() == 1 && c.r.size() == 1;
  brief(out);
  for (double t : c.t) {
    for (double r : c.r) {
      double value;
      if (c.method == "closed") value = poisson_kernel_closed(t, r, c.N);
      else if (c.method == "fourier") value = heat_kernel_fourier(KernelQuery({t, 0.0}, r, order)).real();
      else value = heat_kernel_subordinated(KernelQuery({t, 0.0}, r, order));
      table.rows.push_back({t, r, c.s, c.N, c.method, value});
      if (single) out << value << '\n';
      else out << t << ' ' << r << ' ' << value << '\n';
    }
  }
  emit_table(c, table);
  return 0;
}

int run_spectrum(const RunConfig& c, std::ostream& out) {
  const auto S = spectrum(assemble_dirichlet(Grid1D(c.a, c.b, c.n), FractionalOrder(c.s)), c.count);
  Table table{{"index", "eigenvalue"}, {}};
  brief(out);
  for (std::size_t k = 0; k < S.size(); ++k) {
    table.rows.push_back({k + 1, S.eigenvalues[k]});
    out << k + 1 << ' ' << S.eigenvalues[k] << '\n';
  }
  emit_table(c, table);
  return 0;
}

double builtin_rhs(const std::string& name, double x, double a, double b) {
  if (name == "gaussian") return std::exp(-x * x);
  if (name == "bump") {
    const double y = (2.0 * x - a - b) / (b - a);
    return std::abs(y) < 1.0 ? (1.0 - y * y) * (1.0 - y * y) : 0.0;
  }
  return 1.0;
}

int run_solve(const RunConfig& c, std::ostream& out) {
  const auto op = assemble_dirichlet(Grid1D(c.a, c.b, c.n), FractionalOrder(c.s));
  const auto& nodes = op.grid().nodes;
  std::vector<double> f(nodes.size());
  for (std::size_t i = 0; i < nodes.size(); ++i) f[i] = builtin_rhs(c.rhs, nodes[i], c.a, c.b);
  const auto result = solve_exterior_dirichlet(op, c.lambda, f);
  Table table{{"x", "u"}, {}};
  for (std::size_t i = 0; i < nodes.size(); ++i) table.rows.push_back({nodes[i], result.u[i]});
  const std::size_t n = result.u.size();
  const double centre = n % 2 == 0 ? 0.5 * (result.u[n / 2 - 1] + result.u[n / 2]) : result.u[n / 2];
  brief(out) << "iterations " << result.iterations << "\nrelative_residual " << result.relative_residual
             << "\nu_centre " << centre << '\n';
  emit_table(c, table);
  return 0;
}

int run_convergence(const RunConfig& c, std::ostream& out) {
  const ScalarField1D gauss{[](double x) { return std::exp(-x * x); }, {1.0, 10.0}, Smoothness::c2_near_target};
  const auto rows = convergence_to_laplacian(gauss, gauss, c.s_list);
  Table table{{"s", "lhs", "rhs", "gap"}, {}};
  brief(out);
  for (const auto& row : rows) {
    table.rows.push_back({row.s, row.lhs, row.rhs, row.gap});
    out << row.s << ' ' << row.lhs << ' ' << row.rhs << ' ' << row.gap << '\n';
  }
  emit_table(c, table);
  return 0;
}

// ---- verify ----------------------------------------------------------------

using Job = std::function<std::vector<CheckReport>()>;

// Runs jobs on a bounded pool; results come back in job order. The first failure
// (in job order) is rethrown after all workers finish.
std::vector<std::vector<CheckReport>> run_pool(const std::vector<Job>& jobs, unsigned workers) {
  std::vector<std::vector<CheckReport>> results(jobs.size());
  std::vector<std::exception_ptr> errors(jobs.size());
  std::atomic<std::size_t> next{0};
  auto worker = [&] {
    for (std::size_t k; (k = next++) < jobs.size();) {
      try {
        results[k] = jobs[k]();
      } catch (...) {
        errors[k] = std::current_exception();
      }
    }
  };
  std::vector<std::thread> pool;
  const unsigned count = std::max(1u, std::min<unsigned>(workers, static_cast<unsigned>(jobs.size())));
  for (unsigned i = 0; i + 1 < count; ++i) pool.emplace_back(worker);
  worker();
  for (auto& th : pool) th.join();
  for (const auto& e : errors)
    if (e) std::rethrow_exception(e);
  return results;
}

// Closed-form torsion value at the centre of (a, b).
double torsion_centre(double a, double b, double s) {
  const double radius = 0.5 * (b - a);
  return std::pow(radius, 2.0 * s) * std::tgamma(0.5) /
         (std::pow(4.0, s) * std::tgamma(1.0 + s) * std::tgamma(0.5 + s));
}

Json report_json(const CheckReport& r) {
  Json fitted = Json::object();
  for (const auto& [k, v] : r.fitted_constants) fitted[k] = v;
  Json crit = Json::array();
  for (const auto& c : r.criteria) crit.push_back({{"name", c.name}, {"value", c.value}, {"limit", c.limit}});
  Json j;
  j["name"] = r.name;
  j["fitted_constants"] = fitted;
  j["max_violation"] = r.max_violation;
  j["tolerance"] = r.tolerance;
  j["pass"] = r.pass;
  j["samples"] = r.samples;
  j["seed"] = r.seed;
  j["refinement_trend"] = r.refinement_trend;
  j["criteria"] = crit;
  return j;
}

int run_verify(const RunConfig& c, std::ostream& out) {
  const FractionalOrder order(c.s, 1);
  const std::vector<double> r9{0, 0.25, 0.5, 1, 1.5, 2, 3, 4, 5};
  const auto selected = [&](const std::string& name) { return c.check == "all" || c.check == name; };

  std::optional<DiscreteOperator> op;
  std::optional<SpectralDecomposition> S;
  const bool needs_spectrum = selected("discrete_ultracontractivity") || selected("resolvent_sector") ||
                              selected("sector_norm") || selected("holomorphy_axioms");
  if (needs_spectrum || selected("submarkovian_forms") || selected("form_criterion")) {
    op = assemble_dirichlet(Grid1D(c.a, c.b, c.n), order);
  }
  if (needs_spectrum) S = spectrum(*op);

  std::vector<std::pair<std::string, Job>> table = {
      {"kernel_agreement", [&] { return std::vector{check_kernel_agreement({0.3, 0.5, 0.7}, {0.1, 1.0, 10.0}, r9)}; }},
      {"two_sided_bounds",
       [&] {
         std::vector<CheckReport> out;
         for (int dim : {1, 2})
           out.push_back(check_two_sided_bounds(FractionalOrder(c.s, dim), {0.1, 1.0, 10.0},
                                                {0, 0.1, 0.3, 1, 3, 10, 30, 100, 300, 1000}));
         return out;
       }},
      {"ultracontractivity",
       [&] {
         std::vector<CheckReport> out;
         for (int dim : {1, 2})
           out.push_back(check_ultracontractivity(FractionalOrder(c.s, dim), {0.01, 0.1, 1.0, 10.0, 100.0}));
         return out;
       }},
      {"discrete_ultracontractivity",
       [&] { return std::vector{check_discrete_ultracontractivity(*S, order, {0.01, 0.03, 0.1, 0.3, 1.0})}; }},
      {"complex_kernel_bound",
       [&] {
         return std::vector{check_complex_kernel_bound(order, c.epsilon, 0.9 * c.epsilon * kPi / 2, {0.5, 1.0, 2.0},
                                                       {0, 0.5, 1, 2, 4, 8})};
       }},
      {"domination", [&] { return std::vector{check_domination(c.a, c.b, c.n, order, {0.01, 0.1, 1.0}, 20, c.seed)}; }},
      {"form_criterion",
       [&] {
         const double half = 0.5 * (c.b - c.a);
         const auto outer = assemble_dirichlet(Grid1D(c.a - half, c.b + half, 2 * c.n), order);
         return std::vector{check_form_criterion(*op, outer, 100, c.seed)};
       }},
      {"submarkovian_forms", [&] { return std::vector{check_submarkovian_forms(*op, 100, c.seed)}; }},
      {"resolvent_sector",
       [&] {
         std::vector<double> radii;
         const double lo = S->eigenvalues.front() / 100.0, hi = S->eigenvalues.back() * 100.0;
         for (int k = 0; k < 20; ++k) radii.push_back(lo * std::pow(hi / lo, k / 19.0));
         return std::vector{check_resolvent_sector(*S, {kPi / 2, 2.0, 2.5, 3.0}, radii)};
       }},
      {"sector_norm",
       [&] {
         return std::vector{
             check_sector_norm_Lp(*S, order, {0.0, 0.5, 0.9, 1.2}, {1e-3, 1e-2, 1e-1, 1.0, 10.0, 100.0}, c.seed)};
       }},
      {"holomorphy_axioms", [&] { return std::vector{check_holomorphy_axioms(*S, op->grid(), 20, c.seed)}; }},
      {"first_eigenvalue", [&] { return std::vector{check_first_eigenvalue(c.a, c.b, c.n, order)}; }},
      {"exterior_dirichlet",
       [&] {
         return std::vector{
             check_exterior_dirichlet(c.a, c.b, c.n, order, c.seed, torsion_centre(c.a, c.b, c.s))};
       }},
      {"laplacian_limit", [&] { return std::vector{check_laplacian_limit(c.s_list)}; }},
      {"extension_constants", [&] { return std::vector{check_extension_constants(2.0, 1.0)}; }},
  };

  std::vector<Job> jobs;
  for (const auto& [name, job] : table)
    if (selected(name)) jobs.push_back(job);
  const auto results = run_pool(jobs, worker_count());

  Json checks = Json::array();
  bool all_pass = true;
  brief(out);
  for (const auto& group : results) {
    for (const auto& r : group) {
      all_pass = all_pass && r.pass;
      out << (r.pass ? "PASS " : "FAIL ") << r.name << " max_violation=" << r.max_violation
          << " tolerance=" << r.tolerance << '\n';
      checks.push_back(report_json(r));
    }
  }
  if (!c.out.empty()) {
    Json doc;
    doc["version"] = kVersion;
    doc["config"] = config_json(c);
    doc["checks"] = checks;
    if (output_format(c) == "json") {
      write_file(c.out, doc.dump(2) + "\n");
    } else {
      std::ostringstream os;
      os.imbue(std::locale::classic());
      os << std::setprecision(17) << "name,pass,max_violation,tolerance,samples,seed\n";
      for (const auto& group : results)
        for (const auto& r : group)
          os << r.name << ',' << (r.pass ? "true" : "false") << ',' << r.max_violation << ',' << r.tolerance << ','
             << r.samples << ',' << r.seed << '\n';
      write_file(c.out, os.str());
    }
  }
  return all_pass ? 0 : 1;
}

}  // namespace

const std::vector<std::string>& check_names() {
  static const std::vector<std::string> names = {
      "kernel_agreement",   "two_sided_bounds", "ultracontractivity", "discrete_ultracontractivity",
      "complex_kernel_bound", "domination",     "form_criterion",     "submarkovian_forms",
      "resolvent_sector",   "sector_norm",      "holomorphy_axioms",  "first_eigenvalue",
      "exterior_dirichlet", "laplacian_limit",  "extension_constants"};
  return names;
}

unsigned worker_count() {
  if (const char* env = std::getenv("FRACSEMI_THREADS")) {
    char* end = nullptr;
    const long v = std::strtol(env, &end, 10);
    if (end != env && *end == '\0' && v > 0) return static_cast<unsigned>(v);
  }
  return std::max(1u, std::thread::hardware_concurrency());
}

bool parse(int argc, const char* const* argv, RunConfig& config, std::ostream& out) {
  CLI::App app{"Fractional heat semigroups: kernels, discrete Dirichlet operators, estimate checks"};
  app.require_subcommand(1);
  app.fallthrough();

  RunConfig flags;
  std::string config_path;
  std::vector<double> omega;
  std::vector<std::pair<CLI::Option*, std::function<void(RunConfig&)>>> overrides;
  auto bind = [&](CLI::Option* opt, std::function<void(RunConfig&)> apply) { overrides.emplace_back(opt, apply); };

  app.add_option("--config", config_path, "JSON file with parameters; flags override it");
  bind(app.add_option("--s", flags.s, "fractional order in (0, 1)"), [&](RunConfig& c) { c.s = flags.s; });
  bind(app.add_option("--N", flags.N, "spatial dimension"), [&](RunConfig& c) { c.N = flags.N; });
  bind(app.add_option("--t", flags.t, "times (comma separated)")->delimiter(','), [&](RunConfig& c) { c.t = flags.t; });
  bind(app.add_option("--r", flags.r, "distances (comma separated)")->delimiter(','),
       [&](RunConfig& c) { c.r = flags.r; });
  bind(app.add_option("--s-list", flags.s_list, "orders for convergence / laplacian_limit")->delimiter(','),
       [&](RunConfig& c) { c.s_list = flags.s_list; });
  bind(app.add_option("--a", flags.a, "left end of the interval"), [&](RunConfig& c) { c.a = flags.a; });
  bind(app.add_option("--b", flags.b, "right end of the interval"), [&](RunConfig& c) { c.b = flags.b; });
  bind(app.add_option("--omega", omega, "interval as a,b")->delimiter(',')->expected(2),
       [&](RunConfig& c) {
         c.a = omega.at(0);
         c.b = omega.at(1);
       });
  bind(app.add_option("--n", flags.n, "number of cells"), [&](RunConfig& c) { c.n = flags.n; });
  bind(app.add_option("--count", flags.count, "eigenvalues to report (0 = all)"),
       [&](RunConfig& c) { c.count = flags.count; });
  bind(app.add_option("--lambda", flags.lambda, "shift in (A + lambda) u = f"),
       [&](RunConfig& c) { c.lambda = flags.lambda; });
  bind(app.add_option("--epsilon", flags.epsilon, "decay weakening in the complex kernel bound"),
       [&](RunConfig& c) { c.epsilon = flags.epsilon; });
  bind(app.add_option("--seed", flags.seed, "random seed"), [&](RunConfig& c) { c.seed = flags.seed; });
  bind(app.add_option("--method", flags.method, "subordinated | fourier | closed"),
       [&](RunConfig& c) { c.method = flags.method; });
  bind(app.add_option("--f", flags.rhs, "right-hand side: one | gaussian | bump"),
       [&](RunConfig& c) { c.rhs = flags.rhs; });
  bind(app.add_option("--out", flags.out, "output file"), [&](RunConfig& c) { c.out = flags.out; });
  bind(app.add_option("--format", flags.format, "csv | json (default: from the --out extension)"),
       [&](RunConfig& c) { c.format = flags.format; });

  app.add_subcommand("kernel", "evaluate P_s(t, r)");
  app.add_subcommand("spectrum", "eigenvalues of the discrete Dirichlet operator");
  app.add_subcommand("solve", "solve (A + lambda) u = f with zero exterior data");
  app.add_subcommand("convergence", "s -> 1 convergence for the Gaussian pair");
  auto* verify = app.add_subcommand("verify", "run estimate checks");
  std::string check = "all";
  verify->add_option("check", check, "all or one check name");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return false;
  } catch (const CLI::ParseError& e) {
    throw UsageError(e.what());
  }

  RunConfig c;
  if (!config_path.empty()) {
    std::ifstream f(config_path);
    if (!f) throw UsageError("--config: cannot open '" + config_path + "'");
    Json j;
    try {
      j = Json::parse(f);
    } catch (const nlohmann::json::exception& e) {
      throw UsageError(std::string("--config: ") + e.what());
    }
    apply_json(j, c);
  }
  for (const auto& [opt, apply] : overrides)
    if (opt->count() > 0) apply(c);
  for (auto* sub : app.get_subcommands()) c.command = kCommands.at(sub->get_name());
  if (c.command == Command::verify && verify->get_option("check")->count() > 0) c.check = check;
  validate(c);
  config = c;
  return true;
}

int run(const RunConfig& config, std::ostream& out) {
  switch (config.command) {
    case Command::kernel: return run_kernel(config, out);
    case Command::spectrum: return run_spectrum(config, out);
    case Command::solve: return run_solve(config, out);
    case Command::convergence: return run_convergence(config, out);
    case Command::verify: return run_verify(config, out);
  }
  return 2;
}

int main_entry(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  RunConfig config;
  try {
    if (!parse(argc, argv, config, out)) return 0;
  } catch (const UsageError& e) {
    err << "usage error: " << e.what() << '\n';
    return 2;
  }
  try {
    return run(config, out);
  } catch (const UsageError& e) {
    err << "usage error: " << e.what() << '\n';
    return 2;
  } catch (const std::domain_error& e) {
    err << "error: " << e.what() << '\n';
    return 2;
  } catch (const std::invalid_argument& e) {
    err << "error: " << e.what() << '\n';
    return 2;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << '\n';
    return 1;
  }
}

}  // namespace fracsemi::cli
