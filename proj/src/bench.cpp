#include "csg/bench.hpp"

#include <cmath>
#include <cstdio>
#include <fstream>
#include <set>
#include <sstream>
#include <stdexcept>

#include "csg/baselines.hpp"
#include "csg/conjugate_engine.hpp"
#include "csg/schedules.hpp"

namespace csg {

namespace {

std::string format_double(double v) {
  char buf[40];
  std::snprintf(buf, sizeof(buf), "%.17g", v);
  return buf;
}

std::string format_short(double v) {
  char buf[40];
  std::snprintf(buf, sizeof(buf), "%g", v);
  return buf;
}

double parse_double(const std::string& text, const std::string& what) {
  try {
    std::size_t used = 0;
    const double v = std::stod(text, &used);
    if (used != text.size()) throw std::invalid_argument(what);
    return v;
  } catch (const std::exception&) {
    throw std::invalid_argument("malformed " + what + " '" + text + "'");
  }
}

std::int64_t parse_int(const std::string& text, const std::string& what) {
  try {
    std::size_t used = 0;
    const long long v = std::stoll(text, &used);
    if (used != text.size()) throw std::invalid_argument(what);
    return v;
  } catch (const std::exception&) {
    throw std::invalid_argument("malformed " + what + " '" + text + "'");
  }
}

std::vector<double> parse_double_list(const std::string& text, const std::string& what) {
  std::vector<double> values;
  std::istringstream in(text);
  std::string part;
  while (std::getline(in, part, ',')) {
    values.push_back(parse_double(part, what));
  }
  if (values.empty()) throw std::invalid_argument(what + " list is empty");
  return values;
}

/// Reads method parameters out of the config map, complaining about unknown
/// keys so typos cannot silently fall back to defaults.
class ParamReader {
 public:
  explicit ParamReader(const std::map<std::string, std::string>& params) : params_(params) {}

  std::optional<std::string> take(const std::string& key) {
    auto it = params_.find(key);
    if (it == params_.end()) return std::nullopt;
    used_.insert(key);
    return it->second;
  }

  double take_double(const std::string& key, double fallback) {
    auto v = take(key);
    return v ? parse_double(*v, "parameter " + key) : fallback;
  }

  ScheduleSpec take_schedule(const std::string& key, const ScheduleSpec& fallback) {
    auto v = take(key);
    if (!v) return fallback;
    try {
      return ScheduleSpec::parse(*v);
    } catch (const std::exception& e) {
      throw std::invalid_argument("parameter " + key + ": " + e.what());
    }
  }

  void finish() const {
    for (const auto& [key, value] : params_) {
      if (!used_.count(key)) {
        throw std::invalid_argument("unknown parameter '" + key + "'");
      }
    }
  }

 private:
  const std::map<std::string, std::string>& params_;
  std::set<std::string> used_;
};

double default_g0_norm(const ProblemSpec& problem, const DenseVector& x0) {
  // Probe the pure objective directly so the setup does not count as an
  // oracle call of the run.
  return norm(problem.objective->evaluate(x0).subgradient);
}

double default_x_star_dist(const ProblemSpec& problem, const DenseVector& x0) {
  if (!problem.x_star.has_value()) {
    throw std::invalid_argument("problem '" + problem.name +
                                "' has no known minimizer; pass param dist explicitly");
  }
  return distance(x0, *problem.x_star);
}

}  // namespace

void ExperimentConfig::validate() const {
  if (problem.empty()) throw std::invalid_argument("config is missing a problem");
  if (method.empty()) throw std::invalid_argument("config is missing a method");
  if (max_evals < 1) throw std::invalid_argument("max_evals must be at least 1");
  for (std::size_t i = 0; i < eps_ladder.size(); ++i) {
    if (!(eps_ladder[i] > 0.0)) {
      throw std::invalid_argument("eps ladder entries must be positive");
    }
    if (i > 0 && !(eps_ladder[i] < eps_ladder[i - 1])) {
      throw std::invalid_argument("eps ladder must be strictly decreasing");
    }
  }
}

ExperimentOutcome run_experiment(const ExperimentConfig& config) {
  config.validate();
  const ProblemSpec problem = make_problem(config.problem);

  DenseVector x0 = config.x0.value_or(problem.x0_default);
  if (static_cast<int>(x0.size()) != problem.dimension()) {
    throw std::invalid_argument("x0 has dimension " + std::to_string(x0.size()) +
                                " but problem '" + problem.name + "' needs " +
                                std::to_string(problem.dimension()));
  }

  if (!config.eps_ladder.empty() && !problem.f_star.has_value()) {
    throw std::invalid_argument("problem '" + problem.name +
                                "' has no known optimum; eps targets are undefined");
  }
  const double f_star = problem.f_star.value_or(0.0);

  StoppingRule stop;
  stop.max_evals = config.max_evals;
  if (!config.eps_ladder.empty()) {
    stop.target_value = f_star + config.eps_ladder.back();
  }

  SubgradientOracle oracle(*problem.objective);
  ParamReader params(config.params);
  // first-hit counts need every row, so the user's retention cap is applied
  // after the ladder is read off
  const std::int64_t user_cap = config.trace_cap;
  const std::int64_t run_cap = config.eps_ladder.empty() ? user_cap : kUnlimitedTrace;
  RunResult result;

  if (config.method == "sgm") {
    const double lambda0 = params.take_double("lambda0", 0.1);
    params.finish();
    result = run_sgm(oracle, x0, lambda0, stop, run_cap);
  } else if (config.method == "sgmt" || config.method == "asg" || config.method == "dasg") {
    double dist = 0.0;
    if (auto v = params.take("dist")) {
      dist = parse_double(*v, "parameter dist");
    } else {
      dist = default_x_star_dist(problem, x0);
    }
    const double lipschitz = params.take_double("lipschitz", default_g0_norm(problem, x0));
    params.finish();
    if (config.method == "sgmt") {
      result = run_sgmt(oracle, x0, dist, lipschitz, stop, run_cap);
    } else if (config.method == "asg") {
      result = run_asg(oracle, x0, dist, lipschitz, stop, run_cap);
    } else {
      result = run_dasg(oracle, x0, dist, lipschitz, stop, run_cap);
    }
  } else if (config.method == "csgi") {
    CsgiParams p = paper_csgi_params(default_g0_norm(problem, x0));
    p.theta = params.take_double("theta", p.theta);
    p.mu = params.take_double("mu", p.mu);
    p.mu_increment = params.take_double("mu_increment", p.mu_increment);
    p.alpha_prime = params.take_schedule("alpha_prime", p.alpha_prime);
    p.alpha_dprime = params.take_schedule("alpha_dprime", p.alpha_dprime);
    p.beta_prime = params.take_schedule("beta_prime", p.beta_prime);
    p.beta_dprime = params.take_schedule("beta_dprime", p.beta_dprime);
    p.beta_tprime = params.take_schedule("beta_tprime", p.beta_tprime);
    params.finish();
    result = run_csgi(oracle, x0, p, stop, run_cap);
  } else if (config.method == "csgm") {
    const double theta = params.take_double("theta", 0.3);
    const double mu = params.take_double("mu", kInfiniteLevel);
    const ScheduleSpec alpha =
        params.take_schedule("alpha", ScheduleSpec::geometric(0.8, 0.8));
    const ScheduleSpec beta = params.take_schedule("beta", ScheduleSpec::harmonic(0.05));
    const ScheduleSpec eta = params.take_schedule("eta", ScheduleSpec::harmonic(1.0));
    const ScheduleSpec d = params.take_schedule("d", ScheduleSpec::harmonic(1.0));
    params.finish();
    result = run_csgm(
        oracle, x0, theta, mu, alpha, beta,
        [eta](std::int64_t t) { return eta.term(t); },
        [d](std::int64_t t) { return d.term(t); }, stop, run_cap);
  } else {
    throw std::invalid_argument("unknown method '" + config.method + "'");
  }

  ExperimentOutcome outcome;
  outcome.row.method = config.method;
  for (double eps : config.eps_ladder) {
    outcome.row.entries.push_back({eps, first_hit(result.trace, f_star, eps)});
  }
  if (user_cap != kUnlimitedTrace &&
      static_cast<std::int64_t>(result.trace.size()) > user_cap) {
    result.trace.resize(user_cap);
  }
  if (!config.trace_path.empty()) {
    write_trace(result.trace, config.trace_path);
  }
  outcome.result = std::move(result);
  outcome.f_star = f_star;
  return outcome;
}

std::optional<std::int64_t> first_hit(const std::vector<IterationRecord>& trace, double f_star,
                                      double eps) {
  for (const IterationRecord& row : trace) {
    if (row.phi - f_star <= eps) return row.eval_count;
  }
  return std::nullopt;
}

namespace {

ExperimentConfig reproduction_config(const std::string& method, std::vector<double> ladder,
                                     std::int64_t budget) {
  ExperimentConfig config;
  config.problem = "shor";
  config.method = method;
  config.eps_ladder = std::move(ladder);
  config.max_evals = budget;
  return config;
}

ReproducedRow reproduce_one(const ExperimentConfig& config,
                            std::vector<std::optional<std::int64_t>> reference) {
  ExperimentOutcome outcome = run_experiment(config);
  ReproducedRow row;
  row.row = std::move(outcome.row);
  row.reference = std::move(reference);
  row.best_gap = outcome.result.best_value - outcome.f_star;
  row.budget = config.max_evals;
  return row;
}

}  // namespace

std::vector<ReproducedRow> reproduce_table(const std::string& which) {
  std::vector<ReproducedRow> rows;
  if (which == "table1") {
    rows.push_back(reproduce_one(
        reproduction_config("sgm", {0.1, 0.01, 0.001, 0.0001, 0.00002}, 100000),
        {81, 320, 1645, 8243, 35000}));
    rows.push_back(reproduce_one(
        reproduction_config("csgi", {0.1, 0.01, 0.001, 0.0001, 0.00001}, 10000),
        {141, 253, 466, 640, 860}));
  } else if (which == "table2") {
    rows.push_back(reproduce_one(reproduction_config("sgmt", {0.1, 0.01, 0.001}, 35000),
                                 {116, 4510, std::nullopt}));
    rows.push_back(reproduce_one(reproduction_config("asg", {0.1}, 10000), {std::nullopt}));
    rows.push_back(reproduce_one(reproduction_config("dasg", {0.1, 0.01, 0.001}, 70000),
                                 {324, 3254, 34169}));
  } else {
    throw std::invalid_argument("unknown table '" + which + "' (want table1 or table2)");
  }
  return rows;
}

namespace {

struct ReportLine {
  std::string method;
  std::string eps;
  std::string it;
  std::string reference_it;
  std::string ratio;
};

std::vector<ReportLine> flatten(const std::vector<ReproducedRow>& rows) {
  std::vector<ReportLine> lines;
  for (const ReproducedRow& r : rows) {
    for (std::size_t i = 0; i < r.row.entries.size(); ++i) {
      const TableEntry& e = r.row.entries[i];
      ReportLine line;
      line.method = r.row.method;
      line.eps = format_short(e.eps);
      line.it = e.evals ? std::to_string(*e.evals) : "-";
      std::optional<std::int64_t> ref;
      if (i < r.reference.size()) ref = r.reference[i];
      line.reference_it = ref ? std::to_string(*ref) : "-";
      if (e.evals && ref) {
        char buf[32];
        std::snprintf(buf, sizeof(buf), "%.3f",
                      static_cast<double>(*e.evals) / static_cast<double>(*ref));
        line.ratio = buf;
      } else {
        line.ratio = "-";
      }
      lines.push_back(std::move(line));
    }
  }
  return lines;
}

std::vector<ReportLine> flatten(const std::vector<TableRow>& rows) {
  std::vector<ReportLine> lines;
  for (const TableRow& r : rows) {
    for (const TableEntry& e : r.entries) {
      ReportLine line;
      line.method = r.method;
      line.eps = format_short(e.eps);
      line.it = e.evals ? std::to_string(*e.evals) : "-";
      lines.push_back(std::move(line));
    }
  }
  return lines;
}

std::string render_csv(const std::vector<ReportLine>& lines, bool with_reference) {
  std::ostringstream out;
  out << (with_reference ? "method,eps,it,reference_it,ratio\n" : "method,eps,it\n");
  for (const ReportLine& line : lines) {
    out << line.method << ',' << line.eps << ',' << line.it;
    if (with_reference) out << ',' << line.reference_it << ',' << line.ratio;
    out << '\n';
  }
  return out.str();
}

std::string render_markdown(const std::vector<ReportLine>& lines, bool with_reference) {
  std::ostringstream out;
  if (with_reference) {
    out << "| method | eps | it | reference_it | ratio |\n";
    out << "|---|---|---|---|---|\n";
    for (const ReportLine& line : lines) {
      out << "| " << line.method << " | " << line.eps << " | " << line.it << " | "
          << line.reference_it << " | " << line.ratio << " |\n";
    }
  } else {
    out << "| method | eps | it |\n|---|---|---|\n";
    for (const ReportLine& line : lines) {
      out << "| " << line.method << " | " << line.eps << " | " << line.it << " |\n";
    }
  }
  return out.str();
}

}  // namespace

std::string emit_report(const std::vector<ReproducedRow>& rows, ReportFormat format) {
  if (rows.empty()) throw std::invalid_argument("no rows to report");
  const std::vector<ReportLine> lines = flatten(rows);
  return format == ReportFormat::csv ? render_csv(lines, true) : render_markdown(lines, true);
}

std::string emit_report(const std::vector<TableRow>& rows, ReportFormat format) {
  if (rows.empty()) throw std::invalid_argument("no rows to report");
  const std::vector<ReportLine> lines = flatten(rows);
  return format == ReportFormat::csv ? render_csv(lines, false)
                                     : render_markdown(lines, false);
}

std::string reference_table_markdown(const std::string& which) {
  if (which == "table1") {
    return "Published counts (all columns, including the two methods defined only by\n"
           "citation and therefore not reproduced here):\n\n"
           "| eps | SGM | eps | NASGM | eps | DSGM | eps | CSGI |\n"
           "|---|---|---|---|---|---|---|---|\n"
           "| 0.1 | 81 | 0.1 | 30 | 0.1 | 92 | 0.1 | 141 |\n"
           "| 0.01 | 320 | 0.01 | 63 | 0.01 | 352 | 0.01 | 253 |\n"
           "| 0.001 | 1645 | 0.004 | 10000 | 0.001 | 1058 | 0.001 | 466 |\n"
           "| 0.0001 | 8243 | - | - | 0.0001 | 2809 | 0.0001 | 640 |\n"
           "| 0.00002 | 35000 | - | - | 0.00001 | 5909 | 0.00001 | 860 |\n";
  }
  if (which == "table2") {
    return "Published counts:\n\n"
           "| eps | SGMT | eps | ASG | eps | DASG |\n"
           "|---|---|---|---|---|---|\n"
           "| 0.1 | 116 | 2.038 | 10000 | 0.1 | 324 |\n"
           "| 0.01 | 4510 | - | - | 0.01 | 3254 |\n"
           "| 0.0013 | 35000 | - | - | 0.001 | 34169 |\n";
  }
  throw std::invalid_argument("unknown table '" + which + "'");
}

std::string format_trace(const std::vector<IterationRecord>& trace) {
  std::ostringstream out;
  for (const IterationRecord& row : trace) {
    out << "k=" << row.k << " f_x=" << format_double(row.f_x)
        << " phi=" << format_double(row.phi) << " p_norm=" << format_double(row.p_norm)
        << " lambda=" << format_double(row.lambda) << " event=" << to_string(row.event)
        << " evals=" << row.eval_count << '\n';
  }
  return out.str();
}

void write_trace(const std::vector<IterationRecord>& trace, const std::string& path) {
  std::ofstream out(path, std::ios::binary);
  if (!out) {
    throw std::runtime_error("cannot open trace file '" + path + "' for writing");
  }
  out << format_trace(trace);
  if (!out) {
    throw std::runtime_error("failed while writing trace file '" + path + "'");
  }
}

void apply_config_entry(ExperimentConfig& config, const std::string& key,
                        const std::string& value) {
  if (key == "problem") {
    config.problem = value;
  } else if (key == "method") {
    config.method = value;
  } else if (key == "eps") {
    config.eps_ladder = parse_double_list(value, "eps");
  } else if (key == "x0") {
    config.x0 = parse_double_list(value, "x0");
  } else if (key == "max_evals") {
    config.max_evals = parse_int(value, "max_evals");
  } else if (key == "trace") {
    config.trace_path = value;
  } else if (key == "trace_cap") {
    config.trace_cap = parse_int(value, "trace_cap");
  } else if (key.rfind("param.", 0) == 0) {
    const std::string name = key.substr(6);
    if (name.empty()) throw std::invalid_argument("empty parameter name");
    config.params[name] = value;
  } else {
    throw std::invalid_argument("unknown config key '" + key + "'");
  }
}

void apply_config_file(ExperimentConfig& config, const std::string& path) {
  std::ifstream in(path);
  if (!in) {
    throw std::runtime_error("cannot open config file '" + path + "'");
  }
  std::string line;
  int line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    const std::size_t comment = line.find('#');
    if (comment != std::string::npos) line.erase(comment);
    const auto first = line.find_first_not_of(" \t\r");
    if (first == std::string::npos) continue;
    const auto eq = line.find('=');
    if (eq == std::string::npos) {
      throw std::invalid_argument(path + ":" + std::to_string(line_no) +
                                  ": expected key = value");
    }
    auto trim = [](const std::string& s) {
      const auto b = s.find_first_not_of(" \t\r");
      const auto e = s.find_last_not_of(" \t\r");
      return b == std::string::npos ? std::string() : s.substr(b, e - b + 1);
    };
    const std::string key = trim(line.substr(0, eq));
    const std::string value = trim(line.substr(eq + 1));
    if (key.empty() || value.empty()) {
      throw std::invalid_argument(path + ":" + std::to_string(line_no) +
                                  ": expected key = value");
    }
    apply_config_entry(config, key, value);
  }
}

ExperimentConfig load_config_file(const std::string& path) {
  ExperimentConfig config;
  apply_config_file(config, path);
  return config;
}

std::vector<std::pair<std::string, std::string>> method_catalog() {
  return {
      {"sgm", "subgradient method, lambda_k = lambda0/(k+1)   [param lambda0]"},
      {"sgmt", "subgradient method, lambda_k = (dist/lipschitz)/sqrt(k+1)   [params dist, lipschitz]"},
      {"asg", "simple dual averaging from the starting point   [params dist, lipschitz]"},
      {"dasg", "simple double averaging   [params dist, lipschitz]"},
      {"csgi", "conjugate subgradient with coupled restart schedules   [params theta, mu, "
       "mu_increment, alpha_prime, alpha_dprime, beta_prime, beta_dprime, beta_tprime]"},
      {"csgm", "conjugate subgradient with raw threshold sequences   [params theta, mu, "
       "alpha, beta, eta, d]"},
  };
}

}  // namespace csg
