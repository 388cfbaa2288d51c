// Command line front end. Talks to the solver library exclusively through
// the C interface in csg.h.

#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <memory>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "csg.h"

namespace {

constexpr int kExitOk = 0;
constexpr int kExitNotReached = 1;
constexpr int kExitUsage = 2;

int usage_error(const char* context) {
  std::cerr << "error: " << context << ": " << csg_last_error() << "\n";
  return kExitUsage;
}

struct ConfigHandle {
  csg_config* ptr = csg_config_create();
  ~ConfigHandle() { csg_config_destroy(ptr); }
};

int write_or_print(const std::string& text, const std::string& out_path) {
  if (out_path.empty()) {
    std::cout << text;
    return kExitOk;
  }
  std::ofstream out(out_path, std::ios::binary);
  if (!out) {
    std::cerr << "error: cannot open '" << out_path << "' for writing\n";
    return kExitUsage;
  }
  out << text;
  return kExitOk;
}

int run_solve(const std::string& config_path, const std::vector<std::string>& entries,
              const std::string& format) {
  ConfigHandle config;
  if (!config.ptr) {
    std::cerr << "error: out of memory\n";
    return kExitUsage;
  }
  if (!config_path.empty() &&
      csg_config_load_file(config.ptr, config_path.c_str()) != CSG_OK) {
    return usage_error("config file");
  }
  for (const std::string& entry : entries) {
    const std::size_t eq = entry.find('=');
    if (eq == std::string::npos) {
      std::cerr << "error: expected key=value, got '" << entry << "'\n";
      return kExitUsage;
    }
    const std::string key = entry.substr(0, eq);
    const std::string value = entry.substr(eq + 1);
    if (csg_config_set(config.ptr, key.c_str(), value.c_str()) != CSG_OK) {
      return usage_error(entry.c_str());
    }
  }

  csg_run* run = nullptr;
  if (csg_solve(config.ptr, &run) != CSG_OK) {
    std::cerr << "error: solve failed: " << csg_last_error() << "\n";
    return kExitUsage;
  }
  std::unique_ptr<csg_run, decltype(&csg_run_destroy)> run_guard(run, &csg_run_destroy);

  std::printf("best value   %.12g\n", csg_run_best_value(run));
  const int dim = csg_run_dimension(run);
  std::vector<double> point(dim);
  if (csg_run_best_point(run, point.data(), dim) == CSG_OK) {
    std::printf("best point  ");
    for (double v : point) std::printf(" %.12g", v);
    std::printf("\n");
  }
  std::printf("evaluations  %lld\n", csg_run_total_evals(run));
  std::printf("termination  %s\n", csg_run_termination(run));

  bool all_reached = true;
  if (csg_run_target_count(run) > 0) {
    char* table = nullptr;
    if (csg_run_render(run, format.c_str(), &table) == CSG_OK) {
      std::printf("\n%s", table);
      csg_string_free(table);
    }
    for (int i = 0; i < csg_run_target_count(run); ++i) {
      double eps = 0.0;
      long long evals = 0;
      if (csg_run_target(run, i, &eps, &evals) == CSG_NOT_REACHED) {
        all_reached = false;
      }
    }
  }
  return all_reached ? kExitOk : kExitNotReached;
}

int run_reproduce(const std::string& which, const std::string& format,
                  const std::string& out_path) {
  csg_table* table = nullptr;
  if (csg_reproduce(which.c_str(), &table) != CSG_OK) {
    return usage_error("reproduce");
  }
  std::unique_ptr<csg_table, decltype(&csg_table_destroy)> guard(table, &csg_table_destroy);
  char* text = nullptr;
  if (csg_table_render(table, format.c_str(), &text) != CSG_OK) {
    return usage_error("render");
  }
  const std::string rendered = text;
  csg_string_free(text);
  return write_or_print(rendered, out_path);
}

int run_list(const std::string& what) {
  char* text = nullptr;
  if (csg_list(what.c_str(), &text) != CSG_OK) {
    return usage_error("list");
  }
  std::cout << text;
  csg_string_free(text);
  return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"nonsmooth convex minimization toolkit"};
  app.require_subcommand(1);

  auto* solve = app.add_subcommand("solve", "run one solver configuration");
  std::string config_path;
  std::string problem, method, eps, trace;
  std::string solve_format = "markdown";
  long long max_evals = -1;
  std::vector<std::string> params;
  std::string x0;
  solve->add_option("--config", config_path, "key = value config file");
  solve->add_option("--problem", problem, "problem name (see: list problems)");
  solve->add_option("--method", method, "method name (see: list methods)");
  solve->add_option("--eps", eps, "comma separated accuracy ladder");
  solve->add_option("--x0", x0, "comma separated starting point override");
  solve->add_option("--max-evals", max_evals, "evaluation budget");
  solve->add_option("--trace", trace, "write the iteration trace to this file");
  solve->add_option("--param", params, "method parameter key=value (repeatable)")
      ->take_all();
  solve->add_option("--format", solve_format, "ladder table format: csv|markdown");

  auto* reproduce = app.add_subcommand("reproduce", "rerun a published benchmark table");
  std::string which;
  std::string repro_format = "markdown";
  std::string out_path;
  reproduce->add_option("table", which, "table1 or table2")->required();
  reproduce->add_option("--format", repro_format, "csv|markdown");
  reproduce->add_option("--out", out_path, "write the report here instead of stdout");

  auto* list = app.add_subcommand("list", "show the problem or method catalog");
  std::string what = "problems";
  list->add_option("what", what, "problems or methods");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kExitOk : kExitUsage;
  }

  if (solve->parsed()) {
    std::vector<std::string> entries;
    if (!problem.empty()) entries.push_back("problem=" + problem);
    if (!method.empty()) entries.push_back("method=" + method);
    if (!eps.empty()) entries.push_back("eps=" + eps);
    if (!x0.empty()) entries.push_back("x0=" + x0);
    if (max_evals >= 0) entries.push_back("max_evals=" + std::to_string(max_evals));
    if (!trace.empty()) entries.push_back("trace=" + trace);
    for (const std::string& p : params) entries.push_back("param." + p);
    return run_solve(config_path, entries, solve_format);
  }
  if (reproduce->parsed()) {
    return run_reproduce(which, repro_format, out_path);
  }
  return run_list(what);
}
