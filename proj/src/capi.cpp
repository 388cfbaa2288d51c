#include "csg.h"

#include <cstring>
#include <exception>
#include <memory>
#include <new>
#include <string>

#include "csg/bench.hpp"
#include "csg/oracle.hpp"

namespace {

thread_local std::string g_last_error;

csg_status fail(csg_status code, const char* message) {
  g_last_error = message;
  return code;
}

/// Maps C++ failures onto status codes at the library boundary.
template <typename Body>
csg_status guard(Body&& body) {
  try {
    return body();
  } catch (const csg::NumericError& e) {
    return fail(CSG_ERROR_NUMERIC, e.what());
  } catch (const std::invalid_argument& e) {
    return fail(CSG_ERROR_USAGE, e.what());
  } catch (const std::runtime_error& e) {
    return fail(CSG_ERROR_IO, e.what());
  } catch (const std::bad_alloc&) {
    return fail(CSG_ERROR_INTERNAL, "out of memory");
  } catch (const std::exception& e) {
    return fail(CSG_ERROR_INTERNAL, e.what());
  } catch (...) {
    return fail(CSG_ERROR_INTERNAL, "unknown error");
  }
}

char* copy_string(const std::string& text) {
  char* out = new char[text.size() + 1];
  std::memcpy(out, text.c_str(), text.size() + 1);
  return out;
}

csg_status parse_format(const char* format, csg::ReportFormat* out) {
  const std::string f = format ? format : "";
  if (f == "csv") {
    *out = csg::ReportFormat::csv;
  } else if (f == "markdown") {
    *out = csg::ReportFormat::markdown;
  } else {
    return fail(CSG_ERROR_USAGE, "format must be csv or markdown");
  }
  return CSG_OK;
}

}  // namespace

struct csg_config {
  csg::ExperimentConfig config;
};

struct csg_run {
  csg::ExperimentOutcome outcome;
};

struct csg_table {
  std::string which;
  std::vector<csg::ReproducedRow> rows;
};

extern "C" {

const char* csg_version(void) { return "0.1.0"; }

const char* csg_last_error(void) { return g_last_error.c_str(); }

csg_config* csg_config_create(void) { return new (std::nothrow) csg_config(); }

void csg_config_destroy(csg_config* config) { delete config; }

csg_status csg_config_set(csg_config* config, const char* key, const char* value) {
  if (!config || !key || !value) return fail(CSG_ERROR_USAGE, "null argument");
  return guard([&] {
    csg::apply_config_entry(config->config, key, value);
    return CSG_OK;
  });
}

csg_status csg_config_load_file(csg_config* config, const char* path) {
  if (!config || !path) return fail(CSG_ERROR_USAGE, "null argument");
  return guard([&] {
    csg::apply_config_file(config->config, path);
    return CSG_OK;
  });
}

csg_status csg_solve(const csg_config* config, csg_run** run_out) {
  if (!config || !run_out) return fail(CSG_ERROR_USAGE, "null argument");
  *run_out = nullptr;
  return guard([&] {
    auto run = std::make_unique<csg_run>();
    run->outcome = csg::run_experiment(config->config);
    *run_out = run.release();
    return CSG_OK;
  });
}

void csg_run_destroy(csg_run* run) { delete run; }

int csg_run_dimension(const csg_run* run) {
  return run ? static_cast<int>(run->outcome.result.best_point.size()) : 0;
}

double csg_run_best_value(const csg_run* run) {
  return run ? run->outcome.result.best_value : 0.0;
}

csg_status csg_run_best_point(const csg_run* run, double* buffer, int length) {
  if (!run || !buffer) return fail(CSG_ERROR_USAGE, "null argument");
  const csg::DenseVector& point = run->outcome.result.best_point;
  if (length < static_cast<int>(point.size())) {
    return fail(CSG_ERROR_USAGE, "buffer too small for best point");
  }
  std::memcpy(buffer, point.data(), point.size() * sizeof(double));
  return CSG_OK;
}

long long csg_run_total_evals(const csg_run* run) {
  return run ? run->outcome.result.total_evals : 0;
}

const char* csg_run_termination(const csg_run* run) {
  return run ? csg::to_string(run->outcome.result.termination) : "?";
}

int csg_run_target_count(const csg_run* run) {
  return run ? static_cast<int>(run->outcome.row.entries.size()) : 0;
}

csg_status csg_run_target(const csg_run* run, int index, double* eps_out,
                          long long* evals_out) {
  if (!run) return fail(CSG_ERROR_USAGE, "null argument");
  if (index < 0 || index >= static_cast<int>(run->outcome.row.entries.size())) {
    return fail(CSG_ERROR_USAGE, "target index out of range");
  }
  const csg::TableEntry& entry = run->outcome.row.entries[index];
  if (eps_out) *eps_out = entry.eps;
  if (!entry.evals.has_value()) {
    if (evals_out) *evals_out = -1;
    return CSG_NOT_REACHED;
  }
  if (evals_out) *evals_out = *entry.evals;
  return CSG_OK;
}

csg_status csg_run_write_trace(const csg_run* run, const char* path) {
  if (!run || !path) return fail(CSG_ERROR_USAGE, "null argument");
  return guard([&] {
    csg::write_trace(run->outcome.result.trace, path);
    return CSG_OK;
  });
}

csg_status csg_run_render(const csg_run* run, const char* format, char** text_out) {
  if (!run || !text_out) return fail(CSG_ERROR_USAGE, "null argument");
  *text_out = nullptr;
  csg::ReportFormat f;
  if (csg_status s = parse_format(format, &f); s != CSG_OK) return s;
  return guard([&] {
    *text_out = copy_string(csg::emit_report(std::vector<csg::TableRow>{run->outcome.row}, f));
    return CSG_OK;
  });
}

csg_status csg_reproduce(const char* which, csg_table** table_out) {
  if (!which || !table_out) return fail(CSG_ERROR_USAGE, "null argument");
  *table_out = nullptr;
  return guard([&] {
    auto table = std::make_unique<csg_table>();
    table->which = which;
    table->rows = csg::reproduce_table(which);
    *table_out = table.release();
    return CSG_OK;
  });
}

void csg_table_destroy(csg_table* table) { delete table; }

csg_status csg_table_render(const csg_table* table, const char* format, char** text_out) {
  if (!table || !text_out) return fail(CSG_ERROR_USAGE, "null argument");
  *text_out = nullptr;
  csg::ReportFormat f;
  if (csg_status s = parse_format(format, &f); s != CSG_OK) return s;
  return guard([&] {
    std::string text = csg::emit_report(table->rows, f);
    if (f == csg::ReportFormat::markdown) {
      text += "\n";
      text += csg::reference_table_markdown(table->which);
    }
    *text_out = copy_string(text);
    return CSG_OK;
  });
}

csg_status csg_list(const char* what, char** text_out) {
  if (!what || !text_out) return fail(CSG_ERROR_USAGE, "null argument");
  *text_out = nullptr;
  return guard([&] {
    const std::string selector = what;
    std::vector<std::pair<std::string, std::string>> entries;
    if (selector == "problems") {
      entries = csg::problem_catalog();
    } else if (selector == "methods") {
      entries = csg::method_catalog();
    } else {
      throw std::invalid_argument("list selector must be problems or methods");
    }
    std::string text;
    for (const auto& [name, description] : entries) {
      text += name;
      text += '\t';
      text += description;
      text += '\n';
    }
    *text_out = copy_string(text);
    return CSG_OK;
  });
}

void csg_string_free(char* text) { delete[] text; }

}  // extern "C"
