#include "fatlie/fatlie.h"

#include <exception>
#include <new>
#include <string>
#include <vector>

#include "fatlie/criterion.hpp"
#include "fatlie/report_io.hpp"

using namespace fatlie;

struct fl_instances {
  std::vector<InstanceSpec> specs;
};

struct fl_fatpoint {
  FatPoint fp;
  std::string label;
  std::string text;
};

struct fl_report {
  CriterionReport report;
  std::string text;
};

struct fl_corpus_result {
  CorpusResult result;
  std::string text;
};

namespace {

thread_local std::string g_last_error;
thread_local long g_last_position = -1;

fl_status to_status(ErrorCode c) {
  switch (c) {
    case ErrorCode::InvalidArgument: return FL_INVALID_ARGUMENT;
    case ErrorCode::Io: return FL_IO;
    case ErrorCode::Parse: return FL_PARSE;
    case ErrorCode::NotZeroDimensional: return FL_NOT_ZERO_DIMENSIONAL;
    case ErrorCode::NonMinimalPresentation: return FL_NON_MINIMAL_PRESENTATION;
    case ErrorCode::ConstantUnitIdeal: return FL_CONSTANT_UNIT_IDEAL;
    case ErrorCode::DimensionBound: return FL_DIMENSION_BOUND;
    case ErrorCode::OracleMismatch: return FL_ORACLE_MISMATCH;
    case ErrorCode::Internal: return FL_INTERNAL;
  }
  return FL_INTERNAL;
}

fl_status fail(fl_status s, std::string msg, long position = -1) {
  g_last_error = std::move(msg);
  g_last_position = position;
  return s;
}

// Runs `body`, translating exceptions into status codes. `context` prefixes
// messages that do not already name an instance.
template <class F>
fl_status guarded(const std::string& context, F&& body) {
  try {
    body();
    g_last_error.clear();
    g_last_position = -1;
    return FL_OK;
  } catch (const ParseError& e) {
    return fail(FL_PARSE, e.what(), static_cast<long>(e.position()));
  } catch (const Error& e) {
    return fail(to_status(e.code()), context + e.what());
  } catch (const std::bad_alloc&) {
    return fail(FL_INTERNAL, context + "out of memory");
  } catch (const std::exception& e) {
    return fail(FL_INTERNAL, context + e.what());
  }
}

std::string instance_context(const InstanceSpec& s) { return "instance '" + s.label + "': "; }

OutputFormat to_format(fl_format f) { return f == FL_FORMAT_TABLE ? OutputFormat::Table : OutputFormat::Json; }

}  // namespace

extern "C" {

const char* fl_status_name(fl_status status) {
  switch (status) {
    case FL_OK: return "Ok";
    case FL_INVALID_ARGUMENT: return "InvalidArgument";
    case FL_IO: return "Io";
    case FL_PARSE: return "Parse";
    case FL_NOT_ZERO_DIMENSIONAL: return "NotZeroDimensional";
    case FL_NON_MINIMAL_PRESENTATION: return "NonMinimalPresentation";
    case FL_CONSTANT_UNIT_IDEAL: return "ConstantUnitIdeal";
    case FL_DIMENSION_BOUND: return "DimensionBound";
    case FL_ORACLE_MISMATCH: return "OracleMismatch";
    case FL_INTERNAL: return "Internal";
  }
  return "Unknown";
}

const char* fl_last_error(void) { return g_last_error.c_str(); }

long fl_last_error_position(void) { return g_last_position; }

fl_status fl_instances_load(const char* path, fl_instances** out) {
  if (!path || !out) return fail(FL_INVALID_ARGUMENT, "null argument");
  *out = nullptr;
  return guarded("", [&] { *out = new fl_instances{load_instances(path)}; });
}

fl_status fl_instances_parse(const char* json_text, fl_instances** out) {
  if (!json_text || !out) return fail(FL_INVALID_ARGUMENT, "null argument");
  *out = nullptr;
  return guarded("", [&] { *out = new fl_instances{parse_instances(json_text)}; });
}

fl_status fl_instances_builtin(const char* name, uint64_t seed, size_t random_count, fl_instances** out) {
  if (!name || !out) return fail(FL_INVALID_ARGUMENT, "null argument");
  *out = nullptr;
  return guarded("", [&] { *out = new fl_instances{builtin_corpus(name, seed, random_count)}; });
}

size_t fl_instances_count(const fl_instances* list) { return list ? list->specs.size() : 0; }

const char* fl_instances_label(const fl_instances* list, size_t index) {
  if (!list || index >= list->specs.size()) return nullptr;
  return list->specs[index].label.c_str();
}

fl_status fl_instances_set_cap(fl_instances* list, unsigned cap) {
  if (!list) return fail(FL_INVALID_ARGUMENT, "null argument");
  if (cap < 2) return fail(FL_INVALID_ARGUMENT, "cap must be at least 2");
  for (auto& s : list->specs) s.cap = cap;
  return FL_OK;
}

void fl_instances_free(fl_instances* list) { delete list; }

fl_status fl_fatpoint_build(const fl_instances* list, size_t index, fl_fatpoint** out) {
  if (!list || !out) return fail(FL_INVALID_ARGUMENT, "null argument");
  *out = nullptr;
  if (index >= list->specs.size()) return fail(FL_INVALID_ARGUMENT, "instance index out of range");
  const InstanceSpec& spec = list->specs[index];
  return guarded(instance_context(spec), [&] { *out = new fl_fatpoint{build_instance(spec), spec.label, {}}; });
}

fl_status fl_fatpoint_from_generators(const char* const* generators, size_t ngenerators, const char* const* vars,
                                      size_t nvars, unsigned cap, fl_fatpoint** out) {
  if (!out || (ngenerators && !generators) || (nvars && !vars)) return fail(FL_INVALID_ARGUMENT, "null argument");
  *out = nullptr;
  return guarded("", [&] {
    std::vector<std::string> names(vars, vars + nvars);
    std::vector<Polynomial> gens;
    for (size_t k = 0; k < ngenerators; ++k) gens.push_back(parse_poly(generators[k], names));
    *out = new fl_fatpoint{FatPoint::build(std::move(gens), std::move(names), cap), "generators", {}};
  });
}

size_t fl_fatpoint_dim(const fl_fatpoint* fp) { return fp ? fp->fp.dim() : 0; }

unsigned fl_fatpoint_trunc_level(const fl_fatpoint* fp) { return fp ? fp->fp.trunc_level() : 0; }

size_t fl_fatpoint_edim(const fl_fatpoint* fp) { return fp ? edim(fp->fp) : 0; }

int fl_fatpoint_ord(const fl_fatpoint* fp) {
  if (!fp) return -1;
  const Order o = ord(fp->fp);
  return o.is_infinite() ? -1 : static_cast<int>(o.value);
}

size_t fl_fatpoint_eps1(const fl_fatpoint* fp) { return fp ? epsilon1(fp->fp) : 0; }

int fl_fatpoint_is_trivial(const fl_fatpoint* fp) { return fp && fp->fp.trivial(); }

size_t fl_fatpoint_der_dim(const fl_fatpoint* fp) { return fp ? derivations_structured(fp->fp).dim() : 0; }

const char* fl_fatpoint_format(fl_fatpoint* fp, fl_format format) {
  if (!fp) return nullptr;
  fp->text = format_analysis(fp->fp, fp->label, to_format(format));
  return fp->text.c_str();
}

void fl_fatpoint_free(fl_fatpoint* fp) { delete fp; }

fl_status fl_check(const fl_fatpoint* fp, size_t oracle_bound, fl_report** out) {
  if (!fp || !out) return fail(FL_INVALID_ARGUMENT, "null argument");
  *out = nullptr;
  return guarded("", [&] { *out = new fl_report{check_fatpoint(fp->fp, fp->label, {oracle_bound}), {}}; });
}

fl_status fl_check_instance(const fl_instances* list, size_t index, size_t oracle_bound, fl_report** out) {
  if (!list || !out) return fail(FL_INVALID_ARGUMENT, "null argument");
  *out = nullptr;
  if (index >= list->specs.size()) return fail(FL_INVALID_ARGUMENT, "instance index out of range");
  const InstanceSpec& spec = list->specs[index];
  return guarded(instance_context(spec), [&] { *out = new fl_report{check_instance(spec, {oracle_bound}), {}}; });
}

int fl_report_criterion_applies(const fl_report* r) { return r && r->report.criterion_applies; }

int fl_report_solvable(const fl_report* r) { return r && r->report.solvable; }

int fl_report_nilpotent(const fl_report* r) { return r && r->report.nilpotent; }

int fl_report_consistent(const fl_report* r) { return r && r->report.consistent; }

size_t fl_report_der_dim(const fl_report* r) { return r ? r->report.der_dim : 0; }

const char* fl_report_format(fl_report* r, fl_format format, int timings) {
  if (!r) return nullptr;
  r->text = format_report(r->report, to_format(format), timings != 0);
  return r->text.c_str();
}

void fl_report_free(fl_report* r) { delete r; }

fl_corpus_options fl_corpus_default_options(void) {
  fl_corpus_options o;
  o.seed = 1;
  o.jobs = 1;
  o.cap = 0;
  o.oracle_bound = kDefaultOracleBound;
  return o;
}

fl_status fl_corpus_run(const fl_instances* list, const fl_corpus_options* options, fl_corpus_result** out) {
  if (!list || !out) return fail(FL_INVALID_ARGUMENT, "null argument");
  *out = nullptr;
  const fl_corpus_options o = options ? *options : fl_corpus_default_options();
  if (o.cap == 1) return fail(FL_INVALID_ARGUMENT, "cap must be at least 2");
  return guarded("", [&] {
    CorpusOptions opts;
    opts.seed = o.seed;
    opts.jobs = o.jobs;
    opts.check.oracle_bound = o.oracle_bound;
    if (o.cap) opts.cap = o.cap;
    *out = new fl_corpus_result{run_corpus(list->specs, opts), {}};
  });
}

fl_corpus_counts fl_corpus_result_counts(const fl_corpus_result* res) {
  fl_corpus_counts c{};
  if (!res) return c;
  const CorpusSummary& s = res->result.summary;
  c.total = s.total;
  c.applies_solvable = s.applies_solvable;
  c.applies_unsolvable = s.applies_unsolvable;
  c.not_applies_solvable = s.not_applies_solvable;
  c.not_applies_unsolvable = s.not_applies_unsolvable;
  c.trivial = s.trivial;
  c.errors = s.errors;
  c.oracle_mismatches = s.oracle_mismatches;
  return c;
}

const char* fl_corpus_result_format(fl_corpus_result* res, fl_format format, int timings) {
  if (!res) return nullptr;
  res->text = format_corpus(res->result, to_format(format), timings != 0);
  return res->text.c_str();
}

void fl_corpus_result_free(fl_corpus_result* res) { delete res; }

}  // extern "C"
