// fatlie: analyze fat points, check the solvability criterion, run corpora.
//
// Exit codes:
//   0 success (corpus: no counterexample and no oracle mismatch)
//   1 usage error or invalid argument     6 criterion applies but Der S is not solvable
//   2 parse error                          7 oracle mismatch
//   3 NotZeroDimensional                   8 DimensionBound
//   4 NonMinimalPresentation               9 internal error
//   5 ConstantUnitIdeal                   10 I/O error

#include <cstdio>
#include <string>

#include "CLI11.hpp"
#include "fatlie/fatlie.h"

namespace {

enum Exit {
  kOk = 0,
  kUsage = 1,
  kParse = 2,
  kNotZeroDimensional = 3,
  kNonMinimal = 4,
  kConstantUnit = 5,
  kInconsistent = 6,
  kOracleMismatch = 7,
  kDimensionBound = 8,
  kInternal = 9,
  kIo = 10,
};

int exit_code(fl_status s) {
  switch (s) {
    case FL_OK: return kOk;
    case FL_INVALID_ARGUMENT: return kUsage;
    case FL_IO: return kIo;
    case FL_PARSE: return kParse;
    case FL_NOT_ZERO_DIMENSIONAL: return kNotZeroDimensional;
    case FL_NON_MINIMAL_PRESENTATION: return kNonMinimal;
    case FL_CONSTANT_UNIT_IDEAL: return kConstantUnit;
    case FL_DIMENSION_BOUND: return kDimensionBound;
    case FL_ORACLE_MISMATCH: return kOracleMismatch;
    case FL_INTERNAL: return kInternal;
  }
  return kInternal;
}

int report_error(fl_status s) {
  std::fprintf(stderr, "error [%s]: %s\n", fl_status_name(s), fl_last_error());
  return exit_code(s);
}

struct Options {
  std::string input;
  std::string format = "table";
  unsigned cap = 0;
  std::uint64_t seed = 1;
  unsigned jobs = 1;
  std::size_t oracle_bound = 40;
  std::size_t count = 120;
  bool timings = false;
};

fl_format format_of(const Options& o) { return o.format == "json" ? FL_FORMAT_JSON : FL_FORMAT_TABLE; }

// Loads a file and applies --cap.
fl_status load(const Options& o, fl_instances** list) {
  fl_status s = fl_instances_load(o.input.c_str(), list);
  if (s == FL_OK && o.cap) s = fl_instances_set_cap(*list, o.cap);
  return s;
}

int cmd_analyze(const Options& o) {
  fl_instances* list = nullptr;
  if (fl_status s = load(o, &list); s != FL_OK) return report_error(s);
  int rc = kOk;
  for (std::size_t k = 0; k < fl_instances_count(list); ++k) {
    fl_fatpoint* fp = nullptr;
    if (fl_status s = fl_fatpoint_build(list, k, &fp); s != FL_OK) {
      rc = report_error(s);
      break;
    }
    std::fputs(fl_fatpoint_format(fp, format_of(o)), stdout);
    fl_fatpoint_free(fp);
  }
  fl_instances_free(list);
  return rc;
}

int cmd_check(const Options& o) {
  fl_instances* list = nullptr;
  if (fl_status s = load(o, &list); s != FL_OK) return report_error(s);
  int rc = kOk;
  for (std::size_t k = 0; k < fl_instances_count(list); ++k) {
    fl_report* r = nullptr;
    if (fl_status s = fl_check_instance(list, k, o.oracle_bound, &r); s != FL_OK) {
      rc = report_error(s);
      break;
    }
    std::fputs(fl_report_format(r, format_of(o), o.timings), stdout);
    if (!fl_report_consistent(r)) {
      std::fprintf(stderr, "inconsistency: criterion applies to '%s' but Der S is not solvable\n",
                   fl_instances_label(list, k));
      rc = kInconsistent;
    }
    fl_report_free(r);
  }
  fl_instances_free(list);
  return rc;
}

bool is_builtin(const std::string& name) {
  for (const char* n : {"ade", "monomial-ci", "powers", "order3", "random", "all"})
    if (name == n) return true;
  return false;
}

int cmd_corpus(const Options& o) {
  fl_instances* list = nullptr;
  fl_status s;
  if (is_builtin(o.input)) {
    s = fl_instances_builtin(o.input.c_str(), o.seed, o.count, &list);
  } else if (std::FILE* f = std::fopen(o.input.c_str(), "rb")) {
    std::fclose(f);
    s = fl_instances_load(o.input.c_str(), &list);
  } else {
    std::fprintf(stderr, "error: unknown corpus '%s' (built-in: ade, monomial-ci, powers, order3, random, all)\n",
                 o.input.c_str());
    return kUsage;
  }
  if (s != FL_OK) return report_error(s);

  fl_corpus_options opts = fl_corpus_default_options();
  opts.seed = o.seed;
  opts.jobs = o.jobs;
  opts.cap = o.cap;
  opts.oracle_bound = o.oracle_bound;
  fl_corpus_result* res = nullptr;
  s = fl_corpus_run(list, &opts, &res);
  fl_instances_free(list);
  if (s != FL_OK) return report_error(s);
  std::fputs(fl_corpus_result_format(res, format_of(o), o.timings), stdout);
  const fl_corpus_counts c = fl_corpus_result_counts(res);
  fl_corpus_result_free(res);
  if (c.oracle_mismatches) return kOracleMismatch;
  if (c.applies_unsolvable) return kInconsistent;
  return kOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Derivation Lie algebras of fat points"};
  app.require_subcommand(1);
  Options o;

  auto add_common = [&o](CLI::App* cmd) {
    cmd->add_option("--format", o.format, "Output format")->check(CLI::IsMember({"json", "table"}));
    cmd->add_option("--cap", o.cap, "Degree cap for the truncation level search")->check(CLI::Range(2u, 4096u));
  };
  auto add_check = [&o](CLI::App* cmd) {
    cmd->add_option("--oracle-bound", o.oracle_bound, "Run the brute-force oracle when dim S <= N (0 disables)");
    cmd->add_flag("--timings", o.timings, "Include per-stage timings");
  };

  CLI::App* analyze = app.add_subcommand("analyze", "Print the basis and invariants of each instance");
  analyze->add_option("file", o.input, "Instance file")->required();
  add_common(analyze);

  CLI::App* check = app.add_subcommand("check", "Report the solvability criterion for each instance");
  check->add_option("file", o.input, "Instance file")->required();
  add_common(check);
  add_check(check);

  CLI::App* corpus = app.add_subcommand("corpus", "Run a built-in corpus or a corpus file");
  corpus->add_option("corpus", o.input, "ade | monomial-ci | powers | order3 | random | all | file")->required();
  add_common(corpus);
  add_check(corpus);
  corpus->add_option("--seed", o.seed, "Seed for the random corpus");
  corpus->add_option("--jobs", o.jobs, "Instances evaluated in parallel")->check(CLI::Range(1u, 256u));
  corpus->add_option("--count", o.count, "Number of random instances")->check(CLI::Range(1u, 100000u));

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int rc = app.exit(e);
    return rc == 0 ? kOk : kUsage;
  }

  if (app.got_subcommand(analyze)) return cmd_analyze(o);
  if (app.got_subcommand(check)) return cmd_check(o);
  return cmd_corpus(o);
}
