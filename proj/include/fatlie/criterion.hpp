#pragma once

// Solvability checks on fat points. The criterion is
// one-directional: eps1 + 1 < edim + ord forces Der S to be solvable, and
// says nothing otherwise. Reports therefore keep all four combinations of
// (criterion applies, solvable) visible.

#include <cstddef>
#include <cstdint>
#include <map>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "fatlie/derlie.hpp"
#include "fatlie/errors.hpp"
#include "fatlie/fatpoint.hpp"
#include "fatlie/instance.hpp"

namespace fatlie {

struct CriterionReport {
  std::string label;
  std::string kind;  // generators | milnor | tyurina
  std::size_t nvars = 0;
  std::size_t dimS = 0;
  unsigned ell = 0;
  std::size_t edim = 0;
  std::optional<unsigned> ord;  // empty for S = ground field
  std::size_t eps1 = 0;
  std::optional<std::size_t> lhs;
  std::optional<std::size_t> rhs;
  bool criterion_applies = false;
  std::size_t der_dim = 0;
  bool solvable = false;
  bool nilpotent = false;
  bool cartan_solvable = false;
  bool complete_intersection = false;
  bool consistent = true;
  bool trivial = false;
  bool oracle_checked = false;
  std::vector<std::size_t> derived_dims;
  std::vector<std::size_t> lower_central_dims;
  /// Stage name -> milliseconds.
  std::map<std::string, double> timings;
};

struct CheckOptions {
  /// Compare against the brute-force solver when dim S <= this bound (0 disables).
  std::size_t oracle_bound = kDefaultOracleBound;
};

/// [df/dx_1, ..., df/dx_n]
std::vector<Polynomial> milnor_ideal(const Polynomial& f);
/// [f, df/dx_1, ..., df/dx_n]
std::vector<Polynomial> tyurina_ideal(const Polynomial& f);

/// Fills every report field. Throws OracleMismatch if the derived-series and
/// Cartan verdicts disagree or the structured and brute-force derivation
/// spaces differ.
CriterionReport check_fatpoint(const FatPoint& fp, const std::string& label, const CheckOptions& opts = {});

/// Ideal generators of an instance in its own variables.
std::vector<Polynomial> instance_generators(const InstanceSpec& spec);
/// Parses, minimalizes and builds the fat point of an instance.
FatPoint build_instance(const InstanceSpec& spec);
/// build_instance followed by check_fatpoint, with nvars/kind/timings filled.
CriterionReport check_instance(const InstanceSpec& spec, const CheckOptions& opts = {});

struct InstanceOutcome {
  std::string label;
  std::optional<CriterionReport> report;
  std::optional<ErrorCode> error;
  std::string message;
  /// The instance document, so failures can be reproduced verbatim.
  std::string instance;
};

struct CorpusSummary {
  std::uint64_t seed = 0;
  std::size_t total = 0;
  std::size_t applies_solvable = 0;
  std::size_t applies_unsolvable = 0;
  std::size_t not_applies_solvable = 0;
  std::size_t not_applies_unsolvable = 0;
  std::size_t trivial = 0;
  std::size_t errors = 0;
  std::size_t oracle_mismatches = 0;
  /// Instance documents of reports with criterion_applies and not solvable.
  std::vector<std::string> counterexamples;
};

struct CorpusOptions {
  std::uint64_t seed = 1;
  unsigned jobs = 1;
  CheckOptions check;
  std::optional<unsigned> cap;  // overrides each instance's cap
};

struct CorpusResult {
  std::vector<InstanceOutcome> outcomes;  // sorted by label
  CorpusSummary summary;
};

/// Evaluates every instance; per-instance failures are recorded, never thrown.
CorpusResult run_corpus(std::span<const InstanceSpec> instances, const CorpusOptions& opts = {});

inline constexpr std::size_t kDefaultRandomCount = 120;
inline constexpr std::size_t kRandomMaxDim = 30;

/// Names: ade, monomial-ci, powers, order3, random, all.
/// Throws InvalidArgument for other names.
std::vector<InstanceSpec> builtin_corpus(const std::string& name, std::uint64_t seed = 1,
                                         std::size_t random_count = kDefaultRandomCount);
std::vector<std::string> builtin_corpus_names();
/// Seeded random m-primary ideals: monomial ideals made m-primary by pure
/// powers, some with higher-order perturbations; every instance has
/// n <= 3 and dim S <= kRandomMaxDim.
std::vector<InstanceSpec> random_corpus(std::uint64_t seed, std::size_t count);

}  // namespace fatlie
