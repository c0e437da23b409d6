#include "fatlie/criterion.hpp"

#include <algorithm>
#include <atomic>
#include <chrono>
#include <thread>

namespace fatlie {
namespace {

using Clock = std::chrono::steady_clock;

double ms_since(Clock::time_point start) {
  return std::chrono::duration<double, std::milli>(Clock::now() - start).count();
}

}  // namespace

std::vector<Polynomial> milnor_ideal(const Polynomial& f) {
  std::vector<Polynomial> out;
  for (std::size_t i = 0; i < f.nvars(); ++i) out.push_back(partial_derivative(f, i));
  return out;
}

std::vector<Polynomial> tyurina_ideal(const Polynomial& f) {
  std::vector<Polynomial> out{f};
  for (auto& p : milnor_ideal(f)) out.push_back(std::move(p));
  return out;
}

CriterionReport check_fatpoint(const FatPoint& fp, const std::string& label, const CheckOptions& opts) {
  CriterionReport r;
  r.label = label;
  r.kind = "generators";
  r.nvars = fp.nvars();
  r.dimS = fp.dim();
  r.ell = fp.trunc_level();
  r.trivial = fp.trivial();

  auto t0 = Clock::now();
  r.edim = edim(fp);
  r.eps1 = epsilon1(fp);
  r.complete_intersection = r.eps1 == r.edim;
  if (!r.trivial) {
    r.ord = ord(fp).value;
    r.lhs = r.eps1 + 1;
    r.rhs = r.edim + *r.ord;
    r.criterion_applies = *r.lhs < *r.rhs;
  }
  r.timings["invariants"] = ms_since(t0);

  t0 = Clock::now();
  const LieAlgebra L = derivations_structured(fp);
  r.timings["derivations"] = ms_since(t0);
  r.der_dim = L.dim();

  t0 = Clock::now();
  const LieSummary s = summarize(L);
  r.timings["lie"] = ms_since(t0);
  r.solvable = s.solvable;
  r.nilpotent = s.nilpotent;
  r.cartan_solvable = s.cartan_solvable;
  r.derived_dims = s.derived_dims;
  r.lower_central_dims = s.lower_central_dims;
  if (r.solvable != r.cartan_solvable)
    throw Error(ErrorCode::OracleMismatch,
                "instance '" + label + "': derived series and Cartan criterion disagree on solvability");

  if (opts.oracle_bound > 0 && fp.dim() <= opts.oracle_bound) {
    t0 = Clock::now();
    const LieAlgebra brute = derivations_bruteforce(fp, opts.oracle_bound);
    r.timings["oracle"] = ms_since(t0);
    if (!(brute == L))
      throw Error(ErrorCode::OracleMismatch, "instance '" + label + "': structured solver found dimension " +
                                                 std::to_string(L.dim()) + ", brute-force oracle " +
                                                 std::to_string(brute.dim()));
    r.oracle_checked = true;
  }
  r.consistent = !r.criterion_applies || r.solvable;
  return r;
}

std::vector<Polynomial> instance_generators(const InstanceSpec& spec) {
  validate(spec);
  std::vector<Polynomial> polys;
  for (std::size_t k = 0; k < spec.polys.size(); ++k) {
    try {
      polys.push_back(parse_poly(spec.polys[k], spec.vars));
    } catch (const ParseError& e) {
      throw ParseError("instance '" + spec.label + "', polynomial " + std::to_string(k + 1) + " \"" +
                           spec.polys[k] + "\": " + e.what(),
                       e.position());
    }
  }
  switch (spec.kind) {
    case SourceKind::Generators: return polys;
    case SourceKind::Milnor: return milnor_ideal(polys.front());
    case SourceKind::Tyurina: return tyurina_ideal(polys.front());
  }
  return polys;
}

FatPoint build_instance(const InstanceSpec& spec) {
  const auto gens = instance_generators(spec);
  Presentation p = minimalize(gens, spec.vars, spec.cap);
  return FatPoint::build(std::move(p.generators), std::move(p.vars), spec.cap);
}

CriterionReport check_instance(const InstanceSpec& spec, const CheckOptions& opts) {
  const auto t0 = Clock::now();
  const FatPoint fp = build_instance(spec);
  const double build_ms = ms_since(t0);
  CriterionReport r = check_fatpoint(fp, spec.label, opts);
  r.kind = source_kind_name(spec.kind);
  r.nvars = spec.vars.size();
  r.timings["build"] = build_ms;
  return r;
}

CorpusResult run_corpus(std::span<const InstanceSpec> instances, const CorpusOptions& opts) {
  std::vector<InstanceOutcome> outcomes(instances.size());
  std::atomic<std::size_t> next{0};
  auto worker = [&] {
    for (std::size_t k = next++; k < instances.size(); k = next++) {
      InstanceSpec spec = instances[k];
      if (opts.cap) spec.cap = *opts.cap;
      InstanceOutcome& out = outcomes[k];
      out.label = spec.label;
      out.instance = to_json(spec);
      try {
        out.report = check_instance(spec, opts.check);
      } catch (const Error& e) {
        out.error = e.code();
        out.message = e.what();
      } catch (const std::exception& e) {
        out.error = ErrorCode::Internal;
        out.message = e.what();
      }
    }
  };
  const unsigned jobs = std::max(1u, opts.jobs);
  if (jobs == 1) {
    worker();
  } else {
    std::vector<std::thread> pool;
    for (unsigned t = 0; t < jobs; ++t) pool.emplace_back(worker);
    for (auto& t : pool) t.join();
  }

  std::stable_sort(outcomes.begin(), outcomes.end(),
                   [](const InstanceOutcome& a, const InstanceOutcome& b) { return a.label < b.label; });
  CorpusResult result;
  CorpusSummary& s = result.summary;
  s.seed = opts.seed;
  s.total = outcomes.size();
  for (const auto& o : outcomes) {
    if (o.error) {
      ++s.errors;
      if (*o.error == ErrorCode::OracleMismatch) ++s.oracle_mismatches;
      continue;
    }
    const CriterionReport& r = *o.report;
    if (r.trivial) ++s.trivial;
    else if (r.criterion_applies && r.solvable) ++s.applies_solvable;
    else if (r.criterion_applies) {
      ++s.applies_unsolvable;
      s.counterexamples.push_back(o.instance);
    } else if (r.solvable) ++s.not_applies_solvable;
    else ++s.not_applies_unsolvable;
  }
  result.outcomes = std::move(outcomes);
  return result;
}

}  // namespace fatlie
