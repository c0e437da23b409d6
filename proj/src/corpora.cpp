#include <cstdio>
#include <random>
#include <tuple>

#include "fatlie/criterion.hpp"

namespace fatlie {
namespace {

const std::vector<std::string> kXYZ{"x", "y", "z"};

std::vector<std::string> first_vars(std::size_t n) { return {kXYZ.begin(), kXYZ.begin() + static_cast<std::ptrdiff_t>(n)}; }

InstanceSpec hypersurface(const std::string& name, std::size_t n, const std::string& f, SourceKind kind) {
  InstanceSpec s;
  s.label = name + "-" + source_kind_name(kind);
  s.vars = first_vars(n);
  s.kind = kind;
  s.polys = {f};
  return s;
}

void add_both(std::vector<InstanceSpec>& out, const std::string& name, std::size_t n, const std::string& f) {
  out.push_back(hypersurface(name, n, f, SourceKind::Milnor));
  out.push_back(hypersurface(name, n, f, SourceKind::Tyurina));
}

std::vector<InstanceSpec> ade_corpus() {
  std::vector<InstanceSpec> out;
  for (int k = 1; k <= 6; ++k) {
    const std::string a = "x^" + std::to_string(k + 1);
    add_both(out, "ade/A" + std::to_string(k) + "-n1", 1, a);
    add_both(out, "ade/A" + std::to_string(k) + "-n2", 2, a + " + y^2");
    add_both(out, "ade/A" + std::to_string(k) + "-n3", 3, a + " + y^2 + z^2");
  }
  for (int k = 4; k <= 6; ++k) {
    const std::string d = "x^2*y + y^" + std::to_string(k - 1);
    add_both(out, "ade/D" + std::to_string(k) + "-n2", 2, d);
    add_both(out, "ade/D" + std::to_string(k) + "-n3", 3, d + " + z^2");
  }
  const std::pair<const char*, const char*> es[] = {
      {"E6", "x^3 + y^4"}, {"E7", "x^3 + x*y^3"}, {"E8", "x^3 + y^5"}};
  for (const auto& [name, f] : es) {
    add_both(out, std::string("ade/") + name + "-n2", 2, f);
    add_both(out, std::string("ade/") + name + "-n3", 3, std::string(f) + " + z^2");
  }
  return out;
}

std::vector<InstanceSpec> monomial_ci_corpus() {
  std::vector<InstanceSpec> out;
  for (std::size_t n = 1; n <= 3; ++n) {
    std::vector<unsigned> a(n, 2);
    for (;;) {
      InstanceSpec s;
      s.vars = first_vars(n);
      s.label = "monomial-ci/";
      for (std::size_t i = 0; i < n; ++i) {
        const std::string g = kXYZ[i] + "^" + std::to_string(a[i]);
        s.polys.push_back(g);
        s.label += (i ? "," : "") + g;
      }
      out.push_back(std::move(s));
      std::size_t i = 0;
      while (i < n && a[i] == 4) a[i++] = 2;
      if (i == n) break;
      ++a[i];
    }
  }
  return out;
}

std::vector<InstanceSpec> powers_corpus() {
  std::vector<InstanceSpec> out;
  for (std::size_t n = 1; n <= 3; ++n) {
    for (unsigned k = 2; k <= 3; ++k) {
      InstanceSpec s;
      s.vars = first_vars(n);
      s.label = "powers/m^" + std::to_string(k) + "-n" + std::to_string(n);
      for (const auto& m : monomials_of_degree(n, k)) s.polys.push_back(to_string(Polynomial::monomial(m), s.vars));
      out.push_back(std::move(s));
    }
  }
  return out;
}

// Order-3 singularities that are not quasihomogeneous (Tyurina number below
// the Milnor number), plus one higher-order example.
std::vector<InstanceSpec> order3_corpus() {
  std::vector<InstanceSpec> out;
  const std::tuple<const char*, std::size_t, const char*> fs[] = {
      {"E12", 2, "x^3 + y^7 + x*y^5"},
      {"E13", 2, "x^3 + x*y^5 + y^8"},
      {"E14", 2, "x^3 + y^8 + x*y^6"},
      {"J11", 2, "x^3 + x^2*y^2 + y^7"},
      {"T334", 3, "x^3 + y^3 + z^4 + x*y*z"},
      {"T345", 3, "x^3 + y^4 + z^5 + x*y*z"},
      {"X55", 2, "x^5 + y^5 + x^3*y^3"},
  };
  for (const auto& [name, n, f] : fs) add_both(out, std::string("order3/") + name, n, f);
  return out;
}

}  // namespace

std::vector<InstanceSpec> random_corpus(std::uint64_t seed, std::size_t count) {
  std::mt19937_64 rng(seed);
  // Modulo mapping keeps the stream identical across standard libraries.
  auto pick = [&rng](unsigned lo, unsigned hi) { return lo + static_cast<unsigned>(rng() % (hi - lo + 1)); };
  std::vector<InstanceSpec> out;
  for (std::size_t attempt = 0; out.size() < count; ++attempt) {
    const std::size_t n = pick(1, 3);
    const auto vars = first_vars(n);
    const unsigned max_power = n == 1 ? 12 : (n == 2 ? 7 : 4);
    std::vector<unsigned> a(n);
    std::vector<Polynomial> gens;
    for (std::size_t i = 0; i < n; ++i) {
      a[i] = pick(2, max_power);
      Monomial m(n);
      m[i] = a[i];
      gens.push_back(Polynomial::monomial(m));
    }
    const unsigned extra = n == 1 ? 0 : pick(0, 3);
    for (unsigned e = 0; e < extra; ++e) {
      Monomial m(n);
      for (std::size_t i = 0; i < n; ++i) m[i] = pick(0, a[i] - 1);
      if (m.degree() >= 2) gens.push_back(Polynomial::monomial(m));
    }
    const bool perturb = attempt % 3 == 2;
    if (perturb) {
      for (auto& g : gens) {
        if (pick(0, 1) == 0) continue;
        const unsigned deg = order_of(g).value + pick(1, 2);
        const auto candidates = monomials_of_degree(n, deg);
        const auto& m = candidates[pick(0, static_cast<unsigned>(candidates.size() - 1))];
        const int magnitude = static_cast<int>(pick(1, 3));
        const int sign = pick(0, 1) ? 1 : -1;
        const unsigned den = pick(1, 2);
        Rational c(sign * magnitude, den);
        c.canonicalize();
        g += Polynomial::monomial(m, c);
      }
    }
    try {
      const auto t = find_truncation_level(gens, 24, n);
      if (t.dim_quotient > kRandomMaxDim || t.dim_quotient < 2) continue;
    } catch (const Error&) {
      continue;
    }
    InstanceSpec s;
    char label[64];
    std::snprintf(label, sizeof label, "random/s%llu-%03zu", static_cast<unsigned long long>(seed), out.size());
    s.label = label;
    s.vars = vars;
    for (const auto& g : gens) s.polys.push_back(to_string(g, vars));
    out.push_back(std::move(s));
  }
  return out;
}

std::vector<std::string> builtin_corpus_names() { return {"ade", "monomial-ci", "powers", "order3", "random", "all"}; }

std::vector<InstanceSpec> builtin_corpus(const std::string& name, std::uint64_t seed, std::size_t random_count) {
  if (name == "ade") return ade_corpus();
  if (name == "monomial-ci") return monomial_ci_corpus();
  if (name == "powers") return powers_corpus();
  if (name == "order3") return order3_corpus();
  if (name == "random") return random_corpus(seed, random_count);
  if (name == "all") {
    std::vector<InstanceSpec> out;
    for (auto part : {ade_corpus(), monomial_ci_corpus(), powers_corpus(), order3_corpus(),
                      random_corpus(seed, random_count)})
      out.insert(out.end(), part.begin(), part.end());
    return out;
  }
  throw Error(ErrorCode::InvalidArgument, "unknown corpus '" + name + "'");
}

}  // namespace fatlie
