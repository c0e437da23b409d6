#include "fatlie/fatpoint.hpp"

#include <algorithm>

#include "fatlie/errors.hpp"

namespace fatlie {
namespace {

constexpr std::size_t npos = static_cast<std::size_t>(-1);

void require_no_constant(const Polynomial& g) {
  if (g.coefficient(Monomial(g.nvars())) != 0)
    throw Error(ErrorCode::ConstantUnitIdeal, "a generator has a nonzero constant term; the quotient is zero");
}

// First (generator, variable) with a nonzero linear coefficient.
std::optional<std::pair<std::size_t, std::size_t>> find_linear_part(std::span<const Polynomial> gens) {
  for (std::size_t j = 0; j < gens.size(); ++j)
    for (std::size_t i = 0; i < gens[j].nvars(); ++i)
      if (gens[j].coefficient(Monomial::variable(gens[j].nvars(), i)) != 0) return std::pair{j, i};
  return std::nullopt;
}

}  // namespace

Presentation minimalize(std::span<const Polynomial> generators, std::span<const std::string> vars,
                        unsigned cap) {
  Presentation out;
  out.vars.assign(vars.begin(), vars.end());
  for (const auto& g : generators) {
    if (g.nvars() != vars.size()) throw Error(ErrorCode::InvalidArgument, "generator arity differs from variable list");
    require_no_constant(g);
    if (!g.is_zero()) out.generators.push_back(truncate(g, cap));
  }

  while (auto hit = find_linear_part(out.generators)) {
    const auto [j, i] = *hit;
    const std::size_t n = out.vars.size();
    const Polynomial g = out.generators[j];
    const Rational c = g.coefficient(Monomial::variable(n, i));
    // g = 0 in S, so x_i = x_i - g/c, whose x_i-dependence is of order >= 2.
    const Polynomial phi = Polynomial::variable(n, i) - g * Rational(1 / c);
    Polynomial s(n);
    for (unsigned iter = 0; iter <= cap + 1; ++iter) {
      Polynomial next = substitute_truncated(phi, i, s, cap);
      if (next == s) break;
      s = std::move(next);
    }
    std::vector<Polynomial> rest;
    for (std::size_t k = 0; k < out.generators.size(); ++k) {
      if (k == j) continue;
      Polynomial h = drop_variable(substitute_truncated(out.generators[k], i, s, cap), i);
      require_no_constant(h);
      if (!h.is_zero()) rest.push_back(std::move(h));
    }
    out.generators = std::move(rest);
    out.vars.erase(out.vars.begin() + static_cast<std::ptrdiff_t>(i));
  }
  out.trivial = out.vars.empty();
  return out;
}

FatPoint FatPoint::build(std::vector<Polynomial> generators, std::vector<std::string> vars,
                         unsigned cap, unsigned extra_levels) {
  const std::size_t n = vars.size();
  for (const auto& g : generators) {
    if (g.nvars() != n) throw Error(ErrorCode::InvalidArgument, "generator arity differs from variable list");
    require_no_constant(g);
  }
  if (auto hit = find_linear_part(generators))
    throw Error(ErrorCode::NonMinimalPresentation,
                "generator " + std::to_string(hit->first + 1) + " has a nonzero linear part in '" +
                    vars[hit->second] + "'; minimalize the presentation first");

  FatPoint fp;
  const TruncationLevel level = find_truncation_level(generators, cap, n);
  fp.vars_ = std::move(vars);
  fp.generators_ = std::move(generators);
  fp.cap_ = cap;
  fp.certified_ell_ = level.ell;
  fp.ell_ = level.ell + extra_levels;
  fp.trivial_ = level.trivial;
  fp.hilbert_ = level.hilbert;
  fp.ideal_ = std::make_shared<const Subspace>(fatlie::ideal_image(fp.generators_, fp.ell_, n));

  const JetSpace& jet = fp.ideal_->ambient();
  const EchelonBasis& ech = fp.ideal_->echelon();
  fp.jet_to_basis_.assign(jet.dim(), npos);
  // Jet indices run in descending order, so walk backwards to get 1 first.
  for (std::size_t k = jet.dim(); k-- > 0;) {
    if (ech.is_pivot(k)) continue;
    fp.jet_to_basis_[k] = fp.basis_.size();
    fp.basis_.push_back(jet.monomial(k));
  }
  if (fp.basis_.size() != level.dim_quotient)
    throw Error(ErrorCode::Internal, "standard monomial count disagrees with the Hilbert value");

  fp.monomial_nf_.resize(jet.dim());
  for (std::size_t k = 0; k < jet.dim(); ++k) {
    SparseVec rem = ech.reduce(SparseVec{{k, Rational(1)}});
    SparseVec coords;
    coords.reserve(rem.size());
    for (const auto& [idx, a] : rem) coords.emplace_back(fp.jet_to_basis_[idx], a);
    std::sort(coords.begin(), coords.end(), [](const auto& x, const auto& y) { return x.first < y.first; });
    fp.monomial_nf_[k] = std::move(coords);
  }

  const std::size_t mu = fp.basis_.size();
  fp.table_.resize(mu * mu);
  for (std::size_t a = 0; a < mu; ++a) {
    for (std::size_t b = a; b < mu; ++b) {
      const Monomial prod = fp.basis_[a] * fp.basis_[b];
      SparseVec v;
      if (prod.degree() <= fp.ell_) v = fp.monomial_nf_[*jet.index_of(prod)];
      fp.table_[a * mu + b] = v;
      fp.table_[b * mu + a] = std::move(v);
    }
  }
  return fp;
}

std::optional<std::size_t> FatPoint::basis_index(const Monomial& m) const {
  auto k = jet().index_of(m);
  if (!k || jet_to_basis_[*k] == npos) return std::nullopt;
  return jet_to_basis_[*k];
}

std::size_t FatPoint::variable_index(std::size_t i) const {
  auto idx = basis_index(Monomial::variable(nvars(), i));
  if (!idx) throw Error(ErrorCode::Internal, "variable coset is not a standard monomial");
  return *idx;
}

SparseVec FatPoint::multiply(const SparseVec& a, const SparseVec& b) const {
  Accumulator acc(dim());
  for (const auto& [i, x] : a)
    for (const auto& [j, y] : b) acc.add_scaled(mult(i, j), x * y);
  return acc.take();
}

SparseVec FatPoint::normal_form(const Polynomial& p) const {
  if (p.nvars() != nvars()) throw Error(ErrorCode::InvalidArgument, "polynomial arity differs from algebra");
  Accumulator acc(dim());
  for (const auto& [m, c] : p.terms()) {
    if (m.degree() > ell_) continue;
    acc.add_scaled(monomial_nf_[*jet().index_of(m)], c);
  }
  return acc.take();
}

Polynomial FatPoint::lift(const SparseVec& v) const {
  Polynomial p(nvars());
  for (const auto& [i, c] : v) p.add_term(basis_.at(i), c);
  return p;
}

std::size_t edim(const FatPoint& fp) {
  std::size_t linear = 0;
  for (const auto& m : fp.basis())
    if (m.degree() == 1) ++linear;
  if (linear != fp.nvars()) throw Error(ErrorCode::Internal, "degree-one standard monomials disagree with nvars");
  return fp.nvars();
}

Order ord(const FatPoint& fp) {
  Order o;
  for (const auto& g : fp.generators()) o = std::min(o, order_of(g));
  return o;
}

std::size_t epsilon1(const FatPoint& fp) {
  const std::size_t n = fp.nvars();
  std::vector<Polynomial> m_times_i;
  for (const auto& g : fp.generators())
    for (std::size_t k = 0; k < n; ++k) m_times_i.push_back(Polynomial::variable(n, k) * g);
  // m^(ell+1) lies in mI, so the sequence stabilizes by degree ell+1.
  const unsigned cap = std::max(fp.cap(), fp.certified_level() + 1);
  const TruncationLevel t = find_truncation_level(m_times_i, cap, n);
  if (t.dim_quotient < fp.dim()) throw Error(ErrorCode::Internal, "dim R/mI smaller than dim R/I");
  return t.dim_quotient - fp.dim();
}

bool is_complete_intersection(const FatPoint& fp) { return epsilon1(fp) == edim(fp); }

}  // namespace fatlie
