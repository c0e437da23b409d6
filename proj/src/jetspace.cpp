#include "fatlie/jetspace.hpp"

#include <algorithm>
#include <sstream>

#include "fatlie/errors.hpp"

namespace fatlie {

JetSpace::JetSpace(std::size_t nvars, unsigned degree_bound)
    : nvars_(nvars), degree_bound_(degree_bound) {
  for (unsigned k = degree_bound + 1; k-- > 0;) {
    auto layer = monomials_of_degree(nvars, k);
    basis_.insert(basis_.end(), layer.begin(), layer.end());
    if (nvars == 0) break;
  }
  if (nvars == 0) basis_ = {Monomial(0)};
  for (std::size_t i = 0; i < basis_.size(); ++i) index_.emplace(basis_[i], i);
}

std::optional<std::size_t> JetSpace::index_of(const Monomial& m) const {
  auto it = index_.find(m);
  if (it == index_.end()) return std::nullopt;
  return it->second;
}

SparseVec JetSpace::coordinates(const Polynomial& p) const {
  if (p.nvars() != nvars_) throw Error(ErrorCode::InvalidArgument, "polynomial arity differs from jet space");
  SparseVec v;
  v.reserve(p.size());
  // Terms are stored in descending grevlex, the same order as the basis.
  for (const auto& [m, c] : p.terms()) {
    auto idx = index_of(m);
    if (!idx)
      throw Error(ErrorCode::InvalidArgument,
                  "term of degree " + std::to_string(m.degree()) + " exceeds jet degree bound " +
                      std::to_string(degree_bound_));
    v.emplace_back(*idx, c);
  }
  return v;
}

Polynomial JetSpace::polynomial(const SparseVec& v) const {
  Polynomial p(nvars_);
  for (const auto& [i, c] : v) p.add_term(basis_.at(i), c);
  return p;
}

Subspace::Subspace(std::shared_ptr<const JetSpace> ambient)
    : ambient_(std::move(ambient)), echelon_(ambient_->dim()) {}

bool Subspace::insert(const Polynomial& p) { return echelon_.insert(ambient_->coordinates(p)); }

bool Subspace::contains(const Polynomial& v) const { return reduce_mod(v).empty(); }

SparseVec Subspace::reduce_mod(const Polynomial& v) const {
  return echelon_.reduce(ambient_->coordinates(v));
}

std::vector<Polynomial> Subspace::row_polynomials() const {
  std::vector<Polynomial> out;
  for (const auto& r : echelon_.rows()) out.push_back(ambient_->polynomial(r));
  return out;
}

Subspace subspace_sum(const Subspace& a, const Subspace& b) {
  if (a.ambient().nvars() != b.ambient().nvars() ||
      a.ambient().degree_bound() != b.ambient().degree_bound())
    throw Error(ErrorCode::InvalidArgument, "subspaces have different ambient jet spaces");
  Subspace s(a);
  for (const auto& r : b.echelon_.rows()) s.echelon_.insert(r);
  return s;
}

Subspace ideal_image(std::span<const Polynomial> generators, unsigned d, std::size_t nvars) {
  auto ambient = std::make_shared<const JetSpace>(nvars, d);
  Subspace sub(ambient);
  for (const auto& g : generators) {
    if (g.nvars() != nvars) throw Error(ErrorCode::InvalidArgument, "generator arity mismatch");
    const Order o = order_of(g);
    if (o.is_infinite() || o.value > d) continue;
    const Polynomial tg = truncate(g, d);
    for (unsigned k = 0; k + o.value <= d; ++k) {
      for (const auto& alpha : monomials_of_degree(nvars, k)) {
        Polynomial prod(nvars);
        for (const auto& [m, c] : tg.terms())
          if (m.degree() + k <= d) prod.add_term(alpha * m, c);
        sub.insert(prod);
      }
      if (nvars == 0) break;
    }
  }
  return sub;
}

std::size_t hilbert_value(std::span<const Polynomial> generators, unsigned d, std::size_t nvars) {
  const Subspace img = ideal_image(generators, d, nvars);
  return img.ambient().dim() - img.dim();
}

TruncationLevel find_truncation_level(std::span<const Polynomial> generators, unsigned cap,
                                      std::size_t nvars) {
  if (cap < 2) throw Error(ErrorCode::InvalidArgument, "degree cap must be at least 2");
  TruncationLevel t;
  t.hilbert.push_back(hilbert_value(generators, 0, nvars));
  if (t.hilbert[0] == 0) throw Error(ErrorCode::ConstantUnitIdeal, "ideal contains a unit; the quotient is zero");
  for (unsigned d = 1; d <= cap; ++d) {
    t.hilbert.push_back(hilbert_value(generators, d, nvars));
    if (t.hilbert[d] != t.hilbert[d - 1]) continue;
    t.dim_quotient = t.hilbert[d];
    if (d == 1) {
      // m is inside I; keep ell >= 2 and flag the degenerate quotient.
      t.trivial = true;
      t.hilbert.push_back(t.hilbert[1]);
      t.ell = 2;
    } else {
      t.ell = d;
    }
    return t;
  }
  std::ostringstream os;
  os << "Hilbert values did not stabilize up to degree " << cap << " (ideal not m-primary or cap too small):";
  for (auto c : t.hilbert) os << ' ' << c;
  throw NotZeroDimensional(os.str(), t.hilbert);
}

}  // namespace fatlie
