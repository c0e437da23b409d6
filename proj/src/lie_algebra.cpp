#include "fatlie/derlie.hpp"
#include "fatlie/errors.hpp"

namespace fatlie {

LieAlgebra LieAlgebra::span(std::size_t ambient, std::span<const Derivation> generators) {
  LieAlgebra L(ambient);
  for (const auto& d : generators) {
    if (d.dim() != ambient) throw Error(ErrorCode::InvalidArgument, "generator has the wrong ambient dimension");
    L.echelon_.insert(d.flat());
  }
  return L;
}

std::vector<Derivation> LieAlgebra::basis() const {
  std::vector<Derivation> out;
  out.reserve(dim());
  for (const auto& r : echelon_.rows()) out.emplace_back(ambient_, r);
  return out;
}

SparseVec LieAlgebra::coordinates(const Derivation& d) const {
  if (!echelon_.reduce(d.flat()).empty()) throw Error(ErrorCode::Internal, "matrix lies outside the Lie algebra");
  return echelon_.coordinates(d.flat());
}

StructureConstants::StructureConstants(const LieAlgebra& L) : dim_(L.dim()), table_(L.dim() * L.dim()) {
  const auto basis = L.basis();
  for (std::size_t i = 0; i < dim_; ++i) {
    for (std::size_t j = i + 1; j < dim_; ++j) {
      const Derivation br = fatlie::bracket(basis[i], basis[j]);
      if (!L.echelon().reduce(br.flat()).empty())
        throw Error(ErrorCode::Internal, "span of derivations is not closed under the commutator");
      SparseVec c = L.echelon().coordinates(br.flat());
      table_[j * dim_ + i] = scaled(c, Rational(-1));
      table_[i * dim_ + j] = std::move(c);
    }
  }
}

SparseVec StructureConstants::bracket(const SparseVec& u, const SparseVec& v) const {
  Accumulator acc(dim_);
  for (const auto& [i, a] : u)
    for (const auto& [j, b] : v) acc.add_scaled(table_[i * dim_ + j], a * b);
  return acc.take();
}

namespace {

EchelonBasis whole(std::size_t k) {
  EchelonBasis e(k);
  for (std::size_t i = 0; i < k; ++i) e.insert(SparseVec{{i, Rational(1)}});
  return e;
}

// Terms in coordinates of L. `lower_central` brackets with L instead of the term.
std::vector<EchelonBasis> series_coords(const StructureConstants& sc, bool lower_central) {
  const std::size_t k = sc.dim();
  const EchelonBasis full = whole(k);
  std::vector<EchelonBasis> terms{full};
  while (terms.back().dim() > 0) {
    const EchelonBasis& cur = terms.back();
    const auto& left = lower_central ? full.rows() : cur.rows();
    EchelonBasis next(k);
    for (std::size_t a = 0; a < left.size(); ++a) {
      for (std::size_t b = lower_central ? 0 : a + 1; b < cur.rows().size(); ++b) {
        next.insert(sc.bracket(left[a], cur.rows()[b]));
        if (next.dim() == cur.dim()) break;
      }
      if (next.dim() == cur.dim()) break;
    }
    // Each term lies in the previous one, so equal dimensions mean equality.
    if (next.dim() == cur.dim()) break;
    terms.push_back(std::move(next));
  }
  return terms;
}

std::vector<LieAlgebra> materialize(const LieAlgebra& L, const std::vector<EchelonBasis>& terms) {
  const auto basis = L.basis();
  std::vector<LieAlgebra> out;
  for (const auto& t : terms) {
    std::vector<Derivation> gens;
    for (const auto& row : t.rows()) gens.push_back(linear_combination(L.ambient_dim(), basis, row));
    out.push_back(LieAlgebra::span(L.ambient_dim(), gens));
  }
  return out;
}

bool cartan_test(const StructureConstants& sc, const std::vector<std::vector<Rational>>& K) {
  const auto derived = series_coords(sc, false);
  if (derived.size() < 2) {
    // [L, L] = L: the form must vanish on all of L.
    for (const auto& row : K)
      for (const auto& x : row)
        if (x != 0) return false;
    return true;
  }
  for (const auto& y : derived[1].rows()) {
    for (std::size_t i = 0; i < sc.dim(); ++i) {
      Rational s = 0;
      for (const auto& [j, a] : y) s += K[i][j] * a;
      if (s != 0) return false;
    }
  }
  return true;
}

}  // namespace

std::vector<LieAlgebra> derived_series(const LieAlgebra& L) {
  return materialize(L, series_coords(StructureConstants(L), false));
}

bool is_solvable(const LieAlgebra& L) {
  return series_coords(StructureConstants(L), false).back().dim() == 0;
}

std::vector<LieAlgebra> lower_central_series(const LieAlgebra& L) {
  return materialize(L, series_coords(StructureConstants(L), true));
}

bool is_nilpotent(const LieAlgebra& L) {
  return series_coords(StructureConstants(L), true).back().dim() == 0;
}

std::vector<std::vector<Rational>> killing_form(const StructureConstants& sc) {
  const std::size_t k = sc.dim();
  std::vector<std::vector<Rational>> K(k, std::vector<Rational>(k));
  // (ad b_i)_{m,l} is the b_m coefficient of [b_i, b_l].
  for (std::size_t i = 0; i < k; ++i) {
    for (std::size_t j = i; j < k; ++j) {
      Rational s = 0;
      for (std::size_t l = 0; l < k; ++l)
        for (const auto& [m, a] : sc.bracket(i, l)) {
          const SparseVec& col = sc.bracket(j, m);
          if (!col.empty()) s += a * entry(col, l);
        }
      K[i][j] = s;
      K[j][i] = s;
    }
  }
  return K;
}

std::vector<std::vector<Rational>> killing_form(const LieAlgebra& L) { return killing_form(StructureConstants(L)); }

bool cartan_solvable(const LieAlgebra& L) {
  const StructureConstants sc(L);
  return cartan_test(sc, killing_form(sc));
}

LieSummary summarize(const LieAlgebra& L) {
  const StructureConstants sc(L);
  LieSummary s;
  s.dim = L.dim();
  for (const auto& t : series_coords(sc, false)) s.derived_dims.push_back(t.dim());
  for (const auto& t : series_coords(sc, true)) s.lower_central_dims.push_back(t.dim());
  s.solvable = s.derived_dims.back() == 0;
  s.nilpotent = s.lower_central_dims.back() == 0;
  s.cartan_solvable = cartan_test(sc, killing_form(sc));
  return s;
}

}  // namespace fatlie
