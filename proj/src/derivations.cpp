#include <algorithm>
#include <sstream>
#include <tuple>

#include "fatlie/derlie.hpp"
#include "fatlie/errors.hpp"

namespace fatlie {
namespace {

constexpr std::size_t npos = static_cast<std::size_t>(-1);

using Triplet = std::tuple<std::size_t, std::size_t, Rational>;

// Rows of a sparse matrix given as unordered (row, col, value) triplets.
std::vector<SparseVec> rows_from_triplets(std::vector<Triplet> t, std::size_t nrows) {
  std::sort(t.begin(), t.end(), [](const Triplet& a, const Triplet& b) {
    return std::tie(std::get<0>(a), std::get<1>(a)) < std::tie(std::get<0>(b), std::get<1>(b));
  });
  std::vector<SparseVec> rows(nrows);
  for (auto& [r, c, v] : t) {
    SparseVec& row = rows[r];
    if (!row.empty() && row.back().first == c) {
      row.back().second += v;
      if (row.back().second == 0) row.pop_back();
    } else if (v != 0) {
      row.emplace_back(c, std::move(v));
    }
  }
  return rows;
}

SparseVec sorted_flat(std::vector<std::pair<std::size_t, Rational>> entries) {
  std::sort(entries.begin(), entries.end(), [](const auto& a, const auto& b) { return a.first < b.first; });
  SparseVec out;
  for (auto& [i, v] : entries) {
    if (!out.empty() && out.back().first == i) {
      out.back().second += v;
      if (out.back().second == 0) out.pop_back();
    } else if (v != 0) {
      out.emplace_back(i, std::move(v));
    }
  }
  return out;
}

// jet index of x^(alpha - e_i) * x^beta for basis element alpha, npos when the
// degree exceeds the truncation level or alpha_i = 0.
class ShiftTable {
 public:
  explicit ShiftTable(const FatPoint& fp) : fp_(fp), n_(fp.nvars()), njet_(fp.jet().dim()) {
    const JetSpace& jet = fp.jet();
    table_.assign(fp.dim() * n_, {});
    for (std::size_t a = 0; a < fp.dim(); ++a) {
      const Monomial& alpha = fp.basis()[a];
      for (std::size_t i = 0; i < n_; ++i) {
        if (alpha[i] == 0) continue;
        Monomial shifted(alpha);
        shifted[i] -= 1;
        auto& slot = table_[a * n_ + i];
        slot.assign(njet_, npos);
        for (std::size_t b = 0; b < njet_; ++b) {
          const Monomial prod = shifted * jet.monomial(b);
          if (prod.degree() <= fp.trunc_level()) slot[b] = *jet.index_of(prod);
        }
      }
    }
  }

  // Flat entries of the action matrix whose columns are delta(x^alpha).
  SparseVec action(std::span<const SparseVec> tuple) const {
    const std::size_t mu = fp_.dim();
    std::vector<std::pair<std::size_t, Rational>> entries;
    for (std::size_t a = 0; a < mu; ++a) {
      const Monomial& alpha = fp_.basis()[a];
      for (std::size_t i = 0; i < n_; ++i) {
        if (alpha[i] == 0) continue;
        const auto& slot = table_[a * n_ + i];
        for (const auto& [b, c] : tuple[i]) {
          if (slot[b] == npos) continue;
          const Rational w = c * Rational(alpha[i]);
          for (const auto& [r, x] : fp_.monomial_normal_form(slot[b])) entries.emplace_back(r * mu + a, w * x);
        }
      }
    }
    return sorted_flat(std::move(entries));
  }

 private:
  const FatPoint& fp_;
  std::size_t n_;
  std::size_t njet_;
  std::vector<std::vector<std::size_t>> table_;
};

std::vector<SparseVec> split_tuple(const SparseVec& u, std::size_t n, std::size_t njet) {
  std::vector<SparseVec> tuple(n);
  for (const auto& [col, c] : u) tuple[col / njet].emplace_back(col % njet, c);
  return tuple;
}

std::vector<SparseVec> source_of(const FatPoint& fp, std::span<const SparseVec> tuple) {
  std::vector<SparseVec> src;
  for (const auto& v : tuple) {
    Accumulator acc(fp.dim());
    for (const auto& [b, c] : v) acc.add_scaled(fp.monomial_normal_form(b), c);
    src.push_back(acc.take());
  }
  return src;
}

}  // namespace

std::vector<std::vector<SparseVec>> structured_solution_tuples(const FatPoint& fp) {
  const std::size_t n = fp.nvars();
  const std::size_t mu = fp.dim();
  const JetSpace& jet = fp.jet();
  const std::size_t njet = jet.dim();
  const auto& gens = fp.generators();

  // Column (i, beta) holds NF(x^beta * dg_j/dx_i) for every generator j,
  // stacked into rows indexed j*mu + s.
  std::vector<Triplet> triplets;
  for (std::size_t j = 0; j < gens.size(); ++j) {
    for (std::size_t i = 0; i < n; ++i) {
      const Polynomial dg = truncate(partial_derivative(gens[j], i), fp.trunc_level());
      if (dg.is_zero()) continue;
      for (std::size_t b = 0; b < njet; ++b) {
        const Monomial& beta = jet.monomial(b);
        Accumulator acc(mu);
        for (const auto& [gamma, c] : dg.terms()) {
          const Monomial prod = beta * gamma;
          if (prod.degree() > fp.trunc_level()) continue;
          acc.add_scaled(fp.monomial_normal_form(*jet.index_of(prod)), c);
        }
        for (auto& [s, v] : acc.take()) triplets.emplace_back(j * mu + s, i * njet + b, std::move(v));
      }
    }
  }
  EchelonBasis constraints(n * njet);
  for (const auto& row : rows_from_triplets(std::move(triplets), gens.size() * mu))
    if (!row.empty()) constraints.insert(row);

  std::vector<std::vector<SparseVec>> tuples;
  for (const auto& u : constraints.nullspace()) tuples.push_back(split_tuple(u, n, njet));
  return tuples;
}

Derivation action_matrix(const FatPoint& fp, std::span<const SparseVec> tuple) {
  if (tuple.size() != fp.nvars()) throw Error(ErrorCode::InvalidArgument, "tuple length differs from nvars");
  ShiftTable shifts(fp);
  return Derivation(fp.dim(), shifts.action(tuple), source_of(fp, tuple));
}

LieAlgebra derivations_structured(const FatPoint& fp) {
  const auto tuples = structured_solution_tuples(fp);
  ShiftTable shifts(fp);
  std::vector<Derivation> mats;
  mats.reserve(tuples.size());
  for (const auto& t : tuples) mats.emplace_back(fp.dim(), shifts.action(t));
  return LieAlgebra::span(fp.dim(), mats);
}

LieAlgebra derivations_bruteforce(const FatPoint& fp, std::size_t bound) {
  const std::size_t mu = fp.dim();
  if (mu > bound)
    throw Error(ErrorCode::DimensionBound, "dim S = " + std::to_string(mu) + " exceeds the brute-force oracle bound " +
                                               std::to_string(bound));
  const auto var = [mu](std::size_t r, std::size_t c) { return r * mu + c; };
  EchelonBasis system(mu * mu);
  for (std::size_t r = 0; r < mu; ++r) system.insert(SparseVec{{var(r, 0), Rational(1)}});
  for (std::size_t a = 0; a < mu; ++a) {
    for (std::size_t b = a; b < mu; ++b) {
      // Row r of D(ab) - D(a)b - aD(b).
      std::vector<Triplet> t;
      for (const auto& [c, x] : fp.mult(a, b))
        for (std::size_t r = 0; r < mu; ++r) t.emplace_back(r, var(r, c), x);
      for (std::size_t s = 0; s < mu; ++s) {
        for (const auto& [r, x] : fp.mult(s, b)) t.emplace_back(r, var(s, a), -x);
        for (const auto& [r, x] : fp.mult(a, s)) t.emplace_back(r, var(s, b), -x);
      }
      for (const auto& row : rows_from_triplets(std::move(t), mu))
        if (!row.empty()) system.insert(row);
    }
  }
  std::vector<Derivation> mats;
  for (auto& v : system.nullspace()) mats.emplace_back(mu, std::move(v));
  return LieAlgebra::span(mu, mats);
}

Derivation::Derivation(std::size_t dim, SparseVec flat, std::optional<std::vector<SparseVec>> source)
    : dim_(dim), flat_(std::move(flat)), source_(std::move(source)) {
  if (!flat_.empty() && flat_.back().first >= dim_ * dim_)
    throw Error(ErrorCode::InvalidArgument, "matrix entry outside ambient dimension");
}

SparseVec Derivation::column(std::size_t c) const {
  SparseVec col;
  for (const auto& [k, v] : flat_)
    if (k % dim_ == c) col.emplace_back(k / dim_, v);
  return col;
}

SparseVec Derivation::apply(const SparseVec& v) const {
  std::vector<Rational> x = dense_from_sparse(v, dim_);
  Accumulator acc(dim_);
  for (const auto& [k, a] : flat_) {
    const Rational& xc = x[k % dim_];
    if (xc != 0) acc.add(k / dim_, a * xc);
  }
  return acc.take();
}

bool satisfies_leibniz(const FatPoint& fp, const Derivation& d) {
  if (d.dim() != fp.dim()) return false;
  if (!d.column(0).empty()) return false;
  std::vector<SparseVec> image(fp.dim());
  for (std::size_t c = 0; c < fp.dim(); ++c) image[c] = d.column(c);
  for (std::size_t a = 0; a < fp.dim(); ++a) {
    const SparseVec ea{{a, Rational(1)}};
    for (std::size_t b = a; b < fp.dim(); ++b) {
      const SparseVec eb{{b, Rational(1)}};
      SparseVec lhs = d.apply(fp.mult(a, b));
      SparseVec rhs = fp.multiply(image[a], eb);
      axpy(rhs, 1, fp.multiply(ea, image[b]));
      if (lhs != rhs) return false;
    }
  }
  return true;
}

namespace {

// Row offsets into a row-major sorted flat vector.
std::vector<std::size_t> row_offsets(const Derivation& m) {
  std::vector<std::size_t> off(m.dim() + 1, 0);
  for (const auto& [k, v] : m.flat()) ++off[k / m.dim() + 1];
  for (std::size_t r = 0; r < m.dim(); ++r) off[r + 1] += off[r];
  return off;
}

void accumulate_product(const Derivation& a, const Derivation& b, const std::vector<std::size_t>& boff,
                        const Rational& sign, Accumulator& acc) {
  const std::size_t n = a.dim();
  for (const auto& [k, x] : a.flat()) {
    const std::size_t r = k / n, mid = k % n;
    for (std::size_t p = boff[mid]; p < boff[mid + 1]; ++p) {
      const auto& [kb, y] = b.flat()[p];
      acc.add(r * n + kb % n, sign * x * y);
    }
  }
}

}  // namespace

Derivation bracket(const Derivation& a, const Derivation& b) {
  if (a.dim() != b.dim()) throw Error(ErrorCode::InvalidArgument, "bracket of matrices of different sizes");
  const std::size_t n = a.dim();
  Accumulator& acc = scratch_accumulator(n * n);
  accumulate_product(a, b, row_offsets(b), Rational(1), acc);
  accumulate_product(b, a, row_offsets(a), Rational(-1), acc);
  return Derivation(n, acc.take());
}

Derivation linear_combination(std::size_t dim, std::span<const Derivation> basis, const SparseVec& coeffs) {
  Accumulator& acc = scratch_accumulator(dim * dim);
  for (const auto& [k, c] : coeffs) acc.add_scaled(basis[k].flat(), c);
  return Derivation(dim, acc.take());
}

std::string format_matrix(const Derivation& d) {
  std::ostringstream os;
  for (std::size_t r = 0; r < d.dim(); ++r) {
    for (std::size_t c = 0; c < d.dim(); ++c) os << (c ? " " : "") << d.at(r, c).get_str();
    os << '\n';
  }
  return os.str();
}

}  // namespace fatlie
