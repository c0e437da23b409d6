#include "fatlie/linalg.hpp"

#include <algorithm>
#include <map>
#include <memory>

#include "fatlie/errors.hpp"

namespace fatlie {

SparseVec sparse_from_dense(const std::vector<Rational>& dense) {
  SparseVec v;
  for (std::size_t i = 0; i < dense.size(); ++i)
    if (dense[i] != 0) v.emplace_back(i, dense[i]);
  return v;
}

std::vector<Rational> dense_from_sparse(const SparseVec& v, std::size_t n) {
  std::vector<Rational> d(n);
  for (const auto& [i, a] : v) d.at(i) = a;
  return d;
}

void axpy(SparseVec& y, const Rational& a, const SparseVec& x) {
  if (a == 0 || x.empty()) return;
  SparseVec out;
  out.reserve(y.size() + x.size());
  auto iy = y.begin();
  auto ix = x.begin();
  while (iy != y.end() || ix != x.end()) {
    if (ix == x.end() || (iy != y.end() && iy->first < ix->first)) {
      out.push_back(std::move(*iy++));
    } else if (iy == y.end() || ix->first < iy->first) {
      out.emplace_back(ix->first, a * ix->second);
      ++ix;
    } else {
      Rational s = iy->second + a * ix->second;
      if (s != 0) out.emplace_back(iy->first, std::move(s));
      ++iy;
      ++ix;
    }
  }
  y = std::move(out);
}

SparseVec scaled(const SparseVec& x, const Rational& a) {
  SparseVec out;
  if (a == 0) return out;
  out.reserve(x.size());
  for (const auto& [i, v] : x) out.emplace_back(i, v * a);
  return out;
}

Rational entry(const SparseVec& v, std::size_t index) {
  auto it = std::lower_bound(v.begin(), v.end(), index,
                             [](const auto& e, std::size_t i) { return e.first < i; });
  return (it != v.end() && it->first == index) ? it->second : Rational(0);
}

void Accumulator::add(std::size_t i, const Rational& a) {
  if (!touched_[i]) {
    touched_[i] = 1;
    support_.push_back(i);
    values_[i] = a;
  } else {
    values_[i] += a;
  }
}

void Accumulator::add_scaled(const SparseVec& x, const Rational& a) {
  if (a == 0) return;
  for (const auto& [i, v] : x) add(i, v * a);
}

SparseVec Accumulator::take() {
  std::sort(support_.begin(), support_.end());
  SparseVec out;
  out.reserve(support_.size());
  for (std::size_t i : support_) {
    if (values_[i] != 0) out.emplace_back(i, values_[i]);
    touched_[i] = 0;
  }
  support_.clear();
  return out;
}

namespace {

// One accumulator per (thread, width), never freed before thread exit, so a
// reference stays valid while accumulators of other widths are handed out.
Accumulator& scratch_impl(std::size_t n) {
  thread_local std::map<std::size_t, std::unique_ptr<Accumulator>> pool;
  auto& slot = pool[n];
  if (!slot) slot = std::make_unique<Accumulator>(n);
  return *slot;
}

}  // namespace

Accumulator& scratch_accumulator(std::size_t n) { return scratch_impl(n); }

std::vector<std::size_t> EchelonBasis::pivots() const {
  std::vector<std::size_t> p;
  p.reserve(rows_.size());
  for (const auto& r : rows_) p.push_back(r.front().first);
  return p;
}

SparseVec EchelonBasis::reduce(const SparseVec& v) const {
  if (!v.empty() && v.back().first >= ncols_)
    throw Error(ErrorCode::InvalidArgument, "vector index exceeds ambient dimension");
  bool hits_pivot = false;
  for (const auto& [i, a] : v)
    if (pivot_row_[i] != npos) {
      hits_pivot = true;
      break;
    }
  if (!hits_pivot) return v;
  Accumulator& acc = scratch_impl(ncols_);
  for (const auto& [i, a] : v) {
    const std::size_t r = pivot_row_[i];
    if (r == npos) {
      acc.add(i, a);
      continue;
    }
    // Non-pivot entries of a reduced row never touch other pivots.
    const SparseVec& row = rows_[r];
    for (auto it = row.begin() + 1; it != row.end(); ++it) acc.add(it->first, -a * it->second);
  }
  return acc.take();
}

SparseVec EchelonBasis::coordinates(const SparseVec& v) const {
  SparseVec c;
  for (const auto& [i, a] : v) {
    const std::size_t r = pivot_row_.at(i);
    if (r != npos) c.emplace_back(r, a);
  }
  return c;
}

bool EchelonBasis::insert(const SparseVec& v) {
  SparseVec rem = reduce(v);
  if (rem.empty()) return false;
  const std::size_t p = rem.front().first;
  const Rational inv = 1 / rem.front().second;
  for (auto& [i, a] : rem) a *= inv;
  for (auto& row : rows_) {
    const Rational c = entry(row, p);
    if (c != 0) axpy(row, -c, rem);
  }
  auto pos = std::lower_bound(rows_.begin(), rows_.end(), p,
                              [](const SparseVec& r, std::size_t col) { return r.front().first < col; });
  const auto at = static_cast<std::size_t>(pos - rows_.begin());
  rows_.insert(pos, std::move(rem));
  for (std::size_t k = at; k < rows_.size(); ++k) pivot_row_[rows_[k].front().first] = k;
  return true;
}

std::vector<SparseVec> EchelonBasis::nullspace() const {
  std::vector<std::size_t> free_index(ncols_, npos);
  std::vector<SparseVec> basis;
  for (std::size_t c = 0; c < ncols_; ++c) {
    if (pivot_row_[c] != npos) continue;
    free_index[c] = basis.size();
    basis.push_back({});
  }
  for (const auto& row : rows_) {
    const std::size_t p = row.front().first;
    for (auto it = row.begin() + 1; it != row.end(); ++it)
      basis[free_index[it->first]].emplace_back(p, -it->second);
  }
  for (std::size_t c = 0; c < ncols_; ++c) {
    if (free_index[c] == npos) continue;
    SparseVec& b = basis[free_index[c]];
    b.emplace_back(c, Rational(1));
    std::sort(b.begin(), b.end(), [](const auto& x, const auto& y) { return x.first < y.first; });
  }
  return basis;
}

}  // namespace fatlie
