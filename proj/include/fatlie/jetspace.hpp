#pragma once

// Linear algebra in the truncated ring R_d = Q[x_1..x_n] / m^(d+1).
//
// Hilbert values c_d = dim R/(I + m^(d+1)) are nondecreasing in d. If
// c_d = c_(d+1) then m^(d+1) is contained in I + m^(d+2) = I + m * m^(d+1),
// and Nakayama's lemma gives m^(d+1) in I. The first equality of consecutive
// values therefore certifies the truncation level.

#include <cstddef>
#include <map>
#include <memory>
#include <optional>
#include <span>
#include <vector>

#include "fatlie/linalg.hpp"
#include "fatlie/polynomial.hpp"

namespace fatlie {

/// Monomials of total degree <= d in n variables, in descending grevlex
/// order: index 0 is the largest monomial, the last index is 1.
class JetSpace {
 public:
  JetSpace(std::size_t nvars, unsigned degree_bound);

  std::size_t nvars() const noexcept { return nvars_; }
  unsigned degree_bound() const noexcept { return degree_bound_; }
  std::size_t dim() const noexcept { return basis_.size(); }
  const std::vector<Monomial>& basis() const noexcept { return basis_; }
  const Monomial& monomial(std::size_t index) const { return basis_.at(index); }
  std::optional<std::size_t> index_of(const Monomial& m) const;

  /// Coordinates of p; throws if p has a term of degree > degree_bound.
  SparseVec coordinates(const Polynomial& p) const;
  Polynomial polynomial(const SparseVec& v) const;

 private:
  std::size_t nvars_;
  unsigned degree_bound_;
  std::vector<Monomial> basis_;
  std::map<Monomial, std::size_t, GrevlexGreater> index_;
};

/// A subspace of a JetSpace in reduced row-echelon form. The pivot of each
/// row is its largest monomial.
class Subspace {
 public:
  explicit Subspace(std::shared_ptr<const JetSpace> ambient);

  const JetSpace& ambient() const noexcept { return *ambient_; }
  std::shared_ptr<const JetSpace> ambient_ptr() const noexcept { return ambient_; }
  const EchelonBasis& echelon() const noexcept { return echelon_; }
  std::size_t dim() const noexcept { return echelon_.dim(); }

  bool insert(const Polynomial& p);
  bool contains(const Polynomial& v) const;
  /// Remainder coordinates, supported on non-pivot monomials.
  SparseVec reduce_mod(const Polynomial& v) const;
  SparseVec reduce_mod(const SparseVec& v) const { return echelon_.reduce(v); }
  std::vector<Polynomial> row_polynomials() const;

  friend bool operator==(const Subspace& a, const Subspace& b) {
    return a.ambient_->nvars() == b.ambient_->nvars() &&
           a.ambient_->degree_bound() == b.ambient_->degree_bound() && a.echelon_ == b.echelon_;
  }

 private:
  std::shared_ptr<const JetSpace> ambient_;
  EchelonBasis echelon_;

  friend Subspace subspace_sum(const Subspace& a, const Subspace& b);
};

Subspace subspace_sum(const Subspace& a, const Subspace& b);

/// (I + m^(d+1)) / m^(d+1), spanned by truncate(x^alpha * g) over all
/// |alpha| + ord(g) <= d. Larger products lie in m^(d+1). Zero generators
/// are skipped.
Subspace ideal_image(std::span<const Polynomial> generators, unsigned d, std::size_t nvars);

/// c_d = dim R_d - dim ideal_image(generators, d).
std::size_t hilbert_value(std::span<const Polynomial> generators, unsigned d, std::size_t nvars);

struct TruncationLevel {
  unsigned ell = 0;        // smallest ell >= 2 with m^ell inside I
  std::size_t dim_quotient = 0;
  bool trivial = false;    // I contains m, so the quotient is the ground field
  std::vector<std::size_t> hilbert;  // c_0, ..., c_ell
};

/// Throws NotZeroDimensional (carrying c_0..c_cap) without stabilization.
/// A unit ideal (c_0 = 0) is reported as ConstantUnitIdeal.
TruncationLevel find_truncation_level(std::span<const Polynomial> generators, unsigned cap,
                                      std::size_t nvars);

}  // namespace fatlie
