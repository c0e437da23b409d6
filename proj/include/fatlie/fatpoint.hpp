#pragma once

// Finite-dimensional local algebras S = R/I with I m-primary.
//
// Formal power series are realized exactly by truncation: once m^ell is
// inside I, S = R_ell / I_ell with R_ell = R/m^(ell+1), and every
// computation below happens in that finite-dimensional space.
//
// With a presentation free of linear parts (I inside m^2), m_S/m_S^2 = m/m^2,
// so edim(S) = n. I is inside m^k exactly when every generator is, so
// ord(S) is the least generator order. The first deviation is the minimal
// number of generators, dim I/mI = dim R/mI - dim R/I. Truncating at ell
// does not change it since I_ell / m I_ell = I / mI.

#include <cstddef>
#include <memory>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "fatlie/jetspace.hpp"
#include "fatlie/linalg.hpp"
#include "fatlie/polynomial.hpp"

namespace fatlie {

inline constexpr unsigned kDefaultCap = 64;

/// A presentation with all generators inside m^2.
struct Presentation {
  std::vector<std::string> vars;
  std::vector<Polynomial> generators;
  /// No variables survive: I = m and S is the ground field.
  bool trivial = false;
};

/// Eliminates linear parts. While a generator g has a nonzero coefficient c
/// at x_i, solves g = 0 for x_i as a power series x_i = s(other variables)
/// (fixed point of x_i - g/c, computed modulo m^(cap+1)), substitutes s into
/// the remaining generators and drops x_i and g. The result presents an
/// isomorphic algebra whenever its truncation level is at most `cap`.
/// Throws ConstantUnitIdeal if a generator has a nonzero constant term.
Presentation minimalize(std::span<const Polynomial> generators, std::span<const std::string> vars,
                        unsigned cap = kDefaultCap);

class FatPoint {
 public:
  /// Certifies the truncation level and builds the standard-monomial basis
  /// and multiplication table. `extra_levels` builds at ell + extra_levels
  /// instead, which must give the same algebra.
  /// Throws NonMinimalPresentation, ConstantUnitIdeal or NotZeroDimensional.
  static FatPoint build(std::vector<Polynomial> generators, std::vector<std::string> vars,
                        unsigned cap = kDefaultCap, unsigned extra_levels = 0);

  std::size_t nvars() const noexcept { return vars_.size(); }
  const std::vector<std::string>& vars() const noexcept { return vars_; }
  const std::vector<Polynomial>& generators() const noexcept { return generators_; }
  unsigned cap() const noexcept { return cap_; }
  unsigned trunc_level() const noexcept { return ell_; }
  /// Truncation level certified by Hilbert stabilization (ell without extra levels).
  unsigned certified_level() const noexcept { return certified_ell_; }
  const std::vector<std::size_t>& hilbert() const noexcept { return hilbert_; }
  bool trivial() const noexcept { return trivial_; }

  const JetSpace& jet() const noexcept { return ideal_->ambient(); }
  const Subspace& ideal_image() const noexcept { return *ideal_; }

  /// Standard monomials in ascending grevlex order; basis()[0] is 1.
  const std::vector<Monomial>& basis() const noexcept { return basis_; }
  std::size_t dim() const noexcept { return basis_.size(); }
  std::optional<std::size_t> basis_index(const Monomial& m) const;
  /// Basis index of the coset of x_i.
  std::size_t variable_index(std::size_t i) const;

  /// Product of basis elements i and j in basis coordinates.
  const SparseVec& mult(std::size_t i, std::size_t j) const { return table_.at(i * dim() + j); }
  SparseVec multiply(const SparseVec& a, const SparseVec& b) const;

  /// Normal form of a monomial of degree <= trunc_level(), in basis coordinates.
  const SparseVec& monomial_normal_form(std::size_t jet_index) const { return monomial_nf_.at(jet_index); }
  /// Normal form of p (terms above trunc_level() vanish in S).
  SparseVec normal_form(const Polynomial& p) const;
  Polynomial lift(const SparseVec& v) const;

 private:
  FatPoint() = default;

  std::vector<std::string> vars_;
  std::vector<Polynomial> generators_;
  unsigned cap_ = kDefaultCap;
  unsigned ell_ = 0;
  unsigned certified_ell_ = 0;
  bool trivial_ = false;
  std::vector<std::size_t> hilbert_;
  std::shared_ptr<const Subspace> ideal_;
  std::vector<Monomial> basis_;
  std::vector<std::size_t> jet_to_basis_;  // npos for pivot monomials
  std::vector<SparseVec> monomial_nf_;     // per jet index
  std::vector<SparseVec> table_;           // row-major dim x dim
};

std::size_t edim(const FatPoint& fp);
/// Least order of a nonzero generator; infinite for S = ground field.
Order ord(const FatPoint& fp);
/// Minimal number of generators of I.
std::size_t epsilon1(const FatPoint& fp);
bool is_complete_intersection(const FatPoint& fp);

}  // namespace fatlie
