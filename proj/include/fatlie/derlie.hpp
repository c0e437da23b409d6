#pragma once

// Derivations of a fat point S as matrices acting on its standard-monomial
// basis, and solvability of the resulting Lie algebra.
//
// Structured solver. Der_Q(R/I) = Der_I R / (I * Der R): a derivation of S is
// given by the images v_i = delta(x_i) subject to delta(g_j) in I for every
// generator. Working modulo m^(ell+1) is sound in both directions:
//  (a) changing a lift v_i by an element of m^(ell+1) changes delta(g_j) by an
//      element of m^ell, which lies in I, so the constraint is well defined;
//  (b) a tuple solving the truncated system extends to a derivation of R by
//      the same formula delta = sum v_i d/dx_i, which then preserves I.
// Tuples in I^n act as zero on S, so mapping solutions to action matrices
// takes the quotient by I * Der R.
//
// Brute-force oracle. A linear map D on S is a derivation iff
// D(ab) = D(a)b + aD(b) on all basis pairs and D(1) = 0.
//
// Solvability is decided over Q. The derived series of a Q-form has the same
// dimensions after tensoring with C, so solvability over Q and over C agree.
// Cartan's criterion (characteristic zero) gives an independent check.

#include <cstddef>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "fatlie/fatpoint.hpp"
#include "fatlie/linalg.hpp"

namespace fatlie {

inline constexpr std::size_t kDefaultOracleBound = 40;

/// A dim x dim matrix stored row-major and sparse (flat index r*dim + c).
/// Column c is the image of basis element c.
class Derivation {
 public:
  Derivation() = default;
  Derivation(std::size_t dim, SparseVec flat, std::optional<std::vector<SparseVec>> source = {});

  std::size_t dim() const noexcept { return dim_; }
  const SparseVec& flat() const noexcept { return flat_; }
  bool is_zero() const noexcept { return flat_.empty(); }
  Rational at(std::size_t r, std::size_t c) const { return entry(flat_, r * dim_ + c); }
  SparseVec column(std::size_t c) const;
  SparseVec apply(const SparseVec& v) const;
  /// (delta(x_1), ..., delta(x_n)) when produced by the structured solver.
  const std::optional<std::vector<SparseVec>>& source() const noexcept { return source_; }

  friend bool operator==(const Derivation& a, const Derivation& b) {
    return a.dim_ == b.dim_ && a.flat_ == b.flat_;
  }

 private:
  std::size_t dim_ = 0;
  SparseVec flat_;
  std::optional<std::vector<SparseVec>> source_;
};

/// Matrix commutator a*b - b*a.
Derivation bracket(const Derivation& a, const Derivation& b);
Derivation linear_combination(std::size_t dim, std::span<const Derivation> basis, const SparseVec& coeffs);
bool satisfies_leibniz(const FatPoint& fp, const Derivation& d);

/// Deterministic row-major text: one line per matrix row, entries separated by spaces.
std::string format_matrix(const Derivation& d);

/// Span of matrices kept in reduced echelon form over flattened coordinates.
class LieAlgebra {
 public:
  explicit LieAlgebra(std::size_t ambient = 0) : ambient_(ambient), echelon_(ambient * ambient) {}
  static LieAlgebra span(std::size_t ambient, std::span<const Derivation> generators);

  std::size_t ambient_dim() const noexcept { return ambient_; }
  std::size_t dim() const noexcept { return echelon_.dim(); }
  const EchelonBasis& echelon() const noexcept { return echelon_; }
  std::vector<Derivation> basis() const;
  const Derivation basis_element(std::size_t k) const { return Derivation(ambient_, echelon_.rows().at(k)); }
  bool contains(const Derivation& d) const { return echelon_.contains(d.flat()); }
  /// Coordinates in basis(); throws Internal if d is outside the span.
  SparseVec coordinates(const Derivation& d) const;

  friend bool operator==(const LieAlgebra& a, const LieAlgebra& b) {
    return a.ambient_ == b.ambient_ && a.echelon_ == b.echelon_;
  }

 private:
  std::size_t ambient_;
  EchelonBasis echelon_;
};

/// [b_i, b_j] = sum_l c_ij^l b_l for the echelon basis b of L.
class StructureConstants {
 public:
  /// Throws Internal if L is not closed under the commutator.
  explicit StructureConstants(const LieAlgebra& L);

  std::size_t dim() const noexcept { return dim_; }
  const SparseVec& bracket(std::size_t i, std::size_t j) const { return table_.at(i * dim_ + j); }
  /// Bracket of two elements given in coordinates.
  SparseVec bracket(const SparseVec& u, const SparseVec& v) const;

 private:
  std::size_t dim_;
  std::vector<SparseVec> table_;
};

/// Derivations via tuples (v_1..v_n) in R_ell^n with sum v_i dg_j/dx_i in I.
LieAlgebra derivations_structured(const FatPoint& fp);
/// Nullspace of the structured constraint system, as tuples of jet-space
/// coordinate vectors (one per variable). Contains I^n.
std::vector<std::vector<SparseVec>> structured_solution_tuples(const FatPoint& fp);
/// Action on S of the derivation of R with delta(x_i) = tuple[i] (jet coordinates).
Derivation action_matrix(const FatPoint& fp, std::span<const SparseVec> tuple);

/// Solves the Leibniz system directly. Throws DimensionBound when dim S > bound.
LieAlgebra derivations_bruteforce(const FatPoint& fp, std::size_t bound = kDefaultOracleBound);

/// Each series ends at its first repeated term (not repeated) or at zero.
std::vector<LieAlgebra> derived_series(const LieAlgebra& L);
bool is_solvable(const LieAlgebra& L);
std::vector<LieAlgebra> lower_central_series(const LieAlgebra& L);
bool is_nilpotent(const LieAlgebra& L);

/// K(i, j) = tr(ad b_i ad b_j), computed from the structure constants of L.
std::vector<std::vector<Rational>> killing_form(const LieAlgebra& L);
std::vector<std::vector<Rational>> killing_form(const StructureConstants& sc);
/// True iff K vanishes on L x [L, L].
bool cartan_solvable(const LieAlgebra& L);

struct LieSummary {
  std::size_t dim = 0;
  std::vector<std::size_t> derived_dims;
  std::vector<std::size_t> lower_central_dims;
  bool solvable = false;
  bool nilpotent = false;
  bool cartan_solvable = false;
};

/// Runs every structural test against one shared set of structure constants.
LieSummary summarize(const LieAlgebra& L);

}  // namespace fatlie
