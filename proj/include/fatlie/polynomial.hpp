#pragma once

#include <compare>
#include <cstddef>
#include <cstdint>
#include <limits>
#include <map>
#include <span>
#include <string>
#include <vector>

#include "fatlie/rational.hpp"

namespace fatlie {

/// Exponent vector x^alpha, one entry per variable.
class Monomial {
 public:
  Monomial() = default;
  explicit Monomial(std::size_t nvars) : exps_(nvars, 0) {}
  explicit Monomial(std::vector<unsigned> exps) : exps_(std::move(exps)) {}

  static Monomial variable(std::size_t nvars, std::size_t i);

  std::size_t nvars() const noexcept { return exps_.size(); }
  unsigned operator[](std::size_t i) const { return exps_[i]; }
  unsigned& operator[](std::size_t i) { return exps_[i]; }
  std::span<const unsigned> exponents() const noexcept { return exps_; }
  unsigned degree() const noexcept;

  Monomial operator*(const Monomial& other) const;
  /// True when `other` divides this monomial.
  bool divisible_by(const Monomial& other) const;

  friend bool operator==(const Monomial&, const Monomial&) = default;

 private:
  std::vector<unsigned> exps_;
};

/// Graded reverse lexicographic order with x_1 > x_2 > ... > x_n.
struct GrevlexLess {
  bool operator()(const Monomial& a, const Monomial& b) const;
};

/// Strict-weak "a comes before b" for canonical (descending) term order.
struct GrevlexGreater {
  bool operator()(const Monomial& a, const Monomial& b) const { return GrevlexLess{}(b, a); }
};

/// All monomials in `nvars` variables of total degree exactly `degree`.
std::vector<Monomial> monomials_of_degree(std::size_t nvars, unsigned degree);

/// Order of a polynomial: minimal total degree of a term, `infinite` for zero.
struct Order {
  static constexpr unsigned infinite = std::numeric_limits<unsigned>::max();
  unsigned value = infinite;
  bool is_infinite() const noexcept { return value == infinite; }
  friend auto operator<=>(const Order&, const Order&) = default;
};

/// Sparse polynomial with rational coefficients. No stored coefficient is
/// zero; terms are kept in descending grevlex order.
class Polynomial {
 public:
  using TermMap = std::map<Monomial, Rational, GrevlexGreater>;

  explicit Polynomial(std::size_t nvars = 0) : nvars_(nvars) {}
  static Polynomial constant(std::size_t nvars, const Rational& c);
  static Polynomial variable(std::size_t nvars, std::size_t i);
  static Polynomial monomial(const Monomial& m, const Rational& c = 1);

  std::size_t nvars() const noexcept { return nvars_; }
  const TermMap& terms() const noexcept { return terms_; }
  bool is_zero() const noexcept { return terms_.empty(); }
  std::size_t size() const noexcept { return terms_.size(); }

  /// Coefficient of `m` (zero when absent).
  Rational coefficient(const Monomial& m) const;
  void add_term(const Monomial& m, const Rational& c);

  /// Largest total degree; 0 for the zero polynomial.
  unsigned degree() const noexcept;

  Polynomial operator-() const;
  Polynomial& operator+=(const Polynomial& q);
  Polynomial& operator-=(const Polynomial& q);
  Polynomial& operator*=(const Rational& c);

  friend Polynomial operator+(Polynomial p, const Polynomial& q) { return p += q; }
  friend Polynomial operator-(Polynomial p, const Polynomial& q) { return p -= q; }
  friend Polynomial operator*(Polynomial p, const Rational& c) { return p *= c; }
  friend Polynomial operator*(const Rational& c, Polynomial p) { return p *= c; }
  friend Polynomial operator*(const Polynomial& p, const Polynomial& q);
  friend bool operator==(const Polynomial&, const Polynomial&) = default;

 private:
  void check_same_ring(const Polynomial& q) const;

  std::size_t nvars_;
  TermMap terms_;
};

Polynomial add(const Polynomial& p, const Polynomial& q);
Polynomial mul(const Polynomial& p, const Polynomial& q);
Polynomial scale(const Polynomial& p, const Rational& c);

/// p * q with all terms of total degree > d discarded.
Polynomial mul_truncated(const Polynomial& p, const Polynomial& q, unsigned d);
Polynomial pow_truncated(const Polynomial& p, unsigned k, unsigned d);

/// Formal partial derivative with respect to the 0-based variable index `i`.
Polynomial partial_derivative(const Polynomial& p, std::size_t i);
Order order_of(const Polynomial& p);
/// Reduction modulo m^(d+1): keeps the terms of total degree <= d.
Polynomial truncate(const Polynomial& p, unsigned d);
/// Homogeneous component of degree `k`.
Polynomial homogeneous_part(const Polynomial& p, unsigned k);

/// Substitutes `value` for variable `i` and truncates the result at degree d.
Polynomial substitute_truncated(const Polynomial& p, std::size_t i, const Polynomial& value,
                                unsigned d);
/// Removes variable `i` (which must not occur in `p`).
Polynomial drop_variable(const Polynomial& p, std::size_t i);

/// Canonical text form, parseable by `parse_poly` with the same variables.
std::string to_string(const Polynomial& p, std::span<const std::string> vars);
std::string to_string(const Monomial& m, std::span<const std::string> vars);

/// Parses `+ - * ^`, integer and a/b literals, parentheses. Throws ParseError.
Polynomial parse_poly(std::string_view text, std::span<const std::string> vars);

}  // namespace fatlie
