#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <algorithm>
#include <memory>
#include <random>

#include "fatlie/errors.hpp"
#include "fatlie/jetspace.hpp"
#include "oracles.hpp"

using namespace fatlie;

namespace {

const std::vector<std::string> XY{"x", "y"};
const std::vector<std::string> XYZ{"x", "y", "z"};

std::vector<Polynomial> gens(std::initializer_list<const char*> ps, const std::vector<std::string>& vars = XY) {
  std::vector<Polynomial> out;
  for (const char* p : ps) out.push_back(parse_poly(p, vars));
  return out;
}

std::size_t count_monomials_below(std::size_t n, unsigned k) {
  std::size_t c = 0;
  for (unsigned d = 0; d < k; ++d) c += monomials_of_degree(n, d).size();
  return c;
}

}  // namespace

TEST_CASE("jet space basis") {
  const JetSpace J(2, 2);
  CHECK(J.dim() == 6);
  CHECK(to_string(J.monomial(0), XY) == "x^2");
  CHECK(to_string(J.monomial(J.dim() - 1), XY) == "1");
  for (std::size_t i = 0; i < J.dim(); ++i) CHECK(J.index_of(J.monomial(i)) == i);
  CHECK_THROWS_AS(J.coordinates(parse_poly("x^3", XY)), Error);
  const Polynomial p = parse_poly("x*y - 2 + 1/3*y", XY);
  CHECK(J.polynomial(J.coordinates(p)) == p);
  CHECK(JetSpace(0, 5).dim() == 1);
}

TEST_CASE("ideal image in a truncated jet space") {
  const Subspace m2 = ideal_image(gens({"x^2", "x*y", "y^2"}), 2, 2);
  CHECK(m2.dim() == 3);
  for (const char* m : {"x^2", "x*y", "y^2"}) CHECK(m2.contains(parse_poly(m, XY)));
  CHECK(!m2.contains(parse_poly("x", XY)));

  CHECK(ideal_image(gens({"x^3"}, {"x"}), 2, 1).dim() == 0);

  // 15 monomials of degree <= 4 minus 6 standard ones; the count of 6 is the
  // Milnor number of x^3 + y^4, whose Jacobian ideal is (x^2, y^3) up to units.
  const auto g = gens({"x^2", "y^3"});
  const Subspace s = ideal_image(g, 4, 2);
  CHECK(s.dim() == 9);
  CHECK(JetSpace(2, 4).dim() - s.dim() == oracle::brieskorn_milnor(3, 4));
  CHECK(JetSpace(2, 4).dim() - s.dim() == oracle::hilbert(g, 2, 4));
}

TEST_CASE("zero generators are skipped") {
  const auto g = gens({"0", "x^2", "y^2"});
  CHECK(ideal_image(g, 3, 2).dim() == ideal_image(gens({"x^2", "y^2"}), 3, 2).dim());
}

TEST_CASE("hilbert values") {
  const auto m2 = gens({"x^2", "x*y", "y^2"});
  CHECK(hilbert_value(m2, 1, 2) == 3);
  CHECK(hilbert_value(m2, 2, 2) == 3);
  CHECK(hilbert_value(gens({"x^2", "y^3"}), 5, 2) == 6);
  CHECK(hilbert_value(gens({"x^2", "y^3"}), 5, 2) == oracle::hilbert(gens({"x^2", "y^3"}), 2, 5));
}

TEST_CASE("truncation level") {
  auto t = find_truncation_level(gens({"x^2", "x*y", "y^2"}), 64, 2);
  CHECK(t.ell == 2);
  CHECK(t.dim_quotient == 3);
  CHECK(!t.trivial);

  t = find_truncation_level(gens({"x^3"}, {"x"}), 64, 1);
  CHECK(t.ell == 3);
  CHECK(t.dim_quotient == 3);

  // x*y^2 survives in degree 3, every monomial of degree 4 lies in I
  const auto g = gens({"x^2", "y^3"});
  t = find_truncation_level(g, 64, 2);
  CHECK(t.ell == 4);
  CHECK(t.dim_quotient == 6);
  const Subspace i3 = ideal_image(g, 3, 2);
  CHECK(!i3.contains(parse_poly("x*y^2", XY)));
  const Subspace i4 = ideal_image(g, 4, 2);
  for (const auto& m : monomials_of_degree(2, 4)) CHECK(i4.contains(Polynomial::monomial(m)));
}

TEST_CASE("truncation level errors and degenerate cases") {
  try {
    find_truncation_level(gens({"x^2"}), 20, 2);
    FAIL("expected NotZeroDimensional");
  } catch (const NotZeroDimensional& e) {
    CHECK(e.code() == ErrorCode::NotZeroDimensional);
    CHECK(e.hilbert_sequence().size() >= 20);
    CHECK(e.hilbert_sequence()[3] == 7);
  }
  CHECK_THROWS_AS(find_truncation_level(gens({"1 + x", "y^2"}), 64, 2), Error);
  try {
    find_truncation_level(gens({"1 + x", "y^2"}), 64, 2);
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::ConstantUnitIdeal);
  }
  const auto t = find_truncation_level(gens({"x", "y + x^2"}), 64, 2);
  CHECK(t.trivial);
  CHECK(t.dim_quotient == 1);
  CHECK_THROWS_AS(find_truncation_level(gens({"x^2", "y^2"}), 1, 2), Error);
}

TEST_CASE("powers of the maximal ideal") {
  for (std::size_t n = 1; n <= 3; ++n) {
    for (unsigned k = 2; k <= 4; ++k) {
      std::vector<Polynomial> g;
      for (const auto& m : monomials_of_degree(n, k)) g.push_back(Polynomial::monomial(m));
      const auto t = find_truncation_level(g, 64, n);
      CAPTURE(n);
      CAPTURE(k);
      CHECK(t.ell == k);
      CHECK(t.dim_quotient == count_monomials_below(n, k));
    }
  }
}

TEST_CASE("hilbert values are nondecreasing and constant once stable") {
  std::mt19937_64 rng(7);
  int checked = 0;
  for (int trial = 0; trial < 60; ++trial) {
    const std::size_t n = 1 + trial % 3;
    std::vector<Polynomial> g;
    for (std::size_t i = 0; i < n; ++i) {
      Monomial m(n);
      m[i] = 2 + static_cast<unsigned>(rng() % 3);
      g.push_back(Polynomial::monomial(m) + oracle::random_poly(rng, n, 4, 2) * Polynomial::variable(n, i) *
                                                Polynomial::variable(n, (i + 1) % n));
    }
    TruncationLevel t;
    try {
      t = find_truncation_level(g, 24, n);
    } catch (const Error&) {
      continue;
    }
    ++checked;
    CAPTURE(trial);
    const auto& h = t.hilbert;
    REQUIRE(h.size() >= t.ell + 1);
    for (std::size_t d = 1; d < h.size(); ++d) CHECK(h[d] >= h[d - 1]);
    for (unsigned d = t.ell; d <= t.ell + 3; ++d) CHECK(hilbert_value(g, d, n) == t.dim_quotient);
    for (unsigned d = 0; d <= std::min(t.ell, 6u); ++d) CHECK(h[d] == oracle::hilbert(g, n, d));
  }
  CHECK(checked > 30);
}

TEST_CASE("subspace membership, reduction and sums") {
  auto J2 = std::make_shared<const JetSpace>(2, 2);
  Subspace sx2(J2);
  sx2.insert(parse_poly("x^2", XY));
  CHECK(sx2.contains(truncate(parse_poly("x^2 + x^3", XY), 2)));

  Subspace d(J2);
  d.insert(parse_poly("x^2 - y^2", XY));
  CHECK(J2->polynomial(d.reduce_mod(parse_poly("x^2", XY))) == parse_poly("y^2", XY));

  Subspace a(J2), b(J2);
  a.insert(parse_poly("x", XY));
  b.insert(parse_poly("y", XY));
  const Subspace s = subspace_sum(a, b);
  CHECK(s.dim() == 2);
  CHECK(s.contains(parse_poly("3*x - y", XY)));
  CHECK(!a.insert(parse_poly("2*x", XY)));
}

TEST_CASE("subspace canonical form does not depend on generator order") {
  std::mt19937_64 rng(99);
  auto J = std::make_shared<const JetSpace>(3, 3);
  for (int trial = 0; trial < 40; ++trial) {
    std::vector<Polynomial> ps;
    const int k = 1 + static_cast<int>(rng() % 8);
    for (int i = 0; i < k; ++i) ps.push_back(oracle::random_poly(rng, 3, 3, 4));
    // dependent combinations must not change the span
    ps.push_back(ps.front() * Rational(3) - ps.back());
    Subspace a(J);
    for (const auto& p : ps) a.insert(p);
    std::shuffle(ps.begin(), ps.end(), rng);
    Subspace b(J);
    for (const auto& p : ps) b.insert(p);
    CHECK(a == b);
    CHECK(a.row_polynomials() == b.row_polynomials());
    for (const auto& p : ps) CHECK(a.contains(p));
  }
}
