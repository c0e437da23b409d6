#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <algorithm>
#include <random>
#include <set>

#include "fatlie/errors.hpp"
#include "fatlie/fatpoint.hpp"
#include "oracles.hpp"

using namespace fatlie;

namespace {

const std::vector<std::string> X{"x"};
const std::vector<std::string> XY{"x", "y"};
const std::vector<std::string> XYZ{"x", "y", "z"};

std::vector<Polynomial> gens(std::initializer_list<const char*> ps, const std::vector<std::string>& vars) {
  std::vector<Polynomial> out;
  for (const char* p : ps) out.push_back(parse_poly(p, vars));
  return out;
}

FatPoint fat(std::initializer_list<const char*> ps, const std::vector<std::string>& vars = XY,
             unsigned extra = 0) {
  return FatPoint::build(gens(ps, vars), vars, kDefaultCap, extra);
}

std::set<std::string> basis_names(const FatPoint& fp) {
  std::set<std::string> out;
  for (const auto& m : fp.basis()) out.insert(to_string(m, fp.vars()));
  return out;
}

SparseVec unit(std::size_t i) { return {{i, Rational(1)}}; }

std::size_t idx(const FatPoint& fp, const char* m) {
  const auto i = fp.basis_index(parse_poly(m, fp.vars()).terms().begin()->first);
  REQUIRE(i.has_value());
  return *i;
}

// Instances with dim S small enough for exhaustive triple checks.
std::vector<FatPoint> sample_fatpoints() {
  std::vector<FatPoint> out;
  out.push_back(fat({"x^2", "x*y", "y^2"}));
  out.push_back(fat({"x^2", "y^3"}));
  out.push_back(fat({"x^3"}, X));
  out.push_back(fat({"x^2 - y^3", "x*y"}));
  out.push_back(fat({"3*x^2 + y^3", "4*y^3 + 3*x*y^2"}));
  out.push_back(fat({"x^2 + y*z", "y^2 + x*z", "z^2 + x*y"}, XYZ));
  out.push_back(fat({"x^3 + x*y^2 - 1/2*y^4", "y^3 - x^2*y"}));
  out.push_back(fat({"x^2", "y^2", "z^2"}, XYZ));
  return out;
}

}  // namespace

TEST_CASE("basis and multiplication of m^2 quotient") {
  const FatPoint fp = fat({"x^2", "x*y", "y^2"});
  CHECK(fp.dim() == 3);
  CHECK(basis_names(fp) == std::set<std::string>{"1", "x", "y"});
  CHECK(to_string(fp.basis()[0], XY) == "1");
  for (std::size_t i = 1; i < 3; ++i)
    for (std::size_t j = 1; j < 3; ++j) CHECK(fp.mult(i, j).empty());
  CHECK(fp.mult(0, 1) == unit(1));
}

TEST_CASE("basis of a one-variable quotient") {
  const FatPoint fp = fat({"x^2"}, X);
  CHECK(basis_names(fp) == std::set<std::string>{"1", "x"});
  CHECK(fp.mult(1, 1).empty());
}

TEST_CASE("basis and products of (x^2, y^3)") {
  const FatPoint fp = fat({"x^2", "y^3"});
  CHECK(fp.dim() == 6);
  CHECK(basis_names(fp) == std::set<std::string>{"1", "x", "y", "x*y", "y^2", "x*y^2"});
  CHECK(fp.mult(idx(fp, "y"), idx(fp, "y^2")).empty());
  CHECK(fp.mult(idx(fp, "x"), idx(fp, "y^2")) == unit(idx(fp, "x*y^2")));

  // all 36 products against the monomial-quotient oracle
  const oracle::MonomialAlgebra A(2, {{2, 0}, {0, 3}});
  REQUIRE(A.dim() == fp.dim());
  auto lib_index = [&](std::size_t a) {
    return *fp.basis_index(Monomial(std::vector<unsigned>(A.basis[a].begin(), A.basis[a].end())));
  };
  for (std::size_t a = 0; a < A.dim(); ++a)
    for (std::size_t b = 0; b < A.dim(); ++b) {
      const long p = A.product(a, b);
      const SparseVec& got = fp.mult(lib_index(a), lib_index(b));
      if (p < 0) CHECK(got.empty());
      else CHECK(got == unit(lib_index(static_cast<std::size_t>(p))));
    }
}

TEST_CASE("normal forms of non-monomial relations") {
  const FatPoint fp = fat({"x^2 - y^2", "x*y"});
  CHECK(fp.dim() == 4);
  // x^2 = y^2 in S, and x^3 = x*y^2 = 0
  CHECK(fp.normal_form(parse_poly("x^2", XY)) == fp.normal_form(parse_poly("y^2", XY)));
  CHECK(fp.normal_form(parse_poly("x^3", XY)).empty());
  CHECK(!fp.normal_form(parse_poly("y^2", XY)).empty());
  const Polynomial p = parse_poly("1 + 2*x - y^2", XY);
  CHECK(fp.normal_form(fp.lift(fp.normal_form(p))) == fp.normal_form(p));
}

TEST_CASE("embedding dimension, order and first deviation") {
  const FatPoint m2 = fat({"x^2", "x*y", "y^2"});
  const FatPoint x3 = fat({"x^3"}, X);
  const FatPoint ci = fat({"x^2", "y^3"});
  CHECK(edim(m2) == 2);
  CHECK(edim(x3) == 1);
  CHECK(edim(ci) == 2);
  CHECK(ord(m2).value == 2);
  CHECK(ord(x3).value == 3);
  CHECK(ord(ci).value == 2);

  // dim R/mI - dim R/I from the dense hilbert oracle: m I = m^3 has colength 6
  auto m_times = [](const std::vector<Polynomial>& g, std::size_t n) {
    std::vector<Polynomial> out;
    for (const auto& p : g)
      for (std::size_t i = 0; i < n; ++i) out.push_back(p * Polynomial::variable(n, i));
    return out;
  };
  const auto g_m2 = gens({"x^2", "x*y", "y^2"}, XY);
  const auto g_ci = gens({"x^2", "y^3"}, XY);
  const std::size_t eps_m2 = oracle::hilbert(m_times(g_m2, 2), 2, 6) - oracle::hilbert(g_m2, 2, 6);
  const std::size_t eps_ci = oracle::hilbert(m_times(g_ci, 2), 2, 6) - oracle::hilbert(g_ci, 2, 6);
  CHECK(eps_m2 == 3);
  CHECK(eps_ci == 2);
  CHECK(epsilon1(m2) == eps_m2);
  CHECK(epsilon1(ci) == eps_ci);
  CHECK(epsilon1(x3) == 1);

  CHECK(is_complete_intersection(ci));
  CHECK(!is_complete_intersection(m2));
  CHECK(is_complete_intersection(x3));
}

TEST_CASE("first deviation ignores redundant generators") {
  const FatPoint fp = fat({"x^2", "y^3", "x^2*y + y^3", "x^3"});
  CHECK(epsilon1(fp) == 2);
  CHECK(is_complete_intersection(fp));
}

TEST_CASE("minimalize removes linear parts") {
  const auto p = minimalize(gens({"x - y^2", "y^3"}, XY), XY);
  CHECK(!p.trivial);
  REQUIRE(p.vars == std::vector<std::string>{"y"});
  REQUIRE(p.generators.size() == 1);
  CHECK(p.generators[0] == parse_poly("y^3", p.vars));

  const auto q = minimalize(gens({"x^2", "y^2"}, XY), XY);
  CHECK(q.vars == XY);
  CHECK(q.generators == gens({"x^2", "y^2"}, XY));

  // x + x^2 = x(1 + x) is a unit multiple of x, so I = m
  const auto t = minimalize(gens({"x + x^2", "x^3"}, X), X);
  CHECK(t.trivial);
  CHECK(t.vars.empty());
  CHECK(oracle::hilbert(gens({"x + x^2", "x^3"}, X), 1, 8) == 1);
  const FatPoint fp = FatPoint::build(t.generators, t.vars);
  CHECK(fp.trivial());
  CHECK(fp.dim() == 1);
  CHECK(edim(fp) == 0);
  CHECK(ord(fp).is_infinite());
}

TEST_CASE("minimalize preserves the algebra") {
  // y = -x^2 + ... eliminated from (y + x^2, x^3 + y^2): S = Q[x]/(x^3 + x^4 + ...) has dim 3
  const auto g = gens({"y + x^2", "x^3 + y^2"}, XY);
  const auto p = minimalize(g, XY);
  REQUIRE(p.vars == std::vector<std::string>{"x"});
  const FatPoint fp = FatPoint::build(p.generators, p.vars);
  CHECK(fp.dim() == 3);
  CHECK(fp.dim() == oracle::hilbert(g, 2, 8));

  const auto g3 = gens({"x - y*z", "y^2 - z^3", "z^4 + x^2"}, XYZ);
  const auto p3 = minimalize(g3, XYZ);
  CHECK(p3.vars.size() == 2);
  CHECK(FatPoint::build(p3.generators, p3.vars).dim() == oracle::hilbert(g3, 3, 6));
}

TEST_CASE("build rejects invalid presentations") {
  try {
    FatPoint::build(gens({"x + y^2", "y^3"}, XY), XY);
    FAIL("expected NonMinimalPresentation");
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::NonMinimalPresentation);
    CHECK(std::string(e.what()).find("x") != std::string::npos);
  }
  try {
    FatPoint::build(gens({"1 + x^2", "y"}, XY), XY);
    FAIL("expected ConstantUnitIdeal");
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::ConstantUnitIdeal);
  }
  CHECK_THROWS_AS(FatPoint::build(gens({"x^2", "x*y"}, XY), XY, 16), NotZeroDimensional);
  CHECK_THROWS_AS(minimalize(gens({"2 + x"}, X), X), Error);
}

TEST_CASE("multiplication table is associative and commutative") {
  for (const auto& fp : sample_fatpoints()) {
    const std::size_t mu = fp.dim();
    CAPTURE(mu);
    for (std::size_t a = 0; a < mu; ++a)
      for (std::size_t b = 0; b < mu; ++b) {
        CHECK(fp.mult(a, b) == fp.mult(b, a));
        for (std::size_t c = 0; c < mu; ++c)
          CHECK(fp.multiply(fp.mult(a, b), unit(c)) == fp.multiply(unit(a), fp.mult(b, c)));
      }
    for (std::size_t a = 0; a < mu; ++a) CHECK(fp.mult(0, a) == unit(a));
  }
}

TEST_CASE("algebra does not depend on the truncation level") {
  const std::vector<std::pair<std::vector<std::string>, std::vector<const char*>>> cases{
      {XY, {"x^2", "x*y", "y^2"}},
      {XY, {"x^2", "y^3"}},
      {XY, {"x^2 - y^3", "x*y"}},
      {XY, {"3*x^2 + y^3", "4*y^3 + 3*x*y^2"}},
      {XYZ, {"x^2 + y*z", "y^2 + x*z", "z^2 + x*y"}},
      {X, {"x^5"}},
  };
  for (const auto& [vars, ps] : cases) {
    std::vector<Polynomial> g;
    for (const char* p : ps) g.push_back(parse_poly(p, vars));
    const FatPoint base = FatPoint::build(g, vars);
    for (unsigned extra : {1u, 2u}) {
      const FatPoint up = FatPoint::build(g, vars, kDefaultCap, extra);
      CAPTURE(extra);
      CHECK(up.trunc_level() == base.trunc_level() + extra);
      CHECK(up.dim() == base.dim());
      CHECK(up.basis() == base.basis());
      for (std::size_t a = 0; a < base.dim(); ++a)
        for (std::size_t b = 0; b < base.dim(); ++b) CHECK(up.mult(a, b) == base.mult(a, b));
    }
  }
}

TEST_CASE("invariant bounds on random instances") {
  std::mt19937_64 rng(424242);
  int built = 0;
  for (int trial = 0; trial < 80; ++trial) {
    const std::size_t n = 1 + trial % 3;
    const std::vector<std::string> vars(XYZ.begin(), XYZ.begin() + static_cast<std::ptrdiff_t>(n));
    std::vector<Polynomial> g;
    for (std::size_t i = 0; i < n; ++i) {
      Monomial m(n);
      m[i] = 2 + static_cast<unsigned>(rng() % 3);
      Polynomial p = Polynomial::monomial(m);
      const Polynomial tail = oracle::random_poly(rng, n, 3, 2);
      p += mul_truncated(tail, Polynomial::variable(n, (i + 1) % n) * Polynomial::variable(n, i), 8);
      g.push_back(p);
    }
    if (rng() % 2) g.push_back(oracle::random_poly(rng, n, 3, 3) * Polynomial::variable(n, 0) *
                               Polynomial::variable(n, n - 1));
    std::optional<FatPoint> built_fp;
    try {
      const Presentation pr = minimalize(g, vars, 24);
      built_fp = FatPoint::build(pr.generators, pr.vars, 24);
    } catch (const NotZeroDimensional&) {
      continue;
    }
    const FatPoint& fp = *built_fp;
    ++built;
    CAPTURE(trial);
    if (fp.trivial()) continue;
    CHECK(epsilon1(fp) >= edim(fp));
    CHECK(ord(fp).value >= 2);
    CHECK(edim(fp) >= 1);
    CHECK(fp.dim() == fp.hilbert().back());
    std::size_t linear = 0;
    for (const auto& m : fp.basis()) linear += m.degree() == 1;
    CHECK(linear == edim(fp));
  }
  CHECK(built > 50);
}
