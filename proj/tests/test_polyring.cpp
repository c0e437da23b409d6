#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <random>

#include "fatlie/errors.hpp"
#include "fatlie/polynomial.hpp"
#include "oracles.hpp"

using namespace fatlie;

namespace {

const std::vector<std::string> XY{"x", "y"};
const std::vector<std::string> XYZ{"x", "y", "z"};

Polynomial P(const std::string& s, const std::vector<std::string>& vars = XY) { return parse_poly(s, vars); }

Monomial M(std::vector<unsigned> e) { return Monomial(std::move(e)); }

}  // namespace

TEST_CASE("parse reads terms into exponent vectors") {
  const Polynomial p = P("x^2*y - 3*y^3");
  CHECK(p.size() == 2);
  CHECK(p.coefficient(M({2, 1})) == 1);
  CHECK(p.coefficient(M({0, 3})) == -3);

  const Polynomial zero = P("0", {"x"});
  CHECK(zero.is_zero());
  CHECK(zero.terms().empty());

  const Polynomial sq = P("(x+y)^2");
  CHECK(sq.size() == 3);
  CHECK(sq.coefficient(M({2, 0})) == 1);
  CHECK(sq.coefficient(M({1, 1})) == 2);
  CHECK(sq.coefficient(M({0, 2})) == 1);
}

TEST_CASE("parse accepts rationals, unary signs and nesting") {
  CHECK(P("3/6*x") == scale(P("x"), Rational(1, 2)));
  CHECK(P("-(x - y)") == P("y - x"));
  CHECK(P("+x") == P("x"));
  CHECK(P("2*(x*(y+1))^2") == P("2*x^2*y^2 + 4*x^2*y + 2*x^2"));
  CHECK(P("x^0") == Polynomial::constant(2, 1));
  CHECK(P("  x   *  y ") == P("x*y"));
}

TEST_CASE("parse errors report the offending position") {
  auto position_of = [](const std::string& s) -> long {
    try {
      parse_poly(s, XY);
    } catch (const ParseError& e) {
      return static_cast<long>(e.position());
    }
    return -1;
  };
  CHECK(position_of("x^2+*y") == 4);
  CHECK(position_of("x + q") == 4);
  CHECK(position_of("(x+y") == 4);
  CHECK(position_of("x^") == 2);
  CHECK(position_of("1/0") >= 0);
  CHECK(position_of("") == 0);
  CHECK(position_of("x y") == 2);
  CHECK_THROWS_AS(parse_poly("x^9999999", XY), ParseError);
  try {
    parse_poly("x + q", XY);
  } catch (const ParseError& e) {
    CHECK(std::string(e.what()).find("'q'") != std::string::npos);
    CHECK(e.code() == ErrorCode::Parse);
  }
}

TEST_CASE("partial derivatives") {
  CHECK(partial_derivative(P("x^3 + y^2"), 0) == P("3*x^2"));
  CHECK(partial_derivative(P("x^3"), 1).is_zero());
  CHECK(partial_derivative(P("x^2*y"), 0) == P("2*x*y"));
  CHECK_THROWS_AS(partial_derivative(P("x"), 2), Error);
}

TEST_CASE("order of a polynomial") {
  CHECK(order_of(P("x^2*y + x^5")).value == 3);
  CHECK(order_of(Polynomial(2)).is_infinite());
  CHECK(order_of(P("7")).value == 0);
}

TEST_CASE("truncation") {
  CHECK(truncate(P("x + x^3"), 2) == P("x"));
  const Polynomial p = P("x*y - y^2 + 4");
  CHECK(truncate(p, 2) == p);
  CHECK(truncate(P("x^2"), 1).is_zero());
  CHECK(homogeneous_part(P("1 + x + x*y + y^2"), 2) == P("x*y + y^2"));
}

TEST_CASE("ring operations are canonical") {
  CHECK(P("x + y") + P("x - y") == P("2*x"));
  CHECK((P("x") * Polynomial(2)).is_zero());
  CHECK(P("x + y") * P("x - y") == P("x^2 - y^2"));
  CHECK((P("x") - P("x")).terms().empty());
  CHECK_THROWS_AS(P("x") + Polynomial::variable(3, 0), Error);
}

TEST_CASE("printing") {
  CHECK(to_string(P("x^2*y - 3*y^3"), XY) == "x^2*y - 3*y^3");
  CHECK(to_string(Polynomial(2), XY) == "0");
  CHECK(to_string(P("3/2*x - 1"), XY) == "3/2*x - 1");
  CHECK(to_string(P("-x^2 + x*y"), XY) == "-x^2 + x*y");
  CHECK(to_string(Monomial(2), XY) == "1");
  // within a degree, the smaller power of the last variable comes first
  CHECK(to_string(P("x*z^2 + x*y*z + y^3", XYZ), XYZ) == "y^3 + x*y*z + x*z^2");
}

TEST_CASE("grevlex order and monomial enumeration") {
  GrevlexLess less;
  CHECK(less(M({0, 1}), M({1, 0})));
  CHECK(less(M({1, 0}), M({0, 2})));
  CHECK(less(M({1, 0, 1}), M({0, 2, 0})));
  const auto d2 = monomials_of_degree(3, 2);
  CHECK(d2.size() == 6);
  for (std::size_t i = 1; i < d2.size(); ++i) CHECK(less(d2[i], d2[i - 1]));
}

TEST_CASE("substitution and variable elimination") {
  // x := y^2 in x*y + x^2 truncated at degree 4 gives y^3 + y^4
  CHECK(substitute_truncated(P("x*y + x^2"), 0, P("y^2"), 4) == P("y^3 + y^4"));
  CHECK(substitute_truncated(P("x*y + x^2"), 0, P("y^2"), 3) == P("y^3"));
  CHECK(drop_variable(P("y^3 - 2*y"), 0) == parse_poly("y^3 - 2*y", std::vector<std::string>{"y"}));
  CHECK(pow_truncated(P("1 + x"), 5, 2) == P("1 + 5*x + 10*x^2"));
  CHECK(mul_truncated(P("x + y"), P("x - y + x^3"), 2) == P("x^2 - y^2"));
}

TEST_CASE("arithmetic properties on random polynomials") {
  std::mt19937_64 rng(20261014);
  for (int trial = 0; trial < 200; ++trial) {
    const std::size_t n = 1 + trial % 3;
    const Polynomial p = oracle::random_poly(rng, n, 5, 1 + static_cast<unsigned>(rng() % 5));
    const Polynomial q = oracle::random_poly(rng, n, 5, 1 + static_cast<unsigned>(rng() % 5));
    const unsigned d = static_cast<unsigned>(rng() % 8);
    CAPTURE(trial);

    CHECK(truncate(p * q, d) == truncate(truncate(p, d) * truncate(q, d), d));
    CHECK(mul_truncated(p, q, d) == truncate(p * q, d));
    if (!p.is_zero() && !q.is_zero()) CHECK(order_of(p * q).value == order_of(p).value + order_of(q).value);
    CHECK(order_of(p + q) >= std::min(order_of(p), order_of(q)));
    for (std::size_t i = 0; i < n; ++i)
      CHECK(partial_derivative(p * q, i) == partial_derivative(p, i) * q + p * partial_derivative(q, i));
    CHECK(p * q == q * p);
    CHECK((p + q) * q == p * q + q * q);

    const std::vector<std::string> vars(XYZ.begin(), XYZ.begin() + static_cast<std::ptrdiff_t>(n));
    CHECK(parse_poly(to_string(p, vars), vars) == p);
  }
}
