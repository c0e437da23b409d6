#include "fatlie/polynomial.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>

#include "fatlie/errors.hpp"

namespace fatlie {

Monomial Monomial::variable(std::size_t nvars, std::size_t i) {
  Monomial m(nvars);
  m.exps_.at(i) = 1;
  return m;
}

unsigned Monomial::degree() const noexcept {
  return std::accumulate(exps_.begin(), exps_.end(), 0u);
}

Monomial Monomial::operator*(const Monomial& other) const {
  Monomial r(*this);
  for (std::size_t i = 0; i < exps_.size(); ++i) r.exps_[i] += other.exps_[i];
  return r;
}

bool Monomial::divisible_by(const Monomial& other) const {
  for (std::size_t i = 0; i < exps_.size(); ++i)
    if (exps_[i] < other.exps_[i]) return false;
  return true;
}

bool GrevlexLess::operator()(const Monomial& a, const Monomial& b) const {
  const unsigned da = a.degree(), db = b.degree();
  if (da != db) return da < db;
  for (std::size_t i = a.nvars(); i-- > 0;) {
    if (a[i] != b[i]) return a[i] > b[i];
  }
  return false;
}

namespace {

void enumerate_degree(std::size_t var, unsigned remaining, Monomial& current,
                      std::vector<Monomial>& out) {
  if (var + 1 == current.nvars()) {
    current[var] = remaining;
    out.push_back(current);
    current[var] = 0;
    return;
  }
  for (unsigned e = remaining + 1; e-- > 0;) {
    current[var] = e;
    enumerate_degree(var + 1, remaining - e, current, out);
  }
  current[var] = 0;
}

}  // namespace

std::vector<Monomial> monomials_of_degree(std::size_t nvars, unsigned degree) {
  std::vector<Monomial> out;
  if (nvars == 0) {
    if (degree == 0) out.emplace_back(0);
    return out;
  }
  Monomial current(nvars);
  enumerate_degree(0, degree, current, out);
  std::sort(out.begin(), out.end(), GrevlexGreater{});
  return out;
}

Polynomial Polynomial::constant(std::size_t nvars, const Rational& c) {
  Polynomial p(nvars);
  p.add_term(Monomial(nvars), c);
  return p;
}

Polynomial Polynomial::variable(std::size_t nvars, std::size_t i) {
  return monomial(Monomial::variable(nvars, i));
}

Polynomial Polynomial::monomial(const Monomial& m, const Rational& c) {
  Polynomial p(m.nvars());
  p.add_term(m, c);
  return p;
}

Rational Polynomial::coefficient(const Monomial& m) const {
  auto it = terms_.find(m);
  return it == terms_.end() ? Rational(0) : it->second;
}

void Polynomial::add_term(const Monomial& m, const Rational& c) {
  if (m.nvars() != nvars_) throw Error(ErrorCode::InvalidArgument, "monomial arity mismatch");
  if (c == 0) return;
  auto [it, inserted] = terms_.try_emplace(m, c);
  if (!inserted) {
    it->second += c;
    if (it->second == 0) terms_.erase(it);
  }
}

unsigned Polynomial::degree() const noexcept {
  // Descending grevlex is degree-first, so the leading term has maximal degree.
  return terms_.empty() ? 0 : terms_.begin()->first.degree();
}

Polynomial Polynomial::operator-() const {
  Polynomial r(*this);
  for (auto& [m, c] : r.terms_) c = -c;
  return r;
}

void Polynomial::check_same_ring(const Polynomial& q) const {
  if (q.nvars_ != nvars_)
    throw Error(ErrorCode::InvalidArgument, "polynomials live in rings with different numbers of variables");
}

Polynomial& Polynomial::operator+=(const Polynomial& q) {
  check_same_ring(q);
  for (const auto& [m, c] : q.terms_) add_term(m, c);
  return *this;
}

Polynomial& Polynomial::operator-=(const Polynomial& q) {
  check_same_ring(q);
  for (const auto& [m, c] : q.terms_) add_term(m, -c);
  return *this;
}

Polynomial& Polynomial::operator*=(const Rational& c) {
  if (c == 0) {
    terms_.clear();
    return *this;
  }
  for (auto& [m, v] : terms_) v *= c;
  return *this;
}

Polynomial operator*(const Polynomial& p, const Polynomial& q) {
  p.check_same_ring(q);
  Polynomial r(p.nvars());
  for (const auto& [mp, cp] : p.terms_)
    for (const auto& [mq, cq] : q.terms_) r.add_term(mp * mq, cp * cq);
  return r;
}

Polynomial add(const Polynomial& p, const Polynomial& q) { return p + q; }
Polynomial mul(const Polynomial& p, const Polynomial& q) { return p * q; }
Polynomial scale(const Polynomial& p, const Rational& c) { return p * c; }

Polynomial mul_truncated(const Polynomial& p, const Polynomial& q, unsigned d) {
  if (p.nvars() != q.nvars())
    throw Error(ErrorCode::InvalidArgument, "polynomials live in rings with different numbers of variables");
  Polynomial r(p.nvars());
  for (const auto& [mp, cp] : p.terms()) {
    const unsigned dp = mp.degree();
    if (dp > d) continue;
    for (const auto& [mq, cq] : q.terms()) {
      if (dp + mq.degree() > d) continue;
      r.add_term(mp * mq, cp * cq);
    }
  }
  return r;
}

Polynomial pow_truncated(const Polynomial& p, unsigned k, unsigned d) {
  Polynomial result = truncate(Polynomial::constant(p.nvars(), 1), d);
  Polynomial base = truncate(p, d);
  while (k > 0) {
    if (k & 1u) result = mul_truncated(result, base, d);
    k >>= 1;
    if (k > 0) base = mul_truncated(base, base, d);
  }
  return result;
}

Polynomial partial_derivative(const Polynomial& p, std::size_t i) {
  if (i >= p.nvars()) throw Error(ErrorCode::InvalidArgument, "variable index out of range");
  Polynomial r(p.nvars());
  for (const auto& [m, c] : p.terms()) {
    if (m[i] == 0) continue;
    Monomial dm(m);
    dm[i] -= 1;
    r.add_term(dm, c * Rational(m[i]));
  }
  return r;
}

Order order_of(const Polynomial& p) {
  Order o;
  for (const auto& [m, c] : p.terms()) o.value = std::min(o.value, m.degree());
  return o;
}

Polynomial truncate(const Polynomial& p, unsigned d) {
  Polynomial r(p.nvars());
  for (const auto& [m, c] : p.terms())
    if (m.degree() <= d) r.add_term(m, c);
  return r;
}

Polynomial homogeneous_part(const Polynomial& p, unsigned k) {
  Polynomial r(p.nvars());
  for (const auto& [m, c] : p.terms())
    if (m.degree() == k) r.add_term(m, c);
  return r;
}

Polynomial substitute_truncated(const Polynomial& p, std::size_t i, const Polynomial& value,
                                unsigned d) {
  if (i >= p.nvars() || value.nvars() != p.nvars())
    throw Error(ErrorCode::InvalidArgument, "substitution arity mismatch");
  std::vector<Polynomial> powers{truncate(Polynomial::constant(p.nvars(), 1), d)};
  Polynomial r(p.nvars());
  for (const auto& [m, c] : p.terms()) {
    const unsigned e = m[i];
    while (powers.size() <= e) powers.push_back(mul_truncated(powers.back(), value, d));
    Monomial rest(m);
    rest[i] = 0;
    if (rest.degree() > d) continue;
    r += mul_truncated(Polynomial::monomial(rest, c), powers[e], d);
  }
  return r;
}

Polynomial drop_variable(const Polynomial& p, std::size_t i) {
  if (p.nvars() == 0 || i >= p.nvars()) throw Error(ErrorCode::InvalidArgument, "variable index out of range");
  Polynomial r(p.nvars() - 1);
  for (const auto& [m, c] : p.terms()) {
    if (m[i] != 0) throw Error(ErrorCode::Internal, "dropping a variable that still occurs");
    std::vector<unsigned> e(m.exponents().begin(), m.exponents().end());
    e.erase(e.begin() + static_cast<std::ptrdiff_t>(i));
    r.add_term(Monomial(std::move(e)), c);
  }
  return r;
}

std::string to_string(const Monomial& m, std::span<const std::string> vars) {
  std::string out;
  for (std::size_t i = 0; i < m.nvars(); ++i) {
    if (m[i] == 0) continue;
    if (!out.empty()) out += '*';
    out += vars[i];
    if (m[i] > 1) out += '^' + std::to_string(m[i]);
  }
  return out.empty() ? "1" : out;
}

std::string to_string(const Polynomial& p, std::span<const std::string> vars) {
  if (vars.size() != p.nvars()) throw Error(ErrorCode::InvalidArgument, "variable name count mismatch");
  if (p.is_zero()) return "0";
  std::ostringstream os;
  bool first = true;
  for (const auto& [m, c] : p.terms()) {
    const bool negative = c < 0;
    const Rational magnitude = negative ? Rational(-c) : c;
    if (first) {
      if (negative) os << '-';
    } else {
      os << (negative ? " - " : " + ");
    }
    first = false;
    if (m.degree() == 0) {
      os << magnitude.get_str();
    } else if (magnitude == 1) {
      os << to_string(m, vars);
    } else {
      os << magnitude.get_str() << '*' << to_string(m, vars);
    }
  }
  return os.str();
}

}  // namespace fatlie
