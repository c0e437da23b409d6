#pragma once

// Exact coefficients. Every linear system in this library has rational data,
// and ranks and solvability are unchanged by extending scalars from Q to C,
// so all statements about complex algebras are checked over Q.

#include <gmpxx.h>

#include <string>

namespace fatlie {

using Rational = mpq_class;

inline std::string to_string(const Rational& q) { return q.get_str(); }

}  // namespace fatlie
