#pragma once

#include <gmpxx.h>
#include <stdexcept>
#include <string>

namespace qpkit {

// Exact arithmetic scalars. mpq_class keeps values canonical: lowest terms,
// denominator > 0, zero stored as 0/1.
using Int = mpz_class;
using Rational = mpq_class;

// Parses "p", "-p", or "p/q" with arbitrary-precision parts.
inline Rational parse_rational(const std::string& s) {
  if (s.empty()) throw std::invalid_argument("empty rational literal");
  Rational r;
  if (r.set_str(s, 10) != 0)
    throw std::invalid_argument("bad rational literal: '" + s + "'");
  if (r.get_den() == 0) throw std::invalid_argument("zero denominator: '" + s + "'");
  r.canonicalize();
  return r;
}

// "p" when integral, "p/q" otherwise.
inline std::string rational_string(const Rational& r) {
  if (r.get_den() == 1) return r.get_num().get_str();
  return r.get_num().get_str() + "/" + r.get_den().get_str();
}

}  // namespace qpkit
