#pragma once

#include <gmpxx.h>

#include <string>

namespace relcurr {

using Integer = mpz_class;
using Rational = mpq_class;

inline std::string to_string(const Integer& z) { return z.get_str(); }
inline std::string to_string(const Rational& q) {
  return q.get_den() == 1 ? q.get_num().get_str() : q.get_str();
}

Rational parse_rational(const std::string& s);  // "3", "-5/7"

}  // namespace relcurr
