#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <cstdint>
#include <string>

#include "diffspec/error.hpp"

namespace diffspec {

/// Arbitrary precision signed integer used by every closed form.
using Integer = boost::multiprecision::cpp_int;

/// num / den, throwing InternalError unless den divides num.
inline Integer exact_div(const Integer& num, const Integer& den, const char* what) {
  if (den == 0 || num % den != 0) {
    throw InternalError(std::string("inexact division in ") + what + ": " + num.str() + " / " +
                        den.str());
  }
  return num / den;
}

inline Integer ipow(const Integer& base, unsigned exp) {
  return boost::multiprecision::pow(base, exp);
}

}  // namespace diffspec
