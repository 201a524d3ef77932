#pragma once

#include <gmpxx.h>

#include <string>

#include "wzht/errors.hpp"

namespace wzht {

using Int = mpz_class;
using Rat = mpq_class;

inline Rat make_rat(long num, long den = 1) {
  Rat q(num, den);
  q.canonicalize();
  return q;
}

/// Parses "p", "-p" or "p/q" with optional sign.
inline Rat parse_rat(const std::string& s) {
  if (s.empty()) throw Error(ErrorCode::SyntaxError, "empty rational literal");
  try {
    Rat q(s);
    if (q.get_den() == 0) throw Error(ErrorCode::ZeroDenominator, "rational literal " + s);
    q.canonicalize();
    return q;
  } catch (const std::invalid_argument&) {
    throw Error(ErrorCode::SyntaxError, "bad rational literal: " + s);
  }
}

/// "p" when the denominator is 1, else "p/q".
inline std::string rat_to_string(const Rat& q) {
  if (q.get_den() == 1) return q.get_num().get_str();
  return q.get_num().get_str() + "/" + q.get_den().get_str();
}

inline Int rat_floor(const Rat& q) {
  Int fl;
  mpz_fdiv_q(fl.get_mpz_t(), q.get_num().get_mpz_t(), q.get_den().get_mpz_t());
  return fl;
}

inline bool rat_is_integer(const Rat& q) { return q.get_den() == 1; }

inline Rat rat_pow(const Rat& base, long e) {
  if (e == 0) return Rat(1);
  if (base == 0) {
    if (e < 0) throw Error(ErrorCode::ZeroDenominator, "0 raised to negative power");
    return Rat(0);
  }
  Rat b = e > 0 ? base : Rat(1) / base;
  unsigned long n = e > 0 ? static_cast<unsigned long>(e) : static_cast<unsigned long>(-e);
  Rat acc(1);
  while (n) {
    if (n & 1) acc *= b;
    b *= b;
    n >>= 1;
  }
  return acc;
}

}  // namespace wzht
