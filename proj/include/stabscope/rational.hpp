#pragma once

// Exact rationals. GMP's mpq_class keeps values canonical (reduced, positive
// denominator) after every arithmetic operation; the helpers here add the
// textual "p/q" form used by the CLI and the JSON payloads.

#include <gmpxx.h>

#include <stdexcept>
#include <string>
#include <string_view>

namespace stabscope {

using Integer = mpz_class;
using Rational = mpq_class;

/// Thrown for malformed user input (labels, rationals, vectors).
class ParseError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// Thrown when an internal invariant fails. Indicates an arithmetic bug.
class InvariantError : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

/// Parses "p", "p/q" (q != 0) or a finite decimal such as "-0.25".
Rational parse_rational(std::string_view text);

/// "p" for integers, "p/q" otherwise.
std::string to_string(const Rational& value);

inline int sign(const Rational& value) { return sgn(value); }

inline Rational make_rational(long num, long den = 1) {
  Rational r(num, den);
  r.canonicalize();
  return r;
}

/// Largest integer <= value.
Integer floor_of(const Rational& value);

/// Exact conversion of a finite double.
Rational from_double(double value);

}  // namespace stabscope
