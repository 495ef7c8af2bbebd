#pragma once

#include <gmpxx.h>

#include <string>
#include <string_view>
#include <vector>

#include "hilbert/errors.hpp"

namespace hilbert {

// Exact arbitrary-precision rational. All combinatorial predicates (rank,
// incidence, face structure, duality) run on Rat; metric quantities are
// evaluated in binary64 after the exact part is done.
using Rat = mpq_class;

using VecQ = std::vector<Rat>;

inline Rat rat(long num, long den = 1) {
  Rat r(num, den);
  r.canonicalize();
  return r;
}

// Parses "p", "-p" or "p/q". Decimal points and exponents are rejected so
// that files stay exact.
Rat rat_from_string(std::string_view text);

// Canonical form: "p" when the denominator is 1, else "p/q".
std::string rat_to_string(const Rat& value);

inline double to_double(const Rat& value) { return value.get_d(); }

inline int sign(const Rat& value) { return sgn(value); }

}  // namespace hilbert
