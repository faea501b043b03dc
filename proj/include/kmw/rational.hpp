#pragma once

#include <gmpxx.h>

#include <string>

namespace kmw {

// Exact rationals throughout; no floating point anywhere in the project.
using Rat = mpq_class;

inline bool is_integer(const Rat& q) { return q.get_den() == 1; }
inline bool is_nonneg_integer(const Rat& q) { return is_integer(q) && sgn(q) >= 0; }

// pre: is_integer(q) and the value fits in long.
long rat_to_long(const Rat& q);

Rat rat_ceil(const Rat& q);

// Accepts "p" or "p/q" with optional sign; throws ParseError otherwise.
Rat parse_rat(const std::string& s);

// Canonical form: "p" when the denominator is 1, else "p/q".
std::string rat_str(const Rat& q);

}  // namespace kmw
