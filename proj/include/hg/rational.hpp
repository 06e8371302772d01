#pragma once

#include <gmpxx.h>

#include <string>
#include <vector>

namespace hg {

using Int = mpz_class;
using Rat = mpq_class;

inline Int num(const Rat& x) { return x.get_num(); }
inline Int den(const Rat& x) { return x.get_den(); }

Int floor_rat(const Rat& x);
Int ceil_rat(const Rat& x);

// x - floor(x), in [0, 1).
Rat frac_part(const Rat& x);

bool is_integer(const Rat& x);

// Accepts "n" or "n/d" with an optional leading '-'; no whitespace, no decimals.
Rat parse_rational(const std::string& token);

// Comma-separated list of tokens as above; must be nonempty.
std::vector<Rat> parse_tuple(const std::string& csv);

// Canonical "n" or "n/d".
std::string rat_str(const Rat& x);

// Throws std::overflow_error when x does not fit in long.
long to_long_checked(const Int& x);

// Floor division for machine integers (b > 0).
long floor_div(long a, long b);

}  // namespace hg
