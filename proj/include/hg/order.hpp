#pragma once

#include <vector>

#include "hg/pair.hpp"

namespace hg {

// Total order on rationals: x precedes y when frac_rep(x) < frac_rep(y);
// ties in the fractional part are broken by the larger raw value first.
bool order_le(const Rat& x, const Rat& y);
bool order_lt(const Rat& x, const Rat& y);

// Least element of {a*alpha_i} union {a*beta_j} in the order above.
Rat m_min(const ParamPair& pr, const Int& a);

// #{i : a*alpha_i <= x} - #{j : a*beta_j <= x} in the order above.
long xi(const ParamPair& pr, const Int& a, const Rat& x);

struct XiStep {
    Rat key;       // a distinct value among the a-multiples
    long running;  // xi evaluated at this key
};

struct XiProfile {
    std::vector<XiStep> steps;  // keys ascending in the order, merged
    long final_value;           // equals r - s
};

XiProfile xi_profile(const ParamPair& pr, const Int& a);

struct OrderWitness {
    bool ok = true;
    Int a;             // offending residue when !ok
    Rat key;           // offending key
    long running = 0;  // offending running value
};

// N-integrality of the hypergeometric series: xi(a, .) >= 0 for every
// residue a coprime to d, witnessed at the step keys.
OrderWitness christol_ni_check(const ParamPair& pr);

// Strengthened condition: xi(a, .) >= 1 on the window [m_min(a), a) for
// every residue a coprime to d.
OrderWitness h_check(const ParamPair& pr);

// True when every xi(a, .) takes values in {0, 1} only. Requires r = s,
// some beta entry integral, and disjoint normalized tuples.
bool interlacing_check(const ParamPair& pr);

struct NumeratorReport {
    bool ok = true;
    Int p;              // first failing prime when !ok
    long required = 0;  // floor(lambda_p / (p-1))
    long actual = 0;    // valuation of the numerator ratio at p
    std::vector<Int> primes_checked;
};

// Necessary condition for N-integrality (requires r = s): for every prime,
// v_p(prod num<alpha_i> / prod num<beta_j>) >= floor(lambda_p/(p-1)).
// Only primes dividing d or the ratio's denominator can fail, so the scan
// over that finite set is exhaustive.
NumeratorReport numerator_condition(const ParamPair& pr);

}  // namespace hg
