#pragma once

#include <optional>
#include <utility>
#include <vector>

#include "hg/order.hpp"

namespace hg {

// Product formula
//   (prod d(alpha_i) / prod d(beta_j)) * prod_{p in P} p^{-floor(lambda_p/(p-1))}
// with P = {p : p | d} union {p prime <= r - s + 1}.
Rat eisenstein_core(const ParamPair& pr);

struct Eisenstein {
    Rat value;
    bool exact;  // true when r = s and all entries lie in (0, 1]
};

// Minimal integrality-rescaling constant. Requires christol_ni_check; when
// exact is false the value is the certified divisor of the true constant
// ("formula core") and the true constant is an unknown multiple >= 1 of it.
Eisenstein eisenstein_constant(const ParamPair& pr);

// Rescaling used by the q-coordinate results: the constant of the normalized
// pair, doubled exactly when beta is not integral and mfrak is odd.
Rat c_prime(const ParamPair& pr);

Int d_star(const ParamPair& pr);   // d divided by its radical
Int d_prime(const ParamPair& pr);  // 2*d_star or d_star per the mfrak parity rule

// Root exponent for exp(S): requires r = s and h_check. When beta is
// integral, d * prod_{p|d} p^{-2-floor(lambda_p/(p-1))}; otherwise
// d' * prod_{p | d', p-1 | lambda_p} p^{-1}.
Int frak_n(const ParamPair& pr);

// Root exponent for the unit q-series: prod_{p|d} p^{-1-floor(lambda_p/(p-1))}.
// Requires beta entries to be positive integers and disjoint normalized tuples.
Int frak_n_prime(const ParamPair& pr);

struct ConstantSheet {
    Int d;
    std::vector<std::pair<Int, long>> lambda;  // primes dividing d, then primes <= r-s+1
    long m_count = 0;
    bool beta_integral = false;
    Int d_star;
    Int d_prime;
    bool christol_ok = false;
    bool h_ok = false;
    std::optional<bool> interlacing;   // set when its preconditions hold
    std::optional<Rat> c0;             // set when christol_ok
    bool c0_exact = false;
    std::optional<Rat> c_prime;        // set when christol_ok
    std::optional<Int> frak_n;         // set when r = s and h_ok
    std::optional<Int> frak_n_prime;   // set when its preconditions hold
};

ConstantSheet constant_sheet(const ParamPair& pr);

}  // namespace hg
