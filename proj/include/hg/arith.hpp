#pragma once

#include <utility>
#include <vector>

#include "hg/rational.hpp"

namespace hg {

// Valuation value: a finite integer or +infinity (the valuation of zero).
struct Val {
    bool finite = true;
    long v = 0;

    static Val fin(long x) { return {true, x}; }
    static Val inf() { return {false, 0}; }

    bool at_least(long bound) const { return !finite || v >= bound; }

    friend bool operator==(const Val& a, const Val& b) {
        return a.finite == b.finite && (!a.finite || a.v == b.v);
    }
};

// Deterministic Miller-Rabin for |n| < 2^64; larger inputs are rejected.
bool is_prime(const Int& n);

// Ascending (prime, exponent) factorization of n >= 1. Trial division up to
// 10^6, then a primality test on the cofactor; throws when the cofactor is
// composite and out of range.
std::vector<std::pair<Int, int>> factorize(const Int& n);

// Exponent of p in n; requires n != 0 and p prime.
long vp_int(const Int& n, const Int& p);

// p-adic valuation of a rational; vp(0) is +infinity.
Val vp(const Rat& x, const Int& p);

// As vp but requires x != 0.
long vp_nonzero(const Rat& x, const Int& p);

// Exponent of p in n! (p prime, n >= 0).
long vp_factorial(unsigned long n, const Int& p);

Int pow_int(const Int& base, unsigned long e);

// base^e for integer e (negative allowed; base must be nonzero then).
Rat pow_rat(const Rat& base, long e);

// Inverse of a modulo m (gcd(a, m) = 1; m >= 1). inv_mod(a, 1) = 0.
Int inv_mod(const Int& a, const Int& m);

// Unique x in [0, m1*m2) with x = r1 mod m1, x = r2 mod m2; gcd(m1, m2) = 1.
Int crt2(const Int& r1, const Int& m1, const Int& r2, const Int& m2);

// Sum of base-p digits of n >= 0.
long digit_sum(const Int& n, const Int& p);

Int euler_phi(const Int& n);

Int factorial_int(unsigned long n);

Int gcd_int(const Int& a, const Int& b);
Int lcm_int(const Int& a, const Int& b);

}  // namespace hg
