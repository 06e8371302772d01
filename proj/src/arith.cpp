#include "hg/arith.hpp"

#include <stdexcept>

namespace hg {

namespace {

bool miller_rabin_witness(const Int& n, const Int& a, const Int& d, unsigned long s) {
    Int x;
    mpz_powm(x.get_mpz_t(), a.get_mpz_t(), d.get_mpz_t(), n.get_mpz_t());
    if (x == 1 || x == n - 1) return false;
    for (unsigned long i = 1; i < s; ++i) {
        x = (x * x) % n;
        if (x == n - 1) return false;
    }
    return true;  // composite witness found
}

}  // namespace

bool is_prime(const Int& n) {
    if (n < 2) return false;
    static const Int kLimit = Int(1) << 64;
    if (n >= kLimit) throw std::domain_error("primality test limited to inputs below 2^64");
    static const long kBases[] = {2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37};
    for (long b : kBases) {
        if (n == b) return true;
        if (n % b == 0) return false;
    }
    Int d = n - 1;
    unsigned long s = 0;
    while (mpz_even_p(d.get_mpz_t())) {
        d >>= 1;
        ++s;
    }
    for (long b : kBases) {
        if (miller_rabin_witness(n, Int(b), d, s)) return false;
    }
    return true;
}

std::vector<std::pair<Int, int>> factorize(const Int& n) {
    if (n < 1) throw std::domain_error("factorize requires n >= 1");
    std::vector<std::pair<Int, int>> out;
    Int rest = n;
    auto strip = [&](const Int& p) {
        int e = 0;
        while (mpz_divisible_p(rest.get_mpz_t(), p.get_mpz_t())) {
            rest /= p;
            ++e;
        }
        if (e > 0) out.emplace_back(p, e);
    };
    strip(Int(2));
    strip(Int(3));
    for (Int p = 5; p <= 1000000 && p * p <= rest; p += (p % 6 == 5) ? 2 : 4) {
        strip(p);
    }
    if (rest > 1) {
        if (rest <= Int(1000000) * 1000000 || is_prime(rest)) {
            if (!is_prime(rest)) throw std::domain_error("cofactor out of factorization range");
            out.emplace_back(rest, 1);
        } else {
            throw std::domain_error("cofactor out of factorization range");
        }
    }
    return out;
}

long vp_int(const Int& n, const Int& p) {
    if (n == 0) throw std::domain_error("vp_int requires a nonzero argument");
    if (!is_prime(p)) throw std::domain_error("vp_int requires a prime modulus");
    Int rem;
    return static_cast<long>(mpz_remove(rem.get_mpz_t(), n.get_mpz_t(), p.get_mpz_t()));
}

Val vp(const Rat& x, const Int& p) {
    if (x == 0) return Val::inf();
    return Val::fin(vp_int(num(x), p) - vp_int(den(x), p));
}

long vp_nonzero(const Rat& x, const Int& p) {
    Val v = vp(x, p);
    if (!v.finite) throw std::domain_error("vp_nonzero requires a nonzero argument");
    return v.v;
}

long vp_factorial(unsigned long n, const Int& p) {
    long total = 0;
    Int q = p;
    while (q <= n) {
        total += static_cast<long>(Int(n / q).get_ui());
        q *= p;
    }
    return total;
}

Int pow_int(const Int& base, unsigned long e) {
    Int r;
    mpz_pow_ui(r.get_mpz_t(), base.get_mpz_t(), e);
    return r;
}

Rat pow_rat(const Rat& base, long e) {
    if (e == 0) return Rat(1);
    if (base == 0 && e < 0) throw std::domain_error("zero base with negative exponent");
    unsigned long mag = static_cast<unsigned long>(e < 0 ? -e : e);
    Rat r(pow_int(num(base), mag), pow_int(den(base), mag));
    r.canonicalize();
    if (e < 0) r = 1 / r;
    return r;
}

Int inv_mod(const Int& a, const Int& m) {
    if (m < 1) throw std::domain_error("inv_mod requires m >= 1");
    if (m == 1) return 0;
    Int r;
    if (mpz_invert(r.get_mpz_t(), a.get_mpz_t(), m.get_mpz_t()) == 0) {
        throw std::domain_error("inv_mod: argument not invertible");
    }
    return r;
}

Int crt2(const Int& r1, const Int& m1, const Int& r2, const Int& m2) {
    if (gcd_int(m1, m2) != 1) throw std::domain_error("crt2 requires coprime moduli");
    Int m = m1 * m2;
    Int k = ((r2 - r1) % m2 + m2) % m2;
    Int x = r1 + m1 * ((k * inv_mod(m1, m2)) % m2);
    x %= m;
    if (x < 0) x += m;
    return x;
}

long digit_sum(const Int& n, const Int& p) {
    if (n < 0) throw std::domain_error("digit_sum requires n >= 0");
    long total = 0;
    Int rest = n;
    while (rest > 0) {
        total += static_cast<long>(Int(rest % p).get_ui());
        rest /= p;
    }
    return total;
}

Int euler_phi(const Int& n) {
    Int phi = 1;
    for (const auto& [p, e] : factorize(n)) {
        phi *= pow_int(p, static_cast<unsigned long>(e - 1)) * (p - 1);
    }
    return phi;
}

Int factorial_int(unsigned long n) {
    Int r;
    mpz_fac_ui(r.get_mpz_t(), n);
    return r;
}

Int gcd_int(const Int& a, const Int& b) {
    Int g;
    mpz_gcd(g.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
    return g;
}

Int lcm_int(const Int& a, const Int& b) {
    Int l;
    mpz_lcm(l.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
    return l;
}

}  // namespace hg
