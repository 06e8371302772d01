#include "hg/padic.hpp"

#include <stdexcept>

namespace hg {

Rat frac_rep(const Rat& x) {
    Rat f = frac_part(x);
    return f == 0 ? Rat(1) : f;
}

bool p_integral(const Rat& x, const Int& p) {
    return !mpz_divisible_p(den(x).get_mpz_t(), p.get_mpz_t());
}

Rat dwork_map(const Rat& x, const Int& p) {
    for (Int k = 0; k < p; ++k) {
        Rat candidate = (x + k) / p;
        if (p_integral(candidate, p)) return candidate;
    }
    throw std::domain_error("dwork_map requires a p-integral argument");
}

Rat dwork_iter(const Rat& x, const Int& p, unsigned long ell) {
    if (!p_integral(x, p)) throw std::domain_error("dwork_iter requires a p-integral argument");
    if (ell == 0) return x;
    Int q = pow_int(p, ell);
    Int k = (-num(x) * inv_mod(den(x), q)) % q;
    if (k < 0) k += q;
    return (x + k) / q;
}

Int dwork_digit_offset(const Rat& x, const Int& p, unsigned long ell) {
    Rat y = dwork_iter(x, p, ell);
    Rat t = pow_int(p, ell) * y - x;
    if (!is_integer(t)) throw std::logic_error("digit offset must be integral");
    return num(t);
}

Rat dwork_threshold(const Rat& x, const Int& p, unsigned long ell) {
    Rat shift(floor_rat(1 - x), pow_int(p, ell));
    shift.canonicalize();
    return dwork_iter(x, p, ell) + shift;
}

Int varpi(const Int& c, const Rat& x) {
    if (c < 1) throw std::domain_error("varpi requires c >= 1");
    if (gcd_int(den(x), c) != 1) throw std::domain_error("varpi: denominator not coprime to modulus");
    if (c == 1) return 0;
    Int r = (num(x) % c) * inv_mod(den(x), c) % c;
    if (r < 0) r += c;
    return r;
}

Rat dwork_by_residue(const Rat& gamma, const Int& q_res) {
    const Int m = den(gamma);
    if (gcd_int(q_res, m) != 1) {
        throw std::domain_error("dwork_by_residue: residue not coprime to denominator");
    }
    Int r = varpi(m, Rat(num(gamma), Int(1)) * Rat(inv_mod(q_res, m), Int(1)));
    if (r == 0) r = m;
    Rat out(r, m);
    out.canonicalize();
    return out;
}

Int gamma_p(const Int& n, const Int& p) {
    if (n < 0) throw std::domain_error("gamma_p requires n >= 0");
    Int acc = 1;
    for (Int k = 0; k < n; ++k) {
        acc = -acc;
        if (k != 0 && !mpz_divisible_p(k.get_mpz_t(), p.get_mpz_t())) acc *= k;
    }
    return acc;
}

GammaResidueTable::GammaResidueTable(const Int& p, unsigned k, unsigned long n_max)
    : mod_(pow_int(p, k)) {
    res_.reserve(n_max + 1);
    Int acc = 1 % mod_;
    res_.push_back(acc);
    for (unsigned long n = 0; n < n_max; ++n) {
        // gamma(n+1) = -gamma(n) * (n when nonzero and coprime to p, else 1)
        Int factor = (n != 0 && Int(n) % p != 0) ? Int(n) : Int(1);
        acc = (mod_ - acc) % mod_;
        acc = (acc * (factor % mod_)) % mod_;
        res_.push_back(acc);
    }
}

}  // namespace hg
