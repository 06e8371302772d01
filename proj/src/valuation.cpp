#include "hg/valuation.hpp"

#include <stdexcept>

#include "hg/constants.hpp"

namespace hg {

long delta_step(const Rat& alpha, const Int& p, unsigned long ell, const Rat& x) {
    Rat threshold = dwork_threshold(alpha, p, ell);
    return to_long_checked(floor_rat(x - threshold)) + 1;
}

long delta_eval(const ParamPair& pr, const Int& p, unsigned long ell, const Rat& x) {
    long total = 0;
    for (const Rat& v : pr.alpha()) total += delta_step(v, p, ell, x);
    for (const Rat& v : pr.beta()) total -= delta_step(v, p, ell, x);
    return total;
}

namespace {

// Largest d(entry) * (|floor(1 - entry)| + 1): beyond n times this bound the
// step terms vanish.
Int truncation_bound(const ParamPair& pr) {
    Int best = 1;
    for (const Rat& x : pr.all_entries()) {
        Int f = floor_rat(1 - x);
        if (f < 0) f = -f;
        Int m = den(x) * (f + 1);
        if (m > best) best = m;
    }
    return best;
}

}  // namespace

long vp_ratio_formula(const ParamPair& pr, const Int& p, unsigned long n) {
    for (const Rat& x : pr.all_entries()) {
        if (!p_integral(x, p)) {
            throw std::domain_error("vp_ratio_formula requires p-integral entries");
        }
    }
    if (n == 0) return 0;
    Int bound = Int(n) * truncation_bound(pr);
    long total = 0;
    Int q = p;
    for (unsigned long ell = 1; q <= bound; ++ell, q *= p) {
        Rat x(Int(n) % q, q);
        x.canonicalize();
        total += delta_eval(pr, p, ell, x);
    }
    long rs = static_cast<long>(pr.r()) - static_cast<long>(pr.s());
    return total + rs * vp_factorial(n, p);
}

long vp_ratio_oracle(const ParamPair& pr, const Int& p, unsigned long n) {
    long total = 0;
    for (unsigned long k = 0; k < n; ++k) {
        for (const Rat& x : pr.alpha()) total += vp_nonzero(x + k, p);
        for (const Rat& x : pr.beta()) total -= vp_nonzero(x + k, p);
    }
    return total;
}

namespace {

void magie_preconditions(const ParamPair& pr, const Int& p) {
    if (pr.r() != pr.s() || !pr.entries_unit_interval()) {
        throw std::domain_error("averaged valuation requires r = s and entries in (0, 1]");
    }
    if (!mpz_divisible_p(pr.d().get_mpz_t(), p.get_mpz_t())) {
        throw std::domain_error("averaged valuation requires p | d");
    }
}

}  // namespace

Rat magie_valuation(const ParamPair& pr, const Int& p, unsigned long n) {
    magie_preconditions(pr, p);
    if (n == 0) return Rat(0);
    const long f = vp_int(pr.d(), p);
    const Int pf = pow_int(p, static_cast<unsigned long>(f));
    const Int phi = euler_phi(pf);

    // Threshold of entry gamma for the class (a, ell): determined by the
    // residue of the class modulo d(gamma), assembled by CRT from a mod the
    // p-part and p^ell mod the coprime part.
    auto class_threshold = [&](const Rat& gamma, const Int& a, const Int& p_ell) {
        const Int m = den(gamma);
        long e = vp_int(m, p);
        Int pe = pow_int(p, static_cast<unsigned long>(e));
        Int rest = m / pe;
        Int residue = crt2(a % pe, pe, p_ell % rest, rest);
        return dwork_by_residue(gamma, residue);
    };

    Int total(0);
    const Int bound = Int(n) * pr.d();
    for (Int a = 1; a <= pf; ++a) {
        if (gcd_int(a, p) != 1) continue;
        Int p_ell = 1;
        for (unsigned long ell = 1;; ++ell) {
            p_ell *= p;
            if (p_ell > bound) break;
            Rat x(Int(n) % p_ell, p_ell);
            x.canonicalize();
            long delta = 0;
            for (const Rat& g : pr.alpha()) delta += x >= class_threshold(g, a, p_ell) ? 1 : 0;
            for (const Rat& g : pr.beta()) delta -= x >= class_threshold(g, a, p_ell) ? 1 : 0;
            total += delta;
        }
    }

    long lam = pr.lambda(p);
    long pm1 = to_long_checked(p - 1);
    Rat fractional = Rat(lam) / Rat(pm1) - Rat(floor_div(lam, pm1));
    return Rat(total) / Rat(phi) + Rat(Int(n), Int(1)) * fractional;
}

Rat magie_oracle(const ParamPair& pr, const Int& p, unsigned long n) {
    magie_preconditions(pr, p);
    Rat c0 = eisenstein_constant(pr).value;
    long scale_part = n == 0 ? 0 : static_cast<long>(n) * vp_nonzero(c0, p);
    return Rat(scale_part + vp_ratio_oracle(pr, p, n));
}

}  // namespace hg
