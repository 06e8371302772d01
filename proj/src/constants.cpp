#include "hg/constants.hpp"

#include <stdexcept>

namespace hg {

namespace {

// Primes dividing d, then primes <= r - s + 1 not already present, ascending.
std::vector<Int> relevant_primes(const ParamPair& pr) {
    std::vector<Int> primes;
    for (const auto& [p, e] : factorize(pr.d())) primes.push_back(p);
    long bound = static_cast<long>(pr.r()) - static_cast<long>(pr.s()) + 1;
    for (Int p = 2; p <= bound; ++p) {
        if (!is_prime(p)) continue;
        bool seen = false;
        for (const Int& q : primes) seen = seen || q == p;
        if (!seen) primes.push_back(p);
    }
    return primes;
}

}  // namespace

Rat eisenstein_core(const ParamPair& pr) {
    Rat value(1);
    for (const Rat& x : pr.alpha()) value *= Rat(den(x), Int(1));
    for (const Rat& x : pr.beta()) value /= Rat(den(x), Int(1));
    for (const Int& p : relevant_primes(pr)) {
        long e = -floor_div(pr.lambda(p), to_long_checked(p - 1));
        value *= pow_rat(Rat(p), e);
    }
    return value;
}

Eisenstein eisenstein_constant(const ParamPair& pr) {
    if (!christol_ni_check(pr).ok) {
        throw std::domain_error("eisenstein_constant requires an N-integral series");
    }
    return {eisenstein_core(pr), pr.r() == pr.s() && pr.entries_unit_interval()};
}

Rat c_prime(const ParamPair& pr) {
    Eisenstein c = eisenstein_constant(pr.normalized());
    bool doubled = !pr.beta_integral() && pr.mfrak() % 2 == 1;
    return doubled ? Rat(2) * c.value : c.value;
}

Int d_star(const ParamPair& pr) {
    Int out = pr.d();
    for (const auto& [p, e] : factorize(pr.d())) out /= p;
    return out;
}

Int d_prime(const ParamPair& pr) {
    bool doubled = !pr.beta_integral() && pr.mfrak() % 2 == 1;
    return doubled ? Int(2) * d_star(pr) : d_star(pr);
}

namespace {

Int rational_to_int(const Rat& x, const char* what) {
    if (!is_integer(x) || x < 1) {
        throw std::logic_error(std::string(what) + " must be a positive integer, got " + rat_str(x));
    }
    return num(x);
}

}  // namespace

Int frak_n(const ParamPair& pr) {
    if (pr.r() != pr.s() || !h_check(pr).ok) {
        throw std::domain_error("frak_n requires r = s and the window condition");
    }
    Rat value;
    if (pr.beta_integral()) {
        value = Rat(pr.d());
        for (const auto& [p, e] : factorize(pr.d())) {
            value *= pow_rat(Rat(p), -2 - floor_div(pr.lambda(p), to_long_checked(p - 1)));
        }
    } else {
        Int dp = d_prime(pr);
        value = Rat(dp);
        for (const auto& [p, e] : factorize(dp)) {
            if (pr.lambda(p) % to_long_checked(p - 1) == 0) value /= p;
        }
    }
    return rational_to_int(value, "root exponent");
}

Int frak_n_prime(const ParamPair& pr) {
    for (const Rat& x : pr.beta()) {
        if (!is_integer(x)) {
            throw std::domain_error("frak_n_prime requires integral beta entries");
        }
    }
    if (!pr.normalized_disjoint()) {
        throw std::domain_error("frak_n_prime requires disjoint normalized tuples");
    }
    Rat value(1);
    for (const auto& [p, e] : factorize(pr.d())) {
        value *= pow_rat(Rat(p), -1 - floor_div(pr.lambda(p), to_long_checked(p - 1)));
    }
    return rational_to_int(value, "unit-series root exponent");
}

ConstantSheet constant_sheet(const ParamPair& pr) {
    ConstantSheet sheet;
    sheet.d = pr.d();
    for (const Int& p : relevant_primes(pr)) sheet.lambda.emplace_back(p, pr.lambda(p));
    sheet.m_count = pr.mfrak();
    sheet.beta_integral = pr.beta_integral();
    sheet.d_star = d_star(pr);
    sheet.d_prime = d_prime(pr);
    sheet.christol_ok = christol_ni_check(pr).ok;
    sheet.h_ok = h_check(pr).ok;
    try {
        sheet.interlacing = interlacing_check(pr);
    } catch (const std::domain_error&) {
    }
    if (sheet.christol_ok) {
        Eisenstein c = eisenstein_constant(pr);
        sheet.c0 = c.value;
        sheet.c0_exact = c.exact;
        if (christol_ni_check(pr.normalized()).ok) sheet.c_prime = c_prime(pr);
    }
    try {
        sheet.frak_n = frak_n(pr);
    } catch (const std::domain_error&) {
    }
    try {
        sheet.frak_n_prime = frak_n_prime(pr);
    } catch (const std::domain_error&) {
    }
    return sheet;
}

}  // namespace hg
