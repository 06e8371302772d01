#pragma once

#include <vector>

#include "hg/arith.hpp"

namespace hg {

// Representative of x mod 1 lying in (0, 1].
Rat frac_rep(const Rat& x);

// True when the denominator of x is coprime to p.
bool p_integral(const Rat& x, const Int& p);

// The unique y in Z_p with p*y - x in {0, ..., p-1}; selected by scanning the
// candidates (x + k)/p for the p-integral one. Requires x p-integral.
Rat dwork_map(const Rat& x, const Int& p);

// ell-th iterate, computed directly: the unique y with p^ell*y - x in
// {0, ..., p^ell - 1}. dwork_iter(x, p, 0) = x.
Rat dwork_iter(const Rat& x, const Int& p, unsigned long ell);

// The digit offset t = p^ell * dwork_iter(x, p, ell) - x, in {0, ..., p^ell - 1}.
Int dwork_digit_offset(const Rat& x, const Int& p, unsigned long ell);

// dwork_iter(x, p, ell) + floor(1 - x)/p^ell; lies in (0, 1].
Rat dwork_threshold(const Rat& x, const Int& p, unsigned long ell);

// Representative in {0, ..., c-1} of x modulo c; den(x) must be coprime to c.
Int varpi(const Int& c, const Rat& x);

// Dwork image of gamma determined by a residue q coprime to den(gamma): for
// gamma = u/M this is varpi(M, u * q^{-1}) mapped into {1, ..., M}, over M.
// Agrees with dwork_map(gamma, p) whenever q = p mod M.
Rat dwork_by_residue(const Rat& gamma, const Int& q_res);

// Morita p-adic gamma at nonnegative integer arguments, exact:
// gamma_p(0) = 1, gamma_p(n+1) = -gamma_p(n) * (n if p does not divide n, else 1).
Int gamma_p(const Int& n, const Int& p);

// Residues of gamma_p(n) mod p^k for n = 0..n_max, signs folded in.
class GammaResidueTable {
  public:
    GammaResidueTable(const Int& p, unsigned k, unsigned long n_max);
    const Int& modulus() const { return mod_; }
    const Int& at(unsigned long n) const { return res_.at(n); }

  private:
    Int mod_;
    std::vector<Int> res_;
};

}  // namespace hg
