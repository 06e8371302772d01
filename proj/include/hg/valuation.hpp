#pragma once

#include "hg/pair.hpp"

namespace hg {

// Per-parameter step: floor(x - dwork_threshold(alpha, p, ell)) + 1.
// Requires alpha p-integral.
long delta_step(const Rat& alpha, const Int& p, unsigned long ell, const Rat& x);

// Sum of alpha steps minus sum of beta steps; all entries must be p-integral.
long delta_eval(const ParamPair& pr, const Int& p, unsigned long ell, const Rat& x);

// v_p(prod (alpha_i)_n / prod (beta_j)_n) via the step-function formula
//   sum_{ell >= 1} delta_eval(p, ell, {n/p^ell}) + (r - s) * v_p(n!),
// truncated at the first ell with p^ell > n * max d(entry)*(|floor(1-entry)|+1).
// All entries must be p-integral.
long vp_ratio_formula(const ParamPair& pr, const Int& p, unsigned long n);

// Same valuation by direct factor-by-factor construction; no p-integrality
// assumption on alpha entries.
long vp_ratio_oracle(const ParamPair& pr, const Int& p, unsigned long n);

// Right side of the averaged valuation identity
//   (1/phi(p^f)) sum_{a, ell} Delta^{q(a,ell),1}({n/p^ell}) + n*{lambda_p/(p-1)},
// where d = p^f * D and the class (a, ell) threshold of each entry gamma is
// computed from the residue of q(a, ell) modulo d(gamma) alone (CRT of a mod
// the p-part and p^ell mod the prime-to-p part); no prime search happens.
// Requires r = s, entries in (0, 1], and p | d.
Rat magie_valuation(const ParamPair& pr, const Int& p, unsigned long n);

// Left side of the identity: v_p(C0^n * prod (alpha_i)_n / prod (beta_j)_n)
// with C0 the Eisenstein constant of the pair, as an exact rational.
Rat magie_oracle(const ParamPair& pr, const Int& p, unsigned long n);

}  // namespace hg
