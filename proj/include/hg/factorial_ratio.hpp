#pragma once

#include <vector>

#include "hg/pair.hpp"

namespace hg {

// Step function sum_i floor(e_i * x) - sum_j floor(f_j * x).
long bold_delta(const std::vector<long>& e, const std::vector<long>& f, const Rat& x);

struct FactorialVerdict {
    bool integral = false;    // sums_equal && delta_ok
    bool sums_equal = false;  // sum e_i == sum f_j
    bool delta_ok = false;    // bold_delta >= 1 on [1/M, 1)
    Rat witness_x;            // breakpoint violating the bound when !delta_ok
    long witness_value = 0;
    Rat c_zero;               // prod e_i^{e_i} / prod f_j^{f_j}
    Rat c_zero_families;      // same value via the cyclotomic family product
};

// Integrality criterion for the sequence prod (e_i n)! / prod (f_j n)!:
// integral iff the sums agree and bold_delta >= 1 on [1/M, 1), M = max entry.
// Evaluated at every breakpoint k/e_i, k/f_j in the window plus 1/M.
FactorialVerdict factorial_ratio_check(const std::vector<long>& e, const std::vector<long>& f);

// Hypergeometric parameters of the ratio sequence: expand each e_i into
// {k/e_i : 1 <= k <= e_i}, likewise f, and cancel common entries.
ParamPair cancelled_pair(const std::vector<long>& e, const std::vector<long>& f);

}  // namespace hg
