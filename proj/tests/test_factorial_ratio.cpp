#include <doctest.h>

#include "common.hpp"
#include "hg/arith.hpp"
#include "hg/factorial_ratio.hpp"

using namespace hg;
using namespace hgtest;

TEST_CASE("step function criterion on the worked families") {
    FactorialVerdict quint = factorial_ratio_check({5}, {1, 1, 1, 1, 1});
    CHECK(quint.integral);
    CHECK(quint.sums_equal);
    CHECK(quint.delta_ok);
    CHECK(quint.c_zero == 3125);
    CHECK(quint.c_zero_families == 3125);

    FactorialVerdict fourtwo = factorial_ratio_check({4, 2}, {1, 1, 1, 1, 1, 1});
    CHECK(fourtwo.integral);
    CHECK(fourtwo.c_zero == 1024);
    CHECK(fourtwo.c_zero_families == 1024);

    FactorialVerdict neg = factorial_ratio_check({3, 1}, {2, 2});
    CHECK_FALSE(neg.integral);
    CHECK(neg.sums_equal);
    CHECK_FALSE(neg.delta_ok);
    CHECK(neg.witness_x == Rat(1, 2));
    CHECK(neg.witness_value == -1);
    CHECK(neg.c_zero == Rat(27, 16));
}

TEST_CASE("swapped direction fails the criterion") {
    FactorialVerdict swapped = factorial_ratio_check({1, 1, 1, 1, 1}, {5});
    CHECK_FALSE(swapped.integral);
    FactorialVerdict swapped2 = factorial_ratio_check({1, 1, 1, 1, 1, 1}, {4, 2});
    CHECK_FALSE(swapped2.integral);
}

TEST_CASE("unbalanced sums are rejected") {
    FactorialVerdict bad = factorial_ratio_check({4}, {1, 1, 1});
    CHECK_FALSE(bad.integral);
    CHECK_FALSE(bad.sums_equal);
}

TEST_CASE("step function values") {
    CHECK(bold_delta({5}, {1, 1, 1, 1, 1}, Rat(1, 5)) == 1);
    CHECK(bold_delta({5}, {1, 1, 1, 1, 1}, Rat(4, 5)) == 4);
    CHECK(bold_delta({3, 1}, {2, 2}, Rat(1, 2)) == -1);
    CHECK(bold_delta({3, 1}, {2, 2}, Rat(0)) == 0);
}

TEST_CASE("factorial ratios are hypergeometric with cancelled parameters") {
    ParamPair q = cancelled_pair({5}, {1, 1, 1, 1, 1});
    CHECK(q.alpha() == quintic().alpha());
    CHECK(q.beta() == quintic().beta());

    ParamPair e = cancelled_pair({4, 2}, {1, 1, 1, 1, 1, 1});
    CHECK(e.alpha() == std::vector<Rat>{Rat(1, 4), Rat(1, 2), Rat(1, 2), Rat(3, 4)});
    CHECK(e.beta() == std::vector<Rat>{Rat(1), Rat(1), Rat(1), Rat(1)});

    ParamPair n = cancelled_pair({3, 1}, {2, 2});
    CHECK(n.alpha() == thirds().alpha());
    CHECK(n.beta() == thirds().beta());

    // The cancelled-pair coefficients reproduce the factorial ratio itself.
    for (long k = 1; k <= 8; ++k) {
        Rat ratio(factorial_int(5 * k), pow_int(factorial_int(k), 5));
        ratio.canonicalize();
        Rat poch = pow_rat(Rat(3125), k);
        for (const Rat& x : q.alpha()) {
            for (long j = 0; j < k; ++j) poch *= x + j;
        }
        for (const Rat& x : q.beta()) {
            for (long j = 0; j < k; ++j) poch /= x + j;
        }
        CHECK(poch == ratio);
    }
}

TEST_CASE("family formula matches the direct scale on reduced-residue blocks") {
    // e = (6), f = (1,2,3) concatenates the reduced residues mod 6, 3, 2, 1.
    FactorialVerdict fam = factorial_ratio_check({6}, {1, 2, 3});
    CHECK(fam.sums_equal);
    CHECK(fam.c_zero == fam.c_zero_families);
}
