#include <doctest.h>

#include <random>
#include <vector>

#include "common.hpp"
#include "hg/arith.hpp"
#include "hg/series.hpp"

using namespace hg;
using namespace hgtest;

namespace {

bool same(const Series& a, const Series& b) {
    if (a.order() != b.order()) return false;
    for (std::size_t n = 0; n <= a.order(); ++n) {
        if (a[n] != b[n]) return false;
    }
    return true;
}

// a(b(z)) truncated at the common order; b must have zero constant term.
Series compose(const Series& a, const Series& b) {
    REQUIRE(b[0] == 0);
    Series res = Series::constant(a[a.order()], a.order());
    for (std::size_t k = a.order(); k-- > 0;) {
        res = res * b + Series::constant(a[k], a.order());
    }
    return res;
}

Rat harmonic_number(unsigned long m) {
    Rat h(0);
    for (unsigned long j = 1; j <= m; ++j) h += Rat(1, static_cast<long>(j));
    return h;
}

}  // namespace

TEST_CASE("coefficients of the scaled quintic series are the central factorial ratios") {
    Series f = f_series(quintic(), Rat(3125), 12);
    CHECK(f[0] == 1);
    CHECK(f[1] == 120);
    CHECK(f[2] == 113400);
    for (unsigned long n = 1; n <= 12; ++n) {
        Rat expect(factorial_int(5 * n), pow_int(factorial_int(n), 5));
        expect.canonicalize();
        CHECK(f[n] == expect);
    }
}

TEST_CASE("first harmonic coefficient") {
    Series g = g_series(half(), Rat(1), 4);
    CHECK(g[0] == 0);
    CHECK(g[1] == Rat(1, 2));
}

TEST_CASE("harmonic term telescopes for the quintic pair") {
    for (unsigned long n = 1; n <= 12; ++n) {
        Rat expect = (harmonic_number(5 * n) - harmonic_number(n)) * Rat(5);
        CHECK(harmonic_term(quintic(), n) == expect);
    }
}

TEST_CASE("exp and log are mutually inverse on random series") {
    std::mt19937_64 rng(12345);
    std::uniform_int_distribution<long> num(-9, 9);
    std::uniform_int_distribution<long> den(1, 9);
    for (int trial = 0; trial < 10; ++trial) {
        Series u(10);
        for (std::size_t n = 1; n <= 10; ++n) {
            Rat v(num(rng), den(rng));
            v.canonicalize();
            u.set(n, v);
        }
        CHECK(same(series_log(series_exp(u)), u));
    }
}

TEST_CASE("cube root recovers a random unit series") {
    std::mt19937_64 rng(777);
    std::uniform_int_distribution<long> num(-9, 9);
    std::uniform_int_distribution<long> den(1, 9);
    for (int trial = 0; trial < 10; ++trial) {
        Series u(8);
        u.set(0, Rat(1));
        for (std::size_t n = 1; n <= 8; ++n) {
            Rat v(num(rng), den(rng));
            v.canonicalize();
            u.set(n, v);
        }
        CHECK(same(series_root(u.pow_u(3), Int(3)), u));
    }
}

TEST_CASE("lagrange inversion of z/(1-z)") {
    Series q(10);
    for (std::size_t n = 1; n <= 10; ++n) q.set(n, Rat(1));  // z + z^2 + ...
    Series j = lagrange_inverse(q);
    for (std::size_t n = 1; n <= 10; ++n) {
        CHECK(j[n] == ((n % 2 == 1) ? Rat(1) : Rat(-1)));
    }
    Series round = compose(j, q);
    CHECK(round[0] == 0);
    CHECK(round[1] == 1);
    for (std::size_t n = 2; n <= 10; ++n) CHECK(round[n] == 0);
}

TEST_CASE("series arithmetic basics") {
    Series s(6);
    s.set(0, Rat(1));
    s.set(1, Rat(2));
    s.set(3, Rat(-1, 3));

    Series inv = s.inverse();
    Series prod = s * inv;
    CHECK(prod[0] == 1);
    for (std::size_t n = 1; n <= 6; ++n) CHECK(prod[n] == 0);
    CHECK(same(s / s, Series::constant(Rat(1), 6)));

    Series sub = s.scaled_arg(Rat(2));
    CHECK(sub[1] == 4);
    CHECK(sub[3] == Rat(-8, 3));

    Series cp = s.compose_power(2);
    CHECK(cp.order() == 6);
    CHECK(cp[2] == 2);
    CHECK(cp[6] == Rat(-1, 3));
    CHECK(cp[3] == 0);

    CHECK(s.truncated(2).order() == 2);
}

TEST_CASE("exponentials of the rescaled symmetrized ratio, frozen values") {
    const ParamPair cx = counterexample();

    Series e12 = series_exp(s_series(cx, Rat(392), 3).scaled(Rat(1, 12)));
    CHECK(e12[0] == 1);
    CHECK(e12[1] == 98);
    CHECK(e12[2] == Rat(1664109, 98));
    CHECK(e12[3] == Rat(11292355, 3));

    Series e2 = series_exp(s_series(cx, Rat(392), 12).scaled(Rat(1, 2)));
    CHECK_FALSE(integrality_scan(e2).integral);

    Series e2big = series_exp(s_series(cx, Rat(19208), 4).scaled(Rat(1, 2)));
    CHECK(e2big[0] == 1);
    CHECK(e2big[1] == 28812);
    CHECK(e2big[2] == Rat(Int("590512083")));
    CHECK(e2big[3] == Rat(Int("10745097291180")));
    CHECK(e2big[4] == Rat(Int("186162876763985079")));
}

TEST_CASE("root exponents admitted by the four-two pair") {
    const ParamPair e = quartic42();
    for (long root : {16L, 32L}) {
        Series es = series_exp(s_series(e, Rat(1024), 30).scaled(Rat(1, root)));
        CHECK(integrality_scan(es).integral);
    }
    Series q = q_coordinate(e, Rat(1024), 40);
    for (long v : {2L, 4L, 8L, 16L, 32L}) {
        CHECK(integrality_scan(series_root(q, Int(v))).integral);
    }
    CHECK_FALSE(integrality_scan(series_root(q, Int(64))).integral);
}

TEST_CASE("square root of the one-half unit series gives Catalan numbers") {
    Series q = q_coordinate(half(), Rat(4), 6);
    Series r = series_root(q, Int(2));
    CHECK(r[0] == 1);
    CHECK(r[1] == 1);
    CHECK(r[2] == 2);
    CHECK(r[3] == 5);
    CHECK(r[4] == 14);
}

TEST_CASE("positivity of the unit coefficients across multiples") {
    PositivityReport rep = positivity_scan(quintic(), 50);
    CHECK(rep.positive);
    CHECK(rep.witness_index == -1);
}

TEST_CASE("multiplicative congruence for the quotient of argument powers") {
    DworkLemmaReport ok = dieudonne_dwork_check(quintic(), Rat(1), Int(2), 30);
    CHECK(ok.ok);

    DworkLemmaReport bad = dieudonne_dwork_check(quintic(), Rat(1, 7), Int(7), 12);
    CHECK_FALSE(bad.ok);
    CHECK(bad.witness_index == 1);
    CHECK(bad.witness_value == Rat(-24, 625));
}

TEST_CASE("mirror inverse of the quintic unit series is integral") {
    Series m = mirror_map(quintic(), Rat(3125), 30);
    CHECK(m[0] == 0);
    CHECK(m[1] == 3125);
    CHECK(integrality_scan(m).integral);
}

TEST_CASE("integrality scans report first offenders") {
    Series f = f_series(quintic(), Rat(625), 8);
    IntegralityVerdict v = integrality_scan_p(f, Int(5));
    CHECK_FALSE(v.integral);
    CHECK(v.first_bad_index == 5);
    CHECK(v.valuation < 0);

    IntegralityVerdict w = integrality_scan(f_series(quintic(), Rat(3125), 40));
    CHECK(w.integral);
    CHECK(w.order_checked == 40);
}

TEST_CASE("logarithmic solution criterion") {
    CHECK(has_log_solution(quintic()));
    CHECK(has_log_solution(sixth()));
    CHECK_FALSE(has_log_solution(half()));
}
