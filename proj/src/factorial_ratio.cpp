#include "hg/factorial_ratio.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <stdexcept>

namespace hg {

long bold_delta(const std::vector<long>& e, const std::vector<long>& f, const Rat& x) {
    Int total = 0;
    for (long ei : e) total += floor_rat(Rat(ei) * x);
    for (long fj : f) total -= floor_rat(Rat(fj) * x);
    return to_long_checked(total);
}

namespace {

void validate(const std::vector<long>& e, const std::vector<long>& f) {
    if (e.empty() || f.empty()) throw std::invalid_argument("patterns must be nonempty");
    for (long v : e) {
        if (v < 1) throw std::invalid_argument("pattern entries must be positive");
    }
    for (long v : f) {
        if (v < 1) throw std::invalid_argument("pattern entries must be positive");
    }
}

Rat families_c_zero(const std::vector<long>& e, const std::vector<long>& f) {
    std::set<long> moduli(e.begin(), e.end());
    moduli.insert(f.begin(), f.end());
    std::set<long> divisors;
    for (long m : moduli) {
        for (long n = 1; n <= m; ++n) {
            if (m % n == 0) divisors.insert(n);
        }
    }
    Rat value(1);
    for (long n : divisors) {
        long net = 0;
        for (long ei : e) net += ei % n == 0 ? 1 : 0;
        for (long fj : f) net -= fj % n == 0 ? 1 : 0;
        if (net == 0) continue;
        unsigned long phi = euler_phi(Int(n)).get_ui();
        Int fam = pow_int(Int(n), phi);
        for (const auto& [p, unused] : factorize(Int(n))) {
            fam *= pow_int(p, phi / (p.get_ui() - 1));
        }
        value *= pow_rat(Rat(fam), net);
    }
    return value;
}

}  // namespace

FactorialVerdict factorial_ratio_check(const std::vector<long>& e, const std::vector<long>& f) {
    validate(e, f);
    FactorialVerdict verdict;
    long esum = 0, fsum = 0;
    long m = 0;
    for (long v : e) esum += v, m = std::max(m, v);
    for (long v : f) fsum += v, m = std::max(m, v);
    verdict.sums_equal = esum == fsum;

    // Breakpoints of the step function inside [1/M, 1).
    std::set<Rat> points;
    points.insert(Rat(1, m));
    auto add_points = [&](const std::vector<long>& v) {
        for (long entry : v) {
            for (long k = 1; k < entry; ++k) {
                Rat x(k, entry);
                x.canonicalize();
                if (x >= Rat(1, m) && x < 1) points.insert(x);
            }
        }
    };
    add_points(e);
    add_points(f);

    verdict.delta_ok = true;
    for (const Rat& x : points) {
        long value = bold_delta(e, f, x);
        if (value < 1) {
            verdict.delta_ok = false;
            verdict.witness_x = x;
            verdict.witness_value = value;
            break;
        }
    }

    verdict.c_zero = Rat(1);
    for (long v : e) verdict.c_zero *= pow_rat(Rat(v), v);
    for (long v : f) verdict.c_zero /= pow_rat(Rat(v), v);
    verdict.c_zero_families = families_c_zero(e, f);
    verdict.integral = verdict.sums_equal && verdict.delta_ok;
    return verdict;
}

ParamPair cancelled_pair(const std::vector<long>& e, const std::vector<long>& f) {
    validate(e, f);
    std::map<Rat, long> bag;
    for (long v : e) {
        for (long k = 1; k <= v; ++k) {
            Rat x(k, v);
            x.canonicalize();
            ++bag[x];
        }
    }
    for (long v : f) {
        for (long k = 1; k <= v; ++k) {
            Rat x(k, v);
            x.canonicalize();
            --bag[x];
        }
    }
    std::vector<Rat> alpha, beta;
    for (const auto& [x, count] : bag) {
        for (long i = 0; i < count; ++i) alpha.push_back(x);
        for (long i = 0; i < -count; ++i) beta.push_back(x);
    }
    return ParamPair(std::move(alpha), std::move(beta));
}

}  // namespace hg
