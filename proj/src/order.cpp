#include "hg/order.hpp"

#include <algorithm>
#include <map>
#include <stdexcept>

namespace hg {

bool order_le(const Rat& x, const Rat& y) {
    Rat fx = frac_rep(x), fy = frac_rep(y);
    if (fx != fy) return fx < fy;
    return x >= y;
}

bool order_lt(const Rat& x, const Rat& y) { return x != y && order_le(x, y); }

namespace {

// Distinct a-multiples with net weight (+1 per alpha, -1 per beta), ascending.
std::vector<std::pair<Rat, long>> merged_keys(const ParamPair& pr, const Int& a) {
    std::vector<std::pair<Rat, long>> items;
    for (const Rat& x : pr.alpha()) items.emplace_back(a * x, 1);
    for (const Rat& x : pr.beta()) items.emplace_back(a * x, -1);
    std::sort(items.begin(), items.end(),
              [](const auto& u, const auto& v) { return order_lt(u.first, v.first); });
    std::vector<std::pair<Rat, long>> merged;
    for (const auto& [key, w] : items) {
        if (!merged.empty() && merged.back().first == key) {
            merged.back().second += w;
        } else {
            merged.emplace_back(key, w);
        }
    }
    return merged;
}

}  // namespace

Rat m_min(const ParamPair& pr, const Int& a) {
    std::vector<Rat> keys;
    for (const Rat& x : pr.alpha()) keys.push_back(a * x);
    for (const Rat& x : pr.beta()) keys.push_back(a * x);
    Rat best = keys.front();
    for (const Rat& k : keys) {
        if (order_lt(k, best)) best = k;
    }
    return best;
}

long xi(const ParamPair& pr, const Int& a, const Rat& x) {
    long count = 0;
    for (const Rat& v : pr.alpha()) count += order_le(a * v, x) ? 1 : 0;
    for (const Rat& v : pr.beta()) count -= order_le(a * v, x) ? 1 : 0;
    return count;
}

XiProfile xi_profile(const ParamPair& pr, const Int& a) {
    XiProfile profile;
    long running = 0;
    for (const auto& [key, w] : merged_keys(pr, a)) {
        running += w;
        profile.steps.push_back({key, running});
    }
    profile.final_value = running;
    return profile;
}

OrderWitness christol_ni_check(const ParamPair& pr) {
    for (const Int& a : pr.coprime_residues()) {
        XiProfile profile = xi_profile(pr, a);
        for (const XiStep& step : profile.steps) {
            if (step.running < 0) return {false, a, step.key, step.running};
        }
    }
    return {};
}

OrderWitness h_check(const ParamPair& pr) {
    for (const Int& a : pr.coprime_residues()) {
        Rat bound(a);
        for (const XiStep& step : xi_profile(pr, a).steps) {
            if (order_le(bound, step.key)) break;  // left the window [m(a), a)
            if (step.running < 1) return {false, a, step.key, step.running};
        }
    }
    return {};
}

bool interlacing_check(const ParamPair& pr) {
    bool beta_has_integer = false;
    for (const Rat& x : pr.beta()) beta_has_integer = beta_has_integer || is_integer(x);
    if (pr.r() != pr.s() || !beta_has_integer || !pr.normalized_disjoint()) {
        throw std::domain_error("interlacing_check requires r = s, an integral beta entry, "
                                "and disjoint normalized tuples");
    }
    for (const Int& a : pr.coprime_residues()) {
        for (const XiStep& step : xi_profile(pr, a).steps) {
            if (step.running < 0 || step.running > 1) return false;
        }
    }
    return true;
}

NumeratorReport numerator_condition(const ParamPair& pr) {
    if (pr.r() != pr.s()) throw std::domain_error("numerator_condition requires r = s");
    ParamPair n = pr.normalized();
    Rat ratio(1);
    for (const Rat& x : n.alpha()) ratio *= Rat(num(x), Int(1));
    for (const Rat& x : n.beta()) ratio /= Rat(num(x), Int(1));

    NumeratorReport report;
    std::map<Int, bool> prime_set;
    for (const auto& [p, e] : factorize(pr.d())) prime_set[p] = true;
    for (const auto& [p, e] : factorize(den(ratio))) prime_set[p] = true;
    for (const auto& [p, unused] : prime_set) {
        report.primes_checked.push_back(p);
        long required = floor_div(pr.lambda(p), to_long_checked(p - 1));
        long actual = vp_nonzero(ratio, p);
        if (actual < required && report.ok) {
            report.ok = false;
            report.p = p;
            report.required = required;
            report.actual = actual;
        }
    }
    return report;
}

}  // namespace hg
