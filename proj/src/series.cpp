#include "hg/series.hpp"

#include <algorithm>
#include <stdexcept>

#include "hg/order.hpp"

namespace hg {

Series Series::constant(const Rat& v, std::size_t order) {
    Series s(order);
    s.set(0, v);
    return s;
}

Series Series::truncated(std::size_t new_order) const {
    if (new_order > order()) throw std::invalid_argument("truncation cannot extend a series");
    Series out(new_order);
    for (std::size_t n = 0; n <= new_order; ++n) out.c_[n] = c_[n];
    return out;
}

Series operator+(const Series& a, const Series& b) {
    Series out(std::min(a.order(), b.order()));
    for (std::size_t n = 0; n <= out.order(); ++n) out.c_[n] = a.c_[n] + b.c_[n];
    return out;
}

Series operator-(const Series& a, const Series& b) {
    Series out(std::min(a.order(), b.order()));
    for (std::size_t n = 0; n <= out.order(); ++n) out.c_[n] = a.c_[n] - b.c_[n];
    return out;
}

Series Series::operator-() const {
    Series out(order());
    for (std::size_t n = 0; n <= order(); ++n) out.c_[n] = -c_[n];
    return out;
}

Series operator*(const Series& a, const Series& b) {
    Series out(std::min(a.order(), b.order()));
    for (std::size_t n = 0; n <= out.order(); ++n) {
        Rat acc(0);
        for (std::size_t k = 0; k <= n; ++k) acc += a.c_[k] * b.c_[n - k];
        out.c_[n] = acc;
    }
    return out;
}

Series Series::inverse() const {
    if (c_[0] == 0) throw std::domain_error("series inverse requires a nonzero constant term");
    Series out(order());
    out.c_[0] = 1 / c_[0];
    for (std::size_t n = 1; n <= order(); ++n) {
        Rat acc(0);
        for (std::size_t k = 1; k <= n; ++k) acc += c_[k] * out.c_[n - k];
        out.c_[n] = -acc / c_[0];
    }
    return out;
}

Series operator/(const Series& a, const Series& b) {
    if (b[0] == 0) throw std::domain_error("series division requires a unit denominator");
    Series out(std::min(a.order(), b.order()));
    for (std::size_t n = 0; n <= out.order(); ++n) {
        Rat acc = a[n];
        for (std::size_t k = 1; k <= n; ++k) acc -= b[k] * out.c_[n - k];
        out.c_[n] = acc / b[0];
    }
    return out;
}

Series Series::scaled_arg(const Rat& s) const {
    Series out(order());
    Rat power(1);
    for (std::size_t n = 0; n <= order(); ++n) {
        out.c_[n] = c_[n] * power;
        power *= s;
    }
    return out;
}

Series Series::scaled(const Rat& c) const {
    Series out(order());
    for (std::size_t n = 0; n <= order(); ++n) out.c_[n] = c_[n] * c;
    return out;
}

Series Series::compose_power(unsigned long k) const {
    if (k == 0) throw std::invalid_argument("compose_power requires k >= 1");
    Series out(order());
    for (std::size_t n = 0; n <= order(); ++n) {
        if (n % k == 0) out.c_[n] = c_[n / k];
    }
    return out;
}

Series Series::pow_u(unsigned long k) const {
    Series acc = Series::constant(Rat(1), order());
    for (unsigned long i = 0; i < k; ++i) acc = acc * *this;
    return acc;
}

Series series_exp(const Series& s) {
    if (s[0] != 0) throw std::domain_error("series_exp requires constant term 0");
    Series out(s.order());
    out.set(0, Rat(1));
    for (std::size_t n = 1; n <= s.order(); ++n) {
        Rat acc(0);
        for (std::size_t k = 1; k <= n; ++k) acc += Rat(k) * s[k] * out[n - k];
        out.set(n, acc / Rat(n));
    }
    return out;
}

Series series_log(const Series& s) {
    if (s[0] != 1) throw std::domain_error("series_log requires constant term 1");
    Series out(s.order());
    for (std::size_t n = 1; n <= s.order(); ++n) {
        Rat acc = Rat(n) * s[n];
        for (std::size_t k = 1; k < n; ++k) acc -= Rat(k) * out[k] * s[n - k];
        out.set(n, acc / Rat(n));
    }
    return out;
}

Series series_root(const Series& s, const Int& v) {
    if (v < 1) throw std::domain_error("series_root requires v >= 1");
    if (s[0] != 1) throw std::domain_error("series_root requires constant term 1");
    Series lg = series_log(s);
    return series_exp(lg.scaled(Rat(Int(1), v)));
}

Series lagrange_inverse(const Series& q) {
    if (q[0] != 0 || q.order() < 1 || q[1] == 0) {
        throw std::domain_error("lagrange_inverse requires q(0) = 0 and q'(0) != 0");
    }
    const std::size_t order = q.order();
    Series out(order);
    // powers[n] = q^n truncated; solve sum_n J_n (q^n)_m = [m == 1].
    std::vector<Series> powers;
    powers.push_back(Series::constant(Rat(1), order));
    for (std::size_t n = 1; n <= order; ++n) powers.push_back(powers.back() * q);
    for (std::size_t m = 1; m <= order; ++m) {
        Rat acc = m == 1 ? Rat(1) : Rat(0);
        for (std::size_t n = 1; n < m; ++n) acc -= out[n] * powers[n][m];
        out.set(m, acc / powers[m][m]);
    }
    return out;
}

Rat pochhammer_ratio(const ParamPair& pr, unsigned long n) {
    Rat acc(1);
    for (unsigned long k = 0; k < n; ++k) {
        for (const Rat& x : pr.alpha()) acc *= x + k;
        for (const Rat& x : pr.beta()) acc /= x + k;
    }
    return acc;
}

namespace {

// Shared incremental computation of F and G coefficients.
void hypergeometric_coefficients(const ParamPair& pr, const Rat& scale, std::size_t order,
                                 Series* f_out, Series* g_out) {
    Rat ratio(1), harmonic(0), power(1);
    for (std::size_t n = 0; n <= order; ++n) {
        if (f_out) f_out->set(n, power * ratio);
        if (g_out) g_out->set(n, power * ratio * harmonic);
        Rat step(1);
        for (const Rat& x : pr.alpha()) {
            step *= x + static_cast<unsigned long>(n);
            harmonic += 1 / (x + static_cast<unsigned long>(n));
        }
        for (const Rat& x : pr.beta()) {
            step /= x + static_cast<unsigned long>(n);
            harmonic -= 1 / (x + static_cast<unsigned long>(n));
        }
        ratio *= step;
        power *= scale;
    }
}

}  // namespace

Series f_series(const ParamPair& pr, const Rat& scale, std::size_t order) {
    Series f(order);
    hypergeometric_coefficients(pr, scale, order, &f, nullptr);
    return f;
}

Series g_series(const ParamPair& pr, const Rat& scale, std::size_t order) {
    Series g(order);
    hypergeometric_coefficients(pr, scale, order, nullptr, &g);
    return g;
}

Series gf_series(const ParamPair& pr, const Rat& scale, std::size_t order) {
    Series f(order), g(order);
    hypergeometric_coefficients(pr, scale, order, &f, &g);
    return g / f;
}

Series q_coordinate(const ParamPair& pr, const Rat& scale, std::size_t order) {
    return series_exp(gf_series(pr, scale, order));
}

Series s_series(const ParamPair& pr, const Rat& scale, std::size_t order) {
    if (pr.r() != pr.s()) throw std::domain_error("s_series requires r = s");
    Series total(order);
    for (const Int& a : pr.coprime_residues()) {
        total += gf_series(pr.multiple(a), scale, order);
    }
    return total;
}

Series mirror_map(const ParamPair& pr, const Rat& scale, std::size_t order) {
    if (order < 1) throw std::invalid_argument("mirror_map requires order >= 1");
    Series unit = q_coordinate(pr, scale, order - 1);
    Series phi(order);
    for (std::size_t n = 1; n <= order; ++n) phi.set(n, unit[n - 1]);
    return lagrange_inverse(phi).scaled(scale);
}

IntegralityVerdict integrality_scan(const Series& s) {
    IntegralityVerdict verdict;
    verdict.order_checked = s.order();
    for (std::size_t n = 0; n <= s.order(); ++n) {
        if (!is_integer(s[n])) {
            verdict.integral = false;
            verdict.first_bad_index = static_cast<long>(n);
            verdict.first_bad_value = s[n];
            return verdict;
        }
    }
    return verdict;
}

IntegralityVerdict integrality_scan_p(const Series& s, const Int& p) {
    IntegralityVerdict verdict;
    verdict.order_checked = s.order();
    for (std::size_t n = 0; n <= s.order(); ++n) {
        Val v = vp(s[n], p);
        if (v.finite && v.v < 0) {
            verdict.integral = false;
            verdict.first_bad_index = static_cast<long>(n);
            verdict.first_bad_value = s[n];
            verdict.valuation = v.v;
            return verdict;
        }
    }
    return verdict;
}

PositivityReport positivity_scan(const ParamPair& pr, std::size_t order) {
    if (!christol_ni_check(pr).ok) {
        throw std::domain_error("positivity_scan requires the nonnegativity condition");
    }
    PositivityReport report;
    for (const Int& a : pr.coprime_residues()) {
        Series unit = q_coordinate(pr.multiple(a), Rat(1), order);
        for (std::size_t n = 1; n <= order; ++n) {
            if (unit[n] <= 0) {
                return {false, a, static_cast<long>(n), unit[n]};
            }
        }
    }
    return report;
}

DworkLemmaReport dieudonne_dwork_check(const ParamPair& pr, const Rat& scale, const Int& p,
                                       std::size_t order) {
    Series f = f_series(pr, scale, order);
    Series ratio = f.compose_power(p.get_ui()) / f.pow_u(p.get_ui());
    for (std::size_t n = 1; n <= order; ++n) {
        Val v = vp(ratio[n], p);
        if (!v.at_least(1)) {
            return {false, static_cast<long>(n), ratio[n]};
        }
    }
    return {};
}

Rat harmonic_term(const ParamPair& pr, unsigned long n) {
    Rat acc(0);
    for (const Rat& x : pr.alpha()) {
        for (unsigned long k = 0; k < n; ++k) acc += 1 / (x + k);
    }
    for (const Rat& x : pr.beta()) {
        for (unsigned long k = 0; k < n; ++k) acc -= 1 / (x + k);
    }
    return acc;
}

bool has_log_solution(const ParamPair& pr) {
    for (std::size_t j = 0; j + 1 < pr.s(); ++j) {
        if (is_integer(pr.beta()[j])) return true;
    }
    return false;
}

}  // namespace hg
