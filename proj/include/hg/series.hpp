#pragma once

#include <cstddef>
#include <optional>
#include <vector>

#include "hg/pair.hpp"

namespace hg {

// Truncated power series over the rationals: coefficients for z^0 .. z^N.
// Arithmetic truncates to the smaller operand order and never extends it.
class Series {
  public:
    explicit Series(std::size_t order) : c_(order + 1, Rat(0)) {}
    static Series constant(const Rat& v, std::size_t order);

    std::size_t order() const { return c_.size() - 1; }
    const Rat& operator[](std::size_t n) const { return c_[n]; }
    void set(std::size_t n, const Rat& v) { c_[n] = v; }

    Series truncated(std::size_t new_order) const;  // new_order <= order()

    friend Series operator+(const Series& a, const Series& b);
    friend Series operator-(const Series& a, const Series& b);
    friend Series operator*(const Series& a, const Series& b);
    friend Series operator/(const Series& a, const Series& b);  // b unit
    Series operator-() const;

    Series& operator+=(const Series& b) { return *this = *this + b; }
    Series& operator-=(const Series& b) { return *this = *this - b; }

    Series inverse() const;  // constant term must be nonzero
    Series scaled_arg(const Rat& s) const;        // z -> s*z
    Series scaled(const Rat& c) const;            // multiply by the constant c
    Series compose_power(unsigned long k) const;  // z -> z^k, same order
    Series pow_u(unsigned long k) const;

  private:
    std::vector<Rat> c_;
};

Series series_exp(const Series& s);  // constant term must be 0
Series series_log(const Series& s);  // constant term must be 1

// v-th root via exp(log(s)/v); constant term must be 1, v >= 1.
Series series_root(const Series& s, const Int& v);

// Compositional inverse: q(0) = 0, q'(0) != 0; returns J with J(q(w)) = w.
Series lagrange_inverse(const Series& q);

// prod (alpha_i)_n / prod (beta_j)_n, exact.
Rat pochhammer_ratio(const ParamPair& pr, unsigned long n);

// Coefficient n: scale^n * pochhammer_ratio(n).
Series f_series(const ParamPair& pr, const Rat& scale, std::size_t order);

// Coefficient n: scale^n * pochhammer_ratio(n) * (sum H_{alpha_i}(n) - sum H_{beta_j}(n))
// with H_x(n) = sum_{k<n} 1/(x+k); constant term 0.
Series g_series(const ParamPair& pr, const Rat& scale, std::size_t order);

Series gf_series(const ParamPair& pr, const Rat& scale, std::size_t order);  // G/F

// Unit series q(scale*z)/(scale*z) = exp(G/F at scale*z).
Series q_coordinate(const ParamPair& pr, const Rat& scale, std::size_t order);

// S at scale*z: sum over residues a coprime to d of (G/F) of the a-multiple
// pair, evaluated at scale*z. Requires r = s.
Series s_series(const ParamPair& pr, const Rat& scale, std::size_t order);

// Rescaled compositional inverse of the q-coordinate: coefficients of the
// series Z with Z(scale*w) = scale * J(w), J the inverse of q(scale*z)/scale.
Series mirror_map(const ParamPair& pr, const Rat& scale, std::size_t order);

struct IntegralityVerdict {
    bool integral = true;
    long first_bad_index = -1;
    Rat first_bad_value;
    long valuation = 0;  // valuation of the bad coefficient when p was given
    std::size_t order_checked = 0;
};

// Without p: first coefficient with nonunit denominator. With p: first
// coefficient of negative p-adic valuation.
IntegralityVerdict integrality_scan(const Series& s);
IntegralityVerdict integrality_scan_p(const Series& s, const Int& p);

struct PositivityReport {
    bool positive = true;
    Int witness_a;
    long witness_index = -1;
    Rat witness_value;
};

// Coefficients 1..order of the unit q-series of every a-multiple pair are
// positive. Requires christol_ni_check (the nonnegativity hypothesis).
PositivityReport positivity_scan(const ParamPair& pr, std::size_t order);

struct DworkLemmaReport {
    bool ok = true;
    long witness_index = -1;
    Rat witness_value;
};

// F(scale * z^p) / F(scale * z)^p = 1 mod p*z, checked to the given order.
DworkLemmaReport dieudonne_dwork_check(const ParamPair& pr, const Rat& scale, const Int& p,
                                       std::size_t order);

// Harmonic difference sum H-term of g_series at index n for the pair itself.
Rat harmonic_term(const ParamPair& pr, unsigned long n);

// True when some beta entry among positions 1..s-1 is integral (the log
// solution criterion for the underlying operator).
bool has_log_solution(const ParamPair& pr);

}  // namespace hg
