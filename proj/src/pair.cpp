#include "hg/pair.hpp"

#include <algorithm>
#include <stdexcept>

namespace hg {

ParamPair::ParamPair(std::vector<Rat> alpha, std::vector<Rat> beta)
    : alpha_(std::move(alpha)), beta_(std::move(beta)), d_(1) {
    if (alpha_.empty() || beta_.empty()) {
        throw std::invalid_argument("parameter tuples must be nonempty");
    }
    for (const Rat& x : all_entries()) {
        if (is_integer(x) && x <= 0) {
            throw std::invalid_argument("parameter " + rat_str(x) + " is a nonpositive integer");
        }
        d_ = lcm_int(d_, den(x));
    }
}

long ParamPair::lambda(const Int& p) const {
    long count = 0;
    for (const Rat& x : alpha_) count += p_integral(x, p) ? 1 : 0;
    for (const Rat& x : beta_) count -= p_integral(x, p) ? 1 : 0;
    return count;
}

long ParamPair::mfrak() const {
    long count = 0;
    for (const Rat& x : all_entries()) {
        if (mpz_divisible_ui_p(den(x).get_mpz_t(), 4)) ++count;
    }
    return count;
}

bool ParamPair::beta_integral() const {
    return std::all_of(beta_.begin(), beta_.end(), [](const Rat& x) { return is_integer(x); });
}

bool ParamPair::entries_unit_interval() const {
    for (const Rat& x : all_entries()) {
        if (x <= 0 || x > 1) return false;
    }
    return true;
}

ParamPair ParamPair::normalized() const { return multiple(1); }

ParamPair ParamPair::multiple(const Int& a) const {
    std::vector<Rat> na, nb;
    na.reserve(alpha_.size());
    nb.reserve(beta_.size());
    for (const Rat& x : alpha_) na.push_back(frac_rep(a * x));
    for (const Rat& x : beta_) nb.push_back(frac_rep(a * x));
    return ParamPair(std::move(na), std::move(nb));
}

std::vector<Int> ParamPair::coprime_residues() const {
    std::vector<Int> out;
    for (Int a = 1; a <= d_; ++a) {
        if (gcd_int(a, d_) == 1) out.push_back(a);
    }
    return out;
}

bool ParamPair::normalized_disjoint() const {
    ParamPair n = normalized();
    std::vector<Rat> a = n.alpha();
    for (const Rat& b : n.beta()) {
        auto it = std::find(a.begin(), a.end(), b);
        if (it != a.end()) return false;
    }
    return true;
}

Int ParamPair::max_denominator() const {
    Int m = 1;
    for (const Rat& x : all_entries()) m = std::max(m, den(x));
    return m;
}

std::vector<Rat> ParamPair::all_entries() const {
    std::vector<Rat> out = alpha_;
    out.insert(out.end(), beta_.begin(), beta_.end());
    return out;
}

}  // namespace hg
