#pragma once

#include <cstddef>
#include <vector>

#include "hg/padic.hpp"

namespace hg {

// Parameter tuples (alpha, beta). Invariant: no entry is a nonpositive
// integer, so rising factorials of entries never vanish.
class ParamPair {
  public:
    ParamPair(std::vector<Rat> alpha, std::vector<Rat> beta);

    const std::vector<Rat>& alpha() const { return alpha_; }
    const std::vector<Rat>& beta() const { return beta_; }
    std::size_t r() const { return alpha_.size(); }
    std::size_t s() const { return beta_.size(); }

    // Least common multiple of all entry denominators.
    const Int& d() const { return d_; }

    // #(p-integral alpha entries) - #(p-integral beta entries).
    long lambda(const Int& p) const;

    // Number of entries (both tuples) whose denominator is divisible by 4.
    long mfrak() const;

    bool beta_integral() const;
    bool entries_unit_interval() const;  // all entries in (0, 1]

    ParamPair normalized() const;              // frac_rep applied entrywise
    ParamPair multiple(const Int& a) const;    // frac_rep(a * entry) entrywise

    // Residues 1 <= a <= d with gcd(a, d) = 1.
    std::vector<Int> coprime_residues() const;

    // The normalized tuples share no entry (as multisets).
    bool normalized_disjoint() const;

    Int max_denominator() const;

    // alpha entries followed by beta entries.
    std::vector<Rat> all_entries() const;

  private:
    std::vector<Rat> alpha_, beta_;
    Int d_;
};

}  // namespace hg
