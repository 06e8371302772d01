#pragma once

#include <functional>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "hg/constants.hpp"
#include "hg/series.hpp"

namespace hg {

// A(r, n); callers must return 0 for n < 0 and should memoize.
using SeqProvider = std::function<Rat(int r, long n)>;

// v_p(g_r(m)); g maps into nonzero rationals, so values are finite.
using GProvider = std::function<Val(int r, long m)>;

// Windowed cross-sum
//   sum_{j = m*p^s}^{(m+1)*p^s - 1} [A_r(a+(K-j)p) A_{r+1}(j) - A_{r+1}(K-j) A_r(a+jp)]
// with A(n) = 0 for n < 0.
Rat s_sum(const SeqProvider& A, long a, long K, int s, const Int& p, long m, int r);

struct GridRanges {
    int r_max = 1;
    int s_max = 2;
    long k_max = 20;
    long m_max = 6;
};

struct CongruenceFailure {
    int r = 0;
    int s = 0;
    long a = 0;
    long K = 0;
    long m = 0;
    long required = 0;
    Val actual;
};

struct CongruenceReport {
    bool ok = true;
    long points = 0;
    long min_slack_finite = 0;  // min of (actual - required) over finite actuals
    bool saw_finite = false;
    std::vector<CongruenceFailure> failures;
};

// Asserts v_p(S_r(a, K, s, p, m)) >= s + 1 + v_p(g_{r+s+1}(m)) over the whole
// grid {0..r_max} x {0..s_max} x {0..p-1} x {0..k_max} x {0..m_max}.
// Failures are report entries, never exceptions. threads <= 1 runs serially.
CongruenceReport formal_congruence_check(const SeqProvider& A, const GProvider& gvp, const Int& p,
                                         const GridRanges& grid, unsigned threads = 1);

// Exception index sets N_r: per r, pairs (n, t) with 0 <= n < p^t.
struct ExceptionSequence {
    std::map<int, std::vector<std::pair<long, int>>> sets;
    bool contains(int r, long n, int t) const;
};

// All u in {0..p^s - 1} not of the form j + p^{s-t} * n with j < p^{s-t},
// t <= s and (n, t) in N_{r+s-t+1}. psi_set(N, r, 0, p) = {0}.
std::vector<long> psi_set(const ExceptionSequence& N, int r, int s, const Int& p);

// Residues modulo d = p^nu * D coprime to d and congruent to b modulo D,
// together with the twist t -> t^(r).
class ResidueFrame {
  public:
    ResidueFrame(const Int& p, const Int& d, const Int& b);
    const Int& p() const { return p_; }
    unsigned long nu() const { return nu_; }
    const Int& D() const { return D_; }
    const Int& b() const { return b_; }
    const Int& d() const { return d_; }
    const std::vector<Int>& omega() const { return omega_; }

    // Unique t' in {1..d} coprime to d with t' = t mod p^nu and
    // p^r * t' = t mod D.
    Int twist(const Int& t, unsigned long r) const;

  private:
    Int p_, d_, D_, b_;
    unsigned long nu_ = 0;
    std::vector<Int> omega_;
};

// Hypergeometric instantiation data for the windowed-sum congruences at a
// residue class b: sequences Q_{r,t}, the exception thresholds tau(r, ell),
// and the exponent sequence g_r.
class HyperCongruenceInstance {
  public:
    HyperCongruenceInstance(const ParamPair& pr, const Int& p, const Int& b);

    const ResidueFrame& frame() const { return frame_; }

    // tau(r, ell): least Dwork-iterate threshold over entries whose
    // denominator is coprime to p; 1 when only integral entries qualify.
    Rat tau(unsigned long r, unsigned long ell) const;

    // mu_r(m) = #{ell >= 1 : {m/p^ell} >= tau(r, ell)} (finite sum).
    long mu(unsigned long r, long m) const;

    // v_p(g_r(m)): mu-based, except when beta is integral and p | d, where
    // g_r(0) = 1 and g_r(m) = Lambda_r(m)/p for m >= 1.
    Val g_valuation(int r, long m) const;

    // v_p(Lambda_r(m)): valuation of the p-integral-part product sequence.
    long lambda_valuation(unsigned long r, long m) const;

    // Q_{r,t}(n) = C'^n * pochhammer_ratio of the twist-t^(r) multiple pair.
    Rat q_term(const Int& t, unsigned long r, long n) const;

    // Memoizing provider A(r, n) = Q_{r,t}(n) for fixed t in Omega_b.
    SeqProvider provider(const Int& t) const;

    // Exception sets up to t_max digits for r in [0, r_max].
    ExceptionSequence exception_sequence(int r_max, int t_max) const;

    const Rat& scale() const { return c_prime_; }

  private:
    ParamPair pair_;
    Int p_;
    ResidueFrame frame_;
    Rat c_prime_;
    bool special_g_;  // beta integral and p | d
};

struct DepthCheck {
    Int t1, t2;
    long m = 0;            // congruence depth of the pair of residues
    long required = 0;     // asserted lower bound on v_p of the difference
    long achieved = 0;     // min over k of v_p(R_k(t1) - R_k(t2)); huge when identical
    bool infinite = false; // differences all zero
    bool ok = true;
    bool holds_full = true;     // achieved >= m
    bool holds_relaxed = true;  // achieved >= m - 1
};

struct ValueCheck {
    Int t;
    long k = -1;       // offending index when !ok
    long min_val = 0;  // min over k of v_p(R_k(t))
    bool infinite = false;
    bool ok = true;
};

struct Theorem2Report {
    bool ok = true;              // all asserted checks hold
    bool h_ok = false;           // reported; value floors asserted only when true
    bool disjoint = false;
    int case_id = 0;             // 0: p coprime to d; 1..3: the three branch cases
    long value_floor = 0;        // asserted bound on v_p(R_k(t))
    long depth_offset = 0;       // 0 full depth, -1 relaxed
    bool value_floors_asserted = false;
    std::vector<ValueCheck> value_checks;
    std::vector<DepthCheck> depth_checks;
    std::vector<std::string> notes;
};

struct Theorem2Options {
    std::size_t k_max = 60;
    long mod_depth = 4;
};

// Desk-scale expansion check: with R_k(t) the k-th coefficient of
//   (1/p) * [ (G/F)_{twist pair}(C' z^p) - p (G/F)_{t pair}(C' z) ],
// verifies the branch value floor for each sampled t in Omega_b and the
// congruence v_p(R_k(t1) - R_k(t2)) >= m (or m-1) for t1 = t2 mod p^m.
// Empty t_samples means all of Omega_b. Requires disjoint normalized tuples;
// when h_check fails the value floors are reported but not asserted.
Theorem2Report theorem2_verify(const ParamPair& pr, const Int& p, const Int& b,
                               const std::vector<Int>& t_samples, const Theorem2Options& opt);

enum class StructuralCase {
    kNone,
    kHalfPair,        // normalized pair is ((1/2), (1))
    kTwoUnitEntries,  // s >= 2 and at least two normalized beta entries are 1
};

struct QIdentityCheck {
    bool holds = true;
    Int witness_a;
    long witness_index = -1;
    Rat lhs, rhs;
    std::size_t decided_at = 0;      // coefficients compared for the verdict
    std::size_t cross_checked_at = 0;
    bool crosscheck_consistent = true;
};

struct CertReport {
    std::vector<Rat> alpha, beta;
    bool f_n_integral = false;
    OrderWitness christol;
    bool r_eq_s = false;
    bool h_holds = false;
    OrderWitness h;
    QIdentityCheck q_identity;
    bool q_n_integral = false;  // the full verdict (trio of conditions)
    ConstantSheet sheet;
    StructuralCase structural = StructuralCase::kNone;
    std::optional<IntegralityVerdict> q_scan;  // q at C'z, when the verdict holds
    std::size_t order = 0;
};

// Full certification pipeline: Christol nonnegativity, r = s, the window
// condition, and the q-identity for every coprime residue (decided on r^2
// coefficients of the cross-multiplied forms, cross-checked at 3 r^2).
// Throws std::domain_error when the normalized tuples intersect.
CertReport criterion_full(const ParamPair& pr, std::size_t order);

}  // namespace hg
