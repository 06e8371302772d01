#include "hg/congruence.hpp"

#include <algorithm>
#include <future>
#include <memory>
#include <mutex>
#include <stdexcept>
#include <thread>

namespace hg {

Rat s_sum(const SeqProvider& A, long a, long K, int s, const Int& p, long m, int r) {
    if (a < 0 || s < 0 || m < 0) throw std::invalid_argument("s_sum requires a, s, m >= 0");
    const long ps = to_long_checked(pow_int(p, static_cast<unsigned long>(s)));
    const long pl = to_long_checked(p);
    auto term = [&](int rr, long n) { return n < 0 ? Rat(0) : A(rr, n); };
    Rat total(0);
    for (long j = m * ps; j < (m + 1) * ps; ++j) {
        total += term(r, a + (K - j) * pl) * term(r + 1, j);
        total -= term(r + 1, K - j) * term(r, a + j * pl);
    }
    return total;
}

namespace {

struct GridPoint {
    int r, s;
    long a, K, m;
};

}  // namespace

CongruenceReport formal_congruence_check(const SeqProvider& A, const GProvider& gvp, const Int& p,
                                         const GridRanges& grid, unsigned threads) {
    std::vector<GridPoint> points;
    const long pl = to_long_checked(p);
    for (int r = 0; r <= grid.r_max; ++r) {
        for (int s = 0; s <= grid.s_max; ++s) {
            for (long a = 0; a < pl; ++a) {
                for (long K = 0; K <= grid.k_max; ++K) {
                    for (long m = 0; m <= grid.m_max; ++m) points.push_back({r, s, a, K, m});
                }
            }
        }
    }

    // Sequential warm-up so memoized providers are read-only afterwards.
    long n_top = (pl - 1) + grid.k_max * pl;
    n_top = std::max(n_top, (grid.m_max + 1) * to_long_checked(pow_int(p, grid.s_max)) - 1);
    for (int r = 0; r <= grid.r_max + 1; ++r) {
        for (long n = 0; n <= n_top; ++n) A(r, n);
    }
    for (int r = 0; r <= grid.r_max + grid.s_max + 1; ++r) {
        for (long m = 0; m <= grid.m_max; ++m) gvp(r, m);
    }

    auto evaluate = [&](const GridPoint& g, CongruenceReport& into) {
        Val gv = gvp(g.r + g.s + 1, g.m);
        if (!gv.finite) throw std::domain_error("exponent sequence must be nonzero");
        long required = g.s + 1 + gv.v;
        Val actual = vp(s_sum(A, g.a, g.K, g.s, p, g.m, g.r), p);
        ++into.points;
        if (actual.finite) {
            long slack = actual.v - required;
            if (!into.saw_finite || slack < into.min_slack_finite) into.min_slack_finite = slack;
            into.saw_finite = true;
        }
        if (!actual.at_least(required)) {
            into.ok = false;
            if (into.failures.size() < 64) {
                into.failures.push_back({g.r, g.s, g.a, g.K, g.m, required, actual});
            }
        }
    };

    CongruenceReport report;
    if (threads <= 1) {
        for (const GridPoint& g : points) evaluate(g, report);
        return report;
    }

    unsigned workers = std::min<unsigned>(threads, std::thread::hardware_concurrency());
    workers = std::max(workers, 1u);
    std::vector<std::future<CongruenceReport>> futures;
    std::size_t chunk = (points.size() + workers - 1) / workers;
    for (unsigned w = 0; w < workers; ++w) {
        std::size_t lo = w * chunk, hi = std::min(points.size(), lo + chunk);
        if (lo >= hi) break;
        futures.push_back(std::async(std::launch::async, [&, lo, hi] {
            CongruenceReport part;
            for (std::size_t i = lo; i < hi; ++i) evaluate(points[i], part);
            return part;
        }));
    }
    for (auto& f : futures) {
        CongruenceReport part = f.get();
        report.points += part.points;
        report.ok = report.ok && part.ok;
        if (part.saw_finite &&
            (!report.saw_finite || part.min_slack_finite < report.min_slack_finite)) {
            report.min_slack_finite = part.min_slack_finite;
        }
        report.saw_finite = report.saw_finite || part.saw_finite;
        report.failures.insert(report.failures.end(), part.failures.begin(), part.failures.end());
    }
    std::sort(report.failures.begin(), report.failures.end(), [](const auto& x, const auto& y) {
        return std::tie(x.r, x.s, x.a, x.K, x.m) < std::tie(y.r, y.s, y.a, y.K, y.m);
    });
    if (report.failures.size() > 64) report.failures.resize(64);
    return report;
}

bool ExceptionSequence::contains(int r, long n, int t) const {
    auto it = sets.find(r);
    if (it == sets.end()) return false;
    for (const auto& [nn, tt] : it->second) {
        if (nn == n && tt == t) return true;
    }
    return false;
}

std::vector<long> psi_set(const ExceptionSequence& N, int r, int s, const Int& p) {
    if (s < 0) throw std::invalid_argument("psi_set requires s >= 0");
    const long ps = to_long_checked(pow_int(p, static_cast<unsigned long>(s)));
    std::vector<long> out;
    for (long u = 0; u < ps; ++u) {
        bool excluded = false;
        for (int t = 1; t <= s && !excluded; ++t) {
            long block = to_long_checked(pow_int(p, static_cast<unsigned long>(s - t)));
            excluded = N.contains(r + s - t + 1, u / block, t);
        }
        if (!excluded) out.push_back(u);
    }
    return out;
}

ResidueFrame::ResidueFrame(const Int& p, const Int& d, const Int& b) : p_(p), d_(d), b_(b) {
    if (!is_prime(p)) throw std::domain_error("residue frame requires a prime p");
    Int rest = d;
    while (mpz_divisible_p(rest.get_mpz_t(), p.get_mpz_t())) {
        rest /= p;
        ++nu_;
    }
    D_ = rest;
    if (gcd_int(b_, D_) != 1) throw std::domain_error("residue b must be coprime to the p-free part");
    for (Int t = 1; t <= d_; ++t) {
        if (gcd_int(t, d_) == 1 && (t - b_) % D_ == 0) omega_.push_back(t);
    }
    Int expected = euler_phi(pow_int(p_, nu_));
    if (Int(static_cast<long>(omega_.size())) != expected) {
        throw std::logic_error("residue class has unexpected size");
    }
}

Int ResidueFrame::twist(const Int& t, unsigned long r) const {
    Int pnu = pow_int(p_, nu_);
    Int pr = 1;
    for (unsigned long i = 0; i < r; ++i) pr = (pr * p_) % (D_ == 1 ? Int(1) : D_);
    Int target_mod_D = D_ == 1 ? Int(0) : (t % D_) * inv_mod(pr, D_) % D_;
    Int out = crt2(t % pnu, pnu, target_mod_D, D_);
    if (out == 0) out = d_;
    return out;
}

HyperCongruenceInstance::HyperCongruenceInstance(const ParamPair& pr, const Int& p, const Int& b)
    : pair_(pr.normalized()),
      p_(p),
      frame_(p, pr.d(), b),
      c_prime_(c_prime(pr)),
      special_g_(pr.beta_integral() && mpz_divisible_p(pr.d().get_mpz_t(), p.get_mpz_t())) {}

Rat HyperCongruenceInstance::tau(unsigned long r, unsigned long ell) const {
    Rat best(1);
    bool found = false;
    for (const Rat& gamma : pair_.all_entries()) {
        if (!p_integral(gamma, p_)) continue;
        Rat value(1);
        if (!is_integer(gamma)) {
            const Int n = den(gamma);
            Int power;
            Int exp(r + ell);
            mpz_powm(power.get_mpz_t(), p_.get_mpz_t(), exp.get_mpz_t(), n.get_mpz_t());
            Int residue = (inv_mod(frame_.b(), n) * power) % n;
            value = dwork_by_residue(gamma, residue);
        }
        if (!found || value < best) best = value;
        found = true;
    }
    return best;
}

long HyperCongruenceInstance::mu(unsigned long r, long m) const {
    if (m <= 0) return 0;
    Int n_max = 1;
    for (const Rat& gamma : pair_.all_entries()) {
        if (p_integral(gamma, p_) && den(gamma) > n_max) n_max = den(gamma);
    }
    long total = 0;
    Int q = p_;
    for (unsigned long ell = 1; q <= n_max * m; ++ell, q *= p_) {
        Rat x(Int(m) % q, q);
        x.canonicalize();
        if (x >= tau(r, ell)) ++total;
    }
    return total;
}

long HyperCongruenceInstance::lambda_valuation(unsigned long r, long m) const {
    // Base factor: core constant times denominators of non-p-integral
    // entries moved across the fraction.
    Rat base = eisenstein_core(pair_);
    for (const Rat& x : pair_.beta()) {
        if (!p_integral(x, p_)) base *= Rat(den(x), Int(1));
    }
    for (const Rat& x : pair_.alpha()) {
        if (!p_integral(x, p_)) base /= Rat(den(x), Int(1));
    }
    long total = static_cast<long>(m) * vp_nonzero(base, p_);
    Int tw = frame_.twist(frame_.omega().front(), r);
    for (long k = 0; k < m; ++k) {
        for (const Rat& x : pair_.alpha()) {
            if (p_integral(x, p_)) total += vp_nonzero(frac_rep(tw * x) + static_cast<unsigned long>(k), p_);
        }
        for (const Rat& x : pair_.beta()) {
            if (p_integral(x, p_)) total -= vp_nonzero(frac_rep(tw * x) + static_cast<unsigned long>(k), p_);
        }
    }
    return total;
}

Val HyperCongruenceInstance::g_valuation(int r, long m) const {
    if (r < 0 || m < 0) throw std::invalid_argument("g_valuation requires r, m >= 0");
    if (special_g_) {
        if (m == 0) return Val::fin(0);
        return Val::fin(lambda_valuation(static_cast<unsigned long>(r), m) - 1);
    }
    return Val::fin(mu(static_cast<unsigned long>(r), m));
}

Rat HyperCongruenceInstance::q_term(const Int& t, unsigned long r, long n) const {
    if (n < 0) return Rat(0);
    Int tw = frame_.twist(t, r);
    return pow_rat(c_prime_, n) * pochhammer_ratio(pair_.multiple(tw), static_cast<unsigned long>(n));
}

SeqProvider HyperCongruenceInstance::provider(const Int& t) const {
    struct Cache {
        std::mutex lock;
        std::map<int, std::vector<Rat>> rows;
    };
    auto cache = std::make_shared<Cache>();
    ParamPair base = pair_;
    ResidueFrame frame = frame_;
    Rat scale = c_prime_;
    Int t_copy = t;
    return [cache, base, frame, scale, t_copy](int r, long n) -> Rat {
        if (n < 0) return Rat(0);
        std::lock_guard<std::mutex> guard(cache->lock);
        std::vector<Rat>& row = cache->rows[r];
        if (row.empty()) row.push_back(Rat(1));
        if (row.size() <= static_cast<std::size_t>(n)) {
            ParamPair twisted = base.multiple(frame.twist(t_copy, static_cast<unsigned long>(r)));
            while (row.size() <= static_cast<std::size_t>(n)) {
                unsigned long k = row.size() - 1;
                Rat step = scale;
                for (const Rat& x : twisted.alpha()) step *= x + k;
                for (const Rat& x : twisted.beta()) step /= x + k;
                row.push_back(row.back() * step);
            }
        }
        return row[static_cast<std::size_t>(n)];
    };
}

ExceptionSequence HyperCongruenceInstance::exception_sequence(int r_max, int t_max) const {
    ExceptionSequence seq;
    for (int r = 0; r <= r_max; ++r) {
        std::vector<std::pair<long, int>> entries;
        for (int t = 1; t <= t_max; ++t) {
            long pt = to_long_checked(pow_int(p_, static_cast<unsigned long>(t)));
            for (long n = 0; n < pt; ++n) {
                bool in_set = true;
                Int q = 1;
                for (int ell = 1; ell <= t && in_set; ++ell) {
                    q *= p_;
                    Rat x(Int(n) % q, q);
                    x.canonicalize();
                    in_set = x >= tau(static_cast<unsigned long>(r), static_cast<unsigned long>(ell));
                }
                if (in_set) entries.emplace_back(n, t);
            }
        }
        seq.sets[r] = std::move(entries);
    }
    return seq;
}

namespace {

// R series for one residue t: coefficient k of
// (1/p) (G/F)_twist(C' z^p) - (G/F)_t(C' z).
Series expansion_residual(const ParamPair& pr, const ResidueFrame& frame, const Rat& scale,
                          const Int& t, std::size_t order, const Int& p) {
    Series direct = gf_series(pr.multiple(t), scale, order);
    Series twisted = gf_series(pr.multiple(frame.twist(t, 1)), scale, order);
    Series lifted = twisted.compose_power(p.get_ui());
    return lifted.scaled(Rat(Int(1), p)) - direct;
}

}  // namespace

Theorem2Report theorem2_verify(const ParamPair& pr, const Int& p, const Int& b,
                               const std::vector<Int>& t_samples, const Theorem2Options& opt) {
    if (!pr.normalized_disjoint()) {
        throw std::domain_error("expansion check requires disjoint normalized tuples");
    }
    Theorem2Report report;
    report.disjoint = true;
    report.h_ok = h_check(pr).ok;

    ResidueFrame frame(p, pr.d(), b);
    Rat scale = c_prime(pr);

    const bool p_divides_d = mpz_divisible_p(pr.d().get_mpz_t(), p.get_mpz_t());
    long lam = pr.lambda(p);
    long pm1 = to_long_checked(p - 1);
    if (!p_divides_d) {
        report.case_id = 0;
        report.value_floor = 0;
        report.depth_offset = 0;
    } else if (pr.beta_integral()) {
        report.case_id = 1;
        report.value_floor = -1 - floor_div(lam, pm1);
        report.depth_offset = 0;
    } else if (lam % pm1 != 0 || (p == 2 && pr.mfrak() % 2 == 1)) {
        report.case_id = 2;
        report.value_floor = 0;
        report.depth_offset = 0;
    } else {
        report.case_id = 3;
        report.value_floor = -1;
        report.depth_offset = -1;
    }
    report.value_floors_asserted = report.h_ok;
    if (!report.h_ok) {
        report.notes.push_back("window condition fails: value floors reported, not asserted");
    }
    if (p == 2) {
        report.notes.push_back("regularity of 2 in the coefficient ring is automatic for "
                               "rational sequences");
    }

    std::vector<Int> samples = t_samples;
    if (samples.empty()) samples = frame.omega();
    for (const Int& t : samples) {
        if (std::find(frame.omega().begin(), frame.omega().end(), t) == frame.omega().end()) {
            throw std::domain_error("sample residue not in the residue class");
        }
    }

    std::map<Int, Series> residuals;
    for (const Int& t : samples) {
        residuals.emplace(t, expansion_residual(pr, frame, scale, t, opt.k_max, p));
    }

    for (const Int& t : samples) {
        const Series& R = residuals.at(t);
        ValueCheck check;
        check.t = t;
        check.infinite = true;
        for (std::size_t k = 0; k <= R.order(); ++k) {
            Val v = vp(R[k], p);
            if (!v.finite) continue;
            if (check.infinite || v.v < check.min_val) check.min_val = v.v;
            check.infinite = false;
            if (v.v < report.value_floor && check.ok) {
                check.ok = false;
                check.k = static_cast<long>(k);
            }
        }
        if (report.value_floors_asserted && !check.ok) report.ok = false;
        report.value_checks.push_back(check);
    }

    const long base = report.case_id == 1 ? report.value_floor : 0;
    for (std::size_t i = 0; i < samples.size(); ++i) {
        for (std::size_t j = i + 1; j < samples.size(); ++j) {
            const Series& r1 = residuals.at(samples[i]);
            const Series& r2 = residuals.at(samples[j]);
            for (long m = 1; m <= opt.mod_depth; ++m) {
                Int pm = pow_int(p, static_cast<unsigned long>(m));
                if ((samples[i] - samples[j]) % pm != 0) continue;
                DepthCheck check;
                check.t1 = samples[i];
                check.t2 = samples[j];
                check.m = m;
                check.required = base + m + (report.case_id == 3 ? -1 : 0);
                check.infinite = true;
                for (std::size_t k = 0; k <= std::min(r1.order(), r2.order()); ++k) {
                    Val v = vp(r1[k] - r2[k], p);
                    if (!v.finite) continue;
                    if (check.infinite || v.v < check.achieved) check.achieved = v.v;
                    check.infinite = false;
                }
                if (!check.infinite) {
                    check.ok = check.achieved >= check.required;
                    check.holds_full = check.achieved >= base + m;
                    check.holds_relaxed = check.achieved >= base + m - 1;
                }
                if (!check.ok) report.ok = false;
                report.depth_checks.push_back(check);
            }
        }
    }
    return report;
}

CertReport criterion_full(const ParamPair& pr, std::size_t order) {
    if (!pr.normalized_disjoint()) {
        throw std::domain_error("operator reducible: normalized tuples intersect");
    }
    CertReport report;
    report.alpha = pr.alpha();
    report.beta = pr.beta();
    report.order = order;

    OrderWitness christol = christol_ni_check(pr);
    report.christol = christol;
    report.f_n_integral = christol.ok;
    report.r_eq_s = pr.r() == pr.s();
    report.h = h_check(pr);
    report.h_holds = report.h.ok;
    report.sheet = constant_sheet(pr);

    ParamPair norm = pr.normalized();
    if (norm.alpha() == std::vector<Rat>{Rat(1, 2)} && norm.beta() == std::vector<Rat>{Rat(1)}) {
        report.structural = StructuralCase::kHalfPair;
    } else {
        long unit_entries = 0;
        for (const Rat& x : norm.beta()) unit_entries += x == 1 ? 1 : 0;
        if (pr.s() >= 2 && unit_entries >= 2) report.structural = StructuralCase::kTwoUnitEntries;
    }

    if (!report.f_n_integral) {
        report.q_n_integral = false;
        return report;
    }

    const std::size_t decide = pr.r() * pr.r();
    const std::size_t cross = 3 * decide;
    report.q_identity.decided_at = decide;
    report.q_identity.cross_checked_at = cross;
    Series f_base = f_series(pr, Rat(1), cross);
    Series g_base = g_series(pr, Rat(1), cross);
    for (const Int& a : pr.coprime_residues()) {
        ParamPair mult = pr.multiple(a);
        Series lhs = f_base * g_series(mult, Rat(1), cross);
        Series rhs = f_series(mult, Rat(1), cross) * g_base;
        long first_diff = -1;
        for (std::size_t n = 0; n <= cross; ++n) {
            if (lhs[n] != rhs[n]) {
                first_diff = static_cast<long>(n);
                break;
            }
        }
        bool decided_equal = first_diff < 0 || static_cast<std::size_t>(first_diff) > decide;
        bool cross_equal = first_diff < 0;
        if (decided_equal != cross_equal) report.q_identity.crosscheck_consistent = false;
        if (!cross_equal) {
            report.q_identity.holds = false;
            report.q_identity.witness_a = a;
            report.q_identity.witness_index = first_diff;
            report.q_identity.lhs = lhs[static_cast<std::size_t>(first_diff)];
            report.q_identity.rhs = rhs[static_cast<std::size_t>(first_diff)];
            break;
        }
    }

    report.q_n_integral =
        report.f_n_integral && report.r_eq_s && report.h_holds && report.q_identity.holds;
    if (report.q_n_integral && report.sheet.c_prime) {
        report.q_scan = integrality_scan(q_coordinate(pr, *report.sheet.c_prime, order));
    }
    return report;
}

}  // namespace hg
