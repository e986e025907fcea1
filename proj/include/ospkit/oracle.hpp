#pragma once

#include <algorithm>
#include <cstddef>
#include <sstream>
#include <string>
#include <vector>

#include "ospkit/charmult.hpp"
#include "ospkit/determinants.hpp"
#include "ospkit/errors.hpp"
#include "ospkit/qseries.hpp"
#include "ospkit/rootdata.hpp"
#include "ospkit/weight.hpp"
#include "ospkit/weyl.hpp"

namespace osp {

// Main theorem: the annihilator of the Verma module of highest weight
// lambda is generated by its intersection with the centre iff lambda+rho
// pairs nontrivially with every positive odd root, i.e. no coordinate of
// lambda+rho vanishes.
inline bool annihilator_centrally_generated(const RootSystem& rs, const Weight& lambda) {
    const Weight shifted = lambda + rs.rho;
    for (std::size_t i = 0; i < rs.rank; ++i)
        if (shifted[i] == 0) return false;
    return true;
}

// 1-based indices i with (lambda+rho, beta_i) = 0.
inline std::vector<std::size_t> vanishing_odd_pairings(const RootSystem& rs, const Weight& lambda) {
    std::vector<std::size_t> out;
    const Weight shifted = lambda + rs.rho;
    for (std::size_t i = 0; i < rs.rank; ++i)
        if (shifted[i] == 0) out.push_back(i + 1);
    return out;
}

// Democracy bound: when mu lies on an odd-root hyperplane, the corank of
// the PRV matrix at mu is at least the exotic exponent; zero bound otherwise.
inline Int corank_lower_bound(const RootSystem& rs, const Weight& lambda, const Weight& mu) {
    if (!is_dominant_integral(rs, lambda))
        throw DomainError("corank_lower_bound: lambda not in P+(pi): " + lambda.str());
    if (vanishing_odd_pairings(rs, mu).empty()) return 0;
    return exotic_exponent(rs, lambda, rs.odd_pos.front());
}

// Graded pieces of the associated graded harmonic space for l = 1:
// H^0 = V(0), H^1 = V(2 beta), H^n = V(2n beta) + V((2n-3) beta) for n >= 2.
inline std::vector<Weight> l1_h_decomposition(std::size_t n) {
    auto mb = [](long m) {
        Weight w(1);
        w[0] = m;
        return w;
    };
    if (n == 0) return {mb(0)};
    if (n == 1) return {mb(2)};
    return {mb(2 * static_cast<long>(n)), mb(2 * static_cast<long>(n) - 3)};
}

struct L1Annihilator {
    bool zero = true;        // annihilator inside the harmonic space is zero
    std::string description;
};

// For l = 1 the annihilator of the Verma module inside the harmonic space is
// zero unless the highest weight is -rho, where it is the sum of all odd
// simple modules.
inline L1Annihilator l1_annihilator_in_H(const Weight& mu) {
    if (mu.rank() != 1) throw DomainError("l1_annihilator_in_H: rank must be 1");
    if (mu[0] == Rat(-1, 2)) return {false, "direct sum of V((2k+1)beta) for all k >= 0"};
    return {true, "zero"};
}

// ---------------------------------------------------------------------------
// Verification suite
// ---------------------------------------------------------------------------

struct CheckResult {
    std::string name;
    std::string params;
    bool pass = false;
    std::string witness;  // empty on success, concrete counterexample on failure
};

struct VerificationReport {
    std::vector<CheckResult> checks;

    bool all_pass() const {
        for (const auto& c : checks)
            if (!c.pass) return false;
        return true;
    }
};

namespace verify {

inline std::vector<Weight> dominant_grid(const RootSystem& rs, long maxcoord) {
    std::vector<Weight> out;
    std::vector<long> c(rs.rank, 0);
    while (true) {
        Weight w(rs.rank);
        for (std::size_t i = 0; i < rs.rank; ++i) w[i] = c[i];
        out.push_back(w);
        // next weakly decreasing tuple with entries <= maxcoord
        std::size_t j = rs.rank;
        while (j-- > 0) {
            const long limit = j == 0 ? maxcoord : c[j - 1];
            if (c[j] < limit) {
                ++c[j];
                for (std::size_t m = j + 1; m < rs.rank; ++m) c[m] = 0;
                break;
            }
            if (j == 0) return out;
        }
    }
}

inline std::vector<Weight> half_integer_grid(std::size_t rank, long bound) {
    // all coordinates in {-bound, -bound+1/2, ..., bound}
    std::vector<Weight> out;
    const long steps = 4 * bound + 1;
    std::vector<long> idx(rank, 0);
    while (true) {
        Weight w(rank);
        for (std::size_t i = 0; i < rank; ++i) w[i] = Rat(idx[i] - 2 * bound, 2);
        out.push_back(w);
        std::size_t j = rank;
        bool done = true;
        while (j-- > 0) {
            if (idx[j] + 1 < steps) {
                ++idx[j];
                for (std::size_t m = j + 1; m < rank; ++m) idx[m] = 0;
                done = false;
                break;
            }
        }
        if (done) return out;
    }
}

// Identity behind the graded Hesselink formula:
//   J(e^rho prod_{Delta_0^+}(1-qe^{-alpha}) (1+q^{2l}e^{beta_1})
//     prod_{Delta_1^+ \ beta_1}(1+e^beta))
//   = J(e^rho) ch_q Lambda g_1 sum_W q^{l(w)}.
inline CheckResult check_hesfr_identity(const RootSystem& rs, std::size_t order,
                                        std::size_t cap = kDefaultWeylCap) {
    CheckResult res{"hesfr-identity",
                    "l=" + std::to_string(rs.rank) + " order=" + std::to_string(order), true, ""};
    const auto group = enumerate_weyl(rs.rank, cap);

    std::vector<ProductFactor> lhs_factors;
    for (const auto& alpha : rs.even_pos) lhs_factors.push_back({-1, -alpha, 1, false});
    lhs_factors.push_back({+1, rs.odd_pos.front(), 2 * rs.rank, false});
    for (std::size_t i = 1; i < rs.odd_pos.size(); ++i)
        lhs_factors.push_back({+1, rs.odd_pos[i], 0, false});
    QSeries lhs = expand_product(lhs_factors, order, rs.rank) *
                  QSeries::from_constant(order, GroupRingElement::monomial(rs.rho));
    lhs = j_apply(lhs, group);

    QSeries rhs = chq_lambda_g1(rs, order) *
                  QSeries::from_constant(order, j_apply(GroupRingElement::monomial(rs.rho), group));
    const QPoly wpoly = poincare_polynomial(rs.rank, cap);
    QSeries wseries(order);
    for (std::size_t r = 0; r < wpoly.size() && r <= order; ++r)
        if (wpoly[r] != 0) wseries.coeff(r) = GroupRingElement::monomial(Weight::zero(rs.rank), wpoly[r]);
    rhs = rhs * wseries;

    for (std::size_t r = 0; r <= order; ++r) {
        if (lhs.coeff(r) == rhs.coeff(r)) continue;
        res.pass = false;
        GroupRingElement diff = lhs.coeff(r) - rhs.coeff(r);
        const auto& [mu, c] = *diff.terms().begin();
        std::ostringstream os;
        os << "q^" << r << " coefficients differ at e(" << mu.str() << "): lhs="
           << lhs.coeff(r).coeff(mu) << " rhs=" << rhs.coeff(r).coeff(mu);
        res.witness = os.str();
        return res;
    }
    return res;
}

// Enumerated Poincare polynomial against the closed product, the sign/
// determinant/length consistency, and the rank-drop identity
// (1-q^{2l}) sum_{W_{l-1}} q^{l(w)} = (1-q) sum_{W_l} q^{l(w)}.
inline CheckResult check_weyl_poincare(std::size_t l, std::size_t cap = kDefaultWeylCap) {
    CheckResult res{"weyl-poincare", "l=" + std::to_string(l), true, ""};
    const auto group = enumerate_weyl(l, cap);
    if (group.size() != (std::size_t(1) << l) * [&] {
            std::size_t f = 1;
            for (std::size_t i = 2; i <= l; ++i) f *= i;
            return f;
        }()) {
        res.pass = false;
        res.witness = "group order mismatch: " + std::to_string(group.size());
        return res;
    }
    for (const auto& w : group) {
        const int expected = w.length() % 2 == 0 ? 1 : -1;
        if (w.sign() != expected || w.determinant() != expected) {
            res.pass = false;
            res.witness = "sign/det/length mismatch at " + w.str();
            return res;
        }
    }
    if (poincare_polynomial(l, cap) != poincare_closed_form(l)) {
        res.pass = false;
        res.witness = "enumerated Poincare polynomial differs from closed product at l=" +
                      std::to_string(l);
        return res;
    }
    // rank-drop identity; the rank-(l-1) group is trivial when l = 1
    QPoly sub = l >= 2 ? poincare_polynomial(l - 1, cap) : QPoly{Int(1)};
    QPoly left_factor(2 * l + 1);
    left_factor[0] = 1;
    left_factor[2 * l] = -1;
    QPoly right_factor{Int(1), Int(-1)};
    if (qpoly_mul(left_factor, sub) != qpoly_mul(right_factor, poincare_polynomial(l, cap))) {
        res.pass = false;
        res.witness = "rank-drop Poincare identity fails at l=" + std::to_string(l);
    }
    return res;
}

// Uniqueness and explicit form of the trivial-stabilizer shifts
// rho - r beta_1 + gamma_r = w_r rho, with sgn(w_r) = (-1)^r.
inline CheckResult check_heslem_table(std::size_t l) {
    CheckResult res{"heslem-gamma-table", "l=" + std::to_string(l), true, ""};
    const RootSystem rs = build_root_system(l);
    for (std::size_t r = 0; r <= 2 * l - 1; ++r) {
        std::vector<Weight> found;
        for (std::size_t mask = 0; mask < (std::size_t(1) << (l - 1)); ++mask) {
            Weight gamma(l);
            for (std::size_t i = 2; i <= l; ++i)
                if ((mask >> (i - 2)) & 1) gamma[i - 1] = 1;
            Weight candidate = rs.rho - Rat(static_cast<long>(r)) * Weight::basis_vector(l, 1) + gamma;
            if (stabilizer_trivial(candidate)) found.push_back(gamma);
        }
        if (found.size() != 1) {
            res.pass = false;
            res.witness = "r=" + std::to_string(r) + ": " + std::to_string(found.size()) +
                          " trivial-stabilizer gammas instead of 1";
            return res;
        }
        const auto [gamma, w] = heslem_data(l, r);
        if (found.front() != gamma) {
            res.pass = false;
            res.witness = "r=" + std::to_string(r) + ": brute-force gamma " + found.front().str() +
                          " differs from table " + gamma.str();
            return res;
        }
        if (w.sign() != (r % 2 == 0 ? 1 : -1)) {
            res.pass = false;
            res.witness = "r=" + std::to_string(r) + ": sgn(w_r) != (-1)^r";
            return res;
        }
    }
    return res;
}

// The two Hesselink routes agree as exact polynomials.
inline CheckResult check_hesselink_two_routes(const RootSystem& rs, long maxcoord,
                                              std::size_t order) {
    CheckResult res{"hesselink-two-routes",
                    "l=" + std::to_string(rs.rank) + " maxcoord=" + std::to_string(maxcoord) +
                        " order=" + std::to_string(order),
                    true, ""};
    for (const auto& lambda : dominant_grid(rs, maxcoord)) {
        const QPoly direct = hesselink_series(rs, lambda, order);
        const QPoly alt = hesselink_series_alt(rs, lambda, order);
        if (direct != alt) {
            res.pass = false;
            res.witness = "lambda=(" + lambda.str() + "): direct " + qpoly_str(direct) +
                          " vs alternating " + qpoly_str(alt);
            return res;
        }
    }
    return res;
}

// Coefficient sum of the stabilized Poincare series equals dim V(lambda)_0.
inline CheckResult check_hesselink_q1(const RootSystem& rs, long maxcoord) {
    CheckResult res{"hesselink-q1-total",
                    "l=" + std::to_string(rs.rank) + " maxcoord=" + std::to_string(maxcoord), true,
                    ""};
    for (const auto& lambda : dominant_grid(rs, maxcoord)) {
        const QPoly p = hesselink_series(rs, lambda, hesselink_stable_order(rs, lambda));
        Int sum = 0;
        for (const auto& c : p) sum += c;
        const Int dim0 = h_total_multiplicity(rs, lambda);
        if (sum != dim0) {
            res.pass = false;
            res.witness = "lambda=(" + lambda.str() + "): P_lambda(1)=" + sum.str() +
                          " but dim V(lambda)_0=" + dim0.str();
            return res;
        }
    }
    return res;
}

// l = 1 closed forms of the PRV determinants.
inline CheckResult check_l1_prv_closed_forms(std::size_t nmax) {
    CheckResult res{"l1-prv-closed-forms", "n=0.." + std::to_string(nmax), true, ""};
    const RootSystem rs = build_root_system(1);
    const Weight beta = rs.odd_pos.front();
    for (std::size_t n = 0; n <= nmax; ++n) {
        FactoredDeterminant even_expected{DeterminantKind::Prv, Rat(2 * (long)n) * beta, {}};
        for (std::size_t k = 0; k < n; ++k)
            even_expected.factors.push_back(
                {LinearFactor{beta, -Rat(static_cast<long>(k))}, 1, FactorFamily::OddStandard});
        const auto even_actual = prv_factorization(rs, Rat(2 * (long)n) * beta);
        if (!(even_actual == even_expected)) {
            res.pass = false;
            res.witness = "lambda=" + std::to_string(2 * n) + "b: got " + even_actual.str() +
                          ", expected " + even_expected.str();
            return res;
        }
        FactoredDeterminant odd_expected{DeterminantKind::Prv, Rat(2 * (long)n + 1) * beta, {}};
        odd_expected.factors.push_back({LinearFactor{beta, Rat(1, 2)}, 1, FactorFamily::Exotic});
        for (std::size_t k = 0; k <= n; ++k)
            odd_expected.factors.push_back(
                {LinearFactor{beta, -Rat(static_cast<long>(k))}, 1, FactorFamily::OddStandard});
        const auto odd_actual = prv_factorization(rs, Rat(2 * (long)n + 1) * beta);
        if (!(odd_actual == odd_expected)) {
            res.pass = false;
            res.witness = "lambda=" + std::to_string(2 * n + 1) + "b: got " + odd_actual.str() +
                          ", expected " + odd_expected.str();
            return res;
        }
    }
    return res;
}

// l = 1 graded decomposition: [H^n:V(2n)] = [H^n:V(2n-3)] = 1 and all other
// graded multiplicities vanish, for n in [2, nmax].
inline CheckResult check_l1_h_decomposition(std::size_t nmax) {
    CheckResult res{"l1-h-decomposition", "n=2.." + std::to_string(nmax), true, ""};
    const RootSystem rs = build_root_system(1);
    const long mmax = 2 * static_cast<long>(nmax) + 3;
    for (long m = 0; m <= mmax; ++m) {
        Weight lambda(1);
        lambda[0] = m;
        const QPoly p = hesselink_series(rs, lambda, nmax);
        for (std::size_t n = 2; n <= nmax; ++n) {
            const Int got = n < p.size() ? p[n] : Int(0);
            const bool expected_one = m == 2 * static_cast<long>(n) ||
                                      m == 2 * static_cast<long>(n) - 3;
            if (got != (expected_one ? 1 : 0)) {
                res.pass = false;
                res.witness = "[H^" + std::to_string(n) + ":V(" + std::to_string(m) +
                              ")] = " + got.str() + ", expected " + (expected_one ? "1" : "0");
                return res;
            }
        }
    }
    return res;
}

// Total degree of the PRV factorization exhausts the degree budget.
inline CheckResult check_prv_degree_saturation(const RootSystem& rs, long maxcoord) {
    CheckResult res{"prv-degree-saturation",
                    "l=" + std::to_string(rs.rank) + " maxcoord=" + std::to_string(maxcoord), true,
                    ""};
    for (const auto& lambda : dominant_grid(rs, maxcoord)) {
        const Int degree = prv_factorization(rs, lambda).total_degree();
        const Int budget = prv_degree_bound(rs, lambda);
        if (degree != budget) {
            res.pass = false;
            res.witness = "lambda=(" + lambda.str() + "): factored degree " + degree.str() +
                          " vs budget " + budget.str();
            return res;
        }
    }
    return res;
}

// Zero locus of the PRV determinants against the annihilator criterion, on
// the half-integer grid:
//   - on every odd hyperplane the omega_1 determinant vanishes;
//   - at simple Verma weights off the hyperplanes no tested determinant
//     vanishes;
//   - the central-generation oracle agrees with the hyperplane criterion.
inline CheckResult check_main_zero_locus(const RootSystem& rs, long grid_bound, long maxcoord) {
    CheckResult res{"main-zero-locus",
                    "l=" + std::to_string(rs.rank) + " grid=[-" + std::to_string(grid_bound) + "," +
                        std::to_string(grid_bound) + "] maxcoord=" + std::to_string(maxcoord),
                    true, ""};
    std::vector<FactoredDeterminant> dets;
    for (const auto& lambda : dominant_grid(rs, maxcoord)) dets.push_back(prv_factorization(rs, lambda));
    const auto omega1_det = prv_factorization(rs, rs.fundamental.front());

    for (const auto& mu : half_integer_grid(rs.rank, grid_bound)) {
        const bool on_hyperplane = !vanishing_odd_pairings(rs, mu).empty();
        if (annihilator_centrally_generated(rs, mu) == on_hyperplane) {
            res.pass = false;
            res.witness = "mu=(" + mu.str() + "): oracle disagrees with hyperplane criterion";
            return res;
        }
        if (on_hyperplane) {
            if (evaluate_factored(omega1_det, mu).vanishing_order == 0) {
                res.pass = false;
                res.witness = "mu=(" + mu.str() + "): PRV(omega_1) does not vanish on the hyperplane";
                return res;
            }
        } else if (verma_is_simple(rs, mu)) {
            for (std::size_t i = 0; i < dets.size(); ++i) {
                if (evaluate_factored(dets[i], mu).vanishing_order != 0) {
                    res.pass = false;
                    res.witness = "mu=(" + mu.str() + "): PRV(" + dets[i].label.str() +
                                  ") vanishes at a simple off-hyperplane weight";
                    return res;
                }
            }
        }
    }
    return res;
}

// DP partition functions against plain enumeration, for all cone elements
// up to the given height (plus a few points outside the cone).
inline CheckResult check_partition_oracles(const RootSystem& rs, long height_bound) {
    CheckResult res{"partition-oracles",
                    "l=" + std::to_string(rs.rank) + " height<=" + std::to_string(height_bound),
                    true, ""};
    // enumerate nu in N pi by simple-root coordinates of total height <= bound
    std::vector<long> k(rs.rank, 0);
    auto to_weight = [&](const std::vector<long>& kc) {
        Weight nu(rs.rank);
        for (std::size_t j = 0; j < rs.rank; ++j)
            nu[j] = Rat(kc[j] - (j > 0 ? kc[j - 1] : 0));
        return nu;
    };
    while (true) {
        long h = 0;
        for (long v : k) h += v;
        if (h <= height_bound) {
            const Weight nu = to_weight(k);
            if (kostant_tau(rs, nu) != tau_by_enumeration(rs, nu)) {
                res.pass = false;
                res.witness = "tau mismatch at nu=(" + nu.str() + ")";
                return res;
            }
            if (super_partition(rs, nu) != super_partition_by_enumeration(rs, nu)) {
                res.pass = false;
                res.witness = "super-partition mismatch at nu=(" + nu.str() + ")";
                return res;
            }
        }
        std::size_t j = rs.rank;
        bool done = true;
        while (j-- > 0) {
            if (k[j] < height_bound) {
                ++k[j];
                for (std::size_t m = j + 1; m < rs.rank; ++m) k[m] = 0;
                done = false;
                break;
            }
        }
        if (done) break;
    }
    for (const auto& beta : rs.odd_pos) {
        if (kostant_tau(rs, -beta) != 0 || super_partition(rs, -beta) != 0) {
            res.pass = false;
            res.witness = "partition function nonzero outside N pi at -(" + beta.str() + ")";
            return res;
        }
    }
    return res;
}

// The dot orbit of mu meets an odd hyperplane iff mu does.
inline CheckResult check_reduction_sanity(const RootSystem& rs, long grid_bound) {
    CheckResult res{"reduction-odd-hyperplane",
                    "l=" + std::to_string(rs.rank) + " grid=[-" + std::to_string(grid_bound) + "," +
                        std::to_string(grid_bound) + "]",
                    true, ""};
    const auto group = enumerate_weyl(rs.rank);
    for (const auto& mu : half_integer_grid(rs.rank, grid_bound)) {
        const bool mu_on = !vanishing_odd_pairings(rs, mu).empty();
        bool orbit_on = false;
        for (const auto& w : group)
            orbit_on |= !vanishing_odd_pairings(rs, w.dot_act(rs, mu)).empty();
        if (mu_on != orbit_on) {
            res.pass = false;
            res.witness = "mu=(" + mu.str() + "): orbit hyperplane membership differs";
            return res;
        }
    }
    return res;
}

}  // namespace verify

// Deterministic verification suite for a fixed rank. depth_bound feeds the
// partition-oracle height window and caps the weight grids; q_order sets the
// series truncation orders. Checks are emitted sorted by name.
inline VerificationReport verify_suite(std::size_t l, long depth_bound, std::size_t q_order,
                                       std::size_t cap = kDefaultWeylCap) {
    if (l < 1) throw DomainError("verify_suite: invalid rank");
    if (l > cap)
        throw ResourceError("verify_suite: rank exceeds enumeration cap " + std::to_string(cap));
    const RootSystem rs = build_root_system(l);
    VerificationReport report;
    report.checks.push_back(verify::check_weyl_poincare(l, cap));
    report.checks.push_back(verify::check_heslem_table(l));
    report.checks.push_back(verify::check_hesfr_identity(rs, q_order, cap));
    report.checks.push_back(verify::check_partition_oracles(rs, std::min(depth_bound, 8L)));
    report.checks.push_back(verify::check_reduction_sanity(rs, 2));
    const long maxcoord = std::min(l <= 2 ? 3L : 1L, depth_bound);
    if (l <= 3) {
        report.checks.push_back(verify::check_hesselink_two_routes(rs, maxcoord, q_order));
        report.checks.push_back(verify::check_hesselink_q1(rs, maxcoord));
        report.checks.push_back(verify::check_prv_degree_saturation(rs, maxcoord));
        report.checks.push_back(verify::check_main_zero_locus(rs, 4, maxcoord));
    }
    if (l == 1) {
        report.checks.push_back(verify::check_l1_prv_closed_forms(10));
        report.checks.push_back(verify::check_l1_h_decomposition(6));
    }
    std::sort(report.checks.begin(), report.checks.end(),
              [](const CheckResult& a, const CheckResult& b) { return a.name < b.name; });
    return report;
}

}  // namespace osp
