#pragma once

#include <cstddef>
#include <functional>
#include <map>
#include <string>
#include <utility>
#include <vector>

#include "ospkit/errors.hpp"
#include "ospkit/qseries.hpp"
#include "ospkit/rootdata.hpp"
#include "ospkit/weight.hpp"
#include "ospkit/weyl.hpp"

namespace osp {

namespace detail {

// simple-root coordinates of a root-lattice element, as machine integers
inline std::vector<long> lattice_coords(const Weight& nu) {
    if (!in_root_lattice(nu)) throw DomainError("weight not in the root lattice Z pi: " + nu.str());
    std::vector<long> k;
    k.reserve(nu.rank());
    for (const auto& c : simple_root_coords(nu)) k.push_back(static_cast<long>(numerator(c)));
    return k;
}

inline bool nonneg(const std::vector<long>& k) {
    for (long v : k)
        if (v < 0) return false;
    return true;
}

struct Box {
    std::vector<long> dims;  // cell (i_1..i_l) with 0 <= i_j <= dims[j]
    std::size_t cells = 1;
    explicit Box(const std::vector<long>& top) : dims(top) {
        for (long d : dims) cells *= static_cast<std::size_t>(d + 1);
    }
    std::size_t flat(const std::vector<long>& idx) const {
        std::size_t f = 0;
        for (std::size_t j = 0; j < dims.size(); ++j)
            f = f * static_cast<std::size_t>(dims[j] + 1) + static_cast<std::size_t>(idx[j]);
        return f;
    }
    // row-major successor; returns false after the last cell
    bool next(std::vector<long>& idx) const {
        for (std::size_t j = dims.size(); j-- > 0;) {
            if (idx[j] < dims[j]) {
                ++idx[j];
                for (std::size_t m = j + 1; m < dims.size(); ++m) idx[m] = 0;
                return true;
            }
        }
        return false;
    }
};

inline bool fits(const std::vector<long>& idx, const std::vector<long>& root) {
    for (std::size_t j = 0; j < idx.size(); ++j)
        if (idx[j] < root[j]) return false;
    return true;
}

inline std::size_t shifted_flat(const Box& box, const std::vector<long>& idx,
                                const std::vector<long>& root) {
    std::size_t f = 0;
    for (std::size_t j = 0; j < idx.size(); ++j)
        f = f * static_cast<std::size_t>(box.dims[j] + 1) +
            static_cast<std::size_t>(idx[j] - root[j]);
    return f;
}

}  // namespace detail

// Kostant partition function for the full positive root system Delta^+
// (even and odd roots alike, unbounded multiplicities); zero outside N pi.
inline Int kostant_tau(const RootSystem& rs, const Weight& nu) {
    auto k = detail::lattice_coords(nu);
    if (!detail::nonneg(k)) return 0;
    detail::Box box(k);
    std::vector<Int> ways(box.cells);
    ways[0] = 1;
    auto run_unbounded = [&](const Weight& root) {
        const auto rk = detail::lattice_coords(root);
        std::vector<long> idx(k.size(), 0);
        do {
            if (detail::fits(idx, rk)) ways[box.flat(idx)] += ways[detail::shifted_flat(box, idx, rk)];
        } while (box.next(idx));
    };
    for (const auto& alpha : rs.even_pos) run_unbounded(alpha);
    for (const auto& beta : rs.odd_pos) run_unbounded(beta);
    return ways[box.flat(k)];
}

// Coefficient function of the Kac denominator: even-root multiplicities
// unbounded, each odd root used at most once.
inline Int super_partition(const RootSystem& rs, const Weight& nu) {
    auto k = detail::lattice_coords(nu);
    if (!detail::nonneg(k)) return 0;
    detail::Box box(k);
    std::vector<Int> ways(box.cells);
    ways[0] = 1;
    for (const auto& alpha : rs.even_pos) {
        const auto rk = detail::lattice_coords(alpha);
        std::vector<long> idx(k.size(), 0);
        do {
            if (detail::fits(idx, rk)) ways[box.flat(idx)] += ways[detail::shifted_flat(box, idx, rk)];
        } while (box.next(idx));
    }
    for (const auto& beta : rs.odd_pos) {
        // 0/1 use: sweep cells in decreasing row-major (= flat) order
        const auto rk = detail::lattice_coords(beta);
        std::vector<long> cur(k.size());
        for (std::size_t cell = box.cells; cell-- > 0;) {
            std::size_t f = cell;
            for (std::size_t j = k.size(); j-- > 0;) {
                const auto base = static_cast<std::size_t>(box.dims[j] + 1);
                cur[j] = static_cast<long>(f % base);
                f /= base;
            }
            if (detail::fits(cur, rk)) ways[cell] += ways[detail::shifted_flat(box, cur, rk)];
        }
    }
    return ways[box.flat(k)];
}

// Independent enumeration oracles for the two partition functions: plain
// recursion over the root list, no shared machinery with the DP above.
inline Int tau_by_enumeration(const RootSystem& rs, const Weight& nu) {
    auto k = detail::lattice_coords(nu);
    if (!detail::nonneg(k)) return 0;
    std::vector<std::vector<long>> roots;
    for (const auto& alpha : rs.even_pos) roots.push_back(detail::lattice_coords(alpha));
    for (const auto& beta : rs.odd_pos) roots.push_back(detail::lattice_coords(beta));
    std::function<Int(std::vector<long>&, std::size_t)> count = [&](std::vector<long>& rest,
                                                                    std::size_t i) -> Int {
        bool zero = true;
        for (long v : rest) zero &= v == 0;
        if (zero) return 1;
        if (i == roots.size()) return 0;
        Int total = 0;
        std::vector<long> r = rest;
        while (true) {
            total += count(r, i + 1);
            bool ok = true;
            for (std::size_t j = 0; j < r.size(); ++j) {
                r[j] -= roots[i][j];
                if (r[j] < 0) ok = false;
            }
            if (!ok) break;
        }
        return total;
    };
    return count(k, 0);
}

inline Int super_partition_by_enumeration(const RootSystem& rs, const Weight& nu) {
    auto k = detail::lattice_coords(nu);
    if (!detail::nonneg(k)) return 0;
    std::vector<std::pair<std::vector<long>, bool>> roots;  // (coords, odd?)
    for (const auto& alpha : rs.even_pos) roots.emplace_back(detail::lattice_coords(alpha), false);
    for (const auto& beta : rs.odd_pos) roots.emplace_back(detail::lattice_coords(beta), true);
    std::function<Int(std::vector<long>&, std::size_t)> count = [&](std::vector<long>& rest,
                                                                    std::size_t i) -> Int {
        bool zero = true;
        for (long v : rest) zero &= v == 0;
        if (zero) return 1;
        if (i == roots.size()) return 0;
        Int total = 0;
        std::vector<long> r = rest;
        std::size_t uses = 0;
        while (true) {
            total += count(r, i + 1);
            if (roots[i].second && uses == 1) break;
            bool ok = true;
            for (std::size_t j = 0; j < r.size(); ++j) {
                r[j] -= roots[i].first[j];
                if (r[j] < 0) ok = false;
            }
            if (!ok) break;
            ++uses;
        }
        return total;
    };
    return count(k, 0);
}

// dim of the mu weight space of the simple finite dimensional module of
// highest weight lambda, via the alternating super-partition sum.
inline Int weight_multiplicity(const RootSystem& rs, const Weight& lambda, const Weight& mu) {
    if (!is_dominant_integral(rs, lambda))
        throw DomainError("weight_multiplicity: lambda not in P+(pi): " + lambda.str());
    if (mu.rank() != rs.rank) throw DomainError("weight_multiplicity: mu rank mismatch");
    const Weight shifted = lambda + rs.rho;
    Int total = 0;
    for (const auto& w : enumerate_weyl(rs.rank)) {
        const Weight nu = w.act(shifted) - shifted + (lambda - mu);  // w(lambda+rho) - (mu+rho)
        if (!in_root_lattice(nu)) continue;
        const Int t = super_partition(rs, nu);
        total += w.sign() > 0 ? t : -t;
    }
    return total;
}

struct MultiplicityTable {
    Weight lambda;
    std::map<Weight, Int, WeightOrder> entries;  // nonzero multiplicities only

    Int total_dimension() const {
        Int d = 0;
        for (const auto& [mu, m] : entries) d += m;
        return d;
    }
};

// All nonzero weight multiplicities of the module of highest weight lambda.
inline MultiplicityTable full_table(const RootSystem& rs, const Weight& lambda) {
    if (!is_dominant_integral(rs, lambda))
        throw DomainError("full_table: lambda not in P+(pi): " + lambda.str());
    MultiplicityTable table;
    table.lambda = lambda;
    const auto top = detail::lattice_coords(Rat(2) * lambda);
    detail::Box box(top);
    std::vector<long> idx(rs.rank, 0);
    do {
        Weight nu = Weight::zero(rs.rank);
        for (std::size_t j = 0; j < rs.rank; ++j) {
            Rat kj(idx[j]);
            Rat prev = j > 0 ? Rat(idx[j - 1]) : Rat(0);
            nu[j] = kj - prev;  // beta-coordinates from simple-root coordinates
        }
        const Weight mu = lambda - nu;
        const Int m = weight_multiplicity(rs, lambda, mu);
        if (m != 0) table.entries.emplace(mu, m);
    } while (box.next(idx));
    return table;
}

// dim V(lambda)_0, the total multiplicity of the module in the harmonic space.
inline Int h_total_multiplicity(const RootSystem& rs, const Weight& lambda) {
    return weight_multiplicity(rs, lambda, Weight::zero(rs.rank));
}

// Direct Hesselink route: the coefficient of e^0 in
//   e^{-rho} J(e^{lambda+rho}) prod_{alpha in Delta_0^+} (1-q e^{-alpha})^{-1}
//   (1+q^{2l} e^{-beta_1}) prod_{beta in Delta_1^+ \ {beta_1}} (1+e^{-beta}).
inline QPoly hesselink_series(const RootSystem& rs, const Weight& lambda, std::size_t order) {
    if (!is_dominant_integral(rs, lambda))
        throw DomainError("hesselink_series: lambda not in P+(pi): " + lambda.str());
    std::vector<ProductFactor> factors;
    for (const auto& alpha : rs.even_pos) factors.push_back({-1, -alpha, 1, true});
    factors.push_back({+1, -rs.odd_pos.front(), 2 * rs.rank, false});
    for (std::size_t i = 1; i < rs.odd_pos.size(); ++i)
        factors.push_back({+1, -rs.odd_pos[i], 0, false});
    QSeries q = expand_product(factors, order, rs.rank);
    GroupRingElement jpart =
        j_apply(GroupRingElement::monomial(lambda + rs.rho), rs.rank) *
        GroupRingElement::monomial(-rs.rho);
    q = q * QSeries::from_constant(order, std::move(jpart));
    return project_coeff(q, Weight::zero(rs.rank));
}

// Alternating-sum route: [H^n : V(lambda)] = sum_w sgn(w) P_n(w.lambda) with
// the P_r read off the positive-cone expansion of
//   prod (1-q e^{alpha})^{-1} (1+q^{2l} e^{beta_1}) prod (1+e^{beta}).
// Coefficients at weights outside N pi vanish (the support never leaves the
// cone), matching the convention P_r(nu) = 0 there.
inline QPoly hesselink_series_alt(const RootSystem& rs, const Weight& lambda, std::size_t order) {
    if (!is_dominant_integral(rs, lambda))
        throw DomainError("hesselink_series_alt: lambda not in P+(pi): " + lambda.str());
    std::vector<ProductFactor> factors;
    for (const auto& alpha : rs.even_pos) factors.push_back({-1, alpha, 1, true});
    factors.push_back({+1, rs.odd_pos.front(), 2 * rs.rank, false});
    for (std::size_t i = 1; i < rs.odd_pos.size(); ++i)
        factors.push_back({+1, rs.odd_pos[i], 0, false});
    const QSeries gen = expand_product(factors, order, rs.rank);
    QPoly p(order + 1);
    for (const auto& w : enumerate_weyl(rs.rank)) {
        const Weight nu = w.dot_act(rs, lambda);
        for (std::size_t r = 0; r <= order; ++r) {
            const Int c = gen.coeff(r).coeff(nu);
            if (c != 0) p[r] += w.sign() > 0 ? c : -c;
        }
    }
    qpoly_trim(p);
    return p;
}

// Heuristic q-order by which the Poincare series of a fixed module has
// stabilized: height(2 lambda) + 2l. Backed by the verification suite, not
// by a bound from the factorization itself.
inline std::size_t hesselink_stable_order(const RootSystem& rs, const Weight& lambda) {
    auto h = cone_height(Rat(2) * lambda);
    if (!h) throw DomainError("hesselink_stable_order: lambda not dominant integral");
    return static_cast<std::size_t>(*h) + 2 * rs.rank;
}

}  // namespace osp
