#pragma once

#include <algorithm>
#include <cstddef>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

#include "ospkit/charmult.hpp"
#include "ospkit/errors.hpp"
#include "ospkit/rootdata.hpp"
#include "ospkit/weight.hpp"

namespace osp {

// The affine functional mu |-> (alpha,mu) + c, written phi(alpha) + c.
// alpha is always one of the positive roots, never rescaled.
struct LinearFactor {
    Weight alpha;
    Rat c;

    Rat eval(const Weight& mu) const { return bilinear(alpha, mu) + c; }

    friend bool operator==(const LinearFactor& a, const LinearFactor& b) {
        return a.alpha == b.alpha && a.c == b.c;
    }

    std::string str() const {
        std::ostringstream os;
        os << "(phi(" << root_str() << ")";
        if (c > 0) os << "+" << c;
        if (c < 0) os << c;
        os << ")";
        return os.str();
    }

    // "b1", "b1-b2", "2*b1", ...
    std::string root_str() const {
        std::ostringstream os;
        bool first = true;
        for (std::size_t i = 0; i < alpha.rank(); ++i) {
            const Rat& a = alpha[i];
            if (a == 0) continue;
            if (!first) os << (a > 0 ? "+" : "-");
            else if (a < 0) os << "-";
            Rat m = a > 0 ? a : Rat(-a);
            if (m != 1) os << m << "*";
            os << "b" << i + 1;
            first = false;
        }
        if (first) os << "0";
        return os.str();
    }
};

enum class FactorFamily { EvenStandard, OddStandard, Exotic };

inline const char* family_name(FactorFamily f) {
    switch (f) {
        case FactorFamily::EvenStandard: return "even-standard";
        case FactorFamily::OddStandard: return "odd-standard";
        case FactorFamily::Exotic: return "exotic";
    }
    return "?";
}

enum class DeterminantKind { Shapovalov, Prv };

struct FactorEntry {
    LinearFactor factor;
    Int exponent;  // >= 1
    FactorFamily family;
};

// A determinant represented by its linear-factor multiset; the overall
// scalar is not part of the data. Two determinants are equal when the
// multisets of (alpha, c, exponent) agree, families aside.
struct FactoredDeterminant {
    DeterminantKind kind;
    Weight label;  // nu for Shapovalov, lambda for PRV
    std::vector<FactorEntry> factors;

    Int total_degree() const {
        Int d = 0;
        for (const auto& f : factors) d += f.exponent;
        return d;
    }

    // multiset of (alpha, c) -> merged exponent, in canonical order
    std::vector<std::pair<LinearFactor, Int>> merged() const {
        std::vector<std::pair<LinearFactor, Int>> out;
        for (const auto& f : factors) {
            auto it = std::find_if(out.begin(), out.end(),
                                   [&](const auto& p) { return p.first == f.factor; });
            if (it == out.end())
                out.emplace_back(f.factor, f.exponent);
            else
                it->second += f.exponent;
        }
        WeightOrder less;
        std::sort(out.begin(), out.end(), [&](const auto& a, const auto& b) {
            if (a.first.alpha != b.first.alpha) return less(a.first.alpha, b.first.alpha);
            return a.first.c < b.first.c;
        });
        return out;
    }

    friend bool operator==(const FactoredDeterminant& a, const FactoredDeterminant& b) {
        return a.merged() == b.merged();
    }

    std::string str() const {
        if (factors.empty()) return "1";
        std::ostringstream os;
        bool first = true;
        for (const auto& f : factors) {
            if (!first) os << " * ";
            os << f.factor.str() << "^" << f.exponent;
            first = false;
        }
        return os.str();
    }
};

// Shapovalov determinant at level nu in N pi:
//   prod over restricted even alpha, m >= 1 of
//     (phi(alpha) + (rho,alpha) - m(alpha,alpha)/2) ^ tau(nu - m alpha)
//   prod over odd beta, odd n >= 1 of
//     (phi(beta) + (rho,beta) - n(beta,beta)/2) ^ tau(nu - n beta)
// Only the finitely many exponents with nu - m alpha still in N pi survive.
inline FactoredDeterminant shapovalov_factorization(const RootSystem& rs, const Weight& nu) {
    if (!in_positive_root_cone(nu))
        throw DomainError("shapovalov_factorization: nu not in N pi: " + nu.str());
    FactoredDeterminant det;
    det.kind = DeterminantKind::Shapovalov;
    det.label = nu;
    auto push = [&](const Weight& alpha, long m, FactorFamily family) {
        const Weight rem = nu - Rat(m) * alpha;
        if (!in_positive_root_cone(rem)) return false;
        const Int exp = kostant_tau(rs, rem);
        if (exp > 0)
            det.factors.push_back(
                {LinearFactor{alpha, bilinear(rs.rho, alpha) - Rat(m) * bilinear(alpha, alpha) / 2},
                 exp, family});
        return true;
    };
    for (const auto& alpha : rs.even_bar_pos)
        for (long m = 1; push(alpha, m, FactorFamily::EvenStandard); ++m) {}
    for (const auto& beta : rs.odd_pos)
        for (long n = 1; push(beta, n, FactorFamily::OddStandard); n += 2) {}
    return det;
}

// Alternating multiplicity sum sum_{m>=1} (-1)^{m+1} dim V(lambda)_{m beta};
// the exponent of the exotic factor phi(beta) + (rho,beta). Independent of
// the choice of odd root since they form a single Weyl orbit.
inline Int exotic_exponent(const RootSystem& rs, const Weight& lambda, const Weight& beta) {
    if (!is_dominant_integral(rs, lambda))
        throw DomainError("exotic_exponent: lambda not in P+(pi): " + lambda.str());
    bool odd_root = false;
    for (const auto& b : rs.odd_pos) odd_root |= b == beta;
    if (!odd_root) throw DomainError("exotic_exponent: beta is not a positive odd root");
    Int total = 0;
    for (long m = 1;; ++m) {
        const Weight mu = Rat(m) * beta;
        if (!in_positive_root_cone(lambda - mu)) break;  // outside the weight polytope
        const Int d = weight_multiplicity(rs, lambda, mu);
        total += m % 2 == 1 ? d : -d;
    }
    return total;
}

// PRV determinant of the module of highest weight lambda: standard factors
// with multiplicity exponents, plus one exotic factor per odd root.
inline FactoredDeterminant prv_factorization(const RootSystem& rs, const Weight& lambda) {
    if (!is_dominant_integral(rs, lambda))
        throw DomainError("prv_factorization: lambda not in P+(pi): " + lambda.str());
    FactoredDeterminant det;
    det.kind = DeterminantKind::Prv;
    det.label = lambda;
    auto push = [&](const Weight& alpha, long m, FactorFamily family) {
        if (!in_positive_root_cone(lambda - Rat(m) * alpha)) return false;
        const Int exp = weight_multiplicity(rs, lambda, Rat(m) * alpha);
        if (exp > 0)
            det.factors.push_back(
                {LinearFactor{alpha, bilinear(rs.rho, alpha) - Rat(m) * bilinear(alpha, alpha) / 2},
                 exp, family});
        return true;
    };
    for (const auto& alpha : rs.even_bar_pos)
        for (long m = 1; push(alpha, m, FactorFamily::EvenStandard); ++m) {}
    for (const auto& beta : rs.odd_pos)
        for (long n = 1; push(beta, n, FactorFamily::OddStandard); n += 2) {}
    for (const auto& beta : rs.odd_pos) {
        const Int exp = exotic_exponent(rs, lambda, beta);
        if (exp > 0)
            det.factors.push_back(
                {LinearFactor{beta, bilinear(rs.rho, beta)}, exp, FactorFamily::Exotic});
    }
    return det;
}

// Degree budget sum_{m>=1} ( sum_{alpha in Delta_0^+} dim V(lambda)_{m alpha}
//                            + 2l (-1)^{m+1} dim V(lambda)_{m beta_1} ).
inline Int prv_degree_bound(const RootSystem& rs, const Weight& lambda) {
    if (!is_dominant_integral(rs, lambda))
        throw DomainError("prv_degree_bound: lambda not in P+(pi): " + lambda.str());
    Int total = 0;
    for (const auto& alpha : rs.even_pos) {
        for (long m = 1; in_positive_root_cone(lambda - Rat(m) * alpha); ++m)
            total += weight_multiplicity(rs, lambda, Rat(m) * alpha);
    }
    const Weight& beta1 = rs.odd_pos.front();
    const Int twol = Int(2) * Int(rs.rank);
    for (long m = 1; in_positive_root_cone(lambda - Rat(m) * beta1); ++m) {
        const Int d = weight_multiplicity(rs, lambda, Rat(m) * beta1);
        total += (m % 2 == 1 ? twol : -twol) * d;
    }
    return total;
}

struct FactoredValue {
    Rat value;              // product of factor values, meaningful up to a scalar
    bool up_to_scalar = true;
    Int vanishing_order;    // sum of exponents of the vanishing factors
};

inline FactoredValue evaluate_factored(const FactoredDeterminant& det, const Weight& mu) {
    FactoredValue out{Rat(1), true, Int(0)};
    for (const auto& f : det.factors) {
        const Rat v = f.factor.eval(mu);  // throws on rank mismatch
        if (v == 0) {
            out.vanishing_order += f.exponent;
            out.value = 0;
        } else if (out.value != 0) {
            Rat p = 1;
            for (Int e = 0; e < f.exponent; ++e) p *= v;
            out.value *= p;
        }
    }
    return out;
}

}  // namespace osp
