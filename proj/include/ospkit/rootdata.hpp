#pragma once

#include <cstddef>
#include <string>
#include <utility>
#include <vector>

#include "ospkit/errors.hpp"
#include "ospkit/weight.hpp"

namespace osp {

/*
  Root data for osp(1,2l) in the orthonormal realization:

    simple roots   beta_1-beta_2, ..., beta_{l-1}-beta_l, beta_l
    even positive  beta_i +- beta_j (i<j), 2 beta_i
    odd positive   beta_i
    rho            sum (l-i+1/2) beta_i

  Root lists are kept in a fixed canonical order (pairs (i,j) lexicographic,
  difference before sum, then the doubled/odd roots by i) so that all output
  derived from them is byte-stable.
*/
struct RootSystem {
    std::size_t rank = 0;
    std::vector<Weight> even_pos;      // Delta_0^+
    std::vector<Weight> odd_pos;       // Delta_1^+
    std::vector<Weight> even_bar_pos;  // Delta_0^+ \ 2 Delta_1^+
    std::vector<Weight> simple;        // pi
    std::vector<Weight> fundamental;   // omega_1..omega_l
    Weight rho, rho0, rho1;
};

inline RootSystem build_root_system(std::size_t l) {
    if (l < 1) throw DomainError("invalid rank: l must be >= 1");
    RootSystem rs;
    rs.rank = l;
    for (std::size_t i = 1; i <= l; ++i) {
        for (std::size_t j = i + 1; j <= l; ++j) {
            rs.even_bar_pos.push_back(Weight::basis_vector(l, i) - Weight::basis_vector(l, j));
            rs.even_bar_pos.push_back(Weight::basis_vector(l, i) + Weight::basis_vector(l, j));
        }
    }
    rs.even_pos = rs.even_bar_pos;
    for (std::size_t i = 1; i <= l; ++i) rs.even_pos.push_back(Rat(2) * Weight::basis_vector(l, i));
    for (std::size_t i = 1; i <= l; ++i) rs.odd_pos.push_back(Weight::basis_vector(l, i));
    for (std::size_t i = 1; i + 1 <= l; ++i)
        rs.simple.push_back(Weight::basis_vector(l, i) - Weight::basis_vector(l, i + 1));
    rs.simple.push_back(Weight::basis_vector(l, l));
    rs.rho = Weight(l);
    rs.rho0 = Weight(l);
    rs.rho1 = Weight(l);
    for (std::size_t i = 1; i <= l; ++i) {
        rs.rho[i - 1] = Rat(2 * (l - i) + 1, 2);  // l - i + 1/2
        rs.rho0[i - 1] = Rat(l - i + 1);
        rs.rho1[i - 1] = Rat(1, 2);
    }
    for (std::size_t r = 1; r <= l; ++r) {
        Weight omega(l);
        for (std::size_t i = 0; i < r; ++i) omega[i] = 1;
        rs.fundamental.push_back(std::move(omega));
    }
    return rs;
}

// lambda in P^+(pi): <lambda,beta_l> in 2N and <lambda,beta_i-beta_{i+1}> in N.
inline bool is_dominant_integral(const RootSystem& rs, const Weight& lambda) {
    if (lambda.rank() != rs.rank) throw DomainError("is_dominant_integral: rank mismatch");
    if (!is_even_nonneg_integer(integral_pairing(lambda, rs.simple.back()))) return false;
    for (std::size_t i = 0; i + 1 < rs.rank; ++i)
        if (!is_nonneg_integer(integral_pairing(lambda, rs.simple[i]))) return false;
    return true;
}

// Dominance in the sense relevant for projectivity of the Verma module:
// <lambda+rho,alpha> avoids -N+ on restricted even roots and -2N-1 on odd ones.
inline bool is_dominant(const RootSystem& rs, const Weight& lambda) {
    const Weight shifted = lambda + rs.rho;
    for (const auto& alpha : rs.even_bar_pos)
        if (is_negative_integer(integral_pairing(shifted, alpha))) return false;
    for (const auto& beta : rs.odd_pos)
        if (is_negative_odd_integer(integral_pairing(shifted, beta))) return false;
    return true;
}

// Simplicity criterion for the Verma module of highest weight lambda:
// <lambda+rho,alpha> avoids N+ on restricted even roots and 2N+1 on odd ones.
inline bool verma_is_simple(const RootSystem& rs, const Weight& lambda) {
    const Weight shifted = lambda + rs.rho;
    for (const auto& alpha : rs.even_bar_pos)
        if (is_positive_integer(integral_pairing(shifted, alpha))) return false;
    for (const auto& beta : rs.odd_pos)
        if (is_odd_positive_integer(integral_pairing(shifted, beta))) return false;
    return true;
}

// The roots detecting the largest proper submodule of the Verma module,
// each with its witnessing integer <lambda+rho,alpha>. Canonical root order.
inline std::vector<std::pair<Weight, Int>> delta_lambda(const RootSystem& rs, const Weight& lambda) {
    const Weight shifted = lambda + rs.rho;
    std::vector<std::pair<Weight, Int>> out;
    for (const auto& alpha : rs.even_bar_pos) {
        const Rat p = integral_pairing(shifted, alpha);
        if (is_positive_integer(p)) out.emplace_back(alpha, numerator(p));
    }
    for (const auto& beta : rs.odd_pos) {
        const Rat p = integral_pairing(shifted, beta);
        if (is_odd_positive_integer(p)) out.emplace_back(beta, numerator(p));
    }
    return out;
}

}  // namespace osp
