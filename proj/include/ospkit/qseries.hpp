#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "ospkit/errors.hpp"
#include "ospkit/group_ring.hpp"
#include "ospkit/rootdata.hpp"
#include "ospkit/weyl.hpp"

namespace osp {

// q-truncated power series over the group ring: coefficient of q^r is a
// GroupRingElement, r = 0..order. All arithmetic discards q-degrees above
// the order; multiplying two series that are exact to the order stays exact.
class QSeries {
public:
    QSeries() = default;
    explicit QSeries(std::size_t order) : coeffs_(order + 1) {}

    static QSeries from_constant(std::size_t order, GroupRingElement c) {
        QSeries s(order);
        s.coeffs_[0] = std::move(c);
        return s;
    }

    static QSeries one(std::size_t order, std::size_t rank) {
        return from_constant(order, GroupRingElement::one(rank));
    }

    std::size_t order() const { return coeffs_.size() - 1; }
    const GroupRingElement& coeff(std::size_t r) const { return coeffs_.at(r); }
    GroupRingElement& coeff(std::size_t r) { return coeffs_.at(r); }

    QSeries truncated(std::size_t new_order) const {
        QSeries s(new_order);
        for (std::size_t r = 0; r <= new_order && r < coeffs_.size(); ++r) s.coeffs_[r] = coeffs_[r];
        return s;
    }

    QSeries& operator+=(const QSeries& o) {
        for (std::size_t r = 0; r < coeffs_.size() && r < o.coeffs_.size(); ++r)
            coeffs_[r] += o.coeffs_[r];
        return *this;
    }
    QSeries& operator-=(const QSeries& o) {
        for (std::size_t r = 0; r < coeffs_.size() && r < o.coeffs_.size(); ++r)
            coeffs_[r] -= o.coeffs_[r];
        return *this;
    }
    friend QSeries operator+(QSeries a, const QSeries& b) { return a += b; }
    friend QSeries operator-(QSeries a, const QSeries& b) { return a -= b; }

    friend QSeries operator*(const QSeries& a, const QSeries& b) {
        QSeries r(std::min(a.order(), b.order()));
        for (std::size_t i = 0; i <= r.order(); ++i) {
            if (a.coeffs_[i].is_zero()) continue;
            for (std::size_t j = 0; i + j <= r.order(); ++j) {
                if (b.coeffs_[j].is_zero()) continue;
                r.coeffs_[i + j] += a.coeffs_[i] * b.coeffs_[j];
            }
        }
        return r;
    }

    friend bool operator==(const QSeries& a, const QSeries& b) { return a.coeffs_ == b.coeffs_; }
    friend bool operator!=(const QSeries& a, const QSeries& b) { return !(a == b); }

    QSeries apply(const WeylElement& w) const {
        QSeries r(order());
        for (std::size_t i = 0; i < coeffs_.size(); ++i) r.coeffs_[i] = coeffs_[i].apply(w);
        return r;
    }

    QSeries involute() const {
        QSeries r(order());
        for (std::size_t i = 0; i < coeffs_.size(); ++i) r.coeffs_[i] = coeffs_[i].involute();
        return r;
    }

private:
    std::vector<GroupRingElement> coeffs_;
};

inline QSeries j_apply(const QSeries& a, const std::vector<WeylElement>& group) {
    QSeries r(a.order());
    for (const auto& w : group) {
        QSeries wa = a.apply(w);
        if (w.sign() > 0)
            r += wa;
        else
            r -= wa;
    }
    return r;
}

inline QSeries j_apply(const QSeries& a, std::size_t l, std::size_t cap = kDefaultWeylCap) {
    return j_apply(a, enumerate_weyl(l, cap));
}

inline QSeries iota(const QSeries& a) { return a.involute(); }

// Coefficient of e^mu per q-degree, as a polynomial in q.
inline QPoly project_coeff(const QSeries& a, const Weight& mu) {
    QPoly p(a.order() + 1);
    for (std::size_t r = 0; r <= a.order(); ++r) p[r] = a.coeff(r).coeff(mu);
    qpoly_trim(p);
    return p;
}

// One factor (1 + sign * q^qpow * e^shift)^(+-1) of a product expansion.
struct ProductFactor {
    int sign = 1;  // +1 or -1
    Weight shift;
    std::size_t qpow = 0;
    bool inverted = false;
};

/*
  Truncated expansion of a product of such factors. Two regimes keep every
  geometric expansion finite:

    - q-grading: every inverted factor carries qpow >= 1, so its geometric
      series only reaches q-degrees <= order;
    - cone-grading: with height_bound set, every factor shift must lie in
      -N pi (nonzero for inverted factors); geometric series are expanded
      until the shift leaves height(-mu) <= height_bound and all deeper
      terms are discarded. The result is then exact on every weight mu with
      height(-mu) <= height_bound.

  An inverted factor with qpow = 0 and no height bound has no finite
  expansion; that request is refused.
*/
inline QSeries expand_product(const std::vector<ProductFactor>& factors, std::size_t order,
                              std::size_t rank,
                              std::optional<Int> height_bound = std::nullopt) {
    auto depth = [&](const Weight& mu) -> std::optional<Int> { return cone_height(-mu); };

    for (const auto& f : factors) {
        if (f.sign != 1 && f.sign != -1) throw DomainError("expand_product: factor sign must be +-1");
        if (f.shift.rank() != rank) throw DomainError("expand_product: factor rank mismatch");
        if (height_bound) {
            if (!depth(f.shift))
                throw DomainError(
                    "expand_product: height truncation requires every factor shift in -N pi");
            if (f.inverted && f.shift.is_zero() && f.qpow == 0)
                throw DomainError("expand_product: non-terminating expansion (constant inverted factor)");
        } else if (f.inverted && f.qpow == 0) {
            throw DomainError(
                "expand_product: non-terminating expansion (inverted factor without q power "
                "and no height bound)");
        }
    }

    QSeries result = QSeries::one(order, rank);
    for (const auto& f : factors) {
        QSeries g(order);
        if (!f.inverted) {
            g.coeff(0) = GroupRingElement::one(rank);
            if (f.qpow <= order) g.coeff(f.qpow) += GroupRingElement::monomial(f.shift, f.sign);
        } else {
            // (1 + s q^p e^d)^{-1} = sum_k (-s)^k q^{kp} e^{kd}
            Weight acc = Weight::zero(rank);
            Int c = 1;
            for (std::size_t k = 0;; ++k) {
                if (f.qpow > 0 && k * f.qpow > order) break;
                if (height_bound) {
                    auto d = depth(acc);
                    if (!d || *d > *height_bound) break;
                }
                g.coeff(k * f.qpow) += GroupRingElement::monomial(acc, c);
                acc += f.shift;
                c *= -f.sign;
            }
        }
        result = result * g;
        if (height_bound) {
            // discard terms beyond the cone window so intermediates stay small
            for (std::size_t r = 0; r <= result.order(); ++r) {
                GroupRingElement trimmed;
                for (const auto& [mu, c] : result.coeff(r).terms()) {
                    auto d = depth(mu);
                    if (d && *d <= *height_bound) trimmed.add_term(mu, c);
                }
                result.coeff(r) = std::move(trimmed);
            }
        }
    }
    return result;
}

// ch_q of the exterior algebra of the odd part: prod over all odd roots
// (positive and negative) of (1 + q e^beta).
inline QSeries chq_lambda_g1(const RootSystem& rs, std::size_t order) {
    std::vector<ProductFactor> factors;
    for (const auto& beta : rs.odd_pos) {
        factors.push_back({+1, beta, 1, false});
        factors.push_back({+1, -beta, 1, false});
    }
    return expand_product(factors, order, rs.rank);
}

// ch_q H = prod over all even roots of (1 - q e^alpha)^{-1}
//          * ch_q Lambda g_1 * sum over W of q^{l(w)}.
inline QSeries build_chq_H(const RootSystem& rs, std::size_t order,
                           std::size_t cap = kDefaultWeylCap) {
    std::vector<ProductFactor> factors;
    for (const auto& alpha : rs.even_pos) {
        factors.push_back({-1, alpha, 1, true});
        factors.push_back({-1, -alpha, 1, true});
    }
    QSeries h = expand_product(factors, order, rs.rank) * chq_lambda_g1(rs, order);
    const QPoly w_poly = poincare_polynomial(rs.rank, cap);
    QSeries p(order);
    for (std::size_t r = 0; r < w_poly.size() && r <= order; ++r)
        if (w_poly[r] != 0) p.coeff(r) = GroupRingElement::monomial(Weight::zero(rs.rank), w_poly[r]);
    return h * p;
}

}  // namespace osp
