#pragma once

#include <map>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

#include "ospkit/rational.hpp"
#include "ospkit/weight.hpp"
#include "ospkit/weyl.hpp"

namespace osp {

// Sparse integer-coefficient element of the group ring Z[h^*]: a finite sum
// of terms c * e^mu. Terms are kept in canonical (graded lexicographic)
// order and zero coefficients are never stored.
class GroupRingElement {
public:
    using TermMap = std::map<Weight, Int, WeightOrder>;

    GroupRingElement() = default;

    static GroupRingElement zero() { return {}; }

    static GroupRingElement monomial(const Weight& mu, Int coeff = 1) {
        GroupRingElement a;
        if (coeff != 0) a.terms_[mu] = std::move(coeff);
        return a;
    }

    static GroupRingElement one(std::size_t rank) { return monomial(Weight::zero(rank)); }

    const TermMap& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }
    std::size_t size() const { return terms_.size(); }

    Int coeff(const Weight& mu) const {
        auto it = terms_.find(mu);
        return it == terms_.end() ? Int(0) : it->second;
    }

    void add_term(const Weight& mu, const Int& c) {
        if (c == 0) return;
        auto [it, inserted] = terms_.emplace(mu, c);
        if (!inserted) {
            it->second += c;
            if (it->second == 0) terms_.erase(it);
        }
    }

    GroupRingElement& operator+=(const GroupRingElement& o) {
        for (const auto& [mu, c] : o.terms_) add_term(mu, c);
        return *this;
    }
    GroupRingElement& operator-=(const GroupRingElement& o) {
        for (const auto& [mu, c] : o.terms_) add_term(mu, -c);
        return *this;
    }
    friend GroupRingElement operator+(GroupRingElement a, const GroupRingElement& b) { return a += b; }
    friend GroupRingElement operator-(GroupRingElement a, const GroupRingElement& b) { return a -= b; }
    friend GroupRingElement operator-(const GroupRingElement& a) {
        GroupRingElement r;
        for (const auto& [mu, c] : a.terms_) r.terms_.emplace(mu, -c);
        return r;
    }

    GroupRingElement& operator*=(const Int& s) {
        if (s == 0) {
            terms_.clear();
            return *this;
        }
        for (auto& [mu, c] : terms_) c *= s;
        return *this;
    }
    friend GroupRingElement operator*(const Int& s, GroupRingElement a) { return a *= s; }

    friend GroupRingElement operator*(const GroupRingElement& a, const GroupRingElement& b) {
        GroupRingElement r;
        for (const auto& [mu, c] : a.terms_)
            for (const auto& [nu, d] : b.terms_) r.add_term(mu + nu, c * d);
        return r;
    }

    friend bool operator==(const GroupRingElement& a, const GroupRingElement& b) {
        return a.terms_ == b.terms_;
    }
    friend bool operator!=(const GroupRingElement& a, const GroupRingElement& b) { return !(a == b); }

    // e^mu |-> e^{w mu}
    GroupRingElement apply(const WeylElement& w) const {
        GroupRingElement r;
        for (const auto& [mu, c] : terms_) r.terms_.emplace(w.act(mu), c);
        return r;
    }

    // the involution e^mu |-> e^{-mu}
    GroupRingElement involute() const {
        GroupRingElement r;
        for (const auto& [mu, c] : terms_) r.terms_.emplace(-mu, c);
        return r;
    }

    std::string str() const {
        if (terms_.empty()) return "0";
        std::ostringstream os;
        bool first = true;
        for (const auto& [mu, c] : terms_) {
            if (!first) os << (c > 0 ? " + " : " - ");
            else if (c < 0) os << "-";
            Int a = c > 0 ? c : Int(-c);
            if (a != 1 || mu.is_zero()) os << a;
            if (!mu.is_zero()) {
                if (a != 1) os << "*";
                os << "e(" << mu.str() << ")";
            }
            first = false;
        }
        return os.str();
    }

private:
    TermMap terms_;
};

// J(a) = sum over W of sgn(w) * w(a).
inline GroupRingElement j_apply(const GroupRingElement& a, const std::vector<WeylElement>& group) {
    GroupRingElement r;
    for (const auto& w : group) {
        GroupRingElement wa = a.apply(w);
        if (w.sign() > 0)
            r += wa;
        else
            r -= wa;
    }
    return r;
}

inline GroupRingElement j_apply(const GroupRingElement& a, std::size_t l,
                                std::size_t cap = kDefaultWeylCap) {
    return j_apply(a, enumerate_weyl(l, cap));
}

inline Int project_coeff(const GroupRingElement& a, const Weight& mu) { return a.coeff(mu); }

inline GroupRingElement iota(const GroupRingElement& a) { return a.involute(); }

}  // namespace osp
