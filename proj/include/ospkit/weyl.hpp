#pragma once

#include <cstddef>
#include <numeric>
#include <sstream>
#include <string>
#include <vector>

#include "ospkit/errors.hpp"
#include "ospkit/rootdata.hpp"
#include "ospkit/weight.hpp"

namespace osp {

inline constexpr std::size_t kDefaultWeylCap = 6;

/*
  The Weyl group of osp(1,2l) is the group of signed permutations of the
  beta_i. An element stores its one-line image notation: image[i] = +-j
  (1-based) means beta_{i+1} |-> +-beta_j.

  Words in the simple reflections s_1..s_l (s_i <-> beta_i-beta_{i+1} for
  i<l, s_l <-> beta_l) compose with the right factor acting first, so
  s_1 s_2 applied to a weight means "apply s_2, then s_1".

  Lengths are computed by greedy descent; the closed Poincare product is
  kept as an independent cross-check, not an input.
*/
class WeylElement {
public:
    WeylElement() = default;

    static WeylElement identity(std::size_t l) {
        WeylElement w;
        w.image_.resize(l);
        std::iota(w.image_.begin(), w.image_.end(), 1);
        w.length_ = 0;
        return w;
    }

    // i is 1-based; i<l swaps beta_i,beta_{i+1}; i=l negates beta_l.
    static WeylElement simple_reflection(std::size_t l, std::size_t i) {
        if (i < 1 || i > l) throw DomainError("simple_reflection: index out of range");
        WeylElement w = identity(l);
        if (i < l) {
            w.image_[i - 1] = static_cast<long>(i + 1);
            w.image_[i] = static_cast<long>(i);
        } else {
            w.image_[l - 1] = -static_cast<long>(l);
        }
        w.length_ = 1;
        return w;
    }

    std::size_t rank() const { return image_.size(); }
    std::size_t length() const { return length_; }
    int sign() const { return length_ % 2 == 0 ? 1 : -1; }
    const std::vector<long>& image() const { return image_; }

    bool is_identity() const {
        for (std::size_t i = 0; i < image_.size(); ++i)
            if (image_[i] != static_cast<long>(i + 1)) return false;
        return true;
    }

    friend bool operator==(const WeylElement& a, const WeylElement& b) {
        return a.image_ == b.image_;
    }
    friend bool operator!=(const WeylElement& a, const WeylElement& b) { return !(a == b); }

    Weight act(const Weight& lambda) const {
        if (lambda.rank() != image_.size()) throw DomainError("Weyl action: rank mismatch");
        Weight out(lambda.rank());
        for (std::size_t i = 0; i < image_.size(); ++i) {
            const long t = image_[i];
            const std::size_t j = static_cast<std::size_t>(t < 0 ? -t : t);
            out[j - 1] = t < 0 ? -lambda[i] : lambda[i];
        }
        return out;
    }

    // w.lambda = w(lambda+rho) - rho.
    Weight dot_act(const RootSystem& rs, const Weight& lambda) const {
        return act(lambda + rs.rho) - rs.rho;
    }

    // (u*v)(x) = u(v(x)): right factor first.
    friend WeylElement operator*(const WeylElement& u, const WeylElement& v) {
        if (u.rank() != v.rank()) throw DomainError("Weyl composition: rank mismatch");
        WeylElement w;
        w.image_.resize(u.rank());
        for (std::size_t i = 0; i < u.rank(); ++i) {
            const long t = v.image_[i];
            const std::size_t j = static_cast<std::size_t>(t < 0 ? -t : t);
            w.image_[i] = t < 0 ? -u.image_[j - 1] : u.image_[j - 1];
        }
        w.length_ = w.compute_length();
        return w;
    }

    // Determinant of the signed permutation matrix; equals sign() but is
    // computed independently of the length.
    int determinant() const {
        const std::size_t l = image_.size();
        std::vector<bool> seen(l, false);
        int det = 1;
        for (std::size_t i = 0; i < l; ++i) {
            if (image_[i] < 0) det = -det;
            if (seen[i]) continue;
            // cycle of the underlying permutation through position i
            std::size_t len = 0, j = i;
            while (!seen[j]) {
                seen[j] = true;
                ++len;
                j = static_cast<std::size_t>(image_[j] < 0 ? -image_[j] : image_[j]) - 1;
            }
            if (len % 2 == 0) det = -det;
        }
        return det;
    }

    // One-line rendering, e.g. "[+2,-1]": beta_1 -> +beta_2, beta_2 -> -beta_1.
    std::string str() const {
        std::ostringstream os;
        os << '[';
        for (std::size_t i = 0; i < image_.size(); ++i) {
            if (i) os << ',';
            os << (image_[i] < 0 ? '-' : '+') << (image_[i] < 0 ? -image_[i] : image_[i]);
        }
        os << ']';
        return os.str();
    }

    static WeylElement from_image(std::vector<long> image) {
        WeylElement w;
        w.image_ = std::move(image);
        w.length_ = w.compute_length();
        return w;
    }

private:
    // Greedy descent: while w != id, strip a simple reflection that sends a
    // simple root negative. Each step shortens the element by exactly one.
    std::size_t compute_length() const {
        const std::size_t l = image_.size();
        WeylElement w;
        w.image_ = image_;
        std::size_t len = 0;
        auto sends_negative = [&](std::size_t i) {  // is w(alpha_i) a negative root?
            if (i < l) {
                // alpha_i = beta_i - beta_{i+1}
                const long a = w.image_[i - 1], b = w.image_[i];
                Weight v(l);
                v[static_cast<std::size_t>(a < 0 ? -a : a) - 1] += a < 0 ? -1 : 1;
                v[static_cast<std::size_t>(b < 0 ? -b : b) - 1] -= b < 0 ? -1 : 1;
                for (std::size_t k = 0; k < l; ++k) {
                    if (v[k] != 0) return v[k] < 0;
                }
                return false;
            }
            return w.image_[l - 1] < 0;  // alpha_l = beta_l
        };
        while (!w.is_identity()) {
            bool stripped = false;
            for (std::size_t i = 1; i <= l; ++i) {
                if (!sends_negative(i)) continue;
                // right-multiply by s_i without re-entering length computation
                if (i < l) {
                    std::swap(w.image_[i - 1], w.image_[i]);
                } else {
                    w.image_[l - 1] = -w.image_[l - 1];
                }
                ++len;
                stripped = true;
                break;
            }
            if (!stripped) throw std::logic_error("greedy descent stuck: invalid signed permutation");
        }
        return len;
    }

    std::vector<long> image_;
    std::size_t length_ = 0;
};

// All 2^l l! elements in a fixed deterministic order.
inline std::vector<WeylElement> enumerate_weyl(std::size_t l, std::size_t cap = kDefaultWeylCap) {
    if (l < 1) throw DomainError("enumerate_weyl: invalid rank");
    if (l > cap)
        throw ResourceError("enumerate_weyl: rank " + std::to_string(l) +
                            " exceeds enumeration cap " + std::to_string(cap));
    std::vector<long> perm(l);
    std::iota(perm.begin(), perm.end(), 1);
    std::vector<WeylElement> out;
    do {
        for (std::size_t mask = 0; mask < (std::size_t(1) << l); ++mask) {
            std::vector<long> img(l);
            for (std::size_t i = 0; i < l; ++i)
                img[i] = (mask >> i) & 1 ? -perm[i] : perm[i];
            out.push_back(WeylElement::from_image(std::move(img)));
        }
    } while (std::next_permutation(perm.begin(), perm.end()));
    return out;
}

// Trivial-stabilizer test: |(lambda,beta_i)| pairwise distinct and nonzero.
inline bool stabilizer_trivial(const Weight& lambda) {
    std::vector<Rat> abs;
    for (std::size_t i = 0; i < lambda.rank(); ++i) {
        Rat a = lambda[i] < 0 ? -lambda[i] : lambda[i];
        if (a == 0) return false;
        for (const auto& b : abs)
            if (a == b) return false;
        abs.push_back(std::move(a));
    }
    return true;
}

// Dense integer polynomial in q; coefficient of q^r at index r.
using QPoly = std::vector<Int>;

inline void qpoly_trim(QPoly& p) {
    while (!p.empty() && p.back() == 0) p.pop_back();
}

inline QPoly qpoly_mul(const QPoly& a, const QPoly& b) {
    if (a.empty() || b.empty()) return {};
    QPoly c(a.size() + b.size() - 1);
    for (std::size_t i = 0; i < a.size(); ++i)
        for (std::size_t j = 0; j < b.size(); ++j) c[i + j] += a[i] * b[j];
    qpoly_trim(c);
    return c;
}

inline std::string qpoly_str(const QPoly& p) {
    if (p.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    for (std::size_t r = 0; r < p.size(); ++r) {
        if (p[r] == 0) continue;
        if (!first) os << (p[r] > 0 ? " + " : " - ");
        else if (p[r] < 0) os << "-";
        Int a = p[r] > 0 ? p[r] : Int(-p[r]);
        first = false;
        if (r == 0) {
            os << a;
        } else {
            if (a != 1) os << a << "*";
            os << "q";
            if (r > 1) os << "^" << r;
        }
    }
    if (first) return "0";
    return os.str();
}

// sum over W of q^{l(w)}, by enumeration.
inline QPoly poincare_polynomial(std::size_t l, std::size_t cap = kDefaultWeylCap) {
    QPoly p;
    for (const auto& w : enumerate_weyl(l, cap)) {
        if (p.size() <= w.length()) p.resize(w.length() + 1);
        p[w.length()] += 1;
    }
    return p;
}

// Closed form (1-q)^{-l} prod_{i=1..l} (1-q^{2i}) = prod_{i=1..l} (1+q+...+q^{2i-1}).
inline QPoly poincare_closed_form(std::size_t l) {
    QPoly p{1};
    for (std::size_t i = 1; i <= l; ++i) {
        QPoly g(2 * i, Int(1));
        p = qpoly_mul(p, g);
    }
    return p;
}

// The unique pair (gamma_r, w_r) with rho - r beta_1 + gamma_r = w_r(rho),
// gamma_r supported on {beta_2,...,beta_l} with 0/1 coordinates, and
// sgn(w_r) = (-1)^r. The word for l <= r < 2l is s_1..s_l followed by the
// descending block s_{l-1},...,s_{2l-r} (empty when 2l-r > l-1).
inline std::pair<Weight, WeylElement> heslem_data(std::size_t l, std::size_t r) {
    if (l < 1) throw DomainError("heslem_data: invalid rank");
    if (r > 2 * l - 1) throw DomainError("heslem_data: r out of range [0, 2l-1]");
    Weight gamma(l);
    std::vector<std::size_t> word;
    if (r == 0) {
        // gamma = 0, w = id
    } else if (r < l) {
        for (std::size_t i = 2; i <= r + 1; ++i) gamma[i - 1] = 1;
        for (std::size_t i = 1; i <= r; ++i) word.push_back(i);
    } else {
        for (std::size_t i = 2; i <= 2 * l - r; ++i) gamma[i - 1] = 1;
        for (std::size_t i = 1; i <= l; ++i) word.push_back(i);
        for (std::size_t i = l - 1; i >= 2 * l - r && i >= 1; --i) word.push_back(i);
    }
    WeylElement w = WeylElement::identity(l);
    for (const auto i : word) w = w * WeylElement::simple_reflection(l, i);

    // defining property and the sign claim, checked on every call
    const RootSystem rs = build_root_system(l);
    Weight expect = rs.rho - Rat(static_cast<long>(r)) * Weight::basis_vector(l, 1) + gamma;
    if (w.act(rs.rho) != expect) throw std::logic_error("heslem_data: w_r(rho) != rho - r beta_1 + gamma_r");
    if (w.sign() != (r % 2 == 0 ? 1 : -1)) throw std::logic_error("heslem_data: sgn(w_r) != (-1)^r");
    return {std::move(gamma), std::move(w)};
}

}  // namespace osp
