#pragma once

#include <cstddef>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "ospkit/errors.hpp"
#include "ospkit/rational.hpp"

namespace osp {

// A weight is an exact rational coordinate vector in the orthonormal basis
// {beta_1,...,beta_l}. All roots, rho-shifts and linear-factor directions in
// this library are stored this way; simple-root coordinates are only ever a
// derived view (see simple_root_coords).
class Weight {
public:
    Weight() = default;
    explicit Weight(std::size_t rank) : coords_(rank) {}
    explicit Weight(std::vector<Rat> coords) : coords_(std::move(coords)) {}

    static Weight zero(std::size_t rank) { return Weight(rank); }

    // i is 1-based: basis_vector(l, i) = beta_i.
    static Weight basis_vector(std::size_t rank, std::size_t i) {
        Weight w(rank);
        w.coords_.at(i - 1) = 1;
        return w;
    }

    std::size_t rank() const { return coords_.size(); }
    const Rat& operator[](std::size_t i) const { return coords_[i]; }
    Rat& operator[](std::size_t i) { return coords_[i]; }
    const std::vector<Rat>& coords() const { return coords_; }

    bool is_zero() const {
        for (const auto& c : coords_)
            if (c != 0) return false;
        return true;
    }

    friend bool operator==(const Weight& a, const Weight& b) { return a.coords_ == b.coords_; }
    friend bool operator!=(const Weight& a, const Weight& b) { return !(a == b); }

    Weight& operator+=(const Weight& o) {
        check_rank(o);
        for (std::size_t i = 0; i < coords_.size(); ++i) coords_[i] += o.coords_[i];
        return *this;
    }
    Weight& operator-=(const Weight& o) {
        check_rank(o);
        for (std::size_t i = 0; i < coords_.size(); ++i) coords_[i] -= o.coords_[i];
        return *this;
    }
    Weight& operator*=(const Rat& s) {
        for (auto& c : coords_) c *= s;
        return *this;
    }
    friend Weight operator+(Weight a, const Weight& b) { return a += b; }
    friend Weight operator-(Weight a, const Weight& b) { return a -= b; }
    friend Weight operator*(const Rat& s, Weight a) { return a *= s; }
    friend Weight operator-(Weight a) {
        for (auto& c : a.coords_) c = -c;
        return a;
    }

    std::string str() const {
        std::ostringstream os;
        for (std::size_t i = 0; i < coords_.size(); ++i) {
            if (i) os << ',';
            os << coords_[i];
        }
        return os.str();
    }

private:
    void check_rank(const Weight& o) const {
        if (o.coords_.size() != coords_.size())
            throw DomainError("weight dimension mismatch: " + std::to_string(coords_.size()) +
                              " vs " + std::to_string(o.coords_.size()));
    }

    std::vector<Rat> coords_;
};

// Standard dot product of coordinate vectors (the basis is orthonormal).
inline Rat bilinear(const Weight& a, const Weight& b) {
    if (a.rank() != b.rank())
        throw DomainError("bilinear: dimension mismatch " + std::to_string(a.rank()) + " vs " +
                          std::to_string(b.rank()));
    Rat acc = 0;
    for (std::size_t i = 0; i < a.rank(); ++i) acc += a[i] * b[i];
    return acc;
}

// <a,b> := 2(a,b)/(b,b); undefined for b = 0.
inline Rat integral_pairing(const Weight& a, const Weight& b) {
    const Rat nn = bilinear(b, b);
    if (nn == 0) throw DomainError("integral_pairing: second argument is zero");
    return 2 * bilinear(a, b) / nn;
}

// Total order used for canonical term serialization: graded lexicographic in
// beta-coordinates (coordinate sum first, then lex).
struct WeightOrder {
    bool operator()(const Weight& a, const Weight& b) const {
        Rat sa = 0, sb = 0;
        for (std::size_t i = 0; i < a.rank(); ++i) sa += a[i];
        for (std::size_t i = 0; i < b.rank(); ++i) sb += b[i];
        if (sa != sb) return sa < sb;
        if (a.rank() != b.rank()) return a.rank() < b.rank();
        for (std::size_t i = 0; i < a.rank(); ++i)
            if (a[i] != b[i]) return a[i] < b[i];
        return false;
    }
};

// nu in terms of the simple roots {beta_1-beta_2,...,beta_{l-1}-beta_l, beta_l}:
// the j-th coordinate is the partial sum c_1+...+c_j of beta-coordinates.
inline std::vector<Rat> simple_root_coords(const Weight& nu) {
    std::vector<Rat> k(nu.rank());
    Rat acc = 0;
    for (std::size_t j = 0; j < nu.rank(); ++j) {
        acc += nu[j];
        k[j] = acc;
    }
    return k;
}

inline bool in_root_lattice(const Weight& nu) {  // Z pi
    for (std::size_t i = 0; i < nu.rank(); ++i)
        if (!is_integer(nu[i])) return false;
    return true;
}

inline bool in_positive_root_cone(const Weight& nu) {  // N pi
    if (!in_root_lattice(nu)) return false;
    for (const auto& k : simple_root_coords(nu))
        if (k < 0) return false;
    return true;
}

// Height of nu in N pi: the sum of its simple-root coordinates.
// Returns nullopt outside the cone.
inline std::optional<Int> cone_height(const Weight& nu) {
    if (!in_root_lattice(nu)) return std::nullopt;
    Rat h = 0;
    for (const auto& k : simple_root_coords(nu)) {
        if (k < 0) return std::nullopt;
        h += k;
    }
    return numerator(h);
}

// Parses "3/2,1/2" (beta-coordinates, exact rationals only).
inline Weight parse_weight(const std::string& text, std::size_t expected_rank) {
    std::vector<Rat> coords;
    std::string cur;
    std::istringstream is(text);
    while (std::getline(is, cur, ',')) coords.push_back(parse_rational(cur));
    if (!text.empty() && text.back() == ',') throw std::invalid_argument("trailing comma in weight");
    if (coords.empty()) throw std::invalid_argument("empty weight");
    if (coords.size() != expected_rank)
        throw DomainError("weight \"" + text + "\" has " + std::to_string(coords.size()) +
                          " coordinates, expected " + std::to_string(expected_rank));
    return Weight(std::move(coords));
}

}  // namespace osp
