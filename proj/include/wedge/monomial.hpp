/*
 * monomial.hpp
 * ------------
 * Square-free monomials of the exterior algebra on x_1..x_n, stored as
 * bitmasks (bit i-1 <=> x_i present).  The empty mask is the unit 1.
 *
 * Products pick up a sign from sorting the concatenated index sequence
 * into ascending order; the sign is the parity of the inversion count.
 */
#pragma once

#include <bit>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

namespace wedge {

// Hard cap on the number of variables a Monomial mask can hold.
inline constexpr int kMaxVars = 64;

struct Monomial {
    std::uint64_t bits = 0;
    int n = 0;

    Monomial() = default;
    Monomial(std::uint64_t bits_, int n_) : bits(bits_), n(n_) {
        if (n_ < 1 || n_ > kMaxVars)
            throw std::invalid_argument("monomial: n out of range 1.." +
                                        std::to_string(kMaxVars));
        if (n_ < kMaxVars && (bits_ >> n_) != 0)
            throw std::invalid_argument("monomial: variable index exceeds n");
    }

    static Monomial unit(int n_) { return Monomial(0, n_); }

    // Variable indices are 1-based, matching the x1..xn syntax.
    static Monomial from_indices(const std::vector<int>& idx, int n_) {
        std::uint64_t b = 0;
        for (int i : idx) {
            if (i < 1 || i > n_)
                throw std::invalid_argument("monomial: index " +
                                            std::to_string(i) +
                                            " out of 1.." + std::to_string(n_));
            b |= std::uint64_t{1} << (i - 1);
        }
        return Monomial(b, n_);
    }

    int degree() const { return std::popcount(bits); }
    bool is_unit() const { return bits == 0; }
    bool contains(int var) const { return (bits >> (var - 1)) & 1; }

    std::vector<int> indices() const {
        std::vector<int> out;
        std::uint64_t b = bits;
        while (b) {
            out.push_back(std::countr_zero(b) + 1);
            b &= b - 1;
        }
        return out;
    }

    friend bool operator==(const Monomial& a, const Monomial& b) {
        return a.bits == b.bits && a.n == b.n;
    }
    friend bool operator!=(const Monomial& a, const Monomial& b) {
        return !(a == b);
    }
    // Ascending binary value of the exponent vector; the canonical
    // presentational order used inside polynomials and for tie-breaks.
    friend bool operator<(const Monomial& a, const Monomial& b) {
        return a.bits < b.bits;
    }
};

inline void require_same_n(const Monomial& a, const Monomial& b) {
    if (a.n != b.n)
        throw std::invalid_argument("monomials over different algebra orders");
}

inline bool disjoint(const Monomial& a, const Monomial& b) {
    return (a.bits & b.bits) == 0;
}

// Sign acquired when sorting x^a * x^b into canonical ascending form.
// Requires disjoint supports.  Parity of |{(i,j): i in a, j in b, i > j}|.
inline int merge_sign(const Monomial& a, const Monomial& b) {
    require_same_n(a, b);
    if (!disjoint(a, b))
        throw std::invalid_argument("merge_sign: supports overlap");
    int inv = 0;
    std::uint64_t bb = b.bits;
    while (bb) {
        int j = std::countr_zero(bb);  // 0-based position of a variable of b
        bb &= bb - 1;
        inv += std::popcount(a.bits >> (j + 1));  // variables of a above it
    }
    return (inv & 1) ? -1 : +1;
}

// x^a * x^b.  Returns {sign, monomial}; sign 0 means the product is zero
// (shared variable squares to zero).
struct SignedMonomial {
    int sign = 0;  // +1, -1, or 0 for the zero product
    Monomial mono;
};

inline SignedMonomial mul_monomials(const Monomial& a, const Monomial& b) {
    require_same_n(a, b);
    if (!disjoint(a, b)) return {0, Monomial::unit(a.n)};
    return {merge_sign(a, b), Monomial(a.bits | b.bits, a.n)};
}

// Divisibility is the subset relation on supports.
inline bool divides(const Monomial& a, const Monomial& b) {
    require_same_n(a, b);
    return (a.bits & ~b.bits) == 0;
}

inline Monomial quotient(const Monomial& b, const Monomial& a) {
    if (!divides(a, b))
        throw std::invalid_argument("quotient: divisor does not divide");
    return Monomial(b.bits & ~a.bits, b.n);
}

inline Monomial lcm(const Monomial& a, const Monomial& b) {
    require_same_n(a, b);
    return Monomial(a.bits | b.bits, a.n);
}

inline Monomial complement(const Monomial& m) {
    std::uint64_t all = (m.n == kMaxVars) ? ~std::uint64_t{0}
                                          : ((std::uint64_t{1} << m.n) - 1);
    return Monomial(all & ~m.bits, m.n);
}

// Componentwise (subset) comparability in the lattice {0,1}^n.
inline bool lattice_comparable(const Monomial& a, const Monomial& b) {
    return divides(a, b) || divides(b, a);
}

inline std::string to_string(const Monomial& m) {
    if (m.is_unit()) return "1";
    std::string s;
    for (int i : m.indices()) s += "x" + std::to_string(i);
    return s;
}

}  // namespace wedge
