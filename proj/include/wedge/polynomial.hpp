/*
 * polynomial.hpp
 * --------------
 * Exterior polynomials over exact rationals: a finite map from monomials
 * to nonzero coefficients.  The zero polynomial is the empty map; zero
 * coefficients are never stored.
 */
#pragma once

#include <map>
#include <stdexcept>
#include <utility>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

#include "wedge/monomial.hpp"

namespace wedge {

using Rational = boost::multiprecision::cpp_rational;
using BigInt = boost::multiprecision::cpp_int;

struct Term {
    Rational coeff;
    Monomial mono;
};

class ExtPoly {
public:
    // Ordered by ascending binary value of the exponent vector.
    using TermMap = std::map<Monomial, Rational>;

    ExtPoly() = default;
    explicit ExtPoly(int n) : n_(n) {}

    static ExtPoly zero(int n) { return ExtPoly(n); }

    static ExtPoly monomial(const Monomial& m, Rational c = 1) {
        ExtPoly p(m.n);
        if (c != 0) p.terms_[m] = std::move(c);
        return p;
    }

    int n() const { return n_; }
    bool is_zero() const { return terms_.empty(); }
    std::size_t term_count() const { return terms_.size(); }
    const TermMap& terms() const { return terms_; }

    Rational coeff(const Monomial& m) const {
        auto it = terms_.find(m);
        return it == terms_.end() ? Rational(0) : it->second;
    }

    void add_term(const Monomial& m, const Rational& c) {
        if (m.n != n_) throw std::invalid_argument("add_term: n mismatch");
        if (c == 0) return;
        auto [it, inserted] = terms_.try_emplace(m, c);
        if (!inserted) {
            it->second += c;
            if (it->second == 0) terms_.erase(it);
        }
    }

    friend ExtPoly operator+(const ExtPoly& f, const ExtPoly& g) {
        if (f.n_ != g.n_) throw std::invalid_argument("add: n mismatch");
        ExtPoly r = f;
        for (const auto& [m, c] : g.terms_) r.add_term(m, c);
        return r;
    }

    friend ExtPoly operator-(const ExtPoly& f, const ExtPoly& g) {
        if (f.n_ != g.n_) throw std::invalid_argument("sub: n mismatch");
        ExtPoly r = f;
        for (const auto& [m, c] : g.terms_) r.add_term(m, -c);
        return r;
    }

    friend ExtPoly operator*(const Rational& q, const ExtPoly& f) {
        ExtPoly r(f.n_);
        if (q == 0) return r;
        for (const auto& [m, c] : f.terms_) r.terms_[m] = q * c;
        return r;
    }

    friend bool operator==(const ExtPoly& f, const ExtPoly& g) {
        return f.n_ == g.n_ && f.terms_ == g.terms_;
    }
    friend bool operator!=(const ExtPoly& f, const ExtPoly& g) {
        return !(f == g);
    }

    // All terms the same degree; the zero polynomial counts as homogeneous.
    bool is_homogeneous() const {
        if (terms_.empty()) return true;
        int d = terms_.begin()->first.degree();
        for (const auto& [m, c] : terms_)
            if (m.degree() != d) return false;
        return true;
    }

private:
    int n_ = 0;
    TermMap terms_;
};

// Left multiplication x^c * f with anticommutative sign bookkeeping.
inline ExtPoly mul_monomial_poly(const Monomial& c, const ExtPoly& f) {
    if (c.n != f.n()) throw std::invalid_argument("mul: n mismatch");
    ExtPoly r(f.n());
    for (const auto& [m, coeff] : f.terms()) {
        SignedMonomial p = mul_monomials(c, m);
        if (p.sign != 0) r.add_term(p.mono, p.sign * coeff);
    }
    return r;
}

inline ExtPoly scale(const Rational& q, const ExtPoly& f) { return q * f; }

}  // namespace wedge
