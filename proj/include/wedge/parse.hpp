/*
 * parse.hpp
 * ---------
 * Line-oriented polynomial text format.
 *
 *   poly     := term (("+"|"-") term)*
 *   term     := [rational] monomial
 *   monomial := "1" | ("x" index)+        (indices strictly increasing)
 *   rational := int["/"posint]
 *
 * Whitespace between tokens is insignificant.  format_poly emits canonical
 * form (terms ascending by binary value of the exponent vector) and
 * parse_poly(format_poly(f)) == f.
 */
#pragma once

#include <cctype>
#include <stdexcept>
#include <string>

#include "wedge/polynomial.hpp"

namespace wedge {

struct ParseError : std::runtime_error {
    std::size_t position;
    ParseError(const std::string& what, std::size_t pos)
        : std::runtime_error(what + " at position " + std::to_string(pos)),
          position(pos) {}
};

namespace detail {

class PolyScanner {
public:
    PolyScanner(const std::string& text, int n) : s_(text), n_(n) {}

    ExtPoly run() {
        ExtPoly out(n_);
        skip_ws();
        if (at_end()) throw ParseError("empty polynomial", pos_);
        bool first = true;
        while (!at_end()) {
            int sign = +1;
            if (!first) {
                char op = next();
                if (op == '+')
                    sign = +1;
                else if (op == '-')
                    sign = -1;
                else
                    throw ParseError("expected '+' or '-'", pos_ - 1);
                skip_ws();
            } else if (peek() == '-' || peek() == '+') {
                sign = (next() == '-') ? -1 : +1;
                skip_ws();
            }
            auto [coeff, mono] = term();
            out.add_term(mono, sign * coeff);
            first = false;
            skip_ws();
        }
        return out;
    }

private:
    bool at_end() const { return pos_ >= s_.size(); }
    char peek() const { return at_end() ? '\0' : s_[pos_]; }
    char next() { return s_[pos_++]; }
    void skip_ws() {
        while (!at_end() && std::isspace(static_cast<unsigned char>(peek())))
            ++pos_;
    }

    std::pair<Rational, Monomial> term() {
        Rational coeff = 1;
        if (std::isdigit(static_cast<unsigned char>(peek()))) {
            // Either a rational coefficient or a bare "1" monomial.
            std::size_t start = pos_;
            BigInt num = integer();
            skip_ws();
            if (peek() == '/') {
                ++pos_;
                skip_ws();
                BigInt den = integer();
                if (den <= 0) throw ParseError("denominator must be positive", start);
                coeff = Rational(num, den);
            } else {
                coeff = Rational(num);
            }
            skip_ws();
            if (peek() != 'x') {
                if (num == 1 && coeff == 1 && s_.substr(start, pos_ - start).find('/') == std::string::npos)
                    return {1, Monomial::unit(n_)};
                // coefficient with no monomial: treat as rational * 1
                return {coeff, Monomial::unit(n_)};
            }
        }
        return {coeff, monomial()};
    }

    BigInt integer() {
        if (!std::isdigit(static_cast<unsigned char>(peek())))
            throw ParseError("expected integer", pos_);
        BigInt v = 0;
        while (std::isdigit(static_cast<unsigned char>(peek())))
            v = v * 10 + (next() - '0');
        return v;
    }

    Monomial monomial() {
        if (peek() == '1') {
            ++pos_;
            return Monomial::unit(n_);
        }
        if (peek() != 'x') throw ParseError("expected monomial", pos_);
        std::vector<int> idx;
        int prev = 0;
        while (peek() == 'x') {
            ++pos_;
            if (!std::isdigit(static_cast<unsigned char>(peek())))
                throw ParseError("expected variable index", pos_);
            int i = 0;
            while (std::isdigit(static_cast<unsigned char>(peek())))
                i = i * 10 + (next() - '0');
            if (i < 1 || i > n_)
                throw ParseError("index x" + std::to_string(i) +
                                     " out of 1.." + std::to_string(n_),
                                 pos_);
            if (i <= prev)
                throw ParseError("indices must be strictly increasing", pos_);
            prev = i;
            idx.push_back(i);
            skip_ws();
        }
        return Monomial::from_indices(idx, n_);
    }

    const std::string& s_;
    int n_;
    std::size_t pos_ = 0;
};

}  // namespace detail

inline ExtPoly parse_poly(const std::string& text, int n) {
    return detail::PolyScanner(text, n).run();
}

inline Monomial parse_monomial(const std::string& text, int n) {
    ExtPoly p = parse_poly(text, n);
    if (p.term_count() != 1 || p.terms().begin()->second != 1)
        throw ParseError("expected a single monomial", 0);
    return p.terms().begin()->first;
}

inline std::string format_rational(const Rational& q) {
    std::string s = numerator(q).str();
    if (denominator(q) != 1) s += "/" + denominator(q).str();
    return s;
}

inline std::string format_poly(const ExtPoly& f) {
    if (f.is_zero()) return "0";
    std::string out;
    bool first = true;
    for (const auto& [m, c] : f.terms()) {
        Rational a = c < 0 ? Rational(-c) : c;
        if (first) {
            if (c < 0) out += "-";
        } else {
            out += c < 0 ? " - " : " + ";
        }
        if (a != 1 || m.is_unit()) {
            out += format_rational(a);
            if (!m.is_unit()) out += " ";
        }
        if (!m.is_unit()) out += to_string(m);
        first = false;
    }
    return out;
}

}  // namespace wedge
