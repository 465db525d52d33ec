#pragma once

#include "bernsym/combinatorics.hpp"
#include "bernsym/rational.hpp"
#include "bernsym/unipoly.hpp"

#include <array>
#include <map>
#include <optional>
#include <string>

namespace bernsym {

enum class Var : unsigned { y1 = 0, y2 = 1, y3 = 2 };

inline const char* var_name(Var v) {
    switch (v) {
    case Var::y1: return "y1";
    case Var::y2: return "y2";
    default: return "y3";
    }
}

/// Sparse polynomial in y1, y2, y3 over Rational. Terms are keyed by the
/// exponent vector (e1, e2, e3) in an ordered map; zero coefficients are
/// never stored, so structural equality is polynomial equality and
/// iteration order is deterministic.
class MultiPoly {
public:
    using Exponents = std::array<unsigned, 3>;
    using TermMap = std::map<Exponents, Rational>;

    MultiPoly() = default;

    static MultiPoly constant(Rational v) {
        MultiPoly p;
        p.add_term({0, 0, 0}, std::move(v));
        return p;
    }
    static MultiPoly variable(Var v, unsigned e = 1) {
        MultiPoly p;
        Exponents ex{0, 0, 0};
        ex[static_cast<unsigned>(v)] = e;
        p.add_term(ex, Rational(1));
        return p;
    }

    bool is_zero() const { return terms_.empty(); }
    const TermMap& terms() const { return terms_; }

    void add_term(const Exponents& e, Rational coeff) {
        if (coeff.is_zero())
            return;
        auto it = terms_.find(e);
        if (it == terms_.end()) {
            terms_.emplace(e, std::move(coeff));
        } else {
            it->second += coeff;
            if (it->second.is_zero())
                terms_.erase(it);
        }
    }

    Rational coeff(const Exponents& e) const {
        auto it = terms_.find(e);
        return it == terms_.end() ? Rational(0) : it->second;
    }

    /// -1 for the zero polynomial.
    int total_degree() const {
        int d = -1;
        for (const auto& [e, c] : terms_) {
            int t = static_cast<int>(e[0] + e[1] + e[2]);
            if (t > d)
                d = t;
        }
        return d;
    }

    std::array<bool, 3> used_vars() const {
        std::array<bool, 3> u{false, false, false};
        for (const auto& [e, c] : terms_)
            for (int i = 0; i < 3; ++i)
                u[i] = u[i] || e[i] > 0;
        return u;
    }

    MultiPoly& operator+=(const MultiPoly& o) {
        for (const auto& [e, c] : o.terms_)
            add_term(e, c);
        return *this;
    }
    MultiPoly& operator-=(const MultiPoly& o) {
        for (const auto& [e, c] : o.terms_)
            add_term(e, -c);
        return *this;
    }
    MultiPoly& operator*=(const Rational& s) {
        if (s.is_zero()) {
            terms_.clear();
            return *this;
        }
        for (auto& [e, c] : terms_)
            c *= s;
        return *this;
    }

    friend MultiPoly operator+(MultiPoly a, const MultiPoly& b) { return a += b; }
    friend MultiPoly operator-(MultiPoly a, const MultiPoly& b) { return a -= b; }
    friend MultiPoly operator*(MultiPoly a, const Rational& s) { return a *= s; }
    friend MultiPoly operator*(const Rational& s, MultiPoly a) { return a *= s; }
    MultiPoly operator-() const {
        MultiPoly r = *this;
        for (auto& [e, c] : r.terms_)
            c = -c;
        return r;
    }

    friend MultiPoly operator*(const MultiPoly& a, const MultiPoly& b) {
        MultiPoly r;
        for (const auto& [ea, ca] : a.terms_)
            for (const auto& [eb, cb] : b.terms_)
                r.add_term({ea[0] + eb[0], ea[1] + eb[1], ea[2] + eb[2]}, ca * cb);
        return r;
    }

    friend bool operator==(const MultiPoly& a, const MultiPoly& b) {
        return a.terms_ == b.terms_;
    }
    friend bool operator!=(const MultiPoly& a, const MultiPoly& b) { return !(a == b); }

    struct Difference {
        Exponents monomial;
        Rational lhs;
        Rational rhs;
    };

    /// First monomial (in exponent order) whose coefficients differ, or
    /// nullopt when the polynomials are equal.
    static std::optional<Difference> first_difference(const MultiPoly& a, const MultiPoly& b) {
        auto ia = a.terms_.begin();
        auto ib = b.terms_.begin();
        while (ia != a.terms_.end() || ib != b.terms_.end()) {
            if (ib == b.terms_.end() || (ia != a.terms_.end() && ia->first < ib->first)) {
                return Difference{ia->first, ia->second, Rational(0)};
            }
            if (ia == a.terms_.end() || ib->first < ia->first) {
                return Difference{ib->first, Rational(0), ib->second};
            }
            if (ia->second != ib->second)
                return Difference{ia->first, ia->second, ib->second};
            ++ia;
            ++ib;
        }
        return std::nullopt;
    }

    /// Substitute y_j -> scale[j] * target for every variable, collapsing the
    /// polynomial into the single variable `target`.
    MultiPoly collapse_to(Var target, const std::array<Rational, 3>& scale) const {
        MultiPoly r;
        for (const auto& [e, c] : terms_) {
            Rational v = c;
            for (int j = 0; j < 3; ++j)
                v *= rational_pow(scale[j], e[j]);
            Exponents ex{0, 0, 0};
            ex[static_cast<unsigned>(target)] = e[0] + e[1] + e[2];
            r.add_term(ex, v);
        }
        return r;
    }

    std::string str() const {
        if (terms_.empty())
            return "0";
        std::string out;
        for (const auto& [e, c] : terms_) {
            if (!out.empty())
                out += " + ";
            out += c.str();
            for (int j = 0; j < 3; ++j)
                if (e[j] > 0) {
                    out += "*";
                    out += var_name(static_cast<Var>(j));
                    if (e[j] > 1)
                        out += "^" + std::to_string(e[j]);
                }
        }
        return out;
    }

private:
    TermMap terms_;
};

/// Expand p(scale*v + shift) as a polynomial in the single variable v:
/// the coefficient of v^j is sum_{i>=j} p_i * C(i,j) * scale^j * shift^(i-j).
inline MultiPoly substitute_affine(const UniPoly& p, const Rational& scale,
                                   const Rational& shift, Var v) {
    MultiPoly out;
    const auto& c = p.coeffs();
    for (size_t j = 0; j < c.size(); ++j) {
        Rational acc(0);
        for (size_t i = j; i < c.size(); ++i) {
            if (c[i].is_zero())
                continue;
            acc += c[i] * Rational(binomial(static_cast<unsigned>(i), static_cast<unsigned>(j))) *
                   rational_pow(shift, static_cast<long long>(i - j));
        }
        acc *= rational_pow(scale, static_cast<long long>(j));
        MultiPoly::Exponents e{0, 0, 0};
        e[static_cast<unsigned>(v)] = static_cast<unsigned>(j);
        out.add_term(e, acc);
    }
    return out;
}

} // namespace bernsym
