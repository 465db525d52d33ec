#pragma once

#include "bernsym/rational.hpp"

#include <string>
#include <vector>

namespace bernsym {

/// Dense univariate polynomial over Rational. coeffs()[i] is the coefficient
/// of x^i; trailing zeros are trimmed, and the zero polynomial is the empty
/// list, so equal polynomials are structurally equal.
class UniPoly {
public:
    UniPoly() = default;
    explicit UniPoly(std::vector<Rational> coeffs) : c_(std::move(coeffs)) { trim(); }

    static UniPoly constant(Rational v) {
        UniPoly p;
        if (!v.is_zero())
            p.c_.push_back(std::move(v));
        return p;
    }

    bool is_zero() const { return c_.empty(); }
    int degree() const { return static_cast<int>(c_.size()) - 1; }

    const std::vector<Rational>& coeffs() const { return c_; }
    Rational coeff(size_t i) const { return i < c_.size() ? c_[i] : Rational(0); }

    Rational eval(const Rational& x) const {
        Rational acc(0);
        for (size_t i = c_.size(); i-- > 0;)
            acc = acc * x + c_[i];
        return acc;
    }

    UniPoly& operator+=(const UniPoly& o) {
        if (o.c_.size() > c_.size())
            c_.resize(o.c_.size());
        for (size_t i = 0; i < o.c_.size(); ++i)
            c_[i] += o.c_[i];
        trim();
        return *this;
    }
    UniPoly& operator-=(const UniPoly& o) {
        if (o.c_.size() > c_.size())
            c_.resize(o.c_.size());
        for (size_t i = 0; i < o.c_.size(); ++i)
            c_[i] -= o.c_[i];
        trim();
        return *this;
    }
    UniPoly& operator*=(const Rational& s) {
        if (s.is_zero()) {
            c_.clear();
            return *this;
        }
        for (auto& v : c_)
            v *= s;
        return *this;
    }

    friend UniPoly operator+(UniPoly a, const UniPoly& b) { return a += b; }
    friend UniPoly operator-(UniPoly a, const UniPoly& b) { return a -= b; }
    friend UniPoly operator*(UniPoly a, const Rational& s) { return a *= s; }
    friend UniPoly operator*(const Rational& s, UniPoly a) { return a *= s; }

    friend UniPoly operator*(const UniPoly& a, const UniPoly& b) {
        if (a.is_zero() || b.is_zero())
            return UniPoly();
        std::vector<Rational> r(a.c_.size() + b.c_.size() - 1);
        for (size_t i = 0; i < a.c_.size(); ++i)
            for (size_t j = 0; j < b.c_.size(); ++j)
                r[i + j] += a.c_[i] * b.c_[j];
        return UniPoly(std::move(r));
    }

    friend bool operator==(const UniPoly& a, const UniPoly& b) { return a.c_ == b.c_; }
    friend bool operator!=(const UniPoly& a, const UniPoly& b) { return !(a == b); }

    /// Human-readable form, highest degree first, e.g. "x^2 - x + 1/6".
    std::string str(const std::string& var = "x") const {
        if (c_.empty())
            return "0";
        std::string out;
        for (size_t i = c_.size(); i-- > 0;) {
            const Rational& v = c_[i];
            if (v.is_zero())
                continue;
            bool neg = v.sign() < 0;
            if (out.empty()) {
                if (neg)
                    out += "-";
            } else {
                out += neg ? " - " : " + ";
            }
            Rational mag = neg ? -v : v;
            bool unit = mag == Rational(1);
            if (i == 0 || !unit)
                out += mag.str();
            if (i > 0) {
                if (!unit)
                    out += "*";
                out += var;
                if (i > 1)
                    out += "^" + std::to_string(i);
            }
        }
        return out.empty() ? "0" : out;
    }

private:
    void trim() {
        while (!c_.empty() && c_.back().is_zero())
            c_.pop_back();
    }

    std::vector<Rational> c_;
};

} // namespace bernsym
