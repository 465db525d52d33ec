#pragma once

#include "bernsym/combinatorics.hpp"
#include "bernsym/rational.hpp"

#include <stdexcept>
#include <utility>
#include <vector>

namespace bernsym {

/// Formal power series in t truncated at a fixed order N: exactly N+1
/// rational coefficients. Binary operations require equal orders; nothing
/// ever changes the order implicitly.
class TruncSeries {
public:
    explicit TruncSeries(unsigned order) : c_(order + 1) {}
    TruncSeries(unsigned order, std::vector<Rational> coeffs) : c_(std::move(coeffs)) {
        if (c_.size() != order + 1)
            throw std::invalid_argument("TruncSeries: coefficient count must be order+1");
    }

    static TruncSeries constant(Rational v, unsigned order) {
        TruncSeries s(order);
        s.c_[0] = std::move(v);
        return s;
    }
    static TruncSeries one(unsigned order) { return constant(Rational(1), order); }

    unsigned order() const { return static_cast<unsigned>(c_.size()) - 1; }
    const Rational& coeff(unsigned i) const { return c_[i]; }
    void set_coeff(unsigned i, Rational v) { c_[i] = std::move(v); }
    const std::vector<Rational>& coeffs() const { return c_; }

    TruncSeries& operator+=(const TruncSeries& o) {
        check_order(o);
        for (size_t i = 0; i < c_.size(); ++i)
            c_[i] += o.c_[i];
        return *this;
    }
    TruncSeries& operator-=(const TruncSeries& o) {
        check_order(o);
        for (size_t i = 0; i < c_.size(); ++i)
            c_[i] -= o.c_[i];
        return *this;
    }
    TruncSeries& operator*=(const Rational& s) {
        for (auto& v : c_)
            v *= s;
        return *this;
    }

    friend TruncSeries operator+(TruncSeries a, const TruncSeries& b) { return a += b; }
    friend TruncSeries operator-(TruncSeries a, const TruncSeries& b) { return a -= b; }
    friend TruncSeries operator*(TruncSeries a, const Rational& s) { return a *= s; }
    friend TruncSeries operator*(const Rational& s, TruncSeries a) { return a *= s; }

    friend TruncSeries operator*(const TruncSeries& a, const TruncSeries& b) {
        a.check_order(b);
        TruncSeries r(a.order());
        for (size_t i = 0; i < a.c_.size(); ++i) {
            if (a.c_[i].is_zero())
                continue;
            for (size_t j = 0; i + j < b.c_.size(); ++j)
                r.c_[i + j] += a.c_[i] * b.c_[j];
        }
        return r;
    }

    TruncSeries pow(unsigned e) const {
        TruncSeries r = one(order());
        for (unsigned i = 0; i < e; ++i)
            r = r * *this;
        return r;
    }

    friend bool operator==(const TruncSeries& a, const TruncSeries& b) { return a.c_ == b.c_; }
    friend bool operator!=(const TruncSeries& a, const TruncSeries& b) { return !(a == b); }

private:
    void check_order(const TruncSeries& o) const {
        if (c_.size() != o.c_.size())
            throw std::invalid_argument("TruncSeries: order mismatch");
    }

    std::vector<Rational> c_;
};

/// e^{at}: coefficient of t^n is a^n/n!.
inline TruncSeries exp_linear(const Rational& a, unsigned N) {
    TruncSeries s(N);
    Rational p(1);
    s.set_coeff(0, p);
    for (unsigned n = 1; n <= N; ++n) {
        p = p * a / Rational(n);
        s.set_coeff(n, p);
    }
    return s;
}

/// (e^{at} - 1)/t: coefficient of t^n is a^{n+1}/(n+1)!. For a != 0 the
/// constant term is a, so the series is invertible.
inline TruncSeries expm1_over_t(const Rational& a, unsigned N) {
    TruncSeries s(N);
    Rational p = a;
    s.set_coeff(0, p);
    for (unsigned n = 1; n <= N; ++n) {
        p = p * a / Rational(n + 1);
        s.set_coeff(n, p);
    }
    return s;
}

/// Long division; den must have a nonzero constant term. The quotient q
/// satisfies q * den = num through order N.
inline TruncSeries series_div(const TruncSeries& num, const TruncSeries& den) {
    if (num.order() != den.order())
        throw std::invalid_argument("series_div: order mismatch");
    if (den.coeff(0).is_zero())
        throw std::domain_error("series_div: denominator has zero constant term");
    unsigned N = num.order();
    TruncSeries q(N);
    for (unsigned n = 0; n <= N; ++n) {
        Rational acc = num.coeff(n);
        for (unsigned j = 1; j <= n; ++j)
            acc -= den.coeff(j) * q.coeff(n - j);
        q.set_coeff(n, acc / den.coeff(0));
    }
    return q;
}

/// t/(e^t - 1); coefficient of t^n is B_n/n!.
inline TruncSeries gen_bernoulli(unsigned N) {
    return series_div(TruncSeries::one(N), expm1_over_t(Rational(1), N));
}

/// sum_{i=0}^{w-1} e^{it}; coefficient of t^k is S_k(w-1)/k!.
inline TruncSeries gen_power_sum(long w, unsigned N) {
    TruncSeries s(N);
    for (long i = 0; i < w; ++i)
        s += exp_linear(Rational(i), N);
    return s;
}

} // namespace bernsym
