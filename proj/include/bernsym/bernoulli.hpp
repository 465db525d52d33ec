#pragma once

#include "bernsym/combinatorics.hpp"
#include "bernsym/rational.hpp"
#include "bernsym/unipoly.hpp"

#include <map>
#include <mutex>
#include <utility>
#include <vector>

namespace bernsym {

/// Bernoulli numbers B_n (convention B_1 = -1/2) and polynomials B_n(x),
/// grown on demand. The polynomial table satisfies B_n(0) = B_n and each
/// B_n(x) is monic of degree n.
class BernoulliCache {
public:
    Rational number(unsigned n) {
        std::lock_guard<std::mutex> lk(mu_);
        ensure_numbers(n);
        return numbers_[n];
    }

    UniPoly polynomial(unsigned n) {
        std::lock_guard<std::mutex> lk(mu_);
        ensure_numbers(n);
        while (polys_.size() <= n) {
            unsigned d = static_cast<unsigned>(polys_.size());
            std::vector<Rational> c(d + 1);
            for (unsigned j = 0; j <= d; ++j)
                c[j] = Rational(binomial(d, j)) * numbers_[d - j];
            polys_.emplace_back(std::move(c));
        }
        return polys_[n];
    }

private:
    // sum_{k=0}^{n} C(n+1,k) B_k = 0 for n >= 1, with B_0 = 1.
    void ensure_numbers(unsigned n) {
        if (numbers_.empty())
            numbers_.push_back(Rational(1));
        while (numbers_.size() <= n) {
            unsigned d = static_cast<unsigned>(numbers_.size());
            Rational acc(0);
            for (unsigned k = 0; k < d; ++k)
                acc += Rational(binomial(d + 1, k)) * numbers_[k];
            numbers_.push_back(-acc / Rational(d + 1));
        }
    }

    std::mutex mu_;
    std::vector<Rational> numbers_;
    std::vector<UniPoly> polys_;
};

namespace detail {
inline BernoulliCache& bernoulli_cache() {
    static BernoulliCache c;
    return c;
}
} // namespace detail

inline Rational bernoulli_number(unsigned n) { return detail::bernoulli_cache().number(n); }
inline UniPoly bernoulli_polynomial(unsigned n) { return detail::bernoulli_cache().polynomial(n); }

/// Memoized power sums S_k(n) = 0^k + 1^k + ... + n^k, with 0^0 = 1.
/// Every value is a nonnegative integer.
class PowerSumTable {
public:
    Rational value(unsigned k, unsigned n) {
        std::lock_guard<std::mutex> lk(mu_);
        auto key = std::make_pair(k, n);
        auto it = vals_.find(key);
        if (it != vals_.end())
            return it->second;
        BigInt acc = k == 0 ? 1 : 0; // 0^0 = 1, 0^k = 0 otherwise
        for (unsigned i = 1; i <= n; ++i)
            acc += boost::multiprecision::pow(BigInt(i), k);
        Rational r{std::move(acc)};
        vals_.emplace(key, r);
        return r;
    }

private:
    std::mutex mu_;
    std::map<std::pair<unsigned, unsigned>, Rational> vals_;
};

namespace detail {
inline PowerSumTable& power_sum_table() {
    static PowerSumTable t;
    return t;
}
} // namespace detail

/// S_k(n) by direct summation (memoized).
inline Rational power_sum(unsigned k, unsigned n) {
    return detail::power_sum_table().value(k, n);
}

/// Independent closed form S_k(n) = (B_{k+1}(n+1) - B_{k+1}) / (k+1).
inline Rational power_sum_oracle(unsigned k, unsigned n) {
    UniPoly b = bernoulli_polynomial(k + 1);
    return (b.eval(Rational(static_cast<long long>(n) + 1)) - bernoulli_number(k + 1)) /
           Rational(k + 1);
}

} // namespace bernsym
