#pragma once

#include "bernsym/rational.hpp"

#include <mutex>
#include <stdexcept>
#include <vector>

namespace bernsym {

namespace detail {

// Shared factorial table; seeded past the grids the verifier uses, grown on
// demand under a lock so concurrent workers see identical values.
class FactorialTable {
public:
    static constexpr unsigned kInitialMax = 64;

    BigInt get(unsigned n) {
        std::lock_guard<std::mutex> lk(mu_);
        if (f_.empty()) {
            f_.reserve(kInitialMax + 1);
            f_.push_back(1);
            while (f_.size() <= kInitialMax)
                f_.push_back(f_.back() * static_cast<unsigned>(f_.size()));
        }
        while (f_.size() <= n)
            f_.push_back(f_.back() * static_cast<unsigned>(f_.size()));
        return f_[n];
    }

private:
    std::mutex mu_;
    std::vector<BigInt> f_;
};

inline FactorialTable& factorial_table() {
    static FactorialTable t;
    return t;
}

} // namespace detail

inline BigInt factorial(unsigned n) { return detail::factorial_table().get(n); }

/// n!/(k!(n-k)!) for k <= n, and 0 when k > n.
inline BigInt binomial(unsigned n, unsigned k) {
    if (k > n)
        return BigInt(0);
    return factorial(n) / (factorial(k) * factorial(n - k));
}

/// n!/(k! l! m!); requires k + l + m = n.
inline BigInt multinomial(unsigned n, unsigned k, unsigned l, unsigned m) {
    if (k + l + m != n)
        throw std::invalid_argument("multinomial: indices must sum to n");
    return factorial(n) / (factorial(k) * factorial(l) * factorial(m));
}

} // namespace bernsym
