#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <ostream>
#include <stdexcept>
#include <string>
#include <utility>

namespace bernsym {

using BigInt = boost::multiprecision::cpp_int;

/// Exact rational number in canonical form: denominator > 0,
/// gcd(|numerator|, denominator) = 1, zero stored as 0/1.
/// Structural equality therefore coincides with numeric equality.
class Rational {
public:
    Rational() : num_(0), den_(1) {}
    Rational(long long n) : num_(n), den_(1) {}
    Rational(BigInt n) : num_(std::move(n)), den_(1) {}
    Rational(BigInt n, BigInt d) : num_(std::move(n)), den_(std::move(d)) { normalize(); }

    const BigInt& num() const { return num_; }
    const BigInt& den() const { return den_; }

    bool is_zero() const { return num_ == 0; }
    bool is_integer() const { return den_ == 1; }
    int sign() const { return num_ == 0 ? 0 : (num_ < 0 ? -1 : 1); }

    Rational operator-() const {
        Rational r;
        r.num_ = -num_;
        r.den_ = den_;
        return r;
    }

    Rational& operator+=(const Rational& o) {
        num_ = num_ * o.den_ + o.num_ * den_;
        den_ *= o.den_;
        normalize();
        return *this;
    }
    Rational& operator-=(const Rational& o) {
        num_ = num_ * o.den_ - o.num_ * den_;
        den_ *= o.den_;
        normalize();
        return *this;
    }
    Rational& operator*=(const Rational& o) {
        num_ *= o.num_;
        den_ *= o.den_;
        normalize();
        return *this;
    }
    Rational& operator/=(const Rational& o) {
        if (o.num_ == 0)
            throw std::domain_error("Rational: division by zero");
        num_ *= o.den_;
        den_ *= o.num_;
        normalize();
        return *this;
    }

    friend Rational operator+(Rational a, const Rational& b) { return a += b; }
    friend Rational operator-(Rational a, const Rational& b) { return a -= b; }
    friend Rational operator*(Rational a, const Rational& b) { return a *= b; }
    friend Rational operator/(Rational a, const Rational& b) { return a /= b; }

    friend bool operator==(const Rational& a, const Rational& b) {
        return a.num_ == b.num_ && a.den_ == b.den_;
    }
    friend bool operator!=(const Rational& a, const Rational& b) { return !(a == b); }
    friend bool operator<(const Rational& a, const Rational& b) {
        return a.num_ * b.den_ < b.num_ * a.den_;
    }
    friend bool operator>(const Rational& a, const Rational& b) { return b < a; }
    friend bool operator<=(const Rational& a, const Rational& b) { return !(b < a); }
    friend bool operator>=(const Rational& a, const Rational& b) { return !(a < b); }

    /// "p/q", or just "p" when the denominator is 1.
    std::string str() const {
        std::string s = num_.str();
        if (den_ != 1) {
            s += '/';
            s += den_.str();
        }
        return s;
    }

    friend std::ostream& operator<<(std::ostream& os, const Rational& r) {
        return os << r.str();
    }

private:
    void normalize() {
        if (den_ == 0)
            throw std::domain_error("Rational: zero denominator");
        if (num_ == 0) {
            den_ = 1;
            return;
        }
        if (den_ < 0) {
            num_ = -num_;
            den_ = -den_;
        }
        BigInt g = boost::multiprecision::gcd(num_ < 0 ? BigInt(-num_) : num_, den_);
        if (g > 1) {
            num_ /= g;
            den_ /= g;
        }
    }

    BigInt num_;
    BigInt den_;
};

/// base^exp for signed exponents. exp = 0 gives 1; a negative exponent
/// inverts, which requires a nonzero base.
inline Rational rational_pow(const Rational& base, long long exp) {
    if (exp == 0)
        return Rational(1);
    if (base.is_zero()) {
        if (exp < 0)
            throw std::domain_error("rational_pow: zero base with negative exponent");
        return Rational(0);
    }
    unsigned e = exp < 0 ? static_cast<unsigned>(-exp) : static_cast<unsigned>(exp);
    BigInt n = boost::multiprecision::pow(base.num(), e);
    BigInt d = boost::multiprecision::pow(base.den(), e);
    return exp > 0 ? Rational(std::move(n), std::move(d)) : Rational(std::move(d), std::move(n));
}

} // namespace bernsym
