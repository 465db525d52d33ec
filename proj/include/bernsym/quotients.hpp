#pragma once

#include "bernsym/bernoulli.hpp"
#include "bernsym/series.hpp"

#include <array>
#include <optional>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

namespace bernsym {

/// The three families of generating-function quotients. Each is built from
/// exponential building blocks with every power of t cancelled symbolically,
/// so all series divisions have an invertible denominator.
enum class LambdaFamily { L23, L13, L12 };

inline const char* lambda_family_name(LambdaFamily f) {
    switch (f) {
    case LambdaFamily::L23: return "L23";
    case LambdaFamily::L13: return "L13";
    default: return "L12";
    }
}

struct LambdaSpec {
    LambdaFamily family;
    int i = 0;
    std::array<long, 3> weights{1, 1, 1};
    std::vector<Rational> ys; // length 3-i for L23/L13, 1 for L12^0, 0 for L12^1

    void validate() const {
        for (long w : weights)
            if (w < 1)
                throw std::invalid_argument("LambdaSpec: weights must be >= 1");
        if (family == LambdaFamily::L12) {
            if (i != 0 && i != 1)
                throw std::invalid_argument("LambdaSpec: L12 index must be 0 or 1");
            if (ys.size() != static_cast<size_t>(1 - i))
                throw std::invalid_argument("LambdaSpec: L12 needs 1-i y values");
        } else {
            if (i < 0 || i > 3)
                throw std::invalid_argument("LambdaSpec: index must be in 0..3");
            if (ys.size() != static_cast<size_t>(3 - i))
                throw std::invalid_argument("LambdaSpec: needs 3-i y values");
        }
    }
};

/// Explicit closed form of the requested quotient as a truncated series.
///
///   L23^i: (w1w2w3)^{2-i} e^{w1w2w3(sum ys)t} E(w1w2w3)^i
///           / (E(w2w3) E(w1w3) E(w1w2))
///   L13^i: (w1w2w3)^{1-i} e^{w1w2w3(sum ys)t} E(w1w2w3)^i
///           / (E(w1) E(w2) E(w3))
///   L12^0: (w1w2w3) e^{(w2w3+w1w3+w1w2)yt} / (E(w1) E(w2) E(w3))
///   L12^1: (w1w2w3)^{-1} E(w2w3) E(w1w3) E(w1w2) / (E(w1) E(w2) E(w3))
///
/// where E(a) = (e^{at} - 1)/t, which has constant term a.
inline TruncSeries quotient_lambda(const LambdaSpec& spec, unsigned N) {
    spec.validate();
    const long w1 = spec.weights[0], w2 = spec.weights[1], w3 = spec.weights[2];
    const long www = w1 * w2 * w3;

    Rational ysum(0);
    for (const auto& y : spec.ys)
        ysum += y;

    switch (spec.family) {
    case LambdaFamily::L23: {
        TruncSeries num = exp_linear(Rational(www) * ysum, N);
        if (spec.i > 0)
            num = num * expm1_over_t(Rational(www), N).pow(spec.i);
        TruncSeries den = expm1_over_t(Rational(w2 * w3), N) *
                          expm1_over_t(Rational(w1 * w3), N) *
                          expm1_over_t(Rational(w1 * w2), N);
        return rational_pow(Rational(www), 2 - spec.i) * series_div(num, den);
    }
    case LambdaFamily::L13: {
        TruncSeries num = exp_linear(Rational(www) * ysum, N);
        if (spec.i > 0)
            num = num * expm1_over_t(Rational(www), N).pow(spec.i);
        TruncSeries den = expm1_over_t(Rational(w1), N) * expm1_over_t(Rational(w2), N) *
                          expm1_over_t(Rational(w3), N);
        return rational_pow(Rational(www), 1 - spec.i) * series_div(num, den);
    }
    default: { // L12
        TruncSeries den = expm1_over_t(Rational(w1), N) * expm1_over_t(Rational(w2), N) *
                          expm1_over_t(Rational(w3), N);
        if (spec.i == 0) {
            Rational coef = Rational(w2 * w3 + w1 * w3 + w1 * w2) * spec.ys[0];
            return Rational(www) * series_div(exp_linear(coef, N), den);
        }
        TruncSeries num = expm1_over_t(Rational(w2 * w3), N) *
                          expm1_over_t(Rational(w1 * w3), N) *
                          expm1_over_t(Rational(w1 * w2), N);
        return rational_pow(Rational(www), -1) * series_div(num, den);
    }
    }
}

struct SeriesWitness {
    unsigned index = 0; // differing t-power (or n for coefficient checks)
    Rational lhs;
    Rational rhs;
    std::string context;
};

struct SeriesCheck {
    bool pass = true;
    std::optional<SeriesWitness> witness;
};

namespace detail {

inline std::optional<unsigned> first_series_diff(const TruncSeries& a, const TruncSeries& b) {
    for (unsigned k = 0; k <= a.order(); ++k)
        if (a.coeff(k) != b.coeff(k))
            return k;
    return std::nullopt;
}

inline std::vector<Rational> take_ys(const std::vector<Rational>& ys, size_t count) {
    std::vector<Rational> out(ys.begin(), ys.begin() + std::min(count, ys.size()));
    out.resize(count, Rational(0));
    return out;
}

} // namespace detail

/// Recomputes the quotient under all six permutations of the weights (ys
/// fixed) and requires coefficient-wise equality. `corrupt_order`, when set,
/// perturbs the reference series at that order; used as a negative control.
inline SeriesCheck s3_invariance_check(LambdaFamily family, int i,
                                       const std::array<long, 3>& weights,
                                       const std::vector<Rational>& ys, unsigned N,
                                       std::optional<unsigned> corrupt_order = std::nullopt) {
    size_t need = family == LambdaFamily::L12 ? static_cast<size_t>(1 - i)
                                              : static_cast<size_t>(3 - i);
    LambdaSpec ref{family, i, weights, detail::take_ys(ys, need)};
    TruncSeries base = quotient_lambda(ref, N);
    if (corrupt_order)
        base.set_coeff(std::min(*corrupt_order, N), base.coeff(std::min(*corrupt_order, N)) + Rational(1));

    static constexpr std::array<std::array<int, 3>, 6> kPerms{
        {{0, 1, 2}, {0, 2, 1}, {1, 0, 2}, {1, 2, 0}, {2, 0, 1}, {2, 1, 0}}};
    for (const auto& p : kPerms) {
        LambdaSpec s = ref;
        s.weights = {weights[p[0]], weights[p[1]], weights[p[2]]};
        TruncSeries got = quotient_lambda(s, N);
        if (auto k = detail::first_series_diff(base, got)) {
            std::ostringstream ctx;
            ctx << lambda_family_name(family) << "^" << i << " perm(" << p[0] << p[1] << p[2]
                << ")";
            return {false, SeriesWitness{*k, base.coeff(*k), got.coeff(*k), ctx.str()}};
        }
    }
    return {};
}

namespace detail {

inline Rational bp_at(unsigned k, const Rational& x) {
    return bernoulli_polynomial(k).eval(x);
}
inline Rational ps(unsigned k, long w) { return power_sum(k, static_cast<unsigned>(w - 1)); }
inline Rational wp(long w, long long e) { return rational_pow(Rational(w), e); }

// The closed-form nth coefficients (times n!) of each quotient, evaluated
// with the bernoulli module rather than the series engine.
inline Rational formula_sum(const std::string& label, unsigned n, const std::array<long, 3>& w,
                            const std::vector<Rational>& ys) {
    const long w1 = w[0], w2 = w[1], w3 = w[2];
    auto y = [&](size_t j) { return j < ys.size() ? ys[j] : Rational(0); };
    Rational acc(0);

    if (label == "24") {
        for (unsigned k = 0; k <= n; ++k)
            for (unsigned l = 0; l + k <= n; ++l) {
                unsigned m = n - k - l;
                acc += Rational(multinomial(n, k, l, m)) * bp_at(k, Rational(w1) * y(0)) *
                       bp_at(l, Rational(w2) * y(1)) * bp_at(m, Rational(w3) * y(2)) *
                       wp(w1, l + m) * wp(w2, k + m) * wp(w3, k + l);
            }
    } else if (label == "27") {
        for (unsigned k = 0; k <= n; ++k)
            for (unsigned l = 0; l + k <= n; ++l) {
                unsigned m = n - k - l;
                acc += Rational(multinomial(n, k, l, m)) * bp_at(k, Rational(w1) * y(0)) *
                       bp_at(l, Rational(w2) * y(1)) * ps(m, w3) * wp(w1, l + m) *
                       wp(w2, k + m) * wp(w3, static_cast<long long>(k) + l - 1);
            }
    } else if (label == "28") {
        for (unsigned k = 0; k <= n; ++k) {
            Rational inner(0);
            for (long i = 0; i < w3; ++i)
                inner += bp_at(n - k, Rational(w2) * y(1) + Rational(w2 * i, w3));
            acc += Rational(binomial(n, k)) * bp_at(k, Rational(w1) * y(0)) * inner *
                   wp(w1, n - k) * wp(w2, k);
        }
        acc *= wp(w3, static_cast<long long>(n) - 1);
    } else if (label == "30") {
        for (unsigned k = 0; k <= n; ++k)
            for (unsigned l = 0; l + k <= n; ++l) {
                unsigned m = n - k - l;
                acc += Rational(multinomial(n, k, l, m)) * bp_at(k, Rational(w1) * y(0)) *
                       ps(l, w2) * ps(m, w3) * wp(w1, l + m) *
                       wp(w2, static_cast<long long>(k) + m - 1) *
                       wp(w3, static_cast<long long>(k) + l - 1);
            }
    } else if (label == "32") {
        for (unsigned k = 0; k <= n; ++k) {
            Rational inner(0);
            for (long i = 0; i < w2; ++i)
                inner += bp_at(k, Rational(w1) * y(0) + Rational(w1 * i, w2));
            acc += Rational(binomial(n, k)) * inner * ps(n - k, w3) * wp(w1, n - k) *
                   wp(w3, static_cast<long long>(k) - 1);
        }
        acc *= wp(w2, static_cast<long long>(n) - 1);
    } else if (label == "33") {
        for (long i = 0; i < w2; ++i)
            for (long j = 0; j < w3; ++j)
                acc += bp_at(n, Rational(w1) * y(0) + Rational(w1 * i, w2) + Rational(w1 * j, w3));
        acc *= wp(w2 * w3, static_cast<long long>(n) - 1);
    } else if (label == "34") {
        for (unsigned k = 0; k <= n; ++k)
            for (unsigned l = 0; l + k <= n; ++l) {
                unsigned m = n - k - l;
                acc += Rational(multinomial(n, k, l, m)) * ps(k, w1) * ps(l, w2) * ps(m, w3) *
                       wp(w1, static_cast<long long>(l) + m - 1) *
                       wp(w2, static_cast<long long>(k) + m - 1) *
                       wp(w3, static_cast<long long>(k) + l - 1);
            }
    } else if (label == "35") {
        for (unsigned k = 0; k <= n; ++k)
            for (unsigned l = 0; l + k <= n; ++l) {
                unsigned m = n - k - l;
                acc += Rational(multinomial(n, k, l, m)) * bp_at(k, Rational(w2) * y(0)) *
                       bp_at(l, Rational(w3) * y(0)) * bp_at(m, Rational(w1) * y(0)) *
                       wp(w1, k) * wp(w2, l) * wp(w3, m);
            }
    } else if (label == "36") {
        for (unsigned k = 0; k <= n; ++k)
            for (unsigned l = 0; l + k <= n; ++l) {
                unsigned m = n - k - l;
                acc += Rational(multinomial(n, k, l, m)) * ps(k, w2) * ps(l, w3) * ps(m, w1) *
                       wp(w1, static_cast<long long>(k) - 1) *
                       wp(w2, static_cast<long long>(l) - 1) *
                       wp(w3, static_cast<long long>(m) - 1);
            }
    } else {
        throw std::invalid_argument("coefficient_formula_check: unknown label " + label);
    }
    return acc;
}

inline LambdaSpec spec_for_label(const std::string& label, const std::array<long, 3>& w,
                                 const std::vector<Rational>& ys) {
    if (label == "24")
        return {LambdaFamily::L23, 0, w, take_ys(ys, 3)};
    if (label == "27" || label == "28")
        return {LambdaFamily::L23, 1, w, take_ys(ys, 2)};
    if (label == "30" || label == "32" || label == "33")
        return {LambdaFamily::L23, 2, w, take_ys(ys, 1)};
    if (label == "34")
        return {LambdaFamily::L23, 3, w, {}};
    if (label == "35")
        return {LambdaFamily::L12, 0, w, take_ys(ys, 1)};
    if (label == "36")
        return {LambdaFamily::L12, 1, w, {}};
    throw std::invalid_argument("coefficient_formula_check: unknown label " + label);
}

} // namespace detail

/// For n = 0..n_max, checks that the finite closed-form sum named by `label`
/// equals n! times the t^n coefficient of the matching quotient series.
inline SeriesCheck coefficient_formula_check(const std::string& label,
                                             const std::array<long, 3>& weights,
                                             const std::vector<Rational>& ys, unsigned n_max,
                                             std::optional<unsigned> corrupt_order = std::nullopt) {
    LambdaSpec spec = detail::spec_for_label(label, weights, ys);
    TruncSeries q = quotient_lambda(spec, n_max);
    if (corrupt_order)
        q.set_coeff(std::min(*corrupt_order, n_max),
                    q.coeff(std::min(*corrupt_order, n_max)) + Rational(1));
    for (unsigned n = 0; n <= n_max; ++n) {
        Rational series_side = q.coeff(n) * Rational(factorial(n));
        Rational sum_side = detail::formula_sum(label, n, weights, spec.ys);
        if (series_side != sum_side)
            return {false, SeriesWitness{n, sum_side, series_side, "label " + label}};
    }
    return {};
}

/// L23^i at weights (w2w3, w1w3, w1w2) must equal L13^i at (w1, w2, w3) with
/// t replaced by w1w2w3*t, i.e. the k-th coefficient scaled by (w1w2w3)^k.
/// Checked for every i in 0..3 (ys truncated per index).
inline SeriesCheck lambda13_substitution_check(const std::array<long, 3>& weights,
                                               const std::vector<Rational>& ys, unsigned N,
                                               std::optional<unsigned> corrupt_order = std::nullopt) {
    const long w1 = weights[0], w2 = weights[1], w3 = weights[2];
    const Rational www(w1 * w2 * w3);
    for (int i = 0; i <= 3; ++i) {
        auto ys_i = detail::take_ys(ys, static_cast<size_t>(3 - i));
        LambdaSpec a{LambdaFamily::L23, i, {w2 * w3, w1 * w3, w1 * w2}, ys_i};
        LambdaSpec b{LambdaFamily::L13, i, weights, ys_i};
        TruncSeries lhs = quotient_lambda(a, N);
        if (corrupt_order)
            lhs.set_coeff(std::min(*corrupt_order, N),
                          lhs.coeff(std::min(*corrupt_order, N)) + Rational(1));
        TruncSeries rhs = quotient_lambda(b, N);
        Rational scale(1);
        for (unsigned k = 0; k <= N; ++k) {
            Rational want = rhs.coeff(k) * scale;
            if (lhs.coeff(k) != want) {
                std::ostringstream ctx;
                ctx << "L13 substitution, i=" << i;
                return {false, SeriesWitness{k, lhs.coeff(k), want, ctx.str()}};
            }
            scale *= www;
        }
    }
    return {};
}

} // namespace bernsym
