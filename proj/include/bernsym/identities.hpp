#pragma once

#include "bernsym/bernoulli.hpp"
#include "bernsym/combinatorics.hpp"
#include "bernsym/multipoly.hpp"

#include <array>
#include <chrono>
#include <optional>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

namespace bernsym {

/// The identity families: eight three-variable theorems T*, their stated
/// corollaries C*, and INTRO, the eight-way chain of two-weight identities.
enum class FamilyId {
    T1, T2, T5, T8, T11, T14, T16, T17,
    C3, C4, C6, C7, C9, C10, C12, C13, C15, C18,
    INTRO,
};

inline const std::vector<FamilyId>& all_families() {
    static const std::vector<FamilyId> v{
        FamilyId::T1, FamilyId::T2, FamilyId::T5, FamilyId::T8, FamilyId::T11,
        FamilyId::T14, FamilyId::T16, FamilyId::T17, FamilyId::C3, FamilyId::C4,
        FamilyId::C6, FamilyId::C7, FamilyId::C9, FamilyId::C10, FamilyId::C12,
        FamilyId::C13, FamilyId::C15, FamilyId::C18, FamilyId::INTRO};
    return v;
}

inline const std::vector<FamilyId>& theorem_families() {
    static const std::vector<FamilyId> v{FamilyId::T1, FamilyId::T2, FamilyId::T5,
                                         FamilyId::T8, FamilyId::T11, FamilyId::T14,
                                         FamilyId::T16, FamilyId::T17};
    return v;
}

inline std::string family_name(FamilyId f) {
    switch (f) {
    case FamilyId::T1: return "T1";
    case FamilyId::T2: return "T2";
    case FamilyId::T5: return "T5";
    case FamilyId::T8: return "T8";
    case FamilyId::T11: return "T11";
    case FamilyId::T14: return "T14";
    case FamilyId::T16: return "T16";
    case FamilyId::T17: return "T17";
    case FamilyId::C3: return "C3";
    case FamilyId::C4: return "C4";
    case FamilyId::C6: return "C6";
    case FamilyId::C7: return "C7";
    case FamilyId::C9: return "C9";
    case FamilyId::C10: return "C10";
    case FamilyId::C12: return "C12";
    case FamilyId::C13: return "C13";
    case FamilyId::C15: return "C15";
    case FamilyId::C18: return "C18";
    default: return "INTRO";
    }
}

inline std::optional<FamilyId> family_from_name(const std::string& s) {
    for (FamilyId f : all_families())
        if (family_name(f) == s)
            return f;
    return std::nullopt;
}

/// The double-shift family T14 ships with the variant whose third expression
/// steps the j-sum by w2/w1; kLiteral selects the w2/w3 step instead, which
/// breaks the three-way equality and exists for negative testing.
enum class T14Variant { kPattern, kLiteral };

namespace detail {

// B_k(scale*y + shift) expanded in the variable v.
inline MultiPoly bmp(unsigned k, long scale, const Rational& shift, Var v) {
    return substitute_affine(bernoulli_polynomial(k), Rational(scale), shift, v);
}

inline Rational S(unsigned k, long w) { return power_sum(k, static_cast<unsigned>(w - 1)); }
inline Rational wpw(long w, long long e) { return rational_pow(Rational(w), e); }

// One table of B_j(scale*y + shift_i) summed over i = 0..count-1 per degree j.
inline std::vector<MultiPoly> shifted_bernoulli_sums(unsigned n_max, long scale, long num,
                                                     long den, Var v) {
    std::vector<MultiPoly> out(n_max + 1);
    for (unsigned j = 0; j <= n_max; ++j) {
        MultiPoly acc;
        for (long i = 0; i < den; ++i)
            acc += bmp(j, scale, Rational(num * i, den), v);
        out[j] = acc;
    }
    return out;
}

inline std::vector<MultiPoly> bernoulli_row(unsigned n_max, long scale, Var v) {
    std::vector<MultiPoly> out(n_max + 1);
    for (unsigned j = 0; j <= n_max; ++j)
        out[j] = bmp(j, scale, Rational(0), v);
    return out;
}

// --- base expressions -------------------------------------------------------
// Each function is one displayed expression shape; the registry instantiates
// it at permuted or specialized weights. a, b, c are actual weight values.

inline MultiPoly base_t1(unsigned n, long a, long b, long c) {
    auto A = bernoulli_row(n, a, Var::y1);
    auto B = bernoulli_row(n, b, Var::y2);
    auto C = bernoulli_row(n, c, Var::y3);
    MultiPoly acc;
    for (unsigned k = 0; k <= n; ++k)
        for (unsigned l = 0; l + k <= n; ++l) {
            unsigned m = n - k - l;
            Rational s = Rational(multinomial(n, k, l, m)) * wpw(a, l + m) * wpw(b, k + m) *
                         wpw(c, k + l);
            acc += A[k] * B[l] * C[m] * s;
        }
    return acc;
}

inline MultiPoly base_t2(unsigned n, long a, long b, long c) {
    auto A = bernoulli_row(n, a, Var::y1);
    auto B = bernoulli_row(n, b, Var::y2);
    MultiPoly acc;
    for (unsigned k = 0; k <= n; ++k)
        for (unsigned l = 0; l + k <= n; ++l) {
            unsigned m = n - k - l;
            Rational s = Rational(multinomial(n, k, l, m)) * S(m, c) * wpw(a, l + m) *
                         wpw(b, k + m) * wpw(c, static_cast<long long>(k) + l - 1);
            acc += A[k] * B[l] * s;
        }
    return acc;
}

// c^{n-1} sum_k C(n,k) B_k(a y1) sum_{i<c} B_{n-k}(b y2 + (b/c)i) a^{n-k} b^k
inline MultiPoly base_t5(unsigned n, long a, long b, long c) {
    auto A = bernoulli_row(n, a, Var::y1);
    auto inner = shifted_bernoulli_sums(n, b, b, c, Var::y2);
    MultiPoly acc;
    for (unsigned k = 0; k <= n; ++k)
        acc += A[k] * inner[n - k] * (Rational(binomial(n, k)) * wpw(a, n - k) * wpw(b, k));
    return acc * wpw(c, static_cast<long long>(n) - 1);
}

inline MultiPoly base_t8(unsigned n, long a, long b, long c) {
    auto A = bernoulli_row(n, a, Var::y1);
    MultiPoly acc;
    for (unsigned k = 0; k <= n; ++k)
        for (unsigned l = 0; l + k <= n; ++l) {
            unsigned m = n - k - l;
            Rational s = Rational(multinomial(n, k, l, m)) * S(l, b) * S(m, c) * wpw(a, l + m) *
                         wpw(b, static_cast<long long>(k) + m - 1) *
                         wpw(c, static_cast<long long>(k) + l - 1);
            acc += A[k] * s;
        }
    return acc;
}

// a^{n-1} sum_k C(n,k) sum_{i<a} B_k(b y1 + (b/a)i) S_{n-k}(c-1) b^{n-k} c^{k-1}
inline MultiPoly base_t11(unsigned n, long a, long b, long c) {
    auto inner = shifted_bernoulli_sums(n, b, b, a, Var::y1);
    MultiPoly acc;
    for (unsigned k = 0; k <= n; ++k)
        acc += inner[k] * (Rational(binomial(n, k)) * S(n - k, c) * wpw(b, n - k) *
                           wpw(c, static_cast<long long>(k) - 1));
    return acc * wpw(a, static_cast<long long>(n) - 1);
}

// (ab)^{n-1} sum_{i<a} sum_{j<b} B_n(c y1 + (c/a)i + (c/b)j); the literal
// variant uses step c/a for the j-sum as well.
inline MultiPoly base_t14(unsigned n, long a, long b, long c, bool j_step_over_a) {
    long jden = j_step_over_a ? a : b;
    MultiPoly acc;
    for (long i = 0; i < a; ++i)
        for (long j = 0; j < b; ++j)
            acc += bmp(n, c, Rational(c * i, a) + Rational(c * j, jden), Var::y1);
    return acc * wpw(a * b, static_cast<long long>(n) - 1);
}

// sum multinomial B_k(a y) B_l(b y) B_m(c y) c^k a^l b^m, all in the common y.
inline MultiPoly base_t16(unsigned n, long a, long b, long c) {
    auto A = bernoulli_row(n, a, Var::y1);
    auto B = bernoulli_row(n, b, Var::y1);
    auto C = bernoulli_row(n, c, Var::y1);
    MultiPoly acc;
    for (unsigned k = 0; k <= n; ++k)
        for (unsigned l = 0; l + k <= n; ++l) {
            unsigned m = n - k - l;
            Rational s = Rational(multinomial(n, k, l, m)) * wpw(c, k) * wpw(a, l) * wpw(b, m);
            acc += A[k] * B[l] * C[m] * s;
        }
    return acc;
}

// sum multinomial S_k(a-1) S_l(b-1) S_m(c-1) c^{k-1} a^{l-1} b^{m-1}.
inline MultiPoly base_t17(unsigned n, long a, long b, long c) {
    Rational acc(0);
    for (unsigned k = 0; k <= n; ++k)
        for (unsigned l = 0; l + k <= n; ++l) {
            unsigned m = n - k - l;
            acc += Rational(multinomial(n, k, l, m)) * S(k, a) * S(l, b) * S(m, c) *
                   wpw(c, static_cast<long long>(k) - 1) *
                   wpw(a, static_cast<long long>(l) - 1) *
                   wpw(b, static_cast<long long>(m) - 1);
        }
    return MultiPoly::constant(acc);
}

// sum_k C(n,k) B_k(a y1) B_{n-k}(b y2) a^{n-k} b^k
inline MultiPoly base_bb(unsigned n, long a, long b) {
    auto A = bernoulli_row(n, a, Var::y1);
    auto B = bernoulli_row(n, b, Var::y2);
    MultiPoly acc;
    for (unsigned k = 0; k <= n; ++k)
        acc += A[k] * B[n - k] * (Rational(binomial(n, k)) * wpw(a, n - k) * wpw(b, k));
    return acc;
}

// sum multinomial B_k(y1) B_l(b y2) S_m(a-1) b^{k+m} a^{k+l-1}
inline MultiPoly base_c3_3(unsigned n, long a, long b) {
    auto A = bernoulli_row(n, 1, Var::y1);
    auto B = bernoulli_row(n, b, Var::y2);
    MultiPoly acc;
    for (unsigned k = 0; k <= n; ++k)
        for (unsigned l = 0; l + k <= n; ++l) {
            unsigned m = n - k - l;
            Rational s = Rational(multinomial(n, k, l, m)) * S(m, a) * wpw(b, k + m) *
                         wpw(a, static_cast<long long>(k) + l - 1);
            acc += A[k] * B[l] * s;
        }
    return acc;
}

// sum multinomial B_k(b y1) B_l(y2) S_m(a-1) b^{l+m} a^{k+l-1}
inline MultiPoly base_c3_4(unsigned n, long a, long b) {
    auto A = bernoulli_row(n, b, Var::y1);
    auto B = bernoulli_row(n, 1, Var::y2);
    MultiPoly acc;
    for (unsigned k = 0; k <= n; ++k)
        for (unsigned l = 0; l + k <= n; ++l) {
            unsigned m = n - k - l;
            Rational s = Rational(multinomial(n, k, l, m)) * S(m, a) * wpw(b, l + m) *
                         wpw(a, static_cast<long long>(k) + l - 1);
            acc += A[k] * B[l] * s;
        }
    return acc;
}

// sum multinomial B_k(y1) B_l(y2) S_m(a-1) a^{k+l-1}
inline MultiPoly base_c4_3(unsigned n, long a) {
    auto A = bernoulli_row(n, 1, Var::y1);
    auto B = bernoulli_row(n, 1, Var::y2);
    MultiPoly acc;
    for (unsigned k = 0; k <= n; ++k)
        for (unsigned l = 0; l + k <= n; ++l) {
            unsigned m = n - k - l;
            acc += A[k] * B[l] *
                   (Rational(multinomial(n, k, l, m)) * S(m, a) *
                    wpw(a, static_cast<long long>(k) + l - 1));
        }
    return acc;
}

// a^{n-1} sum_k C(n,k) B_k(y1) sum_{i<a} B_{n-k}(b y2 + (b/a)i) b^k
inline MultiPoly base_c6_3(unsigned n, long a, long b) {
    auto A = bernoulli_row(n, 1, Var::y1);
    auto inner = shifted_bernoulli_sums(n, b, b, a, Var::y2);
    MultiPoly acc;
    for (unsigned k = 0; k <= n; ++k)
        acc += A[k] * inner[n - k] * (Rational(binomial(n, k)) * wpw(b, k));
    return acc * wpw(a, static_cast<long long>(n) - 1);
}

// a^{n-1} sum_k C(n,k) B_k(b y1) sum_{i<a} B_{n-k}(y2 + i/a) b^{n-k}
inline MultiPoly base_c6_4(unsigned n, long a, long b) {
    auto A = bernoulli_row(n, b, Var::y1);
    auto inner = shifted_bernoulli_sums(n, 1, 1, a, Var::y2);
    MultiPoly acc;
    for (unsigned k = 0; k <= n; ++k)
        acc += A[k] * inner[n - k] * (Rational(binomial(n, k)) * wpw(b, n - k));
    return acc * wpw(a, static_cast<long long>(n) - 1);
}

// sum_k C(n,k) B_k(y2) B_{n-k}(a y1) a^k
inline MultiPoly base_c7_2(unsigned n, long a) {
    auto A = bernoulli_row(n, 1, Var::y2);
    auto B = bernoulli_row(n, a, Var::y1);
    MultiPoly acc;
    for (unsigned k = 0; k <= n; ++k)
        acc += A[k] * B[n - k] * (Rational(binomial(n, k)) * wpw(a, k));
    return acc;
}

// a^{n-1} sum_k C(n,k) B_k(y1) sum_{i<a} B_{n-k}(y2 + i/a)
inline MultiPoly base_c7_3(unsigned n, long a) {
    auto A = bernoulli_row(n, 1, Var::y1);
    auto inner = shifted_bernoulli_sums(n, 1, 1, a, Var::y2);
    MultiPoly acc;
    for (unsigned k = 0; k <= n; ++k)
        acc += A[k] * inner[n - k] * Rational(binomial(n, k));
    return acc * wpw(a, static_cast<long long>(n) - 1);
}

// sum_k C(n,k) B_k(a y1) S_{n-k}(b-1) a^{n-k} b^{k-1}
inline MultiPoly base_c9_1(unsigned n, long a, long b) {
    auto A = bernoulli_row(n, a, Var::y1);
    MultiPoly acc;
    for (unsigned k = 0; k <= n; ++k)
        acc += A[k] * (Rational(binomial(n, k)) * S(n - k, b) * wpw(a, n - k) *
                       wpw(b, static_cast<long long>(k) - 1));
    return acc;
}

// sum multinomial B_k(y1) S_l(a-1) S_m(b-1) a^{k+m-1} b^{k+l-1}
inline MultiPoly base_c9_3(unsigned n, long a, long b) {
    auto A = bernoulli_row(n, 1, Var::y1);
    MultiPoly acc;
    for (unsigned k = 0; k <= n; ++k)
        for (unsigned l = 0; l + k <= n; ++l) {
            unsigned m = n - k - l;
            acc += A[k] * (Rational(multinomial(n, k, l, m)) * S(l, a) * S(m, b) *
                           wpw(a, static_cast<long long>(k) + m - 1) *
                           wpw(b, static_cast<long long>(k) + l - 1));
        }
    return acc;
}

inline MultiPoly base_c10_1(unsigned n, long a) { return bmp(n, a, Rational(0), Var::y1); }

// sum_k C(n,k) B_k(y1) S_{n-k}(a-1) a^{k-1}
inline MultiPoly base_c10_2(unsigned n, long a) {
    auto A = bernoulli_row(n, 1, Var::y1);
    MultiPoly acc;
    for (unsigned k = 0; k <= n; ++k)
        acc += A[k] * (Rational(binomial(n, k)) * S(n - k, a) *
                       wpw(a, static_cast<long long>(k) - 1));
    return acc;
}

// a^{n-1} sum_{i<a} B_n(b y1 + (b/a)i)
inline MultiPoly base_c12_1(unsigned n, long a, long b) {
    MultiPoly acc;
    for (long i = 0; i < a; ++i)
        acc += bmp(n, b, Rational(b * i, a), Var::y1);
    return acc * wpw(a, static_cast<long long>(n) - 1);
}

// a^{n-1} sum_k C(n,k) sum_{i<a} B_k(y1 + i/a) S_{n-k}(b-1) b^{k-1}
inline MultiPoly base_c12_5(unsigned n, long a, long b) {
    auto inner = shifted_bernoulli_sums(n, 1, 1, a, Var::y1);
    MultiPoly acc;
    for (unsigned k = 0; k <= n; ++k)
        acc += inner[k] * (Rational(binomial(n, k)) * S(n - k, b) *
                           wpw(b, static_cast<long long>(k) - 1));
    return acc * wpw(a, static_cast<long long>(n) - 1);
}

// a^{n-1} sum_{i<a} B_n(y1 + i/a)
inline MultiPoly base_c13_2(unsigned n, long a) {
    MultiPoly acc;
    for (long i = 0; i < a; ++i)
        acc += bmp(n, 1, Rational(i, a), Var::y1);
    return acc * wpw(a, static_cast<long long>(n) - 1);
}

// (ab)^{n-1} sum_{i<a} sum_{j<b} B_n(y1 + i/a + j/b)
inline MultiPoly base_c15_3(unsigned n, long a, long b) {
    MultiPoly acc;
    for (long i = 0; i < a; ++i)
        for (long j = 0; j < b; ++j)
            acc += bmp(n, 1, Rational(i, a) + Rational(j, b), Var::y1);
    return acc * wpw(a * b, static_cast<long long>(n) - 1);
}

// sum_k C(n,k) S_k(b-1) S_{n-k}(a-1) a^k
inline MultiPoly base_c18_1(unsigned n, long a, long b) {
    Rational acc(0);
    for (unsigned k = 0; k <= n; ++k)
        acc += Rational(binomial(n, k)) * S(k, b) * S(n - k, a) * wpw(a, k);
    return MultiPoly::constant(acc);
}

} // namespace detail

namespace registry {

enum class Base {
    T1, T2, T5, T8, T11, T14, T16, T17,
    BB, C3_3, C3_4, C4_3, C6_3, C6_4, C7_2, C7_3,
    C9_1, C9_3, C10_1, C10_2, C12_1, C12_5, C13_2, C15_3, C18_1,
};

/// One displayed expression: a base shape plus which weight goes in which
/// slot. Slot value -1 means the literal weight 1 of a specialized display.
struct SideSpec {
    Base base;
    std::array<int, 3> args;
};

struct FamilySpec {
    FamilyId id;
    int weight_arity; // how many of w1,w2,w3 are free
    int y_arity;      // how many y symbols appear
    std::vector<SideSpec> sides;
};

inline const FamilySpec& family_spec(FamilyId id) {
    static const std::vector<FamilySpec> table = [] {
        using B = Base;
        std::vector<FamilySpec> t;
        t.push_back({FamilyId::T1, 3, 3,
                     {{B::T1, {0, 1, 2}}, {B::T1, {0, 2, 1}}, {B::T1, {1, 0, 2}},
                      {B::T1, {1, 2, 0}}, {B::T1, {2, 0, 1}}, {B::T1, {2, 1, 0}}}});
        t.push_back({FamilyId::T2, 3, 2,
                     {{B::T2, {0, 1, 2}}, {B::T2, {0, 2, 1}}, {B::T2, {1, 0, 2}},
                      {B::T2, {1, 2, 0}}, {B::T2, {2, 1, 0}}, {B::T2, {2, 0, 1}}}});
        t.push_back({FamilyId::T5, 3, 2,
                     {{B::T5, {2, 1, 0}}, {B::T5, {1, 2, 0}}, {B::T5, {2, 0, 1}},
                      {B::T5, {0, 2, 1}}, {B::T5, {1, 0, 2}}, {B::T5, {0, 1, 2}}}});
        t.push_back({FamilyId::T8, 3, 1,
                     {{B::T8, {0, 1, 2}}, {B::T8, {1, 2, 0}}, {B::T8, {2, 0, 1}}}});
        t.push_back({FamilyId::T11, 3, 1,
                     {{B::T11, {0, 1, 2}}, {B::T11, {0, 2, 1}}, {B::T11, {1, 0, 2}},
                      {B::T11, {1, 2, 0}}, {B::T11, {2, 0, 1}}, {B::T11, {2, 1, 0}}}});
        t.push_back({FamilyId::T14, 3, 1,
                     {{B::T14, {0, 1, 2}}, {B::T14, {1, 2, 0}}, {B::T14, {2, 0, 1}}}});
        t.push_back({FamilyId::T16, 3, 1, {{B::T16, {0, 1, 2}}, {B::T16, {0, 2, 1}}}});
        t.push_back({FamilyId::T17, 3, 0, {{B::T17, {0, 1, 2}}, {B::T17, {0, 2, 1}}}});
        t.push_back({FamilyId::C3, 2, 2,
                     {{B::BB, {0, 1, -1}}, {B::BB, {1, 0, -1}}, {B::C3_3, {0, 1, -1}},
                      {B::C3_4, {0, 1, -1}}, {B::C3_3, {1, 0, -1}}, {B::C3_4, {1, 0, -1}}}});
        t.push_back({FamilyId::C4, 1, 2,
                     {{B::BB, {0, -1, -1}}, {B::BB, {-1, 0, -1}}, {B::C4_3, {0, -1, -1}}}});
        t.push_back({FamilyId::C6, 2, 2,
                     {{B::BB, {0, 1, -1}}, {B::BB, {1, 0, -1}}, {B::C6_3, {0, 1, -1}},
                      {B::C6_4, {0, 1, -1}}, {B::C6_3, {1, 0, -1}}, {B::C6_4, {1, 0, -1}}}});
        t.push_back({FamilyId::C7, 1, 2,
                     {{B::BB, {-1, 0, -1}}, {B::C7_2, {0, -1, -1}}, {B::C7_3, {0, -1, -1}}}});
        t.push_back({FamilyId::C9, 2, 1,
                     {{B::C9_1, {0, 1, -1}}, {B::C9_1, {1, 0, -1}}, {B::C9_3, {0, 1, -1}}}});
        t.push_back({FamilyId::C10, 1, 1, {{B::C10_1, {0, -1, -1}}, {B::C10_2, {0, -1, -1}}}});
        t.push_back({FamilyId::C12, 2, 1,
                     {{B::C12_1, {0, 1, -1}}, {B::C12_1, {1, 0, -1}}, {B::C9_1, {1, 0, -1}},
                      {B::C9_1, {0, 1, -1}}, {B::C12_5, {0, 1, -1}}, {B::C12_5, {1, 0, -1}}}});
        t.push_back({FamilyId::C13, 1, 1,
                     {{B::C10_1, {0, -1, -1}}, {B::C13_2, {0, -1, -1}}, {B::C10_2, {0, -1, -1}}}});
        t.push_back({FamilyId::C15, 2, 1,
                     {{B::C12_1, {0, 1, -1}}, {B::C12_1, {1, 0, -1}}, {B::C15_3, {0, 1, -1}}}});
        t.push_back({FamilyId::C18, 2, 0, {{B::C18_1, {0, 1, -1}}, {B::C18_1, {1, 0, -1}}}});
        t.push_back({FamilyId::INTRO, 2, 1,
                     {{B::C9_1, {0, 1, -1}}, {B::C9_1, {1, 0, -1}}, {B::C12_1, {0, 1, -1}},
                      {B::C12_1, {1, 0, -1}}, {B::C9_3, {0, 1, -1}}, {B::C12_5, {0, 1, -1}},
                      {B::C12_5, {1, 0, -1}}, {B::C15_3, {0, 1, -1}}}});
        return t;
    }();
    for (const auto& f : table)
        if (f.id == id)
            return f;
    throw std::invalid_argument("unknown family");
}

} // namespace registry

/// Evaluate one side of a family as an exact polynomial in its y-variables.
/// Corollary families use only the first weight_arity entries of `weights`;
/// the specialized slots are the literal 1 of their displays.
inline MultiPoly eval_side(FamilyId family, size_t side, unsigned n,
                           const std::array<long, 3>& weights,
                           T14Variant variant = T14Variant::kPattern) {
    const auto& spec = registry::family_spec(family);
    if (side >= spec.sides.size())
        throw std::invalid_argument("eval_side: side index out of range");
    for (int j = 0; j < spec.weight_arity; ++j)
        if (weights[j] < 1)
            throw std::invalid_argument("eval_side: weights must be >= 1");

    const auto& s = spec.sides[side];
    auto pick = [&](int idx) -> long { return idx < 0 ? 1 : weights[idx]; };
    long a = pick(s.args[0]), b = pick(s.args[1]), c = pick(s.args[2]);

    using registry::Base;
    using namespace detail;
    switch (s.base) {
    case Base::T1: return base_t1(n, a, b, c);
    case Base::T2: return base_t2(n, a, b, c);
    case Base::T5: return base_t5(n, a, b, c);
    case Base::T8: return base_t8(n, a, b, c);
    case Base::T11: return base_t11(n, a, b, c);
    case Base::T14:
        return base_t14(n, a, b, c,
                        variant == T14Variant::kLiteral && family == FamilyId::T14 && side == 2);
    case Base::T16: return base_t16(n, a, b, c);
    case Base::T17: return base_t17(n, a, b, c);
    case Base::BB: return base_bb(n, a, b);
    case Base::C3_3: return base_c3_3(n, a, b);
    case Base::C3_4: return base_c3_4(n, a, b);
    case Base::C4_3: return base_c4_3(n, a);
    case Base::C6_3: return base_c6_3(n, a, b);
    case Base::C6_4: return base_c6_4(n, a, b);
    case Base::C7_2: return base_c7_2(n, a);
    case Base::C7_3: return base_c7_3(n, a);
    case Base::C9_1: return base_c9_1(n, a, b);
    case Base::C9_3: return base_c9_3(n, a, b);
    case Base::C10_1: return base_c10_1(n, a);
    case Base::C10_2: return base_c10_2(n, a);
    case Base::C12_1: return base_c12_1(n, a, b);
    case Base::C12_5: return base_c12_5(n, a, b);
    case Base::C13_2: return base_c13_2(n, a);
    case Base::C15_3: return base_c15_3(n, a, b);
    default: return base_c18_1(n, a, b);
    }
}

inline size_t side_count(FamilyId family) { return registry::family_spec(family).sides.size(); }

struct IdentityWitness {
    int side_a = 0;
    int side_b = 0;
    MultiPoly::Exponents monomial{0, 0, 0};
    Rational lhs;
    Rational rhs;
};

struct IdentityReport {
    FamilyId family{};
    unsigned n = 0;
    std::array<long, 3> weights{1, 1, 1};
    bool pass = true;
    std::optional<IdentityWitness> witness;
    long long millis = 0;
};

/// Evaluates every side and requires structural equality across all of them.
/// `corrupt_side`, when >= 0, adds 1 to that side after evaluation (negative
/// control for the verifier itself).
inline IdentityReport verify_family(FamilyId family, unsigned n,
                                    const std::array<long, 3>& weights,
                                    T14Variant variant = T14Variant::kPattern,
                                    int corrupt_side = -1) {
    auto t0 = std::chrono::steady_clock::now();
    IdentityReport rep;
    rep.family = family;
    rep.n = n;
    rep.weights = weights;

    size_t count = side_count(family);
    MultiPoly first;
    for (size_t s = 0; s < count; ++s) {
        MultiPoly val = eval_side(family, s, n, weights, variant);
        if (static_cast<int>(s) == corrupt_side)
            val += MultiPoly::constant(Rational(1));
        if (s == 0) {
            first = std::move(val);
            continue;
        }
        if (auto diff = MultiPoly::first_difference(first, val)) {
            rep.pass = false;
            rep.witness = IdentityWitness{0, static_cast<int>(s), diff->monomial, diff->lhs,
                                          diff->rhs};
            break;
        }
    }
    rep.millis = std::chrono::duration_cast<std::chrono::milliseconds>(
                     std::chrono::steady_clock::now() - t0)
                     .count();
    return rep;
}

/// The eight-way chain of two-weight identities (w3 implicitly 1).
inline IdentityReport verify_intro_chain(unsigned n, long w1, long w2) {
    return verify_family(FamilyId::INTRO, n, {w1, w2, 1});
}

struct SpecializationPair {
    FamilyId source;
    FamilyId target;
    bool scale_by_w1w2; // T17 -> C18 needs the w1*w2 factor
};

// Stated pairs, including the two-step "letting further w2 = 1" chains that
// specialize a theorem all the way down to its one-weight corollary.
inline const std::vector<SpecializationPair>& specialization_pairs() {
    static const std::vector<SpecializationPair> v{
        {FamilyId::T2, FamilyId::C3, false},   {FamilyId::C3, FamilyId::C4, false},
        {FamilyId::T2, FamilyId::C4, false},   {FamilyId::T5, FamilyId::C6, false},
        {FamilyId::C6, FamilyId::C7, false},   {FamilyId::T5, FamilyId::C7, false},
        {FamilyId::T8, FamilyId::C9, false},   {FamilyId::C9, FamilyId::C10, false},
        {FamilyId::T8, FamilyId::C10, false},  {FamilyId::T11, FamilyId::C12, false},
        {FamilyId::C12, FamilyId::C13, false}, {FamilyId::T11, FamilyId::C13, false},
        {FamilyId::T14, FamilyId::C15, false}, {FamilyId::T17, FamilyId::C18, true},
    };
    return v;
}

struct CheckResult {
    bool pass = true;
    std::string detail; // human-readable witness on failure
};

/// Evaluating the source family at the target's specialized weights must
/// reproduce the target's sides (after the stated w1*w2 factor for C18).
inline CheckResult corollary_specialization_check(FamilyId source, FamilyId target, unsigned n,
                                                  const std::array<long, 3>& weights) {
    const SpecializationPair* pair = nullptr;
    for (const auto& p : specialization_pairs())
        if (p.source == source && p.target == target)
            pair = &p;
    if (!pair)
        throw std::invalid_argument("corollary_specialization_check: unstated pair");

    int target_arity = registry::family_spec(target).weight_arity;
    std::array<long, 3> wspec = weights;
    for (int j = target_arity; j < 3; ++j)
        wspec[j] = 1;
    Rational scale = pair->scale_by_w1w2 ? Rational(wspec[0] * wspec[1]) : Rational(1);

    MultiPoly ref = eval_side(source, 0, n, wspec) * scale;
    auto mismatch = [&](const std::string& which, size_t s,
                        const MultiPoly& val) -> CheckResult {
        auto diff = MultiPoly::first_difference(ref, val);
        std::ostringstream os;
        os << which << " side " << s << " differs at monomial (" << diff->monomial[0] << ","
           << diff->monomial[1] << "," << diff->monomial[2] << "): " << diff->lhs << " vs "
           << diff->rhs;
        return {false, os.str()};
    };

    for (size_t s = 1; s < side_count(source); ++s) {
        MultiPoly val = eval_side(source, s, n, wspec) * scale;
        if (val != ref)
            return mismatch(family_name(source), s, val);
    }
    for (size_t s = 0; s < side_count(target); ++s) {
        MultiPoly val = eval_side(target, s, n, wspec);
        if (val != ref)
            return mismatch(family_name(target), s, val);
    }
    return {};
}

/// The six raw permutations whose displays collapse: each must equal its
/// listed counterpart after the stated index permutation, so the literal
/// expressions are compared pairwise as polynomials.
inline CheckResult permutation_collapse_check(unsigned n, const std::array<long, 3>& weights) {
    using detail::base_t17;
    using detail::base_t8;
    const long w1 = weights[0], w2 = weights[1], w3 = weights[2];

    struct Pair {
        const char* label;
        MultiPoly raw;
        MultiPoly counterpart;
    };
    std::vector<Pair> pairs;
    pairs.push_back({"37vs50", base_t8(n, w1, w3, w2), base_t8(n, w1, w2, w3)});
    pairs.push_back({"38vs51", base_t8(n, w2, w1, w3), base_t8(n, w2, w3, w1)});
    pairs.push_back({"39vs52", base_t8(n, w3, w2, w1), base_t8(n, w3, w1, w2)});
    pairs.push_back({"40vs60", base_t17(n, w2, w3, w1), base_t17(n, w1, w2, w3)});
    pairs.push_back({"41vs60", base_t17(n, w3, w1, w2), base_t17(n, w1, w2, w3)});
    pairs.push_back({"42vs61", base_t17(n, w3, w2, w1), base_t17(n, w1, w3, w2)});
    pairs.push_back({"43vs61", base_t17(n, w2, w1, w3), base_t17(n, w1, w3, w2)});

    for (const auto& p : pairs) {
        if (auto diff = MultiPoly::first_difference(p.raw, p.counterpart)) {
            std::ostringstream os;
            os << p.label << " differs at monomial (" << diff->monomial[0] << ","
               << diff->monomial[1] << "," << diff->monomial[2] << "): " << diff->lhs << " vs "
               << diff->rhs;
            return {false, os.str()};
        }
    }
    return {};
}

} // namespace bernsym
