#include "bernsym/multipoly.hpp"
#include "bernsym/unipoly.hpp"

#include "gtest/gtest.h"

#include <random>

using bernsym::MultiPoly;
using bernsym::Rational;
using bernsym::substitute_affine;
using bernsym::UniPoly;
using bernsym::Var;

namespace {

UniPoly make_poly(std::initializer_list<long long> coeffs) {
    std::vector<Rational> c;
    for (long long v : coeffs)
        c.emplace_back(v);
    return UniPoly(std::move(c));
}

std::mt19937 rng(987654321);

UniPoly random_unipoly() {
    std::uniform_int_distribution<int> deg(0, 5), num(-6, 6), den(1, 4);
    std::vector<Rational> c(deg(rng) + 1);
    for (auto& v : c)
        v = Rational(num(rng), den(rng));
    return UniPoly(std::move(c));
}

MultiPoly random_multipoly() {
    std::uniform_int_distribution<int> nterms(0, 6), e(0, 3), num(-5, 5), den(1, 3);
    MultiPoly p;
    int count = nterms(rng);
    for (int i = 0; i < count; ++i)
        p.add_term({static_cast<unsigned>(e(rng)), static_cast<unsigned>(e(rng)),
                    static_cast<unsigned>(e(rng))},
                   Rational(num(rng), den(rng)));
    return p;
}

} // namespace

TEST(UniPoly, CanonicalForm) {
    EXPECT_TRUE(UniPoly().is_zero());
    EXPECT_EQ(UniPoly().degree(), -1);
    UniPoly p = make_poly({1, 0, 0});
    EXPECT_EQ(p.degree(), 0);
    EXPECT_EQ(make_poly({0, 0}), UniPoly());
    UniPoly q = make_poly({1, 2}) - make_poly({1, 2});
    EXPECT_TRUE(q.is_zero());
}

TEST(UniPoly, EvalAndArithmetic) {
    UniPoly p = make_poly({1, -3, 2}); // 2x^2 - 3x + 1
    EXPECT_EQ(p.eval(Rational(2)), Rational(3));
    EXPECT_EQ(p.eval(Rational(1, 2)), Rational(0));
    EXPECT_EQ((p * make_poly({0, 1})).degree(), 3);
    EXPECT_EQ(p * Rational(0), UniPoly());
}

TEST(UniPoly, Printing) {
    EXPECT_EQ(make_poly({0}).str(), "0");
    EXPECT_EQ(UniPoly::constant(Rational(1)).str(), "1");
    UniPoly b2(std::vector<Rational>{Rational(1, 6), Rational(-1), Rational(1)});
    EXPECT_EQ(b2.str(), "x^2 - x + 1/6");
    UniPoly b1(std::vector<Rational>{Rational(-1, 2), Rational(1)});
    EXPECT_EQ(b1.str(), "x - 1/2");
}

TEST(MultiPoly, NoZeroTermsStored) {
    MultiPoly p;
    p.add_term({1, 0, 0}, Rational(2));
    p.add_term({1, 0, 0}, Rational(-2));
    EXPECT_TRUE(p.is_zero());
    MultiPoly q = MultiPoly::constant(Rational(0));
    EXPECT_TRUE(q.is_zero());
    MultiPoly r = random_multipoly() * Rational(0);
    EXPECT_TRUE(r.is_zero());
}

TEST(MultiPoly, RingLaws) {
    for (int iter = 0; iter < 300; ++iter) {
        MultiPoly a = random_multipoly(), b = random_multipoly(), c = random_multipoly();
        EXPECT_EQ(a + b, b + a);
        EXPECT_EQ(a * b, b * a);
        EXPECT_EQ((a * b) * c, a * (b * c));
        EXPECT_EQ(a * (b + c), a * b + a * c);
        EXPECT_EQ(a - a, MultiPoly());
        MultiPoly prod = a * b + c;
        for (const auto& [e, coeff] : prod.terms())
            EXPECT_FALSE(coeff.is_zero());
    }
}

TEST(MultiPoly, DegreeAndVars) {
    MultiPoly p;
    p.add_term({2, 1, 0}, Rational(1));
    p.add_term({0, 0, 1}, Rational(-1));
    EXPECT_EQ(p.total_degree(), 3);
    auto u = p.used_vars();
    EXPECT_TRUE(u[0] && u[1] && u[2]);
    EXPECT_EQ(MultiPoly().total_degree(), -1);
}

TEST(SubstituteAffine, Examples) {
    // x^2 at x = 2*y1 -> 4*y1^2
    MultiPoly sq = substitute_affine(make_poly({0, 0, 1}), Rational(2), Rational(0), Var::y1);
    MultiPoly want;
    want.add_term({2, 0, 0}, Rational(4));
    EXPECT_EQ(sq, want);

    // (x - 1/2) at x = y1 + 1/2 -> y1
    UniPoly p(std::vector<Rational>{Rational(-1, 2), Rational(1)});
    EXPECT_EQ(substitute_affine(p, Rational(1), Rational(1, 2), Var::y1),
              MultiPoly::variable(Var::y1));

    // constants are unaffected
    EXPECT_EQ(substitute_affine(UniPoly::constant(Rational(1)), Rational(7), Rational(-3), Var::y2),
              MultiPoly::constant(Rational(1)));
}

// substitute_affine(p, 1, 0, v) is p viewed in the variable v.
TEST(SubstituteAffine, IdentitySubstitution) {
    for (int iter = 0; iter < 200; ++iter) {
        UniPoly p = random_unipoly();
        for (Var v : {Var::y1, Var::y2, Var::y3}) {
            MultiPoly m = substitute_affine(p, Rational(1), Rational(0), v);
            for (int j = 0; j <= p.degree(); ++j) {
                MultiPoly::Exponents e{0, 0, 0};
                e[static_cast<unsigned>(v)] = static_cast<unsigned>(j);
                EXPECT_EQ(m.coeff(e), p.coeff(static_cast<size_t>(j)));
            }
            EXPECT_EQ(m.total_degree(), p.degree());
        }
    }
}

// Substitution commutes with evaluation: p(s*t + h) = subst(p)(y=t).
TEST(SubstituteAffine, MatchesPointEvaluation) {
    std::uniform_int_distribution<int> num(-4, 4), den(1, 3);
    for (int iter = 0; iter < 200; ++iter) {
        UniPoly p = random_unipoly();
        Rational s(num(rng), den(rng)), h(num(rng), den(rng)), t(num(rng), den(rng));
        MultiPoly m = substitute_affine(p, s, h, Var::y3);
        Rational direct = p.eval(s * t + h);
        Rational via(0);
        for (const auto& [e, c] : m.terms())
            via += c * bernsym::rational_pow(t, e[2]);
        EXPECT_EQ(via, direct);
    }
}

TEST(MultiPoly, CollapseTo) {
    MultiPoly p; // y1*y2 + y3^2
    p.add_term({1, 1, 0}, Rational(1));
    p.add_term({0, 0, 2}, Rational(1));
    // y1 -> y, y2 -> 2y, y3 -> -y/2  gives 2y^2 + y^2/4
    MultiPoly got = p.collapse_to(Var::y1, {Rational(1), Rational(2), Rational(-1, 2)});
    MultiPoly want;
    want.add_term({2, 0, 0}, Rational(9, 4));
    EXPECT_EQ(got, want);
}
