#include "helpers.hpp"
#include "lieembed/errors.hpp"
#include "lieembed/poly.hpp"

#include <gtest/gtest.h>

#include <random>

using namespace lieembed;
using testutil::algebra;
using testutil::el;
using testutil::sub;

namespace {

LieAlgebra so3() {
    return LieAlgebra({"a", "b", "c"}, {{0, 1, {{2, Rational(1)}}}, {1, 2, {{0, Rational(1)}}}, {0, 2, {{1, Rational(-1)}}}});
}

LieAlgebra abelian(std::size_t n) {
    std::vector<std::string> names;
    for (std::size_t i = 0; i < n; ++i) names.push_back("a" + std::to_string(i + 1));
    return LieAlgebra(names, {});
}

Element random_element(std::mt19937& rng, std::size_t n) {
    std::uniform_int_distribution<int> d(-3, 3);
    Element x;
    for (std::size_t i = 0; i < n; ++i) x.emplace_back(d(rng));
    return x;
}

}  // namespace

TEST(LieCore, ParseAndFormat) {
    const auto& W = algebra("wave15");
    Element x = el(W, "-e15+e4");
    EXPECT_EQ(W.format(x), "e4-e15");
    EXPECT_EQ(W.format(el(W, "2*e12 + e5")), "e5+2*e12");
    EXPECT_EQ(W.format(el(W, "1/2 e9")), "1/2*e9");
    EXPECT_THROW(W.parse_element("e99"), ParseError);
    EXPECT_THROW(W.parse_element("e1 e2"), ParseError);
    EXPECT_EQ(W.parse_elements("e8+e10, e11, -e13+e6").size(), 3u);
}

TEST(LieCore, Brackets) {
    const auto& W = algebra("wave16");
    EXPECT_EQ(W.format(W.bracket(el(W, "e1"), el(W, "e2"))), "-1/2*e9");
    Element x = el(W, "e3+2*e7");
    EXPECT_TRUE(is_zero_vec(W.bracket(x, x)));
    EXPECT_TRUE(W.ad(W.zero()).is_zero());
    const auto& G = algebra("g2");
    EXPECT_EQ(G.format(G.bracket(el(G, "X2"), el(G, "X5"))), "4*X1");
}

TEST(LieCore, AdRestricted) {
    const auto& G = algebra("g2");
    Subspace S = sub(G, "X5, X10");
    QMatrix m = ad_on(G, el(G, "X8+X6"), S);
    QMatrix expect(2, 2);
    // stored basis is RREF: X5 first, X10 second
    expect(0, 0) = Rational(2);
    expect(1, 1) = Rational(-2);
    EXPECT_EQ(m, expect);
    EXPECT_TRUE(is_ad_nilpotent(algebra("wave15"), el(algebra("wave15"), "e8")));
}

TEST(LieCore, KillingForm) {
    EXPECT_TRUE(killing_form(abelian(3)).is_zero());
    EXPECT_EQ(killing_form(so3()), Rational(-2) * QMatrix::identity(3));
    EXPECT_EQ(killing_signature(so3()), (Signature{0, 3, 0}));
    EXPECT_EQ(killing_signature(abelian(3)), (Signature{0, 0, 3}));
    EXPECT_NE(determinant(killing_form(algebra("g2"))), Rational(0));
    EXPECT_EQ(killing_signature(algebra("wave15")).n_neg, 7u);
}

TEST(LieCore, NegativeDefinite) {
    const auto& W = algebra("wave15");
    EXPECT_TRUE(is_negative_definite(W, sub(W, "e15,e14,e13")));
    EXPECT_FALSE(is_negative_definite(W, sub(W, "e4,e5,e6")));
    EXPECT_TRUE(is_negative_definite(W, Subspace(W.dim())));
}

TEST(LieCore, DerivedCentralizerNormalizer) {
    const auto& W = algebra("wave15");
    EXPECT_TRUE(derived_algebra(abelian(2), whole(abelian(2))).is_zero());
    EXPECT_EQ(derived_algebra(so3(), whole(so3())), whole(so3()));
    EXPECT_THROW(derived_algebra(W, sub(W, "e1,e2")), NotASubalgebra);

    EXPECT_EQ(centralizer(W, sub(W, "e15,e14,e13")), sub(W, "e7m16,e8,e9"));
    EXPECT_EQ(centralizer(W, Subspace(W.dim())), whole(W));

    Subspace U = sub(W, "e8,e10,e11,e12");
    Subspace NU = normalizer(W, U);
    EXPECT_EQ(NU, sub(W, "e8,e10,e11,e12,e7m16,e15,e14,e13,e6,e4,e2"));
    Subspace Ut = sub(W, "e8,e10,e11,e12,-e15+e4,-e13+e6");
    EXPECT_EQ(normalizer(W, Ut), Ut + sub(W, "e2,e7m16,e14"));
    EXPECT_EQ(normalizer(W, whole(W)), whole(W));
    EXPECT_TRUE(normalizer(W, U).contains(centralizer(W, U)));
}

TEST(LieCore, Center) {
    EXPECT_EQ(center(abelian(2), whole(abelian(2))), whole(abelian(2)));
    EXPECT_TRUE(center(so3(), whole(so3())).is_zero());
}

TEST(LieCore, Radical) {
    const auto& W = algebra("wave15");
    EXPECT_TRUE(radical(W).is_zero());
    auto A = abelian(3);
    EXPECT_EQ(radical(A), whole(A));
    const auto& G = algebra("g2");
    Subspace NU = normalizer(G, sub(G, "X14,X13,X12"));
    Subspace R = radical(G, NU);
    EXPECT_EQ(R, sub(G, "X9, X8-3*X6, X14, X13, X12, X11"));
    EXPECT_EQ(derived_algebra(G, R), sub(G, "X9,X14,X13,X12,X11"));
}

TEST(LieCore, Levi) {
    const auto& W = algebra("wave15");
    Subspace NU = normalizer(W, sub(W, "e8,e10,e11,e12"));
    auto ld = levi_decomposition(W, NU);
    EXPECT_EQ(ld.radical, sub(W, "e8,e10,e11,e12,e7m16"));
    EXPECT_EQ(ld.levi, sub(W, "e15,e14,e13,e6,e4,e2"));

    const auto& G = algebra("g2");
    Subspace GN = normalizer(G, sub(G, "X14,X13,X12"));
    auto gd = levi_decomposition(G, GN);
    EXPECT_EQ(gd.levi, sub(G, "X8+X6, X5, X10"));

    auto sd = levi_decomposition(so3(), whole(so3()));
    EXPECT_TRUE(sd.radical.is_zero());
    EXPECT_EQ(sd.levi, whole(so3()));
}

TEST(LieCore, Jordan) {
    const auto& W = algebra("wave15");
    auto j8 = jordan_decomposition(W, el(W, "e8"));
    EXPECT_TRUE(is_zero_vec(j8.semisimple));
    EXPECT_EQ(j8.nilpotent, el(W, "e8"));
    auto j7 = jordan_decomposition(W, el(W, "e7m16"));
    EXPECT_EQ(j7.semisimple, el(W, "e7m16"));
    EXPECT_FALSE(j7.modulo_center);
    auto j = jordan_decomposition(W, el(W, "e2+e11"));
    EXPECT_EQ(j.semisimple, el(W, "e2"));
    EXPECT_EQ(j.nilpotent, el(W, "e11"));
}

TEST(LieCore, JordanInvariantsRandom) {
    std::mt19937 rng(5);
    for (const char* name : {"wave15", "g2"}) {
        const auto& L = algebra(name);
        for (int it = 0; it < 10; ++it) {
            Element x = random_element(rng, L.dim());
            auto jp = jordan_decomposition(L, x);
            EXPECT_EQ(jp.semisimple + jp.nilpotent, x);
            EXPECT_TRUE(is_zero_vec(L.bracket(jp.semisimple, jp.nilpotent)));
            EXPECT_TRUE(is_ad_nilpotent(L, jp.nilpotent));
            EXPECT_TRUE(is_ad_semisimple(L, jp.semisimple));
        }
    }
}

TEST(LieCore, Classify) {
    const auto& W = algebra("wave15");
    EXPECT_EQ(classify_element(W, el(W, "e2")), ElementClass::real_semisimple);
    EXPECT_EQ(classify_element(W, el(W, "e14")), ElementClass::compact_semisimple);
    EXPECT_EQ(classify_element(W, el(W, "e8")), ElementClass::nilpotent);
    EXPECT_EQ(classify_element(W, el(W, "e2+e11")), ElementClass::general);
    EXPECT_EQ(classify_element(W, el(W, "e2+e14")), ElementClass::mixed_semisimple);
    const auto& G = algebra("g2");
    EXPECT_EQ(classify_element(G, el(G, "X5+X10")), ElementClass::compact_semisimple);
}

TEST(LieCore, Generated) {
    const auto& G = algebra("g2");
    Subspace K = subalgebra_generated(G, {el(G, "X5+X10"), el(G, "X4-X11")});
    EXPECT_EQ(K.dim(), 6u);
    EXPECT_TRUE(is_negative_definite(G, K));
    const auto& W = algebra("wave15");
    EXPECT_EQ(subalgebra_generated(W, {el(W, "e8")}).dim(), 1u);
    const auto& S4 = algebra("so(4,0)");
    Element u1 = el(S4, "e2-e5"), v1 = el(S4, "e3+e4");
    EXPECT_EQ(subalgebra_generated(S4, {u1, v1}).dim(), 3u);
    EXPECT_EQ(S4.bracket(u1, v1), el(S4, "-2*e1-2*e6"));
}

TEST(LieCore, NilpotentSubalgebraFlag) {
    const auto& W = algebra("wave15");
    EXPECT_TRUE(is_ad_nilpotent_subalgebra(W, sub(W, "e8,e10,e11,e12,-e15+e4,-e13+e6")));
    EXPECT_FALSE(is_ad_nilpotent_subalgebra(W, sub(W, "e8,e7m16")));
}

TEST(LieCore, CenterObstructionFlag) {
    // gl(1) + heisenberg-like: center nonzero
    LieAlgebra h({"x", "y", "z"}, {{0, 1, {{2, Rational(1)}}}});
    auto jp = jordan_decomposition(h, h.basis(0));
    EXPECT_TRUE(jp.modulo_center);
    EXPECT_TRUE(is_zero_vec(jp.semisimple));
}
