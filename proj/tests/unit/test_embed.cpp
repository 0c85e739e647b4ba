#include "helpers.hpp"

#include "lieembed/embed.hpp"
#include "lieembed/errors.hpp"
#include "lieembed/poly.hpp"

#include <gtest/gtest.h>

using namespace lieembed;
using testutil::algebra;
using testutil::el;
using testutil::sub;

namespace {

LieAlgebra sl2() {
    return LieAlgebra({"H", "X", "Y"},
                      {{0, 1, {{1, Rational(2)}}}, {0, 2, {{2, Rational(-2)}}}, {1, 2, {{0, Rational(1)}}}});
}

LieAlgebra so3() {
    return LieAlgebra({"a", "b", "c"}, {{0, 1, {{2, Rational(1)}}}, {1, 2, {{0, Rational(1)}}}, {0, 2, {{1, Rational(-1)}}}});
}

/// Combinations of the basis of S with coefficients in {-1, 0, 1}.
template <class F>
void for_small_combinations(const Subspace& S, F f) {
    const std::size_t k = S.dim();
    std::vector<int> d(k, 0);
    while (true) {
        std::size_t i = 0;
        while (i < k && ++d[i] == 2) d[i++] = -1;
        if (i == k) break;
        QVec c(k);
        for (std::size_t j = 0; j < k; ++j) c[j] = Rational(d[j]);
        f(S.combine(c));
    }
}

/// No nilpotent element of the centralizer lies outside M (small combinations).
void expect_maximal_abelian_nilpotent(const LieAlgebra& L, const Subspace& M) {
    Subspace C = centralizer(L, M);
    Subspace extra = Subspace::span(L.dim(), M.complement_from(C.basis()));
    if (extra.is_zero()) return;
    ASSERT_LE(extra.dim(), 10u);
    for_small_combinations(extra, [&](const Element& x) {
        // x + m is nilpotent iff x is, for m in M commuting with x
        EXPECT_FALSE(is_ad_nilpotent(L, x)) << L.format(x);
    });
}

void expect_all_nilpotent(const LieAlgebra& L, const Subspace& U) {
    EXPECT_TRUE(is_subalgebra(L, U));
    EXPECT_TRUE(is_ad_nilpotent_subalgebra(L, U));
    for (const auto& b : U.basis()) EXPECT_EQ(classify_element(L, b), ElementClass::nilpotent);
}

}  // namespace

TEST(Embed, FindRealSemisimple) {
    auto L = sl2();
    EXPECT_EQ(find_real_semisimple(L, whole(L)), el(L, "H"));
    const auto& W = algebra("wave15");
    Element e6 = el(W, "e6");
    Subspace S = sub(W, "e15,e14,e13,e6,e4,e2");
    EXPECT_EQ(classify_element(W, e6), ElementClass::real_semisimple);
    auto ev = poly_roots(char_poly(ad_on(W, e6, S)));
    std::map<Scalar, std::size_t> m;
    for (const auto& e : ev) m[e.value] = e.multiplicity;
    EXPECT_EQ(m, (std::map<Scalar, std::size_t>{{Scalar(-1), 2}, {Scalar(0), 2}, {Scalar(1), 2}}));
    Element found = find_real_semisimple(W, S);
    EXPECT_EQ(found, el(W, "e2"));
    auto K = so3();
    EXPECT_THROW(find_real_semisimple(K, whole(K), {200, 0}), NoRealSemisimpleFound);
}

TEST(Embed, FindCompact) {
    auto L = sl2();
    Element c = find_compact(L, whole(L));
    EXPECT_EQ(classify_element(L, c), ElementClass::compact_semisimple);
    EXPECT_EQ(c, el(L, "X-Y"));
    EXPECT_THROW(find_compact(L, sub(L, "X"), {50, 0}), NoCompactFound);
}

TEST(Embed, RealTorusSo22) {
    const auto& L = algebra("so(2,2)");
    auto r = embed_real_torus(L, sub(L, "e2"));
    EXPECT_EQ(r.max_real_torus, sub(L, "e2,e5"));
    EXPECT_EQ(r.cartan.cartan, sub(L, "e2,e5"));
    EXPECT_TRUE(r.cartan.compact_part.is_zero());
    EXPECT_TRUE(replay(L, r.trace));
}

TEST(Embed, RealTorusSo13AndSo4) {
    const auto& L = algebra("so(1,3)");
    auto r = embed_real_torus(L, sub(L, "e1"));
    EXPECT_EQ(r.max_real_torus, sub(L, "e1"));
    EXPECT_EQ(r.cartan.cartan, sub(L, "e1,e6"));
    EXPECT_EQ(r.cartan.compact_part, sub(L, "e6"));
    const auto& S = algebra("so(4)");
    auto s = embed_real_torus(S, Subspace(6));
    EXPECT_TRUE(s.max_real_torus.is_zero());
    EXPECT_EQ(s.cartan.cartan, sub(S, "e1,e6"));
}

TEST(Embed, RealTorusIsSelfMaximal) {
    for (const char* name : {"so(2,2)", "so(1,3)", "wave15", "g2"}) {
        const auto& L = algebra(name);
        Subspace A0(L.dim());
        if (std::string(name) == "wave15") A0 = sub(L, "e2");
        if (std::string(name) == "g2") A0 = sub(L, "X8+X6");
        auto r = embed_real_torus(L, A0);
        const Subspace& A = r.max_real_torus;
        EXPECT_TRUE(A.contains(A0));
        EXPECT_TRUE(is_abelian(L, A));
        for (const auto& a : A.basis()) EXPECT_EQ(classify_element(L, a), ElementClass::real_semisimple);
        EXPECT_EQ(centralizer(L, r.cartan.cartan), r.cartan.cartan) << name;
        for (const auto& b : A.complement_from(centralizer(L, A).basis()))
            EXPECT_NE(classify_element(L, b), ElementClass::real_semisimple) << name << " " << L.format(b);
        EXPECT_TRUE(replay(L, r.trace));
    }
}

TEST(Embed, RealTorusRejectsNonTorus) {
    const auto& L = algebra("so(4)");
    EXPECT_THROW(embed_real_torus(L, sub(L, "e1")), NotATorus);
    const auto& G = algebra("g2");
    EXPECT_THROW(embed_real_torus(G, sub(G, "X5")), NotATorus);
}

TEST(Embed, CompactTorusWave) {
    const auto& L = algebra("wave15");
    auto r = embed_compact_torus(L, sub(L, "e15"));
    const Subspace& C = r.cartan.cartan;
    EXPECT_EQ(C.dim(), 3u);
    EXPECT_TRUE(C.contains(el(L, "e15")));
    EXPECT_EQ(centralizer(L, C), C);
    EXPECT_EQ(r.cartan.compact_part, C);
    EXPECT_TRUE(r.cartan.real_part.is_zero());
    for (const auto& b : C.basis()) EXPECT_EQ(classify_element(L, b), ElementClass::compact_semisimple);
    EXPECT_TRUE(replay(L, r.trace));
    // the torus found here is a rescaling of <2e12+e5, e9+4e8, e15>
    EXPECT_EQ(C, sub(L, "2*e5+e12, e8+e9, e15"));
}

TEST(Embed, CompactTorusAlreadyCartan) {
    const auto& L = algebra("wave15");
    Subspace Ck = sub(L, "2*e12+e5, e9+4*e8, e15");
    auto r = embed_compact_torus(L, Ck);
    EXPECT_EQ(r.cartan.cartan, Ck);
    EXPECT_TRUE(r.trace.steps.empty());
    const auto& S = algebra("so(4)");
    EXPECT_EQ(embed_compact_torus(S, sub(S, "e1")).cartan.cartan, sub(S, "e1,e6"));
}

TEST(Embed, AbelianNilpotentSl2) {
    auto L = sl2();
    auto r = embed_abelian_nilpotent(L, sub(L, "X"));
    EXPECT_EQ(r.max_abelian_nilpotent, sub(L, "X"));
    EXPECT_THROW(embed_abelian_nilpotent(L, sub(L, "H")), NotAbelianNilpotent);
}

TEST(Embed, AbelianNilpotentWave) {
    const auto& L = algebra("wave15");
    for (const char* u : {"e8+e10", "e8,e10,e11,e12", "e11"}) {
        Subspace U = sub(L, u);
        auto r = embed_abelian_nilpotent(L, U);
        const Subspace& M = r.max_abelian_nilpotent;
        EXPECT_TRUE(M.contains(U)) << u;
        EXPECT_TRUE(is_abelian(L, M));
        for (const auto& b : M.basis()) EXPECT_TRUE(is_ad_nilpotent(L, b));
        expect_maximal_abelian_nilpotent(L, M);
        EXPECT_TRUE(replay(L, r.trace));
        EXPECT_LE(r.trace.steps.size(), L.dim());
    }
}

TEST(Embed, NilpotentWave) {
    const auto& L = algebra("wave15");
    auto r = embed_nilpotent(L, sub(L, "e8,e10,e11,e12"));
    EXPECT_EQ(r.max_nilpotent, sub(L, "e8,e10,e11,e12,-e15+e4,-e13+e6"));
    ASSERT_EQ(r.trace.steps.size(), 1u);
    EXPECT_EQ(r.trace.steps[0].label, "nilpotent/eigenvector");
    EXPECT_EQ(sub(L, "e4-e15,e6-e13"), Subspace::span(L.dim(), r.trace.steps[0].adjoined));
    EXPECT_EQ(normalizer(L, r.max_nilpotent), r.max_nilpotent + sub(L, "e2,e7m16,e14"));
    EXPECT_EQ(r.torus_A, sub(L, "e2,e7m16"));
    EXPECT_EQ(r.split_cartan.cartan, sub(L, "e2,e7m16,e14"));
    EXPECT_EQ(r.split_cartan.compact_part, sub(L, "e14"));
    expect_all_nilpotent(L, r.max_nilpotent);
    EXPECT_TRUE(replay(L, r.trace));
    EXPECT_TRUE(replay(L, r.torus_trace));
    Subspace N = normalizer(L, r.max_nilpotent);
    EXPECT_TRUE(is_solvable(L, N));
    EXPECT_EQ(normalizer(L, N), N);
}

TEST(Embed, NilpotentG2) {
    const auto& L = algebra("g2");
    auto r = embed_nilpotent(L, sub(L, "X14,X13,X12"));
    EXPECT_EQ(r.max_nilpotent, sub(L, "X5,X14,X13,X12,X11,X9"));
    ASSERT_EQ(r.trace.steps.size(), 2u);
    EXPECT_EQ(r.trace.steps[0].label, "nilpotent/adjoin-derived");
    EXPECT_EQ(r.trace.steps[0].result, sub(L, "X9,X14,X13,X12,X11"));
    EXPECT_EQ(r.trace.steps[1].label, "nilpotent/eigenvector");
    EXPECT_EQ(r.trace.steps[1].adjoined, std::vector<Element>{el(L, "X5")});
    EXPECT_EQ(r.split_cartan.cartan, sub(L, "X6,X8"));
    EXPECT_EQ(centralizer(L, r.split_cartan.cartan), r.split_cartan.cartan);
    EXPECT_EQ(normalizer(L, r.max_nilpotent), r.max_nilpotent + sub(L, "X6,X8"));
    expect_all_nilpotent(L, r.max_nilpotent);
    EXPECT_TRUE(replay(L, r.trace));
}

TEST(Embed, NilpotentSl2AndGuards) {
    auto L = sl2();
    auto r = embed_nilpotent(L, sub(L, "X"));
    EXPECT_EQ(r.max_nilpotent, sub(L, "X"));
    EXPECT_EQ(r.torus_A, sub(L, "H"));
    EXPECT_EQ(r.split_cartan.cartan, sub(L, "H"));
    EXPECT_THROW(embed_nilpotent(L, sub(L, "H")), NotNilpotent);
    const auto& W = algebra("wave15");
    EXPECT_THROW(embed_nilpotent(W, sub(W, "e8,e1")), NotNilpotent);
}

TEST(Embed, ReplayDetectsTampering) {
    const auto& L = algebra("g2");
    auto r = embed_nilpotent(L, sub(L, "X14,X13,X12"));
    auto t = r.trace;
    t.steps[1].adjoined = {el(L, "X10")};
    EXPECT_FALSE(replay(L, t));
}

TEST(Embed, MaximalCompactSplitG2) {
    const auto& L = algebra("g2");
    auto r = embed_nilpotent(L, sub(L, "X14,X13,X12"));
    auto pos = decompose(L, r.split_cartan.cartan.basis(), r.max_nilpotent).root_list();
    auto circles = split_circles(L, r.split_cartan, pos);
    ASSERT_EQ(circles.size(), 2u);
    Subspace J12 = span(L, circles);
    EXPECT_EQ(J12, sub(L, "X5+X10, X4-X11"));
    Subspace K = maximal_compact_split(L, r.split_cartan, pos);
    EXPECT_EQ(K, sub(L, "X5+X10, X4-X11, X1+3/8*X14, X2-3/4*X13, X3+3/4*X12, X7-3/2*X9"));
    EXPECT_EQ(K.dim(), killing_signature(L).n_neg);
    EXPECT_EQ(centralizer(L, sub(L, "X5+X10")).intersect(K), sub(L, "X5+X10, X3+3/4*X12"));
}

TEST(Embed, G2CompactTriples) {
    const auto& L = algebra("g2");
    Element J2 = el(L, "X4-X11"), J3 = el(L, "X1+3/8*X14"), J4 = el(L, "X2-3/4*X13"), J6 = el(L, "X7-3/2*X9");
    auto lin = [](Rational a, const Element& x, Rational b, const Element& y) { return scaled(a, x) + scaled(b, y); };
    // with -J2/2 the pair gives a 4-dim algebra; the computed root vector has +J2/2
    EXPECT_EQ(subalgebra_generated(L, {lin(1, J3, Rational(-1, 6), J6), lin(1, J4, Rational(-1, 2), J2)}).dim(), 4u);
    Subspace g1 = subalgebra_generated(L, {lin(1, J3, Rational(-1, 6), J6), lin(1, J4, Rational(1, 2), J2)});
    Subspace g2 = subalgebra_generated(L, {lin(1, J3, Rational(1, 2), J6), lin(-1, J4, Rational(3, 2), J2)});
    EXPECT_EQ(g1.dim(), 3u);
    EXPECT_EQ(g2.dim(), 3u);
    EXPECT_TRUE(is_negative_definite(L, g1));
    EXPECT_TRUE(is_negative_definite(L, g2));
    EXPECT_TRUE(bracket_span(L, g1, g2).is_zero());
    Subspace K = span(L, {el(L, "X5+X10"), J2, J3, J4, el(L, "X3+3/4*X12"), J6});
    auto d = decompose(L, {el(L, "X5+X10"), el(L, "X3+3/4*X12")}, K);
    auto ks = compact_root_algebras(L, d);
    ASSERT_EQ(ks.size(), 2u);
    EXPECT_TRUE((ks[0] == g1 && ks[1] == g2) || (ks[0] == g2 && ks[1] == g1));
    const Scalar s2 = Scalar::sqrt_of(-2);
    EXPECT_TRUE(d.find(Root{s2, s2 * Scalar(Rational(1, 2))}).has_value());
    EXPECT_TRUE(d.find(Root{s2, s2 * Scalar(Rational(-3, 2))}).has_value());
}

TEST(Embed, MaximalCompactSplitSl2AndNotSplit) {
    auto L = sl2();
    auto r = embed_nilpotent(L, sub(L, "X"));
    EXPECT_EQ(maximal_compact_split(L, r.split_cartan), sub(L, "X-Y"));
    const auto& W = algebra("wave15");
    auto w = embed_nilpotent(W, sub(W, "e8,e10,e11,e12"));
    EXPECT_THROW(maximal_compact_split(W, w.split_cartan), NotSplit);
}

TEST(Embed, WaveMaximalCompactFromGivenCartan) {
    const auto& L = algebra("wave15");
    CartanData Ck{sub(L, "2*e12+e5, e9+4*e8, e15"), Subspace(L.dim()), sub(L, "2*e12+e5, e9+4*e8, e15")};
    Subspace K = maximal_compact_from_cartan(L, Ck);
    Subspace k1 = sub(L, "e1+2*e10-2*e14, e3+2*e11+2*e13, -4*e5-8*e12+8*e15");
    Subspace k2 = sub(L, "e1+2*e10+2*e14, -e3-2*e11+2*e13, -4*e5-8*e12-8*e15");
    EXPECT_EQ(K, k1 + k2 + sub(L, "4*e8+e9"));
    EXPECT_EQ(K.dim(), 7u);
    EXPECT_EQ(ambient_killing_signature(L, K).n_neg, 7u);
    EXPECT_EQ(centralizer(L, k1).intersect(K), k2 + sub(L, "4*e8+e9"));
    EXPECT_EQ(centralizer(L, k1), k2 + sub(L, "4*e8+e9"));
    auto ks = compact_root_algebras(L, root_space_decomposition(L, Ck.cartan.basis()));
    ASSERT_EQ(ks.size(), 2u);
    EXPECT_TRUE((ks[0] == k1 && ks[1] == k2) || (ks[0] == k2 && ks[1] == k1));
}

TEST(Embed, WaveMaximalCompactFromSearchedCartan) {
    const auto& L = algebra("wave15");
    auto c = embed_compact_torus(L, sub(L, "e15"));
    Subspace K = maximal_compact_from_cartan(L, c.cartan);
    EXPECT_EQ(K.dim(), 7u);
    EXPECT_EQ(ambient_killing_signature(L, K).n_neg, killing_signature(L).n_neg);
    auto ks = compact_root_algebras(L, root_space_decomposition(L, c.cartan.cartan.basis()));
    ASSERT_EQ(ks.size(), 2u);
    EXPECT_TRUE(bracket_span(L, ks[0], ks[1]).is_zero());
    Subspace z = centralizer(L, ks[0]);
    EXPECT_EQ(z.dim(), 4u);
    EXPECT_TRUE(z.contains(ks[1]));
}
