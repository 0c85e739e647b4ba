#include "helpers.hpp"

#include "lieembed/errors.hpp"
#include "lieembed/roots.hpp"

#include <gtest/gtest.h>

#include <random>

using namespace lieembed;
using testutil::algebra;
using testutil::el;
using testutil::sub;

namespace {

const Scalar I = Scalar::sqrt_of(-1);

Root R(std::initializer_list<Scalar> v) { return Root(v); }
Scalar q(long p, long d = 1) { return Scalar(Rational(p, d)); }

KVec kvec(std::size_t n, std::initializer_list<std::pair<std::size_t, Scalar>> entries) {
    KVec v(n, Scalar(0));
    for (const auto& [i, s] : entries) v[i - 1] = s;
    return v;
}

void expect_grading(const LieAlgebra& L, const RootSpaceDecomposition& d) {
    std::vector<std::pair<Root, KSubspace>> all;
    for (const auto& rs : d.roots) all.emplace_back(rs.root, rs.space);
    all.emplace_back(Root(d.cartan.size(), Scalar(0)), d.zero_space);
    for (const auto& [r, V] : all)
        for (const auto& [s, W] : all)
            for (const auto& v : V.basis())
                for (const auto& w : W.basis()) {
                    KVec br = L.bracket(v, w);
                    if (is_zero_vec(br)) continue;
                    Root t = r + s;
                    if (is_zero_vec(t)) {
                        EXPECT_TRUE(d.zero_space.contains(br));
                    } else {
                        auto k = d.find(t);
                        ASSERT_TRUE(k.has_value()) << root_str(r) << " + " << root_str(s);
                        EXPECT_TRUE(d.roots[*k].space.contains(br));
                    }
                }
}

void expect_eigen(const LieAlgebra& L, const RootSpaceDecomposition& d) {
    std::size_t total = d.zero_space.dim();
    for (const auto& rs : d.roots) {
        total += rs.space.dim();
        for (const auto& v : rs.space.basis())
            for (std::size_t i = 0; i < d.cartan.size(); ++i)
                EXPECT_EQ(L.bracket(to_scalar(d.cartan[i]), v), scaled(rs.root[i], v));
    }
    EXPECT_EQ(total, d.ambient.dim());
}

}  // namespace

TEST(Roots, So4RootsAndRootVector) {
    const auto& L = algebra("so(4,0)");
    auto d = root_space_decomposition(L, L.parse_elements("e1,e6"));
    EXPECT_EQ(d.root_list(), (std::vector<Root>{R({-I, -I}), R({-I, I}), R({I, -I}), R({I, I})}));
    auto a = d.find(R({I, I}));
    ASSERT_TRUE(a);
    EXPECT_EQ(d.roots[*a].space.basis(), (std::vector<KVec>{kvec(6, {{2, 1}, {3, I}, {4, I}, {5, -1}})}));
    auto b = d.find(R({I, -I}));
    EXPECT_EQ(d.roots[*b].space.basis(), (std::vector<KVec>{kvec(6, {{2, 1}, {3, -I}, {4, I}, {5, 1}})}));
    auto pos = positive_roots(d);
    EXPECT_EQ(dynkin_type(simple_roots(pos), pos).type, "A1xA1");
    EXPECT_EQ(bond(R({I, I}), R({I, -I}), pos).multiplicity, 0);
    expect_eigen(L, d);
    expect_grading(L, d);
}

TEST(Roots, So4ConjugationIsNegation) {
    const auto& L = algebra("so(4)");
    auto d = root_space_decomposition(L, L.parse_elements("e1,e6"));
    for (const auto& [r, c] : conjugation_pairing(d)) EXPECT_EQ(c, -r);
}

TEST(Roots, So22SplitRootSpaces) {
    const auto& L = algebra("so(2,2)");
    auto d = root_space_decomposition(L, L.parse_elements("e2,e5"));
    auto vec = [&](const std::string& s) { return to_scalar(el(L, s)); };
    EXPECT_EQ(d.roots[*d.find(R({1, 1}))].space.basis(), std::vector<KVec>{vec("e1-e3+e4-e6")});
    EXPECT_EQ(d.roots[*d.find(R({1, -1}))].space.basis(), std::vector<KVec>{vec("e1+e3+e4+e6")});
    EXPECT_EQ(d.roots[*d.find(R({-1, -1}))].space.basis(), std::vector<KVec>{vec("e1+e3-e4-e6")});
    EXPECT_EQ(d.roots[*d.find(R({-1, 1}))].space.basis(), std::vector<KVec>{vec("e1-e3-e4+e6")});
    for (const auto& [r, c] : conjugation_pairing(d)) EXPECT_EQ(c, r);
    auto t = sl2_triple(L, d, R({1, 1}));
    EXPECT_EQ(L.bracket(t.X, t.Y), t.H);
    EXPECT_EQ(L.bracket(t.H, t.X), scaled(Rational(2), t.X));
    EXPECT_EQ(L.bracket(t.H, t.Y), scaled(Rational(-2), t.Y));
}

TEST(Roots, So13RealRankOneTriple) {
    const auto& L = algebra("so(1,3)");
    auto d = restricted_roots(L, whole(L), L.parse_elements("e1"));
    ASSERT_EQ(d.roots.size(), 2u);
    EXPECT_EQ(d.roots[1].space.dim(), 2u);
    auto t = sl2_triple(L, d, R({1}), el(L, "e3+e5"));
    EXPECT_EQ(t.X, el(L, "e3+e5"));
    EXPECT_EQ(L.bracket(t.X, t.Y), t.H);
    EXPECT_EQ(L.bracket(t.H, t.Y), scaled(Rational(-2), t.Y));
    // H is proportional to e1
    EXPECT_TRUE(sub(L, "e1").contains(t.H));
    auto c = span(L, {t.H});
    EXPECT_EQ(c, sub(L, "e1"));
}

TEST(Roots, So13ConjugationSwapsPositives) {
    const auto& L = algebra("so(1,3)");
    auto d = root_space_decomposition(L, L.parse_elements("e1,e6"));
    auto pos = positive_roots(d);
    EXPECT_EQ(pos, (std::vector<Root>{R({1, -I}), R({1, I})}));
    auto pairs = conjugation_pairing(d);
    for (const auto& [r, c] : pairs)
        if (r == R({1, -I})) EXPECT_EQ(c, R({1, I}));
}

TEST(Roots, WaveRestrictedB2) {
    const auto& L = algebra("wave15");
    auto N = sub(L, "e4-e15,e6-e13,e8,e10,e11,e12,e2,e7m16,e14");
    auto d = restricted_roots(L, N, L.parse_elements("e7m16,e2"));
    auto a = R({-1, 0}), b = R({-1, -1}), c = R({-1, 1}), dd = R({0, 1});
    EXPECT_EQ(d.root_list(), (std::vector<Root>{b, a, c, dd}));
    EXPECT_EQ(d.roots[*d.find(a)].space.dim(), 2u);
    EXPECT_EQ(d.roots[*d.find(b)].space.dim(), 1u);
    EXPECT_EQ(d.roots[*d.find(c)].space.dim(), 1u);
    EXPECT_EQ(d.roots[*d.find(dd)].space.dim(), 2u);
    EXPECT_EQ(to_scalar(sub(L, "e12,e11")), d.roots[*d.find(a)].space);
    EXPECT_EQ(to_scalar(sub(L, "e8+e10")), d.roots[*d.find(b)].space);
    EXPECT_EQ(to_scalar(sub(L, "e8-e10")), d.roots[*d.find(c)].space);
    EXPECT_EQ(to_scalar(sub(L, "-e13+e6,-e15+e4")), d.roots[*d.find(dd)].space);
    EXPECT_EQ(to_scalar(sub(L, "e2,e7m16,e14")), d.zero_space);
    auto all = d.root_list();
    auto simples = simple_roots(all);
    EXPECT_EQ(simples, (std::vector<Root>{b, dd}));
    Bond bd = bond(b, dd, all);
    EXPECT_EQ(bd.multiplicity, 2);
    EXPECT_EQ(bd.from, 0u);  // b long
    EXPECT_EQ(dynkin_type(simples, all).type, "B2");
    expect_eigen(L, d);
    expect_grading(L, d);
}

TEST(Roots, WaveAbsoluteA3) {
    const auto& L = algebra("wave15");
    auto d = root_space_decomposition(L, L.parse_elements("e7m16,e2,e14"));
    auto pos = positive_roots(d);
    EXPECT_EQ(pos, (std::vector<Root>{R({0, 1, -I}), R({0, 1, I}), R({1, -1, 0}), R({1, 0, -I}), R({1, 0, I}),
                                      R({1, 1, 0})}));
    auto simples = simple_roots(pos);
    EXPECT_EQ(simples, (std::vector<Root>{R({0, 1, -I}), R({0, 1, I}), R({1, -1, 0})}));
    auto dd = dynkin_type(simples, pos);
    EXPECT_EQ(dd.type, "A3");
    // e = (1,-1,0) is the middle node: bonded to both others
    std::size_t e_bonds = 0;
    for (const auto& b : dd.bonds)
        if (b.i == 2 || b.j == 2) ++e_bonds;
    EXPECT_EQ(e_bonds, 2u);
    for (const auto& [r, c] : conjugation_pairing(d)) {
        if (r == R({0, 1, -I})) EXPECT_EQ(c, R({0, 1, I}));
        if (r == R({1, -1, 0})) EXPECT_EQ(c, r);
    }
    for (const auto& r : pos) EXPECT_TRUE(simple_coordinates(r, simples).has_value());
    expect_grading(L, d);
}

TEST(Roots, WaveTorusSplit) {
    const auto& L = algebra("wave15");
    auto s = torus_split(L, sub(L, "e2,e7m16,e14"));
    EXPECT_EQ(s.real_part, sub(L, "e2,e7m16"));
    EXPECT_EQ(s.compact_part, sub(L, "e14"));
    const auto& S = algebra("so(4)");
    auto t = torus_split(S, sub(S, "e1,e6"));
    EXPECT_EQ(t.real_part.dim(), 0u);
    EXPECT_EQ(t.compact_part, sub(S, "e1,e6"));
}

TEST(Roots, WaveCompactCartanKPieces) {
    const auto& L = algebra("wave15");
    auto d = root_space_decomposition(L, L.parse_elements("2*e12+e5,e9+4*e8,e15"));
    EXPECT_EQ(d.roots.size(), 12u);
    for (const auto& [r, c] : conjugation_pairing(d)) EXPECT_EQ(c, -r);
    auto pos = positive_roots(d);
    EXPECT_EQ(dynkin_type(simple_roots(pos), pos).type, "A3");
    // real and imaginary parts of a root vector span the first two k1 generators
    auto r = d.find(R({Scalar::sqrt_of(-1, 2), 0, -I}));
    ASSERT_TRUE(r);
    const KVec& v = d.roots[*r].space.basis().front();
    auto k = span(L, {real_part(v), imag_part(v)});
    EXPECT_EQ(k, sub(L, "e1+2*e10-2*e14, e3+2*e11+2*e13"));
}

TEST(Roots, G2RestrictedOnNilpotent) {
    const auto& L = algebra("g2");
    auto N = sub(L, "X5,X14,X13,X12,X11,X9");
    auto d = decompose(L, L.parse_elements("X6,X8"), N);
    auto a = R({q(1, 2), q(3, 2)}), b = R({-1, 0}), c = R({q(-1, 2), q(3, 2)}), dd = R({q(-1, 2), q(1, 2)}),
         e = R({q(-1, 2), q(-1, 2)}), f = R({0, 1});
    auto check = [&](const Root& r, const std::string& x) {
        auto k = d.find(r);
        ASSERT_TRUE(k) << root_str(r);
        EXPECT_EQ(d.roots[*k].space, to_scalar(sub(L, x)));
    };
    check(a, "X5");
    check(b, "X14");
    check(c, "X13");
    check(dd, "X12");
    check(e, "X11");
    check(f, "X9");
    auto all = d.root_list();
    auto simples = simple_roots(all);
    EXPECT_EQ(simples, (std::vector<Root>{e, a}));
    EXPECT_EQ(*simple_coordinates(f, {a, e}), (std::vector<long>{1, 1}));
    EXPECT_EQ(*simple_coordinates(dd, {a, e}), (std::vector<long>{1, 2}));
    EXPECT_EQ(*simple_coordinates(b, {a, e}), (std::vector<long>{1, 3}));
    EXPECT_EQ(*simple_coordinates(c, {a, e}), (std::vector<long>{2, 3}));
    Bond t = bond(a, e, all);
    EXPECT_EQ(t.multiplicity, 3);
    EXPECT_EQ(dynkin_type(simples, all).type, "G2");
}

TEST(Roots, G2FullSplitSystem) {
    const auto& L = algebra("g2");
    auto d = root_space_decomposition(L, L.parse_elements("X6,X8"));
    EXPECT_EQ(d.roots.size(), 12u);
    EXPECT_EQ(d.zero_space, to_scalar(sub(L, "X6,X8")));
    auto pos = positive_roots(d);
    EXPECT_EQ(dynkin_type(simple_roots(pos), pos).type, "G2");
    auto tr = sl2_triple(L, d, R({q(1, 2), q(3, 2)}));
    EXPECT_EQ(tr.X, el(L, "X5"));
    EXPECT_EQ(tr.Y, el(L, "-1/2*X10"));
    EXPECT_EQ(tr.H, el(L, "X8+X6"));
    expect_eigen(L, d);
    expect_grading(L, d);
}

TEST(Roots, PositivityFlipsUnderNegation) {
    for (const char* name : {"so(4)", "so(1,3)", "g2"}) {
        const auto& L = algebra(name);
        auto T = std::string(name) == "g2" ? L.parse_elements("X6,X8") : L.parse_elements("e1,e6");
        auto d = root_space_decomposition(L, T);
        for (const auto& rs : d.roots) EXPECT_NE(is_positive(rs.root), is_positive(-rs.root));
        auto pos = positive_roots(d);
        auto simples = simple_roots(pos);
        for (const auto& r : pos) EXPECT_TRUE(simple_coordinates(r, simples).has_value()) << name;
    }
}

TEST(Roots, AbelianHasNoRoots) {
    LieAlgebra L({"a", "b"}, {});
    auto d = root_space_decomposition(L, L.parse_elements("a,b"));
    EXPECT_TRUE(d.roots.empty());
    EXPECT_EQ(d.zero_space.dim(), 2u);
}

TEST(Roots, NonCommutingTorusRejected) {
    const auto& L = algebra("so(4)");
    EXPECT_THROW(root_space_decomposition(L, L.parse_elements("e1,e2")), NotATorus);
    const auto& W = algebra("wave15");
    EXPECT_THROW(root_space_decomposition(W, W.parse_elements("e8")), NotATorus);
}

TEST(Dynkin, Tables) {
    auto r = [](std::initializer_list<long> v) {
        Root out;
        for (long x : v) out.push_back(Scalar(x));
        return out;
    };
    // B3 positives in an orthonormal-style basis with simple roots e1-e2, e2-e3, e3
    std::vector<Root> b3 = {r({1, -1, 0}), r({0, 1, -1}), r({0, 0, 1}), r({1, 0, -1}), r({0, 1, 0}), r({1, 0, 0}),
                            r({0, 1, 1}), r({1, 0, 1}), r({1, 1, 0})};
    EXPECT_EQ(dynkin_type(simple_roots(b3), b3).type, "B3");
    std::vector<Root> c3 = {r({1, -1, 0}), r({0, 1, -1}), r({0, 0, 2}), r({1, 0, -1}), r({0, 1, 1}), r({0, 2, 0}),
                            r({1, 0, 1}), r({1, 1, 0}), r({2, 0, 0})};
    EXPECT_EQ(dynkin_type(simple_roots(c3), c3).type, "C3");
    std::vector<Root> d4;
    for (int i = 0; i < 4; ++i)
        for (int j = i + 1; j < 4; ++j) {
            Root p(4, Scalar(0)), m(4, Scalar(0));
            p[i] = p[j] = m[i] = 1;
            m[j] = -1;
            d4.push_back(p);
            d4.push_back(m);
        }
    EXPECT_EQ(dynkin_type(simple_roots(d4), d4).type, "D4");
    std::vector<Root> a1a1 = {r({1, 0}), r({0, 1})};
    EXPECT_EQ(dynkin_type(simple_roots(a1a1), a1a1).type, "A1xA1");
    std::vector<Root> bad = {r({1, 0}), r({0, 1}), r({1, 1}), r({2, 1}), r({1, 2})};
    EXPECT_THROW(bond(r({1, 0}), r({0, 1}), bad), UnrecognizedBondPattern);
}
