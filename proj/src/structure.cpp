#include "lieembed/structure.hpp"

#include "lieembed/errors.hpp"
#include "lieembed/poly.hpp"

namespace lieembed {

std::string to_string(ElementClass c) {
    switch (c) {
        case ElementClass::nilpotent: return "nilpotent";
        case ElementClass::real_semisimple: return "real_semisimple";
        case ElementClass::compact_semisimple: return "compact_semisimple";
        case ElementClass::mixed_semisimple: return "mixed_semisimple";
        case ElementClass::general: return "general";
    }
    return "general";
}

Subspace whole(const LieAlgebra& L) { return Subspace::full(L.dim()); }
Subspace span(const LieAlgebra& L, const std::vector<Element>& v) { return Subspace::span(L.dim(), v); }

Subspace bracket_span(const LieAlgebra& L, const Subspace& A, const Subspace& B) {
    std::vector<Element> out;
    for (const auto& a : A.basis())
        for (const auto& b : B.basis()) {
            Element c = L.bracket(a, b);
            if (!is_zero_vec(c)) out.push_back(std::move(c));
        }
    return span(L, out);
}

bool is_subalgebra(const LieAlgebra& L, const Subspace& S) {
    const auto& b = S.basis();
    for (std::size_t i = 0; i < b.size(); ++i)
        for (std::size_t j = i + 1; j < b.size(); ++j)
            if (!S.contains(L.bracket(b[i], b[j]))) return false;
    return true;
}

bool is_abelian(const LieAlgebra& L, const Subspace& S) {
    const auto& b = S.basis();
    for (std::size_t i = 0; i < b.size(); ++i)
        for (std::size_t j = i + 1; j < b.size(); ++j)
            if (!is_zero_vec(L.bracket(b[i], b[j]))) return false;
    return true;
}

bool is_ideal(const LieAlgebra& L, const Subspace& I, const Subspace& S) {
    if (!S.contains(I)) return false;
    for (const auto& s : S.basis())
        for (const auto& x : I.basis())
            if (!I.contains(L.bracket(s, x))) return false;
    return true;
}

Subspace derived_algebra(const LieAlgebra& L, const Subspace& S) {
    if (!is_subalgebra(L, S)) throw NotASubalgebra("derived algebra of a subspace that is not bracket-closed");
    return bracket_span(L, S, S);
}

std::vector<Subspace> derived_series(const LieAlgebra& L, const Subspace& S) {
    std::vector<Subspace> out{S};
    while (true) {
        Subspace next = derived_algebra(L, out.back());
        if (next == out.back()) break;
        out.push_back(next);
        if (next.is_zero()) break;
    }
    return out;
}

std::vector<Subspace> lower_central_series(const LieAlgebra& L, const Subspace& S) {
    std::vector<Subspace> out{S};
    while (true) {
        Subspace next = bracket_span(L, S, out.back());
        if (next == out.back()) break;
        out.push_back(next);
        if (next.is_zero()) break;
    }
    return out;
}

bool is_solvable(const LieAlgebra& L, const Subspace& S) { return derived_series(L, S).back().is_zero(); }
bool is_nilpotent_algebra(const LieAlgebra& L, const Subspace& S) {
    return lower_central_series(L, S).back().is_zero();
}

namespace {

QMatrix stack(const std::vector<QMatrix>& blocks, std::size_t cols) {
    std::size_t rows = 0;
    for (const auto& b : blocks) rows += b.rows();
    QMatrix m(rows, cols);
    std::size_t r = 0;
    for (const auto& b : blocks)
        for (std::size_t i = 0; i < b.rows(); ++i, ++r)
            for (std::size_t j = 0; j < cols; ++j) m(r, j) = b(i, j);
    return m;
}

}  // namespace

Subspace centralizer(const LieAlgebra& L, const Subspace& S) {
    if (S.is_zero()) return whole(L);
    std::vector<QMatrix> blocks;
    for (const auto& s : S.basis()) blocks.push_back(L.ad(s));
    return span(L, kernel(stack(blocks, L.dim())));
}

Subspace normalizer(const LieAlgebra& L, const Subspace& S) {
    auto ann = S.annihilator();
    if (ann.empty()) return whole(L);
    QMatrix q = QMatrix::from_rows(ann, L.dim());
    std::vector<QMatrix> blocks;
    for (const auto& s : S.basis()) blocks.push_back(q * L.ad(s));
    if (blocks.empty()) return whole(L);
    return span(L, kernel(stack(blocks, L.dim())));
}

Subspace center(const LieAlgebra& L, const Subspace& S) { return centralizer(L, S).intersect(S); }

QMatrix ad_on(const LieAlgebra& L, const Element& x, const Subspace& S) {
    const std::size_t k = S.dim();
    QMatrix m(k, k);
    for (std::size_t j = 0; j < k; ++j) {
        auto c = S.coords(L.bracket(x, S.basis()[j]));
        if (!c) throw NotASubalgebra("ad(x) does not preserve the subspace");
        m.set_col(j, *c);
    }
    return m;
}

QMatrix killing_form(const LieAlgebra& L, const Subspace& S) {
    const std::size_t k = S.dim();
    std::vector<QMatrix> ads;
    for (const auto& b : S.basis()) ads.push_back(ad_on(L, b, S));
    QMatrix K(k, k);
    for (std::size_t i = 0; i < k; ++i)
        for (std::size_t j = i; j < k; ++j) {
            Rational t = (ads[i] * ads[j]).trace();
            K(i, j) = t;
            K(j, i) = t;
        }
    return K;
}

QMatrix killing_form(const LieAlgebra& L) { return killing_form(L, whole(L)); }

Signature killing_signature(const LieAlgebra& L, const Subspace& S) {
    return congruence_signature(killing_form(L, S));
}
Signature ambient_killing_signature(const LieAlgebra& L, const Subspace& S) {
    QMatrix B = S.matrix();
    return congruence_signature(B * killing_form(L) * B.transpose());
}

Signature killing_signature(const LieAlgebra& L) { return killing_signature(L, whole(L)); }

Rational killing(const LieAlgebra& L, const Element& x, const Element& y) { return (L.ad(x) * L.ad(y)).trace(); }

bool is_negative_definite(const LieAlgebra& L, const Subspace& S) {
    if (S.is_zero()) return true;
    // not an algebra in its own right: use the ambient form restricted to S
    if (!is_subalgebra(L, S)) return ambient_killing_signature(L, S).n_neg == S.dim();
    Signature s = killing_signature(L, S);
    return s.n_neg == S.dim();
}

Subspace radical(const LieAlgebra& L, const Subspace& S) {
    if (S.is_zero()) return S;
    Subspace D = derived_algebra(L, S);
    if (D.is_zero()) return S;
    QMatrix K = killing_form(L, S);
    std::vector<QVec> dc;
    for (const auto& d : D.basis()) dc.push_back(*S.coords(d));
    QMatrix C = QMatrix::from_rows(dc, S.dim());
    std::vector<Element> rad;
    for (const auto& a : kernel(C * K)) rad.push_back(S.combine(a));
    Subspace R = span(L, rad);
    if (!is_solvable(L, R) || !is_ideal(L, R, S)) throw InvariantViolation("radical from Killing orthogonality is not a solvable ideal");
    return R;
}

Subspace radical(const LieAlgebra& L) { return radical(L, whole(L)); }

namespace {

// Coordinates of v relative to the basis x_1..x_m, r_1..r_k (assumed independent and spanning v).
struct MixedBasis {
    std::vector<Element> vectors;
    QMatrix cols;  // n x (m+k)
    QVec coords(const Element& v) const {
        auto c = solve_linear(cols, v);
        if (!c) throw InvariantViolation("Levi lifting: vector outside the algebra");
        return *c;
    }
};

}  // namespace

LeviDecomposition levi_decomposition(const LieAlgebra& L, const Subspace& S) {
    if (!is_subalgebra(L, S)) throw NotASubalgebra("Levi decomposition of a non-subalgebra");
    const std::size_t n = L.dim();
    Subspace R = radical(L, S);
    std::vector<Element> x = R.complement_from(S.basis());
    const std::size_t m = x.size();
    if (m == 0) return {R, Subspace(n)};
    if (R.is_zero()) return {R, S};

    auto series = derived_series(L, R);  // R = R^0 ⊋ R^1 ⊋ ... ⊋ 0
    // structure constants of S/R in the complement
    std::vector<Element> mixed = x;
    mixed.insert(mixed.end(), R.basis().begin(), R.basis().end());
    MixedBasis mb{mixed, QMatrix::from_cols(mixed, n)};
    std::vector<std::vector<QVec>> cst(m, std::vector<QVec>(m));
    for (std::size_t i = 0; i < m; ++i)
        for (std::size_t j = 0; j < m; ++j) {
            QVec c = mb.coords(L.bracket(x[i], x[j]));
            cst[i][j] = QVec(c.begin(), c.begin() + static_cast<std::ptrdiff_t>(m));
        }
    auto defect = [&](std::size_t i, std::size_t j) {
        Element d = L.bracket(x[i], x[j]);
        for (std::size_t k = 0; k < m; ++k)
            if (!cst[i][j][k].is_zero()) d -= scaled(cst[i][j][k], x[k]);
        return d;
    };

    for (std::size_t t = 0; t + 1 < series.size(); ++t) {
        const Subspace& Rt = series[t];
        const Subspace& Rn = series[t + 1];
        auto annv = Rn.annihilator();
        QMatrix Q = annv.empty() ? QMatrix(0, n) : QMatrix::from_rows(annv, n);
        const std::size_t q = Q.rows();
        const std::size_t kt = Rt.dim();
        // unknowns: coefficients a_{i,l} of r_i = sum_l a_{i,l} Rt_l
        std::vector<std::pair<std::size_t, std::size_t>> pairs;
        for (std::size_t i = 0; i < m; ++i)
            for (std::size_t j = i + 1; j < m; ++j) pairs.emplace_back(i, j);
        QMatrix A(pairs.size() * q, m * kt);
        QVec rhs(pairs.size() * q, Rational(0));
        for (std::size_t p = 0; p < pairs.size(); ++p) {
            auto [i, j] = pairs[p];
            QVec rho = Q.apply(defect(i, j));
            for (std::size_t r = 0; r < q; ++r) rhs[p * q + r] = -rho[r];
            for (std::size_t l = 0; l < kt; ++l) {
                const Element& b = Rt.basis()[l];
                // r_j term: [x_i, b]; r_i term: -[x_j, b]; r_k term: -c_ij^k b
                QVec tj = Q.apply(L.bracket(x[i], b));
                QVec ti = Q.apply(-L.bracket(x[j], b));
                for (std::size_t r = 0; r < q; ++r) {
                    A(p * q + r, j * kt + l) += tj[r];
                    A(p * q + r, i * kt + l) += ti[r];
                }
                if (q == 0) continue;
                QVec qb = Q.apply(b);
                for (std::size_t k = 0; k < m; ++k) {
                    if (cst[i][j][k].is_zero()) continue;
                    for (std::size_t r = 0; r < q; ++r) A(p * q + r, k * kt + l) -= cst[i][j][k] * qb[r];
                }
            }
        }
        if (q == 0 || pairs.empty()) continue;
        auto sol = solve_linear(A, rhs);
        if (!sol) throw InvariantViolation("Levi lifting has no solution");
        for (std::size_t i = 0; i < m; ++i)
            for (std::size_t l = 0; l < kt; ++l)
                if (!(*sol)[i * kt + l].is_zero()) x[i] += scaled((*sol)[i * kt + l], Rt.basis()[l]);
    }
    Subspace levi = span(L, x);
    for (std::size_t i = 0; i < m; ++i)
        for (std::size_t j = i + 1; j < m; ++j)
            if (!is_zero_vec(defect(i, j))) throw InvariantViolation("Levi lifting did not close");
    return {R, levi};
}

namespace {

QMatrix semisimple_part(const QMatrix& A) {
    QPoly r = squarefree_part(char_poly(A));
    QMatrix S = A;
    QPoly dr = r.derivative();
    for (std::size_t it = 0; it < 64; ++it) {
        QMatrix rS = r.eval(S);
        if (rS.is_zero()) return S;
        auto inv = inverse(dr.eval(S));
        if (!inv) throw InvariantViolation("Newton step for the Jordan decomposition is singular");
        S -= rS * *inv;
    }
    throw InvariantViolation("Jordan decomposition iteration did not converge");
}

}  // namespace

JordanPair jordan_decomposition(const LieAlgebra& L, const Element& x) {
    const std::size_t n = L.dim();
    QMatrix A = L.ad(x);
    QMatrix S = semisimple_part(A);
    bool modulo_center = !center(L, whole(L)).is_zero();
    if (S == A) return {x, L.zero(), modulo_center};
    if (S.is_zero()) return {L.zero(), x, modulo_center};
    // solve sum_k y_k ad(b_k) = S
    QMatrix M(n * n, n);
    for (std::size_t k = 0; k < n; ++k) {
        QMatrix ak = L.ad(L.basis(k));
        for (std::size_t i = 0; i < n; ++i)
            for (std::size_t j = 0; j < n; ++j) M(i * n + j, k) = ak(i, j);
    }
    QVec rhs(n * n);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) rhs[i * n + j] = S(i, j);
    auto y = solve_linear(M, rhs);
    if (!y) throw CenterObstruction("semisimple part of ad(" + L.format(x) + ") is not inner");
    return {*y, x - *y, modulo_center};
}

bool is_ad_nilpotent(const LieAlgebra& L, const Element& x) {
    return char_poly(L.ad(x)) == QPoly::monomial(L.dim());
}

bool is_ad_semisimple(const LieAlgebra& L, const Element& x) {
    QMatrix A = L.ad(x);
    return squarefree_part(char_poly(A)).eval(A).is_zero();
}

ElementClass classify_element(const LieAlgebra& L, const Element& x) {
    QMatrix A = L.ad(x);
    QPoly p = char_poly(A);
    if (p == QPoly::monomial(L.dim())) return ElementClass::nilpotent;
    QPoly r = squarefree_part(p);
    if (!r.eval(A).is_zero()) return ElementClass::general;
    if (count_real_roots(r) == static_cast<std::size_t>(r.degree())) return ElementClass::real_semisimple;
    // purely imaginary spectrum: r = t^e G(t^2) with every root of G real and negative
    QPoly h = r;
    while (h.coeff(0).is_zero()) h = QPoly::exact_div(h, QPoly::monomial(1));
    bool even = true;
    for (std::size_t k = 1; k < h.coeffs().size(); k += 2)
        if (!h.coeffs()[k].is_zero()) even = false;
    if (even) {
        std::vector<Rational> g;
        for (std::size_t k = 0; k < h.coeffs().size(); k += 2) g.push_back(h.coeffs()[k]);
        QPoly G(g);
        if (count_negative_roots(G) == static_cast<std::size_t>(G.degree())) return ElementClass::compact_semisimple;
    }
    return ElementClass::mixed_semisimple;
}

bool is_ad_nilpotent_subalgebra(const LieAlgebra& L, const Subspace& S) {
    if (S.is_zero()) return true;
    std::vector<QMatrix> ads;
    for (const auto& u : S.basis()) ads.push_back(L.ad(u));
    Subspace V = whole(L);
    for (std::size_t it = 0; it <= L.dim(); ++it) {
        if (V.is_zero()) return true;
        std::vector<Element> next;
        for (const auto& a : ads)
            for (const auto& v : V.basis()) next.push_back(a.apply(v));
        Subspace W = span(L, next);
        if (W == V) return false;
        V = W;
    }
    return V.is_zero();
}

Subspace subalgebra_generated(const LieAlgebra& L, const std::vector<Element>& v) {
    Subspace S = span(L, v);
    while (true) {
        Subspace T = S + bracket_span(L, S, S);
        if (T == S) return S;
        S = T;
    }
}

}  // namespace lieembed
