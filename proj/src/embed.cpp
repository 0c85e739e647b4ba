#include "lieembed/embed.hpp"

#include "lieembed/errors.hpp"
#include "lieembed/poly.hpp"

#include <functional>
#include <random>

namespace lieembed {

namespace {

Subspace S_of(const LieAlgebra& L) { return Subspace(L.dim()); }

/// The single d with all eigenvalues of ad(x) in Q(sqrt(d)) (0 when all
/// are rational); nullopt when the spectrum needs more.
std::optional<std::int64_t> spectrum_field(const LieAlgebra& L, const Element& x) {
    std::int64_t d = 0;
    try {
        for (const auto& e : poly_roots(char_poly(L.ad(x)))) {
            if (e.value.is_rational()) continue;
            if (d != 0 && e.value.d() != d) return std::nullopt;
            d = e.value.d();
        }
    } catch (const ExtensionDegreeTooHigh&) {
        return std::nullopt;
    }
    return d;
}

bool rational_spectrum(const LieAlgebra& L, const Element& x) {
    try {
        for (const auto& e : poly_roots(char_poly(L.ad(x))))
            if (!e.value.is_rational()) return false;
    } catch (const ExtensionDegreeTooHigh&) {
        return false;
    }
    return true;
}

template <class Pred>
std::optional<Element> search(const Subspace& S, const SearchOptions& opt, Pred ok) {
    const auto& B = S.basis();
    const std::size_t k = B.size();
    if (k == 0) return std::nullopt;
    std::size_t spent = 0;
    auto tryit = [&](const Element& x) {
        ++spent;
        return !is_zero_vec(x) && ok(x);
    };
    for (const auto& b : B) {
        if (spent >= opt.budget) return std::nullopt;
        if (tryit(b)) return b;
    }
    // integer combinations with at least two nonzero coefficients in {-2..2},
    // by increasing total weight, then lexicographically (earlier basis
    // vectors first, nonzero before zero, 1, -1, 2, -2)
    static const long order[] = {1, -1, 2, -2, 0};
    std::optional<Element> found;
    std::vector<long> c(k, 0);
    std::function<bool(std::size_t, long, std::size_t)> rec = [&](std::size_t pos, long left, std::size_t nz) -> bool {
        if (spent >= opt.budget) return true;
        if (pos == k) {
            if (left != 0 || nz < 2) return false;
            QVec q(k);
            for (std::size_t j = 0; j < k; ++j) q[j] = Rational(c[j]);
            Element x = S.combine(q);
            if (tryit(x)) {
                found = x;
                return true;
            }
            return false;
        }
        for (long v : order) {
            long w = v < 0 ? -v : v;
            if (w > left) continue;
            if (v == 0 && left > 2 * static_cast<long>(k - pos - 1)) continue;
            c[pos] = v;
            if (rec(pos + 1, left - w, nz + (v != 0))) return true;
        }
        c[pos] = 0;
        return false;
    };
    for (long weight = 2; weight <= 2 * static_cast<long>(k) && spent < opt.budget; ++weight)
        if (rec(0, weight, 0)) break;
    if (found) return found;
    std::mt19937_64 rng(opt.seed);
    std::uniform_int_distribution<long> num(-9, 9), den(1, 5);
    while (spent < opt.budget) {
        QVec c(k);
        for (auto& v : c) v = Rational(mpz_class(num(rng)), mpz_class(den(rng)));
        Element x = S.combine(c);
        if (tryit(x)) return x;
    }
    return std::nullopt;
}

/// Maximal abelian subalgebra of a compact semisimple S, grown from its basis order.
Subspace compact_maximal_torus(const LieAlgebra& L, const Subspace& S) {
    Subspace T = S_of(L);
    while (true) {
        Subspace Z = centralizer(L, T).intersect(S);
        if (T.contains(Z)) return T;
        auto extra = T.complement_from(Z.basis());
        T = T.with({extra.front()});
    }
}

void push(EmbeddingTrace& tr, std::string label, std::vector<Element> adjoined, const Subspace& result) {
    tr.steps.push_back({std::move(label), std::move(adjoined), result});
}

/// Positive-eigenvalue eigenvectors of ad(alpha) on S.
std::vector<Element> positive_eigenvectors(const LieAlgebra& L, const Element& alpha, const Subspace& S) {
    QMatrix M = ad_on(L, alpha, S);
    std::vector<Element> out;
    for (const auto& ev : poly_roots(char_poly(M))) {
        if (!ev.value.is_rational() || ev.value.to_rational().sign() <= 0) continue;
        QMatrix B = M;
        for (std::size_t i = 0; i < B.rows(); ++i) B(i, i) -= ev.value.to_rational();
        for (const auto& c : kernel(B)) out.push_back(S.combine(c));
    }
    return out;
}

}  // namespace

bool replay(const LieAlgebra& L, const EmbeddingTrace& trace) {
    Subspace cur = trace.input;
    for (const auto& s : trace.steps) {
        cur = cur.with(s.adjoined);
        if (!(cur == s.result)) return false;
        (void)L;
    }
    return cur == trace.result;
}

Element find_real_semisimple(const LieAlgebra& L, const Subspace& S, const SearchOptions& opt) {
    auto x = search(S, opt, [&](const Element& e) {
        return classify_element(L, e) == ElementClass::real_semisimple && rational_spectrum(L, e);
    });
    if (!x) throw NoRealSemisimpleFound("no real semisimple element with rational spectrum found within budget " +
                                        std::to_string(opt.budget));
    return *x;
}

Element find_compact(const LieAlgebra& L, const Subspace& S, const SearchOptions& opt, std::int64_t field) {
    auto x = search(S, opt, [&](const Element& e) {
        if (classify_element(L, e) != ElementClass::compact_semisimple) return false;
        auto d = spectrum_field(L, e);
        return d && (field == 0 || *d == field);
    });
    if (!x) throw NoCompactFound("no compact element found within budget " + std::to_string(opt.budget));
    return *x;
}

RealTorusResult embed_real_torus(const LieAlgebra& L, const Subspace& A0, const SearchOptions& opt) {
    if (!is_abelian(L, A0)) throw NotATorus("A is not abelian");
    for (const auto& a : A0.basis())
        if (classify_element(L, a) != ElementClass::real_semisimple)
            throw NotATorus(L.format(a) + " is not real semisimple");
    EmbeddingTrace tr{"real-torus", A0, {}, A0};
    Subspace A = A0;
    Subspace Z, D, C;
    for (std::size_t iter = 0;; ++iter) {
        if (iter > L.dim()) throw InvariantViolation("real torus embedding did not terminate");
        Z = centralizer(L, A);
        D = derived_algebra(L, Z);
        C = center(L, Z);
        if (D.is_zero() || is_negative_definite(L, D)) break;
        Element a = find_real_semisimple(L, D, opt);
        A = A.with({a});
        push(tr, "real-torus/adjoin-real", {a}, A);
    }
    auto split = torus_split(L, C);
    Subspace compact = split.compact_part + compact_maximal_torus(L, D);
    RealTorusResult res;
    res.max_real_torus = split.real_part;
    if (!(A == split.real_part)) push(tr, "real-torus/real-center", A.complement_from(split.real_part.basis()), split.real_part);
    tr.result = split.real_part;
    res.cartan = {split.real_part + compact, split.real_part, compact};
    res.trace = std::move(tr);
    return res;
}

CompactTorusResult embed_compact_torus(const LieAlgebra& L, const Subspace& T0, const SearchOptions& opt) {
    if (!is_abelian(L, T0)) throw NotATorus("T is not abelian");
    for (const auto& t : T0.basis())
        if (classify_element(L, t) != ElementClass::compact_semisimple)
            throw NotATorus(L.format(t) + " is not compact");
    EmbeddingTrace tr{"compact-torus", T0, {}, T0};
    std::int64_t field = 0;
    for (const auto& t : T0.basis()) {
        auto d = spectrum_field(L, t);
        if (!d || (field != 0 && *d != field)) throw ExtensionDegreeTooHigh("torus spectrum needs more than one quadratic extension");
        field = *d;
    }
    Subspace T = T0, Z;
    for (std::size_t iter = 0;; ++iter) {
        if (iter > L.dim()) throw InvariantViolation("compact torus embedding did not terminate");
        Z = centralizer(L, T);
        Subspace D = derived_algebra(L, Z);
        if (D.is_zero()) break;
        Element t = find_compact(L, D, opt, field);
        if (field == 0) field = *spectrum_field(L, t);
        T = T.with({t});
        push(tr, "compact-torus/adjoin-compact", {t}, T);
    }
    // Z is now abelian and self-centralizing
    if (!(T == Z)) push(tr, "compact-torus/center", T.complement_from(Z.basis()), Z);
    tr.result = Z;
    auto split = torus_split(L, Z);
    return {{Z, split.real_part, split.compact_part}, std::move(tr)};
}

AbelianNilpotentResult embed_abelian_nilpotent(const LieAlgebra& L, const Subspace& U0, const SearchOptions& opt) {
    if (!is_abelian(L, U0)) throw NotAbelianNilpotent("U is not abelian");
    for (const auto& u : U0.basis())
        if (!is_ad_nilpotent(L, u)) throw NotAbelianNilpotent(L.format(u) + " is not ad-nilpotent");
    EmbeddingTrace tr{"abelian-nilpotent", U0, {}, U0};
    Subspace U = U0;
    for (std::size_t iter = 0;; ++iter) {
        if (iter > 2 * L.dim()) throw InvariantViolation("abelian nilpotent embedding did not terminate");
        Subspace Z = centralizer(L, U);
        auto levi = levi_decomposition(L, Z);
        Subspace Rd = derived_algebra(L, levi.radical);
        if (!U.contains(Rd)) {
            Element x = U.complement_from(Rd.basis()).front();
            U = U.with({x});
            push(tr, "abelian-nilpotent/adjoin-derived", {x}, U);
            continue;
        }
        bool adjoined = false;
        for (const auto& v : U.complement_from(levi.radical.basis())) {
            auto jp = jordan_decomposition(L, v);
            if (!is_zero_vec(jp.nilpotent) && !U.contains(jp.nilpotent)) {
                U = U.with({jp.nilpotent});
                push(tr, "abelian-nilpotent/jordan-nilpotent", {jp.nilpotent}, U);
                adjoined = true;
                break;
            }
        }
        if (adjoined) continue;
        if (!levi.levi.is_zero() && !is_negative_definite(L, levi.levi)) {
            Element a = find_real_semisimple(L, levi.levi, opt);
            auto ev = positive_eigenvectors(L, a, levi.levi);
            if (ev.empty()) throw InvariantViolation("real semisimple element without positive eigenvalue");
            U = U.with({ev.front()});
            push(tr, "abelian-nilpotent/eigenvector", {ev.front()}, U);
            continue;
        }
        break;
    }
    tr.result = U;
    if (!is_abelian(L, U)) throw InvariantViolation("embedding produced a non-abelian result");
    return {U, std::move(tr)};
}

Subspace torus_complement(const LieAlgebra& L, const Subspace& R, const Subspace& U) {
    Subspace T = S_of(L);
    for (const auto& v : U.complement_from(R.basis())) {
        if ((T + U).contains(v)) continue;
        // element c of C_R(T) with c - v in U
        Subspace C = centralizer(L, T).intersect(R);
        std::vector<QVec> cols;
        for (const auto& c : C.basis()) cols.push_back(c);
        for (const auto& u : U.basis()) cols.push_back(scaled(Rational(-1), u));
        auto sol = solve_linear(QMatrix::from_cols(cols, L.dim()), v);
        if (!sol) throw InvariantViolation("centralizer of the partial torus does not cover R/U");
        Element c = L.zero();
        for (std::size_t i = 0; i < C.dim(); ++i) c += scaled((*sol)[i], C.basis()[i]);
        auto jp = jordan_decomposition(L, c);
        if (!U.contains(jp.nilpotent)) throw InvariantViolation("complement of U has a nilpotent part outside U");
        T = T.with({jp.semisimple});
    }
    if (!is_abelian(L, T)) throw InvariantViolation("torus complement is not abelian");
    return T;
}

NilpotentResult embed_nilpotent(const LieAlgebra& L, const Subspace& U0, const SearchOptions& opt) {
    if (!is_subalgebra(L, U0)) throw NotNilpotent("U is not a subalgebra");
    if (!is_ad_nilpotent_subalgebra(L, U0)) throw NotNilpotent("U is not ad-nilpotent");
    EmbeddingTrace tr{"nilpotent", U0, {}, U0};
    Subspace U = U0;
    LeviDecomposition levi;
    for (std::size_t iter = 0;; ++iter) {
        if (iter > 2 * L.dim()) throw InvariantViolation("nilpotent embedding did not terminate");
        Subspace N = normalizer(L, U);
        levi = levi_decomposition(L, N);
        Subspace Rd = derived_algebra(L, levi.radical);
        if (!U.contains(Rd)) {
            auto add = U.complement_from(Rd.basis());
            U = U + Rd;
            push(tr, "nilpotent/adjoin-derived", add, U);
            continue;
        }
        std::vector<Element> nil;
        for (const auto& v : U.complement_from(levi.radical.basis())) {
            auto jp = jordan_decomposition(L, v);
            if (!U.with(nil).contains(jp.nilpotent)) nil.push_back(jp.nilpotent);
        }
        if (!nil.empty()) {
            U = U.with(nil);
            push(tr, "nilpotent/jordan-nilpotent", nil, U);
            if (!is_subalgebra(L, U) || !is_ad_nilpotent_subalgebra(L, U))
                throw InvariantViolation("adjoining nilpotent parts left the nilpotent subalgebras");
            continue;
        }
        if (!levi.levi.is_zero() && !is_negative_definite(L, levi.levi)) {
            Element a = find_real_semisimple(L, levi.levi, opt);
            auto ev = positive_eigenvectors(L, a, levi.levi);
            if (ev.empty()) throw InvariantViolation("real semisimple element without positive eigenvalue");
            U = U.with(ev);
            push(tr, "nilpotent/eigenvector", ev, U);
            if (!is_subalgebra(L, U) || !is_ad_nilpotent_subalgebra(L, U))
                throw InvariantViolation("adjoined eigenvectors do not give an ad-nilpotent subalgebra");
            continue;
        }
        break;
    }
    tr.result = U;
    NilpotentResult res;
    res.max_nilpotent = U;
    res.trace = std::move(tr);
    res.torus = torus_complement(L, levi.radical, U);
    res.torus_A = torus_split(L, res.torus).real_part;
    auto rt = embed_real_torus(L, res.torus_A, opt);
    res.split_cartan = rt.cartan;
    res.torus_trace = std::move(rt.trace);
    return res;
}

Element circle_element(const Sl2Triple& t) {
    Rational m;
    for (const auto& v : t.Y)
        if (!v.is_zero()) {
            m = v.abs();
            break;
        }
    if (m.is_zero()) throw DegenerateRoot("zero Y in sl2 triple");
    return t.X - scaled(m.inverse(), t.Y);
}

std::vector<Element> split_circles(const LieAlgebra& L, const CartanData& c,
                                   const std::optional<std::vector<Root>>& positives) {
    if (!c.compact_part.is_zero())
        throw NotSplit("Cartan has a compact part of dimension " + std::to_string(c.compact_part.dim()));
    auto d = root_space_decomposition(L, c.cartan.basis());
    auto pos = positives ? *positives : positive_roots(d);
    std::vector<Element> out;
    for (const auto& r : simple_roots(pos)) out.push_back(circle_element(sl2_triple(L, d, r)));
    return out;
}

Subspace maximal_compact_split(const LieAlgebra& L, const CartanData& c,
                               const std::optional<std::vector<Root>>& positives) {
    Subspace K = subalgebra_generated(L, split_circles(L, c, positives));
    if (ambient_killing_signature(L, K).n_neg != K.dim()) throw InvariantViolation("circle-generated subalgebra is not compact");
    return K;
}

std::vector<Subspace> compact_root_algebras(const LieAlgebra& L, const RootSpaceDecomposition& d) {
    std::vector<Subspace> out;
    for (const auto& rs : d.roots) {
        if (!is_positive(rs.root)) continue;
        for (const auto& v : rs.space.basis()) {
            Element re = real_part(v), im = imag_part(v);
            Subspace P = span(L, {re, im});
            if (P.dim() != 2) continue;
            QMatrix G(2, 2);
            const Element* e[2] = {&re, &im};
            for (int i = 0; i < 2; ++i)
                for (int j = 0; j < 2; ++j) G(i, j) = killing(L, *e[i], *e[j]);
            if (congruence_signature(G).n_neg == 2) out.push_back(subalgebra_generated(L, {re, im}));
        }
    }
    return out;
}

Subspace maximal_compact_from_cartan(const LieAlgebra& L, const CartanData& c) {
    auto d = root_space_decomposition(L, c.cartan.basis());
    Subspace K = c.compact_part;
    for (const auto& k : compact_root_algebras(L, d)) K = K + k;
    if (!is_subalgebra(L, K)) K = subalgebra_generated(L, K.basis());
    if (ambient_killing_signature(L, K).n_neg != K.dim()) throw InvariantViolation("constructed compact subalgebra is not negative definite");
    return K;
}

}  // namespace lieembed
