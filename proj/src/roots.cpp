#include "lieembed/roots.hpp"

#include "lieembed/errors.hpp"
#include "lieembed/poly.hpp"

#include <algorithm>
#include <set>

namespace lieembed {

bool root_less(const Root& a, const Root& b) {
    return std::lexicographical_compare(a.begin(), a.end(), b.begin(), b.end(),
                                        [](const Scalar& x, const Scalar& y) { return (x <=> y) < 0; });
}

std::string root_str(const Root& r) {
    std::string s = "(";
    for (std::size_t i = 0; i < r.size(); ++i) s += (i ? ", " : "") + r[i].str();
    return s + ")";
}

std::optional<std::size_t> RootSpaceDecomposition::find(const Root& r) const {
    for (std::size_t i = 0; i < roots.size(); ++i)
        if (roots[i].root == r) return i;
    return std::nullopt;
}

std::vector<Root> RootSpaceDecomposition::root_list() const {
    std::vector<Root> out;
    for (const auto& rs : roots) out.push_back(rs.root);
    return out;
}

namespace {

void check_torus(const LieAlgebra& L, const std::vector<Element>& torus) {
    for (std::size_t i = 0; i < torus.size(); ++i) {
        for (std::size_t j = i + 1; j < torus.size(); ++j)
            if (!is_zero_vec(L.bracket(torus[i], torus[j])))
                throw NotATorus("torus elements " + L.format(torus[i]) + " and " + L.format(torus[j]) + " do not commute");
        if (!is_ad_semisimple(L, torus[i])) throw NotATorus(L.format(torus[i]) + " is not ad-semisimple");
    }
}

}  // namespace

RootSpaceDecomposition decompose(const LieAlgebra& L, const std::vector<Element>& torus, const Subspace& ambient) {
    check_torus(L, torus);
    const std::size_t n = L.dim();
    struct Piece {
        Root weight;
        KSubspace space;
    };
    std::vector<Piece> pieces{{Root{}, to_scalar(ambient)}};
    for (const auto& t : torus) {
        QMatrix restricted = ad_on(L, t, ambient);
        auto evs = poly_roots(char_poly(restricted));
        KMatrix A = L.ad(to_scalar(t));
        std::vector<Piece> next;
        for (const auto& piece : pieces) {
            if (piece.space.is_zero()) continue;
            for (const auto& ev : evs) {
                KMatrix B = A;
                for (std::size_t i = 0; i < n; ++i) B(i, i) -= ev.value;
                KMatrix M = B * piece.space.matrix().transpose();
                std::vector<KVec> vecs;
                for (const auto& c : kernel(M)) vecs.push_back(piece.space.combine(c));
                if (vecs.empty()) continue;
                Root w = piece.weight;
                w.push_back(ev.value);
                next.push_back({w, KSubspace::span(n, vecs)});
            }
        }
        pieces = std::move(next);
    }
    RootSpaceDecomposition d;
    d.cartan = torus;
    d.ambient = ambient;
    d.zero_space = KSubspace(n);
    std::size_t total = 0;
    for (auto& p : pieces) {
        total += p.space.dim();
        if (is_zero_vec(p.weight)) d.zero_space = d.zero_space + p.space;
        else d.roots.push_back({p.weight, p.space});
    }
    if (torus.empty()) d.zero_space = to_scalar(ambient), total = ambient.dim();
    if (total != ambient.dim()) throw NotATorus("torus does not act diagonalizably on the subspace");
    std::sort(d.roots.begin(), d.roots.end(), [](const RootSpace& a, const RootSpace& b) { return root_less(a.root, b.root); });
    return d;
}

RootSpaceDecomposition root_space_decomposition(const LieAlgebra& L, const std::vector<Element>& cartan) {
    return decompose(L, cartan, whole(L));
}

RootSpaceDecomposition restricted_roots(const LieAlgebra& L, const Subspace& ambient, const std::vector<Element>& A) {
    for (const auto& a : A)
        if (classify_element(L, a) != ElementClass::real_semisimple && !is_zero_vec(a) &&
            classify_element(L, a) != ElementClass::nilpotent)
            throw NotATorus(L.format(a) + " is not real semisimple");
    auto d = decompose(L, A, ambient);
    for (const auto& rs : d.roots)
        for (const auto& v : rs.root)
            if (!v.is_real()) throw NotATorus("restricted roots must be real");
    return d;
}

bool is_positive(const Root& r) {
    for (const auto& v : r)
        if (!v.is_zero()) return v.is_complex_positive();
    return false;
}

std::vector<Root> positive_roots(const RootSpaceDecomposition& d) {
    std::vector<Root> out;
    for (const auto& rs : d.roots)
        if (is_positive(rs.root)) out.push_back(rs.root);
    return out;
}

std::vector<Root> simple_roots(const std::vector<Root>& positives) {
    std::set<Root, decltype(&root_less)> sums(&root_less);
    for (std::size_t i = 0; i < positives.size(); ++i)
        for (std::size_t j = i; j < positives.size(); ++j) sums.insert(positives[i] + positives[j]);
    std::vector<Root> out;
    for (const auto& r : positives)
        if (!sums.count(r)) out.push_back(r);
    std::sort(out.begin(), out.end(), root_less);
    return out;
}

namespace {

std::optional<KVec> solve_in_roots(const Root& r, const std::vector<Root>& basis) {
    if (basis.empty()) return is_zero_vec(r) ? std::optional<KVec>(KVec{}) : std::nullopt;
    KMatrix M = KMatrix::from_cols(basis, r.size());
    auto c = solve_linear(M, r);
    if (!c) return std::nullopt;
    if (M.apply(*c) != r) return std::nullopt;
    return c;
}

std::optional<std::vector<long>> nonneg_integers(const KVec& c) {
    std::vector<long> out;
    for (const auto& x : c) {
        if (!x.is_rational()) return std::nullopt;
        const Rational& q = x.to_rational();
        if (!q.is_integer() || q.sign() < 0 || !q.num().fits_slong_p()) return std::nullopt;
        out.push_back(q.num().get_si());
    }
    return out;
}

}  // namespace

std::optional<std::vector<long>> simple_coordinates(const Root& r, const std::vector<Root>& simples) {
    auto c = solve_in_roots(r, simples);
    if (!c) return std::nullopt;
    return nonneg_integers(*c);
}

Bond bond(const Root& a, const Root& b, const std::vector<Root>& positives, std::size_t ia, std::size_t ib) {
    std::set<std::pair<long, long>> pattern;
    for (const auto& r : positives) {
        auto c = solve_in_roots(r, {a, b});
        if (!c) continue;
        auto ints = nonneg_integers(*c);
        if (!ints) continue;
        pattern.emplace((*ints)[0], (*ints)[1]);
    }
    using P = std::set<std::pair<long, long>>;
    const P none{{1, 0}, {0, 1}};
    const P single{{1, 0}, {0, 1}, {1, 1}};
    const P double_ab{{1, 0}, {0, 1}, {1, 1}, {1, 2}};
    const P double_ba{{1, 0}, {0, 1}, {1, 1}, {2, 1}};
    const P triple_ab{{1, 0}, {0, 1}, {1, 1}, {1, 2}, {1, 3}, {2, 3}};
    const P triple_ba{{1, 0}, {0, 1}, {1, 1}, {2, 1}, {3, 1}, {3, 2}};
    if (pattern == none) return {ia, ib, 0, ia, ib};
    if (pattern == single) return {ia, ib, 1, ia, ib};
    if (pattern == double_ab) return {ia, ib, 2, ia, ib};
    if (pattern == double_ba) return {ia, ib, 2, ib, ia};
    if (pattern == triple_ab) return {ia, ib, 3, ia, ib};
    if (pattern == triple_ba) return {ia, ib, 3, ib, ia};
    std::string desc;
    for (const auto& [i, j] : pattern) desc += " " + std::to_string(i) + "a+" + std::to_string(j) + "b";
    throw UnrecognizedBondPattern("roots in the span of " + root_str(a) + ", " + root_str(b) + ":" + desc);
}

namespace {

std::string classify_component(const std::vector<std::size_t>& nodes, const std::vector<Bond>& bonds) {
    const std::size_t k = nodes.size();
    if (k == 1) return "A1";
    std::map<std::size_t, std::vector<std::size_t>> adj;
    std::vector<Bond> local;
    for (const auto& b : bonds)
        if (std::find(nodes.begin(), nodes.end(), b.i) != nodes.end()) {
            adj[b.i].push_back(b.j);
            adj[b.j].push_back(b.i);
            local.push_back(b);
        }
    if (local.size() != k - 1) throw UnrecognizedDiagram("diagram component contains a cycle");
    std::size_t triples = 0, doubles = 0;
    for (const auto& b : local) {
        if (b.multiplicity == 3) ++triples;
        if (b.multiplicity == 2) ++doubles;
    }
    if (triples > 0) {
        if (k == 2) return "G2";
        throw UnrecognizedDiagram("triple bond in a component with more than two nodes");
    }
    std::size_t max_deg = 0;
    for (auto n : nodes) max_deg = std::max(max_deg, adj[n].size());
    if (doubles > 1) throw UnrecognizedDiagram("more than one double bond");
    if (doubles == 1) {
        if (max_deg > 2) throw UnrecognizedDiagram("branched diagram with a double bond");
        if (k == 2) return "B2";
        const Bond* d = nullptr;
        for (const auto& b : local)
            if (b.multiplicity == 2) d = &b;
        bool i_end = adj[d->i].size() == 1, j_end = adj[d->j].size() == 1;
        if (!i_end && !j_end) {
            if (k == 4) return "F4";
            throw UnrecognizedDiagram("double bond in the interior of a long chain");
        }
        std::size_t end = i_end ? d->i : d->j;
        return std::string(d->to == end ? "B" : "C") + std::to_string(k);
    }
    if (max_deg <= 2) return "A" + std::to_string(k);
    if (max_deg > 3) throw UnrecognizedDiagram("node of degree > 3");
    std::size_t center = 0, branch_nodes = 0;
    for (auto n : nodes)
        if (adj[n].size() == 3) {
            center = n;
            ++branch_nodes;
        }
    if (branch_nodes != 1) throw UnrecognizedDiagram("more than one branch node");
    std::vector<std::size_t> arms;
    for (auto start : adj[center]) {
        std::size_t len = 1, prev = center, cur = start;
        while (adj[cur].size() == 2) {
            std::size_t nxt = adj[cur][0] == prev ? adj[cur][1] : adj[cur][0];
            prev = cur;
            cur = nxt;
            ++len;
        }
        arms.push_back(len);
    }
    std::sort(arms.begin(), arms.end());
    if (arms[0] == 1 && arms[1] == 1) return "D" + std::to_string(k);
    if (arms[0] == 1 && arms[1] == 2 && arms[2] >= 2 && arms[2] <= 4) return "E" + std::to_string(k);
    throw UnrecognizedDiagram("branched diagram of unknown type");
}

}  // namespace

DynkinDiagram dynkin_type(const std::vector<Root>& simples, const std::vector<Root>& positives) {
    DynkinDiagram dd;
    dd.nodes = simples;
    std::sort(dd.nodes.begin(), dd.nodes.end(), root_less);
    const std::size_t k = dd.nodes.size();
    if (k == 0) throw UnrecognizedDiagram("no simple roots");
    for (std::size_t i = 0; i < k; ++i)
        for (std::size_t j = i + 1; j < k; ++j) {
            Bond b = bond(dd.nodes[i], dd.nodes[j], positives, i, j);
            if (b.multiplicity > 0) dd.bonds.push_back(b);
        }
    // connected components in node order
    std::vector<int> comp(k, -1);
    int ncomp = 0;
    for (std::size_t s = 0; s < k; ++s) {
        if (comp[s] >= 0) continue;
        std::vector<std::size_t> stack{s};
        comp[s] = ncomp;
        while (!stack.empty()) {
            std::size_t u = stack.back();
            stack.pop_back();
            for (const auto& b : dd.bonds) {
                std::size_t v = b.i == u ? b.j : (b.j == u ? b.i : k);
                if (v < k && comp[v] < 0) {
                    comp[v] = ncomp;
                    stack.push_back(v);
                }
            }
        }
        ++ncomp;
    }
    for (int c = 0; c < ncomp; ++c) {
        std::vector<std::size_t> nodes;
        for (std::size_t i = 0; i < k; ++i)
            if (comp[i] == c) nodes.push_back(i);
        dd.type += (c ? "x" : "") + classify_component(nodes, dd.bonds);
    }
    return dd;
}

namespace {

Element to_rational_vec(const KVec& v) {
    Element out;
    for (const auto& x : v) {
        if (!x.is_rational()) throw DegenerateRoot("root space is not defined over the rationals");
        out.push_back(x.to_rational());
    }
    return out;
}

}  // namespace

Sl2Triple sl2_triple(const LieAlgebra& L, const RootSpaceDecomposition& d, const Root& root,
                     const std::optional<Element>& x) {
    auto ip = d.find(root);
    auto im = d.find(-root);
    if (!ip || !im) throw DegenerateRoot("root " + root_str(root) + " or its negative is missing");
    const std::size_t n = L.dim();
    Element X = x ? *x : to_rational_vec(d.roots[*ip].space.basis().front());
    if (!d.roots[*ip].space.contains(to_scalar(X))) throw DegenerateRoot(L.format(X) + " is not in the root space");
    std::vector<Element> neg;
    for (const auto& v : d.roots[*im].space.basis()) neg.push_back(to_rational_vec(v));
    std::vector<QVec> cols;
    for (const auto& w : neg) cols.push_back(L.bracket(X, L.bracket(X, w)));
    auto z = solve_linear(QMatrix::from_cols(cols, n), scaled(Rational(-2), X));
    if (!z) throw DegenerateRoot("no Z in the opposite root space with [X,[X,Z]] = -2X for root " + root_str(root));
    Element Z = L.zero();
    for (std::size_t k = 0; k < neg.size(); ++k) Z += scaled((*z)[k], neg[k]);
    Element H = L.bracket(X, Z);
    if (is_zero_vec(H)) throw DegenerateRoot("bracket of opposite root spaces vanishes");
    // Y with [X, Y] = H and [H, Y] = -2Y
    QMatrix adX = L.ad(X), adH = L.ad(H);
    QMatrix M(2 * n, n);
    QVec rhs(2 * n, Rational(0));
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = 0; j < n; ++j) {
            M(i, j) = adX(i, j);
            M(n + i, j) = adH(i, j) + (i == j ? Rational(2) : Rational(0));
        }
        rhs[i] = H[i];
    }
    auto y = solve_linear(M, rhs);
    if (!y) throw DegenerateRoot("no Y completing the triple for root " + root_str(root));
    return {X, *y, H};
}

std::vector<std::pair<Root, Root>> conjugation_pairing(const RootSpaceDecomposition& d) {
    std::vector<std::pair<Root, Root>> out;
    for (const auto& rs : d.roots) {
        Root c;
        for (const auto& v : rs.root) c.push_back(v.conj());
        if (!d.find(c)) throw InvariantViolation("conjugate of root " + root_str(rs.root) + " is not a root");
        out.emplace_back(rs.root, c);
    }
    return out;
}

TorusSplit torus_split(const LieAlgebra& L, const Subspace& T) {
    if (!is_abelian(L, T)) throw NotATorus("torus is not abelian");
    const auto& tb = T.basis();
    auto d = root_space_decomposition(L, tb);
    const std::size_t m = tb.size();
    std::vector<QVec> real_rows, compact_rows;
    for (const auto& rs : d.roots) {
        QVec re(m), im(m);
        bool any_im = false;
        std::int64_t dd = 0;
        for (std::size_t i = 0; i < m; ++i) {
            re[i] = rs.root[i].a();
            im[i] = rs.root[i].b();
            if (!im[i].is_zero()) {
                any_im = true;
                dd = rs.root[i].d();
            }
        }
        if (any_im && dd < 0) {
            real_rows.push_back(im);
            compact_rows.push_back(re);
        } else {
            compact_rows.push_back(re);
            if (any_im) compact_rows.push_back(im);
        }
    }
    auto solve = [&](const std::vector<QVec>& rows) {
        std::vector<Element> out;
        std::vector<QVec> ker;
        if (rows.empty()) {
            for (std::size_t i = 0; i < m; ++i) ker.push_back(unit_vec<Rational>(m, i));
        } else {
            ker = kernel(QMatrix::from_rows(rows, m));
        }
        for (const auto& c : ker) out.push_back(T.combine(c));
        return span(L, out);
    };
    return {solve(real_rows), solve(compact_rows)};
}

Element real_part(const KVec& v) {
    Element out;
    for (const auto& x : v) out.push_back(x.a());
    return out;
}

Element imag_part(const KVec& v) {
    Element out;
    for (const auto& x : v) out.push_back(x.b());
    return out;
}

}  // namespace lieembed
