#pragma once

#include "lieembed/lie_algebra.hpp"
#include "lieembed/subspace.hpp"

#include <string>
#include <vector>

namespace lieembed {

struct LeviDecomposition {
    Subspace radical;
    Subspace levi;
};

struct JordanPair {
    Element semisimple;
    Element nilpotent;
    /// Set when L has a nontrivial center, so the semisimple part is only
    /// determined up to central elements (the returned one has zero
    /// coordinates on the non-pivot directions of the solve).
    bool modulo_center = false;
};

enum class ElementClass { nilpotent, real_semisimple, compact_semisimple, mixed_semisimple, general };
std::string to_string(ElementClass c);

Subspace whole(const LieAlgebra& L);
Subspace span(const LieAlgebra& L, const std::vector<Element>& v);

/// Span of all [a, b] with a in A, b in B.
Subspace bracket_span(const LieAlgebra& L, const Subspace& A, const Subspace& B);
bool is_subalgebra(const LieAlgebra& L, const Subspace& S);
bool is_abelian(const LieAlgebra& L, const Subspace& S);
/// I is an ideal of S (both subspaces of L, I inside S).
bool is_ideal(const LieAlgebra& L, const Subspace& I, const Subspace& S);

/// [S, S]; throws NotASubalgebra when S is not bracket-closed.
Subspace derived_algebra(const LieAlgebra& L, const Subspace& S);
/// S, S', S'', ... down to the first repeated term.
std::vector<Subspace> derived_series(const LieAlgebra& L, const Subspace& S);
std::vector<Subspace> lower_central_series(const LieAlgebra& L, const Subspace& S);
bool is_solvable(const LieAlgebra& L, const Subspace& S);
bool is_nilpotent_algebra(const LieAlgebra& L, const Subspace& S);

/// {x in L : [x, s] = 0 for all s in S}.
Subspace centralizer(const LieAlgebra& L, const Subspace& S);
/// {x in L : [x, s] in S for all s in S}.
Subspace normalizer(const LieAlgebra& L, const Subspace& S);
/// Center of the subalgebra S.
Subspace center(const LieAlgebra& L, const Subspace& S);

/// ad(x) restricted to S in the coordinates of S's stored basis
/// (requires [x, S] inside S).
QMatrix ad_on(const LieAlgebra& L, const Element& x, const Subspace& S);
/// Killing form of S as an algebra in its own right, in S's basis.
QMatrix killing_form(const LieAlgebra& L, const Subspace& S);
QMatrix killing_form(const LieAlgebra& L);
Signature killing_signature(const LieAlgebra& L, const Subspace& S);
Signature killing_signature(const LieAlgebra& L);
/// Signature of the Killing form of L restricted to S.
Signature ambient_killing_signature(const LieAlgebra& L, const Subspace& S);
/// Killing form value K_L(x, y) = tr(ad x ad y) in the full algebra.
Rational killing(const LieAlgebra& L, const Element& x, const Element& y);
bool is_negative_definite(const LieAlgebra& L, const Subspace& S);

/// Maximal solvable ideal of S (by Cartan's criterion, then checked).
Subspace radical(const LieAlgebra& L, const Subspace& S);
Subspace radical(const LieAlgebra& L);
LeviDecomposition levi_decomposition(const LieAlgebra& L, const Subspace& S);

JordanPair jordan_decomposition(const LieAlgebra& L, const Element& x);
ElementClass classify_element(const LieAlgebra& L, const Element& x);
bool is_ad_nilpotent(const LieAlgebra& L, const Element& x);
bool is_ad_semisimple(const LieAlgebra& L, const Element& x);
/// Every element of S acts nilpotently on L.
bool is_ad_nilpotent_subalgebra(const LieAlgebra& L, const Subspace& S);

/// Smallest subalgebra containing the vectors.
Subspace subalgebra_generated(const LieAlgebra& L, const std::vector<Element>& v);

}  // namespace lieembed
