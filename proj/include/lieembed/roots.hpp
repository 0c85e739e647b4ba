#pragma once

#include "lieembed/structure.hpp"

#include <map>
#include <optional>
#include <string>
#include <vector>

namespace lieembed {

/// Values of a weight on an ordered torus basis.
using Root = KVec;

bool root_less(const Root& a, const Root& b);
std::string root_str(const Root& r);

struct RootSpace {
    Root root;
    KSubspace space;
};

struct RootSpaceDecomposition {
    /// Ordered torus basis; root values refer to this order.
    std::vector<Element> cartan;
    /// Nonzero weights, sorted by root_less.
    std::vector<RootSpace> roots;
    KSubspace zero_space;
    /// Subspace of L that was decomposed.
    Subspace ambient;

    std::optional<std::size_t> find(const Root& r) const;
    std::vector<Root> root_list() const;
};

/// Simultaneous eigenspaces of the ordered torus acting on `ambient`
/// (which must be stable under it). Throws NotATorus when the elements do
/// not commute or are not ad-semisimple.
RootSpaceDecomposition decompose(const LieAlgebra& L, const std::vector<Element>& torus, const Subspace& ambient);
RootSpaceDecomposition root_space_decomposition(const LieAlgebra& L, const std::vector<Element>& cartan);
/// Same as decompose, additionally requiring a real torus.
RootSpaceDecomposition restricted_roots(const LieAlgebra& L, const Subspace& ambient, const std::vector<Element>& A);

/// First nonzero component has Re > 0, or Re = 0 and Im > 0.
bool is_positive(const Root& r);
std::vector<Root> positive_roots(const RootSpaceDecomposition& d);
/// Positives that are not a sum of two positives, sorted by root_less.
std::vector<Root> simple_roots(const std::vector<Root>& positives);
/// Nonnegative integer coefficients of r in the simple roots, if any.
std::optional<std::vector<long>> simple_coordinates(const Root& r, const std::vector<Root>& simples);

struct Bond {
    std::size_t i = 0, j = 0;
    int multiplicity = 0;
    /// Arrow from the long root to the short one (equal to i, j when single).
    std::size_t from = 0, to = 0;
};

/// Bond between simple roots a (index ia) and b (index ib). Throws UnrecognizedBondPattern.
Bond bond(const Root& a, const Root& b, const std::vector<Root>& positives, std::size_t ia = 0, std::size_t ib = 1);

struct DynkinDiagram {
    std::string type;
    std::vector<Root> nodes;
    std::vector<Bond> bonds;
};

/// Throws UnrecognizedDiagram.
DynkinDiagram dynkin_type(const std::vector<Root>& simples, const std::vector<Root>& positives);

struct Sl2Triple {
    Element X, Y, H;
};

/// X in the root space (its first basis vector unless `x` is given), Y in L
/// with [X, Y] = H, [H, X] = 2X, [H, Y] = -2Y. Throws DegenerateRoot.
Sl2Triple sl2_triple(const LieAlgebra& L, const RootSpaceDecomposition& d, const Root& root,
                     const std::optional<Element>& x = std::nullopt);

/// root -> conjugate root; throws InvariantViolation when conjugation does not permute the roots.
std::vector<std::pair<Root, Root>> conjugation_pairing(const RootSpaceDecomposition& d);

struct TorusSplit {
    Subspace real_part;
    Subspace compact_part;
};
/// Throws NotATorus.
TorusSplit torus_split(const LieAlgebra& L, const Subspace& T);

/// Real and imaginary coordinate parts of a vector over Q(sqrt d), d < 0
/// (the imaginary part is the coefficient vector of sqrt(d)).
Element real_part(const KVec& v);
Element imag_part(const KVec& v);

}  // namespace lieembed
