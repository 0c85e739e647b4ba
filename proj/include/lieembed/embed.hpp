#pragma once

#include "lieembed/roots.hpp"
#include "lieembed/structure.hpp"

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

namespace lieembed {

struct SearchOptions {
    std::size_t budget = 10000;
    std::uint64_t seed = 0;
};

struct TraceStep {
    std::string label;
    std::vector<Element> adjoined;
    /// Subspace after this step.
    Subspace result;
};

struct EmbeddingTrace {
    std::string algorithm;
    Subspace input;
    std::vector<TraceStep> steps;
    Subspace result;
};

/// Re-applies the adjoined elements from the input and checks every
/// intermediate subspace and the result.
bool replay(const LieAlgebra& L, const EmbeddingTrace& trace);

struct CartanData {
    Subspace cartan;
    Subspace real_part;
    Subspace compact_part;
};

/// Element of S whose adjoint action on L is semisimple with rational,
/// not all zero, eigenvalues. Order: basis of S, then integer combinations
/// with coefficients in {-2..2}, then seeded random rational combinations.
Element find_real_semisimple(const LieAlgebra& L, const Subspace& S, const SearchOptions& opt = {});
/// Same search for a nonzero compact (purely imaginary spectrum) element
/// whose eigenvalues lie in Q(sqrt(field)) (any single field when 0).
Element find_compact(const LieAlgebra& L, const Subspace& S, const SearchOptions& opt = {}, std::int64_t field = 0);

struct RealTorusResult {
    Subspace max_real_torus;
    CartanData cartan;
    EmbeddingTrace trace;
};
RealTorusResult embed_real_torus(const LieAlgebra& L, const Subspace& A, const SearchOptions& opt = {});

struct CompactTorusResult {
    CartanData cartan;
    EmbeddingTrace trace;
};
CompactTorusResult embed_compact_torus(const LieAlgebra& L, const Subspace& T, const SearchOptions& opt = {});

struct AbelianNilpotentResult {
    Subspace max_abelian_nilpotent;
    EmbeddingTrace trace;
};
AbelianNilpotentResult embed_abelian_nilpotent(const LieAlgebra& L, const Subspace& U, const SearchOptions& opt = {});

struct NilpotentResult {
    Subspace max_nilpotent;
    /// Torus complementing U in the radical of N(U).
    Subspace torus;
    Subspace torus_A;
    CartanData split_cartan;
    EmbeddingTrace trace;
    EmbeddingTrace torus_trace;
};
NilpotentResult embed_nilpotent(const LieAlgebra& L, const Subspace& U, const SearchOptions& opt = {});

/// Torus T with T + U = R for a solvable R containing U as an ideal with
/// R/U consisting of semisimple classes.
Subspace torus_complement(const LieAlgebra& L, const Subspace& R, const Subspace& U);

/// Circle X - Y/|m| of an sl2 triple, m the first nonzero coordinate of Y.
Element circle_element(const Sl2Triple& t);

/// Subalgebra generated by the circles of the simple roots. `positives`
/// defaults to the lexicographic positive system. Throws NotSplit when the
/// Cartan has a compact part.
Subspace maximal_compact_split(const LieAlgebra& L, const CartanData& split_cartan,
                               const std::optional<std::vector<Root>>& positives = std::nullopt);
/// Generators used by maximal_compact_split, in simple-root order.
std::vector<Element> split_circles(const LieAlgebra& L, const CartanData& split_cartan,
                                   const std::optional<std::vector<Root>>& positives = std::nullopt);

/// Compact Cartan plus the real/imaginary planes of the root vectors on
/// which the Killing form is negative definite.
Subspace maximal_compact_from_cartan(const LieAlgebra& L, const CartanData& compact_cartan);

/// Planes span(Re v, Im v) for root vectors v of positive roots whose
/// Killing restriction is negative definite, each closed to a subalgebra.
std::vector<Subspace> compact_root_algebras(const LieAlgebra& L, const RootSpaceDecomposition& d);

}  // namespace lieembed
