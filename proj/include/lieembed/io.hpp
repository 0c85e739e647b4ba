#pragma once

#include "lieembed/embed.hpp"
#include "lieembed/lie_algebra.hpp"
#include "lieembed/roots.hpp"
#include "lieembed/subspace.hpp"
#include "lieembed/vecfield.hpp"

#include <json.hpp>

#include <string>

namespace lieembed::io {

using json = nlohmann::ordered_json;

json to_json(const Rational& r);
json to_json(const Scalar& s);
json to_json(const QVec& v);
json to_json(const KVec& v);
json to_json(const Subspace& s);
json to_json(const KSubspace& s);
json to_json(const LieAlgebra& L);
json to_json(const GeneratorCatalog& c);
json to_json(const Signature& s);
/// {"cartan": [...], "roots": [{"root": [...], "dim": k, "space": [...]}], "zero_space": [...]}
json to_json(const RootSpaceDecomposition& d);
json to_json(const DynkinDiagram& d);
json to_json(const CartanData& c);
/// Steps carry coordinates and, via L, readable element text.
json to_json(const EmbeddingTrace& t, const LieAlgebra& L);
json to_json(const Sl2Triple& t);
/// Readable list of basis elements, e.g. ["e8", "e4-e15"].
json text(const LieAlgebra& L, const Subspace& s);

EmbeddingTrace trace_from_json(const json& j, std::size_t ambient);

Rational rational_from_json(const json& j);
Scalar scalar_from_json(const json& j);
QVec qvec_from_json(const json& j);
KVec kvec_from_json(const json& j);
Subspace subspace_from_json(const json& j, std::size_t ambient);
/// Validates Jacobi unless `validate` is false. Throws ParseError on malformed input.
LieAlgebra algebra_from_json(const json& j, bool validate = true);
GeneratorCatalog catalog_from_json(const json& j);

json read_json_file(const std::string& path);
std::string dump(const json& j);

}  // namespace lieembed::io
