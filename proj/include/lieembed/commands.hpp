#pragma once

#include "lieembed/embed.hpp"
#include "lieembed/io.hpp"

#include <exception>
#include <optional>
#include <string>

namespace lieembed::cmd {

using io::json;

/// A loaded algebra: a built-in catalog, a vector-field file or a
/// structure-constant file.
struct Input {
    std::string name;
    LieAlgebra algebra;
    std::optional<GeneratorCatalog> catalog;
};

/// `ref` is a catalog name or a JSON path (relative paths resolve against `base_dir`).
Input load_input(const std::string& ref, const std::string& base_dir = {});

json analyze(const Input& in);

struct EmbedArgs {
    /// torus | compact-torus | abelian-nilpotent | nilpotent | maximal-compact
    std::string mode;
    std::string subspace;
    /// maximal-compact only: split | cartan
    std::string route = "split";
    /// maximal-compact split route: subspace whose roots form the positive system
    std::string positive_on;
    SearchOptions search;
};
json embed(const Input& in, const EmbedArgs& args);

struct RootsArgs {
    std::string cartan;
    /// Empty for the whole algebra.
    std::string ambient;
    /// lex: first nonzero value complex-positive; all: every root on the ambient is positive.
    std::string positivity = "lex";
};
json roots(const Input& in, const RootsArgs& args);
json dynkin(const Input& in, const RootsArgs& args);

/// Structure constants of the catalog, or the bracket of two named fields.
json vf_brackets(const Input& in, const std::string& pair = {});
/// Invariant count of the span of the given combinations of catalog fields.
json vf_invariants(const Input& in, const std::string& fields);

struct VerifyResult {
    json report;
    bool ok = true;
};
/// Runs every case of a corpus ({"cases": [...]}) sorted by name.
VerifyResult verify(const json& corpus, const std::string& base_dir, const SearchOptions& search = {});

/// Runs one command by name with JSON arguments (the corpus case form).
json run(const std::string& command, const Input& in, const json& args, const SearchOptions& search = {});

/// Exception class name, e.g. "NotSplit", or "Error" for other failures.
std::string error_kind(const std::exception& e);
/// 2 parse, 3 invariant violation, 4 extension degree, 5 precondition.
int exit_code(const std::exception& e);

/// Plain-text rendering of a command result.
std::string render_text(const json& j);

}  // namespace lieembed::cmd
