#pragma once

#include "lieembed/structure.hpp"
#include "lieembed/vecfield.hpp"

#include <map>
#include <string>

namespace testutil {

inline const lieembed::LieAlgebra& algebra(const std::string& name) {
    static std::map<std::string, lieembed::LieAlgebra> cache;
    auto it = cache.find(name);
    if (it == cache.end()) it = cache.emplace(name, lieembed::structure_constants(lieembed::catalog(name))).first;
    return it->second;
}

inline lieembed::Subspace sub(const lieembed::LieAlgebra& L, const std::string& spec) {
    return lieembed::span(L, L.parse_elements(spec));
}

inline lieembed::Element el(const lieembed::LieAlgebra& L, const std::string& spec) { return L.parse_element(spec); }

}  // namespace testutil
