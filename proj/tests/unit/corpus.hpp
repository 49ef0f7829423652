#pragma once

#include <string>
#include <utility>
#include <vector>

#include "srdef/io.hpp"
#include "srdef/named.hpp"

namespace corpus {

inline std::string fixture(const std::string& name) { return std::string(SRDEF_FIXTURES) + "/" + name; }

inline srdef::SimplicialComplex rp2() { return srdef::read_facet_file(fixture("rp2_6.txt")); }

inline const std::vector<std::string>& named_ids() {
    static const std::vector<std::string> ids = {
        "simplex:2",       "simplex:3",          "boundary-simplex:1", "boundary-simplex:2",
        "boundary-simplex:3", "boundary-simplex:4", "cycle:3",          "cycle:4",
        "cycle:5",         "cycle:6",            "chain:2",            "chain:3",
        "cyclic3:5",       "cyclic3:6",          "cyclic3:7",          "cyclic4:8",
        "torus:7",         "torus:8",            "octahedron",         "icosahedron",
        "suspension:cycle:3", "suspension:cycle:5", "suspension:cycle:6",
    };
    return ids;
}

/// Named complexes plus the file fixtures, with a display name each.
inline std::vector<std::pair<std::string, srdef::SimplicialComplex>> all() {
    std::vector<std::pair<std::string, srdef::SimplicialComplex>> out;
    for (const auto& id : named_ids()) out.emplace_back(id, srdef::named_complex(id));
    out.emplace_back("rp2_6", rp2());
    out.emplace_back("mixed", srdef::parse_facets("0 1 2\n2 3\n3 4\n5\n"));
    return out;
}

/// Closed manifolds in the corpus.
inline std::vector<std::pair<std::string, srdef::SimplicialComplex>> manifolds() {
    std::vector<std::pair<std::string, srdef::SimplicialComplex>> out;
    for (auto& [name, K] : all())
        if (K.dimension() <= 3 && srdef::is_closed_manifold(K).manifold) out.emplace_back(name, K);
    return out;
}

}  // namespace corpus
