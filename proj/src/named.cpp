#include "srdef/named.hpp"

#include <charconv>

namespace srdef {

namespace {

int parse_param(std::string_view name, std::string_view text) {
    int value = 0;
    const auto* end = text.data() + text.size();
    auto [ptr, ec] = std::from_chars(text.data(), end, value);
    if (text.empty() || ec != std::errc{} || ptr != end)
        fail(ErrorCode::usage, "bad parameter '" + std::string(text) + "' for " + std::string(name));
    return value;
}

void require(bool ok, std::string_view id, const std::string& why) {
    if (!ok) fail(ErrorCode::usage, std::string(id) + ": " + why);
}

SimplicialComplex cycle(int n) {
    std::vector<VertexSet> facets;
    for (int i = 0; i < n; ++i) facets.push_back({i, (i + 1) % n});
    return SimplicialComplex::from_facets(std::move(facets), n);
}

SimplicialComplex chain(int n) {
    std::vector<VertexSet> facets;
    for (int i = 0; i < n; ++i) facets.push_back({i, i + 1});
    return SimplicialComplex::from_facets(std::move(facets), n + 1);
}

SimplicialComplex cyclic3(int n) {
    std::vector<VertexSet> facets;
    for (int i = 1; i + 1 <= n - 2; ++i) {
        facets.push_back({0, i, i + 1});
        facets.push_back({n - 1, i, i + 1});
    }
    facets.push_back({1, 0, n - 1});
    facets.push_back({n - 2, 0, n - 1});
    return SimplicialComplex::from_facets(std::move(facets), n);
}

SimplicialComplex cyclic4_8() {
    std::vector<VertexSet> facets;
    auto m = [](int v) { return v % 8; };
    for (int i = 0; i < 8; ++i) {
        facets.push_back({i, m(i + 1), m(i + 2), m(i + 3)});
        facets.push_back({i, m(i + 1), m(i + 3), m(i + 4)});
    }
    for (int i = 0; i < 4; ++i) facets.push_back({i, i + 1, i + 4, m(i + 5)});
    return SimplicialComplex::from_facets(std::move(facets), 8);
}

SimplicialComplex torus(int n) {
    std::vector<VertexSet> facets;
    for (int i = 0; i < n; ++i) {
        facets.push_back({i, (i + 2) % n, (i + 3) % n});
        facets.push_back({i, (i + 1) % n, (i + 3) % n});
    }
    return SimplicialComplex::from_facets(std::move(facets), n);
}

SimplicialComplex icosahedron() {
    std::vector<VertexSet> facets;
    for (int k = 0; k < 5; ++k) {
        const int u = 1 + k, u1 = 1 + (k + 1) % 5, l = 6 + k, l1 = 6 + (k + 1) % 5;
        facets.push_back({0, u, u1});
        facets.push_back({11, l, l1});
        facets.push_back({u, u1, l});
        facets.push_back({l, l1, u1});
    }
    return SimplicialComplex::from_facets(std::move(facets), 12);
}

}  // namespace

SimplicialComplex named_complex(std::string_view id) {
    const auto colon = id.find(':');
    const std::string_view head = id.substr(0, colon);
    const std::string_view rest = colon == std::string_view::npos ? std::string_view{} : id.substr(colon + 1);
    const bool has_param = colon != std::string_view::npos;

    if (head == "suspension") {
        require(has_param, id, "expected suspension:<name>");
        return suspension(named_complex(rest));
    }
    if (head == "octahedron" && !has_param) return suspension(cycle(4));
    if (head == "icosahedron" && !has_param) return icosahedron();

    require(has_param, id, "unknown complex name");
    const int n = parse_param(head, rest);
    if (head == "simplex") {
        require(n >= 0 && n < kMaxVertices, id, "need 0 <= n < 128");
        return SimplicialComplex::simplex(VertexSet::first(n + 1), n + 1);
    }
    if (head == "boundary-simplex") {
        require(n >= 1 && n < kMaxVertices, id, "need 1 <= n < 128");
        return SimplicialComplex::boundary_of(VertexSet::first(n + 1), n + 1);
    }
    if (head == "cycle") {
        require(n >= 3 && n <= kMaxVertices, id, "need 3 <= n <= 128");
        return cycle(n);
    }
    if (head == "chain") {
        require(n >= 1 && n < kMaxVertices, id, "need 1 <= n < 128");
        return chain(n);
    }
    if (head == "cyclic3") {
        require(n >= 5 && n <= kMaxVertices, id, "need 5 <= n <= 128");
        return cyclic3(n);
    }
    if (head == "cyclic4") {
        require(n == 8, id, "only cyclic4:8 is available");
        return cyclic4_8();
    }
    if (head == "torus") {
        require(n >= 7 && n <= kMaxVertices, id, "need 7 <= n <= 128");
        return torus(n);
    }
    fail(ErrorCode::usage, "unknown complex name '" + std::string(id) + "'");
}

std::vector<std::string> named_examples() {
    return {"simplex:3",  "boundary-simplex:3", "cycle:6",   "chain:4",     "cyclic3:7",
            "cyclic4:8",  "torus:7",            "octahedron", "icosahedron", "suspension:cycle:6"};
}

}  // namespace srdef
