#include "srdef/io.hpp"

#include <algorithm>
#include <charconv>
#include <cstdlib>
#include <fstream>
#include <sstream>

#include "srdef/named.hpp"

namespace srdef {

int vertex_capacity() {
    const char* env = std::getenv("SRDEF_MAX_VERTICES");
    if (env == nullptr || *env == '\0') return kMaxVertices;
    int value = 0;
    const std::string_view s(env);
    auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), value);
    if (ec != std::errc{} || ptr != s.data() + s.size() || value < 1)
        fail(ErrorCode::usage, "SRDEF_MAX_VERTICES must be a positive integer");
    return std::min(value, kMaxVertices);
}

SimplicialComplex parse_facets(std::string_view text, NormalizationReport* report, std::string_view source_name) {
    const int cap = vertex_capacity();
    std::vector<VertexSet> facets;
    int max_vertex = -1;
    std::size_t line_no = 0;
    std::size_t pos = 0;
    while (pos <= text.size()) {
        std::size_t end = text.find('\n', pos);
        if (end == std::string_view::npos) end = text.size();
        std::string_view line = text.substr(pos, end - pos);
        pos = end + 1;
        ++line_no;
        if (auto hash = line.find('#'); hash != std::string_view::npos) line = line.substr(0, hash);

        auto where = [&] { return std::string(source_name) + ":" + std::to_string(line_no) + ": "; };
        VertexSet facet;
        bool any = false;
        std::size_t i = 0;
        while (i < line.size()) {
            const char ch = line[i];
            if (ch == ' ' || ch == '\t' || ch == ',' || ch == '\r') {
                ++i;
                continue;
            }
            int v = 0;
            auto [ptr, ec] = std::from_chars(line.data() + i, line.data() + line.size(), v);
            const auto used = static_cast<std::size_t>(ptr - (line.data() + i));
            if (ec == std::errc::result_out_of_range)
                fail(ErrorCode::capacity, where() + "vertex index out of range");
            if (ec != std::errc{} || used == 0 || v < 0)
                fail(ErrorCode::parse, where() + "expected a nonnegative integer near '" +
                                           std::string(line.substr(i, std::min<std::size_t>(12, line.size() - i))) + "'");
            if (v >= cap)
                fail(ErrorCode::capacity, where() + "vertex " + std::to_string(v) + " exceeds the capacity of " +
                                              std::to_string(cap) + " vertices");
            if (facet.contains(v)) fail(ErrorCode::parse, where() + "vertex " + std::to_string(v) + " repeated in a facet");
            facet.insert(v);
            max_vertex = std::max(max_vertex, v);
            any = true;
            i += used;
        }
        if (any) facets.push_back(facet);
        if (end == text.size()) break;
    }
    return SimplicialComplex::from_facets(std::move(facets), max_vertex + 1, report);
}

SimplicialComplex read_facet_file(const std::string& path, NormalizationReport* report) {
    std::ifstream in(path, std::ios::binary);
    if (!in) fail(ErrorCode::io, "cannot read '" + path + "'");
    std::ostringstream buf;
    buf << in.rdbuf();
    return parse_facets(buf.str(), report, path);
}

std::string write_facets(const SimplicialComplex& K) {
    std::string out;
    for (const auto& F : K.facets()) {
        bool first = true;
        F.for_each([&](int v) {
            if (!first) out += ' ';
            out += std::to_string(v);
            first = false;
        });
        out += '\n';
    }
    return out;
}

SimplicialComplex load_complex(const std::string& source, NormalizationReport* report) {
    if (std::ifstream(source).good()) return read_facet_file(source, report);
    SimplicialComplex K = named_complex(source);
    if (K.n_vertices() > vertex_capacity())
        fail(ErrorCode::capacity, source + " needs " + std::to_string(K.n_vertices()) + " vertices, above the capacity of " +
                                      std::to_string(vertex_capacity()));
    return K;
}

}  // namespace srdef
