#pragma once

#include <string>
#include <string_view>

#include "srdef/complex.hpp"

namespace srdef {

/// Effective vertex capacity: 128, or the smaller value in SRDEF_MAX_VERTICES.
int vertex_capacity();

/// Parses facet text: one facet per line, nonnegative integers separated by
/// spaces and/or commas, `#` starts a comment, blank lines are skipped.
/// The vertex universe is {0..max index}. Malformed lines raise
/// ErrorCode::parse with the line number in the message.
SimplicialComplex parse_facets(std::string_view text, NormalizationReport* report = nullptr,
                               std::string_view source_name = "<input>");
SimplicialComplex read_facet_file(const std::string& path, NormalizationReport* report = nullptr);
std::string write_facets(const SimplicialComplex& K);

/// A readable file path, or otherwise a `named_complex` identifier.
SimplicialComplex load_complex(const std::string& source, NormalizationReport* report = nullptr);

}  // namespace srdef
