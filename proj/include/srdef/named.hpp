#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "srdef/complex.hpp"

namespace srdef {

/// Builds a complex from an identifier:
///
///   simplex:n            Δ_n on {0..n}
///   boundary-simplex:n   ∂Δ_n on {0..n}
///   cycle:n              E_n, the n-gon on {0..n-1}, n >= 3
///   chain:n              C_n, the path 0-1-...-n with n edges, n >= 1
///   cyclic3:n            ∂C(n,3) = ∂Δ_1 * C_{n-3} ∪ ∂C_{n-3} * Δ_1, Δ_1 = {0,n-1}, n >= 5
///   cyclic4:8            ∂C(8,4)
///   torus:n              T_{n,1,2}, facets {i,i+2,i+3}, {i,i+1,i+3} mod n, n >= 7
///   octahedron           suspension of cycle:4 (apices 0 and 5)
///   icosahedron          0 on top, rings 1..5 and 6..10, 11 at the bottom
///   suspension:<id>      apices 0 and m+1 around the shifted complex
///
/// Throws ErrorCode::usage on unknown names or parameters out of range.
SimplicialComplex named_complex(std::string_view id);

/// Identifiers understood by `named_complex`, with example parameters.
std::vector<std::string> named_examples();

}  // namespace srdef
