#pragma once

#include <cstddef>
#include <map>
#include <vector>

#include "srdef/complex.hpp"
#include "srdef/cotangent.hpp"

namespace srdef {

/// I_K by its minimal generators x_p, p a minimal non-face.
struct MonomialIdealPresentation {
    std::vector<VertexSet> generators;  // shortlex
    int n_variables = 0;

    /// x^m ∈ I_K for an exponent vector m.
    bool contains(const std::vector<int>& m) const;
};

MonomialIdealPresentation minimal_nonfaces(const SimplicialComplex& K);

struct DerivationModuleReport {
    bool generated_by_euler = false;
    /// Generators x_a of 𝔞_v, one entry per vertex of [K].
    std::map<int, std::vector<VertexSet>> a_v;
    /// Non-maximal faces with fewer than two proper cofaces.
    std::vector<VertexSet> witnesses;
};

/// Whether T⁰ is generated by the x_v ∂/∂x_v: every non-maximal face lies
/// properly in at least two faces.
DerivationModuleReport derivation_module_check(const SimplicialComplex& K);

struct OracleCaps {
    int max_b = 4;
    int max_a = 4;
};

/// The linear algebra behind one graded piece.
struct OracleDetail {
    std::size_t dim = 0;
    std::size_t unknowns = 0;          // coefficients not forced to vanish in A
    std::size_t constraint_rank = 0;
    std::size_t image_rank = 0;        // derivations (T¹) or Hom(F, A) (T²)
};

/// T¹_c as Hom(I, A)_c modulo the image of Der(P)_c. Resource error beyond caps.
OracleDetail t1_oracle(const SimplicialComplex& K, const Multidegree& c, OracleCaps caps = {});
/// T²_c as Hom(R/R₀, A)_c modulo the image of Hom(F, A)_c, with R generated by
/// the Taylor pairs and R₀ the Koszul relations.
OracleDetail t2_oracle(const SimplicialComplex& K, const Multidegree& c, OracleCaps caps = {});

inline std::size_t t1_oracle_dim(const SimplicialComplex& K, const Multidegree& c, OracleCaps caps = {}) {
    return t1_oracle(K, c, caps).dim;
}
inline std::size_t t2_oracle_dim(const SimplicialComplex& K, const Multidegree& c, OracleCaps caps = {}) {
    return t2_oracle(K, c, caps).dim;
}

/// dim Hom_P(I_K, A_K)_0 summed over all multidegrees of total degree 0.
std::size_t embedded_first_order_dim(const SimplicialComplex& K);

}  // namespace srdef
