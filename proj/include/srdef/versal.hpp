#pragma once

#include <array>
#include <map>
#include <memory>
#include <string>
#include <utility>
#include <vector>

#include "srdef/complex.hpp"
#include "srdef/polynomial.hpp"

namespace srdef {

/// One equation of a normal form and the Stanley-Reisner generator it lifts.
struct NormalFormEquation {
    std::vector<int> lifts;  // the y-indices of the monomial, e.g. {1, 3}
    Polynomial poly;
};

/// The deformation equations of the cone over E_n, n = 3..6, as polynomials
/// in y_1..y_n and the parameters t_i^(k), truncated at total parameter
/// degree `order`. Parameters with series index above `index_cap` are 0.
struct NormalForm {
    int n = 0;
    int order = 0;
    int index_cap = 0;
    std::shared_ptr<const PolyRing> ring;
    std::vector<NormalFormEquation> equations;
    std::vector<Polynomial> base_relations;  // minors of the obstruction matrix (n = 6)

    int equation_for(int a, int b) const;
};

/// Unsupported for n outside 3..6; usage error for order < 1 or index_cap < 1.
NormalForm normal_form(int n, int order, int index_cap = 4);

/// I_{Z_n} in the ring of `nf`: y_1y_2y_3 for n = 3, else y_iy_j with i, j not adjacent.
std::vector<Polynomial> stanley_reisner_generators(const NormalForm& nf);

struct RelationCheck {
    std::string name;
    bool passed = false;
    std::size_t residual_terms = 0;
    std::string residual;  // empty when passed
};

struct VerifyOptions {
    int index_cap = 4;
    /// Flip the sign of one coefficient in the first lifting.
    bool mutate = false;
};

struct NormalFormVerification {
    int n = 0;
    int order = 0;
    int index_cap = 0;
    std::vector<RelationCheck> relations;
    bool equivariant = true;         // n = 6: the equations are permuted by D₆
    std::size_t orbit_images = 0;    // n = 6: D₆ images of the two liftings, distinct up to sign
    std::size_t orbit_rank = 0;      // n = 6: rank of their parameter-free parts
    bool passed = false;
};

/// Checks that lifted relations among the equations vanish, modulo the base
/// relations for n = 6, up to the truncation order.
NormalFormVerification verify_normal_form_relations(int n, int order, VerifyOptions options = {});

/// Coordinates of a formal versal base for a surface with all valencies ≤ 6.
struct VersalVariables {
    std::vector<std::string> names;              // canonical, registry order
    std::map<std::string, std::string> aliases;  // every accepted name -> canonical
    std::size_t edges = 0, valency3 = 0, valency4 = 0;
};

/// Unsupported when K is not a closed surface or a vertex has valency > 6.
VersalVariables versal_variables(const SimplicialComplex& K);

struct HexagonMatrix {
    int vertex = 0;
    std::array<int, 6> cycle{};                       // i_1..i_6
    std::array<std::array<std::string, 3>, 2> entries;  // [[t_{i,i1}, t_{i,i3}, t_{i,i5}], [t_{i,i4}, t_{i,i6}, t_{i,i2}]]
};

enum class Exactness { regular_degree6, no_adjacent_hexagons, first_order_only };
std::string to_string(Exactness e);

struct VersalIdeal {
    VersalVariables variables;
    std::shared_ptr<const PolyRing> ring;
    std::vector<HexagonMatrix> matrices;
    std::vector<Polynomial> generators;  // 2×2 minors
    Exactness exactness = Exactness::first_order_only;
};

VersalIdeal versal_ideal(const SimplicialComplex& K);

/// Cyclic order of a cycle complex: smallest vertex first, then its smaller neighbour.
std::vector<int> canonical_cycle(const SimplicialComplex& cycle);

struct FirstOrderEntry {
    std::string local;   // e.g. "t_3^(1)", "t^(-1)"
    std::string global;  // canonical versal variable
};

/// Per vertex, the first-order normal form of its chart.
std::map<int, std::vector<FirstOrderEntry>> first_order_table(const SimplicialComplex& K);

struct KrullResult {
    std::size_t dimension = 0;
    std::string method;  // "disjoint-matrices" or "groebner"
    std::size_t basis_size = 0;
};

/// Resource error when the Gröbner computation exceeds its budget.
KrullResult krull_dimension(const VersalIdeal& V, bool force_groebner = false);

/// Independent of Gröbner bases. The minors are binomials x^a − x^b, so V
/// splits into strata by which coordinates vanish; a stratum is a torus coset
/// of dimension #nonzero − rank{a − b}, which is also the Jacobian corank
/// there. Returns the largest stratum dimension.
std::size_t krull_lower_bound(const VersalIdeal& V);

}  // namespace srdef
