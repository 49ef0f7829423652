#pragma once

#include <cstddef>
#include <map>
#include <memory>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "srdef/vertex_set.hpp"

namespace srdef {

/// What `SimplicialComplex::from_facets` did to its input.
struct NormalizationReport {
    std::vector<VertexSet> duplicates;      // entries that occurred more than once
    std::vector<VertexSet> non_maximal;     // entries contained in another entry
    bool void_from_empty_input = false;     // empty facet list became {∅}
};

/// A finite abstract simplicial complex on the vertex universe {0..n-1},
/// given by its facets. Vertices of the universe that lie in no facet are
/// allowed ("ghost" vertices) and are reported by `ghost_vertices()`.
///
/// Two degenerate complexes are distinguished: the void complex {∅} (one
/// face, the empty one) and the empty complex (no faces at all).
///
/// The complex is immutable. The face cache is filled on first use, once,
/// and is safe to read from several threads.
class SimplicialComplex {
public:
    /// The empty complex on zero vertices.
    SimplicialComplex();

    static SimplicialComplex from_facets(std::vector<VertexSet> facets, int n_vertices,
                                         NormalizationReport* report = nullptr);
    static SimplicialComplex void_complex(int n_vertices = 0);
    static SimplicialComplex empty_complex(int n_vertices = 0);
    /// The full simplex on `s`.
    static SimplicialComplex simplex(const VertexSet& s, int n_vertices);
    /// The complex of all proper subsets of `s` (∂s̄).
    static SimplicialComplex boundary_of(const VertexSet& s, int n_vertices);

    int n_vertices() const noexcept { return n_vertices_; }
    const std::vector<VertexSet>& facets() const noexcept { return facets_; }
    bool is_empty() const noexcept { return facets_.empty(); }
    bool is_void() const noexcept { return facets_.size() == 1 && facets_[0].empty(); }
    /// -1 for the void complex, -2 for the empty complex.
    int dimension() const noexcept { return dimension_; }
    bool is_pure() const;

    bool contains(const VertexSet& f) const;
    /// [K]: the union of the facets.
    VertexSet support() const noexcept { return support_; }
    std::vector<int> ghost_vertices() const;

    /// Faces of dimension `dim` (dim = -1 gives {∅} unless the complex is empty),
    /// in shortlex order.
    const std::vector<VertexSet>& faces(int dim) const;
    /// Every face including ∅, ordered by dimension then shortlex.
    std::vector<VertexSet> all_faces() const;
    std::size_t face_count() const;
    /// (f_0, ..., f_dim)
    std::vector<std::size_t> f_vector() const;

    /// Same vertex universe and same face set.
    bool operator==(const SimplicialComplex& o) const {
        return n_vertices_ == o.n_vertices_ && facets_ == o.facets_;
    }

    /// Facets re-labelled through `map` (old vertex -> new vertex).
    SimplicialComplex relabeled(const std::vector<int>& map, int n_vertices) const;

    std::string str() const;

private:
    struct Cache;
    void build_cache() const;

    int n_vertices_ = 0;
    int dimension_ = -2;
    VertexSet support_;
    std::vector<VertexSet> facets_;  // sorted shortlex, pairwise non-nested
    std::shared_ptr<Cache> cache_;
};

/// link(f, K) = {g ∈ K : g ∩ f = ∅, g ∪ f ∈ K}. Domain error if f ∉ K.
SimplicialComplex link(const SimplicialComplex& K, const VertexSet& f);
/// {g ∈ K : g ∪ f ∈ K} = f̄ ∗ link(f, K). Domain error if f ∉ K.
SimplicialComplex closed_star(const SimplicialComplex& K, const VertexSet& f);
/// {g ∈ K : f ⊆ g}; not a subcomplex.
std::vector<VertexSet> open_star(const SimplicialComplex& K, const VertexSet& f);

/// K ∗ L with L re-indexed above K's vertex universe.
SimplicialComplex join(const SimplicialComplex& K, const SimplicialComplex& L);
/// K ∗ L for complexes whose supports are already disjoint (same universe).
SimplicialComplex join_disjoint(const SimplicialComplex& K, const SimplicialComplex& L);
/// Δ₀ ∗ K with the apex at vertex 0 and K shifted up by one.
SimplicialComplex cone(const SimplicialComplex& K);
/// ∂Δ₁ ∗ K with apices 0 and n+1 and K shifted up by one, so ΣE₆ has its
/// hexagon on 1..6 and apices 0, 7.
SimplicialComplex suspension(const SimplicialComplex& K);

struct FaceCounts {
    std::vector<std::size_t> f;                    // f_i
    long long euler = 0;                           // Σ (-1)^i f_i
    std::map<VertexSet, int> valency;              // ν(f) for every nonempty face
    std::vector<std::map<int, std::size_t>> f_ik;  // f_i^{(k)}: [i][k] -> count
    std::size_t count(int i, int k) const;
};

FaceCounts f_vector_and_counts(const SimplicialComplex& K);
/// ν(f): number of vertices of link(f, K).
int valency(const SimplicialComplex& K, const VertexSet& f);

struct ManifoldCheck {
    bool manifold = false;
    int dimension = -1;
    std::string reason;  // first failing face when not a manifold
};

/// Closed combinatorial manifold test for dim K ≤ 3. Throws
/// ErrorCode::unsupported for dim ≥ 4.
ManifoldCheck is_closed_manifold(const SimplicialComplex& K);
/// Connected components of the 1-skeleton restricted to [K].
int connected_components(const SimplicialComplex& K);

/// Bistellar exchange: requires link(a, K) = ∂b ∗ L with b ∉ link(a, K).
/// Returns (K ∖ (∂b ∗ ā ∗ L)) ∪ (∂a ∗ b̄ ∗ L). |b| = 1 with a new vertex is
/// stellar subdivision of a.
SimplicialComplex flip(const SimplicialComplex& K, const VertexSet& a, const VertexSet& b);

/// A vertex bijection [K] -> [L] mapping facets onto facets, if one exists.
std::optional<std::vector<int>> find_isomorphism(const SimplicialComplex& K, const SimplicialComplex& L);
inline bool are_isomorphic(const SimplicialComplex& K, const SimplicialComplex& L) {
    return find_isomorphism(K, L).has_value();
}

}  // namespace srdef
