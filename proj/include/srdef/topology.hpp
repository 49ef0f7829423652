#pragma once

#include <cstddef>
#include <memory>
#include <string>
#include <vector>

#include <gmpxx.h>

#include "srdef/complex.hpp"
#include "srdef/linalg.hpp"

namespace srdef {

/// Dimensions indexed by degree, starting at `first_degree` (-1 for reduced
/// homology and for pair cohomology that may live in degree -1).
struct GradedDims {
    int first_degree = 0;
    std::vector<std::size_t> dims;

    std::size_t at(int degree) const {
        const int i = degree - first_degree;
        return i < 0 || i >= static_cast<int>(dims.size()) ? 0 : dims[static_cast<std::size_t>(i)];
    }
    long long euler() const;
    bool operator==(const GradedDims& o) const = default;
};

/// A chain complex whose cells are strictly increasing integer tuples, with
/// the simplicial boundary (drop one entry, sign (-1)^position). Boundary
/// terms that are not cells are treated as zero, so passing the cells of
/// K ∖ L gives the relative complex C(K, L) whenever L is a subcomplex.
/// The empty tuple, when present, is the augmentation cell in degree -1.
class ChainComplex {
public:
    explicit ChainComplex(std::vector<std::vector<int>> cells);

    int min_degree() const noexcept { return min_degree_; }
    int max_degree() const noexcept { return max_degree_; }
    std::size_t cell_count(int degree) const;
    /// Columns of ∂_d : C_d -> C_{d-1}, one sparse column per d-cell.
    const std::vector<SparseVector>& boundary(int degree) const;
    std::size_t boundary_rank(int degree) const;
    /// Homology dimensions over ℚ from min_degree to max_degree.
    GradedDims homology() const;
    /// ∂_{d-1} ∘ ∂_d == 0 for every d. Checked on construction as well.
    bool boundary_squares_to_zero() const;

private:
    std::vector<std::vector<std::vector<int>>> cells_;  // [d - min_degree]
    std::vector<std::vector<SparseVector>> boundary_;   // [d - min_degree]
    int min_degree_ = 0;
    int max_degree_ = -1;
};

/// Rational homology of K: reduced starts at degree -1 (H̃_{-1}({∅}) = 1),
/// unreduced at degree 0. Over a field this also gives cohomology.
GradedDims homology_dims(const SimplicialComplex& K, bool reduced);
inline GradedDims cohomology_dims(const SimplicialComplex& K, bool reduced) { return homology_dims(K, reduced); }
ChainComplex simplicial_chain_complex(const SimplicialComplex& K, bool reduced);

/// A set of faces of `ambient` closed under passing to larger faces.
class UpClosedFamily {
public:
    /// Validates up-closure; throws ErrorCode::domain otherwise.
    UpClosedFamily(std::shared_ptr<const SimplicialComplex> ambient, std::vector<VertexSet> members);
    /// The faces g ⊇ f for some f in `generators`.
    static UpClosedFamily generated_by(std::shared_ptr<const SimplicialComplex> ambient,
                                       const std::vector<VertexSet>& generators);

    const SimplicialComplex& ambient() const noexcept { return *ambient_; }
    const std::shared_ptr<const SimplicialComplex>& ambient_ptr() const noexcept { return ambient_; }
    /// Sorted shortlex, so the empty face (if present) comes first.
    const std::vector<VertexSet>& members() const noexcept { return members_; }
    bool contains_empty() const noexcept { return !members_.empty() && members_.front().empty(); }
    bool contains(const VertexSet& f) const;
    bool empty() const noexcept { return members_.empty(); }
    std::size_t size() const noexcept { return members_.size(); }
    bool is_subfamily_of(const UpClosedFamily& o) const;

private:
    std::shared_ptr<const SimplicialComplex> ambient_;
    std::vector<VertexSet> members_;
};

/// Chains m_0 ⊊ m_1 ⊊ ... of members, as tuples of member indices.
std::vector<std::vector<int>> member_chains(const UpClosedFamily& Y);

/// The nerve of the inclusion poset of Y's members; vertex i is members()[i]
/// (so ∅, when present, is a cone point). Capacity error past 128 members.
SimplicialComplex order_complex(const UpClosedFamily& Y);

/// dim H^i(⟨U⟩, ⟨V⟩) over ℚ for i from -1. With V empty and `reduced` this is
/// the reduced cohomology of ⟨U⟩. Domain error unless V ⊆ U in one ambient.
GradedDims pair_cohomology_dims(const UpClosedFamily& U, const UpClosedFamily& V, bool reduced);

/// Closed manifold whose connected components all have top rational homology
/// of rank one. Domain error for non-manifolds.
bool is_orientable(const SimplicialComplex& K);

/// dim H^i_m(A_K)_c = dim H̃^{i-|b|-1}(link(b)) for c ≤ 0 with support b ∈ K,
/// and 0 otherwise. `c` is indexed by vertex.
std::size_t local_cohomology_dim(const SimplicialComplex& K, int i, const std::vector<int>& c);

/// H^p(P(K), O(m)) for m ≥ 0: the rational cohomology of K when m = 0, and
/// (dim (A_K)_m, 0, 0, ...) when m ≥ 1. Unsupported for m < 0.
std::vector<mpz_class> twisted_structure_sheaf_cohomology(const SimplicialComplex& K, int m);

}  // namespace srdef
