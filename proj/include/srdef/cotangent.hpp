#pragma once

#include <cstddef>
#include <map>
#include <memory>
#include <mutex>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "srdef/complex.hpp"
#include "srdef/topology.hpp"

namespace srdef {

/// c = a − b: `a` holds exponents indexed by vertex (support a face), `b` is
/// squarefree. The supports must be disjoint.
struct Multidegree {
    std::vector<int> a;
    VertexSet b;

    static Multidegree from_sets(const VertexSet& a_support, const VertexSet& b);
    /// "0:2,3:1" and "1,4,7"; a bare vertex in the first list means exponent 1.
    static Multidegree parse(const std::string& a_spec, const std::string& b_spec);

    VertexSet a_support() const;
    int a_total() const;
    /// Σa_i − |b|
    int total_degree() const { return a_total() - b.size(); }
    /// The vector c, indexed by vertex, of length `n` (at least covering a and b).
    std::vector<int> vector(int n) const;
    std::string str() const;
};

/// U_b and Ũ_b of K as families of K's faces.
struct UFamilies {
    UpClosedFamily U;
    UpClosedFamily U_tilde;
};

/// Domain error for b = ∅.
UFamilies u_families(const SimplicialComplex& K, const VertexSet& b);

/// ∂b ⊆ K, i.e. every b ∖ {v} is a face (always true for |b| = 1).
bool boundary_in(const SimplicialComplex& K, const VertexSet& b);
/// L_b = ⋂ link(b′, K) over nonempty proper subsets b′ ⊂ b; requires ∂b ⊆ K.
/// For |b| = 1 this is K itself.
SimplicialComplex l_b(const SimplicialComplex& K, const VertexSet& b);
/// The b with ∂b ⊆ K and |b| ≥ min_size: nonempty faces and minimal non-faces.
std::vector<VertexSet> boundary_candidates(const SimplicialComplex& K, int min_size = 1);

/// B(K) for a closed manifold: b ⊆ [K], |b| ≥ 2, Ũ_b(K) = ∅. Shortlex order.
std::vector<VertexSet> b_set(const SimplicialComplex& K);

/// dim T^i_{a−b} from the pair-cohomology formula (general complexes).
/// Returns 0 when a ∉ K, b = ∅, a ∩ b ≠ ∅ or b ⊄ [link(a)].
std::size_t t_graded_dim(const SimplicialComplex& K, int i, const VertexSet& a, const VertexSet& b);

enum class Method { general_topological, manifold_fast_path, oracle };
std::string to_string(Method m);

struct GradedPieceReport {
    int i = 1;
    Multidegree degree;
    std::size_t dim = 0;
    Method method = Method::general_topological;
    std::optional<std::string> basis;
};

/// The basis rule φ(x_p) = x^a·x_{p∖b} if b ⊆ p, else 0, spelled out for `c`.
std::string basis_rule(const Multidegree& c);

/// Cotangent computations on a closed manifold with per-face link caching.
/// Safe to share between threads.
class ManifoldCotangent {
public:
    /// Domain error unless K is a closed manifold (dim ≤ 3).
    explicit ManifoldCotangent(SimplicialComplex K);

    const SimplicialComplex& complex() const noexcept { return K_; }
    int dimension() const noexcept { return K_.dimension(); }
    bool orientable() const noexcept { return orientable_; }

    /// 1 iff a ∈ K and b ∈ B(link(a, K)).
    std::size_t t1(const VertexSet& a, const VertexSet& b) const;
    std::size_t t2(const VertexSet& a, const VertexSet& b) const;
    GradedPieceReport t1_report(const Multidegree& c) const;
    GradedPieceReport t2_report(const Multidegree& c) const;
    /// The complement computation H̃⁰(|L| ∖ |∂b ∗ L_b|) for b ∉ L, without
    /// the sphere shortcut; exposed for the duality cross-check.
    std::size_t t2_complement(const VertexSet& a, const VertexSet& b) const;

    std::shared_ptr<const SimplicialComplex> link_of(const VertexSet& a) const;

private:
    struct LinkData;
    const LinkData& data(const VertexSet& a) const;

    SimplicialComplex K_;
    bool orientable_ = false;
    bool rational_sphere_ = false;
    mutable std::mutex mutex_;
    mutable std::map<VertexSet, std::shared_ptr<LinkData>> cache_;
};

/// T¹/T² of a manifold link context, specialized to a = ∅. `oriented` and
/// `sphere` describe L. Used by ManifoldCotangent.
std::size_t t1_empty(const SimplicialComplex& L, const VertexSet& b);
std::size_t t2_empty(const SimplicialComplex& L, const VertexSet& b, bool oriented, bool sphere);

/// Per-face fast-path wrappers matching the operation names of the library.
std::size_t t1_manifold_dim(const SimplicialComplex& K, const VertexSet& a, const VertexSet& b);
std::size_t t2_manifold_dim(const SimplicialComplex& K, const VertexSet& a, const VertexSet& b);

struct Contribution {
    VertexSet a;
    VertexSet b;
    std::size_t piece_dim = 0;
    unsigned long long multiplicity = 0;  // C(|b|−1, |a|−1)
};

struct DegreeZeroSummary {
    std::vector<Contribution> t1;
    std::vector<Contribution> t2;
    unsigned long long t1_total = 0;
    unsigned long long t2_total = 0;
    std::map<int, unsigned long long> t1_by_face_dim;
    std::map<int, unsigned long long> t2_by_face_dim;
    FaceCounts counts;
};

/// dim T^i_{A,0} summed over nonempty faces a and contributing b, weighted by
/// the number of exponent vectors on a of total |b|. `workers` ≤ 0 means
/// one per hardware thread; the result does not depend on it.
DegreeZeroSummary degree_zero_totals(const SimplicialComplex& K, int workers = 0, bool with_t2 = true);

struct SurfaceFormulas {
    unsigned long long t1_projective = 0;      // 4f₀⁽³⁾ + 2f₀⁽⁴⁾ + f₁ + h²
    long long t1_projective_alt = 0;           // f₀ + 9χ + h² + Σ 2(k−5)f₀⁽ᵏ⁾
    unsigned long long t2_degree0 = 0;         // Σ_{k≥6} k(k−5)/2 · f₀⁽ᵏ⁾
    std::size_t h2 = 0;                        // dim H²(K)
    std::size_t h2_theta = 0;                  // h²(Θ) = dim H³(K) = 0
};

/// Domain error unless K is a closed 2-manifold.
SurfaceFormulas surface_formulas(const SimplicialComplex& K);

enum class LinkType { boundary_tetrahedron, suspension_e3, suspension_e4, suspension_en, cyclic_n3, other };
std::string to_string(LinkType t);
/// Classifies a 2-sphere up to isomorphism against ∂Δ₃, ΣE_n, ∂C(n,3).
LinkType classify_link(const SimplicialComplex& L);

struct ThreefoldFormula {
    std::size_t d3 = 0, e3 = 0, e4 = 0, e5plus = 0, c6plus = 0;
    std::size_t f1_3 = 0, f1_4 = 0;
    std::size_t h2 = 0;
    std::vector<int> unclassified_vertices;
    unsigned long long t1_degree0 = 0;  // everything except h²
    unsigned long long value = 0;       // dim T¹_P
};

/// Domain error unless K is a closed 3-manifold.
ThreefoldFormula threefold_formula(const SimplicialComplex& K);

struct ThetaDims {
    std::size_t h0_theta = 0;                 // n + dim H¹(K), n + 1 = |[K]|
    std::vector<std::size_t> hp_theta;        // h^p(Θ) = dim H^{p+1}(K), p = 1..dim K
    unsigned long long t1_a0 = 0;             // dim T¹_{A,0}
    unsigned long long t1_projective = 0;     // dim H²(K) + dim T¹_{A,0}
    unsigned long long t2_a0 = 0;             // dim T²_{A,0}, injects into H⁰(T²-sheaf)
    std::size_t t2_projective_lower = 0;      // h²(Θ) = dim H³(K) ≤ dim T²_P
};

ThetaDims theta_and_projective_dims(const SimplicialComplex& K, int workers = 0);

struct RigidityReport {
    bool rigid = false;
    std::size_t h2 = 0;
    std::vector<std::pair<VertexSet, int>> low_valency_edges;  // ν(e) < 5
};

/// Domain error unless K is a closed 3-manifold.
RigidityReport is_rigid(const SimplicialComplex& K);

}  // namespace srdef
