#include "srdef/topology.hpp"

#include <algorithm>
#include <map>

namespace srdef {

long long GradedDims::euler() const {
    long long e = 0;
    for (std::size_t i = 0; i < dims.size(); ++i) {
        const int deg = first_degree + static_cast<int>(i);
        e += (deg % 2 == 0 ? 1 : -1) * static_cast<long long>(dims[i]);
    }
    return e;
}

ChainComplex::ChainComplex(std::vector<std::vector<int>> cells) {
    if (cells.empty()) return;
    min_degree_ = 1 << 30;
    max_degree_ = -2;
    for (const auto& c : cells) {
        const int d = static_cast<int>(c.size()) - 1;
        min_degree_ = std::min(min_degree_, d);
        max_degree_ = std::max(max_degree_, d);
    }
    cells_.assign(static_cast<std::size_t>(max_degree_ - min_degree_ + 1), {});
    for (auto& c : cells) cells_[c.size() - 1 - static_cast<std::size_t>(min_degree_)].push_back(std::move(c));
    for (auto& level : cells_) {
        std::sort(level.begin(), level.end());
        level.erase(std::unique(level.begin(), level.end()), level.end());
    }
    boundary_.assign(cells_.size(), {});
    for (int d = min_degree_ + 1; d <= max_degree_; ++d) {
        const auto& lower = cells_[static_cast<std::size_t>(d - 1 - min_degree_)];
        auto& cols = boundary_[static_cast<std::size_t>(d - min_degree_)];
        for (const auto& c : cells_[static_cast<std::size_t>(d - min_degree_)]) {
            std::vector<std::pair<int, mpz_class>> entries;
            std::vector<int> face(c.size() - 1);
            for (std::size_t drop = 0; drop < c.size(); ++drop) {
                std::copy(c.begin(), c.begin() + static_cast<std::ptrdiff_t>(drop), face.begin());
                std::copy(c.begin() + static_cast<std::ptrdiff_t>(drop) + 1, c.end(),
                          face.begin() + static_cast<std::ptrdiff_t>(drop));
                auto it = std::lower_bound(lower.begin(), lower.end(), face);
                if (it != lower.end() && *it == face)
                    entries.emplace_back(static_cast<int>(it - lower.begin()), drop % 2 == 0 ? 1 : -1);
            }
            cols.push_back(make_sparse(std::move(entries)));
        }
    }
    if (!boundary_squares_to_zero()) fail(ErrorCode::domain, "chain complex: boundary does not square to zero");
}

std::size_t ChainComplex::cell_count(int degree) const {
    if (degree < min_degree_ || degree > max_degree_) return 0;
    return cells_[static_cast<std::size_t>(degree - min_degree_)].size();
}

const std::vector<SparseVector>& ChainComplex::boundary(int degree) const {
    static const std::vector<SparseVector> none;
    if (degree <= min_degree_ || degree > max_degree_) return none;
    return boundary_[static_cast<std::size_t>(degree - min_degree_)];
}

std::size_t ChainComplex::boundary_rank(int degree) const { return rank_of(boundary(degree)); }

GradedDims ChainComplex::homology() const {
    GradedDims out;
    out.first_degree = min_degree_;
    if (max_degree_ < min_degree_) return out;
    std::vector<std::size_t> ranks(static_cast<std::size_t>(max_degree_ - min_degree_ + 2), 0);
    for (int d = min_degree_ + 1; d <= max_degree_; ++d)
        ranks[static_cast<std::size_t>(d - min_degree_)] = boundary_rank(d);
    for (int d = min_degree_; d <= max_degree_; ++d) {
        const auto i = static_cast<std::size_t>(d - min_degree_);
        out.dims.push_back(cell_count(d) - ranks[i] - ranks[i + 1]);
    }
    return out;
}

bool ChainComplex::boundary_squares_to_zero() const {
    for (int d = min_degree_ + 2; d <= max_degree_; ++d) {
        const auto& outer = boundary(d - 1);
        for (const auto& col : boundary(d)) {
            std::map<int, mpz_class> acc;
            for (const auto& [i, v] : col)
                for (const auto& [j, w] : outer[static_cast<std::size_t>(i)]) acc[j] += v * w;
            for (const auto& [j, v] : acc)
                if (v != 0) return false;
        }
    }
    return true;
}

namespace {

std::vector<int> as_tuple(const VertexSet& f) { return f.to_vector(); }

}  // namespace

ChainComplex simplicial_chain_complex(const SimplicialComplex& K, bool reduced) {
    std::vector<std::vector<int>> cells;
    for (const auto& f : K.all_faces())
        if (reduced || !f.empty()) cells.push_back(as_tuple(f));
    return ChainComplex(std::move(cells));
}

GradedDims homology_dims(const SimplicialComplex& K, bool reduced) {
    GradedDims h = simplicial_chain_complex(K, reduced).homology();
    const int first = reduced ? -1 : 0;
    if (h.dims.empty()) {
        h.first_degree = first;
        return h;
    }
    // Pad so that the vector always starts at `first` and runs to dim K.
    while (h.first_degree > first) {
        h.dims.insert(h.dims.begin(), 0);
        --h.first_degree;
    }
    return h;
}

UpClosedFamily::UpClosedFamily(std::shared_ptr<const SimplicialComplex> ambient, std::vector<VertexSet> members)
    : ambient_(std::move(ambient)), members_(std::move(members)) {
    std::sort(members_.begin(), members_.end());
    members_.erase(std::unique(members_.begin(), members_.end()), members_.end());
    for (const auto& f : members_) {
        if (!ambient_->contains(f)) fail(ErrorCode::domain, "family member " + f.str() + " is not a face");
        // Up-closure only needs checking one vertex at a time.
        for (const auto& F : ambient_->facets()) {
            if (!f.is_subset_of(F)) continue;
            bool ok = true;
            (F - f).for_each([&](int v) {
                if (ok && !contains(f.with(v))) ok = false;
            });
            if (!ok) fail(ErrorCode::domain, "family is not closed upwards at " + f.str());
        }
    }
}

UpClosedFamily UpClosedFamily::generated_by(std::shared_ptr<const SimplicialComplex> ambient,
                                            const std::vector<VertexSet>& generators) {
    std::vector<VertexSet> members;
    for (const auto& g : ambient->all_faces())
        for (const auto& f : generators)
            if (f.is_subset_of(g)) {
                members.push_back(g);
                break;
            }
    return UpClosedFamily(std::move(ambient), std::move(members));
}

bool UpClosedFamily::contains(const VertexSet& f) const { return std::binary_search(members_.begin(), members_.end(), f); }

bool UpClosedFamily::is_subfamily_of(const UpClosedFamily& o) const {
    return std::all_of(members_.begin(), members_.end(), [&](const VertexSet& f) { return o.contains(f); });
}

std::vector<std::vector<int>> member_chains(const UpClosedFamily& Y) {
    const auto& m = Y.members();
    const int n = static_cast<int>(m.size());
    std::vector<std::vector<int>> up(static_cast<std::size_t>(n));
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j)
            if (m[static_cast<std::size_t>(j)].size() > m[static_cast<std::size_t>(i)].size() &&
                m[static_cast<std::size_t>(i)].is_subset_of(m[static_cast<std::size_t>(j)]))
                up[static_cast<std::size_t>(i)].push_back(j);
    std::vector<std::vector<int>> chains;
    std::vector<int> current;
    auto extend = [&](auto&& self, int top) -> void {
        chains.push_back(current);
        for (int j : up[static_cast<std::size_t>(top)]) {
            current.push_back(j);
            self(self, j);
            current.pop_back();
        }
    };
    for (int i = 0; i < n; ++i) {
        current = {i};
        extend(extend, i);
    }
    return chains;
}

SimplicialComplex order_complex(const UpClosedFamily& Y) {
    const int n = static_cast<int>(Y.size());
    if (n > kMaxVertices)
        fail(ErrorCode::capacity, "order complex needs " + std::to_string(n) + " vertices (max 128)");
    std::vector<VertexSet> facets;
    for (const auto& c : member_chains(Y)) facets.push_back(VertexSet(c));
    return SimplicialComplex::from_facets(std::move(facets), n);
}

GradedDims pair_cohomology_dims(const UpClosedFamily& U, const UpClosedFamily& V, bool reduced) {
    if (U.ambient_ptr() != V.ambient_ptr() && !(U.ambient() == V.ambient()))
        fail(ErrorCode::domain, "pair cohomology: families live in different complexes");
    if (!V.is_subfamily_of(U)) fail(ErrorCode::domain, "pair cohomology: V is not contained in U");
    std::vector<std::vector<int>> cells;
    for (auto& c : member_chains(U))
        if (!V.contains(U.members()[static_cast<std::size_t>(c.front())])) cells.push_back(std::move(c));
    if (reduced && V.empty()) cells.emplace_back();
    GradedDims h = ChainComplex(std::move(cells)).homology();
    if (h.dims.empty()) {
        h.first_degree = -1;
        return h;
    }
    while (h.first_degree > -1) {
        h.dims.insert(h.dims.begin(), 0);
        --h.first_degree;
    }
    return h;
}

bool is_orientable(const SimplicialComplex& K) {
    const ManifoldCheck mc = is_closed_manifold(K);
    if (!mc.manifold) fail(ErrorCode::domain, "is_orientable: not a closed manifold (" + mc.reason + ")");
    const int n = K.dimension();
    // Group facets by connected component and test rank H_n = 1 on each.
    std::vector<std::vector<VertexSet>> groups;
    std::vector<VertexSet> remaining = K.facets();
    while (!remaining.empty()) {
        VertexSet reach = remaining.front();
        bool grew = true;
        while (grew) {
            grew = false;
            for (const auto& F : remaining)
                if (F.intersects(reach) && !F.is_subset_of(reach)) {
                    reach |= F;
                    grew = true;
                }
        }
        std::vector<VertexSet> group, rest;
        for (const auto& F : remaining) (F.intersects(reach) ? group : rest).push_back(F);
        groups.push_back(std::move(group));
        remaining = std::move(rest);
    }
    for (const auto& group : groups) {
        std::vector<std::vector<int>> cells;
        for (const auto& F : group) {
            cells.push_back(F.to_vector());
            F.for_each([&](int v) { cells.push_back(F.without(v).to_vector()); });
        }
        const ChainComplex C(std::move(cells));
        const std::size_t top = C.cell_count(n) - C.boundary_rank(n);
        if (top != 1) return false;
    }
    return true;
}

std::size_t local_cohomology_dim(const SimplicialComplex& K, int i, const std::vector<int>& c) {
    VertexSet b;
    for (std::size_t v = 0; v < c.size(); ++v) {
        if (c[v] > 0) return 0;
        if (c[v] < 0) b.insert(static_cast<int>(v));
    }
    if (!K.contains(b)) return 0;
    return homology_dims(link(K, b), true).at(i - b.size() - 1);
}

std::vector<mpz_class> twisted_structure_sheaf_cohomology(const SimplicialComplex& K, int m) {
    if (m < 0) fail(ErrorCode::unsupported, "negative twists are not supported");
    if (m == 0) {
        const GradedDims h = homology_dims(K, false);
        std::vector<mpz_class> out;
        for (int p = 0; p <= std::max(K.dimension(), 0); ++p) out.emplace_back(static_cast<unsigned long>(h.at(p)));
        return out;
    }
    mpz_class h0 = 0;
    for (int d = 0; d <= K.dimension(); ++d) {
        mpz_class binom;
        mpz_bin_uiui(binom.get_mpz_t(), static_cast<unsigned long>(m - 1), static_cast<unsigned long>(d));
        h0 += binom * static_cast<unsigned long>(K.faces(d).size());
    }
    std::vector<mpz_class> out{h0};
    for (int p = 1; p <= std::max(K.dimension(), 0); ++p) out.emplace_back(0);
    return out;
}

}  // namespace srdef
