#include "srdef/complex.hpp"

#include <algorithm>
#include <mutex>
#include <numeric>
#include <unordered_set>

namespace srdef {

struct SimplicialComplex::Cache {
    std::once_flag once;
    std::vector<std::vector<VertexSet>> by_dim;  // index d+1 holds faces of dimension d
    std::unordered_set<VertexSet> all;
};

namespace {

void check_universe(const VertexSet& f, int n_vertices) {
    if (f.max() >= n_vertices)
        fail(ErrorCode::domain, "face " + f.str() + " uses a vertex outside the universe of " +
                                    std::to_string(n_vertices) + " vertices");
}

// Sort shortlex, drop duplicates and non-maximal entries.
std::vector<VertexSet> maximal_only(std::vector<VertexSet> sets, NormalizationReport* report) {
    std::sort(sets.begin(), sets.end());
    std::vector<VertexSet> uniq;
    uniq.reserve(sets.size());
    for (const auto& s : sets) {
        if (!uniq.empty() && uniq.back() == s) {
            if (report) report->duplicates.push_back(s);
            continue;
        }
        uniq.push_back(s);
    }
    std::vector<VertexSet> out;
    out.reserve(uniq.size());
    // A set can only be contained in a strictly larger one, which sorts later.
    for (std::size_t i = 0; i < uniq.size(); ++i) {
        bool maximal = true;
        for (std::size_t j = uniq.size(); j-- > i + 1;) {
            if (uniq[j].size() <= uniq[i].size()) break;
            if (uniq[i].is_subset_of(uniq[j])) {
                maximal = false;
                break;
            }
        }
        if (maximal)
            out.push_back(uniq[i]);
        else if (report)
            report->non_maximal.push_back(uniq[i]);
    }
    return out;
}

}  // namespace

SimplicialComplex::SimplicialComplex() : cache_(std::make_shared<Cache>()) {}

SimplicialComplex SimplicialComplex::from_facets(std::vector<VertexSet> facets, int n_vertices,
                                                 NormalizationReport* report) {
    if (n_vertices < 0 || n_vertices > kMaxVertices)
        fail(ErrorCode::capacity, "vertex count " + std::to_string(n_vertices) + " outside [0, 128]");
    SimplicialComplex K;
    K.n_vertices_ = n_vertices;
    if (facets.empty()) {
        if (report) report->void_from_empty_input = true;
        facets.push_back(VertexSet{});
    }
    for (const auto& f : facets) check_universe(f, n_vertices);
    K.facets_ = maximal_only(std::move(facets), report);
    for (const auto& f : K.facets_) {
        K.support_ |= f;
        K.dimension_ = std::max(K.dimension_, f.size() - 1);
    }
    return K;
}

SimplicialComplex SimplicialComplex::void_complex(int n_vertices) {
    return from_facets({VertexSet{}}, n_vertices);
}

SimplicialComplex SimplicialComplex::empty_complex(int n_vertices) {
    if (n_vertices < 0 || n_vertices > kMaxVertices)
        fail(ErrorCode::capacity, "vertex count " + std::to_string(n_vertices) + " outside [0, 128]");
    SimplicialComplex K;
    K.n_vertices_ = n_vertices;
    return K;
}

SimplicialComplex SimplicialComplex::simplex(const VertexSet& s, int n_vertices) {
    return from_facets({s}, n_vertices);
}

SimplicialComplex SimplicialComplex::boundary_of(const VertexSet& s, int n_vertices) {
    if (s.empty()) return empty_complex(n_vertices);
    std::vector<VertexSet> facets;
    s.for_each([&](int v) { facets.push_back(s.without(v)); });
    return from_facets(std::move(facets), n_vertices);
}

bool SimplicialComplex::is_pure() const {
    return std::all_of(facets_.begin(), facets_.end(),
                       [&](const VertexSet& f) { return f.size() - 1 == dimension_; });
}

void SimplicialComplex::build_cache() const {
    std::call_once(cache_->once, [this] {
        auto& by_dim = cache_->by_dim;
        auto& all = cache_->all;
        by_dim.assign(static_cast<std::size_t>(dimension_ + 2), {});
        for (const auto& F : facets_) {
            for (const auto& g : subsets(F)) {
                if (all.insert(g).second) by_dim[static_cast<std::size_t>(g.size())].push_back(g);
            }
        }
        for (auto& level : by_dim) std::sort(level.begin(), level.end());
    });
}

bool SimplicialComplex::contains(const VertexSet& f) const {
    if (facets_.size() <= 16 || f.size() > 24) {
        return std::any_of(facets_.begin(), facets_.end(), [&](const VertexSet& F) { return f.is_subset_of(F); });
    }
    build_cache();
    return cache_->all.count(f) != 0;
}

std::vector<int> SimplicialComplex::ghost_vertices() const {
    std::vector<int> out;
    for (int v = 0; v < n_vertices_; ++v)
        if (!support_.contains(v)) out.push_back(v);
    return out;
}

const std::vector<VertexSet>& SimplicialComplex::faces(int dim) const {
    static const std::vector<VertexSet> none;
    build_cache();
    if (dim < -1 || dim > dimension_) return none;
    return cache_->by_dim[static_cast<std::size_t>(dim + 1)];
}

std::vector<VertexSet> SimplicialComplex::all_faces() const {
    std::vector<VertexSet> out;
    for (int d = -1; d <= dimension_; ++d) {
        const auto& level = faces(d);
        out.insert(out.end(), level.begin(), level.end());
    }
    return out;
}

std::size_t SimplicialComplex::face_count() const {
    build_cache();
    return cache_->all.size();
}

std::vector<std::size_t> SimplicialComplex::f_vector() const {
    std::vector<std::size_t> f;
    for (int d = 0; d <= dimension_; ++d) f.push_back(faces(d).size());
    return f;
}

SimplicialComplex SimplicialComplex::relabeled(const std::vector<int>& map, int n_vertices) const {
    if (is_empty()) return empty_complex(n_vertices);
    std::vector<VertexSet> facets;
    facets.reserve(facets_.size());
    for (const auto& F : facets_) {
        VertexSet G;
        F.for_each([&](int v) {
            if (v >= static_cast<int>(map.size()) || map[static_cast<std::size_t>(v)] < 0)
                fail(ErrorCode::domain, "relabeling does not cover vertex " + std::to_string(v));
            G.insert(map[static_cast<std::size_t>(v)]);
        });
        if (G.size() != F.size()) fail(ErrorCode::domain, "relabeling is not injective on facet " + F.str());
        facets.push_back(G);
    }
    return from_facets(std::move(facets), n_vertices);
}

std::string SimplicialComplex::str() const {
    if (is_empty()) return "[]";
    std::string s = "[";
    for (std::size_t i = 0; i < facets_.size(); ++i) {
        if (i) s += ' ';
        s += facets_[i].str();
    }
    return s + "]";
}

SimplicialComplex link(const SimplicialComplex& K, const VertexSet& f) {
    if (!K.contains(f)) fail(ErrorCode::domain, "link: " + f.str() + " is not a face");
    std::vector<VertexSet> facets;
    for (const auto& F : K.facets())
        if (f.is_subset_of(F)) facets.push_back(F - f);
    return SimplicialComplex::from_facets(std::move(facets), K.n_vertices());
}

SimplicialComplex closed_star(const SimplicialComplex& K, const VertexSet& f) {
    if (!K.contains(f)) fail(ErrorCode::domain, "closed_star: " + f.str() + " is not a face");
    std::vector<VertexSet> facets;
    for (const auto& F : K.facets())
        if (f.is_subset_of(F)) facets.push_back(F);
    return SimplicialComplex::from_facets(std::move(facets), K.n_vertices());
}

std::vector<VertexSet> open_star(const SimplicialComplex& K, const VertexSet& f) {
    std::vector<VertexSet> out;
    for (const auto& g : K.all_faces())
        if (f.is_subset_of(g)) out.push_back(g);
    return out;
}

SimplicialComplex join_disjoint(const SimplicialComplex& K, const SimplicialComplex& L) {
    if (K.support().intersects(L.support())) fail(ErrorCode::domain, "join: vertex supports overlap");
    const int n = std::max(K.n_vertices(), L.n_vertices());
    if (K.is_empty() || L.is_empty()) return SimplicialComplex::empty_complex(n);
    std::vector<VertexSet> facets;
    facets.reserve(K.facets().size() * L.facets().size());
    for (const auto& F : K.facets())
        for (const auto& G : L.facets()) facets.push_back(F | G);
    return SimplicialComplex::from_facets(std::move(facets), n);
}

SimplicialComplex join(const SimplicialComplex& K, const SimplicialComplex& L) {
    const int n = K.n_vertices() + L.n_vertices();
    if (n > kMaxVertices) fail(ErrorCode::capacity, "join needs " + std::to_string(n) + " vertices (max 128)");
    std::vector<int> shift(static_cast<std::size_t>(L.n_vertices()));
    std::iota(shift.begin(), shift.end(), K.n_vertices());
    SimplicialComplex Kn = K.relabeled([&] {
        std::vector<int> id(static_cast<std::size_t>(K.n_vertices()));
        std::iota(id.begin(), id.end(), 0);
        return id;
    }(), n);
    return join_disjoint(Kn, L.relabeled(shift, n));
}

SimplicialComplex cone(const SimplicialComplex& K) {
    const int n = K.n_vertices() + 1;
    if (n > kMaxVertices) fail(ErrorCode::capacity, "cone needs " + std::to_string(n) + " vertices (max 128)");
    std::vector<int> shift(static_cast<std::size_t>(K.n_vertices()));
    std::iota(shift.begin(), shift.end(), 1);
    return join_disjoint(SimplicialComplex::simplex(VertexSet{0}, n), K.relabeled(shift, n));
}

SimplicialComplex suspension(const SimplicialComplex& K) {
    const int n = K.n_vertices() + 2;
    if (n > kMaxVertices) fail(ErrorCode::capacity, "suspension needs " + std::to_string(n) + " vertices (max 128)");
    std::vector<int> shift(static_cast<std::size_t>(K.n_vertices()));
    std::iota(shift.begin(), shift.end(), 1);
    SimplicialComplex apices = SimplicialComplex::from_facets({VertexSet{0}, VertexSet{n - 1}}, n);
    return join_disjoint(apices, K.relabeled(shift, n));
}

std::size_t FaceCounts::count(int i, int k) const {
    if (i < 0 || i >= static_cast<int>(f_ik.size())) return 0;
    const auto& row = f_ik[static_cast<std::size_t>(i)];
    auto it = row.find(k);
    return it == row.end() ? 0 : it->second;
}

FaceCounts f_vector_and_counts(const SimplicialComplex& K) {
    FaceCounts out;
    out.f = K.f_vector();
    for (std::size_t i = 0; i < out.f.size(); ++i)
        out.euler += (i % 2 == 0 ? 1 : -1) * static_cast<long long>(out.f[i]);
    for (int d = 0; d <= K.dimension(); ++d)
        for (const auto& g : K.faces(d)) out.valency[g] = 0;
    for (int d = 1; d <= K.dimension(); ++d)
        for (const auto& g : K.faces(d)) g.for_each([&](int v) { ++out.valency[g.without(v)]; });
    out.f_ik.resize(out.f.size());
    for (const auto& [g, nu] : out.valency) ++out.f_ik[static_cast<std::size_t>(g.size() - 1)][nu];
    return out;
}

int valency(const SimplicialComplex& K, const VertexSet& f) { return link(K, f).support().size(); }

int connected_components(const SimplicialComplex& K) {
    std::vector<int> parent(static_cast<std::size_t>(K.n_vertices()));
    std::iota(parent.begin(), parent.end(), 0);
    auto find = [&](int x) {
        while (parent[static_cast<std::size_t>(x)] != x) {
            parent[static_cast<std::size_t>(x)] = parent[static_cast<std::size_t>(parent[static_cast<std::size_t>(x)])];
            x = parent[static_cast<std::size_t>(x)];
        }
        return x;
    };
    for (const auto& F : K.facets()) {
        const int r = F.min();
        F.for_each([&](int v) { parent[static_cast<std::size_t>(find(v))] = find(r); });
    }
    int count = 0;
    K.support().for_each([&](int v) { count += find(v) == v; });
    return count;
}

namespace {

bool is_cycle(const SimplicialComplex& L) {
    if (L.dimension() != 1 || !L.is_pure()) return false;
    const FaceCounts c = f_vector_and_counts(L);
    for (const auto& v : L.faces(0))
        if (c.valency.at(v) != 2) return false;
    return connected_components(L) == 1;
}

}  // namespace

ManifoldCheck is_closed_manifold(const SimplicialComplex& K) {
    ManifoldCheck out;
    out.dimension = K.dimension();
    const int d = K.dimension();
    if (d >= 4) fail(ErrorCode::unsupported, "manifold recognition is only implemented up to dimension 3");
    if (d < 0) {
        out.reason = "complex has no vertices";
        return out;
    }
    if (!K.is_pure()) {
        out.reason = "complex is not pure";
        return out;
    }
    for (const auto& v : K.faces(0)) {
        const SimplicialComplex L = link(K, v);
        bool ok = false;
        if (d == 0) ok = L.is_void();
        if (d == 1) ok = L.dimension() == 0 && L.facets().size() == 2;
        if (d == 2) ok = is_cycle(L);
        if (d == 3) {
            ok = L.dimension() == 2 && connected_components(L) == 1 && f_vector_and_counts(L).euler == 2;
            if (ok)
                for (const auto& w : L.faces(0))
                    if (!is_cycle(link(L, w))) ok = false;
        }
        if (!ok) {
            out.reason = "link of vertex " + v.str() + " is not a sphere of dimension " + std::to_string(d - 1);
            return out;
        }
    }
    out.manifold = true;
    return out;
}

SimplicialComplex flip(const SimplicialComplex& K, const VertexSet& a, const VertexSet& b) {
    if (a.empty() || !K.contains(a)) fail(ErrorCode::domain, "flip: a = " + a.str() + " must be a nonempty face");
    if (b.empty() || a.intersects(b)) fail(ErrorCode::domain, "flip: b must be nonempty and disjoint from a");
    if (K.contains(b)) fail(ErrorCode::domain, "flip: b = " + b.str() + " is already a face");
    const SimplicialComplex La = link(K, a);
    const int n = std::max(K.n_vertices(), b.max() + 1);
    SimplicialComplex L;
    if (b.size() == 1) {
        L = La;
    } else {
        const VertexSet facet_of_db = b.without(b.min());
        if (!La.contains(facet_of_db)) fail(ErrorCode::domain, "flip: link(a) is not of the form ∂b * L");
        L = link(La, facet_of_db);
    }
    if (L.support().intersects(b)) fail(ErrorCode::domain, "flip: link(a) is not of the form ∂b * L");
    const SimplicialComplex db = SimplicialComplex::boundary_of(b, n);
    const SimplicialComplex Lw = SimplicialComplex::from_facets(L.facets(), n);
    if (!(join_disjoint(db, Lw).facets() == La.facets()))
        fail(ErrorCode::domain, "flip: link(a) is not of the form ∂b * L");

    std::vector<VertexSet> facets;
    for (const auto& F : K.facets())
        if (!a.is_subset_of(F)) facets.push_back(F);
    const SimplicialComplex da = SimplicialComplex::boundary_of(a, n);
    const SimplicialComplex added = join_disjoint(da, join_disjoint(SimplicialComplex::simplex(b, n), Lw));
    facets.insert(facets.end(), added.facets().begin(), added.facets().end());
    return SimplicialComplex::from_facets(std::move(facets), n);
}

namespace {

struct IsoSearch {
    const SimplicialComplex& K;
    const SimplicialComplex& L;
    std::vector<int> order;                      // vertices of K in assignment order
    std::vector<std::vector<VertexSet>> closing;  // facets of K completed at step i
    std::vector<long long> inv_k, inv_l;
    std::vector<int> map, used;
    std::unordered_set<VertexSet> l_facets;
    std::vector<VertexSet> adj_k, adj_l;

    IsoSearch(const SimplicialComplex& K_, const SimplicialComplex& L_) : K(K_), L(L_) {}

    static std::vector<VertexSet> adjacency(const SimplicialComplex& C) {
        std::vector<VertexSet> adj(static_cast<std::size_t>(C.n_vertices()));
        for (const auto& F : C.facets())
            F.for_each([&](int v) { adj[static_cast<std::size_t>(v)] |= F.without(v); });
        return adj;
    }

    static std::vector<long long> invariants(const SimplicialComplex& C, const std::vector<VertexSet>& adj) {
        std::vector<long long> inv(static_cast<std::size_t>(C.n_vertices()), -1);
        std::vector<int> facet_count(static_cast<std::size_t>(C.n_vertices()), 0);
        for (const auto& F : C.facets()) F.for_each([&](int v) { ++facet_count[static_cast<std::size_t>(v)]; });
        C.support().for_each([&](int v) {
            long long nb = 0;
            adj[static_cast<std::size_t>(v)].for_each([&](int w) { nb += adj[static_cast<std::size_t>(w)].size(); });
            inv[static_cast<std::size_t>(v)] = (static_cast<long long>(adj[static_cast<std::size_t>(v)].size()) << 40) +
                                               (static_cast<long long>(facet_count[static_cast<std::size_t>(v)]) << 20) + nb;
        });
        return inv;
    }

    bool prepare() {
        if (K.facets().size() != L.facets().size() || K.support().size() != L.support().size()) return false;
        if (K.f_vector() != L.f_vector()) return false;
        adj_k = adjacency(K);
        adj_l = adjacency(L);
        inv_k = invariants(K, adj_k);
        inv_l = invariants(L, adj_l);
        std::vector<long long> sk, sl;
        K.support().for_each([&](int v) { sk.push_back(inv_k[static_cast<std::size_t>(v)]); });
        L.support().for_each([&](int v) { sl.push_back(inv_l[static_cast<std::size_t>(v)]); });
        std::sort(sk.begin(), sk.end());
        std::sort(sl.begin(), sl.end());
        if (sk != sl) return false;
        // BFS order keeps each new vertex adjacent to assigned ones.
        VertexSet seen;
        std::vector<int> remaining = K.support().to_vector();
        for (int start : remaining) {
            if (seen.contains(start)) continue;
            std::vector<int> queue{start};
            seen.insert(start);
            for (std::size_t q = 0; q < queue.size(); ++q) {
                order.push_back(queue[q]);
                adj_k[static_cast<std::size_t>(queue[q])].for_each([&](int w) {
                    if (!seen.contains(w)) {
                        seen.insert(w);
                        queue.push_back(w);
                    }
                });
            }
        }
        std::vector<int> pos(static_cast<std::size_t>(K.n_vertices()), -1);
        for (std::size_t i = 0; i < order.size(); ++i) pos[static_cast<std::size_t>(order[i])] = static_cast<int>(i);
        closing.assign(order.size(), {});
        for (const auto& F : K.facets()) {
            int last = -1;
            F.for_each([&](int v) { last = std::max(last, pos[static_cast<std::size_t>(v)]); });
            if (last >= 0) closing[static_cast<std::size_t>(last)].push_back(F);
        }
        for (const auto& G : L.facets()) l_facets.insert(G);
        map.assign(static_cast<std::size_t>(K.n_vertices()), -1);
        used.assign(static_cast<std::size_t>(L.n_vertices()), 0);
        return true;
    }

    bool search(std::size_t step) {
        if (step == order.size()) return true;
        const int v = order[step];
        bool found = false;
        L.support().for_each([&](int w) {
            if (found || used[static_cast<std::size_t>(w)] || inv_l[static_cast<std::size_t>(w)] != inv_k[static_cast<std::size_t>(v)])
                return;
            bool ok = true;
            adj_k[static_cast<std::size_t>(v)].for_each([&](int u) {
                const int mu = map[static_cast<std::size_t>(u)];
                if (mu >= 0 && !adj_l[static_cast<std::size_t>(w)].contains(mu)) ok = false;
            });
            if (!ok) return;
            map[static_cast<std::size_t>(v)] = w;
            used[static_cast<std::size_t>(w)] = 1;
            for (const auto& F : closing[step]) {
                VertexSet G;
                F.for_each([&](int u) { G.insert(map[static_cast<std::size_t>(u)]); });
                if (!l_facets.count(G)) {
                    ok = false;
                    break;
                }
            }
            if (ok && search(step + 1)) {
                found = true;
                return;
            }
            map[static_cast<std::size_t>(v)] = -1;
            used[static_cast<std::size_t>(w)] = 0;
        });
        return found;
    }
};

}  // namespace

std::optional<std::vector<int>> find_isomorphism(const SimplicialComplex& K, const SimplicialComplex& L) {
    if (K.is_empty() || L.is_empty()) {
        if (K.is_empty() && L.is_empty()) return std::vector<int>(static_cast<std::size_t>(K.n_vertices()), -1);
        return std::nullopt;
    }
    IsoSearch s(K, L);
    if (!s.prepare()) return std::nullopt;
    if (!s.search(0)) return std::nullopt;
    return s.map;
}

}  // namespace srdef
