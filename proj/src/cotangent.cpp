#include "srdef/cotangent.hpp"

#include <algorithm>
#include <atomic>
#include <charconv>
#include <thread>

namespace srdef {

namespace {

int parse_int(std::string_view s, const char* what) {
    int v = 0;
    auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
    if (s.empty() || ec != std::errc{} || ptr != s.data() + s.size())
        fail(ErrorCode::usage, std::string("malformed ") + what + " '" + std::string(s) + "'");
    return v;
}

std::vector<std::string_view> split(std::string_view s, char sep) {
    std::vector<std::string_view> out;
    std::size_t pos = 0;
    while (pos <= s.size()) {
        std::size_t end = s.find(sep, pos);
        if (end == std::string_view::npos) end = s.size();
        std::string_view item = s.substr(pos, end - pos);
        while (!item.empty() && item.front() == ' ') item.remove_prefix(1);
        while (!item.empty() && item.back() == ' ') item.remove_suffix(1);
        if (!item.empty()) out.push_back(item);
        pos = end + 1;
    }
    return out;
}

unsigned long long binomial(int n, int k) {
    if (k < 0 || n < 0 || k > n) return 0;
    unsigned long long r = 1;
    for (int i = 1; i <= k; ++i) r = r * static_cast<unsigned long long>(n - k + i) / static_cast<unsigned long long>(i);
    return r;
}

std::shared_ptr<const SimplicialComplex> share(const SimplicialComplex& K) {
    return std::make_shared<const SimplicialComplex>(K);
}

SimplicialComplex intersect(const SimplicialComplex& A, const SimplicialComplex& B) {
    std::vector<VertexSet> common;
    for (const auto& f : A.all_faces())
        if (B.contains(f)) common.push_back(f);
    if (common.empty()) return SimplicialComplex::empty_complex(A.n_vertices());
    return SimplicialComplex::from_facets(std::move(common), A.n_vertices());
}

bool is_rational_sphere(const SimplicialComplex& K) {
    const GradedDims h = homology_dims(K, true);
    for (int d = -1; d <= K.dimension(); ++d)
        if (h.at(d) != (d == K.dimension() ? 1u : 0u)) return false;
    return true;
}

// The general formula for a = ∅ on L.
std::size_t general_empty(const SimplicialComplex& L, int i, const VertexSet& b) {
    if (!boundary_in(L, b)) return 0;
    UFamilies fam = u_families(L, b);
    return pair_cohomology_dims(fam.U, fam.U_tilde, b.size() == 1).at(i - 1);
}

// H̃⁰ of |L| minus |∂b ∗ L_b|, through the up-closed family of faces outside it.
std::size_t complement_h0(const SimplicialComplex& L, const VertexSet& b) {
    const SimplicialComplex Lb = l_b(L, b);
    std::vector<VertexSet> outside;
    for (const auto& g : L.all_faces()) {
        const bool in_join = !b.is_subset_of(g) && Lb.contains(g - b);
        if (!in_join) outside.push_back(g);
    }
    auto shared = share(L);
    UpClosedFamily U(shared, std::move(outside));
    return pair_cohomology_dims(U, UpClosedFamily(shared, {}), true).at(0);
}

void check_manifold(const SimplicialComplex& K, const char* op) {
    const ManifoldCheck mc = is_closed_manifold(K);
    if (!mc.manifold) fail(ErrorCode::domain, std::string(op) + ": not a closed manifold (" + mc.reason + ")");
}

std::vector<int> compact_map(const SimplicialComplex& L) {
    std::vector<int> map(static_cast<std::size_t>(L.n_vertices()), -1);
    int next = 0;
    L.support().for_each([&](int v) { map[static_cast<std::size_t>(v)] = next++; });
    return map;
}

}  // namespace

Multidegree Multidegree::from_sets(const VertexSet& a_support, const VertexSet& b) {
    if (a_support.intersects(b)) fail(ErrorCode::domain, "multidegree: supports of a and b must be disjoint");
    Multidegree c;
    c.a.assign(static_cast<std::size_t>(a_support.max() + 1), 0);
    a_support.for_each([&](int v) { c.a[static_cast<std::size_t>(v)] = 1; });
    c.b = b;
    return c;
}

Multidegree Multidegree::parse(const std::string& a_spec, const std::string& b_spec) {
    Multidegree c;
    for (auto item : split(a_spec, ',')) {
        const auto colon = item.find(':');
        const int v = parse_int(item.substr(0, colon), "vertex");
        const int e = colon == std::string_view::npos ? 1 : parse_int(item.substr(colon + 1), "exponent");
        if (v < 0 || v >= kMaxVertices) fail(ErrorCode::usage, "vertex " + std::to_string(v) + " out of range");
        if (e < 0) fail(ErrorCode::usage, "exponents of a must be nonnegative");
        if (static_cast<int>(c.a.size()) <= v) c.a.resize(static_cast<std::size_t>(v + 1), 0);
        c.a[static_cast<std::size_t>(v)] += e;
    }
    for (auto item : split(b_spec, ',')) {
        const int v = parse_int(item, "vertex");
        if (v < 0 || v >= kMaxVertices) fail(ErrorCode::usage, "vertex " + std::to_string(v) + " out of range");
        c.b.insert(v);
    }
    if (c.a_support().intersects(c.b)) fail(ErrorCode::usage, "supports of a and b must be disjoint");
    return c;
}

VertexSet Multidegree::a_support() const {
    VertexSet s;
    for (std::size_t v = 0; v < a.size(); ++v)
        if (a[v] > 0) s.insert(static_cast<int>(v));
    return s;
}

int Multidegree::a_total() const {
    int t = 0;
    for (int e : a) t += e;
    return t;
}

std::vector<int> Multidegree::vector(int n) const {
    n = std::max({n, static_cast<int>(a.size()), b.max() + 1});
    std::vector<int> c(static_cast<std::size_t>(n), 0);
    for (std::size_t v = 0; v < a.size(); ++v) c[v] = a[v];
    b.for_each([&](int v) { c[static_cast<std::size_t>(v)] -= 1; });
    return c;
}

std::string Multidegree::str() const {
    std::string s;
    for (std::size_t v = 0; v < a.size(); ++v) {
        if (a[v] == 0) continue;
        if (!s.empty()) s += " + ";
        s += (a[v] == 1 ? "" : std::to_string(a[v])) + "e" + std::to_string(v);
    }
    b.for_each([&](int v) { s += " - e" + std::to_string(v); });
    return s.empty() ? "0" : s;
}

bool boundary_in(const SimplicialComplex& K, const VertexSet& b) {
    bool ok = true;
    b.for_each([&](int v) {
        if (ok && !K.contains(b.without(v))) ok = false;
    });
    return ok;
}

SimplicialComplex l_b(const SimplicialComplex& K, const VertexSet& b) {
    if (!boundary_in(K, b)) fail(ErrorCode::domain, "L_b: ∂b is not a subcomplex");
    std::optional<SimplicialComplex> acc;
    for (const auto& bp : subsets(b)) {
        if (bp.empty() || bp == b) continue;
        SimplicialComplex lk = link(K, bp);
        acc = acc ? intersect(*acc, lk) : lk;
    }
    return acc ? *acc : K;
}

std::vector<VertexSet> boundary_candidates(const SimplicialComplex& K, int min_size) {
    std::vector<VertexSet> out;
    for (const auto& g : K.all_faces()) {
        if (!g.empty() && g.size() >= min_size) out.push_back(g);
        if (g.size() + 1 < min_size) continue;
        (K.support() - g).for_each([&](int v) {
            if (v <= g.max()) return;
            const VertexSet b = g.with(v);
            if (!K.contains(b) && boundary_in(K, b)) out.push_back(b);
        });
    }
    std::sort(out.begin(), out.end());
    return out;
}

UFamilies u_families(const SimplicialComplex& K, const VertexSet& b) {
    if (b.empty()) fail(ErrorCode::domain, "u_families: b must be nonempty");
    std::vector<VertexSet> u, ut;
    for (const auto& f : K.all_faces()) {
        const VertexSet fb = f | b;
        if (!K.contains(fb)) u.push_back(f);
        bool tilde = false;
        b.for_each([&](int v) {
            if (!tilde && !K.contains(fb.without(v))) tilde = true;
        });
        if (tilde) ut.push_back(f);
    }
    auto shared = share(K);
    return {UpClosedFamily(shared, std::move(u)), UpClosedFamily(shared, std::move(ut))};
}

std::size_t t1_empty(const SimplicialComplex& L, const VertexSet& b) {
    if (b.size() < 2 || !b.is_subset_of(L.support()) || !boundary_in(L, b)) return 0;
    // Ũ_b is up-closed, so it is empty iff it contains no facet.
    for (const auto& F : L.facets()) {
        const VertexSet Fb = F | b;
        bool inside = true;
        b.for_each([&](int v) {
            if (inside && !L.contains(Fb.without(v))) inside = false;
        });
        if (!inside) return 0;
    }
    return 1;
}

std::vector<VertexSet> b_set(const SimplicialComplex& K) {
    check_manifold(K, "b_set");
    std::vector<VertexSet> out;
    for (const auto& b : boundary_candidates(K, 2))
        if (t1_empty(K, b) == 1) out.push_back(b);
    return out;
}

std::size_t t_graded_dim(const SimplicialComplex& K, int i, const VertexSet& a, const VertexSet& b) {
    if (i != 1 && i != 2) fail(ErrorCode::domain, "t_graded_dim: i must be 1 or 2");
    if (b.empty() || a.intersects(b) || !K.contains(a)) return 0;
    const SimplicialComplex L = link(K, a);
    if (!b.is_subset_of(L.support())) return 0;
    return general_empty(L, i, b);
}

std::size_t t2_empty(const SimplicialComplex& L, const VertexSet& b, bool oriented, bool sphere) {
    if (b.empty() || !b.is_subset_of(L.support()) || !boundary_in(L, b)) return 0;
    const int n = L.dimension();
    if (!L.contains(b)) {
        if (sphere) return homology_dims(l_b(L, b), true).at(n - b.size());
        return complement_h0(L, b);
    }
    if (!oriented) return general_empty(L, 2, b);
    if (b.size() == 1) return homology_dims(L, true).at(n - 1);
    if (t1_empty(L, b) != 0) return 0;
    const std::size_t h = homology_dims(l_b(L, b), true).at(n - b.size());
    return h > 0 ? h - 1 : 0;
}

std::string to_string(Method m) {
    switch (m) {
        case Method::general_topological: return "general-topological";
        case Method::manifold_fast_path: return "manifold-fast-path";
        case Method::oracle: return "oracle";
    }
    return "unknown";
}

std::string basis_rule(const Multidegree& c) {
    std::string mono;
    for (std::size_t v = 0; v < c.a.size(); ++v) {
        if (c.a[v] == 0) continue;
        if (!mono.empty()) mono += "·";
        mono += "x" + std::to_string(v);
        if (c.a[v] > 1) mono += "^" + std::to_string(c.a[v]);
    }
    if (!mono.empty()) mono += "·";
    const std::string bs = c.b.str();
    return "x_p ↦ " + mono + "x_{p∖" + bs + "} if " + bs + " ⊆ p, else 0";
}

struct ManifoldCotangent::LinkData {
    std::shared_ptr<const SimplicialComplex> L;
    bool oriented = false;
    bool sphere = false;
};

ManifoldCotangent::ManifoldCotangent(SimplicialComplex K) : K_(std::move(K)) {
    check_manifold(K_, "cotangent");
    orientable_ = is_orientable(K_);
    rational_sphere_ = orientable_ && is_rational_sphere(K_);
}

const ManifoldCotangent::LinkData& ManifoldCotangent::data(const VertexSet& a) const {
    std::lock_guard<std::mutex> lock(mutex_);
    auto it = cache_.find(a);
    if (it != cache_.end()) return *it->second;
    auto d = std::make_shared<LinkData>();
    if (a.empty()) {
        d->L = std::make_shared<const SimplicialComplex>(K_);
        d->oriented = orientable_;
        d->sphere = rational_sphere_;
    } else {
        // Links of nonempty faces of a combinatorial manifold are spheres.
        d->L = std::make_shared<const SimplicialComplex>(link(K_, a));
        d->oriented = true;
        d->sphere = true;
    }
    return *cache_.emplace(a, std::move(d)).first->second;
}

std::shared_ptr<const SimplicialComplex> ManifoldCotangent::link_of(const VertexSet& a) const {
    if (!K_.contains(a)) fail(ErrorCode::domain, "link: " + a.str() + " is not a face");
    return data(a).L;
}

std::size_t ManifoldCotangent::t1(const VertexSet& a, const VertexSet& b) const {
    if (b.empty() || a.intersects(b) || !K_.contains(a)) return 0;
    return t1_empty(*data(a).L, b);
}

std::size_t ManifoldCotangent::t2(const VertexSet& a, const VertexSet& b) const {
    if (b.empty() || a.intersects(b) || !K_.contains(a)) return 0;
    const LinkData& d = data(a);
    return t2_empty(*d.L, b, d.oriented, d.sphere);
}

std::size_t ManifoldCotangent::t2_complement(const VertexSet& a, const VertexSet& b) const {
    if (b.empty() || a.intersects(b) || !K_.contains(a)) return 0;
    const SimplicialComplex& L = *data(a).L;
    if (!b.is_subset_of(L.support()) || !boundary_in(L, b) || L.contains(b)) return 0;
    return complement_h0(L, b);
}

GradedPieceReport ManifoldCotangent::t1_report(const Multidegree& c) const {
    GradedPieceReport r;
    r.i = 1;
    r.degree = c;
    r.method = Method::manifold_fast_path;
    r.dim = t1(c.a_support(), c.b);
    if (r.dim == 1) r.basis = basis_rule(c);
    return r;
}

GradedPieceReport ManifoldCotangent::t2_report(const Multidegree& c) const {
    GradedPieceReport r;
    r.i = 2;
    r.degree = c;
    r.method = Method::manifold_fast_path;
    r.dim = t2(c.a_support(), c.b);
    return r;
}

std::size_t t1_manifold_dim(const SimplicialComplex& K, const VertexSet& a, const VertexSet& b) {
    return ManifoldCotangent(K).t1(a, b);
}

std::size_t t2_manifold_dim(const SimplicialComplex& K, const VertexSet& a, const VertexSet& b) {
    return ManifoldCotangent(K).t2(a, b);
}

DegreeZeroSummary degree_zero_totals(const SimplicialComplex& K, int workers, bool with_t2) {
    const ManifoldCotangent mc(K);
    std::vector<VertexSet> faces;
    for (int d = 0; d <= K.dimension(); ++d)
        for (const auto& f : K.faces(d)) faces.push_back(f);

    struct PerFace {
        std::vector<Contribution> t1, t2;
    };
    std::vector<PerFace> results(faces.size());
    std::atomic<std::size_t> next{0};
    auto work = [&] {
        for (std::size_t idx = next++; idx < faces.size(); idx = next++) {
            const VertexSet& a = faces[idx];
            const SimplicialComplex& L = *mc.link_of(a);
            for (const auto& b : boundary_candidates(L, a.size())) {
                const unsigned long long mult = binomial(b.size() - 1, a.size() - 1);
                if (b.size() >= 2) {
                    if (const std::size_t d = mc.t1(a, b)) results[idx].t1.push_back({a, b, d, mult});
                }
                if (with_t2) {
                    if (const std::size_t d = mc.t2(a, b)) results[idx].t2.push_back({a, b, d, mult});
                }
            }
        }
    };
    int w = workers > 0 ? workers : static_cast<int>(std::max(1u, std::thread::hardware_concurrency()));
    w = std::min<int>(w, static_cast<int>(std::max<std::size_t>(faces.size(), 1)));
    if (w <= 1) {
        work();
    } else {
        std::vector<std::thread> pool;
        for (int t = 0; t < w; ++t) pool.emplace_back(work);
        for (auto& th : pool) th.join();
    }

    DegreeZeroSummary out;
    out.counts = f_vector_and_counts(K);
    for (const auto& r : results) {
        for (const auto& c : r.t1) {
            out.t1.push_back(c);
            out.t1_total += c.piece_dim * c.multiplicity;
            out.t1_by_face_dim[c.a.size() - 1] += c.piece_dim * c.multiplicity;
        }
        for (const auto& c : r.t2) {
            out.t2.push_back(c);
            out.t2_total += c.piece_dim * c.multiplicity;
            out.t2_by_face_dim[c.a.size() - 1] += c.piece_dim * c.multiplicity;
        }
    }
    return out;
}

SurfaceFormulas surface_formulas(const SimplicialComplex& K) {
    check_manifold(K, "surface_formulas");
    if (K.dimension() != 2) fail(ErrorCode::domain, "surface_formulas: complex is not 2-dimensional");
    const FaceCounts c = f_vector_and_counts(K);
    SurfaceFormulas s;
    s.h2 = homology_dims(K, false).at(2);
    s.t1_projective = 4 * c.count(0, 3) + 2 * c.count(0, 4) + c.f[1] + s.h2;
    long long alt = static_cast<long long>(c.f[0]) + 9 * c.euler + static_cast<long long>(s.h2);
    for (const auto& [k, n] : c.f_ik[0]) {
        if (k < 6) continue;
        alt += 2LL * (k - 5) * static_cast<long long>(n);
        s.t2_degree0 += static_cast<unsigned long long>(k) * static_cast<unsigned long long>(k - 5) / 2 * n;
    }
    s.t1_projective_alt = alt;
    s.h2_theta = 0;
    return s;
}

std::string to_string(LinkType t) {
    switch (t) {
        case LinkType::boundary_tetrahedron: return "boundary-tetrahedron";
        case LinkType::suspension_e3: return "suspension-E3";
        case LinkType::suspension_e4: return "suspension-E4";
        case LinkType::suspension_en: return "suspension-En";
        case LinkType::cyclic_n3: return "cyclic-n3";
        case LinkType::other: return "other";
    }
    return "other";
}

LinkType classify_link(const SimplicialComplex& L) {
    const int m = L.support().size();
    const SimplicialComplex C = L.relabeled(compact_map(L), m);
    if (C.dimension() != 2) return LinkType::other;
    auto cycle = [](int n) {
        std::vector<VertexSet> f;
        for (int i = 0; i < n; ++i) f.push_back({i, (i + 1) % n});
        return SimplicialComplex::from_facets(std::move(f), n);
    };
    if (m == 4 && are_isomorphic(C, SimplicialComplex::boundary_of(VertexSet::first(4), 4)))
        return LinkType::boundary_tetrahedron;
    if (m >= 5 && are_isomorphic(C, suspension(cycle(m - 2)))) {
        if (m == 5) return LinkType::suspension_e3;
        if (m == 6) return LinkType::suspension_e4;
        return LinkType::suspension_en;
    }
    if (m >= 6) {
        std::vector<VertexSet> f;
        for (int i = 1; i + 1 <= m - 2; ++i) {
            f.push_back({0, i, i + 1});
            f.push_back({m - 1, i, i + 1});
        }
        f.push_back({1, 0, m - 1});
        f.push_back({m - 2, 0, m - 1});
        if (are_isomorphic(C, SimplicialComplex::from_facets(std::move(f), m))) return LinkType::cyclic_n3;
    }
    return LinkType::other;
}

ThreefoldFormula threefold_formula(const SimplicialComplex& K) {
    check_manifold(K, "threefold_formula");
    if (K.dimension() != 3) fail(ErrorCode::domain, "threefold_formula: complex is not 3-dimensional");
    ThreefoldFormula t;
    const FaceCounts c = f_vector_and_counts(K);
    for (const auto& v : K.faces(0)) {
        switch (classify_link(link(K, v))) {
            case LinkType::boundary_tetrahedron: ++t.d3; break;
            case LinkType::suspension_e3: ++t.e3; break;
            case LinkType::suspension_e4: ++t.e4; break;
            case LinkType::suspension_en: ++t.e5plus; break;
            case LinkType::cyclic_n3: ++t.c6plus; break;
            case LinkType::other: t.unclassified_vertices.push_back(v.min()); break;
        }
    }
    t.f1_3 = c.count(1, 3);
    t.f1_4 = c.count(1, 4);
    t.h2 = homology_dims(K, false).at(2);
    t.t1_degree0 = 11 * t.d3 + 5 * t.e3 + 3 * t.e4 + t.e5plus + t.c6plus + 5 * t.f1_3 + 2 * t.f1_4;
    t.value = t.t1_degree0 + t.h2;
    return t;
}

ThetaDims theta_and_projective_dims(const SimplicialComplex& K, int workers) {
    check_manifold(K, "theta_and_projective_dims");
    const GradedDims h = homology_dims(K, false);
    ThetaDims t;
    t.h0_theta = static_cast<std::size_t>(K.support().size() - 1) + h.at(1);
    for (int p = 1; p <= K.dimension(); ++p) t.hp_theta.push_back(h.at(p + 1));
    const DegreeZeroSummary z = degree_zero_totals(K, workers, true);
    t.t1_a0 = z.t1_total;
    t.t1_projective = h.at(2) + z.t1_total;
    t.t2_a0 = z.t2_total;
    t.t2_projective_lower = h.at(3);
    return t;
}

RigidityReport is_rigid(const SimplicialComplex& K) {
    check_manifold(K, "is_rigid");
    if (K.dimension() != 3) fail(ErrorCode::domain, "is_rigid: complex is not 3-dimensional");
    RigidityReport r;
    r.h2 = homology_dims(K, false).at(2);
    const FaceCounts c = f_vector_and_counts(K);
    for (const auto& e : K.faces(1)) {
        const int nu = c.valency.at(e);
        if (nu < 5) r.low_valency_edges.emplace_back(e, nu);
    }
    r.rigid = r.h2 == 0 && r.low_valency_edges.empty();
    return r;
}

}  // namespace srdef
