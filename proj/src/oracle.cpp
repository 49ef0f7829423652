#include "srdef/oracle.hpp"

#include <algorithm>

#include "srdef/linalg.hpp"

namespace srdef {

namespace {

// Nonzero-ness in A_K of monomials x^{m + c} for the fixed degree c = a − b.
struct Degree {
    const SimplicialComplex& K;
    VertexSet a;
    VertexSet b;

    // x^{S + c} for a squarefree S.
    bool valid(const VertexSet& S) const { return b.is_subset_of(S) && K.contains((S - b) | a); }
    // x^{p + q + c}: exponent 2 on p ∩ q survives the −1 from b.
    bool valid_product(const VertexSet& p, const VertexSet& q) const {
        const VertexSet S = p | q;
        return b.is_subset_of(S) && K.contains((S - b) | (p & q & b) | a);
    }
};

std::vector<VertexSet> candidates(const Degree& d, const std::vector<VertexSet>& gens) {
    std::vector<VertexSet> out;
    for (const auto& p : gens)
        if (d.K.contains((p - d.b) | d.a)) out.push_back(p);
    return out;
}

long long dot(const SparseVector& x, const SparseVector& y) {
    long long s = 0;
    std::size_t i = 0, j = 0;
    while (i < x.size() && j < y.size()) {
        if (x[i].first < y[j].first) ++i;
        else if (x[i].first > y[j].first) ++j;
        else s += mpz_class(x[i++].second * y[j++].second).get_si();
    }
    return s;
}

void check_image(const std::vector<SparseVector>& rows, const std::vector<SparseVector>& cols, const char* what) {
    for (const auto& col : cols)
        for (const auto& row : rows)
            if (dot(row, col) != 0) fail(ErrorCode::domain, std::string(what) + ": image does not satisfy the constraints");
}

void check_caps(const Multidegree& c, const OracleCaps& caps) {
    if (c.b.size() > caps.max_b)
        fail(ErrorCode::resource, "oracle: |b| = " + std::to_string(c.b.size()) + " exceeds cap " + std::to_string(caps.max_b));
    if (c.a_total() > caps.max_a)
        fail(ErrorCode::resource, "oracle: Σa = " + std::to_string(c.a_total()) + " exceeds cap " + std::to_string(caps.max_a));
}

struct HomSpace {
    std::vector<VertexSet> valid;        // unknowns: generators with x^{p+c} ≠ 0
    std::vector<SparseVector> syzygies;  // pairwise lcm constraints
    std::size_t rank = 0;
};

HomSpace hom_space(const Degree& d, const std::vector<VertexSet>& gens) {
    HomSpace h;
    const std::vector<VertexSet> F = candidates(d, gens);
    std::map<VertexSet, int> index;
    for (const auto& p : F)
        if (d.valid(p)) {
            index.emplace(p, static_cast<int>(h.valid.size()));
            h.valid.push_back(p);
        }
    RankAccumulator acc;
    for (std::size_t i = 0; i < F.size(); ++i)
        for (std::size_t j = i + 1; j < F.size(); ++j) {
            if (!d.valid(F[i] | F[j])) continue;
            std::vector<std::pair<int, mpz_class>> e;
            if (auto it = index.find(F[i]); it != index.end()) e.emplace_back(it->second, 1);
            if (auto it = index.find(F[j]); it != index.end()) e.emplace_back(it->second, -1);
            if (e.empty()) continue;
            SparseVector row = make_sparse(std::move(e));
            h.syzygies.push_back(row);
            acc.add(std::move(row));
        }
    h.rank = acc.rank();
    return h;
}

}  // namespace

bool MonomialIdealPresentation::contains(const std::vector<int>& m) const {
    VertexSet s;
    for (std::size_t v = 0; v < m.size(); ++v)
        if (m[v] > 0) s.insert(static_cast<int>(v));
    return std::any_of(generators.begin(), generators.end(), [&](const VertexSet& p) { return p.is_subset_of(s); });
}

MonomialIdealPresentation minimal_nonfaces(const SimplicialComplex& K) {
    MonomialIdealPresentation I;
    I.n_variables = K.n_vertices();
    const VertexSet universe = VertexSet::first(K.n_vertices());
    for (const auto& g : K.all_faces()) {
        (universe - g).for_each([&](int v) {
            if (!g.empty() && v <= g.max()) return;
            const VertexSet p = g.with(v);
            if (K.contains(p)) return;
            bool minimal = true;
            p.for_each([&](int w) {
                if (minimal && !K.contains(p.without(w))) minimal = false;
            });
            if (minimal) I.generators.push_back(p);
        });
    }
    std::sort(I.generators.begin(), I.generators.end());
    return I;
}

DerivationModuleReport derivation_module_check(const SimplicialComplex& K) {
    DerivationModuleReport r;
    const std::vector<VertexSet> faces = K.all_faces();
    for (const auto& f : faces) {
        std::size_t above = 0;
        for (const auto& g : K.facets()) {
            if (!f.is_subset_of(g) || f == g) continue;
            // Faces strictly between f and g, plus g itself.
            above += g.size() - f.size() >= 2 ? 2 : 1;
            if (above >= 2) break;
        }
        const bool maximal = std::find(K.facets().begin(), K.facets().end(), f) != K.facets().end();
        if (!maximal && above < 2) r.witnesses.push_back(f);
    }
    r.generated_by_euler = r.witnesses.empty();

    K.support().for_each([&](int v) {
        const SimplicialComplex sv = closed_star(K, VertexSet{v});
        auto& gens = r.a_v[v];
        for (const auto& a : faces) {
            const SimplicialComplex sa = closed_star(K, a);
            bool inside = true;
            for (const auto& F : sa.facets())
                if (!sv.contains(F)) {
                    inside = false;
                    break;
                }
            if (inside) gens.push_back(a);
        }
    });
    return r;
}

OracleDetail t1_oracle(const SimplicialComplex& K, const Multidegree& c, OracleCaps caps) {
    check_caps(c, caps);
    const Degree d{K, c.a_support(), c.b};
    const MonomialIdealPresentation I = minimal_nonfaces(K);
    const HomSpace h = hom_space(d, I.generators);

    std::vector<SparseVector> images;
    std::vector<int> derivation_vars;
    if (c.b.size() == 1) derivation_vars.push_back(c.b.min());
    if (c.b.empty())
        for (int v = 0; v < K.n_vertices(); ++v) derivation_vars.push_back(v);
    for (int v : derivation_vars) {
        std::vector<std::pair<int, mpz_class>> e;
        for (std::size_t i = 0; i < h.valid.size(); ++i)
            if (h.valid[i].contains(v)) e.emplace_back(static_cast<int>(i), 1);
        if (!e.empty()) images.push_back(make_sparse(std::move(e)));
    }
    check_image(h.syzygies, images, "t1_oracle");

    OracleDetail out;
    out.unknowns = h.valid.size();
    out.constraint_rank = h.rank;
    out.image_rank = rank_of(images);
    out.dim = out.unknowns - out.constraint_rank - out.image_rank;
    return out;
}

OracleDetail t2_oracle(const SimplicialComplex& K, const Multidegree& c, OracleCaps caps) {
    check_caps(c, caps);
    const Degree d{K, c.a_support(), c.b};
    const MonomialIdealPresentation I = minimal_nonfaces(K);
    const std::vector<VertexSet> F = candidates(d, I.generators);
    const std::size_t m = F.size();

    // Unknowns: ψ(σ_pq) for Taylor pairs with x^{lcm + c} ≠ 0.
    std::map<std::pair<std::size_t, std::size_t>, int> pair_index;
    for (std::size_t i = 0; i < m; ++i)
        for (std::size_t j = i + 1; j < m; ++j)
            if (d.valid(F[i] | F[j])) pair_index.emplace(std::make_pair(i, j), static_cast<int>(pair_index.size()));
    auto idx = [&](std::size_t i, std::size_t j) {
        auto it = pair_index.find({i, j});
        return it == pair_index.end() ? -1 : it->second;
    };

    std::vector<SparseVector> rows;
    // Vanishing on the Koszul relation x_p e_q − x_q e_p = ±x^{p∩q} σ_pq.
    for (const auto& [ij, k] : pair_index)
        if (d.valid_product(F[ij.first], F[ij.second])) rows.push_back(make_sparse({{k, 1}}));
    // Taylor triples: relations among the pairs.
    for (std::size_t i = 0; i < m; ++i)
        for (std::size_t j = i + 1; j < m; ++j)
            for (std::size_t l = j + 1; l < m; ++l) {
                if (!d.valid(F[i] | F[j] | F[l])) continue;
                std::vector<std::pair<int, mpz_class>> e;
                if (int k = idx(j, l); k >= 0) e.emplace_back(k, 1);
                if (int k = idx(i, l); k >= 0) e.emplace_back(k, -1);
                if (int k = idx(i, j); k >= 0) e.emplace_back(k, 1);
                if (!e.empty()) rows.push_back(make_sparse(std::move(e)));
            }

    // Hom(F, A)_c: e_p ↦ x^{p+c}, restricted to σ_pq = (lcm/q) e_q − (lcm/p) e_p.
    std::vector<SparseVector> images;
    for (std::size_t i = 0; i < m; ++i) {
        if (!d.valid(F[i])) continue;
        std::vector<std::pair<int, mpz_class>> e;
        for (std::size_t j = 0; j < m; ++j) {
            if (j == i) continue;
            const int k = j > i ? idx(i, j) : idx(j, i);
            if (k >= 0) e.emplace_back(k, j > i ? -1 : 1);
        }
        if (!e.empty()) images.push_back(make_sparse(std::move(e)));
    }
    check_image(rows, images, "t2_oracle");

    OracleDetail out;
    out.unknowns = pair_index.size();
    out.constraint_rank = rank_of(rows);
    out.image_rank = rank_of(images);
    out.dim = out.unknowns - out.constraint_rank - out.image_rank;
    return out;
}

std::size_t embedded_first_order_dim(const SimplicialComplex& K) {
    const MonomialIdealPresentation I = minimal_nonfaces(K);
    std::vector<VertexSet> bs;
    for (const auto& p : I.generators)
        for (const auto& b : subsets(p)) bs.push_back(b);
    std::sort(bs.begin(), bs.end());
    bs.erase(std::unique(bs.begin(), bs.end()), bs.end());

    std::size_t total = 0;
    for (const auto& b : bs) {
        const std::vector<int> free = (K.support() - b).to_vector();
        std::vector<int> exps(free.size(), 0);
        // Exponent vectors of total |b| on free vertices whose support is a face.
        auto rec = [&](auto&& self, std::size_t k, int left, VertexSet supp) -> void {
            if (k == free.size()) {
                if (left != 0) return;
                const Degree d{K, supp, b};
                const HomSpace h = hom_space(d, I.generators);
                total += h.valid.size() - h.rank;
                return;
            }
            for (int e = 0; e <= left; ++e) {
                const VertexSet s = e > 0 ? supp.with(free[k]) : supp;
                if (e > 0 && !K.contains(s)) break;
                self(self, k + 1, left - e, s);
            }
        };
        rec(rec, 0, b.size(), VertexSet{});
    }
    return total;
}

}  // namespace srdef
