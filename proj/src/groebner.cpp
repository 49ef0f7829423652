#include "srdef/groebner.hpp"

#include <algorithm>
#include <set>

#include "srdef/error.hpp"
#include "srdef/vertex_set.hpp"

namespace srdef {

Polynomial reduce(const Polynomial& f, const std::vector<Polynomial>& G) {
    Polynomial p = f;
    Polynomial r(f.ring());
    while (!p.is_zero()) {
        const Monomial lm = p.leading_monomial();
        const mpq_class lc = p.leading_coefficient();
        const Polynomial* divisor = nullptr;
        for (const auto& g : G)
            if (!g.is_zero() && g.leading_monomial().divides(lm)) {
                divisor = &g;
                break;
            }
        if (divisor) {
            p -= divisor->mul_term(lm / divisor->leading_monomial(), lc / divisor->leading_coefficient());
        } else {
            r.add_term(lm, lc);
            p.add_term(lm, -lc);
        }
    }
    return r;
}

Polynomial s_polynomial(const Polynomial& f, const Polynomial& g) {
    const Monomial l = f.leading_monomial().lcm(g.leading_monomial());
    return f.mul_term(l / f.leading_monomial(), 1 / f.leading_coefficient()) -
           g.mul_term(l / g.leading_monomial(), 1 / g.leading_coefficient());
}

bool is_groebner_basis(const std::vector<Polynomial>& G) {
    for (std::size_t i = 0; i < G.size(); ++i)
        for (std::size_t j = i + 1; j < G.size(); ++j)
            if (!reduce(s_polynomial(G[i], G[j]), G).is_zero()) return false;
    return true;
}

namespace {

std::vector<Polynomial> interreduce(std::vector<Polynomial> G) {
    // Drop elements whose leading monomial is divisible by another's.
    std::sort(G.begin(), G.end(), [](const Polynomial& a, const Polynomial& b) {
        return Monomial::compare(a.leading_monomial(), b.leading_monomial()) < 0;
    });
    std::vector<Polynomial> kept;
    for (const auto& g : G) {
        bool redundant = false;
        for (const auto& k : kept)
            if (k.leading_monomial().divides(g.leading_monomial())) {
                redundant = true;
                break;
            }
        if (!redundant) kept.push_back(g);
    }
    for (std::size_t i = 0; i < kept.size(); ++i) {
        std::vector<Polynomial> others;
        for (std::size_t j = 0; j < kept.size(); ++j)
            if (j != i) others.push_back(kept[j]);
        const Polynomial lead = Polynomial::term(kept[i].ring(), kept[i].leading_monomial(), kept[i].leading_coefficient());
        kept[i] = (lead + reduce(kept[i] - lead, others)).monic();
    }
    return kept;
}

}  // namespace

GroebnerResult groebner_basis(const std::vector<Polynomial>& generators, GroebnerOptions options) {
    GroebnerResult res;
    std::vector<Polynomial> G;
    for (const auto& g : generators) {
        Polynomial h = reduce(g, G);
        if (!h.is_zero()) G.push_back(h.monic());
    }

    auto lcm_of = [&](std::size_t i, std::size_t j) { return G[i].leading_monomial().lcm(G[j].leading_monomial()); };
    struct Pair {
        Monomial lcm;
        std::size_t i, j;
    };
    auto cmp = [](const Pair& a, const Pair& b) {
        const int c = Monomial::compare(a.lcm, b.lcm);
        if (c != 0) return c < 0;
        return std::make_pair(a.i, a.j) < std::make_pair(b.i, b.j);
    };
    std::set<Pair, decltype(cmp)> pending(cmp);
    std::set<std::pair<std::size_t, std::size_t>> open;
    for (std::size_t j = 0; j < G.size(); ++j)
        for (std::size_t i = 0; i < j; ++i) {
            pending.insert({lcm_of(i, j), i, j});
            open.insert({i, j});
        }

    std::size_t considered = 0;
    while (!pending.empty()) {
        const Pair pr = *pending.begin();
        pending.erase(pending.begin());
        open.erase({pr.i, pr.j});
        if (++considered > options.max_pairs)
            fail(ErrorCode::resource, "groebner: pair budget exceeded (" + std::to_string(options.max_pairs) + ")");

        if (G[pr.i].leading_monomial().coprime(G[pr.j].leading_monomial())) {
            ++res.product_skips;
            continue;
        }
        bool chain = false;
        for (std::size_t k = 0; k < G.size() && !chain; ++k) {
            if (k == pr.i || k == pr.j) continue;
            if (!G[k].leading_monomial().divides(pr.lcm)) continue;
            const auto ik = std::make_pair(std::min(pr.i, k), std::max(pr.i, k));
            const auto jk = std::make_pair(std::min(pr.j, k), std::max(pr.j, k));
            if (!open.count(ik) && !open.count(jk)) chain = true;
        }
        if (chain) {
            ++res.chain_skips;
            continue;
        }

        ++res.pairs_reduced;
        Polynomial h = reduce(s_polynomial(G[pr.i], G[pr.j]), G);
        if (h.is_zero()) continue;
        G.push_back(h.monic());
        if (G.size() > options.max_basis)
            fail(ErrorCode::resource, "groebner: basis size budget exceeded (" + std::to_string(options.max_basis) + ")");
        const std::size_t n = G.size() - 1;
        for (std::size_t i = 0; i < n; ++i) {
            pending.insert({lcm_of(i, n), i, n});
            open.insert({i, n});
        }
    }

    res.basis = interreduce(std::move(G));
    res.self_check = is_groebner_basis(res.basis);
    if (!res.self_check) fail(ErrorCode::domain, "groebner: S-polynomial self-check failed");
    return res;
}

std::size_t monomial_ideal_dimension(const std::vector<Monomial>& generators, int nvars) {
    if (nvars > kMaxVertices) fail(ErrorCode::capacity, "monomial_ideal_dimension: too many variables");
    std::vector<VertexSet> edges;
    for (const auto& m : generators) edges.push_back(VertexSet(m.support()));
    if (std::any_of(edges.begin(), edges.end(), [](const VertexSet& e) { return e.empty(); })) return 0;
    std::sort(edges.begin(), edges.end());
    std::vector<VertexSet> minimal;
    for (const auto& e : edges)
        if (std::none_of(minimal.begin(), minimal.end(), [&](const VertexSet& m) { return m.is_subset_of(e); }))
            minimal.push_back(e);

    int best = nvars;
    auto search = [&](auto&& self, VertexSet chosen) -> void {
        if (chosen.size() >= best) return;
        const VertexSet* open_edge = nullptr;
        for (const auto& e : minimal)
            if (!e.intersects(chosen)) {
                open_edge = &e;
                break;
            }
        if (!open_edge) {
            best = chosen.size();
            return;
        }
        // Lower bound: disjoint uncovered edges each need their own vertex.
        VertexSet used;
        int need = 0;
        for (const auto& e : minimal)
            if (!e.intersects(chosen) && !e.intersects(used)) {
                used |= e;
                ++need;
            }
        if (chosen.size() + need >= best) return;
        open_edge->for_each([&](int v) { self(self, chosen.with(v)); });
    };
    search(search, VertexSet{});
    return static_cast<std::size_t>(nvars - best);
}

}  // namespace srdef
