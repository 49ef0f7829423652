#include "srdef/versal.hpp"

#include <algorithm>
#include <set>

#include "srdef/error.hpp"
#include "srdef/groebner.hpp"
#include "srdef/linalg.hpp"

namespace srdef {

namespace {

std::string tname(int i, int k) { return "t" + std::to_string(i) + "^(" + std::to_string(k) + ")"; }
std::string yname(int i) { return "y" + std::to_string(i); }

class Builder {
public:
    Builder(int n, int order, int cap) : n_(n), order_(order), cap_(cap) {
        std::vector<std::string> names;
        if (n == 3) {
            names.push_back("u");
            for (int i = 1; i <= 3; ++i) names.push_back(tname(i, 0));
        }
        if (n == 4) {
            names.push_back("u");
            names.push_back("v");
        }
        // For n = 6 the obstruction parameters come first, in the order that
        // makes the minors a Gröbner basis.
        if (n == 6)
            for (int i : {1, 3, 5, 4, 6, 2}) names.push_back(tname(i, 1));
        for (int k = 1; k <= cap; ++k)
            for (int i = 1; i <= n; ++i)
                if (!(n == 6 && k == 1)) names.push_back(tname(i, k));
        const std::size_t params = names.size();
        for (int i = 1; i <= n; ++i) names.push_back(yname(i));
        std::vector<bool> flags(names.size(), false);
        std::fill(flags.begin(), flags.begin() + static_cast<long>(params), true);
        ring_ = std::make_shared<const PolyRing>(std::move(names), std::move(flags));
    }

    const std::shared_ptr<const PolyRing>& ring() const { return ring_; }
    int wrap(int i) const { return ((i - 1) % n_ + n_) % n_ + 1; }

    Polynomial zero() const { return Polynomial(ring_); }
    Polynomial constant(const mpq_class& c) const { return Polynomial::constant(ring_, c); }
    Polynomial var(const std::string& name) const { return Polynomial::variable(ring_, ring_->index(name)); }
    Polynomial y(int i) const { return var(yname(wrap(i))); }
    Polynomial y(int i, int e) const {
        return e == 0 ? constant(1) : Polynomial::variable(ring_, ring_->index(yname(wrap(i))), e);
    }
    Polynomial t(int i, int k) const {
        if (k > cap_) return zero();
        return var(tname(wrap(i), k));
    }
    /// Σ_{k ≥ from} t_i^(k) y_i^{k − shift}
    Polynomial series(int i, int from, int shift) const {
        Polynomial r = zero();
        for (int k = from; k <= cap_; ++k) r += t(i, k) * y(i, k - shift);
        return r;
    }
    Polynomial prod(std::initializer_list<Polynomial> fs) const {
        Polynomial r = constant(1);
        for (const auto& f : fs) {
            r = Polynomial::mul_truncated(r, f, order_);
            if (r.is_zero()) break;
        }
        return r;
    }
    Polynomial trunc(const Polynomial& p) const { return p.truncated(order_); }
    int order() const { return order_; }

private:
    int n_, order_, cap_;
    std::shared_ptr<const PolyRing> ring_;
};

struct E6Context {
    Polynomial e, f, e2, f2, f3, ef, e_over_f;
    std::vector<Polynomial> s;  // s[1..6]
};

E6Context e6_context(const Builder& B) {
    E6Context c;
    c.s.assign(7, B.zero());
    for (int i = 1; i <= 6; ++i) c.s[static_cast<std::size_t>(i)] = B.series(i, 2, 2);
    Polynomial S = B.constant(1);
    for (int i = 1; i <= 6; ++i) S = Polynomial::mul_truncated(S, c.s[static_cast<std::size_t>(i)], B.order());
    // S has parameter degree ≥ 6, so x^k with 6k > order never survives.
    const int xorder = std::max(0, B.order() / 6);
    const std::vector<mpz_class> p = p_series(xorder);
    std::vector<mpz_class> p2 = p;
    p2[0] += 2;
    const std::vector<mpz_class> inv = series_inverse(p2, xorder);
    c.f = compose(p, S, B.order());
    c.e = compose(series_mul(p, inv, xorder), S, B.order());
    c.e_over_f = compose(inv, S, B.order());
    c.e2 = B.prod({c.e, c.e});
    c.f2 = B.prod({c.f, c.f});
    c.f3 = B.prod({c.f2, c.f});
    c.ef = B.prod({c.e, c.f});
    return c;
}

void add_equation(NormalForm& nf, std::vector<int> lifts, Polynomial p) {
    std::sort(lifts.begin(), lifts.end());
    nf.equations.push_back({std::move(lifts), std::move(p)});
}

NormalForm build(const Builder& B, int n) {
    NormalForm nf;
    nf.n = n;
    nf.ring = B.ring();
    auto y = [&](int i) { return B.y(i); };
    if (n == 3) {
        Polynomial eq = B.prod({y(1), y(2), y(3)}) + B.var("u");
        for (int i = 1; i <= 3; ++i) eq += B.prod({y(i), B.t(i, 0) + B.series(i, 1, 0)});
        add_equation(nf, {1, 2, 3}, B.trunc(eq));
    } else if (n == 4) {
        auto T = [&](int i) { return B.series(i, 1, 1); };
        add_equation(nf, {1, 3}, B.trunc(y(1) * y(3) + B.var("u") + y(2) * T(2) + y(4) * T(4)));
        add_equation(nf, {2, 4}, B.trunc(y(2) * y(4) + B.var("v") + y(1) * T(1) + y(3) * T(3)));
    } else if (n == 5) {
        auto T = [&](int i) { return B.series(B.wrap(i), 1, 1); };
        for (int i = 1; i <= 5; ++i)
            add_equation(nf, {B.wrap(i - 1), B.wrap(i + 1)},
                         B.trunc(y(i - 1) * y(i + 1) + y(i) * T(i) - B.prod({T(i - 2), T(i + 2)})));
    } else {
        const E6Context c = e6_context(B);
        auto s = [&](int i) { return c.s[static_cast<std::size_t>(B.wrap(i))]; };
        auto t = [&](int i) { return B.t(i, 1); };
        for (int i = 1; i <= 6; ++i) {
            Polynomial eq = y(i - 1) * y(i + 1) + B.prod({t(i) + s(i) * y(i), y(i)});
            eq += B.prod({s(i + 3), c.e2, t(i - 2), t(i + 2)});
            eq += B.prod({s(i + 3), c.ef, s(i + 2), t(i - 2), y(i + 2)});
            eq += B.prod({s(i + 3), c.ef, t(i + 2), s(i - 2), y(i - 2)});
            const Polynomial w = B.prod({c.e, t(i + 3)}) + B.prod({c.f, s(i + 3), y(i + 3)});
            eq -= B.prod({s(i - 2), s(i + 2), w, w});
            eq += B.prod({c.e2, c.f2, s(i - 2), s(i - 1), s(i + 1), s(i + 2), s(i + 3), t(i), t(i)});
            add_equation(nf, {B.wrap(i - 1), B.wrap(i + 1)}, B.trunc(eq));
        }
        for (int i = 1; i <= 3; ++i) {
            Polynomial eq = y(i) * y(i + 3) + B.prod({c.e, t(i + 1), t(i + 2)});
            eq += B.prod({c.e, t(i + 2), s(i + 1), y(i + 1)});
            eq += B.prod({c.e, t(i + 1), s(i + 2), y(i + 2)});
            eq += B.prod({c.f, s(i + 1), s(i + 2), y(i + 1), y(i + 2)});
            eq += B.prod({c.e, t(i - 2), s(i - 1), y(i - 1)});
            eq += B.prod({c.e, t(i - 1), s(i - 2), y(i - 2)});
            eq += B.prod({c.f, s(i - 1), s(i - 2), y(i - 1), y(i - 2)});
            eq -= B.prod({c.e2, c.f2, s(i - 2), s(i - 1), s(i + 1), s(i + 2), t(i), t(i + 3)});
            add_equation(nf, {i, i + 3}, B.trunc(eq));
        }
        const std::array<std::array<int, 3>, 2> m{{{1, 3, 5}, {4, 6, 2}}};
        for (int a = 0; a < 3; ++a)
            for (int b = a + 1; b < 3; ++b)
                nf.base_relations.push_back(t(m[0][static_cast<std::size_t>(a)]) * t(m[1][static_cast<std::size_t>(b)]) -
                                            t(m[0][static_cast<std::size_t>(b)]) * t(m[1][static_cast<std::size_t>(a)]));
    }
    return nf;
}

using Lifting = std::vector<std::pair<Polynomial, std::pair<int, int>>>;

std::vector<std::pair<std::string, Lifting>> e6_liftings(const Builder& B) {
    const E6Context c = e6_context(B);
    auto s = [&](int i) { return c.s[static_cast<std::size_t>(i)]; };
    auto t = [&](int i) { return B.t(i, 1); };
    auto y = [&](int i) { return B.y(i); };
    Lifting L1 = {
        {y(5) + B.prod({c.e, c.f3, s(2), s(3), s(4), s(1), s(6), t(5)}), {1, 3}},
        {-(y(1) + B.prod({c.e, c.f3, s(2), s(3), s(4), s(5), s(6), t(1)})), {3, 5}},
        {B.prod({s(4), s(6), B.prod({c.ef, t(5)}) + B.prod({c.f2, s(5), y(5)})}), {4, 6}},
        {-B.prod({s(2), s(6), B.prod({c.ef, t(1)}) + B.prod({c.f2, s(1), y(1)})}), {2, 6}},
        {-(B.prod({c.e, t(4)}) + B.prod({c.f, s(4), y(4)})), {1, 4}},
        {B.prod({c.e, t(2)}) + B.prod({c.f, s(2), y(2)}), {2, 5}},
    };
    Lifting L2 = {
        {y(6), {1, 3}},
        {B.prod({c.e, c.f2, s(2), s(3), s(4), s(5), t(4)}), {2, 4}},
        {-B.prod({B.prod({c.ef, t(2)}) + B.prod({c.f2, s(2), y(2)}), s(3), s(4), s(5)}), {3, 5}},
        {-B.prod({c.ef, s(4), s(5), t(6)}), {4, 6}},
        {B.prod({c.e, t(4), s(5)}), {1, 5}},
        {-(B.prod({c.e_over_f, t(2)}) + B.prod({s(2), y(2)})), {2, 6}},
        {B.prod({s(4), B.prod({c.e, t(5)}) + B.prod({c.f, s(5), y(5)})}), {1, 4}},
        {-y(1), {3, 6}},
    };
    return {{"L1", L1}, {"L2", L2}};
}

// Variable map of the index permutation sigma (1-based, sigma[i]).
std::vector<int> variable_map(const PolyRing& R, const std::array<int, 7>& sigma) {
    std::vector<int> map(static_cast<std::size_t>(R.size()));
    for (int v = 0; v < R.size(); ++v) {
        const std::string& name = R.name(v);
        if (name[0] == 'y') {
            map[static_cast<std::size_t>(v)] = R.index(yname(sigma[static_cast<std::size_t>(std::stoi(name.substr(1)))]));
        } else {
            const auto hat = name.find('^');
            const int i = std::stoi(name.substr(1, hat - 1));
            const int k = std::stoi(name.substr(hat + 2));
            map[static_cast<std::size_t>(v)] = R.index(tname(sigma[static_cast<std::size_t>(i)], k));
        }
    }
    return map;
}

std::vector<std::pair<std::string, std::array<int, 7>>> dihedral_group() {
    std::vector<std::pair<std::string, std::array<int, 7>>> g;
    for (int refl = 0; refl < 2; ++refl)
        for (int k = 0; k < 6; ++k) {
            std::array<int, 7> s{};
            for (int i = 1; i <= 6; ++i) {
                const int r = refl ? 2 - i : i;  // (2,6)(3,5) fixes 1 and 4
                s[static_cast<std::size_t>(i)] = ((r + k - 1) % 6 + 6) % 6 + 1;
            }
            g.push_back({"r^" + std::to_string(k) + (refl ? "·s" : ""), s});
        }
    return g;
}

RelationCheck check(const std::string& name, const NormalForm& nf, const Lifting& L, const std::vector<Polynomial>& basis) {
    Polynomial sum(nf.ring);
    for (const auto& [coef, pair] : L)
        sum += Polynomial::mul_truncated(coef, nf.equations[static_cast<std::size_t>(nf.equation_for(pair.first, pair.second))].poly, nf.order);
    if (!basis.empty()) sum = reduce(sum, basis);
    RelationCheck rc;
    rc.name = name;
    rc.passed = sum.is_zero();
    rc.residual_terms = sum.size();
    if (!rc.passed) rc.residual = sum.str();
    return rc;
}

}  // namespace

int NormalForm::equation_for(int a, int b) const {
    std::vector<int> key{std::min(a, b), std::max(a, b)};
    for (std::size_t i = 0; i < equations.size(); ++i)
        if (equations[i].lifts == key) return static_cast<int>(i);
    fail(ErrorCode::domain, "normal form has no equation lifting y" + std::to_string(a) + "y" + std::to_string(b));
}

NormalForm normal_form(int n, int order, int index_cap) {
    if (n < 3 || n > 6) fail(ErrorCode::unsupported, "normal forms exist for n = 3..6, got " + std::to_string(n));
    if (order < 1) fail(ErrorCode::usage, "normal_form: order must be at least 1");
    if (index_cap < 1) fail(ErrorCode::usage, "normal_form: index cap must be at least 1");
    const Builder B(n, order, index_cap);
    NormalForm nf = build(B, n);
    nf.order = order;
    nf.index_cap = index_cap;
    return nf;
}

std::vector<Polynomial> stanley_reisner_generators(const NormalForm& nf) {
    auto y = [&](int i) { return Polynomial::variable(nf.ring, nf.ring->index(yname(i))); };
    std::vector<Polynomial> out;
    if (nf.n == 3) return {y(1) * y(2) * y(3)};
    for (const auto& eq : nf.equations) out.push_back(y(eq.lifts[0]) * y(eq.lifts[1]));
    return out;
}

NormalFormVerification verify_normal_form_relations(int n, int order, VerifyOptions options) {
    const NormalForm nf = normal_form(n, order, options.index_cap);
    const Builder B(n, order, options.index_cap);
    NormalFormVerification v;
    v.n = n;
    v.order = order;
    v.index_cap = options.index_cap;

    std::vector<std::pair<std::string, Lifting>> liftings;
    if (n == 4) {
        liftings.push_back({"koszul", {{nf.equations[1].poly, {1, 3}}, {-nf.equations[0].poly, {2, 4}}}});
    } else if (n == 5) {
        // Rows of the skew matrix whose Pfaffians are the equations.
        auto T = [&](int i) { return B.series(B.wrap(i), 1, 1); };
        auto M = [&](int j, int k) -> Polynomial {
            const int d = ((k - j) % 5 + 5) % 5;
            if (d == 1) return B.y(j + 3);
            if (d == 2) return -T(j + 1);
            if (d == 4) return -B.y(k + 3);
            if (d == 3) return T(k + 1);
            return B.zero();
        };
        for (int row = 1; row <= 5; ++row) {
            Lifting L;
            for (int j = 1; j <= 5; ++j) {
                const Polynomial c = M(row, j);
                if (!c.is_zero()) L.push_back({c, {B.wrap(j - 1), B.wrap(j + 1)}});
            }
            liftings.push_back({"pfaffian-row-" + std::to_string(row), L});
        }
    } else if (n == 6) {
        liftings = e6_liftings(B);
    }
    if (options.mutate && !liftings.empty()) {
        auto& L = liftings.front().second;
        L.back().first = -L.back().first;
    }

    std::vector<Polynomial> basis;
    if (n == 6) {
        const GroebnerResult g = groebner_basis(nf.base_relations);
        basis = g.basis;
    }

    if (n != 6) {
        for (const auto& [name, L] : liftings) v.relations.push_back(check(name, nf, L, basis));
    } else {
        // Equivariance of the equations, then the orbit of both liftings.
        const auto group = dihedral_group();
        for (const auto& [gname, sigma] : group) {
            const std::vector<int> map = variable_map(*nf.ring, sigma);
            for (const auto& eq : nf.equations) {
                const int a = sigma[static_cast<std::size_t>(eq.lifts[0])], b = sigma[static_cast<std::size_t>(eq.lifts[1])];
                const Polynomial diff = eq.poly.permuted(map) - nf.equations[static_cast<std::size_t>(nf.equation_for(a, b))].poly;
                if (!reduce(diff, basis).is_zero()) v.equivariant = false;
            }
        }
        std::vector<std::vector<Polynomial>> seen;  // coefficient per equation
        auto key_less = [](const std::pair<int, Monomial>& a, const std::pair<int, Monomial>& b) {
            if (a.first != b.first) return a.first < b.first;
            return Monomial::compare(a.second, b.second) < 0;
        };
        std::map<std::pair<int, Monomial>, int, decltype(key_less)> columns(key_less);
        std::vector<SparseVector> free_parts;
        auto column = [&](int eq, const Monomial& m) {
            const int next = static_cast<int>(columns.size());
            return columns.emplace(std::make_pair(eq, m), next).first->second;
        };
        for (const auto& [lname, L] : liftings)
            for (const auto& [gname, sigma] : group) {
                const std::vector<int> map = variable_map(*nf.ring, sigma);
                Lifting image;
                std::vector<Polynomial> coeffs(nf.equations.size(), B.zero());
                for (const auto& [coef, pair] : L) {
                    const int a = sigma[static_cast<std::size_t>(pair.first)], b = sigma[static_cast<std::size_t>(pair.second)];
                    const Polynomial pc = coef.permuted(map);
                    image.push_back({pc, {a, b}});
                    coeffs[static_cast<std::size_t>(nf.equation_for(a, b))] += pc;
                }
                for (auto& c : coeffs) c = reduce(c, basis);
                std::vector<Polynomial> negated;
                for (const auto& c : coeffs) negated.push_back(-c);
                if (std::find(seen.begin(), seen.end(), coeffs) != seen.end() ||
                    std::find(seen.begin(), seen.end(), negated) != seen.end())
                    continue;
                seen.push_back(coeffs);
                v.relations.push_back(check(gname + "(" + lname + ")", nf, image, basis));
                std::vector<std::pair<int, mpz_class>> entries;
                mpz_class scale = 1;
                std::vector<Polynomial> free(coeffs.size());
                for (std::size_t e = 0; e < coeffs.size(); ++e) {
                    free[e] = coeffs[e].parameter_free();
                    for (const auto& [m, c] : free[e].terms()) scale = lcm(scale, mpz_class(c.get_den()));
                }
                for (std::size_t e = 0; e < coeffs.size(); ++e)
                    for (const auto& [m, c] : free[e].terms())
                        entries.emplace_back(column(static_cast<int>(e), m), mpz_class(c * scale));
                free_parts.push_back(make_sparse(std::move(entries)));
            }
        v.orbit_images = seen.size();
        v.orbit_rank = rank_of(free_parts);
    }
    v.passed = v.equivariant && std::all_of(v.relations.begin(), v.relations.end(), [](const RelationCheck& r) { return r.passed; });
    return v;
}

std::string to_string(Exactness e) {
    switch (e) {
        case Exactness::regular_degree6: return "exact (degree-6 regular triangulation)";
        case Exactness::no_adjacent_hexagons: return "exact (no two valency-6 vertices adjacent)";
        case Exactness::first_order_only: return "first-order-only";
    }
    return "first-order-only";
}

std::vector<int> canonical_cycle(const SimplicialComplex& C) {
    const std::vector<int> verts = C.support().to_vector();
    std::map<int, std::vector<int>> nb;
    for (const auto& e : C.faces(1)) {
        nb[e.min()].push_back(e.max());
        nb[e.max()].push_back(e.min());
    }
    for (const auto& [v, n] : nb)
        if (n.size() != 2) fail(ErrorCode::domain, "canonical_cycle: not a cycle");
    std::vector<int> order{verts.front()};
    int prev = verts.front();
    int cur = std::min(nb[prev][0], nb[prev][1]);
    while (cur != verts.front()) {
        order.push_back(cur);
        const int next = nb[cur][0] == prev ? nb[cur][1] : nb[cur][0];
        prev = cur;
        cur = next;
    }
    if (order.size() != verts.size()) fail(ErrorCode::domain, "canonical_cycle: not connected");
    return order;
}

namespace {

std::string edge_var(int i, int j) { return "t_{" + std::to_string(std::min(i, j)) + "," + std::to_string(std::max(i, j)) + "}"; }
std::string pair_name(char c, int i, int j) { return std::string(1, c) + "_{" + std::to_string(i) + "," + std::to_string(j) + "}"; }

struct SurfaceData {
    FaceCounts counts;
    std::map<int, std::vector<int>> cycles;  // canonical link cycle per vertex
};

SurfaceData surface_data(const SimplicialComplex& K) {
    const ManifoldCheck mc = is_closed_manifold(K);
    if (!mc.manifold || K.dimension() != 2) fail(ErrorCode::domain, "versal: complex is not a closed surface");
    SurfaceData d;
    d.counts = f_vector_and_counts(K);
    for (const auto& v : K.faces(0)) {
        const int nu = d.counts.valency.at(v);
        if (nu > 6)
            fail(ErrorCode::unsupported, "versal: vertex " + std::to_string(v.min()) + " has valency " + std::to_string(nu) + " > 6");
        d.cycles[v.min()] = canonical_cycle(link(K, v));
    }
    return d;
}

}  // namespace

VersalVariables versal_variables(const SimplicialComplex& K) {
    const SurfaceData d = surface_data(K);
    VersalVariables V;
    auto add = [&](const std::string& name, std::vector<std::string> aliases) {
        V.names.push_back(name);
        V.aliases[name] = name;
        for (auto& a : aliases) V.aliases[a] = name;
    };
    for (const auto& e : K.faces(1)) {
        add(edge_var(e.min(), e.max()), {pair_name('t', e.max(), e.min())});
        ++V.edges;
    }
    for (const auto& [i, cyc] : d.cycles) {
        if (cyc.size() != 3) continue;
        add("v_{" + std::to_string(i) + "}", {});
        std::vector<int> sorted = cyc;
        std::sort(sorted.begin(), sorted.end());
        for (int j : sorted) add(pair_name('v', i, j), {});
        ++V.valency3;
    }
    for (const auto& [i, cyc] : d.cycles) {
        if (cyc.size() != 4) continue;
        for (int k = 0; k < 2; ++k) {
            const int a = std::min(cyc[static_cast<std::size_t>(k)], cyc[static_cast<std::size_t>(k + 2)]);
            const int b = std::max(cyc[static_cast<std::size_t>(k)], cyc[static_cast<std::size_t>(k + 2)]);
            add(pair_name('u', i, a), {pair_name('u', i, b)});
        }
        ++V.valency4;
    }
    return V;
}

VersalIdeal versal_ideal(const SimplicialComplex& K) {
    const SurfaceData d = surface_data(K);
    VersalIdeal V;
    V.variables = versal_variables(K);
    V.ring = std::make_shared<const PolyRing>(V.variables.names, std::vector<bool>(V.variables.names.size(), true));
    auto var = [&](const std::string& name) { return Polynomial::variable(V.ring, V.ring->index(V.variables.aliases.at(name))); };

    bool all_six = true, adjacent_six = false;
    for (const auto& [i, cyc] : d.cycles) {
        if (cyc.size() != 6) {
            all_six = false;
            continue;
        }
        for (int j : cyc)
            if (d.cycles.at(j).size() == 6) adjacent_six = true;
        HexagonMatrix M;
        M.vertex = i;
        std::copy(cyc.begin(), cyc.end(), M.cycle.begin());
        const std::array<std::array<int, 3>, 2> pattern{{{0, 2, 4}, {3, 5, 1}}};
        for (int r = 0; r < 2; ++r)
            for (int c = 0; c < 3; ++c)
                M.entries[static_cast<std::size_t>(r)][static_cast<std::size_t>(c)] =
                    edge_var(i, cyc[static_cast<std::size_t>(pattern[static_cast<std::size_t>(r)][static_cast<std::size_t>(c)])]);
        for (int a = 0; a < 3; ++a)
            for (int b = a + 1; b < 3; ++b)
                V.generators.push_back(var(M.entries[0][static_cast<std::size_t>(a)]) * var(M.entries[1][static_cast<std::size_t>(b)]) -
                                       var(M.entries[0][static_cast<std::size_t>(b)]) * var(M.entries[1][static_cast<std::size_t>(a)]));
        V.matrices.push_back(M);
    }
    V.exactness = all_six ? Exactness::regular_degree6
                          : adjacent_six ? Exactness::first_order_only : Exactness::no_adjacent_hexagons;
    return V;
}

std::map<int, std::vector<FirstOrderEntry>> first_order_table(const SimplicialComplex& K) {
    const SurfaceData d = surface_data(K);
    const VersalVariables V = versal_variables(K);
    auto local = [](int j, int k) { return "t_" + std::to_string(j) + "^(" + std::to_string(k) + ")"; };
    std::map<int, std::vector<FirstOrderEntry>> table;
    for (const auto& [i, cyc] : d.cycles) {
        auto& rows = table[i];
        std::vector<int> nbrs = cyc;
        std::sort(nbrs.begin(), nbrs.end());
        const std::size_t nu = cyc.size();
        if (nu == 3) rows.push_back({"t^(-1)", "v_{" + std::to_string(i) + "}"});
        for (int j : nbrs) {
            if (nu == 3) rows.push_back({local(j, 0), pair_name('v', i, j)});
            if (nu == 4) rows.push_back({local(j, 0), V.aliases.at(pair_name('u', i, j))});
            rows.push_back({local(j, 1), edge_var(i, j)});
        }
        for (int j : nbrs) {
            const std::size_t nj = d.cycles.at(j).size();
            if (nj == 3) {
                rows.push_back({local(j, 2), pair_name('v', j, i)});
                rows.push_back({local(j, 3), "v_{" + std::to_string(j) + "}"});
            } else if (nj == 4) {
                rows.push_back({local(j, 2), V.aliases.at(pair_name('u', j, i))});
            }
        }
    }
    return table;
}

KrullResult krull_dimension(const VersalIdeal& V, bool force_groebner) {
    KrullResult r;
    const int n = V.ring->size();
    if (V.generators.empty()) {
        r.dimension = static_cast<std::size_t>(n);
        r.method = "zero-ideal";
        return r;
    }
    bool disjoint = true;
    std::set<std::string> used;
    for (const auto& M : V.matrices)
        for (const auto& row : M.entries)
            for (const auto& e : row)
                if (!used.insert(e).second) disjoint = false;
    if (disjoint && !force_groebner) {
        r.dimension = static_cast<std::size_t>(n) - 2 * V.matrices.size();
        r.method = "disjoint-matrices";
        return r;
    }
    const GroebnerResult g = groebner_basis(V.generators);
    std::vector<Monomial> lead;
    for (const auto& p : g.basis) lead.push_back(p.leading_monomial());
    r.dimension = monomial_ideal_dimension(lead, n);
    r.method = "groebner";
    r.basis_size = g.basis.size();
    return r;
}

std::size_t krull_lower_bound(const VersalIdeal& V) {
    const int n = V.ring->size();
    struct Binomial {
        Monomial a, b;
    };
    std::vector<Binomial> bins;
    std::vector<bool> used(static_cast<std::size_t>(n), false);
    for (const auto& g : V.generators) {
        const auto& t = g.terms();
        if (t.size() != 2 || t.begin()->second != -std::next(t.begin())->second)
            fail(ErrorCode::domain, "krull_lower_bound: generator is not a unit binomial");
        bins.push_back({t.begin()->first, std::next(t.begin())->first});
        for (const auto& m : {bins.back().a, bins.back().b})
            for (int v : m.support()) used[static_cast<std::size_t>(v)] = true;
    }
    std::vector<int> order;
    for (int v = 0; v < n; ++v)
        if (used[static_cast<std::size_t>(v)]) order.push_back(v);

    // zero[v]: -1 undecided, 0 nonzero, 1 zero.
    std::vector<int> zero(static_cast<std::size_t>(n), -1);
    for (int v = 0; v < n; ++v)
        if (!used[static_cast<std::size_t>(v)]) zero[static_cast<std::size_t>(v)] = 0;
    auto state = [&](const Monomial& m) {
        bool undecided = false;
        for (int v : m.support()) {
            if (zero[static_cast<std::size_t>(v)] == 1) return 1;
            if (zero[static_cast<std::size_t>(v)] == -1) undecided = true;
        }
        return undecided ? -1 : 0;
    };
    auto consistent = [&] {
        for (const auto& b : bins) {
            const int x = state(b.a), y = state(b.b);
            if (x != -1 && y != -1 && x != y) return false;
            if ((x == 1 && y == 0) || (x == 0 && y == 1)) return false;
        }
        return true;
    };
    std::size_t best = 0;
    int zeros = 0;
    auto dfs = [&](auto&& self, std::size_t k) -> void {
        if (static_cast<std::size_t>(n - zeros) <= best) return;
        if (k == order.size()) {
            // On this stratum every surviving binomial reads x^a = x^b.
            RankAccumulator acc;
            for (const auto& b : bins) {
                if (state(b.a) == 1) continue;
                std::vector<std::pair<int, mpz_class>> e;
                for (int v : b.a.support()) e.emplace_back(v, b.a.exponent(v));
                for (int v : b.b.support()) e.emplace_back(v, -b.b.exponent(v));
                acc.add(make_sparse(std::move(e)));
            }
            best = std::max(best, static_cast<std::size_t>(n - zeros) - acc.rank());
            return;
        }
        const auto v = static_cast<std::size_t>(order[k]);
        for (int z : {0, 1}) {
            zero[v] = z;
            zeros += z;
            if (consistent()) self(self, k + 1);
            zeros -= z;
            zero[v] = -1;
        }
    };
    dfs(dfs, 0);
    return best;
}

}  // namespace srdef
