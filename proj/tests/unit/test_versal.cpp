#include <algorithm>
#include <set>

#include "doctest.h"
#include "corpus.hpp"
#include "srdef/cotangent.hpp"
#include "srdef/error.hpp"
#include "srdef/versal.hpp"

using namespace srdef;

namespace {

Polynomial y(const NormalForm& nf, int i) { return Polynomial::variable(nf.ring, nf.ring->index("y" + std::to_string(i))); }
Polynomial t(const NormalForm& nf, int i, int k) {
    return Polynomial::variable(nf.ring, nf.ring->index("t" + std::to_string(i) + "^(" + std::to_string(k) + ")"));
}

int wrap(int i, int n) { return ((i - 1) % n + n) % n + 1; }

std::set<std::string> minors_up_to_sign(const VersalIdeal& V, std::size_t from, std::size_t count) {
    std::set<std::string> out;
    for (std::size_t i = from; i < from + count; ++i) {
        const Polynomial& g = V.generators[i];
        out.insert(g.leading_coefficient() > 0 ? g.str() : (-g).str());
    }
    return out;
}

}  // namespace

TEST_CASE("normal forms specialise to the Stanley-Reisner ideal") {
    const std::map<int, std::size_t> counts{{3, 1}, {4, 2}, {5, 5}, {6, 9}};
    for (const auto& [n, c] : counts) {
        CAPTURE(n);
        const NormalForm nf = normal_form(n, 4);
        REQUIRE(nf.equations.size() == c);
        const auto gens = stanley_reisner_generators(nf);
        REQUIRE(gens.size() == c);
        for (std::size_t i = 0; i < c; ++i) CHECK(nf.equations[i].poly.parameter_free() == gens[i]);
        if (n >= 4)
            for (const auto& eq : nf.equations) {
                const int d = (eq.lifts[1] - eq.lifts[0] + n) % n;
                CHECK(d != 1);
                CHECK(d != n - 1);
            }
    }
    CHECK_THROWS_AS(normal_form(7, 2), Error);
    CHECK_THROWS_AS(normal_form(5, 0), Error);
}

TEST_CASE("E4 and E5 first-order terms") {
    const NormalForm e4 = normal_form(4, 1, 1);
    const Polynomial u = Polynomial::variable(e4.ring, e4.ring->index("u"));
    CHECK(e4.equations[0].poly == y(e4, 1) * y(e4, 3) + u + y(e4, 2) * t(e4, 2, 1) + y(e4, 4) * t(e4, 4, 1));

    const NormalForm e5 = normal_form(5, 2, 1);
    // F lifting y_5y_2 is the equation of index i = 1.
    const auto& F = e5.equations[static_cast<std::size_t>(e5.equation_for(5, 2))].poly;
    CHECK(F == y(e5, 5) * y(e5, 2) + y(e5, 1) * t(e5, 1, 1) - t(e5, 4, 1) * t(e5, 3, 1));
}

TEST_CASE("relation liftings vanish for n = 3, 4, 5 up to order 10") {
    for (int n = 3; n <= 5; ++n)
        for (int N = 1; N <= 10; ++N) {
            CAPTURE(n);
            CAPTURE(N);
            const auto v = verify_normal_form_relations(n, N);
            CHECK(v.passed);
            CHECK(v.relations.size() == (n == 3 ? 0u : n == 4 ? 1u : 5u));
        }
}

TEST_CASE("E6 relations vanish modulo the minors") {
    for (int N = 1; N <= 6; ++N) {
        CAPTURE(N);
        const auto v = verify_normal_form_relations(6, N);
        CHECK(v.passed);
        CHECK(v.equivariant);
        CHECK(v.orbit_images == 18);
        CHECK(v.orbit_rank == 16);
        CHECK(v.relations.size() == 18);
        for (const auto& r : v.relations) CHECK_MESSAGE(r.passed, r.name, " ", r.residual);
    }
}

TEST_CASE("a mutated lifting is detected") {
    for (int n = 4; n <= 6; ++n) {
        CAPTURE(n);
        const auto v = verify_normal_form_relations(n, 4, {4, true});
        CHECK_FALSE(v.passed);
        CHECK(std::any_of(v.relations.begin(), v.relations.end(), [](const RelationCheck& r) { return !r.passed && r.residual_terms > 0; }));
    }
}

TEST_CASE("E6 with all s_i = 0 gives the torus equations") {
    const NormalForm nf = normal_form(6, 6, 1);
    for (int j = 1; j <= 6; ++j) {
        CAPTURE(j);
        const auto& F = nf.equations[static_cast<std::size_t>(nf.equation_for(wrap(j - 1, 6), wrap(j + 1, 6)))].poly;
        CHECK(F == y(nf, wrap(j - 1, 6)) * y(nf, wrap(j + 1, 6)) + t(nf, j, 1) * y(nf, j));
    }
    for (int j = 1; j <= 3; ++j) {
        CAPTURE(j);
        const auto& F = nf.equations[static_cast<std::size_t>(nf.equation_for(j, j + 3))].poly;
        CHECK(F == y(nf, j) * y(nf, j + 3) - t(nf, j + 1, 1) * t(nf, j + 2, 1));
    }
}

TEST_CASE("versal variables count dim T1_{A,0}") {
    int checked = 0;
    for (auto& [name, K] : corpus::manifolds()) {
        if (K.dimension() != 2) continue;
        const auto counts = f_vector_and_counts(K);
        bool small = true;
        for (const auto& v : K.faces(0)) small = small && counts.valency.at(v) <= 6;
        if (!small) continue;
        CAPTURE(name);
        const auto V = versal_variables(K);
        CHECK(V.names.size() == degree_zero_totals(K, 2, false).t1_total);
        CHECK(V.names.size() == V.edges + 4 * V.valency3 + 2 * V.valency4);
        ++checked;
    }
    CHECK(checked >= 6);
    CHECK(versal_variables(named_complex("suspension:cycle:6")).names.size() == 30);
    CHECK(versal_variables(named_complex("torus:7")).names.size() == 21);
    CHECK(versal_variables(named_complex("icosahedron")).names.size() == 30);

    const auto O = versal_variables(named_complex("octahedron"));
    CHECK(O.valency4 == 6);
    for (const auto& [alias, canonical] : O.aliases) {
        CHECK(std::find(O.names.begin(), O.names.end(), canonical) != O.names.end());
        if (alias[0] == 't') {
            const auto comma = alias.find(',');
            const int i = std::stoi(alias.substr(3, comma - 3)), j = std::stoi(alias.substr(comma + 1));
            CHECK(canonical == "t_{" + std::to_string(std::min(i, j)) + "," + std::to_string(std::max(i, j)) + "}");
        }
    }

    CHECK_THROWS_AS(versal_variables(named_complex("suspension:cycle:7")), Error);
    CHECK_THROWS_AS(versal_variables(named_complex("boundary-simplex:4")), Error);
}

TEST_CASE("hexagon matrices") {
    const auto S = versal_ideal(named_complex("suspension:cycle:6"));
    REQUIRE(S.matrices.size() == 2);
    using Rows = std::array<std::array<std::string, 3>, 2>;
    CHECK(S.matrices[0].entries == Rows{{{"t_{0,1}", "t_{0,3}", "t_{0,5}"}, {"t_{0,4}", "t_{0,6}", "t_{0,2}"}}});
    CHECK(S.matrices[1].entries == Rows{{{"t_{1,7}", "t_{3,7}", "t_{5,7}"}, {"t_{4,7}", "t_{6,7}", "t_{2,7}"}}});
    CHECK(S.generators.size() == 6);
    CHECK(S.exactness == Exactness::no_adjacent_hexagons);

    // Torus: [[t_{i,i+1}, t_{i,i+2}, t_{i,i−3}], [t_{i,i−1}, t_{i,i−2}, t_{i,i+3}]] up to row and column order.
    const auto T = versal_ideal(named_complex("torus:7"));
    REQUIRE(T.matrices.size() == 7);
    CHECK(T.exactness == Exactness::regular_degree6);
    for (std::size_t k = 0; k < 7; ++k) {
        const int i = T.matrices[k].vertex;
        auto e = [&](int d) {
            const int j = ((i + d) % 7 + 7) % 7;
            return "t_{" + std::to_string(std::min(i, j)) + "," + std::to_string(std::max(i, j)) + "}";
        };
        std::vector<std::array<std::string, 2>> expected{{e(1), e(-1)}, {e(2), e(-2)}, {e(-3), e(3)}};
        std::vector<std::array<std::string, 2>> got;
        for (std::size_t c = 0; c < 3; ++c) got.push_back({T.matrices[k].entries[0][c], T.matrices[k].entries[1][c]});
        auto normalise = [](std::vector<std::array<std::string, 2>> cols, bool swap) {
            for (auto& c : cols)
                if (swap) std::swap(c[0], c[1]);
            std::sort(cols.begin(), cols.end());
            return cols;
        };
        CAPTURE(i);
        CHECK((normalise(got, false) == normalise(expected, false) || normalise(got, true) == normalise(expected, false)));
        CHECK(minors_up_to_sign(T, 3 * k, 3).size() == 3);
    }

    CHECK(versal_ideal(named_complex("icosahedron")).generators.empty());
    CHECK(versal_ideal(named_complex("torus:8")).exactness == Exactness::regular_degree6);
    // ∂C(7,3): the two valency-6 vertices 0 and 6 are adjacent.
    const auto C = versal_ideal(named_complex("cyclic3:7"));
    CHECK(C.matrices.size() == 2);
    CHECK(C.exactness == Exactness::first_order_only);
}

TEST_CASE("canonical cycle") {
    CHECK(canonical_cycle(named_complex("cycle:6")) == std::vector<int>{0, 1, 2, 3, 4, 5});
    const auto K = named_complex("suspension:cycle:6");
    CHECK(canonical_cycle(link(K, VertexSet{0})) == std::vector<int>{1, 2, 3, 4, 5, 6});
    CHECK_THROWS_AS(canonical_cycle(named_complex("chain:3")), Error);
}

TEST_CASE("Krull dimension of versal bases") {
    const auto S = versal_ideal(named_complex("suspension:cycle:6"));
    const auto fast = krull_dimension(S);
    CHECK(fast.dimension == 26);
    CHECK(fast.method == "disjoint-matrices");
    const auto slow = krull_dimension(S, true);
    CHECK(slow.dimension == 26);
    CHECK(slow.method == "groebner");
    CHECK(krull_lower_bound(S) == 26);

    const auto T = versal_ideal(named_complex("torus:7"));
    const auto kt = krull_dimension(T);
    CHECK(kt.method == "groebner");
    CHECK(kt.dimension == krull_lower_bound(T));
    CHECK(kt.dimension == 9);

    const auto I = versal_ideal(named_complex("icosahedron"));
    CHECK(krull_dimension(I).dimension == 30);
    CHECK(krull_lower_bound(I) == 30);
}

TEST_CASE("first-order table") {
    const auto T = first_order_table(named_complex("torus:7"));
    CHECK(T.size() == 7);
    for (const auto& [i, rows] : T) {
        CHECK(rows.size() == 6);
        for (const auto& r : rows) {
            const int j = std::stoi(r.local.substr(2));
            CHECK(r.local == "t_" + std::to_string(j) + "^(1)");
            CHECK(r.global == "t_{" + std::to_string(std::min(i, j)) + "," + std::to_string(std::max(i, j)) + "}");
        }
    }

    const auto B = first_order_table(named_complex("boundary-simplex:3"));
    CHECK(B.at(0).front().local == "t^(-1)");
    CHECK(B.at(0).front().global == "v_{0}");

    // Apex 7 of ΣE6: valency-4 neighbours j contribute t_j^(2) ↦ u_{j,7} = u_{j,0}.
    const auto S = first_order_table(named_complex("suspension:cycle:6"));
    bool found = false;
    for (const auto& r : S.at(7))
        if (r.local == "t_3^(2)") {
            CHECK(r.global == "u_{3,0}");
            found = true;
        }
    CHECK(found);
    const auto V = versal_variables(named_complex("suspension:cycle:6"));
    for (const auto& [i, rows] : S)
        for (const auto& r : rows) CHECK(std::find(V.names.begin(), V.names.end(), r.global) != V.names.end());
}
