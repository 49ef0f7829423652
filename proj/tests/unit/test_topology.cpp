#include <random>

#include "doctest.h"
#include "corpus.hpp"
#include "srdef/topology.hpp"

using namespace srdef;

namespace {

std::shared_ptr<const SimplicialComplex> share(const SimplicialComplex& K) {
    return std::make_shared<const SimplicialComplex>(K);
}

// Number of degree-m monomials whose support is a face, by direct enumeration.
long long monomial_count(const SimplicialComplex& K, int m) {
    const int n = K.n_vertices();
    long long count = 0;
    std::vector<int> e(static_cast<std::size_t>(n), 0);
    auto rec = [&](auto&& self, int v, int left) -> void {
        if (v == n) {
            if (left != 0) return;
            VertexSet s;
            for (int i = 0; i < n; ++i)
                if (e[static_cast<std::size_t>(i)] > 0) s.insert(i);
            count += K.contains(s);
            return;
        }
        for (int k = 0; k <= left; ++k) {
            e[static_cast<std::size_t>(v)] = k;
            self(self, v + 1, left - k);
        }
        e[static_cast<std::size_t>(v)] = 0;
    };
    rec(rec, 0, m);
    return count;
}

}  // namespace

TEST_CASE("homology of small complexes") {
    auto h = homology_dims(named_complex("cycle:5"), true);
    CHECK(h.at(-1) == 0);
    CHECK(h.at(0) == 0);
    CHECK(h.at(1) == 1);
    h = homology_dims(named_complex("torus:7"), true);
    CHECK(h.at(0) == 0);
    CHECK(h.at(1) == 2);
    CHECK(h.at(2) == 1);
    h = homology_dims(SimplicialComplex::void_complex(), true);
    CHECK(h.at(-1) == 1);
    h = homology_dims(corpus::rp2(), false);
    CHECK(h.dims == std::vector<std::size_t>{1, 0, 0});
    h = homology_dims(named_complex("cyclic4:8"), false);
    CHECK(h.dims == std::vector<std::size_t>{1, 0, 0, 1});
}

TEST_CASE("chain complexes: boundary squares to zero, Euler characteristic") {
    for (const auto& [name, K] : corpus::all()) {
        CAPTURE(name);
        for (bool reduced : {false, true}) {
            auto C = simplicial_chain_complex(K, reduced);
            CHECK(C.boundary_squares_to_zero());
        }
        const auto counts = f_vector_and_counts(K);
        CHECK(homology_dims(K, false).euler() == counts.euler);
        CHECK(homology_dims(K, true).euler() == counts.euler - 1);
    }
    CHECK_THROWS_AS(ChainComplex({{0, 1}, {0}, {1}, {0, 1, 2}}), Error);
}

TEST_CASE("order complexes") {
    for (const auto& [name, K] : corpus::all()) {
        if (K.face_count() > 129) continue;
        CAPTURE(name);
        auto shared = share(K);
        std::vector<VertexSet> nonempty;
        for (const auto& f : K.all_faces())
            if (!f.empty()) nonempty.push_back(f);
        UpClosedFamily Y(shared, nonempty);
        auto sd = order_complex(Y);
        CHECK(homology_dims(sd, true) == homology_dims(K, true));

        UpClosedFamily all(shared, K.all_faces());
        auto coned = homology_dims(order_complex(all), true);
        for (auto d : coned.dims) CHECK(d == 0);

        for (const auto& f : K.faces(0)) {
            auto st = UpClosedFamily::generated_by(shared, {f});
            auto hs = homology_dims(order_complex(st), true);
            for (auto d : hs.dims) CHECK(d == 0);
        }
    }
    auto K = share(named_complex("cycle:4"));
    CHECK_THROWS_AS(UpClosedFamily(K, {VertexSet{0}}), Error);
    CHECK_THROWS_AS(order_complex(UpClosedFamily(share(named_complex("simplex:7")),
                                                 named_complex("simplex:7").all_faces())),
                    Error);
}

TEST_CASE("pair cohomology") {
    auto E4 = share(named_complex("cycle:4"));
    UpClosedFamily U(E4, E4->all_faces());
    UpClosedFamily none(E4, {});
    CHECK(pair_cohomology_dims(U, none, false).at(0) == 1);
    CHECK(pair_cohomology_dims(U, none, true).at(0) == 0);
    for (auto d : pair_cohomology_dims(U, U, false).dims) CHECK(d == 0);
    CHECK(pair_cohomology_dims(none, none, true).at(-1) == 1);
    UpClosedFamily small(E4, {VertexSet{0, 1}});
    CHECK_THROWS_AS(pair_cohomology_dims(small, U, false), Error);

    std::mt19937 rng(2024);
    int checked = 0;
    for (int trial = 0; checked < 50 && trial < 500; ++trial) {
        const auto all = corpus::all();
        const auto& K = all[rng() % all.size()].second;
        if (K.face_count() > 120) continue;
        auto shared = share(K);
        const auto faces = K.all_faces();
        std::vector<VertexSet> gens;
        for (int g = 0; g < 3; ++g) gens.push_back(faces[rng() % faces.size()]);
        auto Uf = UpClosedFamily::generated_by(shared, gens);
        std::vector<VertexSet> sub;
        for (const auto& f : Uf.members())
            if (rng() % 3 == 0) sub.push_back(f);
        auto Vf = UpClosedFamily::generated_by(shared, sub);
        const long long pair = pair_cohomology_dims(Uf, Vf, false).euler();
        const long long u = pair_cohomology_dims(Uf, none.ambient_ptr() == shared ? none : UpClosedFamily(shared, {}), false).euler();
        const long long v = pair_cohomology_dims(Vf, UpClosedFamily(shared, {}), false).euler();
        CHECK(pair == u - v);
        ++checked;
    }
    CHECK(checked == 50);
}

TEST_CASE("orientability and duality") {
    CHECK(is_orientable(named_complex("torus:7")));
    CHECK(is_orientable(named_complex("icosahedron")));
    CHECK(is_orientable(named_complex("cyclic4:8")));
    CHECK_FALSE(is_orientable(corpus::rp2()));
    CHECK_THROWS_AS(is_orientable(named_complex("chain:3")), Error);
    for (const auto& [name, K] : corpus::manifolds()) {
        CAPTURE(name);
        if (!is_orientable(K)) continue;
        auto h = homology_dims(K, false);
        const int n = K.dimension();
        for (int i = 0; i <= n; ++i) CHECK(h.at(i) == h.at(n - i));
    }
}

TEST_CASE("local cohomology") {
    auto S0 = named_complex("boundary-simplex:1");
    CHECK(local_cohomology_dim(S0, 1, {-1, 0}) == 1);
    CHECK(local_cohomology_dim(S0, 1, {1, 0}) == 0);
    auto E4 = named_complex("cycle:4");
    CHECK(local_cohomology_dim(E4, 1, {0, 0, 0, 0}) == 0);
    CHECK(local_cohomology_dim(E4, 2, {0, 0, 0, 0}) == 1);
    CHECK(local_cohomology_dim(E4, 2, {-1, 0, -1, 0}) == 0);
    CHECK(local_cohomology_dim(E4, 2, {-2, 0, 0, 0}) == 1);
    CHECK(local_cohomology_dim(E4, 1, {-2, 0, 0, 0}) == 0);
    // Cohen-Macaulay spheres: only the top local cohomology survives.
    auto ico = named_complex("icosahedron");
    std::vector<int> c(12, 0);
    c[0] = -1;
    CHECK(local_cohomology_dim(ico, 3, c) == 1);
    CHECK(local_cohomology_dim(ico, 2, c) == 0);
}

TEST_CASE("twisted structure sheaf") {
    auto E4 = named_complex("cycle:4");
    auto h = twisted_structure_sheaf_cohomology(E4, 0);
    CHECK(h == std::vector<mpz_class>{1, 1});
    h = twisted_structure_sheaf_cohomology(E4, 1);
    CHECK(h[0] == 4);
    CHECK(h[1] == 0);
    CHECK(twisted_structure_sheaf_cohomology(named_complex("boundary-simplex:2"), 2)[0] == 6);
    for (const char* id : {"boundary-simplex:2", "cycle:5", "octahedron", "chain:3"})
        for (int m = 1; m <= 4; ++m) {
            CAPTURE(id);
            CAPTURE(m);
            auto K = named_complex(id);
            CHECK(twisted_structure_sheaf_cohomology(K, m)[0] == mpz_class(static_cast<long>(monomial_count(K, m))));
        }
    CHECK_THROWS_AS(twisted_structure_sheaf_cohomology(E4, -1), Error);
}
