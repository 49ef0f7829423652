// One PASS/FAIL line per acceptance criterion. Exit status is the number of
// failed criteria.

#include <atomic>
#include <chrono>
#include <cstdio>
#include <functional>
#include <mutex>
#include <sstream>
#include <thread>

#include "../unit/corpus.hpp"
#include "srdef/cotangent.hpp"
#include "srdef/groebner.hpp"
#include "srdef/oracle.hpp"
#include "srdef/topology.hpp"
#include "srdef/versal.hpp"

using namespace srdef;

namespace {

using Clock = std::chrono::steady_clock;

double seconds_since(Clock::time_point t0) { return std::chrono::duration<double>(Clock::now() - t0).count(); }

struct Outcome {
    bool pass = true;
    std::ostringstream detail;
    std::vector<std::string> failures;

    void require(bool ok, const std::string& what) {
        if (!ok) {
            pass = false;
            failures.push_back(what);
        }
    }
    std::string str() const {
        std::string s = detail.str();
        for (std::size_t i = 0; i < failures.size(); ++i) s += (i ? "; " : " | failed: ") + failures[i];
        return s;
    }
};

template <class F>
void parallel_for(std::size_t n, F&& f) {
    std::atomic<std::size_t> next{0};
    std::vector<std::thread> pool;
    const unsigned w = std::max(1u, std::thread::hardware_concurrency());
    for (unsigned t = 0; t < w; ++t)
        pool.emplace_back([&] {
            for (std::size_t i; (i = next++) < n;) f(i);
        });
    for (auto& t : pool) t.join();
}

// 1. Sizes of B(K).
Outcome table_of_b_sets() {
    Outcome o;
    const std::vector<std::pair<std::string, std::size_t>> rows{
        {"boundary-simplex:1", 1}, {"boundary-simplex:2", 4}, {"cycle:4", 2},  {"boundary-simplex:3", 11},
        {"suspension:cycle:3", 5}, {"suspension:cycle:4", 3}, {"suspension:cycle:5", 1},
        {"suspension:cycle:6", 1}, {"cyclic3:6", 1},          {"cyclic3:7", 1}};
    double slowest = 0;
    for (const auto& [id, expected] : rows) {
        const auto K = named_complex(id);
        const auto t0 = Clock::now();
        const std::size_t got = b_set(K).size();
        const double s = seconds_since(t0);
        slowest = std::max(slowest, s);
        o.detail << id << "=" << got << " ";
        o.require(got == expected, id + " expected " + std::to_string(expected));
        o.require(s < 1.0, id + " took longer than 1 s");
    }
    o.detail << "(slowest " << slowest << " s)";
    return o;
}

// 2. Degree-0 obstruction space of the cyclic 4-polytope with 8 vertices.
Outcome cyclic_obstructions() {
    Outcome o;
    const auto t0 = Clock::now();
    const auto s = degree_zero_totals(named_complex("cyclic4:8"));
    const double secs = seconds_since(t0);
    const auto edges = s.t2_by_face_dim.count(1) ? s.t2_by_face_dim.at(1) : 0;
    const auto verts = s.t2_by_face_dim.count(0) ? s.t2_by_face_dim.at(0) : 0;
    o.detail << "dim T2_A,0 = " << s.t2_total << " = " << edges << " (edges) + " << verts << " (vertices), " << secs << " s";
    o.require(s.t2_total == 64, "total 64");
    o.require(edges == 24 && verts == 40, "breakdown 24 + 40");
    o.require(secs < 60, "runtime < 60 s");
    return o;
}

// All exponent vectors supported exactly on `a` with total ≤ max_total.
void exponent_vectors(const VertexSet& a, int max_total, const std::function<void(const std::vector<int>&)>& f) {
    const std::vector<int> vs = a.to_vector();
    if (vs.empty()) {
        f({});
        return;
    }
    std::vector<int> e(vs.size(), 1);
    auto rec = [&](auto&& self, std::size_t k, int left) -> void {
        if (k == vs.size()) {
            std::vector<int> c(static_cast<std::size_t>(vs.back() + 1), 0);
            for (std::size_t i = 0; i < vs.size(); ++i) c[static_cast<std::size_t>(vs[i])] = e[i];
            f(c);
            return;
        }
        for (int x = 1; x <= 1 + left; ++x) {
            e[k] = x;
            self(self, k + 1, left - (x - 1));
        }
        e[k] = 1;
    };
    if (static_cast<int>(vs.size()) <= max_total) rec(rec, 0, max_total - static_cast<int>(vs.size()));
}

// 3. Surface formulas = enumeration + h², and enumeration = oracle piecewise.
Outcome triple_agreement() {
    Outcome o;
    std::size_t pieces = 0, nonzero = 0;
    for (const std::string id : {"boundary-simplex:3", "octahedron", "icosahedron", "torus:7", "cyclic3:7"}) {
        const auto K = named_complex(id);
        const auto f = surface_formulas(K);
        const auto z = degree_zero_totals(K);
        o.require(f.t1_projective == z.t1_total + f.h2, id + " T1_P");
        o.require(static_cast<long long>(f.t1_projective) == f.t1_projective_alt, id + " alternative T1_P");
        o.require(f.t2_degree0 == z.t2_total, id + " T2_A,0");
        o.detail << id << " " << f.t1_projective << "/" << f.t2_degree0 << "; ";
        if (K.support().size() > 8) continue;

        const ManifoldCotangent M(K);
        std::vector<Multidegree> jobs;
        for (const auto& a : K.all_faces()) {
            if (a.size() > 4) continue;
            exponent_vectors(a, 4, [&](const std::vector<int>& ea) {
                const std::vector<int> rest = (K.support() - a).to_vector();
                const std::size_t r = rest.size();
                for (std::uint32_t mask = 1; mask < (1u << r); ++mask) {
                    if (std::popcount(mask) > 4) continue;
                    Multidegree c;
                    c.a = ea;
                    for (std::size_t i = 0; i < r; ++i)
                        if (mask >> i & 1u) c.b.insert(rest[i]);
                    jobs.push_back(c);
                }
            });
        }
        std::mutex mu;
        std::vector<std::string> bad;
        std::atomic<std::size_t> nz{0};
        parallel_for(jobs.size(), [&](std::size_t k) {
            const Multidegree& c = jobs[k];
            const std::size_t e1 = M.t1(c.a_support(), c.b), e2 = M.t2(c.a_support(), c.b);
            const std::size_t o1 = t1_oracle_dim(K, c), o2 = t2_oracle_dim(K, c);
            if (e1 + e2 > 0) ++nz;
            if (e1 != o1 || e2 != o2) {
                std::lock_guard lock(mu);
                bad.push_back(id + " " + c.str());
            }
        });
        pieces += jobs.size();
        nonzero += nz;
        o.require(bad.empty(), std::to_string(bad.size()) + " oracle mismatches" + (bad.empty() ? "" : ", e.g. " + bad.front()));
    }
    o.detail << pieces << " graded pieces checked against the oracle (" << nonzero << " nonzero)";
    return o;
}

// 4. Threefold formula.
Outcome threefold() {
    Outcome o;
    const std::vector<std::pair<std::string, unsigned long long>> rows{{"boundary-simplex:4", 106}, {"cyclic4:8", 9}};
    for (const auto& [id, expected] : rows) {
        const auto K = named_complex(id);
        const auto f = threefold_formula(K);
        const auto z = degree_zero_totals(K, 0, false);
        o.detail << id << " formula " << f.value << ", enumeration + h2 " << z.t1_total + f.h2 << ", expected " << expected << ". ";
        o.require(f.value == z.t1_total + f.h2, id + " formula vs enumeration");
        o.require(f.value == expected, id + " value " + std::to_string(f.value) + " != " + std::to_string(expected));
    }
    return o;
}

// 5. Rigidity.
Outcome rigidity() {
    Outcome o;
    const auto t0 = Clock::now();
    const auto K = read_facet_file(corpus::fixture("600cell.txt"));
    const auto r = is_rigid(K);
    const double secs = seconds_since(t0);
    const auto s = is_rigid(named_complex("boundary-simplex:4"));
    o.detail << "600-cell rigid=" << r.rigid << " (f-vector " << K.f_vector()[0] << "," << K.f_vector()[1] << ","
             << K.f_vector()[2] << "," << K.f_vector()[3] << ", " << secs << " s); boundary of the 4-simplex rigid=" << s.rigid;
    o.require(r.rigid, "600-cell rigid");
    o.require(!s.rigid, "boundary of the 4-simplex not rigid");
    o.require(secs < 120, "runtime < 120 s");
    return o;
}

// 6. Normal forms.
Outcome normal_forms() {
    Outcome o;
    for (int n = 3; n <= 6; ++n) {
        const NormalForm nf = normal_form(n, 6);
        const auto gens = stanley_reisner_generators(nf);
        bool same = gens.size() == nf.equations.size();
        for (std::size_t i = 0; same && i < gens.size(); ++i) same = nf.equations[i].poly.parameter_free() == gens[i];
        o.require(same, "n = " + std::to_string(n) + " specialises to I_Z");
    }
    for (int n = 3; n <= 5; ++n) o.require(verify_normal_form_relations(n, 10).passed, "n = " + std::to_string(n) + " order 10");
    const auto t0 = Clock::now();
    const auto v6 = verify_normal_form_relations(6, 6);
    const double secs = seconds_since(t0);
    o.require(v6.passed, "n = 6 order 6");
    o.require(secs < 600, "n = 6 runtime < 10 min");
    for (int n = 4; n <= 6; ++n) {
        const auto m = verify_normal_form_relations(n, 4, {4, true});
        std::size_t residual = 0;
        for (const auto& r : m.relations) residual += r.residual_terms;
        o.require(!m.passed && residual > 0, "mutation detected for n = " + std::to_string(n));
    }
    o.detail << "n=3..5 verified at order 10; n=6 at order 6 in " << secs << " s (" << v6.relations.size()
             << " relations, D6 rank " << v6.orbit_rank << "); sign flips detected for n=4,5,6";
    return o;
}

// 7. The series p with x·p⁴ = p + 1.
Outcome p_series_check() {
    Outcome o;
    const auto p = p_series(20);
    o.require(p[0] == -1 && p[1] == 1 && p[2] == -4 && p[3] == 22, "first coefficients");
    for (unsigned long k = 1; k <= 20; ++k) {
        mpz_class b;
        mpz_bin_uiui(b.get_mpz_t(), 4 * k, k - 1);
        mpz_class expected = b / k;
        if (k % 2 == 0) expected = -expected;
        o.require(p[k] == expected, "closed form at k = " + std::to_string(k));
    }
    const auto p2 = series_mul(p, p, 20);
    const auto p4 = series_mul(p2, p2, 20);
    for (std::size_t k = 0; k <= 20; ++k) o.require((k ? p4[k - 1] : mpz_class(0)) - p[k] - (k == 0) == 0, "residual");
    o.detail << "p = -1 + x - 4x^2 + 22x^3 - 140x^4 ..., p_20 = " << p[20].get_str() << ", residual 0 to order 20";
    return o;
}

// 8. Versal ideals.
Outcome versal() {
    Outcome o;
    const auto S = versal_ideal(named_complex("suspension:cycle:6"));
    using Rows = std::array<std::array<std::string, 3>, 2>;
    o.require(S.variables.names.size() == 30, "30 variables");
    o.require(S.matrices.size() == 2, "two matrices");
    if (S.matrices.size() == 2) {
        o.require(S.matrices[0].entries == Rows{{{"t_{0,1}", "t_{0,3}", "t_{0,5}"}, {"t_{0,4}", "t_{0,6}", "t_{0,2}"}}}, "apex 0 matrix");
        o.require(S.matrices[1].entries == Rows{{{"t_{1,7}", "t_{3,7}", "t_{5,7}"}, {"t_{4,7}", "t_{6,7}", "t_{2,7}"}}}, "apex 7 matrix");
    }
    const auto kS = krull_dimension(S);
    o.require(kS.dimension == 26, "Krull dimension 26");

    const auto T = versal_ideal(named_complex("torus:7"));
    o.require(T.matrices.size() == 7, "seven torus matrices");
    for (const auto& M : T.matrices) {
        const int i = M.vertex;
        auto e = [&](int d) {
            const int j = ((i + d) % 7 + 7) % 7;
            return "t_{" + std::to_string(std::min(i, j)) + "," + std::to_string(std::max(i, j)) + "}";
        };
        std::vector<std::array<std::string, 2>> expected{{e(1), e(-1)}, {e(2), e(-2)}, {e(-3), e(3)}}, got, swapped;
        for (std::size_t c = 0; c < 3; ++c) {
            got.push_back({M.entries[0][c], M.entries[1][c]});
            swapped.push_back({M.entries[1][c], M.entries[0][c]});
        }
        std::sort(expected.begin(), expected.end());
        std::sort(got.begin(), got.end());
        std::sort(swapped.begin(), swapped.end());
        o.require(got == expected || swapped == expected, "torus matrix at vertex " + std::to_string(i));
    }
    const auto kT = krull_dimension(T);

    std::size_t fixtures = 0;
    for (auto& [name, K] : corpus::manifolds()) {
        if (K.dimension() != 2) continue;
        const auto fc = f_vector_and_counts(K);
        bool small = true;
        for (const auto& v : K.faces(0)) small = small && fc.valency.at(v) <= 6;
        if (!small) continue;
        ++fixtures;
        o.require(versal_variables(K).names.size() == degree_zero_totals(K, 0, false).t1_total, name + " variable count");
    }
    o.detail << "suspension of E6: 30 variables, 2 matrices, Krull " << kS.dimension << "; torus:7: 7 matrices, Krull "
             << kT.dimension << "; variable count = dim T1_A,0 on " << fixtures << " fixtures";
    return o;
}

// 9. Property suites.
Outcome properties() {
    Outcome o;
    const auto corpus_all = corpus::all();
    std::size_t bary = 0, duality = 0, euler = 0;
    for (const auto& [name, K] : corpus_all) {
        for (const auto& f : K.all_faces())
            f.for_each([&](int v) { o.require(K.contains(f.without(v)), name + " face closure"); });
        o.require(simplicial_chain_complex(K, true).boundary_squares_to_zero(), name + " boundary squares to zero");
        if (K.face_count() <= 129 && !K.is_empty()) {
            auto shared = std::make_shared<const SimplicialComplex>(K);
            std::vector<VertexSet> nonempty;
            for (const auto& f : K.all_faces())
                if (!f.empty()) nonempty.push_back(f);
            o.require(homology_dims(order_complex(UpClosedFamily(shared, nonempty)), true) == homology_dims(K, true),
                      name + " barycentric invariance");
            ++bary;
        }
        if (K.dimension() >= 1 && K.dimension() <= 3 && is_closed_manifold(K).manifold) {
            if (is_orientable(K)) {
                const auto h = homology_dims(K, false);
                for (int i = 0; i <= K.dimension(); ++i) o.require(h.at(i) == h.at(K.dimension() - i), name + " Poincaré duality");
                ++duality;
            }
            if (K.dimension() == 2) {
                const auto fc = f_vector_and_counts(K);
                long long rhs = 0;
                for (const auto& v : K.faces(0)) rhs += 6 - fc.valency.at(v);
                o.require(6 * fc.euler == rhs, name + " Euler identity");
                ++euler;
            }
        }
    }
    std::size_t groebner = 0;
    for (const std::string id : {"torus:7", "torus:8", "suspension:cycle:6", "cyclic3:7"}) {
        const auto V = versal_ideal(named_complex(id));
        const auto g = groebner_basis(V.generators);
        o.require(g.self_check && is_groebner_basis(g.basis), id + " S-polynomial self-check");
        ++groebner;
    }
    o.require(corpus_all.size() >= 20, "corpus of at least 20 complexes");
    o.detail << corpus_all.size() << " complexes; barycentric " << bary << ", duality " << duality << ", Euler " << euler
             << ", Groebner self-checks " << groebner;
    return o;
}

}  // namespace

int main() {
    const std::vector<std::pair<std::string, std::function<Outcome()>>> criteria{
        {"B(K) table", table_of_b_sets},
        {"cyclic 4-polytope obstructions", cyclic_obstructions},
        {"formula / enumeration / oracle agreement", triple_agreement},
        {"threefold formula", threefold},
        {"rigidity", rigidity},
        {"normal forms", normal_forms},
        {"p series", p_series_check},
        {"versal ideals", versal},
        {"property suites", properties},
    };
    int failed = 0;
    const auto start = Clock::now();
    for (std::size_t k = 0; k < criteria.size(); ++k) {
        const auto t0 = Clock::now();
        Outcome o;
        try {
            o = criteria[k].second();
        } catch (const std::exception& e) {
            o.pass = false;
            o.failures.push_back(std::string("exception: ") + e.what());
        }
        if (!o.pass) ++failed;
        std::printf("%s %zu %s (%.2f s): %s\n", o.pass ? "PASS" : "FAIL", k + 1, criteria[k].first.c_str(), seconds_since(t0),
                    o.str().c_str());
        std::fflush(stdout);
    }
    std::printf("%d of %zu criteria failed, total %.1f s\n", failed, criteria.size(), seconds_since(start));
    return failed;
}
