#include "doctest.h"
#include "srdef/error.hpp"
#include "srdef/groebner.hpp"

using namespace srdef;

namespace {

std::shared_ptr<const PolyRing> ring(std::vector<std::string> names, std::size_t params = 0) {
    std::vector<bool> flags(names.size(), false);
    for (std::size_t i = 0; i < params; ++i) flags[i] = true;
    return std::make_shared<const PolyRing>(std::move(names), std::move(flags));
}

Polynomial var(const std::shared_ptr<const PolyRing>& R, const std::string& n) { return Polynomial::variable(R, R->index(n)); }

mpz_class binom(unsigned long n, unsigned long k) {
    mpz_class r;
    mpz_bin_uiui(r.get_mpz_t(), n, k);
    return r;
}

}  // namespace

TEST_CASE("p series matches the Lagrange inversion closed form") {
    const auto p = p_series(20);
    CHECK(p[0] == -1);
    CHECK(p[1] == 1);
    CHECK(p[2] == -4);
    CHECK(p[3] == 22);
    for (unsigned long k = 1; k <= 20; ++k) {
        mpz_class expected = binom(4 * k, k - 1) / k;
        CHECK(binom(4 * k, k - 1) % k == 0);
        if (k % 2 == 0) expected = -expected;
        CHECK(p[k] == expected);
    }
    // x·p⁴ − p − 1 vanishes coefficientwise.
    const auto p2 = series_mul(p, p, 20);
    const auto p4 = series_mul(p2, p2, 20);
    for (std::size_t k = 0; k <= 20; ++k) {
        const mpz_class lhs = k == 0 ? mpz_class(0) : p4[k - 1];
        CHECK(lhs - p[k] - (k == 0 ? 1 : 0) == 0);
    }
}

TEST_CASE("series inverse and composition") {
    auto p = p_series(8);
    auto q = p;
    q[0] += 2;
    const auto inv = series_inverse(q, 8);
    const auto one = series_mul(q, inv, 8);
    CHECK(one[0] == 1);
    for (std::size_t k = 1; k <= 8; ++k) CHECK(one[k] == 0);
    CHECK_THROWS_AS(series_inverse({mpz_class(2)}, 3), Error);

    auto R = ring({"s", "y"}, 1);
    const Polynomial S = var(R, "s") * var(R, "y");
    const Polynomial c = compose({1, 2, 3}, S, 1);
    CHECK(c == Polynomial::constant(R, 1) + S * mpq_class(2));
    CHECK(compose({1, 2, 3}, S, 5).size() == 3);
}

TEST_CASE("degrevlex order and polynomial arithmetic") {
    auto R = ring({"x", "y", "z"});
    const Polynomial x = var(R, "x"), y = var(R, "y"), z = var(R, "z");
    const Polynomial f = x * x + x * y + y * y + x * z + y * z + z * z;
    std::vector<std::string> order;
    for (const auto& [m, c] : f.terms()) order.push_back(Polynomial::term(R, m, 1).str());
    CHECK(order == std::vector<std::string>{"x^2", "x*y", "y^2", "x*z", "y*z", "z^2"});
    CHECK((x + y) * (x - y) == x * x - y * y);
    CHECK((x * mpq_class(2, 3) - y).str() == "2/3*x - y");
    CHECK(Polynomial(R).str() == "0");
    CHECK((x * y * z).permuted({1, 2, 0}) == x * y * z);
    CHECK((x * x * y).permuted({1, 0, 2}) == y * y * x);
    CHECK_THROWS_AS(R->index("w"), Error);
}

TEST_CASE("truncation counts parameter degree only") {
    auto R = ring({"t", "u", "y"}, 2);
    const Polynomial t = var(R, "t"), u = var(R, "u"), y = var(R, "y");
    const Polynomial f = y * y * y + t * y + t * u + t * t * u;
    CHECK(f.truncated(0) == y * y * y);
    CHECK(f.truncated(1) == y * y * y + t * y);
    CHECK(f.truncated(2) == f - t * t * u);
    CHECK(Polynomial::mul_truncated(t + y, u + y, 1) == t * y + u * y + y * y);
    CHECK(f.parameter_free() == y * y * y);
}

TEST_CASE("Groebner bases pass the S-polynomial check") {
    auto R = ring({"x", "y", "z", "w"});
    const Polynomial x = var(R, "x"), y = var(R, "y"), z = var(R, "z"), w = var(R, "w");

    SUBCASE("twisted cubic minors are already a basis") {
        const std::vector<Polynomial> minors{x * z - y * y, x * w - y * z, y * w - z * z};
        CHECK(is_groebner_basis(minors));
        const auto g = groebner_basis(minors);
        CHECK(g.self_check);
        CHECK(g.basis.size() == 3);
        std::vector<Monomial> lead;
        for (const auto& p : g.basis) lead.push_back(p.leading_monomial());
        CHECK(monomial_ideal_dimension(lead, 4) == 2);
    }
    SUBCASE("a non-basis is completed") {
        const std::vector<Polynomial> gens{x * y - z * z, y * y - x * w};
        CHECK_FALSE(is_groebner_basis(gens));
        const auto g = groebner_basis(gens);
        CHECK(g.self_check);
        CHECK(g.basis.size() > 2);
        for (const auto& f : gens) CHECK(reduce(f, g.basis).is_zero());
        CHECK_FALSE(reduce(x, g.basis).is_zero());
        CHECK(reduce(gens[0] * (z + w) - gens[1] * x, g.basis).is_zero());
    }
    SUBCASE("budget") {
        CHECK_THROWS_AS(groebner_basis({x * y - z * z, y * y - x * w}, {1, 4000}), Error);
    }
}

TEST_CASE("monomial ideal dimension by minimum hitting set") {
    auto m = [](std::vector<int> e) {
        Monomial r(static_cast<int>(e.size()));
        for (std::size_t i = 0; i < e.size(); ++i) r.set(static_cast<int>(i), e[i]);
        return r;
    };
    CHECK(monomial_ideal_dimension({}, 5) == 5);
    CHECK(monomial_ideal_dimension({m({1, 1, 0}), m({0, 1, 1})}, 3) == 2);
    CHECK(monomial_ideal_dimension({m({1, 0, 0}), m({0, 2, 0}), m({0, 0, 1})}, 3) == 0);
    CHECK(monomial_ideal_dimension({m({1, 1, 1})}, 3) == 2);
    CHECK(monomial_ideal_dimension({m({0, 0, 0})}, 3) == 0);
    // Pentagon edges: a cover needs 3 vertices.
    std::vector<Monomial> pent;
    for (int i = 0; i < 5; ++i) {
        std::vector<int> e(5, 0);
        e[static_cast<std::size_t>(i)] = e[static_cast<std::size_t>((i + 1) % 5)] = 1;
        pent.push_back(m(e));
    }
    CHECK(monomial_ideal_dimension(pent, 5) == 2);
}
