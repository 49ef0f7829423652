#pragma once

#include <cstddef>
#include <vector>

#include "srdef/polynomial.hpp"

namespace srdef {

struct GroebnerOptions {
    std::size_t max_pairs = 200000;
    std::size_t max_basis = 4000;
};

struct GroebnerResult {
    std::vector<Polynomial> basis;  // reduced, monic, sorted by leading monomial
    std::size_t pairs_reduced = 0;
    std::size_t product_skips = 0;
    std::size_t chain_skips = 0;
    bool self_check = false;  // every S-polynomial of the basis reduces to 0
};

/// Full reduction of f by G (degrevlex).
Polynomial reduce(const Polynomial& f, const std::vector<Polynomial>& G);
Polynomial s_polynomial(const Polynomial& f, const Polynomial& g);
bool is_groebner_basis(const std::vector<Polynomial>& G);

/// Buchberger with the product and chain criteria. Resource error beyond the
/// options' budget. Domain error if the self-check fails.
GroebnerResult groebner_basis(const std::vector<Polynomial>& generators, GroebnerOptions options = {});

/// Krull dimension of k[x_0..x_{n−1}]/(m_1, ..., m_r): n minus the smallest
/// set of variables meeting every support.
std::size_t monomial_ideal_dimension(const std::vector<Monomial>& generators, int nvars);

}  // namespace srdef
