#pragma once

#include <cstdint>
#include <map>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include <gmpxx.h>

namespace srdef {

/// Named variables; some are parameters, which is what truncation counts.
class PolyRing {
public:
    PolyRing(std::vector<std::string> names, std::vector<bool> parameter);

    int size() const noexcept { return static_cast<int>(names_.size()); }
    const std::string& name(int i) const { return names_.at(static_cast<std::size_t>(i)); }
    bool is_parameter(int i) const { return parameter_.at(static_cast<std::size_t>(i)); }
    std::optional<int> find(const std::string& name) const;
    /// Usage error for unknown names.
    int index(const std::string& name) const;

private:
    std::vector<std::string> names_;
    std::vector<bool> parameter_;
    std::map<std::string, int> lookup_;
};

/// Exponent vector with its total degree cached.
class Monomial {
public:
    Monomial() = default;
    explicit Monomial(int nvars) : e_(static_cast<std::size_t>(nvars) + 1, 0) {}

    int nvars() const noexcept { return static_cast<int>(e_.size()) - 1; }
    int degree() const noexcept { return e_.empty() ? 0 : e_[0]; }
    int exponent(int i) const { return e_[static_cast<std::size_t>(i) + 1]; }
    void set(int i, int e);

    Monomial operator*(const Monomial& o) const;
    /// Requires o | *this.
    Monomial operator/(const Monomial& o) const;
    bool divides(const Monomial& o) const;
    Monomial lcm(const Monomial& o) const;
    bool coprime(const Monomial& o) const;
    std::vector<int> support() const;

    bool operator==(const Monomial& o) const = default;
    /// Degree-reverse-lexicographic comparison, variable 0 largest.
    static int compare(const Monomial& a, const Monomial& b);

private:
    std::vector<std::uint16_t> e_;  // e_[0] = total degree
};

struct MonomialGreater {
    bool operator()(const Monomial& a, const Monomial& b) const { return Monomial::compare(a, b) > 0; }
};

/// Polynomial over ℚ, terms kept in descending degrevlex order.
class Polynomial {
public:
    using Terms = std::map<Monomial, mpq_class, MonomialGreater>;

    Polynomial() = default;
    explicit Polynomial(std::shared_ptr<const PolyRing> ring) : ring_(std::move(ring)) {}

    static Polynomial constant(std::shared_ptr<const PolyRing> ring, const mpq_class& c);
    static Polynomial variable(std::shared_ptr<const PolyRing> ring, int i, int exp = 1);
    static Polynomial term(std::shared_ptr<const PolyRing> ring, const Monomial& m, const mpq_class& c);

    const std::shared_ptr<const PolyRing>& ring() const noexcept { return ring_; }
    const Terms& terms() const noexcept { return terms_; }
    bool is_zero() const noexcept { return terms_.empty(); }
    std::size_t size() const noexcept { return terms_.size(); }

    const Monomial& leading_monomial() const { return terms_.begin()->first; }
    const mpq_class& leading_coefficient() const { return terms_.begin()->second; }

    void add_term(const Monomial& m, const mpq_class& c);
    Polynomial& operator+=(const Polynomial& o);
    Polynomial& operator-=(const Polynomial& o);
    Polynomial operator+(const Polynomial& o) const;
    Polynomial operator-(const Polynomial& o) const;
    Polynomial operator-() const;
    Polynomial operator*(const Polynomial& o) const;
    Polynomial operator*(const mpq_class& c) const;
    /// Product with terms of parameter degree above `order` dropped; order < 0 keeps all.
    static Polynomial mul_truncated(const Polynomial& a, const Polynomial& b, int order);
    Polynomial mul_term(const Monomial& m, const mpq_class& c) const;

    int parameter_degree(const Monomial& m) const;
    Polynomial truncated(int order) const;
    /// Every parameter set to 0.
    Polynomial parameter_free() const;
    /// Variable i renamed to map[i].
    Polynomial permuted(const std::vector<int>& map) const;
    Polynomial monic() const;

    bool operator==(const Polynomial& o) const { return terms_ == o.terms_; }
    /// "y1*y3 - 2/3*t1^(1)^2*y2", "0" for zero.
    std::string str() const;

private:
    std::shared_ptr<const PolyRing> ring_;
    Terms terms_;
};

/// Coefficients p_0..p_N of the solution of x·p⁴ = p + 1 with p(0) = −1.
std::vector<mpz_class> p_series(int order);
std::vector<mpz_class> series_mul(const std::vector<mpz_class>& a, const std::vector<mpz_class>& b, int order);
/// 1/a for a(0) = ±1.
std::vector<mpz_class> series_inverse(const std::vector<mpz_class>& a, int order);
/// Σ c_k S^k truncated at parameter degree `order`.
Polynomial compose(const std::vector<mpz_class>& c, const Polynomial& S, int order);

}  // namespace srdef
