#include "srdef/polynomial.hpp"

#include <algorithm>

#include "srdef/error.hpp"

namespace srdef {

PolyRing::PolyRing(std::vector<std::string> names, std::vector<bool> parameter)
    : names_(std::move(names)), parameter_(std::move(parameter)) {
    if (names_.size() != parameter_.size()) fail(ErrorCode::domain, "ring: names and parameter flags differ in length");
    for (std::size_t i = 0; i < names_.size(); ++i)
        if (!lookup_.emplace(names_[i], static_cast<int>(i)).second)
            fail(ErrorCode::domain, "ring: duplicate variable " + names_[i]);
}

std::optional<int> PolyRing::find(const std::string& name) const {
    auto it = lookup_.find(name);
    if (it == lookup_.end()) return std::nullopt;
    return it->second;
}

int PolyRing::index(const std::string& name) const {
    auto i = find(name);
    if (!i) fail(ErrorCode::usage, "unknown variable " + name);
    return *i;
}

void Monomial::set(int i, int e) {
    auto& slot = e_[static_cast<std::size_t>(i) + 1];
    e_[0] = static_cast<std::uint16_t>(e_[0] - slot + e);
    slot = static_cast<std::uint16_t>(e);
}

Monomial Monomial::operator*(const Monomial& o) const {
    Monomial r = *this;
    for (std::size_t i = 0; i < e_.size(); ++i) r.e_[i] = static_cast<std::uint16_t>(r.e_[i] + o.e_[i]);
    return r;
}

Monomial Monomial::operator/(const Monomial& o) const {
    Monomial r = *this;
    for (std::size_t i = 0; i < e_.size(); ++i) r.e_[i] = static_cast<std::uint16_t>(r.e_[i] - o.e_[i]);
    return r;
}

bool Monomial::divides(const Monomial& o) const {
    if (e_[0] > o.e_[0]) return false;
    for (std::size_t i = 1; i < e_.size(); ++i)
        if (e_[i] > o.e_[i]) return false;
    return true;
}

Monomial Monomial::lcm(const Monomial& o) const {
    Monomial r(nvars());
    for (int i = 0; i < nvars(); ++i) r.set(i, std::max(exponent(i), o.exponent(i)));
    return r;
}

bool Monomial::coprime(const Monomial& o) const {
    for (std::size_t i = 1; i < e_.size(); ++i)
        if (e_[i] && o.e_[i]) return false;
    return true;
}

std::vector<int> Monomial::support() const {
    std::vector<int> s;
    for (int i = 0; i < nvars(); ++i)
        if (exponent(i)) s.push_back(i);
    return s;
}

int Monomial::compare(const Monomial& a, const Monomial& b) {
    if (a.e_[0] != b.e_[0]) return a.e_[0] > b.e_[0] ? 1 : -1;
    for (std::size_t i = a.e_.size(); i-- > 1;)
        if (a.e_[i] != b.e_[i]) return a.e_[i] < b.e_[i] ? 1 : -1;
    return 0;
}

Polynomial Polynomial::constant(std::shared_ptr<const PolyRing> ring, const mpq_class& c) {
    Polynomial p(ring);
    p.add_term(Monomial(ring->size()), c);
    return p;
}

Polynomial Polynomial::variable(std::shared_ptr<const PolyRing> ring, int i, int exp) {
    Monomial m(ring->size());
    m.set(i, exp);
    return term(std::move(ring), m, 1);
}

Polynomial Polynomial::term(std::shared_ptr<const PolyRing> ring, const Monomial& m, const mpq_class& c) {
    Polynomial p(std::move(ring));
    p.add_term(m, c);
    return p;
}

void Polynomial::add_term(const Monomial& m, const mpq_class& c) {
    if (c == 0) return;
    auto [it, inserted] = terms_.try_emplace(m, c);
    if (!inserted) {
        it->second += c;
        if (it->second == 0) terms_.erase(it);
    }
}

Polynomial& Polynomial::operator+=(const Polynomial& o) {
    if (!ring_) ring_ = o.ring_;
    for (const auto& [m, c] : o.terms_) add_term(m, c);
    return *this;
}

Polynomial& Polynomial::operator-=(const Polynomial& o) {
    if (!ring_) ring_ = o.ring_;
    for (const auto& [m, c] : o.terms_) add_term(m, -c);
    return *this;
}

Polynomial Polynomial::operator+(const Polynomial& o) const {
    Polynomial r = *this;
    return r += o;
}

Polynomial Polynomial::operator-(const Polynomial& o) const {
    Polynomial r = *this;
    return r -= o;
}

Polynomial Polynomial::operator-() const {
    Polynomial r = *this;
    for (auto& [m, c] : r.terms_) c = -c;
    return r;
}

Polynomial Polynomial::operator*(const Polynomial& o) const { return mul_truncated(*this, o, -1); }

Polynomial Polynomial::operator*(const mpq_class& c) const {
    if (c == 0) return Polynomial(ring_);
    Polynomial r = *this;
    for (auto& [m, v] : r.terms_) v *= c;
    return r;
}

Polynomial Polynomial::mul_truncated(const Polynomial& a, const Polynomial& b, int order) {
    Polynomial r(a.ring_ ? a.ring_ : b.ring_);
    if (a.is_zero() || b.is_zero()) return r;
    std::vector<int> db, da;
    for (const auto& [m, c] : b.terms_) db.push_back(order < 0 ? 0 : b.parameter_degree(m));
    for (const auto& [m, c] : a.terms_) da.push_back(order < 0 ? 0 : a.parameter_degree(m));
    std::size_t i = 0;
    mpq_class prod;
    for (const auto& [ma, ca] : a.terms_) {
        std::size_t j = 0;
        for (const auto& [mb, cb] : b.terms_) {
            if (order < 0 || da[i] + db[j] <= order) {
                prod = ca * cb;
                r.add_term(ma * mb, prod);
            }
            ++j;
        }
        ++i;
    }
    return r;
}

Polynomial Polynomial::mul_term(const Monomial& m, const mpq_class& c) const {
    Polynomial r(ring_);
    for (const auto& [mm, cc] : terms_) r.terms_.emplace_hint(r.terms_.end(), mm * m, cc * c);
    return r;
}

int Polynomial::parameter_degree(const Monomial& m) const {
    int d = 0;
    for (int i = 0; i < m.nvars(); ++i)
        if (ring_->is_parameter(i)) d += m.exponent(i);
    return d;
}

Polynomial Polynomial::truncated(int order) const {
    if (order < 0) return *this;
    Polynomial r(ring_);
    for (const auto& [m, c] : terms_)
        if (parameter_degree(m) <= order) r.terms_.emplace_hint(r.terms_.end(), m, c);
    return r;
}

Polynomial Polynomial::parameter_free() const { return truncated(0); }

Polynomial Polynomial::permuted(const std::vector<int>& map) const {
    Polynomial r(ring_);
    for (const auto& [m, c] : terms_) {
        Monomial n(m.nvars());
        for (int i = 0; i < m.nvars(); ++i)
            if (m.exponent(i)) n.set(map[static_cast<std::size_t>(i)], m.exponent(i));
        r.add_term(n, c);
    }
    return r;
}

Polynomial Polynomial::monic() const {
    if (is_zero()) return *this;
    return *this * mpq_class(1 / leading_coefficient());
}

std::string Polynomial::str() const {
    if (terms_.empty()) return "0";
    std::string s;
    bool first = true;
    for (const auto& [m, c] : terms_) {
        mpq_class a = abs(c);
        if (first) {
            if (c < 0) s += "-";
        } else {
            s += c < 0 ? " - " : " + ";
        }
        first = false;
        std::string mono;
        for (int i = 0; i < m.nvars(); ++i) {
            if (!m.exponent(i)) continue;
            if (!mono.empty()) mono += "*";
            mono += ring_->name(i);
            if (m.exponent(i) > 1) mono += "^" + std::to_string(m.exponent(i));
        }
        if (mono.empty()) {
            s += a.get_str();
        } else {
            if (a != 1) s += a.get_str() + "*";
            s += mono;
        }
    }
    return s;
}

std::vector<mpz_class> series_mul(const std::vector<mpz_class>& a, const std::vector<mpz_class>& b, int order) {
    std::vector<mpz_class> r(static_cast<std::size_t>(order + 1), 0);
    for (std::size_t i = 0; i < a.size() && static_cast<int>(i) <= order; ++i)
        for (std::size_t j = 0; j < b.size() && static_cast<int>(i + j) <= order; ++j) r[i + j] += a[i] * b[j];
    return r;
}

std::vector<mpz_class> series_inverse(const std::vector<mpz_class>& a, int order) {
    if (a.empty() || abs(a[0]) != 1) fail(ErrorCode::domain, "series_inverse: constant term must be ±1");
    std::vector<mpz_class> r(static_cast<std::size_t>(order + 1), 0);
    r[0] = a[0];
    for (int k = 1; k <= order; ++k) {
        mpz_class s = 0;
        for (int i = 1; i <= k && i < static_cast<int>(a.size()); ++i) s += a[static_cast<std::size_t>(i)] * r[static_cast<std::size_t>(k - i)];
        r[static_cast<std::size_t>(k)] = -s * a[0];
    }
    return r;
}

std::vector<mpz_class> p_series(int order) {
    if (order < 0) fail(ErrorCode::usage, "p_series: order must be nonnegative");
    std::vector<mpz_class> p(static_cast<std::size_t>(order + 1), 0);
    p[0] = -1;
    for (int k = 1; k <= order; ++k) {
        // p_k is the coefficient of x^{k−1} in p⁴, which only involves p_0..p_{k−1}.
        const std::vector<mpz_class> p2 = series_mul(p, p, k - 1);
        const std::vector<mpz_class> p4 = series_mul(p2, p2, k - 1);
        p[static_cast<std::size_t>(k)] = p4[static_cast<std::size_t>(k - 1)];
    }
    return p;
}

Polynomial compose(const std::vector<mpz_class>& c, const Polynomial& S, int order) {
    Polynomial r = Polynomial::constant(S.ring(), c.empty() ? mpq_class(0) : mpq_class(c[0]));
    Polynomial power = Polynomial::constant(S.ring(), 1);
    for (std::size_t k = 1; k < c.size(); ++k) {
        power = Polynomial::mul_truncated(power, S, order);
        if (power.is_zero()) break;
        r += power * mpq_class(c[k]);
    }
    return r;
}

}  // namespace srdef
