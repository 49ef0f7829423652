#include "srdef/linalg.hpp"

#include <algorithm>

namespace srdef {

SparseVector make_sparse(std::vector<std::pair<int, mpz_class>> entries) {
    std::sort(entries.begin(), entries.end(), [](const auto& x, const auto& y) { return x.first < y.first; });
    SparseVector out;
    for (auto& [i, v] : entries) {
        if (!out.empty() && out.back().first == i)
            out.back().second += v;
        else
            out.emplace_back(i, std::move(v));
        if (out.back().second == 0) out.pop_back();
    }
    return out;
}

namespace {

// s·x − t·y, merged by index.
SparseVector combine(const mpz_class& s, const SparseVector& x, const mpz_class& t, const SparseVector& y) {
    SparseVector out;
    out.reserve(x.size() + y.size());
    std::size_t i = 0, j = 0;
    while (i < x.size() || j < y.size()) {
        if (j == y.size() || (i < x.size() && x[i].first < y[j].first)) {
            out.emplace_back(x[i].first, s * x[i].second);
            ++i;
        } else if (i == x.size() || y[j].first < x[i].first) {
            out.emplace_back(y[j].first, -t * y[j].second);
            ++j;
        } else {
            mpz_class v = s * x[i].second - t * y[j].second;
            if (v != 0) out.emplace_back(x[i].first, std::move(v));
            ++i;
            ++j;
        }
    }
    return out;
}

void make_primitive(SparseVector& v) {
    if (v.empty()) return;
    mpz_class g = 0;
    for (const auto& e : v) {
        mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), e.second.get_mpz_t());
        if (g == 1) break;
    }
    if (v.back().second < 0) g = -g;
    if (g != 1)
        for (auto& e : v) mpz_divexact(e.second.get_mpz_t(), e.second.get_mpz_t(), g.get_mpz_t());
}

}  // namespace

SparseVector RankAccumulator::reduce(SparseVector v) const {
    make_primitive(v);
    while (!v.empty()) {
        const int piv = v.back().first;
        if (piv >= static_cast<int>(by_pivot_.size()) || by_pivot_[static_cast<std::size_t>(piv)].empty()) break;
        const SparseVector& b = by_pivot_[static_cast<std::size_t>(piv)];
        mpz_class g;
        mpz_gcd(g.get_mpz_t(), b.back().second.get_mpz_t(), v.back().second.get_mpz_t());
        const mpz_class s = b.back().second / g;
        const mpz_class t = v.back().second / g;
        v = combine(s, v, t, b);
        make_primitive(v);
    }
    return v;
}

bool RankAccumulator::add(SparseVector v) {
    v = reduce(std::move(v));
    if (v.empty()) return false;
    const auto piv = static_cast<std::size_t>(v.back().first);
    if (piv >= by_pivot_.size()) by_pivot_.resize(piv + 1);
    by_pivot_[piv] = std::move(v);
    ++count_;
    return true;
}

bool RankAccumulator::in_span(SparseVector v) const { return reduce(std::move(v)).empty(); }

std::size_t rank_of(const std::vector<SparseVector>& vectors) {
    RankAccumulator acc;
    for (const auto& v : vectors) acc.add(v);
    return acc.rank();
}

std::size_t rank_dense(const std::vector<std::vector<mpz_class>>& rows) {
    RankAccumulator acc;
    for (const auto& row : rows) {
        SparseVector v;
        for (std::size_t i = 0; i < row.size(); ++i)
            if (row[i] != 0) v.emplace_back(static_cast<int>(i), row[i]);
        acc.add(std::move(v));
    }
    return acc.rank();
}

}  // namespace srdef
