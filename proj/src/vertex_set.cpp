#include "srdef/vertex_set.hpp"

namespace srdef {

VertexSet VertexSet::first(int n) {
    if (n < 0 || n > kMaxVertices)
        fail(ErrorCode::capacity, "vertex count " + std::to_string(n) + " outside [0, 128]");
    VertexSet s;
    if (n >= 64) {
        s.words_[0] = ~std::uint64_t{0};
        s.words_[1] = n == 128 ? ~std::uint64_t{0} : (std::uint64_t{1} << (n - 64)) - 1;
    } else {
        s.words_[0] = (std::uint64_t{1} << n) - 1;
    }
    return s;
}

int VertexSet::min() const noexcept {
    if (words_[0] != 0) return std::countr_zero(words_[0]);
    if (words_[1] != 0) return 64 + std::countr_zero(words_[1]);
    return -1;
}

int VertexSet::max() const noexcept {
    if (words_[1] != 0) return 127 - std::countl_zero(words_[1]);
    if (words_[0] != 0) return 63 - std::countl_zero(words_[0]);
    return -1;
}

std::strong_ordering VertexSet::operator<=>(const VertexSet& o) const noexcept {
    if (auto c = size() <=> o.size(); c != 0) return c;
    // Same size: the first differing element decides.
    const VertexSet diff = from_words(words_[0] ^ o.words_[0], words_[1] ^ o.words_[1]);
    const int d = diff.min();
    if (d < 0) return std::strong_ordering::equal;
    return contains(d) ? std::strong_ordering::less : std::strong_ordering::greater;
}

std::vector<int> VertexSet::to_vector() const {
    std::vector<int> out;
    out.reserve(static_cast<std::size_t>(size()));
    for_each([&](int v) { out.push_back(v); });
    return out;
}

VertexSet VertexSet::shifted(int offset) const {
    VertexSet out;
    for_each([&](int v) { out.insert(v + offset); });
    return out;
}

std::string VertexSet::str() const {
    std::string s = "{";
    bool first_elem = true;
    for_each([&](int v) {
        if (!first_elem) s += ',';
        s += std::to_string(v);
        first_elem = false;
    });
    return s + "}";
}

std::vector<VertexSet> subsets(const VertexSet& s) {
    const std::vector<int> elems = s.to_vector();
    if (elems.size() > 24) fail(ErrorCode::resource, "refusing to enumerate subsets of a set with more than 24 elements");
    std::vector<VertexSet> out;
    out.reserve(std::size_t{1} << elems.size());
    for (std::uint32_t mask = 0; mask < (std::uint32_t{1} << elems.size()); ++mask) {
        VertexSet sub;
        for (std::size_t i = 0; i < elems.size(); ++i)
            if ((mask >> i) & 1u) sub.insert(elems[i]);
        out.push_back(sub);
    }
    return out;
}

}  // namespace srdef
