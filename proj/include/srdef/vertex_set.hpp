#pragma once

#include <array>
#include <bit>
#include <compare>
#include <cstdint>
#include <functional>
#include <initializer_list>
#include <string>
#include <vector>

#include "srdef/error.hpp"

namespace srdef {

inline constexpr int kMaxVertices = 128;

/// A finite set of vertex indices in [0, 128), stored as two machine words.
/// Iteration is in increasing index order.
class VertexSet {
public:
    constexpr VertexSet() = default;
    VertexSet(std::initializer_list<int> vertices) {
        for (int v : vertices) insert(v);
    }
    explicit VertexSet(const std::vector<int>& vertices) {
        for (int v : vertices) insert(v);
    }

    static VertexSet single(int v) {
        VertexSet s;
        s.insert(v);
        return s;
    }
    /// {0, ..., n-1}
    static VertexSet first(int n);

    bool contains(int v) const noexcept {
        return v >= 0 && v < kMaxVertices && ((words_[v >> 6] >> (v & 63)) & 1u);
    }
    void insert(int v) {
        check(v);
        words_[v >> 6] |= std::uint64_t{1} << (v & 63);
    }
    void erase(int v) {
        if (v >= 0 && v < kMaxVertices) words_[v >> 6] &= ~(std::uint64_t{1} << (v & 63));
    }
    VertexSet with(int v) const {
        VertexSet s = *this;
        s.insert(v);
        return s;
    }
    VertexSet without(int v) const {
        VertexSet s = *this;
        s.erase(v);
        return s;
    }

    int size() const noexcept { return std::popcount(words_[0]) + std::popcount(words_[1]); }
    bool empty() const noexcept { return (words_[0] | words_[1]) == 0; }
    /// Smallest / largest element; -1 when empty.
    int min() const noexcept;
    int max() const noexcept;

    bool is_subset_of(const VertexSet& o) const noexcept {
        return (words_[0] & ~o.words_[0]) == 0 && (words_[1] & ~o.words_[1]) == 0;
    }
    bool intersects(const VertexSet& o) const noexcept {
        return ((words_[0] & o.words_[0]) | (words_[1] & o.words_[1])) != 0;
    }

    VertexSet operator|(const VertexSet& o) const noexcept { return from_words(words_[0] | o.words_[0], words_[1] | o.words_[1]); }
    VertexSet operator&(const VertexSet& o) const noexcept { return from_words(words_[0] & o.words_[0], words_[1] & o.words_[1]); }
    VertexSet operator-(const VertexSet& o) const noexcept { return from_words(words_[0] & ~o.words_[0], words_[1] & ~o.words_[1]); }
    VertexSet& operator|=(const VertexSet& o) noexcept { return *this = *this | o; }
    VertexSet& operator&=(const VertexSet& o) noexcept { return *this = *this & o; }
    VertexSet& operator-=(const VertexSet& o) noexcept { return *this = *this - o; }

    bool operator==(const VertexSet& o) const noexcept = default;

    /// Shortlex order: by cardinality, then lexicographically on the sorted
    /// vertex lists. Used everywhere a deterministic face order is needed.
    std::strong_ordering operator<=>(const VertexSet& o) const noexcept;

    template <class F>
    void for_each(F&& f) const {
        for (int w = 0; w < 2; ++w) {
            std::uint64_t bits = words_[w];
            while (bits != 0) {
                const int b = std::countr_zero(bits);
                f(w * 64 + b);
                bits &= bits - 1;
            }
        }
    }

    std::vector<int> to_vector() const;
    /// Shift every vertex by `offset` (capacity error if a result leaves range).
    VertexSet shifted(int offset) const;
    /// "{0,1,2}" ; the empty set prints as "{}".
    std::string str() const;

    std::uint64_t word(int i) const noexcept { return words_[i]; }

private:
    static constexpr VertexSet from_words(std::uint64_t lo, std::uint64_t hi) noexcept {
        VertexSet s;
        s.words_ = {lo, hi};
        return s;
    }
    static void check(int v) {
        if (v < 0 || v >= kMaxVertices)
            fail(ErrorCode::capacity, "vertex index " + std::to_string(v) + " outside [0, 128)");
    }

    std::array<std::uint64_t, 2> words_{};
};

/// All subsets of `s`, including the empty set and `s` itself.
std::vector<VertexSet> subsets(const VertexSet& s);

}  // namespace srdef

template <>
struct std::hash<srdef::VertexSet> {
    std::size_t operator()(const srdef::VertexSet& s) const noexcept {
        const std::uint64_t h = s.word(0) * 0x9E3779B97F4A7C15ull ^ (s.word(1) + 0x632BE59BD9B4E019ull + (s.word(0) << 6));
        return static_cast<std::size_t>(h ^ (h >> 29));
    }
};
