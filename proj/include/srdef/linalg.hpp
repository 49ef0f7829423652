#pragma once

#include <cstddef>
#include <utility>
#include <vector>

#include <gmpxx.h>

namespace srdef {

/// Sparse vector over ℤ: (index, value) pairs, indices strictly increasing,
/// no zero values.
using SparseVector = std::vector<std::pair<int, mpz_class>>;

SparseVector make_sparse(std::vector<std::pair<int, mpz_class>> entries);

/// Incremental rank over ℚ by fraction-free elimination. Each stored vector
/// is primitive (content 1) and owns a distinct pivot (its largest index).
class RankAccumulator {
public:
    /// Reduces `v` against the stored vectors; stores it and returns true if
    /// it is independent of them.
    bool add(SparseVector v);
    std::size_t rank() const noexcept { return count_; }
    /// True if `v` lies in the span of the stored vectors.
    bool in_span(SparseVector v) const;

private:
    SparseVector reduce(SparseVector v) const;

    std::vector<SparseVector> by_pivot_;  // index = pivot, empty when unused
    std::size_t count_ = 0;
};

std::size_t rank_of(const std::vector<SparseVector>& vectors);

/// Rank of a dense integer matrix given row by row.
std::size_t rank_dense(const std::vector<std::vector<mpz_class>>& rows);

}  // namespace srdef
