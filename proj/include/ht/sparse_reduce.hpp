// Sparse column reduction for large boundary matrices.
#pragma once

#include "ht/exact_linalg.hpp"

#include <cstdint>
#include <utility>
#include <vector>

namespace ht {

struct SparseMatrix {
    std::size_t rows = 0;
    std::size_t cols = 0;
    // Each column sorted by row index, zero entries omitted.
    std::vector<std::vector<std::pair<std::uint32_t, std::int64_t>>> columns;
};

struct SparseReduction {
    std::size_t rank = 0;
    // Invariant factors other than 1 (empty means the cokernel of the
    // column map is torsion-free).
    std::vector<Int> torsion;
    // Rows that ended up as pivots; usable for clearing in the next degree.
    std::vector<std::uint32_t> pivot_rows;
    // Every final pivot is +-1 (always true over F2). Clearing the next
    // degree with pivot_rows is only sound over Z when this holds.
    bool unit_pivots = true;
};

/// Column reduction over F2. Columns flagged in `skip` are treated as zero.
SparseReduction sparse_reduce_f2(const SparseMatrix& M, const std::vector<bool>& skip = {});

/// Column reduction over Z with unimodular column operations. When every
/// pivot ends up as +-1 the Smith form is [I 0] and no dense work is needed;
/// otherwise the reduced columns are handed to the dense Smith routine.
/// Throws std::overflow_error if an intermediate entry leaves int64.
SparseReduction sparse_reduce_z(const SparseMatrix& M, const std::vector<bool>& skip = {});

IntMatrix to_dense(const SparseMatrix& M);

}  // namespace ht
