#include "ht/sparse_reduce.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>

namespace ht {

namespace {

using ZCol = std::vector<std::pair<std::uint32_t, std::int64_t>>;
using FCol = std::vector<std::uint32_t>;

std::int64_t checked_mul(std::int64_t a, std::int64_t b) {
    std::int64_t r;
    if (__builtin_mul_overflow(a, b, &r)) throw std::overflow_error("sparse reduction: int64 overflow");
    return r;
}

std::int64_t checked_add(std::int64_t a, std::int64_t b) {
    std::int64_t r;
    if (__builtin_add_overflow(a, b, &r)) throw std::overflow_error("sparse reduction: int64 overflow");
    return r;
}

// out = x*a + y*b
void combine(const ZCol& a, std::int64_t x, const ZCol& b, std::int64_t y, ZCol& out) {
    out.clear();
    out.reserve(a.size() + b.size());
    std::size_t i = 0, j = 0;
    while (i < a.size() || j < b.size()) {
        if (j == b.size() || (i < a.size() && a[i].first < b[j].first)) {
            if (x != 0) out.emplace_back(a[i].first, checked_mul(x, a[i].second));
            ++i;
        } else if (i == a.size() || b[j].first < a[i].first) {
            if (y != 0) out.emplace_back(b[j].first, checked_mul(y, b[j].second));
            ++j;
        } else {
            std::int64_t v = checked_add(checked_mul(x, a[i].second), checked_mul(y, b[j].second));
            if (v != 0) out.emplace_back(a[i].first, v);
            ++i;
            ++j;
        }
    }
}

void symmetric_difference(const FCol& a, const FCol& b, FCol& out) {
    out.clear();
    out.reserve(a.size() + b.size());
    std::set_symmetric_difference(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(out));
}

std::int64_t ext_gcd(std::int64_t a, std::int64_t b, std::int64_t& s, std::int64_t& t) {
    std::int64_t old_r = a, r = b, old_s = 1, s1 = 0, old_t = 0, t1 = 1;
    while (r != 0) {
        std::int64_t q = old_r / r;
        std::int64_t tmp = old_r - q * r;
        old_r = r;
        r = tmp;
        tmp = old_s - q * s1;
        old_s = s1;
        s1 = tmp;
        tmp = old_t - q * t1;
        old_t = t1;
        t1 = tmp;
    }
    if (old_r < 0) {
        old_r = -old_r;
        old_s = -old_s;
        old_t = -old_t;
    }
    s = old_s;
    t = old_t;
    return old_r;
}

}  // namespace

SparseReduction sparse_reduce_f2(const SparseMatrix& M, const std::vector<bool>& skip) {
    std::vector<std::int64_t> pivot_of(M.rows, -1);
    std::vector<FCol> reduced;
    FCol col, tmp;
    SparseReduction out;
    for (std::size_t j = 0; j < M.cols; ++j) {
        if (!skip.empty() && skip[j]) continue;
        col.clear();
        for (const auto& [r, v] : M.columns[j])
            if (v % 2 != 0) col.push_back(r);
        while (!col.empty()) {
            const std::uint32_t low = col.back();
            if (pivot_of[low] < 0) {
                pivot_of[low] = static_cast<std::int64_t>(reduced.size());
                reduced.push_back(col);
                out.pivot_rows.push_back(low);
                break;
            }
            symmetric_difference(col, reduced[pivot_of[low]], tmp);
            col.swap(tmp);
        }
    }
    out.rank = reduced.size();
    return out;
}

SparseReduction sparse_reduce_z(const SparseMatrix& M, const std::vector<bool>& skip) {
    std::vector<std::int64_t> pivot_of(M.rows, -1);
    std::vector<ZCol> reduced;
    ZCol col, tmp, tmp2;
    SparseReduction out;
    for (std::size_t j = 0; j < M.cols; ++j) {
        if (!skip.empty() && skip[j]) continue;
        col = M.columns[j];
        while (!col.empty()) {
            const std::uint32_t low = col.back().first;
            if (pivot_of[low] < 0) {
                pivot_of[low] = static_cast<std::int64_t>(reduced.size());
                reduced.push_back(col);
                out.pivot_rows.push_back(low);
                break;
            }
            ZCol& p = reduced[pivot_of[low]];
            const std::int64_t pl = p.back().second;
            const std::int64_t cl = col.back().second;
            if (cl % pl == 0) {
                combine(col, 1, p, -(cl / pl), tmp);
                col.swap(tmp);
                continue;
            }
            // Unimodular 2x2 step: the pivot column takes the gcd.
            std::int64_t s, t;
            const std::int64_t g = ext_gcd(cl, pl, s, t);
            combine(col, s, p, t, tmp);
            combine(col, pl / g, p, -(cl / g), tmp2);
            p.swap(tmp);
            col.swap(tmp2);
        }
    }
    out.rank = reduced.size();
    for (const auto& c : reduced)
        if (c.back().second != 1 && c.back().second != -1) out.unit_pivots = false;
    if (!out.unit_pivots) {
        // Echelon entries can be large, so the dense Smith form is run on the
        // original columns instead; skipped columns lie in the span of the
        // others and do not change the cokernel.
        std::vector<std::size_t> keep;
        for (std::size_t j = 0; j < M.cols; ++j)
            if (skip.empty() || !skip[j]) keep.push_back(j);
        if (M.rows * keep.size() > 16'000'000)
            throw std::runtime_error("sparse reduction: non-unit pivots in a matrix too large for dense Smith form");
        IntMatrix D(M.rows, keep.size());
        for (std::size_t c = 0; c < keep.size(); ++c)
            for (const auto& [r, v] : M.columns[keep[c]]) D(r, c) = v;
        for (const Int& d : invariant_factors(D))
            if (d != 1) out.torsion.push_back(d);
    }
    return out;
}

IntMatrix to_dense(const SparseMatrix& M) {
    IntMatrix D(M.rows, M.cols);
    for (std::size_t c = 0; c < M.cols; ++c)
        for (const auto& [r, v] : M.columns[c]) D(r, c) = v;
    return D;
}

}  // namespace ht
