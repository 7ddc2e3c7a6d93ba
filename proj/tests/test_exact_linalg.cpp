#include <doctest.h>

#include <stdexcept>

#include "ht/exact_linalg.hpp"
#include "ht/sparse_reduce.hpp"

#include <random>

using namespace ht;

namespace {

IntMatrix random_matrix(std::mt19937_64& rng, std::size_t r, std::size_t c, int lo, int hi) {
    std::uniform_int_distribution<int> d(lo, hi);
    IntMatrix M(r, c);
    for (std::size_t i = 0; i < r; ++i)
        for (std::size_t j = 0; j < c; ++j) M(i, j) = d(rng);
    return M;
}

bool is_diagonal(const IntMatrix& D) {
    for (std::size_t i = 0; i < D.rows(); ++i)
        for (std::size_t j = 0; j < D.cols(); ++j)
            if (i != j && D(i, j) != 0) return false;
    return true;
}

}  // namespace

TEST_CASE("smith normal form of diag(2,3)") {
    auto s = smith_normal_form(IntMatrix{{2, 0}, {0, 3}});
    CHECK(s.D == IntMatrix{{1, 0}, {0, 6}});
    CHECK(s.rank == 2);
    CHECK(s.U * IntMatrix{{2, 0}, {0, 3}} * s.V == s.D);
}

TEST_CASE("smith normal form of the zero matrix") {
    IntMatrix Z(3, 2);
    auto s = smith_normal_form(Z);
    CHECK(s.D.is_zero());
    CHECK(s.rank == 0);
    CHECK(s.diagonal.empty());
}

TEST_CASE("boundary of the 3-cycle") {
    // vertices 0,1,2; edges 01, 02, 12
    IntMatrix d1{{-1, -1, 0}, {1, 0, -1}, {0, 1, 1}};
    auto s = smith_normal_form(d1);
    CHECK(s.D == IntMatrix{{1, 0, 0}, {0, 1, 0}, {0, 0, 0}});
}

TEST_CASE("smith witnesses reconstruct and divide") {
    std::mt19937_64 rng(7);
    for (int trial = 0; trial < 200; ++trial) {
        std::size_t r = 1 + rng() % 5, c = 1 + rng() % 5;
        IntMatrix M = random_matrix(rng, r, c, -6, 6);
        auto s = smith_normal_form(M);
        REQUIRE(s.U * M * s.V == s.D);
        CHECK(is_diagonal(s.D));
        CHECK(abs(determinant(s.U)) == 1);
        CHECK(abs(determinant(s.V)) == 1);
        for (std::size_t i = 0; i + 1 < s.diagonal.size(); ++i) CHECK(s.diagonal[i + 1] % s.diagonal[i] == 0);
        CHECK(invariant_factors(M) == s.diagonal);
    }
}

TEST_CASE("determinant and unimodular inverse") {
    CHECK(determinant(IntMatrix{{2, 1}, {7, 4}}) == 1);
    CHECK(determinant(IntMatrix{{0, 1, 2}, {1, 0, 3}, {4, -3, 8}}) == -2);
    IntMatrix M{{2, 1, 0}, {7, 4, 0}, {1, 1, 1}};
    CHECK(M * unimodular_inverse(M) == IntMatrix::identity(3));
    CHECK_THROWS_AS(unimodular_inverse(IntMatrix{{2, 0}, {0, 1}}), std::domain_error);
}

TEST_CASE("primitive normalization") {
    CHECK(primitive_normalize(make_vector({0, -2, 4})) == make_vector({0, 1, -2}));
    CHECK(primitive_normalize(make_vector({3, 0, 0})) == make_vector({1, 0, 0}));
    CHECK_THROWS_AS(primitive_normalize(make_vector({0, 0})), std::invalid_argument);
    std::mt19937_64 rng(11);
    std::uniform_int_distribution<int> d(-20, 20);
    for (int t = 0; t < 300; ++t) {
        IntVector v{d(rng), d(rng), d(rng), d(rng)};
        if (is_zero(v)) continue;
        auto p = primitive_normalize(v);
        CHECK(primitive_normalize(negate(v)) == p);
        CHECK(primitive_normalize(p) == p);
        CHECK(LaxVector(v) == LaxVector(negate(v)));
    }
}

TEST_CASE("f2 rank") {
    F2Matrix I(5, 5);
    for (std::size_t i = 0; i < 5; ++i) I.set(i, i, true);
    CHECK(f2_rank(I) == 5);
    F2Matrix J(3, 3);
    for (std::size_t i = 0; i < 3; ++i)
        for (std::size_t j = 0; j < 3; ++j) J.set(i, j, true);
    CHECK(f2_rank(J) == 1);

    std::mt19937_64 rng(3);
    for (int t = 0; t < 100; ++t) {
        std::size_t r = 1 + rng() % 90, c = 1 + rng() % 90;
        F2Matrix M(r, c), T(c, r);
        for (std::size_t i = 0; i < r; ++i)
            for (std::size_t j = 0; j < c; ++j)
                if (rng() % 3 == 0) {
                    M.set(i, j, true);
                    T.set(j, i, true);
                }
        CHECK(f2_rank(M) == f2_rank(T));
    }
}

TEST_CASE("sparse reductions agree with dense ranks") {
    std::mt19937_64 rng(5);
    for (int t = 0; t < 150; ++t) {
        std::size_t r = 1 + rng() % 12, c = 1 + rng() % 12;
        SparseMatrix S{r, c, {}};
        S.columns.resize(c);
        IntMatrix D(r, c);
        F2Matrix F(r, c);
        for (std::size_t j = 0; j < c; ++j)
            for (std::size_t i = 0; i < r; ++i)
                if (rng() % 3 == 0) {
                    std::int64_t v = static_cast<std::int64_t>(rng() % 7) - 3;
                    if (v == 0) continue;
                    S.columns[j].emplace_back(static_cast<std::uint32_t>(i), v);
                    D(i, j) = v;
                    F.set(i, j, v % 2 != 0);
                }
        CHECK(to_dense(S) == D);
        auto z = sparse_reduce_z(S);
        auto inv = invariant_factors(D);
        CHECK(z.rank == inv.size());
        std::vector<Int> tors;
        for (const auto& x : inv)
            if (x != 1) tors.push_back(x);
        CHECK(z.torsion == tors);
        CHECK(sparse_reduce_f2(S).rank == f2_rank(F));
    }
}

TEST_CASE("json round trip keeps big entries") {
    IntMatrix M{{1, -2}, {3, 4}};
    M(0, 0) = Int("123456789012345678901234567890");
    CHECK(int_matrix_from_json(to_json(M)) == M);
    IntVector v{Int(5), Int("-99999999999999999999999")};
    CHECK(int_vector_from_json(to_json(v)) == v);
}

TEST_CASE("smith form stays small on a pivot-cycling input") {
    const IntMatrix M{{5, 2, 4}, {-3, -6, -2}, {-2, 5, 4}, {0, -6, -3}};
    auto s = smith_normal_form(M);
    CHECK(s.U * M * s.V == s.D);
    CHECK(s.diagonal == std::vector<Int>{1, 1, 1});
    for (std::size_t i = 0; i < s.V.rows(); ++i)
        for (std::size_t j = 0; j < s.V.cols(); ++j) CHECK(abs(s.V(i, j)) < 1000);
}

TEST_CASE("lll keeps the lattice and shortens") {
    std::mt19937_64 rng(11);
    for (int trial = 0; trial < 100; ++trial) {
        const std::size_t n = 2 + rng() % 3;
        IntMatrix B = random_matrix(rng, n, n, -30, 30);
        if (determinant(B) == 0) continue;
        std::vector<IntVector> rows;
        for (std::size_t i = 0; i < n; ++i) rows.push_back(B.row(i));
        const auto red = lll_reduce(rows);
        REQUIRE(red.size() == n);
        const IntMatrix R = IntMatrix::from_columns(red).transpose();
        CHECK(abs(determinant(R)) == abs(determinant(B)));
        // Same lattice: stacking both bases does not enlarge it.
        std::vector<IntVector> both = rows;
        both.insert(both.end(), red.begin(), red.end());
        Int index = 1;
        for (const auto& d : invariant_factors(IntMatrix::from_columns(both).transpose())) index *= d;
        CHECK(index == abs(determinant(B)));
        // |b_1|^2 <= 2^(n-1) lambda_1^2, and every input row bounds lambda_1.
        auto norm2 = [](const IntVector& v) {
            Int s = 0;
            for (const auto& x : v) s += x * x;
            return s;
        };
        for (const auto& r : rows) CHECK(norm2(red[0]) <= (Int(1) << (n - 1)) * norm2(r));
    }
    CHECK_THROWS_AS(lll_reduce({make_vector({1, 2}), make_vector({2, 4})}), std::invalid_argument);
}

TEST_CASE("nearest-plane reduction") {
    const std::vector<IntVector> basis{make_vector({2, 0}), make_vector({0, 3})};
    CHECK(reduce_against(make_vector({5, -4}), basis) == make_vector({-1, -1}));
    CHECK(reduce_against(make_vector({7, 7}), {}) == make_vector({7, 7}));
    const std::vector<IntVector> skew{make_vector({1, 1, 0}), make_vector({0, 1, 1})};
    const IntVector r = reduce_against(make_vector({100, 205, 101}), skew);
    // r - y = s (1,1,0) + t (0,1,1) for integers s, t.
    CHECK(r[1] - 205 == (r[0] - 100) + (r[2] - 101));
    Int n2 = 0;
    for (const auto& x : r) n2 += x * x;
    CHECK(n2 < 100);
}
