#include <doctest.h>

#include <stdexcept>

#include "ht/braid_burau.hpp"
#include "ht/marked_disk.hpp"
#include "ht/symplectic.hpp"

#include <random>

using namespace ht;

namespace {

IntVector unit(std::size_t dim, std::size_t i) {
    IntVector e(dim, 0);
    e[i] = 1;
    return e;
}

// Random element of Sp(form) as a product of transvections about small vectors.
IntMatrix random_sp(std::mt19937_64& rng, const SymplecticForm& form, int factors) {
    IntMatrix M = IntMatrix::identity(form.dim());
    for (int f = 0; f < factors; ++f) {
        IntVector v(form.dim(), 0);
        v[rng() % form.dim()] = 1;
        if (rng() % 2) v[rng() % form.dim()] += rng() % 2 ? 1 : -1;
        if (is_zero(v)) continue;
        multiply_by_transvection(M, v, form, rng() % 2 ? 1 : -1);
    }
    return M;
}

SpElementF2 random_sp_f2(std::mt19937_64& rng, const F2Form& form, int factors) {
    SpElementF2 N = SpElementF2::identity(form.dim());
    for (int f = 0; f < factors; ++f) {
        F2Vec w = static_cast<F2Vec>(rng() % ((F2Vec(1) << form.dim()) - 1)) + 1;
        N = N * SpElementF2::transvection(w, form);
    }
    return N;
}

// Random product of F2 transvections fixing every vector in `fixed`.
SpElementF2 random_stabilizer_f2(std::mt19937_64& rng, const F2Form& form, const std::vector<F2Vec>& fixed,
                                 int factors) {
    std::vector<F2Vec> allowed;
    for (F2Vec w = 1; w < (F2Vec(1) << form.dim()); ++w) {
        bool ok = true;
        for (F2Vec x : fixed) ok = ok && form.pair(x, w) == 0;
        if (ok) allowed.push_back(w);
    }
    SpElementF2 N = SpElementF2::identity(form.dim());
    if (allowed.empty()) return N;
    for (int f = 0; f < factors; ++f) N = N * SpElementF2::transvection(allowed[rng() % allowed.size()], form);
    return N;
}

F2Vec reduce_vec(const IntVector& v) {
    F2Vec x = 0;
    for (std::size_t i = 0; i < v.size(); ++i)
        if (v[i] % 2 != 0) x |= F2Vec(1) << i;
    return x;
}

// Standard coordinates: level 2 element fixing a_1 (and a_2, b_2-free when pair).
IntMatrix random_corrector_input(std::mt19937_64& rng, int g, bool pair) {
    const auto form = SymplecticForm::standard(g);
    IntMatrix Y = IntMatrix::identity(2 * g);
    for (int f = 0; f < 6; ++f) {
        IntVector v(2 * g, 0);
        for (auto& x : v) x = static_cast<long>(rng() % 5) - 2;
        v[g] = 0;
        if (pair) v[g + 1] = 0;
        if (is_zero(v)) continue;
        multiply_by_transvection(Y, v, form, rng() % 2 ? 2 : -2);
    }
    return Y;
}

ConvexCurve curve_range(int lo, int hi, int n) {
    std::vector<int> pts;
    for (int p = lo; p <= hi; ++p) pts.push_back(p);
    return ConvexCurve::from_points(pts, n);
}

}  // namespace

TEST_CASE("transvection examples") {
    const auto std2 = SymplecticForm::standard(2);
    const IntVector a1 = unit(4, 0), b1 = unit(4, 2);
    IntMatrix T = transvection(a1, std2);
    CHECK(T * b1 == add(b1, negate(a1)));
    CHECK(T * a1 == a1);
    CHECK(transvection(negate(a1), std2) == T);
    std::mt19937_64 rng(1);
    const auto ch = SymplecticForm::chain(3);
    for (int t = 0; t < 50; ++t) {
        IntVector v(6);
        for (auto& x : v) x = static_cast<long>(rng() % 7) - 3;
        if (is_zero(v)) continue;
        IntMatrix T2 = transvection(v, ch, 2);
        CHECK(T2 == transvection(v, ch) * transvection(v, ch));
        CHECK(is_level_two(T2));
        CHECK(reduce_mod2(T2).is_identity());
        IntMatrix D = T2 - IntMatrix::identity(6);
        CHECK(f2_rank(F2Matrix::reduce(D)) <= 1);
        CHECK(invariant_factors(D).size() == 1);
        CHECK(ch.preserves(transvection(v, ch, -3)));
    }
}

TEST_CASE("reduction is a homomorphism") {
    std::mt19937_64 rng(2);
    const auto form = SymplecticForm::chain(3);
    for (int t = 0; t < 100; ++t) {
        IntMatrix M = random_sp(rng, form, 8), N = random_sp(rng, form, 8);
        CHECK(reduce_mod2(M * N) == reduce_mod2(M) * reduce_mod2(N));
        CHECK(reduce_mod2(M).preserves(F2Form(form)));
        CHECK(reduce_mod2(M) * reduce_mod2(form.inverse_of(M)) == SpElementF2::identity(6));
    }
}

TEST_CASE("Sp(F2) orders") {
    CHECK(enumerate_sp_f2(1) == 6);
    CHECK(enumerate_sp_f2(2) == 720);
    CHECK(enumerate_sp_f2(3) == 1451520);
    CHECK_THROWS_AS(enumerate_sp_f2(4), std::length_error);
}

TEST_CASE("factorization into transvections") {
    const auto& store = sp_f2_store(F2Form::chain(2));
    for (const auto& x : store.elements()) {
        SpElementF2 prod = SpElementF2::identity(4);
        for (F2Vec w : store.factor(x)) prod = prod * SpElementF2::transvection(w, store.form());
        CHECK(prod == x);
    }
}

TEST_CASE("lift_mod2 round trip") {
    const auto form2 = SymplecticForm::chain(2);
    for (const auto& N : sp_f2_store(F2Form(form2)).elements()) {
        IntMatrix M = lift_mod2(N, form2);
        CHECK(form2.preserves(M));
        CHECK(reduce_mod2(M) == N);
    }
    const auto form3 = SymplecticForm::chain(3);
    CHECK(lift_mod2(SpElementF2::identity(6), form3).is_identity());
    std::mt19937_64 rng(3);
    for (int t = 0; t < 200; ++t) {
        SpElementF2 N = random_sp_f2(rng, F2Form(form3), 25);
        IntMatrix M = lift_mod2(N, form3);
        CHECK(form3.preserves(M));
        CHECK(reduce_mod2(M) == N);
    }
    for (F2Vec w = 1; w < 64; ++w) {
        IntVector v(6, 0);
        for (int i = 0; i < 6; ++i) v[i] = (w >> i) & 1u;
        CHECK(reduce_mod2(lift_mod2(SpElementF2::transvection(w, F2Form(form3)), form3)) ==
              reduce_mod2(transvection(v, form3)));
    }
}

TEST_CASE("standard basis change") {
    for (int g = 1; g <= 5; ++g) {
        const IntMatrix& P = standard_basis_change(g);
        CHECK(P.transpose() * SymplecticForm::chain(g).gram() * P == SymplecticForm::standard(g).gram());
        const int n = 2 * g + 1;
        for (int i = 1; i <= g; ++i) {
            CHECK(LaxVector(P.column(i - 1)) == lift_class(ConvexCurve::from_points({2 * i, 2 * i + 1}, n)));
            CHECK(LaxVector(P.column(g + i - 1)) == lift_class(curve_range(1, 2 * i, n)));
        }
        std::mt19937_64 rng(g);
        IntMatrix M = random_sp(rng, SymplecticForm::chain(g), 10);
        IntMatrix S = chain_to_standard(M, g);
        CHECK(SymplecticForm::standard(g).preserves(S));
        CHECK(standard_to_chain(S, g) == M);
    }
}

TEST_CASE("complete_partial_basis over Z") {
    const auto std3 = SymplecticForm::standard(3);
    CHECK(complete_partial_basis(std3, {}, {}).transpose() * std3.gram() * complete_partial_basis(std3, {}, {}) ==
          std3.gram());
    IntMatrix P1 = complete_partial_basis(std3, {unit(6, 0)}, {});
    CHECK(P1.column(0) == unit(6, 0));
    CHECK(P1.transpose() * std3.gram() * P1 == std3.gram());

    std::mt19937_64 rng(4);
    for (int g = 2; g <= 4; ++g) {
        const auto form = SymplecticForm::chain(g);
        const IntMatrix& Pstd = standard_basis_change(g);
        for (int t = 0; t < 40; ++t) {
            IntMatrix Q = random_sp(rng, form, 12) * Pstd;
            const int k = static_cast<int>(rng() % (g + 1));
            const int l = static_cast<int>(rng() % (g + 1));
            std::vector<IntVector> a, b;
            for (int i = 0; i < k; ++i) a.push_back(Q.column(i));
            for (int i = 0; i < l; ++i) b.push_back(Q.column(g + i));
            IntMatrix P = complete_partial_basis(form, a, b);
            CHECK(P.transpose() * form.gram() * P == SymplecticForm::standard(g).gram());
            for (int i = 0; i < k; ++i) CHECK(P.column(i) == a[i]);
            for (int i = 0; i < l; ++i) CHECK(P.column(g + i) == b[i]);
        }
    }
    {
        // Inputs whose completion used to carry 15-digit entries.
        const auto chain3 = SymplecticForm::chain(3);
        const std::vector<IntVector> a{make_vector({-60, -68, -110, 11, -69, -15}),
                                       make_vector({-68, -72, -120, 18, -73, -20}),
                                       make_vector({-5, -9, -14, -2, -10, 2})};
        const std::vector<IntVector> b{make_vector({5, 8, 12, 0, 8, 0})};
        IntMatrix P;
        for (std::size_t i = 0; i < 3 && P.rows() == 0; ++i) {
            // Put the vector that pairs with b first.
            std::vector<IntVector> order = a;
            std::swap(order[0], order[i]);
            const Int q = chain3.pair(order[0], b[0]);
            if (q == 1 || q == -1) P = complete_partial_basis(chain3, order, {q == 1 ? b[0] : negate(b[0])});
        }
        REQUIRE(P.rows() == 6);
        CHECK(P.transpose() * chain3.gram() * P == SymplecticForm::standard(3).gram());
        for (std::size_t i = 0; i < 6; ++i)
            for (std::size_t j = 0; j < 6; ++j) CHECK(abs(P(i, j)) < 1000);
    }
    // 2 a_1 spans a non-primitive line; a_1, a_1 is not isotropic-independent
    CHECK_THROWS_AS(complete_partial_basis(std3, {scale(2, unit(6, 0))}, {}), std::invalid_argument);
    CHECK_THROWS_AS(complete_partial_basis(std3, {unit(6, 0)}, {unit(6, 4)}), std::invalid_argument);
    CHECK_THROWS_AS(complete_partial_basis(std3, {unit(6, 0), unit(6, 3)}, {}), std::invalid_argument);
}

TEST_CASE("complete_partial_basis over F2") {
    std::mt19937_64 rng(5);
    for (int g = 1; g <= 4; ++g) {
        const F2Form form = F2Form::chain(g);
        for (int t = 0; t < 100; ++t) {
            SpElementF2 Q = random_sp_f2(rng, form, 20);
            const int k = static_cast<int>(rng() % (g + 1));
            const int l = static_cast<int>(rng() % (g + 1));
            std::vector<F2Vec> a, b;
            for (int i = 0; i < k; ++i) a.push_back(Q.column(i));
            for (int i = 0; i < l; ++i) b.push_back(Q.column(g + i));
            // Q maps the standard basis of the chain form; use its pairing
            // pattern only if it is standard, so build from the F2 standard basis.
            const auto full = complete_partial_basis_f2(form, {}, {});
            REQUIRE(full.size() == static_cast<std::size_t>(2 * g));
            std::vector<F2Vec> aa, bb;
            for (int i = 0; i < k; ++i) aa.push_back(Q.apply(full[i]));
            for (int i = 0; i < l; ++i) bb.push_back(Q.apply(full[g + i]));
            auto out = complete_partial_basis_f2(form, aa, bb);
            for (int i = 0; i < g; ++i)
                for (int j = 0; j < g; ++j) {
                    CHECK(form.pair(out[i], out[j]) == 0);
                    CHECK(form.pair(out[g + i], out[g + j]) == 0);
                    CHECK(form.pair(out[i], out[g + j]) == (i == j ? 1 : 0));
                }
            for (int i = 0; i < k; ++i) CHECK(out[i] == aa[i]);
            for (int i = 0; i < l; ++i) CHECK(out[g + i] == bb[i]);
            (void)a;
            (void)b;
        }
    }
    CHECK_THROWS_AS(complete_partial_basis_f2(F2Form::standard(2), {1u, 1u}, {}), std::invalid_argument);
}

TEST_CASE("lift_mod2_stabilizer") {
    const auto std3 = SymplecticForm::standard(3);
    CHECK(lift_mod2_stabilizer(SpElementF2::identity(6), std3, {unit(6, 0)}, {}).is_identity());
    {
        IntMatrix T = transvection(unit(6, 3), std3, 2);
        IntMatrix M = lift_mod2_stabilizer(reduce_mod2(T), std3, {unit(6, 0)}, {});
        CHECK(M * unit(6, 0) == unit(6, 0));
        CHECK(reduce_mod2(M) == reduce_mod2(T));
    }
    std::mt19937_64 rng(6);
    for (int g = 2; g <= 3; ++g) {
        const auto form = SymplecticForm::chain(g);
        const F2Form f2(form);
        const IntMatrix& Pstd = standard_basis_change(g);
        for (int t = 0; t < 100; ++t) {
            IntMatrix Q = random_sp(rng, form, 10) * Pstd;
            const int k = 1 + static_cast<int>(rng() % g);
            const int l = t % 3 == 0 ? static_cast<int>(rng() % (g + 1)) : 0;
            std::vector<IntVector> a, b;
            std::vector<F2Vec> fixed;
            for (int i = 0; i < k; ++i) {
                a.push_back(Q.column(i));
                fixed.push_back(reduce_vec(a.back()));
            }
            for (int i = 0; i < l; ++i) {
                b.push_back(Q.column(g + i));
                fixed.push_back(reduce_vec(b.back()));
            }
            SpElementF2 N = random_stabilizer_f2(rng, f2, fixed, 12);
            IntMatrix M = lift_mod2_stabilizer(N, form, a, b);
            CHECK(form.preserves(M));
            CHECK(reduce_mod2(M) == N);
            for (const auto& v : a) CHECK(M * v == v);
            for (const auto& v : b) CHECK(M * v == v);
        }
    }
    // N moving the reduced a_1
    CHECK_THROWS_AS(lift_mod2_stabilizer(reduce_mod2(transvection(unit(6, 3), std3)), std3, {unit(6, 0)}, {}),
                    std::invalid_argument);
}

TEST_CASE("corrector for a single fixed vector") {
    CHECK(stabilizer_corrector_single(IntMatrix::identity(6)).Z.is_identity());
    {
        IntMatrix Y = transvection(unit(6, 3), SymplecticForm::standard(3), 2);
        CHECK_THROWS_AS(stabilizer_corrector_single(Y), std::invalid_argument);
    }
    {
        IntMatrix Y = transvection(unit(6, 0), SymplecticForm::standard(3), 2);
        auto r = stabilizer_corrector_single(Y);
        CHECK(r.Z * Y * unit(6, 3) == unit(6, 3));
    }
    CHECK_THROWS_AS(stabilizer_corrector_single(transvection(unit(6, 0), SymplecticForm::standard(3))),
                    std::invalid_argument);
    std::mt19937_64 rng(7);
    for (int g = 2; g <= 4; ++g) {
        const int m = 2 * g + 1;
        const IntMatrix& Pg = standard_basis_change(g);
        const ConvexCurve c23 = ConvexCurve::from_points({2, 3}, m);
        std::vector<LaxVector> allowed;
        for (const auto& c : all_convex_curves(m))
            if (c.is_even() && geometric_intersection(c, c23) == 0) allowed.push_back(lift_class(c));
        std::sort(allowed.begin(), allowed.end());
        for (int t = 0; t < (g == 3 ? 1000 : 200); ++t) {
            IntMatrix Y = random_corrector_input(rng, g, false);
            auto r = stabilizer_corrector_single(Y);
            CHECK(r.Z * Y * unit(2 * g, g) == unit(2 * g, g));
            CHECK(SymplecticForm::standard(g).preserves(r.Z));
            CHECK(is_level_two(r.Z));
            for (const auto& f : r.factors) {
                CHECK(f.exponent % 2 == 0);
                CHECK(std::binary_search(allowed.begin(), allowed.end(), LaxVector(Pg * f.v)));
            }
        }
    }
}

TEST_CASE("corrector for a fixed pair") {
    CHECK(stabilizer_corrector_pair(IntMatrix::identity(6)).Z.is_identity());
    std::mt19937_64 rng(8);
    for (int g = 3; g <= 4; ++g) {
        const int n = 2 * g + 1;
        const IntMatrix& P = standard_basis_change(g);
        const ConvexCurve c23 = ConvexCurve::from_points({2, 3}, n), c45 = ConvexCurve::from_points({4, 5}, n);
        std::vector<LaxVector> named{lift_class(c23)};
        for (int i = 2; i <= g; ++i) {
            named.push_back(lift_class(ConvexCurve::from_points({2, 3, 2 * i, 2 * i + 1}, n)));  // E_i
            std::vector<int> F{1};
            for (int p = 4; p <= 2 * i; ++p) F.push_back(p);
            if (i >= 3) {
                named.push_back(lift_class(ConvexCurve::from_points(F, n)));  // F_i
                named.push_back(lift_class(curve_range(1, 2 * i, n)));
            }
        }
        for (int t = 0; t < (g == 3 ? 1000 : 200); ++t) {
            IntMatrix Y = random_corrector_input(rng, g, true);
            auto r = stabilizer_corrector_pair(Y);
            CHECK(r.Z * Y * unit(2 * g, g) == unit(2 * g, g));
            CHECK(r.Z * unit(2 * g, 1) == unit(2 * g, 1));
            for (const auto& f : r.factors) {
                CHECK(f.exponent % 2 == 0);
                const LaxVector lv(P * f.v);
                CHECK(std::find(named.begin(), named.end(), lv) != named.end());
            }
        }
        // every named curve is disjoint from c_23 and c_45
        for (const auto& c : all_convex_curves(n)) {
            if (!c.is_even()) continue;
            const LaxVector lv = lift_class(c);
            if (std::find(named.begin(), named.end(), lv) == named.end()) continue;
            if (c.mask() == c23.mask()) continue;
            CHECK(geometric_intersection(c, c23) == 0);
            CHECK(geometric_intersection(c, c45) == 0);
        }
    }
}

TEST_CASE("xi generating set") {
    for (int g = 3; g <= 5; ++g) {
        auto xi = xi_generating_set(g);
        CHECK(xi.size() == static_cast<std::size_t>(2 * g + 1));
        CHECK(xi[0].name == "-I");
        CHECK(xi[0].M == -IntMatrix::identity(2 * g));
        const auto form = SymplecticForm::chain(g);
        const LaxVector v23(unit(2 * g, 1));
        CHECK(v23 == lift_class(ConvexCurve::from_points({2, 3}, 2 * g + 1)));
        for (const auto& x : xi) {
            CHECK(form.preserves(x.M));
            CHECK(LaxVector(x.M * unit(2 * g, 1)) == v23);
        }
    }
    CHECK_THROWS_AS(xi_generating_set(2), std::invalid_argument);
}

TEST_CASE("braid images mod 2 form the symmetric group") {
    std::size_t factorial = 1;
    for (int g = 1; g <= 3; ++g) {
        const int n = 2 * g + 1;
        factorial *= static_cast<std::size_t>((n - 1) * n);
        std::vector<SpElementF2> gens;
        for (int i = 1; i < n; ++i) gens.push_back(reduce_mod2(burau_symplectic(BraidWord(n, {{i, 1}}))));
        const auto& store = sp_f2_store(F2Form::chain(g));
        for (const auto& x : gens) CHECK(store.contains(x));
        CHECK(store.closure_order(gens) == factorial);
        for (int i = 1; i <= n; ++i)
            for (int j = i + 1; j <= n; ++j)
                CHECK(reduce_mod2(burau_symplectic(pure_twist_word(n, i, j))).is_identity());
    }
    // squared generators land in the level 2 subgroup; single ones do not
    CHECK(is_level_two(burau_symplectic(BraidWord::parse("s1^2 s3^-2", 7))));
    CHECK_FALSE(is_level_two(burau_symplectic(BraidWord::parse("s1", 7))));
}
