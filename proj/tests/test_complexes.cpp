#include <doctest.h>

#include "ht/complexes.hpp"

#include <algorithm>
#include <random>

using namespace ht;

namespace {

std::vector<F2Vec> reduce_basis(const IntMatrix& P) {
    std::vector<F2Vec> out;
    for (std::size_t j = 0; j < P.cols(); ++j) {
        F2Vec x = 0;
        for (std::size_t i = 0; i < P.rows(); ++i)
            if (P(i, j) % 2 != 0) x |= F2Vec(1) << i;
        out.push_back(x);
    }
    return out;
}

IntMatrix random_sp(std::mt19937_64& rng, const SymplecticForm& form, int steps) {
    IntMatrix M = IntMatrix::identity(form.dim());
    for (int s = 0; s < steps; ++s) {
        IntVector v(form.dim(), 0);
        v[rng() % form.dim()] = 1;
        if (rng() % 2) v[rng() % form.dim()] += 1;
        if (is_zero(v)) continue;
        multiply_by_transvection(M, v, form, rng() % 2 ? 1 : -1);
    }
    return M;
}

IntMatrix random_level_two(std::mt19937_64& rng, const SymplecticForm& form, int steps) {
    IntMatrix M = IntMatrix::identity(form.dim());
    for (int s = 0; s < steps; ++s) {
        IntVector v(form.dim(), 0);
        for (auto& x : v) x = static_cast<long>(rng() % 3) - 1;
        if (is_zero(v)) continue;
        multiply_by_transvection(M, primitive_normalize(v), form, rng() % 2 ? 2 : -2);
    }
    return M;
}

}  // namespace

TEST_CASE("Tits building sizes and homology") {
    auto B1 = build_tits_f2(1);
    CHECK(B1.count(0) == 3);
    CHECK(B1.dimension() == 0);
    auto B2 = build_tits_f2(2);
    CHECK(B2.count(0) == 30);
    CHECK(B2.count(1) == 45);
    CHECK(B2.is_closed());
    auto h2 = homology_profile(B2, Coefficients::z);
    CHECK(h2.reduced_betti(0) == 0);
    CHECK(h2.reduced_betti(1) == 16);
    auto B3 = build_tits_f2(3);
    CHECK(B3.count(0) == 513);
    CHECK(B3.count(1) == 945 * 3);
    CHECK(B3.count(2) == 135 * 7 * 3);
    auto h3 = homology_profile(B3, Coefficients::z);
    CHECK(h3.reduced_betti(0) == 0);
    CHECK(h3.reduced_betti(1) == 0);
    CHECK(h3.reduced_betti(2) == 512);
    CHECK(h3.torsion[1].empty());
    CHECK_THROWS_AS(build_tits_f2(4), std::length_error);
}

TEST_CASE("isotropic basis complex") {
    auto X2 = build_ib_f2(2);
    CHECK(X2.count(0) == 15);
    CHECK(X2.count(1) == 45);
    auto h2 = homology_profile(X2, Coefficients::z);
    CHECK(h2.reduced_betti(0) == 0);
    CHECK(h2.reduced_betti(1) == 31);
    auto X3 = build_ib_f2(3);
    CHECK(X3.count(0) == 63);
    CHECK(X3.count(1) == 945);
    CHECK(X3.count(2) == 3780);
    CHECK(X3.is_closed());
    CHECK(X3.euler_characteristic() == 2898);
    auto h3 = homology_profile(X3, Coefficients::f2);
    CHECK(h3.reduced_betti(0) == 0);
    CHECK(h3.reduced_betti(1) == 0);
    CHECK(h3.reduced_betti(2) == 2897);
}

TEST_CASE("augmented complex in genus 3") {
    auto X = build_ibhat_f2(3);
    REQUIRE(X.dimension() == 3);
    CHECK(X.count(0) == 63);
    CHECK(X.count(1) == 1953);
    CHECK(X.count(2) == 19215);
    CHECK(X.count(3) == 50085);
    CHECK(X.is_closed());
    const auto& k1 = X.kinds(1);
    CHECK(std::count(k1.begin(), k1.end(), SimplexKind::intersection) == 1008);
    const auto& k2 = X.kinds(2);
    CHECK(std::count(k2.begin(), k2.end(), SimplexKind::additive) == 315);

    auto hf = homology_profile(X, Coefficients::f2);
    auto hz = homology_profile(X, Coefficients::z);
    for (int d = 0; d <= 2; ++d) {
        CHECK(hf.reduced_betti(d) == 0);
        CHECK(hz.reduced_betti(d) == 0);
        CHECK(hz.torsion[d].empty());
    }
    CHECK(hz.boundary_rank[1] == 62);
    CHECK(hz.boundary_rank[2] == 1891);
    CHECK(hz.boundary_rank[3] == 17324);
    CHECK(hz.betti[3] == X.euler_characteristic() * -1 + 1);
}

TEST_CASE("boundary squares to zero") {
    for (auto X : {build_tits_f2(2), build_ib_f2(3), build_ibhat_f2(2)}) {
        for (int d = 2; d <= X.dimension(); ++d) {
            auto A = to_dense(X.boundary(d - 1)), B = to_dense(X.boundary(d));
            CHECK((A * B).is_zero());
        }
    }
}

TEST_CASE("enumeration agrees with the classifier") {
    // Every set of at most 4 vectors in genus 3 is a simplex exactly when the
    // classifier accepts it, with the same kind.
    const F2Form form = F2Form::chain(3);
    auto X = build_ibhat_f2(3);
    std::size_t accepted = 0;
    std::vector<F2Vec> cur;
    auto rec = [&](auto&& self, F2Vec from) -> void {
        if (!cur.empty()) {
            auto k = classify_f2(form, cur);
            Simplex s;
            for (F2Vec v : cur) s.push_back(v - 1);
            auto idx = X.find(s);
            CHECK(k.has_value() == idx.has_value());
            if (k && idx) {
                CHECK(X.kinds(static_cast<int>(s.size()) - 1)[*idx] == *k);
                ++accepted;
            }
        }
        if (cur.size() == 4) return;
        for (F2Vec w = from; w < 64; ++w) {
            cur.push_back(w);
            self(self, w + 1);
            cur.pop_back();
        }
    };
    rec(rec, 1);
    CHECK(accepted == X.total());
}

TEST_CASE("Sp(F2) acts on the augmented complex") {
    const F2Form form = F2Form::chain(3);
    auto X = build_ibhat_f2(3);
    std::mt19937_64 rng(11);
    const auto& store = sp_f2_store(form);
    auto elems = store.elements();
    for (int t = 0; t < 50; ++t) {
        const auto& T = elems[rng() % elems.size()];
        for (int d = 0; d <= 3; ++d) {
            const auto& cs = X.simplices(d);
            for (int r = 0; r < 40; ++r) {
                const std::size_t i = rng() % cs.size();
                Simplex img;
                for (auto v : cs[i]) img.push_back(T.apply(v + 1) - 1);
                std::sort(img.begin(), img.end());
                auto j = X.find(img);
                REQUIRE(j.has_value());
                CHECK(X.kinds(d)[*j] == X.kinds(d)[i]);
            }
        }
    }
}

TEST_CASE("sphere filling") {
    const F2Form form = F2Form::chain(3);
    auto std_basis = reduce_basis(standard_basis_change(3));
    auto cert = verify_sphere_filling(form, std_basis);
    CHECK(cert.ok);
    CHECK(cert.tetrahedra.size() == 4);
    CHECK(sphere_cycle(form, std_basis).size() == 8);

    std::mt19937_64 rng(5);
    auto elems = sp_f2_store(form).elements();
    for (int t = 0; t < 50; ++t) {
        const auto& T = elems[rng() % elems.size()];
        std::vector<F2Vec> b;
        for (F2Vec v : std_basis) b.push_back(T.apply(v));
        CHECK(verify_sphere_filling(form, b).ok);
    }
    auto bad = std_basis;
    std::swap(bad[0], bad[1]);
    bad[3] = bad[0] ^ bad[3];
    CHECK_FALSE(verify_sphere_filling(form, bad).ok);
    CHECK_FALSE(verify_sphere_filling(F2Form::chain(2), reduce_basis(standard_basis_change(2))).ok);
}

TEST_CASE("small sets of vectors") {
    for (int n = 1; n <= 5; ++n) {
        auto rep = verify_setsofvec(n);
        CHECK(rep.ok);
        std::size_t N = (1u << n) - 1, expect = 0, c = 1;
        for (std::size_t k = 0; k <= 4 && k <= N; ++k) {
            expect += c;
            c = c * (N - k) / (k + 1);
        }
        CHECK(rep.subsets == expect);
    }
    auto r3 = verify_setsofvec(3);
    CHECK(r3.per_shape[4] == 7);   // lines of the Fano plane
    CHECK(r3.per_shape[7] == 7);   // complements of lines
    CHECK(r3.per_shape[6] == 28);  // a line plus a point off it
}

TEST_CASE("reduction of simplices over Z") {
    const auto form = SymplecticForm::chain(3);
    const IntMatrix& P = standard_basis_change(3);
    auto a = [&](int i) { return P.column(i - 1); };
    auto b = [&](int i) { return P.column(2 + i); };
    CHECK(reduce_simplex(form, {a(1), a(2), a(3)}).kind == SimplexKind::standard);
    CHECK(reduce_simplex(form, {a(1), b(1), a(2)}).kind == SimplexKind::intersection);
    CHECK(reduce_simplex(form, {a(1), a(2), add(a(1), negate(a(2)))}).kind == SimplexKind::additive);
    CHECK(reduce_simplex(form, {a(1), a(2), a(3), add(add(a(1), a(2)), negate(a(3)))}).kind == SimplexKind::additive);
    CHECK_THROWS_AS(reduce_simplex(form, {a(1), add(a(1), scale(2, a(2)))}), std::invalid_argument);
    CHECK_THROWS_AS(reduce_simplex(form, {a(1), b(1), b(2), a(2)}), std::invalid_argument);
    CHECK_THROWS_AS(reduce_simplex(form, {a(1), scale(3, b(1))}), std::invalid_argument);
    CHECK_THROWS_AS(reduce_simplex(form, {a(1), negate(a(1))}), std::invalid_argument);
}

TEST_CASE("matching simplices with equal reductions") {
    std::mt19937_64 rng(7);
    for (int g : {2, 3}) {
        const auto form = SymplecticForm::chain(g);
        const IntMatrix& P = standard_basis_change(g);
        auto a = [&](int i) { return P.column(i - 1); };
        auto b = [&](int i) { return P.column(g + i - 1); };
        std::vector<std::vector<IntVector>> bases{{a(1)}, {a(1), b(1)}, {a(1), a(2), add(a(1), a(2))}};
        if (g == 3) {
            bases.push_back({a(1), a(2), a(3)});
            bases.push_back({a(1), b(1), a(2), a(3)});
            bases.push_back({a(1), a(2), a(3), add(add(a(1), a(2)), a(3))});
            bases.push_back({a(1), a(2), a(3), add(a(2), a(3))});
        }
        for (int t = 0; t < 60; ++t) {
            const auto& base = bases[t % bases.size()];
            const IntMatrix X = random_sp(rng, form, 6);
            const IntMatrix T = random_level_two(rng, form, 3);
            std::vector<IntVector> s1, s2;
            for (const auto& v : base) {
                s1.push_back(X * v);
                IntVector w = T * (X * v);
                s2.push_back(rng() % 2 ? w : negate(w));
            }
            std::shuffle(s2.begin(), s2.end(), rng);
            const IntMatrix M = match_simplices(form, s1, s2);
            CHECK(form.preserves(M));
            CHECK(is_level_two(M));
            CHECK(maps_lax_set(M, s1, s2));
        }
    }
    const auto form = SymplecticForm::chain(2);
    const IntMatrix& P = standard_basis_change(2);
    CHECK_THROWS_AS(match_simplices(form, {P.column(0)}, {P.column(1)}), std::invalid_argument);
}
