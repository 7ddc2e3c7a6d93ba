#include <doctest.h>

#include <stdexcept>

#include "ht/marked_disk.hpp"

using namespace ht;

namespace {

ConvexCurve cv(const std::string& s, int n) { return ConvexCurve::parse(s, n); }

void sweep_against_oracle(int n) {
    const auto curves = all_convex_curves(n);
    long mismatches = 0;
    for (std::size_t i = 0; i < curves.size(); ++i)
        for (std::size_t j = i; j < curves.size(); ++j) {
            const int rule = geometric_intersection(curves[i], curves[j]);
            const int oracle = geometric_intersection_oracle(curves[i], curves[j]).crossings;
            if (rule != oracle || rule != geometric_intersection(curves[j], curves[i])) ++mismatches;
        }
    CHECK(mismatches == 0);
}

}  // namespace

TEST_CASE("curve literals") {
    auto c = cv("c{4, 1,2}", 7);
    CHECK(c.to_string() == "c{1,2,4}");
    CHECK(c.size() == 3);
    CHECK_FALSE(c.is_even());
    CHECK_THROWS_AS(cv("c{1}", 7), std::invalid_argument);
    CHECK_THROWS_AS(cv("c{1,8}", 7), std::invalid_argument);
    CHECK_THROWS_AS(cv("c{1,1}", 7), std::invalid_argument);
    CHECK_THROWS_AS(cv("{1,2}", 7), std::invalid_argument);
    CHECK(all_convex_curves(5).size() == 26);
    CHECK(all_chords(7).size() == 21);
}

TEST_CASE("geometric intersection examples") {
    CHECK(geometric_intersection(cv("c{2,3}", 7), cv("c{4,5}", 7)) == 0);
    CHECK(geometric_intersection(cv("c{1,2}", 7), cv("c{2,3}", 7)) == 2);
    CHECK(geometric_intersection(cv("c{1,2,3,4}", 7), cv("c{4,5}", 7)) == 2);
    CHECK(geometric_intersection(cv("c{2,3,5,6}", 7), cv("c{1,4}", 7)) == 4);
    CHECK(geometric_intersection(cv("c{1,2,3}", 7), cv("c{1,2,3,4,5}", 7)) == 0);
    CHECK(geometric_intersection(cv("c{1,3}", 4), cv("c{2,4}", 4)) == 4);
}

TEST_CASE("oracle examples") {
    CHECK(geometric_intersection_oracle(cv("c{1,2}", 5), cv("c{3,4}", 5)).crossings == 0);
    CHECK(geometric_intersection_oracle(cv("c{1,2,3,4}", 7), cv("c{4,5}", 7)).crossings == 2);
    CHECK(geometric_intersection_oracle(cv("c{2,3,5,6}", 7), cv("c{1,4}", 7)).crossings == 4);
}

TEST_CASE("chord intersections follow the endpoint rule") {
    for (int n : {5, 7, 8}) {
        for (const auto& a : all_convex_curves(n))
            for (const auto& c : all_chords(n)) {
                const auto e = c.points();
                const int inside = a.contains(e[0]) + a.contains(e[1]);
                const int i = geometric_intersection(a, c);
                if (inside == 2) {
                    CHECK(i == 0);
                } else if (inside == 1) {
                    CHECK(i == 2);
                } else {
                    std::vector<int> rest = a.points();
                    auto [s1, s2] = chord_separation(c, rest);
                    CHECK(i == ((s1.empty() || s2.empty()) ? 0 : 4));
                }
            }
    }
}

TEST_CASE("oracle agrees with the rule for n <= 8") {
    for (int n = 3; n <= 8; ++n) {
        CAPTURE(n);
        sweep_against_oracle(n);
    }
}

TEST_CASE("oracle agrees with the rule for n = 9") { sweep_against_oracle(9); }

TEST_CASE("algebraic intersection with chords") {
    CHECK(alg_intersection_abs(cv("c{1,2,3,4}", 7), cv("c{4,5}", 7)) == 1);
    CHECK(alg_intersection_abs(cv("c{2,3,5,6}", 7), cv("c{1,4}", 7)) == 0);
    CHECK(alg_intersection_abs(cv("c{1,2,3,6}", 7), cv("c{4,7}", 7)) == 2);
    CHECK_THROWS_AS(alg_intersection_abs(cv("c{1,2,3}", 7), cv("c{4,5}", 7)), std::invalid_argument);
    CHECK_THROWS_AS(alg_intersection_abs(cv("c{1,2}", 7), cv("c{4,5,6}", 7)), std::invalid_argument);
    for (const auto& a : all_convex_curves(7)) {
        if (!a.is_even()) continue;
        for (const auto& c : all_chords(7)) {
            const int i = geometric_intersection(a, c);
            if (i > 4) continue;
            CHECK(2 * alg_intersection_abs(a, c) <= i);
        }
    }
}

TEST_CASE("chord separation") {
    using V = std::vector<int>;
    auto [a1, a2] = chord_separation(cv("c{4,7}", 7), {1, 2, 3, 6});
    CHECK(a1 == V{6});
    CHECK(a2 == V{1, 2, 3});
    auto [b1, b2] = chord_separation(cv("c{1,4}", 7), {2, 3, 5, 6});
    CHECK(b1 == V{2, 3});
    CHECK(b2 == V{5, 6});
    auto [c1, c2] = chord_separation(cv("c{1,2}", 5), {3, 4, 5});
    CHECK(c1.empty());
    CHECK(c2 == V{3, 4, 5});
    CHECK_THROWS_AS(chord_separation(cv("c{1,2,3}", 5), {4}), std::invalid_argument);
}
