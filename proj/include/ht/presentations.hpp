// Finite presentations of the pure braid quotient and of Sp, their
// evaluators in Sp_2g(Z)[2], the surgery action of twists on chords, and
// the finite sweeps built on them.
//
// The quotient group itself is never represented. Every claim about it is
// checked through its image in Sp_2g(Z)[2].
#pragma once

#include "ht/braid_burau.hpp"
#include "ht/marked_disk.hpp"
#include "ht/report.hpp"

#include <functional>
#include <set>
#include <string>
#include <vector>

namespace ht {

struct SpGenerator {
    std::string name;
    ConvexCurve curve;
};

/// a0, a1..a2g, a0', b1, b1', b2, b3, u, u', v, v', v'' with their convex
/// curves in the disk with 2g+1 points. Requires g >= 3.
std::vector<SpGenerator> sp_generators(int g);
int sp_generator_index(int g, const std::string& name);

/// All chords c_ij, in all_chords order.
std::vector<ConvexCurve> q_generators(int g);
int q_generator_index(int g, int i, int j);

enum class RelatorFamily {
    disjointness_q,
    triangle,
    crossing,
    odd_twist,
    disjointness_sp,
    braid,
    chain3,
    lantern,
    auxiliary,
    bounding_pair,
    inverse_pair
};

std::string to_string(RelatorFamily f);

/// gen^exp, where gen indexes the generator list of the presentation.
struct Letter {
    int gen = 0;
    int exp = 1;
    bool operator==(const Letter&) const = default;
};
using FreeWord = std::vector<Letter>;

FreeWord inverse(const FreeWord& w);
FreeWord concat(std::initializer_list<FreeWord> parts);
std::string format_word(const FreeWord& w, const std::vector<std::string>& names);

struct Relator {
    RelatorFamily family;
    std::string label;
    std::vector<int> params;  // point labels, or the subset for odd twists
    FreeWord word;
};

/// Generators occurring in the word.
std::set<int> involved(const Relator& r);

/// Disjointness, triangle, crossing and odd-twist relators, g >= 2.
std::vector<Relator> generate_RQ(int g);
/// The six families, with b0 written as its conjugation word, g >= 3.
std::vector<Relator> generate_RSp(int g);
/// generate_RSp plus t t^-1 for every generator.
std::vector<Relator> generate_RSp_hat(int g);

/// Product of tau_{v_a}^e over the letters, with v_a the lift class of the
/// generator's curve.
IntMatrix sp_eval(const FreeWord& w, int g);

/// Product of tau^{2e} about lift classes of chords.
IntMatrix shadow_pi(const FreeWord& w, int g);

/// |algebraic intersection| rule used by the surgery action; replaceable so
/// that the suite can be run against a corrupted rule.
using AbsIntersectionRule = std::function<int(const ConvexCurve&, const ConvexCurve&)>;

/// Class of the surgered chord for t_a^eps acting on c: v_c + k v_a or
/// v_c - k v_a with k = |i|(a, c), whichever agrees with tau_{v_a}^eps(v_c)
/// as a lax vector. Throws std::runtime_error if neither does.
IntVector surgery_class(const ConvexCurve& a, int eps, const ConvexCurve& c, int g,
                        const AbsIntersectionRule& rule = alg_intersection_abs);

/// tau^2 of surgery_class for the letter t (a generator of S_Sp and a sign).
IntMatrix surgery_shadow(const Letter& t, const ConvexCurve& c, int g);

/// s_ij s_jk s_ik over q_generators(g).
FreeWord s_cijk_word(int i, int j, int k, int g);

/// 0 if the pair fails, else the first condition that holds.
struct ReducibilityVerdict {
    int condition = 0;
    // The curve-free marked point (2) or the consecutive pair (3).
    std::vector<int> witness;
};

ReducibilityVerdict reducibility_criterion(const Relator& r, const ConvexCurve& c, int g);
ReducibilityVerdict reducibility_criterion(const std::vector<ConvexCurve>& curves, const ConvexCurve& c);

/// Largest geometric intersection of a with any convex curve.
int max_convex_intersection(const ConvexCurve& a);

SuiteReport verify_sp_relations(int g);
/// Untwisted baseline plus every twist t in S_Sp^{+-1}.
SuiteReport verify_q_shadow(int g, const AbsIntersectionRule& rule = alg_intersection_abs);
SuiteReport verify_reducibility_sweep(int g);
SuiteReport verify_lemma_the_fact(int g);

}  // namespace ht
