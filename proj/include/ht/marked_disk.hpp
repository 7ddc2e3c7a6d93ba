// Convex curves in a disk with n marked points in convex position.
//
// Points are labelled 1..n clockwise around a regular n-gon. A convex curve
// is the boundary of a thin neighbourhood of the convex hull of a subset A
// with 2 <= |A| <= n; it is determined by A alone.
#pragma once

#include <cstdint>
#include <string>
#include <utility>
#include <vector>

namespace ht {

constexpr int kMaxPoints = 31;

class ConvexCurve {
public:
    ConvexCurve() = default;
    /// Bit k-1 of `mask` marks point k. Throws std::invalid_argument unless
    /// 3 <= n <= kMaxPoints and 2 <= |A| <= n with A inside 1..n.
    ConvexCurve(std::uint32_t mask, int n);
    static ConvexCurve from_points(const std::vector<int>& points, int n);
    /// Accepts "c{1,2,3,4}" (whitespace tolerated).
    static ConvexCurve parse(const std::string& text, int n);

    std::uint32_t mask() const { return mask_; }
    int n() const { return n_; }
    int size() const;
    bool contains(int p) const { return (mask_ >> (p - 1)) & 1u; }
    bool is_chord() const { return size() == 2; }
    bool is_even() const { return size() % 2 == 0; }
    std::vector<int> points() const;
    std::string to_string() const;

    auto operator<=>(const ConvexCurve&) const = default;

private:
    std::uint32_t mask_ = 0;
    int n_ = 0;
};

ConvexCurve chord(int i, int j, int n);

/// All convex curves for n points, ordered by (size, mask).
std::vector<ConvexCurve> all_convex_curves(int n);
std::vector<ConvexCurve> all_chords(int n);

/// Minimal geometric intersection number, computed from the cyclic pattern
/// of the two point sets.
int geometric_intersection(const ConvexCurve& a, const ConvexCurve& b);

/// |algebraic intersection| of the lifts to the branched double cover, for
/// an even curve a and a chord c. Requires geometric_intersection <= 4.
int alg_intersection_abs(const ConvexCurve& a, const ConvexCurve& c);

/// Splits S (points not on the chord) into the side met going clockwise
/// from the chord's first endpoint and the side met after its second
/// endpoint; each side listed in clockwise order.
std::pair<std::vector<int>, std::vector<int>> chord_separation(const ConvexCurve& c,
                                                               const std::vector<int>& S);

/// Result of the geometric cross-check.
struct OracleResult {
    int crossings = 0;
    int attempts = 0;  // radius assignments tried before a bigon-free one
};

/// Independent computation: places the points with integer coordinates in
/// strictly convex position, builds polygonal inflations of both hulls,
/// counts boundary crossings exactly and checks that no complementary
/// bigon is free of marked points. Throws std::runtime_error if every
/// radius assignment degenerates or leaves an empty bigon.
OracleResult geometric_intersection_oracle(const ConvexCurve& a, const ConvexCurve& b);

}  // namespace ht
