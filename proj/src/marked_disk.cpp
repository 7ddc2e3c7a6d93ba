#include "ht/marked_disk.hpp"

#include <algorithm>
#include <bit>
#include <cctype>
#include <stdexcept>

namespace ht {

ConvexCurve::ConvexCurve(std::uint32_t mask, int n) : mask_(mask), n_(n) {
    if (n < 3 || n > kMaxPoints) throw std::invalid_argument("number of marked points out of range");
    if (mask >> n) throw std::invalid_argument("curve contains a point outside 1..n");
    if (std::popcount(mask) < 2) throw std::invalid_argument("convex curve must surround at least two points");
}

ConvexCurve ConvexCurve::from_points(const std::vector<int>& points, int n) {
    std::uint32_t m = 0;
    for (int p : points) {
        if (p < 1 || p > n) throw std::invalid_argument("marked point out of range");
        if ((m >> (p - 1)) & 1u) throw std::invalid_argument("repeated marked point");
        m |= 1u << (p - 1);
    }
    return ConvexCurve(m, n);
}

ConvexCurve ConvexCurve::parse(const std::string& text, int n) {
    std::string s;
    for (char ch : text)
        if (!std::isspace(static_cast<unsigned char>(ch))) s.push_back(ch);
    if (s.size() < 4 || s[0] != 'c' || s[1] != '{' || s.back() != '}')
        throw std::invalid_argument("curve literal must look like c{1,2,3}");
    std::vector<int> pts;
    std::string body = s.substr(2, s.size() - 3);
    std::size_t pos = 0;
    while (pos <= body.size()) {
        std::size_t comma = body.find(',', pos);
        std::string tok = body.substr(pos, comma == std::string::npos ? std::string::npos : comma - pos);
        if (tok.empty() || !std::all_of(tok.begin(), tok.end(), [](char ch) { return std::isdigit(static_cast<unsigned char>(ch)); }))
            throw std::invalid_argument("bad point label in curve literal");
        pts.push_back(std::stoi(tok));
        if (comma == std::string::npos) break;
        pos = comma + 1;
    }
    return from_points(pts, n);
}

int ConvexCurve::size() const { return std::popcount(mask_); }

std::vector<int> ConvexCurve::points() const {
    std::vector<int> p;
    for (int k = 1; k <= n_; ++k)
        if (contains(k)) p.push_back(k);
    return p;
}

std::string ConvexCurve::to_string() const {
    std::string s = "c{";
    bool first = true;
    for (int p : points()) {
        if (!first) s += ',';
        s += std::to_string(p);
        first = false;
    }
    return s + "}";
}

ConvexCurve chord(int i, int j, int n) { return ConvexCurve::from_points({i, j}, n); }

std::vector<ConvexCurve> all_convex_curves(int n) {
    std::vector<ConvexCurve> out;
    for (int k = 2; k <= n; ++k)
        for (std::uint32_t m = 0; m < (1u << n); ++m)
            if (std::popcount(m) == k) out.emplace_back(m, n);
    return out;
}

std::vector<ConvexCurve> all_chords(int n) {
    std::vector<ConvexCurve> out;
    for (int i = 1; i <= n; ++i)
        for (int j = i + 1; j <= n; ++j) out.push_back(chord(i, j, n));
    return out;
}

namespace {

enum Side : char { kA = 'A', kB = 'B', kNone = 0 };

// Number of sign changes in a cyclic sequence.
int cyclic_changes(const std::vector<char>& seq) {
    int ch = 0;
    for (std::size_t i = 0; i < seq.size(); ++i)
        if (seq[i] != seq[(i + 1) % seq.size()]) ++ch;
    return ch;
}

}  // namespace

int geometric_intersection(const ConvexCurve& a, const ConvexCurve& b) {
    if (a.n() != b.n()) throw std::invalid_argument("curves live in different disks");
    const std::uint32_t A = a.mask(), B = b.mask();
    if ((A & B) == A || (A & B) == B) return 0;  // nested

    // Walk the points of A u B clockwise. Away from shared points the outer
    // boundary of the union is whichever hull owns the point; at a shared
    // point each side inherits the owner of the neighbouring point, so the
    // number of switches is the number of crossings.
    std::vector<int> U;
    for (int k = 1; k <= a.n(); ++k)
        if (a.contains(k) || b.contains(k)) U.push_back(k);
    auto owner = [&](int p) -> Side {
        if (a.contains(p) && b.contains(p)) return kNone;
        return a.contains(p) ? kA : kB;
    };
    std::vector<char> seq;
    const std::size_t m = U.size();
    for (std::size_t i = 0; i < m; ++i) {
        Side here = owner(U[i]);
        if (here != kNone) {
            seq.push_back(here);
            continue;
        }
        Side left = owner(U[(i + m - 1) % m]);
        Side right = owner(U[(i + 1) % m]);
        if (left == kNone) left = right;
        if (right == kNone) right = left;
        if (left != kNone) seq.push_back(left);
        if (right != kNone) seq.push_back(right);
    }
    const int changes = cyclic_changes(seq);
    // Disjoint point sets that are not interleaved bound disjoint disks.
    if ((A & B) == 0 && changes == 2) return 0;
    return changes;
}

int alg_intersection_abs(const ConvexCurve& a, const ConvexCurve& c) {
    if (!a.is_even()) throw std::invalid_argument("alg_intersection_abs: curve must surround an even number of points");
    if (!c.is_chord()) throw std::invalid_argument("alg_intersection_abs: second curve must be a chord");
    const int i = geometric_intersection(a, c);
    switch (i) {
    case 0: return 0;
    case 2: return 1;
    case 4: {
        std::vector<int> rest;
        for (int p : a.points())
            if (!c.contains(p)) rest.push_back(p);
        auto [s1, s2] = chord_separation(c, rest);
        return (s1.size() % 2 == 0) ? 0 : 2;
    }
    default:
        throw std::invalid_argument("alg_intersection_abs: geometric intersection exceeds 4");
    }
}

std::pair<std::vector<int>, std::vector<int>> chord_separation(const ConvexCurve& c,
                                                               const std::vector<int>& S) {
    if (!c.is_chord()) throw std::invalid_argument("chord_separation: not a chord");
    const auto ends = c.points();
    const int r = ends[0], s = ends[1], n = c.n();
    std::vector<int> first, second;
    for (int k = r % n + 1; k != s; k = k % n + 1)
        if (std::find(S.begin(), S.end(), k) != S.end()) first.push_back(k);
    for (int k = s % n + 1; k != r; k = k % n + 1)
        if (std::find(S.begin(), S.end(), k) != S.end()) second.push_back(k);
    for (int p : S)
        if (p == r || p == s || p < 1 || p > n) throw std::invalid_argument("chord_separation: point on the chord or out of range");
    return {first, second};
}

}  // namespace ht
