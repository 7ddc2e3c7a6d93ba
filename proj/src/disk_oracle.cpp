// Geometric cross-check for geometric_intersection. Everything after point
// placement is exact: orientation tests in int64, crossing points as
// rationals.
#include "ht/marked_disk.hpp"

#include <boost/multiprecision/cpp_int.hpp>

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>
#include <optional>
#include <stdexcept>

namespace ht {

namespace {

using boost::multiprecision::cpp_rational;

struct P {
    std::int64_t x, y;
    bool operator==(const P&) const = default;
    bool operator<(const P& o) const { return x != o.x ? x < o.x : y < o.y; }
};

struct RP {
    cpp_rational x, y;
};

std::int64_t cross(const P& o, const P& a, const P& b) {
    return (a.x - o.x) * (b.y - o.y) - (a.y - o.y) * (b.x - o.x);
}

int sgn(std::int64_t v) { return (v > 0) - (v < 0); }

int rsgn(const cpp_rational& v) { return (v > 0) - (v < 0); }

cpp_rational rcross(const RP& o, const RP& a, const RP& b) {
    return (a.x - o.x) * (b.y - o.y) - (a.y - o.y) * (b.x - o.x);
}

RP to_rp(const P& p) { return {cpp_rational(p.x), cpp_rational(p.y)}; }

constexpr double kRadius = 1 << 20;

std::vector<P> place_points(int n) {
    std::vector<P> pts(n);
    for (int k = 0; k < n; ++k) {
        // Clockwise from the top.
        double th = std::numbers::pi / 2 - 2 * std::numbers::pi * k / n;
        pts[k] = {std::llround(kRadius * std::cos(th)), std::llround(kRadius * std::sin(th))};
    }
    for (int k = 0; k < n; ++k)
        if (cross(pts[k], pts[(k + 1) % n], pts[(k + 2) % n]) >= 0)
            throw std::runtime_error("oracle: points are not in strictly convex clockwise position");
    return pts;
}

// Smallest distance from a point to a chord not containing it.
double feature_size(const std::vector<P>& pts) {
    const int n = static_cast<int>(pts.size());
    double best = std::numeric_limits<double>::infinity();
    for (int q = 0; q < n; ++q)
        for (int i = 0; i < n; ++i)
            for (int j = i + 1; j < n; ++j) {
                if (q == i || q == j) continue;
                double dx = double(pts[j].x - pts[i].x), dy = double(pts[j].y - pts[i].y);
                double len2 = dx * dx + dy * dy;
                double t = ((pts[q].x - pts[i].x) * dx + (pts[q].y - pts[i].y) * dy) / len2;
                t = std::clamp(t, 0.0, 1.0);
                double ex = pts[i].x + t * dx - pts[q].x, ey = pts[i].y + t * dy - pts[q].y;
                best = std::min(best, std::sqrt(ex * ex + ey * ey));
            }
    return best;
}

// Counterclockwise strict convex hull.
std::vector<P> hull(std::vector<P> v) {
    std::sort(v.begin(), v.end());
    v.erase(std::unique(v.begin(), v.end()), v.end());
    if (v.size() < 3) return v;
    std::vector<P> h(2 * v.size());
    std::size_t k = 0;
    for (std::size_t i = 0; i < v.size(); ++i) {
        while (k >= 2 && cross(h[k - 2], h[k - 1], v[i]) <= 0) --k;
        h[k++] = v[i];
    }
    for (std::size_t i = v.size() - 1, t = k + 1; i-- > 0;) {
        while (k >= t && cross(h[k - 2], h[k - 1], v[i]) <= 0) --k;
        h[k++] = v[i];
    }
    h.resize(k - 1);
    return h;
}

// +1 strictly inside, -1 strictly outside, 0 on the boundary.
int locate(const std::vector<P>& poly, const P& q) {
    bool on = false;
    for (std::size_t i = 0; i < poly.size(); ++i) {
        std::int64_t c = cross(poly[i], poly[(i + 1) % poly.size()], q);
        if (c < 0) return -1;
        if (c == 0) on = true;
    }
    return on ? 0 : 1;
}

std::vector<P> inflate(const std::vector<P>& pts, std::uint32_t mask, const std::vector<std::int64_t>& radius,
                       bool diamond) {
    std::vector<P> v;
    for (std::size_t k = 0; k < pts.size(); ++k) {
        if (!((mask >> k) & 1u)) continue;
        const std::int64_t r = radius[k];
        const P& c = pts[k];
        if (diamond) {
            v.push_back({c.x + r, c.y});
            v.push_back({c.x, c.y + r});
            v.push_back({c.x - r, c.y});
            v.push_back({c.x, c.y - r});
        } else {
            v.push_back({c.x + r, c.y + r});
            v.push_back({c.x - r, c.y + r});
            v.push_back({c.x - r, c.y - r});
            v.push_back({c.x + r, c.y - r});
        }
    }
    return hull(v);
}

struct Crossing {
    std::size_t edge;           // edge index on the polygon being walked
    std::int64_t num, den;      // parameter along that edge, den > 0
    RP point;
};

// Crossings of polygon X's boundary with polygon Y's boundary, ordered along
// X. Returns nullopt on a non-transversal contact.
std::optional<std::vector<Crossing>> crossings_along(const std::vector<P>& X, const std::vector<P>& Y) {
    std::vector<Crossing> out;
    for (std::size_t i = 0; i < X.size(); ++i) {
        const P& a = X[i];
        const P& b = X[(i + 1) % X.size()];
        for (std::size_t j = 0; j < Y.size(); ++j) {
            const P& c = Y[j];
            const P& d = Y[(j + 1) % Y.size()];
            int o1 = sgn(cross(a, b, c)), o2 = sgn(cross(a, b, d));
            int o3 = sgn(cross(c, d, a)), o4 = sgn(cross(c, d, b));
            if (o1 * o2 > 0 || o3 * o4 > 0) continue;
            if (o1 == 0 || o2 == 0 || o3 == 0 || o4 == 0) {
                // Touching or collinear; only harmless when the bounding
                // boxes are apart.
                bool apart = std::max(a.x, b.x) < std::min(c.x, d.x) || std::max(c.x, d.x) < std::min(a.x, b.x) ||
                             std::max(a.y, b.y) < std::min(c.y, d.y) || std::max(c.y, d.y) < std::min(a.y, b.y);
                if (apart) continue;
                return std::nullopt;
            }
            // a + t (b - a) with t = cross(c - a, d - c) / cross(b - a, d - c)
            std::int64_t num = (c.x - a.x) * (d.y - c.y) - (c.y - a.y) * (d.x - c.x);
            std::int64_t den = (b.x - a.x) * (d.y - c.y) - (b.y - a.y) * (d.x - c.x);
            if (den < 0) {
                num = -num;
                den = -den;
            }
            cpp_rational t(num, den);
            RP p{cpp_rational(a.x) + t * (b.x - a.x), cpp_rational(a.y) + t * (b.y - a.y)};
            out.push_back({i, num, den, p});
        }
    }
    std::sort(out.begin(), out.end(), [](const Crossing& u, const Crossing& v) {
        if (u.edge != v.edge) return u.edge < v.edge;
        return static_cast<__int128>(u.num) * v.den < static_cast<__int128>(v.num) * u.den;
    });
    return out;
}

bool same_point(const RP& a, const RP& b) { return a.x == b.x && a.y == b.y; }

// Strict rational point-in-polygon test by ray casting; q must not lie on
// the boundary.
bool inside_polygon(const std::vector<RP>& poly, const RP& q) {
    bool in = false;
    for (std::size_t i = 0; i < poly.size(); ++i) {
        const RP& p1 = poly[i];
        const RP& p2 = poly[(i + 1) % poly.size()];
        if ((p1.y > q.y) == (p2.y > q.y)) continue;
        cpp_rational x = p1.x + (q.y - p1.y) * (p2.x - p1.x) / (p2.y - p1.y);
        if (x > q.x) in = !in;
    }
    return in;
}

// Points of polygon Z's boundary from crossing `from` forward to crossing
// `to`, endpoints included.
std::vector<RP> boundary_walk(const std::vector<P>& Z, const Crossing& from, const Crossing& to, bool wraps) {
    std::vector<RP> out{from.point};
    if (wraps || to.edge != from.edge) {
        std::size_t k = (from.edge + 1) % Z.size();
        for (;;) {
            out.push_back(to_rp(Z[k]));
            if (k == to.edge) break;
            k = (k + 1) % Z.size();
        }
    }
    out.push_back(to.point);
    return out;
}

int locate_rational(const std::vector<P>& poly, const RP& q) {
    bool on = false;
    for (std::size_t i = 0; i < poly.size(); ++i) {
        int c = rsgn(rcross(to_rp(poly[i]), to_rp(poly[(i + 1) % poly.size()]), q));
        if (c < 0) return -1;
        if (c == 0) on = true;
    }
    return on ? 0 : 1;
}

// True if every component of X \ Y contains a marked point. Each component
// is bounded by an arc of X outside Y and an arc of Y inside X.
bool outer_arcs_occupied(const std::vector<P>& X, const std::vector<P>& Y, const std::vector<Crossing>& cx,
                         const std::vector<Crossing>& cy, const std::vector<P>& marked) {
    const std::size_t m = cx.size();
    for (std::size_t k = 0; k < m; ++k) {
        const Crossing& s = cx[k];
        const Crossing& e = cx[(k + 1) % m];
        const bool wraps = (k + 1 == m);
        if (!wraps && e.edge == s.edge) continue;  // straight piece between crossings lies inside Y
        int loc = locate(Y, X[(s.edge + 1) % X.size()]);
        if (loc == 0) return false;
        if (loc > 0) continue;

        // The arc of Y joining e back to s inside X.
        std::size_t ie = m, is = m;
        for (std::size_t t = 0; t < m; ++t) {
            if (same_point(cy[t].point, e.point)) ie = t;
            if (same_point(cy[t].point, s.point)) is = t;
        }
        if (ie == m || is == m) return false;
        std::vector<RP> closing;
        for (int dir = 0; dir < 2 && closing.empty(); ++dir) {
            std::size_t from = dir == 0 ? ie : is, to = dir == 0 ? is : ie;
            if ((from + 1) % m != to) continue;
            auto arc = boundary_walk(Y, cy[from], cy[to], from + 1 == m);
            RP mid{(arc[0].x + arc[1].x) / 2, (arc[0].y + arc[1].y) / 2};
            if (locate_rational(X, mid) <= 0) continue;
            if (dir == 1) std::reverse(arc.begin(), arc.end());
            closing = std::move(arc);
        }
        if (closing.empty()) return false;

        std::vector<RP> region = boundary_walk(X, s, e, wraps);
        region.insert(region.end(), closing.begin() + 1, closing.end() - 1);
        bool occupied = false;
        for (const P& q : marked) {
            if (locate(X, q) <= 0 || locate(Y, q) >= 0) continue;
            if (inside_polygon(region, to_rp(q))) {
                occupied = true;
                break;
            }
        }
        if (!occupied) return false;
    }
    return true;
}

enum class Verdict { kDegenerate, kBigon, kMinimal };

Verdict evaluate(const std::vector<P>& pts, const ConvexCurve& a, const ConvexCurve& b,
                 const std::vector<std::int64_t>& ra, const std::vector<std::int64_t>& rb, int& crossings) {
    const auto RA = inflate(pts, a.mask(), ra, false);
    const auto RB = inflate(pts, b.mask(), rb, true);
    for (std::size_t k = 0; k < pts.size(); ++k) {
        int la = locate(RA, pts[k]), lb = locate(RB, pts[k]);
        if (la == 0 || lb == 0) return Verdict::kDegenerate;
        if ((la > 0) != a.contains(static_cast<int>(k) + 1) || (lb > 0) != b.contains(static_cast<int>(k) + 1))
            throw std::runtime_error("oracle: inflation swallowed a foreign marked point");
    }
    auto ca = crossings_along(RA, RB);
    auto cb = crossings_along(RB, RA);
    if (!ca || !cb) return Verdict::kDegenerate;
    if (ca->size() != cb->size()) return Verdict::kDegenerate;
    crossings = static_cast<int>(ca->size());
    if (crossings == 0) return Verdict::kMinimal;
    if (!outer_arcs_occupied(RA, RB, *ca, *cb, pts) || !outer_arcs_occupied(RB, RA, *cb, *ca, pts))
        return Verdict::kBigon;
    // With two crossings the intersection is a bigon as well.
    if (crossings == 2 && (a.mask() & b.mask()) == 0) return Verdict::kBigon;
    return Verdict::kMinimal;
}

}  // namespace

OracleResult geometric_intersection_oracle(const ConvexCurve& a, const ConvexCurve& b) {
    if (a.n() != b.n()) throw std::invalid_argument("curves live in different disks");
    const int n = a.n();
    const auto pts = place_points(n);
    const std::int64_t base = static_cast<std::int64_t>(feature_size(pts) / 12.0);
    if (base < 8) throw std::runtime_error("oracle: feature size too small for integer inflation");

    std::vector<int> shared;
    for (int k = 0; k < n; ++k)
        if (a.contains(k + 1) && b.contains(k + 1)) shared.push_back(k);
    const std::uint32_t all = (shared.size() >= 32) ? ~0u : ((1u << shared.size()) - 1);
    std::vector<std::uint32_t> order{all, 0};
    for (std::uint32_t s = 1; s < all; ++s) order.push_back(s);
    if (all == 0) order = {0};

    OracleResult res;
    for (std::uint32_t s : order) {
        ++res.attempts;
        for (std::int64_t eps = base; eps > base - 4; --eps) {
            std::vector<std::int64_t> ra(n, 2 * eps), rb(n, 2 * eps);
            for (std::size_t i = 0; i < shared.size(); ++i) {
                bool a_outer = (s >> i) & 1u;
                ra[shared[i]] = a_outer ? 3 * eps : eps;
                rb[shared[i]] = a_outer ? eps : 3 * eps;
            }
            int cr = 0;
            Verdict v = evaluate(pts, a, b, ra, rb, cr);
            if (v == Verdict::kDegenerate) continue;
            if (v == Verdict::kMinimal) {
                res.crossings = cr;
                return res;
            }
            break;  // bigon: try the next assignment
        }
    }
    throw std::runtime_error("oracle: no bigon-free representative found for " + a.to_string() + " and " +
                             b.to_string());
}

}  // namespace ht
