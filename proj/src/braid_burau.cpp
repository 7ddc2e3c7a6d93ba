#include "ht/braid_burau.hpp"

#include <boost/multiprecision/cpp_int.hpp>

#include <map>
#include <mutex>
#include <sstream>
#include <stdexcept>

namespace ht {

BraidWord::BraidWord(int strands) : strands_(strands) {
    if (strands < 2) throw std::invalid_argument("braid needs at least two strands");
}

BraidWord::BraidWord(int strands, std::vector<BraidLetter> letters) : BraidWord(strands) {
    for (const auto& l : letters) {
        if (l.gen < 1 || l.gen >= strands) throw std::invalid_argument("braid generator index out of range");
        if (l.exp == 0) throw std::invalid_argument("braid letter with zero exponent");
    }
    letters_ = std::move(letters);
}

BraidWord BraidWord::parse(const std::string& text, int strands) {
    std::istringstream in(text);
    std::string tok;
    std::vector<BraidLetter> letters;
    while (in >> tok) {
        if (tok.size() < 2 || tok[0] != 's') throw std::invalid_argument("bad braid letter '" + tok + "'");
        std::size_t caret = tok.find('^');
        std::string idx = tok.substr(1, caret == std::string::npos ? std::string::npos : caret - 1);
        std::size_t used = 0;
        int gen = 0, exp = 1;
        try {
            gen = std::stoi(idx, &used);
            if (used != idx.size()) throw std::invalid_argument("");
            if (caret != std::string::npos) {
                std::string e = tok.substr(caret + 1);
                exp = std::stoi(e, &used);
                if (used != e.size()) throw std::invalid_argument("");
            }
        } catch (const std::exception&) {
            throw std::invalid_argument("bad braid letter '" + tok + "'");
        }
        letters.push_back({gen, exp});
    }
    return BraidWord(strands, std::move(letters));
}

BraidWord BraidWord::inverse() const {
    std::vector<BraidLetter> out(letters_.rbegin(), letters_.rend());
    for (auto& l : out) l.exp = -l.exp;
    return BraidWord(strands_, std::move(out));
}

BraidWord BraidWord::power(int k) const {
    BraidWord base = k < 0 ? inverse() : *this;
    BraidWord out(strands_);
    for (int i = 0; i < std::abs(k); ++i) out *= base;
    return out;
}

BraidWord BraidWord::operator*(const BraidWord& o) const {
    BraidWord r = *this;
    r *= o;
    return r;
}

BraidWord& BraidWord::operator*=(const BraidWord& o) {
    if (o.strands_ != strands_) throw std::invalid_argument("braid words on different strand counts");
    letters_.insert(letters_.end(), o.letters_.begin(), o.letters_.end());
    return *this;
}

long BraidWord::exponent_sum() const {
    long s = 0;
    for (const auto& l : letters_) s += l.exp;
    return s;
}

std::string BraidWord::to_string() const {
    std::string s;
    for (const auto& l : letters_) {
        if (!s.empty()) s += ' ';
        s += 's' + std::to_string(l.gen);
        if (l.exp != 1) s += '^' + std::to_string(l.exp);
    }
    return s;
}

IntMatrix burau_symplectic(const BraidWord& w) {
    if (w.strands() % 2 == 0 || w.strands() < 3)
        throw std::invalid_argument("burau_symplectic needs an odd number of strands >= 3");
    const int g = (w.strands() - 1) / 2;
    const auto form = SymplecticForm::chain(g);
    IntMatrix M = IntMatrix::identity(form.dim());
    IntVector x(form.dim(), 0);
    for (const auto& l : w.letters()) {
        x[l.gen - 1] = 1;
        multiply_by_transvection(M, x, form, l.exp);
        x[l.gen - 1] = 0;
    }
    return M;
}

IntMatrix unreduced_burau_minus1(const BraidWord& w) {
    const std::size_t n = static_cast<std::size_t>(w.strands());
    IntMatrix M = IntMatrix::identity(n);
    for (const auto& l : w.letters()) {
        const std::size_t i = static_cast<std::size_t>(l.gen - 1);
        // Right multiplication by the block [[2,-1],[1,0]] (or its inverse
        // [[0,1],[-1,2]]) acting on columns i, i+1.
        for (int rep = 0; rep < std::abs(l.exp); ++rep) {
            for (std::size_t r = 0; r < n; ++r) {
                Int p = M(r, i), q = M(r, i + 1);
                if (l.exp > 0) {
                    M(r, i) = 2 * p + q;
                    M(r, i + 1) = -p;
                } else {
                    M(r, i) = -q;
                    M(r, i + 1) = p + 2 * q;
                }
            }
        }
    }
    return M;
}

BraidWord pure_twist_word(int n, int i, int j) {
    if (!(1 <= i && i < j && j <= n)) throw std::invalid_argument("pure_twist_word needs 1 <= i < j <= n");
    std::vector<BraidLetter> letters;
    for (int k = j - 1; k > i; --k) letters.push_back({k, -1});
    letters.push_back({i, 2});
    for (int k = i + 1; k < j; ++k) letters.push_back({k, 1});
    return BraidWord(n, std::move(letters));
}

BraidWord curve_twist_word(const ConvexCurve& c) {
    auto pts = c.points();
    std::vector<int> ccw(pts.rbegin(), pts.rend());
    BraidWord w(c.n());
    for (std::size_t a = 0; a < ccw.size(); ++a)
        for (std::size_t b = a + 1; b < ccw.size(); ++b)
            w *= pure_twist_word(c.n(), std::min(ccw[a], ccw[b]), std::max(ccw[a], ccw[b]));
    return w;
}

namespace {

std::mutex g_lift_mutex;
std::map<std::pair<int, std::uint32_t>, LaxVector> g_lift_cache;

LaxVector compute_lift_class(const ConvexCurve& a) {
    const IntMatrix M = burau_symplectic(curve_twist_word(a));
    const std::size_t d = M.rows();
    IntMatrix D = M - IntMatrix::identity(d);
    for (std::size_t r = 0; r < d; ++r)
        for (std::size_t c = 0; c < d; ++c)
            if (D(r, c) % 2 != 0) throw std::logic_error("lift_class: twist image is not congruent to I mod 2");
    IntVector col;
    for (std::size_t c = 0; c < d && col.empty(); ++c)
        if (!is_zero(D.column(c))) col = D.column(c);
    if (col.empty()) throw std::logic_error("lift_class: twist image is the identity");
    LaxVector v(col);
    if (transvection(v.vec(), SymplecticForm::chain(static_cast<int>(d / 2)), 2) != M)
        throw std::logic_error("lift_class: twist image of " + a.to_string() + " is not a squared transvection");
    return v;
}

}  // namespace

LaxVector lift_class(const ConvexCurve& a) {
    if (!a.is_even()) throw std::invalid_argument("lift_class: curve must surround an even number of points");
    if (a.n() % 2 == 0) throw std::invalid_argument("lift_class: needs an odd number of marked points");
    const auto key = std::make_pair(a.n(), a.mask());
    {
        std::lock_guard<std::mutex> lock(g_lift_mutex);
        auto it = g_lift_cache.find(key);
        if (it != g_lift_cache.end()) return it->second;
    }
    LaxVector v = compute_lift_class(a);
    std::lock_guard<std::mutex> lock(g_lift_mutex);
    g_lift_cache.emplace(key, v);
    return v;
}

Int alg_pairing(const ConvexCurve& a, const ConvexCurve& b) {
    if (a.n() != b.n()) throw std::invalid_argument("curves live in different disks");
    const auto form = SymplecticForm::chain((a.n() - 1) / 2);
    Int p = form.pair(lift_class(a).vec(), lift_class(b).vec());
    return p < 0 ? Int(-p) : p;
}

}  // namespace ht
