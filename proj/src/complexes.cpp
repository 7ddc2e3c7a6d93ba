#include "ht/complexes.hpp"

#include <algorithm>
#include <bit>
#include <map>
#include <numeric>
#include <set>
#include <stdexcept>

namespace ht {

std::string to_string(SimplexKind k) {
    switch (k) {
        case SimplexKind::standard: return "standard";
        case SimplexKind::intersection: return "intersection";
        case SimplexKind::additive: return "additive";
        case SimplexKind::flag: return "flag";
    }
    return "?";
}

ArithmeticComplex::ArithmeticComplex(std::string name, int genus, std::vector<std::uint64_t> labels)
    : name_(std::move(name)), genus_(genus), labels_(std::move(labels)) {
    cells_.resize(1);
    kinds_.resize(1);
}

std::size_t ArithmeticComplex::count(int d) const {
    if (d < 0 || d > dimension()) return 0;
    return cells_[d].size();
}

std::size_t ArithmeticComplex::total() const {
    std::size_t t = 0;
    for (const auto& c : cells_) t += c.size();
    return t;
}

void ArithmeticComplex::add(Simplex s, SimplexKind kind) {
    if (s.empty()) throw std::invalid_argument("ArithmeticComplex::add: empty simplex");
    std::sort(s.begin(), s.end());
    if (std::adjacent_find(s.begin(), s.end()) != s.end())
        throw std::invalid_argument("ArithmeticComplex::add: repeated vertex");
    if (s.back() >= labels_.size()) throw std::out_of_range("ArithmeticComplex::add: vertex out of range");
    const std::size_t d = s.size() - 1;
    if (cells_.size() <= d) {
        cells_.resize(d + 1);
        kinds_.resize(d + 1);
    }
    cells_[d].push_back(std::move(s));
    kinds_[d].push_back(kind);
    final_ = false;
}

void ArithmeticComplex::finalize() {
    for (std::size_t d = 0; d < cells_.size(); ++d) {
        std::vector<std::size_t> idx(cells_[d].size());
        std::iota(idx.begin(), idx.end(), 0);
        std::sort(idx.begin(), idx.end(), [&](std::size_t x, std::size_t y) { return cells_[d][x] < cells_[d][y]; });
        std::vector<Simplex> cs;
        std::vector<SimplexKind> ks;
        cs.reserve(idx.size());
        ks.reserve(idx.size());
        for (std::size_t i : idx) {
            if (!cs.empty() && cs.back() == cells_[d][i]) {
                if (ks.back() != kinds_[d][i]) throw std::logic_error("ArithmeticComplex: simplex with two kinds");
                continue;
            }
            cs.push_back(std::move(cells_[d][i]));
            ks.push_back(kinds_[d][i]);
        }
        cells_[d] = std::move(cs);
        kinds_[d] = std::move(ks);
    }
    while (cells_.size() > 1 && cells_.back().empty()) {
        cells_.pop_back();
        kinds_.pop_back();
    }
    final_ = true;
}

std::optional<std::size_t> ArithmeticComplex::find(const Simplex& s) const {
    if (!final_) throw std::logic_error("ArithmeticComplex: finalize() before queries");
    if (s.empty() || s.size() > cells_.size()) return std::nullopt;
    const auto& c = cells_[s.size() - 1];
    auto it = std::lower_bound(c.begin(), c.end(), s);
    if (it == c.end() || *it != s) return std::nullopt;
    return static_cast<std::size_t>(it - c.begin());
}

std::optional<std::uint32_t> ArithmeticComplex::vertex_of(std::uint64_t label) const {
    for (std::size_t i = 0; i < labels_.size(); ++i)
        if (labels_[i] == label) return static_cast<std::uint32_t>(i);
    return std::nullopt;
}

bool ArithmeticComplex::is_closed() const {
    for (int d = 1; d <= dimension(); ++d)
        for (const auto& s : cells_[d])
            for (std::size_t i = 0; i < s.size(); ++i) {
                Simplex f = s;
                f.erase(f.begin() + static_cast<long>(i));
                if (!find(f)) return false;
            }
    return true;
}

long ArithmeticComplex::euler_characteristic() const {
    long chi = 0;
    for (int d = 0; d <= dimension(); ++d) chi += (d % 2 == 0 ? 1 : -1) * static_cast<long>(cells_[d].size());
    return chi;
}

SparseMatrix ArithmeticComplex::boundary(int d) const {
    if (!final_) throw std::logic_error("ArithmeticComplex: finalize() before queries");
    if (d < 1 || d > dimension()) throw std::out_of_range("ArithmeticComplex::boundary: degree out of range");
    SparseMatrix M;
    M.rows = cells_[d - 1].size();
    M.cols = cells_[d].size();
    M.columns.resize(M.cols);
    for (std::size_t j = 0; j < M.cols; ++j) {
        const Simplex& s = cells_[d][j];
        auto& col = M.columns[j];
        for (std::size_t i = 0; i < s.size(); ++i) {
            Simplex f = s;
            f.erase(f.begin() + static_cast<long>(i));
            auto r = find(f);
            if (!r) throw std::logic_error("ArithmeticComplex::boundary: complex is not closed");
            col.emplace_back(static_cast<std::uint32_t>(*r), i % 2 == 0 ? 1 : -1);
        }
        std::sort(col.begin(), col.end());
    }
    return M;
}

namespace {

void check_genus(int g, const char* who) {
    if (g < 1) throw std::invalid_argument(std::string(who) + ": genus must be positive");
    if (g > 3) throw std::length_error(std::string(who) + ": genus above 3 exceeds the memory bound");
}

// Span of a set of vectors as a membership mask over F2^{2g}, 2g <= 6.
std::uint64_t span_mask(const std::vector<F2Vec>& vs) {
    std::uint64_t m = 1;
    for (F2Vec v : vs) {
        std::uint64_t shifted = 0;
        for (std::uint64_t t = m; t; t &= t - 1) shifted |= std::uint64_t(1) << (std::countr_zero(t) ^ v);
        m |= shifted;
    }
    return m;
}

std::size_t f2_rank_of(std::vector<F2Vec> vs) {
    std::size_t r = 0;
    for (int bit = 0; bit < 32; ++bit) {
        auto it = std::find_if(vs.begin() + static_cast<long>(r), vs.end(), [&](F2Vec x) { return (x >> bit) & 1u; });
        if (it == vs.end()) continue;
        std::iter_swap(vs.begin() + static_cast<long>(r), it);
        for (std::size_t i = 0; i < vs.size(); ++i)
            if (i != r && ((vs[i] >> bit) & 1u)) vs[i] ^= vs[r];
        ++r;
    }
    return r;
}

// Isotropic independent sets as increasing vertex lists.
void standard_sets(const F2Form& form, std::vector<std::vector<F2Vec>>& out) {
    const F2Vec top = F2Vec(1) << form.dim();
    std::vector<F2Vec> cur;
    auto rec = [&](auto&& self, F2Vec from, std::uint64_t span) -> void {
        for (F2Vec w = from; w < top; ++w) {
            if ((span >> w) & 1u) continue;
            bool iso = true;
            for (F2Vec x : cur)
                if (form.pair(x, w)) {
                    iso = false;
                    break;
                }
            if (!iso) continue;
            cur.push_back(w);
            out.push_back(cur);
            self(self, w + 1, span_mask(cur));
            cur.pop_back();
        }
    };
    rec(rec, 1, 1);
}

Simplex to_indices(const std::vector<F2Vec>& vs) {
    Simplex s;
    for (F2Vec v : vs) s.push_back(v - 1);
    return s;
}

std::vector<std::uint64_t> vector_labels(int g) {
    std::vector<std::uint64_t> labels;
    for (std::uint64_t v = 1; v < (std::uint64_t(1) << (2 * g)); ++v) labels.push_back(v);
    return labels;
}

}  // namespace

ArithmeticComplex build_tits_f2(int g) {
    check_genus(g, "build_tits_f2");
    const F2Form form = F2Form::chain(g);
    const F2Vec top = F2Vec(1) << form.dim();
    std::set<std::uint64_t> found;
    std::vector<std::uint64_t> frontier;
    for (F2Vec v = 1; v < top; ++v) {
        const std::uint64_t m = span_mask({v});
        if (found.insert(m).second) frontier.push_back(m);
    }
    while (!frontier.empty()) {
        std::vector<std::uint64_t> next;
        for (std::uint64_t m : frontier)
            for (F2Vec w = 1; w < top; ++w) {
                if ((m >> w) & 1u) continue;
                bool iso = true;
                for (std::uint64_t t = m; t && iso; t &= t - 1) iso = form.pair(std::countr_zero(t), w) == 0;
                if (!iso) continue;
                std::uint64_t e = m;
                for (std::uint64_t t = m; t; t &= t - 1) e |= std::uint64_t(1) << (std::countr_zero(t) ^ w);
                if (found.insert(e).second) next.push_back(e);
            }
        frontier.swap(next);
    }
    std::vector<std::uint64_t> labels(found.begin(), found.end());
    std::stable_sort(labels.begin(), labels.end(),
                     [](std::uint64_t x, std::uint64_t y) { return std::popcount(x) < std::popcount(y); });

    ArithmeticComplex X("B_" + std::to_string(g), g, labels);
    const std::uint32_t n = static_cast<std::uint32_t>(labels.size());
    std::vector<std::vector<std::uint32_t>> above(n);
    for (std::uint32_t i = 0; i < n; ++i)
        for (std::uint32_t j = 0; j < n; ++j)
            if (i != j && (labels[i] & labels[j]) == labels[i]) above[i].push_back(j);
    Simplex chain;
    auto rec = [&](auto&& self, std::uint32_t v) -> void {
        chain.push_back(v);
        X.add(chain, SimplexKind::flag);
        for (std::uint32_t w : above[v]) self(self, w);
        chain.pop_back();
    };
    for (std::uint32_t v = 0; v < n; ++v) rec(rec, v);
    X.finalize();
    return X;
}

ArithmeticComplex build_ib_f2(int g) {
    check_genus(g, "build_ib_f2");
    const F2Form form = F2Form::chain(g);
    ArithmeticComplex X("IB_" + std::to_string(g), g, vector_labels(g));
    std::vector<std::vector<F2Vec>> sets;
    standard_sets(form, sets);
    for (const auto& s : sets) X.add(to_indices(s), SimplexKind::standard);
    X.finalize();
    return X;
}

ArithmeticComplex build_ibhat_f2(int g) {
    check_genus(g, "build_ibhat_f2");
    const F2Form form = F2Form::chain(g);
    const F2Vec top = F2Vec(1) << form.dim();
    ArithmeticComplex X("IBhat_" + std::to_string(g), g, vector_labels(g));
    std::vector<std::vector<F2Vec>> sets;
    standard_sets(form, sets);
    for (const auto& A : sets) {
        X.add(to_indices(A), SimplexKind::standard);
        for (F2Vec b = 1; b < top; ++b) {
            int hits = 0;
            for (F2Vec a : A) hits += form.pair(a, b);
            if (hits != 1) continue;
            auto s = A;
            s.push_back(b);
            X.add(to_indices(s), SimplexKind::intersection);
        }
        const std::size_t k = A.size();
        for (std::uint32_t T = 1; T < (1u << k); ++T) {
            const int h = std::popcount(T);
            if (h != 2 && h != 3) continue;
            F2Vec v = 0;
            for (std::size_t i = 0; i < k; ++i)
                if ((T >> i) & 1u) v ^= A[i];
            auto s = A;
            s.push_back(v);
            X.add(to_indices(s), SimplexKind::additive);
        }
    }
    X.finalize();
    return X;
}

std::optional<SimplexKind> classify_f2(const F2Form& form, const std::vector<F2Vec>& vertices) {
    const std::size_t s = vertices.size();
    if (s == 0) return std::nullopt;
    for (F2Vec v : vertices)
        if (v == 0 || (v >> form.dim()) != 0) return std::nullopt;
    {
        auto sorted = vertices;
        std::sort(sorted.begin(), sorted.end());
        if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end()) return std::nullopt;
    }
    int edges = 0;
    for (std::size_t i = 0; i < s; ++i)
        for (std::size_t j = i + 1; j < s; ++j) edges += form.pair(vertices[i], vertices[j]);
    const std::size_t r = f2_rank_of(vertices);
    if (r == s) {
        if (edges == 0) return SimplexKind::standard;
        if (edges == 1) return SimplexKind::intersection;
        return std::nullopt;
    }
    if (r + 1 != s || edges != 0 || s > 8) return std::nullopt;
    // The unique relation among the vertices.
    for (std::uint32_t T = 1; T < (1u << s); ++T) {
        F2Vec x = 0;
        for (std::size_t i = 0; i < s; ++i)
            if ((T >> i) & 1u) x ^= vertices[i];
        if (x != 0) continue;
        const int len = std::popcount(T);
        if (len == 3 || len == 4) return SimplexKind::additive;
        return std::nullopt;
    }
    return std::nullopt;
}

nlohmann::json HomologyProfile::to_json() const {
    nlohmann::json j;
    j["coefficients"] = coefficients == Coefficients::f2 ? "F2" : "Z";
    j["cells"] = cells;
    j["boundary_rank"] = boundary_rank;
    j["betti"] = betti;
    std::vector<long> red;
    for (std::size_t d = 0; d < betti.size(); ++d) red.push_back(reduced_betti(static_cast<int>(d)));
    j["reduced_betti"] = red;
    nlohmann::json tor = nlohmann::json::array();
    for (const auto& t : torsion) {
        nlohmann::json row = nlohmann::json::array();
        for (const auto& x : t) row.push_back(x.str());
        tor.push_back(row);
    }
    j["torsion"] = tor;
    return j;
}

HomologyProfile homology_profile(const ArithmeticComplex& X, Coefficients c) {
    const int D = X.dimension();
    HomologyProfile H;
    H.coefficients = c;
    for (int d = 0; d <= D; ++d) H.cells.push_back(X.count(d));
    H.boundary_rank.assign(D + 2, 0);
    H.torsion.assign(D + 1, {});
    std::vector<bool> skip;
    for (int d = D; d >= 1; --d) {
        const SparseMatrix M = X.boundary(d);
        if (skip.size() != M.cols) skip.assign(M.cols, false);
        const SparseReduction R = c == Coefficients::f2 ? sparse_reduce_f2(M, skip) : sparse_reduce_z(M, skip);
        H.boundary_rank[d] = R.rank;
        H.torsion[d - 1] = R.torsion;
        skip.assign(M.rows, false);
        if (R.unit_pivots)
            for (auto r : R.pivot_rows) skip[r] = true;
    }
    for (int d = 0; d <= D; ++d)
        H.betti.push_back(static_cast<long>(H.cells[d]) - static_cast<long>(H.boundary_rank[d]) -
                          static_cast<long>(H.boundary_rank[d + 1]));
    H.boundary_rank.pop_back();
    return H;
}

namespace {

void check_f2_basis(const F2Form& form, const std::vector<F2Vec>& basis) {
    const int g = form.genus();
    if (static_cast<int>(basis.size()) != 2 * g) throw std::invalid_argument("sphere_cycle: basis needs 2g vectors");
    for (int i = 0; i < 2 * g; ++i)
        for (int j = 0; j < 2 * g; ++j) {
            const int want = (j == i + g || i == j + g) ? 1 : 0;
            if (form.pair(basis[i], basis[j]) != want)
                throw std::invalid_argument("sphere_cycle: not a symplectic basis");
        }
}

}  // namespace

std::vector<std::vector<F2Vec>> sphere_cycle(const F2Form& form, const std::vector<F2Vec>& basis) {
    check_f2_basis(form, basis);
    const int g = form.genus();
    std::vector<std::vector<F2Vec>> out;
    for (std::uint32_t m = 0; m < (1u << g); ++m) {
        std::vector<F2Vec> s;
        for (int i = 0; i < g; ++i) s.push_back(((m >> i) & 1u) ? basis[g + i] : basis[i]);
        std::sort(s.begin(), s.end());
        out.push_back(std::move(s));
    }
    std::sort(out.begin(), out.end());
    return out;
}

FillingCertificate verify_sphere_filling(const F2Form& form, const std::vector<F2Vec>& basis) {
    FillingCertificate cert;
    if (form.genus() != 3) {
        cert.reason = "filling is stated for genus 3";
        return cert;
    }
    std::vector<std::vector<F2Vec>> cycle;
    try {
        cycle = sphere_cycle(form, basis);
    } catch (const std::invalid_argument& e) {
        cert.reason = e.what();
        return cert;
    }
    for (const auto& s : cycle)
        if (classify_f2(form, s) != SimplexKind::standard) {
            cert.reason = "a cycle triangle is not a standard simplex";
            return cert;
        }
    const F2Vec a1 = basis[0], b1 = basis[3];
    for (F2Vec x2 : {basis[1], basis[4]})
        for (F2Vec x3 : {basis[2], basis[5]}) {
            std::vector<F2Vec> t{a1, b1, x2, x3};
            if (classify_f2(form, t) != SimplexKind::intersection) {
                cert.reason = "a filling tetrahedron is not an intersection simplex";
                return cert;
            }
            std::sort(t.begin(), t.end());
            cert.tetrahedra.push_back(std::move(t));
        }
    std::map<std::vector<F2Vec>, int> faces;
    for (const auto& t : cert.tetrahedra)
        for (std::size_t i = 0; i < t.size(); ++i) {
            auto f = t;
            f.erase(f.begin() + static_cast<long>(i));
            faces[f] ^= 1;
        }
    std::vector<std::vector<F2Vec>> bd;
    for (const auto& [f, c] : faces)
        if (c) bd.push_back(f);
    if (bd != cycle) {
        cert.reason = "boundary of the filling differs from the cycle";
        return cert;
    }
    cert.ok = true;
    return cert;
}

SetsOfVecReport verify_setsofvec(int n) {
    if (n < 1 || n > 5) throw std::invalid_argument("verify_setsofvec: n must be in 1..5");
    SetsOfVecReport rep;
    rep.per_shape.assign(8, 0);
    const F2Vec top = F2Vec(1) << n;
    auto indep = [](std::initializer_list<F2Vec> xs) { return f2_rank_of(xs) == xs.size(); };
    auto shape_of = [&](std::vector<F2Vec> p) -> int {
        const std::size_t s = p.size();
        if (s == 0) return 0;
        if (s == 1) return 1;
        do {
            if (s == 2 && indep({p[0], p[1]})) return 2;
            if (s == 3 && indep({p[0], p[1], p[2]})) return 3;
            if (s == 3 && p[2] == (p[0] ^ p[1]) && indep({p[0], p[1]})) return 4;
            if (s == 4 && indep({p[0], p[1], p[2], p[3]})) return 5;
            if (s == 4 && p[3] == (p[0] ^ p[1]) && indep({p[0], p[1], p[2]})) return 6;
            if (s == 4 && p[3] == (p[0] ^ p[1] ^ p[2]) && indep({p[0], p[1], p[2]})) return 7;
        } while (std::next_permutation(p.begin(), p.end()));
        return -1;
    };
    std::vector<F2Vec> cur;
    auto rec = [&](auto&& self, F2Vec from) -> void {
        ++rep.subsets;
        const int sh = shape_of(cur);
        if (sh < 0)
            rep.ok = false;
        else
            ++rep.per_shape[sh];
        if (cur.size() == 4) return;
        for (F2Vec w = from; w < top; ++w) {
            cur.push_back(w);
            self(self, w + 1);
            cur.pop_back();
        }
    };
    rec(rec, 1);
    return rep;
}

std::vector<IntVector> ZSimplex::vertices() const {
    std::vector<IntVector> out = a;
    if (b) out.push_back(*b);
    if (v) out.push_back(*v);
    return out;
}

namespace {

F2Vec reduce_vec(const IntVector& v) {
    F2Vec x = 0;
    for (std::size_t i = 0; i < v.size(); ++i)
        if (v[i] % 2 != 0) x |= F2Vec(1) << i;
    return x;
}

std::optional<IntMatrix> try_complete(const SymplecticForm& form, const std::vector<IntVector>& a,
                                      const std::vector<IntVector>& b) {
    try {
        return complete_partial_basis(form, a, b);
    } catch (const std::invalid_argument&) {
        return std::nullopt;
    }
}

// Coefficients of v in the columns of a symplectic basis matrix P.
IntVector coordinates(const IntMatrix& P, const IntVector& v) { return unimodular_inverse(P) * v; }

}  // namespace

ZSimplex analyze_z_simplex(const SymplecticForm& form, const std::vector<IntVector>& vertices) {
    const std::size_t s = vertices.size();
    if (s == 0) throw std::invalid_argument("analyze_z_simplex: empty vertex set");
    std::set<LaxVector> seen;
    for (const auto& v : vertices) {
        if (v.size() != form.dim()) throw std::invalid_argument("analyze_z_simplex: dimension mismatch");
        if (is_zero(v)) throw std::invalid_argument("analyze_z_simplex: zero vector");
        if (primitive_normalize(v) != v && primitive_normalize(v) != negate(v))
            throw std::invalid_argument("analyze_z_simplex: vertex is not primitive");
        if (!seen.insert(LaxVector(v)).second) throw std::invalid_argument("analyze_z_simplex: repeated vertex");
    }
    std::vector<std::pair<std::size_t, std::size_t>> edges;
    for (std::size_t i = 0; i < s; ++i)
        for (std::size_t j = i + 1; j < s; ++j)
            if (form.pair(vertices[i], vertices[j]) != 0) edges.emplace_back(i, j);

    ZSimplex Z;
    if (edges.empty()) {
        if (try_complete(form, vertices, {})) {
            Z.kind = SimplexKind::standard;
            Z.a = vertices;
            return Z;
        }
        for (std::size_t j = 0; j < s; ++j) {
            std::vector<IntVector> others;
            for (std::size_t i = 0; i < s; ++i)
                if (i != j) others.push_back(vertices[i]);
            auto P = try_complete(form, others, {});
            if (!P) continue;
            const IntVector c = coordinates(*P, vertices[j]);
            std::vector<IntVector> support, rest;
            bool ok = true;
            for (std::size_t t = 0; t < c.size() && ok; ++t) {
                if (c[t] == 0) continue;
                if (t >= others.size() || (c[t] != 1 && c[t] != -1))
                    ok = false;
                else
                    support.push_back(c[t] == 1 ? others[t] : negate(others[t]));
            }
            if (!ok || (support.size() != 2 && support.size() != 3)) continue;
            for (std::size_t t = 0; t < others.size(); ++t)
                if (c[t] == 0) rest.push_back(others[t]);
            Z.kind = SimplexKind::additive;
            Z.h = static_cast<int>(support.size());
            Z.a = support;
            Z.a.insert(Z.a.end(), rest.begin(), rest.end());
            Z.v = vertices[j];
            return Z;
        }
        throw std::invalid_argument("analyze_z_simplex: isotropic set is neither a partial basis nor additive");
    }
    if (edges.size() == 1) {
        const auto [x, y] = edges.front();
        const Int p = form.pair(vertices[x], vertices[y]);
        if (p == 1 || p == -1) {
            Z.kind = SimplexKind::intersection;
            Z.a.push_back(vertices[x]);
            for (std::size_t i = 0; i < s; ++i)
                if (i != x && i != y) Z.a.push_back(vertices[i]);
            Z.b = p == 1 ? vertices[y] : negate(vertices[y]);
            if (try_complete(form, Z.a, {*Z.b})) return Z;
        }
    }
    throw std::invalid_argument("analyze_z_simplex: pairings do not form a partial symplectic basis");
}

ReducedSimplex reduce_simplex(const SymplecticForm& form, const std::vector<IntVector>& vertices) {
    const ZSimplex Z = analyze_z_simplex(form, vertices);
    ReducedSimplex r{Z.kind, {}};
    for (const auto& v : vertices) r.vertices.push_back(reduce_vec(v));
    std::sort(r.vertices.begin(), r.vertices.end());
    const auto k = classify_f2(F2Form(form), r.vertices);
    if (!k || *k != Z.kind) throw std::logic_error("reduce_simplex: reduction changed the simplex type");
    return r;
}

bool maps_lax_set(const IntMatrix& M, const std::vector<IntVector>& s1, const std::vector<IntVector>& s2) {
    std::set<LaxVector> img, tgt;
    for (const auto& v : s1) img.insert(LaxVector(M * v));
    for (const auto& v : s2) tgt.insert(LaxVector(v));
    return img == tgt && img.size() == s1.size();
}

IntMatrix match_simplices(const SymplecticForm& form, const std::vector<IntVector>& s1,
                          const std::vector<IntVector>& s2) {
    const ReducedSimplex r1 = reduce_simplex(form, s1), r2 = reduce_simplex(form, s2);
    if (r1.vertices != r2.vertices) throw std::invalid_argument("match_simplices: reductions differ");
    const ZSimplex Z = analyze_z_simplex(form, s1);
    std::map<F2Vec, IntVector> by_red;
    for (const auto& v : s2) by_red[reduce_vec(v)] = v;
    auto partner = [&](const IntVector& v) { return by_red.at(reduce_vec(v)); };

    // Roles in S2 are assigned by reduction, which fixes the order and, for
    // the intersection kind, which vertex of the pair plays b.
    std::vector<IntVector> a2;
    for (const auto& v : Z.a) a2.push_back(partner(v));
    std::vector<IntVector> b1, b2;
    if (Z.kind == SimplexKind::intersection) {
        b1.push_back(*Z.b);
        IntVector y = partner(*Z.b);
        const Int p = form.pair(a2[0], y);
        if (p != 1 && p != -1) throw std::logic_error("match_simplices: pair does not reduce to a pair");
        b2.push_back(p == 1 ? y : negate(y));
    }
    if (Z.kind == SimplexKind::additive) {
        const IntVector v2 = partner(*Z.v);
        const IntMatrix P = complete_partial_basis(form, a2, {});
        const IntVector c = coordinates(P, v2);
        for (std::size_t t = 0; t < c.size(); ++t) {
            const bool in = static_cast<int>(t) < Z.h;
            if (in && c[t] == -1) a2[t] = negate(a2[t]);
            else if (in ? c[t] != 1 : c[t] != 0)
                throw std::logic_error("match_simplices: relation does not lift with unit coefficients");
        }
    }

    const IntMatrix P1 = complete_partial_basis(form, Z.a, b1);
    const IntMatrix P2 = complete_partial_basis(form, a2, b2);
    const IntMatrix M1 = P2 * unimodular_inverse(P1);
    const IntMatrix M2 = lift_mod2_stabilizer(reduce_mod2(M1), form, Z.a, b1);
    const IntMatrix M = M1 * form.inverse_of(M2);
    if (!form.preserves(M) || !is_level_two(M) || !maps_lax_set(M, s1, s2))
        throw std::logic_error("match_simplices: output check failed");
    return M;
}

}  // namespace ht
