#include "ht/symplectic.hpp"

#include "ht/braid_burau.hpp"
#include "ht/marked_disk.hpp"

#include <algorithm>
#include <bit>
#include <map>
#include <mutex>
#include <stdexcept>

namespace ht {

namespace {

// x with parity(fn[i] & x) = rhs[i] for all i, if one exists.
std::optional<F2Vec> solve_f2(std::vector<F2Vec> fn, std::vector<int> rhs, int dim) {
    std::vector<int> pivcol;
    std::size_t rank = 0;
    for (int c = 0; c < dim && rank < fn.size(); ++c) {
        std::size_t p = rank;
        while (p < fn.size() && !((fn[p] >> c) & 1u)) ++p;
        if (p == fn.size()) continue;
        std::swap(fn[p], fn[rank]);
        std::swap(rhs[p], rhs[rank]);
        for (std::size_t i = 0; i < fn.size(); ++i)
            if (i != rank && ((fn[i] >> c) & 1u)) {
                fn[i] ^= fn[rank];
                rhs[i] ^= rhs[rank];
            }
        pivcol.push_back(c);
        ++rank;
    }
    for (std::size_t i = rank; i < fn.size(); ++i)
        if (rhs[i]) return std::nullopt;
    F2Vec x = 0;
    for (std::size_t i = 0; i < rank; ++i)
        if (rhs[i]) x |= F2Vec(1) << pivcol[i];
    return x;
}

IntVector unit(std::size_t dim, std::size_t i) {
    IntVector e(dim, 0);
    e[i] = 1;
    return e;
}

IntVector axpy(const IntVector& x, const Int& c, const IntVector& y) {
    IntVector r = x;
    if (c != 0)
        for (std::size_t i = 0; i < r.size(); ++i) r[i] += c * y[i];
    return r;
}

// Removes the components along the hyperbolic pairs (a_i, b_i).
IntVector project_off(const SymplecticForm& form, IntVector x, const std::vector<IntVector>& a,
                      const std::vector<IntVector>& b) {
    const IntVector x0 = x;
    for (std::size_t i = 0; i < a.size(); ++i) {
        x = axpy(x, -form.pair(x0, b[i]), a[i]);
        x = axpy(x, form.pair(x0, a[i]), b[i]);
    }
    return x;
}

// Nonzero rows of the Hermite normal form of the given rows.
std::vector<IntVector> hermite_rows(std::vector<IntVector> rows) {
    if (rows.empty()) return rows;
    const std::size_t dim = rows[0].size();
    std::size_t r = 0;
    for (std::size_t c = 0; c < dim && r < rows.size(); ++c) {
        std::size_t p = r;
        while (p < rows.size() && rows[p][c] == 0) ++p;
        if (p == rows.size()) continue;
        std::swap(rows[p], rows[r]);
        for (std::size_t i = r + 1; i < rows.size(); ++i)
            while (rows[i][c] != 0) {
                rows[r] = axpy(rows[r], -(rows[r][c] / rows[i][c]), rows[i]);
                std::swap(rows[r], rows[i]);
            }
        if (rows[r][c] < 0) rows[r] = negate(rows[r]);
        for (std::size_t i = 0; i < r; ++i) {
            Int q = rows[i][c] / rows[r][c];
            if (rows[i][c] < 0 && q * rows[r][c] != rows[i][c]) q -= 1;
            rows[i] = axpy(rows[i], -q, rows[r]);
        }
        ++r;
    }
    rows.resize(r);
    return rows;
}

// Splits off hyperbolic pairs from a basis L of a unimodular sublattice,
// using only unimodular changes of L.
void symplectic_reduce(const SymplecticForm& form, std::vector<IntVector> L, std::vector<IntVector>& A,
                       std::vector<IntVector>& B) {
    while (!L.empty()) {
        const IntVector w = L[0];
        std::size_t piv = 0;
        for (;;) {
            piv = 0;
            Int best = 0;
            std::size_t nonzero = 0;
            std::vector<Int> p(L.size(), 0);
            for (std::size_t j = 1; j < L.size(); ++j) {
                p[j] = form.pair(w, L[j]);
                if (p[j] == 0) continue;
                ++nonzero;
                Int m = abs(p[j]);
                if (piv == 0 || m < best) {
                    piv = j;
                    best = m;
                }
            }
            if (piv == 0) throw std::logic_error("complete_partial_basis: complement is degenerate");
            if (nonzero == 1) {
                if (best != 1) throw std::logic_error("complete_partial_basis: complement is not unimodular");
                if (p[piv] < 0) L[piv] = negate(L[piv]);
                break;
            }
            for (std::size_t j = 1; j < L.size(); ++j)
                if (j != piv && p[j] != 0) L[j] = axpy(L[j], -(p[j] / p[piv]), L[piv]);
        }
        const IntVector z = L[piv];
        A.push_back(w);
        B.push_back(z);
        std::vector<IntVector> rest;
        for (std::size_t j = 1; j < L.size(); ++j)
            if (j != piv) rest.push_back(project_off(form, L[j], {w}, {z}));
        L.swap(rest);
    }
}

// Solutions of F y = e with small entries: a particular solution from the
// Smith form, reduced against an LLL basis of ker F.
class SmallSolver {
public:
    explicit SmallSolver(const IntMatrix& F) : snf_(smith_normal_form(F)) {
        for (std::size_t t = snf_.rank; t < F.cols(); ++t) kernel_.push_back(snf_.V.column(t));
        kernel_ = lll_reduce(std::move(kernel_));
    }

    // Requires all invariant factors to be 1.
    IntVector solve(const IntVector& e) const {
        const IntVector rhs = snf_.U * e;
        IntVector yp(snf_.V.rows(), 0);
        for (std::size_t t = 0; t < rhs.size(); ++t) yp[t] = rhs[t];
        return reduce_against(snf_.V * yp, kernel_);
    }

private:
    SmithDecomposition snf_;
    std::vector<IntVector> kernel_;
};

void check_partial_basis(const SymplecticForm& form, const std::vector<IntVector>& a, const std::vector<IntVector>& b) {
    if (a.size() > static_cast<std::size_t>(form.genus()) || b.size() > static_cast<std::size_t>(form.genus()))
        throw std::invalid_argument("partial basis: too many vectors");
    for (const auto& v : a)
        if (v.size() != form.dim()) throw std::invalid_argument("partial basis: dimension mismatch");
    for (const auto& v : b)
        if (v.size() != form.dim()) throw std::invalid_argument("partial basis: dimension mismatch");
    for (std::size_t i = 0; i < a.size(); ++i)
        for (std::size_t j = 0; j < a.size(); ++j)
            if (form.pair(a[i], a[j]) != 0) throw std::invalid_argument("partial basis: a-vectors are not isotropic");
    for (std::size_t i = 0; i < b.size(); ++i)
        for (std::size_t j = 0; j < b.size(); ++j)
            if (form.pair(b[i], b[j]) != 0) throw std::invalid_argument("partial basis: b-vectors are not isotropic");
    for (std::size_t i = 0; i < a.size(); ++i)
        for (std::size_t j = 0; j < b.size(); ++j)
            if (form.pair(a[i], b[j]) != (i == j ? 1 : 0))
                throw std::invalid_argument("partial basis: wrong pairing between a and b");
}

}  // namespace

IntMatrix complete_partial_basis(const SymplecticForm& form, const std::vector<IntVector>& a,
                                 const std::vector<IntVector>& b) {
    const std::size_t g = static_cast<std::size_t>(form.genus());
    const std::size_t dim = form.dim();
    if (b.size() > a.size()) {
        // (b; -a) is a partial basis with more a-vectors.
        std::vector<IntVector> na;
        for (const auto& v : a) na.push_back(negate(v));
        IntMatrix P = complete_partial_basis(form, b, na);
        IntMatrix Q(dim, dim);
        for (std::size_t i = 0; i < g; ++i) {
            Q.set_column(i, negate(P.column(g + i)));
            Q.set_column(g + i, P.column(i));
        }
        return Q;
    }
    check_partial_basis(form, a, b);
    std::vector<IntVector> A = a, B = b;
    const std::size_t k = a.size(), l = b.size();

    if (k > l) {
        // Partners y with pair(a_j, y) = delta_ij and pair(b_j, y) = 0.
        IntMatrix F(k + l, dim);
        for (std::size_t j = 0; j < k + l; ++j) {
            const IntVector& v = j < k ? a[j] : b[j - k];
            for (std::size_t c = 0; c < dim; ++c) {
                Int s = 0;
                for (std::size_t r = 0; r < dim; ++r)
                    if (v[r] != 0 && form.gram()(r, c) != 0) s += v[r] * form.gram()(r, c);
                F(j, c) = s;
            }
        }
        const auto d = invariant_factors(F);
        if (d.size() != k + l) throw std::invalid_argument("complete_partial_basis: vectors are linearly dependent");
        for (const auto& x : d)
            if (x != 1) throw std::invalid_argument("complete_partial_basis: span is not a direct summand");
        const SmallSolver solver(F);
        for (std::size_t i = l; i < k; ++i) {
            const IntVector y = solver.solve(unit(k + l, i));
            // Symplectic Gram-Schmidt against the partners found so far.
            IntVector bi = y;
            for (std::size_t m = l; m < i; ++m) bi = axpy(bi, -form.pair(y, B[m]), A[m]);
            B.push_back(bi);
        }
    }

    // Basis of the orthogonal complement from the projected unit vectors.
    std::vector<IntVector> L;
    if (A.size() < g) {
        for (std::size_t t = 0; t < dim; ++t) L.push_back(project_off(form, unit(dim, t), A, B));
        L = lll_reduce(hermite_rows(std::move(L)));
    }
    symplectic_reduce(form, L, A, B);
    if (A.size() != g || B.size() != g) throw std::logic_error("complete_partial_basis: wrong number of vectors");

    std::vector<IntVector> cols = A;
    cols.insert(cols.end(), B.begin(), B.end());
    IntMatrix P = IntMatrix::from_columns(cols);
    if (P.transpose() * form.gram() * P != SymplecticForm::standard(static_cast<int>(g)).gram())
        throw std::logic_error("complete_partial_basis: result is not a symplectic basis");
    return P;
}

std::vector<F2Vec> complete_partial_basis_f2(const F2Form& form, const std::vector<F2Vec>& a,
                                             const std::vector<F2Vec>& b) {
    const int g = form.genus();
    if (b.size() > a.size()) {
        auto r = complete_partial_basis_f2(form, b, a);
        std::vector<F2Vec> out(r.begin() + g, r.end());
        out.insert(out.end(), r.begin(), r.begin() + g);
        return out;
    }
    if (a.size() > static_cast<std::size_t>(g)) throw std::invalid_argument("partial basis: too many vectors");
    for (std::size_t i = 0; i < a.size(); ++i) {
        for (std::size_t j = 0; j < a.size(); ++j)
            if (form.pair(a[i], a[j])) throw std::invalid_argument("partial basis: a-vectors are not isotropic");
        for (std::size_t j = 0; j < b.size(); ++j)
            if (form.pair(a[i], b[j]) != (i == j ? 1 : 0))
                throw std::invalid_argument("partial basis: wrong pairing between a and b");
    }
    for (std::size_t i = 0; i < b.size(); ++i)
        for (std::size_t j = 0; j < b.size(); ++j)
            if (form.pair(b[i], b[j])) throw std::invalid_argument("partial basis: b-vectors are not isotropic");

    std::vector<F2Vec> A = a, B = b;
    for (std::size_t i = b.size(); i < a.size(); ++i) {
        std::vector<F2Vec> fn;
        std::vector<int> rhs;
        for (std::size_t j = 0; j < A.size(); ++j) {
            fn.push_back(form.dual(A[j]));
            rhs.push_back(j == i ? 1 : 0);
        }
        for (F2Vec v : B) {
            fn.push_back(form.dual(v));
            rhs.push_back(0);
        }
        auto y = solve_f2(fn, rhs, form.dim());
        if (!y) throw std::invalid_argument("complete_partial_basis_f2: vectors are linearly dependent");
        B.push_back(*y);
    }
    for (int t = 0; t < form.dim() && static_cast<int>(A.size()) < g; ++t) {
        F2Vec x = F2Vec(1) << t;
        const F2Vec x0 = x;
        for (std::size_t i = 0; i < A.size(); ++i) {
            if (form.pair(x0, B[i])) x ^= A[i];
            if (form.pair(x0, A[i])) x ^= B[i];
        }
        if (x == 0) continue;
        std::vector<F2Vec> fn;
        std::vector<int> rhs;
        for (std::size_t i = 0; i < A.size(); ++i) {
            fn.push_back(form.dual(A[i]));
            rhs.push_back(0);
            fn.push_back(form.dual(B[i]));
            rhs.push_back(0);
        }
        fn.push_back(form.dual(x));
        rhs.push_back(1);
        auto y = solve_f2(fn, rhs, form.dim());
        if (!y) throw std::logic_error("complete_partial_basis_f2: degenerate complement");
        A.push_back(x);
        B.push_back(*y);
    }
    if (static_cast<int>(A.size()) != g) throw std::logic_error("complete_partial_basis_f2: wrong number of vectors");
    std::vector<F2Vec> out = A;
    out.insert(out.end(), B.begin(), B.end());
    return out;
}

namespace {

// Standard coordinates throughout: a_i = e_{i-1}, b_i = e_{g+i-1}.
// Finds M fixing a_1..a_k and b_1..b_l (l <= k) with reduction N.
IntMatrix solve_stabilizer(int g, int k, int l, const SpElementF2& N) {
    const std::size_t G = static_cast<std::size_t>(g);
    if (l > 0) {
        // N is the identity on the first l pairs and preserves their
        // orthogonal complement.
        const int h = g - l;
        auto to_sub = [&](F2Vec x) {
            F2Vec y = 0;
            for (int j = 0; j < h; ++j) {
                if ((x >> (l + j)) & 1u) y |= F2Vec(1) << j;
                if ((x >> (g + l + j)) & 1u) y |= F2Vec(1) << (h + j);
            }
            return y;
        };
        std::vector<F2Vec> cols;
        for (int j = 0; j < h; ++j) cols.push_back(to_sub(N.column(l + j)));
        for (int j = 0; j < h; ++j) cols.push_back(to_sub(N.column(g + l + j)));
        IntMatrix MV = h > 0 ? solve_stabilizer(h, k - l, 0, SpElementF2::from_columns(cols)) : IntMatrix();
        auto idx = [&](std::size_t i) { return i < static_cast<std::size_t>(h) ? l + i : g + l + (i - h); };
        IntMatrix M = IntMatrix::identity(2 * G);
        for (std::size_t r = 0; r < 2 * static_cast<std::size_t>(h); ++r)
            for (std::size_t c = 0; c < 2 * static_cast<std::size_t>(h); ++c) M(idx(r), idx(c)) = MV(r, c);
        return M;
    }
    if (k == 0) {
        // Lift in chain coordinates so the enumerated group is shared.
        const IntMatrix& P = standard_basis_change(g);
        const SpElementF2 Pbar = reduce_mod2(P);
        const IntMatrix M = lift_mod2(Pbar * N * Pbar.inverse(), SymplecticForm::chain(g));
        return unimodular_inverse(P) * M * P;
    }

    // rho(N): restriction to span(a_2.., b_2..) with the a_1-component dropped.
    const int h = g - 1;
    auto to_sub = [&](F2Vec x) {
        F2Vec y = 0;
        for (int j = 0; j < h; ++j) {
            if ((x >> (1 + j)) & 1u) y |= F2Vec(1) << j;
            if ((x >> (g + 1 + j)) & 1u) y |= F2Vec(1) << (h + j);
        }
        return y;
    };
    auto sub_index = [&](std::size_t i) -> std::size_t { return i < static_cast<std::size_t>(h) ? 1 + i : g + 1 + (i - h); };
    IntMatrix E = IntMatrix::identity(2 * G);
    if (h > 0) {
        std::vector<F2Vec> cols;
        for (int j = 0; j < h; ++j) cols.push_back(to_sub(N.column(1 + j)));
        for (int j = 0; j < h; ++j) cols.push_back(to_sub(N.column(g + 1 + j)));
        IntMatrix MR = solve_stabilizer(h, k - 1, 0, SpElementF2::from_columns(cols));
        for (std::size_t r = 0; r < 2 * static_cast<std::size_t>(h); ++r)
            for (std::size_t c = 0; c < 2 * static_cast<std::size_t>(h); ++c) E(sub_index(r), sub_index(c)) = MR(r, c);
    }
    // N = N_K * reduce(E) with N_K in the kernel K_2.
    const SpElementF2 NK = N * reduce_mod2(E).inverse();
    IntMatrix MK = IntMatrix::identity(2 * G);
    // column b_1
    MK(0, G) = (NK.column(g) & 1u) ? 1 : 0;  // d_1
    for (int i = 2; i <= g; ++i) {
        const int ci = (NK.column(i - 1) & 1u) ? 1 : 0;
        const int di = (NK.column(g + i - 1) & 1u) ? 1 : 0;
        if (i <= k && ci != 0) throw std::logic_error("lift_mod2_stabilizer: N moves a fixed vector");
        MK(i - 1, G) = di;
        MK(G + i - 1, G) = -ci;
        MK(0, i - 1) = ci;
        MK(0, G + i - 1) = di;
    }
    return MK * E;
}

}  // namespace

IntMatrix lift_mod2_stabilizer(const SpElementF2& N, const SymplecticForm& form, const std::vector<IntVector>& a,
                               const std::vector<IntVector>& b) {
    const F2Form f2(form);
    if (N.dim() != f2.dim() || !N.preserves(f2))
        throw std::invalid_argument("lift_mod2_stabilizer: N is not symplectic mod 2");
    auto red = [](const IntVector& v) {
        F2Vec x = 0;
        for (std::size_t i = 0; i < v.size(); ++i)
            if (v[i] % 2 != 0) x |= F2Vec(1) << i;
        return x;
    };
    for (const auto& v : a)
        if (N.apply(red(v)) != red(v)) throw std::invalid_argument("lift_mod2_stabilizer: N does not fix a reduced a-vector");
    for (const auto& v : b)
        if (N.apply(red(v)) != red(v)) throw std::invalid_argument("lift_mod2_stabilizer: N does not fix a reduced b-vector");

    std::vector<IntVector> A = a, B = b;
    if (B.size() > A.size()) {
        A = b;
        B.clear();
        for (const auto& v : a) B.push_back(negate(v));
    }
    const IntMatrix P = complete_partial_basis(form, A, B);
    const SpElementF2 Pbar = reduce_mod2(P);
    const SpElementF2 Nstd = Pbar.inverse() * N * Pbar;
    const IntMatrix Mstd =
        solve_stabilizer(form.genus(), static_cast<int>(A.size()), static_cast<int>(B.size()), Nstd);
    const IntMatrix M = P * Mstd * unimodular_inverse(P);

    if (!form.preserves(M) || !(reduce_mod2(M) == N)) throw std::logic_error("lift_mod2_stabilizer: output check failed");
    for (const auto& v : a)
        if (M * v != v) throw std::logic_error("lift_mod2_stabilizer: output moves an a-vector");
    for (const auto& v : b)
        if (M * v != v) throw std::logic_error("lift_mod2_stabilizer: output moves a b-vector");
    return M;
}

const IntMatrix& standard_basis_change(int g) {
    static std::mutex mu;
    static std::map<int, IntMatrix> cache;
    std::lock_guard<std::mutex> lock(mu);
    auto it = cache.find(g);
    if (it != cache.end()) return it->second;
    if (g < 1) throw std::invalid_argument("standard_basis_change: genus must be positive");
    const int n = 2 * g + 1;
    const auto form = SymplecticForm::chain(g);
    std::vector<IntVector> A, B;
    for (int i = 1; i <= g; ++i) {
        A.push_back(lift_class(ConvexCurve::from_points({2 * i, 2 * i + 1}, n)).vec());
        std::vector<int> pts;
        for (int p = 1; p <= 2 * i; ++p) pts.push_back(p);
        IntVector b = lift_class(ConvexCurve::from_points(pts, n)).vec();
        if (form.pair(A.back(), b) < 0) b = negate(b);
        B.push_back(b);
    }
    std::vector<IntVector> cols = A;
    cols.insert(cols.end(), B.begin(), B.end());
    IntMatrix P = IntMatrix::from_columns(cols);
    if (P.transpose() * form.gram() * P != SymplecticForm::standard(g).gram())
        throw std::logic_error("standard_basis_change: lift classes do not form a symplectic basis");
    return cache.emplace(g, std::move(P)).first->second;
}

IntMatrix chain_to_standard(const IntMatrix& M, int g) {
    const IntMatrix& P = standard_basis_change(g);
    return unimodular_inverse(P) * M * P;
}

IntMatrix standard_to_chain(const IntMatrix& M, int g) {
    const IntMatrix& P = standard_basis_change(g);
    return P * M * unimodular_inverse(P);
}

namespace {

struct CorrectorInput {
    std::size_t g;
    std::vector<Int> l, m;  // 1-based, index 0 unused
};

CorrectorInput read_corrector_input(const IntMatrix& Y) {
    if (Y.rows() != Y.cols() || Y.rows() % 2 != 0 || Y.rows() < 4)
        throw std::invalid_argument("corrector: Y must be 2g x 2g with g >= 2");
    const std::size_t g = Y.rows() / 2;
    const auto form = SymplecticForm::standard(static_cast<int>(g));
    if (!form.preserves(Y)) throw std::invalid_argument("corrector: Y is not symplectic");
    if (!is_level_two(Y)) throw std::invalid_argument("corrector: Y is not in the level 2 subgroup");
    if (Y.column(0) != unit(2 * g, 0)) throw std::invalid_argument("corrector: Y does not fix a_1");
    CorrectorInput in{g, std::vector<Int>(g + 1), std::vector<Int>(g + 1)};
    for (std::size_t i = 1; i <= g; ++i) {
        in.l[i] = Y(i - 1, g);
        in.m[i] = Y(g + i - 1, g);
    }
    if (in.m[1] != 1) throw std::logic_error("corrector: b_1-coordinate of Y(b_1) is not 1");
    return in;
}

CorrectorResult assemble(std::size_t g, const std::vector<TransvectionPower>& factors, const IntMatrix& Y) {
    const auto form = SymplecticForm::standard(static_cast<int>(g));
    CorrectorResult out{IntMatrix::identity(2 * g), {}};
    for (const auto& f : factors) {
        if (f.exponent == 0) continue;
        multiply_by_transvection(out.Z, f.v, form, f.exponent);
        out.factors.push_back(f);
    }
    if (out.Z * Y.column(g) != unit(2 * g, g)) throw std::logic_error("corrector: Z Y(b_1) != b_1");
    return out;
}

}  // namespace

CorrectorResult stabilizer_corrector_single(const IntMatrix& Y) {
    const auto in = read_corrector_input(Y);
    const std::size_t g = in.g;
    const IntVector a1 = unit(2 * g, 0);
    std::vector<TransvectionPower> f{{a1, in.l[1]}};
    for (std::size_t i = 2; i <= g; ++i) {
        const IntVector ai = unit(2 * g, i - 1), bi = unit(2 * g, g + i - 1);
        const Int n = in.m[i] * in.l[i] - in.l[i] - in.m[i];
        f.push_back({a1, n});
        f.push_back({add(a1, ai), in.l[i]});
        f.push_back({bi, -in.m[i]});
        f.push_back({add(a1, bi), in.m[i]});
    }
    return assemble(g, f, Y);
}

CorrectorResult stabilizer_corrector_pair(const IntMatrix& Y) {
    const auto in = read_corrector_input(Y);
    const std::size_t g = in.g;
    const IntVector a1 = unit(2 * g, 0), a2 = unit(2 * g, 1);
    if (Y.column(1) != a2 && Y.column(1) != negate(a2)) throw std::invalid_argument("corrector: Y does not fix <a_2>");
    if (in.m[2] != 0) throw std::logic_error("corrector: b_2-coordinate of Y(b_1) is not 0");
    std::vector<TransvectionPower> f{{a1, in.l[1]}, {a1, -in.l[2]}, {add(a1, a2), in.l[2]}};
    for (std::size_t i = 3; i <= g; ++i) {
        const IntVector ai = unit(2 * g, i - 1), bi = unit(2 * g, g + i - 1);
        const Int n = in.m[i] * in.l[i] - in.l[i] - in.m[i];
        f.push_back({a1, n});
        f.push_back({add(a1, ai), in.l[i]});
        f.push_back({bi, -in.m[i]});
        f.push_back({add(a1, bi), in.m[i]});
    }
    auto out = assemble(g, f, Y);
    if (out.Z * a2 != a2) throw std::logic_error("corrector: Z moves a_2");
    return out;
}

std::vector<NamedSpElement> xi_generating_set(int g) {
    if (g < 3) throw std::invalid_argument("xi_generating_set: needs g >= 3");
    const int n = 2 * g + 1;
    const auto form = SymplecticForm::chain(g);
    auto t = [&](const std::string& name, std::vector<int> pts) {
        return NamedSpElement{name, transvection(lift_class(ConvexCurve::from_points(pts, n)).vec(), form)};
    };
    std::vector<NamedSpElement> out;
    out.push_back({"-I", -IntMatrix::identity(form.dim())});
    out.push_back(t("t_a2", {2, 3}));
    out.push_back(t("t_u'", {2, 3, 4, 5}));
    out.push_back(t("t_b3", {1, 2, 3, 4, 5, 6}));
    for (int i = 4; i <= 2 * g; ++i) out.push_back(t("t_a" + std::to_string(i), {i, i + 1}));
    return out;
}

}  // namespace ht
