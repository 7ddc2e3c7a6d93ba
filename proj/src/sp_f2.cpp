#include "ht/symplectic.hpp"

#include <bit>
#include <map>
#include <memory>
#include <mutex>
#include <stdexcept>
#include <unordered_set>

namespace ht {

namespace {

int parity(F2Vec x) { return std::popcount(x) & 1; }

}  // namespace

F2Form::F2Form(const SymplecticForm& f) : g_(f.genus()) {
    if (f.dim() > static_cast<std::size_t>(kMaxF2Dim)) throw std::invalid_argument("F2Form: dimension too large");
    for (std::size_t i = 0; i < f.dim(); ++i) {
        F2Vec r = 0;
        for (std::size_t j = 0; j < f.dim(); ++j)
            if (f.gram()(i, j) % 2 != 0) r |= F2Vec(1) << j;
        rows_[i] = r;
    }
}

F2Vec F2Form::dual(F2Vec w) const {
    F2Vec out = 0;
    for (int i = 0; i < dim(); ++i)
        if (parity(rows_[i] & w)) out |= F2Vec(1) << i;
    return out;
}

int F2Form::pair(F2Vec u, F2Vec w) const { return parity(u & dual(w)); }

SpElementF2 SpElementF2::identity(int dim) {
    if (dim < 0 || dim > kMaxF2Dim) throw std::invalid_argument("SpElementF2: dimension out of range");
    SpElementF2 x;
    x.dim_ = dim;
    for (int j = 0; j < dim; ++j) x.cols_[j] = F2Vec(1) << j;
    return x;
}

SpElementF2 SpElementF2::from_columns(const std::vector<F2Vec>& cols) {
    if (cols.size() > static_cast<std::size_t>(kMaxF2Dim)) throw std::invalid_argument("SpElementF2: too many columns");
    SpElementF2 x;
    x.dim_ = static_cast<int>(cols.size());
    for (std::size_t j = 0; j < cols.size(); ++j) {
        if (cols[j] >> cols.size()) throw std::invalid_argument("SpElementF2: column has stray bits");
        x.cols_[j] = cols[j];
    }
    return x;
}

SpElementF2 SpElementF2::reduce(const IntMatrix& M) {
    if (M.rows() != M.cols() || M.rows() > static_cast<std::size_t>(kMaxF2Dim))
        throw std::invalid_argument("reduce_mod2: matrix must be square of size <= 16");
    SpElementF2 x;
    x.dim_ = static_cast<int>(M.rows());
    for (std::size_t j = 0; j < M.cols(); ++j) {
        F2Vec c = 0;
        for (std::size_t i = 0; i < M.rows(); ++i)
            if (M(i, j) % 2 != 0) c |= F2Vec(1) << i;
        x.cols_[j] = c;
    }
    return x;
}

SpElementF2 SpElementF2::transvection(F2Vec w, const F2Form& form) {
    SpElementF2 x = identity(form.dim());
    const F2Vec gw = form.dual(w);
    for (int j = 0; j < x.dim_; ++j)
        if (parity(x.cols_[j] & gw)) x.cols_[j] ^= w;
    return x;
}

F2Vec SpElementF2::apply(F2Vec x) const {
    F2Vec out = 0;
    while (x) {
        int j = std::countr_zero(x);
        out ^= cols_[j];
        x &= x - 1;
    }
    return out;
}

SpElementF2 SpElementF2::operator*(const SpElementF2& o) const {
    if (dim_ != o.dim_) throw std::invalid_argument("SpElementF2: dimension mismatch");
    SpElementF2 r;
    r.dim_ = dim_;
    for (int j = 0; j < dim_; ++j) r.cols_[j] = apply(o.cols_[j]);
    return r;
}

bool SpElementF2::operator==(const SpElementF2& o) const {
    if (dim_ != o.dim_) return false;
    for (int j = 0; j < dim_; ++j)
        if (cols_[j] != o.cols_[j]) return false;
    return true;
}

bool SpElementF2::preserves(const F2Form& form) const {
    if (form.dim() != dim_) return false;
    for (int i = 0; i < dim_; ++i)
        for (int j = i + 1; j < dim_; ++j)
            if (form.pair(cols_[i], cols_[j]) != form.pair(F2Vec(1) << i, F2Vec(1) << j)) return false;
    return true;
}

IntMatrix SpElementF2::to_int() const {
    IntMatrix M(dim_, dim_);
    for (int j = 0; j < dim_; ++j)
        for (int i = 0; i < dim_; ++i)
            if ((cols_[j] >> i) & 1u) M(i, j) = 1;
    return M;
}

std::uint64_t SpElementF2::key() const {
    if (dim_ > 8) throw std::invalid_argument("SpElementF2::key needs dimension <= 8");
    std::uint64_t k = 0;
    for (int j = 0; j < dim_; ++j) k |= static_cast<std::uint64_t>(cols_[j]) << (8 * j);
    return k;
}

SpElementF2 SpElementF2::from_key(std::uint64_t key, int dim) {
    SpElementF2 x;
    x.dim_ = dim;
    for (int j = 0; j < dim; ++j) x.cols_[j] = static_cast<F2Vec>((key >> (8 * j)) & 0xffu);
    return x;
}

SpElementF2 SpElementF2::inverse() const {
    // Gauss-Jordan on rows of [x | I].
    std::array<F2Vec, kMaxF2Dim> rows{}, aug{};
    for (int i = 0; i < dim_; ++i) {
        for (int c = 0; c < dim_; ++c)
            if ((cols_[c] >> i) & 1u) rows[i] |= F2Vec(1) << c;
        aug[i] = F2Vec(1) << i;
    }
    for (int c = 0; c < dim_; ++c) {
        int p = -1;
        for (int i = c; i < dim_; ++i)
            if ((rows[i] >> c) & 1u) {
                p = i;
                break;
            }
        if (p < 0) throw std::domain_error("SpElementF2::inverse: singular matrix");
        std::swap(rows[p], rows[c]);
        std::swap(aug[p], aug[c]);
        for (int i = 0; i < dim_; ++i)
            if (i != c && ((rows[i] >> c) & 1u)) {
                rows[i] ^= rows[c];
                aug[i] ^= aug[c];
            }
    }
    SpElementF2 r;
    r.dim_ = dim_;
    for (int i = 0; i < dim_; ++i)
        for (int c = 0; c < dim_; ++c)
            if ((aug[i] >> c) & 1u) r.cols_[c] |= F2Vec(1) << i;
    return r;
}

SpElementF2 reduce_mod2(const IntMatrix& M) { return SpElementF2::reduce(M); }

SpF2Store::SpF2Store(const F2Form& form, std::size_t max_elements) : form_(form) {
    if (form.genus() > 3) throw std::length_error("SpF2Store: genus too large for enumeration");
    const int d = form.dim();
    for (F2Vec w = 1; w < (F2Vec(1) << d); ++w) {
        gens_.push_back(w);
        gen_mats_.push_back(SpElementF2::transvection(w, form));
    }
    std::vector<F2Vec> gdual;
    for (F2Vec w : gens_) gdual.push_back(form.dual(w));
    const SpElementF2 id = SpElementF2::identity(d);
    parent_.reserve(max_elements < 2'000'000 ? max_elements : 2'000'000);
    parent_.emplace(id.key(), 0xff);
    std::vector<std::uint64_t> frontier{id.key()}, next;
    while (!frontier.empty()) {
        next.clear();
        for (std::uint64_t k : frontier) {
            const SpElementF2 x = SpElementF2::from_key(k, d);
            for (std::size_t gi = 0; gi < gens_.size(); ++gi) {
                // tau_w * x, column by column
                std::uint64_t nk = 0;
                for (int j = 0; j < d; ++j) {
                    F2Vec c = x.column(j);
                    if (std::popcount(c & gdual[gi]) & 1) c ^= gens_[gi];
                    nk |= static_cast<std::uint64_t>(c) << (8 * j);
                }
                if (parent_.emplace(nk, static_cast<std::uint8_t>(gi)).second) {
                    if (parent_.size() > max_elements) throw std::length_error("SpF2Store: element bound exceeded");
                    next.push_back(nk);
                }
            }
        }
        frontier.swap(next);
    }
}

bool SpF2Store::contains(const SpElementF2& x) const {
    return x.dim() == form_.dim() && parent_.count(x.key()) > 0;
}

std::vector<F2Vec> SpF2Store::factor(const SpElementF2& x) const {
    if (!contains(x)) throw std::invalid_argument("SpF2Store::factor: element is not in the group");
    std::vector<F2Vec> out;
    SpElementF2 cur = x;
    for (;;) {
        std::uint8_t p = parent_.at(cur.key());
        if (p == 0xff) break;
        out.push_back(gens_[p]);
        cur = gen_mats_[p] * cur;  // transvections over F2 are involutions
    }
    return out;
}

std::vector<SpElementF2> SpF2Store::elements() const {
    std::vector<SpElementF2> out;
    out.reserve(parent_.size());
    for (const auto& kv : parent_) out.push_back(SpElementF2::from_key(kv.first, form_.dim()));
    return out;
}

std::size_t SpF2Store::closure_order(const std::vector<SpElementF2>& gens) const {
    const int d = form_.dim();
    std::unordered_set<std::uint64_t> seen;
    seen.reserve(order());
    const SpElementF2 id = SpElementF2::identity(d);
    seen.insert(id.key());
    std::vector<std::uint64_t> frontier{id.key()}, next;
    while (!frontier.empty()) {
        next.clear();
        for (std::uint64_t k : frontier) {
            const SpElementF2 x = SpElementF2::from_key(k, d);
            for (const auto& gm : gens) {
                std::uint64_t nk = (gm * x).key();
                if (seen.insert(nk).second) next.push_back(nk);
            }
        }
        frontier.swap(next);
    }
    return seen.size();
}

std::size_t enumerate_sp_f2(int g) {
    if (g < 1) throw std::invalid_argument("enumerate_sp_f2: genus must be positive");
    if (g > 3) throw std::length_error("enumerate_sp_f2: genus above 3 exceeds the memory bound");
    return sp_f2_store(F2Form::chain(g)).order();
}

const SpF2Store& sp_f2_store(const F2Form& form) {
    static std::mutex mu;
    static std::vector<std::pair<F2Form, std::unique_ptr<SpF2Store>>> stores;
    std::lock_guard<std::mutex> lock(mu);
    for (const auto& [f, s] : stores)
        if (f == form) return *s;
    stores.emplace_back(form, std::make_unique<SpF2Store>(form));
    return *stores.back().second;
}

IntMatrix lift_mod2(const SpElementF2& N, const SymplecticForm& form) {
    const F2Form f2(form);
    if (N.dim() != f2.dim()) throw std::invalid_argument("lift_mod2: dimension mismatch");
    if (!N.preserves(f2)) throw std::invalid_argument("lift_mod2: matrix does not preserve the form mod 2");
    IntMatrix M = IntMatrix::identity(form.dim());
    if (N.is_identity()) return M;
    for (F2Vec w : sp_f2_store(f2).factor(N)) {
        IntVector v(form.dim(), 0);
        for (std::size_t i = 0; i < form.dim(); ++i)
            if ((w >> i) & 1u) v[i] = 1;
        multiply_by_transvection(M, v, form, 1);
    }
    return M;
}

}  // namespace ht
