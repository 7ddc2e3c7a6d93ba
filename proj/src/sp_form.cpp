#include "ht/sp_form.hpp"

#include <stdexcept>

namespace ht {

SymplecticForm::SymplecticForm(int g, IntMatrix gram, std::string name)
    : g_(g), gram_(std::move(gram)), gram_inv_(unimodular_inverse(gram_)), name_(std::move(name)) {}

SymplecticForm SymplecticForm::chain(int g) {
    if (g < 1) throw std::invalid_argument("genus must be positive");
    const std::size_t d = 2 * static_cast<std::size_t>(g);
    IntMatrix J(d, d);
    for (std::size_t i = 0; i + 1 < d; ++i) {
        J(i, i + 1) = 1;
        J(i + 1, i) = -1;
    }
    return SymplecticForm(g, std::move(J), "chain");
}

SymplecticForm SymplecticForm::standard(int g) {
    if (g < 1) throw std::invalid_argument("genus must be positive");
    const std::size_t d = 2 * static_cast<std::size_t>(g);
    IntMatrix J(d, d);
    for (std::size_t i = 0; i < static_cast<std::size_t>(g); ++i) {
        J(i, i + g) = 1;
        J(i + g, i) = -1;
    }
    return SymplecticForm(g, std::move(J), "standard");
}

Int SymplecticForm::pair(const IntVector& u, const IntVector& w) const {
    if (u.size() != dim() || w.size() != dim()) throw std::invalid_argument("pair: dimension mismatch");
    Int s = 0;
    for (std::size_t i = 0; i < dim(); ++i) {
        if (u[i] == 0) continue;
        for (std::size_t j = 0; j < dim(); ++j)
            if (gram_(i, j) != 0 && w[j] != 0) s += u[i] * gram_(i, j) * w[j];
    }
    return s;
}

IntVector SymplecticForm::dual(const IntVector& v) const { return gram_ * v; }

bool SymplecticForm::preserves(const IntMatrix& M) const {
    if (M.rows() != dim() || M.cols() != dim()) return false;
    return M.transpose() * gram_ * M == gram_;
}

IntMatrix SymplecticForm::inverse_of(const IntMatrix& M) const { return gram_inv_ * M.transpose() * gram_; }

IntMatrix transvection(const IntVector& v, const SymplecticForm& form, const Int& k) {
    IntMatrix T = IntMatrix::identity(form.dim());
    multiply_by_transvection(T, v, form, k);
    return T;
}

void multiply_by_transvection(IntMatrix& M, const IntVector& v, const SymplecticForm& form, const Int& k) {
    if (v.size() != form.dim() || M.cols() != form.dim()) throw std::invalid_argument("transvection: dimension mismatch");
    // tau_v^k = I + k v (gram v)^T, so M tau_v^k = M + k (M v)(gram v)^T.
    const IntVector f = form.dual(v);
    const IntVector Mv = M * v;
    for (std::size_t r = 0; r < M.rows(); ++r) {
        if (Mv[r] == 0) continue;
        const Int c = k * Mv[r];
        for (std::size_t j = 0; j < M.cols(); ++j)
            if (f[j] != 0) M(r, j) += c * f[j];
    }
}

bool is_level_two(const IntMatrix& M) {
    for (std::size_t r = 0; r < M.rows(); ++r)
        for (std::size_t c = 0; c < M.cols(); ++c) {
            Int d = M(r, c) - (r == c ? 1 : 0);
            if (d % 2 != 0) return false;
        }
    return true;
}

}  // namespace ht
