// Integral symplectic forms and transvections.
#pragma once

#include "ht/exact_linalg.hpp"

#include <string>

namespace ht {

/// A unimodular alternating form on Z^{2g}, stored by its Gram matrix.
/// pair(u, w) = u^T * gram * w.
class SymplecticForm {
public:
    /// Chain form: pair(x_i, x_{i+1}) = +1 for consecutive chain vectors.
    static SymplecticForm chain(int g);
    /// Standard form in the basis (a_1..a_g, b_1..b_g): pair(a_i, b_j) = delta_ij.
    static SymplecticForm standard(int g);

    int genus() const { return g_; }
    std::size_t dim() const { return 2 * static_cast<std::size_t>(g_); }
    const IntMatrix& gram() const { return gram_; }
    const std::string& name() const { return name_; }

    Int pair(const IntVector& u, const IntVector& w) const;
    /// gram * v, so that pair(w, v) = w . dual(v).
    IntVector dual(const IntVector& v) const;
    bool preserves(const IntMatrix& M) const;
    /// gram^{-1} M^T gram, the inverse of a form-preserving M.
    IntMatrix inverse_of(const IntMatrix& M) const;

    bool operator==(const SymplecticForm& o) const { return name_ == o.name_ && g_ == o.g_; }

private:
    SymplecticForm(int g, IntMatrix gram, std::string name);
    int g_ = 0;
    IntMatrix gram_;
    IntMatrix gram_inv_;
    std::string name_;
};

/// tau_v^k, where tau_v(w) = w + pair(w, v) v.
IntMatrix transvection(const IntVector& v, const SymplecticForm& form, const Int& k = 1);

/// M <- M * tau_v^k as a rank-one update.
void multiply_by_transvection(IntMatrix& M, const IntVector& v, const SymplecticForm& form, const Int& k = 1);

/// M == I modulo 2.
bool is_level_two(const IntMatrix& M);

}  // namespace ht
