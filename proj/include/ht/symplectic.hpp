// Sp_2g over Z and Z/2: reduction and lifting, basis completion, the
// constructive stabilizer lemmas and the corrector products.
#pragma once

#include "ht/exact_linalg.hpp"
#include "ht/sp_form.hpp"

#include <array>
#include <cstdint>
#include <functional>
#include <optional>
#include <unordered_map>
#include <string>
#include <vector>

namespace ht {

constexpr int kMaxF2Dim = 16;

/// Vectors over F2 are bitmasks: bit i is coordinate i.
using F2Vec = std::uint32_t;

/// Alternating form over F2, the reduction of an integral SymplecticForm.
class F2Form {
public:
    F2Form() = default;
    explicit F2Form(const SymplecticForm& f);
    static F2Form chain(int g) { return F2Form(SymplecticForm::chain(g)); }
    static F2Form standard(int g) { return F2Form(SymplecticForm::standard(g)); }

    int genus() const { return g_; }
    int dim() const { return 2 * g_; }
    int pair(F2Vec u, F2Vec w) const;
    /// gram * w, so that pair(u, w) = parity(u & dual(w)).
    F2Vec dual(F2Vec w) const;
    bool operator==(const F2Form& o) const { return g_ == o.g_ && rows_ == o.rows_; }

private:
    int g_ = 0;
    std::array<F2Vec, kMaxF2Dim> rows_{};
};

/// Square matrix over F2 of dimension <= kMaxF2Dim, stored by columns.
class SpElementF2 {
public:
    SpElementF2() = default;
    static SpElementF2 identity(int dim);
    static SpElementF2 from_columns(const std::vector<F2Vec>& cols);
    /// Entrywise reduction of an integer matrix.
    static SpElementF2 reduce(const IntMatrix& M);
    /// tau_w(x) = x + pair(x, w) w.
    static SpElementF2 transvection(F2Vec w, const F2Form& form);

    int dim() const { return dim_; }
    F2Vec column(int j) const { return cols_[j]; }
    F2Vec apply(F2Vec x) const;
    SpElementF2 operator*(const SpElementF2& o) const;
    bool operator==(const SpElementF2& o) const;
    bool is_identity() const { return *this == identity(dim_); }
    bool preserves(const F2Form& form) const;
    /// 0/1 integer matrix.
    IntMatrix to_int() const;
    /// Packs the columns into 64 bits; requires dim <= 8.
    std::uint64_t key() const;
    static SpElementF2 from_key(std::uint64_t key, int dim);
    /// Throws std::domain_error if singular.
    SpElementF2 inverse() const;

private:
    int dim_ = 0;
    std::array<F2Vec, kMaxF2Dim> cols_{};
};

SpElementF2 reduce_mod2(const IntMatrix& M);

/// Breadth-first closure of Sp_2g(F2) from all transvections, g <= 3.
/// Each element stores the generator that reached it, which yields a
/// factorization into transvections.
class SpF2Store {
public:
    SpF2Store(const F2Form& form, std::size_t max_elements = 2'000'000);
    std::size_t order() const { return parent_.size(); }
    bool contains(const SpElementF2& x) const;
    /// Vectors w_1..w_r with x = tau_{w_1} ... tau_{w_r}.
    std::vector<F2Vec> factor(const SpElementF2& x) const;
    const F2Form& form() const { return form_; }
    /// Every element, in unspecified order.
    std::vector<SpElementF2> elements() const;
    /// Closure of the given generators inside the group; returns its order.
    std::size_t closure_order(const std::vector<SpElementF2>& gens) const;

private:
    F2Form form_;
    std::vector<F2Vec> gens_;
    std::vector<SpElementF2> gen_mats_;
    // key -> index of the generator applied last (on the left)
    std::unordered_map<std::uint64_t, std::uint8_t> parent_;
};

/// Order of Sp_2g(F2) by closure, g <= 3; throws std::length_error above.
std::size_t enumerate_sp_f2(int g);

/// Shared store for the given form (built on first use).
const SpF2Store& sp_f2_store(const F2Form& form);

/// M over Z with reduce_mod2(M) = N, as a product of transvections about
/// 0/1 lifts of an F2 factorization. Needs genus <= 3.
IntMatrix lift_mod2(const SpElementF2& N, const SymplecticForm& form);

/// Full symplectic basis (a_1..a_g; b_1..b_g) extending the given partial
/// one, returned as the matrix with those columns. Throws
/// std::invalid_argument if the pairings are wrong or the span is not a
/// direct summand.
IntMatrix complete_partial_basis(const SymplecticForm& form, const std::vector<IntVector>& a,
                                 const std::vector<IntVector>& b);

/// The same over F2; returns a_1..a_g, b_1..b_g.
std::vector<F2Vec> complete_partial_basis_f2(const F2Form& form, const std::vector<F2Vec>& a,
                                             const std::vector<F2Vec>& b);

/// M in Sp(Z) fixing every a_i and b_j with reduce_mod2(M) = N. N must fix
/// the reductions of the a_i and b_j.
IntMatrix lift_mod2_stabilizer(const SpElementF2& N, const SymplecticForm& form, const std::vector<IntVector>& a,
                               const std::vector<IntVector>& b);

/// Columns a_1..a_g, b_1..b_g in chain coordinates, with a_i and b_i the
/// lift classes of c_{2i,2i+1} and c_{1..2i}, signed so the Gram matrix is
/// standard. Cached per g.
const IntMatrix& standard_basis_change(int g);

/// Chain-coordinate matrix expressed in the standard basis, and back.
IntMatrix chain_to_standard(const IntMatrix& M, int g);
IntMatrix standard_to_chain(const IntMatrix& M, int g);

struct TransvectionPower {
    IntVector v;
    Int exponent;
};

struct CorrectorResult {
    IntMatrix Z;
    std::vector<TransvectionPower> factors;  // Z is their product, in order
};

/// Y in Sp_2g(Z)[2] (standard coordinates) with Y(a_1) = a_1. Returns
/// Z = tau_{a1}^{l1} prod_i (tau_{a1}^{n_i} tau_{a1+a_i}^{l_i} tau_{b_i}^{-m_i} tau_{a1+b_i}^{m_i})
/// with n_i = m_i l_i - l_i - m_i, where Y(b_1) = sum l_i a_i + b_1 + sum m_i b_i.
CorrectorResult stabilizer_corrector_single(const IntMatrix& Y);

/// As above for Y also fixing <a_2>; the b_2-coordinate of Y(b_1) vanishes
/// and the i = 2 block is tau_{a1}^{-l2} tau_{a1+a2}^{l2}.
CorrectorResult stabilizer_corrector_pair(const IntMatrix& Y);

struct NamedSpElement {
    std::string name;
    IntMatrix M;  // chain coordinates
};

/// -I, t_{a2}, t_{u'}, t_{b3}, t_{a4}, ..., t_{a_{2g}} in chain coordinates.
std::vector<NamedSpElement> xi_generating_set(int g);

}  // namespace ht
