// Exact integer and F2 linear algebra.
#pragma once

#include <boost/multiprecision/cpp_int.hpp>
#include <nlohmann/json.hpp>

#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <string>
#include <vector>

namespace ht {

using Int = boost::multiprecision::cpp_int;
using IntVector = std::vector<Int>;

/// Dense row-major matrix over Z with arbitrary-precision entries.
class IntMatrix {
public:
    IntMatrix() = default;
    IntMatrix(std::size_t rows, std::size_t cols);
    IntMatrix(std::initializer_list<std::initializer_list<long long>> rows);

    static IntMatrix identity(std::size_t n);
    static IntMatrix from_columns(const std::vector<IntVector>& cols);

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }

    Int& operator()(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
    const Int& operator()(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }

    IntVector column(std::size_t c) const;
    IntVector row(std::size_t r) const;
    void set_column(std::size_t c, const IntVector& v);

    IntMatrix operator*(const IntMatrix& o) const;
    IntMatrix operator+(const IntMatrix& o) const;
    IntMatrix operator-(const IntMatrix& o) const;
    IntMatrix operator-() const;
    IntVector operator*(const IntVector& v) const;
    bool operator==(const IntMatrix& o) const = default;

    IntMatrix transpose() const;
    bool is_identity() const;
    bool is_zero() const;
    /// Block-diagonal sum.
    IntMatrix direct_sum(const IntMatrix& o) const;

    std::string to_string() const;

private:
    std::size_t rows_ = 0;
    std::size_t cols_ = 0;
    std::vector<Int> data_;
};

IntVector make_vector(std::initializer_list<long long> xs);
IntVector add(const IntVector& a, const IntVector& b);
IntVector scale(const Int& s, const IntVector& a);
IntVector negate(const IntVector& a);
bool is_zero(const IntVector& v);
std::string to_string(const IntVector& v);

/// U * M * V = D with U, V unimodular and D diagonal with d_1 | d_2 | ... .
struct SmithDecomposition {
    IntMatrix U;
    IntMatrix D;
    IntMatrix V;
    std::vector<Int> diagonal;  // nonzero invariant factors, all positive
    std::size_t rank = 0;
};

/// Pivot rule: smallest nonzero absolute value, ties broken by lowest
/// (row, column) index. Deterministic.
SmithDecomposition smith_normal_form(const IntMatrix& M);

/// Invariant factors only; cheaper since U and V are not accumulated.
std::vector<Int> invariant_factors(const IntMatrix& M);

/// Fraction-free (Bareiss) determinant.
Int determinant(const IntMatrix& M);

/// Inverse of a unimodular matrix; throws std::domain_error otherwise.
IntMatrix unimodular_inverse(const IntMatrix& M);

/// LLL-reduced basis (delta = 3/4, exact arithmetic) of the lattice spanned
/// by linearly independent rows.
std::vector<IntVector> lll_reduce(std::vector<IntVector> basis);

/// y minus a lattice vector close to it (Babai nearest plane). Best results
/// when the basis is LLL-reduced.
IntVector reduce_against(const IntVector& y, const std::vector<IntVector>& basis);

/// Divide by the gcd and make the first nonzero entry positive.
/// Throws std::invalid_argument on the zero vector.
IntVector primitive_normalize(const IntVector& v);

/// A primitive integer vector up to sign, stored in normalized form.
class LaxVector {
public:
    LaxVector() = default;
    explicit LaxVector(const IntVector& v) : v_(primitive_normalize(v)) {}
    const IntVector& vec() const { return v_; }
    std::size_t size() const { return v_.size(); }
    auto operator<=>(const LaxVector& o) const = default;
    std::string to_string() const { return ht::to_string(v_); }

private:
    IntVector v_;
};

/// Bit-packed matrix over F2.
class F2Matrix {
public:
    F2Matrix() = default;
    F2Matrix(std::size_t rows, std::size_t cols);

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }
    bool get(std::size_t r, std::size_t c) const;
    void set(std::size_t r, std::size_t c, bool v);
    void flip(std::size_t r, std::size_t c);

    std::uint64_t* row_words(std::size_t r) { return &words_[r * stride_]; }
    const std::uint64_t* row_words(std::size_t r) const { return &words_[r * stride_]; }
    std::size_t stride() const { return stride_; }

    static F2Matrix reduce(const IntMatrix& M);

private:
    std::size_t rows_ = 0;
    std::size_t cols_ = 0;
    std::size_t stride_ = 0;
    std::vector<std::uint64_t> words_;
};

std::size_t f2_rank(F2Matrix M);

// JSON: {"rows": r, "cols": c, "data": [[...], ...]}; entries outside the
// int64 range are written as decimal strings.
nlohmann::json to_json(const IntMatrix& M);
IntMatrix int_matrix_from_json(const nlohmann::json& j);
nlohmann::json to_json(const IntVector& v);
IntVector int_vector_from_json(const nlohmann::json& j);

}  // namespace ht
