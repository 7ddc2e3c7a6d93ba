#include "ht/exact_linalg.hpp"

#include <boost/multiprecision/cpp_int.hpp>

#include <algorithm>
#include <limits>
#include <sstream>
#include <stdexcept>
#include <utility>

namespace ht {

namespace {

using boost::multiprecision::abs;

std::size_t words_for(std::size_t bits) { return (bits + 63) / 64; }

// Floor division for cpp_int (the built-in truncates toward zero).
Int floor_div(const Int& a, const Int& b) {
    Int q = a / b;
    if ((a % b != 0) && ((a < 0) != (b < 0))) --q;
    return q;
}

// Nearest-integer quotient, so remainders are at most |b| / 2. The floor
// remainder has the sign of b, so stepping q up always shrinks it.
Int nearest_div(const Int& a, const Int& b) {
    Int q = floor_div(a, b);
    const Int r = a - q * b;
    if (2 * abs(r) > abs(b)) ++q;
    return q;
}

}  // namespace

IntMatrix::IntMatrix(std::size_t rows, std::size_t cols)
    : rows_(rows), cols_(cols), data_(rows * cols) {}

IntMatrix::IntMatrix(std::initializer_list<std::initializer_list<long long>> rows) {
    rows_ = rows.size();
    cols_ = rows_ ? rows.begin()->size() : 0;
    data_.reserve(rows_ * cols_);
    for (const auto& r : rows) {
        if (r.size() != cols_) throw std::invalid_argument("ragged matrix literal");
        for (long long x : r) data_.emplace_back(x);
    }
}

IntMatrix IntMatrix::identity(std::size_t n) {
    IntMatrix I(n, n);
    for (std::size_t i = 0; i < n; ++i) I(i, i) = 1;
    return I;
}

IntMatrix IntMatrix::from_columns(const std::vector<IntVector>& cols) {
    if (cols.empty()) return {};
    IntMatrix M(cols.front().size(), cols.size());
    for (std::size_t c = 0; c < cols.size(); ++c) M.set_column(c, cols[c]);
    return M;
}

IntVector IntMatrix::column(std::size_t c) const {
    IntVector v(rows_);
    for (std::size_t r = 0; r < rows_; ++r) v[r] = (*this)(r, c);
    return v;
}

IntVector IntMatrix::row(std::size_t r) const {
    return IntVector(data_.begin() + r * cols_, data_.begin() + (r + 1) * cols_);
}

void IntMatrix::set_column(std::size_t c, const IntVector& v) {
    if (v.size() != rows_) throw std::invalid_argument("column length mismatch");
    for (std::size_t r = 0; r < rows_; ++r) (*this)(r, c) = v[r];
}

IntMatrix IntMatrix::operator*(const IntMatrix& o) const {
    if (cols_ != o.rows_) throw std::invalid_argument("dimension mismatch in product");
    IntMatrix P(rows_, o.cols_);
    for (std::size_t i = 0; i < rows_; ++i)
        for (std::size_t k = 0; k < cols_; ++k) {
            const Int& a = (*this)(i, k);
            if (a == 0) continue;
            for (std::size_t j = 0; j < o.cols_; ++j) {
                const Int& b = o(k, j);
                if (b != 0) P(i, j) += a * b;
            }
        }
    return P;
}

IntMatrix IntMatrix::operator+(const IntMatrix& o) const {
    if (rows_ != o.rows_ || cols_ != o.cols_) throw std::invalid_argument("dimension mismatch");
    IntMatrix S = *this;
    for (std::size_t i = 0; i < data_.size(); ++i) S.data_[i] += o.data_[i];
    return S;
}

IntMatrix IntMatrix::operator-(const IntMatrix& o) const {
    if (rows_ != o.rows_ || cols_ != o.cols_) throw std::invalid_argument("dimension mismatch");
    IntMatrix S = *this;
    for (std::size_t i = 0; i < data_.size(); ++i) S.data_[i] -= o.data_[i];
    return S;
}

IntMatrix IntMatrix::operator-() const {
    IntMatrix S = *this;
    for (auto& x : S.data_) x = -x;
    return S;
}

IntVector IntMatrix::operator*(const IntVector& v) const {
    if (v.size() != cols_) throw std::invalid_argument("dimension mismatch in matrix-vector product");
    IntVector w(rows_);
    for (std::size_t i = 0; i < rows_; ++i)
        for (std::size_t k = 0; k < cols_; ++k)
            if (v[k] != 0) w[i] += (*this)(i, k) * v[k];
    return w;
}

IntMatrix IntMatrix::transpose() const {
    IntMatrix T(cols_, rows_);
    for (std::size_t i = 0; i < rows_; ++i)
        for (std::size_t j = 0; j < cols_; ++j) T(j, i) = (*this)(i, j);
    return T;
}

bool IntMatrix::is_identity() const {
    if (rows_ != cols_) return false;
    for (std::size_t i = 0; i < rows_; ++i)
        for (std::size_t j = 0; j < cols_; ++j)
            if ((*this)(i, j) != (i == j ? 1 : 0)) return false;
    return true;
}

bool IntMatrix::is_zero() const {
    return std::all_of(data_.begin(), data_.end(), [](const Int& x) { return x == 0; });
}

IntMatrix IntMatrix::direct_sum(const IntMatrix& o) const {
    IntMatrix S(rows_ + o.rows_, cols_ + o.cols_);
    for (std::size_t i = 0; i < rows_; ++i)
        for (std::size_t j = 0; j < cols_; ++j) S(i, j) = (*this)(i, j);
    for (std::size_t i = 0; i < o.rows_; ++i)
        for (std::size_t j = 0; j < o.cols_; ++j) S(rows_ + i, cols_ + j) = o(i, j);
    return S;
}

std::string IntMatrix::to_string() const {
    std::ostringstream os;
    os << '[';
    for (std::size_t i = 0; i < rows_; ++i) {
        if (i) os << ", ";
        os << '[';
        for (std::size_t j = 0; j < cols_; ++j) {
            if (j) os << ", ";
            os << (*this)(i, j);
        }
        os << ']';
    }
    os << ']';
    return os.str();
}

IntVector make_vector(std::initializer_list<long long> xs) {
    IntVector v;
    for (long long x : xs) v.emplace_back(x);
    return v;
}

IntVector add(const IntVector& a, const IntVector& b) {
    if (a.size() != b.size()) throw std::invalid_argument("vector length mismatch");
    IntVector s(a.size());
    for (std::size_t i = 0; i < a.size(); ++i) s[i] = a[i] + b[i];
    return s;
}

IntVector scale(const Int& s, const IntVector& a) {
    IntVector r(a.size());
    for (std::size_t i = 0; i < a.size(); ++i) r[i] = s * a[i];
    return r;
}

IntVector negate(const IntVector& a) { return scale(Int(-1), a); }

bool is_zero(const IntVector& v) {
    return std::all_of(v.begin(), v.end(), [](const Int& x) { return x == 0; });
}

std::string to_string(const IntVector& v) {
    std::ostringstream os;
    os << '(';
    for (std::size_t i = 0; i < v.size(); ++i) {
        if (i) os << ", ";
        os << v[i];
    }
    os << ')';
    return os.str();
}

// ---------------------------------------------------------------------------
// Smith normal form

namespace {

struct SnfWork {
    IntMatrix A;
    IntMatrix U;
    IntMatrix V;
    bool track;
};

void swap_rows(SnfWork& w, std::size_t i, std::size_t j) {
    if (i == j) return;
    for (std::size_t c = 0; c < w.A.cols(); ++c) std::swap(w.A(i, c), w.A(j, c));
    if (w.track)
        for (std::size_t c = 0; c < w.U.cols(); ++c) std::swap(w.U(i, c), w.U(j, c));
}

void swap_cols(SnfWork& w, std::size_t i, std::size_t j) {
    if (i == j) return;
    for (std::size_t r = 0; r < w.A.rows(); ++r) std::swap(w.A(r, i), w.A(r, j));
    if (w.track)
        for (std::size_t r = 0; r < w.V.rows(); ++r) std::swap(w.V(r, i), w.V(r, j));
}

// row_i -= q * row_j
void row_axpy(SnfWork& w, std::size_t i, std::size_t j, const Int& q) {
    if (q == 0) return;
    for (std::size_t c = 0; c < w.A.cols(); ++c)
        if (w.A(j, c) != 0) w.A(i, c) -= q * w.A(j, c);
    if (w.track)
        for (std::size_t c = 0; c < w.U.cols(); ++c)
            if (w.U(j, c) != 0) w.U(i, c) -= q * w.U(j, c);
}

// col_i -= q * col_j
void col_axpy(SnfWork& w, std::size_t i, std::size_t j, const Int& q) {
    if (q == 0) return;
    for (std::size_t r = 0; r < w.A.rows(); ++r)
        if (w.A(r, j) != 0) w.A(r, i) -= q * w.A(r, j);
    if (w.track)
        for (std::size_t r = 0; r < w.V.rows(); ++r)
            if (w.V(r, j) != 0) w.V(r, i) -= q * w.V(r, j);
}

void negate_row(SnfWork& w, std::size_t i) {
    for (std::size_t c = 0; c < w.A.cols(); ++c) w.A(i, c) = -w.A(i, c);
    if (w.track)
        for (std::size_t c = 0; c < w.U.cols(); ++c) w.U(i, c) = -w.U(i, c);
}

void run_snf(SnfWork& w) {
    const std::size_t m = w.A.rows();
    const std::size_t n = w.A.cols();
    std::size_t t = 0;
    while (t < m && t < n) {
        // Pivot: smallest |a| in the trailing block, lowest (row, col) on ties.
        bool found = false;
        std::size_t pr = 0, pc = 0;
        Int best;
        for (std::size_t r = t; r < m; ++r)
            for (std::size_t c = t; c < n; ++c) {
                const Int& x = w.A(r, c);
                if (x == 0) continue;
                Int ax = abs(x);
                if (!found || ax < best) {
                    found = true;
                    best = ax;
                    pr = r;
                    pc = c;
                }
            }
        if (!found) break;
        swap_rows(w, t, pr);
        swap_cols(w, t, pc);

        for (;;) {
            bool dirty = false;
            // Clear column t below the pivot, then row t. Any pivot swap
            // restarts the pass; otherwise the column operations would also
            // act on rows with nonzero entries in column t and entries grow
            // geometrically.
            for (std::size_t r = t + 1; r < m && !dirty; ++r) {
                if (w.A(r, t) == 0) continue;
                row_axpy(w, r, t, nearest_div(w.A(r, t), w.A(t, t)));
                if (w.A(r, t) != 0) {
                    swap_rows(w, t, r);
                    dirty = true;
                }
            }
            for (std::size_t c = t + 1; c < n && !dirty; ++c) {
                if (w.A(t, c) == 0) continue;
                col_axpy(w, c, t, nearest_div(w.A(t, c), w.A(t, t)));
                if (w.A(t, c) != 0) {
                    swap_cols(w, t, c);
                    dirty = true;
                }
            }
            if (dirty) continue;
            // Divisibility: the pivot must divide every trailing entry.
            bool fixed = false;
            for (std::size_t r = t + 1; r < m && !fixed; ++r)
                for (std::size_t c = t + 1; c < n; ++c)
                    if (w.A(r, c) % w.A(t, t) != 0) {
                        row_axpy(w, t, r, Int(-1));  // row_t += row_r
                        fixed = true;
                        break;
                    }
            if (!fixed) break;
        }
        if (w.A(t, t) < 0) negate_row(w, t);
        ++t;
    }
}

}  // namespace

SmithDecomposition smith_normal_form(const IntMatrix& M) {
    SnfWork w{M, IntMatrix::identity(M.rows()), IntMatrix::identity(M.cols()), true};
    run_snf(w);
    SmithDecomposition out;
    out.U = std::move(w.U);
    out.V = std::move(w.V);
    out.D = std::move(w.A);
    for (std::size_t i = 0; i < std::min(M.rows(), M.cols()); ++i) {
        if (out.D(i, i) == 0) break;
        out.diagonal.push_back(out.D(i, i));
    }
    out.rank = out.diagonal.size();
    return out;
}

std::vector<Int> invariant_factors(const IntMatrix& M) {
    SnfWork w{M, {}, {}, false};
    run_snf(w);
    std::vector<Int> d;
    for (std::size_t i = 0; i < std::min(M.rows(), M.cols()); ++i) {
        if (w.A(i, i) == 0) break;
        d.push_back(w.A(i, i));
    }
    return d;
}

Int determinant(const IntMatrix& M) {
    if (M.rows() != M.cols()) throw std::invalid_argument("determinant of non-square matrix");
    const std::size_t n = M.rows();
    if (n == 0) return 1;
    IntMatrix A = M;
    Int sign = 1;
    Int prev = 1;
    for (std::size_t k = 0; k + 1 < n; ++k) {
        if (A(k, k) == 0) {
            std::size_t r = k + 1;
            while (r < n && A(r, k) == 0) ++r;
            if (r == n) return 0;
            for (std::size_t c = 0; c < n; ++c) std::swap(A(k, c), A(r, c));
            sign = -sign;
        }
        for (std::size_t i = k + 1; i < n; ++i)
            for (std::size_t j = k + 1; j < n; ++j)
                A(i, j) = (A(i, j) * A(k, k) - A(i, k) * A(k, j)) / prev;
        prev = A(k, k);
    }
    return sign * A(n - 1, n - 1);
}

IntMatrix unimodular_inverse(const IntMatrix& M) {
    if (M.rows() != M.cols()) throw std::domain_error("inverse of non-square matrix");
    // Gauss-Jordan over Q; entries of the inverse are cofactors, so they stay small.
    using Q = boost::multiprecision::cpp_rational;
    const std::size_t n = M.rows();
    std::vector<std::vector<Q>> A(n, std::vector<Q>(2 * n));
    for (std::size_t r = 0; r < n; ++r) {
        for (std::size_t c = 0; c < n; ++c) A[r][c] = Q(M(r, c));
        A[r][n + r] = 1;
    }
    for (std::size_t c = 0; c < n; ++c) {
        std::size_t p = c;
        while (p < n && A[p][c] == 0) ++p;
        if (p == n) throw std::domain_error("matrix is singular");
        std::swap(A[p], A[c]);
        const Q inv = 1 / A[c][c];
        for (auto& x : A[c]) x *= inv;
        for (std::size_t r = 0; r < n; ++r) {
            if (r == c || A[r][c] == 0) continue;
            const Q f = A[r][c];
            for (std::size_t k = c; k < 2 * n; ++k) A[r][k] -= f * A[c][k];
        }
    }
    IntMatrix out(n, n);
    for (std::size_t r = 0; r < n; ++r)
        for (std::size_t c = 0; c < n; ++c) {
            const Q& x = A[r][n + c];
            if (denominator(x) != 1) throw std::domain_error("matrix is not unimodular");
            out(r, c) = numerator(x);
        }
    return out;
}

namespace {

using Rat = boost::multiprecision::cpp_rational;

Rat rdot(const std::vector<Rat>& x, const std::vector<Rat>& y) {
    Rat s = 0;
    for (std::size_t i = 0; i < x.size(); ++i) s += x[i] * y[i];
    return s;
}

std::vector<Rat> to_rat(const IntVector& v) { return {v.begin(), v.end()}; }

// Nearest integer, halves rounded up.
Int round_rat(const Rat& r) {
    const Rat h = r + Rat(1, 2);
    Int q = boost::multiprecision::numerator(h) / boost::multiprecision::denominator(h);
    if (h < 0 && q * boost::multiprecision::denominator(h) != boost::multiprecision::numerator(h)) --q;
    return q;
}

// Gram-Schmidt vectors of the rows.
std::vector<std::vector<Rat>> gram_schmidt(const std::vector<IntVector>& b) {
    std::vector<std::vector<Rat>> bs;
    for (const auto& v : b) {
        std::vector<Rat> w = to_rat(v);
        for (const auto& u : bs) {
            const Rat mu = rdot(to_rat(v), u) / rdot(u, u);
            for (std::size_t i = 0; i < w.size(); ++i) w[i] -= mu * u[i];
        }
        bs.push_back(std::move(w));
    }
    return bs;
}

}  // namespace

std::vector<IntVector> lll_reduce(std::vector<IntVector> b) {
    const std::size_t n = b.size();
    if (n == 0) return b;
    auto bs = gram_schmidt(b);
    for (const auto& w : bs)
        if (rdot(w, w) == 0) throw std::invalid_argument("lll_reduce: rows are linearly dependent");
    auto mu = [&](std::size_t i, std::size_t j) { return rdot(to_rat(b[i]), bs[j]) / rdot(bs[j], bs[j]); };
    std::size_t k = 1;
    while (k < n) {
        for (std::size_t j = k; j-- > 0;) {
            const Int q = round_rat(mu(k, j));
            if (q != 0) b[k] = add(b[k], scale(-q, b[j]));
        }
        const Rat m = mu(k, k - 1);
        if (rdot(bs[k], bs[k]) >= (Rat(3, 4) - m * m) * rdot(bs[k - 1], bs[k - 1])) {
            ++k;
        } else {
            std::swap(b[k], b[k - 1]);
            bs = gram_schmidt(b);
            k = std::max<std::size_t>(k - 1, 1);
        }
    }
    return b;
}

IntVector reduce_against(const IntVector& y, const std::vector<IntVector>& basis) {
    const auto bs = gram_schmidt(basis);
    IntVector out = y;
    for (std::size_t j = basis.size(); j-- > 0;) {
        const Int q = round_rat(rdot(to_rat(out), bs[j]) / rdot(bs[j], bs[j]));
        if (q != 0) out = add(out, scale(-q, basis[j]));
    }
    return out;
}

IntVector primitive_normalize(const IntVector& v) {
    Int g = 0;
    for (const Int& x : v) g = gcd(g, abs(x));
    if (g == 0) throw std::invalid_argument("primitive_normalize: zero vector");
    IntVector w(v.size());
    for (std::size_t i = 0; i < v.size(); ++i) w[i] = v[i] / g;
    for (const Int& x : w) {
        if (x == 0) continue;
        if (x < 0)
            for (auto& y : w) y = -y;
        break;
    }
    return w;
}

// ---------------------------------------------------------------------------
// F2

F2Matrix::F2Matrix(std::size_t rows, std::size_t cols)
    : rows_(rows), cols_(cols), stride_(words_for(cols)), words_(rows * words_for(cols), 0) {}

bool F2Matrix::get(std::size_t r, std::size_t c) const {
    return (words_[r * stride_ + c / 64] >> (c % 64)) & 1u;
}

void F2Matrix::set(std::size_t r, std::size_t c, bool v) {
    std::uint64_t& w = words_[r * stride_ + c / 64];
    const std::uint64_t bit = std::uint64_t{1} << (c % 64);
    w = v ? (w | bit) : (w & ~bit);
}

void F2Matrix::flip(std::size_t r, std::size_t c) {
    words_[r * stride_ + c / 64] ^= std::uint64_t{1} << (c % 64);
}

F2Matrix F2Matrix::reduce(const IntMatrix& M) {
    F2Matrix R(M.rows(), M.cols());
    for (std::size_t i = 0; i < M.rows(); ++i)
        for (std::size_t j = 0; j < M.cols(); ++j)
            if (boost::multiprecision::bit_test(abs(M(i, j)), 0)) R.set(i, j, true);
    return R;
}

std::size_t f2_rank(F2Matrix M) {
    std::size_t rank = 0;
    const std::size_t stride = M.stride();
    for (std::size_t c = 0; c < M.cols() && rank < M.rows(); ++c) {
        std::size_t p = rank;
        while (p < M.rows() && !M.get(p, c)) ++p;
        if (p == M.rows()) continue;
        if (p != rank) {
            std::uint64_t* a = M.row_words(p);
            std::uint64_t* b = M.row_words(rank);
            for (std::size_t k = 0; k < stride; ++k) std::swap(a[k], b[k]);
        }
        const std::uint64_t* piv = M.row_words(rank);
        for (std::size_t r = rank + 1; r < M.rows(); ++r) {
            if (!M.get(r, c)) continue;
            std::uint64_t* row = M.row_words(r);
            for (std::size_t k = c / 64; k < stride; ++k) row[k] ^= piv[k];
        }
        ++rank;
    }
    return rank;
}

// ---------------------------------------------------------------------------
// JSON

namespace {

nlohmann::json int_to_json(const Int& x) {
    if (x >= std::numeric_limits<std::int64_t>::min() && x <= std::numeric_limits<std::int64_t>::max())
        return static_cast<std::int64_t>(x);
    return x.str();
}

Int int_from_json(const nlohmann::json& j) {
    if (j.is_number_integer()) return Int(j.get<std::int64_t>());
    if (j.is_string()) return Int(j.get<std::string>());
    throw std::invalid_argument("matrix entry is neither an integer nor a decimal string");
}

}  // namespace

nlohmann::json to_json(const IntMatrix& M) {
    nlohmann::json data = nlohmann::json::array();
    for (std::size_t i = 0; i < M.rows(); ++i) {
        nlohmann::json row = nlohmann::json::array();
        for (std::size_t j = 0; j < M.cols(); ++j) row.push_back(int_to_json(M(i, j)));
        data.push_back(row);
    }
    return {{"rows", M.rows()}, {"cols", M.cols()}, {"data", data}};
}

IntMatrix int_matrix_from_json(const nlohmann::json& j) {
    const auto rows = j.at("rows").get<std::size_t>();
    const auto cols = j.at("cols").get<std::size_t>();
    const auto& data = j.at("data");
    if (data.size() != rows) throw std::invalid_argument("row count does not match header");
    IntMatrix M(rows, cols);
    for (std::size_t i = 0; i < rows; ++i) {
        if (data[i].size() != cols) throw std::invalid_argument("column count does not match header");
        for (std::size_t k = 0; k < cols; ++k) M(i, k) = int_from_json(data[i][k]);
    }
    return M;
}

nlohmann::json to_json(const IntVector& v) {
    nlohmann::json a = nlohmann::json::array();
    for (const Int& x : v) a.push_back(int_to_json(x));
    return a;
}

IntVector int_vector_from_json(const nlohmann::json& j) {
    IntVector v;
    for (const auto& x : j) v.push_back(int_from_json(x));
    return v;
}

}  // namespace ht
