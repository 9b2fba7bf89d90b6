// instanton-verify: exact computer algebra for framed autodual instanton data.
// Distributed under the MIT license; see LICENSE in the repository root.

#pragma once

#include <bit>
#include <cstdint>
#include <functional>
#include <optional>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "instanton/poly.hpp"
#include "instanton/rational.hpp"

namespace instanton {

class SingularMatrixError : public std::runtime_error {
public:
    explicit SingularMatrixError(const std::string& what) : std::runtime_error(what) {}
};

/// Dense row-major matrix over an exact entry type (GaussRational or Poly).
/// The entry type must provide +, -, *, unary -, == and is_zero().
template <typename T>
class Matrix {
public:
    Matrix() : rows_(0), cols_(0) {}
    Matrix(std::size_t rows, std::size_t cols, const T& fill)
        : rows_(rows), cols_(cols), data_(rows * cols, fill) {}

    static Matrix from_rows(std::vector<std::vector<T>> rows) {
        if (rows.empty()) throw std::invalid_argument("matrix needs at least one row");
        const std::size_t cols = rows[0].size();
        if (cols == 0) throw std::invalid_argument("matrix needs at least one column");
        Matrix m;
        m.rows_ = rows.size();
        m.cols_ = cols;
        m.data_.reserve(m.rows_ * cols);
        for (auto& r : rows) {
            if (r.size() != cols) throw std::invalid_argument("ragged rows in matrix literal");
            for (auto& e : r) m.data_.push_back(std::move(e));
        }
        return m;
    }

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }
    bool empty() const { return data_.empty(); }

    const T& at(std::size_t i, std::size_t j) const { return data_[i * cols_ + j]; }
    T& at(std::size_t i, std::size_t j) { return data_[i * cols_ + j]; }
    const T& operator()(std::size_t i, std::size_t j) const { return at(i, j); }
    T& operator()(std::size_t i, std::size_t j) { return at(i, j); }

    Matrix transpose() const {
        Matrix out;
        out.rows_ = cols_;
        out.cols_ = rows_;
        out.data_.reserve(data_.size());
        for (std::size_t j = 0; j < cols_; ++j)
            for (std::size_t i = 0; i < rows_; ++i) out.data_.push_back(at(i, j));
        return out;
    }

    Matrix operator+(const Matrix& o) const {
        require_same_shape(o);
        Matrix out = *this;
        for (std::size_t k = 0; k < data_.size(); ++k) out.data_[k] = data_[k] + o.data_[k];
        return out;
    }

    Matrix operator-(const Matrix& o) const {
        require_same_shape(o);
        Matrix out = *this;
        for (std::size_t k = 0; k < data_.size(); ++k) out.data_[k] = data_[k] - o.data_[k];
        return out;
    }

    Matrix operator-() const {
        Matrix out = *this;
        for (auto& e : out.data_) e = -e;
        return out;
    }

    Matrix operator*(const Matrix& o) const {
        if (cols_ != o.rows_) throw std::invalid_argument("matrix product dimension mismatch");
        if (cols_ == 0) throw std::invalid_argument("matrix product with empty inner dimension");
        Matrix out;
        out.rows_ = rows_;
        out.cols_ = o.cols_;
        out.data_.reserve(rows_ * o.cols_);
        for (std::size_t i = 0; i < rows_; ++i) {
            for (std::size_t j = 0; j < o.cols_; ++j) {
                T acc = at(i, 0) * o.at(0, j);
                for (std::size_t k = 1; k < cols_; ++k) acc = acc + at(i, k) * o.at(k, j);
                out.data_.push_back(std::move(acc));
            }
        }
        return out;
    }

    Matrix scaled(const T& s) const {
        Matrix out = *this;
        for (auto& e : out.data_) e = e * s;
        return out;
    }

    bool operator==(const Matrix& o) const {
        return rows_ == o.rows_ && cols_ == o.cols_ && data_ == o.data_;
    }
    bool operator!=(const Matrix& o) const { return !(*this == o); }

    bool is_zero() const {
        for (const auto& e : data_)
            if (!e.is_zero()) return false;
        return true;
    }

    Matrix submatrix(const std::vector<std::size_t>& row_idx,
                     const std::vector<std::size_t>& col_idx) const {
        Matrix out;
        out.rows_ = row_idx.size();
        out.cols_ = col_idx.size();
        out.data_.reserve(out.rows_ * out.cols_);
        for (std::size_t i : row_idx)
            for (std::size_t j : col_idx) out.data_.push_back(at(i, j));
        return out;
    }

    template <typename F>
    auto map(F f) const -> Matrix<decltype(f(std::declval<const T&>()))> {
        using U = decltype(f(std::declval<const T&>()));
        Matrix<U> out;
        std::vector<std::vector<U>> rows;
        rows.reserve(rows_);
        for (std::size_t i = 0; i < rows_; ++i) {
            std::vector<U> row;
            row.reserve(cols_);
            for (std::size_t j = 0; j < cols_; ++j) row.push_back(f(at(i, j)));
            rows.push_back(std::move(row));
        }
        return Matrix<U>::from_rows(std::move(rows));
    }

private:
    void require_same_shape(const Matrix& o) const {
        if (rows_ != o.rows_ || cols_ != o.cols_)
            throw std::invalid_argument("matrix shape mismatch");
    }
    std::size_t rows_, cols_;
    std::vector<T> data_;
};

using PolyMatrix = Matrix<Poly>;
using ScalarMatrix = Matrix<GaussRational>;

template <typename T>
Matrix<T> commutator(const Matrix<T>& m, const Matrix<T>& n) {
    return m * n - n * m;
}

template <typename T>
Matrix<T> hstack(const Matrix<T>& a, const Matrix<T>& b) {
    if (a.rows() != b.rows()) throw std::invalid_argument("hstack row mismatch");
    std::vector<std::vector<T>> rows;
    rows.reserve(a.rows());
    for (std::size_t i = 0; i < a.rows(); ++i) {
        std::vector<T> row;
        row.reserve(a.cols() + b.cols());
        for (std::size_t j = 0; j < a.cols(); ++j) row.push_back(a.at(i, j));
        for (std::size_t j = 0; j < b.cols(); ++j) row.push_back(b.at(i, j));
        rows.push_back(std::move(row));
    }
    return Matrix<T>::from_rows(std::move(rows));
}

template <typename T>
Matrix<T> vstack(const Matrix<T>& a, const Matrix<T>& b) {
    if (a.cols() != b.cols()) throw std::invalid_argument("vstack column mismatch");
    std::vector<std::vector<T>> rows;
    rows.reserve(a.rows() + b.rows());
    for (std::size_t i = 0; i < a.rows(); ++i) {
        std::vector<T> row;
        for (std::size_t j = 0; j < a.cols(); ++j) row.push_back(a.at(i, j));
        rows.push_back(std::move(row));
    }
    for (std::size_t i = 0; i < b.rows(); ++i) {
        std::vector<T> row;
        for (std::size_t j = 0; j < b.cols(); ++j) row.push_back(b.at(i, j));
        rows.push_back(std::move(row));
    }
    return Matrix<T>::from_rows(std::move(rows));
}

// ---------------------------------------------------------------------------
// Determinants and minors
// ---------------------------------------------------------------------------

/// Determinant by column-wise Laplace expansion with memoization over row
/// subsets (exact cofactor expansion; O(2^n * n) entry products).
template <typename T>
T det_laplace(const Matrix<T>& m) {
    if (m.rows() != m.cols() || m.rows() == 0)
        throw std::invalid_argument("determinant of a non-square or empty matrix");
    const std::size_t n = m.rows();
    if (n > 20) throw std::invalid_argument("det_laplace: dimension too large");
    const T zero = m.at(0, 0) - m.at(0, 0);
    // dp[mask] after processing column j: determinant of the submatrix built
    // from columns 0..j and the row set encoded by mask (popcount = j + 1).
    std::vector<T> dp;
    std::vector<bool> present;
    {
        dp.assign(std::size_t(1) << n, zero);
        present.assign(std::size_t(1) << n, false);
        for (std::size_t r = 0; r < n; ++r) {
            dp[std::size_t(1) << r] = m.at(r, 0);
            present[std::size_t(1) << r] = true;
        }
    }
    for (std::size_t j = 1; j < n; ++j) {
        std::vector<T> next(dp.size(), zero);
        std::vector<bool> nextp(dp.size(), false);
        for (std::size_t mask = 0; mask < dp.size(); ++mask) {
            if (!present[mask] || dp[mask].is_zero()) continue;
            std::size_t below = 0;  // rows in mask below the inserted row
            for (std::size_t r = 0; r < n; ++r) {
                const std::size_t bit = std::size_t(1) << r;
                if (mask & bit) {
                    ++below;
                    continue;
                }
                if (m.at(r, j).is_zero()) continue;
                // Sign: inserting row r as the last column's row crosses the
                // rows of mask that sit below r.
                const std::size_t crossings =
                    static_cast<std::size_t>(std::popcount(static_cast<unsigned long long>(mask))) -
                    below;
                T contrib = dp[mask] * m.at(r, j);
                if (crossings & 1) contrib = -contrib;
                const std::size_t key = mask | bit;
                if (nextp[key]) {
                    next[key] = next[key] + contrib;
                } else {
                    next[key] = std::move(contrib);
                    nextp[key] = true;
                }
            }
        }
        dp = std::move(next);
        present = std::move(nextp);
    }
    const std::size_t full = (std::size_t(1) << n) - 1;
    return present[full] ? dp[full] : zero;
}

namespace detail {

inline bool first_combination(std::vector<std::size_t>& idx, std::size_t k) {
    idx.resize(k);
    for (std::size_t t = 0; t < k; ++t) idx[t] = t;
    return true;
}

inline bool next_combination(std::vector<std::size_t>& idx, std::size_t n) {
    const std::size_t k = idx.size();
    for (std::size_t t = k; t-- > 0;) {
        if (idx[t] + (k - t) < n) {
            ++idx[t];
            for (std::size_t u = t + 1; u < k; ++u) idx[u] = idx[u - 1] + 1;
            return true;
        }
    }
    return false;
}

}  // namespace detail

/// Streams every k×k minor (row subset × column subset, both in lexicographic
/// order) into fn; stop early by returning false from fn.
template <typename T, typename Fn>
void minors_foreach(const Matrix<T>& m, std::size_t k, Fn fn) {
    if (k == 0 || k > m.rows() || k > m.cols())
        throw std::invalid_argument("minor size out of range");
    std::vector<std::size_t> ri, ci;
    detail::first_combination(ri, k);
    do {
        detail::first_combination(ci, k);
        do {
            T d = det_laplace(m.submatrix(ri, ci));
            if (!fn(std::move(d), ri, ci)) return;
        } while (detail::next_combination(ci, m.cols()));
    } while (detail::next_combination(ri, m.rows()));
}

template <typename T>
std::vector<T> minors(const Matrix<T>& m, std::size_t k) {
    std::vector<T> out;
    minors_foreach(m, k, [&](T d, const std::vector<std::size_t>&, const std::vector<std::size_t>&) {
        out.push_back(std::move(d));
        return true;
    });
    return out;
}

/// Fraction-free (Bareiss) determinant; divide(a, b) must return the exact
/// quotient a / b, which the recurrence guarantees exists.
template <typename T, typename DivFn>
T det_bareiss_impl(Matrix<T> m, DivFn divide) {
    if (m.rows() != m.cols() || m.rows() == 0)
        throw std::invalid_argument("determinant of a non-square or empty matrix");
    const std::size_t n = m.rows();
    const T zero = m.at(0, 0) - m.at(0, 0);
    bool negate = false;
    std::optional<T> prev;
    for (std::size_t k = 0; k + 1 < n; ++k) {
        std::size_t pivot = k;
        while (pivot < n && m.at(pivot, k).is_zero()) ++pivot;
        if (pivot == n) return zero;
        if (pivot != k) {
            for (std::size_t j = 0; j < n; ++j) std::swap(m.at(k, j), m.at(pivot, j));
            negate = !negate;
        }
        for (std::size_t i = k + 1; i < n; ++i) {
            for (std::size_t j = k + 1; j < n; ++j) {
                T num = m.at(k, k) * m.at(i, j) - m.at(i, k) * m.at(k, j);
                m.at(i, j) = prev ? divide(std::move(num), *prev) : std::move(num);
            }
            m.at(i, k) = zero;
        }
        prev = m.at(k, k);
    }
    T det = m.at(n - 1, n - 1);
    return negate ? -det : det;
}

Poly det_bareiss(const PolyMatrix& m);
GaussRational det_bareiss(const ScalarMatrix& m);

// ---------------------------------------------------------------------------
// Exact linear algebra over Q(i)
// ---------------------------------------------------------------------------

/// Subspace of Q(i)^n kept as a reduced row-echelon basis, so membership and
/// extension are single reductions.
class Subspace {
public:
    explicit Subspace(std::size_t ambient) : ambient_(ambient) {}
    static Subspace span(std::size_t ambient, const std::vector<std::vector<GaussRational>>& vecs);
    static Subspace full(std::size_t ambient);

    std::size_t ambient() const { return ambient_; }
    std::size_t dimension() const { return rows_.size(); }
    const std::vector<std::vector<GaussRational>>& basis() const { return rows_; }

    bool contains(const std::vector<GaussRational>& v) const;
    bool contains(const Subspace& other) const;
    /// Adds v to the span; returns true if the dimension grew.
    bool add(std::vector<GaussRational> v);
    bool operator==(const Subspace& o) const;

    /// Basis vectors as the columns of an ambient × dim matrix (dim ≥ 1).
    ScalarMatrix basis_columns() const;
    /// Basis vectors as the rows of a dim × ambient matrix (dim ≥ 1).
    ScalarMatrix basis_rows() const;

private:
    std::size_t ambient_;
    std::vector<std::vector<GaussRational>> rows_;  // reduced echelon, pivot-sorted
    std::vector<std::size_t> pivots_;
};

std::size_t rank(const ScalarMatrix& m);
GaussRational det_gauss(const ScalarMatrix& m);
ScalarMatrix identity_matrix(std::size_t n);
/// Standard symplectic form [[0, Id], [-Id, 0]] of even size c.
ScalarMatrix omega_matrix(std::size_t c);
ScalarMatrix inverse(const ScalarMatrix& m);  // throws SingularMatrixError

/// Right null space {x : Mx = 0}.
Subspace null_space(const ScalarMatrix& m);

struct LinearSolution {
    std::vector<GaussRational> particular;
    Subspace homogeneous;
};
/// One solution of Mx = b plus the homogeneous space, or nullopt if
/// inconsistent.
std::optional<LinearSolution> solve_linear(const ScalarMatrix& m,
                                           const std::vector<GaussRational>& b);

/// Smallest subspace containing seed with M(S) ⊆ S for every matrix.
Subspace invariant_closure(const std::vector<ScalarMatrix>& mats, const Subspace& seed);
/// Largest subspace inside constraint with M(S) ⊆ S for every matrix.
Subspace invariant_core(const std::vector<ScalarMatrix>& mats, const Subspace& constraint);

/// Change of basis g with (g^T)^{-1} G g^{-1} = Omega_c for invertible
/// antisymmetric G; throws on odd dimension or singular G.  The postcondition
/// is re-verified by explicit multiplication before returning.
ScalarMatrix skew_to_standard(const ScalarMatrix& g_form);

/// Change of basis h with (h^T)^{-1} H h^{-1} diagonal for invertible
/// symmetric H (congruence diagonalization; entries unique only up to
/// squares).
ScalarMatrix symmetric_to_diagonal(const ScalarMatrix& h_form);

// ---------------------------------------------------------------------------
// Evaluation
// ---------------------------------------------------------------------------

/// Entry-wise evaluation; the assignment is indexed by ring variable and must
/// cover every variable that occurs in the matrix.
ScalarMatrix evaluate_matrix(const PolyMatrix& m,
                             const std::vector<std::optional<GaussRational>>& assignment);

/// Scales the first nonzero coordinate to 1; throws if all are zero.
std::vector<GaussRational> normalize_projective(std::vector<GaussRational> point);

/// Embeds a scalar matrix as a matrix of constant polynomials.
PolyMatrix to_poly_matrix(const ScalarMatrix& m, const RingPtr& ring);

}  // namespace instanton
