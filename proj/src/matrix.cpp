// instanton-verify: exact computer algebra for framed autodual instanton data.
// Distributed under the MIT license; see LICENSE in the repository root.

#include "instanton/matrix.hpp"

#include <algorithm>

namespace instanton {

Poly det_bareiss(const PolyMatrix& m) {
    return det_bareiss_impl(m, [](Poly num, const Poly& piv) { return exact_div(num, piv); });
}

GaussRational det_bareiss(const ScalarMatrix& m) {
    return det_bareiss_impl(m, [](GaussRational num, const GaussRational& piv) {
        return num / piv;
    });
}

// ---------------------------------------------------------------------------
// Row echelon machinery
// ---------------------------------------------------------------------------

namespace {

using Row = std::vector<GaussRational>;

/// Reduces v against echelon rows (rows[k] has pivot 1 at pivots[k]); returns
/// the residue.
Row reduce_against(const std::vector<Row>& rows, const std::vector<std::size_t>& pivots, Row v) {
    for (std::size_t k = 0; k < rows.size(); ++k) {
        const GaussRational& c = v[pivots[k]];
        if (c.is_zero()) continue;
        const GaussRational f = c;  // pivot entries are 1
        for (std::size_t j = 0; j < v.size(); ++j) v[j] = v[j] - f * rows[k][j];
    }
    return v;
}

std::optional<std::size_t> first_nonzero(const Row& v) {
    for (std::size_t j = 0; j < v.size(); ++j)
        if (!v[j].is_zero()) return j;
    return std::nullopt;
}

/// In-place reduced row echelon form; returns pivot columns.
std::vector<std::size_t> rref(std::vector<Row>& rows) {
    std::vector<Row> echelon;
    std::vector<std::size_t> pivots;
    for (auto& r : rows) {
        Row residue = reduce_against(echelon, pivots, std::move(r));
        auto p = first_nonzero(residue);
        if (!p) continue;
        const GaussRational inv = residue[*p].inverse();
        for (auto& e : residue) e = e * inv;
        // Back-substitute into earlier rows to keep the form reduced.
        for (std::size_t k = 0; k < echelon.size(); ++k) {
            const GaussRational f = echelon[k][*p];
            if (f.is_zero()) continue;
            for (std::size_t j = 0; j < residue.size(); ++j)
                echelon[k][j] = echelon[k][j] - f * residue[j];
        }
        // Insert keeping pivots ascending.
        std::size_t pos = 0;
        while (pos < pivots.size() && pivots[pos] < *p) ++pos;
        echelon.insert(echelon.begin() + pos, std::move(residue));
        pivots.insert(pivots.begin() + pos, *p);
    }
    rows = std::move(echelon);
    return pivots;
}

std::vector<Row> matrix_rows(const ScalarMatrix& m) {
    std::vector<Row> rows;
    rows.reserve(m.rows());
    for (std::size_t i = 0; i < m.rows(); ++i) {
        Row r;
        r.reserve(m.cols());
        for (std::size_t j = 0; j < m.cols(); ++j) r.push_back(m.at(i, j));
        rows.push_back(std::move(r));
    }
    return rows;
}

ScalarMatrix rows_to_matrix(const std::vector<Row>& rows) {
    std::vector<std::vector<GaussRational>> copy(rows.begin(), rows.end());
    return ScalarMatrix::from_rows(std::move(copy));
}

}  // namespace

// ---------------------------------------------------------------------------
// Subspace
// ---------------------------------------------------------------------------

Subspace Subspace::span(std::size_t ambient, const std::vector<Row>& vecs) {
    Subspace s(ambient);
    for (const auto& v : vecs) {
        if (v.size() != ambient) throw std::invalid_argument("subspace vector length mismatch");
        s.add(v);
    }
    return s;
}

Subspace Subspace::full(std::size_t ambient) {
    Subspace s(ambient);
    for (std::size_t k = 0; k < ambient; ++k) {
        Row e(ambient, GaussRational(0));
        e[k] = GaussRational(1);
        s.add(std::move(e));
    }
    return s;
}

bool Subspace::contains(const Row& v) const {
    if (v.size() != ambient_) throw std::invalid_argument("subspace vector length mismatch");
    Row residue = reduce_against(rows_, pivots_, v);
    return !first_nonzero(residue).has_value();
}

bool Subspace::contains(const Subspace& other) const {
    if (other.ambient_ != ambient_) throw std::invalid_argument("ambient dimension mismatch");
    for (const auto& r : other.rows_)
        if (!contains(r)) return false;
    return true;
}

bool Subspace::add(Row v) {
    if (v.size() != ambient_) throw std::invalid_argument("subspace vector length mismatch");
    Row residue = reduce_against(rows_, pivots_, std::move(v));
    auto p = first_nonzero(residue);
    if (!p) return false;
    const GaussRational inv = residue[*p].inverse();
    for (auto& e : residue) e = e * inv;
    for (std::size_t k = 0; k < rows_.size(); ++k) {
        const GaussRational f = rows_[k][*p];
        if (f.is_zero()) continue;
        for (std::size_t j = 0; j < residue.size(); ++j)
            rows_[k][j] = rows_[k][j] - f * residue[j];
    }
    std::size_t pos = 0;
    while (pos < pivots_.size() && pivots_[pos] < *p) ++pos;
    rows_.insert(rows_.begin() + pos, std::move(residue));
    pivots_.insert(pivots_.begin() + pos, *p);
    return true;
}

bool Subspace::operator==(const Subspace& o) const {
    return ambient_ == o.ambient_ && rows_ == o.rows_;  // reduced echelon is canonical
}

ScalarMatrix Subspace::basis_columns() const {
    if (rows_.empty()) throw std::logic_error("zero subspace has no basis matrix");
    return rows_to_matrix(rows_).transpose();
}

ScalarMatrix Subspace::basis_rows() const {
    if (rows_.empty()) throw std::logic_error("zero subspace has no basis matrix");
    return rows_to_matrix(rows_);
}

// ---------------------------------------------------------------------------
// Rank / determinant / inverse / null space / solve
// ---------------------------------------------------------------------------

std::size_t rank(const ScalarMatrix& m) {
    auto rows = matrix_rows(m);
    return rref(rows).size();
}

GaussRational det_gauss(const ScalarMatrix& m) {
    if (m.rows() != m.cols() || m.rows() == 0)
        throw std::invalid_argument("determinant of a non-square or empty matrix");
    auto rows = matrix_rows(m);
    const std::size_t n = rows.size();
    GaussRational det(1);
    for (std::size_t k = 0; k < n; ++k) {
        std::size_t pivot = k;
        while (pivot < n && rows[pivot][k].is_zero()) ++pivot;
        if (pivot == n) return GaussRational(0);
        if (pivot != k) {
            std::swap(rows[pivot], rows[k]);
            det = -det;
        }
        det = det * rows[k][k];
        const GaussRational inv = rows[k][k].inverse();
        for (std::size_t i = k + 1; i < n; ++i) {
            const GaussRational f = rows[i][k] * inv;
            if (f.is_zero()) continue;
            for (std::size_t j = k; j < n; ++j) rows[i][j] = rows[i][j] - f * rows[k][j];
        }
    }
    return det;
}

ScalarMatrix identity_matrix(std::size_t n) {
    ScalarMatrix m(n, n, GaussRational(0));
    for (std::size_t k = 0; k < n; ++k) m.at(k, k) = GaussRational(1);
    return m;
}

ScalarMatrix omega_matrix(std::size_t c) {
    if (c == 0 || c % 2 != 0)
        throw std::invalid_argument("standard symplectic form needs positive even dimension");
    const std::size_t half = c / 2;
    ScalarMatrix m(c, c, GaussRational(0));
    for (std::size_t k = 0; k < half; ++k) {
        m.at(k, half + k) = GaussRational(1);
        m.at(half + k, k) = GaussRational(-1);
    }
    return m;
}

ScalarMatrix inverse(const ScalarMatrix& m) {
    if (m.rows() != m.cols() || m.rows() == 0)
        throw std::invalid_argument("inverse of a non-square or empty matrix");
    const std::size_t n = m.rows();
    // Augment with the identity and row-reduce.
    auto rows = matrix_rows(hstack(m, identity_matrix(n)));
    auto pivots = rref(rows);
    if (pivots.size() != n || pivots[n - 1] != n - 1)
        throw SingularMatrixError("matrix is singular");
    std::vector<Row> right;
    right.reserve(n);
    for (const auto& r : rows) right.emplace_back(r.begin() + n, r.end());
    return rows_to_matrix(right);
}

Subspace null_space(const ScalarMatrix& m) {
    auto rows = matrix_rows(m);
    auto pivots = rref(rows);
    Subspace ker(m.cols());
    std::vector<bool> is_pivot(m.cols(), false);
    for (auto p : pivots) is_pivot[p] = true;
    for (std::size_t free = 0; free < m.cols(); ++free) {
        if (is_pivot[free]) continue;
        Row v(m.cols(), GaussRational(0));
        v[free] = GaussRational(1);
        for (std::size_t k = 0; k < pivots.size(); ++k) v[pivots[k]] = -rows[k][free];
        ker.add(std::move(v));
    }
    return ker;
}

std::optional<LinearSolution> solve_linear(const ScalarMatrix& m,
                                           const std::vector<GaussRational>& b) {
    if (b.size() != m.rows()) throw std::invalid_argument("right-hand side length mismatch");
    // Reduce the augmented system [M | b].
    auto rows = matrix_rows(m);
    for (std::size_t i = 0; i < rows.size(); ++i) rows[i].push_back(b[i]);
    auto pivots = rref(rows);
    if (!pivots.empty() && pivots.back() == m.cols())
        return std::nullopt;  // pivot in the augmented column: inconsistent
    Row x(m.cols(), GaussRational(0));
    for (std::size_t k = 0; k < pivots.size(); ++k) x[pivots[k]] = rows[k][m.cols()];
    return LinearSolution{std::move(x), null_space(m)};
}

// ---------------------------------------------------------------------------
// Invariant subspaces
// ---------------------------------------------------------------------------

namespace {

Row apply_matrix(const ScalarMatrix& m, const Row& v) {
    Row out;
    out.reserve(m.rows());
    for (std::size_t i = 0; i < m.rows(); ++i) {
        GaussRational acc(0);
        for (std::size_t j = 0; j < m.cols(); ++j) acc = acc + m.at(i, j) * v[j];
        out.push_back(std::move(acc));
    }
    return out;
}

}  // namespace

Subspace invariant_closure(const std::vector<ScalarMatrix>& mats, const Subspace& seed) {
    for (const auto& m : mats)
        if (m.rows() != seed.ambient() || m.cols() != seed.ambient())
            throw std::invalid_argument("invariant_closure: matrix/ambient mismatch");
    Subspace s = seed;
    std::vector<Row> queue = s.basis();
    while (!queue.empty()) {
        Row v = std::move(queue.back());
        queue.pop_back();
        for (const auto& m : mats) {
            Row w = apply_matrix(m, v);
            if (s.add(w)) queue.push_back(std::move(w));
        }
    }
    return s;
}

Subspace invariant_core(const std::vector<ScalarMatrix>& mats, const Subspace& constraint) {
    for (const auto& m : mats)
        if (m.rows() != constraint.ambient() || m.cols() != constraint.ambient())
            throw std::invalid_argument("invariant_core: matrix/ambient mismatch");
    Subspace current = constraint;
    for (;;) {
        if (current.dimension() == 0) return current;
        // Functionals vanishing on the current space: rows of L with L·v = 0
        // for v in current; they are the null space of basis_rows().
        Subspace annihilator = null_space(current.basis_rows());
        if (annihilator.dimension() == 0) {
            // current is the full space; it is invariant iff every matrix maps
            // into it, which is automatic.
            return current;
        }
        ScalarMatrix l_rows = annihilator.basis_rows();
        ScalarMatrix stacked = l_rows;
        for (const auto& m : mats) stacked = vstack(stacked, l_rows * m);
        Subspace next = null_space(stacked);
        if (next.dimension() == current.dimension()) return current;
        current = next;
    }
}

// ---------------------------------------------------------------------------
// Congruence normal forms
// ---------------------------------------------------------------------------

ScalarMatrix skew_to_standard(const ScalarMatrix& g_form) {
    const std::size_t c = g_form.rows();
    if (g_form.cols() != c || c == 0)
        throw std::invalid_argument("skew_to_standard: square matrix required");
    if (!(g_form + g_form.transpose()).is_zero())
        throw std::invalid_argument("skew_to_standard: matrix is not antisymmetric");
    if (c % 2 != 0)
        throw SingularMatrixError(
            "skew_to_standard: odd dimension (an invertible antisymmetric form forces even "
            "dimension)");

    auto pairing = [&](const Row& u, const Row& w) {
        GaussRational acc(0);
        for (std::size_t i = 0; i < c; ++i)
            for (std::size_t j = 0; j < c; ++j) acc = acc + u[i] * g_form.at(i, j) * w[j];
        return acc;
    };

    // Symplectic Gram-Schmidt: peel off hyperbolic pairs (u, v) with
    // u^T G v = 1 and project the complement to be G-orthogonal to both.
    std::vector<Row> complement;
    for (std::size_t k = 0; k < c; ++k) {
        Row e(c, GaussRational(0));
        e[k] = GaussRational(1);
        complement.push_back(std::move(e));
    }
    std::vector<Row> us, vs;
    while (!complement.empty()) {
        rref(complement);
        if (complement.empty()) break;
        Row u = complement.front();
        std::size_t partner = complement.size();
        GaussRational s(0);
        for (std::size_t t = 1; t < complement.size(); ++t) {
            s = pairing(u, complement[t]);
            if (!s.is_zero()) {
                partner = t;
                break;
            }
        }
        if (partner == complement.size())
            throw SingularMatrixError("skew_to_standard: form is degenerate");
        Row v = complement[partner];
        {
            const GaussRational inv = s.inverse();
            for (auto& e : v) e = e * inv;  // now pairing(u, v) = 1
        }
        std::vector<Row> next;
        for (std::size_t t = 0; t < complement.size(); ++t) {
            if (t == 0 || t == partner) continue;
            Row x = complement[t];
            const GaussRational a = pairing(v, x);   // x' = x + a·u - b·v
            const GaussRational b = pairing(u, x);
            for (std::size_t j = 0; j < c; ++j) x[j] = x[j] + a * u[j] - b * v[j];
            next.push_back(std::move(x));
        }
        us.push_back(std::move(u));
        vs.push_back(std::move(v));
        complement = std::move(next);
    }

    // Columns (u_1..u_m, v_1..v_m) give P with P^T G P = Omega; g = P^{-1}.
    ScalarMatrix p(c, c, GaussRational(0));
    const std::size_t half = c / 2;
    for (std::size_t k = 0; k < half; ++k) {
        for (std::size_t i = 0; i < c; ++i) {
            p.at(i, k) = us[k][i];
            p.at(i, half + k) = vs[k][i];
        }
    }
    ScalarMatrix g = inverse(p);
    ScalarMatrix check = inverse(g.transpose()) * g_form * inverse(g);
    if (check != omega_matrix(c))
        throw std::logic_error("skew_to_standard: postcondition failed");
    return g;
}

ScalarMatrix symmetric_to_diagonal(const ScalarMatrix& h_form) {
    const std::size_t n = h_form.rows();
    if (h_form.cols() != n || n == 0)
        throw std::invalid_argument("symmetric_to_diagonal: square matrix required");
    if (h_form != h_form.transpose())
        throw std::invalid_argument("symmetric_to_diagonal: matrix is not symmetric");

    // Congruence sweep: H ← C^T H C while accumulating P ← P·C, so that at the
    // end P^T·H_in·P = H (diagonal) and h = P^{-1}.
    ScalarMatrix h = h_form;
    ScalarMatrix p = identity_matrix(n);
    auto add_col = [&](ScalarMatrix& m, std::size_t dst, std::size_t src,
                       const GaussRational& f) {
        for (std::size_t i = 0; i < m.rows(); ++i) m.at(i, dst) = m.at(i, dst) + f * m.at(i, src);
    };
    auto add_row = [&](ScalarMatrix& m, std::size_t dst, std::size_t src,
                       const GaussRational& f) {
        for (std::size_t j = 0; j < m.cols(); ++j) m.at(dst, j) = m.at(dst, j) + f * m.at(src, j);
    };
    auto swap_cols = [&](ScalarMatrix& m, std::size_t a, std::size_t b) {
        for (std::size_t i = 0; i < m.rows(); ++i) std::swap(m.at(i, a), m.at(i, b));
    };
    auto swap_rows = [&](ScalarMatrix& m, std::size_t a, std::size_t b) {
        for (std::size_t j = 0; j < m.cols(); ++j) std::swap(m.at(a, j), m.at(b, j));
    };

    for (std::size_t k = 0; k < n; ++k) {
        if (h.at(k, k).is_zero()) {
            std::size_t diag = n;
            for (std::size_t t = k + 1; t < n; ++t) {
                if (!h.at(t, t).is_zero()) {
                    diag = t;
                    break;
                }
            }
            if (diag < n) {
                swap_cols(h, k, diag);
                swap_rows(h, k, diag);
                swap_cols(p, k, diag);
            } else {
                std::size_t off = n;
                for (std::size_t t = k + 1; t < n; ++t) {
                    if (!h.at(k, t).is_zero()) {
                        off = t;
                        break;
                    }
                }
                if (off == n) throw SingularMatrixError("symmetric_to_diagonal: form is singular");
                // e_k ← e_k + e_off turns the zero diagonal entry into
                // 2·H(k, off) ≠ 0 (characteristic 0 here).
                add_col(h, k, off, GaussRational(1));
                add_row(h, k, off, GaussRational(1));
                add_col(p, k, off, GaussRational(1));
            }
        }
        const GaussRational pivot = h.at(k, k);
        const GaussRational inv = pivot.inverse();
        for (std::size_t t = k + 1; t < n; ++t) {
            const GaussRational f = -(h.at(k, t) * inv);
            if (f.is_zero()) continue;
            add_col(h, t, k, f);
            add_row(h, t, k, f);
            add_col(p, t, k, f);
        }
    }
    for (std::size_t i = 0; i < n; ++i) {
        if (h.at(i, i).is_zero())
            throw SingularMatrixError("symmetric_to_diagonal: form is singular");
        for (std::size_t j = 0; j < n; ++j)
            if (i != j && !h.at(i, j).is_zero())
                throw std::logic_error("symmetric_to_diagonal: sweep left an off-diagonal entry");
    }
    ScalarMatrix result = inverse(p);
    ScalarMatrix check = inverse(result.transpose()) * h_form * inverse(result);
    if (check != h) throw std::logic_error("symmetric_to_diagonal: postcondition failed");
    return result;
}

// ---------------------------------------------------------------------------
// Evaluation
// ---------------------------------------------------------------------------

ScalarMatrix evaluate_matrix(const PolyMatrix& m,
                             const std::vector<std::optional<GaussRational>>& assignment) {
    return m.map([&](const Poly& p) { return p.evaluate(assignment); });
}

std::vector<GaussRational> normalize_projective(std::vector<GaussRational> point) {
    std::size_t lead = point.size();
    for (std::size_t k = 0; k < point.size(); ++k) {
        if (!point[k].is_zero()) {
            lead = k;
            break;
        }
    }
    if (lead == point.size())
        throw std::invalid_argument("projective point has all coordinates zero");
    const GaussRational inv = point[lead].inverse();
    for (auto& c : point) c = c * inv;
    return point;
}

PolyMatrix to_poly_matrix(const ScalarMatrix& m, const RingPtr& ring) {
    return m.map([&](const GaussRational& v) { return Poly::constant(ring, v); });
}

}  // namespace instanton
