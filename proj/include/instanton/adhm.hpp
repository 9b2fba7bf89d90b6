// instanton-verify: exact computer algebra for framed autodual instanton data.
// Distributed under the MIT license; see LICENSE in the repository root.

#pragma once

#include <array>
#include <cstdint>
#include <map>
#include <optional>
#include <random>
#include <stdexcept>
#include <string>
#include <vector>

#include <json.hpp>

#include "instanton/matrix.hpp"
#include "instanton/poly.hpp"

namespace instanton {

/// Thrown when an operation requires the duality relations and they fail;
/// carries a description of the violated relation.
class DualityViolationError : public std::runtime_error {
public:
    explicit DualityViolationError(const std::string& what) : std::runtime_error(what) {}
};

enum class StructureKind { Autodual, Symplectic, Orthogonal };
std::string to_string(StructureKind kind);
std::optional<StructureKind> structure_kind_from_string(const std::string& name);

/// Matrix tuple (A_k, B_k, I_k, J_k), k = 0..n-2, describing a bundle on P^n
/// with rank r = dim W and charge c = dim V.  Entry type is GaussRational for
/// concrete data and Poly for symbolic shapes; operations share one code path.
template <typename T>
struct AdhmData {
    std::size_t n = 2, r = 1, c = 1;
    std::vector<Matrix<T>> A, B;  // c×c each
    std::vector<Matrix<T>> I;     // c×r each
    std::vector<Matrix<T>> J;     // r×c each; may be empty before derive_J

    void validate(bool allow_missing_j = false) const {
        if (n < 2 || r < 1 || c < 1)
            throw std::invalid_argument("datum needs n >= 2, r >= 1, c >= 1");
        const std::size_t blocks = n - 1;
        if (A.size() != blocks || B.size() != blocks || I.size() != blocks ||
            (J.size() != blocks && !(allow_missing_j && J.empty())))
            throw std::invalid_argument("datum needs n-1 blocks of each kind");
        for (std::size_t k = 0; k < blocks; ++k) {
            if (A[k].rows() != c || A[k].cols() != c || B[k].rows() != c || B[k].cols() != c)
                throw std::invalid_argument("A and B blocks must be c×c");
            if (I[k].rows() != c || I[k].cols() != r)
                throw std::invalid_argument("I blocks must be c×r");
            if (k < J.size() && (J[k].rows() != r || J[k].cols() != c))
                throw std::invalid_argument("J blocks must be r×c");
        }
    }
};

/// AdhmData plus the autodual pair (G: V→V^dual, H: W→W^dual).
template <typename T>
struct ExtendedData {
    AdhmData<T> datum;
    Matrix<T> G, H;

    void validate(bool allow_missing_j = false) const {
        datum.validate(allow_missing_j);
        if (G.rows() != datum.c || G.cols() != datum.c)
            throw std::invalid_argument("G must be c×c");
        if (H.rows() != datum.r || H.cols() != datum.r)
            throw std::invalid_argument("H must be r×r");
    }
};

using ScalarAdhm = AdhmData<GaussRational>;
using ScalarExtended = ExtendedData<GaussRational>;
using SymbolicAdhm = AdhmData<Poly>;
using SymbolicExtended = ExtendedData<Poly>;

/// Locates the homogeneous coordinates [x : y : z_0 : ... : z_{n-2}] inside a
/// polynomial ring that may also carry symbolic parameters.
struct CoordSystem {
    RingPtr ring;
    std::size_t x = 0, y = 0;
    std::vector<std::size_t> z;

    std::size_t n() const { return z.size() + 1; }
    /// x, y, z_0, ..., z_{n-2} in order.
    std::vector<std::size_t> all() const;
};

/// Ring with variables params... , x, y, z_0..z_{n-2} (grevlex) and the
/// coordinate bookkeeping.
CoordSystem make_coordinates(std::size_t n, std::vector<std::string> params = {},
                             MonomialOrder order = MonomialOrder::grevlex);

SymbolicAdhm symbolize(const ScalarAdhm& d, const RingPtr& ring);
SymbolicExtended symbolize(const ScalarExtended& ext, const RingPtr& ring);

// ---------------------------------------------------------------------------
// The map mu and its coefficients
// ---------------------------------------------------------------------------

/// Coefficient of z_k z_l (k <= l) in mu = [A(z), B(z)] + I(z) J(z):
/// for k = l it is [A_k, B_k] + I_k J_k; for k < l it is the mixed sum
/// A_k B_l + A_l B_k - B_k A_l - B_l A_k + I_k J_l + I_l J_k.
template <typename T>
Matrix<T> mu_coefficient(const AdhmData<T>& d, std::size_t k, std::size_t l) {
    if (k > l) std::swap(k, l);
    if (l >= d.n - 1) throw std::out_of_range("mu_coefficient: block index out of range");
    if (k == l) return commutator(d.A[k], d.B[k]) + d.I[k] * d.J[k];
    return d.A[k] * d.B[l] + d.A[l] * d.B[k] - d.B[k] * d.A[l] - d.B[l] * d.A[k] +
           d.I[k] * d.J[l] + d.I[l] * d.J[k];
}

template <typename T>
std::map<std::pair<std::size_t, std::size_t>, Matrix<T>> mu_coefficients(const AdhmData<T>& d) {
    d.validate();
    std::map<std::pair<std::size_t, std::size_t>, Matrix<T>> out;
    for (std::size_t k = 0; k + 1 < d.n; ++k)
        for (std::size_t l = k; l + 1 < d.n; ++l) out[{k, l}] = mu_coefficient(d, k, l);
    return out;
}

/// The ADHM equation mu = 0 holds iff every coefficient matrix vanishes.
template <typename T>
bool mu_is_zero(const AdhmData<T>& d) {
    for (const auto& [kl, m] : mu_coefficients(d))
        if (!m.is_zero()) return false;
    return true;
}

/// Sum of blocks[k] * z_k as a polynomial matrix.
PolyMatrix contract_z(const std::vector<PolyMatrix>& blocks, const CoordSystem& coords);

/// mu as a c×c matrix of quadratics in the z coordinates.
PolyMatrix mu_matrix(const SymbolicAdhm& d, const CoordSystem& coords);
PolyMatrix mu_matrix(const ScalarAdhm& d, const CoordSystem& coords);

// ---------------------------------------------------------------------------
// Monads
// ---------------------------------------------------------------------------

/// alpha: (2c+r)×c, beta: c×(2c+r); beta·alpha = mu, so the pair is a monad
/// exactly when the ADHM equation holds.
struct Monad {
    PolyMatrix alpha;
    PolyMatrix beta;
    CoordSystem coords;
};

Monad build_monad(const SymbolicAdhm& d, const CoordSystem& coords);
Monad build_monad(const ScalarAdhm& d, const CoordSystem& coords);

/// (beta^T, alpha^T) with the roles swapped; an involution.
Monad dual_monad(const Monad& m);

// ---------------------------------------------------------------------------
// Duality structure
// ---------------------------------------------------------------------------

/// (GA - A^T G, GB - B^T G, HJ + I^T G, GI - J^T H) with A = sum A_k z_k etc.
std::array<PolyMatrix, 4> duality_residuals(const SymbolicExtended& ext,
                                            const CoordSystem& coords);
std::array<PolyMatrix, 4> duality_residuals(const ScalarExtended& ext,
                                            const CoordSystem& coords);

/// Scalar shortcut: the residuals vanish identically in z iff they vanish for
/// every block index.  Returns a description of the first violated relation,
/// or nullopt when all hold.
std::optional<std::string> duality_violation(const ScalarExtended& ext);

/// J_k := -H^{-1} I_k^T G; afterwards HJ + I^T G = 0 identically.
ScalarExtended derive_J(ScalarExtended ext);

/// G I_k H^{-1} + G^T I_k (H^T)^{-1} = 0 for every k.
bool autodual_compatibility(const ScalarExtended& ext);

/// Symplectic iff G symmetric and H antisymmetric; Orthogonal iff G
/// antisymmetric and H symmetric; Autodual otherwise.  Requires the duality
/// relations; throws DualityViolationError when they fail.
StructureKind classify_structure(const ScalarExtended& ext);

/// F = [[0, G, 0], [-G, 0, 0], [0, 0, H]], size (2c+r)^2.
template <typename T>
Matrix<T> build_F(const ExtendedData<T>& ext) {
    ext.validate();
    const std::size_t c = ext.datum.c, r = ext.datum.r;
    const T zero = ext.G.at(0, 0) - ext.G.at(0, 0);
    Matrix<T> f(2 * c + r, 2 * c + r, zero);
    for (std::size_t i = 0; i < c; ++i) {
        for (std::size_t j = 0; j < c; ++j) {
            f.at(i, c + j) = ext.G.at(i, j);
            f.at(c + i, j) = -ext.G.at(i, j);
        }
    }
    for (std::size_t i = 0; i < r; ++i)
        for (std::size_t j = 0; j < r; ++j) f.at(2 * c + i, 2 * c + j) = ext.H.at(i, j);
    return f;
}

// ---------------------------------------------------------------------------
// Group actions
// ---------------------------------------------------------------------------

/// (A, B, I, J, G, H) -> (gAg^-1, gBg^-1, gI, Jg^-1, (g^T)^-1 G g^-1, H).
ScalarExtended gl_action(const ScalarMatrix& g, const ScalarExtended& ext);

/// I_k -> I_k h^-1, H -> (h^T)^-1 H h^-1.  When require_h_preserves_form is
/// set, h must satisfy h^T H h = H (the structure group of the framing).
ScalarExtended frame_action(const ScalarMatrix& h, const ScalarExtended& ext,
                            bool require_h_preserves_form = false);

// ---------------------------------------------------------------------------
// Random generation (property tests and searches)
// ---------------------------------------------------------------------------

GaussRational random_scalar(std::mt19937_64& rng, bool allow_imaginary = true);
ScalarMatrix random_matrix(std::size_t rows, std::size_t cols, std::mt19937_64& rng,
                           bool allow_imaginary = true);
ScalarMatrix random_invertible(std::size_t size, std::mt19937_64& rng);
/// Cayley transform of a random Lie-algebra element: h with h^T form h = form.
/// `form` must be invertible and symmetric or antisymmetric.
ScalarMatrix random_form_preserving(const ScalarMatrix& form, std::mt19937_64& rng);

/// Random extended datum whose duality relations hold by construction
/// (symplectic: G = Id, H = Omega_r, A_k/B_k symmetric; orthogonal: G =
/// Omega_c, H = Id, A_k/B_k = G^-1 * antisymmetric); the ADHM equation is
/// generally NOT satisfied.  Preconditions: symplectic needs r even,
/// orthogonal needs c even.
ScalarExtended generate_constrained(StructureKind kind, std::size_t n, std::size_t r,
                                    std::size_t c, std::uint64_t seed);

// ---------------------------------------------------------------------------
// Datum files
// ---------------------------------------------------------------------------

/// Scalar datum document: { "n", "r", "c", "A": [mat...], "B", "I",
/// "J" (or "derive"), "G", "H" } with mat a row-major array of scalar-literal
/// strings.  Throws std::invalid_argument / ParseError on malformed input.
ScalarExtended load_scalar_datum(const nlohmann::json& doc);
nlohmann::json datum_to_json(const ScalarExtended& ext);

/// Symbolic datum: same shape plus "vars": [names...]; entries are polynomial
/// strings over those variables (coordinates are added to the ring).
struct SymbolicDatum {
    SymbolicExtended ext;
    CoordSystem coords;
    std::vector<std::string> params;
};
SymbolicDatum load_symbolic_datum(const nlohmann::json& doc);

bool is_symbolic_datum(const nlohmann::json& doc);

}  // namespace instanton
