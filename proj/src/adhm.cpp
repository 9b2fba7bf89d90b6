// instanton-verify: exact computer algebra for framed autodual instanton data.
// Distributed under the MIT license; see LICENSE in the repository root.

#include "instanton/adhm.hpp"

#include <algorithm>
#include <utility>

namespace instanton {

std::string to_string(StructureKind kind) {
    switch (kind) {
        case StructureKind::Autodual: return "autodual";
        case StructureKind::Symplectic: return "symplectic";
        case StructureKind::Orthogonal: return "orthogonal";
    }
    return "unknown";
}

std::optional<StructureKind> structure_kind_from_string(const std::string& name) {
    if (name == "autodual") return StructureKind::Autodual;
    if (name == "symplectic") return StructureKind::Symplectic;
    if (name == "orthogonal") return StructureKind::Orthogonal;
    return std::nullopt;
}

std::vector<std::size_t> CoordSystem::all() const {
    std::vector<std::size_t> out{x, y};
    out.insert(out.end(), z.begin(), z.end());
    return out;
}

CoordSystem make_coordinates(std::size_t n, std::vector<std::string> params, MonomialOrder order) {
    if (n < 2) throw std::invalid_argument("coordinates need n >= 2");
    CoordSystem cs;
    std::vector<std::string> names = std::move(params);
    const std::size_t base = names.size();
    names.push_back("x");
    names.push_back("y");
    for (std::size_t k = 0; k + 1 < n; ++k) names.push_back("z_" + std::to_string(k));
    cs.ring = PolyRing::create(std::move(names), order);
    cs.x = base;
    cs.y = base + 1;
    for (std::size_t k = 0; k + 1 < n; ++k) cs.z.push_back(base + 2 + k);
    return cs;
}

namespace {

PolyMatrix embed(const ScalarMatrix& m, const RingPtr& ring) { return to_poly_matrix(m, ring); }

std::vector<PolyMatrix> embed_all(const std::vector<ScalarMatrix>& ms, const RingPtr& ring) {
    std::vector<PolyMatrix> out;
    out.reserve(ms.size());
    for (const auto& m : ms) out.push_back(embed(m, ring));
    return out;
}

}  // namespace

SymbolicAdhm symbolize(const ScalarAdhm& d, const RingPtr& ring) {
    SymbolicAdhm out;
    out.n = d.n;
    out.r = d.r;
    out.c = d.c;
    out.A = embed_all(d.A, ring);
    out.B = embed_all(d.B, ring);
    out.I = embed_all(d.I, ring);
    out.J = embed_all(d.J, ring);
    return out;
}

SymbolicExtended symbolize(const ScalarExtended& ext, const RingPtr& ring) {
    return SymbolicExtended{symbolize(ext.datum, ring), embed(ext.G, ring), embed(ext.H, ring)};
}

// ---------------------------------------------------------------------------
// mu
// ---------------------------------------------------------------------------

PolyMatrix contract_z(const std::vector<PolyMatrix>& blocks, const CoordSystem& coords) {
    if (blocks.empty()) throw std::invalid_argument("contract_z: no blocks");
    if (blocks.size() != coords.z.size())
        throw std::invalid_argument("contract_z: block count must match coordinate count");
    PolyMatrix acc = blocks[0].map(
        [&](const Poly& p) { return p * Poly::variable(coords.ring, coords.z[0]); });
    for (std::size_t k = 1; k < blocks.size(); ++k) {
        acc = acc + blocks[k].map([&](const Poly& p) {
            return p * Poly::variable(coords.ring, coords.z[k]);
        });
    }
    return acc;
}

PolyMatrix mu_matrix(const SymbolicAdhm& d, const CoordSystem& coords) {
    d.validate();
    const PolyMatrix az = contract_z(d.A, coords);
    const PolyMatrix bz = contract_z(d.B, coords);
    const PolyMatrix iz = contract_z(d.I, coords);
    const PolyMatrix jz = contract_z(d.J, coords);
    return commutator(az, bz) + iz * jz;
}

PolyMatrix mu_matrix(const ScalarAdhm& d, const CoordSystem& coords) {
    return mu_matrix(symbolize(d, coords.ring), coords);
}

// ---------------------------------------------------------------------------
// Monads
// ---------------------------------------------------------------------------

namespace {

PolyMatrix add_scalar_diag(PolyMatrix m, const Poly& s) {
    for (std::size_t k = 0; k < m.rows(); ++k) m.at(k, k) = m.at(k, k) + s;
    return m;
}

void check_linear_forms(const PolyMatrix& m, const CoordSystem& coords, const char* what) {
    const std::vector<std::size_t> cvars = coords.all();
    for (std::size_t i = 0; i < m.rows(); ++i) {
        for (std::size_t j = 0; j < m.cols(); ++j) {
            for (const auto& t : m.at(i, j).terms()) {
                std::uint64_t deg = 0;
                for (std::size_t v : cvars) deg += t.mono[v];
                if (deg != 1)
                    throw std::invalid_argument(std::string(what) +
                                                ": monad entries must be homogeneous linear in "
                                                "the coordinates");
            }
        }
    }
}

}  // namespace

Monad build_monad(const SymbolicAdhm& d, const CoordSystem& coords) {
    d.validate();
    const Poly px = Poly::variable(coords.ring, coords.x);
    const Poly py = Poly::variable(coords.ring, coords.y);
    const PolyMatrix ax = add_scalar_diag(contract_z(d.A, coords), px);
    const PolyMatrix by = add_scalar_diag(contract_z(d.B, coords), py);
    const PolyMatrix iz = contract_z(d.I, coords);
    const PolyMatrix jz = contract_z(d.J, coords);
    Monad m{vstack(vstack(ax, by), jz), hstack(hstack(-by, ax), iz), coords};
    check_linear_forms(m.alpha, coords, "alpha");
    check_linear_forms(m.beta, coords, "beta");
    return m;
}

Monad build_monad(const ScalarAdhm& d, const CoordSystem& coords) {
    return build_monad(symbolize(d, coords.ring), coords);
}

Monad dual_monad(const Monad& m) { return Monad{m.beta.transpose(), m.alpha.transpose(), m.coords}; }

// ---------------------------------------------------------------------------
// Duality
// ---------------------------------------------------------------------------

std::array<PolyMatrix, 4> duality_residuals(const SymbolicExtended& ext,
                                            const CoordSystem& coords) {
    ext.validate();
    const PolyMatrix az = contract_z(ext.datum.A, coords);
    const PolyMatrix bz = contract_z(ext.datum.B, coords);
    const PolyMatrix iz = contract_z(ext.datum.I, coords);
    const PolyMatrix jz = contract_z(ext.datum.J, coords);
    const PolyMatrix& g = ext.G;
    const PolyMatrix& h = ext.H;
    return {g * az - az.transpose() * g, g * bz - bz.transpose() * g,
            h * jz + iz.transpose() * g, g * iz - jz.transpose() * h};
}

std::array<PolyMatrix, 4> duality_residuals(const ScalarExtended& ext,
                                            const CoordSystem& coords) {
    return duality_residuals(symbolize(ext, coords.ring), coords);
}

std::optional<std::string> duality_violation(const ScalarExtended& ext) {
    ext.validate();
    const ScalarMatrix& g = ext.G;
    const ScalarMatrix& h = ext.H;
    for (std::size_t k = 0; k + 1 < ext.datum.n; ++k) {
        const auto tag = std::to_string(k);
        if (!(g * ext.datum.A[k] - ext.datum.A[k].transpose() * g).is_zero())
            return "G*A_" + tag + " != A_" + tag + "^T*G";
        if (!(g * ext.datum.B[k] - ext.datum.B[k].transpose() * g).is_zero())
            return "G*B_" + tag + " != B_" + tag + "^T*G";
        if (!(h * ext.datum.J[k] + ext.datum.I[k].transpose() * g).is_zero())
            return "H*J_" + tag + " != -I_" + tag + "^T*G";
        if (!(g * ext.datum.I[k] - ext.datum.J[k].transpose() * h).is_zero())
            return "G*I_" + tag + " != J_" + tag + "^T*H";
    }
    return std::nullopt;
}

ScalarExtended derive_J(ScalarExtended ext) {
    ext.validate(/*allow_missing_j=*/true);
    const ScalarMatrix hinv = inverse(ext.H);
    ext.datum.J.clear();
    for (std::size_t k = 0; k + 1 < ext.datum.n; ++k)
        ext.datum.J.push_back(-(hinv * ext.datum.I[k].transpose() * ext.G));
    ext.validate();
    return ext;
}

bool autodual_compatibility(const ScalarExtended& ext) {
    ext.validate();
    const ScalarMatrix hinv = inverse(ext.H);
    const ScalarMatrix htinv = inverse(ext.H.transpose());
    for (const auto& i_blk : ext.datum.I) {
        const ScalarMatrix lhs = ext.G * i_blk * hinv + ext.G.transpose() * i_blk * htinv;
        if (!lhs.is_zero()) return false;
    }
    return true;
}

StructureKind classify_structure(const ScalarExtended& ext) {
    if (auto violation = duality_violation(ext))
        throw DualityViolationError("duality relation violated: " + *violation);
    const bool g_sym = ext.G == ext.G.transpose();
    const bool g_skew = (ext.G + ext.G.transpose()).is_zero();
    const bool h_sym = ext.H == ext.H.transpose();
    const bool h_skew = (ext.H + ext.H.transpose()).is_zero();
    if (g_sym && h_skew) return StructureKind::Symplectic;
    if (g_skew && h_sym) return StructureKind::Orthogonal;
    return StructureKind::Autodual;
}

// ---------------------------------------------------------------------------
// Actions
// ---------------------------------------------------------------------------

ScalarExtended gl_action(const ScalarMatrix& g, const ScalarExtended& ext) {
    ext.validate();
    if (g.rows() != ext.datum.c || g.cols() != ext.datum.c)
        throw std::invalid_argument("gl_action: g must be c×c");
    const ScalarMatrix ginv = inverse(g);
    ScalarExtended out = ext;
    for (std::size_t k = 0; k + 1 < ext.datum.n; ++k) {
        out.datum.A[k] = g * ext.datum.A[k] * ginv;
        out.datum.B[k] = g * ext.datum.B[k] * ginv;
        out.datum.I[k] = g * ext.datum.I[k];
        out.datum.J[k] = ext.datum.J[k] * ginv;
    }
    out.G = inverse(g.transpose()) * ext.G * ginv;
    return out;
}

ScalarExtended frame_action(const ScalarMatrix& h, const ScalarExtended& ext,
                            bool require_h_preserves_form) {
    ext.validate();
    if (h.rows() != ext.datum.r || h.cols() != ext.datum.r)
        throw std::invalid_argument("frame_action: h must be r×r");
    if (require_h_preserves_form && h.transpose() * ext.H * h != ext.H)
        throw std::invalid_argument("frame_action: h does not preserve the framing form H");
    const ScalarMatrix hinv = inverse(h);
    ScalarExtended out = ext;
    for (std::size_t k = 0; k + 1 < ext.datum.n; ++k) {
        out.datum.I[k] = ext.datum.I[k] * hinv;
        // J co-transforms so that I*J (hence mu) and the duality relations are
        // preserved.
        out.datum.J[k] = h * ext.datum.J[k];
    }
    out.H = inverse(h.transpose()) * ext.H * hinv;
    return out;
}

// ---------------------------------------------------------------------------
// Random generation
// ---------------------------------------------------------------------------

GaussRational random_scalar(std::mt19937_64& rng, bool allow_imaginary) {
    std::uniform_int_distribution<long> num(-3, 3);
    std::uniform_int_distribution<long> den(1, 2);
    std::uniform_int_distribution<int> coin(0, 3);
    BigRational re(num(rng), static_cast<unsigned long>(den(rng)));
    if (!allow_imaginary || coin(rng) != 0) return GaussRational(re);
    BigRational im(num(rng), static_cast<unsigned long>(den(rng)));
    return GaussRational(re, im);
}

ScalarMatrix random_matrix(std::size_t rows, std::size_t cols, std::mt19937_64& rng,
                           bool allow_imaginary) {
    ScalarMatrix m(rows, cols, GaussRational(0));
    for (std::size_t i = 0; i < rows; ++i)
        for (std::size_t j = 0; j < cols; ++j) m.at(i, j) = random_scalar(rng, allow_imaginary);
    return m;
}

ScalarMatrix random_invertible(std::size_t size, std::mt19937_64& rng) {
    for (;;) {
        ScalarMatrix m = random_matrix(size, size, rng);
        if (!det_gauss(m).is_zero()) return m;
    }
}

namespace {

ScalarMatrix random_symmetric(std::size_t n, std::mt19937_64& rng) {
    ScalarMatrix m(n, n, GaussRational(0));
    for (std::size_t i = 0; i < n; ++i) {
        m.at(i, i) = random_scalar(rng);
        for (std::size_t j = i + 1; j < n; ++j) {
            GaussRational v = random_scalar(rng);
            m.at(i, j) = v;
            m.at(j, i) = v;
        }
    }
    return m;
}

ScalarMatrix random_antisymmetric(std::size_t n, std::mt19937_64& rng) {
    ScalarMatrix m(n, n, GaussRational(0));
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = i + 1; j < n; ++j) {
            GaussRational v = random_scalar(rng);
            m.at(i, j) = v;
            m.at(j, i) = -v;
        }
    }
    return m;
}

}  // namespace

ScalarMatrix random_form_preserving(const ScalarMatrix& form, std::mt19937_64& rng) {
    const std::size_t n = form.rows();
    if (form.cols() != n || n == 0)
        throw std::invalid_argument("random_form_preserving: square form required");
    const bool sym = form == form.transpose();
    const bool skew = (form + form.transpose()).is_zero();
    if (!sym && !skew)
        throw std::invalid_argument("random_form_preserving: form must be (anti)symmetric");
    const ScalarMatrix finv = inverse(form);
    const ScalarMatrix id = identity_matrix(n);
    for (;;) {
        // Lie-algebra element: S = form^-1 * K with K antisymmetric (form
        // symmetric) or symmetric (form antisymmetric); then the Cayley
        // transform h = (Id - S)(Id + S)^-1 preserves the form.
        ScalarMatrix k = sym ? random_antisymmetric(n, rng) : random_symmetric(n, rng);
        ScalarMatrix s = finv * k;
        if (det_gauss(id + s).is_zero()) continue;
        ScalarMatrix h = (id - s) * inverse(id + s);
        if (h.transpose() * form * h != form)
            throw std::logic_error("random_form_preserving: Cayley transform failed");
        return h;
    }
}

ScalarExtended generate_constrained(StructureKind kind, std::size_t n, std::size_t r,
                                    std::size_t c, std::uint64_t seed) {
    if (n < 2 || r < 1 || c < 1)
        throw std::invalid_argument("generate_constrained: need n >= 2, r >= 1, c >= 1");
    std::mt19937_64 rng(seed);
    ScalarExtended ext;
    ext.datum.n = n;
    ext.datum.r = r;
    ext.datum.c = c;
    if (kind == StructureKind::Symplectic) {
        if (r % 2 != 0)
            throw std::invalid_argument("generate_constrained: symplectic needs even rank r");
        ext.G = identity_matrix(c);
        ext.H = omega_matrix(r);
        for (std::size_t k = 0; k + 1 < n; ++k) {
            ext.datum.A.push_back(random_symmetric(c, rng));
            ext.datum.B.push_back(random_symmetric(c, rng));
        }
    } else if (kind == StructureKind::Orthogonal) {
        if (c % 2 != 0)
            throw std::invalid_argument("generate_constrained: orthogonal needs even charge c");
        ext.G = omega_matrix(c);
        ext.H = identity_matrix(r);
        const ScalarMatrix ginv = inverse(ext.G);
        for (std::size_t k = 0; k + 1 < n; ++k) {
            ext.datum.A.push_back(ginv * random_antisymmetric(c, rng));
            ext.datum.B.push_back(ginv * random_antisymmetric(c, rng));
        }
    } else {
        throw std::invalid_argument(
            "generate_constrained: kind must be symplectic or orthogonal");
    }
    for (std::size_t k = 0; k + 1 < n; ++k)
        ext.datum.I.push_back(random_matrix(c, r, rng));
    return derive_J(std::move(ext));
}

// ---------------------------------------------------------------------------
// Datum files
// ---------------------------------------------------------------------------

namespace {

using nlohmann::json;

std::size_t read_size(const json& doc, const char* key, std::size_t min_value) {
    if (!doc.contains(key) || !doc[key].is_number_unsigned())
        throw std::invalid_argument(std::string("datum field '") + key +
                                    "' must be a non-negative integer");
    const std::size_t v = doc[key].get<std::size_t>();
    if (v < min_value)
        throw std::invalid_argument(std::string("datum field '") + key + "' must be >= " +
                                    std::to_string(min_value));
    return v;
}

template <typename EntryParser>
auto read_matrix(const json& node, std::size_t rows, std::size_t cols, const std::string& what,
                 EntryParser parse_entry) -> Matrix<decltype(parse_entry(std::string{}))> {
    using T = decltype(parse_entry(std::string{}));
    if (!node.is_array() || node.size() != rows * cols)
        throw std::invalid_argument(what + " must be a row-major array of " +
                                    std::to_string(rows * cols) + " scalar strings");
    std::vector<std::vector<T>> out(rows);
    for (std::size_t k = 0; k < node.size(); ++k) {
        if (!node[k].is_string())
            throw std::invalid_argument(what + " entries must be scalar-literal strings");
        try {
            out[k / cols].push_back(parse_entry(node[k].get<std::string>()));
        } catch (const std::exception& e) {
            throw std::invalid_argument(what + " entry " + std::to_string(k) + ": " + e.what());
        }
    }
    return Matrix<T>::from_rows(std::move(out));
}

template <typename EntryParser>
auto read_matrix_list(const json& doc, const char* key, std::size_t count, std::size_t rows,
                      std::size_t cols, EntryParser parse_entry)
    -> std::vector<Matrix<decltype(parse_entry(std::string{}))>> {
    using T = decltype(parse_entry(std::string{}));
    if (!doc.contains(key) || !doc[key].is_array() || doc[key].size() != count)
        throw std::invalid_argument(std::string("datum field '") + key + "' must be a list of " +
                                    std::to_string(count) + " matrices");
    std::vector<Matrix<T>> out;
    for (std::size_t k = 0; k < count; ++k)
        out.push_back(read_matrix(doc[key][k], rows, cols,
                                  std::string(key) + "[" + std::to_string(k) + "]", parse_entry));
    return out;
}

json write_matrix(const ScalarMatrix& m) {
    json arr = json::array();
    for (std::size_t i = 0; i < m.rows(); ++i)
        for (std::size_t j = 0; j < m.cols(); ++j) arr.push_back(m.at(i, j).to_string());
    return arr;
}

}  // namespace

bool is_symbolic_datum(const nlohmann::json& doc) { return doc.contains("vars"); }

ScalarExtended load_scalar_datum(const nlohmann::json& doc) {
    const std::size_t n = read_size(doc, "n", 2);
    const std::size_t r = read_size(doc, "r", 1);
    const std::size_t c = read_size(doc, "c", 1);
    auto scalar = [](const std::string& s) { return parse_scalar(s); };
    ScalarExtended ext;
    ext.datum.n = n;
    ext.datum.r = r;
    ext.datum.c = c;
    ext.datum.A = read_matrix_list(doc, "A", n - 1, c, c, scalar);
    ext.datum.B = read_matrix_list(doc, "B", n - 1, c, c, scalar);
    ext.datum.I = read_matrix_list(doc, "I", n - 1, c, r, scalar);
    if (!doc.contains("G") || !doc.contains("H"))
        throw std::invalid_argument("datum needs fields 'G' and 'H'");
    ext.G = read_matrix(doc["G"], c, c, "G", scalar);
    ext.H = read_matrix(doc["H"], r, r, "H", scalar);
    const bool derive = doc.contains("J") && doc["J"].is_string() &&
                        doc["J"].get<std::string>() == "derive";
    if (derive) return derive_J(std::move(ext));
    ext.datum.J = read_matrix_list(doc, "J", n - 1, r, c, scalar);
    ext.validate();
    return ext;
}

nlohmann::json datum_to_json(const ScalarExtended& ext) {
    ext.validate();
    json doc;
    doc["n"] = ext.datum.n;
    doc["r"] = ext.datum.r;
    doc["c"] = ext.datum.c;
    for (const char* key : {"A", "B", "I", "J"}) doc[key] = json::array();
    for (std::size_t k = 0; k + 1 < ext.datum.n; ++k) {
        doc["A"].push_back(write_matrix(ext.datum.A[k]));
        doc["B"].push_back(write_matrix(ext.datum.B[k]));
        doc["I"].push_back(write_matrix(ext.datum.I[k]));
        doc["J"].push_back(write_matrix(ext.datum.J[k]));
    }
    doc["G"] = write_matrix(ext.G);
    doc["H"] = write_matrix(ext.H);
    return doc;
}

SymbolicDatum load_symbolic_datum(const nlohmann::json& doc) {
    if (!doc.contains("vars") || !doc["vars"].is_array())
        throw std::invalid_argument("symbolic datum needs a 'vars' list");
    std::vector<std::string> params;
    for (const auto& v : doc["vars"]) {
        if (!v.is_string())
            throw std::invalid_argument("'vars' entries must be variable-name strings");
        params.push_back(v.get<std::string>());
    }
    const std::size_t n = read_size(doc, "n", 2);
    const std::size_t r = read_size(doc, "r", 1);
    const std::size_t c = read_size(doc, "c", 1);
    CoordSystem coords = make_coordinates(n, params);
    auto entry = [&](const std::string& s) { return parse_poly(s, coords.ring); };
    SymbolicDatum out{SymbolicExtended{}, coords, std::move(params)};
    out.ext.datum.n = n;
    out.ext.datum.r = r;
    out.ext.datum.c = c;
    out.ext.datum.A = read_matrix_list(doc, "A", n - 1, c, c, entry);
    out.ext.datum.B = read_matrix_list(doc, "B", n - 1, c, c, entry);
    out.ext.datum.I = read_matrix_list(doc, "I", n - 1, c, r, entry);
    out.ext.datum.J = read_matrix_list(doc, "J", n - 1, r, c, entry);
    if (!doc.contains("G") || !doc.contains("H"))
        throw std::invalid_argument("datum needs fields 'G' and 'H'");
    out.ext.G = read_matrix(doc["G"], c, c, "G", entry);
    out.ext.H = read_matrix(doc["H"], r, r, "H", entry);
    out.ext.validate();
    return out;
}

}  // namespace instanton
