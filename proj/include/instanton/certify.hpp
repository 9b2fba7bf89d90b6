// instanton-verify: exact computer algebra for framed autodual instanton data.
// Distributed under the MIT license; see LICENSE in the repository root.

#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

#include "instanton/adhm.hpp"
#include "instanton/groebner.hpp"
#include "instanton/regularity.hpp"

namespace instanton {

/// One verified statement inside a certificate.
struct CertificateStep {
    std::string description;
    bool ok = false;
    std::string evidence;  // fingerprints, witness data, counts
    double millis = 0.0;
};

/// A machine-checkable replay of one of the library's headline results.  The
/// verdict is pass exactly when every step checked out.
struct Certificate {
    std::string id;
    std::vector<CertificateStep> steps;
    double total_millis = 0.0;

    bool pass() const {
        for (const auto& s : steps)
            if (!s.ok) return false;
        return true;
    }
};

nlohmann::json certificate_to_json(const Certificate& cert);
std::string certificate_to_text(const Certificate& cert);

/// The seven certificate ids: odd-charge, rank2-charge2, charge1-example,
/// appendix-a, appendix-b, dimensions, chern.
const std::vector<std::string>& certificate_ids();

/// Dispatch by id.  Deterministic for a fixed (id, seed); throws
/// std::invalid_argument for unknown ids and ResourceCapError when a Gröbner
/// step exhausts its limits.
Certificate run_certificate(const std::string& id, const GroebnerLimits& limits = {},
                            std::uint64_t seed = 0);

/// Non-existence for odd charge: the generic antisymmetric c×c determinant is
/// identically zero for odd c, while Omega_c is an invertible antisymmetric
/// witness for even c.  Covers 1..c_max.
Certificate certify_odd_charge(std::size_t c_max = 7);

/// Non-existence of rank-2 charge-2 orthogonal data on P^2: the symmetry
/// constraint pins A and B to scalars, the equation forces rank I, rank J <=
/// 1, and the fibre maps drop rank at an explicit point.
Certificate certify_rank2_charge2(const GroebnerLimits& limits = {});

/// The isotropic charge-1 monad on P^n: beta * beta^T = 0, full fibre rank,
/// identically-zero line determinant, rank 2n and charge 1.
Certificate certify_charge1_example(std::size_t n);
/// The same for n = 2, 3, 4 in one certificate (id charge1-example).
Certificate certify_charge1_suite();

/// Rank-2 charge-4 shape on P^2: the j-free entries of [A,B] + IJ generate
/// the 8-generator ideal Y; X (two extra quadrics) and W (a_2, b_2 adjoined)
/// are both strictly larger than Y.
Certificate certify_appendix_a(const GroebnerLimits& limits = {});

/// Rank-4 charge-2 shape on P^3: transposed-form duality for the trace-free
/// blocks, the three mu-coefficient displays, the sign bridge to a genuine
/// ADHM datum, and the strict ideal chain X < Y < Z.
Certificate certify_appendix_b(const GroebnerLimits& limits = {});

/// Frozen moduli-dimension table plus domain-refusal checks.
Certificate certify_dimensions();

/// Chern series coefficients against the closed binomial form and the
/// inverse identity chern_series(c) * (1 - t^2)^c = 1.
Certificate certify_chern();

/// Expected moduli dimension.  Supported: symplectic on "p2" (r even >= 2):
/// (r+2)c - C(r+1,2); symplectic rank 2 on "p3": 8c - 3; orthogonal on "p2"
/// (r = c >= 4 or r = c-1, c >= 8): (r-2)c - C(r,2).  Anything else throws
/// std::invalid_argument — the formulas are not extrapolated.
long long moduli_dimension(StructureKind kind, const std::string& space, long long r,
                           long long c);

/// Exact square root in Q(i) when one exists.
std::optional<GaussRational> gauss_sqrt(const GaussRational& v);

/// Bounded deterministic search for a fully verified regular datum.
/// Shapes: "p2-charge4" (rank-2 charge-4 on P^2; candidate parameters must
/// kill the Y generators, keep a_2, b_2 nonzero, and admit nonzero j with
/// realizable squares — no candidate is known to satisfy all three, so the
/// search reports failure, which is NOT a disproof) and "p3-rank4-charge2"
/// (isotropic-column family on P^3; succeeds).  Any returned datum has passed
/// mu = 0, the duality relations, orthogonal classification, global
/// regularity, and triviality on the distinguished line.
std::optional<ScalarExtended> search_witness(const std::string& shape, std::size_t bound,
                                             std::uint64_t seed);

}  // namespace instanton
