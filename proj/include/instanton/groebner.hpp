// instanton-verify: exact computer algebra for framed autodual instanton data.
// Distributed under the MIT license; see LICENSE in the repository root.

#pragma once

#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "instanton/poly.hpp"

namespace instanton {

/// Guard rails for basis computations: fail loudly instead of hanging.
struct GroebnerLimits {
    std::size_t max_basis = 512;     // maximum number of basis elements
    std::size_t max_terms = 100000;  // maximum term count of any intermediate polynomial
};

class ResourceCapError : public std::runtime_error {
public:
    explicit ResourceCapError(const std::string& what) : std::runtime_error(what) {}
};

/// Remainder plus the division cofactors: f = sum cofactor_k * divisor_k +
/// remainder, and no remainder term is divisible by any divisor's leading
/// monomial.
struct NormalFormResult {
    Poly remainder;
    std::vector<Poly> cofactors;
};

NormalFormResult normal_form(const Poly& f, const std::vector<Poly>& divisors,
                             const GroebnerLimits& limits = {});

/// Reduced Groebner basis (monic, interreduced, sorted by decreasing leading
/// monomial); unique for a fixed ring and order.
class GroebnerBasis {
public:
    static GroebnerBasis compute(const std::vector<Poly>& gens,
                                 const GroebnerLimits& limits = {});

    const RingPtr& ring() const { return ring_; }
    const std::vector<Poly>& elements() const { return elements_; }
    std::size_t size() const { return elements_.size(); }
    bool is_zero_ideal() const { return elements_.empty(); }
    bool contains_one() const;

    Poly reduce(const Poly& f, const GroebnerLimits& limits = {}) const;

    /// Stable regression string: element count, max degree, and a 64-bit FNV
    /// hash of the canonical element renderings.
    std::string fingerprint() const;

private:
    GroebnerBasis(RingPtr ring, std::vector<Poly> elements)
        : ring_(std::move(ring)), elements_(std::move(elements)) {}
    RingPtr ring_;
    std::vector<Poly> elements_;
};

struct MembershipCertificate {
    bool member;
    Poly remainder;
};

/// Membership via normal form against a reduced basis.  When the result is
/// positive, the division cofactors are re-multiplied to reconstruct f as a
/// combination of the basis elements (soundness check on every call).
MembershipCertificate ideal_member(const Poly& f, const GroebnerBasis& basis,
                                   const GroebnerLimits& limits = {});

/// Generating sets with a cached reduced basis.
class Ideal {
public:
    Ideal(RingPtr ring, std::vector<Poly> gens);
    const RingPtr& ring() const { return ring_; }
    const std::vector<Poly>& generators() const { return gens_; }
    const GroebnerBasis& basis(const GroebnerLimits& limits = {}) const;

private:
    RingPtr ring_;
    std::vector<Poly> gens_;
    mutable std::optional<GroebnerBasis> cache_;
};

/// Mutual membership of the generators.
bool ideal_equal(const Ideal& a, const Ideal& b, const GroebnerLimits& limits = {});

/// f in the radical of <gens>: 1 in <gens, 1 - t*f> over the ring extended by
/// one fresh variable t (Rabinowitsch).
bool radical_member(const Poly& f, const std::vector<Poly>& gens,
                    const GroebnerLimits& limits = {});

/// Projective emptiness of V(gens) in the coordinates coord_vars, decided by
/// radical membership of every coordinate variable.  Generators must be
/// homogeneous in the coordinate variables.
bool projective_empty(const std::vector<Poly>& gens, const std::vector<std::size_t>& coord_vars,
                      const GroebnerLimits& limits = {});

}  // namespace instanton
