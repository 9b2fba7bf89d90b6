// instanton-verify: exact computer algebra for framed autodual instanton data.
// Distributed under the MIT license; see LICENSE in the repository root.

#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "instanton/adhm.hpp"
#include "instanton/groebner.hpp"

namespace instanton {

/// Outcome of the fibre-wise regularity decision.  A datum is globally
/// regular iff alpha is injective and beta is surjective at every point of
/// P^n; each side is decided by projective emptiness of its c×c minor ideal.
struct RegularityReport {
    bool alpha_injective_everywhere = false;
    bool beta_surjective_everywhere = false;
    /// A point of P^n where the failing side drops rank, when one exists over
    /// Q(i) within the bounded chart search; re-checked before reporting.
    std::optional<std::vector<GaussRational>> failure_witness;
    /// Set when a side fails but no Q(i)-rational witness was found: the
    /// failure locus is non-empty over the algebraic closure only.
    bool failure_over_closure_only = false;
    /// How the decision was reached: "minors-ideal" (authoritative),
    /// "closure-heuristic", or "point-sample".
    std::string method = "minors-ideal";

    bool regular() const { return alpha_injective_everywhere && beta_surjective_everywhere; }
};

/// Decide global regularity via the minor ideals of alpha and beta.
/// Precondition mu = 0 is checked; violation throws std::invalid_argument.
/// Gröbner resource exhaustion surfaces as ResourceCapError.
RegularityReport global_regularity(const ScalarAdhm& datum, const GroebnerLimits& limits = {});

/// Exact ranks (rank alpha_p, rank beta_p) of the fibre maps at a projective
/// point p (length n+1, not all zero).  Injectivity at p means rank alpha_p
/// = c; surjectivity means rank beta_p = c.
std::pair<std::size_t, std::size_t> fibre_ranks(const ScalarAdhm& datum,
                                                const std::vector<GaussRational>& p);

/// Fast screen: (closure_full, core_zero) where closure_full says the
/// invariant closure of im I under all A_k, B_k is all of V and core_zero
/// says the largest A/B-invariant subspace of the common kernel of the J_k is
/// zero.  Either flag false implies the datum is not regular; the converse is
/// not decided here.
std::pair<bool, bool> closure_check(const ScalarAdhm& datum);

/// For a charge-1 self-dual monad row: the scalar beta(p) · beta(q)^T.  Zero
/// means the bundle restricted to the line through p and q is non-trivial.
GaussRational line_triviality_det(const PolyMatrix& beta_row, const CoordSystem& coords,
                                  const std::vector<GaussRational>& p,
                                  const std::vector<GaussRational>& q);

/// Triviality of the restriction to the distinguished line z_0 = ... =
/// z_{n-2} = 0, verified through full fibre ranks at [1:0:...:0] and
/// [0:1:0:...:0].  Preconditions mu = 0 and global regularity are enforced
/// (std::invalid_argument otherwise); for every regular datum the result is
/// true.
bool distinguished_line_triviality(const ScalarAdhm& datum, const GroebnerLimits& limits = {});

/// c×c minors of a polynomial matrix, streamed, deduplicated, and made monic;
/// zero minors are dropped.  These are the generator sets the regularity
/// decision feeds to projective_empty.
std::vector<Poly> minor_ideal_generators(const PolyMatrix& m, std::size_t size);

}  // namespace instanton
