// instanton-verify: exact computer algebra for framed autodual instanton data.
// Distributed under the MIT license; see LICENSE in the repository root.

#include "instanton/regularity.hpp"

#include <algorithm>
#include <set>
#include <stdexcept>

namespace instanton {

std::vector<Poly> minor_ideal_generators(const PolyMatrix& m, std::size_t size) {
    std::vector<Poly> gens;
    std::set<std::string> seen;
    minors_foreach(m, size,
                   [&](Poly d, const std::vector<std::size_t>&, const std::vector<std::size_t>&) {
                       if (!d.is_zero()) {
                           Poly p = d.monic();
                           if (seen.insert(p.to_string()).second) gens.push_back(std::move(p));
                       }
                       return true;
                   });
    return gens;
}

namespace {

std::vector<std::optional<GaussRational>> point_assignment(const CoordSystem& coords,
                                                           const std::vector<GaussRational>& p) {
    std::vector<std::optional<GaussRational>> asg(coords.ring->nvars());
    asg[coords.x] = p[0];
    asg[coords.y] = p[1];
    for (std::size_t k = 0; k < coords.z.size(); ++k) asg[coords.z[k]] = p[2 + k];
    return asg;
}

void check_point(const ScalarAdhm& datum, const std::vector<GaussRational>& p) {
    if (p.size() != datum.n + 1)
        throw std::invalid_argument("projective point needs n+1 coordinates");
    if (std::all_of(p.begin(), p.end(), [](const GaussRational& v) { return v.is_zero(); }))
        throw std::invalid_argument("projective point must be nonzero");
}

/// Coordinate values worth trying when hunting a rank-deficiency witness:
/// small constants plus the (negated) entries of the datum blocks, which is
/// where fibre maps of small shapes actually drop rank.
std::vector<GaussRational> candidate_values(const ScalarAdhm& datum) {
    std::vector<GaussRational> out;
    std::set<std::string> seen;
    auto push = [&](const GaussRational& v) {
        if (seen.insert(v.to_string()).second) out.push_back(v);
    };
    push(GaussRational(BigRational(0)));
    push(GaussRational(BigRational(1)));
    push(GaussRational(BigRational(-1)));
    push(GaussRational(BigRational(0), BigRational(1)));
    push(GaussRational(BigRational(0), BigRational(-1)));
    for (const auto* blocks : {&datum.A, &datum.B}) {
        for (const auto& m : *blocks) {
            for (std::size_t i = 0; i < m.rows(); ++i) {
                for (std::size_t j = 0; j < m.cols(); ++j) {
                    push(m.at(i, j));
                    push(-m.at(i, j));
                }
            }
        }
    }
    return out;
}

/// Chart-by-chart bounded search for a point where `side` has rank < c: one
/// coordinate is pinned to 1 and the rest range over the candidate list.
std::optional<std::vector<GaussRational>> find_rank_deficient(
    const PolyMatrix& side, const CoordSystem& coords, std::size_t c,
    const std::vector<GaussRational>& candidates) {
    const std::size_t m = coords.n() + 1;
    std::vector<GaussRational> point(m, GaussRational(BigRational(0)));
    for (std::size_t chart = 0; chart < m; ++chart) {
        std::vector<std::size_t> free_pos;
        for (std::size_t k = 0; k < m; ++k)
            if (k != chart) free_pos.push_back(k);
        std::vector<std::size_t> idx(free_pos.size(), 0);
        for (;;) {
            for (std::size_t k = 0; k < m; ++k) point[k] = GaussRational(BigRational(0));
            point[chart] = GaussRational(BigRational(1));
            for (std::size_t t = 0; t < free_pos.size(); ++t)
                point[free_pos[t]] = candidates[idx[t]];
            const auto asg = point_assignment(coords, point);
            if (rank(evaluate_matrix(side, asg)) < c) return point;
            std::size_t t = 0;
            while (t < idx.size() && ++idx[t] == candidates.size()) idx[t++] = 0;
            if (t == idx.size()) break;
        }
    }
    return std::nullopt;
}

}  // namespace

RegularityReport global_regularity(const ScalarAdhm& datum, const GroebnerLimits& limits) {
    datum.validate();
    if (!mu_is_zero(datum))
        throw std::invalid_argument("global_regularity: the ADHM equation mu = 0 fails");
    const CoordSystem coords = make_coordinates(datum.n);
    const Monad monad = build_monad(datum, coords);
    const std::size_t c = datum.c;

    RegularityReport rep;
    rep.method = "minors-ideal";
    const std::vector<Poly> alpha_gens = minor_ideal_generators(monad.alpha, c);
    const std::vector<Poly> beta_gens = minor_ideal_generators(monad.beta, c);
    rep.alpha_injective_everywhere = projective_empty(alpha_gens, coords.all(), limits);
    rep.beta_surjective_everywhere = projective_empty(beta_gens, coords.all(), limits);

    if (!rep.regular()) {
        const auto candidates = candidate_values(datum);
        std::optional<std::vector<GaussRational>> witness;
        if (!rep.alpha_injective_everywhere)
            witness = find_rank_deficient(monad.alpha, coords, c, candidates);
        if (!witness && !rep.beta_surjective_everywhere)
            witness = find_rank_deficient(monad.beta, coords, c, candidates);
        if (witness) {
            const auto [ra, rb] = fibre_ranks(datum, *witness);
            if (ra >= c && rb >= c)
                throw std::logic_error("regularity witness failed its re-check");
            rep.failure_witness = normalize_projective(*witness);
        } else {
            rep.failure_over_closure_only = true;
        }
    }
    return rep;
}

std::pair<std::size_t, std::size_t> fibre_ranks(const ScalarAdhm& datum,
                                                const std::vector<GaussRational>& p) {
    datum.validate();
    check_point(datum, p);
    const CoordSystem coords = make_coordinates(datum.n);
    const Monad monad = build_monad(datum, coords);
    const auto asg = point_assignment(coords, p);
    return {rank(evaluate_matrix(monad.alpha, asg)), rank(evaluate_matrix(monad.beta, asg))};
}

std::pair<bool, bool> closure_check(const ScalarAdhm& datum) {
    datum.validate();
    std::vector<ScalarMatrix> mats;
    for (std::size_t k = 0; k + 1 < datum.n; ++k) {
        mats.push_back(datum.A[k]);
        mats.push_back(datum.B[k]);
    }

    Subspace image(datum.c);
    for (const auto& i_blk : datum.I) {
        for (std::size_t j = 0; j < i_blk.cols(); ++j) {
            std::vector<GaussRational> col;
            for (std::size_t row = 0; row < i_blk.rows(); ++row) col.push_back(i_blk.at(row, j));
            image.add(std::move(col));
        }
    }
    const bool closure_full = invariant_closure(mats, image).dimension() == datum.c;

    ScalarMatrix stacked = datum.J[0];
    for (std::size_t k = 1; k + 1 < datum.n; ++k) stacked = vstack(stacked, datum.J[k]);
    const bool core_zero = invariant_core(mats, null_space(stacked)).dimension() == 0;
    return {closure_full, core_zero};
}

GaussRational line_triviality_det(const PolyMatrix& beta_row, const CoordSystem& coords,
                                  const std::vector<GaussRational>& p,
                                  const std::vector<GaussRational>& q) {
    if (beta_row.rows() != 1)
        throw std::invalid_argument("line_triviality_det: a single monad row is required");
    const std::size_t m = coords.n() + 1;
    if (p.size() != m || q.size() != m)
        throw std::invalid_argument("line_triviality_det: points need n+1 coordinates");
    if (normalize_projective(p) == normalize_projective(q))
        throw std::invalid_argument("line_triviality_det: points must be distinct");
    const ScalarMatrix bp = evaluate_matrix(beta_row, point_assignment(coords, p));
    const ScalarMatrix bq = evaluate_matrix(beta_row, point_assignment(coords, q));
    return (bp * bq.transpose()).at(0, 0);
}

bool distinguished_line_triviality(const ScalarAdhm& datum, const GroebnerLimits& limits) {
    const RegularityReport rep = global_regularity(datum, limits);
    if (!rep.regular())
        throw std::invalid_argument("distinguished_line_triviality: datum is not regular");
    std::vector<GaussRational> e1(datum.n + 1, GaussRational(BigRational(0)));
    std::vector<GaussRational> e2 = e1;
    e1[0] = GaussRational(BigRational(1));
    e2[1] = GaussRational(BigRational(1));
    const auto [ra1, rb1] = fibre_ranks(datum, e1);
    const auto [ra2, rb2] = fibre_ranks(datum, e2);
    return ra1 == datum.c && rb1 == datum.c && ra2 == datum.c && rb2 == datum.c;
}

}  // namespace instanton
