#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "instanton/regularity.hpp"

using namespace instanton;

namespace {

GaussRational gq(long v) { return GaussRational(BigRational(v)); }
GaussRational gi(long v) { return GaussRational(BigRational(0), BigRational(v)); }

ScalarAdhm charge1_datum() {
    ScalarAdhm d;
    d.n = 2;
    d.r = 2;
    d.c = 1;
    d.A = {ScalarMatrix(1, 1, gq(0))};
    d.B = {ScalarMatrix(1, 1, gq(0))};
    d.I = {ScalarMatrix::from_rows({{gq(1), gq(0)}})};
    d.J = {ScalarMatrix::from_rows({{gq(0)}, {gq(1)}})};
    return d;
}

}  // namespace

TEST_CASE("charge-1 rank-2 datum is globally regular") {
    const ScalarAdhm c1 = charge1_datum();
    const RegularityReport rep = global_regularity(c1);
    CHECK(rep.alpha_injective_everywhere);
    CHECK(rep.beta_surjective_everywhere);
    CHECK(rep.regular());
    CHECK(!rep.failure_witness.has_value());
    CHECK(!rep.failure_over_closure_only);
    CHECK(rep.method == "minors-ideal");

    const auto [ra, rb] = fibre_ranks(c1, {gq(1), gq(0), gq(0)});
    CHECK(ra == 1);
    CHECK(rb == 1);

    const auto screen = closure_check(c1);
    CHECK(screen.first);
    CHECK(screen.second);

    CHECK(distinguished_line_triviality(c1));
}

TEST_CASE("the all-zero datum fails on both sides with a rational witness") {
    ScalarAdhm zero;
    zero.n = 2;
    zero.r = 1;
    zero.c = 1;
    zero.A = {ScalarMatrix(1, 1, gq(0))};
    zero.B = {ScalarMatrix(1, 1, gq(0))};
    zero.I = {ScalarMatrix(1, 1, gq(0))};
    zero.J = {ScalarMatrix(1, 1, gq(0))};

    const RegularityReport rep = global_regularity(zero);
    CHECK(!rep.regular());
    REQUIRE(rep.failure_witness.has_value());
    const auto [ra, rb] = fibre_ranks(zero, *rep.failure_witness);
    CHECK((ra < 1 || rb < 1));

    const auto [zra, zrb] = fibre_ranks(zero, {gq(0), gq(0), gq(1)});
    CHECK(zra == 0);
    CHECK(zrb == 0);

    CHECK_THROWS_AS(distinguished_line_triviality(zero), std::invalid_argument);
}

TEST_CASE("an isotropic orthogonal solution of the equation need not be regular") {
    ScalarAdhm d;
    d.n = 2;
    d.r = 2;
    d.c = 2;
    d.A = {identity_matrix(2)};
    d.B = {identity_matrix(2).scaled(gq(2))};
    d.I = {ScalarMatrix::from_rows({{gq(1), gi(1)}, {gq(0), gq(0)}})};
    const ScalarMatrix G = omega_matrix(2);
    const ScalarMatrix H = identity_matrix(2);
    d.J = {-(inverse(H) * d.I[0].transpose() * G)};

    CHECK(mu_is_zero(d));
    const ScalarExtended ext{d, G, H};
    CHECK(classify_structure(ext) == StructureKind::Orthogonal);

    const RegularityReport rep = global_regularity(d);
    CHECK(!rep.regular());
    REQUIRE(rep.failure_witness.has_value());
    const auto [ra, rb] = fibre_ranks(d, *rep.failure_witness);
    CHECK((ra < 2 || rb < 2));

    const auto screen = closure_check(d);
    CHECK(!screen.first);  // im I is not A/B-cyclic, so the screen flags it
}

TEST_CASE("regularity requires the ADHM equation") {
    ScalarAdhm d = charge1_datum();
    d.I = {ScalarMatrix::from_rows({{gq(1), gq(1)}})};  // now I*J = 1 != 0
    CHECK(!mu_is_zero(d));
    CHECK_THROWS_AS(global_regularity(d), std::invalid_argument);
}

TEST_CASE("resource caps stop the decision loudly") {
    GroebnerLimits limits;
    limits.max_basis = 1;
    CHECK_THROWS_AS(global_regularity(charge1_datum(), limits), ResourceCapError);
}

TEST_CASE("fibre_ranks validates the point") {
    const ScalarAdhm c1 = charge1_datum();
    CHECK_THROWS_AS(fibre_ranks(c1, {gq(1), gq(0)}), std::invalid_argument);  // length 2 != 3
    CHECK_THROWS_AS(fibre_ranks(c1, {gq(0), gq(0), gq(0)}), std::invalid_argument);
}

TEST_CASE("line triviality determinant on explicit rows") {
    const CoordSystem coords = make_coordinates(2);
    const Poly x = Poly::variable(coords.ring, coords.x);
    const Poly y = Poly::variable(coords.ring, coords.y);
    const Poly z = Poly::variable(coords.ring, coords.z[0]);

    const PolyMatrix toy = PolyMatrix::from_rows({{x, y, z}});
    CHECK(line_triviality_det(toy, coords, {gq(1), gq(0), gq(0)}, {gq(0), gq(1), gq(0)})
              .is_zero());
    CHECK(line_triviality_det(toy, coords, {gq(1), gq(0), gq(0)}, {gq(1), gq(1), gq(0)}) ==
          gq(1));

    // A row pairing to zero against itself under the symmetric form vanishes
    // for every pair of points.
    const Poly iu = Poly::constant(coords.ring, gi(1));
    const PolyMatrix iso = PolyMatrix::from_rows({{x, y, z, iu * x, iu * y, iu * z}});
    CHECK(line_triviality_det(iso, coords, {gq(1), gq(2), gq(3)}, {gq(-1), gq(5), gq(7)})
              .is_zero());
}

TEST_CASE("minor ideal generators are monic, deduplicated, and nonzero") {
    const CoordSystem coords = make_coordinates(2);
    const Poly x = Poly::variable(coords.ring, coords.x);
    const Poly y = Poly::variable(coords.ring, coords.y);
    const Poly zero = Poly::zero(coords.ring);
    const Poly two = parse_poly("2", coords.ring);

    const PolyMatrix m = PolyMatrix::from_rows({{x, two * x, zero, y}});
    const auto gens = minor_ideal_generators(m, 1);
    REQUIRE(gens.size() == 2);  // x twice (made monic), zero dropped, y once
    CHECK(((gens[0] == x && gens[1] == y) || (gens[0] == y && gens[1] == x)));
}
