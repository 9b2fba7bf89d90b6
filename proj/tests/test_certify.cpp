#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "instanton/certify.hpp"

#include <string>

using namespace instanton;

namespace {

GaussRational gq(long num, unsigned long den = 1) {
    return GaussRational(BigRational(num, den));
}

std::string all_evidence(const Certificate& cert) {
    std::string out;
    for (const auto& s : cert.steps) {
        out += s.evidence;
        out += '\n';
    }
    return out;
}

}  // namespace

TEST_CASE("every certificate id runs and passes") {
    for (const std::string& id : certificate_ids()) {
        CAPTURE(id);
        const Certificate cert = run_certificate(id);
        CHECK(cert.id == id);
        CHECK(cert.pass());
        CHECK(!cert.steps.empty());
        for (const auto& s : cert.steps) {
            CAPTURE(s.description);
            CHECK(s.ok);
        }

        const nlohmann::json doc = certificate_to_json(cert);
        CHECK(doc["id"] == id);
        CHECK(doc["verdict"] == "pass");
        CHECK(doc["steps"].size() == cert.steps.size());
        for (const auto& s : doc["steps"]) {
            CHECK(s.contains("description"));
            CHECK(s.contains("ok"));
            CHECK(s.contains("evidence"));
            CHECK(s.contains("millis"));
        }

        const std::string text = certificate_to_text(cert);
        CHECK(text.find(id + ": PASS") == 0);
        CHECK(text.find("[FAIL]") == std::string::npos);
    }
    CHECK_THROWS_AS(run_certificate("no-such-certificate"), std::invalid_argument);
}

TEST_CASE("certificate evidence is deterministic across runs") {
    for (const std::string& id : {std::string("odd-charge"), std::string("dimensions"),
                                  std::string("chern")}) {
        const Certificate a = run_certificate(id);
        const Certificate b = run_certificate(id);
        REQUIRE(a.steps.size() == b.steps.size());
        for (std::size_t k = 0; k < a.steps.size(); ++k) {
            CHECK(a.steps[k].description == b.steps[k].description);
            CHECK(a.steps[k].evidence == b.steps[k].evidence);
        }
    }
}

TEST_CASE("ideal fingerprints in the certificates match their frozen values") {
    // These strings pin down the reduced Gröbner bases (size, max degree, and
    // a 64-bit hash of the canonical generator strings).  Any change to the
    // engine's normal forms or to the generator sets shows up here first.
    const std::string a = all_evidence(run_certificate("appendix-a"));
    CHECK(a.find("size=12;maxdeg=3;fnv=52e149a85fc5a43d") != std::string::npos);

    const std::string b = all_evidence(run_certificate("appendix-b"));
    CHECK(b.find("size=5;maxdeg=2;fnv=4948e8502613d8c1") != std::string::npos);
    CHECK(b.find("size=9;maxdeg=3;fnv=5a1807524b8ee025") != std::string::npos);
    CHECK(b.find("size=8;maxdeg=1;fnv=bfa79556367a50b3") != std::string::npos);

    const std::string e = all_evidence(run_certificate("rank2-charge2"));
    CHECK(e.find("size=9;maxdeg=3;fnv=d639084d9befb9b6") != std::string::npos);
}

TEST_CASE("charge-1 certificates cover each ambient dimension") {
    for (std::size_t n : {2, 3, 4}) {
        const Certificate cert = certify_charge1_example(n);
        CHECK(cert.pass());
        const std::string ev = all_evidence(cert);
        CHECK(ev.find("rank " + std::to_string(2 * n)) != std::string::npos);
    }
}

TEST_CASE("moduli dimension formulas and their domain fences") {
    CHECK(moduli_dimension(StructureKind::Symplectic, "p2", 2, 1) == 1);
    CHECK(moduli_dimension(StructureKind::Symplectic, "p2", 2, 2) == 5);
    CHECK(moduli_dimension(StructureKind::Symplectic, "p2", 4, 3) == 8);
    CHECK(moduli_dimension(StructureKind::Symplectic, "p2", 6, 4) == 11);
    CHECK(moduli_dimension(StructureKind::Symplectic, "p3", 2, 1) == 5);
    CHECK(moduli_dimension(StructureKind::Symplectic, "p3", 2, 3) == 21);
    CHECK(moduli_dimension(StructureKind::Symplectic, "p3", 2, 10) == 77);
    CHECK(moduli_dimension(StructureKind::Orthogonal, "p2", 4, 4) == 2);
    CHECK(moduli_dimension(StructureKind::Orthogonal, "p2", 5, 5) == 5);
    CHECK(moduli_dimension(StructureKind::Orthogonal, "p2", 7, 8) == 19);

    // The formulas are not extrapolated beyond their proven ranges.
    CHECK_THROWS_AS(moduli_dimension(StructureKind::Symplectic, "p2", 3, 2),
                    std::invalid_argument);  // odd rank
    CHECK_THROWS_AS(moduli_dimension(StructureKind::Symplectic, "p3", 4, 2),
                    std::invalid_argument);  // only rank 2 on p3
    CHECK_THROWS_AS(moduli_dimension(StructureKind::Orthogonal, "p3", 4, 4),
                    std::invalid_argument);
    CHECK_THROWS_AS(moduli_dimension(StructureKind::Orthogonal, "p2", 3, 3),
                    std::invalid_argument);  // r = c needs c >= 4
    CHECK_THROWS_AS(moduli_dimension(StructureKind::Orthogonal, "p2", 6, 7),
                    std::invalid_argument);  // r = c-1 needs c >= 8
    CHECK_THROWS_AS(moduli_dimension(StructureKind::Autodual, "p2", 2, 2),
                    std::invalid_argument);
    CHECK_THROWS_AS(moduli_dimension(StructureKind::Symplectic, "p4", 2, 2),
                    std::invalid_argument);
}

TEST_CASE("exact square roots in Q(i)") {
    CHECK(gauss_sqrt(gq(4)) == gq(2));
    CHECK(gauss_sqrt(gq(0)) == gq(0));
    CHECK(gauss_sqrt(gq(1, 4)) == gq(1, 2));
    CHECK(gauss_sqrt(gq(-9)) == GaussRational(BigRational(0), BigRational(3)));
    CHECK(!gauss_sqrt(gq(2)).has_value());
    CHECK(!gauss_sqrt(GaussRational::i()).has_value());

    const GaussRational two_i(BigRational(0), BigRational(2));
    const auto root = gauss_sqrt(two_i);
    REQUIRE(root.has_value());
    CHECK(*root * *root == two_i);
    const auto root_neg = gauss_sqrt(-two_i);
    REQUIRE(root_neg.has_value());
    CHECK(*root_neg * *root_neg == -two_i);
}

TEST_CASE("the bounded search finds the isotropic-column datum on p3") {
    const auto witness = search_witness("p3-rank4-charge2", 1, 0);
    REQUIRE(witness.has_value());
    const ScalarExtended& ext = *witness;
    CHECK(ext.datum.n == 3);
    CHECK(ext.datum.r == 4);
    CHECK(ext.datum.c == 2);
    CHECK(ext.G == omega_matrix(2));
    CHECK(ext.H == identity_matrix(4));

    // Re-verify the full stack independently of the search's own checks.
    CHECK(mu_is_zero(ext.datum));
    CHECK(!duality_violation(ext).has_value());
    CHECK(autodual_compatibility(ext));
    CHECK(classify_structure(ext) == StructureKind::Orthogonal);
    CHECK(global_regularity(ext.datum).regular());
    CHECK(distinguished_line_triviality(ext.datum));

    // Determinism: the same seed finds the same datum.
    const auto again = search_witness("p3-rank4-charge2", 1, 0);
    REQUIRE(again.has_value());
    CHECK(again->datum.I == ext.datum.I);
    CHECK(again->datum.J == ext.datum.J);
}

TEST_CASE("the p2-charge4 search honestly reports failure") {
    CHECK(!search_witness("p2-charge4", 2, 1).has_value());
    CHECK_THROWS_AS(search_witness("p2-charge4", 0, 1), std::invalid_argument);
    CHECK_THROWS_AS(search_witness("p5-mystery", 1, 1), std::invalid_argument);
}
