// instanton-verify: exact computer algebra for framed autodual instanton data.
// Distributed under the MIT license; see LICENSE in the repository root.

#include "instanton/certify.hpp"

#include <array>
#include <chrono>
#include <cstdio>
#include <random>
#include <sstream>
#include <utility>

namespace instanton {

namespace {

using Clock = std::chrono::steady_clock;

double ms_since(Clock::time_point t0) {
    return std::chrono::duration<double, std::milli>(Clock::now() - t0).count();
}

/// Runs body() -> (ok, evidence) as a timed certificate step.
template <typename Fn>
void add_step(Certificate& cert, const std::string& description, Fn&& body) {
    const auto t0 = Clock::now();
    auto [ok, evidence] = body();
    CertificateStep step;
    step.description = description;
    step.ok = ok;
    step.evidence = std::move(evidence);
    step.millis = ms_since(t0);
    cert.total_millis += step.millis;
    cert.steps.push_back(std::move(step));
}

PolyMatrix matrix_of(const RingPtr& ring, std::vector<std::vector<std::string>> rows) {
    std::vector<std::vector<Poly>> out;
    for (auto& r : rows) {
        out.emplace_back();
        for (auto& s : r) out.back().push_back(parse_poly(s, ring));
    }
    return PolyMatrix::from_rows(std::move(out));
}

std::vector<Poly> parse_all(const RingPtr& ring, const std::vector<std::string>& texts) {
    std::vector<Poly> out;
    out.reserve(texts.size());
    for (const auto& t : texts) out.push_back(parse_poly(t, ring));
    return out;
}

long long binom(long long n, long long k) {
    if (k < 0 || k > n) return 0;
    long long acc = 1;
    for (long long j = 1; j <= k; ++j) acc = acc * (n - k + j) / j;
    return acc;
}

GaussRational gq(long v) { return GaussRational(BigRational(v)); }

std::string fmt_ms(double ms) {
    char buf[32];
    std::snprintf(buf, sizeof buf, "%.1f", ms);
    return buf;
}

}  // namespace

// ---------------------------------------------------------------------------
// Report plumbing
// ---------------------------------------------------------------------------

nlohmann::json certificate_to_json(const Certificate& cert) {
    nlohmann::json doc;
    doc["id"] = cert.id;
    doc["verdict"] = cert.pass() ? "pass" : "fail";
    doc["total_millis"] = cert.total_millis;
    doc["steps"] = nlohmann::json::array();
    for (const auto& s : cert.steps) {
        doc["steps"].push_back({{"description", s.description},
                                {"ok", s.ok},
                                {"evidence", s.evidence},
                                {"millis", s.millis}});
    }
    return doc;
}

std::string certificate_to_text(const Certificate& cert) {
    std::ostringstream out;
    out << cert.id << ": " << (cert.pass() ? "PASS" : "FAIL") << " (" << fmt_ms(cert.total_millis)
        << " ms)\n";
    for (const auto& s : cert.steps) {
        out << "  [" << (s.ok ? "ok" : "FAIL") << "] " << s.description << " ("
            << fmt_ms(s.millis) << " ms)\n";
        if (!s.evidence.empty()) out << "        " << s.evidence << "\n";
    }
    return out.str();
}

const std::vector<std::string>& certificate_ids() {
    static const std::vector<std::string> ids = {
        "odd-charge", "rank2-charge2", "charge1-example", "appendix-a",
        "appendix-b", "dimensions",    "chern"};
    return ids;
}

Certificate run_certificate(const std::string& id, const GroebnerLimits& limits,
                            std::uint64_t seed) {
    (void)seed;  // every certificate is deterministic; seed only feeds searches
    if (id == "odd-charge") return certify_odd_charge(7);
    if (id == "rank2-charge2") return certify_rank2_charge2(limits);
    if (id == "charge1-example") return certify_charge1_suite();
    if (id == "appendix-a") return certify_appendix_a(limits);
    if (id == "appendix-b") return certify_appendix_b(limits);
    if (id == "dimensions") return certify_dimensions();
    if (id == "chern") return certify_chern();
    throw std::invalid_argument("unknown certificate id: " + id);
}

// ---------------------------------------------------------------------------
// odd-charge
// ---------------------------------------------------------------------------

Certificate certify_odd_charge(std::size_t c_max) {
    if (c_max < 1) throw std::invalid_argument("certify_odd_charge: c_max >= 1 required");
    Certificate cert;
    cert.id = "odd-charge";
    for (std::size_t c = 1; c <= c_max; ++c) {
        if (c % 2 == 1) {
            const std::size_t nv = c * (c - 1) / 2;
            std::vector<std::string> names;
            for (std::size_t k = 0; k < std::max<std::size_t>(nv, 1); ++k)
                names.push_back("u_" + std::to_string(k));
            const RingPtr ring = PolyRing::create(names);
            PolyMatrix s(c, c, Poly::zero(ring));
            std::size_t k = 0;
            for (std::size_t i = 0; i < c; ++i) {
                for (std::size_t j = i + 1; j < c; ++j, ++k) {
                    s.at(i, j) = Poly::variable(ring, k);
                    s.at(j, i) = -s.at(i, j);
                }
            }
            add_step(cert,
                     "charge " + std::to_string(c) +
                         ": generic antisymmetric determinant is identically zero, so no "
                         "invertible antisymmetric form exists",
                     [&] {
                         const Poly det = det_laplace(s);
                         return std::pair{det.is_zero(),
                                          std::to_string(nv) +
                                              "-parameter symbolic determinant expanded to 0"};
                     });
        } else {
            add_step(cert,
                     "charge " + std::to_string(c) +
                         ": Omega is an invertible antisymmetric witness",
                     [&] {
                         const ScalarMatrix om = omega_matrix(c);
                         const bool skew = (om + om.transpose()).is_zero();
                         const GaussRational det = det_gauss(om);
                         const bool inv = (om * inverse(om)) == identity_matrix(c);
                         return std::pair{skew && det.is_one() && inv,
                                          std::string("det(Omega) = ") + det.to_string()};
                     });
        }
    }
    return cert;
}

// ---------------------------------------------------------------------------
// rank2-charge2
// ---------------------------------------------------------------------------

namespace {

/// Null space of M -> G M - M^T G for G = Omega_2, as a 4x4 linear system on
/// vec(M) (row-major).
Subspace omega2_symmetry_solutions() {
    const ScalarMatrix g = omega_matrix(2);
    ScalarMatrix l(4, 4, gq(0));
    for (std::size_t i = 0; i < 2; ++i) {
        for (std::size_t j = 0; j < 2; ++j) {
            ScalarMatrix e(2, 2, gq(0));
            e.at(i, j) = gq(1);
            const ScalarMatrix res = g * e - e.transpose() * g;
            for (std::size_t p = 0; p < 2; ++p)
                for (std::size_t q = 0; q < 2; ++q) l.at(2 * p + q, 2 * i + j) = res.at(p, q);
        }
    }
    return null_space(l);
}

}  // namespace

Certificate certify_rank2_charge2(const GroebnerLimits& limits) {
    Certificate cert;
    cert.id = "rank2-charge2";

    for (const char* block : {"A", "B"}) {
        add_step(cert,
                 std::string("the constraint G*") + block + " = " + block +
                     "^T*G for G = Omega_2 has solution space exactly span{Id}",
                 [&] {
                     const Subspace sol = omega2_symmetry_solutions();
                     const bool ok = sol.dimension() == 1 &&
                                     sol.contains({gq(1), gq(0), gq(0), gq(1)});
                     return std::pair{ok, std::string("solution dimension ") +
                                              std::to_string(sol.dimension()) +
                                              ", contains vec(Id)"};
                 });
    }

    const RingPtr ring8 =
        PolyRing::create({"i_1", "i_2", "i_3", "i_4", "j_1", "j_2", "j_3", "j_4"});
    const PolyMatrix im = matrix_of(ring8, {{"i_1", "i_2"}, {"i_3", "i_4"}});
    const PolyMatrix jm = matrix_of(ring8, {{"j_1", "j_2"}, {"j_3", "j_4"}});
    const PolyMatrix g2 = matrix_of(ring8, {{"0", "1"}, {"-1", "0"}});
    const Poly det_i = parse_poly("i_1*i_4-i_2*i_3", ring8);
    const Poly det_j = parse_poly("j_1*j_4-j_2*j_3", ring8);
    std::vector<Poly> egens;
    const PolyMatrix prod = im * jm;
    const PolyMatrix dual = g2 * im - jm.transpose();  // H = Id
    for (std::size_t i = 0; i < 2; ++i) {
        for (std::size_t j = 0; j < 2; ++j) {
            egens.push_back(prod.at(i, j));
            egens.push_back(dual.at(i, j));
        }
    }

    add_step(cert,
             "with A, B scalar the equation reads I*J = 0; together with G*I = J^T*H it forces "
             "det(I) and det(J) into the radical (rank <= 1), while det(I) itself is not in the "
             "ideal",
             [&] {
                 const GroebnerBasis gb = GroebnerBasis::compute(egens, limits);
                 const bool sq_in = ideal_member(det_i * det_i, gb, limits).member;
                 const bool not_in = !ideal_member(det_i, gb, limits).member;
                 const bool rad_i = radical_member(det_i, egens, limits);
                 const bool rad_j = radical_member(det_j, egens, limits);
                 return std::pair{sq_in && not_in && rad_i && rad_j,
                                  "det(I)^2 in E, det(I) not in E, det(I) and det(J) in rad(E); "
                                  "basis " +
                                      gb.fingerprint()};
             });

    add_step(cert,
             "solving the duality constraint gives J = [[i_3,-i_1],[i_4,-i_2]]; I*J reduces to "
             "three quadrics satisfying the two-squares identity",
             [&] {
                 const PolyMatrix jsub =
                     matrix_of(ring8, {{"i_3", "-i_1"}, {"i_4", "-i_2"}});
                 const bool solves = (g2 * im - jsub.transpose()).is_zero();
                 const PolyMatrix p = im * jsub;
                 const Poly q1 = parse_poly("i_1*i_3+i_2*i_4", ring8);
                 const Poly q2 = parse_poly("i_1^2+i_2^2", ring8);
                 const Poly q3 = parse_poly("i_3^2+i_4^2", ring8);
                 const bool entries = p.at(0, 0) == q1 && p.at(0, 1) == -q2 &&
                                      p.at(1, 0) == q3 && p.at(1, 1) == -q1;
                 const Poly det_sub = parse_poly("i_1*i_4-i_2*i_3", ring8);
                 const bool two_squares = det_sub * det_sub == q2 * q3 - q1 * q1;
                 return std::pair{solves && entries && two_squares,
                                  "I*J = [[q1, -q2], [q3, -q1]], det^2 = q2*q3 - q1^2"};
             });

    add_step(cert,
             "at the point with x = a, y = b, z = -1 the fibre maps reduce to (0; 0; -J) and "
             "(0, 0, -I); every 2x2 minor lies in the radical of the equation ideal, so both "
             "ranks are at most 1 < c = 2",
             [&] {
                 const RingPtr ring6 = PolyRing::create({"a", "b", "i_1", "i_2", "i_3", "i_4"});
                 const Poly a = Poly::variable(ring6, 0);
                 const Poly b = Poly::variable(ring6, 1);
                 const PolyMatrix ablock =
                     matrix_of(ring6, {{"a", "0"}, {"0", "a"}});  // A = a*Id
                 const PolyMatrix bblock = matrix_of(ring6, {{"b", "0"}, {"0", "b"}});
                 const PolyMatrix ip = matrix_of(ring6, {{"i_1", "i_2"}, {"i_3", "i_4"}});
                 const PolyMatrix jp = matrix_of(ring6, {{"i_3", "-i_1"}, {"i_4", "-i_2"}});
                 // alpha_p blocks: A*z + x*Id and B*z + y*Id at (x, y, z) = (a, b, -1).
                 PolyMatrix top = -ablock;
                 PolyMatrix mid = -bblock;
                 for (std::size_t k = 0; k < 2; ++k) {
                     top.at(k, k) = top.at(k, k) + a;
                     mid.at(k, k) = mid.at(k, k) + b;
                 }
                 const std::vector<Poly> quads = parse_all(
                     ring6, {"i_1*i_3+i_2*i_4", "i_1^2+i_2^2", "i_3^2+i_4^2"});
                 const Poly minor_alpha = det_laplace(-jp);
                 const Poly minor_beta = det_laplace(-ip);
                 const bool blocks_zero = top.is_zero() && mid.is_zero();
                 const bool rad_a = radical_member(minor_alpha, quads, limits);
                 const bool rad_b = radical_member(minor_beta, quads, limits);
                 return std::pair{blocks_zero && rad_a && rad_b,
                                  "upper blocks vanish identically; det(J), det(I) in the "
                                  "radical of the I*J quadrics"};
             });

    return cert;
}

// ---------------------------------------------------------------------------
// charge1-example
// ---------------------------------------------------------------------------

Certificate certify_charge1_example(std::size_t n) {
    if (n < 2) throw std::invalid_argument("certify_charge1_example: n >= 2 required");
    Certificate cert;
    cert.id = "charge1-example";
    const CoordSystem coords = make_coordinates(n);
    const Poly iu = Poly::constant(coords.ring, GaussRational::i());
    std::vector<Poly> row;
    for (std::size_t v : coords.all()) row.push_back(Poly::variable(coords.ring, v));
    const std::size_t m = row.size();
    for (std::size_t k = 0; k < m; ++k) row.push_back(iu * row[k]);
    const PolyMatrix beta = PolyMatrix::from_rows({row});
    const PolyMatrix alpha = beta.transpose();

    add_step(cert, "beta * beta^T vanishes identically (the monad condition for c = 1)", [&] {
        const Poly v = (beta * alpha).at(0, 0);
        return std::pair{v.is_zero(), "sum of x_k^2 + (i x_k)^2 expands to 0"};
    });

    add_step(cert, "full fibre rank 1 at every coordinate point", [&] {
        bool ok = true;
        for (std::size_t k = 0; k < m; ++k) {
            std::vector<GaussRational> p(m, gq(0));
            p[k] = gq(1);
            std::vector<std::optional<GaussRational>> asg(m);
            const auto all = coords.all();
            for (std::size_t t = 0; t < m; ++t) asg[all[t]] = p[t];
            if (rank(evaluate_matrix(beta, asg)) != 1) ok = false;
        }
        return std::pair{ok, std::to_string(m) + " coordinate points checked"};
    });

    add_step(cert,
             "the line determinant beta(p) * beta(q)^T is the zero polynomial in the "
             "coordinates of both points",
             [&] {
                 std::vector<std::string> names;
                 for (std::size_t k = 0; k < m; ++k) names.push_back("x_" + std::to_string(k));
                 for (std::size_t k = 0; k < m; ++k) names.push_back("y_" + std::to_string(k));
                 const RingPtr r2 = PolyRing::create(names);
                 const Poly i2 = Poly::constant(r2, GaussRational::i());
                 Poly acc = Poly::zero(r2);
                 for (std::size_t k = 0; k < m; ++k) {
                     const Poly xk = Poly::variable(r2, k);
                     const Poly yk = Poly::variable(r2, m + k);
                     acc = acc + xk * yk + (i2 * xk) * (i2 * yk);
                 }
                 // Concrete cross-check through the API at two sample points.
                 std::vector<GaussRational> p, q;
                 for (std::size_t k = 0; k < m; ++k) {
                     p.push_back(gq(static_cast<long>(k) + 1));
                     q.push_back(gq(static_cast<long>(2 * k) + 3));
                 }
                 const bool api_zero = line_triviality_det(beta, coords, p, q).is_zero();
                 return std::pair{acc.is_zero() && api_zero,
                                  "identity sum x_k y_k + i^2 x_k y_k = 0; sample points agree"};
             });

    add_step(cert, "the cohomology has rank 2n and charge 1", [&] {
        const std::size_t rank_bundle = 2 * m - 2;  // 2c + r = 2(n+1) with c = 1
        const TruncatedSeries ch = chern_series(1, 8);
        bool chern_ok = true;
        for (std::size_t k = 0; k <= 8; ++k) {
            const BigRational expect(k % 2 == 0 ? 1 : 0);
            if (ch.coeff(k) != expect) chern_ok = false;
        }
        return std::pair{rank_bundle == 2 * n && chern_ok,
                         "rank " + std::to_string(rank_bundle) + ", c_2 coefficient " +
                             ch.coeff(2).to_string()};
    });

    return cert;
}

Certificate certify_charge1_suite() {
    Certificate cert;
    cert.id = "charge1-example";
    for (std::size_t n : {2, 3, 4}) {
        Certificate sub = certify_charge1_example(n);
        for (auto& s : sub.steps) {
            s.description = "n=" + std::to_string(n) + ": " + s.description;
            cert.total_millis += s.millis;
            cert.steps.push_back(std::move(s));
        }
    }
    return cert;
}

// ---------------------------------------------------------------------------
// appendix-a
// ---------------------------------------------------------------------------

namespace {

const std::vector<std::string>& p2_y_generators() {
    static const std::vector<std::string> gens = {
        "a_4*b_2-a_2*b_4",
        "a_10*b_2-a_2*b_10",
        "a_5*b_2-a_2*b_5",
        "-a_4*b_10+a_10*b_4",
        "a_10*b_1-a_10*b_6-a_1*b_10+a_6*b_10",
        "a_5*b_1-a_1*b_5+a_6*b_5-a_5*b_6",
        "a_4*b_1-a_1*b_4+a_6*b_4-a_4*b_6",
        "a_2*b_1-a_1*b_2+a_6*b_2-a_2*b_6"};
    return gens;
}

/// Checks that every term of f has total degree 1 in `first` and 1 in
/// `second` (bilinearity of the two variable groups).
bool bilinear_in(const Poly& f, const std::vector<std::size_t>& first,
                 const std::vector<std::size_t>& second) {
    for (const auto& t : f.terms()) {
        std::uint64_t d1 = 0, d2 = 0;
        for (std::size_t v : first) d1 += t.mono[v];
        for (std::size_t v : second) d2 += t.mono[v];
        if (d1 != 1 || d2 != 1) return false;
    }
    return true;
}

}  // namespace

Certificate certify_appendix_a(const GroebnerLimits& limits) {
    Certificate cert;
    cert.id = "appendix-a";
    const RingPtr ring = PolyRing::create({"a_1", "a_2", "a_4", "a_5", "a_6", "a_10", "b_1",
                                           "b_2", "b_4", "b_5", "b_6", "b_10", "j_1", "j_8"});
    const PolyMatrix a_blk = matrix_of(ring, {{"a_1", "a_2", "0", "a_4"},
                                              {"a_5", "a_6", "-a_4", "0"},
                                              {"0", "a_10", "a_1", "a_5"},
                                              {"-a_10", "0", "a_2", "a_6"}});
    const PolyMatrix b_blk = matrix_of(ring, {{"b_1", "b_2", "0", "b_4"},
                                              {"b_5", "b_6", "-b_4", "0"},
                                              {"0", "b_10", "b_1", "b_5"},
                                              {"-b_10", "0", "b_2", "b_6"}});
    const PolyMatrix g = matrix_of(ring, {{"0", "0", "1", "0"},
                                          {"0", "0", "0", "1"},
                                          {"-1", "0", "0", "0"},
                                          {"0", "-1", "0", "0"}});
    const PolyMatrix h = matrix_of(ring, {{"1", "0"}, {"0", "1"}});
    const PolyMatrix j_blk = matrix_of(ring, {{"j_1", "0", "0", "0"}, {"0", "0", "0", "j_8"}});
    const PolyMatrix i_blk =
        matrix_of(ring, {{"0", "0"}, {"0", "-j_8"}, {"j_1", "0"}, {"0", "0"}});

    add_step(cert, "the duality relations hold identically for the 4x4 shape", [&] {
        const bool ok = (g * a_blk - a_blk.transpose() * g).is_zero() &&
                        (g * b_blk - b_blk.transpose() * g).is_zero() &&
                        (h * j_blk + i_blk.transpose() * g).is_zero() &&
                        (g * i_blk - j_blk.transpose() * h).is_zero() &&
                        -(h * i_blk.transpose() * g) == j_blk;  // H^{-1} = Id here
        return std::pair{ok, "G*A = A^T*G, G*B = B^T*G, H*J = -I^T*G, G*I = J^T*H, and the "
                             "derive-J round trip"};
    });

    const PolyMatrix m = commutator(a_blk, b_blk) + i_blk * j_blk;

    add_step(cert, "[A,B] + IJ matches the frozen 16-entry display", [&] {
        static const char* expected[16] = {
            "-a_5*b_2+a_10*b_4+a_2*b_5-a_4*b_10", "-a_2*b_1+a_1*b_2-a_6*b_2+a_2*b_6",
            "2*a_4*b_2-2*a_2*b_4",                "-a_4*b_1+a_1*b_4-a_6*b_4+a_4*b_6",
            "a_5*b_1-a_1*b_5+a_6*b_5-a_5*b_6",    "a_5*b_2+a_10*b_4-a_2*b_5-a_4*b_10",
            "-a_4*b_1+a_1*b_4-a_6*b_4+a_4*b_6",   "2*a_5*b_4-2*a_4*b_5-j_8^2",
            "2*a_10*b_5-2*a_5*b_10+j_1^2",        "-a_10*b_1+a_10*b_6+a_1*b_10-a_6*b_10",
            "a_5*b_2-a_10*b_4-a_2*b_5+a_4*b_10",  "-a_5*b_1+a_1*b_5-a_6*b_5+a_5*b_6",
            "-a_10*b_1+a_10*b_6+a_1*b_10-a_6*b_10", "-2*a_10*b_2+2*a_2*b_10",
            "a_2*b_1-a_1*b_2+a_6*b_2-a_2*b_6",    "-a_5*b_2-a_10*b_4+a_2*b_5+a_4*b_10"};
        bool ok = true;
        for (int k = 0; k < 16; ++k)
            if (!(m.at(k / 4, k % 4) == parse_poly(expected[k], ring))) ok = false;
        return std::pair{ok, "all 16 entries agree"};
    });

    const std::size_t j1 = *ring->index_of("j_1");
    const std::size_t j8 = *ring->index_of("j_8");
    std::vector<Poly> jfree;
    for (std::size_t i = 0; i < 4; ++i)
        for (std::size_t j = 0; j < 4; ++j)
            if (!m.at(i, j).contains_var(j1) && !m.at(i, j).contains_var(j8))
                jfree.push_back(m.at(i, j));

    const std::vector<Poly> ygens = parse_all(ring, p2_y_generators());
    const Ideal y(ring, ygens);

    add_step(cert, "exactly 14 entries are j-free and they generate the 8-generator ideal Y",
             [&] {
                 const bool ok = jfree.size() == 14 && ideal_equal(Ideal(ring, jfree), y, limits);
                 return std::pair{ok, "j-free entries: " + std::to_string(jfree.size()) +
                                          "; Y basis " + y.basis(limits).fingerprint()};
             });

    const Poly x1 = parse_poly("a_10*b_5-a_5*b_10", ring);
    const Poly x2 = parse_poly("a_5*b_4-a_4*b_5", ring);

    add_step(cert, "X = Y + the two j-square quadrics is strictly larger than Y", [&] {
        std::vector<Poly> xgens = ygens;
        xgens.push_back(x1);
        xgens.push_back(x2);
        const bool not_in_1 = !ideal_member(x1, y.basis(limits), limits).member;
        const bool not_in_2 = !ideal_member(x2, y.basis(limits), limits).member;
        const bool unequal = !ideal_equal(Ideal(ring, xgens), y, limits);
        return std::pair{not_in_1 && not_in_2 && unequal,
                         "a_10*b_5 - a_5*b_10 and a_5*b_4 - a_4*b_5 are not in Y"};
    });

    add_step(cert, "W = Y + (a_2, b_2) is strictly larger than Y", [&] {
        std::vector<Poly> wgens = ygens;
        wgens.push_back(parse_poly("a_2", ring));
        wgens.push_back(parse_poly("b_2", ring));
        const bool not_in_a = !ideal_member(parse_poly("a_2", ring), y.basis(limits), limits).member;
        const bool not_in_b = !ideal_member(parse_poly("b_2", ring), y.basis(limits), limits).member;
        const bool unequal = !ideal_equal(Ideal(ring, wgens), y, limits);
        return std::pair{not_in_a && not_in_b && unequal, "a_2 and b_2 are not in Y"};
    });

    add_step(cert,
             "structure facts for the witness search: a_2 and b_2 times either j-square quadric "
             "already lie in Y, and every X generator is alternating (vanishes when b is "
             "proportional to a)",
             [&] {
                 const Poly a2 = parse_poly("a_2", ring);
                 const Poly b2 = parse_poly("b_2", ring);
                 bool products = true;
                 for (const Poly& p : {a2 * x1, b2 * x1, a2 * x2, b2 * x2})
                     if (!ideal_member(p, y.basis(limits), limits).member) products = false;

                 std::vector<std::size_t> avars, bvars;
                 for (std::size_t v = 0; v < 6; ++v) avars.push_back(v);
                 for (std::size_t v = 6; v < 12; ++v) bvars.push_back(v);
                 std::vector<std::optional<Poly>> images(ring->nvars());
                 for (std::size_t k = 0; k < 6; ++k)
                     images[6 + k] = Poly::variable(ring, k);  // b_k -> a_k
                 bool alternating = true;
                 std::vector<Poly> all_gens = ygens;
                 all_gens.push_back(x1);
                 all_gens.push_back(x2);
                 for (const auto& gen : all_gens) {
                     if (!bilinear_in(gen, avars, bvars)) alternating = false;
                     if (!gen.substitute(images).is_zero()) alternating = false;
                 }
                 return std::pair{products && alternating,
                                  "on the vanishing locus of Y, a_2*b_2 != 0 forces both "
                                  "j-squares to vanish; proportional parameters kill all X "
                                  "generators"};
             });

    return cert;
}

// ---------------------------------------------------------------------------
// appendix-b
// ---------------------------------------------------------------------------

namespace {

struct P3Shape {
    RingPtr ring;
    PolyMatrix a0, a1, b0, b1, g, h, j0, j1, i0, i1, d1, d2, d3;
};

P3Shape make_p3_shape() {
    const RingPtr ring =
        PolyRing::create({"a_1", "a_2", "a_3", "a_5", "a_6", "a_7", "b_1", "b_2", "b_3", "b_5",
                          "b_6", "b_7", "j_1", "j_8", "j_9", "j_16"});
    P3Shape s{ring,
              matrix_of(ring, {{"a_1", "a_2"}, {"a_3", "-a_1"}}),
              matrix_of(ring, {{"a_5", "a_6"}, {"a_7", "-a_5"}}),
              matrix_of(ring, {{"b_1", "b_2"}, {"b_3", "-b_1"}}),
              matrix_of(ring, {{"b_5", "b_6"}, {"b_7", "-b_5"}}),
              matrix_of(ring, {{"0", "1"}, {"-1", "0"}}),
              matrix_of(ring, {{"1", "0", "0", "0"},
                               {"0", "1", "0", "0"},
                               {"0", "0", "1", "0"},
                               {"0", "0", "0", "1"}}),
              matrix_of(ring, {{"j_1", "0"}, {"0", "0"}, {"0", "0"}, {"0", "j_8"}}),
              matrix_of(ring, {{"0", "0"}, {"j_9", "0"}, {"0", "j_16"}, {"0", "0"}}),
              matrix_of(ring, {{"0", "0", "0", "-j_8"}, {"j_1", "0", "0", "0"}}),
              matrix_of(ring, {{"0", "0", "-j_16", "0"}, {"0", "j_9", "0", "0"}}),
              matrix_of(ring, {{"b_3*a_2-b_2*a_3", "2*b_2*a_1-2*b_1*a_2-j_8^2"},
                               {"-2*b_3*a_1+2*b_1*a_3+j_1^2", "-b_3*a_2+b_2*a_3"}}),
              matrix_of(ring, {{"b_7*a_6-b_6*a_7", "2*b_6*a_5-2*b_5*a_6-j_16^2"},
                               {"-2*b_7*a_5+2*b_5*a_7+j_9^2", "-b_7*a_6+b_6*a_7"}}),
              matrix_of(ring, {{"b_7*a_2-b_6*a_3-b_3*a_6+b_2*a_7",
                                "2*b_6*a_1-2*b_5*a_2-2*b_2*a_5+2*b_1*a_6"},
                               {"-2*b_7*a_1+2*b_5*a_3+2*b_3*a_5-2*b_1*a_7",
                                "-b_7*a_2+b_6*a_3+b_3*a_6-b_2*a_7"}})};
    return s;
}

const std::vector<std::string>& p3_x_generators() {
    static const std::vector<std::string> gens = {
        "b_3*a_2-b_2*a_3",
        "b_7*a_6-b_6*a_7",
        "-b_7*a_1+b_5*a_3+b_3*a_5-b_1*a_7",
        "b_6*a_1-b_5*a_2-b_2*a_5+b_1*a_6",
        "b_7*a_2-b_6*a_3-b_3*a_6+b_2*a_7",
        "a_3",
        "a_7",
        "b_3",
        "b_7"};
    return gens;
}

const std::vector<std::string>& p3_y_extension() {
    static const std::vector<std::string> gens = {"b_2*a_1-b_1*a_2", "-b_3*a_1+b_1*a_3",
                                                  "b_6*a_5-b_5*a_6", "-b_7*a_5+b_5*a_7"};
    return gens;
}

}  // namespace

Certificate certify_appendix_b(const GroebnerLimits& limits) {
    Certificate cert;
    cert.id = "appendix-b";
    const P3Shape s = make_p3_shape();

    add_step(cert,
             "transposed-form duality G*X = X^T*G^T holds for all four trace-free blocks "
             "(the untransposed form does not), and the derived I blocks satisfy the I/J "
             "relations",
             [&] {
                 bool anchored = true;
                 for (const PolyMatrix* blk : {&s.a0, &s.a1, &s.b0, &s.b1})
                     if (!(s.g * *blk - blk->transpose() * s.g.transpose()).is_zero())
                         anchored = false;
                 const bool untransposed_fails =
                     !(s.g * s.a0 - s.a0.transpose() * s.g).is_zero();
                 const bool derived = s.i0 == s.g.transpose() * s.j0.transpose() * s.h &&
                                      s.i1 == s.g.transpose() * s.j1.transpose() * s.h;
                 const bool ij_relations =
                     (s.h * s.j0 + s.i0.transpose() * s.g).is_zero() &&
                     (s.h * s.j1 + s.i1.transpose() * s.g).is_zero() &&
                     (s.g * s.i0 - s.j0.transpose() * s.h).is_zero() &&
                     (s.g * s.i1 - s.j1.transpose() * s.h).is_zero();
                 return std::pair{anchored && untransposed_fails && derived && ij_relations,
                                  "G*X - X^T*G^T = 0 for X in {A_0, A_1, B_0, B_1}; "
                                  "I_k = G^T J_k^T H"};
             });

    add_step(cert, "the three displayed coefficient matrices match", [&] {
        const PolyMatrix c00 = commutator(s.a0, s.b0) + s.i0 * s.j0;
        const PolyMatrix c11 = commutator(s.a1, s.b1) + s.i1 * s.j1;
        const PolyMatrix cpair = s.a0 * s.b1 - s.b1 * s.a0 + s.b0 * s.a1 - s.a1 * s.b0 +
                                 s.i0 * s.j1 + s.i1 * s.j0;
        const bool ok = c00 == s.d1 && c11 == s.d2 && cpair == s.d3;
        return std::pair{ok, "z_0^2, z_1^2, and the paired cross expression"};
    });

    add_step(cert,
             "sign bridge: the datum (A_0, A_1, B_0, -B_1, I_0, i*I_1, J_0, i*J_1) has true "
             "quadratic coefficients exactly (D_1, -D_3, -D_2), so vanishing of the three "
             "displays is solving the matrix equation",
             [&] {
                 const bool cross_zero = (s.i0 * s.j1).is_zero() && (s.i1 * s.j0).is_zero();
                 const PolyMatrix ctrue = s.a0 * s.b1 + s.a1 * s.b0 - s.b0 * s.a1 -
                                          s.b1 * s.a0 + s.i0 * s.j1 + s.i1 * s.j0;
                 const PolyMatrix cpair = s.a0 * s.b1 - s.b1 * s.a0 + s.b0 * s.a1 -
                                          s.a1 * s.b0 + s.i0 * s.j1 + s.i1 * s.j0;
                 const Poly two = Poly::constant(s.ring, GaussRational(BigRational(2)));
                 const bool gap = ctrue - cpair == commutator(s.a1, s.b0).scaled(two);
                 const bool gap_nonzero = !commutator(s.a1, s.b0).is_zero();

                 SymbolicAdhm bridged;
                 bridged.n = 3;
                 bridged.r = 4;
                 bridged.c = 2;
                 const Poly iu = Poly::constant(s.ring, GaussRational::i());
                 bridged.A = {s.a0, s.a1};
                 bridged.B = {s.b0, -s.b1};
                 bridged.I = {s.i0, s.i1.scaled(iu)};
                 bridged.J = {s.j0, s.j1.scaled(iu)};
                 const bool bridge = mu_coefficient(bridged, 0, 0) == s.d1 &&
                                     mu_coefficient(bridged, 0, 1) == -s.d3 &&
                                     mu_coefficient(bridged, 1, 1) == -s.d2;
                 return std::pair{cross_zero && gap && gap_nonzero && bridge,
                                  "true cross coefficient differs from the display by "
                                  "2[A_1, B_0]; the bridged datum closes the gap"};
             });

    const std::vector<Poly> xgens = parse_all(s.ring, p3_x_generators());
    std::vector<Poly> ygens = xgens;
    for (const auto& e : parse_all(s.ring, p3_y_extension())) ygens.push_back(e);
    const Ideal x(s.ring, xgens);
    const Ideal y(s.ring, ygens);

    add_step(cert,
             "Y = X + the four complement quadrics is strictly larger than X (two of the four "
             "listed elements already lie in X)",
             [&] {
                 const auto ext = parse_all(s.ring, p3_y_extension());
                 const bool not_in_0 = !ideal_member(ext[0], x.basis(limits), limits).member;
                 const bool not_in_2 = !ideal_member(ext[2], x.basis(limits), limits).member;
                 const bool in_1 = ideal_member(ext[1], x.basis(limits), limits).member;
                 const bool in_3 = ideal_member(ext[3], x.basis(limits), limits).member;
                 const bool unequal = !ideal_equal(x, y, limits);
                 return std::pair{not_in_0 && not_in_2 && in_1 && in_3 && unequal,
                                  "X basis " + x.basis(limits).fingerprint() + "; Y basis " +
                                      y.basis(limits).fingerprint()};
             });

    add_step(cert, "Z = Y + (a_2, a_6, b_2, b_6) differs from both X and Y", [&] {
        std::vector<Poly> zgens = ygens;
        for (const char* v : {"a_2", "a_6", "b_2", "b_6"})
            zgens.push_back(parse_poly(v, s.ring));
        const Ideal z(s.ring, zgens);
        const bool a2_out = !ideal_member(parse_poly("a_2", s.ring), y.basis(limits), limits).member;
        const bool ok = !ideal_equal(z, x, limits) && !ideal_equal(z, y, limits) && a2_out;
        return std::pair{ok, "Z basis " + z.basis(limits).fingerprint()};
    });

    return cert;
}

// ---------------------------------------------------------------------------
// dimensions / chern
// ---------------------------------------------------------------------------

long long moduli_dimension(StructureKind kind, const std::string& space, long long r,
                           long long c) {
    if (r < 1 || c < 1) throw std::invalid_argument("moduli_dimension: need r >= 1 and c >= 1");
    if (kind == StructureKind::Symplectic && space == "p2") {
        if (r % 2 != 0)
            throw std::invalid_argument("moduli_dimension: symplectic rank must be even");
        return (r + 2) * c - (r + 1) * r / 2;
    }
    if (kind == StructureKind::Symplectic && space == "p3") {
        if (r != 2)
            throw std::invalid_argument(
                "moduli_dimension: the p3 symplectic count covers rank 2 only");
        return 8 * c - 3;
    }
    if (kind == StructureKind::Orthogonal && space == "p2") {
        if (!((r == c && c >= 4) || (r == c - 1 && c >= 8)))
            throw std::invalid_argument(
                "moduli_dimension: the orthogonal count covers r = c >= 4 or r = c - 1, "
                "c >= 8 only");
        return (r - 2) * c - r * (r - 1) / 2;
    }
    throw std::invalid_argument("moduli_dimension: unsupported (kind, space) combination");
}

Certificate certify_dimensions() {
    Certificate cert;
    cert.id = "dimensions";
    struct Row {
        StructureKind kind;
        const char* space;
        long long r, c, expected;
    };
    static const Row table[] = {
        {StructureKind::Symplectic, "p2", 2, 2, 5},  {StructureKind::Symplectic, "p2", 2, 1, 1},
        {StructureKind::Symplectic, "p2", 4, 3, 8},  {StructureKind::Symplectic, "p2", 6, 4, 11},
        {StructureKind::Symplectic, "p3", 2, 1, 5},  {StructureKind::Symplectic, "p3", 2, 3, 21},
        {StructureKind::Symplectic, "p3", 2, 10, 77}, {StructureKind::Orthogonal, "p2", 4, 4, 2},
        {StructureKind::Orthogonal, "p2", 5, 5, 5},  {StructureKind::Orthogonal, "p2", 7, 8, 19},
    };
    for (const Row& row : table) {
        add_step(cert,
                 to_string(row.kind) + " " + row.space + " r=" + std::to_string(row.r) +
                     " c=" + std::to_string(row.c) + " -> " + std::to_string(row.expected),
                 [&] {
                     const long long got = moduli_dimension(row.kind, row.space, row.r, row.c);
                     return std::pair{got == row.expected, "computed " + std::to_string(got)};
                 });
    }
    add_step(cert, "out-of-domain parameter choices are refused, not extrapolated", [&] {
        std::size_t refused = 0;
        const auto expect_refusal = [&](StructureKind k, const char* sp, long long r,
                                        long long c) {
            try {
                (void)moduli_dimension(k, sp, r, c);
            } catch (const std::invalid_argument&) {
                ++refused;
            }
        };
        expect_refusal(StructureKind::Symplectic, "p2", 3, 2);   // odd rank
        expect_refusal(StructureKind::Symplectic, "p3", 4, 2);   // rank != 2
        expect_refusal(StructureKind::Orthogonal, "p2", 3, 3);   // below the c >= 4 threshold
        expect_refusal(StructureKind::Orthogonal, "p2", 6, 7);   // r = c - 1 needs c >= 8
        expect_refusal(StructureKind::Orthogonal, "p3", 4, 2);   // unsupported space
        expect_refusal(StructureKind::Autodual, "p2", 2, 2);     // no count for plain autodual
        return std::pair{refused == 6, std::to_string(refused) + "/6 refusals observed"};
    });
    return cert;
}

Certificate certify_chern() {
    Certificate cert;
    cert.id = "chern";
    for (std::uint32_t c = 1; c <= 5; ++c) {
        add_step(cert,
                 "total Chern series for charge " + std::to_string(c) +
                     " has t^(2k) coefficient binomial(c-1+k, k) and no odd terms",
                 [&] {
                     const TruncatedSeries s = chern_series(c, 12);
                     bool ok = true;
                     for (std::size_t k = 0; k <= 5; ++k)
                         if (s.coeff(2 * k) != BigRational(binom(c - 1 + static_cast<long long>(k),
                                                                 static_cast<long long>(k))))
                             ok = false;
                     for (std::size_t k = 0; 2 * k + 1 <= 12; ++k)
                         if (!s.coeff(2 * k + 1).is_zero()) ok = false;
                     return std::pair{ok, "coefficients up to t^10 checked"};
                 });
    }
    add_step(cert, "the series times (1 - t^2)^c telescopes back to 1", [&] {
        bool ok = true;
        for (std::uint32_t c = 1; c <= 5; ++c)
            if (!(chern_series(c, 12).mul(one_minus_t2_pow(c, 12)) == TruncatedSeries::one(12)))
                ok = false;
        return std::pair{ok, "charges 1..5"};
    });
    add_step(cert, "rendering matches the documented sample", [&] {
        const std::string got = chern_series(2, 4).to_string();
        return std::pair{got == "1 + 2t^2 + 3t^4", "chern --charge 2 --cap 4 -> " + got};
    });
    return cert;
}

// ---------------------------------------------------------------------------
// Witness search
// ---------------------------------------------------------------------------

namespace {

std::optional<BigRational> rational_sqrt(const BigRational& v) {
    if (v.sign() < 0) return std::nullopt;
    const mpq_class& q = v.raw();
    const mpz_class num = q.get_num(), den = q.get_den();
    const mpz_class rn = sqrt(num), rd = sqrt(den);
    if (rn * rn != num || rd * rd != den) return std::nullopt;
    return BigRational(mpq_class(rn, rd));
}

}  // namespace

std::optional<GaussRational> gauss_sqrt(const GaussRational& v) {
    if (v.is_zero()) return GaussRational(BigRational(0));
    if (v.im().is_zero()) {
        if (v.re().sign() > 0) {
            if (auto r = rational_sqrt(v.re())) return GaussRational(*r);
            return std::nullopt;
        }
        if (auto r = rational_sqrt(-v.re())) return GaussRational(BigRational(0), *r);
        return std::nullopt;
    }
    const auto s = rational_sqrt(v.norm());
    if (!s) return std::nullopt;
    const BigRational half(1, 2);
    const auto a = rational_sqrt((v.re() + *s) * half);
    if (!a || a->is_zero()) return std::nullopt;
    const GaussRational root(*a, v.im() * half / *a);
    if (root * root == v) return root;
    return std::nullopt;
}

namespace {

bool passes_full_stack(const ScalarExtended& ext) {
    if (!mu_is_zero(ext.datum)) return false;
    if (duality_violation(ext)) return false;
    if (classify_structure(ext) != StructureKind::Orthogonal) return false;
    if (!global_regularity(ext.datum).regular()) return false;
    return distinguished_line_triviality(ext.datum);
}

std::optional<ScalarExtended> search_p2_charge4(std::size_t bound, std::uint64_t seed) {
    std::mt19937_64 rng(seed);
    const GaussRational iu = GaussRational::i();
    const std::vector<GaussRational> pool = {
        gq(0),  gq(1),          gq(-1),          gq(2),
        gq(-2), GaussRational(BigRational(1, 2)), GaussRational(BigRational(-1, 2)), iu,
        -iu,    gq(1) + iu,     gq(1) - iu};
    std::uniform_int_distribution<std::size_t> pick(0, pool.size() - 1);
    const std::size_t trials = std::min<std::size_t>(bound * 200, 200000);

    for (std::size_t trial = 0; trial < trials; ++trial) {
        // Parameter order mirrors the 4x4 shape: a_1, a_2, a_4, a_5, a_6, a_10.
        std::array<GaussRational, 6> a{}, b{};
        for (auto& v : a) v = pool[pick(rng)];
        for (auto& v : b) v = pool[pick(rng)];
        const auto &a1 = a[0], &a2 = a[1], &a4 = a[2], &a5 = a[3], &a6 = a[4], &a10 = a[5];
        const auto &b1 = b[0], &b2 = b[1], &b4 = b[2], &b5 = b[3], &b6 = b[4], &b10 = b[5];
        if (a2.is_zero() || b2.is_zero()) continue;  // required nonvanishing
        // The eight Y generators must vanish.
        const GaussRational ygens[8] = {
            a4 * b2 - a2 * b4,
            a10 * b2 - a2 * b10,
            a5 * b2 - a2 * b5,
            a10 * b4 - a4 * b10,
            a10 * b1 - a10 * b6 - a1 * b10 + a6 * b10,
            a5 * b1 - a1 * b5 + a6 * b5 - a5 * b6,
            a4 * b1 - a1 * b4 + a6 * b4 - a4 * b6,
            a2 * b1 - a1 * b2 + a6 * b2 - a2 * b6};
        bool on_y = true;
        for (const auto& g : ygens)
            if (!g.is_zero()) on_y = false;
        if (!on_y) continue;
        // Nonzero j values with squares realizable in Q(i).
        const GaussRational j1_sq = -(a10 * b5 - a5 * b10) * gq(2);
        const GaussRational j8_sq = (a5 * b4 - a4 * b5) * gq(2);
        if (j1_sq.is_zero() || j8_sq.is_zero()) continue;
        const auto j1 = gauss_sqrt(j1_sq);
        const auto j8 = gauss_sqrt(j8_sq);
        if (!j1 || !j8) continue;

        ScalarExtended ext;
        ext.datum.n = 2;
        ext.datum.r = 2;
        ext.datum.c = 4;
        ext.datum.A = {ScalarMatrix::from_rows({{a1, a2, gq(0), a4},
                                                {a5, a6, -a4, gq(0)},
                                                {gq(0), a10, a1, a5},
                                                {-a10, gq(0), a2, a6}})};
        ext.datum.B = {ScalarMatrix::from_rows({{b1, b2, gq(0), b4},
                                                {b5, b6, -b4, gq(0)},
                                                {gq(0), b10, b1, b5},
                                                {-b10, gq(0), b2, b6}})};
        ext.datum.J = {ScalarMatrix::from_rows(
            {{*j1, gq(0), gq(0), gq(0)}, {gq(0), gq(0), gq(0), *j8}})};
        ext.G = omega_matrix(4);
        ext.H = identity_matrix(2);
        ext.datum.I = {inverse(ext.G) * ext.datum.J[0].transpose() * ext.H};
        if (passes_full_stack(ext)) return ext;
    }
    return std::nullopt;
}

std::optional<ScalarExtended> search_p3_rank4_charge2(std::size_t bound, std::uint64_t seed) {
    std::mt19937_64 rng(seed);
    const GaussRational iu = GaussRational::i();
    using Col = std::array<GaussRational, 4>;
    // Grid of isotropic columns (v^T v = 0 over Q(i)); the first four span the
    // standard pairs, the rest come from the seeded pool.
    std::vector<Col> pool = {
        Col{gq(1), iu, gq(0), gq(0)},
        Col{gq(0), gq(0), gq(1), iu},
        Col{gq(0), gq(0), gq(1), -iu},
        Col{gq(-1), iu, gq(0), gq(0)},
    };
    const std::vector<GaussRational> small = {gq(0), gq(1), gq(-1), gq(2), iu, -iu};
    std::uniform_int_distribution<std::size_t> pick(0, small.size() - 1);
    for (std::size_t extra = 0; extra < std::min<std::size_t>(bound, 40); ++extra) {
        const GaussRational u = small[pick(rng)], v = small[pick(rng)];
        if (u.is_zero() && v.is_zero()) continue;
        pool.push_back(Col{u, iu * u, v, iu * v});
    }

    const auto col_matrix = [](const Col& c1, const Col& c2) {
        std::vector<std::vector<GaussRational>> rows;
        for (std::size_t k = 0; k < 4; ++k) rows.push_back({c1[k], c2[k]});
        return ScalarMatrix::from_rows(rows);
    };

    const ScalarMatrix g = omega_matrix(2);
    const ScalarMatrix ginv = inverse(g);
    const ScalarMatrix h = identity_matrix(4);
    const std::size_t p = pool.size();
    for (std::size_t q0 = 0; q0 < p * p; ++q0) {
        const ScalarMatrix j0 = col_matrix(pool[q0 / p], pool[q0 % p]);
        if (!(j0.transpose() * j0).is_zero() || rank(j0) != 2) continue;
        for (std::size_t q1 = 0; q1 < p * p; ++q1) {
            const ScalarMatrix j1 = col_matrix(pool[q1 / p], pool[q1 % p]);
            if (!(j1.transpose() * j1).is_zero() || rank(j1) != 2) continue;
            if (!(j0.transpose() * j1 + j1.transpose() * j0).is_zero()) continue;
            const ScalarMatrix i0 = ginv * j0.transpose() * h;
            const ScalarMatrix i1 = ginv * j1.transpose() * h;
            if (!(i0 * j0).is_zero() || !(i1 * j1).is_zero()) continue;
            if (!(i0 * j1 + i1 * j0).is_zero()) continue;

            ScalarExtended ext;
            ext.datum.n = 3;
            ext.datum.r = 4;
            ext.datum.c = 2;
            ext.datum.A = {identity_matrix(2), ScalarMatrix(2, 2, gq(0))};
            ext.datum.B = {ScalarMatrix(2, 2, gq(0)), identity_matrix(2)};
            ext.datum.I = {i0, i1};
            ext.datum.J = {j0, j1};
            ext.G = g;
            ext.H = h;
            if (passes_full_stack(ext)) return ext;
        }
    }
    return std::nullopt;
}

}  // namespace

std::optional<ScalarExtended> search_witness(const std::string& shape, std::size_t bound,
                                             std::uint64_t seed) {
    if (bound < 1) throw std::invalid_argument("search_witness: bound >= 1 required");
    if (shape == "p2-charge4") return search_p2_charge4(bound, seed);
    if (shape == "p3-rank4-charge2") return search_p3_rank4_charge2(bound, seed);
    throw std::invalid_argument("search_witness: unknown shape: " + shape);
}

}  // namespace instanton
