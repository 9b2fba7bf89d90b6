// instanton-verify: exact computer algebra for framed autodual instanton data.
// Distributed under the MIT license; see LICENSE in the repository root.
//
// Command-line front end.  Subcommands:
//   verify <file>       run the verification pipeline on a datum file
//   certify <id|all>    replay a named certificate (or every one)
//   chern               print the total Chern series of an instanton bundle
//   dimension           evaluate a moduli-space dimension formula
//   example charge1     run the rank-2n charge-1 example end to end
//   search              look for a regular datum of a given shape
//
// Exit codes: 0 all checks pass, 1 a check fails, 2 input error, 3 resource cap.

#include "instanton/adhm.hpp"
#include "instanton/certify.hpp"
#include "instanton/regularity.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <exception>
#include <fstream>
#include <iostream>
#include <mutex>
#include <optional>
#include <sstream>
#include <string>
#include <thread>
#include <vector>

namespace {

using namespace instanton;

constexpr int kExitPass = 0;
constexpr int kExitCheckFailed = 1;
constexpr int kExitInputError = 2;
constexpr int kExitResourceCap = 3;

struct CheckLine {
    std::string name;
    bool ok = false;
    std::string detail;
};

struct VerifyReport {
    std::string file;
    std::vector<CheckLine> checks;
    std::string classification;
    bool pass() const {
        for (const auto& c : checks)
            if (!c.ok) return false;
        return true;
    }
};

void print_verify_report(const VerifyReport& rep, bool as_json) {
    if (as_json) {
        nlohmann::json doc;
        doc["file"] = rep.file;
        doc["classification"] = rep.classification;
        doc["verdict"] = rep.pass() ? "pass" : "fail";
        doc["checks"] = nlohmann::json::array();
        for (const auto& c : rep.checks)
            doc["checks"].push_back({{"name", c.name}, {"ok", c.ok}, {"detail", c.detail}});
        std::cout << doc.dump(2) << "\n";
        return;
    }
    std::cout << "verify " << rep.file << "\n";
    for (const auto& c : rep.checks) {
        std::cout << "  [" << (c.ok ? "ok" : "FAIL") << "] " << c.name;
        if (!c.detail.empty()) std::cout << ": " << c.detail;
        std::cout << "\n";
    }
    std::cout << "classification: " << rep.classification << "\n";
    std::cout << (rep.pass() ? "PASS" : "FAIL") << "\n";
}

nlohmann::json load_json_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::invalid_argument("cannot open file: " + path);
    nlohmann::json doc;
    in >> doc;
    return doc;
}

/// True when every entry of m is a constant polynomial; extracts the values.
std::optional<ScalarMatrix> constant_matrix(const PolyMatrix& m) {
    ScalarMatrix out(m.rows(), m.cols(), GaussRational());
    for (std::size_t i = 0; i < m.rows(); ++i) {
        for (std::size_t j = 0; j < m.cols(); ++j) {
            const Poly& p = m.at(i, j);
            if (p.is_zero()) continue;
            if (p.terms().size() != 1 || total_degree(p.terms().front().mono) != 0)
                return std::nullopt;
            out.at(i, j) = p.terms().front().coeff;
        }
    }
    return out;
}

/// Shared tail of the verify pipeline: classification (with parity gates),
/// the G/H symmetry pair, optional regularity.  Matrix-symmetry tests work on
/// both scalar and polynomial entries, so this is templated on the form type.
template <typename MatrixT>
void classification_checks(VerifyReport& rep, const MatrixT& g, const MatrixT& h,
                           std::size_t r, std::size_t c,
                           const std::optional<StructureKind>& requested,
                           StructureKind classified) {
    rep.classification = to_string(classified);

    {
        CheckLine line;
        line.name = "structure classification";
        if (requested) {
            // Parity gates: an antisymmetric invertible form needs even size.
            if (*requested == StructureKind::Orthogonal && c % 2 != 0) {
                line.ok = false;
                line.detail = "orthogonal structure needs even charge, c = " + std::to_string(c);
            } else if (*requested == StructureKind::Symplectic && r % 2 != 0) {
                line.ok = false;
                line.detail = "symplectic structure needs even rank, r = " + std::to_string(r);
            } else if (*requested == StructureKind::Autodual) {
                line.ok = true;  // duality already verified; any classification qualifies
                line.detail = "autodual requested; classified as " + rep.classification;
            } else {
                line.ok = classified == *requested;
                line.detail = "requested " + to_string(*requested) + ", classified as " +
                              rep.classification;
            }
        } else {
            line.ok = true;
            line.detail = "classified as " + rep.classification;
        }
        rep.checks.push_back(line);
    }

    {
        CheckLine line;
        line.name = "G/H symmetry pair";
        const bool g_sym = (g - g.transpose()).is_zero();
        const bool g_skew = (g + g.transpose()).is_zero();
        const bool h_sym = (h - h.transpose()).is_zero();
        const bool h_skew = (h + h.transpose()).is_zero();
        switch (classified) {
            case StructureKind::Symplectic:
                line.ok = g_sym && h_skew;
                line.detail = "G symmetric, H antisymmetric";
                break;
            case StructureKind::Orthogonal:
                line.ok = g_skew && h_sym;
                line.detail = "G antisymmetric, H symmetric";
                break;
            case StructureKind::Autodual:
                line.ok = true;
                line.detail = "no definite symmetry required";
                break;
        }
        rep.checks.push_back(line);
    }
}

int cmd_verify(const std::string& path, const std::string& kind_name,
               const std::string& regularity, bool as_json, const GroebnerLimits& limits) {
    std::optional<StructureKind> requested;
    if (!kind_name.empty()) {
        requested = structure_kind_from_string(kind_name);
        if (!requested)
            throw std::invalid_argument("unknown --kind: " + kind_name +
                                        " (expected autodual, symplectic, or orthogonal)");
    }
    if (regularity != "on" && regularity != "off")
        throw std::invalid_argument("--regularity expects on or off");
    const bool want_regularity = regularity == "on";

    const nlohmann::json doc = load_json_file(path);
    VerifyReport rep;
    rep.file = path;
    rep.classification = "unknown";

    if (is_symbolic_datum(doc)) {
        if (want_regularity)
            throw std::invalid_argument(
                "global regularity needs a scalar datum; this file is symbolic");
        const SymbolicDatum sym = load_symbolic_datum(doc);
        const SymbolicExtended& ext = sym.ext;

        rep.checks.push_back({"dimensions", true,
                              "n=" + std::to_string(ext.datum.n) + " r=" +
                                  std::to_string(ext.datum.r) + " c=" +
                                  std::to_string(ext.datum.c) + " (symbolic, " +
                                  std::to_string(sym.params.size()) +
                                  (sym.params.size() == 1 ? " parameter)" : " parameters)")});

        const bool mu_ok = mu_is_zero(ext.datum);
        rep.checks.push_back({"ADHM equation mu = 0", mu_ok,
                              mu_ok ? "all quadratic coefficients vanish"
                                    : "a quadratic coefficient of mu is nonzero"});

        const auto residuals = duality_residuals(ext, sym.coords);
        static const char* residual_names[4] = {"G*A - A^T*G", "G*B - B^T*G", "H*J + I^T*G",
                                                "G*I - J^T*H"};
        bool duality_ok = true;
        std::string first_violated;
        for (std::size_t k = 0; k < 4; ++k) {
            if (!residuals[k].is_zero() && duality_ok) {
                duality_ok = false;
                first_violated = residual_names[k];
            }
        }
        rep.checks.push_back({"duality residuals", duality_ok,
                              duality_ok ? "all four relations hold identically"
                                         : first_violated + " != 0"});

        const auto g_const = constant_matrix(ext.G);
        const auto h_const = constant_matrix(ext.H);
        if (!g_const || !h_const)
            throw std::invalid_argument(
                "autodual compatibility needs constant G and H entries");
        {
            ScalarExtended forms;
            forms.datum.n = ext.datum.n;
            forms.datum.r = ext.datum.r;
            forms.datum.c = ext.datum.c;
            forms.G = *g_const;
            forms.H = *h_const;
            const ScalarMatrix hinv = inverse(forms.H);
            const ScalarMatrix hinv_t = inverse(forms.H.transpose());
            bool compat = true;
            const RingPtr ring = sym.coords.ring;
            for (const auto& iblk : ext.datum.I) {
                const PolyMatrix lhs =
                    to_poly_matrix(forms.G, ring) * iblk * to_poly_matrix(hinv, ring) +
                    to_poly_matrix(forms.G.transpose(), ring) * iblk *
                        to_poly_matrix(hinv_t, ring);
                if (!lhs.is_zero()) compat = false;
            }
            rep.checks.push_back({"autodual compatibility", compat,
                                  compat ? "G*I*H^-1 + G^T*I*(H^T)^-1 = 0 for every block"
                                         : "G*I*H^-1 + G^T*I*(H^T)^-1 != 0"});
        }

        if (!duality_ok) {
            rep.checks.push_back({"structure classification", false,
                                  "duality relations fail; no structure to classify"});
        } else {
            const bool g_sym = (ext.G - ext.G.transpose()).is_zero();
            const bool g_skew = (ext.G + ext.G.transpose()).is_zero();
            const bool h_sym = (ext.H - ext.H.transpose()).is_zero();
            const bool h_skew = (ext.H + ext.H.transpose()).is_zero();
            StructureKind classified = StructureKind::Autodual;
            if (g_sym && h_skew) classified = StructureKind::Symplectic;
            else if (g_skew && h_sym) classified = StructureKind::Orthogonal;
            classification_checks(rep, ext.G, ext.H, ext.datum.r, ext.datum.c, requested,
                                  classified);
        }

        print_verify_report(rep, as_json);
        return rep.pass() ? kExitPass : kExitCheckFailed;
    }

    // Scalar path.
    const ScalarExtended ext = load_scalar_datum(doc);
    rep.checks.push_back({"dimensions", true,
                          "n=" + std::to_string(ext.datum.n) + " r=" +
                              std::to_string(ext.datum.r) + " c=" +
                              std::to_string(ext.datum.c)});

    const bool mu_ok = mu_is_zero(ext.datum);
    rep.checks.push_back({"ADHM equation mu = 0", mu_ok,
                          mu_ok ? "all quadratic coefficients vanish"
                                : "a quadratic coefficient of mu is nonzero"});

    const auto violated = duality_violation(ext);
    rep.checks.push_back({"duality residuals", !violated,
                          violated ? *violated : "all four relations hold for every block"});

    const bool compat = autodual_compatibility(ext);
    rep.checks.push_back({"autodual compatibility", compat,
                          compat ? "G*I*H^-1 + G^T*I*(H^T)^-1 = 0 for every block"
                                 : "G*I*H^-1 + G^T*I*(H^T)^-1 != 0"});

    if (violated) {
        rep.checks.push_back({"structure classification", false,
                              "duality relations fail; no structure to classify"});
    } else {
        classification_checks(rep, ext.G, ext.H, ext.datum.r, ext.datum.c, requested,
                              classify_structure(ext));
    }

    if (want_regularity) {
        CheckLine line;
        line.name = "global regularity";
        if (!mu_ok) {
            line.ok = false;
            line.detail = "skipped: the ADHM equation fails";
        } else {
            const RegularityReport reg = global_regularity(ext.datum, limits);
            line.ok = reg.regular();
            std::ostringstream detail;
            detail << "alpha injective: " << (reg.alpha_injective_everywhere ? "yes" : "no")
                   << ", beta surjective: " << (reg.beta_surjective_everywhere ? "yes" : "no")
                   << " (" << reg.method << ")";
            if (reg.failure_witness) {
                detail << "; witness point [";
                for (std::size_t k = 0; k < reg.failure_witness->size(); ++k)
                    detail << (k ? ":" : "") << (*reg.failure_witness)[k].to_string();
                detail << "]";
            } else if (!reg.regular() && reg.failure_over_closure_only) {
                detail << "; rank drop certified over the closure only";
            }
            line.detail = detail.str();
        }
        rep.checks.push_back(line);
    }

    print_verify_report(rep, as_json);
    return rep.pass() ? kExitPass : kExitCheckFailed;
}

int cmd_certify(const std::string& id, bool as_json, unsigned jobs,
                const GroebnerLimits& limits) {
    std::vector<std::string> ids;
    if (id == "all")
        ids = certificate_ids();
    else
        ids.push_back(id);

    std::vector<Certificate> results(ids.size());
    std::vector<std::exception_ptr> errors(ids.size());

    if (ids.size() == 1 || jobs <= 1) {
        for (std::size_t k = 0; k < ids.size(); ++k) results[k] = run_certificate(ids[k], limits);
    } else {
        // Fixed-size worker pool over an atomic work index.
        std::mutex next_mutex;
        std::size_t next = 0;
        const unsigned workers =
            std::min<unsigned>(jobs, static_cast<unsigned>(ids.size()));
        std::vector<std::thread> pool;
        pool.reserve(workers);
        for (unsigned w = 0; w < workers; ++w) {
            pool.emplace_back([&] {
                for (;;) {
                    std::size_t mine;
                    {
                        std::lock_guard<std::mutex> lock(next_mutex);
                        if (next >= ids.size()) return;
                        mine = next++;
                    }
                    try {
                        results[mine] = run_certificate(ids[mine], limits);
                    } catch (...) {
                        errors[mine] = std::current_exception();
                    }
                }
            });
        }
        for (auto& t : pool) t.join();
        for (const auto& err : errors)
            if (err) std::rethrow_exception(err);
    }

    bool all_pass = true;
    if (as_json) {
        nlohmann::json doc = nlohmann::json::array();
        for (const auto& cert : results) {
            doc.push_back(certificate_to_json(cert));
            all_pass = all_pass && cert.pass();
        }
        std::cout << doc.dump(2) << "\n";
    } else {
        for (const auto& cert : results) {
            std::cout << certificate_to_text(cert);
            all_pass = all_pass && cert.pass();
        }
        if (ids.size() > 1)
            std::cout << "aggregate: " << (all_pass ? "PASS" : "FAIL") << " ("
                      << ids.size() << " certificates)\n";
    }
    return all_pass ? kExitPass : kExitCheckFailed;
}

int cmd_search(const std::string& shape, std::size_t bound, std::uint64_t seed,
               const std::string& out_path, bool as_json) {
    std::cout << "search shape=" << shape << " bound=" << bound << " seed=" << seed << "\n";
    const auto witness = search_witness(shape, bound, seed);
    if (!witness) {
        std::cout << "no witness found within this search grid; inconclusive, not a "
                     "non-existence proof\n";
        return kExitCheckFailed;
    }
    const nlohmann::json doc = datum_to_json(*witness);
    if (!out_path.empty()) {
        std::ofstream out(out_path);
        if (!out) throw std::invalid_argument("cannot write file: " + out_path);
        out << doc.dump(2) << "\n";
        std::cout << "witness written to " << out_path << "\n";
    }
    if (as_json || out_path.empty()) std::cout << doc.dump(2) << "\n";
    std::cout << "witness found: n=" << witness->datum.n << " r=" << witness->datum.r
              << " c=" << witness->datum.c << ", verified regular\n";
    return kExitPass;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{
        "instanton: exact verification of framed autodual/symplectic/orthogonal "
        "instanton data and machine-checkable certificates"};
    app.require_subcommand(1);

    // Shared resource caps for Groebner-based steps.
    GroebnerLimits limits;
    std::string verify_path, verify_kind, verify_regularity = "off";
    bool verify_json = false;
    auto* verify = app.add_subcommand("verify", "run the verification pipeline on a datum file");
    verify->add_option("file", verify_path, "datum file (JSON)")->required();
    verify->add_option("--kind", verify_kind,
                       "expected structure: autodual, symplectic, or orthogonal");
    verify->add_option("--regularity", verify_regularity,
                       "on|off: also decide global regularity (default off)");
    verify->add_flag("--json", verify_json, "machine-readable report");
    verify->add_option("--max-basis", limits.max_basis,
                       "Groebner basis size cap (default 512)");
    verify->add_option("--max-terms", limits.max_terms,
                       "intermediate polynomial term cap (default 100000)");

    std::string certify_id;
    bool certify_json = false;
    unsigned certify_jobs = std::max(1u, std::thread::hardware_concurrency());
    auto* certify = app.add_subcommand("certify", "replay a named certificate, or all of them");
    certify->add_option("id", certify_id, "certificate id, or: all")->required();
    certify->add_flag("--json", certify_json, "machine-readable report");
    certify->add_option("--jobs", certify_jobs, "concurrent certificates for 'all'");
    certify->add_option("--max-basis", limits.max_basis, "Groebner basis size cap (default 512)");
    certify->add_option("--max-terms", limits.max_terms,
                        "intermediate polynomial term cap (default 100000)");

    unsigned chern_charge = 1;
    std::size_t chern_cap = 8;
    auto* chern = app.add_subcommand("chern", "total Chern series 1/(1-t^2)^c, truncated");
    chern->add_option("--charge", chern_charge, "charge c")->required();
    chern->add_option("--cap", chern_cap, "truncation degree")->required();

    std::string dim_kind, dim_space;
    long long dim_rank = 0, dim_charge = 0;
    auto* dimension = app.add_subcommand("dimension", "moduli-space dimension formulas");
    dimension->add_option("--kind", dim_kind, "symplectic or orthogonal")->required();
    dimension->add_option("--space", dim_space, "p2 or p3")->required();
    dimension->add_option("--rank", dim_rank, "rank r")->required();
    dimension->add_option("--charge", dim_charge, "charge c")->required();

    std::string example_name;
    std::size_t example_n = 2;
    bool example_json = false;
    auto* example = app.add_subcommand("example", "run a worked example end to end");
    example->add_option("name", example_name, "example name (charge1)")->required();
    example->add_option("--n", example_n, "ambient projective dimension n >= 2");
    example->add_flag("--json", example_json, "machine-readable report");

    std::string search_shape, search_out;
    std::size_t search_bound = 10;
    std::uint64_t search_seed = 12345;
    bool search_json = false;
    auto* search = app.add_subcommand("search", "search for a regular datum of a given shape");
    search->add_option("--shape", search_shape,
                       "p2-charge4 or p3-rank4-charge2")->required();
    search->add_option("--bound", search_bound, "search effort bound (default 10)");
    search->add_option("--seed", search_seed, "random seed (default 12345, printed)");
    search->add_option("--out", search_out, "write any witness datum to this file");
    search->add_flag("--json", search_json, "also print the witness datum as JSON");

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::CallForAllHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return kExitInputError;
    }

    try {
        if (verify->parsed())
            return cmd_verify(verify_path, verify_kind, verify_regularity, verify_json, limits);
        if (certify->parsed()) return cmd_certify(certify_id, certify_json, certify_jobs, limits);
        if (chern->parsed()) {
            std::cout << chern_series(chern_charge, chern_cap).to_string() << "\n";
            return kExitPass;
        }
        if (dimension->parsed()) {
            const auto kind = structure_kind_from_string(dim_kind);
            if (!kind) throw std::invalid_argument("unknown --kind: " + dim_kind);
            std::cout << moduli_dimension(*kind, dim_space, dim_rank, dim_charge) << "\n";
            return kExitPass;
        }
        if (example->parsed()) {
            if (example_name != "charge1")
                throw std::invalid_argument("unknown example: " + example_name);
            const Certificate cert = certify_charge1_example(example_n);
            if (example_json)
                std::cout << certificate_to_json(cert).dump(2) << "\n";
            else
                std::cout << certificate_to_text(cert);
            return cert.pass() ? kExitPass : kExitCheckFailed;
        }
        if (search->parsed())
            return cmd_search(search_shape, search_bound, search_seed, search_out, search_json);
        throw std::invalid_argument("no subcommand given");
    } catch (const instanton::ResourceCapError& e) {
        std::cerr << "resource cap exceeded: " << e.what() << "\n";
        return kExitResourceCap;
    } catch (const nlohmann::json::exception& e) {
        std::cerr << "input error: " << e.what() << "\n";
        return kExitInputError;
    } catch (const instanton::ParseError& e) {
        std::cerr << "input error: " << e.what() << "\n";
        return kExitInputError;
    } catch (const std::invalid_argument& e) {
        std::cerr << "input error: " << e.what() << "\n";
        return kExitInputError;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitInputError;
    }
}
