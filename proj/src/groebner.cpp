// instanton-verify: exact computer algebra for framed autodual instanton data.
// Distributed under the MIT license; see LICENSE in the repository root.

#include "instanton/groebner.hpp"

#include <algorithm>
#include <cstdio>
#include <set>
#include <utility>

namespace instanton {

namespace {

void require_ring(const RingPtr& expect, const Poly& p) {
    if (p.ring().get() != expect.get())
        throw std::invalid_argument("polynomial belongs to a different ring");
}

void check_terms(const Poly& p, const GroebnerLimits& limits) {
    if (p.term_count() > limits.max_terms)
        throw ResourceCapError("term-count cap exceeded (" + std::to_string(p.term_count()) +
                               " > " + std::to_string(limits.max_terms) +
                               "); raise --max-terms to continue");
}

}  // namespace

NormalFormResult normal_form(const Poly& f, const std::vector<Poly>& divisors,
                             const GroebnerLimits& limits) {
    const RingPtr& ring = f.ring();
    for (const auto& d : divisors) {
        require_ring(ring, d);
        if (d.is_zero()) throw std::invalid_argument("zero divisor in normal_form");
    }
    NormalFormResult out{Poly::zero(ring), std::vector<Poly>(divisors.size(), Poly::zero(ring))};
    Poly p = f;
    while (!p.is_zero()) {
        check_terms(p, limits);
        const Term lt = p.leading_term();
        bool reduced = false;
        for (std::size_t k = 0; k < divisors.size(); ++k) {
            const Monomial& dm = divisors[k].leading_monomial();
            if (!monomial_divides(dm, lt.mono)) continue;
            const Monomial shift = monomial_div(lt.mono, dm);
            const GaussRational coef = lt.coeff / divisors[k].leading_coeff();
            p = p.add_scaled(divisors[k], -coef, shift);
            out.cofactors[k] = out.cofactors[k] + Poly::monomial(ring, shift, coef);
            reduced = true;
            break;
        }
        if (!reduced) {
            // Move the irreducible leading term into the remainder.
            Poly term = Poly::monomial(ring, lt.mono, lt.coeff);
            out.remainder = out.remainder + term;
            p = p - term;
        }
    }
    return out;
}

// ---------------------------------------------------------------------------
// Buchberger
// ---------------------------------------------------------------------------

namespace {

Poly s_polynomial(const Poly& f, const Poly& g) {
    const Monomial lcm = monomial_lcm(f.leading_monomial(), g.leading_monomial());
    const Monomial sf = monomial_div(lcm, f.leading_monomial());
    const Monomial sg = monomial_div(lcm, g.leading_monomial());
    const RingPtr& ring = f.ring();
    Poly left = Poly::zero(ring).add_scaled(f, f.leading_coeff().inverse(), sf);
    Poly right = Poly::zero(ring).add_scaled(g, g.leading_coeff().inverse(), sg);
    return left - right;
}

/// Full tail reduction of f against the (pairwise LM-incomparable) divisors.
Poly reduce_full(const Poly& f, const std::vector<Poly>& divisors, const GroebnerLimits& limits) {
    return normal_form(f, divisors, limits).remainder;
}

}  // namespace

GroebnerBasis GroebnerBasis::compute(const std::vector<Poly>& gens, const GroebnerLimits& limits) {
    if (gens.empty()) throw std::invalid_argument("groebner basis of an empty generator list");
    const RingPtr ring = gens.front().ring();
    std::vector<Poly> basis;
    for (const auto& g : gens) {
        require_ring(ring, g);
        if (!g.is_zero()) basis.push_back(g.monic());
    }
    if (basis.empty()) return GroebnerBasis(ring, {});

    struct Pair {
        std::size_t i, j;  // i < j
        Monomial lcm;
        std::uint64_t degree;
    };
    auto make_pair = [&](std::size_t i, std::size_t j) {
        Monomial l = monomial_lcm(basis[i].leading_monomial(), basis[j].leading_monomial());
        const std::uint64_t d = total_degree(l);
        return Pair{i, j, std::move(l), d};
    };

    std::vector<Pair> pending;
    std::set<std::pair<std::size_t, std::size_t>> pending_keys;
    auto push_pair = [&](std::size_t i, std::size_t j) {
        pending.push_back(make_pair(i, j));
        pending_keys.emplace(i, j);
    };
    for (std::size_t i = 0; i < basis.size(); ++i)
        for (std::size_t j = i + 1; j < basis.size(); ++j) push_pair(i, j);

    while (!pending.empty()) {
        // Normal selection: smallest lcm degree, ties by the monomial order.
        std::size_t best = 0;
        for (std::size_t k = 1; k < pending.size(); ++k) {
            if (pending[k].degree < pending[best].degree ||
                (pending[k].degree == pending[best].degree &&
                 ring->cmp(pending[k].lcm, pending[best].lcm) < 0))
                best = k;
        }
        Pair pair = std::move(pending[best]);
        pending.erase(pending.begin() + best);
        pending_keys.erase({pair.i, pair.j});

        const Poly& fi = basis[pair.i];
        const Poly& fj = basis[pair.j];
        // Buchberger's first criterion: coprime leading monomials.
        if (monomial_coprime(fi.leading_monomial(), fj.leading_monomial())) continue;
        // Buchberger's second (chain) criterion.
        {
            bool skip = false;
            for (std::size_t k = 0; k < basis.size() && !skip; ++k) {
                if (k == pair.i || k == pair.j) continue;
                if (!monomial_divides(basis[k].leading_monomial(), pair.lcm)) continue;
                auto key_ik = std::minmax(pair.i, k);
                auto key_jk = std::minmax(pair.j, k);
                if (!pending_keys.count({key_ik.first, key_ik.second}) &&
                    !pending_keys.count({key_jk.first, key_jk.second}))
                    skip = true;
            }
            if (skip) continue;
        }

        Poly s = s_polynomial(fi, fj);
        Poly r = reduce_full(s, basis, limits);
        if (r.is_zero()) continue;
        check_terms(r, limits);
        basis.push_back(r.monic());
        if (basis.size() > limits.max_basis)
            throw ResourceCapError("basis-size cap exceeded (" + std::to_string(basis.size()) +
                                   " > " + std::to_string(limits.max_basis) +
                                   "); raise --max-basis to continue");
        const std::size_t newest = basis.size() - 1;
        for (std::size_t k = 0; k < newest; ++k) push_pair(k, newest);
    }

    // Interreduce to the unique reduced basis: drop elements whose leading
    // monomial is divisible by another's, then fully tail-reduce each element
    // against the rest and normalize to monic.
    std::vector<Poly> minimal;
    for (std::size_t k = 0; k < basis.size(); ++k) {
        bool redundant = false;
        for (std::size_t l = 0; l < basis.size() && !redundant; ++l) {
            if (l == k) continue;
            if (!monomial_divides(basis[l].leading_monomial(), basis[k].leading_monomial()))
                continue;
            // Equal leading monomials: keep the earlier element only.
            if (basis[l].leading_monomial() == basis[k].leading_monomial())
                redundant = l < k;
            else
                redundant = true;
        }
        if (!redundant) minimal.push_back(basis[k]);
    }
    std::vector<Poly> reduced;
    for (std::size_t k = 0; k < minimal.size(); ++k) {
        std::vector<Poly> others;
        others.reserve(minimal.size() - 1);
        for (std::size_t l = 0; l < minimal.size(); ++l)
            if (l != k) others.push_back(minimal[l]);
        Poly r = others.empty() ? minimal[k] : reduce_full(minimal[k], others, limits);
        if (!r.is_zero()) reduced.push_back(r.monic());
    }
    std::sort(reduced.begin(), reduced.end(), [&](const Poly& a, const Poly& b) {
        return ring->cmp(a.leading_monomial(), b.leading_monomial()) > 0;
    });
    return GroebnerBasis(ring, std::move(reduced));
}

bool GroebnerBasis::contains_one() const {
    for (const auto& e : elements_)
        if (e.is_constant() && !e.is_zero()) return true;
    return false;
}

Poly GroebnerBasis::reduce(const Poly& f, const GroebnerLimits& limits) const {
    if (elements_.empty()) return f;
    return normal_form(f, elements_, limits).remainder;
}

std::string GroebnerBasis::fingerprint() const {
    std::uint64_t hash = 1469598103934665603ull;  // FNV-1a offset basis
    auto mix = [&](const std::string& s) {
        for (unsigned char c : s) {
            hash ^= c;
            hash *= 1099511628211ull;
        }
    };
    long maxdeg = -1;
    for (const auto& e : elements_) {
        mix(e.to_string());
        mix(";");
        maxdeg = std::max(maxdeg, e.degree());
    }
    char hex[17];
    std::snprintf(hex, sizeof hex, "%016llx", static_cast<unsigned long long>(hash));
    return "size=" + std::to_string(elements_.size()) + ";maxdeg=" + std::to_string(maxdeg) +
           ";fnv=" + hex;
}

// ---------------------------------------------------------------------------
// Membership / equality / radical / projective emptiness
// ---------------------------------------------------------------------------

MembershipCertificate ideal_member(const Poly& f, const GroebnerBasis& basis,
                                   const GroebnerLimits& limits) {
    require_ring(basis.ring(), f);
    if (basis.is_zero_ideal()) return MembershipCertificate{f.is_zero(), f};
    NormalFormResult nf = normal_form(f, basis.elements(), limits);
    if (nf.remainder.is_zero()) {
        // Soundness: rebuild f from the tracked cofactors.
        Poly rebuilt = Poly::zero(f.ring());
        for (std::size_t k = 0; k < basis.elements().size(); ++k)
            rebuilt = rebuilt + nf.cofactors[k] * basis.elements()[k];
        if (!(rebuilt == f))
            throw std::logic_error("ideal_member: cofactor reconstruction failed");
        return MembershipCertificate{true, std::move(nf.remainder)};
    }
    return MembershipCertificate{false, std::move(nf.remainder)};
}

Ideal::Ideal(RingPtr ring, std::vector<Poly> gens) : ring_(std::move(ring)), gens_(std::move(gens)) {
    for (const auto& g : gens_) require_ring(ring_, g);
}

const GroebnerBasis& Ideal::basis(const GroebnerLimits& limits) const {
    if (!cache_) cache_ = GroebnerBasis::compute(gens_, limits);
    return *cache_;
}

bool ideal_equal(const Ideal& a, const Ideal& b, const GroebnerLimits& limits) {
    if (a.ring().get() != b.ring().get())
        throw std::invalid_argument("ideal_equal: different rings");
    const GroebnerBasis& ga = a.basis(limits);
    const GroebnerBasis& gb = b.basis(limits);
    for (const auto& f : a.generators())
        if (!ideal_member(f, gb, limits).member) return false;
    for (const auto& f : b.generators())
        if (!ideal_member(f, ga, limits).member) return false;
    return true;
}

bool radical_member(const Poly& f, const std::vector<Poly>& gens, const GroebnerLimits& limits) {
    if (gens.empty()) throw std::invalid_argument("radical_member: empty generator list");
    const RingPtr& ring = gens.front().ring();
    require_ring(ring, f);
    if (f.is_zero()) return true;
    std::string aux_name;
    RingPtr ext = PolyRing::with_extra_variable(ring, &aux_name);
    const std::size_t aux = *ext->index_of(aux_name);
    std::vector<Poly> ext_gens;
    ext_gens.reserve(gens.size() + 1);
    for (const auto& g : gens) ext_gens.push_back(g.lift_to(ext));
    // 1 - t*f
    Poly one = Poly::constant(ext, GaussRational(1));
    ext_gens.push_back(one - Poly::variable(ext, aux) * f.lift_to(ext));
    return GroebnerBasis::compute(ext_gens, limits).contains_one();
}

bool projective_empty(const std::vector<Poly>& gens, const std::vector<std::size_t>& coord_vars,
                      const GroebnerLimits& limits) {
    if (gens.empty()) throw std::invalid_argument("projective_empty: empty generator list");
    if (coord_vars.empty()) throw std::invalid_argument("projective_empty: no coordinates given");
    const RingPtr& ring = gens.front().ring();
    for (const auto& g : gens) {
        require_ring(ring, g);
        if (!g.homogeneous_in(coord_vars))
            throw std::invalid_argument(
                "projective_empty: generator not homogeneous in the coordinate variables");
    }
    for (std::size_t v : coord_vars) {
        if (!radical_member(Poly::variable(ring, v), gens, limits)) return false;
    }
    return true;
}

}  // namespace instanton
