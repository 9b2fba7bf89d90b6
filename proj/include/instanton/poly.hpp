// instanton-verify: exact computer algebra for framed autodual instanton data.
// Distributed under the MIT license; see LICENSE in the repository root.

#pragma once

#include <cstdint>
#include <map>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "instanton/rational.hpp"

namespace instanton {

/// Monomial orders supported by the engine.  Default everywhere is grevlex;
/// lex exists for cross-checking order independence of ideal decisions.
enum class MonomialOrder { grevlex, lex };

/// Dense exponent vector; length equals the ring's variable count.
using Monomial = std::vector<std::uint32_t>;

std::uint64_t total_degree(const Monomial& m);
Monomial monomial_mul(const Monomial& a, const Monomial& b);
bool monomial_divides(const Monomial& divisor, const Monomial& dividend);
Monomial monomial_div(const Monomial& dividend, const Monomial& divisor);
Monomial monomial_lcm(const Monomial& a, const Monomial& b);
bool monomial_coprime(const Monomial& a, const Monomial& b);

/// Returns +1 if a > b, 0 if equal, -1 if a < b under the given order.
/// Ties inside a degree class are broken by variable index as part of the
/// order definition (grevlex: last nonzero exponent difference negative means
/// larger; lex: first nonzero exponent difference positive means larger).
int monomial_cmp(MonomialOrder order, const Monomial& a, const Monomial& b);

/// Shared variable table + monomial order.  Polynomials hold a pointer to
/// their ring; all binary operations require identical rings.
class PolyRing {
public:
    static std::shared_ptr<const PolyRing> create(std::vector<std::string> names,
                                                  MonomialOrder order = MonomialOrder::grevlex);
    /// Same variables, different order (used by the lex cross-checks).
    static std::shared_ptr<const PolyRing> with_order(const std::shared_ptr<const PolyRing>& ring,
                                                      MonomialOrder order);
    /// Same order, one fresh auxiliary variable appended (radical membership).
    static std::shared_ptr<const PolyRing> with_extra_variable(
        const std::shared_ptr<const PolyRing>& ring, std::string* chosen_name);

    std::size_t nvars() const { return names_.size(); }
    const std::string& name(std::size_t idx) const { return names_[idx]; }
    const std::vector<std::string>& names() const { return names_; }
    std::optional<std::size_t> index_of(const std::string& name) const;
    MonomialOrder order() const { return order_; }
    int cmp(const Monomial& a, const Monomial& b) const { return monomial_cmp(order_, a, b); }

private:
    PolyRing(std::vector<std::string> names, MonomialOrder order);
    std::vector<std::string> names_;
    std::map<std::string, std::size_t> index_;
    MonomialOrder order_;
};

using RingPtr = std::shared_ptr<const PolyRing>;

struct Term {
    Monomial mono;
    GaussRational coeff;
};

/// Exact multivariate polynomial over Q(i).  Terms are kept sorted strictly
/// descending under the ring order and never store a zero coefficient.
class Poly {
public:
    Poly() = default;
    explicit Poly(RingPtr ring) : ring_(std::move(ring)) {}

    static Poly zero(RingPtr ring) { return Poly(std::move(ring)); }
    static Poly constant(RingPtr ring, GaussRational value);
    static Poly variable(RingPtr ring, std::size_t var_index);
    static Poly variable(RingPtr ring, const std::string& name);
    static Poly monomial(RingPtr ring, Monomial m, GaussRational coeff);

    const RingPtr& ring() const { return ring_; }
    const std::vector<Term>& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }
    std::size_t term_count() const { return terms_.size(); }

    /// Total degree; -1 for the zero polynomial.
    long degree() const;
    const Term& leading_term() const;
    const Monomial& leading_monomial() const { return leading_term().mono; }
    const GaussRational& leading_coeff() const { return leading_term().coeff; }
    bool is_constant() const;
    GaussRational constant_value() const;  // requires is_constant()

    Poly operator-() const;
    Poly operator+(const Poly& o) const;
    Poly operator-(const Poly& o) const;
    Poly operator*(const Poly& o) const;
    Poly& operator+=(const Poly& o) { *this = *this + o; return *this; }
    Poly& operator-=(const Poly& o) { *this = *this - o; return *this; }
    Poly& operator*=(const Poly& o) { *this = *this * o; return *this; }
    bool operator==(const Poly& o) const;
    bool operator!=(const Poly& o) const { return !(*this == o); }

    Poly scaled(const GaussRational& s) const;
    /// this + s * x^shift * g, implemented as a sorted merge.
    Poly add_scaled(const Poly& g, const GaussRational& s, const Monomial& shift) const;
    Poly pow(std::uint32_t e) const;
    Poly monic() const;  // divide by the leading coefficient (error on zero)

    /// Substitutes full scalar values for all variables that occur.
    /// Missing assignments for occurring variables are an error.
    GaussRational evaluate(const std::vector<std::optional<GaussRational>>& point) const;
    /// Replaces variables by polynomials of the same ring (nullopt = keep).
    Poly substitute(const std::vector<std::optional<Poly>>& images) const;
    /// Re-interprets this polynomial in a ring that has the same variables by
    /// name (possibly more of them, possibly another order).
    Poly lift_to(const RingPtr& target) const;

    long degree_in(std::size_t var_index) const;
    bool contains_var(std::size_t var_index) const;
    /// Sum of the terms whose exponents on `vars` match `exps` exactly, with
    /// those exponents removed.  Used to split mu into z-coefficients.
    Poly coefficient_of(const std::vector<std::size_t>& vars,
                        const std::vector<std::uint32_t>& exps) const;
    /// True if all terms have the same total degree in the given variables.
    bool homogeneous_in(const std::vector<std::size_t>& vars) const;

    /// Canonical descending-term rendering; parse(print(p)) == p.
    std::string to_string() const;

    /// Internal: installs pre-sorted/combined terms (used by the engine).
    static Poly from_sorted_terms(RingPtr ring, std::vector<Term> terms);

private:
    void normalize();
    RingPtr ring_;
    std::vector<Term> terms_;
};

/// Exact quotient f / g when g divides f; nullopt otherwise.  Used by
/// fraction-free elimination, where divisibility is guaranteed.
std::optional<Poly> try_exact_div(const Poly& f, const Poly& g);
Poly exact_div(const Poly& f, const Poly& g);

/// Parses the expression grammar:
///   expr   := ['-'] term (('+'|'-') term)*
///   term   := factor ('*' factor)*
///   factor := atom ('^' uint)?
///   atom   := rational | 'i' | var | '(' expr ')'
///   rational := uint ['/' uint]
/// Whitespace is insignificant; implicit multiplication is not accepted.
Poly parse_poly(const std::string& text, const RingPtr& ring);

/// Power series in one variable t truncated at degree `cap` (inclusive).
class TruncatedSeries {
public:
    TruncatedSeries(std::size_t cap, BigRational constant);
    static TruncatedSeries one(std::size_t cap) { return TruncatedSeries(cap, BigRational(1)); }

    std::size_t cap() const { return coeff_.size() - 1; }
    const BigRational& coeff(std::size_t k) const { return coeff_[k]; }
    void set_coeff(std::size_t k, BigRational v) { coeff_[k] = std::move(v); }

    TruncatedSeries mul(const TruncatedSeries& o) const;
    TruncatedSeries pow(std::uint32_t e) const;
    bool operator==(const TruncatedSeries& o) const { return coeff_ == o.coeff_; }

    /// "1 + 2t^2 + 3t^4" style rendering (zero coefficients skipped).
    std::string to_string() const;

private:
    std::vector<BigRational> coeff_;
};

/// Total Chern series (1 - t^2)^(-c) truncated at degree cap; the t^(2k)
/// coefficient equals binomial(c - 1 + k, k), so c_1 = 0 and c_2 = c.
TruncatedSeries chern_series(std::uint32_t c, std::size_t cap);

/// The truncation of (1 - t^2)^c (used to verify chern_series exactly).
TruncatedSeries one_minus_t2_pow(std::uint32_t c, std::size_t cap);

}  // namespace instanton
