// instanton-verify: exact computer algebra for framed autodual instanton data.
// Distributed under the MIT license; see LICENSE in the repository root.
//
// Brute-force ideal-membership oracle used to cross-check the Groebner engine.
// It decides whether f lies in <g_1, ..., g_s> with cofactor degrees bounded
// by a cap, by solving one exact linear system per cap: unknowns are the
// coefficients of the cofactors q_i (all monomials of total degree <= cap),
// equations match the coefficient of every monomial occurring in f or in any
// product monomial*g_i.  This file deliberately uses only the polynomial and
// linear-algebra layers, not the Groebner module it is meant to check.

#pragma once

#include <cstdint>
#include <optional>
#include <map>
#include <vector>

#include "instanton/matrix.hpp"
#include "instanton/poly.hpp"

namespace instanton::oracle {

inline void enumerate_monomials_rec(std::size_t nvars, std::uint32_t budget, std::size_t at,
                                    Monomial& current, std::vector<Monomial>& out) {
    if (at == nvars) {
        out.push_back(current);
        return;
    }
    for (std::uint32_t e = 0; e <= budget; ++e) {
        current[at] = e;
        enumerate_monomials_rec(nvars, budget - e, at + 1, current, out);
    }
    current[at] = 0;
}

/// All monomials in nvars variables of total degree <= cap.
inline std::vector<Monomial> monomials_up_to(std::size_t nvars, std::uint32_t cap) {
    std::vector<Monomial> out;
    Monomial current(nvars, 0);
    enumerate_monomials_rec(nvars, cap, 0, current, out);
    return out;
}

/// Searches for cofactors q_i of total degree <= cofactor_cap with
/// sum q_i g_i = f.  Returns the cofactors if the linear system is solvable
/// (their correctness is re-verified by multiplication before returning).
inline std::optional<std::vector<Poly>> find_cofactors(const Poly& f,
                                                       const std::vector<Poly>& gens,
                                                       std::uint32_t cofactor_cap) {
    const RingPtr& ring = f.ring();
    const std::size_t nvars = ring->nvars();
    const std::vector<Monomial> shifts = monomials_up_to(nvars, cofactor_cap);

    // Column layout: for generator i and shift monomial m, the unknown is the
    // coefficient of m in q_i.  Skip zero generators.
    struct Column {
        std::size_t gen;
        std::size_t shift;
    };
    std::vector<Column> columns;
    // Row layout: one equation per monomial occurring anywhere.
    std::map<Monomial, std::size_t> row_of;
    auto row_index = [&](const Monomial& m) {
        auto [it, fresh] = row_of.emplace(m, row_of.size());
        (void)fresh;
        return it->second;
    };
    for (const auto& t : f.terms()) row_index(t.mono);

    struct Entry {
        std::size_t row, col;
        GaussRational value;
    };
    std::vector<Entry> entries;
    for (std::size_t i = 0; i < gens.size(); ++i) {
        if (gens[i].is_zero()) continue;
        for (std::size_t s = 0; s < shifts.size(); ++s) {
            const std::size_t col = columns.size();
            columns.push_back(Column{i, s});
            for (const auto& t : gens[i].terms()) {
                const Monomial prod = monomial_mul(t.mono, shifts[s]);
                entries.push_back(Entry{row_index(prod), col, t.coeff});
            }
        }
    }
    if (columns.empty()) return f.is_zero() ? std::make_optional(std::vector<Poly>(
                                                  gens.size(), Poly::zero(ring)))
                                            : std::nullopt;

    ScalarMatrix system(row_of.size(), columns.size(), GaussRational(0));
    for (const auto& e : entries) system.at(e.row, e.col) = system.at(e.row, e.col) + e.value;
    std::vector<GaussRational> rhs(row_of.size(), GaussRational(0));
    for (const auto& t : f.terms()) rhs[row_of.at(t.mono)] = t.coeff;

    auto solution = solve_linear(system, rhs);
    if (!solution) return std::nullopt;

    std::vector<Poly> cofactors(gens.size(), Poly::zero(ring));
    for (std::size_t c = 0; c < columns.size(); ++c) {
        const GaussRational& v = solution->particular[c];
        if (v.is_zero()) continue;
        cofactors[columns[c].gen] =
            cofactors[columns[c].gen] + Poly::monomial(ring, shifts[columns[c].shift], v);
    }
    Poly recombined = Poly::zero(ring);
    for (std::size_t i = 0; i < gens.size(); ++i) recombined = recombined + cofactors[i] * gens[i];
    if (!(recombined == f)) return std::nullopt;  // defensive; should not happen
    return cofactors;
}

/// Membership decision at a fixed cofactor-degree cap.
inline bool member_with_cap(const Poly& f, const std::vector<Poly>& gens,
                            std::uint32_t cofactor_cap) {
    return find_cofactors(f, gens, cofactor_cap).has_value();
}

/// Degree-by-degree search: tries caps 0, 1, ..., cap and reports the first
/// success (members are usually found well below the cap).
inline bool member_up_to_cap(const Poly& f, const std::vector<Poly>& gens, std::uint32_t cap) {
    if (f.is_zero()) return true;
    for (std::uint32_t d = 0; d <= cap; ++d)
        if (member_with_cap(f, gens, d)) return true;
    return false;
}

}  // namespace instanton::oracle
