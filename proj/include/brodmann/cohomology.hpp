#pragma once

// Ratliff-Rush closures and degreewise zeroth local cohomology of the
// associated graded ring G = sum_n I^n/I^(n+1).

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "ass.hpp"
#include "errors.hpp"
#include "ideal.hpp"

namespace brodmann {

struct RRResult {
    MonomialIdeal closure;
    std::size_t stabilized_at_m = 0;
    bool certified = false;
    /// False if some term of the chain failed to contain its predecessor.
    bool chain_monotone = true;
};

/// Closure of I^n as the union over m of I^(n+m) : (t^(m a_1), ..., t^(m a_s)),
/// where a_i are the generators of I. The union is accepted once it is unchanged
/// for two further steps; hitting m_cap first yields certified = false.
inline RRResult ratliff_rush(const MonomialIdeal& I, std::uint64_t n, std::size_t m_cap) {
    if (!I.is_proper_nonzero()) throw input_error("Ratliff-Rush closure needs a proper nonzero ideal");
    if (n < 1) throw input_error("Ratliff-Rush closure is defined for n >= 1");
    if (m_cap < 2) throw input_error("m_cap must be at least 2");

    PowerSequence pw(I);
    RRResult res;
    std::vector<MonomialIdeal> unions;
    MonomialIdeal prev_term;
    for (std::size_t m = 0; m <= m_cap; ++m) {
        std::vector<Monomial> scaled;
        for (const auto& a : I.generators()) scaled.push_back(pow(a, m));
        MonomialIdeal term = colon(pw(n + m), MonomialIdeal::generated_by(std::move(scaled), I.r()));
        if (m > 0 && !is_subset(prev_term, term)) res.chain_monotone = false;
        unions.push_back(m == 0 ? term : sum(unions.back(), term));
        prev_term = std::move(term);
        if (m >= 2 && unions[m] == unions[m - 1] && unions[m - 1] == unions[m - 2]) {
            res.closure = unions[m];
            res.stabilized_at_m = m - 2;
            res.certified = true;
            return res;
        }
    }
    res.closure = unions.back();
    res.stabilized_at_m = m_cap;
    return res;
}

struct H0Report {
    std::uint64_t n = 0;
    MonomialIdeal numerator;
    std::vector<Monomial> witness_monomials;  ///< numerator minus I^(n+1), canonical order
    bool nonzero = false;
};

/// H^0_m(I^n/I^(n+1)) as (I^n cap I[1]^(n+1) cap ... cap I[r]^(n+1)) / I^(n+1),
/// with every monomial of the finite difference listed. r = 1 reports zero.
inline H0Report h0_m_monomials(const MonomialIdeal& I, std::uint64_t n,
                               std::size_t budget = default_budget) {
    if (!I.is_proper_nonzero()) throw input_error("h0_m_monomials needs a proper nonzero ideal");
    H0Report rep;
    rep.n = n;
    if (I.r() < 2) {
        rep.numerator = power(I, n + 1);
        return rep;
    }
    rep.numerator = detail::h0_numerator(I, VariablePrime::full(I.r()).support, n);
    const MonomialIdeal denom = power(I, n + 1);

    // The quotient has finite length, so every monomial of the difference lies
    // below the componentwise max of both generating sets.
    Monomial box = lcm(rep.numerator.max_exponents(), denom.max_exponents());
    long double points = 1;
    for (std::size_t i = 0; i < box.size(); ++i) points *= static_cast<long double>(box[i]) + 1;
    if (points > static_cast<long double>(budget))
        throw resource_error("h0 witness box exceeds enumeration budget");

    Monomial u(I.r());
    for (;;) {
        if (rep.numerator.contains(u) && !denom.contains(u)) rep.witness_monomials.push_back(u);
        std::size_t k = 0;
        for (; k < u.size(); ++k) {
            if (u[k] < box[k]) {
                ++u[k];
                break;
            }
            u[k] = 0;
        }
        if (k == u.size()) break;
    }
    std::sort(rep.witness_monomials.begin(), rep.witness_monomials.end(), std::greater<>());
    rep.nonzero = !rep.witness_monomials.empty();
    if (rep.nonzero != (rep.numerator != denom))
        throw inconsistency_error("h0 witness enumeration disagrees with the ideal comparison");
    return rep;
}

struct A0Result {
    std::optional<std::uint64_t> a0;  ///< empty stands for -infinity
    std::vector<bool> per_degree;     ///< per_degree[k]: H^0_{R+}(G)_k != 0, k = 0..n_max-1
    bool certified = true;
    std::vector<std::string> warnings;
};

/// Largest degree k < n_max with (closure(I^(k+1)) cap I^k) / I^(k+1) nonzero.
inline A0Result a0_observed(const MonomialIdeal& I, std::size_t n_max, std::size_t m_cap) {
    if (!I.is_proper_nonzero()) throw input_error("a0_observed needs a proper nonzero ideal");
    if (n_max < 1) throw input_error("n_max must be at least 1");
    A0Result res;
    PowerSequence pw(I);
    for (std::size_t n = 1; n <= n_max; ++n) {
        RRResult rr = ratliff_rush(I, n, m_cap);
        if (!rr.certified) {
            res.certified = false;
            res.warnings.push_back("closure of I^" + std::to_string(n) + " not certified within m_cap=" +
                                   std::to_string(m_cap));
        }
        if (!rr.chain_monotone)
            res.warnings.push_back("non-monotone closure chain at n=" + std::to_string(n));
        bool nonzero = intersect(rr.closure, pw(n - 1)) != pw(n);
        res.per_degree.push_back(nonzero);
        if (nonzero) res.a0 = n - 1;
    }
    return res;
}

}  // namespace brodmann
