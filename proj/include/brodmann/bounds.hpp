#pragma once

// Explicit stabilization thresholds for Ass(I^n/I^(n+1)) in terms of the
// number of variables r, the number of minimal generators s and the maximal
// generator degree d.

#include <cstdint>
#include <optional>
#include <string>

#include "ass.hpp"
#include "errors.hpp"
#include "exact_radical.hpp"
#include "ideal.hpp"

namespace brodmann {

struct BoundReport {
    std::uint64_t r = 0, s = 0, d = 0;

    ExactRadical B1;  ///< generator degree bound for H^0_m(G)
    BigInt B1_ceil;
    BigInt B2;  ///< bound on a_0(G)

    ExactRadical B3;   ///< bracket read as grouping: X - 1
    BigInt B3_ceil;
    BigInt B3_floor;   ///< bracket read as integer part: floor(X) - 1
    BigInt B4;         ///< ceil(s * B3)
    bool B4_times_B3_plus_1_below_B2 = false;

    ExactRadical B;  ///< max(B1, B2)
    BigInt B_ceil;
    bool B_is_B2 = false;
};

/// B1 = d (rs + s + d) sqrt(r)^(r+1) (sqrt(2) d)^((r+1)(s-1))
inline ExactRadical bound_B1(std::uint64_t r, std::uint64_t s, std::uint64_t d) {
    ExactRadical sqrt2 = ExactRadical::sqrt_of(2), sqrtr = ExactRadical::sqrt_of(r);
    return ExactRadical(BigInt(BigInt(d) * (BigInt(r) * s + s + d))) * pow(sqrtr, r + 1) *
           pow(sqrt2 * ExactRadical(BigInt(d)), (r + 1) * (s - 1));
}

/// B2 = s (s + r)^4 s^(r+2) d^2 (2 d^2)^(s^2 - s + 1)
inline BigInt bound_B2(std::uint64_t r, std::uint64_t s, std::uint64_t d) {
    using boost::multiprecision::pow;
    BigInt S(s), D(d);
    return BigInt(S * pow(BigInt(s + r), 4) * pow(S, static_cast<unsigned>(r + 2)) * D * D *
           pow(BigInt(2 * D * D), static_cast<unsigned>(s * s - s + 1)));
}

/// The quantity X = (s + r)^2 d (sqrt(2) d)^(s^2 - s + 1) sqrt(s)^(r+2) inside B3's bracket.
inline ExactRadical bound_B3_bracket(std::uint64_t r, std::uint64_t s, std::uint64_t d) {
    ExactRadical sqrt2 = ExactRadical::sqrt_of(2), sqrts = ExactRadical::sqrt_of(s);
    return ExactRadical(BigInt(BigInt(s + r) * (s + r) * d)) *
           pow(sqrt2 * ExactRadical(BigInt(d)), s * s - s + 1) * pow(sqrts, r + 2);
}

inline BoundReport bound_report(std::uint64_t r, std::uint64_t s, std::uint64_t d) {
    if (r < 1 || s < 1 || d < 1) throw input_error("bound parameters r, s, d must be positive");
    BoundReport rep;
    rep.r = r;
    rep.s = s;
    rep.d = d;
    rep.B1 = bound_B1(r, s, d);
    rep.B1_ceil = rep.B1.ceil();
    rep.B2 = bound_B2(r, s, d);

    ExactRadical X = bound_B3_bracket(r, s, d);
    rep.B3 = X - ExactRadical(1);
    rep.B3_ceil = rep.B3.ceil();
    rep.B3_floor = X.floor() - 1;
    rep.B4 = (ExactRadical(BigInt(s)) * rep.B3).ceil();
    rep.B4_times_B3_plus_1_below_B2 = ExactRadical(rep.B4) * X < ExactRadical(rep.B2);

    rep.B_is_B2 = rep.B1 <= ExactRadical(rep.B2);
    rep.B = rep.B_is_B2 ? ExactRadical(rep.B2) : rep.B1;
    rep.B_ceil = rep.B.ceil();
    return rep;
}

/// Parameters (r, s, d) of a proper nonzero monomial ideal.
inline BoundReport bound_report(const MonomialIdeal& I) {
    if (!I.is_proper_nonzero()) throw input_error("bounds need a proper nonzero ideal");
    return bound_report(I.r(), I.size(), I.max_degree());
}

struct ObservedComparison {
    std::optional<std::size_t> observed_stable_at;
    BigInt B_ceil;
    std::optional<BigInt> slack;  ///< ceil(B) - observed_stable_at
    bool within_bound = true;     ///< observed_stable_at <= ceil(B), vacuous if unobserved
    std::string note;
};

/// Places an observed profile against the threshold B for its ideal. Entries at
/// indices >= B that disagree would contradict the bound and raise.
inline ObservedComparison compare_with_observed(const MonomialIdeal& I, const AssProfile& profile) {
    if (profile.ideal != I) throw input_error("profile was computed for a different ideal");
    BoundReport rep = bound_report(I);
    ObservedComparison out;
    out.B_ceil = rep.B_ceil;
    out.observed_stable_at = profile.observed_stable_at;

    const auto& e = profile.entries;
    if (rep.B_ceil < BigInt(e.size())) {
        auto b = static_cast<std::size_t>(rep.B_ceil);
        for (std::size_t n = b + 1; n < e.size(); ++n)
            if (e[n] != e[b])
                throw inconsistency_error("profile changes at n=" + std::to_string(n) +
                                          " beyond the stabilization bound " + rep.B_ceil.str());
    }
    if (out.observed_stable_at) {
        out.slack = rep.B_ceil - BigInt(*out.observed_stable_at);
        out.within_bound = *out.observed_stable_at <= rep.B_ceil;
        out.note = "observed stabilization at n=" + std::to_string(*out.observed_stable_at) +
                   ", bound B=" + rep.B_ceil.str() + " (" +
                   std::to_string(decimal_digits(rep.B_ceil)) + " digits)";
    } else {
        out.note = "no stabilization observed within n<=" + std::to_string(e.size() - 1) +
                   ", bound B=" + rep.B_ceil.str();
    }
    return out;
}

}  // namespace brodmann
