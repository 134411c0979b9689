#pragma once

// Associated primes of R/J and of I^n/I^(n+1) for monomial ideals.
//
// Index convention: ass_power(I, n) is Ass(I^n/I^(n+1)) for n >= 0, which for
// monomial ideals coincides with Ass(R/I^(n+1)).

#include <algorithm>
#include <atomic>
#include <cstddef>
#include <cstdint>
#include <exception>
#include <map>
#include <optional>
#include <set>
#include <string>
#include <thread>
#include <utility>
#include <vector>

#include "errors.hpp"
#include "ideal.hpp"

namespace brodmann {

/// A monomial prime (t_i : i in support). Indices are 0-based.
struct VariablePrime {
    std::vector<std::size_t> support;

    static VariablePrime full(std::size_t r) {
        VariablePrime p;
        for (std::size_t i = 0; i < r; ++i) p.support.push_back(i);
        return p;
    }

    std::size_t size() const noexcept { return support.size(); }
    bool contains(std::size_t i) const {
        return std::binary_search(support.begin(), support.end(), i);
    }

    /// The ideal generated by the variables of the support, in ambient r.
    MonomialIdeal ideal(std::size_t r) const {
        std::vector<Monomial> gens;
        for (auto i : support) gens.push_back(variable(r, i));
        return MonomialIdeal::generated_by(std::move(gens), r);
    }

    friend bool operator==(const VariablePrime&, const VariablePrime&) = default;
    friend auto operator<=>(const VariablePrime& a, const VariablePrime& b) {
        if (a.support.size() != b.support.size()) return a.support.size() <=> b.support.size();
        return a.support <=> b.support;
    }
};

using PrimeSet = std::set<VariablePrime>;

/// "{x1,x2}" with 1-based variable names.
inline std::string to_string(const VariablePrime& p) {
    std::string s = "{";
    for (std::size_t k = 0; k < p.support.size(); ++k) {
        if (k) s += ',';
        s += 'x' + std::to_string(p.support[k] + 1);
    }
    return s + '}';
}

/// "{x1,x2},{x1,x2,x3}"; the empty set prints as "-".
inline std::string to_string(const PrimeSet& ps) {
    if (ps.empty()) return "-";
    std::string s;
    for (const auto& p : ps) {
        if (!s.empty()) s += ',';
        s += to_string(p);
    }
    return s;
}

struct AssWitness {
    VariablePrime prime;
    Monomial witness;  ///< J : witness == prime
};

/// One witness monomial per associated prime of R/J.
///
/// For a subset S of variables, a monomial m with x_i m in J for i in S, and
/// with m_i at the maximal generator exponent for i outside S, satisfies
/// J : m = (x_i : i in S) exactly when m is not in J. Every associated prime has
/// such a witness with m_i < max exponent on S, so the search below is complete.
inline std::vector<AssWitness> ass_witnesses(const MonomialIdeal& J,
                                             std::size_t budget = default_budget) {
    if (!J.is_proper_nonzero()) throw input_error("associated primes need a proper nonzero ideal");
    const std::size_t r = J.r();
    if (r > 24) throw resource_error("too many variables for subset enumeration");
    const Monomial cap = J.max_exponents();

    std::vector<AssWitness> out;
    for (std::uint64_t mask = 1; mask < (std::uint64_t{1} << r); ++mask) {
        std::vector<std::size_t> S;
        bool usable = true;
        long double box = 1;
        for (std::size_t i = 0; i < r; ++i)
            if (mask >> i & 1) {
                if (cap[i] == 0) usable = false;
                S.push_back(i);
                box *= cap[i];
            }
        if (!usable) continue;
        if (box > static_cast<long double>(budget))
            throw resource_error("witness box exceeds enumeration budget");

        Monomial m = cap;
        for (auto i : S) m[i] = 0;
        for (;;) {
            if (!J.contains(m)) {
                bool all_in = true;
                for (auto i : S) {
                    ++m[i];
                    bool in = J.contains(m);
                    --m[i];
                    if (!in) {
                        all_in = false;
                        break;
                    }
                }
                if (all_in) {
                    out.push_back({VariablePrime{S}, m});
                    break;
                }
            }
            // odometer over the S-coordinates, each in [0, cap_i - 1]
            std::size_t k = 0;
            for (; k < S.size(); ++k) {
                if (m[S[k]] + 1 < cap[S[k]]) {
                    ++m[S[k]];
                    break;
                }
                m[S[k]] = 0;
            }
            if (k == S.size()) break;
        }
    }
    std::sort(out.begin(), out.end(),
              [](const AssWitness& a, const AssWitness& b) { return a.prime < b.prime; });
    return out;
}

/// Ass(R/J) for a proper nonzero monomial ideal J.
inline PrimeSet ass_of_quotient(const MonomialIdeal& J, std::size_t budget = default_budget) {
    PrimeSet out;
    for (auto& w : ass_witnesses(J, budget)) out.insert(std::move(w.prime));
    return out;
}

namespace detail {

/// Numerator of H^0 of I^n/I^(n+1) with respect to the prime on `vars`:
/// I^n intersected with I[i]^(n+1) for every i in vars.
inline MonomialIdeal h0_numerator(const MonomialIdeal& I, const std::vector<std::size_t>& vars,
                                  std::uint64_t n) {
    MonomialIdeal N = power(I, n);
    for (auto i : vars) {
        if (N.is_zero()) break;
        N = intersect(N, power(delete_variable(I, i), n + 1));
    }
    return N;
}

inline bool max_ideal_in_ass_on(const MonomialIdeal& I, const std::vector<std::size_t>& vars,
                                std::uint64_t n) {
    return h0_numerator(I, vars, n) != power(I, n + 1);
}

}  // namespace detail

/// Whether (t_1, ..., t_r) is associated to I^n/I^(n+1), decided by the
/// nonvanishing of (I^n cap I[1]^(n+1) cap ... cap I[r]^(n+1)) / I^(n+1).
/// Returns false for r = 1 by convention.
inline bool max_ideal_in_ass(const MonomialIdeal& I, std::uint64_t n) {
    if (!I.is_proper_nonzero()) throw input_error("max_ideal_in_ass needs a proper nonzero ideal");
    if (I.r() < 2) return false;
    return detail::max_ideal_in_ass_on(I, VariablePrime::full(I.r()).support, n);
}

enum class AssMethod { quotient, recursion };

inline const char* to_string(AssMethod m) {
    return m == AssMethod::quotient ? "quotient" : "recursion";
}

namespace detail {

class AssRecursion {
public:
    explicit AssRecursion(std::uint64_t n) : n_(n) {}

    PrimeSet operator()(const MonomialIdeal& I, const std::vector<std::size_t>& vars) {
        auto key = std::make_pair(I, vars);
        if (auto it = memo_.find(key); it != memo_.end()) return it->second;
        PrimeSet out = compute(I, vars);
        memo_.emplace(std::move(key), out);
        return out;
    }

private:
    PrimeSet compute(const MonomialIdeal& I, const std::vector<std::size_t>& vars) {
        if (I.is_unit()) return {};
        if (vars.size() == 1) return {VariablePrime{vars}};
        if (I.is_pure_power()) {
            VariablePrime p;
            for (const auto& g : I.generators())
                for (std::size_t i = 0; i < g.size(); ++i)
                    if (g[i]) p.support.push_back(i);
            std::sort(p.support.begin(), p.support.end());
            return {p};
        }
        PrimeSet out;
        for (auto i : vars) {
            std::vector<std::size_t> rest;
            for (auto v : vars)
                if (v != i) rest.push_back(v);
            auto sub = (*this)(delete_variable(I, i), rest);
            out.insert(sub.begin(), sub.end());
        }
        if (max_ideal_in_ass_on(I, vars, n_)) out.insert(VariablePrime{vars});
        return out;
    }

    std::uint64_t n_;
    std::map<std::pair<MonomialIdeal, std::vector<std::size_t>>, PrimeSet> memo_;
};

}  // namespace detail

/// Ass(I^n/I^(n+1)).
///
/// quotient:  Ass(R/I^(n+1)) by witness search.
/// recursion: Ass minus the maximal prime is the union over i of Ass(I[i]^n/I[i]^(n+1)),
///            with the maximal prime added iff max_ideal_in_ass. Pure-power ideals
///            short-circuit to the single prime on their support.
/// The unit ideal gives the empty set.
inline PrimeSet ass_power(const MonomialIdeal& I, std::uint64_t n,
                          AssMethod method = AssMethod::quotient,
                          std::size_t budget = default_budget) {
    if (I.is_zero()) throw input_error("associated primes of the zero ideal");
    if (I.is_unit()) return {};
    if (method == AssMethod::quotient) return ass_of_quotient(power(I, n + 1), budget);
    return detail::AssRecursion(n)(I, VariablePrime::full(I.r()).support);
}

struct AssProfile {
    MonomialIdeal ideal;
    AssMethod method = AssMethod::quotient;
    std::vector<PrimeSet> entries;  ///< entries[n] = Ass(I^n/I^(n+1))
    std::optional<std::size_t> observed_stable_at;
    std::vector<std::size_t> increases;     ///< n with entries[n] strictly inside entries[n+1]
    std::vector<std::size_t> decreases;     ///< n with entries[n+1] strictly inside entries[n]
    std::vector<std::size_t> incomparable;  ///< n where neither contains the other

    bool non_monotone() const {
        return !incomparable.empty() || (!increases.empty() && !decreases.empty());
    }
};

inline bool is_subset(const PrimeSet& a, const PrimeSet& b) {
    return std::includes(b.begin(), b.end(), a.begin(), a.end());
}

/// Fills observed_stable_at and the monotonicity lists from `entries`.
/// The profile is reported stable from the smallest n0 < n_max with all entries n >= n0
/// equal; a change at the last step leaves it unset.
inline void summarize(AssProfile& p) {
    p.observed_stable_at.reset();
    p.increases.clear();
    p.decreases.clear();
    p.incomparable.clear();
    const auto& e = p.entries;
    for (std::size_t n = 0; n + 1 < e.size(); ++n) {
        if (e[n] == e[n + 1]) continue;
        if (is_subset(e[n], e[n + 1])) p.increases.push_back(n);
        else if (is_subset(e[n + 1], e[n])) p.decreases.push_back(n);
        else p.incomparable.push_back(n);
    }
    if (e.size() < 2 || e[e.size() - 2] != e.back()) return;
    std::size_t n0 = e.size() - 1;
    while (n0 > 0 && e[n0 - 1] == e.back()) --n0;
    p.observed_stable_at = n0;
}

/// Ass(I^n/I^(n+1)) for n = 0..n_max. Degrees are evaluated on up to `jobs`
/// threads; the result does not depend on `jobs`.
inline AssProfile ass_profile(const MonomialIdeal& I, std::size_t n_max,
                              AssMethod method = AssMethod::quotient, unsigned jobs = 1,
                              std::size_t budget = default_budget) {
    if (!I.is_proper_nonzero()) throw input_error("ass_profile needs a proper nonzero ideal");
    if (n_max < 1) throw input_error("n_max must be at least 1");

    AssProfile p;
    p.ideal = I;
    p.method = method;
    p.entries.resize(n_max + 1);

    std::vector<MonomialIdeal> powers;
    if (method == AssMethod::quotient) {
        PowerSequence seq(I);
        for (std::size_t n = 0; n <= n_max; ++n) powers.push_back(seq(n + 1));
    }
    auto work = [&](std::size_t n) {
        p.entries[n] = method == AssMethod::quotient ? ass_of_quotient(powers[n], budget)
                                                     : ass_power(I, n, method, budget);
    };

    jobs = std::max(1u, std::min<unsigned>(jobs, static_cast<unsigned>(n_max + 1)));
    if (jobs == 1) {
        for (std::size_t n = 0; n <= n_max; ++n) work(n);
    } else {
        std::atomic<std::size_t> next{0};
        std::vector<std::exception_ptr> errors(n_max + 1);
        std::vector<std::thread> pool;
        for (unsigned t = 0; t < jobs; ++t)
            pool.emplace_back([&] {
                for (std::size_t n; (n = next++) <= n_max;) {
                    try {
                        work(n);
                    } catch (...) {
                        errors[n] = std::current_exception();
                    }
                }
            });
        for (auto& th : pool) th.join();
        for (auto& e : errors)
            if (e) std::rethrow_exception(e);
    }
    summarize(p);
    return p;
}

}  // namespace brodmann
