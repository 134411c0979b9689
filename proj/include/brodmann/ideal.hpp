#pragma once

// Monomials and monomial ideals in K[t_1, ..., t_r]. The coefficient field is
// never materialized; every operation works on exponent vectors.

#include <algorithm>
#include <compare>
#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <limits>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "errors.hpp"

namespace brodmann {

using exponent_t = std::uint32_t;

namespace detail {

inline exponent_t checked_add(exponent_t a, exponent_t b) {
    if (a > std::numeric_limits<exponent_t>::max() - b)
        throw resource_error("exponent overflow");
    return a + b;
}

inline exponent_t checked_mul(exponent_t a, std::uint64_t k) {
    std::uint64_t v = static_cast<std::uint64_t>(a) * k;
    if (k != 0 && v / k != a) throw resource_error("exponent overflow");
    if (v > std::numeric_limits<exponent_t>::max()) throw resource_error("exponent overflow");
    return static_cast<exponent_t>(v);
}

}  // namespace detail

/// An exponent vector b in N^r standing for t_1^{b_1} ... t_r^{b_r}.
class Monomial {
public:
    Monomial() = default;
    explicit Monomial(std::size_t r) : exps_(r, 0) {}
    explicit Monomial(std::vector<exponent_t> exps) : exps_(std::move(exps)) {}
    Monomial(std::initializer_list<exponent_t> exps) : exps_(exps) {}

    std::size_t size() const noexcept { return exps_.size(); }
    exponent_t operator[](std::size_t i) const { return exps_[i]; }
    exponent_t& operator[](std::size_t i) { return exps_[i]; }
    std::span<const exponent_t> exponents() const noexcept { return exps_; }
    const std::vector<exponent_t>& vec() const noexcept { return exps_; }

    std::uint64_t degree() const noexcept {
        std::uint64_t d = 0;
        for (auto e : exps_) d += e;
        return d;
    }

    bool is_one() const noexcept {
        return std::all_of(exps_.begin(), exps_.end(), [](exponent_t e) { return e == 0; });
    }

    std::size_t support_size() const noexcept {
        return static_cast<std::size_t>(
            std::count_if(exps_.begin(), exps_.end(), [](exponent_t e) { return e != 0; }));
    }

    /// True iff this monomial divides `other` (componentwise <=).
    bool divides(const Monomial& other) const noexcept {
        for (std::size_t i = 0; i < exps_.size(); ++i)
            if (exps_[i] > other.exps_[i]) return false;
        return true;
    }

    friend bool operator==(const Monomial&, const Monomial&) = default;
    friend auto operator<=>(const Monomial&, const Monomial&) = default;

private:
    std::vector<exponent_t> exps_;
};

inline void require_same_length(const Monomial& a, const Monomial& b) {
    if (a.size() != b.size())
        throw input_error("monomial length mismatch: " + std::to_string(a.size()) + " vs " +
                          std::to_string(b.size()));
}

inline Monomial operator*(const Monomial& a, const Monomial& b) {
    require_same_length(a, b);
    Monomial out(a.size());
    for (std::size_t i = 0; i < a.size(); ++i) out[i] = detail::checked_add(a[i], b[i]);
    return out;
}

/// a^k, i.e. the exponent vector scaled by k.
inline Monomial pow(const Monomial& a, std::uint64_t k) {
    Monomial out(a.size());
    for (std::size_t i = 0; i < a.size(); ++i) out[i] = detail::checked_mul(a[i], k);
    return out;
}

inline Monomial lcm(const Monomial& a, const Monomial& b) {
    require_same_length(a, b);
    Monomial out(a.size());
    for (std::size_t i = 0; i < a.size(); ++i) out[i] = std::max(a[i], b[i]);
    return out;
}

/// lcm(a, m) / m, the generator of (a) : m.
inline Monomial colon(const Monomial& a, const Monomial& m) {
    require_same_length(a, m);
    Monomial out(a.size());
    for (std::size_t i = 0; i < a.size(); ++i) out[i] = a[i] > m[i] ? a[i] - m[i] : 0;
    return out;
}

/// The monomial t_i in ambient r.
inline Monomial variable(std::size_t r, std::size_t i) {
    Monomial m(r);
    m[i] = 1;
    return m;
}

class MonomialIdeal;
inline MonomialIdeal minimize(std::vector<Monomial> gens, std::size_t r);

/// A monomial ideal stored by its minimal generators in descending lexicographic order.
/// The zero ideal has no generators; the unit ideal is the single monomial 1.
class MonomialIdeal {
public:
    MonomialIdeal() = default;
    explicit MonomialIdeal(std::size_t r) : r_(r) {}

    static MonomialIdeal zero(std::size_t r) { return MonomialIdeal(r); }
    static MonomialIdeal unit(std::size_t r) {
        MonomialIdeal I(r);
        I.gens_.emplace_back(r);
        return I;
    }

    /// Builds the ideal generated by `gens`; the list need not be minimal.
    static MonomialIdeal generated_by(std::vector<Monomial> gens, std::size_t r);

    std::size_t r() const noexcept { return r_; }
    const std::vector<Monomial>& generators() const noexcept { return gens_; }
    std::size_t size() const noexcept { return gens_.size(); }
    bool is_zero() const noexcept { return gens_.empty(); }
    bool is_unit() const noexcept { return gens_.size() == 1 && gens_.front().is_one(); }
    bool is_proper_nonzero() const noexcept { return !is_zero() && !is_unit(); }

    bool contains(const Monomial& m) const {
        if (m.size() != r_)
            throw input_error("monomial has " + std::to_string(m.size()) + " variables, ideal has " +
                              std::to_string(r_));
        for (const auto& g : gens_)
            if (g.divides(m)) return true;
        return false;
    }

    /// Max total degree over generators (d in the stabilization bounds); 0 for the zero ideal.
    std::uint64_t max_degree() const noexcept {
        std::uint64_t d = 0;
        for (const auto& g : gens_) d = std::max(d, g.degree());
        return d;
    }

    /// Componentwise maximum of the generators.
    Monomial max_exponents() const {
        Monomial m(r_);
        for (const auto& g : gens_)
            for (std::size_t i = 0; i < r_; ++i) m[i] = std::max(m[i], g[i]);
        return m;
    }

    /// True iff every generator is a power of a single variable.
    bool is_pure_power() const noexcept {
        return std::all_of(gens_.begin(), gens_.end(),
                           [](const Monomial& g) { return g.support_size() == 1; });
    }

    friend bool operator==(const MonomialIdeal&, const MonomialIdeal&) = default;
    friend auto operator<=>(const MonomialIdeal&, const MonomialIdeal&) = default;

private:
    MonomialIdeal(std::size_t r, std::vector<Monomial> gens) : r_(r), gens_(std::move(gens)) {}
    friend MonomialIdeal minimize(std::vector<Monomial> gens, std::size_t r);

    std::size_t r_ = 0;
    std::vector<Monomial> gens_;
};

/// Divisibility antichain of `gens` in canonical order.
inline MonomialIdeal minimize(std::vector<Monomial> gens, std::size_t r) {
    for (const auto& g : gens)
        if (g.size() != r)
            throw input_error("generator has " + std::to_string(g.size()) + " variables, expected " +
                              std::to_string(r));
    // A divisor always has degree <= its multiple, so scanning by degree lets each
    // candidate be checked against the already-kept minimal ones only.
    std::sort(gens.begin(), gens.end(), [](const Monomial& a, const Monomial& b) {
        auto da = a.degree(), db = b.degree();
        return da != db ? da < db : a < b;
    });
    gens.erase(std::unique(gens.begin(), gens.end()), gens.end());
    std::vector<Monomial> kept;
    for (auto& g : gens) {
        bool redundant = false;
        for (const auto& k : kept)
            if (k.divides(g)) {
                redundant = true;
                break;
            }
        if (!redundant) kept.push_back(std::move(g));
    }
    std::sort(kept.begin(), kept.end(), std::greater<>());
    return MonomialIdeal(r, std::move(kept));
}

inline MonomialIdeal MonomialIdeal::generated_by(std::vector<Monomial> gens, std::size_t r) {
    return minimize(std::move(gens), r);
}

inline void require_same_ring(const MonomialIdeal& I, const MonomialIdeal& J) {
    if (I.r() != J.r())
        throw input_error("ideals live in different rings: r=" + std::to_string(I.r()) + " vs r=" +
                          std::to_string(J.r()));
}

/// I subset of J, decided on generators.
inline bool is_subset(const MonomialIdeal& I, const MonomialIdeal& J) {
    require_same_ring(I, J);
    return std::all_of(I.generators().begin(), I.generators().end(),
                       [&](const Monomial& g) { return J.contains(g); });
}

inline MonomialIdeal sum(const MonomialIdeal& I, const MonomialIdeal& J) {
    require_same_ring(I, J);
    std::vector<Monomial> gens = I.generators();
    gens.insert(gens.end(), J.generators().begin(), J.generators().end());
    return minimize(std::move(gens), I.r());
}

inline MonomialIdeal product(const MonomialIdeal& I, const MonomialIdeal& J) {
    require_same_ring(I, J);
    std::vector<Monomial> gens;
    gens.reserve(I.size() * J.size());
    for (const auto& a : I.generators())
        for (const auto& b : J.generators()) gens.push_back(a * b);
    return minimize(std::move(gens), I.r());
}

inline MonomialIdeal power(const MonomialIdeal& I, std::uint64_t n) {
    MonomialIdeal out = MonomialIdeal::unit(I.r());
    for (std::uint64_t k = 0; k < n; ++k) out = product(out, I);
    return out;
}

/// Computes I^0, I^1, ... on demand, reusing earlier powers.
class PowerSequence {
public:
    explicit PowerSequence(MonomialIdeal base) : base_(std::move(base)) {
        powers_.push_back(MonomialIdeal::unit(base_.r()));
    }

    const MonomialIdeal& base() const noexcept { return base_; }

    const MonomialIdeal& operator()(std::size_t n) {
        while (powers_.size() <= n) powers_.push_back(product(powers_.back(), base_));
        return powers_[n];
    }

private:
    MonomialIdeal base_;
    std::vector<MonomialIdeal> powers_;
};

/// Monomial-set intersection, generated by pairwise lcms.
inline MonomialIdeal intersect(const MonomialIdeal& I, const MonomialIdeal& J) {
    require_same_ring(I, J);
    if (I.is_zero() || J.is_unit()) return I;
    if (J.is_zero() || I.is_unit()) return J;
    std::vector<Monomial> gens;
    gens.reserve(I.size() * J.size());
    for (const auto& a : I.generators()) {
        // A generator of I already in J is its own lcm with the dividing generator.
        if (J.contains(a)) {
            gens.push_back(a);
            continue;
        }
        for (const auto& b : J.generators()) gens.push_back(lcm(a, b));
    }
    return minimize(std::move(gens), I.r());
}

/// I : m
inline MonomialIdeal colon(const MonomialIdeal& I, const Monomial& m) {
    if (m.size() != I.r())
        throw input_error("monomial has " + std::to_string(m.size()) + " variables, ideal has " +
                          std::to_string(I.r()));
    std::vector<Monomial> gens;
    gens.reserve(I.size());
    for (const auto& g : I.generators()) gens.push_back(colon(g, m));
    return minimize(std::move(gens), I.r());
}

/// I : J, the intersection of I : g over generators g of J. I : 0 is the unit ideal.
inline MonomialIdeal colon(const MonomialIdeal& I, const MonomialIdeal& J) {
    require_same_ring(I, J);
    if (J.is_zero()) return MonomialIdeal::unit(I.r());
    MonomialIdeal out = colon(I, J.generators().front());
    for (std::size_t k = 1; k < J.size(); ++k)
        out = intersect(out, colon(I, J.generators()[k]));
    return out;
}

/// I : J^infinity, iterating I : J until the ascending chain stops.
inline MonomialIdeal saturate(const MonomialIdeal& I, const MonomialIdeal& J) {
    require_same_ring(I, J);
    if (J.is_zero()) throw input_error("saturation by the zero ideal");
    MonomialIdeal cur = I;
    for (;;) {
        MonomialIdeal next = colon(cur, J);
        if (next == cur) return cur;
        cur = std::move(next);
    }
}

/// I[j]: sets t_j = 1 in every generator. The ambient r is kept; index j is 0-based.
inline MonomialIdeal delete_variable(const MonomialIdeal& I, std::size_t j) {
    if (I.r() < 2) throw input_error("variable deletion needs at least two variables");
    if (j >= I.r())
        throw input_error("variable index " + std::to_string(j + 1) + " out of range 1.." +
                          std::to_string(I.r()));
    std::vector<Monomial> gens = I.generators();
    for (auto& g : gens) g[j] = 0;
    return minimize(std::move(gens), I.r());
}

}  // namespace brodmann
