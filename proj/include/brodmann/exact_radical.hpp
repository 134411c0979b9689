#pragma once

// Exact real numbers of the form q0 + q1*sqrt(n1) + q2*sqrt(n2) + ... with
// rational q and integer radicands. Sign, comparison, floor and ceiling are
// decided by integer arithmetic for up to two radical terms.

#include <boost/multiprecision/cpp_bin_float.hpp>
#include <boost/multiprecision/cpp_int.hpp>

#include <compare>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace brodmann {

using BigInt = boost::multiprecision::cpp_int;
using BigRational = boost::multiprecision::cpp_rational;
using BigFloat = boost::multiprecision::cpp_bin_float_50;

namespace detail {

inline BigInt isqrt(const BigInt& n) { return boost::multiprecision::sqrt(n); }

inline bool is_square(const BigInt& n, BigInt* root = nullptr) {
    if (n < 0) return false;
    BigInt s = isqrt(n);
    if (root) *root = s;
    return s * s == n;
}

inline int sgn(const BigRational& q) { return q.sign(); }

inline BigInt floor_div(const BigInt& a, const BigInt& b) {
    // b > 0
    BigInt q = a / b;
    if (a < 0 && q * b != a) --q;
    return q;
}

inline BigInt floor(const BigRational& q) {
    return floor_div(boost::multiprecision::numerator(q), boost::multiprecision::denominator(q));
}

inline BigInt ceil(const BigRational& q) { return -floor(BigRational(-q)); }

}  // namespace detail

class ExactRadical {
public:
    struct Term {
        BigRational coef;
        BigInt radicand;  ///< > 1 and not a perfect square
    };

    ExactRadical() = default;
    ExactRadical(std::int64_t v) : rational_(v) {}
    ExactRadical(BigInt v) : rational_(std::move(v)) {}
    ExactRadical(BigRational v) : rational_(std::move(v)) {}

    /// sqrt(n) for n >= 0, with small square factors moved out of the radicand.
    static ExactRadical sqrt_of(BigInt n) {
        if (n < 0) throw std::domain_error("square root of a negative integer");
        BigInt outside = 1;
        for (unsigned p = 2; p < 1000 && p * p <= n; ++p) {
            const BigInt pp = BigInt(p) * p;
            while (n % pp == 0) {
                n /= pp;
                outside *= p;
            }
        }
        BigInt root;
        if (detail::is_square(n, &root)) return ExactRadical(BigInt(outside * root));
        ExactRadical x;
        x.terms_.push_back({BigRational(outside), std::move(n)});
        return x;
    }

    const BigRational& rational_part() const noexcept { return rational_; }
    const std::vector<Term>& terms() const noexcept { return terms_; }
    bool is_rational() const noexcept { return terms_.empty(); }

    ExactRadical& operator+=(const ExactRadical& o) {
        rational_ += o.rational_;
        for (const auto& t : o.terms_) add_term(t.coef, t.radicand);
        return *this;
    }
    ExactRadical& operator-=(const ExactRadical& o) { return *this += -o; }

    friend ExactRadical operator-(ExactRadical x) {
        x.rational_ = -x.rational_;
        for (auto& t : x.terms_) t.coef = -t.coef;
        return x;
    }
    friend ExactRadical operator+(ExactRadical a, const ExactRadical& b) { return a += b; }
    friend ExactRadical operator-(ExactRadical a, const ExactRadical& b) { return a -= b; }

    friend ExactRadical operator*(const ExactRadical& a, const ExactRadical& b) {
        ExactRadical out(BigRational(a.rational_ * b.rational_));
        for (const auto& t : b.terms_) out.add_term(a.rational_ * t.coef, t.radicand);
        for (const auto& t : a.terms_) out.add_term(b.rational_ * t.coef, t.radicand);
        for (const auto& s : a.terms_)
            for (const auto& t : b.terms_) {
                ExactRadical root = sqrt_of(s.radicand * t.radicand);
                out += root * ExactRadical(BigRational(s.coef * t.coef));
            }
        return out;
    }
    ExactRadical& operator*=(const ExactRadical& o) { return *this = *this * o; }

    friend ExactRadical pow(ExactRadical base, std::uint64_t k) {
        ExactRadical out(1);
        while (k) {
            if (k & 1) out *= base;
            k >>= 1;
            if (k) base *= base;
        }
        return out;
    }

    /// -1, 0 or 1. Throws std::domain_error beyond two radical terms.
    int sign() const {
        switch (terms_.size()) {
            case 0: return detail::sgn(rational_);
            case 1: return sign1(rational_, terms_[0].coef, terms_[0].radicand);
            case 2: {
                const auto& [b, M] = terms_[0];
                const auto& [c, N] = terms_[1];
                int sp = sign1(rational_, b, M);
                int sq = detail::sgn(c);
                if (sp == 0) return sq;
                if (sp == sq) return sp;
                // |P| vs |Q| with P = a + b sqrt(M), Q = c sqrt(N)
                int d = sign1(BigRational(rational_ * rational_ + b * b * M - c * c * N),
                              BigRational(2 * rational_ * b), M);
                return d > 0 ? sp : d < 0 ? sq : 0;
            }
            default: throw std::domain_error("sign of more than two independent radicals");
        }
    }

    friend bool operator==(const ExactRadical& a, const ExactRadical& b) { return (a - b).sign() == 0; }
    friend std::strong_ordering operator<=>(const ExactRadical& a, const ExactRadical& b) {
        int s = (a - b).sign();
        return s < 0 ? std::strong_ordering::less
                     : s > 0 ? std::strong_ordering::greater : std::strong_ordering::equal;
    }

    /// Smallest integer k with value <= k.
    BigInt ceil() const {
        BigInt lo = detail::floor(rational_), hi = detail::ceil(rational_);
        for (const auto& t : terms_) {
            auto [f, c] = term_floor_ceil(t);
            lo += f;
            hi += c;
        }
        for (BigInt k = lo; k < hi; ++k)
            if ((ExactRadical(k) - *this).sign() >= 0) return k;
        return hi;
    }

    /// Largest integer k with k <= value.
    BigInt floor() const { return -(-*this).ceil(); }

    BigFloat to_float() const {
        BigFloat v = BigFloat(boost::multiprecision::numerator(rational_)) /
                     BigFloat(boost::multiprecision::denominator(rational_));
        for (const auto& t : terms_) {
            BigFloat c = BigFloat(boost::multiprecision::numerator(t.coef)) /
                         BigFloat(boost::multiprecision::denominator(t.coef));
            v += c * boost::multiprecision::sqrt(BigFloat(t.radicand));
        }
        return v;
    }

    /// e.g. "2048*sqrt(2) - 1"
    std::string to_string() const {
        std::string s;
        for (const auto& t : terms_) {
            std::string c = t.coef.str();
            if (!s.empty()) {
                if (c.front() == '-') {
                    s += " - ";
                    c.erase(0, 1);
                } else {
                    s += " + ";
                }
            }
            if (c == "1") s += "sqrt(" + t.radicand.str() + ")";
            else if (c == "-1") s += "-sqrt(" + t.radicand.str() + ")";
            else s += c + "*sqrt(" + t.radicand.str() + ")";
        }
        if (rational_ != 0 || s.empty()) {
            std::string c = rational_.str();
            if (s.empty()) return c;
            if (c.front() == '-') s += " - " + c.substr(1);
            else s += " + " + c;
        }
        return s;
    }

private:
    // sign of a + b sqrt(M), M not a square
    static int sign1(const BigRational& a, const BigRational& b, const BigInt& M) {
        int sa = detail::sgn(a), sb = detail::sgn(b);
        if (sb == 0) return sa;
        if (sa == 0 || sa == sb) return sb;
        BigRational diff = a * a - b * b * M;  // nonzero since M is not a square
        return diff > 0 ? sa : sb;
    }

    static std::pair<BigInt, BigInt> term_floor_ceil(const Term& t) {
        using boost::multiprecision::denominator;
        using boost::multiprecision::numerator;
        BigInt p = numerator(t.coef), q = denominator(t.coef);
        BigInt abs_floor = detail::isqrt(BigInt(p * p * t.radicand)) / q;  // floor(|c| sqrt(N))
        // irrational, so the ceiling is one more than the floor
        if (p > 0) return {abs_floor, abs_floor + 1};
        return {-abs_floor - 1, -abs_floor};
    }

    void add_term(const BigRational& coef, const BigInt& radicand) {
        if (coef == 0) return;
        BigInt root;
        if (detail::is_square(radicand, &root)) {
            rational_ += coef * root;
            return;
        }
        for (auto it = terms_.begin(); it != terms_.end(); ++it) {
            BigInt joint;
            if (it->radicand == radicand) {
                it->coef += coef;
            } else if (detail::is_square(BigInt(it->radicand * radicand), &joint)) {
                // sqrt(radicand) = joint / it->radicand * sqrt(it->radicand)
                it->coef += coef * BigRational(joint, it->radicand);
            } else {
                continue;
            }
            if (it->coef == 0) terms_.erase(it);
            return;
        }
        terms_.push_back({coef, radicand});
    }

    BigRational rational_{0};
    std::vector<Term> terms_;
};

inline ExactRadical max(const ExactRadical& a, const ExactRadical& b) { return a < b ? b : a; }

/// Number of decimal digits of |n| (1 for zero).
inline std::size_t decimal_digits(const BigInt& n) {
    std::string s = BigInt(boost::multiprecision::abs(n)).str();
    return s.size();
}

}  // namespace brodmann
