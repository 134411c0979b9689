#pragma once

// Integer solutions of A x >= b, x >= 0: extreme rays by Cramer determinants,
// certified *-norm bounds for semigroup and module generators, desk-scale
// enumeration of those generators, and the linear systems whose integer points
// encode membership in I^n, in the H^0 numerator, and in Ratliff-Rush closures.

#include <algorithm>
#include <cstddef>
#include <cstdint>
#include <limits>
#include <map>
#include <numeric>
#include <optional>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include "errors.hpp"
#include "exact_radical.hpp"
#include "ideal.hpp"

namespace brodmann {

using IntVector = std::vector<std::int64_t>;

/// Rows a_i . x >= b_i together with the implicit x >= 0.
struct ConstraintSystem {
    std::size_t e = 0;
    std::vector<IntVector> A;
    IntVector b;
    std::vector<std::string> labels;

    std::size_t rows() const noexcept { return A.size(); }
    bool homogeneous() const {
        return std::all_of(b.begin(), b.end(), [](std::int64_t v) { return v == 0; });
    }

    void validate() const {
        if (A.size() != b.size()) throw input_error("constraint system: row count differs from rhs length");
        for (const auto& row : A)
            if (row.size() != e) throw input_error("constraint system: row length differs from variable count");
        if (!labels.empty() && labels.size() != e)
            throw input_error("constraint system: label count differs from variable count");
    }

    IntVector column(std::size_t j) const {
        IntVector c;
        c.reserve(A.size());
        for (const auto& row : A) c.push_back(row[j]);
        return c;
    }

    /// Row i evaluated at v, in 128-bit arithmetic.
    __int128 row_value(std::size_t i, const IntVector& v) const {
        __int128 acc = 0;
        for (std::size_t j = 0; j < e; ++j) acc += static_cast<__int128>(A[i][j]) * v[j];
        return acc;
    }

    bool satisfied_by(const IntVector& v) const {
        if (v.size() != e) throw input_error("vector length differs from variable count");
        for (auto x : v)
            if (x < 0) return false;
        for (std::size_t i = 0; i < A.size(); ++i)
            if (row_value(i, v) < b[i]) return false;
        return true;
    }

    ConstraintSystem homogenized() const {
        ConstraintSystem h = *this;
        std::fill(h.b.begin(), h.b.end(), 0);
        return h;
    }

    std::string label(std::size_t j) const {
        return labels.empty() ? "x" + std::to_string(j + 1) : labels[j];
    }
};

inline BigInt squared_norm(const IntVector& v) {
    BigInt s = 0;
    for (auto x : v) s += BigInt(x) * x;
    return s;
}

inline std::int64_t star_norm(const IntVector& v) {
    std::int64_t m = 0;
    for (auto x : v) m = std::max(m, x < 0 ? -x : x);
    return m;
}

/// Determinant of a square integer matrix by fraction-free elimination.
inline BigInt determinant(std::vector<std::vector<BigInt>> M) {
    const std::size_t n = M.size();
    if (n == 0) return 1;
    BigInt prev = 1;
    int sign = 1;
    for (std::size_t k = 0; k + 1 < n; ++k) {
        if (M[k][k] == 0) {
            std::size_t p = k + 1;
            while (p < n && M[p][k] == 0) ++p;
            if (p == n) return 0;
            std::swap(M[k], M[p]);
            sign = -sign;
        }
        for (std::size_t i = k + 1; i < n; ++i)
            for (std::size_t j = k + 1; j < n; ++j)
                M[i][j] = (M[i][j] * M[k][k] - M[i][k] * M[k][j]) / prev;
        prev = M[k][k];
    }
    return sign * M[n - 1][n - 1];
}

namespace detail {

inline std::int64_t to_int64(const BigInt& v) {
    if (v > std::numeric_limits<std::int64_t>::max() || v < std::numeric_limits<std::int64_t>::min())
        throw resource_error("integer vector entry exceeds 64 bits");
    return static_cast<std::int64_t>(v);
}

inline BigInt binomial(std::size_t n, std::size_t k) {
    if (k > n) return 0;
    BigInt c = 1;
    for (std::size_t i = 0; i < k; ++i) c = c * (n - i) / (i + 1);
    return c;
}

inline void check_box(std::size_t e, std::int64_t box, std::size_t budget) {
    if (box < 0) throw input_error("enumeration box must be nonnegative");
    BigInt points = boost::multiprecision::pow(BigInt(box + 1), static_cast<unsigned>(e));
    if (points > budget)
        throw resource_error("enumeration of " + points.str() + " lattice points exceeds budget " +
                             std::to_string(budget));
}

// Visits every v in [0, box]^e in lexicographic order (last coordinate fastest).
template <typename F>
void for_each_in_box(std::size_t e, std::int64_t box, F&& f) {
    IntVector v(e, 0);
    for (;;) {
        f(static_cast<const IntVector&>(v));
        std::size_t k = e;
        while (k > 0) {
            --k;
            if (v[k] < box) {
                ++v[k];
                break;
            }
            v[k] = 0;
            if (k == 0) return;
        }
        if (e == 0) return;
    }
}

}  // namespace detail

/// Primitive generators of the extreme rays of {x >= 0 : A x >= 0}.
///
/// Every choice of e-1 hyperplanes among the constraint rows and the coordinate
/// hyperplanes x_i = 0 is tried; a rank e-1 choice has a one-dimensional kernel
/// spanned by its signed maximal minors, which is kept when it (or its negative)
/// lies in the cone.
inline std::vector<IntVector> extreme_rays(const ConstraintSystem& sys,
                                           std::size_t budget = default_budget) {
    sys.validate();
    if (!sys.homogeneous()) throw input_error("extreme rays need a homogeneous system");
    const std::size_t e = sys.e;
    if (e == 0) return {};

    std::vector<IntVector> planes = sys.A;
    for (std::size_t i = 0; i < e; ++i) {
        IntVector u(e, 0);
        u[i] = 1;
        planes.push_back(std::move(u));
    }
    if (detail::binomial(planes.size(), e - 1) > budget)
        throw resource_error("too many hyperplane subsets for extreme ray enumeration");

    std::set<IntVector> rays;
    std::vector<std::size_t> pick(e - 1);
    std::iota(pick.begin(), pick.end(), 0);
    for (;;) {
        IntVector v(e);
        bool nonzero = false;
        for (std::size_t k = 0; k < e; ++k) {
            std::vector<std::vector<BigInt>> minor;
            for (auto p : pick) {
                std::vector<BigInt> row;
                for (std::size_t j = 0; j < e; ++j)
                    if (j != k) row.emplace_back(planes[p][j]);
                minor.push_back(std::move(row));
            }
            BigInt d = determinant(std::move(minor));
            if (k % 2) d = -d;
            v[k] = detail::to_int64(d);
            nonzero = nonzero || d != 0;
        }
        if (nonzero) {
            std::int64_t g = 0;
            for (auto x : v) g = std::gcd(g, x);
            for (auto& x : v) x /= g;
            if (sys.satisfied_by(v)) {
                rays.insert(v);
            } else {
                for (auto& x : v) x = -x;
                if (sys.satisfied_by(v)) rays.insert(v);
            }
        }
        // next (e-1)-subset of planes
        std::size_t i = pick.size();
        while (i > 0 && pick[i - 1] == planes.size() - pick.size() + i - 1) --i;
        if (i == 0) break;
        ++pick[i - 1];
        for (std::size_t j = i; j < pick.size(); ++j) pick[j] = pick[j - 1] + 1;
    }
    return {rays.begin(), rays.end()};
}

struct CertifiedBound {
    ExactRadical value;
    BigInt ceiling;
};

namespace detail {

// Column norms with the all-zero column counted as norm 1, largest first.
inline std::vector<BigInt> sorted_column_sq_norms(const ConstraintSystem& sys) {
    std::vector<BigInt> norms;
    for (std::size_t j = 0; j < sys.e; ++j) {
        BigInt n = squared_norm(sys.column(j));
        norms.push_back(n == 0 ? BigInt(1) : n);
    }
    std::sort(norms.begin(), norms.end(), std::greater<>());
    return norms;
}

}  // namespace detail

/// e * ||a_1|| ... ||a_{e-1}|| over the e-1 largest coefficient columns. Every
/// minimal generator v of the solution semigroup has ||v||_* <= this value.
inline CertifiedBound bound_A1(const ConstraintSystem& sys) {
    sys.validate();
    auto norms = detail::sorted_column_sq_norms(sys);
    ExactRadical v(static_cast<std::int64_t>(sys.e));
    for (std::size_t j = 0; j + 1 < norms.size(); ++j) v *= ExactRadical::sqrt_of(norms[j]);
    return {v, v.ceil()};
}

/// (e + ||b||) * ||a_1|| ... ||a_e||, the *-norm bound for module generators of
/// the inhomogeneous solution set over the homogeneous semigroup.
inline CertifiedBound bound_A2(const ConstraintSystem& sys) {
    sys.validate();
    auto norms = detail::sorted_column_sq_norms(sys);
    ExactRadical v = ExactRadical(static_cast<std::int64_t>(sys.e)) + ExactRadical::sqrt_of(squared_norm(sys.b));
    for (const auto& n : norms) v *= ExactRadical::sqrt_of(n);
    return {v, v.ceil()};
}

/// Irreducible nonzero solutions of the homogeneous system inside [0, box]^e.
/// A solution v <= box is reducible iff v = u + w with both parts nonzero
/// solutions, and both parts then lie in the box, so this is exactly the set of
/// Hilbert basis elements of *-norm <= box.
inline std::vector<IntVector> irreducible_solutions(const ConstraintSystem& sys, std::int64_t box,
                                                    std::size_t budget = default_budget) {
    sys.validate();
    if (!sys.homogeneous()) throw input_error("irreducible solutions need a homogeneous system");
    detail::check_box(sys.e, box, budget);

    std::vector<IntVector> sols;
    detail::for_each_in_box(sys.e, box, [&](const IntVector& v) {
        if (std::any_of(v.begin(), v.end(), [](std::int64_t x) { return x != 0; }) && sys.satisfied_by(v))
            sols.push_back(v);
    });
    auto l1 = [](const IntVector& v) { return std::accumulate(v.begin(), v.end(), std::int64_t{0}); };
    std::stable_sort(sols.begin(), sols.end(),
                     [&](const IntVector& a, const IntVector& b) { return l1(a) < l1(b); });

    // If v = u + w, some irreducible h <= u has v - h = w + (u - h) a solution.
    std::vector<IntVector> irreducible;
    IntVector diff(sys.e);
    for (const auto& v : sols) {
        bool reducible = false;
        for (const auto& h : irreducible) {
            bool below = true;
            for (std::size_t j = 0; j < sys.e && below; ++j) {
                diff[j] = v[j] - h[j];
                below = diff[j] >= 0;
            }
            if (below && sys.satisfied_by(diff)) {
                reducible = true;
                break;
            }
        }
        if (!reducible) irreducible.push_back(v);
    }
    std::sort(irreducible.begin(), irreducible.end());
    return irreducible;
}

/// Semigroup generators of the homogeneous solutions, searched in the box
/// [0, min(cap, ceil(bound_A1))]^e.
inline std::vector<IntVector> hilbert_generators(const ConstraintSystem& sys, std::int64_t cap,
                                                 std::size_t budget = default_budget) {
    if (cap < 1) throw input_error("cap must be at least 1");
    BigInt bound = bound_A1(sys).ceiling;
    std::int64_t box = bound < cap ? detail::to_int64(bound) : cap;
    return irreducible_solutions(sys, box, budget);
}

/// Generators of the inhomogeneous solutions as a module over the homogeneous
/// ones, searched in [0, min(cap, ceil(bound_A2))]^e. A homogeneous system gives {0}.
inline std::vector<IntVector> module_generators(const ConstraintSystem& sys, std::int64_t cap,
                                                std::size_t budget = default_budget) {
    sys.validate();
    if (cap < 1) throw input_error("cap must be at least 1");
    if (sys.homogeneous()) return {IntVector(sys.e, 0)};
    BigInt bound = bound_A2(sys).ceiling;
    std::int64_t box = bound < cap ? detail::to_int64(bound) : cap;
    detail::check_box(sys.e, box, budget);

    const ConstraintSystem hom = sys.homogenized();
    const auto hilbert = irreducible_solutions(hom, box, budget);
    std::vector<IntVector> gens;
    IntVector diff(sys.e);
    detail::for_each_in_box(sys.e, box, [&](const IntVector& v) {
        if (!sys.satisfied_by(v)) return;
        for (const auto& h : hilbert) {
            bool below = true;
            for (std::size_t j = 0; j < sys.e && below; ++j) {
                diff[j] = v[j] - h[j];
                below = diff[j] >= 0;
            }
            if (below && sys.satisfied_by(diff)) return;
        }
        gens.push_back(v);
    });
    return gens;
}

struct ConeGenerators {
    std::vector<IntVector> rays;
    std::optional<std::vector<IntVector>> hilbert;
    std::optional<std::vector<IntVector>> module_gens;
    CertifiedBound bound_star;
};

/// Extreme rays plus, when `cap` is given, the generators found in the certified box.
/// The *-norm bound is bound_A1 for homogeneous systems and bound_A2 otherwise.
inline ConeGenerators cone_generators(const ConstraintSystem& sys, std::optional<std::int64_t> cap,
                                      std::size_t budget = default_budget) {
    sys.validate();
    ConeGenerators out;
    out.rays = extreme_rays(sys.homogenized(), budget);
    out.bound_star = sys.homogeneous() ? bound_A1(sys) : bound_A2(sys);
    if (cap) {
        out.hilbert = hilbert_generators(sys.homogenized(), *cap, budget);
        if (!sys.homogeneous()) out.module_gens = module_generators(sys, *cap, budget);
    }
    return out;
}

/// Exhaustive search for a solution with the given coordinates fixed and the
/// rest in [0, box].
inline std::optional<IntVector> solve_feasible(const ConstraintSystem& sys,
                                               const std::map<std::size_t, std::int64_t>& fixed,
                                               std::int64_t box, std::size_t budget = default_budget) {
    sys.validate();
    IntVector v(sys.e, 0);
    std::vector<std::size_t> free_vars;
    for (std::size_t j = 0; j < sys.e; ++j) {
        if (auto it = fixed.find(j); it != fixed.end()) {
            if (it->second < 0) return std::nullopt;
            v[j] = it->second;
        } else {
            free_vars.push_back(j);
        }
    }
    for (const auto& [j, val] : fixed)
        if (j >= sys.e) throw input_error("fixed variable index " + std::to_string(j) + " out of range");
    detail::check_box(free_vars.size(), box, budget);

    std::optional<IntVector> found;
    IntVector sub(free_vars.size());
    detail::for_each_in_box(free_vars.size(), box, [&](const IntVector& w) {
        if (found) return;
        for (std::size_t k = 0; k < free_vars.size(); ++k) v[free_vars[k]] = w[k];
        if (sys.satisfied_by(v)) found = v;
    });
    return found;
}

// --- systems attached to a monomial ideal ---------------------------------

enum class SystemMode { ED1, ED2, ED3 };

inline const char* to_string(SystemMode m) {
    switch (m) {
        case SystemMode::ED1: return "ED1";
        case SystemMode::ED2: return "ED2";
        default: return "ED3";
    }
}

struct BuiltSystem {
    ConstraintSystem system;
    /// Generators a_1, ..., a_s in the order used by the system; a_s has at least
    /// two nonzero exponents.
    std::vector<Monomial> ordered_generators;
    std::size_t designated_index = 0;  ///< position of a_s in canonical order
};

namespace detail {

// The designated last generator: largest support, ties broken by canonical order.
inline std::optional<std::size_t> designated_generator(const MonomialIdeal& I) {
    std::optional<std::size_t> best;
    for (std::size_t k = 0; k < I.size(); ++k) {
        auto sup = I.generators()[k].support_size();
        if (sup >= 2 && (!best || sup > I.generators()[*best].support_size())) best = k;
    }
    return best;
}

inline std::vector<Monomial> ordered_with_last(const MonomialIdeal& I, std::size_t last) {
    std::vector<Monomial> out;
    for (std::size_t k = 0; k < I.size(); ++k)
        if (k != last) out.push_back(I.generators()[k]);
    out.push_back(I.generators()[last]);
    return out;
}

}  // namespace detail

/// The linear systems whose integer points describe I^(n-1) cap I[1]^n cap ... cap I[r]^n
/// (ED1, with the homogeneous ED2) and the Ratliff-Rush closures of powers (ED3).
///
/// ED1/ED2 variables: z, y_1..y_r, x_1..x_{s-1}, x_{1,1}..x_{r,s-1}   (rs + s)
/// ED3 variables:     z, x, y_1..y_r, x_{1,1}..x_{s,s-1}             (s(s-1) + r + 2)
inline BuiltSystem build_system(const MonomialIdeal& I, SystemMode mode) {
    if (!I.is_proper_nonzero()) throw input_error("build_system needs a proper nonzero ideal");
    auto last = detail::designated_generator(I);
    if (!last)
        throw input_error("every generator is a pure power; Ass(I^n/I^(n+1)) is constant and "
                          "given by the pure-power fast path");
    BuiltSystem out;
    out.designated_index = *last;
    out.ordered_generators = detail::ordered_with_last(I, *last);
    const auto& a = out.ordered_generators;
    const std::size_t r = I.r(), s = a.size();
    const auto coef = [&](std::size_t k, std::size_t j) { return static_cast<std::int64_t>(a[k][j]); };
    ConstraintSystem& sys = out.system;

    if (mode == SystemMode::ED1 || mode == SystemMode::ED2) {
        sys.e = r * s + s;
        const std::size_t Y = 1, X = 1 + r, XX = 1 + r + (s - 1);
        auto xx = [&](std::size_t i, std::size_t k) { return XX + i * (s - 1) + k; };
        sys.labels.push_back("z");
        for (std::size_t j = 0; j < r; ++j) sys.labels.push_back("y" + std::to_string(j + 1));
        for (std::size_t k = 0; k + 1 < s; ++k) sys.labels.push_back("x" + std::to_string(k + 1));
        for (std::size_t i = 0; i < r; ++i)
            for (std::size_t k = 0; k + 1 < s; ++k)
                sys.labels.push_back("x" + std::to_string(i + 1) + "_" + std::to_string(k + 1));

        // y_j >= sum_k a_kj x_k + a_sj (z - sum_k x_k - 1)
        for (std::size_t j = 0; j < r; ++j) {
            IntVector row(sys.e, 0);
            row[Y + j] = 1;
            row[0] = -coef(s - 1, j);
            for (std::size_t k = 0; k + 1 < s; ++k) row[X + k] = coef(s - 1, j) - coef(k, j);
            sys.A.push_back(std::move(row));
            sys.b.push_back(-coef(s - 1, j));
        }
        // z >= sum_k x_k + 1
        {
            IntVector row(sys.e, 0);
            row[0] = 1;
            for (std::size_t k = 0; k + 1 < s; ++k) row[X + k] = -1;
            sys.A.push_back(std::move(row));
            sys.b.push_back(1);
        }
        // y_j >= sum_k a_kj x_ik + a_sj (z - sum_k x_ik), i != j
        for (std::size_t i = 0; i < r; ++i)
            for (std::size_t j = 0; j < r; ++j) {
                if (i == j) continue;
                IntVector row(sys.e, 0);
                row[Y + j] = 1;
                row[0] = -coef(s - 1, j);
                for (std::size_t k = 0; k + 1 < s; ++k) row[xx(i, k)] = coef(s - 1, j) - coef(k, j);
                sys.A.push_back(std::move(row));
                sys.b.push_back(0);
            }
        // z >= sum_k x_ik
        for (std::size_t i = 0; i < r; ++i) {
            IntVector row(sys.e, 0);
            row[0] = 1;
            for (std::size_t k = 0; k + 1 < s; ++k) row[xx(i, k)] = -1;
            sys.A.push_back(std::move(row));
            sys.b.push_back(0);
        }
        if (mode == SystemMode::ED2) sys = sys.homogenized();
        return out;
    }

    sys.e = s * (s - 1) + r + 2;
    const std::size_t XM = 1, Y = 2, XX = 2 + r;
    auto xx = [&](std::size_t i, std::size_t k) { return XX + i * (s - 1) + k; };
    sys.labels = {"z", "x"};
    for (std::size_t j = 0; j < r; ++j) sys.labels.push_back("y" + std::to_string(j + 1));
    for (std::size_t i = 0; i < s; ++i)
        for (std::size_t k = 0; k + 1 < s; ++k)
            sys.labels.push_back("x" + std::to_string(i + 1) + "_" + std::to_string(k + 1));

    for (std::size_t i = 0; i < s; ++i) {
        // y_j + a_ij x >= sum_k a_kj x_ik + a_sj (z + x - sum_k x_ik)
        for (std::size_t j = 0; j < r; ++j) {
            IntVector row(sys.e, 0);
            row[Y + j] = 1;
            row[0] = -coef(s - 1, j);
            row[XM] = coef(i, j) - coef(s - 1, j);
            for (std::size_t k = 0; k + 1 < s; ++k) row[xx(i, k)] = coef(s - 1, j) - coef(k, j);
            sys.A.push_back(std::move(row));
            sys.b.push_back(0);
        }
        // z + x >= sum_k x_ik
        IntVector row(sys.e, 0);
        row[0] = 1;
        row[XM] = 1;
        for (std::size_t k = 0; k + 1 < s; ++k) row[xx(i, k)] = -1;
        sys.A.push_back(std::move(row));
        sys.b.push_back(0);
    }
    return out;
}

/// Homogeneous system on (z, y_1..y_r, alpha_1..alpha_{s-1}) with a solution at
/// z = n, y = b iff t^b is in I^n: y_j >= sum_k a_kj alpha_k + a_sj (z - sum_k alpha_k),
/// z >= sum_k alpha_k. Here a_s is the last generator in canonical order.
inline ConstraintSystem membership_system(const MonomialIdeal& I) {
    if (!I.is_proper_nonzero()) throw input_error("membership_system needs a proper nonzero ideal");
    const auto& a = I.generators();
    const std::size_t r = I.r(), s = a.size();
    ConstraintSystem sys;
    sys.e = 1 + r + (s - 1);
    sys.labels.push_back("z");
    for (std::size_t j = 0; j < r; ++j) sys.labels.push_back("y" + std::to_string(j + 1));
    for (std::size_t k = 0; k + 1 < s; ++k) sys.labels.push_back("alpha" + std::to_string(k + 1));
    for (std::size_t j = 0; j < r; ++j) {
        IntVector row(sys.e, 0);
        row[1 + j] = 1;
        row[0] = -static_cast<std::int64_t>(a[s - 1][j]);
        for (std::size_t k = 0; k + 1 < s; ++k)
            row[1 + r + k] = static_cast<std::int64_t>(a[s - 1][j]) - static_cast<std::int64_t>(a[k][j]);
        sys.A.push_back(std::move(row));
        sys.b.push_back(0);
    }
    IntVector row(sys.e, 0);
    row[0] = 1;
    for (std::size_t k = 0; k + 1 < s; ++k) row[1 + r + k] = -1;
    sys.A.push_back(std::move(row));
    sys.b.push_back(0);
    return sys;
}

}  // namespace brodmann
