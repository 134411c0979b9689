#include <gtest/gtest.h>

#include <brodmann/polyhedra.hpp>

#include <map>
#include <numeric>
#include <random>

#include "corpus.hpp"

using namespace brodmann;
using brodmann::testing::e11;
using brodmann::testing::random_corpus;

namespace {

ConstraintSystem make(std::size_t e, std::vector<IntVector> A, IntVector b = {}) {
    ConstraintSystem s;
    s.e = e;
    s.A = std::move(A);
    s.b = b.empty() ? IntVector(s.A.size(), 0) : std::move(b);
    return s;
}

ConstraintSystem staircase(std::size_t e, std::int64_t d) {
    std::vector<IntVector> A;
    for (std::size_t i = 0; i + 1 < e; ++i) {
        IntVector row(e, 0);
        row[i] = d;
        row[i + 1] = -1;
        A.push_back(row);
    }
    return make(e, A);
}

bool contains(const std::vector<IntVector>& vs, const IntVector& v) { return std::find(vs.begin(), vs.end(), v) != vs.end(); }

// Is v a nonnegative integer combination of gens? Memoized on v.
bool decomposes(const IntVector& v, const std::vector<IntVector>& gens, std::map<IntVector, bool>& memo) {
    if (std::all_of(v.begin(), v.end(), [](auto x) { return x == 0; })) return true;
    if (auto it = memo.find(v); it != memo.end()) return it->second;
    bool ok = false;
    for (const auto& g : gens) {
        IntVector w(v.size());
        bool fits = true;
        for (std::size_t j = 0; j < v.size() && fits; ++j) fits = (w[j] = v[j] - g[j]) >= 0;
        if (fits && decomposes(w, gens, memo)) {
            ok = true;
            break;
        }
    }
    return memo[v] = ok;
}

ConstraintSystem random_system(std::mt19937_64& rng) {
    std::uniform_int_distribution<int> pick_e(2, 3), pick_rows(1, 2), pick_c(-2, 2);
    std::size_t e = pick_e(rng);
    std::vector<IntVector> A(pick_rows(rng), IntVector(e));
    for (auto& row : A)
        for (auto& c : row) c = pick_c(rng);
    return make(e, A);
}

std::int64_t gcd_of(const IntVector& v) {
    std::int64_t g = 0;
    for (auto x : v) g = std::gcd(g, x < 0 ? -x : x);
    return g;
}

BigInt column_sq(const ConstraintSystem& s, std::size_t j) { return squared_norm(s.column(j)); }

}  // namespace

TEST(ExtremeRays, Examples) {
    EXPECT_EQ(extreme_rays(make(2, {})), (std::vector<IntVector>{{0, 1}, {1, 0}}));
    auto r = extreme_rays(staircase(2, 2));
    EXPECT_EQ(r, (std::vector<IntVector>{{1, 0}, {1, 2}}));
    EXPECT_TRUE(contains(extreme_rays(staircase(3, 2)), IntVector{1, 2, 4}));
    EXPECT_TRUE(extreme_rays(make(0, {})).empty());
    EXPECT_THROW(extreme_rays(make(2, {{1, 1}}, {1})), input_error);
}

TEST(ExtremeRays, StaircaseFamily) {
    for (std::int64_t d : {2, 3})
        for (std::size_t e : {2u, 3u, 4u}) {
            IntVector u(e);
            std::int64_t p = 1;
            for (auto& x : u) x = std::exchange(p, p * d);
            EXPECT_TRUE(contains(extreme_rays(staircase(e, d)), u)) << "e=" << e << " d=" << d;
        }
}

TEST(BoundA1, Examples) {
    auto a = bound_A1(staircase(2, 2));
    EXPECT_EQ(a.value, ExactRadical(4));
    EXPECT_EQ(a.ceiling, 4);
    EXPECT_EQ(bound_A1(make(3, {})).value, ExactRadical(3));
    EXPECT_EQ(bound_A1(make(1, {{1}})).value, ExactRadical(1));
}

TEST(BoundA2, Examples) {
    EXPECT_EQ(bound_A2(make(1, {{1}}, {1})).value, ExactRadical(2));
    EXPECT_EQ(bound_A2(make(2, {{2, -1}}, {1})).value, ExactRadical(6));
    // b = 0 gives e times the full product, which dominates bound_A1
    auto sys = staircase(3, 2);
    EXPECT_GE(bound_A2(sys).value, bound_A1(sys).value);
    EXPECT_EQ(bound_A2(sys).value, ExactRadical(3) * ExactRadical::sqrt_of(4) * ExactRadical::sqrt_of(5));
}

TEST(Hilbert, Examples) {
    EXPECT_EQ(hilbert_generators(make(2, {}), 5), (std::vector<IntVector>{{0, 1}, {1, 0}}));
    EXPECT_EQ(hilbert_generators(staircase(2, 2), 8), (std::vector<IntVector>{{1, 0}, {1, 1}, {1, 2}}));
    EXPECT_TRUE(contains(hilbert_generators(staircase(3, 2), 8), IntVector{1, 2, 4}));
    EXPECT_THROW(hilbert_generators(staircase(3, 2), 0), input_error);
}

TEST(Hilbert, BudgetIsEnforced) { EXPECT_THROW(hilbert_generators(staircase(3, 3), 40, 100), resource_error); }

TEST(Module, Examples) {
    EXPECT_EQ(module_generators(make(1, {{1}}, {1}), 5), std::vector<IntVector>{{1}});
    EXPECT_EQ(module_generators(make(2, {{2, -1}}, {1}), 10), (std::vector<IntVector>{{1, 0}, {1, 1}}));
    EXPECT_EQ(module_generators(staircase(2, 2), 10), std::vector<IntVector>{IntVector(2, 0)});
}

TEST(Feasible, MembershipExamples) {
    // I = (x^2, xy): variables (z, y1, y2, alpha1)
    auto I = MonomialIdeal::generated_by({{2, 0}, {1, 1}}, 2);
    auto sys = membership_system(I);
    EXPECT_TRUE(solve_feasible(sys, {{0, 2}, {1, 3}, {2, 1}}, 2).has_value());
    EXPECT_FALSE(solve_feasible(sys, {{0, 2}, {1, 2}, {2, 1}}, 2).has_value());
    auto one = solve_feasible(sys, {{0, 0}, {1, 0}, {2, 0}}, 0);
    ASSERT_TRUE(one.has_value());
    EXPECT_EQ(*one, IntVector(sys.e, 0));
}

TEST(Feasible, MembershipSystemMatchesPowers) {
    auto corpus = random_corpus(40);
    for (const auto& I : corpus) {
        if (I.size() > 3) continue;
        auto sys = membership_system(I);
        for (std::int64_t n = 0; n <= 2; ++n) {
            auto P = power(I, n);
            Monomial box = P.max_exponents();
            std::vector<exponent_t> e(I.r(), 0);
            std::function<void(std::size_t)> rec = [&](std::size_t i) {
                if (i == I.r()) {
                    std::map<std::size_t, std::int64_t> fixed{{0, n}};
                    for (std::size_t j = 0; j < I.r(); ++j) fixed[1 + j] = e[j];
                    ASSERT_EQ(solve_feasible(sys, fixed, n).has_value(), P.contains(Monomial(e)));
                    return;
                }
                for (exponent_t k = 0; k <= box[i] + 1; ++k) {
                    e[i] = k;
                    rec(i + 1);
                }
            };
            rec(0);
        }
    }
}

// An integer point of ED1 with z = n, y = b exists iff t^b lies in
// I^(n-1) cap I[1]^n cap ... cap I[r]^n.
TEST(Feasible, ED1DescribesTheH0Numerator) {
    std::size_t checked = 0;
    for (const auto& I : random_corpus(60)) {
        if (I.size() > 3) continue;
        BuiltSystem built;
        try {
            built = build_system(I, SystemMode::ED1);
        } catch (const input_error&) {
            continue;
        }
        for (std::uint64_t n = 1; n <= 2; ++n) {
            MonomialIdeal target = power(I, n - 1);
            for (std::size_t i = 0; i < I.r(); ++i) target = intersect(target, power(delete_variable(I, i), n));
            Monomial box = lcm(target.is_zero() ? Monomial(I.r()) : target.max_exponents(), power(I, n).max_exponents());
            std::vector<exponent_t> e(I.r(), 0);
            std::function<void(std::size_t)> rec = [&](std::size_t i) {
                if (i == I.r()) {
                    std::map<std::size_t, std::int64_t> fixed{{0, static_cast<std::int64_t>(n)}};
                    for (std::size_t j = 0; j < I.r(); ++j) fixed[1 + j] = e[j];
                    ASSERT_EQ(solve_feasible(built.system, fixed, n).has_value(), target.contains(Monomial(e)))
                        << ::testing::PrintToString(I) << " n=" << n << " b=" << ::testing::PrintToString(Monomial(e));
                    return;
                }
                for (exponent_t k = 0; k <= box[i]; ++k) {
                    e[i] = k;
                    rec(i + 1);
                }
            };
            rec(0);
            ++checked;
        }
    }
    EXPECT_GT(checked, 10u);
}

TEST(BuildSystem, E11Layout) {
    auto ed1 = build_system(e11(5), SystemMode::ED1);
    EXPECT_EQ(ed1.system.e, 20u);
    EXPECT_EQ(ed1.ordered_generators.back(), (Monomial{2, 3, 1}));
    EXPECT_EQ(ed1.system.labels.front(), "z");
    EXPECT_EQ(ed1.system.labels[4], "x1");
    EXPECT_EQ(ed1.system.labels.back(), "x3_4");
    EXPECT_EQ(ed1.system.rows(), 3u + 1 + 6 + 3);

    auto ed2 = build_system(e11(5), SystemMode::ED2);
    EXPECT_TRUE(ed2.system.homogeneous());
    EXPECT_EQ(ed2.system.A, ed1.system.A);

    auto ed3 = build_system(e11(5), SystemMode::ED3);
    EXPECT_EQ(ed3.system.e, 25u);
    EXPECT_EQ(ed3.system.rows(), 5u * 4);
    EXPECT_EQ(ed3.system.labels[1], "x");
}

TEST(BuildSystem, PurePowerRefused) {
    auto I = MonomialIdeal::generated_by({{2, 0}, {0, 3}}, 2);
    try {
        build_system(I, SystemMode::ED1);
        FAIL() << "expected refusal";
    } catch (const input_error& e) {
        EXPECT_NE(std::string(e.what()).find("pure-power"), std::string::npos);
    }
}

TEST(BuildSystem, DesignatedGeneratorHasLargestSupport) {
    auto I = MonomialIdeal::generated_by({{3, 1, 0}, {0, 0, 2}, {1, 1, 1}}, 3);
    auto b = build_system(I, SystemMode::ED1);
    EXPECT_EQ(b.ordered_generators.back(), (Monomial{1, 1, 1}));
}

TEST(PropertyPolyhedra, Hadamard) {
    std::mt19937_64 rng(11);
    std::uniform_int_distribution<int> pick_q(1, 4), pick_c(-5, 5);
    for (int t = 0; t < 200; ++t) {
        std::size_t q = pick_q(rng);
        std::vector<std::vector<BigInt>> M(q, std::vector<BigInt>(q));
        for (auto& row : M)
            for (auto& c : row) c = pick_c(rng);
        BigInt det = determinant(M);
        BigInt prod = 1;
        for (std::size_t j = 0; j < q; ++j) {
            BigInt sq = 0;
            for (std::size_t i = 0; i < q; ++i) sq += M[i][j] * M[i][j];
            prod *= sq;
        }
        EXPECT_LE(det * det, prod);
    }
}

TEST(PropertyPolyhedra, DeterminantMatchesCofactorExpansion) {
    std::mt19937_64 rng(12);
    std::uniform_int_distribution<int> pick_c(-4, 4);
    for (int t = 0; t < 100; ++t) {
        std::vector<std::vector<BigInt>> M(3, std::vector<BigInt>(3));
        for (auto& row : M)
            for (auto& c : row) c = pick_c(rng);
        BigInt expect = M[0][0] * (M[1][1] * M[2][2] - M[1][2] * M[2][1]) -
                        M[0][1] * (M[1][0] * M[2][2] - M[1][2] * M[2][0]) +
                        M[0][2] * (M[1][0] * M[2][1] - M[1][1] * M[2][0]);
        EXPECT_EQ(determinant(M), expect);
    }
}

TEST(PropertyPolyhedra, RandomConesHilbertBasisAndRays) {
    std::mt19937_64 rng(13);
    for (int t = 0; t < 60; ++t) {
        auto sys = random_system(rng);
        auto rays = extreme_rays(sys);
        for (std::size_t i = 0; i < rays.size(); ++i) {
            EXPECT_TRUE(sys.satisfied_by(rays[i]));
            EXPECT_EQ(gcd_of(rays[i]), 1);
            for (std::size_t j = i + 1; j < rays.size(); ++j) EXPECT_NE(rays[i], rays[j]);
        }
        auto bound = bound_A1(sys);
        auto cap = static_cast<std::int64_t>(bound.ceiling);
        auto hb = hilbert_generators(sys, cap);
        std::map<IntVector, bool> memo;
        for (const auto& h : hb) {
            EXPECT_TRUE(sys.satisfied_by(h));
            EXPECT_LE(BigInt(star_norm(h)), bound.ceiling);
        }
        // every extreme ray is in the semigroup, so it is a sum of Hilbert generators
        for (const auto& u : rays) EXPECT_TRUE(decomposes(u, hb, memo));
        // every solution in a small box decomposes
        detail::for_each_in_box(sys.e, std::min<std::int64_t>(cap, 6), [&](const IntVector& v) {
            if (sys.satisfied_by(v)) EXPECT_TRUE(decomposes(v, hb, memo));
        });
        // nonnegative combinations of rays are solutions
        std::uniform_int_distribution<int> coef(0, 3);
        for (int k = 0; k < 5 && !rays.empty(); ++k) {
            IntVector v(sys.e, 0);
            for (const auto& u : rays) {
                int c = coef(rng);
                for (std::size_t j = 0; j < sys.e; ++j) v[j] += c * u[j];
            }
            EXPECT_TRUE(sys.satisfied_by(v));
        }
    }
}

TEST(PropertyPolyhedra, ModuleGeneratorsDecompose) {
    std::mt19937_64 rng(14);
    std::uniform_int_distribution<int> pick_b(-1, 2);
    for (int t = 0; t < 30; ++t) {
        auto sys = random_system(rng);
        for (auto& b : sys.b) b = pick_b(rng);
        if (sys.homogeneous()) continue;
        const std::int64_t cap = 5;
        auto gens = module_generators(sys, cap);
        auto hb = hilbert_generators(sys.homogenized(), static_cast<std::int64_t>(bound_A1(sys.homogenized()).ceiling));
        detail::for_each_in_box(sys.e, 4, [&](const IntVector& v) {
            if (!sys.satisfied_by(v)) return;
            bool ok = false;
            for (const auto& g : gens) {
                IntVector w(v.size());
                bool fits = true;
                for (std::size_t j = 0; j < v.size() && fits; ++j) fits = (w[j] = v[j] - g[j]) >= 0;
                std::map<IntVector, bool> memo;
                if (fits && decomposes(w, hb, memo)) {
                    ok = true;
                    break;
                }
            }
            EXPECT_TRUE(ok);
        });
    }
}

TEST(PropertyPolyhedra, EDColumnNorms) {
    std::size_t built = 0;
    for (const auto& I : random_corpus()) {
        if (!detail::designated_generator(I)) continue;
        const std::size_t r = I.r(), s = I.size();
        const BigInt d = I.max_degree();
        auto ed1 = build_system(I, SystemMode::ED1).system;
        auto ed3 = build_system(I, SystemMode::ED3).system;
        ASSERT_EQ(ed1.e, r * s + s);
        ASSERT_EQ(ed3.e, s * (s - 1) + r + 2);
        ++built;

        EXPECT_LT(column_sq(ed1, 0), BigInt(r) * d * d);
        for (std::size_t j = 1; j <= r; ++j) EXPECT_EQ(column_sq(ed1, j), BigInt(r));
        for (std::size_t k = 1 + r; k < ed1.e; ++k) EXPECT_LT(column_sq(ed1, k), 2 * d * d);
        BigInt rhs = 0;
        for (auto b : ed1.b) rhs += BigInt(b) * b;
        EXPECT_LT(rhs, d * d);

        EXPECT_LT(column_sq(ed3, 0), BigInt(s) * d * d);
        EXPECT_LT(column_sq(ed3, 1), 2 * BigInt(s) * d * d);
        for (std::size_t j = 2; j < 2 + r; ++j) EXPECT_EQ(column_sq(ed3, j), BigInt(s));
        for (std::size_t k = 2 + r; k < ed3.e; ++k) EXPECT_LT(column_sq(ed3, k), 2 * d * d);
    }
    EXPECT_GT(built, 50u);
}
