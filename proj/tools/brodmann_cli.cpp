// brodmann: command-line front end for the monomial ideal toolkit.
//
// Exit codes: 0 success, 2 parse/input error, 3 enumeration budget exceeded,
// 4 internal inconsistency (e.g. the two Ass algorithms disagree).

#include <CLI11.hpp>
#include <json.hpp>

#include <brodmann/brodmann.hpp>

#include <cstdlib>
#include <functional>
#include <iostream>
#include <map>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

namespace {

using namespace brodmann;
using nlohmann::json;

enum class Format { tsv, json };

struct RunConfig {
    std::string ideal_path;
    std::string system_path;
    std::size_t n = 0;
    std::size_t n_max = 6;
    std::size_t m_cap = 8;
    std::int64_t cap = 0;
    std::int64_t box = 0;
    std::size_t budget = default_budget;
    unsigned jobs = 1;
    std::string format;
    std::string method = "quotient";
    std::string mode = "ED1";
    std::vector<std::string> fixes;
    std::uint64_t r = 0, s = 0, d = 0;
    bool rays = false, hilbert = false, bound = false, module = false;
};

Format format_of(const RunConfig& cfg, Format fallback) {
    if (cfg.format.empty()) return fallback;
    return cfg.format == "json" ? Format::json : Format::tsv;
}

MonomialIdeal load_ideal(const std::string& path) { return parse_ideal(read_file(path)); }

json primes_json(const PrimeSet& ps) {
    json a = json::array();
    for (const auto& p : ps) a.push_back(to_string(p));
    return a;
}

json vectors_json(const std::vector<IntVector>& vs) { return json(vs); }

std::string vector_string(const IntVector& v) {
    std::string s = "(";
    for (std::size_t i = 0; i < v.size(); ++i) s += (i ? "," : "") + std::to_string(v[i]);
    return s + ")";
}

std::string opt_string(const std::optional<std::size_t>& v) { return v ? std::to_string(*v) : "none"; }

void print_profile_tsv(std::ostream& out, const AssProfile& p) {
    out << "# r=" << p.ideal.r() << " s=" << p.ideal.size() << " d=" << p.ideal.max_degree()
        << " method=" << to_string(p.method) << "\n";
    out << "# n: Ass(I^n/I^(n+1)); k = n+1: the same set is Ass(R/I^k)\n";
    out << "n\tprimes\tk\n";
    for (std::size_t n = 0; n < p.entries.size(); ++n)
        out << n << '\t' << to_string(p.entries[n]) << '\t' << n + 1 << '\n';
    out << "# observed_stable_at\t" << opt_string(p.observed_stable_at) << '\n';
    out << "# non_monotone\t" << (p.non_monotone() ? "true" : "false") << '\n';
}

json profile_json(const AssProfile& p) {
    json entries = json::array();
    for (std::size_t n = 0; n < p.entries.size(); ++n)
        entries.push_back({{"n", n}, {"k", n + 1}, {"primes", primes_json(p.entries[n])}});
    json j = {{"ideal", ideal_to_json(p.ideal)},
              {"method", to_string(p.method)},
              {"index_convention", "entries[n] = Ass(I^n/I^(n+1)) = Ass(R/I^k), k = n+1"},
              {"entries", entries},
              {"increases", p.increases},
              {"decreases", p.decreases},
              {"incomparable", p.incomparable},
              {"non_monotone", p.non_monotone()}};
    j["observed_stable_at"] = p.observed_stable_at ? json(*p.observed_stable_at) : json(nullptr);
    return j;
}

std::string describe_disagreement(const AssProfile& q, const AssProfile& r) {
    std::ostringstream ss;
    ss << "quotient and recursion methods disagree\n";
    for (std::size_t n = 0; n < q.entries.size(); ++n)
        if (q.entries[n] != r.entries[n])
            ss << "n=" << n << "\tquotient=" << to_string(q.entries[n])
               << "\trecursion=" << to_string(r.entries[n]) << '\n';
    return ss.str();
}

int cmd_ass_profile(const RunConfig& cfg) {
    MonomialIdeal I = load_ideal(cfg.ideal_path);
    AssProfile p;
    if (cfg.method == "both") {
        p = ass_profile(I, cfg.n_max, AssMethod::quotient, cfg.jobs, cfg.budget);
        AssProfile q = ass_profile(I, cfg.n_max, AssMethod::recursion, cfg.jobs, cfg.budget);
        if (p.entries != q.entries) throw inconsistency_error(describe_disagreement(p, q));
    } else {
        p = ass_profile(I, cfg.n_max, cfg.method == "recursion" ? AssMethod::recursion : AssMethod::quotient,
                        cfg.jobs, cfg.budget);
    }
    if (format_of(cfg, Format::tsv) == Format::json) std::cout << profile_json(p).dump(2) << '\n';
    else print_profile_tsv(std::cout, p);
    return 0;
}

int cmd_ass(const RunConfig& cfg) {
    MonomialIdeal I = load_ideal(cfg.ideal_path);
    PrimeSet q = ass_power(I, cfg.n, AssMethod::quotient, cfg.budget);
    PrimeSet r = ass_power(I, cfg.n, AssMethod::recursion, cfg.budget);
    if (q != r)
        throw inconsistency_error("quotient and recursion methods disagree at n=" + std::to_string(cfg.n) +
                                  "\tquotient=" + to_string(q) + "\trecursion=" + to_string(r));
    std::optional<bool> max_in;
    if (I.is_proper_nonzero() && I.r() >= 2) max_in = max_ideal_in_ass(I, cfg.n);
    if (format_of(cfg, Format::tsv) == Format::json) {
        json j = {{"n", cfg.n}, {"k", cfg.n + 1}, {"primes", primes_json(q)}, {"methods_agree", true}};
        j["max_ideal_in_ass"] = max_in ? json(*max_in) : json(nullptr);
        std::cout << j.dump(2) << '\n';
    } else {
        std::cout << "# n: Ass(I^n/I^(n+1)); k = n+1: Ass(R/I^k)\n";
        std::cout << "n\tprimes\tk\n" << cfg.n << '\t' << to_string(q) << '\t' << cfg.n + 1 << '\n';
        std::cout << "# max_ideal_in_ass\t" << (max_in ? (*max_in ? "true" : "false") : "n/a") << '\n';
    }
    return 0;
}

int cmd_rr(const RunConfig& cfg) {
    MonomialIdeal I = load_ideal(cfg.ideal_path);
    if (cfg.n < 1) throw input_error("--n must be at least 1");
    RRResult rr = ratliff_rush(I, cfg.n, cfg.m_cap);
    if (format_of(cfg, Format::json) == Format::json) {
        json gens = json::array();
        for (const auto& g : rr.closure.generators()) gens.push_back(g.vec());
        std::cout << json{{"n", cfg.n},
                          {"closure_generators", gens},
                          {"stabilized_at_m", rr.stabilized_at_m},
                          {"certified", rr.certified},
                          {"chain_monotone", rr.chain_monotone}}
                         .dump(2)
                  << '\n';
    } else {
        std::cout << "# closure of I^" << cfg.n << "\n" << format_ideal_text(rr.closure);
        std::cout << "# stabilized_at_m\t" << rr.stabilized_at_m << "\n# certified\t"
                  << (rr.certified ? "true" : "false") << '\n';
    }
    return 0;
}

int cmd_a0(const RunConfig& cfg) {
    MonomialIdeal I = load_ideal(cfg.ideal_path);
    A0Result res = a0_observed(I, cfg.n_max, cfg.m_cap);
    BigInt B2 = bound_report(I).B2;
    if (res.certified && res.a0 && BigInt(*res.a0) >= B2)
        throw inconsistency_error("observed a0=" + std::to_string(*res.a0) + " is not below B2=" + B2.str());
    if (format_of(cfg, Format::json) == Format::json) {
        json j = {{"per_degree_flags", res.per_degree},
                  {"warnings", res.warnings},
                  {"certified", res.certified},
                  {"B2", B2.str()}};
        j["a0"] = res.a0 ? json(*res.a0) : json(nullptr);
        std::cout << j.dump(2) << '\n';
    } else {
        std::cout << "degree\tnonzero\n";
        for (std::size_t k = 0; k < res.per_degree.size(); ++k)
            std::cout << k << '\t' << (res.per_degree[k] ? "true" : "false") << '\n';
        std::cout << "# a0\t" << (res.a0 ? std::to_string(*res.a0) : "-inf") << '\n';
        for (const auto& w : res.warnings) std::cout << "# warning\t" << w << '\n';
    }
    return 0;
}

int cmd_bound(const RunConfig& cfg) {
    std::optional<MonomialIdeal> I;
    BoundReport rep;
    if (!cfg.ideal_path.empty()) {
        I = load_ideal(cfg.ideal_path);
        rep = bound_report(*I);
    } else {
        rep = bound_report(cfg.r, cfg.s, cfg.d);
    }
    std::optional<ObservedComparison> cmp;
    if (I && cfg.n_max > 0 && I->is_proper_nonzero()) {
        AssProfile p = ass_profile(*I, cfg.n_max, AssMethod::quotient, cfg.jobs, cfg.budget);
        cmp = compare_with_observed(*I, p);
    }
    struct Row {
        std::string name, exact;
        BigInt ceiling;
    };
    std::vector<Row> rows = {
        {"B1", rep.B1.to_string(), rep.B1_ceil},
        {"B2", rep.B2.str(), rep.B2},
        {"B3", rep.B3.to_string(), rep.B3_ceil},
        {"B3_floor_reading", rep.B3_floor.str(), rep.B3_floor},
        {"B4", rep.B4.str(), rep.B4},
        {"B", rep.B.to_string(), rep.B_ceil},
    };
    if (format_of(cfg, Format::tsv) == Format::json) {
        json j = {{"r", rep.r}, {"s", rep.s}, {"d", rep.d},
                  {"B4_times_B3_plus_1_below_B2", rep.B4_times_B3_plus_1_below_B2},
                  {"B_is_B2", rep.B_is_B2}};
        for (const auto& row : rows)
            j[row.name] = {{"exact", row.exact}, {"ceiling", row.ceiling.str()}, {"digits", decimal_digits(row.ceiling)}};
        if (cmp) {
            j["observed_stable_at"] = cmp->observed_stable_at ? json(*cmp->observed_stable_at) : json(nullptr);
            j["within_bound"] = cmp->within_bound;
            j["note"] = cmp->note;
        }
        std::cout << j.dump(2) << '\n';
    } else {
        std::cout << "# r=" << rep.r << " s=" << rep.s << " d=" << rep.d << '\n';
        std::cout << "name\texact\tceiling\tdigits\n";
        for (const auto& row : rows)
            std::cout << row.name << '\t' << row.exact << '\t' << row.ceiling << '\t' << decimal_digits(row.ceiling) << '\n';
        std::cout << "# B4*(B3+1) < B2\t" << (rep.B4_times_B3_plus_1_below_B2 ? "true" : "false") << '\n';
        std::cout << "B = " << rep.B_ceil << '\n';
        if (cmp) std::cout << "# " << cmp->note << '\n';
    }
    return 0;
}

int cmd_cone(const RunConfig& cfg) {
    ConstraintSystem sys = parse_system(read_file(cfg.system_path));
    const bool all = !cfg.rays && !cfg.hilbert && !cfg.bound && !cfg.module;
    json j;
    std::ostringstream tsv;
    if (cfg.rays || all) {
        auto rays = extreme_rays(sys.homogenized(), cfg.budget);
        j["rays"] = vectors_json(rays);
        for (const auto& v : rays) tsv << "ray\t" << vector_string(v) << '\n';
    }
    if (cfg.bound || all) {
        auto a1 = bound_A1(sys);
        j["bound_A1"] = {{"exact", a1.value.to_string()}, {"ceiling", a1.ceiling.str()}};
        tsv << "bound_A1\t" << a1.value.to_string() << '\t' << a1.ceiling << '\n';
        if (!sys.homogeneous()) {
            auto a2 = bound_A2(sys);
            j["bound_A2"] = {{"exact", a2.value.to_string()}, {"ceiling", a2.ceiling.str()}};
            tsv << "bound_A2\t" << a2.value.to_string() << '\t' << a2.ceiling << '\n';
        }
    }
    if (cfg.hilbert || cfg.module) {
        if (cfg.cap < 1) throw input_error("--hilbert/--module need --cap N");
    }
    if (cfg.hilbert) {
        auto h = hilbert_generators(sys.homogenized(), cfg.cap, cfg.budget);
        j["hilbert"] = vectors_json(h);
        for (const auto& v : h) tsv << "hilbert\t" << vector_string(v) << '\n';
    }
    if (cfg.module) {
        auto m = module_generators(sys, cfg.cap, cfg.budget);
        j["module"] = vectors_json(m);
        for (const auto& v : m) tsv << "module\t" << vector_string(v) << '\n';
    }
    if (format_of(cfg, Format::tsv) == Format::json) std::cout << j.dump(2) << '\n';
    else std::cout << tsv.str();
    return 0;
}

SystemMode parse_mode(const std::string& m) {
    if (m == "ED1") return SystemMode::ED1;
    if (m == "ED2") return SystemMode::ED2;
    if (m == "ED3") return SystemMode::ED3;
    throw input_error("unknown mode '" + m + "'");
}

int cmd_build_system(const RunConfig& cfg) {
    MonomialIdeal I = load_ideal(cfg.ideal_path);
    BuiltSystem built = build_system(I, parse_mode(cfg.mode));
    if (format_of(cfg, Format::tsv) == Format::json) {
        json j = system_to_json(built.system);
        j["designated_generator"] = built.ordered_generators.back().vec();
        std::cout << j.dump(2) << '\n';
    } else {
        std::cout << "# " << cfg.mode << " for r=" << I.r() << " s=" << I.size()
                  << ", last generator " << to_string(built.ordered_generators.back()) << '\n';
        std::cout << format_system_text(built.system);
    }
    return 0;
}

int cmd_feasible(const RunConfig& cfg) {
    ConstraintSystem sys = parse_system(read_file(cfg.system_path));
    std::map<std::size_t, std::int64_t> fixed;
    for (const auto& f : cfg.fixes) {
        auto eq = f.find('=');
        if (eq == std::string::npos) throw input_error("--fix expects name=value, got '" + f + "'");
        std::string name = f.substr(0, eq);
        std::int64_t value = detail::parse_number<std::int64_t>(f.substr(eq + 1), 0, "fixed value");
        std::optional<std::size_t> idx;
        for (std::size_t j = 0; j < sys.e; ++j)
            if (sys.label(j) == name) idx = j;
        if (!idx) {
            auto k = detail::parse_number<std::size_t>(name, 0, "variable name or 1-based index");
            if (k < 1 || k > sys.e) throw input_error("variable index " + name + " out of range");
            idx = k - 1;
        }
        fixed[*idx] = value;
    }
    auto sol = solve_feasible(sys, fixed, cfg.box, cfg.budget);
    if (format_of(cfg, Format::tsv) == Format::json) {
        json j = {{"feasible", sol.has_value()}};
        j["solution"] = sol ? json(*sol) : json(nullptr);
        std::cout << j.dump(2) << '\n';
    } else if (sol) {
        std::cout << "feasible\n";
        for (std::size_t k = 0; k < sys.e; ++k) std::cout << sys.label(k) << '\t' << (*sol)[k] << '\n';
    } else {
        std::cout << "infeasible\n";
    }
    return 0;
}

// --- reproduction table -----------------------------------------------------

MonomialIdeal e11(exponent_t d) {
    return MonomialIdeal::generated_by({{d, 0, 0}, {d - 1, 1, 0}, {1, d - 1, 0}, {0, d, 0}, {2, d - 2, 1}}, 3);
}

ConstraintSystem staircase(std::size_t e, std::int64_t d) {
    ConstraintSystem sys;
    sys.e = e;
    for (std::size_t i = 0; i + 1 < e; ++i) {
        IntVector row(e, 0);
        row[i] = d;
        row[i + 1] = -1;
        sys.A.push_back(row);
        sys.b.push_back(0);
    }
    return sys;
}

int cmd_paper_examples(const RunConfig& cfg) {
    struct Check {
        std::string name;
        std::function<bool(std::string&)> run;
    };
    const PrimeSet both = {VariablePrime{{0, 1}}, VariablePrime{{0, 1, 2}}};
    const PrimeSet plane = {VariablePrime{{0, 1}}};
    std::vector<Check> checks;
    for (exponent_t d : {5u, 6u, 7u}) {
        checks.push_back({"E11 d=" + std::to_string(d) + " profile n=0.." + std::to_string(d), [=](std::string& detail) {
            MonomialIdeal I = e11(d);
            auto p = ass_profile(I, d, AssMethod::quotient, cfg.jobs, cfg.budget);
            auto q = ass_profile(I, d, AssMethod::recursion, cfg.jobs, cfg.budget);
            bool ok = p.entries == q.entries;
            for (std::size_t n = 0; n <= d; ++n) ok = ok && p.entries[n] == (n + 4 <= d ? both : plane);
            detail = "stable from n=" + opt_string(p.observed_stable_at);
            return ok && p.observed_stable_at == std::size_t(d - 3);
        }});
    }
    checks.push_back({"E11 d=5 saturation I:(x,y,z)^inf = I[z]", [](std::string& detail) {
        MonomialIdeal I = e11(5);
        MonomialIdeal sat = saturate(I, VariablePrime::full(3).ideal(3));
        MonomialIdeal want = MonomialIdeal::generated_by({{5, 0, 0}, {4, 1, 0}, {1, 4, 0}, {0, 5, 0}, {2, 3, 0}}, 3);
        detail = std::to_string(sat.size()) + " generators";
        return sat == want && delete_variable(I, 2) == want;
    }});
    checks.push_back({"E11 d=5 H0 witnesses at n=0", [](std::string& detail) {
        auto rep = h0_m_monomials(e11(5), 0);
        std::vector<Monomial> want = {{3, 3, 0}, {2, 3, 0}};
        detail = std::to_string(rep.witness_monomials.size()) + " monomials";
        return rep.witness_monomials == want;
    }});
    checks.push_back({"E11 d=5 ED1/ED3 variable counts 20/25", [](std::string& detail) {
        auto a = build_system(e11(5), SystemMode::ED1).system.e;
        auto b = build_system(e11(5), SystemMode::ED3).system.e;
        detail = std::to_string(a) + "/" + std::to_string(b);
        return a == 20 && b == 25;
    }});
    for (std::int64_t d : {2, 3})
        for (std::size_t e : {2u, 3u}) {
            checks.push_back({"staircase e=" + std::to_string(e) + " d=" + std::to_string(d), [=](std::string& detail) {
                ConstraintSystem sys = staircase(e, d);
                IntVector u(e);
                std::int64_t p = 1;
                for (auto& x : u) {
                    x = p;
                    p *= d;
                }
                auto rays = extreme_rays(sys, cfg.budget);
                auto cap = bound_A1(sys).ceiling;
                auto hb = hilbert_generators(sys, static_cast<std::int64_t>(cap), cfg.budget);
                detail = "ray " + vector_string(u) + ", " + std::to_string(hb.size()) + " Hilbert generators";
                return std::find(rays.begin(), rays.end(), u) != rays.end() &&
                       std::find(hb.begin(), hb.end(), u) != hb.end();
            }});
        }
    checks.push_back({"bounds (r,s,d)=(2,2,2)", [](std::string& detail) {
        auto rep = bound_report(2, 2, 2);
        detail = "B=" + rep.B_ceil.str();
        return rep.B1 == ExactRadical(1024) && rep.B2 == 16777216 && rep.B_ceil == 16777216;
    }});
    checks.push_back({"Ratliff-Rush closure of (x^4,x^3y,xy^3,y^4)", [](std::string& detail) {
        MonomialIdeal I = MonomialIdeal::generated_by({{4, 0}, {3, 1}, {1, 3}, {0, 4}}, 2);
        auto rr = ratliff_rush(I, 1, 8);
        detail = "stabilized at m=" + std::to_string(rr.stabilized_at_m);
        return rr.certified && rr.closure == sum(I, MonomialIdeal::generated_by({{2, 2}}, 2));
    }});

    bool all = true;
    std::cout << "check\tresult\tdetail\n";
    for (const auto& c : checks) {
        std::string detail;
        bool ok = false;
        try {
            ok = c.run(detail);
        } catch (const std::exception& e) {
            detail = std::string("error: ") + e.what();
        }
        all = all && ok;
        std::cout << c.name << '\t' << (ok ? "PASS" : "FAIL") << '\t' << detail << '\n';
    }
    return all ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Associated primes of powers of monomial ideals, Ratliff-Rush closures, "
                 "stabilization bounds and the underlying integer cones"};
    app.require_subcommand(1);
    RunConfig cfg;
    if (const char* env = std::getenv("BRODMANN_BUDGET")) {
        try {
            cfg.budget = std::stoull(env);
        } catch (...) {
            std::cerr << "error: BRODMANN_BUDGET must be a positive integer\n";
            return 2;
        }
    }

    auto add_common = [&](CLI::App* sub) {
        sub->add_option("--format", cfg.format, "Output format")->check(CLI::IsMember({"tsv", "json"}));
        sub->add_option("--budget", cfg.budget, "Lattice point budget (default 5e7 or $BRODMANN_BUDGET)")
            ->check(CLI::PositiveNumber);
        sub->add_option("--jobs", cfg.jobs, "Worker threads for per-degree work")->check(CLI::PositiveNumber);
    };

    auto* prof = app.add_subcommand("ass-profile", "Ass(I^n/I^(n+1)) for n = 0..n_max");
    prof->add_option("--ideal", cfg.ideal_path, "Ideal file (text or JSON)")->required()->check(CLI::ExistingFile);
    prof->add_option("--n-max", cfg.n_max, "Largest n")->check(CLI::PositiveNumber);
    prof->add_option("--method", cfg.method, "quotient | recursion | both")
        ->check(CLI::IsMember({"quotient", "recursion", "both"}));
    add_common(prof);

    auto* ass = app.add_subcommand("ass", "Ass(I^n/I^(n+1)) by both methods, checked against each other");
    ass->add_option("--ideal", cfg.ideal_path)->required()->check(CLI::ExistingFile);
    ass->add_option("--n", cfg.n, "Exponent n (0 gives Ass(R/I))");
    add_common(ass);

    auto* rr = app.add_subcommand("rr", "Ratliff-Rush closure of I^n");
    rr->add_option("--ideal", cfg.ideal_path)->required()->check(CLI::ExistingFile);
    rr->add_option("--n", cfg.n)->required();
    rr->add_option("--m-cap", cfg.m_cap, "Largest m in the colon chain")->check(CLI::Range(2, 1 << 20));
    add_common(rr);

    auto* a0 = app.add_subcommand("a0", "Observed top degree of H^0_{R+}(G)");
    a0->add_option("--ideal", cfg.ideal_path)->required()->check(CLI::ExistingFile);
    a0->add_option("--n-max", cfg.n_max)->check(CLI::PositiveNumber);
    a0->add_option("--m-cap", cfg.m_cap)->check(CLI::Range(2, 1 << 20));
    add_common(a0);

    auto* bound = app.add_subcommand("bound", "Stabilization bounds B1, B2, B3, B4 and B");
    bound->add_option("--r", cfg.r)->check(CLI::PositiveNumber);
    bound->add_option("--s", cfg.s)->check(CLI::PositiveNumber);
    bound->add_option("--d", cfg.d)->check(CLI::PositiveNumber);
    bound->add_option("--ideal", cfg.ideal_path, "Take r, s, d from an ideal")->check(CLI::ExistingFile);
    auto* bound_nmax = bound->add_option("--n-max", cfg.n_max, "With --ideal: compare against an observed profile");
    add_common(bound);

    auto* cone = app.add_subcommand("cone", "Extreme rays, certified bounds and generators of a constraint system");
    cone->add_option("--system", cfg.system_path)->required()->check(CLI::ExistingFile);
    cone->add_flag("--rays", cfg.rays);
    cone->add_flag("--hilbert", cfg.hilbert);
    cone->add_flag("--module", cfg.module);
    cone->add_flag("--bound", cfg.bound);
    cone->add_option("--cap", cfg.cap, "Enumeration box for --hilbert/--module");
    add_common(cone);

    auto* build = app.add_subcommand("build-system", "Constraint systems ED1, ED2, ED3 of an ideal");
    build->add_option("--ideal", cfg.ideal_path)->required()->check(CLI::ExistingFile);
    build->add_option("--mode", cfg.mode)->check(CLI::IsMember({"ED1", "ED2", "ED3"}));
    add_common(build);

    auto* feas = app.add_subcommand("feasible", "Bounded search for an integer solution");
    feas->add_option("--system", cfg.system_path)->required()->check(CLI::ExistingFile);
    feas->add_option("--fix", cfg.fixes, "name=value or index=value (1-based), repeatable");
    feas->add_option("--box", cfg.box, "Upper bound for unfixed variables")->required();
    add_common(feas);

    auto* examples = app.add_subcommand("paper-examples", "Reproduce the worked examples; exit 0 iff all pass");
    add_common(examples);

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::CallForAllHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return 2;
    }

    try {
        if (*prof) return cmd_ass_profile(cfg);
        if (*ass) return cmd_ass(cfg);
        if (*rr) return cmd_rr(cfg);
        if (*a0) return cmd_a0(cfg);
        if (*bound) {
            if (cfg.ideal_path.empty() && (cfg.r == 0 || cfg.s == 0 || cfg.d == 0))
                throw input_error("bound needs --r --s --d or --ideal");
            if (!*bound_nmax) cfg.n_max = 0;
            return cmd_bound(cfg);
        }
        if (*cone) return cmd_cone(cfg);
        if (*build) return cmd_build_system(cfg);
        if (*feas) return cmd_feasible(cfg);
        if (*examples) return cmd_paper_examples(cfg);
    } catch (const input_error& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 2;
    } catch (const resource_error& e) {
        std::cerr << "budget: " << e.what() << '\n';
        return 3;
    } catch (const inconsistency_error& e) {
        std::cerr << "inconsistency: " << e.what() << '\n';
        return 4;
    }
    return 0;
}
