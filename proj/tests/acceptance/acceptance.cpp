// Acceptance run: one PASS/FAIL line per criterion, exit status 1 if any fails.

#include <array>
#include <chrono>
#include <cstdio>
#include <functional>
#include <iostream>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "../oracles.hpp"
#include "../reference_tables.hpp"
#include "tspread/betti.hpp"
#include "tspread/cli.hpp"
#include "tspread/error.hpp"
#include "tspread/extremal.hpp"
#include "tspread/oracle.hpp"

using namespace tspread;

namespace {

// Wall-clock limits in seconds.
constexpr double kLimitGoldenBetti = 1.0;
constexpr double kLimitGoldenConstruction = 1.0;
constexpr double kLimitTableFormula = 5.0;
constexpr double kLimitBruteForce = 600.0;
constexpr double kLimitSelfCheck = 120.0;
constexpr int kSelfCheckTriples = 500;
constexpr int kSelfCheckMaxN = 200;

struct Outcome {
    bool pass = true;
    std::string detail;

    void fail(const std::string& why) {
        if (pass) {
            detail.clear();
        }
        pass = false;
        detail += (detail.empty() ? "" : "; ") + why;
    }
};

using Clock = std::chrono::steady_clock;

double seconds_since(Clock::time_point start) {
    return std::chrono::duration<double>(Clock::now() - start).count();
}

std::vector<Monomial> mons(std::initializer_list<std::initializer_list<int>> lists) {
    std::vector<Monomial> out;
    for (auto l : lists) {
        out.emplace_back(std::vector<int>(l));
    }
    return out;
}

std::string corner_text(const std::vector<std::pair<int, int>>& cs) {
    std::string s;
    for (auto [k, l] : cs) {
        s += "(" + std::to_string(k) + "," + std::to_string(l) + ")";
    }
    return s;
}

void limit(Outcome& o, double elapsed, double cap) {
    if (elapsed >= cap) {
        std::ostringstream msg;
        msg << "took " << elapsed << " s, limit " << cap << " s";
        o.fail(msg.str());
    }
}

Outcome golden_betti() {
    Outcome o;
    auto start = Clock::now();
    std::ostringstream out, err;
    const std::string file = std::string(TSPREAD_GOLDEN_DIR) + "/example_14_3.json";
    int code = cli::run({"betti", file}, out, err);
    double elapsed = seconds_since(start);
    if (code != 0) {
        o.fail("exit " + std::to_string(code) + ": " + err.str());
        return o;
    }
    const std::string want =
        "    0  1   2   3   4   5   6   7  8  9 10\n"
        "-----------------------------------------\n"
        "2: 11 55 165 330 462 462 330 165 55 11  1\n"
        "3:  7 28  56  70  56  28   8   1  -  -  -\n"
        "4:  3  9  10   5   1   -   -   -  -  -  -\n"
        "\n"
        "corners: (10,2) (7,3) (4,4)\n"
        "values: 1 1 1\n";
    if (out.str().substr(0, want.size()) != want) {
        o.fail("output differs:\n" + out.str());
    }
    limit(o, elapsed, kLimitGoldenBetti);
    if (o.pass) {
        o.detail = "21-generator listing of B_3(x1x14, x2x5x14, x2x6x9x14)";
    }
    return o;
}

Outcome golden_construction(int n, int t, int ell1, int j_max, int s, int nu_max, std::size_t total,
                            const std::vector<std::pair<std::size_t, Monomial>>& expected) {
    Outcome o;
    auto start = Clock::now();
    ExtremalIdeal ex;
    try {
        ex = construct_extremal_ideal(n, t, ell1);
    } catch (const Error& e) {
        o.fail(e.what());
        return o;
    }
    double elapsed = seconds_since(start);
    const auto& r = ex.report;
    if (r.j_max != j_max || r.s != s || r.nu_max != nu_max) {
        o.fail("j_max/s/nu_max = " + std::to_string(r.j_max) + "/" + std::to_string(r.s) + "/" +
               std::to_string(r.nu_max));
    }
    if (r.omegas.size() != total) {
        o.fail(std::to_string(r.omegas.size()) + " omegas");
    }
    for (const auto& [j, w] : expected) {
        if (j >= r.omegas.size() || r.omegas[j] != w) {
            o.fail("omega_" + std::to_string(j) + " differs");
        }
    }
    limit(o, elapsed, kLimitGoldenConstruction);
    if (o.pass) {
        o.detail = std::to_string(total) + " omegas, last " + format_monomial(r.omegas.back());
    }
    return o;
}

Outcome golden_46() {
    auto w = mons({
        {1, 46},
        {2, 5, 46},
        {2, 6, 9, 46},
        {2, 6, 10, 13, 46},
        {2, 6, 10, 14, 17, 46},
        {2, 6, 10, 14, 18, 21, 46},
        {2, 6, 10, 14, 18, 22, 25, 46},
        {2, 6, 10, 14, 18, 22, 26, 29, 46},
        {2, 6, 10, 14, 18, 22, 26, 30, 33, 46},
        {2, 6, 10, 14, 18, 22, 26, 30, 34, 37, 46},
        {2, 6, 10, 14, 18, 22, 26, 30, 34, 38, 41, 46},
        {2, 6, 10, 14, 18, 22, 26, 31, 34, 37, 40, 43, 46},
        {2, 6, 10, 14, 19, 22, 25, 28, 31, 34, 37, 40, 43, 46},
        {2, 7, 10, 13, 16, 19, 22, 25, 28, 31, 34, 37, 40, 43, 46},
    });
    std::vector<std::pair<std::size_t, Monomial>> expected;
    for (std::size_t j = 0; j < w.size(); ++j) {
        expected.emplace_back(j, w[j]);
    }
    return golden_construction(46, 3, 2, 10, 1, 2, 14, expected);
}

Outcome golden_32() {
    return golden_construction(32, 5, 2, 4, 3, -1, 5, {{4, Monomial{2, 8, 14, 20, 25, 32}}});
}

Outcome golden_138() {
    return golden_construction(138, 11, 5, 7, 2, 0, 9,
                               {{0, Monomial{1, 12, 23, 34, 138}},
                                {7, Monomial{1, 12, 23, 35, 47, 59, 71, 83, 95, 107, 118, 138}},
                                {8, Monomial{1, 12, 23, 35, 47, 59, 72, 83, 94, 105, 116, 127, 138}}});
}

std::string cell_name(const TableCell& c) {
    return "(t=" + std::to_string(c.t) + ", n=" + std::to_string(c.n) + ", l1=" + std::to_string(c.ell1) + ")";
}

void compare_cells(Outcome& o, const std::vector<TableCell>& cells, int& compared) {
    for (const auto& c : cells) {
        ++compared;
        auto want = reference::cell(c.n, c.t, c.ell1);
        if (c.partial) {
            o.fail(cell_name(c) + " partial");
        } else if (c.value != want) {
            o.fail(cell_name(c) + " got " + c.value_text() + ", table " + (want ? std::to_string(*want) : "-"));
        }
    }
}

Outcome table_by_formula() {
    Outcome o;
    auto start = Clock::now();
    int compared = 0;
    SearchBudget budget;
    compare_cells(o, regenerate_table(2, {4, 20}, {2, 10}, 0, budget), compared);
    compare_cells(o, regenerate_table(3, {4, 20}, {2, 7}, 0, budget), compared);
    limit(o, seconds_since(start), kLimitTableFormula);
    if (o.pass) {
        o.detail = std::to_string(compared) + " cells";
    }
    return o;
}

Outcome table_by_brute_force() {
    Outcome o;
    auto start = Clock::now();
    int compared = 0;
    SearchBudget budget;
    budget.timeout_seconds = kLimitBruteForce;
    compare_cells(o, regenerate_table(2, {4, 9}, {2, 10}, 9, budget), compared);
    compare_cells(o, regenerate_table(3, {4, 11}, {2, 7}, 11, budget), compared);
    limit(o, seconds_since(start), kLimitBruteForce);
    if (o.pass) {
        o.detail = std::to_string(compared) + " cells";
    } else {
        o.detail += " (" + std::to_string(compared) + " cells compared)";
    }
    return o;
}

Outcome property_suite() {
    Outcome o;
    auto need = [&](const char* name, long cases, long minimum) {
        if (cases < minimum) {
            o.fail(std::string(name) + ": only " + std::to_string(cases) + " cases");
        }
    };

    // slex: strict total order on each M_{n,d,t}
    long slex_cases = 0;
    for (int n = 1; n <= 10; ++n) {
        for (int t = 1; t <= 3; ++t) {
            for (int d = 1; d <= 3; ++d) {
                auto all = enumerate(Context(n, t), d).members();
                if (all.size() > 40) {
                    continue;
                }
                for (const auto& a : all) {
                    for (const auto& b : all) {
                        auto ab = slex_cmp(a, b);
                        bool ok = (ab == std::strong_ordering::equal) == (a == b) &&
                                  (ab == std::strong_ordering::greater) ==
                                      (slex_cmp(b, a) == std::strong_ordering::less) &&
                                  (ab == std::strong_ordering::greater) == oracle::slex_greater(a.indices(), b.indices());
                        for (const auto& c : all) {
                            if (ab == std::strong_ordering::greater && slex_cmp(b, c) == std::strong_ordering::greater) {
                                ok = ok && slex_cmp(a, c) == std::strong_ordering::greater;
                            }
                        }
                        ++slex_cases;
                        if (!ok) {
                            o.fail("slex axioms on " + format_monomial(a) + ", " + format_monomial(b));
                            return o;
                        }
                    }
                }
            }
        }
    }
    need("slex", slex_cases, 1000);

    // |M_{n,d,t}| = binom(n - (d-1)(t-1), d), exhaustive over the stated range
    for (int n = 1; n <= 14; ++n) {
        for (int t = 1; t <= 5; ++t) {
            for (int d = 1; d <= 6; ++d) {
                Context ctx(n, t);
                auto got = enumerate(ctx, d);
                if (got.members() != oracle::spread_subsets(n, t, d) ||
                    BigInt(got.size()) != oracle::pascal(n - (d - 1) * (t - 1), d)) {
                    o.fail("count of M_{" + std::to_string(n) + "," + std::to_string(d) + "," + std::to_string(t) + "}");
                }
            }
        }
    }

    // Borel closure = componentwise domination
    long closure_cases = 0;
    for (int n = 1; n <= 12; ++n) {
        for (int t = 1; t <= 3; ++t) {
            Context ctx(n, t);
            for (int d = 1; d <= 4; ++d) {
                for (const auto& u : enumerate(ctx, d)) {
                    ++closure_cases;
                    if (borel_closure_degree(u, ctx).members() != oracle::dominated_by(u, ctx)) {
                        o.fail("closure of " + format_monomial(u));
                    }
                }
            }
        }
    }
    need("closure", closure_cases, 1000);

    // Both corner computations agree on every enumerated ideal
    long corner_cases = 0;
    SearchBudget budget;
    for (auto [t, n_hi] : {std::pair{2, 9}, std::pair{3, 11}}) {
        for (int n = 2; n <= n_hi; ++n) {
            Context ctx(n, t);
            for (int ell1 = 1; ell1 <= (n - 1) / t + 1; ++ell1) {
                auto stats = enumerate_strongly_stable_ideals(ctx, ell1, budget, [&](const SpreadIdeal& I) {
                    ++corner_cases;
                    if (corners_from_table(graded_betti(I)) != corners_via_characterization(I)) {
                        o.fail("corner methods differ for n=" + std::to_string(n) + " t=" + std::to_string(t));
                        return false;
                    }
                    return true;
                });
                if (stats.partial) {
                    o.fail("ideal enumeration partial: " + stats.reason);
                }
            }
        }
    }
    need("corner methods", corner_cases, 1000);

    // Claim check and corner positions for every in-hypothesis triple
    long claim_cases = 0;
    long position_cases = 0;
    for (int t = 2; t <= 6; ++t) {
        for (int n = 2; n <= 60; ++n) {
            for (int ell1 = 2; ell1 <= n; ++ell1) {
                if (!max_corners(n, t, ell1)) {
                    continue;
                }
                auto r = build_omegas(n, t, ell1);
                ++claim_cases;
                if (!omega_claim_check(r.omegas, r.ctx, ell1)) {
                    o.fail("claim check (" + std::to_string(n) + "," + std::to_string(t) + "," + std::to_string(ell1) + ")");
                }
                if (n <= 30) {
                    auto ex = construct_extremal_ideal(n, t, ell1);
                    for (auto [k, l] : ex.corners.corners) {
                        ++position_cases;
                        if (k + t * (l - 1) + 1 != n) {
                            o.fail("corner position " + corner_text(ex.corners.corners));
                        }
                    }
                }
            }
        }
    }
    need("claim check", claim_cases, 1000);
    need("corner positions", position_cases, 1000);

    if (o.pass) {
        std::ostringstream msg;
        msg << "slex " << slex_cases << ", closure " << closure_cases << ", corner methods " << corner_cases
            << ", claim " << claim_cases << ", positions " << position_cases;
        o.detail = msg.str();
    }
    return o;
}

Outcome self_verification() {
    Outcome o;
    std::mt19937 rng(20241);
    std::uniform_int_distribution<int> pick_n(4, kSelfCheckMaxN);
    std::uniform_int_distribution<int> pick_t(2, 12);
    std::vector<std::array<int, 3>> triples;
    while (static_cast<int>(triples.size()) < kSelfCheckTriples) {
        int n = pick_n(rng);
        int t = pick_t(rng);
        auto dk = decompose(n, t);
        int top = dk.k + 1;
        std::uniform_int_distribution<int> pick_l(2, std::max(2, top));
        int ell1 = pick_l(rng);
        if (max_corners(n, t, ell1)) {
            triples.push_back({n, t, ell1});
        }
    }
    auto start = Clock::now();
    int violations = 0;
    for (auto [n, t, ell1] : triples) {
        try {
            (void)construct_extremal_ideal(n, t, ell1);
        } catch (const InvariantViolation& e) {
            ++violations;
            o.fail(e.what());
        } catch (const Error& e) {
            o.fail(std::string("unexpected error: ") + e.what());
        }
    }
    double elapsed = seconds_since(start);
    limit(o, elapsed, kLimitSelfCheck);
    if (o.pass) {
        std::ostringstream msg;
        msg << triples.size() << " triples, 0 invariant violations, " << elapsed << " s";
        o.detail = msg.str();
    }
    return o;
}

}  // namespace

int main() {
    struct Criterion {
        int id;
        const char* name;
        std::function<Outcome()> run;
    };
    std::vector<Criterion> criteria{
        {1, "golden Betti diagram (n=14, t=3)", golden_betti},
        {2, "golden construction (n=46, t=3, l1=2)", golden_46},
        {3, "golden construction without critic (n=32, t=5, l1=2)", golden_32},
        {4, "golden construction in degree 5 (n=138, t=11, l1=5)", golden_138},
        {5, "tables regenerated by formula", table_by_formula},
        {6, "tables regenerated by brute force", table_by_brute_force},
        {7, "property suite", property_suite},
        {8, "construction self-verification sweep", self_verification},
    };
    int failed = 0;
    for (const auto& c : criteria) {
        auto start = Clock::now();
        Outcome o;
        try {
            o = c.run();
        } catch (const std::exception& e) {
            o.fail(std::string("exception: ") + e.what());
        }
        double elapsed = seconds_since(start);
        std::printf("[%s] %d. %s (%.2f s): %s\n", o.pass ? "PASS" : "FAIL", c.id, c.name, elapsed, o.detail.c_str());
        std::fflush(stdout);
        failed += o.pass ? 0 : 1;
    }
    std::printf("%d/%zu criteria passed\n", static_cast<int>(criteria.size()) - failed, criteria.size());
    return failed == 0 ? 0 : 1;
}
