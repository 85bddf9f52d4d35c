#include <doctest.h>

#include <map>
#include <set>

#include "oracles.hpp"
#include "reference_tables.hpp"
#include "tspread/betti.hpp"
#include "tspread/error.hpp"
#include "tspread/extremal.hpp"
#include "tspread/oracle.hpp"

using namespace tspread;

namespace {

// Move-closed subsets of M_{n,d,t} by testing every subset, as index lists.
std::vector<std::vector<Monomial>> naive_down_sets(const Context& ctx, int d) {
    auto all = oracle::spread_subsets(ctx.n, ctx.t, d);
    std::vector<std::vector<Monomial>> out;
    for (std::uint32_t bits = 0; bits < (1U << all.size()); ++bits) {
        std::set<Monomial> chosen;
        for (std::size_t i = 0; i < all.size(); ++i) {
            if (bits & (1U << i)) {
                chosen.insert(all[i]);
            }
        }
        bool closed = true;
        for (const auto& u : chosen) {
            for (const auto& r : oracle::single_moves(u, ctx)) {
                closed = closed && chosen.count(r) > 0;
            }
        }
        if (closed) {
            std::vector<Monomial> members;
            for (const auto& u : all) {
                if (chosen.count(u)) {
                    members.push_back(u);
                }
            }
            out.push_back(members);
        }
    }
    return out;
}

// Strongly stable ideals with initial degree l1, counted as chains of down-sets
// D_l1 != {} with Shad(D_l) inside D_{l+1}.
std::uint64_t naive_ideal_count(const Context& ctx, int ell1) {
    int top = ell1;
    while (!oracle::spread_subsets(ctx.n, ctx.t, top + 1).empty()) {
        ++top;
    }
    std::map<int, std::vector<std::vector<Monomial>>> down;
    for (int d = ell1; d <= top; ++d) {
        down[d] = naive_down_sets(ctx, d);
    }
    std::function<std::uint64_t(int, const std::vector<Monomial>&)> rec = [&](int d, const std::vector<Monomial>& below) {
        if (d > top) {
            return std::uint64_t{1};
        }
        auto required = oracle::naive_shadow(below, ctx);
        std::uint64_t total = 0;
        for (const auto& D : down[d]) {
            if (d == ell1 && D.empty()) {
                continue;
            }
            bool contains = std::includes(D.begin(), D.end(), required.begin(), required.end(),
                                          [](const Monomial& a, const Monomial& b) {
                                              return oracle::slex_greater(a.indices(), b.indices());
                                          });
            if (contains) {
                total += rec(d + 1, D);
            }
        }
        return total;
    };
    return rec(ell1, {});
}

SearchBudget quick_budget() {
    SearchBudget b;
    b.timeout_seconds = 120;
    return b;
}

}  // namespace

TEST_SUITE("oracle") {

TEST_CASE("down-sets of a singleton") {
    auto sets = enumerate_borel_closed(Context(4, 3), 2);
    REQUIRE(sets.size() == 2);
    CHECK(sets[0].empty());
    CHECK(sets[1].members() == std::vector<Monomial>{Monomial{1, 4}});
}

TEST_CASE("down-sets for n = 6, t = 2, degree 2") {
    Context ctx(6, 2);
    auto sets = enumerate_borel_closed(ctx, 2);
    CHECK(sets.size() == 16);
    CHECK(naive_down_sets(ctx, 2).size() == 16);
    for (const auto& s : sets) {
        auto I = SpreadIdeal::from_generators(ctx, s.members());
        CHECK(is_strongly_stable(I));
    }
}

TEST_CASE("down-set enumeration matches the subset filter") {
    int compared = 0;
    for (int n = 2; n <= 12; ++n) {
        for (int t = 1; t <= 4; ++t) {
            for (int d = 1; d <= 4; ++d) {
                Context ctx(n, t);
                if (spread_count(ctx, d) > 12) {
                    continue;
                }
                auto fast = enumerate_borel_closed(ctx, d);
                auto slow = enumerate_borel_closed_naive(ctx, d);
                auto filt = naive_down_sets(ctx, d);
                std::set<std::vector<Monomial>> a, b, c;
                for (const auto& s : fast) {
                    a.insert(s.members());
                }
                for (const auto& s : slow) {
                    b.insert(s.members());
                }
                for (const auto& s : filt) {
                    c.insert(s);
                }
                REQUIRE(fast.size() == a.size());
                REQUIRE(a == c);
                REQUIRE(b == c);
                ++compared;
            }
        }
    }
    CHECK(compared > 50);
}

TEST_CASE("down-set enumeration refuses oversized degrees") {
    CHECK_THROWS_AS(enumerate_borel_closed(Context(40, 1), 2), BudgetExceeded);
}

TEST_CASE("the only ideal for n = 4, t = 3 is (x1 x4)") {
    std::vector<SpreadIdeal> seen;
    auto stats = enumerate_strongly_stable_ideals(Context(4, 3), 2, quick_budget(), [&](const SpreadIdeal& I) {
        seen.push_back(I);
        return true;
    });
    CHECK_FALSE(stats.partial);
    REQUIRE(seen.size() == 1);
    CHECK(seen[0].all_generators() == std::vector<Monomial>{Monomial{1, 4}});
}

TEST_CASE("ideal enumeration matches chained down-set counts") {
    int compared = 0;
    for (int n = 3; n <= 9; ++n) {
        for (int t = 1; t <= 3; ++t) {
            for (int ell1 = 1; ell1 <= 3; ++ell1) {
                Context ctx(n, t);
                bool small = spread_count(ctx, ell1) > 0;
                for (int d = ell1; d <= n; ++d) {
                    small = small && spread_count(ctx, d) <= 15;
                }
                if (!small) {
                    continue;
                }
                ++compared;
                std::set<std::vector<Monomial>> distinct;
                auto stats = enumerate_strongly_stable_ideals(ctx, ell1, quick_budget(), [&](const SpreadIdeal& I) {
                    distinct.insert(I.all_generators());
                    return true;
                });
                INFO("n=" << n << " t=" << t << " l1=" << ell1);
                REQUIRE_FALSE(stats.partial);
                REQUIRE(stats.ideals == distinct.size());
                REQUIRE(stats.ideals == naive_ideal_count(ctx, ell1));
            }
        }
    }
    CHECK(compared > 15);
}

TEST_CASE("every enumerated ideal is stable, minimal and round-trips") {
    for (auto [n, t] : {std::pair{6, 2}, std::pair{8, 2}, std::pair{9, 3}}) {
        Context ctx(n, t);
        std::uint64_t count = 0;
        enumerate_strongly_stable_ideals(ctx, 2, quick_budget(), [&](const SpreadIdeal& I) {
            REQUIRE(is_strongly_stable(I));
            REQUIRE(oracle::window_stable(I));
            REQUIRE(*I.initial_degree() == 2);
            REQUIRE(borel_ideal(I.all_generators(), ctx) == I);
            REQUIRE(SpreadIdeal::from_generators(ctx, I.all_generators()) == I);
            ++count;
            return true;
        });
        CHECK(count > 0);
    }
}

TEST_CASE("budgets stop the enumeration and mark it partial") {
    SearchBudget b;
    b.max_ideals = 5;
    std::uint64_t seen = 0;
    auto stats = enumerate_strongly_stable_ideals(Context(9, 2), 2, b, [&](const SpreadIdeal&) {
        ++seen;
        return true;
    });
    CHECK(stats.partial);
    CHECK(seen == 5);
    CHECK_FALSE(stats.reason.empty());

    SearchBudget tiny;
    tiny.max_n = 5;
    auto res = brute_force_max_corners(Context(9, 2), 2, tiny);
    CHECK(res.cell.partial);
}

TEST_CASE("brute-force cells") {
    auto b = quick_budget();
    CHECK(brute_force_max_corners(Context(6, 2), 2, b).cell.value == 2);
    CHECK(brute_force_max_corners(Context(8, 3), 3, b).cell.value == 1);
    CHECK(brute_force_max_corners(Context(11, 3), 2, b).cell.value == 2);
    CHECK_FALSE(brute_force_max_corners(Context(7, 3), 3, b).cell.value.has_value());
    auto cell = brute_force_max_corners(Context(9, 2), 2, b).cell;
    CHECK(cell.value == 3);
    CHECK(cell.provenance == Provenance::BruteForce);
    CHECK_FALSE(cell.partial);
}

TEST_CASE("n = 4, t = 3: the only ideal has its corner at k = 0") {
    auto b = quick_budget();
    auto res = brute_force_max_corners(Context(4, 3), 2, b);
    CHECK_FALSE(res.cell.value.has_value());
    BruteForceOptions any_k;
    any_k.positive_k_only = false;
    CHECK(brute_force_max_corners(Context(4, 3), 2, b, any_k).cell.value == 1);
    auto corners = corners_via_characterization(borel_ideal({Monomial{1, 4}}, Context(4, 3)));
    CHECK(corners.corners == std::vector<std::pair<int, int>>{{0, 2}});
}

TEST_CASE("brute force against the published tables") {
    auto b = quick_budget();
    std::vector<std::string> mismatches;
    for (int t = 2; t <= 3; ++t) {
        const int last_n = t == 2 ? 9 : 11;
        for (int n = reference::kFirstN; n <= last_n; ++n) {
            for (int ell1 = 2; ell1 <= reference::max_ell1(t); ++ell1) {
                auto res = brute_force_max_corners(Context(n, t), ell1, b);
                REQUIRE_FALSE(res.cell.partial);
                if (res.cell.value != reference::cell(n, t, ell1)) {
                    mismatches.push_back(std::to_string(t) + "/" + std::to_string(n) + "/" + std::to_string(ell1));
                }
                // The corner-at-l1 and unit-value flags never change the maximum here.
                for (int a = 0; a < 2; ++a) {
                    for (int v = 0; v < 2; ++v) {
                        REQUIRE(res.by_flags[a][v] == res.cell.value);
                    }
                }
                // Brute force bounds the construction from above.
                if (auto m = max_corners(n, t, ell1); m && res.cell.value) {
                    REQUIRE(*res.cell.value >= construct_extremal_ideal(n, t, ell1).report.total);
                }
            }
        }
    }
    // Only t = 3, n = 4, l1 = 2 differs; see the corner-convention note in the README.
    CHECK(mismatches == std::vector<std::string>{"3/4/2"});
}

TEST_CASE("table regeneration by formula") {
    auto b = quick_budget();
    auto row = [&](int t, int lo, int hi, int ell1) {
        std::vector<std::string> out;
        for (const auto& c : regenerate_table(t, {lo, hi}, {ell1, ell1}, 0, b)) {
            out.push_back(c.value_text());
        }
        return out;
    };
    using V = std::vector<std::string>;
    CHECK(row(2, 4, 9, 2) == V{"1", "1", "2", "2", "2", "3"});
    CHECK(row(3, 4, 12, 2) == V{"1", "1", "1", "1", "2", "2", "2", "2", "3"});
    CHECK(row(3, 4, 7, 3) == V{"-", "-", "-", "-"});

    auto cells = regenerate_table(2, {4, 20}, {2, 10}, 0, b);
    REQUIRE(cells.size() == 17 * 9);
    CHECK(cells.front().n == 4);
    CHECK(cells.front().ell1 == 2);
    CHECK(cells[17].ell1 == 3);
    for (const auto& c : cells) {
        CHECK(c.value == reference::cell(c.n, c.t, c.ell1));
        if (decompose(c.n, c.t).k >= 3 || c.ell1 == 2) {
            CHECK(c.provenance == Provenance::Formula);
        }
    }
}

TEST_CASE("table regeneration by brute force is deterministic") {
    auto b = quick_budget();
    auto first = regenerate_table(2, {4, 9}, {2, 4}, 9, b);
    auto second = regenerate_table(2, {4, 9}, {2, 4}, 9, b);
    REQUIRE(first.size() == second.size());
    for (std::size_t i = 0; i < first.size(); ++i) {
        CHECK(first[i].value == second[i].value);
        CHECK(first[i].provenance == Provenance::BruteForce);
    }
}

TEST_CASE("cross-validation reports only the corner-convention cell") {
    auto b = quick_budget();
    auto t2 = cross_validate({4, 9}, {2, 2}, {2, 7}, b);
    CHECK_FALSE(t2.partial);
    CHECK(t2.disagreements.empty());
    CHECK(t2.checks > 1000);

    auto t3 = cross_validate({4, 11}, {3, 3}, {2, 3}, b);
    CHECK_FALSE(t3.partial);
    REQUIRE(t3.disagreements.size() == 1);
    CHECK(t3.disagreements[0].check == "brute-force-vs-formula");
    CHECK(t3.disagreements[0].n == 4);
    CHECK(t3.disagreements[0].ell1 == 2);
}

}
