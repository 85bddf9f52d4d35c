#include "tspread/oracle.hpp"

#include <algorithm>
#include <bitset>
#include <chrono>
#include <unordered_map>

#include "tspread/betti.hpp"
#include "tspread/error.hpp"
#include "tspread/extremal.hpp"

namespace tspread {

namespace {

constexpr std::size_t kMaxPoset = 256;
using Mask = std::bitset<kMaxPoset>;

// M_{n,d,t} as a poset: elements slex-descending, pred[i] = single-move images of
// element i (all with smaller index), up[i] = its shadow in degree d+1.
struct Level {
    int degree = 0;
    std::vector<Monomial> elems;
    std::vector<Mask> pred;
    std::vector<Mask> up;
};

Level make_level(const Context& ctx, int d) {
    Level lv;
    lv.degree = d;
    lv.elems = enumerate(ctx, d).members();
    if (lv.elems.size() > kMaxPoset) {
        throw BudgetExceeded("|M_{" + std::to_string(ctx.n) + "," + std::to_string(d) + "," + std::to_string(ctx.t) +
                             "}| = " + std::to_string(lv.elems.size()) + " exceeds " + std::to_string(kMaxPoset));
    }
    std::unordered_map<Monomial, std::size_t, MonomialHash> pos;
    for (std::size_t i = 0; i < lv.elems.size(); ++i) {
        pos.emplace(lv.elems[i], i);
    }
    lv.pred.resize(lv.elems.size());
    for (std::size_t i = 0; i < lv.elems.size(); ++i) {
        for_each_move(lv.elems[i], ctx, [&](int, int, const Monomial& r) { lv.pred[i].set(pos.at(r)); });
    }
    return lv;
}

void link_up(const Context& ctx, Level& lower, const Level& upper) {
    std::unordered_map<Monomial, std::size_t, MonomialHash> pos;
    for (std::size_t i = 0; i < upper.elems.size(); ++i) {
        pos.emplace(upper.elems[i], i);
    }
    lower.up.assign(lower.elems.size(), Mask{});
    for (std::size_t i = 0; i < lower.elems.size(); ++i) {
        for (const auto& v : shadow(MonomialSet(lower.degree, {lower.elems[i]}), ctx)) {
            lower.up[i].set(pos.at(v));
        }
    }
}

Mask shadow_mask(const Level& lv, const Mask& set) {
    Mask out;
    for (std::size_t i = 0; i < lv.elems.size(); ++i) {
        if (set.test(i)) {
            out |= lv.up[i];
        }
    }
    return out;
}

MonomialSet to_set(const Level& lv, const Mask& mask) {
    std::vector<Monomial> members;
    for (std::size_t i = 0; i < lv.elems.size(); ++i) {
        if (mask.test(i)) {
            members.push_back(lv.elems[i]);
        }
    }
    return MonomialSet::from_sorted(lv.degree, std::move(members));
}

// Depth-first walk over the down-sets containing `forced` (itself a down-set).
// The exclude branch runs first. `leaf` returns false to abort.
bool walk_down_sets(const Level& lv, const Mask& forced, std::size_t i, Mask& cur,
                    const std::function<bool(const Mask&)>& leaf) {
    if (i == lv.elems.size()) {
        return leaf(cur);
    }
    if (forced.test(i)) {
        cur.set(i);
        bool go = walk_down_sets(lv, forced, i + 1, cur, leaf);
        cur.reset(i);
        return go;
    }
    if (!walk_down_sets(lv, forced, i + 1, cur, leaf)) {
        return false;
    }
    if ((lv.pred[i] & ~cur).none()) {
        cur.set(i);
        bool go = walk_down_sets(lv, forced, i + 1, cur, leaf);
        cur.reset(i);
        return go;
    }
    return true;
}

int max_degree(const Context& ctx) { return (ctx.n - 1) / std::max(ctx.t, 1) + 1; }

struct Score {
    int count = 0;
    bool corner_at_ell1 = false;
    bool unit_values = true;
};

Score score(const SpreadIdeal& ideal, int ell1, const BruteForceOptions& options) {
    auto corners = corners_from_table(graded_betti_unchecked(ideal));
    Score sc;
    for (std::size_t i = 0; i < corners.size(); ++i) {
        auto [k, l] = corners.corners[i];
        if (options.positive_k_only && k < 1) {
            continue;
        }
        ++sc.count;
        sc.corner_at_ell1 = sc.corner_at_ell1 || l == ell1;
        sc.unit_values = sc.unit_values && corners.values[i] == 1;
    }
    return sc;
}

void raise(std::optional<int>& best, int value) {
    if (!best || *best < value) {
        best = value;
    }
}

}  // namespace

std::vector<MonomialSet> enumerate_borel_closed(const Context& ctx, int d) {
    Level lv = make_level(ctx, d);
    std::vector<MonomialSet> out;
    Mask cur;
    walk_down_sets(lv, Mask{}, 0, cur, [&](const Mask& m) {
        out.push_back(to_set(lv, m));
        return true;
    });
    return out;
}

std::vector<MonomialSet> enumerate_borel_closed_naive(const Context& ctx, int d) {
    auto all = enumerate(ctx, d).members();
    if (all.size() > 20) {
        throw BudgetExceeded("subset filter is limited to 20 elements");
    }
    std::vector<MonomialSet> out;
    for (std::uint32_t bits = 0; bits < (1U << all.size()); ++bits) {
        std::vector<Monomial> members;
        for (std::size_t i = 0; i < all.size(); ++i) {
            if (bits & (1U << i)) {
                members.push_back(all[i]);
            }
        }
        MonomialSet set = MonomialSet::from_sorted(d, members);
        bool closed = true;
        for (const auto& u : members) {
            for_each_move(u, ctx, [&](int, int, const Monomial& r) { closed = closed && set.contains(r); });
        }
        if (closed) {
            out.push_back(std::move(set));
        }
    }
    return out;
}

EnumerationStats enumerate_strongly_stable_ideals(const Context& ctx, int ell1, const SearchBudget& budget,
                                                  const std::function<bool(const SpreadIdeal&)>& visit) {
    EnumerationStats stats;
    const int top = max_degree(ctx);
    if (ell1 < 1 || ell1 > top) {
        return stats;
    }
    if (ctx.n > budget.max_n) {
        stats.partial = true;
        stats.reason = "n = " + std::to_string(ctx.n) + " exceeds max_n = " + std::to_string(budget.max_n);
        return stats;
    }
    std::uint64_t total = 0;
    for (int d = ell1; d <= top; ++d) {
        total += spread_count(ctx, d);
    }
    if (total > budget.max_total_gens) {
        stats.partial = true;
        stats.reason = std::to_string(total) + " candidate generators exceed max_total_gens = " +
                       std::to_string(budget.max_total_gens);
        return stats;
    }

    std::vector<Level> levels;
    try {
        for (int d = ell1; d <= top; ++d) {
            levels.push_back(make_level(ctx, d));
        }
    } catch (const BudgetExceeded& e) {
        stats.partial = true;
        stats.reason = e.what();
        return stats;
    }
    for (std::size_t i = 0; i + 1 < levels.size(); ++i) {
        link_up(ctx, levels[i], levels[i + 1]);
    }
    levels.back().up.assign(levels.back().elems.size(), Mask{});

    const auto start = std::chrono::steady_clock::now();
    std::vector<Mask> chosen(levels.size());
    std::vector<Mask> from_below(levels.size());

    auto out_of_time = [&] {
        std::chrono::duration<double> elapsed = std::chrono::steady_clock::now() - start;
        return elapsed.count() > budget.timeout_seconds;
    };

    std::function<bool(std::size_t)> level = [&](std::size_t idx) -> bool {
        if (idx == levels.size()) {
            if (stats.ideals >= budget.max_ideals) {
                stats.partial = true;
                stats.reason = "max_ideals = " + std::to_string(budget.max_ideals) + " reached";
                return false;
            }
            if ((stats.ideals & 0xff) == 0 && out_of_time()) {
                stats.partial = true;
                stats.reason = "timeout after " + std::to_string(budget.timeout_seconds) + " s";
                return false;
            }
            std::map<int, MonomialSet> gens;
            for (std::size_t i = 0; i < levels.size(); ++i) {
                Mask g = chosen[i] & ~from_below[i];
                if (g.any()) {
                    gens.emplace(levels[i].degree, to_set(levels[i], g));
                }
            }
            ++stats.ideals;
            return visit(SpreadIdeal::from_minimal(ctx, std::move(gens)));
        }
        Mask cur;
        return walk_down_sets(levels[idx], from_below[idx], 0, cur, [&](const Mask& m) {
            if (idx == 0 && m.none()) {
                return true;
            }
            chosen[idx] = m;
            if (idx + 1 < levels.size()) {
                from_below[idx + 1] = shadow_mask(levels[idx], m);
            }
            return level(idx + 1);
        });
    };
    level(0);
    return stats;
}

std::string to_string(Provenance p) { return p == Provenance::BruteForce ? "brute-force" : "formula"; }

std::string TableCell::value_text() const { return value ? std::to_string(*value) : "-"; }

BruteForceResult brute_force_max_corners(const Context& ctx, int ell1, const SearchBudget& budget,
                                         const BruteForceOptions& options) {
    BruteForceResult res;
    res.cell.n = ctx.n;
    res.cell.t = ctx.t;
    res.cell.ell1 = ell1;
    res.cell.provenance = Provenance::BruteForce;
    auto stats = enumerate_strongly_stable_ideals(ctx, ell1, budget, [&](const SpreadIdeal& ideal) {
        Score sc = score(ideal, ell1, options);
        if (sc.count == 0) {
            return true;
        }
        for (int a = 0; a < 2; ++a) {
            for (int b = 0; b < 2; ++b) {
                if ((!a || sc.corner_at_ell1) && (!b || sc.unit_values)) {
                    raise(res.by_flags[a][b], sc.count);
                }
            }
        }
        return true;
    });
    res.ideals = stats.ideals;
    res.cell.partial = stats.partial;
    res.cell.value = res.by_flags[options.require_corner_at_ell1][options.require_unit_values];
    return res;
}

std::vector<TableCell> regenerate_table(int t, IntRange n_range, IntRange ell1_range, int brute_force_upto,
                                        const SearchBudget& budget, const BruteForceOptions& options) {
    std::vector<TableCell> cells;
    for (int ell1 = ell1_range.lo; ell1 <= ell1_range.hi; ++ell1) {
        for (int n = n_range.lo; n <= n_range.hi; ++n) {
            auto formula = max_corners(n, t, ell1);
            bool brute = n <= brute_force_upto || (!formula && decompose(n, t).k < 3);
            if (brute) {
                cells.push_back(brute_force_max_corners(Context(n, t), ell1, budget, options).cell);
            } else {
                cells.push_back(TableCell{n, t, ell1, formula, Provenance::Formula, false});
            }
        }
    }
    return cells;
}

namespace {

std::string corners_text(const CornerSequence& seq) {
    std::string out;
    for (std::size_t i = 0; i < seq.size(); ++i) {
        out += "(" + std::to_string(seq.corners[i].first) + "," + std::to_string(seq.corners[i].second) +
               ")=" + seq.values[i].str() + " ";
    }
    return out.empty() ? "none" : out;
}

std::string opt_text(const std::optional<int>& v) { return v ? std::to_string(*v) : "-"; }

std::string ideal_text(const SpreadIdeal& ideal) {
    std::string out;
    for (const auto& g : ideal.all_generators()) {
        out += (out.empty() ? "" : ",") + format_monomial(g);
    }
    return out;
}

}  // namespace

CrossValidationReport cross_validate(IntRange n_range, IntRange t_range, IntRange ell1_range,
                                     const SearchBudget& budget, const BruteForceOptions& options) {
    CrossValidationReport rep;
    auto disagree = [&](std::string check, int n, int t, int ell1, std::string detail) {
        rep.disagreements.push_back({std::move(check), n, t, ell1, std::move(detail)});
    };

    for (int t = t_range.lo; t <= t_range.hi; ++t) {
        for (int n = n_range.lo; n <= n_range.hi; ++n) {
            const Context ctx(n, t);

            for (int d = 1; d <= std::min(4, max_degree(ctx)); ++d) {
                auto all = enumerate(ctx, d);
                for (const auto& u : all) {
                    std::vector<Monomial> dominated;
                    for (const auto& v : all) {
                        if (std::equal(v.begin(), v.end(), u.begin(), [](int a, int b) { return a <= b; })) {
                            dominated.push_back(v);
                        }
                    }
                    ++rep.checks;
                    if (borel_closure_degree(u, ctx) != MonomialSet::from_sorted(d, dominated)) {
                        disagree("closure", n, t, 0, format_monomial(u));
                    }
                }
            }

            for (int ell1 = ell1_range.lo; ell1 <= ell1_range.hi; ++ell1) {
                std::optional<int> best;
                auto stats = enumerate_strongly_stable_ideals(ctx, ell1, budget, [&](const SpreadIdeal& ideal) {
                    rep.checks += 3;
                    auto by_table = corners_from_table(graded_betti_unchecked(ideal));
                    auto by_gens = corners_via_characterization_unchecked(ideal);
                    if (by_table != by_gens) {
                        disagree("corner-methods", n, t, ell1,
                                 ideal_text(ideal) + ": table " + corners_text(by_table) + "vs generators " +
                                     corners_text(by_gens));
                    }
                    if (!is_strongly_stable(ideal)) {
                        disagree("stability", n, t, ell1, ideal_text(ideal));
                    }
                    if (borel_ideal(ideal.all_generators(), ctx) != ideal) {
                        disagree("round-trip", n, t, ell1, ideal_text(ideal));
                    }
                    Score sc = score(ideal, ell1, options);
                    bool ok = sc.count > 0 && (!options.require_corner_at_ell1 || sc.corner_at_ell1) &&
                              (!options.require_unit_values || sc.unit_values);
                    if (ok) {
                        raise(best, sc.count);
                    }
                    return true;
                });
                if (stats.partial) {
                    rep.partial = true;
                    continue;
                }

                auto formula = max_corners(n, t, ell1);
                std::optional<int> built;
                try {
                    auto ext = construct_extremal_ideal(n, t, ell1);
                    built = ext.report.total;
                    for (auto [k, l] : ext.corners.corners) {
                        ++rep.checks;
                        if (k + t * (l - 1) + 1 != n) {
                            disagree("corner-position", n, t, ell1,
                                     "(" + std::to_string(k) + "," + std::to_string(l) + ")");
                        }
                    }
                } catch (const Inapplicable&) {
                } catch (const InvariantViolation& e) {
                    disagree("construction", n, t, ell1, e.what());
                }

                if (formula) {
                    ++rep.checks;
                    if (best != formula) {
                        disagree("brute-force-vs-formula", n, t, ell1,
                                 "brute force " + opt_text(best) + ", formula " + opt_text(formula));
                    }
                }
                if (formula && built) {
                    ++rep.checks;
                    if (*built != *formula) {
                        disagree("formula-vs-construction", n, t, ell1,
                                 "formula " + opt_text(formula) + ", construction " + opt_text(built));
                    }
                }
            }
        }
    }
    return rep;
}

}  // namespace tspread
