#include "tspread/ideal.hpp"

#include <algorithm>
#include <deque>
#include <unordered_set>

#include "prefix_index.hpp"
#include "tspread/error.hpp"

namespace tspread {

namespace {

using MonomialHashSet = std::unordered_set<Monomial, MonomialHash>;

void require_t_spread(const Monomial& u, const Context& ctx, const char* where) {
    if (!is_t_spread(u, ctx)) {
        throw NotTSpread(std::string(where) + ": " + format_monomial(u) + " is not " + std::to_string(ctx.t) +
                         "-spread");
    }
}

std::vector<Monomial> sorted_members(const MonomialHashSet& set) {
    std::vector<Monomial> out(set.begin(), set.end());
    std::sort(out.begin(), out.end(), SlexGreater{});
    return out;
}

}  // namespace

SpreadIdeal SpreadIdeal::from_generators(const Context& ctx, std::vector<Monomial> gens) {
    for (const auto& g : gens) {
        require_t_spread(g, ctx, "ideal generator");
    }
    std::sort(gens.begin(), gens.end(), [](const Monomial& a, const Monomial& b) {
        if (a.degree() != b.degree()) {
            return a.degree() < b.degree();
        }
        return SlexGreater{}(a, b);
    });
    gens.erase(std::unique(gens.begin(), gens.end()), gens.end());

    std::vector<Monomial> kept;
    for (auto& g : gens) {
        bool redundant = std::any_of(kept.begin(), kept.end(),
                                     [&](const Monomial& h) { return h.degree() < g.degree() && h.divides(g); });
        if (!redundant) {
            kept.push_back(std::move(g));
        }
    }

    std::map<int, std::vector<Monomial>> grouped;
    for (auto& g : kept) {
        grouped[g.degree()].push_back(std::move(g));
    }
    SpreadIdeal ideal(ctx);
    for (auto& [d, members] : grouped) {
        ideal.gens_.emplace(d, MonomialSet::from_sorted(d, std::move(members)));
    }
    return ideal;
}

SpreadIdeal SpreadIdeal::from_minimal(const Context& ctx, std::map<int, MonomialSet> gens) {
    SpreadIdeal ideal(ctx);
    for (auto& [d, set] : gens) {
        if (!set.empty()) {
            ideal.gens_.emplace(d, std::move(set));
        }
    }
    return ideal;
}

std::optional<int> SpreadIdeal::initial_degree() const {
    if (gens_.empty()) {
        return std::nullopt;
    }
    return gens_.begin()->first;
}

std::optional<int> SpreadIdeal::max_generator_degree() const {
    if (gens_.empty()) {
        return std::nullopt;
    }
    return gens_.rbegin()->first;
}

std::size_t SpreadIdeal::generator_count() const {
    std::size_t total = 0;
    for (const auto& [d, set] : gens_) {
        total += set.size();
    }
    return total;
}

MonomialSet SpreadIdeal::generators_of_degree(int d) const {
    auto it = gens_.find(d);
    return it == gens_.end() ? MonomialSet(d) : it->second;
}

std::vector<Monomial> SpreadIdeal::all_generators() const {
    std::vector<Monomial> out;
    out.reserve(generator_count());
    for (const auto& [d, set] : gens_) {
        out.insert(out.end(), set.begin(), set.end());
    }
    return out;
}

void for_each_move(const Monomial& u, const Context& ctx,
                   const std::function<void(int i, int j, const Monomial& result)>& visit) {
    const auto& w = u.indices();
    const int d = u.degree();
    const int t = std::max(ctx.t, 1);
    std::vector<int> buf(d);
    for (int s = 0; s < d; ++s) {
        const int j = w[s];
        // x_i lands in gap g of the remaining indices; only gaps below j qualify.
        for (int g = 0; g <= s; ++g) {
            int lower = g == 0 ? 1 : w[g - 1] + t;
            int upper = g < s ? w[g] - t : (s + 1 < d ? w[s + 1] - t : ctx.n);
            upper = std::min(upper, j - 1);
            for (int i = lower; i <= upper; ++i) {
                int pos = 0;
                for (int q = 0; q < g; ++q) {
                    buf[pos++] = w[q];
                }
                buf[pos++] = i;
                for (int q = g; q < d; ++q) {
                    if (q != s) {
                        buf[pos++] = w[q];
                    }
                }
                visit(i, j, make_monomial_unchecked(buf));
            }
        }
    }
}

MonomialSet borel_closure_degree(const Monomial& u, const Context& ctx) {
    require_t_spread(u, ctx, "borel closure");
    MonomialHashSet visited{u};
    std::deque<Monomial> queue{u};
    while (!queue.empty()) {
        Monomial w = std::move(queue.front());
        queue.pop_front();
        for_each_move(w, ctx, [&](int, int, const Monomial& v) {
            if (visited.insert(v).second) {
                queue.push_back(v);
            }
        });
    }
    return MonomialSet::from_sorted(u.degree(), sorted_members(visited));
}

SpreadIdeal borel_ideal(const std::vector<Monomial>& borel_gens, const Context& ctx) {
    std::map<int, std::vector<Monomial>> by_degree;
    for (const auto& u : borel_gens) {
        require_t_spread(u, ctx, "borel generator");
        by_degree[u.degree()].push_back(u);
    }

    // Degrees are processed ascending. The part of a closure already inside the
    // lower-degree ideal is closed under moves, so the search can stop at it and
    // still reach every new minimal generator.
    detail::PrefixIndex lower;
    std::map<int, MonomialSet> gens;
    for (const auto& [d, seeds] : by_degree) {
        MonomialHashSet visited;
        std::deque<Monomial> queue;
        for (const auto& u : seeds) {
            if (!lower.member(u) && visited.insert(u).second) {
                queue.push_back(u);
            }
        }
        while (!queue.empty()) {
            Monomial w = std::move(queue.front());
            queue.pop_front();
            for_each_move(w, ctx, [&](int, int, const Monomial& v) {
                if (!visited.count(v) && !lower.member(v)) {
                    visited.insert(v);
                    queue.push_back(v);
                }
            });
        }
        if (visited.empty()) {
            continue;
        }
        auto members = sorted_members(visited);
        for (const auto& g : members) {
            lower.insert(g);
        }
        gens.emplace(d, MonomialSet::from_sorted(d, std::move(members)));
    }
    return SpreadIdeal::from_minimal(ctx, std::move(gens));
}

MonomialSet shadow(const MonomialSet& set, const Context& ctx) {
    const int t = std::max(ctx.t, 1);
    MonomialHashSet out;
    std::vector<int> buf;
    for (const auto& w : set) {
        const int d = w.degree();
        buf.assign(d + 1, 0);
        for (int g = 0; g <= d; ++g) {
            int lower = g == 0 ? 1 : w[g - 1] + t;
            int upper = g == d ? ctx.n : w[g] - t;
            for (int i = lower; i <= upper; ++i) {
                std::copy(w.begin(), w.begin() + g, buf.begin());
                buf[g] = i;
                std::copy(w.begin() + g, w.end(), buf.begin() + g + 1);
                out.insert(make_monomial_unchecked(buf));
            }
        }
    }
    return MonomialSet::from_sorted(set.degree() + 1, sorted_members(out));
}

MonomialSet iterated_shadow(const MonomialSet& set, const Context& ctx, int m) {
    if (m < 0) {
        throw Error("iterated shadow: exponent must be >= 0");
    }
    MonomialSet current = set;
    for (int step = 0; step < m; ++step) {
        current = shadow(current, ctx);
    }
    return current;
}

bool contains(const SpreadIdeal& ideal, const Monomial& u) {
    for (const auto& [d, set] : ideal.generators()) {
        if (d > u.degree()) {
            break;
        }
        for (const auto& g : set) {
            if (g.divides(u)) {
                return true;
            }
        }
    }
    return false;
}

std::optional<Move> find_stability_violation(const SpreadIdeal& ideal) {
    // Moves on minimal generators suffice: a move on a t-spread multiple g*h either
    // touches h (the result is still divisible by g) or restricts to a t-spread
    // move on g.
    detail::PrefixIndex index;
    for (const auto& g : ideal.all_generators()) {
        index.insert(g);
    }
    std::optional<Move> violation;
    for (const auto& [d, set] : ideal.generators()) {
        for (const auto& g : set) {
            for_each_move(g, ideal.context(), [&](int i, int j, const Monomial& r) {
                if (violation || index.member(r) || contains(ideal, r)) {
                    return;
                }
                violation = Move{g, i, j, r};
            });
            if (violation) {
                return violation;
            }
        }
    }
    return std::nullopt;
}

bool is_strongly_stable(const SpreadIdeal& ideal) { return !find_stability_violation(ideal).has_value(); }

MonomialSet spread_part(const SpreadIdeal& ideal, int d) {
    std::vector<Monomial> out;
    for (const auto& u : enumerate(ideal.context(), d)) {
        if (contains(ideal, u)) {
            out.push_back(u);
        }
    }
    return MonomialSet::from_sorted(d, std::move(out));
}

std::string describe_move(const Move& move) {
    return format_monomial(move.result) + " = x" + std::to_string(move.i) + " * (" + format_monomial(move.from) +
           ") / x" + std::to_string(move.j);
}

}  // namespace tspread
