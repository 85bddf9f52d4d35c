#pragma once

#include <cstddef>
#include <functional>
#include <map>
#include <optional>
#include <vector>

#include "tspread/monomial.hpp"

namespace tspread {

/// A t-spread monomial ideal, stored by its minimal generators G(I) grouped by degree.
///
/// Invariants: every generator is t-spread, no generator divides another, and
/// degrees without generators are absent from the map. The zero ideal has no
/// generators.
class SpreadIdeal {
public:
    SpreadIdeal() = default;
    explicit SpreadIdeal(const Context& ctx) : ctx_(ctx) {}

    /// Validates and minimalizes an arbitrary generating list. Throws NotTSpread
    /// or InvalidMonomial on bad input.
    static SpreadIdeal from_generators(const Context& ctx, std::vector<Monomial> gens);
    /// Trusts the caller that `gens` is already a minimal t-spread generating set.
    static SpreadIdeal from_minimal(const Context& ctx, std::map<int, MonomialSet> gens);

    [[nodiscard]] const Context& context() const { return ctx_; }
    [[nodiscard]] const std::map<int, MonomialSet>& generators() const { return gens_; }
    [[nodiscard]] bool is_zero() const { return gens_.empty(); }
    [[nodiscard]] std::optional<int> initial_degree() const;
    [[nodiscard]] std::optional<int> max_generator_degree() const;
    [[nodiscard]] std::size_t generator_count() const;
    /// G(I)_d, empty if no generator has degree d.
    [[nodiscard]] MonomialSet generators_of_degree(int d) const;
    /// All minimal generators, degree-ascending and slex-descending within a degree.
    [[nodiscard]] std::vector<Monomial> all_generators() const;

    friend bool operator==(const SpreadIdeal&, const SpreadIdeal&) = default;

private:
    Context ctx_;
    std::map<int, MonomialSet> gens_;
};

/// A single move u -> x_i (u / x_j) with i < j.
struct Move {
    Monomial from;
    int i = 0;
    int j = 0;
    Monomial result;
};

/// Calls `visit(i, j, result)` for every i < j, j in supp(u), such that x_i(u/x_j)
/// is t-spread. For t = 0 only squarefree results are produced.
void for_each_move(const Monomial& u, const Context& ctx,
                   const std::function<void(int i, int j, const Monomial& result)>& visit);

/// Degree-deg(u) part of B_t(u): every t-spread monomial reachable from u by moves.
/// Breadth-first search over single moves. Throws NotTSpread.
MonomialSet borel_closure_degree(const Monomial& u, const Context& ctx);

/// B_t(u_1, ..., u_r) with its minimal generators. Throws NotTSpread.
SpreadIdeal borel_ideal(const std::vector<Monomial>& borel_gens, const Context& ctx);

/// Shad_t(T): all t-spread x_i w with w in T.
MonomialSet shadow(const MonomialSet& set, const Context& ctx);

/// Shad_t^m(T); m = 0 returns T.
MonomialSet iterated_shadow(const MonomialSet& set, const Context& ctx, int m);

/// True iff some minimal generator divides u.
bool contains(const SpreadIdeal& ideal, const Monomial& u);

/// First admissible move leading out of the ideal, if any.
std::optional<Move> find_stability_violation(const SpreadIdeal& ideal);

bool is_strongly_stable(const SpreadIdeal& ideal);

/// The t-spread monomials of degree d lying in the ideal (by enumeration of M_{n,d,t}).
MonomialSet spread_part(const SpreadIdeal& ideal, int d);

/// Human-readable description of a move, e.g. `x1*x5 = x1 * (x2*x5) / x2`.
std::string describe_move(const Move& move);

}  // namespace tspread
